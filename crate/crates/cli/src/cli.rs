//! Command-line surface. Parsing only; behavior lives in `commands`.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "kappa",
    version,
    about = "Exact spanning-tree complexities, determinant functions, and their identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Weighted complexity κ: sum over spanning trees of the edge-weight product
    Kappa(KappaArgs),
    /// Sigma-weighted complexity κ_σ: sum over spanning trees of the edge-weight sum
    KappaSigma(KappaSigmaArgs),
    /// Determinant function Φ = det(f·I + g·D + h·A) and its derivatives
    Detfun(DetfunArgs),
    /// Verify the library's identities on given or seeded random inputs
    Verify(VerifyArgs),
    /// Generate graph files (complete, hypercube, Hamming)
    Gen(GenArgs),
    /// Closed-form Hamming-graph values, optionally cross-checked
    Hamming(HammingArgs),
}

#[derive(Args, Debug)]
pub struct KappaArgs {
    /// Graph JSON file
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value_t = KappaMethod::Cofactor)]
    pub method: KappaMethod,
    /// 1-based "i,j" for the cofactor method (default 1,1)
    #[arg(long, value_name = "I,J")]
    pub cofactor_index: Option<String>,
    /// Maximum edge count admitted by the enumeration method
    #[arg(long)]
    pub budget: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KappaMethod {
    Cofactor,
    Enumerate,
}

#[derive(Args, Debug)]
pub struct KappaSigmaArgs {
    /// Graph JSON file
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value_t = SigmaMethod::Jet)]
    pub method: SigmaMethod,
    /// Maximum edge count admitted by the enumeration method
    #[arg(long)]
    pub budget: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaMethod {
    Jet,
    Enumerate,
}

#[derive(Args, Debug)]
pub struct DetfunArgs {
    /// Graph JSON file
    #[arg(long)]
    pub graph: PathBuf,
    /// Spec JSON file with f, g, h and optionally an anchor
    #[arg(long, conflicts_with = "preset")]
    pub spec: Option<PathBuf>,
    /// Named spec: northshield, mizuno-sato, gencharpoly, bartholdi,
    /// laplacian-charpoly
    #[arg(long)]
    pub preset: Option<String>,
    #[command(subcommand)]
    pub action: DetfunAction,
}

#[derive(Subcommand, Debug)]
pub enum DetfunAction {
    /// Φ at a point
    Eval {
        /// λ value (rational)
        lambda: String,
        /// μ value (rational)
        mu: String,
    },
    /// ∂Φ/∂var at the anchor; presets also get their identity check
    Partial {
        /// "lambda" or "mu" (defaults to the preset's identity variable)
        var: Option<String>,
    },
    /// Mixed partial ∂²Φ/∂x∂var at the anchor, x the weight-deformation
    /// variable; presets also get the second-identity check
    Mixed {
        /// "lambda" or "mu" (defaults to the preset's identity variable)
        var: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Use this graph instead of seeded random graphs
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Use this spec (anchor required) instead of seeded random specs
    #[arg(long)]
    pub spec: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Cases (theorem suites) or graphs (lemma suites)
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    /// Maximum edge count admitted by the enumeration oracle
    #[arg(long)]
    pub budget: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lemma1,
    Lemma2,
    Theorem1,
    Theorem2,
    Corollaries,
    All,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(subcommand)]
    pub kind: GenKind,
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    /// Complete graph K_n, unit weights
    Complete {
        n: usize,
        /// Output graph JSON file
        #[arg(long)]
        out: PathBuf,
        /// Maximum vertex count
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Hypercube Q_n, unit weights
    Hypercube {
        n: usize,
        /// Output graph JSON file
        #[arg(long)]
        out: PathBuf,
        /// Maximum vertex count
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Hamming graph with the given coordinate sizes and weights
    Hamming {
        /// Comma-separated sizes, e.g. "2,3"
        sizes: String,
        /// Comma-separated per-coordinate rational weights (default all 1)
        #[arg(long = "w", value_name = "WEIGHTS")]
        weights: Option<String>,
        /// Output graph JSON file
        #[arg(long)]
        out: PathBuf,
        /// Maximum vertex count
        #[arg(long)]
        budget: Option<usize>,
    },
}

#[derive(Args, Debug)]
pub struct HammingArgs {
    /// Comma-separated sizes, e.g. "2,2,2" (or use --spec)
    pub sizes: Option<String>,
    /// kappa, kappa-sigma, spectrum, or mst
    pub what: Option<String>,
    /// Comma-separated per-coordinate rational weights (default all 1)
    #[arg(long = "w", value_name = "WEIGHTS", conflicts_with = "spec")]
    pub weights: Option<String>,
    /// Hamming spec JSON file instead of inline sizes
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Cross-check the closed form against the general engine (∏ sizes ≤ 16)
    #[arg(long)]
    pub check: bool,
    /// Maximum vertex count for the cross-check build
    #[arg(long)]
    pub budget: Option<usize>,
}
