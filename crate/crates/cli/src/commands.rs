//! One function per subcommand, all returning a `Report`. Every error maps
//! to process exit 1; a report containing a failed check maps to exit 2.

use std::fs;
use std::path::{Path, PathBuf};

use kappa_core::complexity::{
    enumerate_spanning_trees, kappa, kappa_cofactor, kappa_enumerate, kappa_sigma_enumerate,
    kappa_sigma_jet, kruskal_min_sigma, reduced_incidence_det, DEFAULT_ENUMERATION_BUDGET,
};
use kappa_core::detfun::{
    detfun_spec_from_json, phi_eval, phi_mixed_partial, phi_partial, theorem2_rhs,
    verify_corollary, verify_theorem1, verify_theorem2, Anchor, DetFunSpec, Preset,
    PresetIdentity,
};
use kappa_core::graph::{weighted_graph_from_json, weighted_graph_to_json, Graph, Orientation, WeightedGraph};
use kappa_core::hamming::{
    build_graph, hamming_spec_from_json, kappa_closed_form, kappa_sigma_closed_form,
    kappa_sigma_equal_m, mst_closed_form, spectrum_closed_form, HammingSpec,
    DEFAULT_VERTEX_BUDGET,
};
use kappa_core::poly::Var;
use kappa_core::ring::{int, parse_rational, rational_string, Rational};
use kappa_core::unipoly::UniPoly;
use num_traits::Signed;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::cli::{
    Command, DetfunAction, DetfunArgs, GenArgs, GenKind, HammingArgs, KappaArgs, KappaMethod,
    KappaSigmaArgs, SigmaMethod, Suite, VerifyArgs,
};
use crate::gen::{self, GraphLimits};
use crate::report::{Check, Report};

#[derive(thiserror::Error, Debug)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] kappa_core::Error),
    #[error("{}: {message}", path.display())]
    File { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(command: Command) -> Result<Report> {
    match command {
        Command::Kappa(args) => cmd_kappa(args),
        Command::KappaSigma(args) => cmd_kappa_sigma(args),
        Command::Detfun(args) => cmd_detfun(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Hamming(args) => cmd_hamming(args),
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::File {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn in_file(path: &Path, err: kappa_core::Error) -> CliError {
    CliError::File { path: path.to_path_buf(), message: err.to_string() }
}

fn load_graph(path: &Path) -> Result<WeightedGraph> {
    weighted_graph_from_json(&read_file(path)?).map_err(|e| in_file(path, e))
}

fn echo_graph(report: &mut Report, path: &Path, g: &WeightedGraph) {
    report.input("graph", path.display().to_string());
    report.input("vertex_count", g.vertex_count().to_string());
    report.input("edge_count", g.edge_count().to_string());
}

fn parse_index_pair(text: &str) -> Result<(usize, usize)> {
    let err = || CliError::Usage(format!("--cofactor-index expects 1-based \"i,j\", got {text:?}"));
    let (i, j) = text.split_once(',').ok_or_else(err)?;
    Ok((
        i.trim().parse().map_err(|_| err())?,
        j.trim().parse().map_err(|_| err())?,
    ))
}

fn parse_sizes(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid size {:?} in {text:?}", part.trim())))
        })
        .collect()
}

fn parse_weights(text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .map(|part| parse_rational(part).map_err(CliError::Core))
        .collect()
}

fn cmd_kappa(args: KappaArgs) -> Result<Report> {
    let g = load_graph(&args.graph)?;
    let mut report = Report::new("kappa");
    echo_graph(&mut report, &args.graph, &g);
    if !g.graph().is_connected() {
        report.warn("graph is disconnected");
    }
    match args.method {
        KappaMethod::Cofactor => {
            let (i, j) = match &args.cofactor_index {
                Some(text) => parse_index_pair(text)?,
                None => (1, 1),
            };
            report.input("method", "cofactor");
            report.input("cofactor_index", format!("{i},{j}"));
            report.result_rational("kappa", &kappa_cofactor(&g, i, j)?);
        }
        KappaMethod::Enumerate => {
            if args.cofactor_index.is_some() {
                return Err(CliError::Usage(
                    "--cofactor-index applies to the cofactor method only".into(),
                ));
            }
            let budget = args.budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET);
            report.input("method", "enumerate");
            report.input("budget", budget.to_string());
            let trees = enumerate_spanning_trees(g.graph(), budget)?;
            report.result("tree_count", trees.len().to_string());
            report.result_rational("kappa", &kappa_enumerate(&g, budget)?);
        }
    }
    Ok(report)
}

fn cmd_kappa_sigma(args: KappaSigmaArgs) -> Result<Report> {
    let g = load_graph(&args.graph)?;
    let mut report = Report::new("kappa-sigma");
    echo_graph(&mut report, &args.graph, &g);
    if !g.graph().is_connected() {
        report.warn("graph is disconnected");
    }
    match args.method {
        SigmaMethod::Jet => {
            report.input("method", "jet");
            let (underlying, sigma) = kappa_sigma_jet(&g)?;
            report.result_rational("kappa_sigma", &sigma);
            report.result_rational("underlying_kappa", &underlying);
        }
        SigmaMethod::Enumerate => {
            let budget = args.budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET);
            report.input("method", "enumerate");
            report.input("budget", budget.to_string());
            let trees = enumerate_spanning_trees(g.graph(), budget)?;
            report.result("tree_count", trees.len().to_string());
            report.result_rational("kappa_sigma", &kappa_sigma_enumerate(&g, budget)?);
        }
    }
    Ok(report)
}

/// `--spec FILE` or `--preset NAME` resolved to the spec, its anchor (when
/// declared), and the preset identity (when named).
fn resolve_spec(
    report: &mut Report,
    args: &DetfunArgs,
) -> Result<(DetFunSpec, Option<Anchor>, Option<PresetIdentity>)> {
    match (&args.spec, &args.preset) {
        (Some(path), None) => {
            let (spec, point) = detfun_spec_from_json(&read_file(path)?)
                .map_err(|e| in_file(path, e))?;
            let anchor = point
                .map(|(alpha, beta)| Anchor::new(&spec, alpha, beta))
                .transpose()?;
            report.input("spec", path.display().to_string());
            Ok((spec, anchor, None))
        }
        (None, Some(name)) => {
            let id = Preset::parse(name)?.identity();
            report.input("preset", id.name);
            Ok((id.spec.clone(), Some(id.anchor.clone()), Some(id)))
        }
        _ => Err(CliError::Usage("exactly one of --spec or --preset is required".into())),
    }
}

fn resolve_var(text: Option<&str>, preset: Option<&PresetIdentity>) -> Result<Var> {
    match text {
        None => Ok(preset.map(|id| id.variable).unwrap_or(Var::Lambda)),
        Some(name) => {
            let lowered = name.to_ascii_lowercase();
            match lowered.as_str() {
                "lambda" | "l" => Ok(Var::Lambda),
                "mu" | "m" => Ok(Var::Mu),
                other => {
                    if let Some(id) = preset {
                        if other == id.variable_name {
                            return Ok(id.variable);
                        }
                    }
                    Err(CliError::Usage(format!("unknown variable {name:?} (use lambda or mu)")))
                }
            }
        }
    }
}

fn echo_anchor(report: &mut Report, anchor: &Anchor) {
    report.input(
        "anchor",
        json!([rational_string(anchor.alpha()), rational_string(anchor.beta())]),
    );
}

fn cmd_detfun(args: DetfunArgs) -> Result<Report> {
    let g = load_graph(&args.graph)?;
    let mut report = Report::new("detfun");
    echo_graph(&mut report, &args.graph, &g);
    let (spec, anchor, preset) = resolve_spec(&mut report, &args)?;
    match &args.action {
        DetfunAction::Eval { lambda, mu } => {
            let lambda = parse_rational(lambda)?;
            let mu = parse_rational(mu)?;
            report.input("action", "eval");
            report.input("lambda", rational_string(&lambda));
            report.input("mu", rational_string(&mu));
            report.result_rational("value", &phi_eval(&spec, &g, &lambda, &mu));
        }
        DetfunAction::Partial { var } => {
            let anchor = anchor.ok_or(kappa_core::Error::AnchorRequired)?;
            let var = resolve_var(var.as_deref(), preset.as_ref())?;
            report.input("action", "partial");
            report.input("variable", var.to_string());
            echo_anchor(&mut report, &anchor);
            let value = phi_partial(&spec, &g, var, &anchor)?;
            report.result_rational("value", &value);
            if let Some(id) = &preset {
                if id.variable == var {
                    if id.requires_unit_weights && !g.is_unit_weight() {
                        report.warn(format!(
                            "{} identity check skipped: unit weights required",
                            id.name
                        ));
                    } else {
                        let v = verify_corollary(id.preset, &g)?;
                        report.check(Check::rational(
                            format!("{} identity (∂/∂{})", id.name, id.variable_name),
                            &v.lhs,
                            &v.rhs,
                        ));
                        for w in v.warnings {
                            report.warn(w);
                        }
                    }
                }
            }
        }
        DetfunAction::Mixed { var } => {
            let anchor = anchor.ok_or(kappa_core::Error::AnchorRequired)?;
            let var = resolve_var(var.as_deref(), preset.as_ref())?;
            report.input("action", "mixed");
            report.input("variable", var.to_string());
            echo_anchor(&mut report, &anchor);
            let value = phi_mixed_partial(&spec, &g, var, &anchor)?;
            report.result_rational("value", &value);
            if preset.is_some() {
                let rhs = theorem2_rhs(&spec, &g, var, &anchor)?;
                report.check(Check::rational("mixed-partial identity", &value, &rhs));
            }
        }
    }
    Ok(report)
}

struct VerifyCtx {
    seed: u64,
    count: usize,
    budget: usize,
    graph: Option<WeightedGraph>,
    spec: Option<(DetFunSpec, Anchor)>,
}

impl VerifyCtx {
    fn rng(&self, tag: u64) -> ChaCha8Rng {
        gen::rng(self.seed.wrapping_add(tag))
    }

    fn graph_or(&self, rng: &mut ChaCha8Rng, limits: GraphLimits) -> WeightedGraph {
        match &self.graph {
            Some(g) => g.clone(),
            None => gen::random_weighted_graph(rng, limits),
        }
    }

    fn spec_or(&self, rng: &mut ChaCha8Rng) -> (DetFunSpec, Anchor) {
        match &self.spec {
            Some(pair) => pair.clone(),
            None => gen::random_anchored_spec(rng),
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<Report> {
    let mut report = Report::new("verify");
    let suite_name = match args.suite {
        Suite::Lemma1 => "lemma1",
        Suite::Lemma2 => "lemma2",
        Suite::Theorem1 => "theorem1",
        Suite::Theorem2 => "theorem2",
        Suite::Corollaries => "corollaries",
        Suite::All => "all",
    };
    report.input("suite", suite_name);
    report.input("seed", args.seed.to_string());
    report.input("count", args.count.to_string());
    let graph = match &args.graph {
        Some(path) => {
            report.input("graph", path.display().to_string());
            Some(load_graph(path)?)
        }
        None => None,
    };
    let spec = match &args.spec {
        Some(path) => {
            let (spec, point) =
                detfun_spec_from_json(&read_file(path)?).map_err(|e| in_file(path, e))?;
            let (alpha, beta) = point.ok_or(kappa_core::Error::AnchorRequired)?;
            let anchor = Anchor::new(&spec, alpha, beta)?;
            report.input("spec", path.display().to_string());
            Some((spec, anchor))
        }
        None => None,
    };
    let ctx = VerifyCtx {
        seed: args.seed,
        count: args.count,
        budget: args.budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET),
        graph,
        spec,
    };
    match args.suite {
        Suite::Lemma1 => suite_lemma1(&mut report, &ctx)?,
        Suite::Lemma2 => suite_lemma2(&mut report, &ctx)?,
        Suite::Theorem1 => suite_theorem(&mut report, &ctx, 1)?,
        Suite::Theorem2 => suite_theorem(&mut report, &ctx, 2)?,
        Suite::Corollaries => suite_corollaries(&mut report, &ctx)?,
        Suite::All => {
            suite_lemma1(&mut report, &ctx)?;
            suite_lemma2(&mut report, &ctx)?;
            suite_theorem(&mut report, &ctx, 1)?;
            suite_theorem(&mut report, &ctx, 2)?;
            suite_corollaries(&mut report, &ctx)?;
        }
    }
    Ok(report)
}

/// Per graph: every (ν−1)-subset of edges, the factorization through unit
/// weights, the tree/non-tree support, and the row sign law. One aggregate
/// check per graph (identities held / identities checked).
fn suite_lemma1(report: &mut Report, ctx: &VerifyCtx) -> Result<()> {
    let mut rng = ctx.rng(1);
    let rounds = if ctx.graph.is_some() { 1 } else { ctx.count };
    for k in 0..rounds {
        let g = ctx.graph_or(&mut rng, GraphLimits::new(6, 10));
        let unit = WeightedGraph::unit(g.graph().clone());
        let o = Orientation::default_for(g.graph());
        let nu = g.vertex_count();
        let trees: std::collections::HashSet<Vec<usize>> =
            enumerate_spanning_trees(g.graph(), ctx.budget)?.into_iter().collect();
        let (mut held, mut total) = (0u64, 0u64);
        let mut tally = |ok: bool| {
            total += 1;
            if ok {
                held += 1;
            }
        };
        for subset in subsets(g.edge_count(), nu - 1) {
            let base = reduced_incidence_det(&g, &o, &subset, 1)?;
            let unit_base = reduced_incidence_det(&unit, &o, &subset, 1)?;
            let product: Rational = subset.iter().map(|&e| g.weight(e).clone()).product();
            tally(base == product.clone() * &unit_base);
            if trees.contains(&subset) {
                tally(unit_base.abs() == int(1) && base.abs() == product.abs());
            } else {
                tally(unit_base == int(0) && base == int(0));
            }
            for i in 2..=nu {
                let det_i = reduced_incidence_det(&g, &o, &subset, i)?;
                let sign = if (i - 1) % 2 == 0 { int(1) } else { int(-1) };
                tally(det_i == sign * &base);
            }
        }
        report.check(Check::text(
            format!("lemma1 graph {k} (nu={nu}, eps={})", g.edge_count()),
            held.to_string(),
            total.to_string(),
        ));
    }
    Ok(())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for e in start..n {
            cur.push(e);
            rec(e + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Per graph: all ν² cofactors agree (reported as min = max) and the (1,1)
/// cofactor equals the enumeration oracle.
fn suite_lemma2(report: &mut Report, ctx: &VerifyCtx) -> Result<()> {
    let mut rng = ctx.rng(2);
    let rounds = if ctx.graph.is_some() { 1 } else { ctx.count };
    for k in 0..rounds {
        let g = ctx.graph_or(&mut rng, GraphLimits::new(7, 18));
        let nu = g.vertex_count();
        let mut cofactors = Vec::with_capacity(nu * nu);
        for i in 1..=nu {
            for j in 1..=nu {
                cofactors.push(kappa_cofactor(&g, i, j)?);
            }
        }
        let min = cofactors.iter().min().unwrap().clone();
        let max = cofactors.iter().max().unwrap().clone();
        report.check(Check::rational(
            format!("lemma2 graph {k}: all cofactors coincide"),
            &min,
            &max,
        ));
        let oracle = kappa_enumerate(&g, ctx.budget)?;
        report.check(Check::rational(
            format!("lemma2 graph {k}: cofactor equals enumeration"),
            &cofactors[0],
            &oracle,
        ));
    }
    Ok(())
}

fn suite_theorem(report: &mut Report, ctx: &VerifyCtx, which: u8) -> Result<()> {
    let mut rng = ctx.rng(2 + which as u64);
    let both_fixed = ctx.graph.is_some() && ctx.spec.is_some();
    let rounds = if both_fixed { 2 } else { ctx.count };
    for k in 0..rounds {
        let g = ctx.graph_or(&mut rng, GraphLimits::new(7, 18));
        let (spec, anchor) = ctx.spec_or(&mut rng);
        let var = if both_fixed {
            if k == 0 {
                Var::Lambda
            } else {
                Var::Mu
            }
        } else {
            gen::random_var(&mut rng)
        };
        let v = if which == 1 {
            verify_theorem1(&spec, &g, var, &anchor)?
        } else {
            verify_theorem2(&spec, &g, var, &anchor)?
        };
        report.check(Check::rational(
            format!("theorem{which} case {k} (∂/∂{var})"),
            &v.lhs,
            &v.rhs,
        ));
    }
    Ok(())
}

/// The five published identities on the given graph (default: K_4, unit).
fn suite_corollaries(report: &mut Report, ctx: &VerifyCtx) -> Result<()> {
    let g = match &ctx.graph {
        Some(g) => g.clone(),
        None => WeightedGraph::unit(Graph::complete(4)),
    };
    for preset in Preset::all() {
        let id = preset.identity();
        if id.requires_unit_weights && !g.is_unit_weight() {
            report.warn(format!("{} identity skipped: unit weights required", id.name));
            continue;
        }
        let v = verify_corollary(preset, &g)?;
        report.check(Check::rational(id.name, &v.lhs, &v.rhs));
        for w in v.warnings {
            report.warn(w);
        }
    }
    Ok(())
}

fn write_graph(path: &Path, g: &WeightedGraph) -> Result<()> {
    let mut text = weighted_graph_to_json(g);
    text.push('\n');
    fs::write(path, text).map_err(|e| CliError::File {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn cmd_gen(args: GenArgs) -> Result<Report> {
    let mut report = Report::new("gen");
    let (g, out) = match &args.kind {
        GenKind::Complete { n, out, budget } => {
            let budget = budget.unwrap_or(DEFAULT_VERTEX_BUDGET);
            if *n == 0 {
                return Err(CliError::Usage("complete graph needs n ≥ 1".into()));
            }
            if *n > budget {
                return Err(kappa_core::Error::VertexBudget { vertices: *n, budget }.into());
            }
            report.input("kind", "complete");
            report.input("n", n.to_string());
            (WeightedGraph::unit(Graph::complete(*n)), out)
        }
        GenKind::Hypercube { n, out, budget } => {
            let spec = HammingSpec::unit(vec![2; *n])?;
            report.input("kind", "hypercube");
            report.input("n", n.to_string());
            (build_graph(&spec, budget.unwrap_or(DEFAULT_VERTEX_BUDGET))?, out)
        }
        GenKind::Hamming { sizes, weights, out, budget } => {
            let sizes = parse_sizes(sizes)?;
            let spec = match weights {
                Some(text) => HammingSpec::new(sizes, parse_weights(text)?)?,
                None => HammingSpec::unit(sizes)?,
            };
            report.input("kind", "hamming");
            report.input("sizes", json!(spec.sizes()));
            report.input(
                "weights",
                json!(spec.weights().iter().map(rational_string).collect::<Vec<_>>()),
            );
            (build_graph(&spec, budget.unwrap_or(DEFAULT_VERTEX_BUDGET))?, out)
        }
    };
    write_graph(out, &g)?;
    report.input("out", out.display().to_string());
    report.result("vertex_count", g.vertex_count().to_string());
    report.result("edge_count", g.edge_count().to_string());
    report.result_rational("total_weight", &g.total_weight());
    Ok(report)
}

fn parse_hamming_what(text: &str) -> Result<&'static str> {
    match text {
        "kappa" => Ok("kappa"),
        "kappa-sigma" => Ok("kappa-sigma"),
        "spectrum" => Ok("spectrum"),
        "mst" => Ok("mst"),
        other => Err(CliError::Usage(format!(
            "unknown computation {other:?} (expected kappa, kappa-sigma, spectrum, or mst)"
        ))),
    }
}

fn poly_string(p: &UniPoly) -> String {
    let coeffs: Vec<String> = p.coeffs().iter().map(rational_string).collect();
    format!("[{}]", coeffs.join(", "))
}

fn cmd_hamming(args: HammingArgs) -> Result<Report> {
    // With --spec, the single positional (WHAT) lands in the sizes slot.
    let (sizes_text, what_text) = if args.spec.is_some() {
        match (args.sizes, args.what) {
            (Some(what), None) => (None, what),
            (None, None) => {
                return Err(CliError::Usage(
                    "missing computation (kappa, kappa-sigma, spectrum, or mst)".into(),
                ))
            }
            _ => return Err(CliError::Usage("--spec conflicts with inline sizes".into())),
        }
    } else {
        match (args.sizes, args.what) {
            (Some(sizes), Some(what)) => (Some(sizes), what),
            _ => {
                return Err(CliError::Usage(
                    "expected SIZES and a computation, e.g. `hamming 2,2,2 kappa`, \
                     or --spec FILE with a computation"
                        .into(),
                ))
            }
        }
    };
    let what = parse_hamming_what(&what_text)?;
    let spec = match &args.spec {
        Some(path) => {
            let spec = hamming_spec_from_json(&read_file(path)?).map_err(|e| in_file(path, e))?;
            if args.weights.is_some() {
                return Err(CliError::Usage("--w conflicts with --spec".into()));
            }
            spec
        }
        None => {
            let sizes = parse_sizes(&sizes_text.expect("present without --spec"))?;
            match &args.weights {
                Some(text) => HammingSpec::new(sizes, parse_weights(text)?)?,
                None => HammingSpec::unit(sizes)?,
            }
        }
    };
    let mut report = Report::new("hamming");
    if let Some(path) = &args.spec {
        report.input("spec", path.display().to_string());
    }
    report.input("sizes", json!(spec.sizes()));
    report.input(
        "weights",
        json!(spec.weights().iter().map(rational_string).collect::<Vec<_>>()),
    );
    report.input("what", what);
    report.input("check", args.check);
    let budget = args.budget.unwrap_or(DEFAULT_VERTEX_BUDGET);
    let vertex_total = spec.vertex_total();
    let cross_check = if !args.check {
        false
    } else if vertex_total.is_some_and(|nu| nu <= 16) {
        true
    } else {
        report.warn("cross-check skipped: vertex total exceeds 16");
        false
    };
    match what {
        "kappa" => {
            let closed = kappa_closed_form(&spec);
            report.result_rational("kappa", &closed);
            if cross_check {
                let g = build_graph(&spec, budget)?;
                report.check(Check::rational(
                    "closed form vs matrix-tree cofactor",
                    &closed,
                    &kappa(&g)?,
                ));
            }
        }
        "kappa-sigma" => {
            let closed = kappa_sigma_closed_form(&spec);
            report.result_rational("kappa_sigma", &closed);
            if cross_check {
                let g = build_graph(&spec, budget)?;
                let (_, sigma) = kappa_sigma_jet(&g)?;
                report.check(Check::rational("closed form vs jet", &closed, &sigma));
            }
            if args.check {
                if let Some(special) = kappa_sigma_equal_m(&spec) {
                    report.check(Check::rational(
                        "general form vs equal-size specialization",
                        &closed,
                        &special,
                    ));
                }
            }
        }
        "spectrum" => {
            let spectrum = spectrum_closed_form(&spec);
            let entries: Vec<serde_json::Value> = spectrum
                .iter()
                .map(|(eigen, mult)| {
                    json!({
                        "eigenvalue": rational_string(eigen),
                        "multiplicity": mult.to_string(),
                    })
                })
                .collect();
            report.result("spectrum", serde_json::Value::Array(entries));
            let total: u64 = spectrum.iter().map(|&(_, m)| m).sum();
            report.result("multiplicity_total", total.to_string());
            if cross_check {
                let g = build_graph(&spec, budget)?;
                let charpoly = UniPoly::new(g.laplacian().charpoly());
                let mut product = UniPoly::constant(Rational::from_integer(1.into()));
                for (eigen, mult) in &spectrum {
                    let factor = UniPoly::x() - UniPoly::constant(eigen.clone());
                    for _ in 0..*mult {
                        product = product * factor.clone();
                    }
                }
                report.check(Check::text(
                    "characteristic polynomial factorization",
                    poly_string(&charpoly),
                    poly_string(&product),
                ));
            }
        }
        "mst" => {
            let closed = mst_closed_form(&spec)?;
            report.result_rational("mst", &closed);
            if cross_check {
                let g = build_graph(&spec, budget)?;
                report.check(Check::rational(
                    "closed form vs kruskal",
                    &closed,
                    &kruskal_min_sigma(&g)?,
                ));
            }
        }
        _ => unreachable!("parse_hamming_what admits four values"),
    }
    Ok(report)
}
