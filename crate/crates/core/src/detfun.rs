//! The determinant function Φ_{G_ω}(λ,μ) = det[f·I + g·D(G_ω) + h·A(G_ω)]
//! and its exact derivatives at anchor points.
//!
//! An anchor is a point (α,β) with f(α,β) = 0 and g(α,β) + h(α,β) = 0; at
//! such points the first partial of Φ factors through the weighted
//! complexity, and the mixed partial with respect to an exponential weight
//! deformation factors through κ and κ_σ. Derivatives are obtained by
//! assembling the matrix over a jet ring and reading coefficients of the
//! division-free determinant; an interpolation-based symbolic oracle is kept
//! for cross-checking.

use num_traits::{One, Zero};

use crate::complexity::{kappa, kappa_sigma_jet};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::jet::{Jet1, Jet2};
use crate::matrix::Matrix;
use crate::poly::{BivarPoly, Var};
use crate::ring::{int, parse_rational, rational_string, ring_pow, Rational, Ring};
use crate::unipoly::UniPoly;
use serde::{Deserialize, Serialize};

/// The coefficient triple (f, g, h) of Φ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetFunSpec {
    pub f: BivarPoly,
    pub g: BivarPoly,
    pub h: BivarPoly,
}

impl DetFunSpec {
    pub fn new(f: BivarPoly, g: BivarPoly, h: BivarPoly) -> Self {
        DetFunSpec { f, g, h }
    }

    /// Builds a spec that is guaranteed to anchor at (α,β):
    /// f = p·(λ−α) + p̂·(μ−β) and h = −g + (λ−α)·q + (μ−β)·r, so both anchor
    /// conditions hold by construction for any choice of p, p̂, g, q, r.
    pub fn anchored(
        alpha: &Rational,
        beta: &Rational,
        p: BivarPoly,
        p_hat: BivarPoly,
        g: BivarPoly,
        q: BivarPoly,
        r: BivarPoly,
    ) -> (DetFunSpec, Anchor) {
        let lam = BivarPoly::variable(Var::Lambda) - BivarPoly::constant(alpha.clone());
        let mu = BivarPoly::variable(Var::Mu) - BivarPoly::constant(beta.clone());
        let f = p * lam.clone() + p_hat * mu.clone();
        let h = -g.clone() + lam * q + mu * r;
        let spec = DetFunSpec::new(f, g, h);
        let anchor = Anchor::new(&spec, alpha.clone(), beta.clone())
            .expect("anchored construction satisfies both conditions");
        (spec, anchor)
    }

    /// Largest degree of `v` over f, g, h.
    fn degree(&self, v: Var) -> u32 {
        self.f.degree(v).max(self.g.degree(v)).max(self.h.degree(v))
    }
}

/// A point (α,β) validated against a spec: f(α,β) = 0 and g(α,β)+h(α,β) = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anchor {
    alpha: Rational,
    beta: Rational,
}

impl Anchor {
    pub fn new(spec: &DetFunSpec, alpha: Rational, beta: Rational) -> Result<Self> {
        let anchor = Anchor { alpha, beta };
        anchor.ensure(spec)?;
        Ok(anchor)
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// Re-checks both conditions against `spec`, for use by every consumer —
    /// an anchor constructed against one spec does not transfer to another.
    pub fn ensure(&self, spec: &DetFunSpec) -> Result<()> {
        let fv = spec.f.eval(&self.alpha, &self.beta);
        if !fv.is_zero() {
            return Err(Error::AnchorConditionF {
                alpha: rational_string(&self.alpha),
                beta: rational_string(&self.beta),
                value: rational_string(&fv),
            });
        }
        let ghv = spec.g.eval(&self.alpha, &self.beta) + spec.h.eval(&self.alpha, &self.beta);
        if !ghv.is_zero() {
            return Err(Error::AnchorConditionGH {
                alpha: rational_string(&self.alpha),
                beta: rational_string(&self.beta),
                value: rational_string(&ghv),
            });
        }
        Ok(())
    }
}

/// Assembles f·I + g·D + h·A with scalar values already lifted into `R` and
/// edge weights mapped through `wf`.
fn phi_matrix<R: Ring>(
    fv: &R,
    gv: &R,
    hv: &R,
    g: &WeightedGraph,
    mut wf: impl FnMut(&Rational) -> R,
) -> Matrix<R> {
    let n = g.vertex_count();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m.set(i, i, fv.clone());
    }
    for (k, &(u, v)) in g.graph().edges().iter().enumerate() {
        let w = wf(g.weight(k));
        m.set(u - 1, v - 1, hv.clone() * w.clone());
        m.set(v - 1, u - 1, hv.clone() * w.clone());
        for i in [u - 1, v - 1] {
            let d = m.get(i, i).clone() + gv.clone() * w.clone();
            m.set(i, i, d);
        }
    }
    m
}

/// The pair of jet arguments putting the infinitesimal on `var`.
fn jet1_point(var: Var, alpha: &Rational, beta: &Rational) -> (Jet1<Rational>, Jet1<Rational>) {
    match var {
        Var::Lambda => (Jet1::variable(alpha.clone()), Jet1::constant(beta.clone())),
        Var::Mu => (Jet1::constant(alpha.clone()), Jet1::variable(beta.clone())),
    }
}

/// Φ(λ0, μ0) exactly, by Bareiss elimination over the rationals.
pub fn phi_eval(
    spec: &DetFunSpec,
    g: &WeightedGraph,
    lambda0: &Rational,
    mu0: &Rational,
) -> Rational {
    let fv = spec.f.eval(lambda0, mu0);
    let gv = spec.g.eval(lambda0, mu0);
    let hv = spec.h.eval(lambda0, mu0);
    phi_matrix(&fv, &gv, &hv, g, Clone::clone).det_bareiss()
}

/// ∂Φ/∂var at the anchor: the matrix is assembled over Jet1 with the
/// infinitesimal on `var`, and the ε coefficient of det is the derivative.
pub fn phi_partial(
    spec: &DetFunSpec,
    g: &WeightedGraph,
    var: Var,
    anchor: &Anchor,
) -> Result<Rational> {
    anchor.ensure(spec)?;
    let (l, m) = jet1_point(var, &anchor.alpha, &anchor.beta);
    let fv = spec.f.eval_in(&l, &m);
    let gv = spec.g.eval_in(&l, &m);
    let hv = spec.h.eval_in(&l, &m);
    let phi = phi_matrix(&fv, &gv, &hv, g, |w| Jet1::constant(w.clone()));
    Ok(phi.det().a1)
}

/// Closed form for the first partial at an anchor:
/// g(α,β)^{ν−1} · [f_v(α,β)·ν + (g_v(α,β)+h_v(α,β))·2ω(G)] · κ(G_ω).
pub fn theorem1_rhs(
    spec: &DetFunSpec,
    g: &WeightedGraph,
    var: Var,
    anchor: &Anchor,
) -> Result<Rational> {
    anchor.ensure(spec)?;
    let (l, m) = jet1_point(var, &anchor.alpha, &anchor.beta);
    let fj = spec.f.eval_in(&l, &m);
    let gj = spec.g.eval_in(&l, &m);
    let hj = spec.h.eval_in(&l, &m);
    let nu = g.vertex_count();
    if nu == 0 {
        return Err(Error::EmptyGraph);
    }
    let nu_q = int(nu as i64);
    let omega = g.total_weight();
    let bracket = fj.a1 * nu_q + (gj.a1 + hj.a1) * int(2) * omega;
    Ok(ring_pow(&gj.a0, (nu - 1) as u64) * bracket * kappa(g)?)
}

/// An exact lhs-vs-rhs comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

impl Verification {
    fn of(lhs: Rational, rhs: Rational) -> Self {
        let equal = lhs == rhs;
        Verification { lhs, rhs, equal }
    }
}

/// First-partial identity: jet derivative against the closed form.
pub fn verify_theorem1(
    spec: &DetFunSpec,
    g: &WeightedGraph,
    var: Var,
    anchor: &Anchor,
) -> Result<Verification> {
    let lhs = phi_partial(spec, g, var, anchor)?;
    let rhs = theorem1_rhs(spec, g, var, anchor)?;
    Ok(Verification::of(lhs, rhs))
}

/// ∂²Φ_{G_{ω_x}}/∂x∂var at (α,β,x=1): the matrix is assembled over Jet2 with
/// the infinitesimal ε₁ on `var` and each edge weight replaced by
/// 1 + ω(e)ε₂ — the x-jet of x^{ω(e)} at x = 1 — and the ε₁ε₂ coefficient of
/// det is the mixed partial.
pub fn phi_mixed_partial(
    spec: &DetFunSpec,
    g: &WeightedGraph,
    var: Var,
    anchor: &Anchor,
) -> Result<Rational> {
    anchor.ensure(spec)?;
    let (l1, m1) = jet1_point(var, &anchor.alpha, &anchor.beta);
    let (l, m) = (Jet2::from_jet1(l1), Jet2::from_jet1(m1));
    let fv = spec.f.eval_in(&l, &m);
    let gv = spec.g.eval_in(&l, &m);
    let hv = spec.h.eval_in(&l, &m);
    let phi = phi_matrix(&fv, &gv, &hv, g, |w| {
        Jet2::new(Rational::one(), Rational::zero(), w.clone(), Rational::zero())
    });
    Ok(phi.det().a11)
}

/// Closed form for the mixed partial at an anchor:
/// g^{ν−1}·(g_v+h_v)·2ω(G)·κ(G) + g^{ν−1}·[f_v·ν + (g_v+h_v)·2ε_G]·κ_σ(G_ω),
/// with κ(G) the complexity of the underlying unit-weight graph.
pub fn theorem2_rhs(
    spec: &DetFunSpec,
    g: &WeightedGraph,
    var: Var,
    anchor: &Anchor,
) -> Result<Rational> {
    anchor.ensure(spec)?;
    let (l, m) = jet1_point(var, &anchor.alpha, &anchor.beta);
    let fj = spec.f.eval_in(&l, &m);
    let gj = spec.g.eval_in(&l, &m);
    let hj = spec.h.eval_in(&l, &m);
    let nu = g.vertex_count();
    if nu == 0 {
        return Err(Error::EmptyGraph);
    }
    let (kappa_unit, kappa_sigma) = kappa_sigma_jet(g)?;
    let g_pow = ring_pow(&gj.a0, (nu - 1) as u64);
    let deriv_sum = gj.a1 + hj.a1;
    let first = g_pow.clone() * deriv_sum.clone() * int(2) * g.total_weight() * kappa_unit;
    let bracket = fj.a1 * int(nu as i64) + deriv_sum * int(2) * int(g.edge_count() as i64);
    let second = g_pow * bracket * kappa_sigma;
    Ok(first + second)
}

/// Mixed-partial identity: jet derivative against the closed form.
pub fn verify_theorem2(
    spec: &DetFunSpec,
    g: &WeightedGraph,
    var: Var,
    anchor: &Anchor,
) -> Result<Verification> {
    let lhs = phi_mixed_partial(spec, g, var, anchor)?;
    let rhs = theorem2_rhs(spec, g, var, anchor)?;
    Ok(Verification::of(lhs, rhs))
}

/// Φ as an exact bivariate polynomial, by grid evaluation and Lagrange
/// interpolation — entirely independent of the jet machinery, so it serves
/// as the derivative oracle.
pub fn phi_interpolate(spec: &DetFunSpec, g: &WeightedGraph) -> BivarPoly {
    let nu = g.vertex_count() as u32;
    let dl = nu * spec.degree(Var::Lambda);
    let dm = nu * spec.degree(Var::Mu);
    // One univariate interpolation in μ per λ node, then interpolate each μ
    // coefficient across the λ nodes.
    let mut per_lambda: Vec<UniPoly> = Vec::with_capacity(dl as usize + 1);
    for li in 0..=dl {
        let lam = int(li as i64);
        let points: Vec<(Rational, Rational)> = (0..=dm)
            .map(|mj| {
                let mu = int(mj as i64);
                (mu.clone(), phi_eval(spec, g, &lam, &mu))
            })
            .collect();
        per_lambda.push(UniPoly::interpolate(&points));
    }
    let mut out = BivarPoly::zero();
    for k in 0..=dm as usize {
        let points: Vec<(Rational, Rational)> = per_lambda
            .iter()
            .enumerate()
            .map(|(li, p)| (int(li as i64), p.coeff(k)))
            .collect();
        let in_lambda = UniPoly::interpolate(&points);
        for (j, c) in in_lambda.coeffs().iter().enumerate() {
            out = out + BivarPoly::monomial(c.clone(), j as u32, k as u32);
        }
    }
    out
}

/// The five named instances of Φ with published derivative identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Northshield,
    MizunoSato,
    GenCharPoly,
    Bartholdi,
    LaplacianCharPoly,
}

pub const PRESET_NAMES: [&str; 5] =
    ["northshield", "mizuno-sato", "gencharpoly", "bartholdi", "laplacian-charpoly"];

/// A preset bundled with its anchor, derivative variable, and identity.
#[derive(Debug, Clone)]
pub struct PresetIdentity {
    pub preset: Preset,
    pub name: &'static str,
    pub spec: DetFunSpec,
    pub anchor: Anchor,
    pub variable: Var,
    /// Presentation name of the derivative variable ("u", "lambda", "mu", "t").
    pub variable_name: &'static str,
    pub requires_unit_weights: bool,
}

impl Preset {
    pub fn parse(name: &str) -> Result<Preset> {
        match name {
            "northshield" => Ok(Preset::Northshield),
            "mizuno-sato" => Ok(Preset::MizunoSato),
            "gencharpoly" => Ok(Preset::GenCharPoly),
            "bartholdi" => Ok(Preset::Bartholdi),
            "laplacian-charpoly" => Ok(Preset::LaplacianCharPoly),
            _ => Err(Error::UnknownPreset { name: name.to_string() }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Preset::Northshield => "northshield",
            Preset::MizunoSato => "mizuno-sato",
            Preset::GenCharPoly => "gencharpoly",
            Preset::Bartholdi => "bartholdi",
            Preset::LaplacianCharPoly => "laplacian-charpoly",
        }
    }

    pub fn all() -> [Preset; 5] {
        [
            Preset::Northshield,
            Preset::MizunoSato,
            Preset::GenCharPoly,
            Preset::Bartholdi,
            Preset::LaplacianCharPoly,
        ]
    }

    pub fn identity(&self) -> PresetIdentity {
        let lam = || BivarPoly::variable(Var::Lambda);
        let mu = || BivarPoly::variable(Var::Mu);
        let one = BivarPoly::one;
        let (spec, alpha, beta, variable, variable_name, requires_unit_weights) = match self {
            // f_G(u) = det[(1−u²)I + u²D − uA], u ↦ λ
            Preset::Northshield => (
                DetFunSpec::new(one() - lam() * lam(), lam() * lam(), -lam()),
                int(1),
                int(0),
                Var::Lambda,
                "u",
                true,
            ),
            // F_{G_ω}(λ) with the same coefficient triple, weighted graphs
            Preset::MizunoSato => (
                DetFunSpec::new(one() - lam() * lam(), lam() * lam(), -lam()),
                int(1),
                int(0),
                Var::Lambda,
                "lambda",
                false,
            ),
            // F_G(λ,μ) = det[λI + μD − A]
            Preset::GenCharPoly => (
                DetFunSpec::new(lam(), mu(), -one()),
                int(0),
                int(1),
                Var::Mu,
                "mu",
                true,
            ),
            // B_G(t,u) = det[(1−(1−t)²u²)I + (1−t)u²D − uA], (t,u) ↦ (λ,μ)
            Preset::Bartholdi => {
                let u2 = mu() * mu();
                let one_minus_t = one() - lam();
                let f = one() - one_minus_t.clone() * one_minus_t.clone() * u2.clone();
                let g = one_minus_t * u2;
                (DetFunSpec::new(f, g, -mu()), int(0), int(1), Var::Lambda, "t", true)
            }
            // σ_{G_ω}(μ) = det[μI − D + A] = det[μI − L]
            Preset::LaplacianCharPoly => (
                DetFunSpec::new(mu(), -one(), one()),
                int(0),
                int(0),
                Var::Mu,
                "mu",
                false,
            ),
        };
        let anchor = Anchor::new(&spec, alpha, beta)
            .expect("preset anchors satisfy both conditions");
        PresetIdentity {
            preset: *self,
            name: self.name(),
            spec,
            anchor,
            variable,
            variable_name,
            requires_unit_weights,
        }
    }
}

impl PresetIdentity {
    /// The published closed form for this preset's derivative identity,
    /// in terms of ν_G, ε_G, ω(G), and κ.
    pub fn corollary_rhs(&self, g: &WeightedGraph) -> Result<Rational> {
        let nu = int(g.vertex_count() as i64);
        let eps = int(g.edge_count() as i64);
        let k = kappa(g)?;
        Ok(match self.preset {
            // f'_G(1) = 2(ε_G − ν_G)κ(G)
            Preset::Northshield => int(2) * (eps - nu) * k,
            // F'_{G_ω}(1) = 2(ω(G) − ν_G)κ(G_ω)
            Preset::MizunoSato => int(2) * (g.total_weight() - nu) * k,
            // ∂F_G/∂μ(0,1) = 2ε_G κ(G)
            Preset::GenCharPoly => int(2) * eps * k,
            // ∂B_G/∂t at the anchor = 2(ν_G − ε_G)κ(G)
            Preset::Bartholdi => int(2) * (nu - eps) * k,
            // σ'_{G_ω}(0) = (−1)^{ν_G−1} ν_G κ(G_ω)
            Preset::LaplacianCharPoly => {
                let sign =
                    if g.vertex_count() % 2 == 1 { int(1) } else { int(-1) };
                sign * nu * k
            }
        })
    }

    /// Warnings attached to this preset's verification (empty for most).
    pub fn warnings(&self) -> Vec<String> {
        match self.preset {
            Preset::Bartholdi => {
                let at = |a: &Rational, b: &Rational| {
                    let f = self.spec.f.eval(a, b);
                    let gh = self.spec.g.eval(a, b) + self.spec.h.eval(a, b);
                    (f, gh)
                };
                let (f_stated, gh_stated) = at(&int(1), &int(0));
                let (f_used, gh_used) = at(&int(0), &int(1));
                vec![format!(
                    "the identity is printed at (t,u) = (1,0), but the anchor preconditions fail \
                     there: f(1,0) = {} (need 0), g(1,0)+h(1,0) = {} (need 0); this verification \
                     evaluates at (t,u) = (0,1), where f(0,1) = {} and g(0,1)+h(0,1) = {}, which \
                     satisfies both and reproduces the stated values; the printed \u{2202}/\u{2202}\u{3bc} \
                     is read as \u{2202}/\u{2202}u, since the variables are (t,u)",
                    rational_string(&f_stated),
                    rational_string(&gh_stated),
                    rational_string(&f_used),
                    rational_string(&gh_used),
                )]
            }
            _ => Vec::new(),
        }
    }
}

/// A corollary verification: jet derivative against the published closed
/// form (not against the general first-partial formula).
#[derive(Debug, Clone)]
pub struct CorollaryVerification {
    pub preset: &'static str,
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
    pub warnings: Vec<String>,
}

pub fn verify_corollary(preset: Preset, g: &WeightedGraph) -> Result<CorollaryVerification> {
    let id = preset.identity();
    if id.requires_unit_weights && !g.is_unit_weight() {
        return Err(Error::UnitWeightsRequired { preset: id.name.to_string() });
    }
    let lhs = phi_partial(&id.spec, g, id.variable, &id.anchor)?;
    let rhs = id.corollary_rhs(g)?;
    Ok(CorollaryVerification {
        preset: id.name,
        equal: lhs == rhs,
        lhs,
        rhs,
        warnings: id.warnings(),
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecDto {
    f: BivarPoly,
    g: BivarPoly,
    h: BivarPoly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    anchor: Option<[String; 2]>,
}

/// Parses the spec interchange format. The anchor, if present, is returned
/// unvalidated — callers decide which spec to validate it against.
pub fn detfun_spec_from_json(s: &str) -> Result<(DetFunSpec, Option<(Rational, Rational)>)> {
    let dto: SpecDto = serde_json::from_str(s)?;
    let anchor = match dto.anchor {
        Some([a, b]) => Some((
            parse_rational(&a)
                .map_err(|e| Error::Parse { message: format!("anchor alpha: {e}") })?,
            parse_rational(&b)
                .map_err(|e| Error::Parse { message: format!("anchor beta: {e}") })?,
        )),
        None => None,
    };
    Ok((DetFunSpec::new(dto.f, dto.g, dto.h), anchor))
}

pub fn detfun_spec_to_json(spec: &DetFunSpec, anchor: Option<&Anchor>) -> String {
    let dto = SpecDto {
        f: spec.f.clone(),
        g: spec.g.clone(),
        h: spec.h.clone(),
        anchor: anchor
            .map(|a| [rational_string(a.alpha()), rational_string(a.beta())]),
    };
    serde_json::to_string_pretty(&dto).expect("spec serialization cannot fail")
}
