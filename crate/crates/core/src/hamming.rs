//! Hamming graphs G(m_1,…,m_n) = K_{m_1} × … × K_{m_n} and their closed
//! forms.
//!
//! Vertices are n-tuples with a_i ∈ {0,…,m_i−1}; two tuples are adjacent when
//! they differ in exactly one coordinate, and an edge differing in coordinate
//! i carries the coordinate weight ω_i. The Laplacian spectrum, κ, κ_σ, the
//! hypercube specializations, and the minimum spanning tree value all have
//! product formulas over the nonempty subsets of {1,…,n}, implemented here
//! next to the explicit graph builder that the test suite checks them
//! against.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, WeightedGraph};
use crate::ring::{int, parse_rational, rational_string, ring_pow, Rational};
use crate::unipoly::UniPoly;

/// Default cap on ∏ m_i for the explicit graph builder.
pub const DEFAULT_VERTEX_BUDGET: usize = 4096;

/// Sizes m_1..m_n (each ≥ 2) with one rational weight per coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HammingSpec {
    sizes: Vec<usize>,
    weights: Vec<Rational>,
}

impl HammingSpec {
    pub fn new(sizes: Vec<usize>, weights: Vec<Rational>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::NoCoordinates);
        }
        for (index, &size) in sizes.iter().enumerate() {
            if size < 2 {
                return Err(Error::SizeTooSmall { index, size });
            }
        }
        if sizes.len() != weights.len() {
            return Err(Error::HammingLengthMismatch {
                sizes: sizes.len(),
                weights: weights.len(),
            });
        }
        Ok(HammingSpec { sizes, weights })
    }

    pub fn unit(sizes: Vec<usize>) -> Result<Self> {
        let weights = vec![Rational::one(); sizes.len()];
        Self::new(sizes, weights)
    }

    /// Q_n with the given coordinate weights.
    pub fn hypercube(weights: Vec<Rational>) -> Result<Self> {
        Self::new(vec![2; weights.len()], weights)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn dimension(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_hypercube(&self) -> bool {
        self.sizes.iter().all(|&m| m == 2)
    }

    /// ν = ∏ m_i, or None on machine overflow.
    pub fn vertex_total(&self) -> Option<usize> {
        self.sizes.iter().try_fold(1usize, |acc, &m| acc.checked_mul(m))
    }

    /// Per-subset data: (e_S = ∏_{s∈S}(m_s−1), Σ_{s∈S} m_s, Σ_{s∈S} m_s ω_s)
    /// for the nonempty subset encoded by `mask`.
    fn subset(&self, mask: u32) -> (u64, Rational, Rational) {
        let mut mult = 1u64;
        let mut sum_m = Rational::zero();
        let mut sum_mw = Rational::zero();
        for (i, (&m, w)) in self.sizes.iter().zip(self.weights.iter()).enumerate() {
            if mask & (1 << i) != 0 {
                mult = mult
                    .checked_mul((m - 1) as u64)
                    .expect("multiplicity exceeds u64");
                sum_m += int(m as i64);
                sum_mw += int(m as i64) * w;
            }
        }
        (mult, sum_m, sum_mw)
    }

    fn masks(&self) -> impl Iterator<Item = u32> {
        let n = self.dimension();
        assert!(n < 32, "too many coordinates for subset enumeration");
        1..(1u32 << n)
    }
}

/// The explicit Hamming graph: vertices are the mixed-radix tuples in
/// lexicographic order (last coordinate fastest), edges grouped by lower
/// endpoint, then coordinate, then target value.
pub fn build_graph(spec: &HammingSpec, budget: usize) -> Result<WeightedGraph> {
    let nu = match spec.vertex_total() {
        Some(nu) if nu <= budget => nu,
        _ => {
            return Err(Error::VertexBudget {
                vertices: spec.vertex_total().unwrap_or(usize::MAX),
                budget,
            })
        }
    };
    let n = spec.dimension();
    let mut strides = vec![1usize; n];
    for i in (0..n.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * spec.sizes[i + 1];
    }
    let mut edges = Vec::new();
    let mut weights = Vec::new();
    for v in 0..nu {
        for i in 0..n {
            let a = (v / strides[i]) % spec.sizes[i];
            for b in a + 1..spec.sizes[i] {
                edges.push((v + 1, v + (b - a) * strides[i] + 1));
                weights.push(spec.weights[i].clone());
            }
        }
    }
    WeightedGraph::new(Graph::new(nu, edges)?, weights)
}

/// Laplacian spectrum by the subset formula: {0 : 1} together with
/// Σ_{s∈S} m_s ω_s of multiplicity ∏_{s∈S}(m_s−1) per nonempty S ⊆ [n].
/// Coinciding eigenvalues are merged; sorted ascending.
pub fn spectrum_closed_form(spec: &HammingSpec) -> Vec<(Rational, u64)> {
    let mut merged: BTreeMap<Rational, u64> = BTreeMap::new();
    merged.insert(Rational::zero(), 1);
    for mask in spec.masks() {
        let (mult, _, eigen) = spec.subset(mask);
        *merged.entry(eigen).or_insert(0) += mult;
    }
    merged.into_iter().collect()
}

/// κ(G(m_1,…,m_n)_ω) = [∏_{∅≠S} (Σ_{s∈S} m_s ω_s)^{∏_{s∈S}(m_s−1)}] / ∏ m_i.
pub fn kappa_closed_form(spec: &HammingSpec) -> Rational {
    let mut product = Rational::one();
    for mask in spec.masks() {
        let (mult, _, sum_mw) = spec.subset(mask);
        product *= ring_pow(&sum_mw, mult);
    }
    product / vertex_total_rational(spec)
}

fn vertex_total_rational(spec: &HammingSpec) -> Rational {
    spec.sizes.iter().map(|&m| int(m as i64)).product()
}

/// κ_σ(G(m_1,…,m_n)_ω) by the subset double sum:
/// [Σ_{∅≠S} (∏_{∅≠T≠S} (Σ_{t∈T} m_t)^{e_T}) · Ω(S)] / ∏ m_i with
/// Ω(S) = e_S · (Σ_{s∈S} m_s)^{e_S−1} · (Σ_{s∈S} m_s ω_s) and
/// e_S = ∏_{s∈S}(m_s−1). For n = 1 the inner product is empty (= 1).
pub fn kappa_sigma_closed_form(spec: &HammingSpec) -> Rational {
    let data: Vec<(u32, u64, Rational, Rational)> = spec
        .masks()
        .map(|mask| {
            let (mult, sum_m, sum_mw) = spec.subset(mask);
            (mask, mult, sum_m, sum_mw)
        })
        .collect();
    let mut total = Rational::zero();
    for &(s_mask, e_s, ref sum_m_s, ref sum_mw_s) in &data {
        let mut inner = Rational::one();
        for &(t_mask, e_t, ref sum_m_t, _) in &data {
            if t_mask != s_mask {
                inner *= ring_pow(sum_m_t, e_t);
            }
        }
        let omega_s =
            int(e_s as i64) * ring_pow(sum_m_s, e_s - 1) * sum_mw_s;
        total += inner * omega_s;
    }
    total / vertex_total_rational(spec)
}

fn binomial(n: u64, k: u64) -> u64 {
    let mut acc = 1u64;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Specialized κ_σ for all-equal sizes:
/// m^{m^n−n−1} · (∏_k k^{C(n,k)(m−1)^k}) · (m^n−1)/n · Σ ω_i.
/// None when the sizes are not all equal.
pub fn kappa_sigma_equal_m(spec: &HammingSpec) -> Option<Rational> {
    let m = spec.sizes[0];
    if !spec.sizes.iter().all(|&s| s == m) {
        return None;
    }
    let n = spec.dimension() as u64;
    let m_pow_n = (m as u64).checked_pow(n as u32).expect("m^n exceeds u64");
    let mut value = ring_pow(&int(m as i64), m_pow_n - n - 1);
    for k in 1..=n {
        let exp = binomial(n, k)
            .checked_mul(((m - 1) as u64).pow(k as u32))
            .expect("exponent exceeds u64");
        value *= ring_pow(&int(k as i64), exp);
    }
    value *= int(m_pow_n as i64 - 1) / int(n as i64);
    value *= spec.weights.iter().sum::<Rational>();
    Some(value)
}

/// κ((Q_n)_ω) = 2^{2^n−n−1} · ∏_{∅≠S} Σ_{s∈S} ω_s, with n = |ω| ≥ 1.
pub fn hypercube_kappa(weights: &[Rational]) -> Result<Rational> {
    let n = weights.len();
    if n == 0 {
        return Err(Error::NoCoordinates);
    }
    assert!(n < 32, "too many coordinates for subset enumeration");
    let exp = (1u64 << n) - n as u64 - 1;
    let mut product = ring_pow(&int(2), exp);
    for mask in 1..(1u32 << n) {
        let mut sum = Rational::zero();
        for (i, w) in weights.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum += w;
            }
        }
        product *= sum;
    }
    Ok(product)
}

/// min{ω(T) : T spanning tree of (Q_n)_ω} = Σ_i 2^{n−i} ω_(i) with the
/// weights sorted ascending. Hypercubes only.
pub fn mst_closed_form(spec: &HammingSpec) -> Result<Rational> {
    if !spec.is_hypercube() {
        return Err(Error::MstRequiresHypercube);
    }
    let mut sorted = spec.weights.to_vec();
    sorted.sort();
    let n = sorted.len();
    let mut total = Rational::zero();
    for (i, w) in sorted.iter().enumerate() {
        total += int(1 << (n - 1 - i)) * w;
    }
    Ok(total)
}

/// Checks that det(λI − L) of the built graph factors exactly as
/// ∏ (λ − eig)^{mult} over the closed-form spectrum, by dividing out one
/// linear factor at a time and requiring quotient 1 at the end.
pub fn charpoly_matches_spectrum(spec: &HammingSpec, budget: usize) -> Result<bool> {
    let g = build_graph(spec, budget)?;
    let mut remainder = UniPoly::new(g.laplacian().charpoly());
    for (eigen, mult) in spectrum_closed_form(spec) {
        for _ in 0..mult {
            match remainder.try_div_linear(&eigen) {
                Some(quotient) => remainder = quotient,
                None => return Ok(false),
            }
        }
    }
    Ok(remainder == UniPoly::one())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HammingDto {
    sizes: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<String>>,
}

/// Parses the interchange format; omitted weights default to all 1.
pub fn hamming_spec_from_json(s: &str) -> Result<HammingSpec> {
    let dto: HammingDto = serde_json::from_str(s)?;
    match dto.weights {
        Some(texts) => {
            let mut weights = Vec::with_capacity(texts.len());
            for (i, t) in texts.iter().enumerate() {
                weights.push(parse_rational(t).map_err(|e| Error::Parse {
                    message: format!("weight {i}: {e}"),
                })?);
            }
            HammingSpec::new(dto.sizes, weights)
        }
        None => HammingSpec::unit(dto.sizes),
    }
}

pub fn hamming_spec_to_json(spec: &HammingSpec) -> String {
    let dto = HammingDto {
        sizes: spec.sizes.clone(),
        weights: Some(spec.weights.iter().map(rational_string).collect()),
    };
    serde_json::to_string_pretty(&dto).expect("spec serialization cannot fail")
}
