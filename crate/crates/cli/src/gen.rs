//! Seeded random instances for the verification suites: connected weighted
//! graphs and determinant-function specs with constructed anchors. Lives in
//! the CLI so the core library stays free of randomness.

use kappa_core::detfun::{Anchor, DetFunSpec};
use kappa_core::graph::{Graph, WeightedGraph};
use kappa_core::poly::{BivarPoly, Var};
use kappa_core::ring::{frac, Rational};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy)]
pub struct GraphLimits {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl GraphLimits {
    pub fn new(max_vertices: usize, max_edges: usize) -> Self {
        assert!(max_vertices >= 2);
        GraphLimits { max_vertices, max_edges }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero rational, |numerator| ≤ 9, denominator ≤ 9.
pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut num = 0i64;
    while num == 0 {
        num = rng.random_range(-9..=9);
    }
    frac(num, rng.random_range(1..=9))
}

pub fn random_positive_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.random_range(1..=9), rng.random_range(1..=9))
}

/// Erdős–Rényi-style connected graph: a uniformly shuffled spanning tree
/// plus a coin-flipped subset of the remaining pairs, capped at max_edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, limits: GraphLimits) -> Graph {
    let nu = rng.random_range(2..=limits.max_vertices);
    let mut pairs: Vec<(usize, usize)> = (1..=nu)
        .flat_map(|u| (u + 1..=nu).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let mut parent: Vec<usize> = (0..=nu).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut edges = Vec::new();
    let mut extras = Vec::new();
    for (u, v) in pairs {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            edges.push((u, v));
        } else {
            extras.push((u, v));
        }
    }
    let room = limits.max_edges.saturating_sub(edges.len()).min(extras.len());
    for pair in extras.into_iter().take(room) {
        if rng.random_bool(0.5) {
            edges.push(pair);
        }
    }
    Graph::new(nu, edges).expect("generated graphs are structurally valid")
}

pub fn random_weighted_graph(rng: &mut ChaCha8Rng, limits: GraphLimits) -> WeightedGraph {
    let graph = random_connected_graph(rng, limits);
    let weights = (0..graph.edge_count()).map(|_| random_rational(rng)).collect();
    WeightedGraph::new(graph, weights).unwrap()
}

/// Random bivariate polynomial, degree ≤ 2 per variable, up to 3 terms.
pub fn random_bivar(rng: &mut ChaCha8Rng) -> BivarPoly {
    let terms = (0..rng.random_range(1..=3)).map(|_| {
        (random_rational(rng), rng.random_range(0..=2), rng.random_range(0..=2))
    });
    BivarPoly::from_terms(terms)
}

/// Random (f, g, h) with a constructed anchor: f = p·(λ−α) + p̂·(μ−β) and
/// h = −g + (λ−α)·q + (μ−β)·r, so f(α,β) = 0 and (g+h)(α,β) = 0 by
/// construction. g is nudged to be nonzero at the anchor so the verified
/// identities are non-degenerate.
pub fn random_anchored_spec(rng: &mut ChaCha8Rng) -> (DetFunSpec, Anchor) {
    let alpha = random_rational(rng);
    let beta = random_rational(rng);
    let mut g = random_bivar(rng);
    if g.eval(&alpha, &beta).is_zero() {
        g = g + BivarPoly::one();
    }
    DetFunSpec::anchored(
        &alpha,
        &beta,
        random_bivar(rng),
        random_bivar(rng),
        g,
        random_bivar(rng),
        random_bivar(rng),
    )
}

pub fn random_var(rng: &mut ChaCha8Rng) -> Var {
    if rng.random_bool(0.5) {
        Var::Lambda
    } else {
        Var::Mu
    }
}
