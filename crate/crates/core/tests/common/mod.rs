//! Seeded random graphs, weights, and polynomials shared by the
//! integration-test binaries.
#![allow(dead_code)] // each test binary uses a different subset

use kappa_core::graph::{Graph, WeightedGraph};
use kappa_core::poly::BivarPoly;
use kappa_core::ring::{frac, Rational};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero rational with |numerator| ≤ 9 and denominator ≤ 9.
pub fn rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut num = 0i64;
    while num == 0 {
        num = rng.random_range(-9..=9);
    }
    frac(num, rng.random_range(1..=9))
}

pub fn positive_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.random_range(1..=9), rng.random_range(1..=9))
}

/// Connected graph: a random spanning tree plus a random slice of the
/// remaining vertex pairs, capped at `max_edges`.
pub fn connected_graph(rng: &mut ChaCha8Rng, max_vertices: usize, max_edges: usize) -> Graph {
    let nu = rng.random_range(2..=max_vertices);
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
    let room = max_edges.saturating_sub(edges.len()).min(extras.len());
    for pair in extras.into_iter().take(room) {
        if rng.random_bool(0.5) {
            edges.push(pair);
        }
    }
    Graph::new(nu, edges).expect("construction is valid by design")
}

pub fn weighted(rng: &mut ChaCha8Rng, graph: Graph) -> WeightedGraph {
    let weights = (0..graph.edge_count()).map(|_| rational(rng)).collect();
    WeightedGraph::new(graph, weights).unwrap()
}

/// Random bivariate polynomial with total degree ≤ 2 per variable and a
/// handful of terms (possibly zero).
pub fn bivar(rng: &mut ChaCha8Rng) -> BivarPoly {
    let terms = (0..rng.random_range(1..=3))
        .map(|_| (rational(rng), rng.random_range(0..=2), rng.random_range(0..=2)));
    BivarPoly::from_terms(terms)
}

/// Random spec with a constructed valid anchor; g is adjusted to be nonzero
/// at the anchor so the identities are non-degenerate.
pub fn anchored_spec(
    rng: &mut ChaCha8Rng,
) -> (kappa_core::detfun::DetFunSpec, kappa_core::detfun::Anchor) {
    let alpha = rational(rng);
    let beta = rational(rng);
    let mut g = bivar(rng);
    if g.eval(&alpha, &beta).is_zero() {
        g = g + BivarPoly::constant(frac(1, 1));
    }
    kappa_core::detfun::DetFunSpec::anchored(
        &alpha,
        &beta,
        bivar(rng),
        bivar(rng),
        g,
        bivar(rng),
        bivar(rng),
    )
}
