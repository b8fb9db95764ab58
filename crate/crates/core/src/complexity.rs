//! Weighted and sigma-weighted spanning-tree complexity.
//!
//! Production paths are matrix-based: κ as a Laplacian cofactor (matrix-tree)
//! and κ_σ via a first-order jet substitution. The brute-force spanning-tree
//! enumeration and the reduced incidence determinants exist as independent
//! oracles for the test suite and stay behind an explicit edge budget.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, Orientation, WeightedGraph};
use crate::jet::Jet1;
use crate::ring::Rational;

/// Default cap on edge count for the subset-enumeration oracle.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 24;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the two classes; false if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// All spanning trees of `g`, as edge-index subsets of size ν−1 in
/// lexicographic order. Subset enumeration with union-find acyclicity
/// pruning; refuses graphs with more than `budget` edges.
pub fn enumerate_spanning_trees(g: &Graph, budget: usize) -> Result<Vec<Vec<usize>>> {
    let nu = g.vertex_count();
    if nu == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.edge_count() > budget {
        return Err(Error::EnumerationBudget { edges: g.edge_count(), budget });
    }
    let edges = g.edges();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(nu - 1);
    // An acyclic subset of size ν−1 is automatically spanning and connected.
    fn recurse(
        edges: &[(usize, usize)],
        start: usize,
        need: usize,
        uf: &UnionFind,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if need == 0 {
            out.push(current.clone());
            return;
        }
        for k in start..edges.len() {
            if edges.len() - k < need {
                break;
            }
            let (u, v) = edges[k];
            let mut next = UnionFind { parent: uf.parent.clone() };
            if next.union(u - 1, v - 1) {
                current.push(k);
                recurse(edges, k + 1, need - 1, &next, current, out);
                current.pop();
            }
        }
    }
    recurse(edges, 0, nu - 1, &UnionFind::new(nu), &mut current, &mut out);
    Ok(out)
}

/// ω(T) for an edge subset: product of its edge weights.
fn tree_product(g: &WeightedGraph, tree: &[usize]) -> Rational {
    tree.iter().map(|&k| g.weight(k).clone()).product()
}

/// Σ_{e∈T} ω(e) for an edge subset.
fn tree_sum(g: &WeightedGraph, tree: &[usize]) -> Rational {
    tree.iter().map(|&k| g.weight(k).clone()).sum()
}

/// The (i,j)-cofactor of L(G_ω) — by the matrix-tree theorem this is the
/// weighted complexity κ(G_ω), independent of (i,j). Indices 1-based.
pub fn kappa_cofactor(g: &WeightedGraph, i: usize, j: usize) -> Result<Rational> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let minor = g.laplacian().minor(i, j)?;
    let d = minor.det_bareiss();
    Ok(if (i + j) % 2 == 0 { d } else { -d })
}

/// κ(G_ω) via the (1,1) cofactor.
pub fn kappa(g: &WeightedGraph) -> Result<Rational> {
    kappa_cofactor(g, 1, 1)
}

/// κ(G_ω) = Σ_T ∏_{e∈T} ω(e) by brute-force tree enumeration.
pub fn kappa_enumerate(g: &WeightedGraph, budget: usize) -> Result<Rational> {
    let trees = enumerate_spanning_trees(g.graph(), budget)?;
    Ok(trees.iter().map(|t| tree_product(g, t)).sum())
}

/// κ_σ(G_ω) = Σ_T ω(T) by brute-force tree enumeration.
pub fn kappa_sigma_enumerate(g: &WeightedGraph, budget: usize) -> Result<Rational> {
    let trees = enumerate_spanning_trees(g.graph(), budget)?;
    Ok(trees.iter().map(|t| tree_sum(g, t)).sum())
}

/// (κ(G), κ_σ(G_ω)) in one cofactor computation.
///
/// Each weight ω(e) enters the Laplacian as the jet 1 + ω(e)ε — the
/// first-order expansion of x^{ω(e)} at x = 1, valid for any rational
/// exponent. The cofactor's value part is then κ of the underlying
/// unit-weight graph and its ε part is d/dx κ(G_{ω_x})|_{x=1} = κ_σ(G_ω).
pub fn kappa_sigma_jet(g: &WeightedGraph) -> Result<(Rational, Rational)> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let l = g.laplacian_map(|w| Jet1::new(Rational::one(), w.clone()));
    let c = l.cofactor(1, 1)?;
    Ok((c.a0, c.a1))
}

/// Minimum σ-weight of a spanning tree, by Kruskal's greedy algorithm.
/// Ties are broken by edge input order (stable sort).
pub fn kruskal_min_sigma(g: &WeightedGraph) -> Result<Rational> {
    let nu = g.vertex_count();
    if nu == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by(|&a, &b| g.weight(a).cmp(g.weight(b)));
    let mut uf = UnionFind::new(nu);
    let mut total = Rational::zero();
    let mut picked = 0;
    for k in order {
        let (u, v) = g.graph().edges()[k];
        if uf.union(u - 1, v - 1) {
            total += g.weight(k);
            picked += 1;
            if picked == nu - 1 {
                break;
            }
        }
    }
    Ok(total)
}

/// det of the incidence matrix restricted to the columns in `subset`, with
/// row `row` (1-based) removed. Nonzero exactly when the subset induces a
/// spanning tree; the workhorse of the incidence-determinant identities.
pub fn reduced_incidence_det(
    g: &WeightedGraph,
    o: &Orientation,
    subset: &[usize],
    row: usize,
) -> Result<Rational> {
    let nu = g.vertex_count();
    if nu == 0 {
        return Err(Error::EmptyGraph);
    }
    if subset.len() != nu - 1 {
        return Err(Error::WrongSubsetSize { got: subset.len(), expected: nu - 1 });
    }
    let mut seen = vec![false; g.edge_count()];
    for &k in subset {
        if k >= g.edge_count() {
            return Err(Error::EdgeIndexOutOfRange { index: k, edges: g.edge_count() });
        }
        if seen[k] {
            return Err(Error::DuplicateEdgeIndex { index: k });
        }
        seen[k] = true;
    }
    if row == 0 || row > nu {
        return Err(Error::RowOutOfRange { row, rows: nu });
    }
    let inc = g.incidence_matrix(o)?;
    Ok(inc.delete_row(row - 1).select_cols(subset).det_bareiss())
}
