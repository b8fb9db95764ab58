//! Simple weighted graphs: the model, the four matrices, and the JSON codec.
//!
//! Vertices are 1-indexed to match the cofactor conventions used throughout;
//! the JSON interchange format is 0-indexed and converted at the boundary.
//! Edge order is the input order and is preserved everywhere (incidence
//! columns, weight vectors, edge subsets). Edge indices are 0-based.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{parse_rational, rational_string, Rational, Ring};

/// Finite simple graph. Endpoints are stored normalized (`u < v`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds from 1-based endpoint pairs, rejecting loops, duplicates, and
    /// out-of-range endpoints. Error positions are 0-based edge indices.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut normalized: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (index, &(u, v)) in edges.iter().enumerate() {
            for endpoint in [u, v] {
                if endpoint == 0 || endpoint > vertex_count {
                    return Err(Error::EndpointOutOfRange { index, endpoint, vertex_count });
                }
            }
            if u == v {
                return Err(Error::LoopEdge { index, vertex: u });
            }
            let e = (u.min(v), u.max(v));
            if let Some(first) = normalized.iter().position(|&p| p == e) {
                return Err(Error::DuplicateEdge { index, first, u: e.0, v: e.1 });
            }
            normalized.push(e);
        }
        Ok(Graph { vertex_count, edges: normalized })
    }

    /// Complete graph K_n, edges in lexicographic order.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                edges.push((u, v));
            }
        }
        Graph { vertex_count: n, edges }
    }

    /// Cycle 1–2–…–n–1 (n ≥ 3).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<(usize, usize)> = (1..n).map(|u| (u, u + 1)).collect();
        edges.push((1, n));
        Graph { vertex_count: n, edges }
    }

    /// Path 1–2–…–n.
    pub fn path(n: usize) -> Self {
        Graph { vertex_count: n, edges: (1..n).map(|u| (u, u + 1)).collect() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized 1-based pairs, in input order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertex_count + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.vertex_count + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.vertex_count
    }
}

/// Graph plus one rational weight per edge (the function ω).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Graph,
    weights: Vec<Rational>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != graph.edge_count() {
            return Err(Error::WeightCountMismatch {
                weights: weights.len(),
                edges: graph.edge_count(),
            });
        }
        Ok(WeightedGraph { graph, weights })
    }

    /// All weights 1 — the embedding of unweighted graphs.
    pub fn unit(graph: Graph) -> Self {
        let weights = vec![Rational::one(); graph.edge_count()];
        WeightedGraph { graph, weights }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, edge: usize) -> &Rational {
        &self.weights[edge]
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edges.len()
    }

    pub fn is_unit_weight(&self) -> bool {
        self.weights.iter().all(Rational::is_one)
    }

    /// Same graph with every weight replaced by 1.
    pub fn unit_weights(&self) -> WeightedGraph {
        WeightedGraph::unit(self.graph.clone())
    }

    /// ω(G) = Σ_e ω(e).
    pub fn total_weight(&self) -> Rational {
        self.weights.iter().sum()
    }

    /// Adjacency matrix with each weight mapped into the target ring —
    /// the hook for jet-valued weights.
    pub fn adjacency_map<R: Ring>(&self, mut wf: impl FnMut(&Rational) -> R) -> Matrix<R> {
        let n = self.vertex_count();
        let mut m = Matrix::zeros(n, n);
        for (k, &(u, v)) in self.graph.edges.iter().enumerate() {
            let w = wf(&self.weights[k]);
            m.set(u - 1, v - 1, w.clone());
            m.set(v - 1, u - 1, w);
        }
        m
    }

    pub fn degree_map<R: Ring>(&self, mut wf: impl FnMut(&Rational) -> R) -> Matrix<R> {
        let n = self.vertex_count();
        let mut m: Matrix<R> = Matrix::zeros(n, n);
        for (k, &(u, v)) in self.graph.edges.iter().enumerate() {
            let w = wf(&self.weights[k]);
            for i in [u - 1, v - 1] {
                let d = m.get(i, i).clone() + w.clone();
                m.set(i, i, d);
            }
        }
        m
    }

    pub fn laplacian_map<R: Ring>(&self, mut wf: impl FnMut(&Rational) -> R) -> Matrix<R> {
        let n = self.vertex_count();
        let mut m = Matrix::zeros(n, n);
        for (k, &(u, v)) in self.graph.edges.iter().enumerate() {
            let w = wf(&self.weights[k]);
            m.set(u - 1, v - 1, -w.clone());
            m.set(v - 1, u - 1, -w.clone());
            for i in [u - 1, v - 1] {
                let d = m.get(i, i).clone() + w.clone();
                m.set(i, i, d);
            }
        }
        m
    }

    /// A(G_ω): symmetric, zero diagonal, entry (i,j) = ω({v_i, v_j}).
    pub fn adjacency_matrix(&self) -> Matrix<Rational> {
        self.adjacency_map(Clone::clone)
    }

    /// D(G_ω): diagonal of weighted degrees.
    pub fn degree_matrix(&self) -> Matrix<Rational> {
        self.degree_map(Clone::clone)
    }

    /// L(G_ω) = D(G_ω) − A(G_ω).
    pub fn laplacian(&self) -> Matrix<Rational> {
        self.laplacian_map(Clone::clone)
    }

    /// ν_G × ε_G incidence matrix: column k holds ω(e_k) at the positive end
    /// and −ω(e_k) at the negative end.
    pub fn incidence_matrix(&self, o: &Orientation) -> Result<Matrix<Rational>> {
        o.validate(&self.graph)?;
        let mut m = Matrix::zeros(self.vertex_count(), self.edge_count());
        for (k, &(pos, neg)) in o.pairs.iter().enumerate() {
            m.set(pos - 1, k, self.weights[k].clone());
            m.set(neg - 1, k, -self.weights[k].clone());
        }
        Ok(m)
    }
}

/// One (positive_end, negative_end) pair per edge, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pairs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn new(graph: &Graph, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let o = Orientation { pairs };
        o.validate(graph)?;
        Ok(o)
    }

    /// Deterministic default: positive end at the lower vertex index.
    pub fn default_for(graph: &Graph) -> Self {
        Orientation { pairs: graph.edges.clone() }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    fn validate(&self, graph: &Graph) -> Result<()> {
        if self.pairs.len() != graph.edge_count() {
            return Err(Error::OrientationLengthMismatch {
                got: self.pairs.len(),
                expected: graph.edge_count(),
            });
        }
        for (index, (&(pos, neg), &(u, v))) in
            self.pairs.iter().zip(graph.edges.iter()).enumerate()
        {
            if (pos, neg) != (u, v) && (pos, neg) != (v, u) {
                return Err(Error::BadOrientation { index, pos, neg, u, v });
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDto {
    u: usize,
    v: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    w: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDto {
    vertex_count: usize,
    edges: Vec<EdgeDto>,
}

/// Parses the interchange format. Endpoints in the file are 0-indexed;
/// `w` is optional and defaults to "1". Semantic errors name the offending
/// entry of the `edges` array in file (0-based) terms.
pub fn weighted_graph_from_json(s: &str) -> Result<WeightedGraph> {
    let dto: GraphDto = serde_json::from_str(s)?;
    let mut edges = Vec::with_capacity(dto.edges.len());
    let mut weights = Vec::with_capacity(dto.edges.len());
    for (index, e) in dto.edges.iter().enumerate() {
        for endpoint in [e.u, e.v] {
            if endpoint >= dto.vertex_count {
                return Err(Error::EndpointOutOfRange {
                    index,
                    endpoint,
                    vertex_count: dto.vertex_count,
                });
            }
        }
        if e.u == e.v {
            return Err(Error::LoopEdge { index, vertex: e.u });
        }
        let pair = (e.u.min(e.v), e.u.max(e.v));
        if let Some(first) = edges.iter().position(|&p| p == pair) {
            return Err(Error::DuplicateEdge { index, first, u: pair.0, v: pair.1 });
        }
        edges.push(pair);
        let w = match &e.w {
            Some(text) => parse_rational(text).map_err(|err| Error::Parse {
                message: format!("edge {index} weight: {err}"),
            })?,
            None => Rational::one(),
        };
        weights.push(w);
    }
    let graph = Graph::new(dto.vertex_count, edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect())?;
    WeightedGraph::new(graph, weights)
}

/// Serializes to the interchange format (0-indexed, weights always explicit).
pub fn weighted_graph_to_json(g: &WeightedGraph) -> String {
    let dto = GraphDto {
        vertex_count: g.vertex_count(),
        edges: g
            .graph
            .edges
            .iter()
            .zip(g.weights.iter())
            .map(|(&(u, v), w)| EdgeDto { u: u - 1, v: v - 1, w: Some(rational_string(w)) })
            .collect(),
    };
    serde_json::to_string_pretty(&dto).expect("graph serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{frac, int};
    use num_traits::Zero;

    fn k3_123() -> WeightedGraph {
        WeightedGraph::new(Graph::complete(3), vec![int(1), int(2), int(3)]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, vec![(1, 1)]),
            Err(Error::LoopEdge { index: 0, vertex: 1 })
        ));
        assert!(matches!(
            Graph::new(3, vec![(1, 2), (2, 1)]),
            Err(Error::DuplicateEdge { index: 1, first: 0, .. })
        ));
        assert!(matches!(
            Graph::new(3, vec![(1, 4)]),
            Err(Error::EndpointOutOfRange { index: 0, endpoint: 4, .. })
        ));
        assert!(matches!(
            WeightedGraph::new(Graph::complete(3), vec![int(1)]),
            Err(Error::WeightCountMismatch { weights: 1, edges: 3 })
        ));
    }

    #[test]
    fn adjacency_examples() {
        let k2 = WeightedGraph::new(Graph::complete(2), vec![int(5)]).unwrap();
        assert_eq!(
            k2.adjacency_matrix(),
            Matrix::from_rows(vec![vec![int(0), int(5)], vec![int(5), int(0)]])
        );
        let edgeless = WeightedGraph::unit(Graph::new(3, vec![]).unwrap());
        assert_eq!(edgeless.adjacency_matrix(), Matrix::zeros(3, 3));
        assert_eq!(
            k3_123().adjacency_matrix(),
            Matrix::from_rows(vec![
                vec![int(0), int(1), int(2)],
                vec![int(1), int(0), int(3)],
                vec![int(2), int(3), int(0)],
            ])
        );
    }

    #[test]
    fn degree_examples() {
        let k2 = WeightedGraph::new(Graph::complete(2), vec![int(5)]).unwrap();
        assert_eq!(
            k2.degree_matrix(),
            Matrix::from_rows(vec![vec![int(5), int(0)], vec![int(0), int(5)]])
        );
        let d = k3_123().degree_matrix();
        assert_eq!(
            d,
            Matrix::from_rows(vec![
                vec![int(3), int(0), int(0)],
                vec![int(0), int(4), int(0)],
                vec![int(0), int(0), int(5)],
            ])
        );
        let p3 = WeightedGraph::unit(Graph::path(3));
        assert_eq!(*p3.degree_matrix().get(1, 1), int(2));
    }

    #[test]
    fn laplacian_examples() {
        assert_eq!(
            WeightedGraph::unit(Graph::complete(3)).laplacian(),
            Matrix::from_rows(vec![
                vec![int(2), int(-1), int(-1)],
                vec![int(-1), int(2), int(-1)],
                vec![int(-1), int(-1), int(2)],
            ])
        );
        assert_eq!(
            k3_123().laplacian(),
            Matrix::from_rows(vec![
                vec![int(3), int(-1), int(-2)],
                vec![int(-1), int(4), int(-3)],
                vec![int(-2), int(-3), int(5)],
            ])
        );
        let single = WeightedGraph::unit(Graph::new(1, vec![]).unwrap());
        assert_eq!(single.laplacian(), Matrix::zeros(1, 1));
    }

    #[test]
    fn incidence_examples() {
        let k2 = WeightedGraph::new(Graph::complete(2), vec![int(5)]).unwrap();
        let inc = k2.incidence_matrix(&Orientation::default_for(k2.graph())).unwrap();
        assert_eq!(inc, Matrix::from_rows(vec![vec![int(5)], vec![int(-5)]]));

        let p3 = WeightedGraph::unit(Graph::path(3));
        let inc = p3.incidence_matrix(&Orientation::default_for(p3.graph())).unwrap();
        assert_eq!(
            inc,
            Matrix::from_rows(vec![
                vec![int(1), int(0)],
                vec![int(-1), int(1)],
                vec![int(0), int(-1)],
            ])
        );
        // column sums vanish
        let g = k3_123();
        let inc = g.incidence_matrix(&Orientation::default_for(g.graph())).unwrap();
        for k in 0..g.edge_count() {
            let sum: Rational = (0..g.vertex_count()).map(|i| inc.get(i, k).clone()).sum();
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn laplacian_factors_through_incidence() {
        // L(G_ω) = I(G_ω) · I(G)ᵗ for any orientation.
        let g = k3_123();
        let o = Orientation::new(g.graph(), vec![(2, 1), (1, 3), (3, 2)]).unwrap();
        let iw = g.incidence_matrix(&o).unwrap();
        let iu = g.unit_weights().incidence_matrix(&o).unwrap();
        assert_eq!(iw.matmul(&iu.transpose()), g.laplacian());
    }

    #[test]
    fn orientation_validation() {
        let g = Graph::complete(3);
        assert!(matches!(
            Orientation::new(&g, vec![(1, 2)]),
            Err(Error::OrientationLengthMismatch { got: 1, expected: 3 })
        ));
        assert!(matches!(
            Orientation::new(&g, vec![(1, 2), (1, 3), (1, 2)]),
            Err(Error::BadOrientation { index: 2, .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let g = WeightedGraph::new(Graph::complete(3), vec![int(1), frac(-2, 3), int(3)]).unwrap();
        let s = weighted_graph_to_json(&g);
        assert_eq!(weighted_graph_from_json(&s).unwrap(), g);
    }

    #[test]
    fn json_default_weight_is_one() {
        let g = weighted_graph_from_json(
            r#"{"vertex_count": 2, "edges": [{"u": 0, "v": 1}]}"#,
        )
        .unwrap();
        assert_eq!(g.weights(), &[int(1)]);
    }

    #[test]
    fn json_rejections() {
        let loops = r#"{"vertex_count": 2, "edges": [{"u": 1, "v": 1}]}"#;
        assert!(matches!(
            weighted_graph_from_json(loops),
            Err(Error::LoopEdge { index: 0, vertex: 1 })
        ));
        let dup = r#"{"vertex_count": 3, "edges": [{"u": 0, "v": 1}, {"u": 1, "v": 0}]}"#;
        assert!(matches!(
            weighted_graph_from_json(dup),
            Err(Error::DuplicateEdge { index: 1, first: 0, .. })
        ));
        let range = r#"{"vertex_count": 2, "edges": [{"u": 0, "v": 2}]}"#;
        assert!(matches!(
            weighted_graph_from_json(range),
            Err(Error::EndpointOutOfRange { index: 0, endpoint: 2, vertex_count: 2 })
        ));
        let weight = r#"{"vertex_count": 2, "edges": [{"u": 0, "v": 1, "w": "1/0"}]}"#;
        match weighted_graph_from_json(weight) {
            Err(Error::Parse { message }) => assert!(message.starts_with("edge 0 weight:")),
            other => panic!("expected weight parse error, got {other:?}"),
        }
        let syntax = r#"{"vertex_count": 2, "edges": ["#;
        match weighted_graph_from_json(syntax) {
            Err(Error::Parse { message }) => assert!(message.contains("line")),
            other => panic!("expected syntax error, got {other:?}"),
        }
        let unknown = r#"{"vertex_count": 2, "edges": [{"u": 0, "v": 1, "weight": "2"}]}"#;
        assert!(weighted_graph_from_json(unknown).is_err());
    }

    #[test]
    fn connectivity_and_totals() {
        assert!(Graph::complete(4).is_connected());
        assert!(!Graph::new(4, vec![(1, 2), (3, 4)]).unwrap().is_connected());
        assert!(Graph::new(1, vec![]).unwrap().is_connected());
        assert_eq!(k3_123().total_weight(), int(6));
        assert!(WeightedGraph::unit(Graph::cycle(5)).is_unit_weight());
        assert!(!k3_123().is_unit_weight());
    }
}
