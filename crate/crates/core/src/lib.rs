//! Exact-arithmetic spanning-tree complexities and determinant functions of
//! weighted graphs.
//!
//! Everything in this crate computes over exact scalars: arbitrary-precision
//! rationals, truncated jets over rationals (for derivatives), and bivariate
//! polynomials with rational coefficients. There is no floating point anywhere,
//! so every equality the library reports is an exact identity, not a tolerance
//! check.
//!
//! The main entry points:
//!
//! * [`graph`] — simple weighted graphs and their adjacency / degree /
//!   incidence / Laplacian matrices, plus the JSON codec.
//! * [`complexity`] — the weighted complexity `kappa` (sum over spanning
//!   trees of the product of edge weights), the sigma variant `kappa_sigma`
//!   (sum of edge-weight sums), a brute-force spanning-tree oracle, and a
//!   Kruskal minimum-sigma-weight tree.
//! * [`detfun`] — the two-variable determinant function
//!   `det[f·I + g·D + h·A]`, its exact partial and mixed partial derivatives
//!   at anchor points, and the named preset identities.
//! * [`hamming`] — closed forms for products of complete graphs: Laplacian
//!   spectrum, `kappa`, `kappa_sigma`, and the hypercube minimum spanning
//!   tree value.
//!
//! Matrix determinants are computed division-free (Berkowitz) so they work
//! over any commutative ring the crate defines, including the jet rings that
//! carry derivatives; a fraction-free (Bareiss) fast path covers the rational
//! case.

pub mod complexity;
pub mod detfun;
pub mod error;
pub mod graph;
pub mod hamming;
pub mod jet;
pub mod matrix;
pub mod poly;
pub mod ring;
pub mod unipoly;

pub use error::Error;
pub use ring::{frac, int, parse_rational, rational_string, Rational, Ring};

/// Jet with one nilpotent infinitesimal over the rationals.
pub type RatJet1 = jet::Jet1<Rational>;
/// Jet with two nilpotent infinitesimals over the rationals.
pub type RatJet2 = jet::Jet2<Rational>;
/// Dense matrix over the rationals.
pub type RatMatrix = matrix::Matrix<Rational>;
