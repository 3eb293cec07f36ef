//! Weighted spanning tree enumerators computed exactly.
//!
//! The enumerator of an edge-weighted graph is the sum, over all spanning
//! trees, of the product of the tree's edge weights. This crate computes it
//! as a polynomial in the weight indeterminates by several independent
//! routes (Laplacian cofactors, rank-one updated Laplacian determinants, and
//! brute-force tree enumeration) and by closed forms for complete,
//! complete multipartite, Ferrers and threshold graphs.

pub mod enumerate;
pub mod graphs;
pub mod linalg;
pub mod mpoly;

pub use enumerate::{EnumerateError, EnumerationResult, Route};
pub use graphs::{GraphError, MultipartiteSpec, Partition, ThresholdSpec, WeightedGraph};
pub use linalg::{LinalgError, Matrix, PolyMatrix, RatMatrix};
pub use mpoly::{Monomial, PolyError, Polynomial, RationalFunction, VarKind, Variable};
