//! Weighted spanning tree enumerators by independent routes.
//!
//! * [`tau_brute_force`] sums tree weights directly.
//! * [`tau_via_cofactor`] takes any cofactor of the weighted Laplacian.
//! * [`tau_via_rank_one`] and [`tau_via_rank_one_symbolic`] divide
//!   `det(L + a b^T)` by `(Σ a)(Σ b)`.
//! * [`closed_form`] holds the family formulas.

mod brute;
pub mod closed_form;
pub mod structure;

pub use brute::{for_each_spanning_tree, tau_brute_force, tau_brute_force_with_cap, DEFAULT_EDGE_CAP};
pub use closed_form::{
    cayley_prufer_formula, ferrers_formula, lewis_count, merris_count, multipartite_formula, threshold_f,
    threshold_formula, threshold_g,
};

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::graphs::{
    complete_graph, complete_multipartite, ferrers_graph, special_vertex, threshold_graph, GraphError,
    MultipartiteSpec, Partition, ThresholdSpec, WeightedGraph,
};
use crate::linalg::{cofactor, determinant, rank_one_update, weighted_laplacian, LinalgError};
use crate::mpoly::{PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("graph has {edges} edges, brute force is capped at {cap}")]
    TooLarge { edges: usize, cap: usize },
    #[error("n = {0} is too small (need n >= 2)")]
    TooSmall(usize),
    #[error("vertex index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("rank-one vector entries sum to zero")]
    ZeroVectorSum,
    #[error("vector length does not match vertex count")]
    DimensionMismatch,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no closed form is known for this graph")]
    NoClosedForm,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Cofactor,
    RankOne,
    RankOneSymbolic,
    BruteForce,
    ClosedForm,
}

impl Route {
    pub const ALL: [Route; 5] = [
        Route::BruteForce,
        Route::Cofactor,
        Route::RankOne,
        Route::RankOneSymbolic,
        Route::ClosedForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Cofactor => "cofactor",
            Route::RankOne => "rank-one",
            Route::RankOneSymbolic => "rank-one-symbolic",
            Route::BruteForce => "brute-force",
            Route::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A graph family with its canonical weighting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Multipartite(MultipartiteSpec),
    Ferrers(Partition),
    Threshold(ThresholdSpec),
}

impl Family {
    pub fn graph(&self) -> Result<WeightedGraph, EnumerateError> {
        Ok(match self {
            Family::Complete(n) => complete_graph(*n)?,
            Family::Multipartite(spec) => complete_multipartite(spec),
            Family::Ferrers(lambda) => ferrers_graph(lambda),
            Family::Threshold(spec) => threshold_graph(spec),
        })
    }

    pub fn closed_form(&self) -> Result<Polynomial, EnumerateError> {
        match self {
            Family::Complete(1) => Ok(Polynomial::one()),
            Family::Complete(n) => cayley_prufer_formula(*n),
            Family::Multipartite(spec) => Ok(multipartite_formula(spec)),
            Family::Ferrers(lambda) => Ok(ferrers_formula(lambda)),
            Family::Threshold(spec) => {
                if !spec.is_connected() {
                    return Err(EnumerateError::Disconnected);
                }
                threshold_formula(&threshold_graph(spec))
            }
        }
    }

    /// The symbolic vectors `(a, b)` for which `L + a b^T` has the
    /// triangular block structure used to derive the closed form.
    pub fn rank_one_vectors(&self) -> Result<(Vec<Polynomial>, Vec<Polynomial>), EnumerateError> {
        let var = |i: usize| u32::try_from(i + 1).expect("index fits in u32");
        Ok(match self {
            Family::Complete(n) => {
                let xs: Vec<Polynomial> = (0..*n).map(|i| Polynomial::x(var(i))).collect();
                (xs.clone(), xs)
            }
            Family::Multipartite(spec) => {
                let xs: Vec<Polynomial> = (0..spec.total()).map(|i| Polynomial::x(var(i))).collect();
                (xs.clone(), xs)
            }
            Family::Ferrers(lambda) => {
                let (m, n) = (lambda.len(), lambda.largest());
                // y on column vertices, x on row vertices
                let ys = (0..m)
                    .map(|_| Polynomial::zero())
                    .chain((0..n).map(|j| Polynomial::y(var(j))))
                    .collect();
                let xs = (0..m)
                    .map(|i| Polynomial::x(var(i)))
                    .chain((0..n).map(|_| Polynomial::zero()))
                    .collect();
                (ys, xs)
            }
            Family::Threshold(spec) => {
                let g = threshold_graph(spec);
                let t = special_vertex(&g)?;
                let n = spec.n();
                let ys = (0..n).map(|i| Polynomial::y(var(i))).collect();
                let xs = (0..n)
                    .map(|i| {
                        if i < t {
                            Polynomial::x(var(i))
                        } else {
                            Polynomial::zero()
                        }
                    })
                    .collect();
                (ys, xs)
            }
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete K_{n}"),
            Family::Multipartite(spec) => {
                let sizes: Vec<String> = spec.part_sizes().iter().map(|s| s.to_string()).collect();
                write!(f, "complete multipartite K_{{{}}}", sizes.join(","))
            }
            Family::Ferrers(lambda) => write!(f, "Ferrers {lambda}"),
            Family::Threshold(spec) => write!(f, "threshold {spec:?}", spec = spec.to_string()),
        }
    }
}

/// `τ` together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub tau: Polynomial,
    pub route: Route,
    pub source: String,
}

/// `τ(G;ω) = (-1)^(i+j) det(L_{i,j})` for any 0-based `i`, `j`.
pub fn tau_via_cofactor(g: &WeightedGraph, i: usize, j: usize) -> Result<Polynomial, EnumerateError> {
    let n = g.n();
    for index in [i, j] {
        if index >= n {
            return Err(EnumerateError::IndexOutOfRange { index, n });
        }
    }
    Ok(cofactor(&weighted_laplacian(g), i, j)?)
}

/// `det(L + a b^T) / ((Σ a)(Σ b))` for integer vectors.
pub fn tau_via_rank_one(g: &WeightedGraph, a: &[i64], b: &[i64]) -> Result<Polynomial, EnumerateError> {
    let to_poly = |v: &[i64]| v.iter().map(|&c| Polynomial::constant(c)).collect::<Vec<_>>();
    tau_via_rank_one_symbolic(g, &to_poly(a), &to_poly(b))
}

/// Rank-one route with `a = b = 1`.
pub fn tau_via_rank_one_default(g: &WeightedGraph) -> Result<Polynomial, EnumerateError> {
    let ones = vec![1; g.n()];
    tau_via_rank_one(g, &ones, &ones)
}

/// `det(L + a b^T) / ((Σ a)(Σ b))` for polynomial vectors.
pub fn tau_via_rank_one_symbolic(
    g: &WeightedGraph,
    a: &[Polynomial],
    b: &[Polynomial],
) -> Result<Polynomial, EnumerateError> {
    if a.len() != g.n() || b.len() != g.n() {
        return Err(EnumerateError::DimensionMismatch);
    }
    let sum_a: Polynomial = a.iter().sum();
    let sum_b: Polynomial = b.iter().sum();
    if sum_a.is_zero() || sum_b.is_zero() {
        return Err(EnumerateError::ZeroVectorSum);
    }
    let det = determinant(&rank_one_update(&weighted_laplacian(g), a, b)?)?;
    Ok(det.exact_div(&sum_a)?.exact_div(&sum_b)?)
}

/// Number of spanning trees counted with every variable set to 1.
///
/// Laplacian entries are specialized before taking the cofactor, which gives
/// the same value as specializing `τ` afterwards.
pub fn count_spanning_trees(g: &WeightedGraph) -> BigInt {
    let l = weighted_laplacian(g).map(|p| Polynomial::constant(p.evaluate_ones()));
    cofactor(&l, 0, 0)
        .expect("Laplacian is square and nonempty")
        .evaluate_ones()
}

/// Computes `τ` by one route. `family` is needed for the closed form and the
/// symbolic rank-one vectors.
pub fn enumerate(
    g: &WeightedGraph,
    route: Route,
    family: Option<&Family>,
) -> Result<EnumerationResult, EnumerateError> {
    let tau = match route {
        Route::Cofactor => tau_via_cofactor(g, 0, 0)?,
        Route::RankOne => tau_via_rank_one_default(g)?,
        Route::BruteForce => tau_brute_force(g)?,
        Route::RankOneSymbolic => {
            let (a, b) = match family {
                Some(f) => f.rank_one_vectors()?,
                None => (vec![Polynomial::one(); g.n()], vec![Polynomial::one(); g.n()]),
            };
            tau_via_rank_one_symbolic(g, &a, &b)?
        }
        Route::ClosedForm => match family {
            Some(f) => f.closed_form()?,
            None => return Err(EnumerateError::NoClosedForm),
        },
    };
    Ok(EnumerationResult {
        tau,
        route,
        source: family.map_or_else(|| format!("graph on {} vertices", g.n()), |f| f.to_string()),
    })
}
