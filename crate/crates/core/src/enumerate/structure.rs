//! Block reductions of `L + y x^T` whose triangular shape yields the Ferrers
//! and threshold closed forms.

use crate::graphs::{ferrers_graph, special_vertex, threshold_graph, Partition, ThresholdSpec};
use crate::linalg::{rank_one_update, schur_complement, weighted_laplacian, BlockPartition, PolyMatrix, RatMatrix};
use crate::mpoly::{Polynomial, RationalFunction};

use super::{EnumerateError, Family};

fn updated_laplacian(family: &Family) -> Result<PolyMatrix, EnumerateError> {
    let g = family.graph()?;
    let (a, b) = family.rank_one_vectors()?;
    Ok(rank_one_update(&weighted_laplacian(&g), &a, &b)?)
}

/// `S = D_R - B D_C^{-1} B^op`, the Schur complement of the column block in
/// `L + y x^T` with rows `r_1..r_m` first.
pub fn ferrers_schur_complement(lambda: &Partition) -> Result<RatMatrix, EnumerateError> {
    let m = updated_laplacian(&Family::Ferrers(lambda.clone()))?;
    Ok(schur_complement(&m, BlockPartition::new(lambda.len(), m.rows())?)?)
}

/// Diagonal of `D_R`: `x_i (y_1 + ... + y_{λ_i})`.
pub fn ferrers_schur_diagonal(lambda: &Partition) -> Vec<Polynomial> {
    let g = ferrers_graph(lambda);
    (0..lambda.len()).map(|i| g.weighted_degree(i)).collect()
}

/// `A' - B D^{-1} B^op` for the split at the special vertex `t`, or `A'`
/// itself when `t = n`.
pub fn threshold_reduced_matrix(spec: &ThresholdSpec) -> Result<RatMatrix, EnumerateError> {
    if !spec.is_connected() {
        return Err(EnumerateError::Disconnected);
    }
    let m = updated_laplacian(&Family::Threshold(spec.clone()))?;
    let t = special_vertex(&threshold_graph(spec))?;
    if t == m.rows() {
        return Ok(m.map(|p| RationalFunction::from_polynomial(p.clone())));
    }
    Ok(schur_complement(&m, BlockPartition::new(t, m.rows())?)?)
}

/// `f_1, ..., f_t`.
pub fn threshold_reduced_diagonal(spec: &ThresholdSpec) -> Result<Vec<Polynomial>, EnumerateError> {
    let g = threshold_graph(spec);
    let t = special_vertex(&g)?;
    (1..=t).map(|j| super::threshold_f(&g, j)).collect()
}

/// Whether `s` is upper triangular with exactly the given diagonal.
pub fn is_triangular_with_diagonal(s: &RatMatrix, diagonal: &[Polynomial]) -> bool {
    s.is_upper_triangular()
        && s.rows() == diagonal.len()
        && s.diagonal()
            .iter()
            .zip(diagonal)
            .all(|(d, e)| *d == RationalFunction::from_polynomial(e.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ferrers_two_one() {
        let lambda = Partition::new(vec![2, 1]).unwrap();
        let s = ferrers_schur_complement(&lambda).unwrap();
        let x = Polynomial::x;
        let y = Polynomial::y;
        assert_eq!(ferrers_schur_diagonal(&lambda), vec![x(1) * (y(1) + y(2)), x(2) * y(1)]);
        assert!(is_triangular_with_diagonal(&s, &ferrers_schur_diagonal(&lambda)));
        // the only nonzero off-diagonal entry comes from c_2 ∈ N(r_1) \ N(r_2)
        assert!(!s.get(0, 1).is_zero());
    }

    #[test]
    fn threshold_complete_is_not_split() {
        let spec: ThresholdSpec = "ddd".parse().unwrap();
        let s = threshold_reduced_matrix(&spec).unwrap();
        assert_eq!(s.rows(), 4);
        assert!(is_triangular_with_diagonal(
            &s,
            &threshold_reduced_diagonal(&spec).unwrap()
        ));
        assert_eq!(
            threshold_reduced_matrix(&"di".parse().unwrap()),
            Err(EnumerateError::Disconnected)
        );
    }
}
