//! Matrices over the polynomial ring and its fraction field.
//!
//! Determinants use division-free minor expansion for small symbolic matrices
//! and single-step fraction-free (Bareiss) elimination otherwise, so every
//! intermediate value is a polynomial and every division is exact. Schur
//! complements live in the unreduced fraction field.

mod matrix;

pub use matrix::{Matrix, PolyMatrix, RatMatrix, RingElement};

use thiserror::Error;

use crate::graphs::WeightedGraph;
use crate::mpoly::{PolyError, Polynomial, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("index ({row}, {col}) out of range for a {size}x{size} matrix")]
    IndexOutOfRange { row: usize, col: usize, size: usize },
    #[error("block split {split} invalid for dimension {dim}")]
    InvalidSplit { split: usize, dim: usize },
    #[error("lower-right block is singular")]
    SingularBlock,
    #[error("matrix is singular")]
    Singular,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn require_square<T: RingElement>(m: &Matrix<T>) -> Result<usize, LinalgError> {
    if m.is_square() {
        Ok(m.rows())
    } else {
        Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

/// Separates the first `split` row/column indices from the rest, giving
/// blocks `A` (top-left, square), `B`, `C` and `D` (bottom-right, square).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockPartition {
    split: usize,
}

impl BlockPartition {
    pub fn new(split: usize, dim: usize) -> Result<Self, LinalgError> {
        if split == 0 || split >= dim {
            return Err(LinalgError::InvalidSplit { split, dim });
        }
        Ok(BlockPartition { split })
    }

    pub fn split(self) -> usize {
        self.split
    }

    /// `(A, B, C, D)`.
    pub fn blocks<T: RingElement>(self, m: &Matrix<T>) -> (Matrix<T>, Matrix<T>, Matrix<T>, Matrix<T>) {
        let (s, n) = (self.split, m.rows());
        (
            m.block(0, s, 0, s),
            m.block(0, s, s, n),
            m.block(s, n, 0, s),
            m.block(s, n, s, n),
        )
    }
}

/// `L(G;ω)`: weighted degrees on the diagonal, `-ω(i, j)` elsewhere.
pub fn weighted_laplacian(g: &WeightedGraph) -> PolyMatrix {
    let n = g.n();
    let mut l = PolyMatrix::zeros(n, n);
    for (i, j, w) in g.edges() {
        let neg = -w;
        l.set(i, j, neg.clone());
        l.set(j, i, neg);
        let di = l.get(i, i) + w;
        l.set(i, i, di);
        let dj = l.get(j, j) + w;
        l.set(j, j, dj);
    }
    l
}

/// `M + a b^T`.
pub fn rank_one_update(m: &PolyMatrix, a: &[Polynomial], b: &[Polynomial]) -> Result<PolyMatrix, LinalgError> {
    if a.len() != m.rows() || b.len() != m.cols() {
        return Err(LinalgError::DimensionMismatch);
    }
    Ok(PolyMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        if a[i].is_zero() || b[j].is_zero() {
            m.get(i, j).clone()
        } else {
            m.get(i, j) + &(&a[i] * &b[j])
        }
    }))
}

/// Symbolic matrices up to this size use minor expansion instead of
/// elimination.
const EXPANSION_MAX: usize = 10;

/// Exact determinant. Small symbolic matrices go through
/// [`minor_expansion_determinant`], everything else through
/// [`bareiss_determinant`].
pub fn determinant(m: &PolyMatrix) -> Result<Polynomial, LinalgError> {
    let n = require_square(m)?;
    let symbolic = m.entries().iter().any(|p| p.as_constant().is_none());
    if symbolic && n <= EXPANSION_MAX {
        minor_expansion_determinant(m)
    } else {
        bareiss_determinant(m)
    }
}

/// Division-free Laplace expansion along rows, sharing the minors on each
/// set of leading columns.
pub fn minor_expansion_determinant(m: &PolyMatrix) -> Result<Polynomial, LinalgError> {
    let n = require_square(m)?;
    if n >= usize::BITS as usize - 1 {
        return Err(LinalgError::DimensionMismatch);
    }
    // minors[S] = det of rows 0..|S| restricted to the columns in S
    let mut minors: Vec<Polynomial> = vec![Polynomial::zero(); 1 << n];
    minors[0] = Polynomial::one();
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for set in 0usize..1 << n {
        by_size[set.count_ones() as usize].push(set);
    }
    for k in 1..=n {
        let row = k - 1;
        for &set in &by_size[k] {
            let mut acc = Polynomial::zero();
            for c in (0..n).filter(|&c| set >> c & 1 == 1) {
                let entry = m.get(row, c);
                let rest = &minors[set & !(1 << c)];
                if entry.is_zero() || rest.is_zero() {
                    continue;
                }
                let term = rest * entry;
                // sign of placing this row at column c after the earlier rows
                if (set >> (c + 1)).count_ones() % 2 == 1 {
                    acc -= &term;
                } else {
                    acc += &term;
                }
            }
            minors[set] = acc;
        }
        for &set in &by_size[k - 1] {
            minors[set] = Polynomial::zero();
        }
    }
    Ok(std::mem::take(&mut minors[(1 << n) - 1]))
}

/// Fraction-free Gaussian elimination.
///
/// Pivots are the first nonzero entry at or below the diagonal in the
/// current column; a column with none gives zero immediately.
pub fn bareiss_determinant(m: &PolyMatrix) -> Result<Polynomial, LinalgError> {
    let n = require_square(m)?;
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let mut work = m.clone();
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !work.get(r, k).is_zero()) else {
            return Ok(Polynomial::zero());
        };
        if p != k {
            work.swap_rows(p, k);
            negate = !negate;
        }
        let pivot = work.get(k, k).clone();
        for i in k + 1..n {
            let lead = work.get(i, k).clone();
            for j in k + 1..n {
                let mut v = work.get(i, j) * &pivot;
                let kj = work.get(k, j);
                if !lead.is_zero() && !kj.is_zero() {
                    v -= &(&lead * kj);
                }
                // Sylvester's identity makes this division exact
                let v = if prev.is_one() { v } else { v.exact_div(&prev)? };
                work.set(i, j, v);
            }
            work.set(i, k, Polynomial::zero());
        }
        prev = pivot;
    }
    let det = work.get(n - 1, n - 1).clone();
    Ok(if negate { -det } else { det })
}

/// `(-1)^(i+j) det(M_{i,j})` with row `i` and column `j` removed (0-based).
pub fn cofactor(m: &PolyMatrix, i: usize, j: usize) -> Result<Polynomial, LinalgError> {
    let n = require_square(m)?;
    if i >= n || j >= n {
        return Err(LinalgError::IndexOutOfRange {
            row: i,
            col: j,
            size: n,
        });
    }
    let minor = determinant(&m.minor_matrix(i, j))?;
    Ok(if (i + j) % 2 == 1 { -minor } else { minor })
}

/// Transpose of the cofactor matrix, computed entry by entry.
pub fn adjugate(m: &PolyMatrix) -> Result<PolyMatrix, LinalgError> {
    let n = require_square(m)?;
    let mut adj = PolyMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            adj.set(i, j, cofactor(m, j, i)?);
        }
    }
    Ok(adj)
}

/// `M/D = A - B D^{-1} C` for the block partition `p`.
///
/// `D^{-1}` is taken as `adj(D) / det(D)`, so every entry is computed as the
/// single fraction `(det(D) A - B adj(D) C)(i, j) / det(D)`.
pub fn schur_complement(m: &PolyMatrix, p: BlockPartition) -> Result<RatMatrix, LinalgError> {
    let n = require_square(m)?;
    if p.split >= n {
        return Err(LinalgError::InvalidSplit { split: p.split, dim: n });
    }
    let (a, b, c, d) = p.blocks(m);
    let det_d = determinant(&d)?;
    if det_d.is_zero() {
        return Err(LinalgError::SingularBlock);
    }
    let correction = b.mul(&adjugate(&d)?)?.mul(&c)?;
    let numer = a.scale(&det_d).sub(&correction)?;
    let mut out = Vec::with_capacity(numer.rows());
    for i in 0..numer.rows() {
        let row = numer
            .row(i)
            .iter()
            .map(|e| RationalFunction::new(e.clone(), det_d.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(row);
    }
    RatMatrix::from_rows(out)
}

/// Determinant over the fraction field: each row is scaled by the product of
/// its distinct denominators, reducing to a polynomial determinant.
pub fn rat_determinant(m: &RatMatrix) -> Result<RationalFunction, LinalgError> {
    let n = require_square(m)?;
    let mut scaled = PolyMatrix::zeros(n, n);
    let mut total_scale = Polynomial::one();
    for i in 0..n {
        let mut dens: Vec<&Polynomial> = Vec::new();
        for e in m.row(i) {
            if !e.is_zero() && !dens.contains(&e.denominator()) {
                dens.push(e.denominator());
            }
        }
        let row_scale: Polynomial = dens.iter().copied().product();
        for (j, e) in m.row(i).iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            let cofactor = row_scale.exact_div(e.denominator())?;
            scaled.set(i, j, e.numerator() * &cofactor);
        }
        total_scale = &total_scale * &row_scale;
    }
    Ok(RationalFunction::new(determinant(&scaled)?, total_scale)?)
}

/// Whether `det(M) = det(D) det(M/D)`, compared by cross-multiplication.
pub fn schur_determinant_identity_check(m: &PolyMatrix, p: BlockPartition) -> Result<bool, LinalgError> {
    let s = schur_complement(m, p)?;
    let (_, _, _, d) = p.blocks(m);
    let lhs = RationalFunction::from_polynomial(determinant(m)?);
    let rhs = &RationalFunction::from_polynomial(determinant(&d)?) * &rat_determinant(&s)?;
    Ok(lhs == rhs)
}

fn bilinear(b: &[Polynomial], m: &PolyMatrix, a: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (i, bi) in b.iter().enumerate() {
        if bi.is_zero() {
            continue;
        }
        let row: Polynomial = m.row(i).iter().zip(a).map(|(mij, aj)| mij * aj).sum();
        acc += bi * &row;
    }
    acc
}

/// Whether `det(M + a b^T) = det(M) + b^T adj(M) a`.
pub fn matrix_determinant_lemma_check(m: &PolyMatrix, a: &[Polynomial], b: &[Polynomial]) -> Result<bool, LinalgError> {
    require_square(m)?;
    let lhs = determinant(&rank_one_update(m, a, b)?)?;
    let rhs = determinant(m)? + bilinear(b, &adjugate(m)?, a);
    Ok(lhs == rhs)
}

/// Whether `det(M + a b^T) = det(M) (1 + b^T M^{-1} a)` over the fraction
/// field, for invertible `M`.
pub fn matrix_determinant_lemma_inverse_check(
    m: &PolyMatrix,
    a: &[Polynomial],
    b: &[Polynomial],
) -> Result<bool, LinalgError> {
    require_square(m)?;
    let lhs = determinant(&rank_one_update(m, a, b)?)?;
    let det = determinant(m)?;
    if det.is_zero() {
        return Err(LinalgError::Singular);
    }
    let det_rf = RationalFunction::from_polynomial(det.clone());
    let adj = adjugate(m)?;
    let mut quad = RationalFunction::zero();
    for (i, bi) in b.iter().enumerate() {
        for (j, aj) in a.iter().enumerate() {
            // (M^{-1})(i, j) = adj(M)(i, j) / det(M)
            let inv_ij = RationalFunction::new(adj.get(i, j).clone(), det.clone())?;
            let term = RationalFunction::from_polynomial(bi * aj);
            quad = &quad + &(&inv_ij * &term);
        }
    }
    let rhs = &det_rf * &(&RationalFunction::one() + &quad);
    Ok(RationalFunction::from_polynomial(lhs) == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, WeightedGraph};

    fn x(i: u32) -> Polynomial {
        Polynomial::x(i)
    }

    fn c(v: i64) -> Polynomial {
        Polynomial::constant(v)
    }

    fn symbolic_2x2() -> PolyMatrix {
        PolyMatrix::from_rows(vec![vec![x(1), x(2)], vec![x(3), x(4)]]).unwrap()
    }

    fn kn_vector(n: u32) -> Vec<Polynomial> {
        (1..=n).map(x).collect()
    }

    fn cayley_prufer(n: u32) -> Polynomial {
        let prod: Polynomial = (1..=n).map(x).product();
        let sum: Polynomial = (1..=n).map(x).sum();
        prod * sum.pow(n - 2)
    }

    #[test]
    fn laplacian_of_single_edge() {
        let l = weighted_laplacian(&complete_graph(2).unwrap());
        let w = x(1) * x(2);
        let expected = PolyMatrix::from_rows(vec![vec![w.clone(), -&w], vec![-&w, w]]).unwrap();
        assert_eq!(l, expected);
    }

    #[test]
    fn laplacian_properties() {
        let l = weighted_laplacian(&complete_graph(3).unwrap());
        assert_eq!(l.get(0, 0), &(x(1) * x(2) + x(1) * x(3)));
        for i in 0..3 {
            assert!(l.row(i).iter().sum::<Polynomial>().is_zero());
        }
        let empty = weighted_laplacian(&WeightedGraph::empty(4).unwrap());
        assert_eq!(empty, PolyMatrix::zeros(4, 4));
    }

    #[test]
    fn rank_one_update_of_complete_laplacian_is_diagonal() {
        let l = weighted_laplacian(&complete_graph(3).unwrap());
        let v = kn_vector(3);
        let updated = rank_one_update(&l, &v, &v).unwrap();
        let sum = x(1) + x(2) + x(3);
        let expected = PolyMatrix::from_fn(3, 3, |i, j| {
            if i == j {
                x(i as u32 + 1) * &sum
            } else {
                Polynomial::zero()
            }
        });
        assert_eq!(updated, expected);
        assert_eq!(determinant(&updated).unwrap(), x(1) * x(2) * x(3) * sum.pow(3));
    }

    #[test]
    fn rank_one_update_edge_cases() {
        let ones = vec![c(1); 3];
        let all_ones = rank_one_update(&PolyMatrix::zeros(3, 3), &ones, &ones).unwrap();
        assert_eq!(all_ones, PolyMatrix::from_fn(3, 3, |_, _| c(1)));
        let m = symbolic_2x2();
        let zero = vec![Polynomial::zero(); 2];
        assert_eq!(rank_one_update(&m, &zero, &[c(1), c(2)]).unwrap(), m);
        assert_eq!(rank_one_update(&m, &ones, &ones), Err(LinalgError::DimensionMismatch));
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(determinant(&symbolic_2x2()).unwrap(), x(1) * x(4) - x(2) * x(3));
        assert_eq!(determinant(&PolyMatrix::identity(5)).unwrap(), Polynomial::one());
        assert!(determinant(&PolyMatrix::zeros(0, 0)).unwrap().is_one());
        let rect = PolyMatrix::zeros(2, 3);
        assert_eq!(determinant(&rect), Err(LinalgError::NotSquare { rows: 2, cols: 3 }));
        // needs a row swap
        let swap = PolyMatrix::from_integers(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(determinant(&swap).unwrap(), c(-1));
    }

    #[test]
    fn cofactors() {
        let l2 = weighted_laplacian(&complete_graph(2).unwrap());
        assert_eq!(cofactor(&l2, 0, 0).unwrap(), x(1) * x(2));
        let l3 = weighted_laplacian(&complete_graph(3).unwrap());
        assert_eq!(cofactor(&l3, 0, 1).unwrap(), cayley_prufer(3));
        let one_by_one = PolyMatrix::from_rows(vec![vec![x(7)]]).unwrap();
        assert!(cofactor(&one_by_one, 0, 0).unwrap().is_one());
        assert_eq!(
            cofactor(&l3, 3, 0),
            Err(LinalgError::IndexOutOfRange {
                row: 3,
                col: 0,
                size: 3
            })
        );
    }

    #[test]
    fn adjugates() {
        assert_eq!(adjugate(&PolyMatrix::identity(4)).unwrap(), PolyMatrix::identity(4));
        let expected = PolyMatrix::from_rows(vec![vec![x(4), -x(2)], vec![-x(3), x(1)]]).unwrap();
        assert_eq!(adjugate(&symbolic_2x2()).unwrap(), expected);
        let l3 = weighted_laplacian(&complete_graph(3).unwrap());
        let tau = cayley_prufer(3);
        assert_eq!(adjugate(&l3).unwrap(), PolyMatrix::from_fn(3, 3, |_, _| tau.clone()));
    }

    #[test]
    fn schur_of_2x2() {
        let m = symbolic_2x2();
        let s = schur_complement(&m, BlockPartition::new(1, 2).unwrap()).unwrap();
        let expected = RationalFunction::new(x(1) * x(4) - x(2) * x(3), x(4)).unwrap();
        assert_eq!(s.get(0, 0), &expected);
        assert!(schur_determinant_identity_check(&m, BlockPartition::new(1, 2).unwrap()).unwrap());
    }

    #[test]
    fn schur_of_block_diagonal_is_a() {
        let m = PolyMatrix::from_rows(vec![
            vec![x(1), x(2), c(0)],
            vec![x(3), x(1), c(0)],
            vec![c(0), c(0), x(4) + c(1)],
        ])
        .unwrap();
        let s = schur_complement(&m, BlockPartition::new(2, 3).unwrap()).unwrap();
        assert_eq!(s, m.block(0, 2, 0, 2).to_rational());
        assert!(s.entries().iter().all(|e| e.denominator().is_one()));
    }

    #[test]
    fn singular_block_rejected() {
        let m = PolyMatrix::from_integers(&[vec![1, 2, 3, 4], vec![5, 6, 7, 8], vec![1, 0, 1, 2], vec![0, 1, 2, 4]])
            .unwrap();
        let p = BlockPartition::new(2, 4).unwrap();
        assert_eq!(schur_complement(&m, p), Err(LinalgError::SingularBlock));
        assert_eq!(schur_determinant_identity_check(&m, p), Err(LinalgError::SingularBlock));
        assert!(BlockPartition::new(0, 4).is_err());
        assert!(BlockPartition::new(4, 4).is_err());
    }

    #[test]
    fn lemma_2_on_integer_matrix() {
        let m = PolyMatrix::from_integers(&[
            vec![2, -1, 0, 3],
            vec![1, 4, -2, 0],
            vec![0, 5, 3, 1],
            vec![-1, 2, 1, 2],
        ])
        .unwrap();
        assert!(schur_determinant_identity_check(&m, BlockPartition::new(2, 4).unwrap()).unwrap());
        assert!(schur_determinant_identity_check(&m, BlockPartition::new(1, 4).unwrap()).unwrap());
        assert!(schur_determinant_identity_check(&m, BlockPartition::new(3, 4).unwrap()).unwrap());
    }

    #[test]
    fn matrix_determinant_lemma() {
        let m = PolyMatrix::from_integers(&[vec![2, 1, 0], vec![-1, 3, 4], vec![5, 0, 1]]).unwrap();
        let a = [c(1), c(-2), c(3)];
        let b = [c(4), c(0), c(-1)];
        assert!(matrix_determinant_lemma_check(&m, &a, &b).unwrap());
        let zero = vec![Polynomial::zero(); 3];
        assert!(matrix_determinant_lemma_check(&m, &zero, &b).unwrap());
        assert!(matrix_determinant_lemma_inverse_check(&m, &a, &b).unwrap());
        assert_eq!(
            matrix_determinant_lemma_check(&m, &a[..2], &b),
            Err(LinalgError::DimensionMismatch)
        );
    }

    #[test]
    fn matrix_determinant_lemma_inverse_form_2x2() {
        let m = symbolic_2x2();
        let a = [x(5), c(1)];
        let b = [c(2), x(6)];
        assert!(matrix_determinant_lemma_check(&m, &a, &b).unwrap());
        assert!(matrix_determinant_lemma_inverse_check(&m, &a, &b).unwrap());
        let singular = PolyMatrix::from_integers(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(
            matrix_determinant_lemma_inverse_check(&singular, &a, &b),
            Err(LinalgError::Singular)
        );
    }

    #[test]
    fn rational_determinant() {
        let m = RatMatrix::from_rows(vec![
            vec![RationalFunction::new(x(1), x(2)).unwrap(), RationalFunction::one()],
            vec![RationalFunction::one(), RationalFunction::new(x(2), x(1)).unwrap()],
        ])
        .unwrap();
        assert!(rat_determinant(&m).unwrap().is_zero());
    }
}
