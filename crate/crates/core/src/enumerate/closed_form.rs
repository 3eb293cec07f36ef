//! Closed-form enumerators for the four graph families and their
//! all-ones specializations.

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::graphs::{special_vertex, MultipartiteSpec, Partition, WeightedGraph};
use crate::mpoly::Polynomial;

use super::EnumerateError;

fn x(i: usize) -> Polynomial {
    Polynomial::x(u32::try_from(i).expect("index fits in u32"))
}

fn y(i: usize) -> Polynomial {
    Polynomial::y(u32::try_from(i).expect("index fits in u32"))
}

/// `x_lo + ... + x_hi` (1-based, empty when `lo > hi`).
fn x_sum(lo: usize, hi: usize) -> Polynomial {
    (lo..=hi).map(x).sum()
}

fn y_sum(lo: usize, hi: usize) -> Polynomial {
    (lo..=hi).map(y).sum()
}

fn exponent(k: usize) -> u32 {
    u32::try_from(k).expect("exponent fits in u32")
}

/// `x1 ... xn (x1 + ... + xn)^(n-2)`.
pub fn cayley_prufer_formula(n: usize) -> Result<Polynomial, EnumerateError> {
    if n < 2 {
        return Err(EnumerateError::TooSmall(n));
    }
    let prod: Polynomial = (1..=n).map(x).product();
    Ok(prod * x_sum(1, n).pow(exponent(n - 2)))
}

/// `(Π x_i) · Π_ℓ (Σ_{j ∉ V_ℓ} x_j)^(n_ℓ - 1) · (Σ x_i)^(k-2)`.
pub fn multipartite_formula(spec: &MultipartiteSpec) -> Polynomial {
    let n = spec.total();
    let part = spec.part_of_vertex();
    let prod: Polynomial = (1..=n).map(x).product();
    let across: Polynomial = spec
        .part_sizes()
        .iter()
        .enumerate()
        .map(|(l, &size)| {
            let outside: Polynomial = (1..=n).filter(|&j| part[j - 1] != l).map(x).sum();
            outside.pow(exponent(size - 1))
        })
        .product();
    prod * across * x_sum(1, n).pow(exponent(spec.k() - 2))
}

/// `(Π x_i)(Π y_j) · Π_{i>=2} (y_1 + ... + y_{λ_i}) · Π_{j>=2} (x_1 + ... + x_{λ'_j})`.
pub fn ferrers_formula(lambda: &Partition) -> Polynomial {
    let m = lambda.len();
    let n = lambda.largest();
    let conj = lambda.conjugate();
    let xs: Polynomial = (1..=m).map(x).product();
    let ys: Polynomial = (1..=n).map(y).product();
    let rows: Polynomial = lambda.parts()[1..].iter().map(|&l| y_sum(1, l)).product();
    let cols: Polynomial = conj.parts()[1..].iter().map(|&l| x_sum(1, l)).product();
    xs * ys * rows * cols
}

/// Validated inputs of the threshold closed form: 1-based degrees and the
/// special index `t`.
struct ThresholdData {
    degrees: Vec<usize>,
    t: usize,
}

impl ThresholdData {
    fn new(g: &WeightedGraph) -> Result<Self, EnumerateError> {
        let t = special_vertex(g)?;
        let n = g.n();
        // for threshold-ordered graphs v1 ~ vn is equivalent to connectivity
        if n > 1 && !g.has_edge(0, n - 1) {
            return Err(EnumerateError::Disconnected);
        }
        Ok(ThresholdData {
            degrees: g.degree_sequence(),
            t,
        })
    }

    fn delta(&self, j: usize) -> usize {
        self.degrees[j - 1]
    }
}

/// `f_j = y_j Σ_{i<=j} x_i + x_j Σ_{k=j+1}^{1+δ_j} y_k` for 1-based `j`.
pub fn threshold_f(g: &WeightedGraph, j: usize) -> Result<Polynomial, EnumerateError> {
    let data = ThresholdData::new(g)?;
    Ok(f_term(&data, j))
}

/// `g_j = x_1 + ... + x_{δ_j}` for 1-based `j`.
pub fn threshold_g(g: &WeightedGraph, j: usize) -> Result<Polynomial, EnumerateError> {
    let data = ThresholdData::new(g)?;
    Ok(g_term(&data, j))
}

fn f_term(data: &ThresholdData, j: usize) -> Polynomial {
    y(j) * x_sum(1, j) + x(j) * y_sum(j + 1, 1 + data.delta(j))
}

fn g_term(data: &ThresholdData, j: usize) -> Polynomial {
    x_sum(1, data.delta(j))
}

/// `x_1 (Π_{i=t}^n y_i)(Π_{j=2}^{t-1} f_j)(Π_{j=t+1}^n g_j)` for a connected
/// threshold-ordered graph weighted by `x_min(i,j) y_max(i,j)`.
pub fn threshold_formula(g: &WeightedGraph) -> Result<Polynomial, EnumerateError> {
    let data = ThresholdData::new(g)?;
    let n = g.n();
    if n == 1 {
        return Ok(Polynomial::one());
    }
    let t = data.t;
    let ys: Polynomial = (t..=n).map(y).product();
    let fs: Polynomial = (2..t).map(|j| f_term(&data, j)).product();
    let gs: Polynomial = (t + 1..=n).map(|j| g_term(&data, j)).product();
    Ok(x(1) * ys * fs * gs)
}

/// Tree count of `K_{n1,...,nk}`: `n^(k-2) Π (n - n_ℓ)^(n_ℓ - 1)`.
pub fn lewis_count(spec: &MultipartiteSpec) -> BigInt {
    let n = BigInt::from(spec.total());
    let mut count: BigInt = Pow::pow(&n, exponent(spec.k() - 2));
    for &size in spec.part_sizes() {
        count *= Pow::pow(BigInt::from(spec.total() - size), exponent(size - 1));
    }
    count
}

/// Tree count of a connected threshold graph:
/// `Π_{i=2}^{t-1} (δ_i + 1) · Π_{i=t+1}^n δ_i`.
pub fn merris_count(g: &WeightedGraph) -> Result<BigInt, EnumerateError> {
    let data = ThresholdData::new(g)?;
    let n = g.n();
    let mut count = BigInt::one();
    for i in 2..data.t {
        count *= data.delta(i) + 1;
    }
    for i in data.t + 1..=n {
        count *= data.delta(i);
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, threshold_graph, CreationStep, ThresholdSpec};

    #[test]
    fn cayley_prufer_small() {
        assert_eq!(cayley_prufer_formula(2).unwrap(), x(1) * x(2));
        assert_eq!(
            cayley_prufer_formula(3).unwrap(),
            x(1) * x(2) * x(3) * (x(1) + x(2) + x(3))
        );
        assert_eq!(cayley_prufer_formula(8).unwrap().evaluate_ones(), BigInt::from(262_144));
        assert_eq!(cayley_prufer_formula(1), Err(EnumerateError::TooSmall(1)));
    }

    #[test]
    fn multipartite_small() {
        let spec = |v: Vec<usize>| MultipartiteSpec::new(v).unwrap();
        assert_eq!(multipartite_formula(&spec(vec![1, 1])), x(1) * x(2));
        assert_eq!(multipartite_formula(&spec(vec![2, 2])).evaluate_ones(), BigInt::from(4));
        assert_eq!(
            multipartite_formula(&spec(vec![1, 1, 1])),
            cayley_prufer_formula(3).unwrap()
        );
        assert_eq!(lewis_count(&spec(vec![2, 2])), BigInt::from(4));
        assert_eq!(lewis_count(&spec(vec![2, 2, 2])), BigInt::from(384));
    }

    #[test]
    fn ferrers_small() {
        let p = |v: Vec<usize>| Partition::new(v).unwrap();
        assert_eq!(ferrers_formula(&p(vec![1])), x(1) * y(1));
        assert_eq!(ferrers_formula(&p(vec![2, 1])), x(1).pow(2) * x(2) * y(1).pow(2) * y(2));
    }

    #[test]
    fn threshold_single_edge() {
        let k2 = threshold_graph(&"d".parse().unwrap());
        assert_eq!(threshold_formula(&k2).unwrap(), x(1) * y(2));
    }

    #[test]
    fn threshold_complete_recovers_cayley_prufer() {
        for n in 2..=6 {
            let g = threshold_graph(&ThresholdSpec::new(vec![CreationStep::Dominating; n - 1]));
            let collapsed = threshold_formula(&g).unwrap().substitute(|v| Polynomial::x(v.index()));
            assert_eq!(collapsed, cayley_prufer_formula(n).unwrap());
            assert_eq!(merris_count(&g).unwrap(), BigInt::from(n).pow(exponent(n - 2)));
            // f_i collapses to x_i (x_1 + ... + x_n)
            for i in 1..=n {
                let f = threshold_f(&g, i).unwrap().substitute(|v| Polynomial::x(v.index()));
                assert_eq!(f, x(i) * x_sum(1, n));
            }
        }
    }

    #[test]
    fn threshold_figure_graph() {
        let g = threshold_graph(&"ididd".parse().unwrap());
        assert_eq!(merris_count(&g).unwrap(), BigInt::from(180));
        assert_eq!(threshold_formula(&g).unwrap().evaluate_ones(), BigInt::from(180));
        assert_eq!(threshold_g(&g, 6).unwrap(), x(1) + x(2));
    }

    #[test]
    fn threshold_errors() {
        let disconnected = threshold_graph(&"di".parse().unwrap());
        assert_eq!(threshold_formula(&disconnected), Err(EnumerateError::Disconnected));
        assert_eq!(merris_count(&disconnected), Err(EnumerateError::Disconnected));
        let k3 = complete_graph(3).unwrap();
        assert!(threshold_formula(&k3).is_ok());
        let path = WeightedGraph::from_edge_list(3, [(0, 1, Polynomial::one()), (1, 2, Polynomial::one())]).unwrap();
        assert!(matches!(
            threshold_formula(&path),
            Err(EnumerateError::Graph(crate::graphs::GraphError::NotThresholdOrdered))
        ));
    }
}
