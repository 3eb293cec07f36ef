use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// The two families of indeterminates used by the weightings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    X,
    Y,
}

/// An indeterminate `x<i>` or `y<i>` with a positive index.
///
/// Variables are totally ordered: every `x` precedes every `y`, and within a
/// kind the order follows the index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    kind: VarKind,
    index: u32,
}

impl Variable {
    pub const MAX_INDEX: u32 = (1 << 31) - 1;

    /// Returns `None` when `index` is zero or above [`Variable::MAX_INDEX`].
    pub fn try_new(kind: VarKind, index: u32) -> Option<Self> {
        (1..=Self::MAX_INDEX)
            .contains(&index)
            .then_some(Variable { kind, index })
    }

    /// # Panics
    /// Panics if `index` is zero or above [`Variable::MAX_INDEX`].
    pub fn new(kind: VarKind, index: u32) -> Self {
        Self::try_new(kind, index).expect("variable index out of range")
    }

    pub fn x(index: u32) -> Self {
        Self::new(VarKind::X, index)
    }

    pub fn y(index: u32) -> Self {
        Self::new(VarKind::Y, index)
    }

    pub fn kind(self) -> VarKind {
        self.kind
    }

    pub fn index(self) -> u32 {
        self.index
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::X => write!(f, "x{}", self.index),
            VarKind::Y => write!(f, "y{}", self.index),
        }
    }
}

impl Variable {
    /// Order-preserving 32-bit code: kind in the top bit, index below.
    fn code(self) -> u64 {
        let kind = match self.kind {
            VarKind::X => 0u64,
            VarKind::Y => 1u64 << 31,
        };
        kind | u64::from(self.index)
    }

    fn from_code(code: u64) -> Self {
        let kind = if code >> 31 & 1 == 1 { VarKind::Y } else { VarKind::X };
        Variable {
            kind,
            index: (code & 0x7fff_ffff) as u32,
        }
    }
}

fn pack(v: Variable, e: u32) -> u64 {
    v.code() << 32 | u64::from(e)
}

fn var_code(p: u64) -> u64 {
    p >> 32
}

fn exp(p: u64) -> u32 {
    p as u32
}

fn with_exp(p: u64, e: u32) -> u64 {
    (p & !0xffff_ffff) | u64::from(e)
}

/// A power product of variables, stored sparsely as packed
/// `(variable, exponent)` words sorted by variable with no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    powers: SmallVec<[u64; 6]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            powers: SmallVec::new(),
        }
    }

    pub fn var(v: Variable) -> Self {
        let mut powers = SmallVec::new();
        powers.push(pack(v, 1));
        Monomial { powers }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs, merging
    /// repeated variables and dropping zero exponents.
    pub fn from_powers<I: IntoIterator<Item = (Variable, u32)>>(powers: I) -> Self {
        let mut pairs: Vec<(Variable, u32)> = powers.into_iter().filter(|&(_, e)| e > 0).collect();
        pairs.sort_by_key(|&(v, _)| v);
        let mut merged: SmallVec<[u64; 6]> = SmallVec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match merged.last_mut() {
                Some(last) if var_code(*last) == v.code() => {
                    *last = with_exp(*last, exp(*last).checked_add(e).expect("exponent overflow"));
                }
                _ => merged.push(pack(v, e)),
            }
        }
        Monomial { powers: merged }
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    /// `(variable, exponent)` pairs in variable order.
    pub fn powers(&self) -> impl Iterator<Item = (Variable, u32)> + '_ {
        self.powers.iter().map(|&p| (Variable::from_code(var_code(p)), exp(p)))
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        let code = v.code();
        self.powers
            .binary_search_by_key(&code, |&p| var_code(p))
            .map(|i| exp(self.powers[i]))
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.powers.iter().map(|&p| u64::from(exp(p))).sum()
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.powers.iter().map(|&p| Variable::from_code(var_code(p)))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.powers, &other.powers);
        let mut out: SmallVec<[u64; 6]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match var_code(a[i]).cmp(&var_code(b[j])) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = exp(a[i]).checked_add(exp(b[j])).expect("exponent overflow");
                    out.push(with_exp(a[i], e));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { powers: out }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.powers.len() > self.powers.len() {
            return None;
        }
        let mut out: SmallVec<[u64; 6]> = SmallVec::with_capacity(self.powers.len());
        let mut rest = other.powers.iter().copied().peekable();
        for &p in &self.powers {
            match rest.peek() {
                Some(&q) if var_code(q) < var_code(p) => return None,
                Some(&q) if var_code(q) == var_code(p) => {
                    rest.next();
                    match exp(p).cmp(&exp(q)) {
                        Ordering::Less => return None,
                        Ordering::Equal => {}
                        Ordering::Greater => out.push(with_exp(p, exp(p) - exp(q))),
                    }
                }
                _ => out.push(p),
            }
        }
        if rest.next().is_some() {
            return None;
        }
        Some(Monomial { powers: out })
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            powers: self
                .powers
                .iter()
                .map(|&p| with_exp(p, exp(p).checked_mul(k).expect("exponent overflow")))
                .collect(),
        }
    }
}

/// Lexicographic order on dense exponent vectors `(x1, x2, ..., y1, y2, ...)`:
/// the first variable whose exponents differ decides, larger exponent wins.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.powers, &other.powers);
        for (&pa, &pb) in a.iter().zip(b.iter()) {
            if pa == pb {
                continue;
            }
            return match var_code(pa).cmp(&var_code(pb)) {
                // `self` has a positive exponent where `other` has zero
                Ordering::Less => Ordering::Greater,
                Ordering::Greater => Ordering::Less,
                Ordering::Equal => exp(pa).cmp(&exp(pb)),
            };
        }
        a.len().cmp(&b.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.powers().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: &[(Variable, u32)]) -> Monomial {
        Monomial::from_powers(p.iter().copied())
    }

    #[test]
    fn variable_order() {
        assert!(Variable::x(1) < Variable::x(2));
        assert!(Variable::x(40) < Variable::y(1));
        assert!(Variable::y(2) < Variable::y(10));
        assert!(Variable::try_new(VarKind::X, 0).is_none());
        assert!(Variable::try_new(VarKind::Y, 1 << 31).is_none());
        for v in [Variable::x(1), Variable::y(7), Variable::x(Variable::MAX_INDEX)] {
            assert_eq!(Variable::from_code(v.code()), v);
        }
    }

    #[test]
    fn lex_order_prefers_earlier_variables() {
        let x1 = Variable::x(1);
        let x2 = Variable::x(2);
        let x3 = Variable::x(3);
        let a = m(&[(x1, 2), (x2, 1), (x3, 1)]);
        let b = m(&[(x1, 1), (x2, 2), (x3, 1)]);
        let c = m(&[(x1, 1), (x2, 1), (x3, 2)]);
        assert!(a > b && b > c);
        assert!(m(&[(x2, 5)]) < m(&[(x1, 1)]));
        assert!(Monomial::one() < m(&[(Variable::y(9), 1)]));
        assert!(m(&[(x1, 1)]) < m(&[(x1, 1), (x3, 1)]));
    }

    #[test]
    fn mul_and_div() {
        let x1 = Variable::x(1);
        let y2 = Variable::y(2);
        let a = m(&[(x1, 2)]);
        let b = m(&[(x1, 1), (y2, 3)]);
        let p = a.mul(&b);
        assert_eq!(p, m(&[(x1, 3), (y2, 3)]));
        assert_eq!(p.checked_div(&b), Some(a.clone()));
        assert_eq!(a.checked_div(&b), None);
        assert_eq!(p.to_string(), "x1^3*y2^3");
        assert_eq!(p.exponent(y2), 3);
        assert_eq!(p.exponent(Variable::y(1)), 0);
    }

    #[test]
    fn from_powers_merges_and_drops_zeros() {
        let x1 = Variable::x(1);
        let mono = m(&[(x1, 1), (Variable::y(1), 0), (x1, 2)]);
        assert_eq!(mono.powers().collect::<Vec<_>>(), vec![(x1, 3)]);
    }
}
