use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, PolyError, Variable};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients.
///
/// Terms are kept sorted strictly descending in monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, BigInt)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: Variable) -> Self {
        Self::term(Monomial::var(v), 1)
    }

    pub fn x(i: u32) -> Self {
        Self::var(Variable::x(i))
    }

    pub fn y(i: u32) -> Self {
        Self::var(Variable::y(i))
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Canonicalizes an arbitrary list of terms: like monomials are merged,
    /// zero coefficients dropped, and the result sorted.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Self {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: BTreeMap<Monomial, BigInt>) -> Self {
        Polynomial {
            terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, BigInt)> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && c.is_one())
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// Largest total degree of any term; zero for the zero polynomial.
    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    /// Every variable occurring in some term, ascending.
    pub fn variables(&self) -> Vec<Variable> {
        let mut vars: Vec<Variable> = self.terms.iter().flat_map(|(m, _)| m.variables()).collect();
        vars.sort();
        vars.dedup();
        vars
    }

    /// Nonnegative gcd of all coefficients.
    pub fn content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, k: &BigInt) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `self / q` in the integer-coefficient polynomial ring.
    ///
    /// Works by repeatedly cancelling the leading term of the remainder. When
    /// `q` divides `self` this always succeeds; otherwise some leading term is
    /// not divisible and `NotDivisible` is returned.
    pub fn exact_div(&self, q: &Polynomial) -> Result<Polynomial, PolyError> {
        let (lead_m, lead_c) = q.leading_term().ok_or(PolyError::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        if q.terms.len() == 1 {
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let m = m.checked_div(lead_m).ok_or(PolyError::NotDivisible)?;
                let (quo, rem) = c.div_rem(lead_c);
                if !rem.is_zero() {
                    return Err(PolyError::NotDivisible);
                }
                out.push((m, quo));
            }
            // dividing by a single term preserves the order
            return Ok(Polynomial { terms: out });
        }

        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quotient: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.checked_div(lead_m).ok_or(PolyError::NotDivisible)?;
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for (n, d) in &q.terms[1..] {
                let key = n.mul(&qm);
                let entry = rem.entry(key);
                let delta: BigInt = d * &qc;
                match entry {
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        // quotient terms were produced in strictly descending order
        Ok(Polynomial { terms: quotient })
    }

    /// Divides every coefficient by `k`, failing unless all divide evenly.
    pub fn exact_div_integer(&self, k: &BigInt) -> Result<Polynomial, PolyError> {
        if k.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let (quo, rem) = c.div_rem(k);
            if !rem.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            out.push((m.clone(), quo));
        }
        Ok(Polynomial { terms: out })
    }

    /// Evaluates with values supplied by `value`; fails on the first variable
    /// it has no value for.
    pub fn evaluate_with<F>(&self, mut value: F) -> Result<BigInt, PolyError>
    where
        F: FnMut(Variable) -> Option<BigInt>,
    {
        let mut cache: BTreeMap<Variable, BigInt> = BTreeMap::new();
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.powers() {
                let val = match cache.get(&v) {
                    Some(val) => val.clone(),
                    None => {
                        let val = value(v).ok_or(PolyError::UnassignedVariable(v))?;
                        cache.insert(v, val.clone());
                        val
                    }
                };
                t *= num_traits::pow::Pow::pow(&val, e);
            }
            total += t;
        }
        Ok(total)
    }

    pub fn evaluate(&self, assignment: &BTreeMap<Variable, BigInt>) -> Result<BigInt, PolyError> {
        self.evaluate_with(|v| assignment.get(&v).cloned())
    }

    /// Value with every variable set to 1, i.e. the coefficient sum.
    pub fn evaluate_ones(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// Substitutes a polynomial for each variable.
    pub fn substitute<F>(&self, mut image: F) -> Polynomial
    where
        F: FnMut(Variable) -> Polynomial,
    {
        let mut cache: BTreeMap<Variable, Polynomial> = BTreeMap::new();
        let mut total = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for (v, e) in m.powers() {
                let img = cache.entry(v).or_insert_with(|| image(v));
                t = &t * &img.pow(e);
            }
            total += t;
        }
        total
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

fn merge(a: &[(Monomial, BigInt)], b: &[(Monomial, BigInt)], negate_b: bool) -> Polynomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let fix = |c: &BigInt| if negate_b { -c } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((b[j].0.clone(), fix(&b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), fix(c))));
    Polynomial { terms: out }
}

fn merge_owned(a: Vec<(Monomial, BigInt)>, b: Vec<(Monomial, BigInt)>) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut a = a.into_iter().peekable();
    let mut b = b.into_iter().peekable();
    loop {
        let order = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => std::cmp::Ordering::Greater,
            (None, Some(_)) => std::cmp::Ordering::Less,
            (None, None) => break,
        };
        match order {
            std::cmp::Ordering::Greater => out.extend(a.next()),
            std::cmp::Ordering::Less => out.extend(b.next()),
            std::cmp::Ordering::Equal => {
                let (m, c) = a.next().expect("peeked");
                let (_, d) = b.next().expect("peeked");
                let c = c + d;
                if !c.is_zero() {
                    out.push((m, c));
                }
            }
        }
    }
    out
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(m, c);
        }
        // each row `term * large` is already sorted; merge rows pairwise
        let mut rows: Vec<Vec<(Monomial, BigInt)>> =
            small.terms.iter().map(|(m, c)| large.mul_term(m, c).terms).collect();
        while rows.len() > 1 {
            let mut next = Vec::with_capacity(rows.len().div_ceil(2));
            let mut it = rows.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(merge_owned(a, b)),
                    None => next.push(a),
                }
            }
            rows = next;
        }
        Polynomial {
            terms: rows.pop().unwrap_or_default(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        *self = &*self + &rhs;
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        *self = &*self - rhs;
    }
}

impl Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for p in iter {
            for (m, c) in p.terms {
                *acc.entry(m).or_default() += c;
            }
        }
        Polynomial::from_map(acc)
    }
}

impl<'a> Sum<&'a Polynomial> for Polynomial {
    fn sum<I: Iterator<Item = &'a Polynomial>>(iter: I) -> Polynomial {
        iter.cloned().sum()
    }
}

impl Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

impl<'a> Product<&'a Polynomial> for Polynomial {
    fn product<I: Iterator<Item = &'a Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |acc, p| &acc * p)
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl From<BigInt> for Polynomial {
    fn from(c: BigInt) -> Self {
        Polynomial::constant(c)
    }
}
