use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::{PolyError, Polynomial};

/// A quotient of two polynomials with a nonzero denominator.
///
/// No multivariate gcd is taken, so numerator and denominator may share
/// factors. Integer content is cancelled and an exactly dividing denominator
/// is folded into the numerator. Equality is cross-multiplication.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return RationalFunction { num, den };
        }
        if let Ok(q) = num.exact_div(&den) {
            return Self::from_polynomial(q);
        }
        let mut g = num.content().gcd(&den.content());
        if den.leading_term().is_some_and(|(_, c)| c.is_negative()) {
            g = -g;
        }
        if g.is_one() {
            return RationalFunction { num, den };
        }
        // g divides every coefficient of both by construction
        RationalFunction {
            num: num.exact_div_integer(&g).expect("content divides"),
            den: den.exact_div_integer(&g).expect("content divides"),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inverse(&self) -> Result<Self, PolyError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// The polynomial `num / den`, when the division is exact.
    pub fn try_to_polynomial(&self) -> Result<Polynomial, PolyError> {
        self.num.exact_div(&self.den)
    }

    pub fn div(&self, rhs: &RationalFunction) -> Result<Self, PolyError> {
        Ok(self * &rhs.inverse()?)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_polynomial(p)
    }
}

impl From<BigInt> for RationalFunction {
    fn from(c: BigInt) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::normalized(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> Polynomial {
        Polynomial::x(i)
    }

    fn rf(n: Polynomial, d: Polynomial) -> RationalFunction {
        RationalFunction::new(n, d).unwrap()
    }

    #[test]
    fn reciprocal() {
        let r = rf(x(1), x(1) + x(2));
        let inv = r.inverse().unwrap();
        assert_eq!(inv, rf(x(1) + x(2), x(1)));
        assert_eq!(inv.numerator(), &(x(1) + x(2)));
        assert_eq!(
            RationalFunction::zero().inverse().unwrap_err(),
            PolyError::DivisionByZero
        );
    }

    #[test]
    fn product_of_reciprocals_is_one() {
        let p = rf(x(1), x(2)) * rf(x(2), x(1));
        assert_eq!(p, RationalFunction::one());
    }

    #[test]
    fn exact_quotient() {
        let r = rf(x(1).pow(2) + x(1) * x(2), x(1));
        assert_eq!(r.try_to_polynomial().unwrap(), x(1) + x(2));
        let s = RationalFunction {
            num: x(1) + x(2),
            den: x(2),
        };
        assert_eq!(s.try_to_polynomial(), Err(PolyError::NotDivisible));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(x(1), Polynomial::zero()).unwrap_err(),
            PolyError::DivisionByZero
        );
    }

    #[test]
    fn content_and_sign_normalized() {
        let r = rf(Polynomial::constant(4) * x(1), Polynomial::constant(-6) * x(2));
        assert_eq!(r.numerator(), &(Polynomial::constant(-2) * x(1)));
        assert_eq!(r.denominator(), &(Polynomial::constant(3) * x(2)));
    }

    #[test]
    fn field_arithmetic() {
        let a = rf(x(1), x(2));
        let b = rf(x(2), x(1));
        let sum = &a + &b;
        assert_eq!(sum, rf(x(1).pow(2) + x(2).pow(2), x(1) * x(2)));
        assert_eq!(&sum - &b, a);
        assert_eq!(a.div(&a).unwrap(), RationalFunction::one());
    }
}
