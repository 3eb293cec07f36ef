//! Ring laws and canonical-form properties of the polynomial kernel.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use spantree_core::{Monomial, Polynomial, RationalFunction, Variable};

fn variable() -> impl Strategy<Value = Variable> {
    prop_oneof![(1u32..=3).prop_map(Variable::x), (1u32..=2).prop_map(Variable::y)]
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((variable(), 0u32..=3), 0..4).prop_map(Monomial::from_powers)
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(), -20i64..=20), 0..6)
        .prop_map(|terms| Polynomial::from_terms(terms.into_iter().map(|(m, c)| (m, BigInt::from(c)))))
}

fn nonzero_polynomial() -> impl Strategy<Value = Polynomial> {
    polynomial().prop_filter("nonzero", |p| !p.is_zero())
}

fn assignment() -> impl Strategy<Value = BTreeMap<Variable, BigInt>> {
    prop::collection::vec(-9i64..=9, 5).prop_map(|vals| {
        let vars = [
            Variable::x(1),
            Variable::x(2),
            Variable::x(3),
            Variable::y(1),
            Variable::y(2),
        ];
        vars.into_iter().zip(vals.into_iter().map(BigInt::from)).collect()
    })
}

fn is_canonical(p: &Polynomial) -> bool {
    p.terms().windows(2).all(|w| w[0].0 > w[1].0) && p.terms().iter().all(|(_, c)| *c != BigInt::from(0))
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(p in polynomial(), q in polynomial(), r in polynomial()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p + &Polynomial::zero(), p.clone());
    }

    #[test]
    fn multiplication_laws(p in polynomial(), q in polynomial(), r in polynomial()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &Polynomial::one(), p.clone());
        prop_assert!((&p * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn results_stay_canonical(p in polynomial(), q in polynomial()) {
        for r in [&p + &q, &p - &q, &p * &q, p.pow(2)] {
            prop_assert!(is_canonical(&r));
            prop_assert_eq!(Polynomial::from_terms(r.terms().iter().cloned()), r.clone());
        }
    }

    #[test]
    fn exact_division_inverts_multiplication(p in polynomial(), q in nonzero_polynomial()) {
        let product = &p * &q;
        prop_assert_eq!(product.exact_div(&q).unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in polynomial(), q in polynomial(), values in assignment()) {
        let ev = |r: &Polynomial| r.evaluate(&values).unwrap();
        prop_assert_eq!(ev(&(&p + &q)), ev(&p) + ev(&q));
        prop_assert_eq!(ev(&(&p * &q)), ev(&p) * ev(&q));
        prop_assert_eq!(ev(&-&p), -ev(&p));
    }

    #[test]
    fn monomial_order_is_multiplicative(a in monomial(), b in monomial(), c in monomial()) {
        prop_assert_eq!(a.cmp(&b), a.mul(&c).cmp(&b.mul(&c)));
        prop_assert!(a.mul(&c) >= a);
        prop_assert_eq!(a.mul(&c).checked_div(&c), Some(a.clone()));
    }

    #[test]
    fn rational_functions_are_consistent(p in polynomial(), q in nonzero_polynomial(), r in polynomial(), s in nonzero_polynomial()) {
        let f = RationalFunction::new(p.clone(), q.clone()).unwrap();
        let g = RationalFunction::new(r.clone(), s.clone()).unwrap();
        let sum = &f + &g;
        prop_assert_eq!(sum.clone(), RationalFunction::new(&p * &s + &r * &q, &q * &s).unwrap());
        prop_assert_eq!(&sum - &g, f.clone());
        prop_assert_eq!(&f * &g, RationalFunction::new(&p * &r, &q * &s).unwrap());
        let scaled = RationalFunction::new(&p * &s, &q * &s).unwrap();
        prop_assert_eq!(scaled, f.clone());
        if !p.is_zero() {
            prop_assert_eq!(&f * &f.inverse().unwrap(), RationalFunction::one());
        }
        let whole = RationalFunction::new(&p * &q, q.clone()).unwrap();
        prop_assert_eq!(whole.try_to_polynomial().unwrap(), p);
    }
}
