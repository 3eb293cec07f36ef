//! Printer/parser agreement on generated expressions.

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use spantree_cli::{parse_polynomial, parse_weight_expr, ParseError, WeightExpr};
use spantree_core::{Monomial, Polynomial, Variable};

fn leaf() -> impl Strategy<Value = WeightExpr> {
    prop_oneof![
        (0u64..1000).prop_map(|n| WeightExpr::Int(BigUint::from(n))),
        (1u32..=9).prop_map(|i| WeightExpr::Var(Variable::x(i))),
        (1u32..=9).prop_map(|i| WeightExpr::Var(Variable::y(i))),
    ]
}

fn expr() -> impl Strategy<Value = WeightExpr> {
    leaf().prop_recursive(5, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| WeightExpr::Neg(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| WeightExpr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| WeightExpr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| WeightExpr::Mul(Box::new(a), Box::new(b))),
            (inner, 0u32..4).prop_map(|(e, k)| WeightExpr::Pow(Box::new(e), k)),
        ]
    })
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    let var = prop_oneof![(1u32..=4).prop_map(Variable::x), (1u32..=4).prop_map(Variable::y)];
    let mono = prop::collection::vec((var, 0u32..4), 0..4).prop_map(Monomial::from_powers);
    prop::collection::vec((mono, -50i64..=50), 0..6)
        .prop_map(|t| Polynomial::from_terms(t.into_iter().map(|(m, c)| (m, BigInt::from(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_then_parse_is_identity(e in expr()) {
        prop_assert_eq!(parse_weight_expr(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn rendered_polynomials_parse_back(p in polynomial()) {
        prop_assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn arbitrary_text_never_panics(s in "[xy0-9+*^() \\-]{0,24}") {
        let _ = parse_weight_expr(&s).map(|e| e.lower());
    }
}

#[test]
fn malformed_inputs_report_positions() {
    let cases: &[(&str, usize)] = &[
        ("x1*", 4),
        ("", 1),
        ("+x1", 1),
        ("x1 +", 5),
        ("(x1 + x2", 9),
        ("x1)", 3),
        ("x1 x2", 4),
        ("x", 1),
        ("y0", 1),
        ("x1^", 4),
        ("x1^y2", 4),
        ("2*(x1 & x2)", 7),
        ("x1**x2", 4),
        ("()", 2),
        ("x1^2^3", 5),
        ("3.5", 2),
    ];
    for &(text, column) in cases {
        match parse_weight_expr(text) {
            Err(ParseError::Syntax { line: 1, column: c, .. }) => assert_eq!(c, column, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
    assert_eq!(
        parse_weight_expr("(x1+x2)^-1"),
        Err(ParseError::ExponentNegative { line: 1, column: 9 })
    );
}
