use gek_core::formal_series::{
    abel_group_coefficients, abel_series, group_law_from_g, kaniadakis_series, tsallis_series, verify_group_axioms,
    BivariateTruncatedSeries, TruncatedSeries,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=7).prop_map(|(p, d)| q(p, d))
}

/// `s + c_2 s^2 + ... + c_n s^n` with random small rationals.
fn normalized_series(max_order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (2..=max_order).prop_flat_map(|order| {
        proptest::collection::vec(rational(), order - 1).prop_map(move |tail| {
            let mut c = vec![q(0, 1), q(1, 1)];
            c.extend(tail);
            TruncatedSeries::new(c)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reversion_round_trip(f in normalized_series(12)) {
        let g = f.reversion().unwrap();
        prop_assert!(f.compose(&g).unwrap().is_identity());
        prop_assert!(g.compose(&f).unwrap().is_identity());
    }

    #[test]
    fn lazard_law_satisfies_axioms(g in normalized_series(6)) {
        let order = g.order() as u32;
        let psi = group_law_from_g(&g, order).unwrap();
        prop_assert!(verify_group_axioms(&psi).all_hold());
        prop_assert_eq!(psi.coeff(1, 0), q(1, 1));
        prop_assert_eq!(psi.coeff(0, 1), q(1, 1));
    }

    #[test]
    fn tsallis_law_has_no_higher_terms(num in -6i64..=6, den in 1i64..=5) {
        let one_minus_q = q(num, den);
        let g = tsallis_series(&(q(1, 1) - &one_minus_q), 6);
        let psi = group_law_from_g(&g, 6).unwrap();
        let expected = BivariateTruncatedSeries::from_terms(
            6,
            [(1, 0, q(1, 1)), (0, 1, q(1, 1)), (1, 1, one_minus_q)],
        );
        prop_assert_eq!(psi, expected);
    }
}

#[test]
fn reversion_of_b_sequence_first_terms() {
    for (b1, b2) in [
        (q(1, 1), q(0, 1)),
        (q(2, 1), q(3, 1)),
        (q(-1, 2), q(5, 3)),
        (q(7, 4), q(-2, 9)),
        (q(0, 1), q(1, 1)),
        (q(-3, 1), q(-1, 7)),
    ] {
        let f = TruncatedSeries::from_b_sequence(&[q(1, 1), b1.clone(), b2.clone()], 3).unwrap();
        let a = f.reversion().unwrap().normalized_coefficients();
        assert_eq!(a[0], q(1, 1));
        assert_eq!(a[1], -b1.clone());
        assert_eq!(a[2], q(3, 2) * &b1 * &b1 - b2);
    }
}

#[test]
fn known_reversion() {
    let f = TruncatedSeries::from_integers(&[0, 1, 1, 0, 0]);
    assert_eq!(f.reversion().unwrap(), TruncatedSeries::from_integers(&[0, 1, -1, 2, -5]));
}

#[test]
fn abel_betas_match_lazard_expansion() {
    for (a, b) in [(q(1, 1), q(1, 1)), (q(3, 1), q(-2, 1)), (q(1, 2), q(1, 3)), (q(-2, 5), q(7, 4)), (q(1, 1), q(0, 1))]
    {
        let order = 6u32;
        let psi = group_law_from_g(&abel_series(&a, &b, order as usize), order).unwrap();
        let betas = abel_group_coefficients(&a, &b, 5);
        assert_eq!(psi.coeff(1, 1), *betas.beta(1).unwrap());
        for m in 2..=5u32 {
            let beta = betas.beta(m as usize).unwrap();
            assert_eq!(psi.coeff(1, m), *beta, "a={a}, b={b}, m={m}");
            assert_eq!(psi.coeff(m, 1), *beta, "a={a}, b={b}, m={m}");
        }
        for ((i, j), c) in psi.terms() {
            if i != 1 && j != 1 && i + j > 1 {
                assert!(c.is_zero(), "unexpected term ({i},{j}) = {c}");
            }
        }
    }
}

#[test]
fn abel_reduces_to_kaniadakis_law() {
    let k = q(2, 5);
    let abel = group_law_from_g(&abel_series(&k, &-k.clone(), 6), 6).unwrap();
    let kaniadakis = group_law_from_g(&kaniadakis_series(&k, 6), 6).unwrap();
    assert_eq!(abel, kaniadakis);
}

#[test]
fn non_invertible_inputs() {
    assert!(TruncatedSeries::from_integers(&[1, 1, 0]).reversion().is_err());
    assert!(TruncatedSeries::from_integers(&[0, 2, 0]).reversion().is_err());
    assert!(TruncatedSeries::from_b_sequence(&[q(2, 1)], 3).is_err());
    let inner = TruncatedSeries::from_integers(&[1, 1]);
    assert!(TruncatedSeries::identity(3).compose(&inner).is_err());
}
