//! Fuzzed ring laws and truncation bookkeeping for `QSeries`.

use proptest::prelude::*;
use qpl_core::{Error, QSeries, ZPoly};

fn zpoly() -> impl Strategy<Value = ZPoly> {
    prop::collection::vec(-4i64..=4, 0..=3).prop_map(|c| ZPoly::from_i64s(&c))
}

/// Small Laurent series: lowest stored exponent in [-3, 3], up to eight
/// coefficients, exact through a few exponents past the last one.
fn series() -> impl Strategy<Value = QSeries> {
    (-3i64..=3, prop::collection::vec(zpoly(), 0..=8), 0i64..=4).prop_map(|(lo, cs, extra)| {
        let valid_to = lo + cs.len() as i64 - 1 + extra;
        QSeries::new(lo, cs, valid_to)
    })
}

/// Series with constant term ±1 at q^0.
fn unit_series() -> impl Strategy<Value = QSeries> {
    (
        prop::bool::ANY,
        prop::collection::vec(zpoly(), 0..=8),
        8i64..=20,
    )
        .prop_map(|(neg, mut cs, valid_to)| {
            cs.insert(0, ZPoly::constant(if neg { -1 } else { 1 }));
            QSeries::new(0, cs, valid_to)
        })
}

/// Cauchy product computed straight from `coefficient`, with the
/// truncation rule derived by hand: a coefficient of `a·b` at `n` is known
/// iff every pair `(i, n - i)` with a possibly nonzero factor is known.
fn naive_product(a: &QSeries, b: &QSeries) -> QSeries {
    let valid_to = (a.valid_to() + b.min_exp()).min(b.valid_to() + a.min_exp());
    let lo = a.min_exp() + b.min_exp();
    let mut cs = Vec::new();
    for n in lo..=valid_to {
        let mut acc = ZPoly::zero();
        for i in a.min_exp()..=a.valid_to() {
            let j = n - i;
            if j < b.min_exp() || j > b.valid_to() {
                continue;
            }
            acc += &(&a.coefficient(i).unwrap() * &b.coefficient(j).unwrap());
        }
        cs.push(acc);
    }
    QSeries::new(lo, cs, valid_to)
}

fn assert_valid_to_discipline(s: &QSeries) {
    assert!(s.valid_to() >= s.min_exp() - 1);
    assert_eq!(
        s.coefficient(s.valid_to() + 1),
        Err(Error::OutOfValidRange {
            n: s.valid_to() + 1,
            valid_to: s.valid_to()
        })
    );
    assert!(s.coefficient(s.valid_to()).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn addition_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        let zero = QSeries::zero(a.valid_to());
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&a * &b, &b * &a);
        let left = &(&a * &b) * &c;
        let right = &a * &(&b * &c);
        prop_assert_eq!(left.first_mismatch(&right), None);
        let dist_l = &a * &(&b + &c);
        let dist_r = &(&a * &b) + &(&a * &c);
        prop_assert_eq!(dist_l.first_mismatch(&dist_r), None);
    }

    #[test]
    fn product_matches_naive_convolution(a in series(), b in series()) {
        let fast = &a * &b;
        let slow = naive_product(&a, &b);
        prop_assert_eq!(fast.valid_to(), slow.valid_to());
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn inverse_round_trip(a in unit_series(), order in 0i64..=25) {
        let inv = a.invert_unit(order).unwrap();
        let n = order.min(a.valid_to());
        prop_assert_eq!(inv.valid_to(), n);
        let prod = &a * &inv;
        prop_assert!(prod.valid_to() >= n);
        prop_assert_eq!(prod.truncate(n), QSeries::one(n));
    }

    #[test]
    fn division_inverts_multiplication(a in series(), u in unit_series()) {
        let back = (&a * &u).div(&u).unwrap();
        prop_assert_eq!(back.first_mismatch(&a), None);
    }

    #[test]
    fn dilation_is_a_homomorphism(a in series(), b in series(), d in 1u32..=4) {
        let lhs = (&a * &b).dilate(d);
        let rhs = &a.dilate(d) * &b.dilate(d);
        prop_assert_eq!(lhs.first_mismatch(&rhs), None);
        let lhs = (&a + &b).dilate(d);
        let rhs = &a.dilate(d) + &b.dilate(d);
        prop_assert_eq!(lhs.first_mismatch(&rhs), None);
        let da = a.dilate(d);
        let di = i64::from(d);
        prop_assert_eq!(da.valid_to(), di * a.valid_to() + di - 1);
        for n in da.min_exp()..=da.valid_to() {
            let c = da.coefficient(n).unwrap();
            if n.rem_euclid(di) == 0 {
                prop_assert_eq!(c, a.coefficient(n / di).unwrap());
            } else {
                prop_assert!(c.is_zero());
            }
        }
    }

    #[test]
    fn valid_to_never_exceeded(a in series(), b in series(), u in unit_series(), d in 1u32..=3) {
        let results = [
            &a + &b,
            &a - &b,
            &a * &b,
            a.dilate(d),
            a.shift(2),
            u.invert_unit(30).unwrap(),
            a.div(&u).unwrap(),
            a.truncate(1),
        ];
        for s in &results {
            assert_valid_to_discipline(s);
        }
        prop_assert_eq!((&a + &b).valid_to(), a.valid_to().min(b.valid_to()));
        prop_assert_eq!(
            (&a * &b).valid_to(),
            (a.valid_to() + b.min_exp()).min(b.valid_to() + a.min_exp())
        );
    }

    #[test]
    fn z_substitution_is_a_ring_map(a in series(), b in series(), z in -2i64..=2) {
        let lhs = (&a * &b).eval_z(z);
        let rhs = &a.eval_z(z) * &b.eval_z(z);
        prop_assert_eq!(lhs.first_mismatch(&rhs), None);
        for (_, c) in lhs.terms() {
            prop_assert!(c.degree() == Some(0));
        }
    }
}
