//! Euler expansions against finite products multiplied out in `(u, 1/q)`.

use std::collections::BTreeMap;

use atlas_exact::rat::int;
use atlas_exact::{laurent_expand, BigRat, PolyQ, RatFuncQ};
use atlas_qseries::{poch_expand, poch_product, qbinom_check, PochSpec, QBinomCase, USeries, XSign};
use proptest::prelude::*;

/// `(k, e) -> coefficient of u^k (1/q)^e`.
type Bivariate = BTreeMap<(usize, i64), BigRat>;

fn finite_product(spec: &PochSpec, factors: usize, max_u: usize) -> Bivariate {
    let s = if spec.sign == XSign::PlusX { -1 } else { 1 };
    let mut acc: Bivariate = BTreeMap::from([((0, 0), int(1))]);
    for i in 0..factors as i64 {
        // factor 1 + s u^a (1/q)^{-(b + y_qpow * i)}
        let e = -(spec.x_qpow + spec.y_qpow * i);
        let mut next = acc.clone();
        for (&(k, f), c) in &acc {
            let k2 = k + spec.x_upow;
            if k2 > max_u {
                continue;
            }
            let v = next.entry((k2, f + e)).or_insert_with(|| int(0));
            *v += c * int(s);
        }
        acc = next;
    }
    acc
}

fn rf(s: &str) -> RatFuncQ {
    RatFuncQ::from_poly(&s.parse::<PolyQ>().unwrap())
}

#[test]
fn documented_coefficients() {
    let plus = PochSpec::new(1, 0, XSign::MinusX).unwrap();
    let e = poch_expand(&plus, 3);
    assert_eq!(e.coeff(0), &RatFuncQ::one());
    assert_eq!(e.coeff(1), &(&rf("q^2") / &rf("q^2 - 1")));
    let minus = PochSpec::new(1, 0, XSign::PlusX).unwrap();
    let e = poch_expand(&minus, 3);
    // y / ((1 - y)(1 - y^2)) at y = 1/q^2
    assert_eq!(e.coeff(2), &(&rf("q^4") / &(&rf("q^2 - 1") * &rf("q^4 - 1"))));
}

#[test]
fn qbinomial_forms() {
    assert!(qbinom_check(QBinomCase::General { a_qpow: 0 }, 1, 0, 8).unwrap());
    assert!(qbinom_check(QBinomCase::General { a_qpow: -2 }, 1, 0, 8).unwrap());
    assert!(qbinom_check(QBinomCase::General { a_qpow: 3 }, 2, -1, 8).unwrap());
    assert!(qbinom_check(QBinomCase::Euler, 1, 0, 8).unwrap());
    assert!(qbinom_check(QBinomCase::Euler, 2, 1, 8).unwrap());
    assert!(!qbinom_check(QBinomCase::EulerReciprocal, 1, 0, 8).unwrap());
}

#[test]
fn rejects_bad_specs() {
    assert!(PochSpec::new(0, 1, XSign::PlusX).is_err());
    assert!(PochSpec::with_base(1, 0, XSign::PlusX, -3).is_err());
    assert!(PochSpec::with_base(1, 0, XSign::PlusX, 2).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn expansion_matches_truncated_product(a in 1usize..=2, b in -3i64..=2, minus in any::<bool>(), c in 1i64..=2) {
        let sign = if minus { XSign::PlusX } else { XSign::MinusX };
        let spec = PochSpec::with_base(a, b, sign, -2 * c).unwrap();
        let trunc = 4;
        let window = 40i64;
        let series = poch_expand(&spec, trunc);
        // A factor beyond `factors` adds at least 2c*factors - trunc*b to the 1/q exponent.
        let factors = ((window + trunc as i64 * b.abs()) / (2 * c) + 2) as usize;
        let oracle = finite_product(&spec, factors, trunc);
        for k in 0..=trunc {
            let lau = laurent_expand(series.coeff(k), window).unwrap();
            for e in lau.min_exp().min(-(trunc as i64) * b.abs())..=window {
                let want = oracle.get(&(k, e)).cloned().unwrap_or_else(|| int(0));
                prop_assert_eq!(lau.coeff(e), want, "u^{} (1/q)^{}", k, e);
            }
        }
    }

    #[test]
    fn split_matches_unsplit(a in 1usize..=2, b in -2i64..=4, minus in any::<bool>()) {
        let sign = if minus { XSign::PlusX } else { XSign::MinusX };
        let spec = PochSpec::new(a, b, sign).unwrap();
        prop_assert_eq!(poch_product(&spec, 6), poch_expand(&spec, 6));
    }

    #[test]
    fn inverse_round_trip(cs in proptest::collection::vec((-3i64..=3, 0usize..=3), 1..=5), c0 in 1i64..=4) {
        let trunc = 5;
        let mut coeffs = vec![RatFuncQ::from_int(c0)];
        for (c, e) in cs {
            coeffs.push(&RatFuncQ::from_int(c) * &RatFuncQ::q_pow(e as i64));
        }
        coeffs.truncate(trunc + 1);
        let s = USeries::from_coeffs(coeffs, trunc);
        prop_assert_eq!(s.mul(&s.inverse().unwrap()).unwrap(), USeries::one(trunc));
    }
}
