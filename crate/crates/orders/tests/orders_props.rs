use atlas_exact::BigInt;
use atlas_orders::{order_int, order_poly, CharParity, Family, GroupSpec, PrimePower, Sign};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

const QS: [u64; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

/// Direct integer evaluation of `|O^±(2n,q)|`, `|Sp(2n,q)|` without polynomials.
fn o_even(n: u32, q: u64, plus: bool) -> BigInt {
    let q = big(q);
    let mut v = BigInt::from(2) * num_traits::pow(q.clone(), (n * (n - 1)) as usize);
    let qn = num_traits::pow(q.clone(), n as usize);
    v *= if plus { qn - 1 } else { qn + 1 };
    for i in 1..n {
        v *= num_traits::pow(q.clone(), 2 * i as usize) - 1;
    }
    v
}

fn sp(n: u32, q: u64) -> BigInt {
    let q = big(q);
    let mut v = num_traits::pow(q.clone(), (n * n) as usize);
    for i in 1..=n {
        v *= num_traits::pow(q.clone(), 2 * i as usize) - 1;
    }
    v
}

fn parity(q: u64) -> CharParity {
    if q % 2 == 0 {
        CharParity::Even
    } else {
        CharParity::Odd
    }
}

fn at(f: Family, dim: usize, q: u64) -> BigInt {
    let spec = GroupSpec::new(f, dim, parity(q)).unwrap();
    order_int(&spec, PrimePower::new(q).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn integer_order_is_polynomial_at_q(qi in 0usize..QS.len(), dim in 0usize..=12, fi in 0usize..Family::ALL.len()) {
        let q = QS[qi];
        let Ok(spec) = GroupSpec::new(Family::ALL[fi], dim, parity(q)) else { return Ok(()) };
        let v = order_int(&spec, PrimePower::new(q).unwrap()).unwrap();
        let p = order_poly(&spec).unwrap().eval_int(&big(q));
        prop_assert!(p.is_integer());
        prop_assert_eq!(&v, p.numer());
        if spec.family().is_coset() && dim == 0 {
            prop_assert!(v.is_zero());
        } else {
            prop_assert!(v.is_positive());
        }
    }

    #[test]
    fn matches_direct_formula(qi in 0usize..QS.len(), n in 1u32..=6) {
        let q = QS[qi];
        let d = 2 * n as usize;
        prop_assert_eq!(at(Family::OPlus, d, q), o_even(n, q, true));
        prop_assert_eq!(at(Family::OMinus, d, q), o_even(n, q, false));
        prop_assert_eq!(at(Family::Sp, d, q), sp(n, q));
        let odd = if q % 2 == 0 { sp(n, q) } else { BigInt::from(2) * sp(n, q) };
        prop_assert_eq!(at(Family::OOdd, d + 1, q), odd);
    }

    #[test]
    fn index_relations(qi in 0usize..QS.len(), n in 1usize..=6) {
        let q = QS[qi];
        let d = 2 * n;
        for (o, so, om, sign) in [
            (Family::OPlus, Family::SoPlus, Family::OmegaPlus, Sign::Plus),
            (Family::OMinus, Family::SoMinus, Family::OmegaMinus, Sign::Minus),
        ] {
            let full = at(o, d, q);
            if q % 2 == 1 {
                prop_assert_eq!(&full, &(at(so, d, q) * 2));
                prop_assert_eq!(&at(so, d, q), &(at(om, d, q) * 2));
                prop_assert_eq!(&full, &(at(so, d, q) + at(Family::CosetSo(sign), d, q)));
            } else {
                prop_assert_eq!(&full, &(at(om, d, q) * 2));
                prop_assert_eq!(&full, &(at(om, d, q) + at(Family::CosetOmega(sign), d, q)));
            }
        }
        if q % 2 == 1 {
            prop_assert_eq!(at(Family::OOdd, d + 1, q), at(Family::SoOdd, d + 1, q) * 2);
            prop_assert_eq!(at(Family::SoOdd, d + 1, q), at(Family::OmegaOdd, d + 1, q) * 2);
        } else {
            prop_assert_eq!(at(Family::OOdd, d + 1, q), at(Family::Sp, d, q));
        }
    }
}

#[test]
fn plus_minus_product_identity() {
    // |O+(2n)| |O-(2n)| = 4 q^{2n(n-1)} (q^{2n} - 1) prod_{i<n} (q^{2i}-1)^2
    for q in QS {
        for n in 1..=5u32 {
            let lhs = o_even(n, q, true) * o_even(n, q, false);
            let rhs = BigInt::from(4) * num_traits::pow(big(q), (2 * n * (n - 1)) as usize)
                * (num_traits::pow(big(q), 2 * n as usize) - 1)
                * (1..n).fold(BigInt::one(), |a, i| {
                    let f = num_traits::pow(big(q), 2 * i as usize) - 1;
                    a * &f * &f
                });
            assert_eq!(lhs, rhs);
            assert_eq!(at(Family::OPlus, 2 * n as usize, q) * at(Family::OMinus, 2 * n as usize, q), rhs);
        }
    }
}
