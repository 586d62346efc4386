use atlas_exact::rat::{frac, int};
use atlas_exact::{laurent_expand, BigRat, PolyQ, RatFuncQ};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn poly_strategy(max_deg: usize) -> impl Strategy<Value = PolyQ> {
    prop::collection::vec((-6i64..=6, 1i64..=3), 0..=max_deg + 1)
        .prop_map(|cs| PolyQ::from_coeffs(&cs.iter().map(|(n, d)| frac(*n, *d)).collect::<Vec<_>>()))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = PolyQ> {
    poly_strategy(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

/// Euclid over the rationals, the textbook algorithm.
fn euclid_gcd(a: &PolyQ, b: &PolyQ) -> PolyQ {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y).unwrap();
        x = y;
        y = r;
    }
    x.monic()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn modular_gcd_matches_euclid(a in poly_strategy(6), b in poly_strategy(6), c in nonzero_poly(3)) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let (a, b) = (&a * &c, &b * &c);
        let g = a.gcd(&b).unwrap();
        prop_assert_eq!(&g, &euclid_gcd(&a, &b));
        prop_assert!(g.is_monic());
    }

    #[test]
    fn multiply_then_divide(a in poly_strategy(6), b in nonzero_poly(6)) {
        let fa = RatFuncQ::from_poly(&a);
        let fb = RatFuncQ::from_poly(&b);
        let back = &(&fa * &fb) / &fb;
        prop_assert_eq!(back.to_poly(), Some(a));
    }

    #[test]
    fn evaluation_is_multiplicative(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(4), d in nonzero_poly(4), q0 in -9i64..=9) {
        let f = RatFuncQ::new(&a, &b).unwrap();
        let g = RatFuncQ::new(&c, &d).unwrap();
        let x = int(q0);
        if let (Ok(fx), Ok(gx), Ok(fgx)) = (f.eval(&x), g.eval(&x), (&f * &g).eval(&x)) {
            prop_assert_eq!(fgx, fx * gx);
        }
    }

    #[test]
    fn addition_agrees_with_evaluation(a in nonzero_poly(4), b in nonzero_poly(4), c in poly_strategy(4), d in nonzero_poly(4), q0 in 2i64..=9) {
        let f = RatFuncQ::new(&a, &b).unwrap();
        let g = RatFuncQ::new(&c, &d).unwrap();
        let x = int(q0);
        if let (Ok(fx), Ok(gx)) = (f.eval(&x), g.eval(&x)) {
            prop_assert_eq!((&f + &g).eval(&x).unwrap(), fx + gx);
            prop_assert_eq!(&(&f + &g) - &g, f.clone());
        }
    }

    #[test]
    fn normalisation_is_idempotent(a in poly_strategy(5), b in nonzero_poly(5)) {
        let f = RatFuncQ::new(&a, &b).unwrap();
        let again = RatFuncQ::new(&f.num(), &f.den()).unwrap();
        prop_assert_eq!(&again, &f);
        prop_assert!(f.den().is_monic());
        let g = f.num().gcd(&f.den());
        if let Ok(g) = g { prop_assert!(g.is_one()); }
    }

    #[test]
    fn render_parse_round_trip(a in poly_strategy(8)) {
        let s = a.to_string();
        let back: PolyQ = s.parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn laurent_resum_converges(a in nonzero_poly(3), b in nonzero_poly(3), q0 in 4i64..=7) {
        let f = RatFuncQ::new(&a, &b).unwrap();
        let x = int(q0);
        // poles of b must stay inside |q| < q0 / 2 for a clean geometric rate
        let roots_small = f.den().coeffs().iter().rev().skip(1).all(|c| c.abs() <= frac(1, 1));
        prop_assume!(roots_small);
        let exact = f.eval(&x).unwrap();
        let lead = -f.degree_gap().unwrap();
        let err = |m: i64| (laurent_expand(&f, lead + m).unwrap().resum(&x) - &exact).abs();
        let (e1, e2) = (err(10), err(30));
        prop_assert!(e2 <= e1 || e1.is_zero());
        prop_assert!(e2 < BigRat::new(1.into(), 1_000_000.into()) * (exact.abs() + int(1)));
    }
}
