use atlas_asymptotics::{
    convergence_table, infinite_product, limit_value, LimitKind, LimitSpec, Pattern,
};
use atlas_exact::exec::Strategy;
use atlas_exact::rat::{frac, to_f64};
use atlas_exact::BigRat;
use atlas_orders::{PrimePower, Sign};
use num_traits::Signed;
use proptest::prelude::*;

fn spec(kind: LimitKind, q: u64) -> LimitSpec {
    LimitSpec::new(kind, PrimePower::new(q).unwrap()).unwrap()
}

fn eps() -> BigRat {
    frac(1, 10_000_000_000)
}

fn qs(kind: LimitKind) -> Vec<u64> {
    match kind.parity() {
        atlas_orders::CharParity::Odd => vec![3, 5],
        atlas_orders::CharParity::Even => vec![2, 4],
    }
}

#[test]
fn so_at_three_reaches_limit() {
    for sign in [Sign::Plus, Sign::Minus] {
        let t = convergence_table(&spec(LimitKind::SoDim0Mod4, 3), sign, 24, &eps(), Strategy::Parallel).unwrap();
        assert!((to_f64(&t.limit.value) - 1.168991).abs() < 1e-5);
        assert!(t.final_error().unwrap() < &frac(1, 10_000), "{sign}");
    }
}

#[test]
fn omega_even_at_two_reaches_limit() {
    for kind in [LimitKind::OmegaQEvenDim0Mod4, LimitKind::OmegaQEvenDim2Mod4] {
        for sign in [Sign::Plus, Sign::Minus] {
            let t = convergence_table(&spec(kind, 2), sign, 24, &eps(), Strategy::Parallel).unwrap();
            assert!(t.final_error().unwrap() < &frac(1, 1000), "{kind} {sign}");
        }
    }
}

/// Within each class of the dimension mod 4, nonzero errors shrink across
/// the table and strictly over the last three rows. Odd dimensions, and the
/// ratio kind, alternate between two classes; the ratio is often exactly 1/2.
#[test]
fn every_kind_converges() {
    for kind in LimitKind::ALL {
        for q in qs(kind) {
            for sign in [Sign::Plus, Sign::Minus] {
                let t = convergence_table(&spec(kind, q), sign, 28, &eps(), Strategy::Sequential).unwrap();
                let mut checked = 0;
                for class in 0..4 {
                    let errs: Vec<&BigRat> =
                        t.rows.iter().filter(|r| r.dim % 4 == class && r.abs_error.is_positive()).map(|r| &r.abs_error).collect();
                    let k = errs.len();
                    if k < 3 {
                        continue;
                    }
                    checked += 1;
                    assert!(errs[k - 1] < errs[0], "{kind} q={q} {sign} class {class}");
                    assert!(errs[k - 1] < errs[k - 2] && errs[k - 2] < errs[k - 3], "{kind} q={q} {sign} class {class}");
                }
                assert!(checked > 0 || kind == LimitKind::RatioOmegaOverSo, "{kind} q={q} {sign}");
            }
        }
    }
}

#[test]
fn ratio_at_three_is_near_half() {
    for sign in [Sign::Plus, Sign::Minus] {
        let t = convergence_table(&spec(LimitKind::RatioOmegaOverSo, 3), sign, 24, &eps(), Strategy::Parallel).unwrap();
        let err = to_f64(t.final_error().unwrap());
        // Approaches 1/2 at rate about q^{-n/4}; at dimension 24 this is still ~1e-3.
        assert!(err < 2e-3, "{sign}: {err}");
    }
}

#[test]
fn strategies_agree() {
    let s = spec(LimitKind::CosetSoDim2Mod4, 5);
    let a = convergence_table(&s, Sign::Minus, 22, &eps(), Strategy::Parallel).unwrap();
    let b = convergence_table(&s, Sign::Minus, 22, &eps(), Strategy::Sequential).unwrap();
    assert_eq!(a.rows, b.rows);
}

#[test]
fn table_json_shape() {
    let t = convergence_table(&spec(LimitKind::SoOddDim, 3), Sign::Plus, 9, &eps(), Strategy::Sequential).unwrap();
    let v = serde_json::to_value(&t).unwrap();
    assert_eq!(v["kind"], "SO_odd_dim");
    assert_eq!(v["rows"][0]["dim"], 3);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn coset_plus_subgroup_is_o_limit(qi in 0usize..3, zero_mod_four in any::<bool>()) {
        let q = [3u64, 5, 7][qi];
        let e = eps();
        let (so, coset) = if zero_mod_four {
            (LimitKind::SoDim0Mod4, LimitKind::CosetSoDim0Mod4)
        } else {
            (LimitKind::SoDim2Mod4, LimitKind::CosetSoDim2Mod4)
        };
        let a = limit_value(&spec(so, q), &e).unwrap();
        let b = limit_value(&spec(coset, q), &e).unwrap();
        let p = infinite_product(&Pattern::odd_plus(), &q.into(), &frac(1, 1_000_000_000_000)).unwrap();
        let o = p.mul(&p);
        prop_assert!((&a.value + &b.value - &o.value).abs() <= &e * frac(2, 1) + &o.err);
    }

    #[test]
    fn residue_swap_is_minus_product_squared(qi in 0usize..3) {
        let q = [3u64, 5, 7][qi];
        let e = eps();
        let a = limit_value(&spec(LimitKind::SoDim0Mod4, q), &e).unwrap();
        let b = limit_value(&spec(LimitKind::SoDim2Mod4, q), &e).unwrap();
        let m = infinite_product(&Pattern::odd_minus(), &q.into(), &frac(1, 1_000_000_000_000)).unwrap();
        let m2 = m.mul(&m);
        prop_assert!((&a.value - &b.value - &m2.value).abs() <= &e * frac(2, 1) + &m2.err);
    }

    #[test]
    fn limit_error_within_eps(ki in 0usize..13, digits in 2u32..12) {
        let kind = LimitKind::ALL[ki];
        let e = BigRat::new(1.into(), num_traits::pow(atlas_exact::BigInt::from(10), digits as usize));
        let l = limit_value(&spec(kind, qs(kind)[0]), &e).unwrap();
        prop_assert!(l.err < e);
    }
}
