use atlas_exact::exec::Strategy;
use atlas_exact::rat::frac;
use atlas_exact::RatFuncQ;
use atlas_orders::Sign;
use atlas_qseries::poch::{poch_product, PochSpec, XSign};
use atlas_qseries::{gf_lhs, gf_rhs, verify_identity, TheoremId, MANIFEST};

fn lhs(t: TheoremId, s: Sign, n: usize) -> atlas_qseries::USeries {
    gf_lhs(t, s, n, Strategy::Sequential).unwrap()
}

#[test]
fn constant_terms() {
    assert_eq!(lhs(TheoremId::SoEven, Sign::Plus, 2).coeff(0), &RatFuncQ::one());
    assert_eq!(lhs(TheoremId::SoOdd, Sign::Plus, 2).coeff(0), &RatFuncQ::from_rat(frac(1, 2)));
    assert!(lhs(TheoremId::OmegaEven, Sign::Minus, 2).coeff(0).is_zero());
    let rhs = |t| gf_rhs(t, Sign::Plus, 2, Strategy::Sequential).unwrap();
    assert!(rhs(TheoremId::CosetSo).coeff(0).is_zero());
    assert_eq!(rhs(TheoremId::SoEven).coeff(0), &RatFuncQ::one());
    assert_eq!(rhs(TheoremId::Omega1Plus).coeff(0), &RatFuncQ::one());
}

/// The plus and minus left sides differ by twice the second product term.
#[test]
fn so_even_sides_differ_by_second_term() {
    let n = 8;
    let diff = lhs(TheoremId::SoEven, Sign::Plus, n).sub(&lhs(TheoremId::SoEven, Sign::Minus, n)).unwrap();
    let p = |a, b, s| poch_product(&PochSpec::new(a, b, s).unwrap(), n);
    let num = p(1, -1, XSign::MinusX);
    let second = num.mul(&num).unwrap().mul(&p(2, 0, XSign::PlusX).inverse().unwrap()).unwrap();
    assert_eq!(diff, second);
}

#[test]
fn labels_round_trip() {
    for e in MANIFEST {
        assert_eq!(e.label.parse::<TheoremId>().unwrap(), e.id);
        assert_eq!(e.id.label(), e.label);
    }
    assert!("bogus".parse::<TheoremId>().is_err());
    assert!("6.5".parse::<TheoremId>().is_err());
}

#[test]
fn unsigned_theorems_reject_minus() {
    assert!(verify_identity(TheoremId::SoOdd, Sign::Minus, 3, Strategy::Sequential).is_err());
    assert!(verify_identity(TheoremId::SoEven, Sign::Plus, 0, Strategy::Sequential).is_err());
}

#[test]
fn strategies_agree() {
    let a = verify_identity(TheoremId::Omega3Even, Sign::Minus, 6, Strategy::Parallel).unwrap();
    let b = verify_identity(TheoremId::Omega3Even, Sign::Minus, 6, Strategy::Sequential).unwrap();
    assert_eq!(a.rows, b.rows);
    assert!(a.passed());
}

#[test]
fn report_rows_serialize() {
    let r = verify_identity(TheoremId::OmegaEven, Sign::Minus, 3, Strategy::Sequential).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    let row = &v["rows"][1];
    assert_eq!(row["theorem"], "6.6");
    assert_eq!(row["sign"], "minus");
    assert_eq!(row["n"], 1);
    assert_eq!(row["equal"], true);
    assert!(row["lhs"].is_string() && row["rhs"].is_string());
}
