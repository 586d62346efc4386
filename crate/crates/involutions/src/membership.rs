use atlas_exact::rat::{frac, int, render};
use atlas_orders::{PrimePower, WittType};
use num_integer::Integer;

use crate::InvolutionError;

/// An involution class in `SO^±(N,q)`, `q` odd, described by its
/// `-1`-eigenspace: dimension `d` and the Witt type of the restricted form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OmegaClassQuery {
    pub d: usize,
    pub witt_minus: WittType,
    pub q: PrimePower,
}

/// Whether the class lies in `Omega^±(N,q)`: `v_-` must be an even integer,
/// where `v_- = d(q-1)/4`, plus one for a `w`-type eigenspace.
pub fn omega_class_membership(query: &OmegaClassQuery) -> Result<bool, InvolutionError> {
    let q = query.q.get();
    if q % 2 == 0 {
        return Err(InvolutionError::NeedOddQ(q));
    }
    if query.d % 2 == 1 {
        return Err(InvolutionError::OddEigenspace(query.d));
    }
    let base = frac(query.d as i64 * (q as i64 - 1), 4);
    let v = match query.witt_minus {
        WittType::Type0 => base,
        WittType::TypeW => base + int(1),
        other => return Err(InvolutionError::OddWittType(other)),
    };
    if !v.is_integer() {
        return Err(InvolutionError::NonIntegralV(render(&v)));
    }
    Ok(v.to_integer().is_even())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ask(d: usize, witt_minus: WittType, q: u64) -> Result<bool, InvolutionError> {
        omega_class_membership(&OmegaClassQuery { d, witt_minus, q: PrimePower::new(q).unwrap() })
    }

    #[test]
    fn documented_classes() {
        assert_eq!(ask(0, WittType::Type0, 5), Ok(true));
        assert_eq!(ask(2, WittType::Type0, 3), Ok(false));
        assert_eq!(ask(2, WittType::TypeW, 3), Ok(true));
    }

    #[test]
    fn one_mod_four_keeps_type_zero_only() {
        for d in (0..=12).step_by(2) {
            for q in [5u64, 9, 13] {
                assert_eq!(ask(d, WittType::Type0, q), Ok(true));
                assert_eq!(ask(d, WittType::TypeW, q), Ok(false));
            }
        }
    }

    #[test]
    fn three_mod_four_alternates() {
        for r in 0..6usize {
            assert_eq!(ask(2 * r, WittType::Type0, 7), Ok(r % 2 == 0));
            assert_eq!(ask(2 * r, WittType::TypeW, 7), Ok(r % 2 == 1));
        }
    }

    #[test]
    fn bad_queries() {
        assert_eq!(ask(3, WittType::Type0, 3), Err(InvolutionError::OddEigenspace(3)));
        assert_eq!(ask(2, WittType::Type1, 3), Err(InvolutionError::OddWittType(WittType::Type1)));
        assert_eq!(ask(2, WittType::Type0, 4), Err(InvolutionError::NeedOddQ(4)));
    }
}
