//! Closed-form limits of normalised involution counts.

use std::fmt;
use std::str::FromStr;

use atlas_exact::rat::frac;
use atlas_exact::BigRat;
use atlas_orders::{CharParity, PrimePower};
use serde::{Serialize, Serializer};

use crate::product::{infinite_product, Bounded, Pattern};
use crate::AsymError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LimitKind {
    SoDim0Mod4,
    SoDim2Mod4,
    SoOddDim,
    CosetSoDim0Mod4,
    CosetSoDim2Mod4,
    OmegaQOddDim0Mod4,
    OmegaQOddDim2Mod4,
    OmegaOddDim,
    OmegaQEvenDim0Mod4,
    OmegaQEvenDim2Mod4,
    CosetOmegaDim0Mod4,
    CosetOmegaDim2Mod4,
    RatioOmegaOverSo,
}

/// Dimensions a kind ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Residue {
    ZeroMod4,
    TwoMod4,
    Odd,
}

impl LimitKind {
    pub const ALL: [LimitKind; 13] = [
        LimitKind::SoDim0Mod4,
        LimitKind::SoDim2Mod4,
        LimitKind::SoOddDim,
        LimitKind::CosetSoDim0Mod4,
        LimitKind::CosetSoDim2Mod4,
        LimitKind::OmegaQOddDim0Mod4,
        LimitKind::OmegaQOddDim2Mod4,
        LimitKind::OmegaOddDim,
        LimitKind::OmegaQEvenDim0Mod4,
        LimitKind::OmegaQEvenDim2Mod4,
        LimitKind::CosetOmegaDim0Mod4,
        LimitKind::CosetOmegaDim2Mod4,
        LimitKind::RatioOmegaOverSo,
    ];

    pub fn id(self) -> &'static str {
        match self {
            LimitKind::SoDim0Mod4 => "SO_dim0mod4",
            LimitKind::SoDim2Mod4 => "SO_dim2mod4",
            LimitKind::SoOddDim => "SO_odd_dim",
            LimitKind::CosetSoDim0Mod4 => "Coset_SO_dim0mod4",
            LimitKind::CosetSoDim2Mod4 => "Coset_SO_dim2mod4",
            LimitKind::OmegaQOddDim0Mod4 => "Omega_qodd_dim0mod4",
            LimitKind::OmegaQOddDim2Mod4 => "Omega_qodd_dim2mod4",
            LimitKind::OmegaOddDim => "Omega_odd_dim",
            LimitKind::OmegaQEvenDim0Mod4 => "Omega_qeven_dim0mod4",
            LimitKind::OmegaQEvenDim2Mod4 => "Omega_qeven_dim2mod4",
            LimitKind::CosetOmegaDim0Mod4 => "Coset_Omega_dim0mod4",
            LimitKind::CosetOmegaDim2Mod4 => "Coset_Omega_dim2mod4",
            LimitKind::RatioOmegaOverSo => "Ratio_Omega_over_SO",
        }
    }

    pub fn parity(self) -> CharParity {
        match self {
            LimitKind::OmegaQEvenDim0Mod4
            | LimitKind::OmegaQEvenDim2Mod4
            | LimitKind::CosetOmegaDim0Mod4
            | LimitKind::CosetOmegaDim2Mod4 => CharParity::Even,
            _ => CharParity::Odd,
        }
    }

    pub fn residue(self) -> Residue {
        use LimitKind::*;
        match self {
            SoDim0Mod4 | CosetSoDim0Mod4 | OmegaQOddDim0Mod4 | OmegaQEvenDim0Mod4 | CosetOmegaDim0Mod4
            | RatioOmegaOverSo => Residue::ZeroMod4,
            SoDim2Mod4 | CosetSoDim2Mod4 | OmegaQOddDim2Mod4 | OmegaQEvenDim2Mod4 | CosetOmegaDim2Mod4 => Residue::TwoMod4,
            SoOddDim | OmegaOddDim => Residue::Odd,
        }
    }
}

impl fmt::Display for LimitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for LimitKind {
    type Err = AsymError;

    fn from_str(s: &str) -> Result<Self, AsymError> {
        LimitKind::ALL.into_iter().find(|k| k.id() == s).ok_or_else(|| AsymError::UnknownKind(s.to_string()))
    }
}

impl Serialize for LimitKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LimitSpec {
    pub kind: LimitKind,
    pub q: PrimePower,
}

impl LimitSpec {
    pub fn new(kind: LimitKind, q: PrimePower) -> Result<Self, AsymError> {
        if q.parity() != kind.parity() {
            return Err(AsymError::ParityMismatch { kind: kind.id(), q: q.get() });
        }
        Ok(LimitSpec { kind, q })
    }
}

/// The limiting value of the normalised count, within `eps`.
pub fn limit_value(spec: &LimitSpec, eps: &BigRat) -> Result<Bounded, AsymError> {
    use LimitKind::*;
    if spec.kind == RatioOmegaOverSo {
        return Ok(Bounded::exact(frac(1, 2)));
    }
    let q = spec.q.as_bigint();
    // Each part is fetched at eps/64: squares and sums of products no larger
    // than 4 keep the total well below eps.
    let part = eps * frac(1, 64);
    let half = frac(1, 2);
    let quarter = frac(1, 4);
    let v = match spec.kind {
        SoOddDim | OmegaOddDim => {
            let e = infinite_product(&Pattern::even_plus(), &q, &part)?;
            let sq = e.mul(&e);
            if spec.kind == OmegaOddDim { sq.scale(&half) } else { sq }
        }
        _ => {
            let p = infinite_product(&Pattern::odd_plus(), &q, &part)?;
            let m = infinite_product(&Pattern::odd_minus(), &q, &part)?;
            let (p2, m2) = (p.mul(&p), m.mul(&m));
            match spec.kind {
                SoDim0Mod4 | CosetSoDim2Mod4 => p2.add(&m2).scale(&half),
                SoDim2Mod4 | CosetSoDim0Mod4 => p2.sub(&m2).scale(&half),
                OmegaQOddDim0Mod4 => p2.add(&m2).scale(&quarter),
                OmegaQOddDim2Mod4 => p2.sub(&m2).scale(&quarter),
                OmegaQEvenDim0Mod4 | CosetOmegaDim2Mod4 => p.add(&m).scale(&half),
                OmegaQEvenDim2Mod4 | CosetOmegaDim0Mod4 => p.sub(&m).scale(&half),
                SoOddDim | OmegaOddDim | RatioOmegaOverSo => unreachable!(),
            }
        }
    };
    debug_assert!(&v.err < eps);
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use atlas_exact::rat::to_f64;

    fn lim(kind: LimitKind, q: u64) -> f64 {
        let s = LimitSpec::new(kind, PrimePower::new(q).unwrap()).unwrap();
        to_f64(&limit_value(&s, &frac(1, 1_000_000)).unwrap().value)
    }

    #[test]
    fn documented_limits() {
        assert!((lim(LimitKind::SoDim0Mod4, 3) - 1.1690).abs() < 1e-3);
        assert!((lim(LimitKind::SoOddDim, 3) - 1.2691).abs() < 1e-3);
        assert_eq!(lim(LimitKind::RatioOmegaOverSo, 7), 0.5);
    }

    #[test]
    fn parity_checked() {
        let q2 = PrimePower::new(2).unwrap();
        assert!(LimitSpec::new(LimitKind::SoDim0Mod4, q2).is_err());
        assert!(LimitSpec::new(LimitKind::OmegaQEvenDim0Mod4, q2).is_ok());
    }

    #[test]
    fn ids_round_trip() {
        for k in LimitKind::ALL {
            assert_eq!(k.id().parse::<LimitKind>().unwrap(), k);
        }
    }
}
