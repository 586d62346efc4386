//! Involutions counted element by element.

use std::fmt;
use std::str::FromStr;

use atlas_orders::{CharParity, Family, Sign};
use serde::Serialize;

use crate::field::FieldTable;
use crate::form::FormKind;
use crate::group::Group;
use crate::omega::Subgroups;
use crate::OracleError;

/// Which part of a built group to count in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Subset {
    All,
    /// `SO`; `q` odd.
    Det1,
    Omega,
    /// `O \ SO` for `q` odd, `O \ Omega` for `q` even; even dimension only.
    Coset,
}

impl Subset {
    pub const ALL: [Subset; 4] = [Subset::All, Subset::Det1, Subset::Omega, Subset::Coset];

    pub fn id(self) -> &'static str {
        match self {
            Subset::All => "all",
            Subset::Det1 => "det1",
            Subset::Omega => "omega",
            Subset::Coset => "coset",
        }
    }

    /// The family whose closed-form count this subset should reproduce.
    pub fn family(self, kind: FormKind, dim: usize, sign: Option<Sign>, parity: CharParity) -> Option<Family> {
        if kind == FormKind::Alternating {
            return (self == Subset::All).then_some(Family::Sp);
        }
        let odd = dim % 2 == 1;
        let s = sign.unwrap_or(Sign::Plus);
        let fam = match (self, odd) {
            (Subset::All, true) => Family::OOdd,
            (Subset::All, false) => [Family::OPlus, Family::OMinus][(s == Sign::Minus) as usize],
            (Subset::Det1, true) => Family::SoOdd,
            (Subset::Det1, false) => [Family::SoPlus, Family::SoMinus][(s == Sign::Minus) as usize],
            (Subset::Omega, true) => Family::OmegaOdd,
            (Subset::Omega, false) => [Family::OmegaPlus, Family::OmegaMinus][(s == Sign::Minus) as usize],
            (Subset::Coset, true) => return None,
            (Subset::Coset, false) => match parity {
                CharParity::Odd => Family::CosetSo(s),
                CharParity::Even => Family::CosetOmega(s),
            },
        };
        fam.defined_for(parity).then_some(fam)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Subset {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Subset::ALL.into_iter().find(|x| x.id() == s).ok_or_else(|| format!("unknown subset {s}"))
    }
}

fn involutions_in<'a>(g: &'a Group, f: &'a FieldTable) -> impl Iterator<Item = &'a crate::linalg::Mat> + 'a {
    g.elements().iter().filter(move |x| x.mul(x, f).is_identity())
}

/// Number of `g` with `g^2 = 1` in the chosen subset, identity included.
pub fn count_involutions_bruteforce(sub: &Subgroups, subset: Subset, f: &FieldTable) -> Result<u64, OracleError> {
    let undefined = |reason| OracleError::SubsetUndefined { subset, reason };
    let symplectic = sub.o.form.kind == FormKind::Alternating;
    if symplectic && subset != Subset::All {
        return Err(undefined("only the whole group is built for alternating forms"));
    }
    let o = &sub.o.group;
    let n = match subset {
        Subset::All => involutions_in(o, f).count(),
        Subset::Det1 => {
            let so = sub.so.as_ref().ok_or(undefined("the determinant is 1 throughout in characteristic 2"))?;
            involutions_in(so, f).count()
        }
        Subset::Omega => involutions_in(sub.omega().ok_or(OracleError::NoOmega)?, f).count(),
        Subset::Coset => {
            if o.dim() % 2 == 1 {
                return Err(undefined("odd dimension"));
            }
            let inner = match (&sub.so, sub.omega()) {
                (Some(so), _) => so,
                (None, Some(om)) => om,
                (None, None) => return Err(OracleError::NoOmega),
            };
            involutions_in(o, f).filter(|g| !inner.contains(g)).count()
        }
    };
    Ok(n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::FormSpec;
    use crate::group::{build_isometry_group, DEFAULT_CAP};

    fn subgroups(dim: usize, sign: Sign, q: u64) -> (Subgroups, FieldTable) {
        let f = FieldTable::new(q).unwrap();
        let form = FormSpec::orthogonal(dim, sign, &f).unwrap();
        let o = build_isometry_group(&form, &f, DEFAULT_CAP).unwrap();
        (Subgroups::new(o, &f).unwrap(), f)
    }

    #[test]
    fn hyperbolic_plane_over_three() {
        let (sub, f) = subgroups(2, Sign::Plus, 3);
        assert_eq!(count_involutions_bruteforce(&sub, Subset::All, &f).unwrap(), 4);
        assert_eq!(count_involutions_bruteforce(&sub, Subset::Coset, &f).unwrap(), 2);
    }

    #[test]
    fn det1_needs_odd_q() {
        let (sub, f) = subgroups(2, Sign::Minus, 2);
        let err = count_involutions_bruteforce(&sub, Subset::Det1, &f).unwrap_err();
        assert!(matches!(err, OracleError::SubsetUndefined { subset: Subset::Det1, .. }));
    }

    #[test]
    fn subset_families() {
        let fam = |s: Subset, d, sign, p| s.family(FormKind::Quadratic, d, sign, p);
        assert_eq!(fam(Subset::Coset, 4, Some(Sign::Minus), CharParity::Even), Some(Family::CosetOmega(Sign::Minus)));
        assert_eq!(fam(Subset::Det1, 4, Some(Sign::Plus), CharParity::Even), None);
        assert_eq!(fam(Subset::Omega, 3, None, CharParity::Odd), Some(Family::OmegaOdd));
        assert_eq!(Subset::All.family(FormKind::Alternating, 4, None, CharParity::Even), Some(Family::Sp));
    }
}
