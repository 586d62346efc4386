//! Subgroups of a built orthogonal group: `SO`, `Omega`, and membership
//! criteria checked against them.

use atlas_involutions::{omega_class_membership, OmegaClassQuery};
use atlas_orders::{CharParity, PrimePower, Sign, WittType};
use serde::Serialize;

use crate::field::FieldTable;
use crate::form::{witt_type, FormKind};
use crate::group::{paired_reflections, Group, IsometryGroup};
use crate::linalg::Mat;
use crate::OracleError;

/// How `Omega` was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OmegaRoute {
    /// Derived subgroup of `SO` (q odd) or `O` (q even), of index 2 there.
    Derived,
    /// The derived subgroup is too small here (an abelian or tiny group);
    /// generated instead by products of two reflections of equal square class.
    PairedReflections,
    /// Plus type, q even: elements keeping each class of maximal totally
    /// singular subspaces.
    SubspaceClasses,
}

/// `O`, and for orthogonal forms `SO` and `Omega`.
#[derive(Clone, Debug)]
pub struct Subgroups {
    pub o: IsometryGroup,
    /// `q` odd only: the determinant is identically 1 otherwise.
    pub so: Option<Group>,
    pub omega: Option<(Group, OmegaRoute)>,
}

impl Subgroups {
    pub fn new(o: IsometryGroup, f: &FieldTable) -> Result<Self, OracleError> {
        if o.form.kind == FormKind::Alternating {
            return Ok(Subgroups { o, so: None, omega: None });
        }
        let (so, parent) = match f.parity() {
            CharParity::Odd => {
                let so = o.group.filter(|g| g.det(f) == 1);
                (Some(so.clone()), so)
            }
            CharParity::Even => (None, o.group.clone()),
        };
        let derived = parent.derived_subgroup(f)?;
        let omega = if 2 * derived.order() == parent.order() {
            (derived, OmegaRoute::Derived)
        } else {
            let (g, route) = if f.parity() == CharParity::Even && o.form.sign == Some(Sign::Plus) {
                (subspace_class_kernel(&o, f), OmegaRoute::SubspaceClasses)
            } else {
                let gens = paired_reflections(&o.form, f);
                (Group::closure(parent.dim(), &gens, f, parent.order() as u64)?, OmegaRoute::PairedReflections)
            };
            if 2 * g.order() != parent.order() {
                return Err(OracleError::OmegaIndex { order: g.order(), parent: parent.order() });
            }
            (g, route)
        };
        Ok(Subgroups { o, so, omega: Some(omega) })
    }

    /// Rebuild `Omega` by the non-derived route and compare, for groups small
    /// enough that the reflection closure is cheap.
    pub fn cross_check(&self, f: &FieldTable, max_order: usize) -> Result<Option<bool>, OracleError> {
        let Some((omega, OmegaRoute::Derived)) = &self.omega else { return Ok(None) };
        let other = if f.parity() == CharParity::Even && self.o.form.sign == Some(Sign::Plus) {
            subspace_class_kernel(&self.o, f)
        } else {
            if self.o.group.order() > max_order {
                return Ok(None);
            }
            let gens = paired_reflections(&self.o.form, f);
            Group::closure(self.o.group.dim(), &gens, f, self.o.group.order() as u64)?
        };
        Ok(Some(other.order() == omega.order() && other.elements().iter().all(|g| omega.contains(g))))
    }

    pub fn omega(&self) -> Option<&Group> {
        self.omega.as_ref().map(|(g, _)| g)
    }
}

/// For the form `sum x_i x_{i+n}`, `U = <e_1..e_n>` is totally singular and
/// `g` keeps its class iff `dim(U ∩ gU) = n (mod 2)`.
fn subspace_class_kernel(o: &IsometryGroup, f: &FieldTable) -> Group {
    let dim = o.group.dim();
    let n = dim / 2;
    o.group.filter(|g| {
        let mut cols: Vec<Vec<_>> = (0..n).map(|j| {
            let mut e = vec![0; dim];
            e[j] = 1;
            e
        }).collect();
        cols.extend((0..n).map(|j| g.column(j)));
        let span = Mat::from_columns(&cols).rank(f);
        (2 * n - span) % 2 == n % 2
    })
}

/// `rank(1 + g)` is even; the membership test for `Omega`, `q` even.
pub fn omega_membership_even(g: &Mat, f: &FieldTable) -> Result<bool, OracleError> {
    if f.parity() != CharParity::Even {
        return Err(OracleError::NeedEvenQ(f.q() as u64));
    }
    Ok(g.plus_scalar(1, f).rank(f) % 2 == 0)
}

/// Dimension of the `-1`-eigenspace of an involution and the Witt type of
/// the form restricted to it; `q` odd.
pub fn minus_eigenspace(sub: &Subgroups, g: &Mat, f: &FieldTable) -> Result<(usize, WittType), OracleError> {
    let basis = g.plus_scalar(1, f).kernel(f);
    let gram = sub.o.form.restricted_gram(&basis, f);
    Ok((basis.len(), witt_type(&gram, f)?))
}

/// Agreement counts for a membership criterion against the built `Omega`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub tested: usize,
    pub agreed: usize,
}

impl Agreement {
    pub fn complete(&self) -> bool {
        self.tested == self.agreed
    }
}

/// Rank criterion on every element of `O`, q even.
pub fn check_rank_criterion(sub: &Subgroups, f: &FieldTable) -> Result<Agreement, OracleError> {
    let omega = sub.omega().ok_or(OracleError::NoOmega)?;
    let mut a = Agreement::default();
    for g in sub.o.group.elements() {
        a.tested += 1;
        if omega_membership_even(g, f)? == omega.contains(g) {
            a.agreed += 1;
        }
    }
    Ok(a)
}

/// Eigenspace criterion on every involution of `SO`, q odd.
pub fn check_eigenspace_criterion(sub: &Subgroups, f: &FieldTable) -> Result<Agreement, OracleError> {
    let so = sub.so.as_ref().ok_or(OracleError::NeedOddQ(f.q() as u64))?;
    let omega = sub.omega().ok_or(OracleError::NoOmega)?;
    let q = PrimePower::new(f.q() as u64)?;
    let mut a = Agreement::default();
    for g in so.elements().iter().filter(|g| g.mul(g, f).is_identity()) {
        let (d, witt_minus) = minus_eigenspace(sub, g, f)?;
        let predicted = omega_class_membership(&OmegaClassQuery { d, witt_minus, q })?;
        a.tested += 1;
        if predicted == omega.contains(g) {
            a.agreed += 1;
        }
    }
    Ok(a)
}
