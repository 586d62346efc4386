//! The validation suite: build each small group, recount, compare with the
//! closed-form counts and cross-check the `Omega` membership criteria.

use std::fmt;

use atlas_exact::exec::{self, Strategy};
use atlas_exact::BigInt;
use atlas_involutions::count_involutions;
use atlas_orders::{order_int, CharParity, Family, GroupSpec, PrimePower, Sign};
use serde::{Serialize, Serializer};

use crate::count::{count_involutions_bruteforce, Subset};
use crate::field::FieldTable;
use crate::form::{FormKind, FormSpec};
use crate::group::build_isometry_group;
use crate::omega::{check_eigenspace_criterion, check_rank_criterion, Agreement, OmegaRoute, Subgroups};
use crate::OracleError;

/// Above this order the reflection-pair rebuild of `Omega` is skipped.
pub const CROSS_CHECK_MAX_ORDER: usize = 30_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormChoice {
    Plus,
    Minus,
    /// Odd dimension, `q` odd.
    Odd,
    Alternating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Case {
    pub form: FormChoice,
    pub dim: usize,
    pub q: u64,
}

impl Case {
    pub fn new(form: FormChoice, dim: usize, q: u64) -> Self {
        Case { form, dim, q }
    }

    /// The case whose full group is `family`; `None` for families that are
    /// subgroups or cosets of one.
    pub fn for_family(family: Family, dim: usize, q: u64) -> Case {
        let form = match family.ambient() {
            Family::Sp => FormChoice::Alternating,
            Family::OOdd => FormChoice::Odd,
            Family::OMinus => FormChoice::Minus,
            _ => FormChoice::Plus,
        };
        Case { form, dim, q }
    }

    /// The full isometry group's spec, whose order is checked against the cap
    /// before anything is built.
    pub fn ambient_spec(&self, parity: CharParity) -> Result<GroupSpec, OracleError> {
        let fam = match self.form {
            FormChoice::Plus => Family::OPlus,
            FormChoice::Minus => Family::OMinus,
            FormChoice::Odd => Family::OOdd,
            FormChoice::Alternating => Family::Sp,
        };
        Ok(GroupSpec::new(fam, self.dim, parity)?)
    }

    pub fn form_spec(&self, f: &FieldTable) -> Result<FormSpec, OracleError> {
        match self.form {
            FormChoice::Plus | FormChoice::Odd => FormSpec::orthogonal(self.dim, Sign::Plus, f),
            FormChoice::Minus => FormSpec::orthogonal(self.dim, Sign::Minus, f),
            FormChoice::Alternating => FormSpec::symplectic(self.dim, f),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.form {
            FormChoice::Plus => "O+",
            FormChoice::Minus => "O-",
            FormChoice::Odd => "O",
            FormChoice::Alternating => "Sp",
        };
        write!(f, "{name}({},{})", self.dim, self.q)
    }
}

/// Orthogonal groups of both types in dims 2..=6 over q in {2,3,4,5}, the
/// odd-dimensional O(3,3), O(5,3), O(3,5), and Sp(4,2), Sp(4,3).
pub fn default_suite() -> Vec<Case> {
    let mut cases = Vec::new();
    for q in [2, 3, 4, 5] {
        for dim in [2, 4, 6] {
            cases.push(Case::new(FormChoice::Plus, dim, q));
            cases.push(Case::new(FormChoice::Minus, dim, q));
        }
    }
    cases.extend([
        Case::new(FormChoice::Odd, 3, 3),
        Case::new(FormChoice::Odd, 5, 3),
        Case::new(FormChoice::Odd, 3, 5),
        Case::new(FormChoice::Alternating, 4, 2),
        Case::new(FormChoice::Alternating, 4, 3),
    ]);
    cases
}

fn big_string<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn as_string<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetRow {
    pub subset: Subset,
    pub family: &'static str,
    pub brute: u64,
    /// `None` when there is no closed form here (symplectic groups).
    #[serde(serialize_with = "as_string")]
    pub formula: Option<BigInt>,
}

impl SubsetRow {
    pub fn matches(&self) -> Option<bool> {
        self.formula.as_ref().map(|v| *v == BigInt::from(self.brute))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub case: Case,
    pub order: usize,
    pub rows: Vec<SubsetRow>,
    pub omega_route: Option<OmegaRoute>,
    /// Derived-subgroup `Omega` against the independent route, when cheap.
    pub omega_cross_check: Option<bool>,
    pub rank_criterion: Option<Agreement>,
    pub eigenspace_criterion: Option<Agreement>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.matches() != Some(false))
            && self.omega_cross_check != Some(false)
            && self.rank_criterion.map_or(true, |a| a.complete())
            && self.eigenspace_criterion.map_or(true, |a| a.complete())
    }

    pub fn row(&self, subset: Subset) -> Option<&SubsetRow> {
        self.rows.iter().find(|r| r.subset == subset)
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CaseOutcome {
    Built(CaseReport),
    Skipped {
        case: Case,
        #[serde(serialize_with = "big_string")]
        estimate: BigInt,
        cap: u64,
    },
}

/// Build one case and run every check on it. A group over the cap is
/// reported as skipped rather than as an error.
pub fn run_case(case: Case, cap: u64) -> Result<CaseOutcome, OracleError> {
    let q = PrimePower::new(case.q)?;
    let estimate = order_int(&case.ambient_spec(q.parity())?, q)?;
    if estimate > BigInt::from(cap) {
        return Ok(CaseOutcome::Skipped { case, estimate, cap });
    }
    let f = FieldTable::new(case.q)?;
    let form = case.form_spec(&f)?;
    let o = match build_isometry_group(&form, &f, cap) {
        Ok(o) => o,
        Err(OracleError::CapExceeded { estimate, cap }) => return Ok(CaseOutcome::Skipped { case, estimate, cap }),
        Err(e) => return Err(e),
    };
    let order = o.group.order();
    let sub = Subgroups::new(o, &f)?;
    let mut rows = Vec::new();
    for subset in Subset::ALL {
        let Some(family) = subset.family(form.kind, form.dim, form.sign, f.parity()) else { continue };
        let brute = count_involutions_bruteforce(&sub, subset, &f)?;
        let formula = match family {
            Family::Sp => None,
            fam => {
                let spec = GroupSpec::new(fam, case.dim, f.parity())?;
                count_involutions(&spec, q)?.value.as_integer().cloned()
            }
        };
        rows.push(SubsetRow { subset, family: family.id(), brute, formula });
    }
    let orthogonal = form.kind == FormKind::Quadratic;
    let rank_criterion = match (orthogonal, f.parity()) {
        (true, CharParity::Even) => Some(check_rank_criterion(&sub, &f)?),
        _ => None,
    };
    let eigenspace_criterion = match (orthogonal, f.parity()) {
        (true, CharParity::Odd) => Some(check_eigenspace_criterion(&sub, &f)?),
        _ => None,
    };
    Ok(CaseOutcome::Built(CaseReport {
        case,
        order,
        rows,
        omega_route: sub.omega.as_ref().map(|(_, r)| *r),
        omega_cross_check: sub.cross_check(&f, CROSS_CHECK_MAX_ORDER)?,
        rank_criterion,
        eigenspace_criterion,
    }))
}

/// Run cases independently, in parallel under [`Strategy::Parallel`].
pub fn run_suite(cases: &[Case], cap: u64, strategy: Strategy) -> Vec<Result<CaseOutcome, OracleError>> {
    exec::map(strategy, cases, |&c| run_case(c, cap))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_shape() {
        let s = default_suite();
        assert_eq!(s.len(), 29);
        assert!(s.contains(&Case::new(FormChoice::Alternating, 4, 3)));
        assert_eq!(Case::for_family(Family::OmegaMinus, 4, 2), Case::new(FormChoice::Minus, 4, 2));
        assert_eq!(Case::new(FormChoice::Odd, 5, 3).to_string(), "O(5,3)");
    }

    #[test]
    fn over_cap_is_skipped() {
        let out = run_case(Case::new(FormChoice::Plus, 4, 5), 1000).unwrap();
        assert!(matches!(out, CaseOutcome::Skipped { ref estimate, .. } if *estimate == BigInt::from(28800)));
    }
}
