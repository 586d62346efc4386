//! Coefficient-by-coefficient comparison of the two sides.

use atlas_exact::exec::Strategy;
use atlas_exact::RatFuncQ;
use atlas_orders::Sign;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::series::USeries;
use crate::theorem::{eval_rhs, gf_lhs, rhs_terms, RhsTerm, TheoremId};
use crate::SeriesError;

/// Default truncation: coefficients through `u^10`, groups to dimension 20 or 21.
pub const DEFAULT_TRUNC: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub theorem: TheoremId,
    pub sign: Sign,
    pub n: usize,
    pub lhs: RatFuncQ,
    pub rhs: RatFuncQ,
}

impl Row {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl Serialize for Row {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Row", 6)?;
        st.serialize_field("theorem", self.theorem.label())?;
        st.serialize_field("sign", &self.sign)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("lhs", &self.lhs.to_string())?;
        st.serialize_field("rhs", &self.rhs.to_string())?;
        st.serialize_field("equal", &self.equal())?;
        st.end()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub theorem: &'static str,
    pub sign: Sign,
    pub trunc: usize,
    pub rows: Vec<Row>,
    /// Deviations from the statement as printed that the check relies on.
    pub notes: Vec<&'static str>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(Row::equal)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.equal())
    }
}

fn notes(theorem: TheoremId) -> Vec<&'static str> {
    match theorem {
        TheoremId::CosetSo => vec!["left side taken as sum over n of u^n i(...) q^{n^2} / |O^±(2n,q)|"],
        TheoremId::CosetOmega => vec!["numerator taken as prod (1 + u/q^{2(i-1)}); the printed prod (1 + u/q^{2i-1}) fails at u^2"],
        TheoremId::OmegaEven | TheoremId::Omega1Plus | TheoremId::Omega1Minus | TheoremId::Omega3Even => vec![],
        TheoremId::SoEven | TheoremId::SoOdd | TheoremId::Omega1Odd | TheoremId::Omega3Odd => vec![],
    }
}

/// Compare `lhs` against a given right side.
pub fn compare(theorem: TheoremId, sign: Sign, lhs: &USeries, rhs: &USeries) -> Vec<Row> {
    (0..=lhs.trunc())
        .map(|n| Row { theorem, sign, n, lhs: lhs.coeff(n).clone(), rhs: rhs.coeff(n).clone() })
        .collect()
}

pub fn verify_with(
    theorem: TheoremId,
    sign: Sign,
    terms: &[RhsTerm],
    trunc: usize,
    strategy: Strategy,
) -> Result<VerifyReport, SeriesError> {
    if trunc == 0 {
        return Err(SeriesError::ZeroTruncation);
    }
    if !theorem.signed() && sign == Sign::Minus {
        return Err(SeriesError::Unsigned(theorem.label()));
    }
    let lhs = gf_lhs(theorem, sign, trunc, strategy)?;
    let rhs = eval_rhs(terms, trunc, strategy)?;
    Ok(VerifyReport { theorem: theorem.label(), sign, trunc, rows: compare(theorem, sign, &lhs, &rhs), notes: notes(theorem) })
}

pub fn verify_identity(theorem: TheoremId, sign: Sign, trunc: usize, strategy: Strategy) -> Result<VerifyReport, SeriesError> {
    verify_with(theorem, sign, &rhs_terms(theorem, sign), trunc, strategy)
}
