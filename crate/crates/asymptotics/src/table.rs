//! Normalised counts at growing dimension, set against the limit.

use atlas_exact::exec::{self, Strategy};
use atlas_exact::rat::{render, to_decimal};
use atlas_exact::{BigInt, BigRat};
use atlas_involutions::Counter;
use atlas_orders::{Family, GroupSpec, Sign};
use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::limit::{limit_value, LimitKind, LimitSpec, Residue};
use crate::product::Bounded;
use crate::AsymError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub dim: usize,
    /// `i / q^{n^2}` for `dim = 2n`, `i / q^{n^2+n}` for `dim = 2n+1`, or the
    /// count ratio for the ratio kind.
    pub ratio: BigRat,
    pub abs_error: BigRat,
}

impl Serialize for ConvergenceRow {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ConvergenceRow", 4)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("ratio", &to_decimal(&self.ratio, 12))?;
        st.serialize_field("abs_error", &to_decimal(&self.abs_error, 12))?;
        st.serialize_field("ratio_exact", &render(&self.ratio))?;
        st.end()
    }
}

#[derive(Clone, Debug)]
pub struct ConvergenceTable {
    pub spec: LimitSpec,
    pub sign: Sign,
    pub limit: Bounded,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceTable {
    pub fn final_error(&self) -> Option<&BigRat> {
        self.rows.last().map(|r| &r.abs_error)
    }
}

impl Serialize for ConvergenceTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ConvergenceTable", 6)?;
        st.serialize_field("kind", &self.spec.kind)?;
        st.serialize_field("q", &self.spec.q)?;
        st.serialize_field("sign", &self.sign)?;
        st.serialize_field("limit", &self.limit.decimal(12))?;
        st.serialize_field("limit_error_bound", &to_decimal(&self.limit.err, 15))?;
        st.serialize_field("rows", &self.rows)?;
        st.end()
    }
}

pub fn dims(kind: LimitKind, max_dim: usize) -> Vec<usize> {
    let (start, step) = match kind.residue() {
        Residue::ZeroMod4 => (4, 4),
        Residue::TwoMod4 => (2, 4),
        Residue::Odd => (3, 2),
    };
    (start..=max_dim).step_by(step).collect()
}

fn family(kind: LimitKind, sign: Sign) -> Family {
    use LimitKind::*;
    let pick = |plus, minus| if sign == Sign::Plus { plus } else { minus };
    match kind {
        SoDim0Mod4 | SoDim2Mod4 => pick(Family::SoPlus, Family::SoMinus),
        SoOddDim => Family::SoOdd,
        CosetSoDim0Mod4 | CosetSoDim2Mod4 => Family::CosetSo(sign),
        OmegaOddDim => Family::OmegaOdd,
        OmegaQOddDim0Mod4 | OmegaQOddDim2Mod4 | OmegaQEvenDim0Mod4 | OmegaQEvenDim2Mod4 | RatioOmegaOverSo => {
            pick(Family::OmegaPlus, Family::OmegaMinus)
        }
        CosetOmegaDim0Mod4 | CosetOmegaDim2Mod4 => Family::CosetOmega(sign),
    }
}

fn count(counter: &Counter, fam: Family, dim: usize, spec: &LimitSpec) -> Result<BigInt, AsymError> {
    let g = GroupSpec::new(fam, dim, spec.q.parity()).map_err(atlas_involutions::InvolutionError::from)?;
    let r = counter.count(&g, spec.q)?;
    Ok(r.value.as_integer().expect("numeric count").clone())
}

fn row(counter: &Counter, spec: &LimitSpec, sign: Sign, dim: usize, limit: &BigRat) -> Result<ConvergenceRow, AsymError> {
    let fam = family(spec.kind, sign);
    let i = BigRat::from_integer(count(counter, fam, dim, spec)?);
    let ratio = if spec.kind == LimitKind::RatioOmegaOverSo {
        let so = if sign == Sign::Plus { Family::SoPlus } else { Family::SoMinus };
        i / BigRat::from_integer(count(counter, so, dim, spec)?)
    } else {
        let n = dim / 2;
        let e = if dim % 2 == 1 { n * n + n } else { n * n };
        i / BigRat::from_integer(num_traits::pow(spec.q.as_bigint(), e))
    };
    let abs_error = (&ratio - limit).abs();
    Ok(ConvergenceRow { dim, ratio, abs_error })
}

/// Rows for every admissible dimension up to `max_dim`.
pub fn convergence_table(
    spec: &LimitSpec,
    sign: Sign,
    max_dim: usize,
    eps: &BigRat,
    strategy: Strategy,
) -> Result<ConvergenceTable, AsymError> {
    let counter = Counter { strategy: Strategy::Sequential, ..Counter::default() };
    if max_dim > counter.max_dim {
        return Err(AsymError::TooLarge { dim: max_dim, max: counter.max_dim });
    }
    let limit = limit_value(spec, eps)?;
    let ds = dims(spec.kind, max_dim);
    let rows = exec::map(strategy, &ds, |&d| row(&counter, spec, sign, d, &limit.value))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ConvergenceTable { spec: *spec, sign, limit, rows })
}
