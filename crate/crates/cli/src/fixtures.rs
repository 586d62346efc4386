//! Reference-table polynomials kept as regression fixtures.
//!
//! Rows with `∓`/`±` stand for two polynomials: the upper symbol is taken for
//! the plus type.

use std::fmt;

use atlas_exact::{ExactError, PolyQ};
use atlas_orders::{Family, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureTable {
    SpTable,
    OmegaTable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixtureEntry {
    pub table: FixtureTable,
    /// Half the dimension.
    pub n: usize,
    pub row_label: &'static str,
    pub text: &'static str,
    pub signs: &'static [Sign],
}

const BOTH: &[Sign] = &[Sign::Plus, Sign::Minus];
const NONE: &[Sign] = &[];

pub const SP_TABLE: [FixtureEntry; 7] = [
    sp(2, "Sp(4,q)", "q^6 + q^4 - q^2"),
    sp(3, "Sp(6,q)", "q^12 + q^10 - q^4"),
    sp(4, "Sp(8,q)", "q^20 + q^18 + q^16 - q^12 - q^10"),
    sp(5, "Sp(10,q)", "q^30 + q^28 + q^26 + q^24 - q^20 - q^18 - q^16 - q^14 + q^10"),
    sp(6, "Sp(12,q)", "q^42 + q^40 + q^38 + 2q^36 - q^30 - q^28 - 2q^26 - q^24 + q^14"),
    sp(
        7,
        "Sp(14,q)",
        "q^56 + q^54 + q^52 + 2q^50 + q^48 + q^46 - q^42 - 2q^40 - 2q^38 - 2q^36 - q^34 - q^32 + q^28 + q^26 + q^24",
    ),
    sp(
        8,
        "Sp(16,q)",
        "q^72 + q^70 + q^68 + 2q^66 + 2q^64 + q^62 + q^60 - q^56 - 2q^54 - 2q^52 - 3q^50 - 2q^48 - 2q^46 - q^44 \
         + q^40 + q^38 + q^36 + q^34 + q^32 + q^30 - q^24",
    ),
];

pub const OMEGA_TABLE: [FixtureEntry; 7] = [
    om(2, "Omega^±(4,q)", "q^4", BOTH),
    om(3, "O^±(6,q) \\ Omega^±(6,q)", "q^9 ∓ q^6", BOTH),
    om(4, "Omega^±(8,q)", "q^16 + q^12 - q^4", BOTH),
    om(5, "O^±(10,q) \\ Omega^±(10,q)", "q^25 + q^21 ∓ q^20 ∓ q^16 - q^13 ± q^8", BOTH),
    om(6, "Omega^±(12,q)", "q^36 + q^32 + q^30 + q^28 - q^22 - q^20 - q^18 - q^16 + q^10", BOTH),
    om(
        7,
        "O^±(14,q) \\ Omega^±(14,q)",
        "q^49 + q^45 + q^43 ∓ q^42 + q^41 ∓ q^38 ∓ q^36 - q^35 ∓ q^34 - q^33 - q^31 - q^29 ± q^28 ± q^26 ± q^24 \
         + q^23 ± q^22 ∓ q^16",
        BOTH,
    ),
    om(
        8,
        "Omega^+(16,q)",
        "q^64 + q^60 + q^58 + 2q^56 + q^54 + q^52 - q^46 - 2q^44 - 2q^42 - 2q^40 - q^38 - q^36 + q^30 + q^28 + q^26",
        &[Sign::Plus],
    ),
];

const fn sp(n: usize, row_label: &'static str, text: &'static str) -> FixtureEntry {
    FixtureEntry { table: FixtureTable::SpTable, n, row_label, text, signs: NONE }
}

const fn om(n: usize, row_label: &'static str, text: &'static str, signs: &'static [Sign]) -> FixtureEntry {
    FixtureEntry { table: FixtureTable::OmegaTable, n, row_label, text, signs }
}

impl FixtureEntry {
    /// Canonical text for one sign; `None` resolves nothing (Sp rows).
    pub fn resolved_text(&self, sign: Option<Sign>) -> String {
        let (upper, lower) = match sign {
            Some(Sign::Minus) => ("-", "+"),
            _ => ("+", "-"),
        };
        self.text.replace('±', upper).replace('∓', lower)
    }

    pub fn polynomial(&self, sign: Option<Sign>) -> Result<PolyQ, ExactError> {
        self.resolved_text(sign).parse()
    }

    /// What the row counts: `Omega` for even `n`, the coset for odd `n`.
    pub fn family(&self, sign: Sign) -> Family {
        match self.table {
            FixtureTable::SpTable => Family::Sp,
            FixtureTable::OmegaTable if self.n % 2 == 0 => {
                if sign == Sign::Plus {
                    Family::OmegaPlus
                } else {
                    Family::OmegaMinus
                }
            }
            FixtureTable::OmegaTable => Family::CosetOmega(sign),
        }
    }

    pub fn sign_note(&self) -> &'static str {
        match (self.table, self.signs.len()) {
            (FixtureTable::SpTable, _) => "no sign",
            (_, 1) => "plus type only",
            _ if self.text.contains(['±', '∓']) => "upper sign for plus type, lower for minus",
            _ => "same for both types",
        }
    }
}

impl fmt::Display for FixtureEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.row_label, self.text)
    }
}

pub fn sp_fixture(n: usize) -> Option<&'static FixtureEntry> {
    SP_TABLE.iter().find(|e| e.n == n)
}

pub fn omega_fixture(n: usize) -> Option<&'static FixtureEntry> {
    OMEGA_TABLE.iter().find(|e| e.n == n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_round_trip() {
        for e in SP_TABLE.iter().chain(&OMEGA_TABLE) {
            let signs: Vec<Option<Sign>> =
                if e.signs.is_empty() { vec![None] } else { e.signs.iter().copied().map(Some).collect() };
            for s in signs {
                let text = e.resolved_text(s);
                assert_eq!(e.polynomial(s).unwrap().to_string(), text, "{e}");
            }
        }
    }

    #[test]
    fn sign_resolution() {
        let e = omega_fixture(3).unwrap();
        assert_eq!(e.resolved_text(Some(Sign::Plus)), "q^9 - q^6");
        assert_eq!(e.resolved_text(Some(Sign::Minus)), "q^9 + q^6");
        assert_eq!(e.family(Sign::Minus), Family::CosetOmega(Sign::Minus));
        assert_eq!(omega_fixture(4).unwrap().family(Sign::Plus), Family::OmegaPlus);
        assert_eq!(sp_fixture(2).unwrap().polynomial(None).unwrap().eval_int(&2.into()), atlas_exact::rat::int(76));
    }
}
