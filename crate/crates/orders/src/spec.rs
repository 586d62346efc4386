use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::PrimePower;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("O^-(0,q) undefined")]
    MinusZero,
    #[error("{family} needs {expected} dimension, got {dim}")]
    DimensionParity { family: String, expected: &'static str, dim: usize },
    #[error("{family} is not defined for {parity} characteristic in this tool")]
    UndefinedForParity { family: String, parity: CharParity },
    #[error("q = {q} has {actual} characteristic but the group was specified for {expected}")]
    ParityMismatch { q: u64, expected: CharParity, actual: CharParity },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `+1` or `-1`.
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        })
    }
}

impl FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plus" | "+" => Ok(Sign::Plus),
            "minus" | "-" => Ok(Sign::Minus),
            _ => Err(format!("unknown sign {s:?}, expected plus or minus")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CharParity {
    Odd,
    Even,
}

impl fmt::Display for CharParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CharParity::Odd => "odd",
            CharParity::Even => "even",
        })
    }
}

impl FromStr for CharParity {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "odd" => Ok(CharParity::Odd),
            "even" => Ok(CharParity::Even),
            _ => Err(format!("unknown characteristic parity {s:?}, expected odd or even")),
        }
    }
}

/// Witt type of a nondegenerate quadratic form over a field of odd order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum WittType {
    /// Even dimension, hyperbolic (plus type).
    Type0,
    /// Even dimension, minus type.
    TypeW,
    /// Odd dimension, `... + x^2`.
    Type1,
    /// Odd dimension, `... + delta x^2` with `delta` a non-square.
    TypeD,
}

impl WittType {
    pub fn even_dimensional(self) -> bool {
        matches!(self, WittType::Type0 | WittType::TypeW)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    OPlus,
    OMinus,
    OOdd,
    SoPlus,
    SoMinus,
    SoOdd,
    OmegaPlus,
    OmegaMinus,
    OmegaOdd,
    Sp,
    /// `O^±(2n) \ SO^±(2n)`, odd characteristic.
    CosetSo(Sign),
    /// `O^±(2n) \ Omega^±(2n)`, even characteristic.
    CosetOmega(Sign),
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::OPlus,
        Family::OMinus,
        Family::OOdd,
        Family::SoPlus,
        Family::SoMinus,
        Family::SoOdd,
        Family::OmegaPlus,
        Family::OmegaMinus,
        Family::OmegaOdd,
        Family::Sp,
        Family::CosetSo(Sign::Plus),
        Family::CosetSo(Sign::Minus),
        Family::CosetOmega(Sign::Plus),
        Family::CosetOmega(Sign::Minus),
    ];

    pub fn sign(self) -> Option<Sign> {
        match self {
            Family::OPlus | Family::SoPlus | Family::OmegaPlus => Some(Sign::Plus),
            Family::OMinus | Family::SoMinus | Family::OmegaMinus => Some(Sign::Minus),
            Family::CosetSo(s) | Family::CosetOmega(s) => Some(s),
            _ => None,
        }
    }

    pub fn odd_dimensional(self) -> bool {
        matches!(self, Family::OOdd | Family::SoOdd | Family::OmegaOdd)
    }

    pub fn is_coset(self) -> bool {
        matches!(self, Family::CosetSo(_) | Family::CosetOmega(_))
    }

    /// The full orthogonal family this one sits inside.
    pub fn ambient(self) -> Family {
        match self.sign() {
            _ if self == Family::Sp => Family::Sp,
            _ if self.odd_dimensional() => Family::OOdd,
            Some(Sign::Plus) => Family::OPlus,
            Some(Sign::Minus) => Family::OMinus,
            None => unreachable!(),
        }
    }

    pub fn defined_for(self, parity: CharParity) -> bool {
        match parity {
            CharParity::Odd => !matches!(self, Family::CosetOmega(_)),
            CharParity::Even => !matches!(
                self,
                Family::SoPlus | Family::SoMinus | Family::SoOdd | Family::OmegaOdd | Family::CosetSo(_)
            ),
        }
    }

    /// Stable identifier used in machine-readable output.
    pub fn id(self) -> &'static str {
        match self {
            Family::OPlus => "O_plus",
            Family::OMinus => "O_minus",
            Family::OOdd => "O_odd_dim",
            Family::SoPlus => "SO_plus",
            Family::SoMinus => "SO_minus",
            Family::SoOdd => "SO_odd_dim",
            Family::OmegaPlus => "Omega_plus",
            Family::OmegaMinus => "Omega_minus",
            Family::OmegaOdd => "Omega_odd_dim",
            Family::Sp => "Sp",
            Family::CosetSo(Sign::Plus) => "Coset_O_minus_SO_plus",
            Family::CosetSo(Sign::Minus) => "Coset_O_minus_SO_minus",
            Family::CosetOmega(Sign::Plus) => "Coset_O_minus_Omega_plus",
            Family::CosetOmega(Sign::Minus) => "Coset_O_minus_Omega_minus",
        }
    }

    /// Short name as typed on the command line.
    pub fn short(self) -> &'static str {
        match self {
            Family::OPlus => "O+",
            Family::OMinus => "O-",
            Family::OOdd => "O",
            Family::SoPlus => "SO+",
            Family::SoMinus => "SO-",
            Family::SoOdd => "SO",
            Family::OmegaPlus => "Omega+",
            Family::OmegaMinus => "Omega-",
            Family::OmegaOdd => "Omega",
            Family::Sp => "Sp",
            Family::CosetSo(Sign::Plus) => "O+\\SO+",
            Family::CosetSo(Sign::Minus) => "O-\\SO-",
            Family::CosetOmega(Sign::Plus) => "O+\\Omega+",
            Family::CosetOmega(Sign::Minus) => "O-\\Omega-",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short())
    }
}

impl FromStr for Family {
    type Err = SpecError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.short() == s || f.id() == s)
            .ok_or_else(|| SpecError::UnknownFamily(s.to_string()))
    }
}

/// A validated (family, dimension, characteristic parity) triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    family: Family,
    dim: usize,
    parity: CharParity,
}

impl GroupSpec {
    pub fn new(family: Family, dim: usize, parity: CharParity) -> Result<Self, SpecError> {
        let odd = dim % 2 == 1;
        if family.odd_dimensional() != odd {
            return Err(SpecError::DimensionParity {
                family: family.short().to_string(),
                expected: if family.odd_dimensional() { "odd" } else { "even" },
                dim,
            });
        }
        if family.sign() == Some(Sign::Minus) && dim == 0 {
            return Err(SpecError::MinusZero);
        }
        if !family.defined_for(parity) {
            return Err(SpecError::UndefinedForParity { family: family.short().to_string(), parity });
        }
        Ok(GroupSpec { family, dim, parity })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parity(&self) -> CharParity {
        self.parity
    }

    /// Half the dimension, rounded down.
    pub fn rank(&self) -> usize {
        self.dim / 2
    }

    pub fn check_q(&self, q: PrimePower) -> Result<(), SpecError> {
        if q.parity() != self.parity {
            return Err(SpecError::ParityMismatch { q: q.get(), expected: self.parity, actual: q.parity() });
        }
        Ok(())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::CosetSo(s) => write!(f, "O{0}({1},q)\\SO{0}({1},q)", s.symbol(), self.dim),
            Family::CosetOmega(s) => write!(f, "O{0}({1},q)\\Omega{0}({1},q)", s.symbol(), self.dim),
            fam => write!(f, "{}({},q)", fam.short(), self.dim),
        }
    }
}
