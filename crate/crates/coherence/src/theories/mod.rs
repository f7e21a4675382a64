//! The named theory catalog, the standard morphisms between its members,
//! the dimension-change functors, and the quasi-section validator.

pub mod builders;
pub mod change;
pub mod morphisms;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::presentation::TheoryPresentation;

pub use change::{coherified_pointed_magma_report, change_dimension, validate_quasi_section, DimensionChange};
pub use morphisms::{standard_morphism, standard_morphism_names};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoryName {
    Fin,
    Bin,
    Mon,
    Assoc,
    Comm,
    Braid,
    Sym,
    Bal,
    Twist,
    Point,
    SMon,
    SBraid,
    SComm,
    SBal,
    SSym,
    Magmas,
    Monoids,
    CommMonoids,
}

impl TheoryName {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoryName::Fin => "Fin",
            TheoryName::Bin => "Bin",
            TheoryName::Mon => "Mon",
            TheoryName::Assoc => "Assoc",
            TheoryName::Comm => "Comm",
            TheoryName::Braid => "Braid",
            TheoryName::Sym => "Sym",
            TheoryName::Bal => "Bal",
            TheoryName::Twist => "Twist",
            TheoryName::Point => "Point",
            TheoryName::SMon => "sMon",
            TheoryName::SBraid => "sBraid",
            TheoryName::SComm => "sComm",
            TheoryName::SBal => "sBal",
            TheoryName::SSym => "sSym",
            TheoryName::Magmas => "Magmas",
            TheoryName::Monoids => "Monoids",
            TheoryName::CommMonoids => "CommMonoids",
        }
    }
}

impl fmt::Display for TheoryName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoryName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        all_theory_names()
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheory(s.to_string()))
    }
}

/// Every catalog name, in a fixed order.
pub fn all_theory_names() -> Vec<TheoryName> {
    vec![
        TheoryName::Fin,
        TheoryName::Bin,
        TheoryName::Mon,
        TheoryName::Assoc,
        TheoryName::Comm,
        TheoryName::Braid,
        TheoryName::Sym,
        TheoryName::Bal,
        TheoryName::Twist,
        TheoryName::Point,
        TheoryName::SMon,
        TheoryName::SBraid,
        TheoryName::SComm,
        TheoryName::SBal,
        TheoryName::SSym,
        TheoryName::Magmas,
        TheoryName::Monoids,
        TheoryName::CommMonoids,
    ]
}

pub fn build_theory(name: TheoryName) -> TheoryPresentation {
    match name {
        TheoryName::Fin => builders::fin(),
        TheoryName::Bin => builders::bin(),
        TheoryName::Mon => builders::mon(),
        TheoryName::Assoc => builders::assoc(),
        TheoryName::Comm => builders::comm(),
        TheoryName::Braid => builders::braid(),
        TheoryName::Sym => builders::sym(),
        TheoryName::Bal => builders::bal(),
        TheoryName::Twist => builders::twist(),
        TheoryName::Point => builders::point(),
        TheoryName::SMon => builders::s_mon(),
        TheoryName::SBraid => builders::s_braid(),
        TheoryName::SComm => builders::s_comm(),
        TheoryName::SBal => builders::s_bal(),
        TheoryName::SSym => builders::s_sym(),
        TheoryName::Magmas => builders::magmas(),
        TheoryName::Monoids => builders::monoids(),
        TheoryName::CommMonoids => builders::comm_monoids(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip_case_insensitively() {
        for name in all_theory_names() {
            assert_eq!(name.as_str().parse::<TheoryName>().unwrap(), name);
            assert_eq!(name.as_str().to_lowercase().parse::<TheoryName>().unwrap(), name);
        }
        assert!("NoSuchTheory".parse::<TheoryName>().is_err());
    }

    #[test]
    fn catalog_has_eighteen_members() {
        assert_eq!(all_theory_names().len(), 18);
    }
}
