//! Word algebra for Artin groups: Smith normal form, finite Coxeter groups,
//! Garside normal forms, positive-monoid rewriting and index-2 subgroups.

pub mod coxeter;
pub mod dihedral;
pub mod garside;
pub mod positive;
pub mod schreier;
pub mod snf;
pub mod spherical;

use thiserror::Error;

use crate::word::WordError;
pub use coxeter::{CoxeterError, CoxeterGroup};
pub use dihedral::DihedralContext;
pub use garside::{ArtinContext, GarsideElement};
pub use positive::PositiveRewriter;
pub use snf::{smith_normal_form, Abelianization, IntMatrix, SmithForm};
pub use spherical::SphericalContext;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("rewriting class exceeds {0} words")]
    ClassCap(usize),
    #[error("word is not positive")]
    NotPositive,
    #[error("sign vector has length {0}, presentation has {1} generators")]
    SignLength(usize, usize),
    #[error("sign vector is identically zero")]
    TrivialSign,
    #[error("sign vector does not kill every relator")]
    SignNotHomomorphism,
    #[error("phi is defined for odd n >= 3, got {0}")]
    PhiNeedsOdd(u32),
    #[error("word of odd length {0} does not lie in the even subgroup")]
    OddLength(usize),
    #[error("bounds too large (length {length}, power {power})")]
    BoundOverflow { length: usize, power: i64 },
}
