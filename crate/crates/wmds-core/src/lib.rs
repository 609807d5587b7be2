//! Exact combinatorial machinery for weak Mori dream spaces.
//!
//! Everything is computed over arbitrary-precision integers and rationals:
//! Gale duality, F/W-matrix classification, polyhedral cone arithmetic,
//! secondary-fan (GKZ) decompositions, enumeration of simplicial fans on a
//! fixed ray set, sharp completions, and the chamber-walk classification of
//! minimal model programs for divisor classes.

pub mod cli;
pub mod cone;
pub mod fanbunch;
pub mod gkz;
pub mod lattice;
pub mod sfenum;
pub mod wmds;

use thiserror::Error;

/// Errors surfaced by the library. Domain negatives (e.g. "not fillable")
/// are regular return values, not errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("zero column at index {0}")]
    ZeroColumn(usize),
    #[error("trivial Gale dual: matrix has full column rank")]
    TrivialGaleDual,
    #[error("effective cone not pointed")]
    EffectiveConeNotPointed,
    #[error("effective cone not full-dimensional")]
    EffectiveConeNotFullDimensional,
    #[error("rank condition violated: {0}")]
    RankDeficient(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("outside pseudo-effective cone")]
    OutsidePseudoEffective,
    #[error("moving cone is not full-dimensional")]
    MovNotFullDimensional,
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("not a filling cell")]
    NotFillingCell,
    #[error("ideal does not define a valid fan: {0}")]
    IdealNotFan(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
