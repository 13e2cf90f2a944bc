use thiserror::Error;

use crate::polynomial::DoublePolynomial;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Cartan type {0:?}")]
    InvalidCartanType(String),
    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("division by the zero linear form")]
    DivisionByZero,
    #[error("not exactly divisible, remainder {remainder}")]
    NotDivisible { remainder: DoublePolynomial },
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("enumeration exceeds the cap of {cap} elements")]
    EnumerationLimit { cap: usize },
    #[error("Weyl group of order {order} exceeds the bound {bound}")]
    GroupTooLarge { order: u128, bound: u128 },
    #[error("cutoff {cutoff} too small, need at least {needed}")]
    CutoffTooSmall { cutoff: usize, needed: usize },
    #[error("missing sigma representative for {0}")]
    MissingSigma(String),
    #[error("linear system for sigma representatives of degree {0} is inconsistent")]
    InconsistentSystem(usize),
    #[error("GKM edge condition fails between {u} and {v}")]
    EdgeCondition { u: String, v: String },
    #[error("polynomial {0} is not t-only")]
    NotTOnly(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
