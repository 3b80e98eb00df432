use thiserror::Error;

use crate::combinat::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("partition {partition} does not fit in the {rows}x{cols} rectangle")]
    DoesNotFit {
        partition: Partition,
        rows: usize,
        cols: usize,
    },
    #[error("partition {0} is not strict")]
    NotStrict(Partition),
    #[error("partition {partition} has a part larger than {bound}")]
    PartTooLarge { partition: Partition, bound: u32 },
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: Partition, outer: Partition },
    #[error("invalid label string: {0}")]
    BadString(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("mismatched boundary: {0}")]
    Boundary(String),
    #[error("contract violation: {0}")]
    Contract(String),
}

impl Error {
    /// Contract violations signal an internal inconsistency rather than bad input.
    pub fn is_contract_violation(&self) -> bool {
        matches!(self, Error::Contract(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
