use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported field degree {0}: expected odd m with 3 <= m <= 31")]
    FieldDegree(u32),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("generator closure exceeded the expected order {0}")]
    ClosureOverflow(usize),
    #[error("{0} does not divide {1}")]
    NotDivisor(u64, u64),
    #[error("cache format: {0}")]
    Cache(String),
    #[error("subgroup budget exceeded with {0} distinct subgroups held")]
    SubgroupBudget(usize),
    #[error("budget exhausted after {done} of {total} class representatives")]
    Budget { done: usize, total: usize },
    #[error("consistency check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
