use thiserror::Error;

/// Errors shared by all computation modules.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("operands lie in distinct quadratic fields (sqrt({0}) vs sqrt({1}))")]
    MixedField(num_bigint::BigInt, num_bigint::BigInt),

    #[error("division by zero")]
    DivisionByZero,

    #[error("continued fraction expansion requires an irrational input")]
    RationalInput,

    #[error("continued fraction has only {available} quotients, {needed} required")]
    InsufficientQuotients { needed: usize, available: usize },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("factor count {found} at length {n} does not match expected complexity {expected}")]
    ComplexityMismatch { n: u64, expected: u64, found: u64 },

    #[error("no convergence: {0}")]
    NoConvergence(String),

    #[error("budget exceeded: {required} symbols required, budget is {budget}")]
    BudgetExceeded { budget: u64, required: u64 },

    #[error("invalid enclosure: polynomial does not change sign over the bracket")]
    InvalidEnclosure,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
