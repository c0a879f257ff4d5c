use num_bigint::BigInt;

/// Errors produced by the crate.
///
/// Domain errors reject inputs outside an operation's stated domain;
/// contract violations flag inputs that break a documented precondition
/// (for example, a triple handed to the curve map that is not actually a
/// solution of the equation).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("discriminant mismatch: {left} vs {right}")]
    DiscMismatch { left: i64, right: i64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{what} must be nonzero")]
    ZeroInput { what: &'static str },

    #[error("{value} is not squarefree")]
    NotSquarefree { value: i64 },

    #[error("invalid field discriminant {value}: must be squarefree and not 0 or 1")]
    InvalidDisc { value: i64 },

    #[error("{value} is not prime")]
    NotPrime { value: u64 },

    #[error("exponent {value} must be a prime greater than 3")]
    PrimeTooSmall { value: u64 },

    #[error("coefficient {name} = {value} is not {p}th-powerfree")]
    NotPowerfree { name: &'static str, value: BigInt, p: u32 },

    #[error("ring mismatch: operands belong to different rings of integers")]
    RingMismatch,

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}
