use thiserror::Error;

/// Errors shared by all decision procedures.
///
/// Resource errors carry the offending cardinality so callers can tell a
/// genuinely negative answer apart from "could not decide within bounds".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow computing {op}({a}, {b})")]
    Overflow { op: &'static str, a: u64, b: u64 },

    #[error("{what} requires {required} {unit}, limit is {limit}")]
    ResourceExceeded {
        what: &'static str,
        required: u128,
        limit: u128,
        unit: &'static str,
    },

    #[error("cycle lengths must be positive")]
    ZeroLength,

    #[error("a cycle set must be nonempty")]
    EmptySet,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("trivial condition has no prime decomposition")]
    TrivialCondition,

    #[error("digraph is not a disjoint union of cycles and isolated points")]
    NotUnionOfCycles,
}

pub type Result<T> = std::result::Result<T, Error>;
