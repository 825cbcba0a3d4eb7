use num_bigint::BigInt;
use std::fmt;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside the domain of the operation (negative argument,
    /// branch index outside the system, point outside the map's domain).
    Domain(String),
    /// Structural problem in a system description (table gap, bad slope,
    /// digit bound violation, mismatched certificate inputs).
    Spec(String),
    /// The orbit reached an integer at `step`, leaving the set on which
    /// the symbolic machinery is defined.
    IntegerHit { step: usize, value: BigInt },
    /// A symbol word fails the consecutive-image containment rule at `position`.
    Inadmissible { position: usize },
    /// An explicit precondition of the operation does not hold.
    Precondition(String),
    /// A certified enclosure could not be tightened enough.
    Precision(String),
    /// A bound the theory guarantees failed in exact arithmetic; this
    /// indicates a bug and is surfaced loudly instead of being absorbed.
    TheoremViolation(String),
    /// The operation is only defined for specific systems.
    Unsupported(String),
    /// Malformed textual input (rationals, words, system files).
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Spec(msg) => write!(f, "spec error: {msg}"),
            Error::IntegerHit { step, value } => {
                write!(f, "orbit hits integer {value} at step {step}")
            }
            Error::Inadmissible { position } => {
                write!(f, "word is not admissible at position {position}")
            }
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
            Error::Precision(msg) => write!(f, "precision error: {msg}"),
            Error::TheoremViolation(msg) => write!(f, "theorem violation: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
