//! Crate-wide error type and the report returned by model validation.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Outcome of validating a model against its structural invariants.
///
/// Validation never fails hard; it collects every violation it can find so
/// a scenario author sees all problems at once. Each entry names the
/// offending table cell or row.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, violation: String) {
        self.violations.push(violation);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "ok")
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A model failed validation; the report lists every violation.
    InvalidModel(ValidationReport),
    /// Two containers that must agree in shape do not.
    ShapeMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },
    /// A spend or probability that must be nonnegative is not.
    NegativeValue { what: &'static str, value: f64 },
    /// A per-recipient success probability lies outside [0, 1].
    InvalidProbability { value: f64 },
    /// A delusion was requested with fewer than two states to choose from.
    DegenerateDelusion { state_count: usize },
    /// A state or action index fell outside its space.
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },
    /// A budget or cost is not a grid multiple, or lies off the grid.
    OffGrid { what: &'static str, value: f64, step: f64 },
    /// The budget grid would require more cells than is sane to enumerate.
    GridTooLarge { cells: u128 },
    /// An attack action violates its own encoding invariants.
    MalformedAttack(&'static str),
    /// An attack action cannot be paid for from the leftover budgets.
    InfeasibleAttack,
    /// A policy does not cover the horizon it is used against.
    HorizonMismatch { expected: usize, actual: usize },
    /// A value row does not cover the DPS space it is indexed by.
    ValueRowMismatch { expected: usize, actual: usize },
    /// The requested baseline is only defined for a specific group size.
    UnsupportedBaseline { what: &'static str, actual: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidModel(report) => {
                write!(f, "model validation failed: {report}")
            }
            Error::ShapeMismatch {
                what,
                expected,
                actual,
            } => write!(f, "{what}: expected length {expected}, got {actual}"),
            Error::NegativeValue { what, value } => {
                write!(f, "{what} must be nonnegative, got {value}")
            }
            Error::InvalidProbability { value } => {
                write!(f, "probability out of [0, 1]: {value}")
            }
            Error::DegenerateDelusion { state_count } => write!(
                f,
                "cannot fool a recipient with positive probability when only {state_count} state(s) exist"
            ),
            Error::IndexOutOfRange { what, index, len } => {
                write!(f, "{what} index {index} out of range (len {len})")
            }
            Error::OffGrid { what, value, step } => {
                write!(f, "{what} {value} is not a multiple of grid step {step}")
            }
            Error::GridTooLarge { cells } => {
                write!(f, "budget grid needs {cells} cells; refusing to enumerate")
            }
            Error::MalformedAttack(why) => write!(f, "malformed attack action: {why}"),
            Error::InfeasibleAttack => write!(f, "attack action exceeds leftover budgets"),
            Error::HorizonMismatch { expected, actual } => {
                write!(f, "policy covers {actual} step(s), horizon needs {expected}")
            }
            Error::ValueRowMismatch { expected, actual } => {
                write!(f, "value row has {actual} entries, DPS space has {expected}")
            }
            Error::UnsupportedBaseline { what, actual } => {
                write!(f, "baseline requires {what}, got {actual}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
