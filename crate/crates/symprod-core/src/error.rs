//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong across the crate.
///
/// Each variant corresponds to one failure class a caller can act on; the
/// CLI maps variants to stable machine-readable error code strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different fields (e.g. a rational mixed with an F_p residue).
    FieldMismatch,
    /// Division by zero in a field.
    DivisionByZero,
    /// An F_p modulus that is not an odd prime.
    InvalidModulus(u64),
    /// Newton iteration started at a point where the derivative is not a unit.
    SingularBranch,
    /// A model that fails its validity checks (squarefreeness, smoothness,
    /// homogeneity, point-on-curve, ...). The message says which.
    Validation(String),
    /// Point enumeration requested over the rationals.
    UnsupportedEnumeration,
    /// Divisor support touches a point outside the affine chart.
    UnsupportedSupport,
    /// Degree argument outside the range a statement is proved for.
    OutOfRange { what: &'static str, value: i64, min: i64, max: i64 },
    /// The x-fiber over this base value is not rational over the working field.
    IrrationalFiber,
    /// An exhaustive enumeration would exceed the divisor budget.
    BudgetExceeded { required: u64, budget: u64 },
    /// Genus below 2: outside the scope of every statement implemented here.
    OutOfScope(String),
    /// An operation that only applies to a specific model or degree.
    NotApplicable(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch => write!(f, "operands belong to different fields"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::InvalidModulus(p) => write!(f, "{p} is not an odd prime modulus"),
            Error::SingularBranch => {
                write!(f, "derivative is not a unit at the expansion point (singular branch)")
            }
            Error::Validation(msg) => write!(f, "validation failed: {msg}"),
            Error::UnsupportedEnumeration => {
                write!(f, "point enumeration requires a prime-field model")
            }
            Error::UnsupportedSupport => {
                write!(f, "divisor support must lie in the affine chart")
            }
            Error::OutOfRange { what, value, min, max } => {
                write!(f, "{what} = {value} outside supported range [{min}, {max}]")
            }
            Error::IrrationalFiber => {
                write!(f, "fiber is irrational over the working field (value is a non-square)")
            }
            Error::BudgetExceeded { required, budget } => {
                write!(f, "enumeration needs {required} divisors, budget is {budget}")
            }
            Error::OutOfScope(msg) => write!(f, "out of scope: {msg}"),
            Error::NotApplicable(msg) => write!(f, "not applicable: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

impl Error {
    /// Stable machine-readable code for this error class.
    pub fn code(&self) -> &'static str {
        match self {
            Error::FieldMismatch => "field-mismatch",
            Error::DivisionByZero => "division-by-zero",
            Error::InvalidModulus(_) => "invalid-modulus",
            Error::SingularBranch => "singular-branch",
            Error::Validation(_) => "validation",
            Error::UnsupportedEnumeration => "unsupported-enumeration",
            Error::UnsupportedSupport => "unsupported-support",
            Error::OutOfRange { .. } => "out-of-range",
            Error::IrrationalFiber => "irrational-fiber",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::OutOfScope(_) => "out-of-scope",
            Error::NotApplicable(_) => "not-applicable",
        }
    }
}
