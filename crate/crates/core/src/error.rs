use alloc::string::String;
use core::fmt;

/// Errors raised by the algebra and search routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The requested field order is not a prime power (or is below 2).
    NotPrimePower(u64),
    /// The requested field exceeds the supported size caps.
    FieldTooLarge(u64),
    /// Inversion or division by zero.
    DivisionByZero,
    /// An element code is not in `[0, q)`.
    InvalidElement { code: u32, order: u32 },
    /// Operands live over different fields.
    SpecMismatch,
    /// A polynomial has higher degree than the target allows.
    DegreeExceeded { degree: usize, max: usize },
    /// A polynomial does not have the degree the operation requires.
    DegreeMismatch { expected: usize, found: Option<usize> },
    /// The zero polynomial or zero form was given where a nonzero one is needed.
    Zero,
    /// Parameters outside the desk-scale ranges the searches support.
    OutOfRange(String),
    /// The decomposition is not visibly irreducible.
    NotAVid,
    /// A degree class of a shape has more slots than irreducible forms exist.
    UnsatisfiableShape {
        degree: u32,
        slots: usize,
        available: usize,
    },
    /// Expected an irreducible cubic over F_3.
    NotIrreducibleCubic,
    /// Malformed shape string.
    Parse(String),
    /// No verifier is registered under this claim id.
    UnknownClaim(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            Error::FieldTooLarge(q) => write!(f, "field of order {q} exceeds the size cap"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::InvalidElement { code, order } => {
                write!(f, "element code {code} out of range for a field of order {order}")
            }
            Error::SpecMismatch => f.write_str("operands belong to different fields"),
            Error::DegreeExceeded { degree, max } => {
                write!(f, "degree {degree} exceeds the maximum {max}")
            }
            Error::DegreeMismatch { expected, found } => match found {
                Some(found) => write!(f, "expected degree {expected}, found {found}"),
                None => write!(f, "expected degree {expected}, found the zero polynomial"),
            },
            Error::Zero => f.write_str("zero polynomial where a nonzero one is required"),
            Error::OutOfRange(what) => write!(f, "out of range: {what}"),
            Error::NotAVid => f.write_str("not a visibly irreducible decomposition"),
            Error::UnsatisfiableShape {
                degree,
                slots,
                available,
            } => write!(
                f,
                "shape needs {slots} inequivalent slots of degree {degree} but only {available} irreducible forms exist"
            ),
            Error::NotIrreducibleCubic => f.write_str("not an irreducible cubic over F_3"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::UnknownClaim(id) => write!(f, "unknown claim {id:?}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
