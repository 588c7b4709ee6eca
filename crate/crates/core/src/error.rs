use alloc::string::String;
use core::fmt;

/// Errors shared by all modules of the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A polynomial routine received the zero form.
    DegenerateForm,
    /// A projective lift `(0, 0)` was supplied.
    ZeroLift,
    /// Not a legal ADE family/rank pair.
    IllegalRootSystem { family: char, rank: usize },
    /// The deformation parameter hits a root wall: the named root
    /// evaluates to zero on all three components.
    InadmissibleZeta { root_index: usize },
    /// A plane is contained in the kernel of the named root.
    InadmissiblePlane { root_index: usize },
    /// An operation required a specific rank stratum.
    RankMismatch { expected: usize, found: usize },
    /// The configured enumeration / search budget was exceeded.
    BudgetExceeded(String),
    /// A stated precondition does not hold.
    Precondition(String),
    /// A theorem-level bound check failed. This is an internal alarm,
    /// not a user error.
    BoundViolation(String),
    /// Malformed textual input (e.g. a rational with zero denominator).
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateForm => write!(f, "degenerate (zero) binary form"),
            Error::ZeroLift => write!(f, "projective lift (0,0) is not allowed"),
            Error::IllegalRootSystem { family, rank } => {
                write!(f, "illegal root system {}{}", family, rank)
            }
            Error::InadmissibleZeta { root_index } => write!(
                f,
                "inadmissible zeta: root #{} vanishes on all three components",
                root_index
            ),
            Error::InadmissiblePlane { root_index } => write!(
                f,
                "inadmissible plane: contained in the kernel of root #{}",
                root_index
            ),
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {}, found {}", expected, found)
            }
            Error::BudgetExceeded(msg) => write!(f, "search budget exceeded: {}", msg),
            Error::Precondition(msg) => write!(f, "precondition violated: {}", msg),
            Error::BoundViolation(msg) => write!(f, "bound check failed: {}", msg),
            Error::Parse(msg) => write!(f, "parse error: {}", msg),
        }
    }
}
