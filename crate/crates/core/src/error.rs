use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Failure modes shared by every operation in the crate.
///
/// Domain errors mean the inputs violate a precondition. Resource errors mean
/// the inputs are valid but the work or memory needed exceeds a configured
/// [`Limits`](crate::Limits) bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on the inputs does not hold.
    Domain(&'static str),
    /// A triangle row would need more entries than the memory budget allows.
    RowTooLarge { entries: u128, budget: u64 },
    /// The multinomial-sum enumeration would visit too many nodes.
    WorkBoundExceeded { bound: u64 },
    /// An enumeration would produce more items than allowed.
    TooManyResults { bound: u64 },
}

impl Error {
    pub fn is_resource(&self) -> bool {
        !matches!(self, Error::Domain(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::RowTooLarge { entries, budget } => {
                write!(f, "resource error: row needs {entries} entries, budget is {budget}")
            }
            Error::WorkBoundExceeded { bound } => {
                write!(f, "resource error: enumeration exceeded work bound of {bound} steps")
            }
            Error::TooManyResults { bound } => {
                write!(f, "resource error: result count exceeds bound of {bound}")
            }
        }
    }
}

impl core::error::Error for Error {}
