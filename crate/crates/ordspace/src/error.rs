//! Error type shared by every module of the crate.

/// Crate-wide error enum.
///
/// Domain errors (wrong group, non-convex subgroup, exhausted search
/// bounds, ...) are kept separate from syntax errors so that callers can
/// map them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown generator `{gen}` for {family}")]
    UnknownGenerator { gen: String, family: String },

    #[error("invalid descriptor: {0}")]
    Descriptor(String),

    #[error("element does not belong to the group: {0}")]
    WrongGroup(String),

    #[error("operation not supported for {0}")]
    Unsupported(String),

    #[error("sign vector has length {got}, series has length {expected}")]
    SignLength { got: usize, expected: usize },

    #[error("unsupported exponent: {0}")]
    ExponentRange(String),

    #[error("division by zero in {0}")]
    DivisionByZero(String),

    #[error("ball would exceed the element cap of {cap}")]
    BallCap { cap: usize },

    #[error("subgroup is not convex in ball({radius}): {x} \u{2264} {g} \u{2264} {y} with {g} outside")]
    NonConvex {
        radius: u32,
        x: String,
        g: String,
        y: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("witness search exhausted: {0}")]
    SearchExhausted(String),

    #[error("duplicate element in enumeration: {0}")]
    DuplicateElement(String),

    #[error("enumeration must begin with the identity element")]
    EnumerationStart,

    #[error("invalid series descriptor: {0}")]
    Series(String),

    #[error("the requested family is infinite: {0}")]
    InfiniteFamily(String),
}

impl Error {
    /// True for errors caused by malformed textual input rather than by
    /// the mathematical content of a request.
    pub fn is_syntax(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::UnknownGenerator { .. } | Error::Descriptor(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
