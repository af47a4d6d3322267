use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure mode of the library. Witness indices are element indices of
/// the table (or coefficient-group linear indices, where noted).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
    #[error("table is empty")]
    Empty,
    #[error("entry {value} at ({row}, {col}) is out of range 0..{n}")]
    OutOfRange { row: usize, col: usize, value: i64, n: usize },
    #[error("not a Latin square: value {value} repeated in {line}")]
    NotLatin { line: String, value: usize },
    #[error("element 0 is not two-sided neutral (fails at {0})")]
    NoIdentity(usize),
    #[error("element {0} has no two-sided inverse")]
    NoTwoSidedInverse(usize),
    #[error("set is not a subloop (not closed at {0} * {1})")]
    NotASubloop(usize, usize),
    #[error("subloop is not normal")]
    NotNormal,
    #[error("order {n} exceeds the search bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("not a permutation")]
    NotAPermutation,
    #[error("map is not additive at ({0}, {1})")]
    NotAdditive(usize, usize),
    #[error("theta is not a homomorphism at ({0}, {1})")]
    NotHomomorphism(usize, usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("factor set is not normalized at {0}")]
    NotNormalized(usize),
    #[error("C-cocycle identity fails at ({0}, {1}, {2})")]
    CocycleViolation(usize, usize, usize),
    #[error("the quotient loop Q is not a C-loop")]
    QNotCLoop,
    #[error("the quotient loop Q is not a Steiner loop")]
    QNotSteiner,
    #[error("f({0},{0}) is nonzero")]
    DiagonalNonzero(usize),
    #[error("factor set is not central (theta is not trivial)")]
    NotCentral,
    #[error("subloop is not contained in the nucleus (element {0})")]
    NotNuclear(usize),
    #[error("invalid section: {0}")]
    InvalidSection(String),
    #[error("subloop is not an abelian group")]
    NotAbelian,
    #[error("loop is not a C-loop")]
    NotCLoop,
    #[error("invalid Steiner triple system: {0}")]
    InvalidSts(String),
    #[error("order {0} is not allowed here (need n > 2)")]
    BadOrder(usize),
    #[error("structure constants violate an invariant: {0}")]
    InvariantViolation(String),
    #[error("structure constants differ at ({0}, {1})")]
    Mismatch(usize, usize),
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}
