use alloc::string::String;

/// Errors raised by the algebra kernels, complex constructions and the
/// zeta/torsion pipelines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("coefficient rings differ ({left} vs {right})")]
    RingMismatch { left: &'static str, right: &'static str },
    #[error("lowest coefficient {0} is not a unit")]
    NotAUnit(String),
    #[error("series is zero to the known precision")]
    ZeroSeries,
    #[error("series has a nonzero term in degree {0} (positive valuation required)")]
    NonzeroConstantTerm(i64),
    #[error("constant term is not 1")]
    ConstantTermNotOne,
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("power series ring does not contain t^{0}")]
    NegativeDegree(i64),
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("entry {entry} does not belong to {ring}")]
    EntryNotInRing { entry: String, ring: String },
    #[error(
        "boundary squares to nonzero: (d{prev} o d{degree})[{row},{col}] = {value} (row {row_label}, column {col_label})",
        prev = degree.saturating_sub(1)
    )]
    BoundarySquareNonzero {
        degree: usize,
        row: usize,
        col: usize,
        row_label: String,
        col_label: String,
        value: String,
    },
    #[error("unsupported base change: {0}")]
    UnsupportedChange(String),
    #[error("tower level {0} is not the reduction of level {next}", next = .0 + 1)]
    LevelMismatch(usize),
    #[error("inconsistent tower: {0}")]
    InconsistentTower(String),
    #[error("not a chain map in degree {degree}: entry [{row},{col}] of the commutator is {value}")]
    NotAChainMap { degree: usize, row: usize, col: usize, value: String },
    #[error("complex is not acyclic over the fraction field: H_{degree} has rank {rank}")]
    NotAcyclic { degree: usize, rank: usize },
    #[error("torsion {0} has lowest coefficient outside {{+1, -1}}")]
    NormalizationImpossible(String),
    #[error("chain map is not an equivalence: its cone has H_{degree} of rank {rank}")]
    NotAnEquivalence { degree: usize, rank: usize },
    #[error("boundary raises filtration level: {from} (level {from_level}) hits {to} (level {to_level})")]
    NotLevelTriangular { from: String, from_level: usize, to: String, to_level: usize },
    #[error("incidence {from} -> {to} joins indices {from_index} and {to_index}")]
    IndexMismatch { from: String, to: String, from_index: usize, to_index: usize },
    #[error("requested order {requested} exceeds the data order {available}")]
    InsufficientDataOrder { requested: i64, available: i64 },
    #[error("requested order {requested} exceeds the orbit completeness order {available}")]
    InsufficientOrbitOrder { requested: i64, available: i64 },
    #[error("{0} must have positive t-valuation")]
    PositiveValuationRequired(String),
    #[error("A^{0} - I is singular (non-hyperbolic iterate)")]
    NonHyperbolic(u32),
    #[error("lattice enumeration found {found} fixed points of A^{iterate}, expected |det(A^k - I)| = {expected}")]
    OracleMismatch { iterate: u32, found: usize, expected: String },
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("xi of {generator} modulo t^{order} differs from its finite-sum truncation")]
    TruncationMismatch { generator: String, order: i64 },
    #[error("duplicate label {0}")]
    DuplicateLabel(String),
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("negative power t^{exponent} in incidence {from} -> {to}")]
    NegativePower { from: String, to: String, exponent: i64 },
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("invalid value: {0}")]
    Invalid(String),
}

pub type Result<T> = core::result::Result<T, Error>;
