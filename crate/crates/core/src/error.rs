use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("schema has no dimensions")]
    EmptySchema,
    #[error("empty identifier in {0}")]
    EmptyId(&'static str),
    #[error("dimension id `{0}` appears more than once")]
    DuplicateDimensionId(String),
    #[error("indicator id `{0}` appears more than once")]
    DuplicateIndicatorId(String),
    #[error("dimension `{0}` has no indicators")]
    EmptyDimension(String),
    #[error("indicator `{id}` has non-positive weight {weight}")]
    NonPositiveWeight { id: String, weight: f64 },
    #[error("weights must be given for all indicators or none ({weighted} of {total} weighted)")]
    MixedWeightPresence { weighted: usize, total: usize },

    #[error("matrix has {found} indicator columns, schema expects {expected}")]
    ColumnCountMismatch { expected: usize, found: usize },
    #[error("column {column} is `{found}`, schema expects `{expected}`")]
    IndicatorMismatch {
        column: usize,
        expected: String,
        found: String,
    },
    #[error("row {row} has {found} values, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("non-finite value at row {row}, column {column}")]
    NonFiniteValue { row: usize, column: usize },
    #[error("alternative `{0}` appears more than once")]
    DuplicateAlternative(String),
    #[error("empty alternative name at row {0}")]
    EmptyAlternative(usize),
    #[error("need at least 2 alternatives, found {0}")]
    TooFewAlternatives(usize),
    #[error("indicator `{0}` has zero Euclidean norm")]
    ZeroNormColumn(String),
    #[error("indicator `{0}` is constant across alternatives")]
    ConstantColumn(String),

    #[error("vector lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("metric order p = {0} is invalid (need p >= 1)")]
    InvalidOrder(f64),
    #[error("indicator `{0}` has identical ideal and anti-ideal values")]
    DegenerateCriterion(String),
    #[error("dimension `{0}` has a zero closeness denominator")]
    DegenerateDimension(String),
    #[error("no dimension scores to aggregate")]
    EmptyDimensionList,
    #[error("unknown dimension `{0}`")]
    UnknownDimension(String),
    #[error("cannot exclude `{0}`: it is the only dimension")]
    LastDimension(String),
    #[error("no alternatives to rank")]
    NoAlternatives,

    #[error("invalid config: {0}")]
    Config(String),
    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptySchema => "EmptySchema",
            Error::EmptyId(_) => "EmptyId",
            Error::DuplicateDimensionId(_) => "DuplicateDimensionId",
            Error::DuplicateIndicatorId(_) => "DuplicateIndicatorId",
            Error::EmptyDimension(_) => "EmptyDimension",
            Error::NonPositiveWeight { .. } => "NonPositiveWeight",
            Error::MixedWeightPresence { .. } => "MixedWeightPresence",
            Error::ColumnCountMismatch { .. } => "ColumnCountMismatch",
            Error::IndicatorMismatch { .. } => "IndicatorMismatch",
            Error::RaggedRow { .. } => "RaggedRow",
            Error::NonFiniteValue { .. } => "NonFiniteValue",
            Error::DuplicateAlternative(_) => "DuplicateAlternative",
            Error::EmptyAlternative(_) => "EmptyAlternative",
            Error::TooFewAlternatives(_) => "TooFewAlternatives",
            Error::ZeroNormColumn(_) => "ZeroNormColumn",
            Error::ConstantColumn(_) => "ConstantColumn",
            Error::LengthMismatch(..) => "LengthMismatch",
            Error::InvalidOrder(_) => "InvalidOrder",
            Error::DegenerateCriterion(_) => "DegenerateCriterion",
            Error::DegenerateDimension(_) => "DegenerateDimension",
            Error::EmptyDimensionList => "EmptyDimensionList",
            Error::UnknownDimension(_) => "UnknownDimension",
            Error::LastDimension(_) => "LastDimension",
            Error::NoAlternatives => "NoAlternatives",
            Error::Config(_) => "InvalidConfig",
            Error::Parse(_) => "ParseError",
        }
    }
}
