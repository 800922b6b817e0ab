//! Multicriteria composite performance intervals (MCPI).
//!
//! For each alternative and dimension the library computes a
//! `[strong, weak]` closeness-to-ideal interval from TOPSIS separation
//! measures aggregated two ways: non-compensatory (largest gap to the
//! ideal, smallest gap to the anti-ideal) and fully compensatory (mean
//! gaps). Dimension results roll up into an overall interval
//! `[min weak, mean weak]` whose span drives a 1-3 star balance rating.
//!
//! ```
//! use mcpi::{evaluate, DecisionMatrix, IndicatorSchema, RatingRule};
//! use mcpi::schema::{DimensionSpec, IndicatorSpec, Polarity};
//!
//! let spec = |id: &str, polarity| IndicatorSpec {
//!     id: id.into(),
//!     label: String::new(),
//!     polarity,
//!     weight: None,
//! };
//! let schema = IndicatorSchema::validate(vec![DimensionSpec {
//!     id: "D".into(),
//!     label: "Only dimension".into(),
//!     indicators: vec![spec("x", Polarity::Benefit), spec("y", Polarity::Cost)],
//! }])
//! .unwrap();
//! let matrix = DecisionMatrix::new(
//!     vec!["a".into(), "b".into()],
//!     vec!["x".into(), "y".into()],
//!     vec![vec![10.0, 1.0], vec![5.0, 2.0]],
//! )
//! .unwrap();
//! let results = evaluate(&schema, &matrix, RatingRule::MinMax).unwrap();
//! assert_eq!(results[0].rank, 1);
//! assert_eq!(results[0].overall.upper, 1.0);
//! ```

pub mod config;
pub mod error;
pub mod input;
pub mod interval;
pub mod matrix;
pub mod normalize;
pub mod report;
pub mod schema;
pub mod separation;
pub mod svg;

pub use error::{Error, Result};
pub use interval::{
    BetaRating, DimensionScores, ExclusionReport, ExclusionRow, Interval, McpiResult, RatingRule,
    UnrankedResult,
};
pub use matrix::{DecisionMatrix, IndicatorStats};
pub use normalize::{NormalizedMatrix, WeightedMatrix};
pub use schema::IndicatorSchema;
pub use separation::{MetricOrder, SeparationSummary};

/// Dimension scores per alternative, in matrix row order.
pub fn dimension_scores(
    schema: &IndicatorSchema,
    matrix: &DecisionMatrix,
) -> Result<Vec<Vec<DimensionScores>>> {
    let nm = normalize::normalize(matrix)?;
    let wm = normalize::weight_and_anchor(&nm, schema)?;
    (0..wm.rows())
        .map(|i| {
            separation::separations(wm.row(i), &wm, schema)?
                .iter()
                .map(interval::closeness)
                .collect()
        })
        .collect()
}

/// Full pipeline: validate, normalize, weight, separate, aggregate, rank.
/// Results keep the matrix row order.
pub fn evaluate(
    schema: &IndicatorSchema,
    matrix: &DecisionMatrix,
    rule: RatingRule,
) -> Result<Vec<McpiResult>> {
    let matrix = matrix.clone().validate(schema)?;
    let scores = dimension_scores(schema, &matrix)?;
    let unranked = matrix
        .alternatives()
        .iter()
        .zip(scores)
        .map(|(name, dims)| UnrankedResult::new(name.clone(), dims))
        .collect::<Result<Vec<_>>>()?;
    interval::rank_alternatives(unranked, rule)
}
