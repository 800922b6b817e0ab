//! Closeness intervals per dimension and overall, ranking, balance
//! ratings and dimension-exclusion analysis.
//!
//! A dimension interval is `[strong, weak]`, where strong closeness
//! aggregates separations non-compensatorily (largest gap to the ideal,
//! smallest gap to the anti-ideal) and weak closeness fully compensatorily
//! (mean gaps). The overall interval of an alternative is
//! `[min_k weak_k, mean_k weak_k]`.
//!
//! Spans are kept in percentage points. Ratings and ranks always use the
//! unrounded values.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::separation::SeparationSummary;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lower: f64,
    pub upper: f64,
}

impl Interval {
    pub fn new(lower: f64, upper: f64) -> Self {
        debug_assert!(lower <= upper, "interval [{lower}, {upper}] is reversed");
        Self { lower, upper }
    }

    /// `upper - lower` in percentage points.
    pub fn span(&self) -> f64 {
        100.0 * (self.upper - self.lower)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DimensionScores {
    pub dimension_id: String,
    pub strong: f64,
    pub weak: f64,
}

impl DimensionScores {
    pub fn interval(&self) -> Interval {
        Interval::new(self.strong, self.weak)
    }
}

pub fn closeness(sep: &SeparationSummary) -> Result<DimensionScores> {
    let strong_den = sep.strong_plus + sep.strong_minus;
    let weak_den = sep.weak_plus + sep.weak_minus;
    if !(strong_den > 0.0 && weak_den > 0.0) {
        return Err(Error::DegenerateDimension(sep.dimension_id.clone()));
    }
    let strong = sep.strong_minus / strong_den;
    let weak = sep.weak_minus / weak_den;
    Ok(DimensionScores {
        dimension_id: sep.dimension_id.clone(),
        strong,
        // strong <= weak holds exactly in real arithmetic; keep it exact in floats
        weak: weak.max(strong),
    })
}

pub fn overall_interval(dims: &[DimensionScores]) -> Result<Interval> {
    if dims.is_empty() {
        return Err(Error::EmptyDimensionList);
    }
    let lower = dims.iter().map(|d| d.weak).fold(f64::INFINITY, f64::min);
    let mean = dims.iter().map(|d| d.weak).sum::<f64>() / dims.len() as f64;
    Ok(Interval::new(lower, mean.max(lower)))
}

/// How spans map to balance categories.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RatingRule {
    /// `(span - min) / (max - min)` against tertile cutoffs.
    #[default]
    MinMax,
    /// `span / max` against tertile cutoffs.
    MaxFrac,
}

impl std::str::FromStr for RatingRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minmax" => Ok(Self::MinMax),
            "maxfrac" => Ok(Self::MaxFrac),
            other => Err(Error::Config(format!(
                "unknown rating rule `{other}` (expected minmax or maxfrac)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BetaRating {
    pub stars: u8,
    pub normalized_span: f64,
}

impl BetaRating {
    pub fn from_normalized(normalized_span: f64) -> Self {
        let stars = if normalized_span <= 1.0 / 3.0 {
            3
        } else if normalized_span <= 2.0 / 3.0 {
            2
        } else {
            1
        };
        Self {
            stars,
            normalized_span,
        }
    }
}

pub fn beta_ratings(spans: &[f64], rule: RatingRule) -> Vec<BetaRating> {
    let min = spans.iter().copied().fold(f64::INFINITY, f64::min);
    let max = spans.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    spans
        .iter()
        .map(|&s| {
            let normalized = match rule {
                RatingRule::MinMax if max > min => (s - min) / (max - min),
                RatingRule::MaxFrac if max > 0.0 => s / max,
                _ => 0.0,
            };
            BetaRating::from_normalized(normalized)
        })
        .collect()
}

/// An alternative's scores before the cohort-wide rank and rating exist.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnrankedResult {
    pub alternative: String,
    pub dimension_scores: Vec<DimensionScores>,
    pub overall: Interval,
}

impl UnrankedResult {
    pub fn new(alternative: String, dimension_scores: Vec<DimensionScores>) -> Result<Self> {
        let overall = overall_interval(&dimension_scores)?;
        Ok(Self {
            alternative,
            dimension_scores,
            overall,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McpiResult {
    pub alternative: String,
    pub dimension_scores: Vec<DimensionScores>,
    pub overall: Interval,
    /// Percentage points.
    pub span: f64,
    pub rank: usize,
    pub rating: BetaRating,
}

/// Descending upper bound, then descending lower bound, then ascending name.
fn rank_cmp(a: (&str, Interval), b: (&str, Interval)) -> Ordering {
    b.1.upper
        .total_cmp(&a.1.upper)
        .then(b.1.lower.total_cmp(&a.1.lower))
        .then_with(|| a.0.cmp(b.0))
}

/// 1-based ranks, aligned with the input order.
pub fn ranks(entries: &[(&str, Interval)]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_by(|&a, &b| rank_cmp(entries[a], entries[b]));
    let mut ranks = vec![0; entries.len()];
    for (pos, idx) in order.into_iter().enumerate() {
        ranks[idx] = pos + 1;
    }
    ranks
}

/// Assigns ranks and balance ratings. Output keeps the input order.
pub fn rank_alternatives(
    results: Vec<UnrankedResult>,
    rule: RatingRule,
) -> Result<Vec<McpiResult>> {
    if results.is_empty() {
        return Err(Error::NoAlternatives);
    }
    let entries: Vec<(&str, Interval)> = results
        .iter()
        .map(|r| (r.alternative.as_str(), r.overall))
        .collect();
    let ranks = ranks(&entries);
    let spans: Vec<f64> = results.iter().map(|r| r.overall.span()).collect();
    let ratings = beta_ratings(&spans, rule);
    Ok(results
        .into_iter()
        .zip(ranks)
        .zip(spans.into_iter().zip(ratings))
        .map(|((r, rank), (span, rating))| McpiResult {
            alternative: r.alternative,
            dimension_scores: r.dimension_scores,
            overall: r.overall,
            span,
            rank,
            rating,
        })
        .collect())
}

/// Results reordered by rank.
pub fn by_rank<T, F: Fn(&T) -> usize>(items: &[T], rank: F) -> Vec<&T> {
    let mut sorted: Vec<&T> = items.iter().collect();
    sorted.sort_by_key(|r| rank(r));
    sorted
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExclusionRow {
    pub alternative: String,
    pub overall: Interval,
    pub span: f64,
    pub rank: usize,
    pub baseline_rank: usize,
    /// `baseline_rank - rank`; positive means the alternative moved up.
    pub delta_rank: i64,
    pub rating: BetaRating,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExclusionReport {
    pub excluded: String,
    /// Same order as the baseline input.
    pub rows: Vec<ExclusionRow>,
}

/// Recomputes overall intervals, ranks and ratings without one dimension,
/// reusing the baseline dimension scores.
pub fn exclude_dimension(
    baseline: &[McpiResult],
    excluded: &str,
    rule: RatingRule,
) -> Result<ExclusionReport> {
    let first = baseline.first().ok_or(Error::NoAlternatives)?;
    if !first
        .dimension_scores
        .iter()
        .any(|d| d.dimension_id == excluded)
    {
        return Err(Error::UnknownDimension(excluded.to_string()));
    }
    if first.dimension_scores.len() == 1 {
        return Err(Error::LastDimension(excluded.to_string()));
    }
    let reduced = baseline
        .iter()
        .map(|r| {
            let kept: Vec<DimensionScores> = r
                .dimension_scores
                .iter()
                .filter(|d| d.dimension_id != excluded)
                .cloned()
                .collect();
            UnrankedResult::new(r.alternative.clone(), kept)
        })
        .collect::<Result<Vec<_>>>()?;
    let reranked = rank_alternatives(reduced, rule)?;
    let rows = reranked
        .into_iter()
        .zip(baseline)
        .map(|(r, base)| ExclusionRow {
            alternative: r.alternative,
            overall: r.overall,
            span: r.span,
            rank: r.rank,
            baseline_rank: base.rank,
            delta_rank: base.rank as i64 - r.rank as i64,
            rating: r.rating,
        })
        .collect();
    Ok(ExclusionReport {
        excluded: excluded.to_string(),
        rows,
    })
}
