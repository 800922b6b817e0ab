//! Minkowski L_p distances and per-dimension separation summaries.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::normalize::WeightedMatrix;
use crate::schema::IndicatorSchema;

/// Aggregation order for componentwise gaps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum MetricOrder {
    /// `(sum |x_j - y_j|^p)^(1/p)`, `p >= 1`.
    Finite(f64),
    /// Maximum gap (Tchebycheff).
    PositiveInfinity,
    /// Minimum gap. Not a metric.
    NegativeInfinity,
}

impl MetricOrder {
    pub fn finite(p: f64) -> Result<Self> {
        if p >= 1.0 {
            Ok(Self::Finite(p))
        } else {
            Err(Error::InvalidOrder(p))
        }
    }
}

pub fn lp_distance(x: &[f64], y: &[f64], order: MetricOrder) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    if x.is_empty() {
        return Err(Error::LengthMismatch(0, 0));
    }
    let gaps = x.iter().zip(y).map(|(a, b)| (a - b).abs());
    Ok(match order {
        MetricOrder::Finite(p) if p.is_nan() || p < 1.0 => return Err(Error::InvalidOrder(p)),
        MetricOrder::Finite(1.0) => gaps.sum(),
        MetricOrder::Finite(p) if p.is_infinite() => gaps.fold(0.0, f64::max),
        MetricOrder::Finite(p) => {
            // scale by the largest gap so large p cannot overflow
            let gaps: Vec<f64> = gaps.collect();
            let top = gaps.iter().copied().fold(0.0, f64::max);
            if top == 0.0 {
                0.0
            } else {
                top * gaps
                    .iter()
                    .map(|g| (g / top).powf(p))
                    .sum::<f64>()
                    .powf(p.recip())
            }
        }
        MetricOrder::PositiveInfinity => gaps.fold(0.0, f64::max),
        MetricOrder::NegativeInfinity => gaps.fold(f64::INFINITY, f64::min),
    })
}

/// Separations of one alternative from the anchors over one dimension.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeparationSummary {
    pub dimension_id: String,
    /// Largest gap to the ideal.
    pub strong_plus: f64,
    /// Smallest gap to the anti-ideal.
    pub strong_minus: f64,
    /// Mean gap to the ideal.
    pub weak_plus: f64,
    /// Mean gap to the anti-ideal.
    pub weak_minus: f64,
}

/// One summary per dimension for the weighted row `row`.
pub fn separations(
    row: &[f64],
    wm: &WeightedMatrix,
    schema: &IndicatorSchema,
) -> Result<Vec<SeparationSummary>> {
    if row.len() != wm.cols() {
        return Err(Error::LengthMismatch(row.len(), wm.cols()));
    }
    schema
        .dimensions()
        .iter()
        .enumerate()
        .map(|(k, dim)| {
            let cols = schema.dimension_columns(k);
            let l_k = cols.len() as f64;
            let v = &row[cols.clone()];
            let ideal = &wm.ideal()[cols.clone()];
            let anti = &wm.anti_ideal()[cols];
            Ok(SeparationSummary {
                dimension_id: dim.id.clone(),
                strong_plus: lp_distance(v, ideal, MetricOrder::PositiveInfinity)?,
                strong_minus: lp_distance(v, anti, MetricOrder::NegativeInfinity)?,
                weak_plus: lp_distance(v, ideal, MetricOrder::Finite(1.0))? / l_k,
                weak_minus: lp_distance(v, anti, MetricOrder::Finite(1.0))? / l_k,
            })
        })
        .collect()
}
