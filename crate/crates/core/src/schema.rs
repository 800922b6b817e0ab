//! Dimension / indicator hierarchy with polarity and resolved weights.
//!
//! Weights are resolved globally over all `m` indicators. When no weights
//! are given every indicator gets `1/m`; when all are given they are
//! rescaled to sum to one. Under non-equal weights the resolved weight is
//! applied as-is inside each dimension, without per-dimension
//! renormalization.

use std::collections::HashSet;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    /// Higher is better.
    Benefit,
    /// Lower is better.
    Cost,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndicatorSpec {
    pub id: String,
    #[serde(default)]
    pub label: String,
    pub polarity: Polarity,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DimensionSpec {
    pub id: String,
    #[serde(default)]
    pub label: String,
    pub indicators: Vec<IndicatorSpec>,
}

/// Validated schema. Construct with [`IndicatorSchema::validate`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndicatorSchema {
    dimensions: Vec<DimensionSpec>,
    weights: Vec<f64>,
    #[serde(skip)]
    ranges: Vec<Range<usize>>,
}

/// Every defect in `dimensions`, in discovery order.
pub fn check(dimensions: &[DimensionSpec]) -> Vec<Error> {
    let mut errors = Vec::new();
    if dimensions.is_empty() {
        errors.push(Error::EmptySchema);
    }
    let mut dim_ids = HashSet::new();
    let mut ind_ids = HashSet::new();
    let mut total = 0usize;
    let mut weighted = 0usize;
    for dim in dimensions {
        if dim.id.trim().is_empty() {
            errors.push(Error::EmptyId("dimension"));
        } else if !dim_ids.insert(dim.id.as_str()) {
            errors.push(Error::DuplicateDimensionId(dim.id.clone()));
        }
        if dim.indicators.is_empty() {
            errors.push(Error::EmptyDimension(dim.id.clone()));
        }
        for ind in &dim.indicators {
            total += 1;
            if ind.id.trim().is_empty() {
                errors.push(Error::EmptyId("indicator"));
            } else if !ind_ids.insert(ind.id.as_str()) {
                errors.push(Error::DuplicateIndicatorId(ind.id.clone()));
            }
            if let Some(w) = ind.weight {
                weighted += 1;
                // NaN fails this too
                if !(w > 0.0 && w.is_finite()) {
                    errors.push(Error::NonPositiveWeight {
                        id: ind.id.clone(),
                        weight: w,
                    });
                }
            }
        }
    }
    if weighted != 0 && weighted != total {
        errors.push(Error::MixedWeightPresence { weighted, total });
    }
    errors
}

impl IndicatorSchema {
    pub fn validate(dimensions: Vec<DimensionSpec>) -> Result<Self> {
        if let Some(err) = check(&dimensions).into_iter().next() {
            return Err(err);
        }
        let raw: Vec<Option<f64>> = dimensions
            .iter()
            .flat_map(|d| d.indicators.iter().map(|i| i.weight))
            .collect();
        let m = raw.len();
        let weights = if raw.iter().all(Option::is_none) {
            vec![1.0 / m as f64; m]
        } else {
            let total: f64 = raw.iter().flatten().sum();
            raw.iter().flatten().map(|w| w / total).collect()
        };
        let mut ranges = Vec::with_capacity(dimensions.len());
        let mut start = 0;
        for d in &dimensions {
            ranges.push(start..start + d.indicators.len());
            start += d.indicators.len();
        }
        Ok(Self {
            dimensions,
            weights,
            ranges,
        })
    }

    pub fn dimensions(&self) -> &[DimensionSpec] {
        &self.dimensions
    }

    /// Resolved weights, one per indicator in schema order; sum to one.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `m`, the total number of indicators.
    pub fn indicator_count(&self) -> usize {
        self.weights.len()
    }

    pub fn dimension_count(&self) -> usize {
        self.dimensions.len()
    }

    /// Indicators in schema order, flattened across dimensions.
    pub fn indicators(&self) -> impl Iterator<Item = &IndicatorSpec> {
        self.dimensions.iter().flat_map(|d| d.indicators.iter())
    }

    pub fn indicator_ids(&self) -> Vec<&str> {
        self.indicators().map(|i| i.id.as_str()).collect()
    }

    /// Column range of dimension `k` in the flattened indicator order.
    pub fn dimension_columns(&self, k: usize) -> Range<usize> {
        self.ranges[k].clone()
    }

    pub fn dimension_index(&self, id: &str) -> Option<usize> {
        self.dimensions.iter().position(|d| d.id == id)
    }

    pub fn dimension_ids(&self) -> Vec<&str> {
        self.dimensions.iter().map(|d| d.id.as_str()).collect()
    }
}
