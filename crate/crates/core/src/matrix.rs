//! Raw decision matrix and per-indicator descriptive statistics.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::schema::IndicatorSchema;

/// `n` alternatives by `m` indicators, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionMatrix {
    alternatives: Vec<String>,
    indicators: Vec<String>,
    values: Vec<f64>,
}

impl DecisionMatrix {
    /// Builds a matrix from rows. `indicators` names the columns.
    pub fn new(
        alternatives: Vec<String>,
        indicators: Vec<String>,
        rows: Vec<Vec<f64>>,
    ) -> Result<Self> {
        let m = indicators.len();
        if rows.len() != alternatives.len() {
            return Err(Error::Parse(format!(
                "{} alternative names for {} rows",
                alternatives.len(),
                rows.len()
            )));
        }
        let mut values = Vec::with_capacity(rows.len() * m);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != m {
                return Err(Error::RaggedRow {
                    row: i,
                    expected: m,
                    found: row.len(),
                });
            }
            if let Some(j) = row.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFiniteValue { row: i, column: j });
            }
            values.extend(row);
        }
        let mut seen = HashSet::new();
        for (i, name) in alternatives.iter().enumerate() {
            if name.trim().is_empty() {
                return Err(Error::EmptyAlternative(i));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateAlternative(name.clone()));
            }
        }
        Ok(Self {
            alternatives,
            indicators,
            values,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn indicators(&self) -> &[String] {
        &self.indicators
    }

    pub fn rows(&self) -> usize {
        self.alternatives.len()
    }

    pub fn cols(&self) -> usize {
        self.indicators.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.cols() + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        let m = self.cols();
        &self.values[i * m..(i + 1) * m]
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().skip(j).step_by(self.cols()).copied()
    }

    /// Checks the matrix against `schema`, returning it unchanged when valid.
    pub fn validate(self, schema: &IndicatorSchema) -> Result<Self> {
        match self.check(schema).into_iter().next() {
            Some(err) => Err(err),
            None => Ok(self),
        }
    }

    /// Every defect with respect to `schema`.
    pub fn check(&self, schema: &IndicatorSchema) -> Vec<Error> {
        let mut errors = Vec::new();
        if self.rows() < 2 {
            errors.push(Error::TooFewAlternatives(self.rows()));
        }
        let expected = schema.indicator_ids();
        if expected.len() != self.cols() {
            errors.push(Error::ColumnCountMismatch {
                expected: expected.len(),
                found: self.cols(),
            });
            return errors;
        }
        for (j, (want, got)) in expected.iter().zip(&self.indicators).enumerate() {
            if *want != got {
                errors.push(Error::IndicatorMismatch {
                    column: j,
                    expected: want.to_string(),
                    found: got.clone(),
                });
            }
        }
        for (j, id) in self.indicators.iter().enumerate() {
            let mut col = self.column(j);
            let first = col.next().unwrap_or(0.0);
            let (mut sq, mut varies) = (first * first, false);
            for v in col {
                sq += v * v;
                varies |= v != first;
            }
            if sq == 0.0 {
                errors.push(Error::ZeroNormColumn(id.clone()));
            } else if !varies {
                errors.push(Error::ConstantColumn(id.clone()));
            }
        }
        errors
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndicatorStats {
    pub indicator_id: String,
    pub mean: f64,
    /// Sample standard deviation (`n - 1` denominator).
    pub sd: f64,
    pub max: f64,
    pub min: f64,
    /// Bias-corrected sample excess kurtosis; `None` when `n < 4` or the
    /// column is constant.
    pub kurtosis: Option<f64>,
}

/// Column statistics in matrix column order.
pub fn describe(matrix: &DecisionMatrix) -> Vec<IndicatorStats> {
    (0..matrix.cols())
        .map(|j| {
            let col: Vec<f64> = matrix.column(j).collect();
            column_stats(matrix.indicators()[j].clone(), &col)
        })
        .collect()
}

pub fn column_stats(indicator_id: String, col: &[f64]) -> IndicatorStats {
    let n = col.len() as f64;
    let mean = col.iter().sum::<f64>() / n;
    let ss: f64 = col.iter().map(|x| (x - mean).powi(2)).sum();
    let sd = if col.len() > 1 {
        (ss / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    let max = col.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = col.iter().copied().fold(f64::INFINITY, f64::min);
    let kurtosis = (col.len() >= 4 && sd > 0.0).then(|| {
        let m4: f64 = col.iter().map(|x| ((x - mean) / sd).powi(4)).sum();
        n * (n + 1.0) / ((n - 1.0) * (n - 2.0) * (n - 3.0)) * m4
            - 3.0 * (n - 1.0).powi(2) / ((n - 2.0) * (n - 3.0))
    });
    // rounding can push the mean a hair outside [min, max] on near-constant columns
    let mean = mean.clamp(min, max);
    IndicatorStats {
        indicator_id,
        mean,
        sd,
        max,
        min,
        kurtosis,
    }
}
