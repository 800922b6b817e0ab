//! Vector normalization, weighting and ideal / anti-ideal anchors.

use crate::error::{Error, Result};
use crate::matrix::DecisionMatrix;
use crate::schema::{IndicatorSchema, Polarity};

/// Each column divided by its Euclidean norm. Row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedMatrix {
    values: Vec<f64>,
    rows: usize,
    cols: usize,
}

impl NormalizedMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.cols..(i + 1) * self.cols]
    }
}

pub fn normalize(matrix: &DecisionMatrix) -> Result<NormalizedMatrix> {
    let (rows, cols) = (matrix.rows(), matrix.cols());
    let mut norms = Vec::with_capacity(cols);
    for j in 0..cols {
        let norm = matrix.column(j).map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::ZeroNormColumn(matrix.indicators()[j].clone()));
        }
        norms.push(norm);
    }
    let values = (0..rows)
        .flat_map(|i| {
            matrix
                .row(i)
                .iter()
                .zip(&norms)
                .map(|(x, norm)| x / norm)
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(NormalizedMatrix { values, rows, cols })
}

/// Weighted normalized values with per-criterion ideal (`V+`) and
/// anti-ideal (`V-`) anchors.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedMatrix {
    values: Vec<f64>,
    rows: usize,
    cols: usize,
    ideal: Vec<f64>,
    anti_ideal: Vec<f64>,
}

impl WeightedMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.cols..(i + 1) * self.cols]
    }

    pub fn ideal(&self) -> &[f64] {
        &self.ideal
    }

    pub fn anti_ideal(&self) -> &[f64] {
        &self.anti_ideal
    }
}

pub fn weight_and_anchor(
    nm: &NormalizedMatrix,
    schema: &IndicatorSchema,
) -> Result<WeightedMatrix> {
    let m = schema.indicator_count();
    if nm.cols() != m {
        return Err(Error::ColumnCountMismatch {
            expected: m,
            found: nm.cols(),
        });
    }
    let weights = schema.weights();
    let values: Vec<f64> = nm
        .values
        .iter()
        .enumerate()
        .map(|(idx, v)| weights[idx % m] * v)
        .collect();
    let mut ideal = Vec::with_capacity(m);
    let mut anti_ideal = Vec::with_capacity(m);
    for (j, spec) in schema.indicators().enumerate() {
        let col = values.iter().skip(j).step_by(m).copied();
        let (lo, hi) = col.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
        if lo == hi {
            return Err(Error::DegenerateCriterion(spec.id.clone()));
        }
        let (best, worst) = match spec.polarity {
            Polarity::Benefit => (hi, lo),
            Polarity::Cost => (lo, hi),
        };
        ideal.push(best);
        anti_ideal.push(worst);
    }
    Ok(WeightedMatrix {
        values,
        rows: nm.rows(),
        cols: m,
        ideal,
        anti_ideal,
    })
}
