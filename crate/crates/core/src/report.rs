//! Report tables and their CSV / JSON renderings.
//!
//! Closeness values are displayed as percentages rounded to the configured
//! number of decimals. Both renderings are produced from the same formatted
//! cells, so a CSV table and its JSON counterpart parse to identical
//! numbers.

use serde_json::{json, Map, Value};

use crate::config::Options;
use crate::error::Result;
use crate::interval::{self, ExclusionReport, McpiResult};
use crate::matrix::{self, DecisionMatrix};
use crate::schema::IndicatorSchema;

/// Decimal places used by the descriptive statistics table.
pub const DESCRIBE_DECIMALS: u8 = 2;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    /// Signed integer displayed with an explicit `+` in CSV.
    Delta(i64),
    /// Pre-formatted number; the string is the single source of truth.
    Num(String),
    Missing,
}

impl Cell {
    pub fn num(value: f64, decimals: u8) -> Self {
        // `+ 0.0` folds -0.0 into 0.0
        let s = format!("{:.*}", decimals as usize, value + 0.0);
        Cell::Num(
            if s.starts_with("-") && s.trim_start_matches(['-', '0', '.']).is_empty() {
                s[1..].to_string()
            } else {
                s
            },
        )
    }

    pub fn percent(fraction: f64, decimals: u8) -> Self {
        Self::num(100.0 * fraction, decimals)
    }

    fn csv(&self) -> String {
        match self {
            Cell::Text(s) | Cell::Num(s) => s.clone(),
            Cell::Int(v) => v.to_string(),
            Cell::Delta(v) => format!("{v:+}"),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(v) | Cell::Delta(v) => json!(v),
            Cell::Num(s) => s
                .parse::<serde_json::Number>()
                .map(Value::Number)
                .unwrap_or(Value::Null),
            Cell::Missing => Value::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: &'static str,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "columns": self.columns,
            "rows": self.rows.iter().map(|r| r.iter().map(Cell::json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Tables of one run, plus an optional chart.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ReportBundle {
    pub tables: Vec<Table>,
    pub svg: Option<String>,
}

impl ReportBundle {
    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    /// One JSON document holding every table, keyed by table name.
    pub fn to_json(&self) -> String {
        let mut tables = Map::new();
        for t in &self.tables {
            tables.insert(t.name.to_string(), t.to_json());
        }
        let mut s = serde_json::to_string_pretty(&json!({ "tables": tables }))
            .expect("serializable report");
        s.push('\n');
        s
    }

    /// Every table as CSV, each preceded by a `# <name>` line.
    pub fn to_csv_stream(&self) -> String {
        self.tables
            .iter()
            .map(|t| format!("# {}\n{}", t.name, t.to_csv()))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

pub fn describe_table(matrix: &DecisionMatrix, schema: &IndicatorSchema) -> Table {
    let d = DESCRIBE_DECIMALS;
    let labels: Vec<&str> = schema.indicators().map(|i| i.label.as_str()).collect();
    let dims: Vec<&str> = schema
        .dimensions()
        .iter()
        .flat_map(|dim| dim.indicators.iter().map(move |_| dim.id.as_str()))
        .collect();
    let rows = matrix::describe(matrix)
        .into_iter()
        .enumerate()
        .map(|(j, s)| {
            vec![
                Cell::Text(dims.get(j).copied().unwrap_or_default().to_string()),
                Cell::Text(s.indicator_id),
                Cell::Text(labels.get(j).copied().unwrap_or_default().to_string()),
                Cell::num(s.mean, d),
                Cell::num(s.sd, d),
                Cell::num(s.max, d),
                Cell::num(s.min, d),
                s.kurtosis.map_or(Cell::Missing, |k| Cell::num(k, d)),
            ]
        })
        .collect();
    Table {
        name: "describe",
        columns: [
            "dimension",
            "indicator",
            "label",
            "mean",
            "sd",
            "max",
            "min",
            "kurtosis",
        ]
        .map(String::from)
        .to_vec(),
        rows,
    }
}

/// Per-dimension `[strong, weak]` intervals in input order.
pub fn dimensions_table(results: &[McpiResult], decimals: u8) -> Table {
    let mut columns = vec!["alternative".to_string()];
    if let Some(first) = results.first() {
        for d in &first.dimension_scores {
            columns.push(format!("{}_lower", d.dimension_id));
            columns.push(format!("{}_upper", d.dimension_id));
        }
    }
    let rows = results
        .iter()
        .map(|r| {
            let mut row = vec![Cell::Text(r.alternative.clone())];
            for d in &r.dimension_scores {
                row.push(Cell::percent(d.strong, decimals));
                row.push(Cell::percent(d.weak, decimals));
            }
            row
        })
        .collect();
    Table {
        name: "dimensions",
        columns,
        rows,
    }
}

pub const OVERALL_COLUMNS: [&str; 7] = [
    "alternative",
    "rank",
    "lower",
    "upper",
    "span",
    "beta_rating",
    "normalized_span",
];

/// Overall intervals in rank order.
pub fn overall_table(results: &[McpiResult], decimals: u8) -> Table {
    let rows = interval::by_rank(results, |r| r.rank)
        .into_iter()
        .map(|r| {
            vec![
                Cell::Text(r.alternative.clone()),
                Cell::Int(r.rank as i64),
                Cell::percent(r.overall.lower, decimals),
                Cell::percent(r.overall.upper, decimals),
                Cell::num(r.span, decimals),
                Cell::Int(r.rating.stars as i64),
                Cell::num(r.rating.normalized_span, 4),
            ]
        })
        .collect();
    Table {
        name: "overall",
        columns: OVERALL_COLUMNS.map(String::from).to_vec(),
        rows,
    }
}

/// Overall intervals without one dimension, in the new rank order.
pub fn exclusion_table(report: &ExclusionReport, decimals: u8) -> Table {
    let rows = interval::by_rank(&report.rows, |r| r.rank)
        .into_iter()
        .map(|r| {
            vec![
                Cell::Text(r.alternative.clone()),
                Cell::Int(r.rank as i64),
                Cell::Delta(r.delta_rank),
                Cell::percent(r.overall.lower, decimals),
                Cell::percent(r.overall.upper, decimals),
                Cell::num(r.span, decimals),
                Cell::Int(r.rating.stars as i64),
                Cell::num(r.rating.normalized_span, 4),
            ]
        })
        .collect();
    Table {
        name: "exclusion",
        columns: [
            "alternative",
            "rank",
            "delta_rank",
            "lower",
            "upper",
            "span",
            "beta_rating",
            "normalized_span",
        ]
        .map(String::from)
        .to_vec(),
        rows,
    }
}

/// Runs the pipeline and assembles the dimension, overall and (when
/// `options.exclude` is set) exclusion tables.
pub fn compute(
    schema: &IndicatorSchema,
    matrix: &DecisionMatrix,
    options: &Options,
) -> Result<ReportBundle> {
    let results = crate::evaluate(schema, matrix, options.rating_rule)?;
    let mut tables = vec![
        dimensions_table(&results, options.decimals),
        overall_table(&results, options.decimals),
    ];
    if let Some(dim) = &options.exclude {
        let report = interval::exclude_dimension(&results, dim, options.rating_rule)?;
        tables.push(exclusion_table(&report, options.decimals));
    }
    Ok(ReportBundle { tables, svg: None })
}
