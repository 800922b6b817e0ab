//! CSV ingestion with located diagnostics.
//!
//! The first header cell must be `alternative`; the remaining cells are
//! indicator ids. Every data cell must parse as a finite number with `.`
//! as decimal separator. Missing cells, `NA`, `NaN` and `inf` are errors.

use std::fmt;

use crate::error::Error;
use crate::matrix::DecisionMatrix;
use crate::schema::IndicatorSchema;

pub const ALTERNATIVE_HEADER: &str = "alternative";

/// One machine-readable defect, optionally tied to a file position.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub code: &'static str,
    pub file: Option<String>,
    /// 1-based line in the file.
    pub line: Option<usize>,
    pub column: Option<String>,
    pub message: String,
}

impl Diagnostic {
    pub fn from_error(err: &Error) -> Self {
        Self {
            code: err.code(),
            file: None,
            line: None,
            column: None,
            message: err.to_string(),
        }
    }

    pub fn in_file(mut self, file: &str) -> Self {
        self.file = Some(file.to_string());
        self
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ERROR {}", self.code)?;
        if let Some(file) = &self.file {
            write!(f, " file={file}")?;
        }
        if let Some(line) = self.line {
            write!(f, " line={line}")?;
        }
        if let Some(col) = &self.column {
            write!(f, " column={col}")?;
        }
        write!(f, " message={:?}", self.message)
    }
}

/// Parses CSV text into a matrix, or every defect found.
pub fn parse_matrix(text: &str) -> Result<DecisionMatrix, Vec<Diagnostic>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    // record positions may point at skipped blank lines, so count lines from the first
    // non-blank byte
    let bytes = text.as_bytes();
    let line_at = |pos: Option<&csv::Position>| {
        pos.map(|p| {
            let mut at = p.byte() as usize;
            while at < bytes.len() && matches!(bytes[at], b'\r' | b'\n') {
                at += 1;
            }
            bytes[..at].iter().filter(|&&b| b == b'\n').count() + 1
        })
    };
    let diag = |code, line, column: Option<String>, message: String| Diagnostic {
        code,
        file: None,
        line,
        column,
        message,
    };

    let header = match records.next() {
        Some(Ok(h)) => h,
        Some(Err(e)) => return Err(vec![diag("ParseError", Some(1), None, e.to_string())]),
        None => return Err(vec![diag("ParseError", None, None, "empty CSV".into())]),
    };
    let mut diags = Vec::new();
    let first = header
        .get(0)
        .map(|s| s.trim_start_matches('\u{feff}').trim());
    if first != Some(ALTERNATIVE_HEADER) {
        diags.push(diag(
            "ParseError",
            Some(1),
            Some("1".into()),
            format!("first header cell must be `{ALTERNATIVE_HEADER}`"),
        ));
    }
    let indicators: Vec<String> = header
        .iter()
        .skip(1)
        .map(|s| s.trim().to_string())
        .collect();
    let m = indicators.len();

    let mut names = Vec::new();
    let mut rows = Vec::new();
    for rec in records {
        let rec = match rec {
            Ok(r) => r,
            Err(e) => {
                let line = line_at(e.position());
                diags.push(diag("ParseError", line, None, e.to_string()));
                continue;
            }
        };
        let line = line_at(rec.position()).unwrap_or_default();
        if rec.iter().all(|c| c.trim().is_empty()) {
            continue;
        }
        if rec.len() != m + 1 {
            let err = Error::RaggedRow {
                row: rows.len(),
                expected: m + 1,
                found: rec.len(),
            };
            diags.push(diag(err.code(), Some(line), None, err.to_string()));
            continue;
        }
        let mut row = Vec::with_capacity(m);
        for (j, cell) in rec.iter().skip(1).enumerate() {
            match cell.trim().parse::<f64>() {
                Ok(v) if v.is_finite() => row.push(v),
                _ => {
                    diags.push(diag(
                        "NonFiniteValue",
                        Some(line),
                        Some(indicators[j].clone()),
                        format!("`{cell}` is not a finite number"),
                    ));
                    row.push(f64::NAN);
                }
            }
        }
        names.push(rec.get(0).unwrap_or_default().trim().to_string());
        rows.push(row);
    }
    if !diags.is_empty() {
        return Err(diags);
    }
    DecisionMatrix::new(names, indicators, rows).map_err(|e| {
        let mut d = Diagnostic::from_error(&e);
        if matches!(
            e,
            Error::DuplicateAlternative(_) | Error::EmptyAlternative(_)
        ) {
            d.column = Some(ALTERNATIVE_HEADER.into());
        }
        vec![d]
    })
}

/// Schema-level defects of a parsed matrix, with header positions.
pub fn check_against(matrix: &DecisionMatrix, schema: &IndicatorSchema) -> Vec<Diagnostic> {
    matrix
        .check(schema)
        .iter()
        .map(|err| {
            let mut d = Diagnostic::from_error(err);
            match err {
                Error::ColumnCountMismatch { .. } | Error::IndicatorMismatch { .. } => {
                    d.line = Some(1);
                }
                Error::ZeroNormColumn(id) | Error::ConstantColumn(id) => {
                    d.column = Some(id.clone());
                }
                _ => {}
            }
            if let Error::IndicatorMismatch { found, .. } = err {
                d.column = Some(found.clone());
            }
            d
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_csv() {
        let m = parse_matrix("alternative,x,y\na,1,2.5\nb,-3,4e1\n").unwrap();
        assert_eq!(m.alternatives(), ["a", "b"]);
        assert_eq!(m.indicators(), ["x", "y"]);
        assert_eq!(m.row(1), &[-3.0, 40.0]);
    }

    #[test]
    fn quoted_names_and_blank_lines() {
        let m = parse_matrix("alternative,x\n\"United Kingdom\",1\n\nb,2\n").unwrap();
        assert_eq!(m.alternatives(), ["United Kingdom", "b"]);
        let errs = parse_matrix("alternative,x\na,1\n\nb,NA\n").unwrap_err();
        assert_eq!(errs[0].line, Some(4));
    }

    #[test]
    fn missing_values_located() {
        let errs = parse_matrix("alternative,x,y\na,1,NA\nb,,2\nc,inf,3\n").unwrap_err();
        assert_eq!(errs.len(), 3);
        assert!(errs.iter().all(|d| d.code == "NonFiniteValue"));
        assert_eq!(errs[0].line, Some(2));
        assert_eq!(errs[0].column.as_deref(), Some("y"));
        assert_eq!(errs[1].line, Some(3));
        assert_eq!(errs[1].column.as_deref(), Some("x"));
        let line = errs[0].clone().in_file("d.csv").to_string();
        assert!(line.starts_with("ERROR NonFiniteValue file=d.csv line=2 column=y"));
    }

    #[test]
    fn header_and_shape_errors() {
        let errs = parse_matrix("name,x\na,1\n").unwrap_err();
        assert_eq!(errs[0].code, "ParseError");
        let errs = parse_matrix("alternative,x\na,1,2\n").unwrap_err();
        assert_eq!(errs[0].code, "RaggedRow");
        let errs = parse_matrix("alternative,x\na,1\na,2\n").unwrap_err();
        assert_eq!(errs[0].code, "DuplicateAlternative");
        assert!(parse_matrix("").is_err());
    }
}
