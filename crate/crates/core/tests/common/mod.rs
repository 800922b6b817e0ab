//! Fixture loading shared by the integration tests.
#![allow(dead_code)]

use std::path::{Path, PathBuf};

use mcpi::{DimensionScores, UnrankedResult};

pub const DIMENSIONS: [&str; 4] = ["PC", "WM", "SRM", "CI"];

pub fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixture(name: &str) -> PathBuf {
    crate_dir().join("tests/fixtures").join(name)
}

pub fn dataset() -> (PathBuf, PathBuf) {
    let data = crate_dir().join("data");
    (
        data.join("circular_economy.csv"),
        data.join("circular_economy.json"),
    )
}

fn records(path: &Path) -> Vec<csv::StringRecord> {
    csv::Reader::from_path(path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .records()
        .map(Result::unwrap)
        .collect()
}

/// `(alternative, [(strong, weak); 4])` in percent, file order.
pub fn dimension_grid(name: &str) -> Vec<(String, Vec<(f64, f64)>)> {
    records(&fixture(name))
        .iter()
        .map(|r| {
            let v: Vec<f64> = r.iter().skip(1).map(|c| c.parse().unwrap()).collect();
            (
                r[0].to_string(),
                v.chunks(2).map(|p| (p[0], p[1])).collect(),
            )
        })
        .collect()
}

/// Grid rows as unranked results with closeness as fractions.
pub fn unranked(grid: &[(String, Vec<(f64, f64)>)]) -> Vec<UnrankedResult> {
    grid.iter()
        .map(|(name, dims)| {
            let scores = dims
                .iter()
                .zip(DIMENSIONS)
                .map(|(&(s, w), id)| DimensionScores {
                    dimension_id: id.to_string(),
                    strong: s / 100.0,
                    weak: w / 100.0,
                })
                .collect();
            UnrankedResult::new(name.clone(), scores).unwrap()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceRow {
    pub alternative: String,
    pub rank: usize,
    pub delta_rank: Option<i64>,
    pub lower: f64,
    pub upper: f64,
    pub span: f64,
    pub stars: u8,
}

/// Reference overall rows in rank order; `delta_rank` is present when the
/// file has that column.
pub fn reference(name: &str) -> Vec<ReferenceRow> {
    let path = fixture(name);
    let mut reader = csv::Reader::from_path(&path).unwrap();
    let has_delta = reader.headers().unwrap().iter().any(|h| h == "delta_rank");
    reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            let off = has_delta as usize;
            ReferenceRow {
                alternative: r[0].to_string(),
                rank: r[1].parse().unwrap(),
                delta_rank: has_delta.then(|| r[2].trim_start_matches('+').parse().unwrap()),
                lower: r[2 + off].parse().unwrap(),
                upper: r[3 + off].parse().unwrap(),
                span: r[4 + off].parse().unwrap(),
                stars: r[5 + off].parse().unwrap(),
            }
        })
        .collect()
}
