//! Interval chart: one horizontal bar per alternative on a 0-100 axis.
//!
//! Output is a pure function of the input rows. Coordinates are printed
//! with two decimals, so identical inputs give identical bytes.

use std::fmt::Write;

use serde_json::Value;

use crate::error::{Error, Result};

/// One chart row, values in percent.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartRow {
    pub label: String,
    pub lower: f64,
    pub upper: f64,
    pub stars: u8,
}

const WIDTH: f64 = 760.0;
const LABEL_WIDTH: f64 = 150.0;
const STAR_WIDTH: f64 = 60.0;
const TOP: f64 = 48.0;
const ROW_HEIGHT: f64 = 18.0;
const BAR_HEIGHT: f64 = 10.0;
const BOTTOM: f64 = 36.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Renders rows in the given order (callers sort by rank).
pub fn render(rows: &[ChartRow], title: &str) -> String {
    let plot_left = LABEL_WIDTH + 10.0;
    let plot_right = WIDTH - STAR_WIDTH - 10.0;
    let x = |pct: f64| plot_left + (plot_right - plot_left) * pct.clamp(0.0, 100.0) / 100.0;
    let axis_y = TOP + ROW_HEIGHT * rows.len() as f64;
    let height = axis_y + BOTTOM;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH:.0}" height="{height:.0}" viewBox="0 0 {WIDTH:.0} {height:.0}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let _ = writeln!(
        s,
        r#"<text class="title" x="{:.2}" y="24" font-size="14" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );

    // grid and ticks
    let _ = writeln!(s, r#"<g class="axis">"#);
    for tick in (0..=100).step_by(10) {
        let tx = x(tick as f64);
        let _ = writeln!(
            s,
            r##"<line x1="{tx:.2}" y1="{:.2}" x2="{tx:.2}" y2="{axis_y:.2}" stroke="#dddddd"/>"##,
            TOP - 6.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{tx:.2}" y="{:.2}" text-anchor="middle">{tick}</text>"#,
            axis_y + 14.0
        );
    }
    let _ = writeln!(
        s,
        r##"<line x1="{:.2}" y1="{axis_y:.2}" x2="{:.2}" y2="{axis_y:.2}" stroke="#333333"/>"##,
        x(0.0),
        x(100.0)
    );
    let _ = writeln!(s, "</g>");

    for (i, row) in rows.iter().enumerate() {
        let cy = TOP + ROW_HEIGHT * (i as f64 + 0.5);
        let (x0, x1) = (x(row.lower), x(row.upper));
        let _ = writeln!(s, r#"<g class="row">"#);
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            LABEL_WIDTH,
            cy + 4.0,
            escape(&row.label)
        );
        if x1 - x0 < 0.5 {
            let _ = writeln!(
                s,
                r##"<circle class="bar point" cx="{x0:.2}" cy="{cy:.2}" r="3.50" fill="#1f4e79"><title>[{:.1}, {:.1}]</title></circle>"##,
                row.lower, row.upper
            );
        } else {
            let _ = writeln!(
                s,
                r##"<rect class="bar" x="{x0:.2}" y="{:.2}" width="{:.2}" height="{BAR_HEIGHT:.2}" fill="#1f4e79"><title>[{:.1}, {:.1}]</title></rect>"##,
                cy - BAR_HEIGHT / 2.0,
                x1 - x0,
                row.lower,
                row.upper
            );
        }
        let _ = writeln!(
            s,
            r#"<text class="stars" x="{:.2}" y="{:.2}">{}</text>"#,
            plot_right + 8.0,
            cy + 4.0,
            "\u{2605}".repeat(row.stars as usize)
        );
        let _ = writeln!(s, "</g>");
    }
    s.push_str("</svg>\n");
    s
}

/// Extracts chart rows from a JSON report produced by
/// [`ReportBundle::to_json`](crate::report::ReportBundle::to_json).
/// `table` is `overall` or `exclusion`; rows keep the table (rank) order.
pub fn rows_from_report(report: &Value, table: &str) -> Result<Vec<ChartRow>> {
    let missing = |what: &str| Error::Parse(format!("report: {what}"));
    let t = report
        .get("tables")
        .and_then(|t| t.get(table))
        .ok_or_else(|| missing(&format!("no `{table}` table")))?;
    let columns: Vec<&str> = t
        .get("columns")
        .and_then(Value::as_array)
        .ok_or_else(|| missing("no columns"))?
        .iter()
        .filter_map(Value::as_str)
        .collect();
    let col = |name: &str| {
        columns
            .iter()
            .position(|c| *c == name)
            .ok_or_else(|| missing(&format!("no `{name}` column")))
    };
    let (alt, lower, upper, stars) = (
        col("alternative")?,
        col("lower")?,
        col("upper")?,
        col("beta_rating")?,
    );
    t.get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| missing("no rows"))?
        .iter()
        .map(|r| {
            let cell = |i: usize| r.get(i).ok_or_else(|| missing("short row"));
            let num = |i: usize| {
                cell(i)?
                    .as_f64()
                    .ok_or_else(|| missing("non-numeric interval bound"))
            };
            Ok(ChartRow {
                label: cell(alt)?.as_str().unwrap_or_default().to_string(),
                lower: num(lower)?,
                upper: num(upper)?,
                stars: cell(stars)?.as_u64().unwrap_or(0).min(3) as u8,
            })
        })
        .collect()
}
