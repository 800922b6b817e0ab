//! JSON run configuration: the indicator schema plus report options.
//!
//! ```json
//! {
//!   "dimensions": [
//!     { "id": "PC", "label": "Production and consumption",
//!       "indicators": [ { "id": "1a", "label": "...", "polarity": "cost" } ] }
//!   ],
//!   "options": { "rating_rule": "minmax", "format": "csv", "exclude": null, "decimals": 1 }
//! }
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::RatingRule;
use crate::schema::{self, DimensionSpec, IndicatorSchema};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::Config(format!(
                "unknown format `{other}` (expected csv or json)"
            ))),
        }
    }
}

pub const MAX_DECIMALS: u8 = 6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Options {
    pub rating_rule: RatingRule,
    pub format: OutputFormat,
    pub exclude: Option<String>,
    /// Decimal places for displayed percentages.
    pub decimals: u8,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            rating_rule: RatingRule::MinMax,
            format: OutputFormat::Csv,
            exclude: None,
            decimals: 1,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    dimensions: Vec<DimensionSpec>,
    #[serde(default)]
    options: Options,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub schema: IndicatorSchema,
    pub options: Options,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        match Self::check_json(text) {
            Ok(cfg) => Ok(cfg),
            Err(errors) => Err(errors.into_iter().next().expect("at least one error")),
        }
    }

    /// Parses and validates, collecting every defect found.
    pub fn check_json(text: &str) -> std::result::Result<Self, Vec<Error>> {
        let raw: RawConfig =
            serde_json::from_str(text).map_err(|e| vec![Error::Parse(format!("config: {e}"))])?;
        let mut errors = schema::check(&raw.dimensions);
        errors.extend(check_options(&raw.options, &raw.dimensions));
        if !errors.is_empty() {
            return Err(errors);
        }
        let schema = IndicatorSchema::validate(raw.dimensions).map_err(|e| vec![e])?;
        Ok(Self {
            schema,
            options: raw.options,
        })
    }

    /// Re-checks options after command-line overrides.
    pub fn validate_options(&self) -> Result<()> {
        match check_options(&self.options, self.schema.dimensions())
            .into_iter()
            .next()
        {
            Some(err) => Err(err),
            None => Ok(()),
        }
    }
}

fn check_options(options: &Options, dimensions: &[DimensionSpec]) -> Vec<Error> {
    let mut errors = Vec::new();
    if options.decimals > MAX_DECIMALS {
        errors.push(Error::Config(format!(
            "decimals must be in 0..={MAX_DECIMALS}, got {}",
            options.decimals
        )));
    }
    if let Some(ex) = &options.exclude {
        if !dimensions.iter().any(|d| &d.id == ex) {
            errors.push(Error::UnknownDimension(ex.clone()));
        } else if dimensions.len() == 1 {
            errors.push(Error::LastDimension(ex.clone()));
        }
    }
    errors
}

#[cfg(test)]
mod tests {
    use super::*;

    const BASIC: &str = r#"{
        "dimensions": [
            {"id": "A", "label": "first", "indicators": [
                {"id": "a1", "polarity": "benefit"},
                {"id": "a2", "label": "cost one", "polarity": "cost"}
            ]},
            {"id": "B", "indicators": [{"id": "b1", "polarity": "benefit"}]}
        ]
    }"#;

    #[test]
    fn defaults_apply() {
        let cfg = RunConfig::from_json(BASIC).unwrap();
        assert_eq!(cfg.options, Options::default());
        assert_eq!(cfg.schema.indicator_ids(), ["a1", "a2", "b1"]);
    }

    #[test]
    fn options_parse() {
        let text = BASIC.trim_end().trim_end_matches('}').to_string()
            + r#", "options": {"rating_rule": "maxfrac", "format": "json", "exclude": "B", "decimals": 2}}"#;
        let cfg = RunConfig::from_json(&text).unwrap();
        assert_eq!(cfg.options.rating_rule, RatingRule::MaxFrac);
        assert_eq!(cfg.options.format, OutputFormat::Json);
        assert_eq!(cfg.options.exclude.as_deref(), Some("B"));
        assert_eq!(cfg.options.decimals, 2);
    }

    #[test]
    fn bad_options_rejected() {
        let with = |opts: &str| {
            BASIC.trim_end().trim_end_matches('}').to_string() + r#", "options": "# + opts + "}"
        };
        let errs = RunConfig::check_json(&with(r#"{"exclude": "Z", "decimals": 9}"#)).unwrap_err();
        let codes: Vec<_> = errs.iter().map(Error::code).collect();
        assert_eq!(codes, ["InvalidConfig", "UnknownDimension"]);
        assert!(RunConfig::from_json(&with(r#"{"colour": "red"}"#)).is_err());
        assert!(RunConfig::from_json(&with(r#"{"rating_rule": "median"}"#)).is_err());
    }

    #[test]
    fn schema_errors_surface() {
        let text = r#"{"dimensions": [{"id": "A", "indicators": []}]}"#;
        assert_eq!(
            RunConfig::from_json(text).unwrap_err(),
            Error::EmptyDimension("A".into())
        );
        let text =
            r#"{"dimensions": [{"id": "A", "indicators": [{"id": "x", "polarity": "up"}]}]}"#;
        assert_eq!(RunConfig::from_json(text).unwrap_err().code(), "ParseError");
    }
}
