use crate::error::{Error, Result};
use serde::Deserialize;
use std::path::Path;

/// Settings read from the optional TOML file. Command-line flags override
/// every field.
#[derive(Debug, Clone, Default, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub threads: Option<usize>,
    #[serde(rename = "N")]
    pub n: Option<u64>,
    #[serde(rename = "L")]
    pub l: Option<u32>,
    pub kappa: Option<u32>,
    pub k: Option<usize>,
    pub bound: Option<u32>,
    pub count: Option<usize>,
    pub precision: Option<u32>,
    pub depth_cap: Option<u32>,
}

pub const DEFAULT_L: u32 = 8;
pub const DEFAULT_BOUND: u32 = 2;
pub const DEFAULT_PRECISION: u32 = 64;
pub const DEFAULT_COUNT: usize = 10;

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::InvalidArgument(format!("config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

/// `flag` if given, else the file value, else `default`.
pub fn pick<T: Clone>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let c = FileConfig::parse("L = 5\nbound = 3\n").unwrap();
        assert_eq!(pick(None, c.l, DEFAULT_L), 5);
        assert_eq!(pick(Some(2), c.l, DEFAULT_L), 2);
        assert_eq!(pick(None, c.kappa, 4), 4);
        assert!(FileConfig::parse("depth = 3").is_err());
    }
}
