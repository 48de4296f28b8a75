//! Flat key-value configuration files.
//!
//! A config file holds one `key = value` pair per line. Blank lines and
//! lines starting with `#` are ignored; values keep their internal spacing
//! (so shell commands survive verbatim), and a repeated key keeps its last
//! value. Command-line flags always win over config values: commands read a
//! config entry only when the corresponding flag is absent.
//!
//! Recognized keys:
//!
//! | key                   | meaning                                             |
//! |-----------------------|-----------------------------------------------------|
//! | `lm.backend`          | `ngram` or `external`                               |
//! | `lm.model`            | path to a saved n-gram model                        |
//! | `lm.endpoint`         | bridge endpoint (`cmd:…` or `tcp:…`)                |
//! | `transform.operators` | comma-separated operator names to enable            |
//! | `unary2add.style`     | `expanded` or `compound`                            |
//! | `rename2.top_k`       | substitution candidates per variable                |
//! | `rename2.dict`        | path to a substitution dictionary                   |
//! | `validate.cmd`        | shell command run per valid record; `{file}` is the |
//! |                       | path of the transformed source                      |
//! | `score.field`         | `rnc` or `ce` — field normalization reads           |
//! | `report.filter`       | `all`, `natural-only`, or `both`                    |

use std::collections::BTreeMap;
use std::path::Path;

use thiserror::Error;

/// Every key a config file may set.
pub const KNOWN_KEYS: [&str; 10] = [
    "lm.backend",
    "lm.model",
    "lm.endpoint",
    "transform.operators",
    "unary2add.style",
    "rename2.top_k",
    "rename2.dict",
    "validate.cmd",
    "score.field",
    "report.filter",
];

/// Parsed configuration; see the [module docs](self) for the format.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Config {
    entries: BTreeMap<String, String>,
}

/// Why a config file was rejected.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("failed to read config: {0}")]
    Io(#[from] std::io::Error),
    #[error("config line {line}: expected `key = value`, got `{text}`")]
    Syntax { line: usize, text: String },
    #[error("config line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
}

impl Config {
    /// Parses config text, validating syntax and key names.
    pub fn parse(text: &str) -> Result<Config, ConfigError> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(ConfigError::Syntax {
                    line: i + 1,
                    text: line.to_string(),
                });
            };
            let key = key.trim();
            if !KNOWN_KEYS.contains(&key) {
                return Err(ConfigError::UnknownKey {
                    line: i + 1,
                    key: key.to_string(),
                });
            }
            entries.insert(key.to_string(), value.trim().to_string());
        }
        Ok(Config { entries })
    }

    /// Reads and parses a config file.
    pub fn load(path: impl AsRef<Path>) -> Result<Config, ConfigError> {
        Config::parse(&std::fs::read_to_string(path)?)
    }

    /// The value set for `key`, if any.
    pub fn get(&self, key: &str) -> Option<&str> {
        debug_assert!(KNOWN_KEYS.contains(&key), "unknown config key {key}");
        self.entries.get(key).map(String::as_str)
    }

    /// Whether no keys are set.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
