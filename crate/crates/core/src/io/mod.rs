//! Reading and writing frameworks and results.
//!
//! TGF and APX carry frameworks only; JSON also carries extensions,
//! classified initial sets and serialisation sequences (see [`json`]).
//! Emitters list arguments in index order and attacks sorted by label.

pub mod apx;
pub mod json;
pub mod tgf;

use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::framework::Framework;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    Tgf,
    Apx,
    Json,
}

impl Format {
    /// Guesses the format from a file extension.
    pub fn from_path(path: &Path) -> Option<Self> {
        path.extension()?.to_str()?.parse().ok()
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tgf" => Ok(Format::Tgf),
            "apx" => Ok(Format::Apx),
            "json" => Ok(Format::Json),
            other => Err(Error::Usage(format!(
                "unknown format `{other}` (expected tgf, apx or json)"
            ))),
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Framework> {
    match format {
        Format::Tgf => tgf::parse(text),
        Format::Apx => apx::parse(text),
        Format::Json => json::parse_framework(text),
    }
}

pub fn emit(f: &Framework, format: Format) -> Result<String> {
    match format {
        Format::Tgf => tgf::emit(f),
        Format::Apx => apx::emit(f),
        Format::Json => json::emit_framework(f),
    }
}

/// Attack pairs sorted by (attacker label, target label).
pub(crate) fn sorted_attacks(f: &Framework) -> Vec<(&str, &str)> {
    let mut pairs: Vec<(&str, &str)> = f
        .attack_pairs()
        .into_iter()
        .map(|(a, b)| (f.name(a), f.name(b)))
        .collect();
    pairs.sort_unstable();
    pairs
}

fn parse_error(format: &'static str, line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        format,
        line,
        column,
        message: message.into(),
    }
}
