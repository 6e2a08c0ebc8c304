//! JSON documents. Sets are written as sorted label arrays and keys appear
//! in a fixed order. The schema is in `docs/schema.json`.

use serde::{Deserialize, Serialize};

use super::{parse_error, sorted_attacks};
use crate::argset::ArgSet;
use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::initial::{Class, InitialSetInfo};
use crate::serial::{SemanticsSpec, SerialisationSequence, Step};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameworkDoc {
    pub arguments: Vec<String>,
    pub attacks: Vec<(String, String)>,
}

impl FrameworkDoc {
    pub fn new(f: &Framework) -> Self {
        FrameworkDoc {
            arguments: f.names().to_vec(),
            attacks: sorted_attacks(f)
                .into_iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        }
    }

    pub fn to_framework(&self) -> Result<Framework> {
        let f = Framework::new(self.arguments.iter().cloned(), [])?;
        let attacks = self
            .attacks
            .iter()
            .map(|(a, b)| Ok((lookup(&f, a)?, lookup(&f, b)?)))
            .collect::<Result<Vec<_>>>()?;
        Framework::new(self.arguments.iter().cloned(), attacks)
    }
}

fn lookup(f: &Framework, label: &str) -> Result<usize> {
    f.index_of(label)
        .ok_or_else(|| Error::UnknownArgument(label.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDoc {
    pub select: Vec<String>,
    pub class: Class,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDoc {
    pub semantics: String,
    pub steps: Vec<StepDoc>,
    pub extension: Vec<String>,
}

impl SequenceDoc {
    pub fn new(f: &Framework, seq: &SerialisationSequence) -> Self {
        SequenceDoc {
            semantics: seq.spec.label(),
            steps: seq
                .steps
                .iter()
                .map(|s| StepDoc {
                    select: f.labels_of(&s.selection),
                    class: s.class,
                })
                .collect(),
            extension: f.labels_of(&seq.extension),
        }
    }

    pub fn to_sequence(&self, f: &Framework) -> Result<SerialisationSequence> {
        let spec = SemanticsSpec::from_code(&self.semantics)
            .ok_or_else(|| Error::Usage(format!("unknown semantics `{}`", self.semantics)))?;
        let steps = self
            .steps
            .iter()
            .map(|s| {
                Ok(Step {
                    selection: f.set_of(&s.select)?,
                    class: s.class,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SerialisationSequence {
            steps,
            extension: f.set_of(&self.extension)?,
            spec,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InitialSetDoc {
    pub set: Vec<String>,
    pub class: Class,
    pub conflicts: Vec<Vec<String>>,
    pub scc: usize,
}

impl InitialSetDoc {
    pub fn new(f: &Framework, info: &InitialSetInfo) -> Self {
        InitialSetDoc {
            set: f.labels_of(&info.set),
            class: info.class,
            conflicts: info.conflicts.iter().map(|c| f.labels_of(c)).collect(),
            scc: info.scc_id,
        }
    }

    pub fn to_info(&self, f: &Framework) -> Result<InitialSetInfo> {
        Ok(InitialSetInfo {
            set: f.set_of(&self.set)?,
            class: self.class,
            conflicts: self
                .conflicts
                .iter()
                .map(|c| f.set_of(c))
                .collect::<Result<_>>()?,
            scc_id: self.scc,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionsDoc {
    pub semantics: String,
    pub extensions: Vec<Vec<String>>,
}

impl ExtensionsDoc {
    pub fn new(f: &Framework, semantics: &str, sets: &[ArgSet]) -> Self {
        ExtensionsDoc {
            semantics: semantics.to_string(),
            extensions: sets.iter().map(|s| f.labels_of(s)).collect(),
        }
    }
}

/// Parses any document type, mapping syntax errors to [`Error::Parse`].
pub fn from_str<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| parse_error("json", e.line(), e.column(), e.to_string()))
}

pub fn to_string<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents always serialise")
}

pub fn parse_framework(text: &str) -> Result<Framework> {
    from_str::<FrameworkDoc>(text)?.to_framework()
}

pub fn emit_framework(f: &Framework) -> Result<String> {
    Ok(to_string(&FrameworkDoc::new(f)) + "\n")
}
