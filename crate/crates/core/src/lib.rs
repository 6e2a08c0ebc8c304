//! Abstract argumentation through initial sets and serialisation.
//!
//! Frameworks are graphs over dense argument indices ([`Framework`]) and
//! argument sets are bitsets ([`ArgSet`]). [`initial`] finds and classifies
//! initial sets, [`serial`] builds extensions as sequences of initial-set
//! commitments, [`decision`] answers acceptance questions about initial sets,
//! and [`oracle`] is an independent brute-force reference.

pub mod argset;
pub mod cli;
pub mod decision;
pub mod error;
pub mod fixtures;
pub mod framework;
pub mod initial;
pub mod io;
pub mod oracle;
pub mod reductions;
pub mod scc;
pub mod serial;
pub mod service;

pub use argset::ArgSet;
pub use error::{Error, Result};
pub use framework::{Framework, Projection};
pub use initial::{Class, InitialSetInfo};
pub use serial::{Alpha, Beta, SemanticsSpec, SerialisationSequence, SerialisationState, Step, StepError};
