//! The serialisation transition system.
//!
//! A state is a pair `(reduct, accumulated)`; the reduct is kept as the set of
//! base arguments it still contains. A step commits to an initial set of the
//! current reduct. A semantics is a selection function α, which filters the
//! initial sets by class, plus a termination function β, which decides when
//! the accumulated set is an extension.
//!
//! States do not borrow their framework; every operation takes it explicitly.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::argset::ArgSet;
use crate::framework::Framework;
use crate::initial::{diagnose_within, Class, InitialSetInfo, Rejection, Scope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Alpha {
    All,
    UnattackedOnly,
    UnattackedOrUnchallenged,
}

impl Alpha {
    pub fn admits(self, class: Class) -> bool {
        match self {
            Alpha::All => true,
            Alpha::UnattackedOnly => class == Class::Unattacked,
            Alpha::UnattackedOrUnchallenged => class != Class::Challenged,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Beta {
    Always,
    NoUnattacked,
    EmptyFramework,
    NoInitial,
    NoUaOrUc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SemanticsSpec {
    pub alpha: Alpha,
    pub beta: Beta,
    pub name: Option<&'static str>,
}

impl SemanticsSpec {
    pub const ADMISSIBLE: Self = Self::preset(Alpha::All, Beta::Always, "ad");
    pub const COMPLETE: Self = Self::preset(Alpha::All, Beta::NoUnattacked, "co");
    pub const GROUNDED: Self = Self::preset(Alpha::UnattackedOnly, Beta::NoUnattacked, "gr");
    pub const STABLE: Self = Self::preset(Alpha::All, Beta::EmptyFramework, "st");
    pub const PREFERRED: Self = Self::preset(Alpha::All, Beta::NoInitial, "pr");
    pub const STRONGLY_ADMISSIBLE: Self = Self::preset(Alpha::UnattackedOnly, Beta::Always, "sa");
    /// The (α₀, β₀) semantics. "uc" is our own label, not an established name.
    pub const UNCHALLENGED: Self = Self::preset(Alpha::UnattackedOrUnchallenged, Beta::NoUaOrUc, "uc");

    pub const PRESETS: [Self; 7] = [
        Self::ADMISSIBLE,
        Self::COMPLETE,
        Self::GROUNDED,
        Self::STABLE,
        Self::PREFERRED,
        Self::STRONGLY_ADMISSIBLE,
        Self::UNCHALLENGED,
    ];

    const fn preset(alpha: Alpha, beta: Beta, name: &'static str) -> Self {
        SemanticsSpec {
            alpha,
            beta,
            name: Some(name),
        }
    }

    pub fn custom(alpha: Alpha, beta: Beta) -> Self {
        SemanticsSpec {
            alpha,
            beta,
            name: None,
        }
    }

    /// Looks up a preset by its two-letter code or its long name.
    pub fn from_code(code: &str) -> Option<Self> {
        let code = code.to_ascii_lowercase();
        let short = match code.as_str() {
            "admissible" => "ad",
            "complete" => "co",
            "grounded" => "gr",
            "stable" => "st",
            "preferred" => "pr",
            "strongly-admissible" | "strongly_admissible" => "sa",
            "unchallenged" => "uc",
            other => other,
        };
        Self::PRESETS.into_iter().find(|p| p.name == Some(short))
    }

    /// The preset code, or `alpha/beta` for unnamed specs.
    pub fn label(&self) -> String {
        match self.name {
            Some(n) => n.to_string(),
            None => format!(
                "{}/{}",
                serde_json::to_value(self.alpha).unwrap().as_str().unwrap(),
                serde_json::to_value(self.beta).unwrap().as_str().unwrap()
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub selection: ArgSet,
    pub class: Class,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerialisationSequence {
    pub steps: Vec<Step>,
    pub extension: ArgSet,
    pub spec: SemanticsSpec,
}

impl SerialisationSequence {
    /// Re-applies the steps from the initial state, checking every selection
    /// and that the steps union to `extension`.
    pub fn replay(&self, f: &Framework) -> Result<Vec<SerialisationState>, StepError> {
        let mut states = vec![init_state(f)];
        for s in &self.steps {
            let next = step(f, states.last().unwrap(), &s.selection)?;
            states.push(next);
        }
        if states.last().unwrap().accumulated != self.extension {
            return Err(StepError::Mismatch);
        }
        Ok(states)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerialisationState {
    pub remaining: ArgSet,
    pub accumulated: ArgSet,
    pub history: Vec<Step>,
}

impl SerialisationState {
    pub fn to_sequence(&self, spec: SemanticsSpec) -> SerialisationSequence {
        SerialisationSequence {
            steps: self.history.clone(),
            extension: self.accumulated.clone(),
            spec,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepError {
    Empty,
    ArityMismatch { expected: usize, found: usize },
    OutsideReduct,
    NotAdmissible,
    NotMinimal,
    NotEligible { class: Class, spec: String },
    Mismatch,
}

impl fmt::Display for StepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepError::Empty => f.write_str("selection is empty"),
            StepError::ArityMismatch { expected, found } => {
                write!(f, "selection has arity {found}, framework has {expected}")
            }
            StepError::OutsideReduct => f.write_str("selection is not contained in the current reduct"),
            StepError::NotAdmissible => f.write_str("selection is not admissible in the current reduct"),
            StepError::NotMinimal => {
                f.write_str("selection is not minimal: it has a non-empty proper admissible subset")
            }
            StepError::NotEligible { class, spec } => {
                write!(f, "selection is {class}, which semantics {spec} does not allow")
            }
            StepError::Mismatch => f.write_str("steps do not union to the stated extension"),
        }
    }
}

impl std::error::Error for StepError {}

pub fn init_state(f: &Framework) -> SerialisationState {
    SerialisationState {
        remaining: f.all(),
        accumulated: f.empty_set(),
        history: Vec::new(),
    }
}

/// Classified initial sets of the current reduct admitted by `alpha`.
pub fn choices(f: &Framework, state: &SerialisationState, alpha: Alpha) -> Vec<InitialSetInfo> {
    Scope::new(f, state.remaining.clone())
        .classified()
        .into_iter()
        .filter(|i| alpha.admits(i.class))
        .collect()
}

/// Commits to `selection`, which must be an initial set of the current
/// reduct. The class is not checked against any α; see [`step_under`].
pub fn step(
    f: &Framework,
    state: &SerialisationState,
    selection: &ArgSet,
) -> Result<SerialisationState, StepError> {
    let scope = checked_scope(f, state, selection)?;
    Ok(advance(f, state, selection, scope.classify(selection)))
}

/// Like [`step`], additionally requiring that `spec.alpha` admits the
/// selection's class in the current reduct.
pub fn step_under(
    f: &Framework,
    state: &SerialisationState,
    selection: &ArgSet,
    spec: &SemanticsSpec,
) -> Result<SerialisationState, StepError> {
    let scope = checked_scope(f, state, selection)?;
    let class = scope.classify(selection);
    if !spec.alpha.admits(class) {
        return Err(StepError::NotEligible {
            class,
            spec: spec.label(),
        });
    }
    Ok(advance(f, state, selection, class))
}

fn checked_scope<'f>(
    f: &'f Framework,
    state: &SerialisationState,
    selection: &ArgSet,
) -> Result<Scope<'f>, StepError> {
    if selection.arity() != f.len() {
        return Err(StepError::ArityMismatch {
            expected: f.len(),
            found: selection.arity(),
        });
    }
    match diagnose_within(f, &state.remaining, selection) {
        None => Ok(Scope::new(f, state.remaining.clone())),
        Some(Rejection::Empty) => Err(StepError::Empty),
        Some(Rejection::OutsideScope) => Err(StepError::OutsideReduct),
        Some(Rejection::NotAdmissible) => Err(StepError::NotAdmissible),
        Some(Rejection::NotMinimal) => Err(StepError::NotMinimal),
    }
}

fn advance(
    f: &Framework,
    state: &SerialisationState,
    selection: &ArgSet,
    class: Class,
) -> SerialisationState {
    let mut remaining = state.remaining.clone();
    remaining.difference_with(selection);
    remaining.difference_with(&f.plus_set(selection));
    let mut history = state.history.clone();
    history.push(Step {
        selection: selection.clone(),
        class,
    });
    SerialisationState {
        remaining,
        accumulated: state.accumulated.union(selection),
        history,
    }
}

pub fn is_terminal(f: &Framework, state: &SerialisationState, beta: Beta) -> bool {
    match beta {
        Beta::Always => true,
        Beta::EmptyFramework => state.remaining.is_empty(),
        // An unattacked argument of the reduct is exactly an unattacked initial set.
        Beta::NoUnattacked => f.unattacked_within(&state.remaining).is_empty(),
        Beta::NoInitial => Scope::new(f, state.remaining.clone()).initial_sets().is_empty(),
        Beta::NoUaOrUc => Scope::new(f, state.remaining.clone())
            .classified()
            .iter()
            .all(|i| i.class == Class::Challenged),
    }
}

fn terminal_given(beta: Beta, remaining: &ArgSet, classified: &[InitialSetInfo]) -> bool {
    match beta {
        Beta::Always => true,
        Beta::EmptyFramework => remaining.is_empty(),
        Beta::NoUnattacked => classified.iter().all(|i| i.class != Class::Unattacked),
        Beta::NoInitial => classified.is_empty(),
        Beta::NoUaOrUc => classified.iter().all(|i| i.class == Class::Challenged),
    }
}

/// All extensions of `spec`, sorted, each with the first sequence found
/// that reaches it.
pub fn enumerate_with_witnesses(f: &Framework, spec: &SemanticsSpec) -> Vec<SerialisationSequence> {
    let mut visited = HashSet::new();
    let mut out = Vec::new();
    explore(f, spec, init_state(f), &mut visited, &mut out);
    out.sort_by(|a, b| a.extension.cmp(&b.extension));
    out
}

/// All extensions of `spec`, sorted.
pub fn enumerate_extensions(f: &Framework, spec: &SemanticsSpec) -> Vec<ArgSet> {
    enumerate_with_witnesses(f, spec)
        .into_iter()
        .map(|s| s.extension)
        .collect()
}

// The reduct is determined by the accumulated set, so `accumulated` alone
// identifies a state.
fn explore(
    f: &Framework,
    spec: &SemanticsSpec,
    state: SerialisationState,
    visited: &mut HashSet<ArgSet>,
    out: &mut Vec<SerialisationSequence>,
) {
    if !visited.insert(state.accumulated.clone()) {
        return;
    }
    let classified = Scope::new(f, state.remaining.clone()).classified();
    if terminal_given(spec.beta, &state.remaining, &classified) {
        out.push(state.to_sequence(*spec));
    }
    for info in classified.into_iter().filter(|i| spec.alpha.admits(i.class)) {
        let next = advance(f, &state, &info.set, info.class);
        explore(f, spec, next, visited, out);
    }
}

/// Checks the state invariants: `accumulated`, its attackees and `remaining`
/// partition the arguments, `accumulated` is admissible, and the history
/// replays to it.
pub fn validate_state(f: &Framework, state: &SerialisationState) -> Result<(), String> {
    if state.accumulated.intersects(&state.remaining) {
        return Err("accumulated and remaining overlap".into());
    }
    if state
        .accumulated
        .union(&f.plus_set(&state.accumulated))
        .union(&state.remaining)
        != f.all()
    {
        return Err("accumulated, its attackees and remaining do not cover the framework".into());
    }
    if !f.is_admissible(&state.accumulated) {
        return Err("accumulated set is not admissible".into());
    }
    let mut replay = init_state(f);
    for s in &state.history {
        replay = step(f, &replay, &s.selection).map_err(|e| e.to_string())?;
        if replay.history.last().unwrap().class != s.class {
            return Err("recorded class differs from the class at selection time".into());
        }
    }
    if replay.accumulated != state.accumulated || replay.remaining != state.remaining {
        return Err("history does not replay to the state".into());
    }
    Ok(())
}
