//! Verification, existence, uniqueness, credulous and skeptical acceptance
//! for initial sets and for each of their three classes.
//!
//! The unchallenged-class procedures run the multi-step algorithm built on
//! `M''`: the maximal admissible subset of the attacked arguments that lie in
//! some initial set and are attacked by none. The two per-argument checks
//! feeding it are exact searches, computed once per query.

use std::fmt;
use std::str::FromStr;

use crate::argset::ArgSet;
use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::initial::{is_initial, max_admissible_within, Class, Scope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Task {
    Ver,
    Exists,
    Unique,
    Cred,
    Skept,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Is,
    Unattacked,
    Unchallenged,
    Challenged,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Is,
        Family::Unattacked,
        Family::Unchallenged,
        Family::Challenged,
    ];

    pub fn admits(self, class: Class) -> bool {
        match self {
            Family::Is => true,
            Family::Unattacked => class == Class::Unattacked,
            Family::Unchallenged => class == Class::Unchallenged,
            Family::Challenged => class == Class::Challenged,
        }
    }

    /// Suffix used in task codes: `IS`, `IS-UA`, `IS-UC`, `IS-CH`.
    pub fn code(self) -> &'static str {
        match self {
            Family::Is => "IS",
            Family::Unattacked => "IS-UA",
            Family::Unchallenged => "IS-UC",
            Family::Challenged => "IS-CH",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTask(s.to_string()))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subject {
    None,
    Set(ArgSet),
    Argument(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskQuery {
    pub task: Task,
    pub family: Family,
    pub subject: Subject,
}

impl Task {
    pub fn code(self) -> &'static str {
        match self {
            Task::Ver => "VER",
            Task::Exists => "EXISTS",
            Task::Unique => "UNIQUE",
            Task::Cred => "DC",
            Task::Skept => "DS",
        }
    }
}

/// Splits a code such as `DS-IS-UC` or `exists-is` into task and family.
pub fn parse_code(code: &str) -> Result<(Task, Family)> {
    let unknown = || Error::UnknownTask(code.to_string());
    let (head, tail) = code.split_once('-').ok_or_else(unknown)?;
    let task = [Task::Ver, Task::Exists, Task::Unique, Task::Cred, Task::Skept]
        .into_iter()
        .find(|t| t.code().eq_ignore_ascii_case(head))
        .ok_or_else(unknown)?;
    let family = tail.parse().map_err(|_| unknown())?;
    Ok((task, family))
}

pub fn decide(f: &Framework, q: &TaskQuery) -> Result<bool> {
    match (q.task, &q.subject) {
        (Task::Ver, Subject::Set(s)) => Ok(verify(f, s, q.family)),
        (Task::Exists, Subject::None) => Ok(exists(f, q.family)),
        (Task::Unique, Subject::None) => Ok(unique(f, q.family)),
        (Task::Cred, Subject::Argument(a)) if *a < f.len() => Ok(credulous(f, *a, q.family)),
        (Task::Skept, Subject::Argument(a)) if *a < f.len() => Ok(skeptical(f, *a, q.family)),
        (Task::Ver, _) => Err(Error::Usage("verification needs a set".into())),
        (Task::Cred | Task::Skept, Subject::Argument(a)) => {
            Err(Error::Usage(format!("argument index {a} out of range")))
        }
        (Task::Cred | Task::Skept, _) => Err(Error::Usage("acceptance needs an argument".into())),
        (Task::Exists | Task::Unique, _) => Err(Error::Usage("this task takes no subject".into())),
    }
}

/// Per-argument answers to "is `a` in some initial set" and "is `a`
/// attacked by some initial set".
struct Membership {
    in_initial: Vec<bool>,
    attacked_by_initial: Vec<bool>,
}

impl Membership {
    fn new(f: &Framework, scope: &Scope) -> Self {
        let in_initial: Vec<bool> = (0..f.len()).map(|a| scope.in_some_initial(a, None)).collect();
        let attacked_by_initial = (0..f.len())
            .map(|a| f.attackers(a).iter().any(|b| in_initial[b]))
            .collect();
        Membership {
            in_initial,
            attacked_by_initial,
        }
    }
}

/// `M''` of the unchallenged-class algorithms.
pub fn unchallenged_core(f: &Framework) -> ArgSet {
    let scope = Scope::whole(f);
    core_with(f, &Membership::new(f, &scope))
}

fn core_with(f: &Framework, m: &Membership) -> ArgSet {
    let m_prime = ArgSet::from_indices(
        f.len(),
        (0..f.len()).filter(|&a| m.in_initial[a] && !m.attacked_by_initial[a] && !f.attackers(a).is_empty()),
    );
    // M' is conflict-free: a member of an initial set attacking b makes b
    // attacked by that initial set.
    max_admissible_within(f, &f.all(), &m_prime).0
}

pub fn verify(f: &Framework, s: &ArgSet, family: Family) -> bool {
    if s.arity() != f.len() || !is_initial(f, s) {
        return false;
    }
    let attacked = !f.minus_set(s).is_empty();
    match family {
        Family::Is => true,
        Family::Unattacked => !attacked,
        Family::Unchallenged => attacked && !Scope::whole(f).attacked_by_initial(s),
        Family::Challenged => attacked && Scope::whole(f).attacked_by_initial(s),
    }
}

fn unattacked_args(f: &Framework) -> ArgSet {
    f.unattacked_within(&f.all())
}

pub fn exists(f: &Framework, family: Family) -> bool {
    match family {
        Family::Is => {
            let scope = Scope::whole(f);
            (0..f.len()).any(|a| scope.in_some_initial(a, None))
        }
        Family::Unattacked => !unattacked_args(f).is_empty(),
        Family::Unchallenged => !unchallenged_core(f).is_empty(),
        Family::Challenged => {
            let m = Membership::new(f, &Scope::whole(f));
            (0..f.len()).any(|a| m.in_initial[a] && f.attackers(a).iter().any(|b| m.in_initial[b]))
        }
    }
}

pub fn unique(f: &Framework, family: Family) -> bool {
    match family {
        Family::Is => Scope::whole(f).initial_sets().len() == 1,
        Family::Unattacked => unattacked_args(f).len() == 1,
        Family::Unchallenged => {
            let core = unchallenged_core(f);
            if core.is_empty() {
                return false;
            }
            let s = ArgSet::from_indices(
                f.len(),
                core.iter().filter(|&a| {
                    let mut rest = core.clone();
                    rest.remove(a);
                    max_admissible_within(f, &f.all(), &rest).0.is_empty()
                }),
            );
            !s.is_empty() && is_initial(f, &s)
        }
        // Challenged initial sets come in mutually attacking pairs.
        Family::Challenged => false,
    }
}

pub fn credulous(f: &Framework, a: usize, family: Family) -> bool {
    match family {
        Family::Is => Scope::whole(f).in_some_initial(a, None),
        Family::Unattacked => f.attackers(a).is_empty(),
        Family::Unchallenged => {
            let core = unchallenged_core(f);
            core.contains(a) && Scope::whole(f).in_some_initial(a, Some(&core))
        }
        Family::Challenged => Scope::whole(f)
            .classified()
            .iter()
            .any(|i| i.class == Class::Challenged && i.set.contains(a)),
    }
}

/// Skeptical acceptance; vacuously true when the family is empty.
pub fn skeptical(f: &Framework, a: usize, family: Family) -> bool {
    match family {
        Family::Is => !Scope::whole(f).exists_initial_avoiding(a),
        Family::Unattacked => unattacked_args(f).iter().all(|b| b == a),
        Family::Unchallenged => {
            let core = unchallenged_core(f);
            if core.is_empty() {
                return true;
            }
            let mut rest = core;
            rest.remove(a);
            max_admissible_within(f, &f.all(), &rest).0.is_empty()
        }
        Family::Challenged => Scope::whole(f)
            .classified()
            .iter()
            .filter(|i| i.class == Class::Challenged)
            .all(|i| i.set.contains(a)),
    }
}
