//! Initial sets: non-empty, subset-minimal admissible sets.
//!
//! Every routine here works on a *scope*, the projection of a base framework
//! on a universe of arguments. The whole framework is the scope with the full
//! universe; the reduct after committing to `S` is the scope whose universe is
//! `A \ (S ∪ S⁺)`. Results are always reported in base indices.
//!
//! Enumeration is SCC-local: an initial set lies inside one SCC and is not
//! attacked from outside it, so only arguments whose in-scope attackers all
//! sit in their own SCC are candidates. Within an SCC, sets are grown from a
//! seed by repeatedly picking an undefended attacker and branching over its
//! possible defenders. Every leaf is re-checked with [`is_initial`], so the
//! search may over-generate.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::argset::ArgSet;
use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::scc::{sccs_within, Sccs};
use crate::serial::{SemanticsSpec, SerialisationSequence, Step};

/// Scopes at least this large enumerate their SCCs in parallel.
const PARALLEL_SCOPE: usize = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    Unattacked,
    Unchallenged,
    Challenged,
}

impl Class {
    pub fn as_str(self) -> &'static str {
        match self {
            Class::Unattacked => "unattacked",
            Class::Unchallenged => "unchallenged",
            Class::Challenged => "challenged",
        }
    }
}

impl std::fmt::Display for Class {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialSetInfo {
    pub set: ArgSet,
    pub class: Class,
    /// Initial sets attacking `set`, in set order.
    pub conflicts: Vec<ArgSet>,
    /// Id of the containing SCC in the scope the set was enumerated in.
    pub scc_id: usize,
}

/// The greatest fixed point of `X ↦ F(X) ∩ X` from `x`, restricted to the
/// projection on `universe`, and the number of shrinking steps taken.
/// `x` must be conflict-free.
pub(crate) fn max_admissible_within(f: &Framework, universe: &ArgSet, x: &ArgSet) -> (ArgSet, usize) {
    let mut cur = x.clone();
    let mut steps = 0;
    loop {
        let plus = f.plus_set(&cur);
        let next = ArgSet::from_indices(
            f.len(),
            cur.iter()
                .filter(|&a| f.attackers(a).intersection(universe).is_subset(&plus)),
        );
        if next == cur {
            return (cur, steps);
        }
        cur = next;
        steps += 1;
    }
}

/// The unique ⊆-maximal admissible subset of a conflict-free `s`.
pub fn maximal_admissible_subset(f: &Framework, s: &ArgSet) -> Result<ArgSet> {
    maximal_admissible_subset_traced(f, s).map(|(m, _)| m)
}

/// Like [`maximal_admissible_subset`], also returning how many times the
/// candidate set shrank before reaching the fixed point (at most `|s|`).
pub fn maximal_admissible_subset_traced(f: &Framework, s: &ArgSet) -> Result<(ArgSet, usize)> {
    if !f.is_conflict_free(s) {
        return Err(Error::NotConflictFree);
    }
    Ok(max_admissible_within(f, &f.all(), s))
}

/// Whether some admissible subset of the conflict-free `s` contains `a`.
pub fn has_admissible_subset_containing(f: &Framework, s: &ArgSet, a: usize) -> Result<bool> {
    if !s.contains(a) {
        return Err(Error::NotAMember(a));
    }
    Ok(maximal_admissible_subset(f, s)?.contains(a))
}

pub fn is_initial(f: &Framework, s: &ArgSet) -> bool {
    is_initial_within(f, &f.all(), s)
}

/// Polynomial verification: `s` is non-empty and admissible, and for no
/// distinct `a, b ∈ s` does `s \ {b}` have an admissible subset containing
/// `a`. For a fixed `b` all the `a`-tests share one fixed-point computation.
pub(crate) fn is_initial_within(f: &Framework, universe: &ArgSet, s: &ArgSet) -> bool {
    if s.is_empty() || !s.is_subset(universe) || !f.is_admissible_within(s, universe) {
        return false;
    }
    if s.len() == 1 {
        return true;
    }
    s.iter().all(|b| {
        let mut rest = s.clone();
        rest.remove(b);
        max_admissible_within(f, universe, &rest).0.is_empty()
    })
}

/// Why a set fails to be initial in a scope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Rejection {
    Empty,
    OutsideScope,
    NotAdmissible,
    NotMinimal,
}

pub(crate) fn diagnose_within(f: &Framework, universe: &ArgSet, s: &ArgSet) -> Option<Rejection> {
    if s.is_empty() {
        Some(Rejection::Empty)
    } else if !s.is_subset(universe) {
        Some(Rejection::OutsideScope)
    } else if !f.is_admissible_within(s, universe) {
        Some(Rejection::NotAdmissible)
    } else if !is_initial_within(f, universe, s) {
        Some(Rejection::NotMinimal)
    } else {
        None
    }
}

/// A framework projected on a universe, with its SCC structure and the
/// per-SCC candidate arguments precomputed.
pub(crate) struct Scope<'a> {
    pub f: &'a Framework,
    pub universe: ArgSet,
    pub sccs: Sccs,
    candidates: Vec<ArgSet>,
}

impl<'a> Scope<'a> {
    pub fn new(f: &'a Framework, universe: ArgSet) -> Self {
        let sccs = sccs_within(f, &universe);
        let candidates = sccs
            .components()
            .iter()
            .map(|comp| {
                ArgSet::from_indices(
                    f.len(),
                    comp.iter().filter(|&a| {
                        !f.attacks(a, a) && f.attackers(a).intersection(&universe).is_subset(comp)
                    }),
                )
            })
            .collect();
        Scope {
            f,
            universe,
            sccs,
            candidates,
        }
    }

    pub fn whole(f: &'a Framework) -> Self {
        Scope::new(f, f.all())
    }

    fn candidates_of(&self, a: usize) -> Option<&ArgSet> {
        let id = self.sccs.component_of(a)?;
        let c = &self.candidates[id];
        c.contains(a).then_some(c)
    }

    /// All initial sets of the scope with their SCC ids, sorted by set.
    pub fn initial_sets(&self) -> Vec<(ArgSet, usize)> {
        let per_component = |id: usize| -> Vec<(ArgSet, usize)> {
            self.minimal_within(&self.candidates[id])
                .into_iter()
                .map(|s| (s, id))
                .collect()
        };
        let ids = 0..self.sccs.len();
        let mut out: Vec<(ArgSet, usize)> = if self.universe.len() >= PARALLEL_SCOPE {
            ids.into_par_iter().flat_map_iter(per_component).collect()
        } else {
            ids.flat_map(per_component).collect()
        };
        out.sort();
        out
    }

    /// Initial sets of the scope contained in `allowed`, seeded in ascending
    /// order so that every set is produced from its least member.
    pub fn minimal_within(&self, allowed: &ArgSet) -> Vec<ArgSet> {
        let mut found = Vec::new();
        for seed in allowed {
            let mut above = allowed.clone();
            for a in 0..seed {
                above.remove(a);
            }
            self.grow(seed, &above, &mut found, false);
        }
        found
    }

    /// Whether `a` belongs to some initial set contained in `allowed`
    /// (defaulting to `a`'s SCC candidates).
    pub fn in_some_initial(&self, a: usize, allowed: Option<&ArgSet>) -> bool {
        let Some(cands) = self.candidates_of(a) else {
            return false;
        };
        let allowed = match allowed {
            Some(x) if !x.contains(a) => return false,
            Some(x) => x.intersection(cands),
            None => cands.clone(),
        };
        let mut found = Vec::new();
        self.grow(a, &allowed, &mut found, true)
    }

    /// Some initial set of the scope avoiding `a`, if one exists.
    pub fn exists_initial_avoiding(&self, a: usize) -> bool {
        (0..self.sccs.len()).any(|id| {
            let mut allowed = self.candidates[id].clone();
            allowed.remove(a);
            allowed.iter().any(|seed| {
                let mut found = Vec::new();
                self.grow(seed, &allowed, &mut found, true)
            })
        })
    }

    /// Whether some initial set of the scope attacks `s`.
    pub fn attacked_by_initial(&self, s: &ArgSet) -> bool {
        self.f
            .minus_within(s, &self.universe)
            .iter()
            .any(|b| self.in_some_initial(b, None))
    }

    pub fn classify(&self, s: &ArgSet) -> Class {
        if self.f.minus_within(s, &self.universe).is_empty() {
            Class::Unattacked
        } else if self.attacked_by_initial(s) {
            Class::Challenged
        } else {
            Class::Unchallenged
        }
    }

    /// Enumerates and classifies all initial sets of the scope.
    pub fn classified(&self) -> Vec<InitialSetInfo> {
        let sets = self.initial_sets();
        sets.iter()
            .map(|(s, id)| {
                let conflicts: Vec<ArgSet> = sets
                    .iter()
                    .filter(|(t, _)| self.f.plus_set(t).intersects(s))
                    .map(|(t, _)| t.clone())
                    .collect();
                let class = if self.f.minus_within(s, &self.universe).is_empty() {
                    Class::Unattacked
                } else if conflicts.is_empty() {
                    Class::Unchallenged
                } else {
                    Class::Challenged
                };
                InitialSetInfo {
                    set: s.clone(),
                    class,
                    conflicts,
                    scc_id: *id,
                }
            })
            .collect()
    }

    /// Depth-first defense-closure search from `{seed}` adding only members
    /// of `allowed`. Initial sets found are appended to `found`; returns
    /// `true` if `first_only` is set and one was found.
    fn grow(&self, seed: usize, allowed: &ArgSet, found: &mut Vec<ArgSet>, first_only: bool) -> bool {
        if self.f.attacks(seed, seed) || !self.universe.contains(seed) {
            return false;
        }
        let start = ArgSet::singleton(self.f.len(), seed);
        let plus = self.f.targets(seed).clone();
        let mut seen = HashSet::new();
        self.dfs(start, plus, allowed, found, &mut seen, first_only)
    }

    fn dfs(
        &self,
        s: ArgSet,
        plus: ArgSet,
        allowed: &ArgSet,
        found: &mut Vec<ArgSet>,
        seen: &mut HashSet<ArgSet>,
        first_only: bool,
    ) -> bool {
        if found.iter().any(|t| t.is_subset(&s)) || !seen.insert(s.clone()) {
            return false;
        }
        let undefended = self.f.minus_within(&s, &self.universe).difference(&plus);
        if undefended.is_empty() {
            if is_initial_within(self.f, &self.universe, &s) {
                found.push(s);
                return first_only;
            }
            return false;
        }
        // Branch on the undefended attacker with the fewest usable defenders.
        let mut best: Option<Vec<usize>> = None;
        for b in &undefended {
            let options: Vec<usize> = self
                .f
                .attackers(b)
                .intersection(allowed)
                .intersection(&self.universe)
                .iter()
                .filter(|&c| !plus.contains(c) && !self.f.targets(c).intersects(&s) && !self.f.attacks(c, c))
                .collect();
            if options.is_empty() {
                return false;
            }
            if best.as_ref().is_none_or(|o| options.len() < o.len()) {
                best = Some(options);
            }
        }
        for c in best.unwrap_or_default() {
            let mut next = s.clone();
            next.insert(c);
            let mut next_plus = plus.clone();
            next_plus.union_with(self.f.targets(c));
            if self.dfs(next, next_plus, allowed, found, seen, first_only) {
                return true;
            }
        }
        false
    }
}

/// All initial sets of `f`, classified, with their conflicts, sorted by set.
pub fn enumerate_initial_sets(f: &Framework) -> Vec<InitialSetInfo> {
    Scope::whole(f).classified()
}

/// Initial sets of the projection of `f` on `universe`, in base indices.
pub fn enumerate_initial_sets_within(f: &Framework, universe: &ArgSet) -> Vec<InitialSetInfo> {
    Scope::new(f, universe.clone()).classified()
}

/// Canonical serialisation of an admissible set. Each step takes, among the
/// initial sets of the current reduct inside the not-yet-covered part of `e`,
/// the least by class (unattacked, unchallenged, challenged) and then by
/// member tuple.
pub fn decompose(f: &Framework, e: &ArgSet) -> Result<SerialisationSequence> {
    if !f.is_admissible(e) {
        return Err(Error::NotAdmissible);
    }
    let mut universe = f.all();
    let mut rest = e.clone();
    let mut steps = Vec::new();
    while !rest.is_empty() {
        let scope = Scope::new(f, universe.clone());
        let (class, next) = scope
            .minimal_within(&rest)
            .into_iter()
            .map(|s| (scope.classify(&s), s))
            .min()
            .expect("an admissible remainder contains an initial set of the reduct");
        universe.difference_with(&next.union(&f.plus_set(&next)));
        rest.difference_with(&next);
        steps.push(Step {
            selection: next,
            class,
        });
    }
    Ok(SerialisationSequence {
        steps,
        extension: e.clone(),
        spec: SemanticsSpec::ADMISSIBLE,
    })
}
