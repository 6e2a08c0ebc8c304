//! Brute-force reference semantics over subsets of at most 64 arguments.
//!
//! Everything here is restated from the definitions on plain `u64` masks and
//! shares nothing with the engine beyond reading the attack relation.

use std::str::FromStr;

use crate::argset::ArgSet;
use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::initial::Class;

pub const DEFAULT_BOUND: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Semantics {
    ConflictFree,
    Admissible,
    Complete,
    Grounded,
    Stable,
    Preferred,
    SemiStable,
    Ideal,
    StronglyAdmissible,
    Eager,
    Initial,
}

impl Semantics {
    pub const ALL: [Semantics; 11] = [
        Semantics::ConflictFree,
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Grounded,
        Semantics::Stable,
        Semantics::Preferred,
        Semantics::SemiStable,
        Semantics::Ideal,
        Semantics::StronglyAdmissible,
        Semantics::Eager,
        Semantics::Initial,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Semantics::ConflictFree => "cf",
            Semantics::Admissible => "ad",
            Semantics::Complete => "co",
            Semantics::Grounded => "gr",
            Semantics::Stable => "st",
            Semantics::Preferred => "pr",
            Semantics::SemiStable => "sst",
            Semantics::Ideal => "id",
            Semantics::StronglyAdmissible => "sa",
            Semantics::Eager => "eager",
            Semantics::Initial => "is",
        }
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Semantics::ALL
            .into_iter()
            .find(|x| x.code() == lower)
            .ok_or_else(|| Error::UnknownTask(s.to_string()))
    }
}

/// A framework as attack masks, ready for subset enumeration.
pub struct Oracle {
    n: usize,
    attackers: Vec<u64>,
    targets: Vec<u64>,
}

fn members(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

fn subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// Keeps the ⊆-maximal masks of `sets`.
fn maximal(sets: &[u64]) -> Vec<u64> {
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && subset(s, t)))
        .collect()
}

fn minimal(sets: &[u64]) -> Vec<u64> {
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && subset(t, s)))
        .collect()
}

impl Oracle {
    pub fn new(f: &Framework, bound: usize) -> Result<Self> {
        let n = f.len();
        if n > bound.min(64) {
            return Err(Error::BoundExceeded {
                size: n,
                bound: bound.min(64),
            });
        }
        let mut attackers = vec![0u64; n];
        let mut targets = vec![0u64; n];
        for a in 0..n {
            for b in 0..n {
                if f.attacks(a, b) {
                    targets[a] |= 1 << b;
                    attackers[b] |= 1 << a;
                }
            }
        }
        Ok(Oracle {
            n,
            attackers,
            targets,
        })
    }

    fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn plus(&self, s: u64) -> u64 {
        members(s).fold(0, |acc, a| acc | self.targets[a])
    }

    fn conflict_free(&self, s: u64) -> bool {
        self.plus(s) & s == 0
    }

    fn defends(&self, s: u64, a: usize) -> bool {
        let p = self.plus(s);
        members(self.attackers[a]).all(|b| p >> b & 1 == 1)
    }

    fn defended(&self, s: u64) -> u64 {
        (0..self.n)
            .filter(|&a| self.defends(s, a))
            .fold(0, |m, a| m | 1 << a)
    }

    fn admissible(&self, s: u64) -> bool {
        self.conflict_free(s) && members(s).all(|a| self.defends(s, a))
    }

    /// Conflict-free sets, grown argument by argument so that conflicting
    /// branches are cut early.
    fn conflict_free_sets(&self) -> Vec<u64> {
        fn go(o: &Oracle, i: usize, cur: u64, out: &mut Vec<u64>) {
            if i == o.n {
                out.push(cur);
                return;
            }
            go(o, i + 1, cur, out);
            let bit = 1u64 << i;
            let clash = o.targets[i] & (cur | bit) != 0 || o.attackers[i] & cur != 0;
            if !clash {
                go(o, i + 1, cur | bit, out);
            }
        }
        let mut out = Vec::new();
        go(self, 0, 0, &mut out);
        out
    }

    pub fn admissible_sets(&self) -> Vec<u64> {
        self.conflict_free_sets()
            .into_iter()
            .filter(|&s| self.admissible(s))
            .collect()
    }

    fn complete_sets(&self, adm: &[u64]) -> Vec<u64> {
        adm.iter().copied().filter(|&s| self.defended(s) == s).collect()
    }

    fn range(&self, s: u64) -> u64 {
        s | self.plus(s)
    }

    /// The ⊆-maximal admissible set inside `bound`, asserted to be unique.
    fn largest_admissible_within(&self, adm: &[u64], bound: u64) -> u64 {
        let inside: Vec<u64> = adm.iter().copied().filter(|&s| subset(s, bound)).collect();
        let max = maximal(&inside);
        assert_eq!(max.len(), 1, "maximal admissible subset must be unique");
        max[0]
    }

    fn strongly_admissible(&self, adm: &[u64]) -> Vec<u64> {
        let mut by_size = adm.to_vec();
        by_size.sort_by_key(|s| s.count_ones());
        let mut known: Vec<u64> = Vec::new();
        for e in by_size {
            let ok = members(e).all(|a| {
                let rest = e & !(1 << a);
                known.iter().any(|&sub| subset(sub, rest) && self.defends(sub, a))
            });
            if ok {
                known.push(e);
            }
        }
        known
    }

    pub fn extension_masks(&self, sigma: Semantics) -> Vec<u64> {
        let mut out = match sigma {
            Semantics::ConflictFree => self.conflict_free_sets(),
            Semantics::Initial => self.initial_masks(),
            _ => {
                let adm = self.admissible_sets();
                match sigma {
                    Semantics::Admissible => adm,
                    Semantics::Complete => self.complete_sets(&adm),
                    Semantics::Grounded => {
                        let min = minimal(&self.complete_sets(&adm));
                        assert_eq!(min.len(), 1, "grounded extension must be unique");
                        min
                    }
                    Semantics::Stable => adm
                        .iter()
                        .copied()
                        .filter(|&s| self.range(s) == self.all())
                        .collect(),
                    Semantics::Preferred => maximal(&adm),
                    Semantics::SemiStable => self.semi_stable(&adm),
                    Semantics::Ideal => {
                        let common = maximal(&adm).into_iter().fold(self.all(), |m, p| m & p);
                        vec![self.largest_admissible_within(&adm, common)]
                    }
                    Semantics::Eager => {
                        let common = self.semi_stable(&adm).into_iter().fold(self.all(), |m, p| m & p);
                        vec![self.largest_admissible_within(&adm, common)]
                    }
                    Semantics::StronglyAdmissible => self.strongly_admissible(&adm),
                    Semantics::ConflictFree | Semantics::Initial => unreachable!(),
                }
            }
        };
        out.sort_unstable();
        out
    }

    fn semi_stable(&self, adm: &[u64]) -> Vec<u64> {
        adm.iter()
            .copied()
            .filter(|&s| {
                let r = self.range(s);
                !adm.iter()
                    .any(|&t| r != self.range(t) && subset(r, self.range(t)))
            })
            .collect()
    }

    fn initial_masks(&self) -> Vec<u64> {
        let nonempty: Vec<u64> = self.admissible_sets().into_iter().filter(|&s| s != 0).collect();
        minimal(&nonempty)
    }

    /// Initial sets with their classes, decided by direct attack checks.
    pub fn classified_masks(&self) -> Vec<(u64, Class)> {
        let is = self.initial_masks();
        let mut out: Vec<(u64, Class)> = is
            .iter()
            .map(|&s| {
                let attacked = (0..self.n).any(|b| self.targets[b] & s != 0);
                let class = if !attacked {
                    Class::Unattacked
                } else if is.iter().any(|&t| self.plus(t) & s != 0) {
                    Class::Challenged
                } else {
                    Class::Unchallenged
                };
                (s, class)
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn to_argset(&self, m: u64) -> ArgSet {
        ArgSet::from_indices(self.n, members(m))
    }
}

fn sorted_sets(o: &Oracle, masks: Vec<u64>) -> Vec<ArgSet> {
    let mut v: Vec<ArgSet> = masks.into_iter().map(|m| o.to_argset(m)).collect();
    v.sort();
    v
}

pub fn all_admissible(f: &Framework, bound: usize) -> Result<Vec<ArgSet>> {
    let o = Oracle::new(f, bound)?;
    let adm = o.admissible_sets();
    Ok(sorted_sets(&o, adm))
}

/// σ-extensions of `f`, sorted. Grounded, ideal and eager yield one set.
pub fn extensions(f: &Framework, sigma: Semantics, bound: usize) -> Result<Vec<ArgSet>> {
    let o = Oracle::new(f, bound)?;
    let masks = o.extension_masks(sigma);
    Ok(sorted_sets(&o, masks))
}

/// Initial sets with classes, sorted by set.
pub fn initial_sets_bruteforce(f: &Framework, bound: usize) -> Result<Vec<(ArgSet, Class)>> {
    let o = Oracle::new(f, bound)?;
    let mut v: Vec<(ArgSet, Class)> = o
        .classified_masks()
        .into_iter()
        .map(|(m, c)| (o.to_argset(m), c))
        .collect();
    v.sort();
    Ok(v)
}
