//! Argumentation frameworks and their primitive relations.
//!
//! Arguments are interned to dense indices `0..n` in label order. Both
//! adjacency directions are kept as [`ArgSet`] rows so that `S⁺` and `S⁻`
//! reduce to word-parallel unions.
//!
//! Most relations come in two flavours: the plain one over the whole
//! framework and a `*_within` one that evaluates the relation in the
//! projection on a universe `U`. The latter lets reducts be handled as masks
//! over the base framework instead of re-indexed copies.

use std::collections::HashMap;

use crate::argset::ArgSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Framework {
    names: Vec<String>,
    index: HashMap<String, usize>,
    attackers: Vec<ArgSet>,
    targets: Vec<ArgSet>,
    attack_count: usize,
}

/// A framework derived from another one by restriction, together with the
/// index correspondence between the two.
#[derive(Clone, Debug)]
pub struct Projection {
    pub framework: Framework,
    /// `new_to_old[i]` is the base index of argument `i` of `framework`.
    pub new_to_old: Vec<usize>,
    /// `old_to_new[j]` is the new index of base argument `j`, if retained.
    pub old_to_new: Vec<Option<usize>>,
}

impl Projection {
    /// Maps a set over the projected framework back to base indices.
    pub fn lift(&self, s: &ArgSet) -> ArgSet {
        ArgSet::from_indices(self.old_to_new.len(), s.iter().map(|i| self.new_to_old[i]))
    }

    /// Maps a base set into the projected framework, dropping arguments that
    /// were not retained.
    pub fn lower(&self, s: &ArgSet) -> ArgSet {
        ArgSet::from_indices(self.new_to_old.len(), s.iter().filter_map(|j| self.old_to_new[j]))
    }
}

impl Framework {
    /// Builds a framework from labels and index pairs. Duplicate attacks are
    /// collapsed; duplicate labels and out-of-range endpoints are rejected.
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        attacks: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = names.len();
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidFramework(format!("duplicate argument `{name}`")));
            }
        }
        let mut attackers = vec![ArgSet::empty(n); n];
        let mut targets = vec![ArgSet::empty(n); n];
        let mut attack_count = 0;
        for (a, b) in attacks {
            if a >= n || b >= n {
                return Err(Error::InvalidFramework(format!(
                    "attack ({a},{b}) out of range for {n} arguments"
                )));
            }
            if targets[a].insert(b) {
                attackers[b].insert(a);
                attack_count += 1;
            }
        }
        Ok(Framework {
            names,
            index,
            attackers,
            targets,
            attack_count,
        })
    }

    /// Convenience constructor keyed by labels.
    pub fn from_labels(labels: &[&str], attacks: &[(&str, &str)]) -> Result<Self> {
        let lookup: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        let mut pairs = Vec::with_capacity(attacks.len());
        for (a, b) in attacks {
            let ia = *lookup
                .get(a)
                .ok_or_else(|| Error::UnknownArgument(a.to_string()))?;
            let ib = *lookup
                .get(b)
                .ok_or_else(|| Error::UnknownArgument(b.to_string()))?;
            pairs.push((ia, ib));
        }
        Framework::new(labels.iter().copied(), pairs)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn attack_count(&self) -> usize {
        self.attack_count
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Resolves labels to a set, failing on the first unknown one.
    pub fn set_of<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<ArgSet> {
        let mut s = self.empty_set();
        for l in labels {
            let l = l.as_ref();
            s.insert(
                self.index_of(l)
                    .ok_or_else(|| Error::UnknownArgument(l.to_string()))?,
            );
        }
        Ok(s)
    }

    pub fn labels_of(&self, s: &ArgSet) -> Vec<String> {
        s.iter().map(|a| self.names[a].clone()).collect()
    }

    /// Renders a set as `[a,b,c]` in index order.
    pub fn format_set(&self, s: &ArgSet) -> String {
        format!("[{}]", self.labels_of(s).join(","))
    }

    #[inline]
    pub fn attackers(&self, a: usize) -> &ArgSet {
        &self.attackers[a]
    }

    /// Arguments attacked by `a`.
    #[inline]
    pub fn targets(&self, a: usize) -> &ArgSet {
        &self.targets[a]
    }

    #[inline]
    pub fn attacks(&self, a: usize, b: usize) -> bool {
        self.targets[a].contains(b)
    }

    /// All attacks as index pairs, sorted.
    pub fn attack_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.targets[a].iter().map(move |b| (a, b)))
            .collect()
    }

    pub fn all(&self) -> ArgSet {
        ArgSet::full(self.len())
    }

    pub fn empty_set(&self) -> ArgSet {
        ArgSet::empty(self.len())
    }

    #[inline]
    fn check(&self, s: &ArgSet) {
        assert_eq!(
            s.arity(),
            self.len(),
            "argument set of arity {} used with a framework of {} arguments",
            s.arity(),
            self.len()
        );
    }

    /// `S⁺`: arguments attacked by some member of `s`.
    pub fn plus_set(&self, s: &ArgSet) -> ArgSet {
        self.check(s);
        let mut out = self.empty_set();
        for a in s {
            out.union_with(&self.targets[a]);
        }
        out
    }

    /// `S⁻`: arguments attacking some member of `s`.
    pub fn minus_set(&self, s: &ArgSet) -> ArgSet {
        self.check(s);
        let mut out = self.empty_set();
        for a in s {
            out.union_with(&self.attackers[a]);
        }
        out
    }

    pub fn is_conflict_free(&self, s: &ArgSet) -> bool {
        self.check(s);
        s.iter().all(|a| self.targets[a].is_disjoint(s))
    }

    /// Whether every attacker of `a` is attacked by `s`.
    pub fn defends(&self, s: &ArgSet, a: usize) -> bool {
        self.attackers[a].is_subset(&self.plus_set(s))
    }

    /// The characteristic function: all arguments defended by `s`.
    pub fn characteristic(&self, s: &ArgSet) -> ArgSet {
        self.characteristic_within(s, &self.all())
    }

    pub fn is_admissible(&self, s: &ArgSet) -> bool {
        self.is_admissible_within(s, &self.all())
    }

    /// `S⁻ ∩ U`.
    pub fn minus_within(&self, s: &ArgSet, universe: &ArgSet) -> ArgSet {
        let mut out = self.minus_set(s);
        out.intersect_with(universe);
        out
    }

    /// The characteristic function of the projection on `universe`,
    /// evaluated on `s ⊆ universe`.
    pub fn characteristic_within(&self, s: &ArgSet, universe: &ArgSet) -> ArgSet {
        let plus = self.plus_set(s);
        let mut out = self.empty_set();
        for a in universe {
            if self.attackers[a].intersection(universe).is_subset(&plus) {
                out.insert(a);
            }
        }
        out
    }

    /// Admissibility of `s ⊆ universe` in the projection on `universe`.
    pub fn is_admissible_within(&self, s: &ArgSet, universe: &ArgSet) -> bool {
        self.is_conflict_free(s) && self.minus_within(s, universe).is_subset(&self.plus_set(s))
    }

    /// Arguments of `universe` with no attacker inside `universe`.
    pub fn unattacked_within(&self, universe: &ArgSet) -> ArgSet {
        let mut out = self.empty_set();
        for a in universe {
            if !self.attackers[a].intersects(universe) {
                out.insert(a);
            }
        }
        out
    }

    /// `AF|_X`, re-indexed densely in base order.
    pub fn project(&self, x: &ArgSet) -> Projection {
        self.check(x);
        let new_to_old: Vec<usize> = x.to_vec();
        let mut old_to_new = vec![None; self.len()];
        for (i, &j) in new_to_old.iter().enumerate() {
            old_to_new[j] = Some(i);
        }
        let names = new_to_old.iter().map(|&j| self.names[j].clone());
        let attacks: Vec<(usize, usize)> = new_to_old
            .iter()
            .enumerate()
            .flat_map(|(i, &j)| {
                let old_to_new = &old_to_new;
                self.targets[j]
                    .iter()
                    .filter_map(move |k| old_to_new[k].map(|t| (i, t)))
            })
            .collect();
        let framework = Framework::new(names, attacks).expect("projection of a valid framework");
        Projection {
            framework,
            new_to_old,
            old_to_new,
        }
    }

    /// The arguments retained by the `s`-reduct: everything outside `s ∪ s⁺`.
    pub fn reduct_universe(&self, s: &ArgSet) -> ArgSet {
        self.all().difference(&s.union(&self.plus_set(s)))
    }

    /// The `s`-reduct `AF|_{A \ (S ∪ S⁺)}`. Defined for any `s`.
    pub fn reduct(&self, s: &ArgSet) -> Projection {
        self.project(&self.reduct_universe(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(f: &Framework, labels: &[&str]) -> ArgSet {
        f.set_of(labels).unwrap()
    }

    #[test]
    fn rejects_duplicate_labels_and_bad_endpoints() {
        assert!(Framework::new(["a", "a"], []).is_err());
        assert!(Framework::new(["a"], [(0, 1)]).is_err());
        let f = Framework::new(["a", "b"], [(0, 1), (0, 1)]).unwrap();
        assert_eq!(f.attack_count(), 1);
    }

    #[test]
    fn adjacency_views_agree() {
        let f = fixtures::af0();
        for a in 0..f.len() {
            for b in 0..f.len() {
                assert_eq!(f.attackers(a).contains(b), f.targets(b).contains(a));
            }
        }
    }

    #[test]
    fn plus_and_minus_on_af0() {
        let f = fixtures::af0();
        let s = set(&f, &["e", "i"]);
        assert_eq!(f.minus_set(&s), set(&f, &["j", "d"]));
        assert_eq!(f.plus_set(&s), set(&f, &["d", "g", "j", "c"]));
        assert!(f.plus_set(&f.empty_set()).is_empty());
        assert!(f.minus_set(&f.empty_set()).is_empty());
    }

    #[test]
    fn plus_and_minus_on_af1() {
        let f = fixtures::af1();
        let s = set(&f, &["b"]);
        assert_eq!(f.plus_set(&s), set(&f, &["c", "e"]));
        assert_eq!(f.minus_set(&s), set(&f, &["a", "e"]));
    }

    #[test]
    fn conflict_freeness_and_defense() {
        let f = fixtures::af0();
        assert!(f.is_conflict_free(&set(&f, &["e", "i"])));
        assert!(!f.is_conflict_free(&set(&f, &["a"])));
        assert!(f.defends(&set(&f, &["i"]), f.index_of("e").unwrap()));
        assert!(f.defends(&f.empty_set(), f.index_of("h").unwrap()));
    }

    #[test]
    fn characteristic_of_empty_set_is_unattacked() {
        let f = fixtures::af0();
        assert_eq!(f.characteristic(&f.empty_set()), set(&f, &["h"]));
        let free = Framework::new(["x", "y", "z"], []).unwrap();
        assert_eq!(free.characteristic(&free.all()), free.all());
    }

    #[test]
    fn admissible_sets_of_example_one() {
        let f = fixtures::af0();
        for s in [
            &["b", "e", "f", "h", "i"][..],
            &["b", "e", "f", "i"],
            &["b", "e", "h", "i"],
            &["e", "f", "h", "i"],
            &["b", "e", "i"],
            &["f", "e", "i"],
            &["h", "e", "i"],
            &["e", "i"],
        ] {
            assert!(f.is_admissible(&set(&f, s)), "{s:?}");
        }
        assert!(f.is_admissible(&f.empty_set()));
        assert!(!f.is_admissible(&set(&f, &["e"])));
    }

    #[test]
    fn projection_on_scc() {
        let f = fixtures::af0();
        let p = f.project(&set(&f, &["d", "e", "i", "j"]));
        let g = &p.framework;
        assert_eq!(g.names(), ["d", "e", "i", "j"]);
        let mut got: Vec<(String, String)> = g
            .attack_pairs()
            .into_iter()
            .map(|(a, b)| (g.name(a).to_string(), g.name(b).to_string()))
            .collect();
        got.sort();
        let want = [("d", "i"), ("e", "d"), ("i", "j"), ("j", "e")];
        assert_eq!(got, want.map(|(a, b)| (a.to_string(), b.to_string())));
        assert_eq!(f.project(&f.all()).framework, f);
    }

    #[test]
    fn reduct_examples() {
        let f = fixtures::af1();
        let r = f.reduct(&set(&f, &["e"])).framework;
        assert_eq!(r.names(), ["a", "c", "d"]);
        assert_eq!(
            r.attack_pairs(),
            vec![
                (r.index_of("c").unwrap(), r.index_of("d").unwrap()),
                (r.index_of("d").unwrap(), 0)
            ]
            .into_iter()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect::<Vec<_>>()
        );
        assert_eq!(f.reduct(&f.empty_set()).framework, f);

        let g = fixtures::af0();
        let r = g.reduct(&set(&g, &["h", "f"]));
        assert_eq!(r.framework.names(), ["b", "c", "d", "e", "i", "j"]);
        assert_eq!(
            r.lift(&r.framework.all()),
            g.reduct_universe(&set(&g, &["h", "f"]))
        );
    }
}
