//! Acceptance criteria 1-10, one PASS/FAIL line each.
//!
//! Corpus (a) is every digraph on at most four arguments, self-loops
//! included. Corpus (b) is 500 seeded random digraphs on at most eight
//! arguments with edge density drawn uniformly.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use saf::decision::{self, Family, Subject, Task, TaskQuery};
use saf::initial::{
    decompose, enumerate_initial_sets, enumerate_initial_sets_within, maximal_admissible_subset_traced,
};
use saf::io::{self, Format};
use saf::oracle::{self, Semantics, DEFAULT_BOUND};
use saf::reductions::{cnf3_to_af, sat_bruteforce, Cnf3, Literal, PSI};
use saf::scc::sccs;
use saf::serial::{enumerate_extensions, SemanticsSpec};
use saf::{fixtures, ArgSet, Class, Framework, InitialSetInfo};

type Check = Result<String, String>;
type Criterion<'a> = (u32, &'static str, Option<Duration>, Box<dyn Fn() -> Check + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn framework(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Framework {
    Framework::new((0..n).map(|i| format!("a{i}")), edges).unwrap()
}

fn corpus_a() -> Vec<Framework> {
    (0..=4usize)
        .flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
            (0u64..1 << pairs.len()).map(move |m| {
                framework(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| m >> i & 1 == 1)
                        .map(|(_, &p)| p),
                )
            })
        })
        .collect()
}

fn corpus_b() -> Vec<Framework> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..500)
        .map(|_| {
            let n = rng.gen_range(1..=8);
            let p: f64 = rng.gen();
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            framework(n, edges)
        })
        .collect()
}

fn labels(f: &Framework, sets: &[ArgSet]) -> BTreeSet<Vec<String>> {
    sets.iter().map(|s| f.labels_of(s)).collect()
}

fn named(sets: &[&[&str]]) -> BTreeSet<Vec<String>> {
    sets.iter()
        .map(|s| s.iter().map(|l| l.to_string()).collect())
        .collect()
}

fn subsets(n: usize) -> impl Iterator<Item = ArgSet> {
    (0u32..1 << n).map(move |m| ArgSet::from_indices(n, (0..n).filter(|i| m >> i & 1 == 1)))
}

/// Label sets of the unattacked, unchallenged and challenged initial sets.
fn triple(f: &Framework, sets: &[InitialSetInfo]) -> [BTreeSet<Vec<String>>; 3] {
    let of = |c: Class| {
        sets.iter()
            .filter(|i| i.class == c)
            .map(|i| f.labels_of(&i.set))
            .collect()
    };
    [
        of(Class::Unattacked),
        of(Class::Unchallenged),
        of(Class::Challenged),
    ]
}

fn isomorphic(f: &Framework, g: &Framework) -> bool {
    fn search(f: &Framework, g: &Framework, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == f.len() {
            return true;
        }
        for j in 0..g.len() {
            if used[j] {
                continue;
            }
            let consistent = (0..i).chain([i]).all(|k| {
                let mk = if k == i { j } else { map[k] };
                f.attacks(i, k) == g.attacks(j, mk) && f.attacks(k, i) == g.attacks(mk, j)
            });
            if consistent {
                map.push(j);
                used[j] = true;
                if search(f, g, map, used) {
                    return true;
                }
                map.pop();
                used[j] = false;
            }
        }
        false
    }
    f.len() == g.len()
        && f.attack_count() == g.attack_count()
        && search(f, g, &mut Vec::new(), &mut vec![false; g.len()])
}

fn criterion_1() -> Check {
    let f = fixtures::af0();
    let mut out = Vec::new();
    let code = saf::cli::run(
        [
            "saf",
            "--task",
            "EE-IS",
            concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/af0.tgf"),
        ],
        &mut out,
        &mut std::io::sink(),
    );
    ensure!(code == 0, "EE-IS exited {code}");
    let printed = String::from_utf8(out).unwrap();
    ensure!(printed == "[d,j]\n[e,i]\n[f]\n[h]\n", "EE-IS printed {printed:?}");

    let is = enumerate_initial_sets(&f);
    let [ua, uc, ch] = triple(&f, &is);
    ensure!(ua == named(&[&["h"]]), "UA {ua:?}");
    ensure!(uc == named(&[&["f"]]), "UC {uc:?}");
    ensure!(ch == named(&[&["d", "j"], &["e", "i"]]), "CH {ch:?}");
    for i in is.iter().filter(|i| i.class == Class::Challenged) {
        let other = if f.labels_of(&i.set) == ["d", "j"] {
            ["e", "i"]
        } else {
            ["d", "j"]
        };
        ensure!(
            labels(&f, &i.conflicts) == named(&[&other]),
            "conflicts of {}",
            f.format_set(&i.set)
        );
    }

    let e = f.index_of("e").unwrap();
    let with_e: Vec<ArgSet> = enumerate_extensions(&f, &SemanticsSpec::ADMISSIBLE)
        .into_iter()
        .filter(|s| s.contains(e))
        .collect();
    let want = named(&[
        &["b", "e", "f", "h", "i"],
        &["b", "e", "f", "i"],
        &["b", "e", "h", "i"],
        &["e", "f", "h", "i"],
        &["b", "e", "i"],
        &["e", "f", "i"],
        &["e", "h", "i"],
        &["e", "i"],
    ]);
    ensure!(
        labels(&f, &with_e) == want,
        "admissible sets with e: {:?}",
        labels(&f, &with_e)
    );

    let s1 = f.set_of(["b", "e", "f", "h", "i"]).unwrap();
    let seq = decompose(&f, &s1).map_err(|e| e.to_string())?;
    let union = seq
        .steps
        .iter()
        .fold(f.empty_set(), |acc, s| acc.union(&s.selection));
    ensure!(
        union == s1 && seq.extension == s1,
        "decomposition does not union to S1"
    );
    let states = seq.replay(&f).map_err(|e| e.to_string())?;
    let reducts: Vec<Vec<String>> = states.iter().skip(1).map(|s| f.labels_of(&s.remaining)).collect();
    let want: Vec<Vec<String>> = [
        &["a", "b", "c", "d", "e", "f", "i", "j"][..],
        &["b", "c", "d", "e", "i", "j"],
        &["b"],
        &[],
    ]
    .iter()
    .map(|r| r.iter().map(|l| l.to_string()).collect())
    .collect();
    ensure!(reducts == want, "reducts {reducts:?}");
    Ok(format!("{} steps", seq.steps.len()))
}

fn criterion_2() -> Check {
    let f = fixtures::af1();
    let is: Vec<ArgSet> = enumerate_initial_sets(&f).into_iter().map(|i| i.set).collect();
    ensure!(
        labels(&f, &is) == named(&[&["a", "c"], &["b", "d"], &["e"]]),
        "IS {:?}",
        labels(&f, &is)
    );

    let after_e = f.reduct_universe(&f.set_of(["e"]).unwrap());
    let is_e: Vec<ArgSet> = enumerate_initial_sets_within(&f, &after_e)
        .into_iter()
        .map(|i| i.set)
        .collect();
    ensure!(
        labels(&f, &is_e) == named(&[&["c"]]),
        "IS after e {:?}",
        labels(&f, &is_e)
    );

    let after_ec = f.reduct_universe(&f.set_of(["e", "c"]).unwrap());
    let is_ec: Vec<ArgSet> = enumerate_initial_sets_within(&f, &after_ec)
        .into_iter()
        .map(|i| i.set)
        .collect();
    ensure!(
        labels(&f, &is_ec) == named(&[&["a"]]),
        "IS after e,c {:?}",
        labels(&f, &is_ec)
    );
    Ok("3 levels".into())
}

fn criterion_3(a: &[Framework], b: &[Framework]) -> Check {
    let pairs = [
        (SemanticsSpec::ADMISSIBLE, Semantics::Admissible),
        (SemanticsSpec::COMPLETE, Semantics::Complete),
        (SemanticsSpec::GROUNDED, Semantics::Grounded),
        (SemanticsSpec::STABLE, Semantics::Stable),
        (SemanticsSpec::PREFERRED, Semantics::Preferred),
        (SemanticsSpec::STRONGLY_ADMISSIBLE, Semantics::StronglyAdmissible),
    ];
    a.par_iter().chain(b.par_iter()).try_for_each(|f| {
        for (spec, sem) in pairs {
            let got = enumerate_extensions(f, &spec);
            let want = oracle::extensions(f, sem, DEFAULT_BOUND).unwrap();
            ensure!(got == want, "{} differs on {:?}", spec.label(), f.attack_pairs());
            if spec == SemanticsSpec::GROUNDED {
                ensure!(got.len() == 1, "grounded gave {} extensions", got.len());
            }
        }
        Ok(())
    })?;
    Ok(format!("{} + {} frameworks x 6 presets", a.len(), b.len()))
}

fn criterion_4() -> Check {
    let (f2, f3) = (fixtures::af2(), fixtures::af3());
    let (t2, t3) = (
        triple(&f2, &enumerate_initial_sets(&f2)),
        triple(&f3, &enumerate_initial_sets(&f3)),
    );
    ensure!(t2 == t3, "AF2/AF3 triples differ: {t2:?} vs {t3:?}");
    let r2 = f2.reduct(&f2.set_of(["e"]).unwrap()).framework;
    let r3 = f3.reduct(&f3.set_of(["e"]).unwrap()).framework;
    ensure!(isomorphic(&r2, &r3), "reducts after e are not isomorphic");
    let id2 = oracle::extensions(&f2, Semantics::Ideal, DEFAULT_BOUND).unwrap();
    let id3 = oracle::extensions(&f3, Semantics::Ideal, DEFAULT_BOUND).unwrap();
    ensure!(
        labels(&f2, &id2) == named(&[&["b"]]),
        "AF2 ideal {:?}",
        labels(&f2, &id2)
    );
    ensure!(
        labels(&f3, &id3) == named(&[&["b", "e"]]),
        "AF3 ideal {:?}",
        labels(&f3, &id3)
    );

    let fs = [fixtures::af4(), fixtures::af5(), fixtures::af6()];
    let t: Vec<_> = fs.iter().map(|f| triple(f, &enumerate_initial_sets(f))).collect();
    ensure!(t[0] == t[1] && t[1] == t[2], "AF4-6 triples differ: {t:?}");
    let want = [
        named(&[&["a", "c"], &["b"]]),
        named(&[&["b"]]),
        named(&[&["a"], &["b"]]),
    ];
    for (i, (f, w)) in fs.iter().zip(&want).enumerate() {
        let sst = oracle::extensions(f, Semantics::SemiStable, DEFAULT_BOUND).unwrap();
        ensure!(
            labels(f, &sst) == *w,
            "AF{} semi-stable {:?}",
            i + 4,
            labels(f, &sst)
        );
    }
    Ok("5 fixtures".into())
}

fn criterion_5(b: &[Framework]) -> Check {
    let f = fixtures::af7();
    let uc = enumerate_extensions(&f, &SemanticsSpec::UNCHALLENGED);
    ensure!(
        labels(&f, &uc) == named(&[&["d", "f"]]),
        "AF7 uc {:?}",
        labels(&f, &uc)
    );
    let id = oracle::extensions(&f, Semantics::Ideal, DEFAULT_BOUND).unwrap();
    ensure!(id == vec![f.empty_set()], "AF7 ideal {:?}", labels(&f, &id));
    let pr = oracle::extensions(&f, Semantics::Preferred, DEFAULT_BOUND).unwrap();
    let want = named(&[&["a", "e"], &["a", "d", "f"], &["b", "e"], &["b", "d", "f"]]);
    ensure!(labels(&f, &pr) == want, "AF7 preferred {:?}", labels(&f, &pr));

    let count = b
        .par_iter()
        .map(|f| {
            let ideal = &oracle::extensions(f, Semantics::Ideal, DEFAULT_BOUND).unwrap()[0];
            let preferred = oracle::extensions(f, Semantics::Preferred, DEFAULT_BOUND).unwrap();
            let exts = enumerate_extensions(f, &SemanticsSpec::UNCHALLENGED);
            for e in &exts {
                ensure!(
                    ideal.is_subset(e),
                    "uc extension misses ideal on {:?}",
                    f.attack_pairs()
                );
                ensure!(
                    preferred.iter().any(|p| e.is_subset(p)),
                    "uc extension outside every preferred on {:?}",
                    f.attack_pairs()
                );
            }
            Ok(exts.len())
        })
        .try_reduce(|| 0, |x, y| Ok(x + y))?;
    Ok(format!("{count} uc extensions checked"))
}

fn criterion_6(a: &[Framework]) -> Check {
    let checks = a
        .par_iter()
        .map(|f| {
            let brute = oracle::initial_sets_bruteforce(f, DEFAULT_BOUND).unwrap();
            let ask = |task, family, subject| {
                decision::decide(
                    f,
                    &TaskQuery {
                        task,
                        family,
                        subject,
                    },
                )
                .unwrap()
            };
            let mut n = 0usize;
            for fam in Family::ALL {
                let members: Vec<&ArgSet> = brute
                    .iter()
                    .filter(|(_, c)| fam.admits(*c))
                    .map(|(s, _)| s)
                    .collect();
                for s in subsets(f.len()) {
                    ensure!(
                        ask(Task::Ver, fam, Subject::Set(s.clone())) == members.contains(&&s),
                        "VER-{fam} {} on {:?}",
                        f.format_set(&s),
                        f.attack_pairs()
                    );
                    n += 1;
                }
                ensure!(
                    ask(Task::Exists, fam, Subject::None) == !members.is_empty(),
                    "EXISTS-{fam} on {:?}",
                    f.attack_pairs()
                );
                let unique = ask(Task::Unique, fam, Subject::None);
                ensure!(
                    unique == (members.len() == 1),
                    "UNIQUE-{fam} on {:?}",
                    f.attack_pairs()
                );
                if fam == Family::Challenged {
                    ensure!(!unique, "UNIQUE-IS-CH true on {:?}", f.attack_pairs());
                }
                for x in 0..f.len() {
                    let cred = members.iter().any(|s| s.contains(x));
                    let skept = members.iter().all(|s| s.contains(x));
                    ensure!(
                        ask(Task::Cred, fam, Subject::Argument(x)) == cred,
                        "DC-{fam} a{x} on {:?}",
                        f.attack_pairs()
                    );
                    ensure!(
                        ask(Task::Skept, fam, Subject::Argument(x)) == skept,
                        "DS-{fam} a{x} on {:?}",
                        f.attack_pairs()
                    );
                }
                n += 2 + 2 * f.len();
            }
            Ok(n)
        })
        .try_reduce(|| 0, |x, y| Ok(x + y))?;
    Ok(format!("{checks} answers"))
}

/// Clauses as sorted literal triples, repetitions allowed.
fn all_clauses(atoms: usize) -> Vec<[Literal; 3]> {
    let lits: Vec<Literal> = (0..atoms)
        .flat_map(|a| [Literal::pos(a), Literal::neg(a)])
        .collect();
    let mut out = Vec::new();
    for i in 0..lits.len() {
        for j in i..lits.len() {
            for k in j..lits.len() {
                out.push([lits[i], lits[j], lits[k]]);
            }
        }
    }
    out
}

fn reduction_agrees(phi: &Cnf3) -> Result<bool, String> {
    let sat = sat_bruteforce(phi).unwrap();
    let f = cnf3_to_af(phi);
    let psi = f.set_of([PSI]).unwrap();
    ensure!(
        decision::verify(&f, &psi, Family::Challenged) == sat,
        "CH mismatch on {:?}",
        phi.clauses()
    );
    ensure!(
        decision::verify(&f, &psi, Family::Unchallenged) == !sat,
        "UC mismatch on {:?}",
        phi.clauses()
    );
    Ok(sat)
}

fn criterion_7() -> Check {
    let atoms3: Vec<String> = ["x1", "x2", "x3"].map(String::from).to_vec();
    let clauses = all_clauses(3);
    let m = clauses.len();
    let mut sets: Vec<Vec<usize>> = vec![vec![]];
    for size in 1..=4 {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            sets.push(idx.clone());
            let Some(p) = (0..size).rev().find(|&p| idx[p] < m - size + p) else {
                break;
            };
            idx[p] += 1;
            for q in p + 1..size {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    let unsat = sets
        .par_iter()
        .map(|set| {
            let phi = Cnf3::new(atoms3.clone(), set.iter().map(|&i| clauses[i]).collect()).unwrap();
            reduction_agrees(&phi).map(|sat| usize::from(!sat))
        })
        .try_reduce(|| 0, |x, y| Ok(x + y))?;

    let mut rng = ChaCha8Rng::seed_from_u64(0xc1a5e);
    let atoms4: Vec<String> = (1..=4).map(|i| format!("x{i}")).collect();
    let mut unsat4 = 0;
    for _ in 0..200 {
        let k = rng.gen_range(1..=24);
        let cls = (0..k)
            .map(|_| {
                [0; 3].map(|_| Literal {
                    atom: rng.gen_range(0..4),
                    positive: rng.gen(),
                })
            })
            .collect();
        let phi = Cnf3::new(atoms4.clone(), cls).unwrap();
        unsat4 += usize::from(!reduction_agrees(&phi)?);
    }

    let f = cnf3_to_af(&fixtures::phi_fig8());
    let psi = f.set_of([PSI]).unwrap();
    let class = enumerate_initial_sets(&f)
        .into_iter()
        .find(|i| i.set == psi)
        .map(|i| i.class);
    ensure!(
        class == Some(Class::Challenged),
        "fixture formula gives {class:?}"
    );
    Ok(format!(
        "{} 3-atom formulas ({unsat} unsat), 200 4-atom formulas ({unsat4} unsat)",
        sets.len()
    ))
}

fn criterion_8(a: &[Framework]) -> Check {
    let checked = a
        .par_iter()
        .map(|f| {
            let admissible: Vec<ArgSet> = subsets(f.len()).filter(|t| f.is_admissible(t)).collect();
            let mut n = 0;
            for s in subsets(f.len()).filter(|s| f.is_conflict_free(s)) {
                let (m, steps) = maximal_admissible_subset_traced(f, &s).unwrap();
                let best = admissible
                    .iter()
                    .filter(|t| t.is_subset(&s))
                    .max_by_key(|t| t.len())
                    .unwrap();
                ensure!(
                    m == *best,
                    "MAS of {} on {:?}",
                    f.format_set(&s),
                    f.attack_pairs()
                );
                ensure!(steps <= s.len(), "{steps} iterations for |s| = {}", s.len());
                n += 1;
            }
            Ok(n)
        })
        .try_reduce(|| 0, |x, y| Ok(x + y))?;
    Ok(format!("{checked} conflict-free sets"))
}

fn structural(f: &Framework) -> Result<usize, String> {
    let is = enumerate_initial_sets(f);
    let comps = sccs(f);
    let ctx = || format!("{:?}", f.attack_pairs());
    let find = |s: &ArgSet| is.iter().find(|i| i.set == *s);
    for i in &is {
        let ids: BTreeSet<usize> = i.set.iter().map(|a| comps.component_of(a).unwrap()).collect();
        ensure!(ids.len() == 1, "initial set spans SCCs on {}", ctx());
        let scc = comps.component(*ids.first().unwrap());
        // Forward direction of the SCC characterisation.
        ensure!(
            f.minus_set(&i.set).is_subset(scc),
            "external attacker on {}",
            ctx()
        );
        let proj = f.project(scc);
        let local = oracle::initial_sets_bruteforce(&proj.framework, DEFAULT_BOUND).unwrap();
        ensure!(
            local.iter().any(|(t, _)| proj.lift(t) == i.set),
            "not initial in its SCC on {}",
            ctx()
        );

        match i.class {
            Class::Unattacked => {
                ensure!(
                    i.set.len() == 1 && f.minus_set(&i.set).is_empty(),
                    "bad unattacked set on {}",
                    ctx()
                );
                ensure!(
                    scc.len() == 1,
                    "unattacked set in SCC of size {} on {}",
                    scc.len(),
                    ctx()
                );
            }
            _ => ensure!(
                scc.len() > 1,
                "attacked initial set in a trivial SCC on {}",
                ctx()
            ),
        }
        ensure!(
            (i.class == Class::Challenged) == !i.conflicts.is_empty(),
            "class/conflicts mismatch on {}",
            ctx()
        );
        for c in &i.conflicts {
            ensure!(c.is_subset(scc), "conflict across SCCs on {}", ctx());
            let other = find(c).ok_or_else(|| format!("conflict is not initial on {}", ctx()))?;
            ensure!(
                other.conflicts.contains(&i.set),
                "asymmetric conflict on {}",
                ctx()
            );
        }
    }
    // Reverse direction: local initial sets without external attackers are global.
    for scc in comps.components() {
        let proj = f.project(scc);
        for (t, _) in oracle::initial_sets_bruteforce(&proj.framework, DEFAULT_BOUND).unwrap() {
            let lifted = proj.lift(&t);
            let expected = f.minus_set(&lifted).is_subset(scc);
            ensure!(
                find(&lifted).is_some() == expected,
                "SCC characterisation fails on {}",
                ctx()
            );
        }
    }
    // Behaviour under the reduct of each initial set.
    for s in &is {
        let reduct = enumerate_initial_sets_within(f, &f.reduct_universe(&s.set));
        let covered = reduct.iter().fold(f.empty_set(), |acc, r| acc.union(&r.set));
        for t in is.iter().filter(|t| t.set != s.set) {
            let kept = reduct.iter().find(|r| r.set == t.set);
            if t.class == Class::Unattacked {
                ensure!(
                    kept.is_some_and(|r| r.class == Class::Unattacked),
                    "unattacked set lost on {}",
                    ctx()
                );
            }
            if s.conflicts.contains(&t.set) {
                ensure!(kept.is_none(), "conflicting set survives the reduct on {}", ctx());
            } else {
                ensure!(
                    t.set.intersects(&covered),
                    "non-conflicting set vanishes on {}",
                    ctx()
                );
            }
        }
    }
    Ok(is.len())
}

fn criterion_9(a: &[Framework], b: &[Framework]) -> Check {
    let sets = a
        .par_iter()
        .chain(b.par_iter())
        .map(structural)
        .try_reduce(|| 0, |x, y| Ok(x + y))?;
    Ok(format!("{sets} initial sets"))
}

fn criterion_10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x10);
    let mut cases: Vec<(String, Framework)> = fixtures::all()
        .into_iter()
        .map(|(n, f)| (n.to_string(), f))
        .collect();
    for k in 0..100 {
        let n = rng.gen_range(0..=12);
        let p: f64 = rng.gen();
        let names: Vec<String> = (0..n)
            .map(|i| match rng.gen_range(0..3) {
                0 => format!("a{i}"),
                1 => format!("arg_{i}"),
                _ => format!("X{i}y"),
            })
            .collect();
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        cases.push((format!("random #{k}"), Framework::new(names, edges).unwrap()));
    }
    for (name, f) in &cases {
        for format in [Format::Tgf, Format::Apx, Format::Json] {
            let text = io::emit(f, format).map_err(|e| e.to_string())?;
            let back = io::parse(&text, format).map_err(|e| format!("{name} {format:?}: {e}"))?;
            ensure!(back == *f, "{name} changed through {format:?}");
            ensure!(
                io::emit(&back, format).unwrap() == text,
                "{name} emits differently through {format:?}"
            );
        }
    }
    Ok(format!("{} frameworks x 3 formats", cases.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let a = corpus_a();
    let b = corpus_b();
    println!(
        "corpus (a): {} frameworks, corpus (b): {} frameworks, built in {:.2?}",
        a.len(),
        b.len(),
        start.elapsed()
    );
    let secs = Duration::from_secs;
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "AF0 initial sets, admissible sets with e, decomposition",
            Some(secs(1)),
            Box::new(criterion_1),
        ),
        (
            2,
            "AF1 initial sets through two reducts",
            Some(secs(1)),
            Box::new(criterion_2),
        ),
        (
            3,
            "serialisation presets equal brute force",
            Some(secs(300)),
            Box::new(|| criterion_3(&a, &b)),
        ),
        (
            4,
            "ideal and semi-stable are not serialisable",
            Some(secs(1)),
            Box::new(criterion_4),
        ),
        (
            5,
            "unchallenged preset between ideal and preferred",
            Some(secs(60)),
            Box::new(|| criterion_5(&b)),
        ),
        (
            6,
            "decision tasks equal brute force",
            Some(secs(300)),
            Box::new(|| criterion_6(&a)),
        ),
        (7, "3-CNF reduction", Some(secs(120)), Box::new(criterion_7)),
        (
            8,
            "maximal admissible subset fixed point",
            Some(secs(60)),
            Box::new(|| criterion_8(&a)),
        ),
        (
            9,
            "structural properties of initial sets",
            None,
            Box::new(|| criterion_9(&a, &b)),
        ),
        (10, "TGF/APX/JSON round trips", None, Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (n, title, bound, check) in criteria {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(&*check)).unwrap_or_else(|p| {
            Err(format!(
                "panic: {:?}",
                p.downcast_ref::<String>()
                    .map(String::as_str)
                    .or(p.downcast_ref::<&str>().copied())
            ))
        });
        let elapsed = t.elapsed();
        let result = match (result, bound) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, bound {b:?}")),
            (r, _) => r,
        };
        let limit = bound.map_or(String::new(), |b| format!(" <= {b:?}"));
        match result {
            Ok(detail) => println!("PASS {n:>2} {title}: {detail} ({elapsed:.2?}{limit})"),
            Err(why) => {
                failed += 1;
                println!("FAIL {n:>2} {title}: {why} ({elapsed:.2?}{limit})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
