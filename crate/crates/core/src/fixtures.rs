//! The worked example frameworks used throughout the tests and docs.

use crate::framework::Framework;
use crate::reductions::{Cnf3, Literal};

fn build(labels: &[&str], attacks: &[(&str, &str)]) -> Framework {
    Framework::from_labels(labels, attacks).expect("fixture is well-formed")
}

/// Ten arguments, fifteen attacks; four initial sets `{f},{h},{d,j},{e,i}`.
pub fn af0() -> Framework {
    build(
        &["a", "b", "c", "d", "e", "f", "g", "h", "i", "j"],
        &[
            ("a", "a"),
            ("f", "g"),
            ("g", "f"),
            ("a", "f"),
            ("f", "a"),
            ("g", "b"),
            ("c", "b"),
            ("h", "g"),
            ("d", "c"),
            ("i", "g"),
            ("i", "j"),
            ("j", "e"),
            ("e", "d"),
            ("d", "i"),
            ("i", "c"),
        ],
    )
}

/// A four-cycle `a→b→c→d→a` with `b↔e`.
pub fn af1() -> Framework {
    build(
        &["a", "b", "c", "d", "e"],
        &[
            ("a", "b"),
            ("b", "c"),
            ("c", "d"),
            ("d", "a"),
            ("b", "e"),
            ("e", "b"),
        ],
    )
}

/// Ideal extension `{b}`.
pub fn af2() -> Framework {
    build(
        &["a", "b", "c", "d", "e", "f"],
        &[
            ("a", "b"),
            ("b", "a"),
            ("b", "c"),
            ("a", "a"),
            ("e", "f"),
            ("f", "e"),
            ("c", "d"),
            ("d", "e"),
            ("e", "d"),
            ("f", "f"),
        ],
    )
}

/// Same classified initial sets as [`af2`], ideal extension `{b,e}`.
pub fn af3() -> Framework {
    build(
        &["a", "b", "c", "d", "e", "f"],
        &[
            ("a", "b"),
            ("b", "a"),
            ("b", "c"),
            ("a", "a"),
            ("e", "f"),
            ("f", "e"),
            ("c", "d"),
            ("e", "d"),
            ("f", "f"),
        ],
    )
}

pub fn af4() -> Framework {
    build(&["a", "b", "c"], &[("a", "b"), ("b", "a"), ("b", "c")])
}

pub fn af5() -> Framework {
    build(
        &["a", "b", "c"],
        &[("a", "b"), ("b", "a"), ("b", "c"), ("c", "c")],
    )
}

pub fn af6() -> Framework {
    build(&["a", "b", "c"], &[("a", "b"), ("b", "a"), ("c", "c")])
}

/// Four preferred extensions, empty ideal extension, and `{d}`, `{f}` both
/// unchallenged.
pub fn af7() -> Framework {
    build(
        &["a", "b", "c", "d", "e", "f"],
        &[
            ("a", "b"),
            ("b", "a"),
            ("b", "c"),
            ("a", "c"),
            ("c", "e"),
            ("e", "d"),
            ("d", "e"),
            ("e", "f"),
            ("f", "e"),
        ],
    )
}

/// `{{a,¬b,c},{¬a,¬b,c},{¬a,b,¬c}}`, satisfiable (all-false is a model).
pub fn phi_fig8() -> Cnf3 {
    let (a, b, c) = (0, 1, 2);
    Cnf3::new(
        vec!["a".into(), "b".into(), "c".into()],
        vec![
            [Literal::pos(a), Literal::neg(b), Literal::pos(c)],
            [Literal::neg(a), Literal::neg(b), Literal::pos(c)],
            [Literal::neg(a), Literal::pos(b), Literal::neg(c)],
        ],
    )
    .expect("fixture is well-formed")
}

/// All named fixtures, for round-trip and corpus tests.
pub fn all() -> Vec<(&'static str, Framework)> {
    vec![
        ("af0", af0()),
        ("af1", af1()),
        ("af2", af2()),
        ("af3", af3()),
        ("af4", af4()),
        ("af5", af5()),
        ("af6", af6()),
        ("af7", af7()),
    ]
}
