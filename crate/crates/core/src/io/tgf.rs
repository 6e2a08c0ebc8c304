//! Trivial Graph Format: one argument label per line, a `#` line, then one
//! `attacker target` pair per line.

use super::{parse_error, sorted_attacks};
use crate::error::{Error, Result};
use crate::framework::Framework;

pub fn parse(text: &str) -> Result<Framework> {
    let err = |line, column, msg: String| parse_error("tgf", line, column, msg);
    let mut names: Vec<String> = Vec::new();
    let mut index = std::collections::HashMap::new();
    let mut attacks = Vec::new();
    let mut in_attacks = false;

    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let tokens = tokens(raw);
        match tokens.as_slice() {
            [] => {}
            [(_, "#")] if !in_attacks => in_attacks = true,
            [(col, label)] if !in_attacks => {
                if index.insert(label.to_string(), names.len()).is_some() {
                    return Err(err(ln, *col, format!("duplicate argument `{label}`")));
                }
                names.push(label.to_string());
            }
            [(col, _), ..] if !in_attacks => {
                return Err(err(
                    ln,
                    *col,
                    "expected one argument label per line before `#`".into(),
                ));
            }
            [(c1, a), (c2, b)] => {
                let a = *index
                    .get(*a)
                    .ok_or_else(|| err(ln, *c1, format!("unknown argument `{a}`")))?;
                let b = *index
                    .get(*b)
                    .ok_or_else(|| err(ln, *c2, format!("unknown argument `{b}`")))?;
                attacks.push((a, b));
            }
            [(col, _), ..] => return Err(err(ln, *col, "expected `attacker target`".into())),
        }
    }
    if !in_attacks && !names.is_empty() {
        return Err(err(text.lines().count(), 1, "missing `#` separator".into()));
    }
    Framework::new(names, attacks)
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, (byte, ch)) in line.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((pos + 1, byte)),
            (true, Some((col, from))) => {
                out.push((col, &line[from..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((col, from)) = start {
        out.push((col, &line[from..]));
    }
    out
}

pub fn emit(f: &Framework) -> Result<String> {
    let mut out = String::new();
    for name in f.names() {
        if name.is_empty() || name == "#" || name.chars().any(char::is_whitespace) {
            return Err(Error::InvalidFramework(format!(
                "label `{name}` cannot be written as TGF"
            )));
        }
        out.push_str(name);
        out.push('\n');
    }
    out.push_str("#\n");
    for (a, b) in sorted_attacks(f) {
        out.push_str(&format!("{a} {b}\n"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn parse_err(text: &str) -> (usize, usize) {
        match parse(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn minimal_file() {
        let f = parse("a\nb\n#\na b\n").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.attack_pairs(), vec![(0, 1)]);
    }

    #[test]
    fn af0_counts() {
        let f = parse(&emit(&fixtures::af0()).unwrap()).unwrap();
        assert_eq!((f.len(), f.attack_count()), (10, 15));
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_err("a\nb\na b\n#\n"), (3, 1));
        assert_eq!(parse_err("a\nb\n"), (2, 1));
        assert_eq!(parse_err("a\n#\na  zz\n"), (3, 4));
        assert_eq!(parse_err("a\na\n#\n"), (2, 1));
        assert_eq!(parse_err("a\n#\na a a\n"), (3, 1));
    }

    #[test]
    fn empty_and_unicode() {
        assert!(parse("").unwrap().is_empty());
        assert!(parse("#\n").unwrap().is_empty());
        let f = parse("¬a\nb\n#\nb ¬a\n").unwrap();
        assert!(f.attacks(1, 0));
        assert!(parse("¬a\n#\n¬a x\n").is_err());
    }

    #[test]
    fn unwritable_labels() {
        let f = Framework::new(["a b"], []).unwrap();
        assert!(emit(&f).is_err());
    }
}
