//! ASPARTIX format: `arg(x).` and `att(x,y).` facts in any order, `%`
//! comments to end of line.

use std::collections::HashMap;

use super::{parse_error, sorted_attacks};
use crate::error::{Error, Result};
use crate::framework::Framework;

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            column: 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_blank(&mut self) {
        while let Some(c) = self.peek() {
            if c == '%' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        parse_error("apx", self.line, self.column, message)
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_blank();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    fn word(&mut self) -> String {
        let mut w = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_alphanumeric() || *c == '_') {
            w.push(c);
            self.bump();
        }
        w
    }

    /// An argument name up to `,` or `)`, with surrounding blanks trimmed.
    fn name(&mut self) -> Result<(String, usize, usize)> {
        self.skip_blank();
        let (line, column) = (self.line, self.column);
        let mut w = String::new();
        while let Some(c) = self.peek().filter(|c| !matches!(c, ',' | '(' | ')' | '%' | '\n')) {
            w.push(c);
            self.bump();
        }
        let w = w.trim_end().to_string();
        if w.is_empty() {
            return Err(parse_error("apx", line, column, "expected an argument name"));
        }
        Ok((w, line, column))
    }
}

pub fn parse(text: &str) -> Result<Framework> {
    let mut cur = Cursor::new(text);
    let mut names: Vec<String> = Vec::new();
    let mut index = HashMap::new();
    let mut pending = Vec::new();
    loop {
        cur.skip_blank();
        if cur.peek().is_none() {
            break;
        }
        let (line, column) = (cur.line, cur.column);
        let kind = cur.word();
        match kind.as_str() {
            "arg" => {
                cur.expect('(')?;
                let (name, l, c) = cur.name()?;
                cur.expect(')')?;
                if index.insert(name.clone(), names.len()).is_some() {
                    return Err(parse_error("apx", l, c, format!("duplicate argument `{name}`")));
                }
                names.push(name);
            }
            "att" => {
                cur.expect('(')?;
                let a = cur.name()?;
                cur.expect(',')?;
                let b = cur.name()?;
                cur.expect(')')?;
                pending.push((a, b));
            }
            _ => {
                return Err(parse_error(
                    "apx",
                    line,
                    column,
                    "expected `arg(...)` or `att(...)`",
                ))
            }
        }
        cur.expect('.')?;
    }
    let mut attacks = Vec::with_capacity(pending.len());
    for ((a, al, ac), (b, bl, bc)) in pending {
        let ia = *index
            .get(&a)
            .ok_or_else(|| parse_error("apx", al, ac, format!("undeclared argument `{a}`")))?;
        let ib = *index
            .get(&b)
            .ok_or_else(|| parse_error("apx", bl, bc, format!("undeclared argument `{b}`")))?;
        attacks.push((ia, ib));
    }
    Framework::new(names, attacks)
}

pub fn emit(f: &Framework) -> Result<String> {
    let mut out = String::new();
    for name in f.names() {
        let bad = name.is_empty()
            || name.trim() != name
            || name.chars().any(|c| matches!(c, ',' | '(' | ')' | '%' | '\n'));
        if bad {
            return Err(Error::InvalidFramework(format!(
                "label `{name}` cannot be written as APX"
            )));
        }
        out.push_str(&format!("arg({name}).\n"));
    }
    for (a, b) in sorted_attacks(f) {
        out.push_str(&format!("att({a},{b}).\n"));
    }
    Ok(out)
}
