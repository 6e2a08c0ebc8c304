//! 3-CNF formulas and the framework `AF'_φ` built from them, in which `{ψ}`
//! is an unchallenged initial set exactly when φ is unsatisfiable.

use crate::error::{Error, Result};
use crate::framework::Framework;

/// Largest atom count [`sat_bruteforce`] accepts.
pub const SAT_BOUND: usize = 20;

pub const PHI: &str = "phi";
pub const PHI_TILDE: &str = "phi~";
pub const PSI: &str = "psi";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(atom: usize) -> Self {
        Literal { atom, positive: true }
    }

    pub fn neg(atom: usize) -> Self {
        Literal {
            atom,
            positive: false,
        }
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.atom] == self.positive
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf3 {
    atoms: Vec<String>,
    clauses: Vec<[Literal; 3]>,
}

impl Cnf3 {
    pub fn new(atoms: Vec<String>, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for a in &atoms {
            if a.is_empty() || !seen.insert(a.as_str()) {
                return Err(Error::InvalidFormula(format!("bad or duplicate atom name `{a}`")));
            }
        }
        for (i, c) in clauses.iter().enumerate() {
            if let Some(l) = c.iter().find(|l| l.atom >= atoms.len()) {
                return Err(Error::InvalidFormula(format!(
                    "clause {} uses atom {} but only {} atoms are declared",
                    i + 1,
                    l.atom + 1,
                    atoms.len()
                )));
            }
        }
        Ok(Cnf3 { atoms, clauses })
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn literal_name(&self, l: Literal) -> String {
        if l.positive {
            self.atoms[l.atom].clone()
        } else {
            format!("¬{}", self.atoms[l.atom])
        }
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.holds(assignment)))
    }
}

/// Builds `AF'_φ`. Arguments are `phi`, `phi~`, `psi`, `C1..Cn`, then each
/// atom followed by its negation.
pub fn cnf3_to_af(phi: &Cnf3) -> Framework {
    let n = phi.clauses.len();
    let mut names = vec![PHI.to_string(), PHI_TILDE.to_string(), PSI.to_string()];
    names.extend((1..=n).map(|i| format!("C{i}")));
    let lit_base = names.len();
    for a in &phi.atoms {
        names.push(a.clone());
        names.push(format!("¬{a}"));
    }
    let lit = |l: Literal| lit_base + 2 * l.atom + usize::from(!l.positive);
    let (p, pt, psi) = (0, 1, 2);

    let mut attacks = Vec::new();
    for (i, clause) in phi.clauses.iter().enumerate() {
        attacks.push((3 + i, p));
        attacks.extend(clause.iter().map(|&l| (lit(l), 3 + i)));
    }
    for a in 0..phi.atoms.len() {
        let (x, nx) = (lit(Literal::pos(a)), lit(Literal::neg(a)));
        attacks.extend([(x, nx), (nx, x), (pt, x), (pt, nx)]);
    }
    attacks.extend([(p, pt), (p, psi), (psi, p)]);
    Framework::new(names, attacks).expect("construction is well-formed")
}

pub fn sat_bruteforce(phi: &Cnf3) -> Result<bool> {
    let m = phi.atoms.len();
    if m > SAT_BOUND {
        return Err(Error::BoundExceeded {
            size: m,
            bound: SAT_BOUND,
        });
    }
    let mut assignment = vec![false; m];
    Ok((0u32..1 << m).any(|bits| {
        for (i, v) in assignment.iter_mut().enumerate() {
            *v = bits >> i & 1 == 1;
        }
        phi.evaluate(&assignment)
    }))
}

/// Parses DIMACS CNF with exactly three literals per clause. Atoms are named
/// `x1..xN`.
pub fn parse_dimacs(text: &str) -> Result<Cnf3> {
    let err = |line: usize, column: usize, message: String| Error::Parse {
        format: "dimacs",
        line,
        column,
        message,
    };
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["p", "cnf", a, c] if header.is_none() => {
                    let a = a
                        .parse()
                        .map_err(|_| err(ln, 7, format!("bad atom count `{a}`")))?;
                    let c = c
                        .parse()
                        .map_err(|_| err(ln, 1, format!("bad clause count `{c}`")))?;
                    header = Some((a, c));
                }
                _ => {
                    return Err(err(
                        ln,
                        1,
                        "expected a single `p cnf <atoms> <clauses>` header".into(),
                    ))
                }
            }
            continue;
        }
        let Some((atoms, _)) = header else {
            return Err(err(ln, 1, "clause before `p cnf` header".into()));
        };
        let mut column = 1;
        for tok in raw.split_whitespace() {
            column = raw[column - 1..].find(tok).map_or(column, |p| p + column);
            let v: i64 = tok
                .parse()
                .map_err(|_| err(ln, column, format!("expected an integer, found `{tok}`")))?;
            if v == 0 {
                let clause: [Literal; 3] = current.as_slice().try_into().map_err(|_| {
                    err(
                        ln,
                        column,
                        format!("clause has {} literals, expected 3", current.len()),
                    )
                })?;
                clauses.push(clause);
                current.clear();
            } else {
                let atom = v.unsigned_abs() as usize;
                if atom > atoms {
                    return Err(err(ln, column, format!("atom {atom} exceeds declared {atoms}")));
                }
                current.push(if v > 0 {
                    Literal::pos(atom - 1)
                } else {
                    Literal::neg(atom - 1)
                });
            }
            column += tok.len();
        }
    }
    let Some((atoms, count)) = header else {
        return Err(err(1, 1, "missing `p cnf` header".into()));
    };
    if !current.is_empty() {
        return Err(err(
            text.lines().count(),
            1,
            "last clause is not terminated by 0".into(),
        ));
    }
    if clauses.len() != count {
        return Err(Error::InvalidFormula(format!(
            "header declares {count} clauses, found {}",
            clauses.len()
        )));
    }
    Cnf3::new((1..=atoms).map(|i| format!("x{i}")).collect(), clauses)
}
