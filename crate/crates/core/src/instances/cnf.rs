use std::fmt;

use crate::error::{Error, Result};

/// A variable (0-based) together with a sign.
///
/// Literals order by variable first, positive before negative.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    var: usize,
    negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            negated: false,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    pub fn new(var: usize, negated: bool) -> Self {
        Literal { var, negated }
    }

    pub fn var(self) -> usize {
        self.var
    }

    pub fn is_negated(self) -> bool {
        self.negated
    }

    pub fn negate(self) -> Self {
        Literal {
            var: self.var,
            negated: !self.negated,
        }
    }

    /// DIMACS encoding: 1-based, negative for a negated literal.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.negated {
            -v
        } else {
            v
        }
    }

    pub fn from_dimacs(lit: i64) -> Option<Self> {
        if lit == 0 {
            return None;
        }
        Some(Literal {
            var: (lit.unsigned_abs() - 1) as usize,
            negated: lit < 0,
        })
    }

    pub fn eval(self, value: bool) -> bool {
        value != self.negated
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

pub type Clause = Vec<Literal>;

/// A CNF formula over variables `0..num_vars`.
///
/// Construction canonicalizes: literals inside a clause are sorted and the
/// clause list is sorted lexicographically. Duplicate clauses are kept.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Self> {
        let mut clauses = clauses;
        for (ci, clause) in clauses.iter_mut().enumerate() {
            clause.sort();
            for lit in clause.iter() {
                if lit.var >= num_vars {
                    return Err(Error::param(format!(
                        "clause {ci} mentions variable {} but the formula has {num_vars}",
                        lit.var + 1
                    )));
                }
            }
            if clause.windows(2).any(|w| w[0].var == w[1].var) {
                return Err(Error::param(format!(
                    "clause {ci} contains a variable twice"
                )));
            }
        }
        clauses.sort();
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn empty(num_vars: usize) -> Self {
        CnfFormula {
            num_vars,
            clauses: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Maximum clause size (0 for a formula without clauses).
    pub fn width(&self) -> usize {
        self.clauses.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Every clause contains only positive literals.
    pub fn is_monotone(&self) -> bool {
        self.clauses.iter().flatten().all(|l| !l.negated)
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.eval(assignment[l.var])))
    }

    /// Per clause, the (positive, negative) variable masks. Only available
    /// when every variable index fits in a word.
    pub fn clause_masks(&self) -> Option<Vec<(u64, u64)>> {
        if self.num_vars > 64 {
            return None;
        }
        Some(
            self.clauses
                .iter()
                .map(|c| {
                    c.iter().fold((0, 0), |(p, n), l| {
                        if l.negated {
                            (p, n | 1 << l.var)
                        } else {
                            (p | 1 << l.var, n)
                        }
                    })
                })
                .collect(),
        )
    }

    /// Parse DIMACS CNF. Clauses may span lines; `c` lines are comments.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current: Clause = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('p') {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate header"));
                }
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 4 || parts[0] != "p" || parts[1] != "cnf" {
                    return Err(Error::parse(line_no, "expected `p cnf <vars> <clauses>`"));
                }
                let n = parse_count(parts[2], line_no)?;
                let m = parse_count(parts[3], line_no)?;
                header = Some((n, m));
                continue;
            }
            let Some((n, _)) = header else {
                return Err(Error::parse(line_no, "clause before `p cnf` header"));
            };
            for tok in line.split_whitespace() {
                let lit: i64 = tok
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad literal `{tok}`")))?;
                match Literal::from_dimacs(lit) {
                    None => {
                        let mut clause = std::mem::take(&mut current);
                        clause.sort();
                        if clause.windows(2).any(|w| w[0].var == w[1].var) {
                            return Err(Error::parse(line_no, "clause contains a variable twice"));
                        }
                        clauses.push(clause);
                    }
                    Some(l) if l.var >= n => {
                        return Err(Error::parse(
                            line_no,
                            format!("literal {lit} out of range for {n} variables"),
                        ));
                    }
                    Some(l) => current.push(l),
                }
            }
        }
        let Some((n, m)) = header else {
            return Err(Error::parse(last_line.max(1), "missing `p cnf` header"));
        };
        if !current.is_empty() {
            return Err(Error::parse(last_line, "unterminated clause (missing 0)"));
        }
        if clauses.len() != m {
            return Err(Error::parse(
                last_line,
                format!("header declares {m} clauses, found {}", clauses.len()),
            ));
        }
        CnfFormula::new(n, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for l in clause {
                out.push_str(&l.to_dimacs().to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

pub(crate) fn parse_count(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a nonnegative integer, got `{tok}`")))
}
