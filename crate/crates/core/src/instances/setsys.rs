use crate::bits::ElemSet;
use crate::error::{Error, Result};

use super::cnf::parse_count;

/// A family of subsets of the universe `0..universe_size`.
///
/// Sets are kept sorted by numeric mask value. Unless the system is flagged
/// as a multiset, duplicates are rejected at construction; a multiset stores
/// each copy as its own entry.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetSystem {
    universe: usize,
    sets: Vec<ElemSet>,
    multiset: bool,
    size_bound: Option<usize>,
}

impl SetSystem {
    pub fn new(universe: usize, sets: Vec<ElemSet>) -> Result<Self> {
        Self::build(universe, sets, false)
    }

    pub fn new_multiset(universe: usize, sets: Vec<ElemSet>) -> Result<Self> {
        Self::build(universe, sets, true)
    }

    /// Build from element lists, e.g. `from_lists(3, &[&[0, 1], &[2]])`.
    pub fn from_lists(universe: usize, sets: &[&[usize]]) -> Result<Self> {
        Self::new(
            universe,
            sets.iter().map(|s| s.iter().copied().collect()).collect(),
        )
    }

    /// Build from word masks (universe at most 64).
    pub fn from_masks(universe: usize, masks: &[u64]) -> Result<Self> {
        Self::new(universe, masks.iter().map(|&m| ElemSet::from_u64(m)).collect())
    }

    /// Build a set system, silently merging duplicate sets.
    pub fn dedup(universe: usize, mut sets: Vec<ElemSet>) -> Result<Self> {
        sets.sort();
        sets.dedup();
        Self::new(universe, sets)
    }

    fn build(universe: usize, mut sets: Vec<ElemSet>, multiset: bool) -> Result<Self> {
        for s in &sets {
            if let Some(e) = s.max_element() {
                if e >= universe {
                    return Err(Error::param(format!(
                        "element {e} outside universe of size {universe}"
                    )));
                }
            }
        }
        sets.sort();
        if !multiset && sets.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::param("duplicate set in a non-multiset system"));
        }
        Ok(SetSystem {
            universe,
            sets,
            multiset,
            size_bound: None,
        })
    }

    /// Attach a declared bound on set sizes; it must hold.
    pub fn with_size_bound(mut self, k: usize) -> Result<Self> {
        if self.max_set_size() > k {
            return Err(Error::param(format!(
                "declared size bound {k} is below the largest set size {}",
                self.max_set_size()
            )));
        }
        self.size_bound = Some(k);
        Ok(self)
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[ElemSet] {
        &self.sets
    }

    pub fn num_sets(&self) -> usize {
        self.sets.len()
    }

    pub fn is_multiset(&self) -> bool {
        self.multiset
    }

    pub fn size_bound(&self) -> Option<usize> {
        self.size_bound
    }

    pub fn max_set_size(&self) -> usize {
        self.sets.iter().map(ElemSet::len).max().unwrap_or(0)
    }

    pub fn universe(&self) -> ElemSet {
        ElemSet::full(self.universe)
    }

    /// Word masks of all sets, when the universe fits in a word.
    pub fn masks(&self) -> Option<Vec<u64>> {
        if self.universe > 64 {
            return None;
        }
        self.sets.iter().map(ElemSet::as_u64).collect()
    }

    /// Elements that belong to no set.
    pub fn uncovered_elements(&self) -> Vec<usize> {
        let mut all = ElemSet::new();
        for s in &self.sets {
            all.union_with(s);
        }
        (0..self.universe).filter(|&e| !all.contains(e)).collect()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize, bool)> = None;
        let mut bound = None;
        let mut sets = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.starts_with('c') {
                continue;
            }
            let Some((n, m, _)) = header else {
                if line.is_empty() {
                    continue;
                }
                let parts: Vec<&str> = line.split_whitespace().collect();
                let multiset = match parts.as_slice() {
                    ["p", "setsys", _, _] => false,
                    ["p", "setsys", _, _, "multiset"] => true,
                    _ => {
                        return Err(Error::parse(
                            line_no,
                            "expected `p setsys <n> <m> [multiset]`",
                        ))
                    }
                };
                header = Some((
                    parse_count(parts[2], line_no)?,
                    parse_count(parts[3], line_no)?,
                    multiset,
                ));
                continue;
            };
            if let Some(rest) = line.strip_prefix("size-bound") {
                let k = parse_count(rest.trim(), line_no)?;
                bound = Some((k, line_no));
                continue;
            }
            if sets.len() == m {
                if line.is_empty() {
                    continue;
                }
                return Err(Error::parse(line_no, format!("more than {m} sets")));
            }
            let mut set = ElemSet::new();
            for tok in line.split_whitespace() {
                let e = parse_count(tok, line_no)?;
                if e >= n {
                    return Err(Error::parse(
                        line_no,
                        format!("element {e} outside universe of size {n}"),
                    ));
                }
                if set.contains(e) {
                    return Err(Error::parse(line_no, format!("element {e} repeated")));
                }
                set.insert(e);
            }
            if header.is_some_and(|h| !h.2) && sets.contains(&set) {
                return Err(Error::parse(line_no, "duplicate set in a non-multiset system"));
            }
            sets.push(set);
        }
        let Some((n, m, multiset)) = header else {
            return Err(Error::parse(last_line.max(1), "missing `p setsys` header"));
        };
        if sets.len() != m {
            return Err(Error::parse(
                last_line,
                format!("header declares {m} sets, found {}", sets.len()),
            ));
        }
        let system = Self::build(n, sets, multiset)?;
        match bound {
            Some((k, line)) => system
                .with_size_bound(k)
                .map_err(|e| Error::parse(line, e.to_string())),
            None => Ok(system),
        }
    }

    /// Canonical text form. An empty set is written as an empty line.
    pub fn to_text(&self) -> String {
        let mut out = format!("p setsys {} {}", self.universe, self.sets.len());
        if self.multiset {
            out.push_str(" multiset");
        }
        out.push('\n');
        if let Some(k) = self.size_bound {
            out.push_str(&format!("size-bound {k}\n"));
        }
        for s in &self.sets {
            let line: Vec<String> = s.iter().map(|e| e.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}
