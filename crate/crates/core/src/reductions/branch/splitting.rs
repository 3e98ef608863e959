use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::instances::{CnfFormula, Literal, SetSystem};

use super::block_code::subsets_of_size;
use super::hitting::HittingSetInstance;

/// One Set Splitting instance per budget composition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplittingCase {
    /// Budget `t_i` assigned to each universe block.
    pub composition: Vec<usize>,
    /// Universe `n_pad + 2`; the last two elements are the red and blue
    /// marker elements.
    pub system: SetSystem,
}

/// Hitting Set to Set Splitting. The source has a hitting set of size at
/// most `t` iff at least one returned system can be split.
///
/// The universe is padded with unused elements up to a multiple of `p`.
/// Compositions are listed in lexicographic order.
pub fn hitting_set_to_set_splitting(
    instance: &HittingSetInstance,
    p: usize,
) -> Result<Vec<SplittingCase>> {
    if p == 0 || p > 63 {
        return Err(Error::param(format!("block size {p} out of range 1..=63")));
    }
    let system = instance.system();
    let t = instance.target();
    let n_pad = system.universe_size().div_ceil(p) * p;
    let blocks = n_pad / p;
    let (red, blue) = (n_pad, n_pad + 1);

    let mut common: Vec<ElemSet> = vec![[red, blue].into_iter().collect()];
    for y in system.sets() {
        let mut s = y.clone();
        s.insert(blue);
        common.push(s);
    }

    let mut out = Vec::new();
    for composition in compositions(blocks, p, t) {
        let mut sets = common.clone();
        for (i, &ti) in composition.iter().enumerate() {
            if ti < p {
                sets.extend(subsets_of_size(p, ti + 1).map(|x| {
                    let mut s = ElemSet::from_u64(x).shifted(i * p);
                    s.insert(red);
                    s
                }));
            }
        }
        out.push(SplittingCase {
            composition,
            system: SetSystem::dedup(n_pad + 2, sets)?,
        });
    }
    Ok(out)
}

/// Vectors of `parts` entries in `0..=max` summing to `total`, lexicographic.
fn compositions(parts: usize, max: usize, total: usize) -> Vec<Vec<usize>> {
    fn rec(parts: usize, max: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == parts {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let remaining = parts - cur.len() - 1;
        for v in 0..=max.min(left) {
            if left - v > remaining * max {
                continue;
            }
            cur.push(v);
            rec(parts, max, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(parts, max, total, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// Set Splitting to NAE-Sat: one variable per element, one positive clause
/// per set. NAE assignments and splittings coincide.
pub fn set_splitting_to_nae_cnf(system: &SetSystem) -> Result<CnfFormula> {
    if system.sets().iter().any(ElemSet::is_empty) {
        return Err(Error::TriviallyNo("the family contains the empty set".into()));
    }
    let clauses = system
        .sets()
        .iter()
        .map(|s| s.iter().map(Literal::pos).collect())
        .collect();
    CnfFormula::new(system.universe_size(), clauses)
}

/// NAE-Sat to CNF-Sat: every clause together with its sign-flipped copy.
/// Satisfying assignments of the output are the NAE assignments of the input.
pub fn nae_to_cnf(formula: &CnfFormula) -> Result<CnfFormula> {
    let mut clauses = Vec::with_capacity(2 * formula.num_clauses());
    for c in formula.clauses() {
        clauses.push(c.clone());
        clauses.push(c.iter().map(|l| l.negate()).collect());
    }
    CnfFormula::new(formula.num_vars(), clauses)
}
