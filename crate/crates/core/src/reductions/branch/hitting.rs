use std::collections::BTreeMap;

use itertools::Itertools;

use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::instances::{CnfFormula, Literal, SetSystem};

use super::block_code::{make_block_code, subsets_of_size, BlockCode};

/// Clause-gadget tuples allowed per clause before giving up.
const MAX_CLAUSE_TUPLES: usize = 1 << 20;

/// A set system together with a solution-size target.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HittingSetInstance {
    system: SetSystem,
    target: usize,
}

impl HittingSetInstance {
    pub fn new(system: SetSystem, target: usize) -> Result<Self> {
        if target > system.universe_size() {
            return Err(Error::param(format!(
                "target {target} exceeds universe size {}",
                system.universe_size()
            )));
        }
        Ok(HittingSetInstance { system, target })
    }

    pub fn system(&self) -> &SetSystem {
        &self.system
    }

    pub fn target(&self) -> usize {
        self.target
    }
}

/// Append fresh variables, each forced false by a unit clause, until the
/// variable count is a multiple of `p`. Returns the padded formula and the
/// number of variables added; the satisfying-assignment count is unchanged.
pub fn pad_to_multiple(formula: &CnfFormula, p: usize) -> Result<(CnfFormula, usize)> {
    if p == 0 {
        return Err(Error::param("block size must be positive"));
    }
    let n = formula.num_vars();
    let pad = (p - n % p) % p;
    let mut clauses = formula.clauses().to_vec();
    clauses.extend((n..n + pad).map(|v| vec![Literal::neg(v)]));
    Ok((CnfFormula::new(n + pad, clauses)?, pad))
}

struct Blocks {
    code: BlockCode,
    count: usize,
}

impl Blocks {
    fn new(formula: &CnfFormula, p: usize) -> Result<Self> {
        let code = make_block_code(p)?;
        let n = formula.num_vars();
        if !n.is_multiple_of(p) {
            return Err(Error::param(format!(
                "block size {p} does not divide the variable count {n}"
            )));
        }
        Ok(Blocks { code, count: n / p })
    }

    fn universe(&self) -> usize {
        self.code.p_prime() * self.count
    }

    fn place(&self, block: usize, local: u64) -> ElemSet {
        ElemSet::from_u64(local).shifted(block * self.code.p_prime())
    }

    /// Steps 5 to 7 of the construction: block constraints and clause gadgets.
    fn base_sets(&self, formula: &CnfFormula) -> Result<Vec<ElemSet>> {
        let code = &self.code;
        let (pp, h) = (code.p_prime(), code.image_size());
        let mut sets = Vec::new();
        for i in 0..self.count {
            sets.extend(subsets_of_size(pp, h).map(|x| self.place(i, x)));
            sets.extend(
                subsets_of_size(pp, pp - h)
                    .filter(|&x| !code.is_image(code.block_mask() & !x))
                    .map(|x| self.place(i, x)),
            );
        }
        for clause in formula.clauses() {
            sets.extend(self.clause_sets(clause)?);
        }
        Ok(sets)
    }

    fn clause_sets(&self, clause: &[Literal]) -> Result<Vec<ElemSet>> {
        let code = &self.code;
        let p = code.p();
        // block -> (positive, negative) local masks
        let mut touched: BTreeMap<usize, (u64, u64)> = BTreeMap::new();
        for lit in clause {
            let entry = touched.entry(lit.var() / p).or_default();
            let bit = 1u64 << (lit.var() % p);
            if lit.is_negated() {
                entry.1 |= bit;
            } else {
                entry.0 |= bit;
            }
        }
        if touched.is_empty() {
            return Ok(vec![ElemSet::new()]);
        }
        let choices: Vec<Vec<ElemSet>> = touched
            .iter()
            .map(|(&i, &(pos, neg))| {
                (0..1u64 << p)
                    .filter(|&a| a & pos == 0 && a & neg == neg)
                    .map(|a| self.place(i, code.block_mask() & !code.encode(a)))
                    .collect()
            })
            .collect();
        let tuples = choices
            .iter()
            .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
            .filter(|&t| t <= MAX_CLAUSE_TUPLES)
            .ok_or(Error::Capacity {
                what: "clause gadget",
                size: usize::MAX,
                cap: MAX_CLAUSE_TUPLES,
            })?;
        let mut out = Vec::with_capacity(tuples);
        for tuple in choices.iter().multi_cartesian_product() {
            let mut union = ElemSet::new();
            for s in tuple {
                union.union_with(s);
            }
            out.push(union);
        }
        Ok(out)
    }
}

/// CNF-Sat to Hitting Set. Satisfying assignments of `formula` correspond
/// one-to-one with hitting sets of size exactly the returned target.
///
/// Requires `p` odd, `p ≥ 3` and `p | n`; see [`pad_to_multiple`].
pub fn cnf_to_hitting_set(formula: &CnfFormula, p: usize) -> Result<HittingSetInstance> {
    let blocks = Blocks::new(formula, p)?;
    let system = SetSystem::dedup(blocks.universe(), blocks.base_sets(formula)?)?;
    let target = blocks.code.image_size() * blocks.count;
    HittingSetInstance::new(system, target)
}

/// Parity variant: the total number of hitting sets of the output, of any
/// size, has the parity of the satisfying-assignment count. One extra
/// element per block is appended after the block elements.
pub fn cnf_to_parity_hitting_set(formula: &CnfFormula, p: usize) -> Result<SetSystem> {
    let blocks = Blocks::new(formula, p)?;
    let base = blocks.universe();
    let mut sets = blocks.base_sets(formula)?;
    let (pp, h) = (blocks.code.p_prime(), blocks.code.image_size());
    for i in 0..blocks.count {
        for x in subsets_of_size(pp, pp - h) {
            let mut s = blocks.place(i, x);
            s.insert(base + i);
            sets.push(s);
        }
    }
    SetSystem::dedup(base + blocks.count, sets)
}

/// One variable per element, one positive clause per set. Satisfying
/// assignments are exactly the hitting sets; an empty set becomes an empty
/// clause.
pub fn hitting_set_to_monotone_cnf(system: &SetSystem) -> Result<CnfFormula> {
    let clauses = system
        .sets()
        .iter()
        .map(|s| s.iter().map(Literal::pos).collect())
        .collect();
    CnfFormula::new(system.universe_size(), clauses)
}
