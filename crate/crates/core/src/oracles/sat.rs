use num_bigint::BigUint;

use crate::error::Result;
use crate::instances::CnfFormula;

use super::Caps;

fn masks(formula: &CnfFormula, caps: &Caps) -> Result<Vec<(u64, u64)>> {
    caps.check("variables", formula.num_vars())?;
    Ok(formula.clause_masks().expect("cap keeps variables below 64"))
}

/// Number of assignments satisfying every clause.
pub fn count_satisfying(formula: &CnfFormula, caps: &Caps) -> Result<BigUint> {
    let clauses = masks(formula, caps)?;
    let mut count = 0u64;
    for a in 0..1u64 << formula.num_vars() {
        if clauses.iter().all(|&(p, n)| a & p != 0 || !a & n != 0) {
            count += 1;
        }
    }
    Ok(count.into())
}

/// Number of assignments under which every clause has both a true and a
/// false literal.
pub fn count_nae_assignments(formula: &CnfFormula, caps: &Caps) -> Result<BigUint> {
    let clauses = masks(formula, caps)?;
    let mut count = 0u64;
    for a in 0..1u64 << formula.num_vars() {
        if clauses
            .iter()
            .all(|&(p, n)| (a & p != 0 || !a & n != 0) && (!a & p != 0 || a & n != 0))
        {
            count += 1;
        }
    }
    Ok(count.into())
}

pub fn exists_nae_assignment(formula: &CnfFormula, caps: &Caps) -> Result<bool> {
    Ok(count_nae_assignments(formula, caps)? > BigUint::ZERO)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::Literal;

    fn cnf(n: usize, clauses: &[&[i64]]) -> CnfFormula {
        CnfFormula::new(
            n,
            clauses
                .iter()
                .map(|c| c.iter().map(|&l| Literal::from_dimacs(l).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn sat_counts() {
        let caps = Caps::default();
        assert_eq!(count_satisfying(&cnf(3, &[]), &caps).unwrap(), 8u32.into());
        assert_eq!(count_satisfying(&cnf(2, &[&[1], &[-1]]), &caps).unwrap(), 0u32.into());
        assert_eq!(count_satisfying(&cnf(3, &[&[1, 2, 3]]), &caps).unwrap(), 7u32.into());
        assert_eq!(count_satisfying(&cnf(2, &[&[]]), &caps).unwrap(), 0u32.into());
    }

    #[test]
    fn nae_counts() {
        let caps = Caps::default();
        assert_eq!(count_nae_assignments(&cnf(1, &[&[1]]), &caps).unwrap(), 0u32.into());
        assert_eq!(count_nae_assignments(&cnf(2, &[&[1, 2]]), &caps).unwrap(), 2u32.into());
        assert_eq!(count_nae_assignments(&cnf(2, &[]), &caps).unwrap(), 4u32.into());
        assert!(!exists_nae_assignment(&cnf(1, &[&[1]]), &caps).unwrap());
        // (x1 v -x2): NAE needs x1 != -x2, i.e. x1 == x2
        assert_eq!(count_nae_assignments(&cnf(2, &[&[1, -2]]), &caps).unwrap(), 2u32.into());
    }

    #[test]
    fn cap_is_enforced() {
        let f = CnfFormula::empty(25);
        assert!(count_satisfying(&f, &Caps::default()).is_err());
        assert!(count_nae_assignments(&f, &Caps::default()).is_err());
    }
}
