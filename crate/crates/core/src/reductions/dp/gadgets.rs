use crate::error::{Error, Result};
use crate::instances::{Graph, SetSystem};
use crate::parity_math::binom_parity_u64;

fn check_coverable(system: &SetSystem) -> Result<()> {
    if system.universe_size() == 0 {
        return Err(Error::param("the universe must be nonempty"));
    }
    if let Some(e) = system.uncovered_elements().first() {
        return Err(Error::TriviallyNo(format!("element {e} lies in no set")));
    }
    Ok(())
}

/// Incidence edges: set `i` is vertex `i`, element `e` is vertex `m + e`.
fn incidence_edges(system: &SetSystem) -> Vec<(usize, usize)> {
    let m = system.num_sets();
    system
        .sets()
        .iter()
        .enumerate()
        .flat_map(|(i, s)| s.iter().map(move |e| (i, m + e)))
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SteinerReduction {
    /// Terminals are the element vertices and the pendant `u`.
    pub graph: Graph,
    /// Covers with `i` sets correspond to Steiner vertex sets of size
    /// `i + offset`.
    pub offset: usize,
    /// Vertex budget matching the source target.
    pub target: usize,
}

/// Set Cover to Steiner Tree: the incidence graph plus a vertex `s` adjacent
/// to every set vertex and a pendant `u` on `s`.
///
/// Vertices: sets `0..m`, elements `m..m+n`, then `s`, then `u`.
pub fn set_cover_to_steiner(system: &SetSystem, t: usize) -> Result<SteinerReduction> {
    check_coverable(system)?;
    let (m, n) = (system.num_sets(), system.universe_size());
    let (s, u) = (m + n, m + n + 1);
    let mut edges = incidence_edges(system);
    edges.extend((0..m).map(|i| (i, s)));
    edges.push((s, u));
    let graph = Graph::new(m + n + 2, edges)?.with_terminals((m..m + n).chain([u]))?;
    Ok(SteinerReduction {
        graph,
        offset: n + 2,
        target: t + n + 2,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CvcReduction {
    pub graph: Graph,
    /// `t + |U| + 1`.
    pub target: usize,
}

/// Set Cover to Connected Vertex Cover: the incidence graph, a vertex `s`
/// adjacent to every set vertex, and a pendant on every element and on `s`.
///
/// Vertices: sets `0..m`, elements `m..m+n`, `s = m+n`, element pendants
/// `m+n+1..m+2n+1`, and the pendant of `s` last.
pub fn set_cover_to_cvc(system: &SetSystem, t: usize) -> Result<CvcReduction> {
    check_coverable(system)?;
    let (m, n) = (system.num_sets(), system.universe_size());
    let s = m + n;
    let mut edges = incidence_edges(system);
    edges.extend((0..m).map(|i| (i, s)));
    edges.extend((0..n).map(|e| (m + e, s + 1 + e)));
    edges.push((s, s + n + 1));
    Ok(CvcReduction {
        graph: Graph::new(m + 2 * n + 2, edges)?,
        target: t + n + 1,
    })
}

/// Recover cover-count parities `s_0..=s_{i_max}` from connected vertex
/// cover parities `c_j` (indexed by `j`), using
/// `c_j = Σ_i s_i·C(|U|+1, j-i-|U|-1)`.
pub fn cvc_parity_recover(c: &[bool], universe_size: usize, i_max: usize) -> Result<Vec<bool>> {
    let shift = universe_size + 1;
    if c.len() <= i_max + shift {
        return Err(Error::param(format!(
            "need connected-cover parities up to size {}, have {}",
            i_max + shift,
            c.len().saturating_sub(1)
        )));
    }
    let mut s = Vec::with_capacity(i_max + 1);
    for i in 0..=i_max {
        let mut bit = c[i + shift];
        for (ip, &known) in s.iter().enumerate() {
            bit ^= known && binom_parity_u64(shift as u64, (i - ip) as u64).unwrap_or(false);
        }
        s.push(bit);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::random::random_set_system;
    use crate::oracles::{count_cvc_by_size, count_set_covers_by_size, count_steiner_sets_by_size, Caps};
    use crate::parity_math::big_binom;
    use num_bigint::BigUint;

    fn steiner_identity(sys: &SetSystem) {
        let caps = Caps::default();
        let r = set_cover_to_steiner(sys, 0).unwrap();
        let covers = count_set_covers_by_size(sys, &caps).unwrap();
        let st = count_steiner_sets_by_size(&r.graph, &caps).unwrap();
        for i in 0..=sys.num_sets() {
            assert_eq!(covers.get(i), st.get(i + r.offset));
        }
        assert_eq!(st.total(), covers.total());
    }

    fn cvc_identity(sys: &SetSystem) {
        let caps = Caps::default();
        let n = sys.universe_size();
        let r = set_cover_to_cvc(sys, 0).unwrap();
        let covers = count_set_covers_by_size(sys, &caps).unwrap();
        let c = count_cvc_by_size(&r.graph, &caps).unwrap();
        let top = r.graph.num_vertices();
        for j in 0..=top {
            let mut expected = BigUint::ZERO;
            for i in 0..=sys.num_sets() {
                if let Some(rest) = j.checked_sub(i + n + 1) {
                    expected += covers.get(i) * big_binom((n + 1) as u64, rest as u64).unwrap();
                }
            }
            assert_eq!(c.get(j), expected, "j {j}");
        }
        let bits: Vec<bool> = (0..=top).map(|j| c.parity_at(j)).collect();
        let s = cvc_parity_recover(&bits, n, sys.num_sets()).unwrap();
        for (i, &b) in s.iter().enumerate() {
            assert_eq!(b, covers.parity_at(i));
        }
    }

    #[test]
    fn steiner_examples() {
        let one = SetSystem::from_lists(1, &[&[0]]).unwrap();
        let r = set_cover_to_steiner(&one, 1).unwrap();
        assert_eq!(r.graph.num_vertices(), 4);
        let st = count_steiner_sets_by_size(&r.graph, &Caps::default()).unwrap();
        assert_eq!(st.get(4), 1u32.into());
        steiner_identity(&one);
        steiner_identity(&SetSystem::from_lists(2, &[&[0], &[1], &[0, 1]]).unwrap());
        assert!(matches!(
            set_cover_to_steiner(&SetSystem::from_lists(1, &[]).unwrap(), 1),
            Err(Error::TriviallyNo(_))
        ));
        assert!(set_cover_to_steiner(&SetSystem::from_lists(0, &[]).unwrap(), 0).is_err());
    }

    #[test]
    fn cvc_examples() {
        let one = SetSystem::from_lists(1, &[&[0]]).unwrap();
        assert_eq!(set_cover_to_cvc(&one, 1).unwrap().target, 3);
        cvc_identity(&one);
        let three = SetSystem::from_lists(2, &[&[0], &[1], &[0, 1]]).unwrap();
        cvc_identity(&three);
        let r = set_cover_to_cvc(&three, 0).unwrap();
        let c = count_cvc_by_size(&r.graph, &Caps::default()).unwrap();
        let bits: Vec<bool> = (0..=r.graph.num_vertices()).map(|j| c.parity_at(j)).collect();
        assert_eq!(cvc_parity_recover(&bits, 2, 3).unwrap(), vec![false, true, true, true]);
        assert_eq!(cvc_parity_recover(&[false; 8], 2, 4).unwrap(), vec![false; 5]);
        assert!(cvc_parity_recover(&[false; 4], 2, 1).is_err());
    }

    #[test]
    fn random_identities() {
        for seed in 0..40 {
            let n = 1 + seed as usize % 5;
            let sys = random_set_system(n, 6.min((1 << n) - 1), 3, seed).unwrap();
            if !sys.uncovered_elements().is_empty() {
                continue;
            }
            steiner_identity(&sys);
            cvc_identity(&sys);
        }
    }
}
