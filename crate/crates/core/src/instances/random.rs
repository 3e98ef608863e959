//! Seeded generators for test corpora.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::ElemSet;
use crate::error::{Error, Result};

use super::{CnfFormula, Gate, Graph, Instance, Literal, SetSystem, SubsetSumInstance, VspCircuit};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Cnf,
    SetSys,
    Graph,
    BipartiteGraph,
    SubsetSum,
    Circuit,
}

/// Generator parameters. Their meaning per family:
///
/// * `Cnf`: `n` variables, `m` clauses of width `1..=k`.
/// * `SetSys`: universe `n`, `m` distinct nonempty sets of size `1..=k`.
/// * `Graph`: `n` vertices, edge probability `edge_prob`.
/// * `BipartiteGraph`: sides of size `n` and `m`, edge probability `edge_prob`.
/// * `SubsetSum`: `n` items of at most `k` bits; target drawn below their sum.
/// * `Circuit`: `n` inputs followed by `m` random gates, labeled by depth.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct RandomParams {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub seed: u64,
    pub edge_prob: f64,
}

impl RandomParams {
    pub fn new(n: usize, m: usize, k: usize, seed: u64) -> Self {
        RandomParams {
            n,
            m,
            k,
            seed,
            edge_prob: 0.5,
        }
    }
}

pub fn random_instance(family: Family, params: &RandomParams) -> Result<Instance> {
    let RandomParams { n, m, k, seed, edge_prob } = *params;
    Ok(match family {
        Family::Cnf => Instance::Cnf(random_cnf(n, m, k, seed)?),
        Family::SetSys => Instance::SetSystem(random_set_system(n, m, k, seed)?),
        Family::Graph => Instance::Graph(random_graph(n, edge_prob, seed)?),
        Family::BipartiteGraph => Instance::Graph(random_bipartite(n, m, edge_prob, seed)?),
        Family::SubsetSum => Instance::SubsetSum(random_subset_sum(n, k, seed)?),
        Family::Circuit => Instance::Circuit(random_circuit(n, m, seed)?),
    })
}

fn check_positive(n: usize, m: usize, k: usize) -> Result<()> {
    if n == 0 || m == 0 || k == 0 {
        return Err(Error::param("n, m and k must all be at least 1"));
    }
    Ok(())
}

/// `m` clauses with widths drawn from `1..=min(k, n)`.
pub fn random_cnf(n: usize, m: usize, k: usize, seed: u64) -> Result<CnfFormula> {
    check_positive(n, m, k)?;
    let k = k.min(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let clauses = (0..m)
        .map(|_| {
            let w = rng.random_range(1..=k);
            sample(&mut rng, n, w)
                .into_iter()
                .map(|v| Literal::new(v, rng.random_bool(0.5)))
                .collect()
        })
        .collect();
    CnfFormula::new(n, clauses)
}

/// `m` distinct sets with sizes drawn from `1..=min(k, n)`.
pub fn random_set_system(n: usize, m: usize, k: usize, seed: u64) -> Result<SetSystem> {
    check_positive(n, m, k)?;
    let k = k.min(n);
    let available: f64 = (1..=k).map(|s| binom_f64(n, s)).sum();
    if (m as f64) > available {
        return Err(Error::param(format!(
            "only {available} distinct sets of size at most {k} exist over {n} elements"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets = BTreeSet::new();
    while sets.len() < m {
        let w = rng.random_range(1..=k);
        let s: ElemSet = sample(&mut rng, n, w).into_iter().collect();
        sets.insert(s);
    }
    SetSystem::new(n, sets.into_iter().collect())
}

pub fn random_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    check_prob(edge_prob)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Sides `[0, a)` and `[a, a + b)`.
pub fn random_bipartite(a: usize, b: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    check_prob(edge_prob)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.random_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(a + b, edges)?.with_bipartition(a)
}

pub fn random_subset_sum(n: usize, bits: usize, seed: u64) -> Result<SubsetSumInstance> {
    if bits == 0 || bits > 63 {
        return Err(Error::param("item bit width must be in 1..=63"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let items: Vec<u64> = (0..n).map(|_| rng.random_range(1..=(u64::MAX >> (64 - bits)))).collect();
    let total: u128 = items.iter().map(|&a| a as u128).sum();
    let target = rng.random_range(0..=total);
    SubsetSumInstance::new(
        items.into_iter().map(BigUint::from).collect(),
        BigUint::from(target),
    )
}

/// `n` inputs, then `m` gates reading earlier gates; labels are longest-path
/// depths, which form a valid labeling.
pub fn random_circuit(n: usize, m: usize, seed: u64) -> Result<VspCircuit> {
    if n == 0 || m == 0 {
        return Err(Error::param("a random circuit needs inputs and gates"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gates = vec![Gate::Input; n];
    let mut depth = vec![0u64; n];
    for _ in 0..m {
        let len = gates.len();
        let x = rng.random_range(0..len);
        let y = rng.random_range(0..len);
        let g = match rng.random_range(0..3) {
            0 => Gate::Not(x),
            1 => Gate::And(x, y),
            _ => Gate::Or(x, y),
        };
        depth.push(1 + g.sources().map(|s| depth[s]).max().unwrap_or(0));
        gates.push(g);
    }
    let out = gates.len() - 1;
    VspCircuit::new(gates, out)?.with_labels(depth)
}

fn check_prob(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::param(format!("edge probability {p} outside [0, 1]")));
    }
    Ok(())
}

fn binom_f64(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_determinism() {
        let p = RandomParams::new(6, 8, 3, 1);
        assert_eq!(
            random_instance(Family::Cnf, &p).unwrap(),
            random_instance(Family::Cnf, &p).unwrap()
        );
        let other = RandomParams { seed: 2, ..p };
        assert_ne!(
            random_instance(Family::Cnf, &p).unwrap(),
            random_instance(Family::Cnf, &other).unwrap()
        );
    }

    #[test]
    fn bounds_are_respected() {
        let s = random_set_system(8, 16, 3, 7).unwrap();
        assert_eq!(s.num_sets(), 16);
        assert!(s.sets().iter().all(|x| (1..=3).contains(&x.len())));
        let f = random_cnf(6, 8, 3, 1).unwrap();
        assert!(f.width() <= 3 && f.num_clauses() == 8);
        let g = random_bipartite(4, 5, 0.5, 2).unwrap();
        assert!(g.edges().iter().all(|&(u, v)| u < 4 && v >= 4));
        assert_eq!(g.bipartition(), Some(4));
    }

    #[test]
    fn infeasible_parameters() {
        assert!(random_cnf(0, 3, 3, 0).is_err());
        assert!(random_cnf(2, 3, 3, 0).unwrap().width() <= 2);
        assert!(random_set_system(2, 4, 2, 0).is_err());
        assert!(random_set_system(0, 1, 1, 0).is_err());
        assert!(random_graph(3, 1.5, 0).is_err());
    }
}
