use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::instances::{Graph, SizeIndexedCounts};

use super::Caps;

fn adjacency(graph: &Graph, caps: &Caps) -> Result<Vec<u64>> {
    caps.check("vertex set", graph.num_vertices())?;
    Ok(graph.adjacency_masks().expect("cap keeps vertices below 64"))
}

/// Whether `mask` induces a connected subgraph. The empty set and
/// singletons count as connected.
pub fn is_connected_mask(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let mut reached = mask & mask.wrapping_neg();
    loop {
        let mut next = reached;
        let mut rest = reached;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= adj[v] & mask;
        }
        if next == reached {
            return reached == mask;
        }
        reached = next;
    }
}

/// Independent sets of any graph, by enumerating all vertex subsets.
pub fn count_independent_sets(graph: &Graph, caps: &Caps) -> Result<BigUint> {
    let adj = adjacency(graph, caps)?;
    let n = graph.num_vertices();
    let mut count = 0u64;
    for x in 0..1u64 << n {
        let mut rest = x;
        let mut ok = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & x != 0 {
                ok = false;
                break;
            }
        }
        count += ok as u64;
    }
    Ok(count.into())
}

/// Independent sets of a bipartite graph grouped by their trace on side A:
/// `Σ_{X ⊆ A} 2^{|B \ N(X)|}`.
pub fn count_bipartite_independent_sets_grouped(graph: &Graph, caps: &Caps) -> Result<BigUint> {
    let a = graph
        .bipartition()
        .ok_or_else(|| Error::param("graph carries no bipartition"))?;
    let adj = adjacency(graph, caps)?;
    let n = graph.num_vertices();
    let b_side = ((1u64 << n) - 1) & !((1u64 << a) - 1);
    let mut total = BigUint::ZERO;
    for x in 0..1u64 << a {
        let mut nbr = 0u64;
        let mut rest = x;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            nbr |= adj[v];
        }
        total += BigUint::one() << (b_side & !nbr).count_ones();
    }
    Ok(total)
}

/// Parity of the number of independent sets of a bipartite graph.
pub fn parity_bipartite_independent_sets(graph: &Graph, caps: &Caps) -> Result<bool> {
    Ok(count_bipartite_independent_sets_grouped(graph, caps)?.bit(0))
}

/// Vertex sets `X ⊇ T` inducing a connected subgraph, counted by `|X|`.
/// Without terminals, `T` is empty.
pub fn count_steiner_sets_by_size(graph: &Graph, caps: &Caps) -> Result<SizeIndexedCounts> {
    let adj = adjacency(graph, caps)?;
    let n = graph.num_vertices();
    let terminals = graph
        .terminals()
        .unwrap_or(&[])
        .iter()
        .fold(0u64, |acc, &v| acc | 1 << v);
    let free = ((1u64 << n) - 1) & !terminals;
    let mut dense = vec![0u64; n + 1];
    // enumerate subsets of `free`
    let mut sub = 0u64;
    loop {
        let x = terminals | sub;
        if is_connected_mask(&adj, x) {
            dense[x.count_ones() as usize] += 1;
        }
        if sub == free {
            break;
        }
        sub = (sub.wrapping_sub(free)) & free;
    }
    Ok(SizeIndexedCounts::from_dense(&dense))
}

/// Connected vertex covers counted by size.
pub fn count_cvc_by_size(graph: &Graph, caps: &Caps) -> Result<SizeIndexedCounts> {
    let adj = adjacency(graph, caps)?;
    let n = graph.num_vertices();
    let mut dense = vec![0u64; n + 1];
    for x in 0..1u64 << n {
        let outside = ((1u64 << n) - 1) & !x;
        let mut rest = outside;
        let mut covers = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & !x != 0 {
                covers = false;
                break;
            }
        }
        if covers && is_connected_mask(&adj, x) {
            dense[x.count_ones() as usize] += 1;
        }
    }
    Ok(SizeIndexedCounts::from_dense(&dense))
}
