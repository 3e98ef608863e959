use crate::error::Result;
use crate::instances::{Graph, SetSystem};
use crate::oracles::{
    count_hitting_sets_by_size, count_set_covers_by_size, parity_bipartite_independent_sets, Caps,
};

/// Bipartite incidence graph: set `i` is vertex `i`, element `e` is vertex
/// `m + e`, and the bipartition puts the sets on side A.
pub fn incidence_graph(system: &SetSystem) -> Result<Graph> {
    let m = system.num_sets();
    let edges = system
        .sets()
        .iter()
        .enumerate()
        .flat_map(|(i, s)| s.iter().map(move |e| (i, m + e)));
    Graph::new(m + system.universe_size(), edges)?.with_bipartition(m)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FlipParities {
    pub parity_hitting: bool,
    pub parity_covers: bool,
    pub parity_is: bool,
}

impl FlipParities {
    pub fn agree(&self) -> bool {
        self.parity_hitting == self.parity_covers && self.parity_covers == self.parity_is
    }
}

/// Parities of the hitting sets, the set covers and the independent sets of
/// the incidence graph. All three coincide.
pub fn flip_parities(system: &SetSystem, caps: &Caps) -> Result<FlipParities> {
    caps.check("incidence graph", system.num_sets() + system.universe_size())?;
    Ok(FlipParities {
        parity_hitting: count_hitting_sets_by_size(system, caps)?.parity(),
        parity_covers: count_set_covers_by_size(system, caps)?.parity(),
        parity_is: parity_bipartite_independent_sets(&incidence_graph(system)?, caps)?,
    })
}
