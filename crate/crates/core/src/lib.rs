//! Reductions and exact reference solvers tying together CNF-Sat, Hitting
//! Set, Set Splitting, NAE-Sat, Set Cover, Steiner Tree, Connected Vertex
//! Cover, Set Partitioning and Subset Sum.
//!
//! Every reduction has a checkable contract (count, parity or decision
//! preservation) that the brute-force oracles in [`oracles`] verify on small
//! instances.

pub mod bits;
pub mod error;
pub mod growth;
pub mod instances;
pub mod oracles;
pub mod parity_math;
pub mod reductions;
pub mod verify;

pub use bits::ElemSet;
pub use error::{Error, Result};
pub use oracles::Caps;
pub use instances::{
    parse_instance, serialize_instance, CnfFormula, Gate, Graph, Instance, InstanceFormat, Literal,
    SetSystem, SizeIndexedCounts, SubsetSumInstance, VspCircuit,
};
