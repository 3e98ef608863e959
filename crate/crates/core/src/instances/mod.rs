//! In-memory representations of the problem families and their text formats.

mod circuit;
mod cnf;
mod counts;
mod format;
mod graph;
pub mod random;
mod setsys;
mod subset_sum;

pub use circuit::{Gate, VspCircuit};
pub use cnf::{Clause, CnfFormula, Literal};
pub use counts::SizeIndexedCounts;
pub use format::{parse_instance, serialize_instance, Instance, InstanceFormat};
pub use graph::Graph;
pub use random::{random_instance, Family, RandomParams};
pub use setsys::SetSystem;
pub use subset_sum::SubsetSumInstance;
