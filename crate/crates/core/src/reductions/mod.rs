//! Instance transformers.
//!
//! [`branch`] covers the chain CNF-Sat → Hitting Set → Set Splitting →
//! NAE-Sat → CNF-Sat together with the circuit encoding; [`dp`] covers the
//! Set Cover reductions and the parity pipeline.

pub mod branch;
pub mod dp;
