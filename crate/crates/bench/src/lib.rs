//! Criterion benchmarks for the exponential-time baselines; see `benches/`.

pub use setheq_core::growth::BenchTarget;
