//! Criterion benchmarks for the enumerator live in `benches/`.

pub use index2_core;
