//! Criterion benchmarks for quivergrass; see `benches/`.
