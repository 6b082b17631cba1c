//! Benchmarks for `chirality-core`; see `benches/algebra.rs`.
