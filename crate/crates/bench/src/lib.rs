//! Benchmark-only crate; see `benches/bounds.rs`.
