//! Benchmark-only crate; see `benches/procedures.rs`.
