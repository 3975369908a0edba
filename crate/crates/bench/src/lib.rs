//! Benchmark harness crate; see `benches/engine.rs`.
