//! Benchmark crate; see benches/ncg.rs.
