//! Criterion benchmarks for the classification, construction, verification
//! and Cremona stages. Run with `cargo bench -p cuspidal-bench`.
