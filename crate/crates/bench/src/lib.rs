//! Criterion benchmarks comparing the two numerator pipelines on random
//! cones over sphere-shell point sets. Run with `cargo bench -p conefourier-bench`.
