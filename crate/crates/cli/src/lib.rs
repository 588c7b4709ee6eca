//! IO companion to the `ale-curves` core: wire formats, seeded
//! rank-stratified sampling, the floating-point cross-check oracle, a
//! content-addressed report cache, and the command implementations
//! behind the `ale-curves` binary.

pub mod cache;
pub mod cli;
pub mod oracle;
pub mod runner;
pub mod sample;
pub mod wire;
