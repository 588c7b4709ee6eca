//! Exact counting of rational curves in the twistor families of ALE
//! 4-manifolds, together with minimal-rank-sum decomposition solvers for
//! ADE root systems.
//!
//! Everything here is computed over ℚ and ℚ(i) with arbitrary-precision
//! rationals; there is no floating point on any counting path. The crate
//! is `no_std` (with `alloc`); IO, file formats and the CLI live in the
//! companion `ale-curves-cli` crate.
//!
//! Module map:
//!
//! * [`exact`] — rationals, Gaussian rationals, exact linear algebra and
//!   binary-form polynomial algebra (gcd, squarefree part, discriminant).
//! * [`roots`] — ADE root systems built by reflection closure from the
//!   Cartan matrix, root evaluation, span-closed subsystems.
//! * [`count`] — the curve-counting engine: period quadratics, shared and
//!   private incidence points, tangential/transversal classification, the
//!   rank-stratified bound checks, and the semi-continuity probe.
//! * [`decomp`] — plane-induced decompositions, type-1/type-2 validity,
//!   and exact branch-and-bound solvers for the minimal rank sums f1/f2.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod count;
pub mod decomp;
pub mod error;
pub mod exact;
pub mod roots;

pub use error::Error;
pub type Result<T> = core::result::Result<T, Error>;
