//! Numerical machinery for Orlicz and Morrey-type function spaces.
//!
//! The crate is organized around six modules:
//!
//! - [`young`]: Young functions (evaluation, generalized inverse, convex
//!   conjugate, growth diagnostics, and derived constructions).
//! - [`field`]: functions sampled on uniform 1D/2D grids, ball geometry and
//!   the shared quadrature primitives.
//! - [`norms`]: Luxemburg, weak Orlicz, Orlicz-Morrey and BMO functionals.
//! - [`operators`]: Riesz potential, fractional maximal operator, the
//!   multiplication commutator, and weighted Hardy operators.
//! - [`conditions`]: checkers for the integral sufficiency conditions that
//!   govern boundedness between Morrey-type spaces.
//! - [`harness`]: experiment specs, runners, reports, and the pieces behind
//!   the `okit` command-line tool.
//!
//! Everything is deterministic: fixed seeds, fixed iteration orders, and
//! reductions that do not depend on thread count. `RAYON_NUM_THREADS`
//! controls parallelism.

pub mod conditions;
pub mod field;
pub mod harness;
pub mod norms;
pub mod operators;
pub mod young;
