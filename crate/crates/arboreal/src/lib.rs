//! Exact-arithmetic toolkit for the arithmetic dynamics of quadratic maps.
//!
//! The crate decides Galois maximality of iterates of `(x - gamma)^2 + c`
//! over Q via square-class linear algebra, constructs the hyperelliptic
//! obstruction curves attached to those iterates, runs bounded integral and
//! rational point searches with modular presieving, and verifies the
//! finite-field evidence behind the rational-point determinations: Jacobian
//! orders through zeta functions, kernel memberships through Cantor
//! arithmetic on Mumford divisors, and residue-class point bounds from
//! reduced differentials.
//!
//! Everything is exact: integers and rationals are arbitrary precision and
//! no floating point enters any verdict.
//!
//! Data-parallel inner loops (point searches, finite-field counting,
//! parameter sweeps) run on rayon when the default `parallel` feature is
//! enabled and fall back to equivalent sequential code when it is not.

pub mod arith;
pub mod campaigns;
pub mod catalog;
pub mod curves;
pub mod dynamics;
pub mod ffhyper;
pub mod modp;
pub mod par;
pub mod pointsearch;
pub mod squareclass;

pub use arith::{BigInt, Rat};
