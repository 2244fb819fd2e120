//! Exact combinatorics of Fibonacci/Lucas tiling models.
//!
//! The crate pairs deterministic enumerators for strip, partition, barrier
//! and staircase tilings with exact closed forms (Lucas polynomials,
//! Lucasnomials, Gaussian binomials, q-Fibonacci numbers, q-Fibonomials),
//! and a registry that verifies the identities relating them by exact
//! polynomial equality. No floating point anywhere.

pub mod barrier;
pub mod graphs;
pub mod identities;
pub mod poly;
pub mod sequences;
pub mod staircase;
pub mod tilings;

pub use poly::{IntPoly2, NotDivisible, QPoly};
