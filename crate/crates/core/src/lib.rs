//! Exact smoothability obstructions for presented closed oriented 4-manifolds.
//!
//! The crate decides, from finite combinatorial data, whether a presented
//! 4-manifold violates known constraints on smooth structures, and produces
//! auditable certificates when it does. It is organized as:
//!
//! - [`lattice`] — arbitrary-precision arithmetic and invariants for integral
//!   symmetric bilinear forms given by Gram matrices.
//! - [`charvec`] — characteristic-vector cosets of unimodular forms and exact
//!   minimization of `|w^2|` over the coset (the Elkies standardness test).
//! - [`manifold`] — a catalog of building-block 4-manifolds, connected-sum
//!   calculus, and twisted (local-coefficient) Betti-number bookkeeping.
//! - [`obstruct`] — the obstruction gates (Rohlin, 10/8, twisted 10/8,
//!   definite standardness, characteristic norm bounds) and report assembly.
//! - [`repring`] — character calculus in `R(Z/2)` and `R(Z/4)` and the
//!   K-theoretic degree traces that underlie the 10/8-type bounds.
//!
//! Everything is computed in exact integer/rational arithmetic; no floating
//! point is used anywhere.

pub mod charvec;
pub mod lattice;
pub mod manifold;
pub mod obstruct;
pub mod repring;
