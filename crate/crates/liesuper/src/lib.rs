//! Exact-arithmetic Lie superalgebras with quasi-Frobenius structure.
//!
//! The crate provides:
//!
//! * ℤ/2-graded Lie algebra presentations over ℚ or 𝔽_p (p ≠ 2) with full
//!   validation (grading, super anti-commutativity, Jacobi, and the extra
//!   cubic axiom in characteristic 3),
//! * anti-symmetric bilinear forms on superspaces (orthosymplectic,
//!   periplectic, and non-homogeneous), cocycle and non-degeneracy checks,
//!   and exact solvers for the space of closed anti-symmetric forms,
//! * derivation spaces and form-adjoints,
//! * the four double-extension constructions (form parity × derivation
//!   parity) together with their converse decompositions,
//! * flat connections, T*- and ΠT*-extensions of flat Lie superalgebras,
//!   extraction from strongly polarized algebras, and Lagrangian extension
//!   cohomology,
//! * the filiform families L^n and L^{n,m} with their standard closed forms.
//!
//! Everything is computed exactly; there is no floating point anywhere.
//! The crate is `no_std`-compatible (`--no-default-features`, requires
//! `alloc`).

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod double_ext;
pub mod filiform;
pub mod form;
pub mod lagrangian;
pub mod maps;
pub mod matrix;
pub mod poly;
pub mod rng;
pub mod scalar;
pub mod wedge;

pub use algebra::{LieSuperalgebra, Parity, SuperDim, Violation};
// form re-exports added once the module lands
pub use matrix::{Mat, Subspace};
pub use scalar::{Field, Scalar};
