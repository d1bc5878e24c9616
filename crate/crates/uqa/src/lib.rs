//! Exact symbolic computation with cyclic adjoint modules inside a quantized
//! enveloping algebra `U_q(g)`.
//!
//! The crate provides exact arithmetic over the rational function field Q(q),
//! finite-type root data, a triangular normal form for `U_q(g)` in
//! simply-connected form, the Hopf structure and left adjoint action, a
//! closure engine for cyclic adjoint modules under a quantum Levi subalgebra,
//! the induced poset of cyclic submodules, and a harness for the cominuscule
//! torus family `K_{-2n w_x}`.

pub mod algebra;
pub mod checks;
pub mod cominuscule;
pub mod engine;
pub mod hopf;
pub mod parse;
pub mod poset;
pub mod render;
pub mod root_data;
pub mod scalar;

pub use algebra::{Algebra, AlgebraElement, Monomial};
pub use root_data::{CartanDatum, LeviSpec, Weight};
pub use scalar::Scalar;
