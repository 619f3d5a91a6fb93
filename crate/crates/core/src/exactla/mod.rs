//! Exact integer linear algebra: determinants, rank, Hermite and Smith
//! normal forms with transforms, and linear Diophantine systems.

mod diophantine;
mod elimination;
mod hnf;
mod matrix;
mod snf;
mod unimodular;

pub use diophantine::{solve_diophantine, DiophantineSolution};
pub use elimination::{det, rank};
pub use hnf::{hnf_basis_form, hnf_left_canonical};
pub use matrix::IntMatrix;
pub use snf::{invariant_factors, snf, SnfResult};
pub use unimodular::{unimodular_random, UnimodularWitness};

pub(crate) use elimination::sign_of;
pub(crate) use hnf::hnf_left_any_rank;
