//! Representable arithmetic matroids over exact integers.
//!
//! A matrix `X ∈ Z^{d×N}` of full row rank determines an arithmetic matroid
//! through the rank and the multiplicity `m(S)` (product of the invariant
//! factors of `X_S`) of every subset `S`. Two matrices related by `T·X·D`,
//! `T` unimodular and `D` a ±1 diagonal, give the same arithmetic matroid.
//! When some basis `B` has `|det X_B| = ∏ m({b})` the converse holds, and
//! [`canonical::canonical_form`] picks a unique representative of the orbit.
//!
//! - [`exactla`]: determinants, Hermite and Smith normal forms, integer
//!   linear systems, random unimodular matrices.
//! - [`arimatroid`]: subset tables, bases, multiplicative bases.
//! - [`circuitgraph`]: the bipartite support graph of `A` in `(B | A)`, its
//!   spanning forest and elimination orders.
//! - [`canonical`]: basic forms, sign normalization, canonical forms,
//!   equivalence and enumeration of basic forms.
//! - [`oracle`]: exhaustive cross-checks.
//! - [`toric`]: layers of the centred toric arrangement.
//! - [`cli`]: the `arimat` command line.

pub mod arimatroid;
pub mod canonical;
pub mod circuitgraph;
pub mod cli;
pub mod error;
pub mod exactla;
pub mod oracle;
pub mod toric;

pub use arimatroid::Representation;
pub use error::{Error, Result};
pub use exactla::IntMatrix;
