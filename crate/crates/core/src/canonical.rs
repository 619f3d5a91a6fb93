//! Basic forms, sign normalization along a coordinatizing path, and the
//! canonical representative of `{T · X · D}` for weakly multiplicative
//! arithmetic matroids.
//!
//! The canonical form is built in four deterministic steps:
//!
//! 1. take the lexicographically first multiplicative basis `B`;
//! 2. bring `X` into Hermite normal form with respect to `B`, which makes the
//!    basis block diagonal with positive entries;
//! 3. build the depth-first spanning forest of the support graph of `A`;
//! 4. flip rows and columns until every forest entry of `A` is positive.
//!
//! Equivalent inputs share `B`, the diagonal and the zero pattern of `A`, and
//! once the forest entries are fixed the remaining entries of `A` are forced,
//! so the output only depends on the orbit.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arimatroid::Representation;
use crate::circuitgraph::{
    coordinatizing_path, elimination_order, kappa, CircuitIncidence, EliminationOrder, Forest,
    Vertex,
};
use crate::error::{Error, Result};
use crate::exactla::{hnf_basis_form, sign_of, IntMatrix, UnimodularWitness};
use crate::oracle;

/// Default cap on `N - κ(A)` for enumerating basic forms.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

/// A left unimodular transform together with a column sign pattern, acting
/// as `X ↦ T · X · D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformWitness {
    pub left: UnimodularWitness,
    /// Diagonal of `D`, entries ±1.
    pub signs: Vec<i8>,
}

impl TransformWitness {
    pub fn identity(d: usize, n: usize) -> Self {
        TransformWitness {
            left: UnimodularWitness::identity(d),
            signs: vec![1; n],
        }
    }

    pub fn apply(&self, x: &IntMatrix) -> IntMatrix {
        self.left.apply(&x.scale_columns_by_signs(&self.signs))
    }

    /// True when `self` maps `from` onto `to` exactly.
    pub fn maps(&self, from: &IntMatrix, to: &IntMatrix) -> bool {
        from.rows() == self.left.dim() && from.cols() == self.signs.len() && self.apply(from) == *to
    }

    /// Given `c = wx(X)` and `c = wy(Y)`, the transform taking `X` to `Y`.
    pub fn between(wx: &TransformWitness, wy: &TransformWitness) -> TransformWitness {
        TransformWitness {
            left: wx.left.then(&wy.left.inverse()),
            signs: wx.signs.iter().zip(&wy.signs).map(|(a, b)| a * b).collect(),
        }
    }
}

/// `X` transformed to `(B | A)` with `B` diagonal and positive, columns kept
/// in their original positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicForm {
    basis: Vec<usize>,
    non_basis: Vec<usize>,
    diag: Vec<BigInt>,
    a: IntMatrix,
    transform: UnimodularWitness,
    signs: Vec<i8>,
}

impl BasicForm {
    /// Sorted ground-set indices of the basis; row `i` carries the pivot of
    /// `basis[i]`.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    /// Ground-set indices of the columns of `A`, in order.
    pub fn non_basis(&self) -> &[usize] {
        &self.non_basis
    }

    pub fn diag(&self) -> &[BigInt] {
        &self.diag
    }

    pub fn a(&self) -> &IntMatrix {
        &self.a
    }

    pub fn d(&self) -> usize {
        self.basis.len()
    }

    pub fn n(&self) -> usize {
        self.basis.len() + self.non_basis.len()
    }

    /// `T` and `D` with `T · X_source · D = assembled()`.
    pub fn witness(&self) -> TransformWitness {
        TransformWitness {
            left: self.transform.clone(),
            signs: self.signs.clone(),
        }
    }

    pub fn assembled(&self) -> IntMatrix {
        assemble(&self.basis, &self.non_basis, &self.diag, &self.a)
    }

    pub fn incidence(&self) -> CircuitIncidence {
        CircuitIncidence::from_support(&self.a, self.basis.clone(), self.non_basis.clone())
    }
}

pub(crate) fn assemble(
    basis: &[usize],
    non_basis: &[usize],
    diag: &[BigInt],
    a: &IntMatrix,
) -> IntMatrix {
    let d = basis.len();
    let mut x = IntMatrix::zeros(d, basis.len() + non_basis.len());
    for (i, (&col, b)) in basis.iter().zip(diag).enumerate() {
        x.set(i, col, b.clone());
    }
    for (k, &col) in non_basis.iter().enumerate() {
        for i in 0..d {
            x.set(i, col, a.get(i, k).clone());
        }
    }
    x
}

/// Hermite normal form with respect to a multiplicative basis, which has a
/// diagonal basis block.
pub fn basic_form(x: &Representation, basis: &[usize]) -> Result<BasicForm> {
    let basis = x.normalize_subset(basis)?;
    let (h, t) = hnf_basis_form(x.matrix(), &basis)?;
    let d = x.d();
    let diagonal = basis
        .iter()
        .enumerate()
        .all(|(i, &col)| (0..d).all(|r| r == i || h.get(r, col).is_zero()));
    if !diagonal {
        return Err(Error::NotMultiplicative(basis));
    }
    let non_basis: Vec<usize> = (0..x.n())
        .filter(|j| basis.binary_search(j).is_err())
        .collect();
    Ok(BasicForm {
        diag: basis
            .iter()
            .enumerate()
            .map(|(i, &c)| h.get(i, c).clone())
            .collect(),
        a: h.select_columns(&non_basis)?,
        non_basis,
        basis,
        transform: t,
        signs: vec![1; x.n()],
    })
}

/// Multipliers `σ_k ∈ {±1}` for the forest edges, in the forest's edge
/// order: the normalized entry on edge `k` is `σ_k` times its input value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if entries.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::PathMismatch("sign entries must be ±1".into()));
        }
        Ok(SignVector(entries))
    }

    pub fn all_ones(len: usize) -> Self {
        SignVector(vec![1; len])
    }

    /// The multipliers that make every forest entry of `form` positive.
    pub fn making_positive(form: &BasicForm, path: &Forest) -> Self {
        SignVector(
            path.edges()
                .iter()
                .map(|e| sign_of(form.a.get(e.row, e.col)))
                .map(|s| if s < 0 { -1 } else { 1 })
                .collect(),
        )
    }

    /// Multipliers reaching the absolute sign pattern `targets` (±1 per
    /// forest edge).
    pub fn reaching(form: &BasicForm, path: &Forest, targets: &[i8]) -> Result<Self> {
        if targets.len() != path.len() {
            return Err(Error::PathMismatch(
                "one target sign per forest edge".into(),
            ));
        }
        let entries = path
            .edges()
            .iter()
            .zip(targets)
            .map(|(e, &t)| t * sign_of(form.a.get(e.row, e.col)))
            .collect();
        SignVector::new(entries)
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }
}

/// A single sign change performed by [`sign_normalize_traced`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineFlip {
    /// Row `i` (zero-based) of `X`, compensated on the basis column.
    Row(usize),
    /// Column `j` (zero-based ground-set index) of `X`.
    Column(usize),
}

/// Flips rows and columns so that each forest entry becomes `σ_k` times its
/// input value, using the default elimination order.
pub fn sign_normalize(form: &BasicForm, path: &Forest, sigma: &SignVector) -> Result<BasicForm> {
    let order = elimination_order(path);
    Ok(sign_normalize_traced(form, path, &order, sigma)?.0)
}

/// As [`sign_normalize`] with an explicit elimination order; also returns the
/// flips in the order they were applied.
///
/// Steps are processed last to first. The vertex of step `s` is a leaf of the
/// forest restricted to steps `s..`, so flipping its line only changes the
/// entry of step `s` among the entries fixed so far.
pub fn sign_normalize_traced(
    form: &BasicForm,
    path: &Forest,
    order: &EliminationOrder,
    sigma: &SignVector,
) -> Result<(BasicForm, Vec<LineFlip>)> {
    let c = form.incidence();
    if !path.is_spanning_forest_of(&c) {
        return Err(Error::PathMismatch(
            "not a spanning forest of the support graph".into(),
        ));
    }
    if sigma.0.len() != path.len() {
        return Err(Error::PathMismatch(format!(
            "{} signs for {} forest edges",
            sigma.0.len(),
            path.len()
        )));
    }
    let mut order_edges: Vec<_> = order.steps().iter().map(|s| s.edge).collect();
    order_edges.sort_unstable();
    if order_edges != path.edges() {
        return Err(Error::BadEliminationOrder(
            "order does not eliminate this forest".into(),
        ));
    }

    let target: HashMap<_, i8> = path
        .edges()
        .iter()
        .zip(&sigma.0)
        .map(|(&e, &s)| (e, s * sign_of(form.a.get(e.row, e.col))))
        .collect();

    let mut out = form.clone();
    let mut flips = Vec::new();
    for step in order.steps().iter().rev() {
        let e = step.edge;
        if sign_of(out.a.get(e.row, e.col)) == target[&e] {
            continue;
        }
        match step.vertex {
            Vertex::Row(i) => {
                out.a.negate_row(i);
                out.transform.negate_row(i);
                let basis_col = out.basis[i];
                out.signs[basis_col] = -out.signs[basis_col];
                flips.push(LineFlip::Row(i));
            }
            Vertex::Col(j) => {
                out.a.negate_col(j);
                let col = out.non_basis[j];
                out.signs[col] = -out.signs[col];
                flips.push(LineFlip::Column(col));
            }
        }
    }
    Ok((out, flips))
}

/// Orbit representative of `X` under `T · X · D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalRep {
    pub matrix: IntMatrix,
    pub basis_used: Vec<usize>,
    pub forest_used: Forest,
    /// Support graph the forest lives in (labels for display).
    pub incidence: CircuitIncidence,
    /// `matrix = witness.apply(X)`.
    pub witness: TransformWitness,
}

pub fn canonical_form(x: &Representation) -> Result<CanonicalRep> {
    x.require_full_rank()?;
    let basis = x
        .first_multiplicative_basis()
        .ok_or(Error::NotWeaklyMultiplicative)?;
    let form = basic_form(x, &basis)?;
    let incidence = form.incidence();
    let forest = coordinatizing_path(&incidence);
    let sigma = SignVector::making_positive(&form, &forest);
    let normalized = sign_normalize(&form, &forest, &sigma)?;
    Ok(CanonicalRep {
        matrix: normalized.assembled(),
        basis_used: basis,
        forest_used: forest,
        incidence,
        witness: normalized.witness(),
    })
}

/// A witness `(T, D)` with `Y = T · X · D`, or `None` when no such pair
/// exists. Inputs that are not weakly multiplicative fall back to the
/// exhaustive sign search.
pub fn equivalent(x: &Representation, y: &Representation) -> Result<Option<TransformWitness>> {
    equivalent_with_cap(x, y, oracle::DEFAULT_BRUTEFORCE_CAP)
}

/// As [`equivalent`], with a cap on `N` for the exhaustive fallback.
pub fn equivalent_with_cap(
    x: &Representation,
    y: &Representation,
    cap: usize,
) -> Result<Option<TransformWitness>> {
    if x.d() != y.d() || x.n() != y.n() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            x.d(),
            x.n(),
            y.d(),
            y.n()
        )));
    }
    if x.is_full_rank() != y.is_full_rank() {
        return Ok(None);
    }
    if !x.is_full_rank() {
        return oracle::equivalence_witness_bruteforce(x, y, cap);
    }
    match (canonical_form(x), canonical_form(y)) {
        (Ok(cx), Ok(cy)) => {
            if cx.matrix != cy.matrix {
                return Ok(None);
            }
            let w = TransformWitness::between(&cx.witness, &cy.witness);
            debug_assert!(w.maps(x.matrix(), y.matrix()));
            Ok(Some(w))
        }
        // weak multiplicativity is a property of the arithmetic matroid
        (Ok(_), Err(Error::NotWeaklyMultiplicative))
        | (Err(Error::NotWeaklyMultiplicative), Ok(_)) => Ok(None),
        (Err(Error::NotWeaklyMultiplicative), Err(Error::NotWeaklyMultiplicative)) => {
            oracle::equivalence_witness_bruteforce(x, y, cap)
        }
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

/// All representations of the arithmetic matroid of `X` in `B`-basic form,
/// one per sign pattern on the forest entries. Pattern `k` makes forest edge
/// `i` negative iff bit `i` of `k` is set.
pub fn enumerate_basic_reps(x: &Representation, basis: &[usize]) -> Result<Vec<IntMatrix>> {
    enumerate_basic_reps_with_cap(x, basis, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_basic_reps_with_cap(
    x: &Representation,
    basis: &[usize],
    cap: usize,
) -> Result<Vec<IntMatrix>> {
    let form = basic_form(x, basis)?;
    let forest = coordinatizing_path(&form.incidence());
    let k = forest.len();
    if k > cap {
        return Err(Error::TooLarge {
            what: "basic-form enumeration (N - kappa)",
            size: k,
            cap,
        });
    }
    let order = elimination_order(&forest);
    (0..1u64 << k)
        .map(|pattern| {
            let targets: Vec<i8> = (0..k)
                .map(|i| if pattern >> i & 1 == 1 { -1 } else { 1 })
                .collect();
            let sigma = SignVector::reaching(&form, &forest, &targets)?;
            Ok(sign_normalize_traced(&form, &forest, &order, &sigma)?
                .0
                .assembled())
        })
        .collect()
}

/// `2^(N - κ(A))` for any basic form `(B | A)` of `X`.
pub fn stratum_size(x: &Representation) -> Result<BigUint> {
    x.require_full_rank()?;
    let basis = x
        .first_multiplicative_basis()
        .ok_or(Error::NotWeaklyMultiplicative)?;
    let form = basic_form(x, &basis)?;
    let exponent = x.n() - kappa(&form.incidence());
    Ok(BigUint::one() << exponent)
}
