//! The centred toric arrangement `{χ_i = 1}` of a representation and its
//! poset of layers.
//!
//! A point of the torus `(R/Z)^d` is a rational vector `q` taken mod 1. The
//! character of column `λ` is trivial at `q` iff `λ·q ∈ Z`. For an index set
//! `I`, write `M = X_Iᵀ`; with `U·M·W = diag(s_1, …, s_r)` the solutions of
//! `M·q ∈ Z` are `q = W·y` with `y_i ∈ (1/s_i)Z` for `i ≤ r` and `y_i` free
//! otherwise, so the intersection has `s_1 ⋯ s_r` components.
//!
//! Every component of `⋂_{i∈I}` is a translate of the connected subtorus
//! `ker(X_Fᵀ)` where `F` is the closure of `I`. Two translates by `q` and `q'`
//! coincide iff `M_F·z = -M_F·(q - q')` has an integer solution `z`.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::arimatroid::{mask_to_subset, Representation};
use crate::error::{Error, Result};
use crate::exactla::{rank, snf, solve_diophantine, IntMatrix};

/// Cap on `N` for flat and poset construction.
pub const DEFAULT_FLAT_CAP: usize = 16;
/// Cap on the number of components enumerated for a single intersection.
pub const POINT_CAP: usize = 1 << 20;

/// Rational point of `(R/Z)^d`, entries in `[0, 1)`.
pub type TorusPoint = Vec<BigRational>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flat {
    rank: usize,
    elements: Vec<usize>,
}

impl Flat {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &Flat) -> bool {
        self.elements.iter().all(|&i| other.contains(i))
    }
}

/// All columns in the rational span of `X_S`.
pub fn closure(x: &Representation, s: &[usize]) -> Result<Flat> {
    let s = x.normalize_subset(s)?;
    let r = x.rank_of(&s)?;
    let mut elements = Vec::new();
    for j in 0..x.n() {
        if s.binary_search(&j).is_ok() {
            elements.push(j);
            continue;
        }
        let mut t = s.clone();
        t.push(j);
        if x.rank_of(&t)? == r {
            elements.push(j);
        }
    }
    Ok(Flat { rank: r, elements })
}

fn check_flat_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::TooLarge {
            what: "flats (N)",
            size: n,
            cap,
        });
    }
    Ok(())
}

/// All flats ordered by rank, then lexicographically.
pub fn flats(x: &Representation) -> Result<Vec<Flat>> {
    check_flat_cap(x.n(), DEFAULT_FLAT_CAP)?;
    let mut all = Vec::new();
    let mut level = vec![closure(x, &[])?];
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for f in &level {
            for j in (0..x.n()).filter(|&j| !f.contains(j)) {
                let mut s = f.elements.clone();
                s.push(j);
                next.insert(closure(x, &s)?);
            }
        }
        all.append(&mut level);
        level = next.into_iter().collect();
    }
    Ok(all)
}

fn frac(r: &BigRational) -> BigRational {
    r - r.floor()
}

fn times_point(m: &IntMatrix, q: &[BigRational]) -> Vec<BigRational> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .zip(q)
                .map(|(a, b)| BigRational::from_integer(a.clone()) * b)
                .sum()
        })
        .collect()
}

fn character_matrix(x: &Representation, s: &[usize]) -> Result<IntMatrix> {
    Ok(x.submatrix(s)?.transpose())
}

/// One point per component of `⋂_{i∈S} χ_i^{-1}(1)`, sorted.
pub fn intersection_points(x: &Representation, s: &[usize]) -> Result<Vec<TorusPoint>> {
    let m = character_matrix(x, s)?;
    let d = x.d();
    if m.rows() == 0 {
        return Ok(vec![vec![BigRational::zero(); d]]);
    }
    let f = snf(&m);
    let moduli: Vec<usize> = f
        .diagonal
        .iter()
        .map(|s| s.to_usize().filter(|&v| v <= POINT_CAP))
        .collect::<Option<_>>()
        .ok_or(Error::TooLarge {
            what: "intersection components",
            size: usize::MAX,
            cap: POINT_CAP,
        })?;
    let total = moduli.iter().try_fold(1usize, |acc, &s| {
        acc.checked_mul(s).filter(|&p| p <= POINT_CAP)
    });
    let total = total.ok_or(Error::TooLarge {
        what: "intersection components",
        size: usize::MAX,
        cap: POINT_CAP,
    })?;

    let mut points = Vec::with_capacity(total);
    for index in 0..total {
        let mut rest = index;
        let mut y = vec![BigRational::zero(); d];
        for (i, &s) in moduli.iter().enumerate() {
            let t = rest % s;
            rest /= s;
            y[i] = BigRational::new(BigInt::from(t), BigInt::from(s));
        }
        let q: TorusPoint = times_point(&f.right, &y).iter().map(frac).collect();
        points.push(q);
    }
    points.sort();
    Ok(points)
}

/// `q` and `q'` are translates of the same component of `{M·v ∈ Z}`.
fn same_coset(m: &IntMatrix, q: &[BigRational], q2: &[BigRational]) -> Result<bool> {
    if m.rows() == 0 {
        return Ok(true);
    }
    let diff: Vec<BigRational> = q.iter().zip(q2).map(|(a, b)| a - b).collect();
    let rhs = times_point(m, &diff);
    if rhs.iter().any(|v| !v.is_integer()) {
        return Ok(false);
    }
    let rhs: Vec<BigInt> = rhs.into_iter().map(|v| -v.to_integer()).collect();
    Ok(solve_diophantine(m, &rhs)?.is_some())
}

fn on_flat(m: &IntMatrix, q: &[BigRational]) -> bool {
    times_point(m, q).iter().all(|v| v.is_integer())
}

/// True iff `q` and `q'`, both on every subtorus of `F`, lie in the same
/// component of their intersection.
pub fn same_component(
    x: &Representation,
    f: &Flat,
    q: &[BigRational],
    q2: &[BigRational],
) -> Result<bool> {
    if q.len() != x.d() || q2.len() != x.d() {
        return Err(Error::DimensionMismatch(format!(
            "points need {} coordinates",
            x.d()
        )));
    }
    let m = character_matrix(x, &f.elements)?;
    if !on_flat(&m, q) || !on_flat(&m, q2) {
        return Err(Error::NotOnFlat);
    }
    same_coset(&m, q, q2)
}

/// A connected component of an intersection of subtori: the translate of
/// the subtorus of `flat` through `point`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Layer {
    pub flat: Flat,
    pub point: TorusPoint,
    /// Indices `i` with `χ_i ≡ 1` on the layer.
    pub hyperplanes: Vec<usize>,
}

fn make_layer(x: &Representation, flat: Flat, point: TorusPoint) -> Result<Layer> {
    let mut hyperplanes = Vec::new();
    for &i in &flat.elements {
        let col = character_matrix(x, &[i])?;
        if on_flat(&col, &point) {
            hyperplanes.push(i);
        }
    }
    Ok(Layer {
        flat,
        point,
        hyperplanes,
    })
}

/// The `m(F)` components of `⋂_{i∈F} χ_i^{-1}(1)`.
pub fn layers_of_flat(x: &Representation, f: &Flat) -> Result<Vec<Layer>> {
    intersection_points(x, &f.elements)?
        .into_iter()
        .map(|q| make_layer(x, f.clone(), q))
        .collect()
}

/// Layers ordered by reverse inclusion: `L ≤ L'` iff `L' ⊆ L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerPoset {
    layers: Vec<Layer>,
    relations: BTreeSet<(usize, usize)>,
}

impl LayerPoset {
    /// Sorted by flat rank, flat, then point; the whole torus comes first.
    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// All pairs `(i, j)` with `layers[i] ≤ layers[j]`, reflexive pairs
    /// included.
    pub fn relations(&self) -> &BTreeSet<(usize, usize)> {
        &self.relations
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.relations.contains(&(i, j))
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| j == i || !self.leq(i, j)))
            .collect()
    }

    /// Hasse diagram edges `(i, j)`: `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations
            .iter()
            .filter(|&&(i, j)| i != j)
            .filter(|&&(i, j)| {
                !(0..self.len()).any(|k| k != i && k != j && self.leq(i, k) && self.leq(k, j))
            })
            .copied()
            .collect()
    }

    pub fn check_partial_order(&self) -> bool {
        let n = self.len();
        let reflexive = (0..n).all(|i| self.leq(i, i));
        let antisymmetric = self
            .relations
            .iter()
            .all(|&(i, j)| i == j || !self.leq(j, i));
        let transitive = self
            .relations
            .iter()
            .all(|&(i, j)| (0..n).all(|k| !self.leq(j, k) || self.leq(i, k)));
        reflexive && antisymmetric && transitive
    }
}

/// Every layer of the arrangement: components of `⋂_{i∈I}` over all index
/// sets `I`, with coinciding components merged.
pub fn layer_poset(x: &Representation) -> Result<LayerPoset> {
    layer_poset_with_cap(x, DEFAULT_FLAT_CAP)
}

pub fn layer_poset_with_cap(x: &Representation, cap: usize) -> Result<LayerPoset> {
    check_flat_cap(x.n(), cap)?;
    let mut buckets: BTreeMap<Flat, (IntMatrix, Vec<TorusPoint>)> = BTreeMap::new();
    for mask in 0..1u64 << x.n() {
        let s = mask_to_subset(mask, x.n());
        let f = closure(x, &s)?;
        if !buckets.contains_key(&f) {
            let m = character_matrix(x, &f.elements)?;
            buckets.insert(f.clone(), (m, Vec::new()));
        }
        let (m, known) = buckets.get_mut(&f).expect("bucket present");
        for q in intersection_points(x, &s)? {
            let mut seen = false;
            for p in known.iter() {
                if same_coset(m, p, &q)? {
                    seen = true;
                    break;
                }
            }
            if !seen {
                known.push(q);
            }
        }
    }

    let mut layers = Vec::new();
    let mut matrices = Vec::new();
    for (f, (m, mut points)) in buckets {
        points.sort();
        for q in points {
            layers.push(make_layer(x, f.clone(), q)?);
            matrices.push(m.clone());
        }
    }

    let mut relations = BTreeSet::new();
    for (i, j) in (0..layers.len()).cartesian_product(0..layers.len()) {
        if layers[i].flat.is_subset_of(&layers[j].flat)
            && same_coset(&matrices[i], &layers[i].point, &layers[j].point)?
        {
            relations.insert((i, j));
        }
    }
    Ok(LayerPoset { layers, relations })
}

/// First basis `I` (lexicographic) whose intersection is finite with as many
/// points as the product of the component counts of its members.
pub fn geometric_weak_multiplicativity(x: &Representation) -> Result<Option<Vec<usize>>> {
    x.require_full_rank()?;
    let singles: Vec<BigInt> = (0..x.n())
        .map(|i| intersection_points(x, &[i]).map(|p| BigInt::from(p.len())))
        .collect::<Result<_>>()?;
    for s in (0..x.n()).combinations(x.d()) {
        if rank(&x.submatrix(&s)?) != x.d() {
            continue;
        }
        let product: BigInt = s.iter().map(|&i| &singles[i]).product();
        if BigInt::from(intersection_points(x, &s)?.len()) == product {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Largest denominator appearing in a point, for display and checks.
pub fn denominator_lcm(q: &[BigRational]) -> BigInt {
    q.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep<const C: usize>(rows: &[[i64; C]]) -> Representation {
        Representation::new(IntMatrix::from_rows(rows).unwrap()).unwrap()
    }

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    fn example_x() -> Representation {
        rep(&[
            [1, 0, 0, -4, 0, 3, 0],
            [0, 2, 0, 1, 2, 0, -2],
            [0, 0, 3, 0, 1, -1, -1],
        ])
    }

    fn elems(fs: &[Flat]) -> Vec<Vec<usize>> {
        fs.iter().map(|f| f.elements().to_vec()).collect()
    }

    #[test]
    fn flats_of_small_matroids() {
        let id = rep(&[[1, 0], [0, 1]]);
        assert_eq!(
            elems(&flats(&id).unwrap()),
            vec![vec![], vec![0], vec![1], vec![0, 1]]
        );
        let x15 = rep(&[[1, 1], [0, 5]]);
        assert_eq!(
            elems(&flats(&x15).unwrap()),
            vec![vec![], vec![0], vec![1], vec![0, 1]]
        );
        let parallel = rep(&[[1, 2, 0]]);
        assert_eq!(
            elems(&flats(&parallel).unwrap()),
            vec![vec![2], vec![0, 1, 2]]
        );
    }

    #[test]
    fn flats_match_closure_of_every_subset() {
        let x = example_x();
        let mut brute = BTreeSet::new();
        for mask in 0u64..1 << x.n() {
            brute.insert(closure(&x, &mask_to_subset(mask, x.n())).unwrap());
        }
        let fast = flats(&x).unwrap();
        assert_eq!(fast.len(), brute.len());
        assert_eq!(fast.iter().cloned().collect::<BTreeSet<_>>(), brute);
        assert!(fast
            .windows(2)
            .all(|w| (w[0].rank, &w[0].elements) < (w[1].rank, &w[1].elements)));
        for f in &fast {
            assert_eq!(closure(&x, f.elements()).unwrap(), *f);
        }
    }

    #[test]
    fn layers_per_flat() {
        let two = rep(&[[2]]);
        let f = closure(&two, &[0]).unwrap();
        let pts: Vec<_> = layers_of_flat(&two, &f)
            .unwrap()
            .into_iter()
            .map(|l| l.point)
            .collect();
        assert_eq!(pts, vec![vec![r(0, 1)], vec![r(1, 2)]]);

        let bottom = closure(&two, &[]).unwrap();
        assert_eq!(layers_of_flat(&two, &bottom).unwrap().len(), 1);

        let x15 = rep(&[[1, 1], [0, 5]]);
        assert_eq!(
            layers_of_flat(&x15, &closure(&x15, &[0, 1]).unwrap())
                .unwrap()
                .len(),
            5
        );

        let x = example_x();
        for f in flats(&x).unwrap() {
            let ls = layers_of_flat(&x, &f).unwrap();
            assert_eq!(
                BigInt::from(ls.len()),
                x.multiplicity(f.elements()).unwrap()
            );
            for (a, b) in ls.iter().tuple_combinations() {
                assert!(!same_component(&x, &f, &a.point, &b.point).unwrap());
            }
            for l in &ls {
                assert_eq!(l.hyperplanes, f.elements());
                assert!(l.point.iter().all(|v| *v >= r(0, 1) && *v < r(1, 1)));
            }
        }
    }

    #[test]
    fn same_component_examples() {
        let two = rep(&[[2]]);
        let f = closure(&two, &[0]).unwrap();
        assert!(same_component(&two, &f, &[r(0, 1)], &[r(0, 1)]).unwrap());
        assert!(same_component(&two, &f, &[r(0, 1)], &[r(1, 1)]).unwrap());
        assert!(!same_component(&two, &f, &[r(0, 1)], &[r(1, 2)]).unwrap());
        assert_eq!(
            same_component(&two, &f, &[r(1, 3)], &[r(0, 1)]),
            Err(Error::NotOnFlat)
        );

        // a one-dimensional subtorus: translates along the kernel coincide
        let x = rep(&[[2, 0], [0, 1]]);
        let f = closure(&x, &[0]).unwrap();
        assert!(same_component(&x, &f, &[r(1, 2), r(0, 1)], &[r(1, 2), r(1, 3)]).unwrap());
        assert!(!same_component(&x, &f, &[r(0, 1), r(0, 1)], &[r(1, 2), r(1, 3)]).unwrap());
    }

    #[test]
    fn poset_examples() {
        let empty = Representation::with_any_rank(IntMatrix::zeros(2, 0)).unwrap();
        let p = layer_poset(&empty).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.layers()[0].point, vec![r(0, 1), r(0, 1)]);

        let x15 = rep(&[[1, 1], [0, 5]]);
        let p = layer_poset(&x15).unwrap();
        assert_eq!(p.len(), 8);
        assert_eq!(p.maximal().len(), 5);
        assert!(p.check_partial_order());
        assert!((0..p.len()).all(|j| p.leq(p.bottom(), j)));

        let two = rep(&[[2]]);
        let p = layer_poset(&two).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.covers(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn poset_includes_non_saturated_intersections() {
        // χ_1 = 1 has two points, adding χ_2 = 1 keeps only one of them
        let x = rep(&[[2, 1]]);
        let p = layer_poset(&x).unwrap();
        let points: Vec<_> = p
            .layers()
            .iter()
            .map(|l| (l.point.clone(), l.hyperplanes.clone()))
            .collect();
        assert_eq!(
            points,
            vec![
                (vec![r(0, 1)], vec![]),
                (vec![r(0, 1)], vec![0, 1]),
                (vec![r(1, 2)], vec![0])
            ]
        );
        assert!(p.check_partial_order());
    }

    #[test]
    fn poset_of_worked_example() {
        let x = example_x();
        let p = layer_poset(&x).unwrap();
        assert!(p.check_partial_order());
        let atoms: BTreeSet<_> = p
            .covers()
            .into_iter()
            .filter(|&(i, _)| i == p.bottom())
            .map(|(_, j)| p.layers()[j].flat.clone())
            .collect();
        let rank_one: BTreeSet<_> = flats(&x)
            .unwrap()
            .into_iter()
            .filter(|f| f.rank() == 1)
            .collect();
        assert_eq!(atoms, rank_one);
        for f in flats(&x).unwrap() {
            let on_all = p
                .layers()
                .iter()
                .filter(|l| l.flat == f && l.hyperplanes == f.elements())
                .count();
            assert_eq!(BigInt::from(on_all), x.multiplicity(f.elements()).unwrap());
        }
    }

    #[test]
    fn geometric_weak_multiplicativity_examples() {
        let id = rep(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(
            geometric_weak_multiplicativity(&id).unwrap(),
            Some(vec![0, 1, 2])
        );
        assert_eq!(
            geometric_weak_multiplicativity(&rep(&[[1, 2], [0, 5]])).unwrap(),
            None
        );
        assert_eq!(
            geometric_weak_multiplicativity(&example_x()).unwrap(),
            Some(vec![0, 1, 2])
        );
        let deficient =
            Representation::with_any_rank(IntMatrix::from_rows(&[[1, 2], [2, 4]]).unwrap())
                .unwrap();
        assert!(matches!(
            geometric_weak_multiplicativity(&deficient),
            Err(Error::NotFullRank { .. })
        ));
    }

    #[test]
    fn denominators_divide_top_invariant_factor() {
        let x = example_x();
        for f in flats(&x).unwrap() {
            let m = character_matrix(&x, f.elements()).unwrap();
            let top = snf(&m).diagonal.last().cloned().unwrap_or_else(BigInt::one);
            for l in layers_of_flat(&x, &f).unwrap() {
                assert!(top.is_multiple_of(&denominator_lcm(&l.point)));
            }
        }
    }
}
