use std::collections::BTreeSet;

use arimat::arimatroid::mask_to_subset;
use arimat::canonical::{
    basic_form, canonical_form, enumerate_basic_reps, sign_normalize, stratum_size, SignVector,
};
use arimat::circuitgraph::{
    coordinatizing_path, elimination_order, incidence, kappa, EliminationOrder,
};
use arimat::cli::input::parse_matrix;
use arimat::exactla::{
    det, hnf_left_canonical, rank, snf, solve_diophantine, unimodular_random, IntMatrix,
};
use arimat::oracle::multiplicity_gcd_minors;
use arimat::toric::{
    flats, geometric_weak_multiplicativity, intersection_points, layer_poset, layers_of_flat,
    same_component,
};
use arimat::Representation;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix(
    rows: std::ops::RangeInclusive<usize>,
    cols: std::ops::RangeInclusive<usize>,
    bound: i64,
) -> impl Strategy<Value = IntMatrix> {
    (rows, cols).prop_flat_map(move |(d, n)| {
        prop::collection::vec(-bound..=bound, d * n).prop_map(move |v| {
            IntMatrix::new(d, n, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

fn square(
    size: std::ops::RangeInclusive<usize>,
    bound: i64,
) -> impl Strategy<Value = (IntMatrix, IntMatrix)> {
    size.prop_flat_map(move |d| {
        let one = prop::collection::vec(-bound..=bound, d * d).prop_map(move |v| {
            IntMatrix::new(d, d, v.into_iter().map(BigInt::from).collect()).unwrap()
        });
        (one.clone(), one)
    })
}

/// Full-rank representation with `d ≤ n`.
fn representation(max_d: usize, max_n: usize, bound: i64) -> impl Strategy<Value = Representation> {
    (1..=max_d)
        .prop_flat_map(move |d| matrix(d..=d, d..=max_n, bound))
        .prop_filter_map("full row rank", |m| Representation::new(m).ok())
}

/// `(I | A)` scaled by a positive diagonal and then scrambled, so weak
/// multiplicativity is guaranteed.
fn weakly_multiplicative() -> impl Strategy<Value = Representation> {
    (1usize..=3, 0usize..=4).prop_flat_map(|(d, k)| {
        (
            prop::collection::vec(1i64..=3, d),
            prop::collection::vec(-4i64..=4, d * k),
            any::<u64>(),
            prop::collection::vec(any::<bool>(), d + k),
        )
            .prop_map(move |(diag, a, seed, flips)| {
                let mut m = IntMatrix::zeros(d, d + k);
                for i in 0..d {
                    m.set(i, i, BigInt::from(diag[i]));
                    for j in 0..k {
                        m.set(i, d + j, BigInt::from(a[i * k + j]));
                    }
                }
                let signs: Vec<i8> = flips.iter().map(|&f| if f { -1 } else { 1 }).collect();
                let t = unimodular_random(d, seed, 3 * d);
                Representation::new(t.apply(&m.scale_columns_by_signs(&signs))).unwrap()
            })
    })
}

fn orbit_element(x: &Representation, seed: u64, flips: &[bool]) -> Representation {
    let signs: Vec<i8> = (0..x.n())
        .map(|j| if flips[j % flips.len()] { -1 } else { 1 })
        .collect();
    let t = unimodular_random(x.d(), seed, 4 * x.d());
    Representation::new(t.apply(&x.matrix().scale_columns_by_signs(&signs))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn det_is_multiplicative((a, b) in square(1..=4, 4)) {
        prop_assert_eq!(det(&(&a * &b)).unwrap(), det(&a).unwrap() * det(&b).unwrap());
        prop_assert_eq!(det(&a.transpose()).unwrap(), det(&a).unwrap());
    }

    #[test]
    fn rank_is_transpose_invariant(m in matrix(1..=4, 1..=5, 3)) {
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
        prop_assert!(rank(&m) <= m.rows().min(m.cols()));
    }

    #[test]
    fn left_hnf_is_orbit_constant(x in representation(4, 6, 9), seed in any::<u64>()) {
        let (h, t) = hnf_left_canonical(x.matrix()).unwrap();
        prop_assert_eq!(t.apply(x.matrix()), h.clone());
        let u = unimodular_random(x.d(), seed, 12);
        prop_assert_eq!(hnf_left_canonical(&u.apply(x.matrix())).unwrap().0, h.clone());
        prop_assert_eq!(hnf_left_canonical(&h).unwrap().0, h);
    }

    #[test]
    fn smith_form_contract(m in matrix(1..=4, 1..=4, 9)) {
        let s = snf(&m);
        prop_assert_eq!(&(&s.left * &m) * &s.right, s.diagonal_matrix());
        prop_assert_eq!(s.rank, rank(&m));
        prop_assert!(s.diagonal.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        if m.is_square() && s.rank == m.rows() {
            prop_assert_eq!(s.invariant_product(), det(&m).unwrap().abs());
        }
    }

    #[test]
    fn diophantine_solutions(m in matrix(1..=3, 1..=4, 6), x0 in prop::collection::vec(-5i64..=5, 4)) {
        let x0: Vec<BigInt> = x0[..m.cols()].iter().map(|&v| BigInt::from(v)).collect();
        let b = m.mul_vec(&x0);
        let sol = solve_diophantine(&m, &b).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&sol.particular), b);
        prop_assert_eq!(sol.kernel_basis.len(), m.cols() - rank(&m));
        for k in &sol.kernel_basis {
            prop_assert!(m.mul_vec(k).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn multiplicity_routes_agree(x in representation(3, 5, 5)) {
        for mask in 0u64..1 << x.n() {
            let s = mask_to_subset(mask, x.n());
            prop_assert_eq!(x.multiplicity(&s).unwrap(), multiplicity_gcd_minors(&x, &s).unwrap());
        }
        prop_assert!(x.full_table().unwrap().rank_is_submodular());
    }

    #[test]
    fn table_is_orbit_invariant(x in representation(3, 6, 5), seed in any::<u64>(), flips in prop::collection::vec(any::<bool>(), 1..6)) {
        let y = orbit_element(&x, seed, &flips);
        prop_assert_eq!(x.full_table().unwrap(), y.full_table().unwrap());
    }

    #[test]
    fn canonical_form_is_orbit_invariant(x in weakly_multiplicative(), seed in any::<u64>(), flips in prop::collection::vec(any::<bool>(), 1..6)) {
        let c = canonical_form(&x).unwrap();
        prop_assert!(c.witness.maps(x.matrix(), &c.matrix));
        let y = orbit_element(&x, seed, &flips);
        let cy = canonical_form(&y).unwrap();
        prop_assert_eq!(&cy.matrix, &c.matrix);
        let again = canonical_form(&Representation::new(c.matrix.clone()).unwrap()).unwrap();
        prop_assert_eq!(again.matrix, c.matrix);
    }

    #[test]
    fn weak_multiplicativity_agrees_with_canonical(x in representation(3, 5, 4)) {
        prop_assert_eq!(canonical_form(&x).is_ok(), x.is_weakly_multiplicative());
        prop_assert_eq!(geometric_weak_multiplicativity(&x).unwrap().is_some(), x.is_weakly_multiplicative());
    }

    #[test]
    fn sign_normalization_hits_targets(x in weakly_multiplicative(), bits in any::<u32>()) {
        let b = x.first_multiplicative_basis().unwrap();
        let form = basic_form(&x, &b).unwrap();
        let forest = coordinatizing_path(&form.incidence());
        let targets: Vec<i8> = (0..forest.len()).map(|k| if bits >> k & 1 == 1 { -1 } else { 1 }).collect();
        let sigma = SignVector::reaching(&form, &forest, &targets).unwrap();
        let out = sign_normalize(&form, &forest, &sigma).unwrap();
        for (e, &t) in forest.edges().iter().zip(&targets) {
            let v = out.a().get(e.row, e.col);
            prop_assert_eq!(if v.is_negative() { -1 } else { 1 }, t);
        }
        prop_assert!(out.witness().maps(x.matrix(), &out.assembled()));
        prop_assert_eq!(out.diag(), form.diag());
    }

    #[test]
    fn enumeration_matches_stratum(x in weakly_multiplicative()) {
        let b = x.first_multiplicative_basis().unwrap();
        let all = enumerate_basic_reps(&x, &b).unwrap();
        prop_assert_eq!(BigUint::from(all.len()), stratum_size(&x).unwrap());
        let distinct: BTreeSet<_> = all.iter().map(|m| m.to_rows()).collect();
        prop_assert_eq!(distinct.len(), all.len());
        let table = x.full_table().unwrap();
        for m in &all {
            prop_assert_eq!(&Representation::new(m.clone()).unwrap().full_table().unwrap(), &table);
        }
    }

    #[test]
    fn forest_and_elimination(a in matrix(1..=6, 0..=6, 1)) {
        let c = incidence(&a);
        let f = coordinatizing_path(&c);
        prop_assert_eq!(f.len(), c.vertex_count() - kappa(&c));
        prop_assert!(f.is_spanning_forest_of(&c));
        let order = elimination_order(&f);
        prop_assert_eq!(order.len(), f.len());
        let replay = EliminationOrder::from_vertices(&f, &order.vertices()).unwrap();
        prop_assert_eq!(replay, order);
    }

    #[test]
    fn text_format_round_trips(m in matrix(1..=4, 0..=5, 1000)) {
        let text = format!("{} {}\n{}", m.rows(), m.cols(), if m.cols() == 0 { String::new() } else { m.to_string() });
        prop_assert_eq!(parse_matrix(&text).unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn layers_count_multiplicities(x in representation(2, 4, 3)) {
        for f in flats(&x).unwrap() {
            let layers = layers_of_flat(&x, &f).unwrap();
            prop_assert_eq!(BigInt::from(layers.len()), x.multiplicity(f.elements()).unwrap());
        }
        let p = layer_poset(&x).unwrap();
        prop_assert!(p.check_partial_order());
        prop_assert!((0..p.len()).all(|j| p.leq(p.bottom(), j)));
    }

    #[test]
    fn same_component_is_an_equivalence(x in representation(2, 3, 4), pick in any::<usize>()) {
        let s = mask_to_subset(pick as u64 % (1 << x.n()), x.n());
        let f = arimat::toric::closure(&x, &s).unwrap();
        let pts = intersection_points(&x, f.elements()).unwrap();
        let pts = &pts[..pts.len().min(6)];
        for p in pts {
            prop_assert!(same_component(&x, &f, p, p).unwrap());
        }
        for (i, p) in pts.iter().enumerate() {
            for (j, q) in pts.iter().enumerate() {
                let pq = same_component(&x, &f, p, q).unwrap();
                prop_assert_eq!(pq, same_component(&x, &f, q, p).unwrap());
                prop_assert_eq!(pq, i == j);
            }
        }
    }
}
