use std::collections::BTreeSet;

use cotorsion::matrix;
use cotorsion::okmodules::{
    brute_force_index, enumerate_cotorsion, enumerate_index, ideal_pair_shape, invariant_ideals, invariant_pairs_of_index,
    proj_invariant_element, proj_invariant_witnesses, reconstruct, DEFAULT_WITNESS_RADIUS,
};
use cotorsion::okproj::{ok_cardinality, ok_enumerate};
use cotorsion::quadring::enumerate_ideals;
use cotorsion::{CotorsionModule, QuadIdeal, QuadInt, QuadRing};
use proptest::prelude::*;

fn rings() -> [QuadRing; 2] {
    [QuadRing::new(-1).unwrap(), QuadRing::new(-5).unwrap()]
}

#[test]
fn invariants_round_trip() {
    for ring in rings() {
        for n in 1..=40 {
            for (l, k) in invariant_pairs_of_index(ring, n).unwrap() {
                let i = k.quotient(&l);
                for p in ok_enumerate(&i).unwrap() {
                    let m = reconstruct(&l, &k, &p).unwrap();
                    assert_eq!(m.index(), n);
                    let data = proj_invariant_element(&m).unwrap();
                    assert_eq!((data.l, data.k, data.i, data.point), (l, k, i, p), "D={} n={n}", ring.d());
                }
            }
        }
    }
}

#[test]
fn enumeration_is_injective_and_sized() {
    for ring in rings() {
        for n in 1..=40 {
            for (l, k) in invariant_pairs_of_index(ring, n).unwrap() {
                let mods = enumerate_cotorsion(&l, &k).unwrap();
                let distinct: BTreeSet<_> = mods.iter().collect();
                assert_eq!(distinct.len() as i64, ok_cardinality(&k.quotient(&l)).unwrap());
                assert_eq!(distinct.len(), mods.len());
            }
        }
    }
}

#[test]
fn brute_force_matches_small_indices() {
    for ring in rings() {
        for n in 1..=12 {
            assert_eq!(brute_force_index(ring, n).unwrap(), enumerate_index(ring, n).unwrap(), "D={} n={n}", ring.d());
        }
    }
}

#[test]
fn quotient_shape_matches_invariant_ideals() {
    for ring in rings() {
        for n in 1..=12 {
            for m in enumerate_index(ring, n).unwrap() {
                let (l, k) = invariant_ideals(&m);
                assert_eq!(m.quotient_shape(), ideal_pair_shape(&l, &k));
                assert!(k.is_subset_of(&l));
                assert_eq!(l.norm() * k.norm(), m.index());
            }
        }
    }
}

/// Every module is `{(a, f(a) + b) : a in A, b in B}` for ideals `A`, `B` and
/// an `O_K`-linear `f : A -> O/B`; listing those directly is independent of
/// the invariant factor description.
fn graph_modules(ring: QuadRing, n: i64) -> BTreeSet<CotorsionModule> {
    let mut out = BTreeSet::new();
    for na in 1..=n {
        if n % na != 0 {
            continue;
        }
        for a in enumerate_ideals(ring, na).unwrap() {
            for b in enumerate_ideals(ring, n / na).unwrap() {
                let [a0, a1] = a.basis();
                let res = b.residues();
                for &r0 in &res {
                    for &r1 in &res {
                        let mut gens = vec![(a0, r0), (a1, r1)];
                        gens.extend(b.basis().iter().map(|&g| (QuadInt::ZERO, g)));
                        let rows: Vec<Vec<i64>> = gens.iter().map(|(u, v)| vec![u.x, u.y, v.x, v.y]).collect();
                        let h = matrix::hnf(&rows, 4);
                        if let Ok(m) = CotorsionModule::from_hnf(ring, h) {
                            if m.index() == n {
                                out.insert(m);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn module_counts_match_graph_description() {
    for ring in rings() {
        for n in 1..=50 {
            let graphs = graph_modules(ring, n);
            let counted: i64 = invariant_pairs_of_index(ring, n)
                .unwrap()
                .iter()
                .map(|(l, k)| ok_cardinality(&k.quotient(l)).unwrap())
                .sum();
            assert_eq!(graphs.len() as i64, counted, "D={} n={n}", ring.d());
            let listed: BTreeSet<_> = enumerate_index(ring, n).unwrap().into_iter().collect();
            assert_eq!(graphs, listed, "D={} n={n}", ring.d());
        }
    }
}

fn small_quad() -> impl Strategy<Value = QuadInt> {
    (-3i64..=3, -3i64..=3).prop_map(|(x, y)| QuadInt::new(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn witnesses_agree(
        d in prop::sample::select(vec![-1i64, -5]),
        gens in prop::collection::vec((small_quad(), small_quad()), 2..4),
    ) {
        let ring = QuadRing::new(d).unwrap();
        let m = CotorsionModule::from_generators(ring, &gens);
        prop_assume!(m.is_ok());
        let m = m.unwrap();
        prop_assume!(m.index() <= 400);
        let ws = proj_invariant_witnesses(&m, 5, DEFAULT_WITNESS_RADIUS).unwrap();
        prop_assert_eq!(ws.len(), 5);
        for w in &ws {
            prop_assert_eq!(w.point, ws[0].point);
            prop_assert!(m.contains((ring.mul(w.t, w.a), ring.mul(w.t, w.b))));
        }
        let data = proj_invariant_element(&m).unwrap();
        prop_assert_eq!(reconstruct(&data.l, &data.k, &data.point).unwrap(), m);
    }
}

#[test]
fn unit_modulus_has_single_module() {
    for ring in rings() {
        let unit = QuadIdeal::unit(ring);
        assert_eq!(enumerate_cotorsion(&unit, &unit).unwrap(), vec![CotorsionModule::full(ring)]);
    }
}
