use std::collections::BTreeSet;

use cotorsion::arith::{divisors, gcd, sigma};
use cotorsion::matrix::quotient_invariants;
use cotorsion::projline::{cardinality, crt_join, crt_split, enumerate_points};
use cotorsion::zlattice::{classify, enumerate_index, hnf_oracle, strata};
use cotorsion::Lattice2;
use proptest::prelude::*;

#[test]
fn reconstruct_round_trip_and_injectivity() {
    for d2 in 1..=200i64 {
        for d1 in divisors(d2).unwrap() {
            if d1 * d2 > 200 {
                continue;
            }
            let mut seen = BTreeSet::new();
            for p in enumerate_points(d2 / d1).unwrap() {
                let m = Lattice2::reconstruct(d1, d2, &p).unwrap();
                let s = m.smith();
                assert_eq!((s.d1, s.d2), (d1, d2));
                assert_eq!(m.proj_invariant(), p);
                assert!(seen.insert(m), "two points give {m}");
            }
        }
    }
}

#[test]
fn invariant_agrees_with_vector_search() {
    for n in 1..=40 {
        for m in hnf_oracle(n).unwrap() {
            let found = m.proj_invariant_by_search(2 * n).unwrap();
            assert_eq!(found, vec![m.proj_invariant()], "{m}");
        }
    }
}

#[test]
fn enumeration_equals_oracle() {
    for n in 1..=300 {
        let listed = enumerate_index(n).unwrap();
        assert_eq!(listed.len() as i64, sigma(n).unwrap());
        assert_eq!(listed, hnf_oracle(n).unwrap(), "n={n}");
    }
}

#[test]
fn strata_sum_to_sigma() {
    for n in 1..=3000 {
        let total: i64 = strata(n).unwrap().iter().map(|s| cardinality(s.d).unwrap()).sum();
        assert_eq!(total, sigma(n).unwrap());
    }
}

#[test]
fn quotient_shape_and_cyclicity() {
    for n in 1..=120 {
        for m in hnf_oracle(n).unwrap() {
            let c = classify(&m);
            let basis: Vec<Vec<i64>> = m.rows().iter().map(|r| r.to_vec()).collect();
            let expected: Vec<i64> = [c.stratum.d1, c.stratum.d2].into_iter().filter(|&d| d != 1).collect();
            assert_eq!(quotient_invariants(&basis), expected);
            let cyclic = quotient_invariants(&basis).len() <= 1;
            assert_eq!(cyclic, c.stratum.d1 == 1);
        }
    }
}

#[test]
fn projective_line_structure() {
    for m in 1..=300 {
        assert_eq!(enumerate_points(m).unwrap().len() as i64, cardinality(m).unwrap());
    }
    for m in 2..=300i64 {
        for m1 in divisors(m).unwrap() {
            let m2 = m / m1;
            if m1 == 1 || m2 == 1 || gcd(m1, m2) != 1 {
                continue;
            }
            let points = enumerate_points(m).unwrap();
            let mut images = BTreeSet::new();
            for p in &points {
                let parts = crt_split(p, &[m1, m2]).unwrap();
                assert_eq!(crt_join(&parts).unwrap(), *p);
                images.insert(parts);
            }
            assert_eq!(images.len(), points.len());
            assert_eq!(images.len() as i64, cardinality(m1).unwrap() * cardinality(m2).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 2000, ..ProptestConfig::default() })]

    #[test]
    fn random_lattice_round_trip(a in -30i64..=30, b in -30i64..=30, c in -30i64..=30, d in -30i64..=30) {
        let m = Lattice2::from_rows((a, b), (c, d));
        prop_assume!(m.is_ok());
        let m = m.unwrap();
        let cl = classify(&m);
        prop_assert_eq!(cl.stratum.d1 * cl.stratum.d2, (a * d - b * c).abs());
        prop_assert_eq!(Lattice2::reconstruct(cl.stratum.d1, cl.stratum.d2, &cl.point).unwrap(), m);
        // any generating set of the same lattice gives the same invariants
        let other = Lattice2::from_generators(&[(a + c, b + d), (c, d), (2 * a, 2 * b)]).unwrap();
        prop_assert_eq!(classify(&other), cl);
    }
}
