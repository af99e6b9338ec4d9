use std::collections::BTreeSet;

use cotorsion::okproj::{ok_cardinality, ok_class_of, ok_crt_join, ok_crt_split, ok_enumerate, residue_units};
use cotorsion::quadring::{enumerate_ideals, factor_ideal, is_principal};
use cotorsion::{QuadIdeal, QuadInt, QuadRing};

fn rings() -> [QuadRing; 2] {
    [QuadRing::new(-1).unwrap(), QuadRing::new(-5).unwrap()]
}

fn ideals_up_to(ring: QuadRing, n: i64) -> Vec<QuadIdeal> {
    (1..=n).flat_map(|k| enumerate_ideals(ring, k).unwrap()).collect()
}

#[test]
fn norm_is_multiplicative() {
    for ring in rings() {
        let ideals = ideals_up_to(ring, 30);
        for a in &ideals {
            for b in &ideals {
                assert_eq!(a.mul(b).norm(), a.norm() * b.norm());
            }
        }
    }
}

#[test]
fn factorization_reassembles() {
    for ring in rings() {
        for i in ideals_up_to(ring, 50) {
            let f = factor_ideal(&i).unwrap();
            let back = f.iter().fold(QuadIdeal::unit(ring), |acc, (p, e)| acc.mul(&p.pow(*e)));
            assert_eq!(back, i);
        }
    }
}

/// Ideals are found by brute force as the `w`-stable sublattices of `Z^2`.
#[test]
fn enumeration_matches_lattice_search() {
    for ring in rings() {
        for n in 1..=50 {
            let mut brute = BTreeSet::new();
            for m in cotorsion::zlattice::hnf_oracle(n).unwrap() {
                if let Ok(i) = QuadIdeal::from_hnf(ring, m) {
                    brute.insert(i);
                }
            }
            let listed: BTreeSet<_> = enumerate_ideals(ring, n).unwrap().into_iter().collect();
            assert_eq!(listed, brute, "D={} n={n}", ring.d());
        }
    }
}

#[test]
fn comaximal_iff_disjoint_support() {
    for ring in rings() {
        let ideals = ideals_up_to(ring, 50);
        for a in &ideals {
            let pa: BTreeSet<_> = factor_ideal(a).unwrap().into_iter().map(|(p, _)| p).collect();
            for b in &ideals {
                let pb: BTreeSet<_> = factor_ideal(b).unwrap().into_iter().map(|(p, _)| p).collect();
                assert_eq!(a.sum(b).is_unit(), pa.is_disjoint(&pb));
            }
        }
    }
}

#[test]
fn principality_in_class_number_two() {
    let ring = QuadRing::new(-5).unwrap();
    let small: Vec<QuadIdeal> =
        [2, 3].iter().flat_map(|&n| enumerate_ideals(ring, n).unwrap()).filter(|p| p.norm() <= 3).collect();
    assert_eq!(small.len(), 3);
    for p in &small {
        assert_eq!(is_principal(p), None, "{p}");
    }
    for a in &small {
        for b in &small {
            let prod = a.mul(b);
            let generator = is_principal(&prod).expect("product of two non-principal classes");
            assert_eq!(QuadIdeal::principal(ring, generator).unwrap(), prod);
        }
    }
    let six = enumerate_ideals(ring, 6).unwrap();
    assert!(six.iter().any(|i| i.contains(QuadInt::new(1, 1)) && is_principal(i) == Some(QuadInt::new(1, 1))));
    for i in ideals_up_to(ring, 50) {
        if let Some(g) = is_principal(&i) {
            assert_eq!(QuadIdeal::principal(ring, g).unwrap(), i);
        }
    }
}

#[test]
fn projective_line_cardinality() {
    for ring in rings() {
        for i in ideals_up_to(ring, 30) {
            let pts = ok_enumerate(&i).unwrap();
            assert_eq!(pts.len() as i64, ok_cardinality(&i).unwrap(), "{i}");
            assert_eq!(pts.iter().collect::<BTreeSet<_>>().len(), pts.len());
        }
    }
}

#[test]
fn projective_line_crt_round_trips() {
    for ring in rings() {
        for i in ideals_up_to(ring, 30) {
            let f = factor_ideal(&i).unwrap();
            let parts: Vec<QuadIdeal> = f.iter().map(|(p, e)| p.pow(*e)).collect();
            // every way of grouping the prime-power parts into two comaximal factors
            for mask in 0..(1u32 << parts.len()) {
                let unit = QuadIdeal::unit(ring);
                let (mut a, mut b) = (unit, unit);
                for (j, part) in parts.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        a = a.mul(part);
                    } else {
                        b = b.mul(part);
                    }
                }
                let pts = ok_enumerate(&i).unwrap();
                let mut images = BTreeSet::new();
                for p in &pts {
                    let split = ok_crt_split(p, &[a, b]).unwrap();
                    assert_eq!(ok_crt_join(&split).unwrap(), *p);
                    images.insert(split);
                }
                assert_eq!(images.len(), pts.len());
            }
        }
    }
}

#[test]
fn unit_scaling_invariance() {
    for ring in rings() {
        for i in ideals_up_to(ring, 12) {
            let res = i.residues();
            let units = residue_units(&i);
            for &a in &res {
                for &b in &res {
                    let Ok(p) = ok_class_of(a, b, &i) else { continue };
                    for &u in &units {
                        assert_eq!(ok_class_of(ring.mul(u, a), ring.mul(u, b), &i).unwrap(), p);
                    }
                }
            }
        }
    }
}
