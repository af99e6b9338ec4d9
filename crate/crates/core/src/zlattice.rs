//! Enumeration of the index-`n` sublattices of `Z^2`.
//!
//! Lattices of index `n` split into strata indexed by the divisors `d` of
//! `n` with `n/d` a square; the stratum of `d` has Smith invariants
//! `(sqrt(n/d), sqrt(n*d))` and is parameterised by the projective line over
//! `Z/d`. The Hermite-form listing in [`hnf_oracle`] is an independent check.

use serde::Serialize;

use crate::arith::{divisors, is_square, sigma};
use crate::lattice2::Lattice2;
use crate::projline::{enumerate_points, ProjPoint};
use crate::{Error, Result};

/// Default cap on the number of lattices produced by one enumeration.
pub const DEFAULT_LATTICE_BOUND: i64 = 1_000_000;

/// One stratum: Smith invariants `d1 | d2` with `d1 * d2 = n`, `d = d2/d1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Stratum {
    pub d1: i64,
    pub d2: i64,
    pub d: i64,
}

/// A lattice together with its stratum and projective invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Classified {
    #[serde(flatten)]
    pub lattice: Lattice2,
    pub stratum: Stratum,
    #[serde(serialize_with = "point_string")]
    pub point: ProjPoint,
}

fn point_string<S: serde::Serializer>(p: &ProjPoint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

pub fn strata(n: i64) -> Result<Vec<Stratum>> {
    let mut out = Vec::new();
    for d in divisors(n)? {
        if let Some(d1) = is_square(n / d) {
            out.push(Stratum { d1, d2: d1 * d, d });
        }
    }
    Ok(out)
}

pub fn enumerate_index(n: i64) -> Result<Vec<Lattice2>> {
    enumerate_index_with_bound(n, DEFAULT_LATTICE_BOUND)
}

/// All `sigma(n)` lattices of index `n`, rebuilt from their invariants and
/// sorted by Hermite form.
pub fn enumerate_index_with_bound(n: i64, bound: i64) -> Result<Vec<Lattice2>> {
    let total = sigma(n)?;
    if total > bound {
        return Err(Error::OutOfRange(format!("sigma({n}) = {total} exceeds bound {bound}")));
    }
    let mut out = Vec::with_capacity(total as usize);
    for s in strata(n)? {
        for p in enumerate_points(s.d)? {
            out.push(Lattice2::reconstruct(s.d1, s.d2, &p)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Every Hermite basis `[[r11, r12], [0, r22]]` with `r11 * r22 = n` and
/// `0 <= r12 < r22`, sorted.
pub fn hnf_oracle(n: i64) -> Result<Vec<Lattice2>> {
    let mut out = Vec::new();
    for r11 in divisors(n)? {
        let r22 = n / r11;
        for r12 in 0..r22 {
            out.push(Lattice2::from_rows((r11, r12), (0, r22))?);
        }
    }
    out.sort();
    Ok(out)
}

/// Stratum and projective invariant of a lattice.
pub fn classify(m: &Lattice2) -> Classified {
    let s = m.smith();
    Classified {
        lattice: *m,
        stratum: Stratum { d1: s.d1, d2: s.d2, d: s.ratio() },
        point: m.proj_invariant(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triples(n: i64) -> Vec<(i64, i64, i64)> {
        strata(n).unwrap().iter().map(|s| (s.d1, s.d2, s.d)).collect()
    }

    #[test]
    fn strata_examples() {
        assert_eq!(triples(1), vec![(1, 1, 1)]);
        assert_eq!(triples(4), vec![(2, 2, 1), (1, 4, 4)]);
        assert_eq!(triples(12), vec![(2, 6, 3), (1, 12, 12)]);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_index(1).unwrap(), vec![Lattice2::full()]);
        let two: Vec<_> = enumerate_index(2).unwrap().iter().map(|l| l.rows()).collect();
        assert_eq!(two, vec![[[1, 0], [0, 2]], [[1, 1], [0, 2]], [[2, 0], [0, 1]]]);
        assert_eq!(enumerate_index(4).unwrap().len(), 7);
        assert!(matches!(enumerate_index_with_bound(12, 27), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(hnf_oracle(1).unwrap(), vec![Lattice2::full()]);
        assert_eq!(hnf_oracle(2).unwrap().len(), 3);
        assert_eq!(hnf_oracle(6).unwrap().len(), 12);
    }

    #[test]
    fn classify_examples() {
        let c = classify(&Lattice2::from_rows((1, 2), (0, 4)).unwrap());
        assert_eq!((c.stratum.d1, c.stratum.d2, c.stratum.d), (1, 4, 4));
        assert_eq!(c.point.to_string(), "[1:2] mod 4");
        let c = classify(&Lattice2::from_rows((2, 0), (0, 2)).unwrap());
        assert_eq!((c.stratum.d1, c.stratum.d2, c.stratum.d), (2, 2, 1));
        assert_eq!(c.point.rep(), (0, 0));
        let m = Lattice2::from_rows((1, 0), (0, 6)).unwrap();
        let c = classify(&m);
        assert_eq!((c.stratum.d1, c.stratum.d2, c.stratum.d), (1, 6, 6));
        assert_eq!(c.point.to_string(), "[1:0] mod 6");
        assert!(m.contains((1, 0)));
    }

    #[test]
    fn classified_json() {
        let c = classify(&Lattice2::from_rows((1, 2), (0, 4)).unwrap());
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"rows":[[1,2],[0,4]],"stratum":{"d1":1,"d2":4,"d":4},"point":"[1:2] mod 4"}"#
        );
    }
}
