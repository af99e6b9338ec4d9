//! Finite-index sublattices of `Z^2`.
//!
//! A lattice `M` with `Z^2/M = Z/d1 + Z/d2` (`d1 | d2`) contains a vector
//! `d1 * (a, b)` with `gcd(a, b) = 1`, and the class `[a:b]` in the
//! projective line over `Z/(d2/d1)` does not depend on the vector chosen.
//! The triple `(d1, d2, [a:b])` determines `M`, and every triple occurs.

use std::fmt;

use serde::ser::{Serialize, Serializer};

use crate::arith::{gcd, xgcd};
use crate::matrix::{self, inverse_unimodular_2x2, Mat};
use crate::projline::ProjPoint;
use crate::{Error, Result};

/// A full-rank sublattice of `Z^2` stored by its row Hermite normal form
/// `[[r11, r12], [0, r22]]`, `r11, r22 >= 1`, `0 <= r12 < r22`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lattice2 {
    r11: i64,
    r12: i64,
    r22: i64,
}

/// Smith normal form `left * A * right = diag(d1, d2)` of the HNF basis `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithData {
    pub d1: i64,
    pub d2: i64,
    pub left: Mat,
    pub right: Mat,
}

impl SmithData {
    /// The projective invariant's modulus `d2 / d1`.
    pub fn ratio(&self) -> i64 {
        self.d2 / self.d1
    }
}

impl Lattice2 {
    /// Lattice spanned by two rows.
    pub fn from_rows(v1: (i64, i64), v2: (i64, i64)) -> Result<Lattice2> {
        let h = matrix::hnf_full(&[vec![v1.0, v1.1], vec![v2.0, v2.1]], 2)?;
        Ok(Lattice2::from_hnf(&h))
    }

    /// Lattice spanned by any number of generators.
    pub fn from_generators(gens: &[(i64, i64)]) -> Result<Lattice2> {
        let rows: Mat = gens.iter().map(|&(x, y)| vec![x, y]).collect();
        Ok(Lattice2::from_hnf(&matrix::hnf_full(&rows, 2)?))
    }

    pub(crate) fn from_hnf(h: &[Vec<i64>]) -> Lattice2 {
        Lattice2 { r11: h[0][0], r12: h[0][1], r22: h[1][1] }
    }

    /// Rows of the Hermite basis.
    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.r11, self.r12], [0, self.r22]]
    }

    pub(crate) fn basis(&self) -> Mat {
        vec![vec![self.r11, self.r12], vec![0, self.r22]]
    }

    /// `[Z^2 : M]`.
    pub fn index(&self) -> i64 {
        self.r11 * self.r22
    }

    /// `Z^2` itself.
    pub fn full() -> Lattice2 {
        Lattice2 { r11: 1, r12: 0, r22: 1 }
    }

    pub fn contains(&self, v: (i64, i64)) -> bool {
        if v.0 % self.r11 != 0 {
            return false;
        }
        let q = v.0 / self.r11;
        (v.1 - q * self.r12) % self.r22 == 0
    }

    pub fn intersect(&self, other: &Lattice2) -> Lattice2 {
        Lattice2::from_hnf(&matrix::intersect(&self.basis(), &other.basis(), 2))
    }

    pub fn smith(&self) -> SmithData {
        let s = matrix::smith(&self.basis());
        SmithData { d1: s.diag[0], d2: s.diag[1], left: s.left, right: s.right }
    }

    /// The class `[a:b]` modulo `d2/d1` with `d1 * (a, b)` in the lattice.
    ///
    /// Since `left * A = diag(d1, d2) * right^-1`, the first row of the
    /// transformed basis is `d1` times the first row of `right^-1`, which is
    /// primitive.
    pub fn proj_invariant(&self) -> ProjPoint {
        let s = self.smith();
        let inv = inverse_unimodular_2x2(&s.right);
        ProjPoint::class_of(inv[0][0], inv[0][1], s.ratio())
            .expect("row of a unimodular matrix is primitive")
    }

    /// The projective invariant found by scanning lattice vectors
    /// `d1 * (a, b)` with `gcd(a, b) = 1` and coordinates within `height`.
    ///
    /// Returns every distinct class met, sorted; a correct lattice yields
    /// exactly one. Used to cross-check [`Lattice2::proj_invariant`].
    pub fn proj_invariant_by_search(&self, height: i64) -> Result<Vec<ProjPoint>> {
        let s = self.smith();
        let d = s.ratio();
        let mut found = Vec::new();
        for x in -height..=height {
            for y in -height..=height {
                if x % s.d1 != 0 || y % s.d1 != 0 {
                    continue;
                }
                let (a, b) = (x / s.d1, y / s.d1);
                if gcd(a, b) != 1 || !self.contains((x, y)) {
                    continue;
                }
                let p = ProjPoint::class_of(a, b, d)?;
                if !found.contains(&p) {
                    found.push(p);
                }
            }
        }
        if found.is_empty() {
            return Err(Error::SearchExhausted(format!(
                "no primitive-over-d1 vector of height <= {height} in {self}"
            )));
        }
        found.sort();
        Ok(found)
    }

    /// The unique lattice with Smith invariants `(d1, d2)` and projective
    /// invariant `p`, spanned by `d1 * (a, b)` and `d2 * (z, w)` where
    /// `[[a, b], [z, w]]` has determinant one.
    pub fn reconstruct(d1: i64, d2: i64, p: &ProjPoint) -> Result<Lattice2> {
        if d1 < 1 || d2 < 1 || d2 % d1 != 0 {
            return Err(Error::BadInvariants(format!("need 1 <= d1 | d2, got d1={d1}, d2={d2}")));
        }
        if p.modulus() != d2 / d1 {
            return Err(Error::BadInvariants(format!(
                "point {p} does not live modulo d2/d1 = {}",
                d2 / d1
            )));
        }
        let (a, b) = p.coprime_lift();
        let (_, x, y) = xgcd(a, b)?;
        // a*x + b*y = 1, so [[a, b], [-y, x]] has determinant one
        Lattice2::from_rows((d1 * a, d1 * b), (-d2 * y, d2 * x))
    }
}

impl fmt::Display for Lattice2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [0, {}]]", self.r11, self.r12, self.r22)
    }
}

impl Serialize for Lattice2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Lattice2", 1)?;
        st.serialize_field("rows", &self.rows())?;
        st.end()
    }
}
