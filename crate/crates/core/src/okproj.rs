//! The projective line over `O_K / I` for a nonzero ideal `I`.
//!
//! A point is a pair `(a, b)` with `<a> + <b> + I = O_K`, up to scaling by
//! units of `O_K / I`. Points are stored by canonical residues, and the
//! representative is the lexicographic minimum of the orbit in reduced
//! coordinates `(a.x, a.y, b.x, b.y)`.

use std::collections::HashSet;
use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::arith::BoxSearch;
use crate::quadring::{factor_ideal, ideal_crt, QuadIdeal, QuadInt, QuadRing};
use crate::{Error, Result};

/// Largest ideal norm [`ok_enumerate`] accepts by default.
pub const DEFAULT_OK_NORM_BOUND: i64 = 2_000;
/// Coefficient box for [`OkProjPoint::coprime_lift`].
pub const DEFAULT_LIFT_RADIUS: i64 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OkProjPoint {
    modulus: QuadIdeal,
    a: QuadInt,
    b: QuadInt,
}

/// Residues of `O_K / I` that are units.
pub fn residue_units(i: &QuadIdeal) -> Vec<QuadInt> {
    i.residues().into_iter().filter(|&r| i.is_coprime_to(r)).collect()
}

fn is_unimodular(a: QuadInt, b: QuadInt, i: &QuadIdeal) -> bool {
    let ring = i.ring();
    let mut gens = vec![a, b];
    gens.extend(i.basis());
    QuadIdeal::from_generators(ring, &gens).is_ok_and(|j| j.is_unit())
}

fn canonical(a: QuadInt, b: QuadInt, i: &QuadIdeal, units: &[QuadInt]) -> (QuadInt, QuadInt) {
    let ring = i.ring();
    units
        .iter()
        .map(|&u| (i.reduce(ring.mul(u, a)), i.reduce(ring.mul(u, b))))
        .min()
        .unwrap_or((QuadInt::ZERO, QuadInt::ZERO))
}

impl OkProjPoint {
    pub fn ring(&self) -> QuadRing {
        self.modulus.ring()
    }

    pub fn modulus(&self) -> QuadIdeal {
        self.modulus
    }

    pub fn rep(&self) -> (QuadInt, QuadInt) {
        (self.a, self.b)
    }

    /// A pair `(a', b')` congruent to the representative modulo `I` with
    /// `<a'> + <b'> = O_K`.
    pub fn coprime_lift(&self) -> Result<(QuadInt, QuadInt)> {
        self.coprime_lift_with_radius(DEFAULT_LIFT_RADIUS)
    }

    pub fn coprime_lift_with_radius(&self, radius: i64) -> Result<(QuadInt, QuadInt)> {
        let ring = self.ring();
        let [g0, g1] = self.modulus.basis();
        for c in BoxSearch::new(4, radius) {
            let a = self.a + g0.scale(c[0]) + g1.scale(c[1]);
            let b = self.b + g0.scale(c[2]) + g1.scale(c[3]);
            if QuadIdeal::from_generators(ring, &[a, b]).is_ok_and(|j| j.is_unit()) {
                return Ok((a, b));
            }
        }
        Err(Error::SearchExhausted(format!("no coprime lift of {self} within box {radius}")))
    }
}

/// Canonical point of the class of `(a, b)` modulo `I`.
pub fn ok_class_of(a: QuadInt, b: QuadInt, i: &QuadIdeal) -> Result<OkProjPoint> {
    let (a, b) = (i.reduce(a), i.reduce(b));
    if !is_unimodular(a, b, i) {
        return Err(Error::NotUnimodular(format!("<{a}> + <{b}> + {i} is not the unit ideal")));
    }
    let (a, b) = canonical(a, b, i, &residue_units(i));
    Ok(OkProjPoint { modulus: *i, a, b })
}

/// `(a, b) ~ (c, d)` modulo `I`, tested as `ad - bc in I`.
pub fn ok_equivalent(p: (QuadInt, QuadInt), q: (QuadInt, QuadInt), i: &QuadIdeal) -> bool {
    let ring = i.ring();
    i.contains(ring.mul(p.0, q.1) - ring.mul(p.1, q.0))
}

/// `prod (N^k + N^(k-1))` over the prime factorization of `I`.
pub fn ok_cardinality(i: &QuadIdeal) -> Result<i64> {
    Ok(factor_ideal(i)?
        .iter()
        .map(|(p, k)| {
            let n = p.norm();
            n.pow(*k) + n.pow(k - 1)
        })
        .product())
}

pub fn ok_enumerate(i: &QuadIdeal) -> Result<Vec<OkProjPoint>> {
    ok_enumerate_with_bound(i, DEFAULT_OK_NORM_BOUND)
}

/// Every point of the projective line over `O_K / I`, sorted.
pub fn ok_enumerate_with_bound(i: &QuadIdeal, bound: i64) -> Result<Vec<OkProjPoint>> {
    if i.norm() > bound {
        return Err(Error::OutOfRange(format!("N({i}) = {} exceeds bound {bound}", i.norm())));
    }
    let ring = i.ring();
    let residues = i.residues();
    let units = residue_units(i);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &a in &residues {
        for &b in &residues {
            if seen.contains(&(a, b)) || !is_unimodular(a, b, i) {
                continue;
            }
            let orbit: Vec<(QuadInt, QuadInt)> = units
                .iter()
                .map(|&u| (i.reduce(ring.mul(u, a)), i.reduce(ring.mul(u, b))))
                .collect();
            let (ma, mb) = orbit.iter().copied().min().unwrap_or((a, b));
            seen.extend(orbit);
            seen.insert((a, b));
            out.push(OkProjPoint { modulus: *i, a: ma, b: mb });
        }
    }
    out.sort();
    Ok(out)
}

fn check_factors(modulus: &QuadIdeal, factors: &[QuadIdeal]) -> Result<()> {
    for (k, f) in factors.iter().enumerate() {
        for g in &factors[k + 1..] {
            if !f.sum(g).is_unit() {
                return Err(Error::NonComaximal(format!("{f} + {g} is not the unit ideal")));
            }
        }
    }
    let prod = factors.iter().fold(QuadIdeal::unit(modulus.ring()), |acc, f| acc.mul(f));
    if prod != *modulus {
        return Err(Error::BadProduct(format!("product of factors is {prod}, not {modulus}")));
    }
    Ok(())
}

/// Images of `p` under reduction to each factor of a comaximal splitting of
/// its modulus.
pub fn ok_crt_split(p: &OkProjPoint, factors: &[QuadIdeal]) -> Result<Vec<OkProjPoint>> {
    check_factors(&p.modulus, factors)?;
    factors.iter().map(|f| ok_class_of(p.a, p.b, f)).collect()
}

/// Inverse of [`ok_crt_split`]: the point modulo the product of the moduli.
pub fn ok_crt_join(points: &[OkProjPoint]) -> Result<OkProjPoint> {
    let Some(first) = points.first() else {
        return Err(Error::DegenerateInput("nothing to join".into()));
    };
    let ring = first.ring();
    let factors: Vec<QuadIdeal> = points.iter().map(|p| p.modulus).collect();
    let modulus = factors.iter().fold(QuadIdeal::unit(ring), |acc, f| acc.mul(f));
    check_factors(&modulus, &factors)?;
    let a = ideal_crt(&points.iter().map(|p| (p.a, p.modulus)).collect::<Vec<_>>())?;
    let b = ideal_crt(&points.iter().map(|p| (p.b, p.modulus)).collect::<Vec<_>>())?;
    ok_class_of(a, b, &modulus)
}

impl fmt::Display for OkProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}] mod {}", self.a, self.b, self.modulus)
    }
}

impl Serialize for OkProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("OkProjPoint", 4)?;
        st.serialize_field("D", &self.ring().d())?;
        st.serialize_field("I", &self.modulus.hnf().rows())?;
        st.serialize_field("a", &self.a)?;
        st.serialize_field("b", &self.b)?;
        st.end()
    }
}
