//! The projective line over `Z/m`.
//!
//! A point is a class of pairs `(a, b)` with `gcd(a, b, m) = 1` under
//! `(a, b) ~ (c, d)` iff `ad - bc = 0 mod m`, equivalently `(c, d)` is a
//! unit multiple of `(a, b)`. Each class is stored by its canonical
//! representative: the lexicographically least pair of residues in the
//! unit orbit. For `m = 1` there is a single class, written `(0, 0)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{crt_pair, divisors, factorize, gcd, mod_inverse};
use crate::{Error, Result};

/// Default cap on the number of points `enumerate_points` will produce.
pub const DEFAULT_POINT_BOUND: i64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ProjPoint {
    #[serde(rename = "m")]
    modulus: i64,
    a: i64,
    b: i64,
}

fn check_modulus(m: i64) -> Result<()> {
    if m < 1 {
        return Err(Error::DegenerateInput(format!("modulus must be positive, got {m}")));
    }
    Ok(())
}

fn unimodular(a: i64, b: i64, m: i64) -> bool {
    gcd(gcd(a, b), m) == 1
}

/// Lexicographic minimum of the unit orbit of a unimodular residue pair.
///
/// The orbit of `a` under units is every residue with the same gcd `g`
/// against `m`, so the first coordinate is minimised by `g mod m`. The
/// multipliers reaching it form one coset of the units `= 1 mod m/g`; the
/// scan over that coset picks the least second coordinate.
fn canonical(a: i64, b: i64, m: i64) -> (i64, i64) {
    if m == 1 {
        return (0, 0);
    }
    let a = a.rem_euclid(m);
    let b = b.rem_euclid(m);
    let g = gcd(a, m);
    let step = m / g;
    // lambda * (a/g) = 1 mod m/g
    let base = mod_inverse(a / g, step).expect("a/g is a unit mod m/g");
    let mut best = m;
    for k in 0..g {
        let lambda = base + k * step;
        if gcd(lambda, m) != 1 {
            continue;
        }
        let nb = ((lambda as i128 * b as i128) % m as i128) as i64;
        best = best.min(nb);
    }
    (g % m, best)
}

impl ProjPoint {
    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// Canonical representative `(a, b)`.
    pub fn rep(&self) -> (i64, i64) {
        (self.a, self.b)
    }

    /// Class of `(a, b)` in the projective line over `Z/m`.
    pub fn class_of(a: i64, b: i64, m: i64) -> Result<ProjPoint> {
        check_modulus(m)?;
        if !unimodular(a, b, m) {
            return Err(Error::NotUnimodular(format!("({a}, {b}) mod {m}")));
        }
        let (a, b) = canonical(a, b, m);
        Ok(ProjPoint { modulus: m, a, b })
    }

    /// A lift `(a, b)` of this point with `gcd(a, b) = 1` over `Z`.
    pub fn coprime_lift(&self) -> (i64, i64) {
        if self.modulus == 1 {
            return (1, 0);
        }
        let (a, b) = (self.a, self.b);
        if a == 0 {
            // canonical representative is (0, 1)
            return (0, 1);
        }
        let mut k = 0;
        loop {
            let lb = b + k * self.modulus;
            if gcd(a, lb) == 1 {
                return (a, lb);
            }
            k += 1;
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}] mod {}", self.a, self.b, self.modulus)
    }
}

impl FromStr for ProjPoint {
    type Err = Error;

    /// Parses `"[a:b] mod m"`.
    fn from_str(s: &str) -> Result<ProjPoint> {
        let bad = || Error::Parse(format!("expected \"[a:b] mod m\", got {s:?}"));
        let (pair, m) = s.trim().split_once("mod").ok_or_else(bad)?;
        let pair = pair.trim().strip_prefix('[').and_then(|p| p.strip_suffix(']')).ok_or_else(bad)?;
        let (a, b) = pair.split_once(':').ok_or_else(bad)?;
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        ProjPoint::class_of(parse(a)?, parse(b)?, parse(m)?)
    }
}

/// `ad - bc = 0 mod m` for two unimodular pairs.
pub fn equivalent(a: i64, b: i64, c: i64, d: i64, m: i64) -> Result<bool> {
    check_modulus(m)?;
    for (x, y) in [(a, b), (c, d)] {
        if !unimodular(x, y, m) {
            return Err(Error::NotUnimodular(format!("({x}, {y}) mod {m}")));
        }
    }
    let det = a as i128 * d as i128 - b as i128 * c as i128;
    Ok(det.rem_euclid(m as i128) == 0)
}

/// `|P^1(Z/m)| = prod p^(k-1) (p + 1)` over `p^k || m`.
pub fn cardinality(m: i64) -> Result<i64> {
    check_modulus(m)?;
    Ok(factorize(m)?
        .pairs()
        .iter()
        .map(|&(p, k)| p.pow(k - 1) * (p + 1))
        .product())
}

pub fn enumerate_points(m: i64) -> Result<Vec<ProjPoint>> {
    enumerate_points_with_bound(m, DEFAULT_POINT_BOUND)
}

/// Every point of the projective line over `Z/m`, sorted by representative.
pub fn enumerate_points_with_bound(m: i64, bound: i64) -> Result<Vec<ProjPoint>> {
    let count = cardinality(m)?;
    if count > bound {
        return Err(Error::OutOfRange(format!("{count} points over Z/{m} exceed bound {bound}")));
    }
    if m == 1 {
        return Ok(vec![ProjPoint { modulus: 1, a: 0, b: 0 }]);
    }
    // Canonical first coordinates are exactly the divisors of m (with m
    // itself written as 0).
    let mut seen = BTreeSet::new();
    for g in divisors(m)? {
        for b in 0..m {
            if gcd(g, b) == 1 {
                seen.insert(canonical(g, b, m));
            }
        }
    }
    Ok(seen.into_iter().map(|(a, b)| ProjPoint { modulus: m, a, b }).collect())
}

fn check_split_moduli(moduli: &[i64]) -> Result<()> {
    for &m in moduli {
        if m < 1 {
            return Err(Error::BadModuli(format!("nonpositive modulus {m}")));
        }
    }
    for (i, &x) in moduli.iter().enumerate() {
        for &y in &moduli[i + 1..] {
            if gcd(x, y) != 1 {
                return Err(Error::BadModuli(format!("{x} and {y} are not coprime")));
            }
        }
    }
    Ok(())
}

/// Reduction to pairwise coprime factors of the modulus.
pub fn crt_split(p: &ProjPoint, moduli: &[i64]) -> Result<Vec<ProjPoint>> {
    check_split_moduli(moduli)?;
    let prod: i128 = moduli.iter().map(|&m| m as i128).product();
    if prod != p.modulus as i128 {
        return Err(Error::BadModuli(format!(
            "moduli {moduli:?} multiply to {prod}, not {}",
            p.modulus
        )));
    }
    moduli.iter().map(|&m| ProjPoint::class_of(p.a, p.b, m)).collect()
}

/// Inverse of [`crt_split`]: the unique point modulo the product.
pub fn crt_join(points: &[ProjPoint]) -> Result<ProjPoint> {
    let moduli: Vec<i64> = points.iter().map(|p| p.modulus).collect();
    check_split_moduli(&moduli)?;
    let (mut a, mut b, mut m) = (0i64, 0i64, 1i64);
    for p in points {
        a = crt_pair(a, m, p.a, p.modulus)?;
        b = crt_pair(b, m, p.b, p.modulus)?;
        m *= p.modulus;
    }
    ProjPoint::class_of(a, b, m)
}
