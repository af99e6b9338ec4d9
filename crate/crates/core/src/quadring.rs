//! Maximal orders of imaginary quadratic fields and their ideals.
//!
//! `O_K = Z[w]` with `w = sqrt(D)` for `D = 2, 3 mod 4` and
//! `w = (1 + sqrt(D))/2` for `D = 1 mod 4`. Elements are `x + y*w`; a
//! nonzero ideal is stored by the Hermite basis of its `Z`-lattice in the
//! coordinates `(1, w)`, so ideal equality is matrix equality and the norm
//! is the determinant.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::arith::{factorize, isqrt, BoxSearch};
use crate::lattice2::Lattice2;
use crate::matrix::{self, Mat};
use crate::{Error, Result};

/// Default coefficient box for [`element_avoiding`].
pub const DEFAULT_AVOID_RADIUS: i64 = 20;
/// Default cap on the number of ideals [`enumerate_ideals`] will build.
pub const DEFAULT_IDEAL_BOUND: usize = 100_000;

/// The ring of integers of `Q(sqrt(D))`, `D < 0` squarefree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadRing {
    d: i64,
}

/// The element `x + y*w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QuadInt {
    pub x: i64,
    pub y: i64,
}

impl QuadInt {
    pub const ZERO: QuadInt = QuadInt { x: 0, y: 0 };
    pub const ONE: QuadInt = QuadInt { x: 1, y: 0 };
    pub const OMEGA: QuadInt = QuadInt { x: 0, y: 1 };

    pub fn new(x: i64, y: i64) -> QuadInt {
        QuadInt { x, y }
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn coords(&self) -> [i64; 2] {
        [self.x, self.y]
    }

    pub fn scale(&self, k: i64) -> QuadInt {
        QuadInt { x: self.x * k, y: self.y * k }
    }
}

impl Add for QuadInt {
    type Output = QuadInt;
    fn add(self, o: QuadInt) -> QuadInt {
        QuadInt { x: self.x + o.x, y: self.y + o.y }
    }
}

impl Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, o: QuadInt) -> QuadInt {
        QuadInt { x: self.x - o.x, y: self.y - o.y }
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt { x: -self.x, y: -self.y }
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = match self.y {
            1 => "w".to_string(),
            -1 => "-w".to_string(),
            y => format!("{y}*w"),
        };
        match (self.x, self.y) {
            (x, 0) => write!(f, "{x}"),
            (0, _) => write!(f, "{w}"),
            (x, y) if y < 0 => write!(f, "{x}{w}"),
            (x, _) => write!(f, "{x}+{w}"),
        }
    }
}

impl FromStr for QuadInt {
    type Err = Error;

    /// Parses sums of integer and `w` terms such as `"3"`, `"-w"`,
    /// `"1+2*w"`, `"-5-3w"`.
    fn from_str(s: &str) -> Result<QuadInt> {
        let bad = || Error::Parse(format!("cannot parse {s:?} as x+y*w"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, c) in t.char_indices() {
            if (c == '+' || c == '-') && i > start {
                terms.push(&t[start..i]);
                start = i;
            }
        }
        terms.push(&t[start..]);
        let mut out = QuadInt::ZERO;
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            if body.is_empty() {
                return Err(bad());
            }
            if let Some(coef) = body.strip_suffix('w') {
                let coef = coef.strip_suffix('*').unwrap_or(coef);
                let k = if coef.is_empty() { 1 } else { coef.parse::<i64>().map_err(|_| bad())? };
                out.y += sign * k;
            } else {
                out.x += sign * body.parse::<i64>().map_err(|_| bad())?;
            }
        }
        Ok(out)
    }
}

impl Serialize for QuadInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

fn is_squarefree(n: i64) -> Result<bool> {
    Ok(factorize(n.abs())?.pairs().iter().all(|&(_, e)| e == 1))
}

impl QuadRing {
    pub fn new(d: i64) -> Result<QuadRing> {
        if d >= 0 || !is_squarefree(d)? {
            return Err(Error::DegenerateInput(format!(
                "D must be a negative squarefree integer, got {d}"
            )));
        }
        Ok(QuadRing { d })
    }

    pub fn gaussian() -> QuadRing {
        QuadRing { d: -1 }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// Trace of `w`: the minimal polynomial is `x^2 - trace*x + norm`.
    pub fn trace_omega(&self) -> i64 {
        if self.d.rem_euclid(4) == 1 {
            1
        } else {
            0
        }
    }

    pub fn norm_omega(&self) -> i64 {
        if self.d.rem_euclid(4) == 1 {
            (1 - self.d) / 4
        } else {
            -self.d
        }
    }

    /// Field discriminant.
    pub fn disc(&self) -> i64 {
        if self.d.rem_euclid(4) == 1 {
            self.d
        } else {
            4 * self.d
        }
    }

    pub fn mul(&self, a: QuadInt, b: QuadInt) -> QuadInt {
        let (t, n) = (self.trace_omega(), self.norm_omega());
        // w^2 = t*w - n
        QuadInt {
            x: a.x * b.x - n * a.y * b.y,
            y: a.x * b.y + a.y * b.x + t * a.y * b.y,
        }
    }

    pub fn pow(&self, a: QuadInt, k: u32) -> QuadInt {
        (0..k).fold(QuadInt::ONE, |acc, _| self.mul(acc, a))
    }

    pub fn norm(&self, a: QuadInt) -> i64 {
        a.x * a.x + self.trace_omega() * a.x * a.y + self.norm_omega() * a.y * a.y
    }

    pub fn conj(&self, a: QuadInt) -> QuadInt {
        QuadInt { x: a.x + self.trace_omega() * a.y, y: -a.y }
    }

    /// `a / b` when `b` divides `a` in `O_K`.
    pub fn div_exact(&self, a: QuadInt, b: QuadInt) -> Option<QuadInt> {
        let n = self.norm(b);
        if n == 0 {
            return None;
        }
        let num = self.mul(a, self.conj(b));
        (num.x % n == 0 && num.y % n == 0).then(|| QuadInt { x: num.x / n, y: num.y / n })
    }

    /// Matrix of multiplication by `b` acting on row coordinates.
    pub(crate) fn mul_matrix(&self, b: QuadInt) -> Mat {
        let wb = self.mul(QuadInt::OMEGA, b);
        vec![vec![b.x, b.y], vec![wb.x, wb.y]]
    }

    /// The unit group of `O_K`.
    pub fn units(&self) -> Vec<QuadInt> {
        let mut out = vec![QuadInt::ONE, -QuadInt::ONE];
        match self.d {
            -1 => out.extend([QuadInt::OMEGA, -QuadInt::OMEGA]),
            -3 => {
                let w2 = self.mul(QuadInt::OMEGA, QuadInt::OMEGA);
                out.extend([QuadInt::OMEGA, -QuadInt::OMEGA, w2, -w2]);
            }
            _ => {}
        }
        out
    }
}

impl fmt::Display for QuadRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.d)
    }
}

/// A nonzero ideal of `O_K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadIdeal {
    ring: QuadRing,
    hnf: Lattice2,
}

impl QuadIdeal {
    pub fn unit(ring: QuadRing) -> QuadIdeal {
        QuadIdeal { ring, hnf: Lattice2::full() }
    }

    pub fn from_generators(ring: QuadRing, gens: &[QuadInt]) -> Result<QuadIdeal> {
        let mut rows: Mat = Vec::with_capacity(2 * gens.len());
        for &g in gens {
            let wg = ring.mul(QuadInt::OMEGA, g);
            rows.push(g.coords().to_vec());
            rows.push(wg.coords().to_vec());
        }
        QuadIdeal::from_rows(ring, &rows)
    }

    pub fn principal(ring: QuadRing, g: QuadInt) -> Result<QuadIdeal> {
        QuadIdeal::from_generators(ring, &[g])
    }

    /// Ideal spanned over `Z` by the given coordinate rows, which must already
    /// be closed under multiplication by `w`.
    fn from_rows(ring: QuadRing, rows: &[Vec<i64>]) -> Result<QuadIdeal> {
        let h = matrix::hnf(rows, 2);
        match h.len() {
            0 => Err(Error::ZeroIdeal("all generators are zero".into())),
            2 => Ok(QuadIdeal { ring, hnf: Lattice2::from_hnf(&h) }),
            _ => unreachable!("a nonzero w-stable sublattice has full rank"),
        }
    }

    /// Ideal with the given Hermite basis; fails unless the lattice is
    /// closed under multiplication by `w`.
    pub fn from_hnf(ring: QuadRing, hnf: Lattice2) -> Result<QuadIdeal> {
        let ideal = QuadIdeal { ring, hnf };
        for b in ideal.basis() {
            if !ideal.contains(ring.mul(QuadInt::OMEGA, b)) {
                return Err(Error::BadInvariants(format!("{hnf} is not an ideal of {ring}")));
            }
        }
        Ok(ideal)
    }

    pub fn ring(&self) -> QuadRing {
        self.ring
    }

    pub fn hnf(&self) -> Lattice2 {
        self.hnf
    }

    /// `Z`-basis, read off the Hermite rows.
    pub fn basis(&self) -> [QuadInt; 2] {
        let [[a, b], [_, c]] = self.hnf.rows();
        [QuadInt::new(a, b), QuadInt::new(0, c)]
    }

    pub(crate) fn basis_rows(&self) -> Mat {
        self.basis().iter().map(|b| b.coords().to_vec()).collect()
    }

    /// `N(I) = |O_K / I|`.
    pub fn norm(&self) -> i64 {
        self.hnf.index()
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    pub fn contains(&self, a: QuadInt) -> bool {
        self.hnf.contains((a.x, a.y))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &QuadIdeal) -> bool {
        self.basis().iter().all(|&b| other.contains(b))
    }

    pub fn mul(&self, other: &QuadIdeal) -> QuadIdeal {
        let mut rows = Vec::with_capacity(4);
        for a in self.basis() {
            for b in other.basis() {
                rows.push(self.ring.mul(a, b).coords().to_vec());
            }
        }
        QuadIdeal::from_rows(self.ring, &rows).expect("product of nonzero ideals")
    }

    pub fn pow(&self, k: u32) -> QuadIdeal {
        (0..k).fold(QuadIdeal::unit(self.ring), |acc, _| acc.mul(self))
    }

    pub fn sum(&self, other: &QuadIdeal) -> QuadIdeal {
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        QuadIdeal::from_rows(self.ring, &rows).expect("sum of nonzero ideals")
    }

    pub fn intersect(&self, other: &QuadIdeal) -> QuadIdeal {
        QuadIdeal { ring: self.ring, hnf: self.hnf.intersect(&other.hnf) }
    }

    /// The colon ideal `(self : other) = {x : x * other ⊆ self}`.
    pub fn quotient(&self, other: &QuadIdeal) -> QuadIdeal {
        let target = self.basis_rows();
        let mut acc: Option<Mat> = None;
        for b in other.basis() {
            let pre = matrix::preimage(&self.ring.mul_matrix(b), &target, 2);
            acc = Some(match acc {
                None => pre,
                Some(prev) => matrix::intersect(&prev, &pre, 2),
            });
        }
        let h = acc.expect("ideal basis has two elements");
        QuadIdeal { ring: self.ring, hnf: Lattice2::from_hnf(&h) }
    }

    /// Canonical residue of `a` modulo the ideal: coordinates reduced into
    /// `[0, r11) x [0, r22)` against the Hermite basis.
    pub fn reduce(&self, a: QuadInt) -> QuadInt {
        let [[r11, r12], [_, r22]] = self.hnf.rows();
        let q = a.x.div_euclid(r11);
        let y = a.y - q * r12;
        QuadInt { x: a.x - q * r11, y: y.rem_euclid(r22) }
    }

    /// All canonical residues of `O_K / I`, in coordinate order.
    pub fn residues(&self) -> Vec<QuadInt> {
        let [[r11, _], [_, r22]] = self.hnf.rows();
        (0..r11).flat_map(|x| (0..r22).map(move |y| QuadInt::new(x, y))).collect()
    }

    /// `<a> + I = O_K`.
    pub fn is_coprime_to(&self, a: QuadInt) -> bool {
        let mut rows = self.basis_rows();
        rows.push(a.coords().to_vec());
        rows.push(self.ring.mul(QuadInt::OMEGA, a).coords().to_vec());
        matrix::hnf(&rows, 2) == vec![vec![1, 0], vec![0, 1]]
    }
}

impl fmt::Display for QuadIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [g0, g1] = self.basis();
        write!(f, "<{g0}, {g1}>")
    }
}

impl Serialize for QuadIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("QuadIdeal", 2)?;
        st.serialize_field("D", &self.ring.d)?;
        st.serialize_field("hnf", &self.hnf.rows())?;
        st.end()
    }
}

/// How a rational prime decomposes in `O_K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Splitting {
    Split,
    Inert,
    Ramified,
}

/// A prime ideal above a rational prime with its ramification index and
/// residue degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeAbove {
    pub ideal: QuadIdeal,
    pub p: i64,
    pub splitting: Splitting,
    pub e: u32,
    pub f: u32,
}

fn mod_pow(mut b: i128, mut e: i128, m: i128) -> i128 {
    let mut r = 1i128;
    b = b.rem_euclid(m);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Square root of a quadratic residue `a` modulo an odd prime (Tonelli-Shanks).
fn sqrt_mod(a: i64, p: i64) -> i64 {
    let (a, pw) = (a.rem_euclid(p) as i128, p as i128);
    if a == 0 {
        return 0;
    }
    let (mut q, mut s) = (pw - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..pw).find(|&z| mod_pow(z, (pw - 1) / 2, pw) == pw - 1).expect("nonresidue exists");
    let (mut m, mut c, mut t, mut r) = (s, mod_pow(z, q, pw), mod_pow(a, q, pw), mod_pow(a, (q + 1) / 2, pw));
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = tt * tt % pw;
            i += 1;
        }
        let b = mod_pow(c, 1 << (m - i - 1), pw);
        m = i;
        c = b * b % pw;
        t = t * c % pw;
        r = r * b % pw;
    }
    r as i64
}

/// Roots of the minimal polynomial of `w` modulo `p`, ascending, without
/// multiplicity.
fn omega_roots_mod(ring: QuadRing, p: i64) -> Vec<i64> {
    let (t, n) = (ring.trace_omega(), ring.norm_omega());
    if p == 2 {
        return (0..2).filter(|&x| (x * x - t * x + n).rem_euclid(2) == 0).collect();
    }
    let disc = ring.disc().rem_euclid(p);
    let legendre = mod_pow(disc as i128, ((p - 1) / 2) as i128, p as i128);
    if disc != 0 && legendre != 1 {
        return Vec::new();
    }
    let s = sqrt_mod(disc, p);
    let inv2 = (p + 1) / 2;
    let mut roots: Vec<i64> = [(t + s), (t - s)]
        .iter()
        .map(|&v| (v.rem_euclid(p) as i128 * inv2 as i128 % p as i128) as i64)
        .collect();
    roots.sort_unstable();
    roots.dedup();
    roots
}

/// The prime ideals above the rational prime `p`.
pub fn primes_above(ring: QuadRing, p: i64) -> Result<Vec<PrimeAbove>> {
    if !crate::arith::is_prime(p) {
        return Err(Error::DegenerateInput(format!("{p} is not prime")));
    }
    let roots = omega_roots_mod(ring, p);
    let ideal_at = |r: i64| QuadIdeal::from_generators(ring, &[QuadInt::new(p, 0), QuadInt::new(-r, 1)]);
    Ok(match roots.len() {
        0 => vec![PrimeAbove {
            ideal: QuadIdeal::principal(ring, QuadInt::new(p, 0))?,
            p,
            splitting: Splitting::Inert,
            e: 1,
            f: 2,
        }],
        1 if ring.disc() % p == 0 => vec![PrimeAbove {
            ideal: ideal_at(roots[0])?,
            p,
            splitting: Splitting::Ramified,
            e: 2,
            f: 1,
        }],
        _ => {
            let mut v = roots
                .iter()
                .map(|&r| {
                    Ok(PrimeAbove { ideal: ideal_at(r)?, p, splitting: Splitting::Split, e: 1, f: 1 })
                })
                .collect::<Result<Vec<_>>>()?;
            v.sort_by_key(|pa| pa.ideal);
            v
        }
    })
}

/// Prime factorization `I = prod P_i^e_i`, primes ordered by norm then basis.
pub fn factor_ideal(ideal: &QuadIdeal) -> Result<Vec<(QuadIdeal, u32)>> {
    let mut out = Vec::new();
    for p in factorize(ideal.norm())?.primes() {
        for pa in primes_above(ideal.ring, p)? {
            let mut rest = *ideal;
            let mut e = 0;
            while rest.is_subset_of(&pa.ideal) {
                rest = rest.quotient(&pa.ideal);
                e += 1;
            }
            if e > 0 {
                out.push((pa.ideal, e));
            }
        }
    }
    out.sort_by_key(|(q, _)| (q.norm(), *q));
    Ok(out)
}

pub fn enumerate_ideals(ring: QuadRing, norm: i64) -> Result<Vec<QuadIdeal>> {
    enumerate_ideals_with_bound(ring, norm, DEFAULT_IDEAL_BOUND)
}

/// Every ideal of the given norm, sorted by Hermite basis.
pub fn enumerate_ideals_with_bound(ring: QuadRing, norm: i64, bound: usize) -> Result<Vec<QuadIdeal>> {
    let mut acc = vec![QuadIdeal::unit(ring)];
    for &(p, k) in factorize(norm)?.pairs() {
        let above = primes_above(ring, p)?;
        let local: Vec<QuadIdeal> = match above[0].splitting {
            Splitting::Split => {
                let (q, qbar) = (above[0].ideal, above[1].ideal);
                (0..=k).map(|i| q.pow(i).mul(&qbar.pow(k - i))).collect()
            }
            Splitting::Inert if k % 2 == 0 => vec![above[0].ideal.pow(k / 2)],
            Splitting::Inert => Vec::new(),
            Splitting::Ramified => vec![above[0].ideal.pow(k)],
        };
        if acc.len() * local.len() > bound {
            return Err(Error::OutOfRange(format!("more than {bound} ideals of norm {norm}")));
        }
        acc = acc.iter().flat_map(|a| local.iter().map(move |b| a.mul(b))).collect();
    }
    acc.sort();
    Ok(acc)
}

fn zigzag_key(c: i64) -> i64 {
    if c > 0 {
        2 * c - 1
    } else {
        -2 * c
    }
}

/// A generator of the ideal if it is principal.
///
/// A generator is an element of the ideal whose norm equals the ideal's
/// norm; the norm form is positive definite, so the search region is
/// finite. Among the generators (which differ by units) the one with the
/// smallest `w`-coefficient, then `1`-coefficient, in the order
/// `0, 1, -1, 2, ...` is returned.
pub fn is_principal(ideal: &QuadIdeal) -> Option<QuadInt> {
    let ring = ideal.ring;
    let n = ideal.norm();
    let t = ring.trace_omega();
    let abs_disc = -ring.disc();
    // 4 N(x + y w) = (2x + t y)^2 + |disc| y^2
    let ymax = isqrt(4 * n / abs_disc);
    let mut best: Option<QuadInt> = None;
    for y in -ymax..=ymax {
        let rest = 4 * n - abs_disc * y * y;
        if rest < 0 {
            continue;
        }
        let s = isqrt(rest);
        for u in [-s, s] {
            // u = 2x + t y
            if (u - t * y) % 2 != 0 {
                continue;
            }
            let cand = QuadInt::new((u - t * y) / 2, y);
            if ring.norm(cand) != n || !ideal.contains(cand) {
                continue;
            }
            let key = |q: &QuadInt| (zigzag_key(q.y), zigzag_key(q.x));
            if best.is_none_or(|b| key(&cand) < key(&b)) {
                best = Some(cand);
            }
        }
    }
    best
}

/// Solution of `x = r_i mod I_i` for pairwise comaximal `I_i`, reduced
/// modulo the product.
pub fn ideal_crt(residues: &[(QuadInt, QuadIdeal)]) -> Result<QuadInt> {
    let Some((_, first)) = residues.first() else {
        return Ok(QuadInt::ZERO);
    };
    let ring = first.ring;
    for (i, (_, a)) in residues.iter().enumerate() {
        for (_, b) in &residues[i + 1..] {
            if !a.sum(b).is_unit() {
                return Err(Error::NonComaximal(format!("{a} + {b} is not the unit ideal")));
            }
        }
    }
    let total = residues.iter().fold(QuadIdeal::unit(ring), |acc, (_, m)| acc.mul(m));
    let mut x = QuadInt::ZERO;
    for (i, (r, m)) in residues.iter().enumerate() {
        let others = residues
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(QuadIdeal::unit(ring), |acc, (_, (_, q))| acc.mul(q));
        let f = unit_split(m, &others)?;
        x = x + ring.mul(*r, f);
    }
    Ok(total.reduce(x))
}

/// For comaximal `a`, `b`: the element `f` of `b` with `1 - f` in `a`.
pub(crate) fn unit_split(a: &QuadIdeal, b: &QuadIdeal) -> Result<QuadInt> {
    let mut rows = a.basis_rows();
    rows.extend(b.basis_rows());
    let c = matrix::solve_left(&rows, &[1, 0])
        .ok_or_else(|| Error::NonComaximal(format!("{a} + {b} is not the unit ideal")))?;
    let [b0, b1] = b.basis();
    Ok(b0.scale(c[2]) + b1.scale(c[3]))
}

/// A nonzero element of `l` outside every ideal in `avoid`, searched over
/// Hermite-basis coefficients in a box of the given radius.
pub fn element_avoiding(l: &QuadIdeal, avoid: &[QuadIdeal], radius: i64) -> Result<QuadInt> {
    let [b0, b1] = l.basis();
    for c in BoxSearch::new(2, radius) {
        let t = b0.scale(c[0]) + b1.scale(c[1]);
        if t.is_zero() {
            continue;
        }
        if avoid.iter().all(|a| !a.contains(t)) {
            return Ok(t);
        }
    }
    Err(Error::SearchExhausted(format!(
        "no element of {l} avoiding {} ideals within coefficient box {radius}",
        avoid.len()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gauss() -> QuadRing {
        QuadRing::new(-1).unwrap()
    }

    fn m5() -> QuadRing {
        QuadRing::new(-5).unwrap()
    }

    fn q(s: &str) -> QuadInt {
        s.parse().unwrap()
    }

    fn ideal(ring: QuadRing, gens: &[&str]) -> QuadIdeal {
        QuadIdeal::from_generators(ring, &gens.iter().map(|g| q(g)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn ring_basics() {
        assert!(QuadRing::new(-4).is_err());
        assert!(QuadRing::new(3).is_err());
        let r = QuadRing::new(-3).unwrap();
        assert_eq!((r.trace_omega(), r.norm_omega(), r.disc()), (1, 1, -3));
        assert_eq!(m5().disc(), -20);
        let g = gauss();
        assert_eq!(g.mul(q("w"), q("w")), q("-1"));
        assert_eq!(g.norm(q("2+w")), 5);
        assert_eq!(g.div_exact(q("5"), q("2+w")), Some(q("2-w")));
        assert_eq!(g.div_exact(q("5"), q("1+w")), None);
        for r in [gauss(), m5(), QuadRing::new(-3).unwrap(), QuadRing::new(-7).unwrap()] {
            for u in r.units() {
                assert_eq!(r.norm(u), 1);
            }
            let (a, b) = (q("3-2w"), q("-1+5w"));
            assert_eq!(r.norm(r.mul(a, b)), r.norm(a) * r.norm(b));
        }
        assert_eq!(QuadRing::new(-3).unwrap().units().len(), 6);
    }

    #[test]
    fn parse_and_print() {
        for (s, x, y) in [("3", 3, 0), ("w", 0, 1), ("-w", 0, -1), ("1+2*w", 1, 2), ("-5-3w", -5, -3), ("2*w+1", 1, 2)] {
            assert_eq!(q(s), QuadInt::new(x, y), "{s}");
        }
        for v in [q("0"), q("-1+w"), q("4-7*w"), q("3*w")] {
            assert_eq!(q(&v.to_string()), v);
        }
        assert!("1+".parse::<QuadInt>().is_err());
        assert!("x".parse::<QuadInt>().is_err());
    }

    #[test]
    fn generators_examples() {
        let i = ideal(gauss(), &["1+w"]);
        assert_eq!(i.norm(), 2);
        assert_eq!(i.hnf().rows(), [[1, 1], [0, 2]]);
        assert!(ideal(m5(), &["1"]).is_unit());
        let p2 = ideal(m5(), &["2", "1+w"]);
        assert_eq!(p2.norm(), 2);
        assert!(matches!(QuadIdeal::from_generators(gauss(), &[QuadInt::ZERO]), Err(Error::ZeroIdeal(_))));
        assert_eq!(
            serde_json::to_string(&p2).unwrap(),
            format!(r#"{{"D":-5,"hnf":[[1,1],[0,2]]}}"#)
        );
    }

    #[test]
    fn product_sum_quotient() {
        let r = m5();
        let p2 = ideal(r, &["2", "1+w"]);
        let unit = QuadIdeal::unit(r);
        assert_eq!(p2.mul(&unit), p2);
        assert_eq!(p2.mul(&p2), ideal(r, &["2"]));
        assert_eq!(p2.sum(&p2), p2);
        assert_eq!(p2.quotient(&unit), p2);
        assert_eq!(ideal(r, &["2"]).quotient(&p2), p2);
        assert_eq!(p2.intersect(&ideal(r, &["3"])), p2.mul(&ideal(r, &["3"])));
    }

    #[test]
    fn quotient_undoes_multiplication() {
        let r = gauss();
        let mut ideals = Vec::new();
        for n in 1..=10 {
            ideals.extend(enumerate_ideals(r, n).unwrap());
        }
        let mut checked = 0;
        for a in &ideals {
            for b in &ideals {
                assert_eq!(a.mul(b).quotient(b), *a);
                checked += 1;
            }
        }
        assert!(checked >= 20);
    }

    #[test]
    fn primes_above_examples() {
        let five = primes_above(gauss(), 5).unwrap();
        assert_eq!(five.len(), 2);
        assert!(five.iter().all(|p| p.ideal.norm() == 5 && p.splitting == Splitting::Split));
        let three = primes_above(gauss(), 3).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].ideal.norm(), 9);
        assert_eq!(three[0].splitting, Splitting::Inert);
        let two = primes_above(m5(), 2).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].ideal.norm(), 2);
        assert_eq!(two[0].splitting, Splitting::Ramified);
        assert_eq!(two[0].ideal.pow(2), ideal(m5(), &["2"]));
        // ramified odd prime and both splitting types at 2 for D = 1 mod 4
        let five = primes_above(m5(), 5).unwrap();
        assert_eq!(five[0].splitting, Splitting::Ramified);
        assert_eq!(primes_above(QuadRing::new(-7).unwrap(), 2).unwrap().len(), 2);
        assert_eq!(primes_above(QuadRing::new(-3).unwrap(), 2).unwrap()[0].splitting, Splitting::Inert);
        for ring in [gauss(), m5(), QuadRing::new(-7).unwrap(), QuadRing::new(-23).unwrap()] {
            for p in [2, 3, 5, 7, 11, 13, 101, 1009] {
                let above = primes_above(ring, p).unwrap();
                let prod = above.iter().fold(QuadIdeal::unit(ring), |acc, pa| acc.mul(&pa.ideal.pow(pa.e)));
                assert_eq!(prod, QuadIdeal::principal(ring, QuadInt::new(p, 0)).unwrap());
            }
        }
    }

    #[test]
    fn factor_examples() {
        assert!(factor_ideal(&QuadIdeal::unit(gauss())).unwrap().is_empty());
        let r = gauss();
        let cube = QuadIdeal::principal(r, r.pow(q("1+w"), 3)).unwrap();
        let f = factor_ideal(&cube).unwrap();
        assert_eq!(f, vec![(ideal(r, &["1+w"]), 3)]);
        let six = ideal(m5(), &["6"]);
        let f = factor_ideal(&six).unwrap();
        let norms: Vec<(i64, u32)> = f.iter().map(|(p, e)| (p.norm(), *e)).collect();
        assert_eq!(norms, vec![(2, 2), (3, 1), (3, 1)]);
        let back = f.iter().fold(QuadIdeal::unit(m5()), |acc, (p, e)| acc.mul(&p.pow(*e)));
        assert_eq!(back, six);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_ideals(gauss(), 1).unwrap(), vec![QuadIdeal::unit(gauss())]);
        assert_eq!(enumerate_ideals(gauss(), 5).unwrap().len(), 2);
        assert_eq!(enumerate_ideals(m5(), 3).unwrap().len(), 2);
        assert!(enumerate_ideals(gauss(), 3).unwrap().is_empty());
        assert!(matches!(enumerate_ideals_with_bound(gauss(), 5 * 13 * 17, 4), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn principal_examples() {
        let g = gauss();
        assert_eq!(is_principal(&ideal(g, &["5"])), Some(q("5")));
        assert_eq!(is_principal(&ideal(m5(), &["2", "1+w"])), None);
        let i = ideal(g, &["5", "2+w"]);
        assert_eq!(i.norm(), 5);
        assert_eq!(is_principal(&i), Some(q("2+w")));
    }

    #[test]
    fn crt_examples() {
        let g = gauss();
        let a = ideal(g, &["1+w"]);
        let x = ideal_crt(&[(q("3+2w"), a)]).unwrap();
        assert_eq!(x, a.reduce(q("3+2w")));
        let three = ideal(g, &["3"]);
        let x = ideal_crt(&[(q("1"), a), (q("0"), three)]).unwrap();
        assert!(a.contains(x - QuadInt::ONE));
        assert!(three.contains(x));
        assert!(matches!(ideal_crt(&[(q("1"), a), (q("0"), ideal(g, &["2"]))]), Err(Error::NonComaximal(_))));
    }

    #[test]
    fn avoiding_examples() {
        let r = gauss();
        let unit = QuadIdeal::unit(r);
        let t = element_avoiding(&unit, &[ideal(r, &["2"]), ideal(r, &["3"])], DEFAULT_AVOID_RADIUS).unwrap();
        assert_eq!(t, QuadInt::ONE);
        let p2 = ideal(m5(), &["2", "1+w"]);
        let t = element_avoiding(&p2, &[p2.mul(&p2)], DEFAULT_AVOID_RADIUS).unwrap();
        assert!(p2.contains(t) && !p2.mul(&p2).contains(t));
        assert!(matches!(element_avoiding(&p2, &[unit], 3), Err(Error::SearchExhausted(_))));
    }

    #[test]
    fn residues_and_reduction() {
        let i = ideal(m5(), &["3", "1+w"]);
        let res = i.residues();
        assert_eq!(res.len() as i64, i.norm());
        for v in [q("17-9w"), q("-4+w"), q("0")] {
            let red = i.reduce(v);
            assert!(res.contains(&red));
            assert!(i.contains(v - red));
        }
    }
}
