//! Co-torsion `O_K`-submodules of `O_K^2`.
//!
//! A module is stored as the Hermite basis of its `Z`-lattice in the
//! coordinates `(e1, w*e1, e2, w*e2)`. Its invariants are the ideals
//! `L ⊇ K` with `O_K^2 / M ≅ O/L ⊕ O/K`, the ideal `I` with `K = L*I`, and a
//! point of the projective line over `O/I`.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::arith::BoxSearch;
use crate::matrix::{self, Mat};
use crate::okproj::{ok_class_of, ok_crt_join, ok_enumerate, OkProjPoint};
use crate::quadring::{
    element_avoiding, enumerate_ideals, factor_ideal, is_principal, QuadIdeal, QuadInt, QuadRing,
    DEFAULT_AVOID_RADIUS,
};
use crate::{Error, Result};

/// Coordinate box for the witness search in [`proj_invariant_element`].
pub const DEFAULT_WITNESS_RADIUS: i64 = 25;

/// An element `(u, v)` of `O_K^2`.
pub type Pair = (QuadInt, QuadInt);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CotorsionModule {
    ring: QuadRing,
    hnf4: Mat,
}

/// Invariants `(L, K, I, [a:b])` of a co-torsion module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OkInvariantData {
    pub l: QuadIdeal,
    pub k: QuadIdeal,
    pub i: QuadIdeal,
    pub point: OkProjPoint,
}

/// One successful witness `m = (t*a, t*b)` of the projective invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub t: QuadInt,
    pub a: QuadInt,
    pub b: QuadInt,
    pub point: OkProjPoint,
}

fn pair_coords((u, v): Pair) -> Vec<i64> {
    vec![u.x, u.y, v.x, v.y]
}

fn coords_pair(r: &[i64]) -> Pair {
    (QuadInt::new(r[0], r[1]), QuadInt::new(r[2], r[3]))
}

fn omega_pair(ring: QuadRing, (u, v): Pair) -> Pair {
    (ring.mul(QuadInt::OMEGA, u), ring.mul(QuadInt::OMEGA, v))
}

impl CotorsionModule {
    /// The whole of `O_K^2`.
    pub fn full(ring: QuadRing) -> CotorsionModule {
        CotorsionModule { ring, hnf4: matrix::identity(4) }
    }

    pub fn from_generators(ring: QuadRing, gens: &[Pair]) -> Result<CotorsionModule> {
        let mut rows = Vec::with_capacity(2 * gens.len());
        for &g in gens {
            rows.push(pair_coords(g));
            rows.push(pair_coords(omega_pair(ring, g)));
        }
        CotorsionModule::from_rows(ring, &rows)
    }

    /// Module spanned over `Z` by coordinate rows that are already closed
    /// under multiplication by `w`.
    fn from_rows(ring: QuadRing, rows: &[Vec<i64>]) -> Result<CotorsionModule> {
        Ok(CotorsionModule { ring, hnf4: matrix::hnf_full(rows, 4)? })
    }

    /// Module with the given Hermite basis; fails unless it has full rank
    /// and is closed under `w`.
    pub fn from_hnf(ring: QuadRing, hnf4: Mat) -> Result<CotorsionModule> {
        if matrix::hnf(&hnf4, 4) != hnf4 || hnf4.len() != 4 {
            return Err(Error::NotFullRank("not a full-rank Hermite basis of Z^4".into()));
        }
        let m = CotorsionModule { ring, hnf4 };
        if !is_omega_stable(ring, &m.hnf4) {
            return Err(Error::BadInvariants("lattice is not closed under w".into()));
        }
        Ok(m)
    }

    pub fn ring(&self) -> QuadRing {
        self.ring
    }

    pub fn hnf4(&self) -> &Mat {
        &self.hnf4
    }

    /// `|O_K^2 / M|`.
    pub fn index(&self) -> i64 {
        matrix::triangular_det(&self.hnf4)
    }

    pub fn contains(&self, m: Pair) -> bool {
        matrix::contains(&self.hnf4, &pair_coords(m))
    }

    pub fn basis(&self) -> Vec<Pair> {
        self.hnf4.iter().map(|r| coords_pair(r)).collect()
    }

    pub fn intersect(&self, other: &CotorsionModule) -> CotorsionModule {
        CotorsionModule { ring: self.ring, hnf4: matrix::intersect(&self.hnf4, &other.hnf4, 4) }
    }

    /// Nonzero invariants of the finite abelian group `Z^4 / M`.
    pub fn quotient_shape(&self) -> Vec<i64> {
        matrix::quotient_invariants(&self.hnf4)
    }
}

/// Whether the row span of `h` is closed under multiplication by `w`.
pub fn is_omega_stable(ring: QuadRing, h: &[Vec<i64>]) -> bool {
    h.iter().all(|r| matrix::contains(h, &pair_coords(omega_pair(ring, coords_pair(r)))))
}

/// Nonzero invariants of `O/L ⊕ O/K` as an abelian group.
pub fn ideal_pair_shape(l: &QuadIdeal, k: &QuadIdeal) -> Vec<i64> {
    let mut rows: Mat = Vec::with_capacity(4);
    for b in l.basis() {
        rows.push(vec![b.x, b.y, 0, 0]);
    }
    for b in k.basis() {
        rows.push(vec![0, 0, b.x, b.y]);
    }
    matrix::quotient_invariants(&rows)
}

/// `{x : x * O_K^2 ⊆ M}`.
pub fn annihilator(m: &CotorsionModule) -> QuadIdeal {
    let e1 = vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]];
    let e2 = vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1]];
    let h = matrix::intersect(&matrix::preimage(&e1, &m.hnf4, 4), &matrix::preimage(&e2, &m.hnf4, 4), 2);
    ideal_from_lattice_rows(m.ring, &h)
}

fn ideal_from_lattice_rows(ring: QuadRing, h: &[Vec<i64>]) -> QuadIdeal {
    let gens: Vec<QuadInt> = h.iter().map(|r| QuadInt::new(r[0], r[1])).collect();
    QuadIdeal::from_generators(ring, &gens).expect("co-torsion module gives a nonzero ideal")
}

/// The invariant factor ideals `(L, K)`.
///
/// `K` is the annihilator of the quotient and `L*K` is generated by the
/// `2 x 2` determinants of pairs of basis elements, so `L = (LK : K)`.
pub fn invariant_ideals(m: &CotorsionModule) -> (QuadIdeal, QuadIdeal) {
    let ring = m.ring;
    let k = annihilator(m);
    let basis = m.basis();
    let mut minors = Vec::new();
    for (i, &(u1, v1)) in basis.iter().enumerate() {
        for &(u2, v2) in &basis[i + 1..] {
            minors.push(ring.mul(u1, v2) - ring.mul(u2, v1));
        }
    }
    let lk = QuadIdeal::from_generators(ring, &minors).expect("full-rank module has a nonzero minor");
    (lk.quotient(&k), k)
}

struct InvariantContext {
    l: QuadIdeal,
    k: QuadIdeal,
    i: QuadIdeal,
    avoid: Vec<QuadIdeal>,
}

impl InvariantContext {
    fn new(m: &CotorsionModule) -> Result<InvariantContext> {
        let (l, k) = invariant_ideals(m);
        let i = k.quotient(&l);
        let avoid = factor_ideal(&k)?.iter().map(|(p, _)| l.mul(p)).collect();
        Ok(InvariantContext { l, k, i, avoid })
    }

    fn admissible_t(&self, t: QuadInt) -> bool {
        self.l.contains(t) && self.avoid.iter().all(|a| !a.contains(t))
    }

    fn witness(&self, ring: QuadRing, (u, v): Pair) -> Result<Option<Witness>> {
        if u.is_zero() && v.is_zero() {
            return Ok(None);
        }
        let j = QuadIdeal::from_generators(ring, &[u, v])?;
        let Some(t) = is_principal(&j) else {
            return Ok(None);
        };
        if !self.admissible_t(t) {
            return Ok(None);
        }
        let a = ring.div_exact(u, t).expect("generator divides u");
        let b = ring.div_exact(v, t).expect("generator divides v");
        Ok(Some(Witness { t, a, b, point: ok_class_of(a, b, &self.i)? }))
    }
}

/// Up to `count` witnesses `m = (t*a, t*b)` in `M` with `t` in `L` but in no
/// `L*P` for `P` a prime of `K`, found by searching `Z`-coordinates of `M`
/// in increasing boxes.
pub fn proj_invariant_witnesses(m: &CotorsionModule, count: usize, radius: i64) -> Result<Vec<Witness>> {
    let ctx = InvariantContext::new(m)?;
    let mut out = Vec::new();
    if count == 0 {
        return Ok(out);
    }
    for c in BoxSearch::new(4, radius) {
        let coords: Vec<i64> = (0..4).map(|j| (0..4).map(|i| c[i] * m.hnf4[i][j]).sum()).collect();
        if let Some(w) = ctx.witness(m.ring, coords_pair(&coords))? {
            out.push(w);
            if out.len() == count {
                return Ok(out);
            }
        }
    }
    if out.is_empty() {
        return Err(Error::SearchExhausted(format!("no invariant witness within coordinate box {radius}")));
    }
    Ok(out)
}

pub fn proj_invariant_element(m: &CotorsionModule) -> Result<OkInvariantData> {
    proj_invariant_element_with_radius(m, DEFAULT_WITNESS_RADIUS)
}

pub fn proj_invariant_element_with_radius(m: &CotorsionModule, radius: i64) -> Result<OkInvariantData> {
    let ctx = InvariantContext::new(m)?;
    let w = proj_invariant_witnesses(m, 1, radius)?[0];
    Ok(OkInvariantData { l: ctx.l, k: ctx.k, i: ctx.i, point: w.point })
}

/// `I` with `K = L*I`, checking `K ⊆ L` and the factorization.
pub fn invariant_quotient(l: &QuadIdeal, k: &QuadIdeal) -> Result<QuadIdeal> {
    if !k.is_subset_of(l) {
        return Err(Error::BadInvariants(format!("{k} is not contained in {l}")));
    }
    let i = k.quotient(l);
    if l.mul(&i) != *k {
        return Err(Error::BadInvariants(format!("{k} is not a multiple of {l}")));
    }
    Ok(i)
}

/// The module with invariants `(L, K)` and projective point `p`.
///
/// With a coprime lift `(a, b)` of `p`, `ax - by = 1`, and for each prime
/// `P_i` of `K` an element `q_i` of `P_i` outside every `P_i*P_j`, the
/// module is spanned by `(a Q_l, b Q_l)`, `(y Q_k, x Q_k)` and `LK * O_K^2`,
/// where `Q_l = prod q_i^l_i`, `Q_k = prod q_i^k_i` carry the exponents of
/// `L` and `K`.
pub fn reconstruct(l: &QuadIdeal, k: &QuadIdeal, p: &OkProjPoint) -> Result<CotorsionModule> {
    let ring = l.ring();
    let i = invariant_quotient(l, k)?;
    if p.modulus() != i {
        return Err(Error::BadInvariants(format!("point is modulo {}, expected {i}", p.modulus())));
    }
    let primes = factor_ideal(k)?;
    let (mut q_l, mut q_k) = (QuadInt::ONE, QuadInt::ONE);
    for (pi, ki) in &primes {
        let avoid: Vec<QuadIdeal> = primes.iter().map(|(pj, _)| pi.mul(pj)).collect();
        let q = element_avoiding(pi, &avoid, DEFAULT_AVOID_RADIUS)?;
        let mut li = 0;
        let mut rest = *l;
        while rest.is_subset_of(pi) {
            rest = rest.quotient(pi);
            li += 1;
        }
        q_l = ring.mul(q_l, ring.pow(q, li));
        q_k = ring.mul(q_k, ring.pow(q, *ki));
    }
    let (a, b) = p.coprime_lift()?;
    let (x, y) = bezout(ring, a, b)?;
    let n1 = (ring.mul(a, q_l), ring.mul(b, q_l));
    let n2 = (ring.mul(y, q_k), ring.mul(x, q_k));
    let mut rows = Vec::with_capacity(8);
    for n in [n1, n2] {
        rows.push(pair_coords(n));
        rows.push(pair_coords(omega_pair(ring, n)));
    }
    for g in l.mul(k).basis() {
        rows.push(pair_coords((g, QuadInt::ZERO)));
        rows.push(pair_coords((QuadInt::ZERO, g)));
    }
    CotorsionModule::from_rows(ring, &rows)
}

/// `(x, y)` with `a*x - b*y = 1`.
fn bezout(ring: QuadRing, a: QuadInt, b: QuadInt) -> Result<(QuadInt, QuadInt)> {
    let wa = ring.mul(QuadInt::OMEGA, a);
    let wb = ring.mul(QuadInt::OMEGA, b);
    let rows = vec![a.coords().to_vec(), wa.coords().to_vec(), (-b).coords().to_vec(), (-wb).coords().to_vec()];
    let c = matrix::solve_left(&rows, &[1, 0])
        .ok_or_else(|| Error::NotUnimodular(format!("<{a}> + <{b}> is not the unit ideal")))?;
    Ok((QuadInt::new(c[0], c[1]), QuadInt::new(c[2], c[3])))
}

/// All modules with invariant ideals `(L, K)`, one per point of the
/// projective line over `O/I`, sorted by Hermite basis.
pub fn enumerate_cotorsion(l: &QuadIdeal, k: &QuadIdeal) -> Result<Vec<CotorsionModule>> {
    let i = invariant_quotient(l, k)?;
    let mut out = ok_enumerate(&i)?
        .iter()
        .map(|p| reconstruct(l, k, p))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Every pair `(L, K = L*I)` with `N(L)^2 * N(I) = n`.
pub fn invariant_pairs_of_index(ring: QuadRing, n: i64) -> Result<Vec<(QuadIdeal, QuadIdeal)>> {
    let mut out = Vec::new();
    let mut s = 1;
    while s * s <= n {
        if n % (s * s) == 0 {
            for l in enumerate_ideals(ring, s)? {
                for i in enumerate_ideals(ring, n / (s * s))? {
                    out.push((l, l.mul(&i)));
                }
            }
        }
        s += 1;
    }
    Ok(out)
}

/// All co-torsion modules with quotient of order `n`.
pub fn enumerate_index(ring: QuadRing, n: i64) -> Result<Vec<CotorsionModule>> {
    let mut out = Vec::new();
    for (l, k) in invariant_pairs_of_index(ring, n)? {
        out.extend(enumerate_cotorsion(&l, &k)?);
    }
    out.sort();
    Ok(out)
}

/// Every `w`-stable sublattice of `Z^4` of index `n`, by listing all Hermite
/// bases with diagonal product `n`. Independent of the invariant theory.
pub fn brute_force_index(ring: QuadRing, n: i64) -> Result<Vec<CotorsionModule>> {
    let mut out = BTreeSet::new();
    for diag in diagonals(n, 4) {
        let mut h: Mat = (0..4).map(|i| (0..4).map(|j| if i == j { diag[i] } else { 0 }).collect()).collect();
        fill_above(ring, &mut h, &diag, 0, 1, &mut out);
    }
    Ok(out.into_iter().collect())
}

fn diagonals(n: i64, len: usize) -> Vec<Vec<i64>> {
    if len == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            for mut rest in diagonals(n / d, len - 1) {
                rest.insert(0, d);
                out.push(rest);
            }
        }
    }
    out
}

fn fill_above(ring: QuadRing, h: &mut Mat, diag: &[i64], i: usize, j: usize, out: &mut BTreeSet<CotorsionModule>) {
    if i == 4 {
        if is_omega_stable(ring, h) {
            out.insert(CotorsionModule { ring, hnf4: h.clone() });
        }
        return;
    }
    if j == 4 {
        fill_above(ring, h, diag, i + 1, i + 2, out);
        return;
    }
    for v in 0..diag[j] {
        h[i][j] = v;
        fill_above(ring, h, diag, i, j + 1, out);
    }
    h[i][j] = 0;
}

/// Outcome of checking the intersection theorem on one family of modules.
#[derive(Debug, Clone)]
pub struct IntersectionReport {
    pub intersection: CotorsionModule,
    pub invariants: OkInvariantData,
    pub full_rank: bool,
    pub ideals_multiply: bool,
    pub point_is_join: bool,
    pub witnesses_checked: usize,
    pub witnesses_ok: bool,
}

impl IntersectionReport {
    pub fn holds(&self) -> bool {
        self.full_rank && self.ideals_multiply && self.point_is_join && self.witnesses_ok
    }
}

/// Intersects modules with pairwise comaximal annihilators and checks: the
/// intersection has full rank; its invariant ideals are the products of
/// the component ideals; its point is the CRT join of the component
/// points; and `(t*a, t*b)` lies in every module for sampled admissible `t`
/// and a coprime lift `(a, b)` of the joined point.
pub fn verify_intersection_theorem(modules: &[CotorsionModule]) -> Result<IntersectionReport> {
    let Some(first) = modules.first() else {
        return Err(Error::DegenerateInput("no modules to intersect".into()));
    };
    let ring = first.ring;
    let data = modules.iter().map(proj_invariant_element).collect::<Result<Vec<_>>>()?;
    for (i, a) in data.iter().enumerate() {
        for b in &data[i + 1..] {
            if !a.k.sum(&b.k).is_unit() {
                return Err(Error::NonComaximal(format!("{} + {} is not the unit ideal", a.k, b.k)));
            }
        }
    }
    let inter = modules[1..].iter().fold(first.clone(), |acc, m| acc.intersect(m));
    let full_rank = inter.hnf4.len() == 4 && inter.index() > 0;
    let inv = proj_invariant_element(&inter)?;
    let unit = QuadIdeal::unit(ring);
    let l_prod = data.iter().fold(unit, |acc, d| acc.mul(&d.l));
    let k_prod = data.iter().fold(unit, |acc, d| acc.mul(&d.k));
    let ideals_multiply = inv.l == l_prod && inv.k == k_prod && k_prod.is_subset_of(&l_prod);
    let joined = ok_crt_join(&data.iter().map(|d| d.point).collect::<Vec<_>>())?;
    let point_is_join = joined == inv.point;

    let (a, b) = joined.coprime_lift()?;
    let avoid: Vec<QuadIdeal> = factor_ideal(&k_prod)?.iter().map(|(p, _)| l_prod.mul(p)).collect();
    let [g0, g1] = l_prod.basis();
    let mut witnesses_checked = 0;
    let mut witnesses_ok = true;
    for c in BoxSearch::new(2, 6) {
        let t = g0.scale(c[0]) + g1.scale(c[1]);
        if t.is_zero() || avoid.iter().any(|x| x.contains(t)) {
            continue;
        }
        let m = (ring.mul(t, a), ring.mul(t, b));
        witnesses_ok &= inter.contains(m) && modules.iter().all(|md| md.contains(m));
        witnesses_checked += 1;
        if witnesses_checked == 8 {
            break;
        }
    }
    witnesses_ok &= witnesses_checked > 0;
    Ok(IntersectionReport {
        intersection: inter,
        invariants: inv,
        full_rank,
        ideals_multiply,
        point_is_join,
        witnesses_checked,
        witnesses_ok,
    })
}

impl fmt::Display for CotorsionModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .hnf4
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl Serialize for CotorsionModule {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CotorsionModule", 2)?;
        st.serialize_field("D", &self.ring.d())?;
        st.serialize_field("hnf4", &self.hnf4)?;
        st.end()
    }
}

impl Serialize for OkInvariantData {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("OkInvariantData", 4)?;
        st.serialize_field("L", &self.l)?;
        st.serialize_field("K", &self.k)?;
        st.serialize_field("I", &self.i)?;
        st.serialize_field("point", &self.point)?;
        st.end()
    }
}
