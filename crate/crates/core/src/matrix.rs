//! Exact integer linear algebra on row lattices: Hermite and Smith normal
//! forms, lattice membership, intersection and preimages.
//!
//! Lattices are spanned by the rows of a matrix. Elimination runs in `i128`
//! and results are narrowed back to `i64`; an entry that does not fit is a
//! panic, never a wrap.

use crate::{Error, Result};

pub type Mat = Vec<Vec<i64>>;

type WideMat = Vec<Vec<i128>>;

fn widen(rows: &[Vec<i64>]) -> WideMat {
    rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect()
}

fn narrow(rows: WideMat) -> Mat {
    rows.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| i64::try_from(x).expect("matrix entry exceeds i64"))
                .collect()
        })
        .collect()
}

fn xgcd128(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Unimodular `[[x, y], [u, v]]` taking `(a, b)` to `(gcd, 0)`; a plain
/// subtraction when `a` divides `b`, so a pivot is never displaced.
fn elimination(a: i128, b: i128) -> (i128, i128, i128, i128) {
    if b % a == 0 {
        return (1, 0, -b / a, 1);
    }
    let (g, x, y) = xgcd128(a, b);
    (x, y, -b / g, a / g)
}

/// Replace rows `p` and `r` by `(x*p + y*r, u*p + v*r)`.
fn combine_rows(m: &mut WideMat, p: usize, r: usize, x: i128, y: i128, u: i128, v: i128) {
    for j in 0..m[p].len() {
        let (a, b) = (m[p][j], m[r][j]);
        m[p][j] = x * a + y * b;
        m[r][j] = u * a + v * b;
    }
}

fn sub_multiple(m: &mut WideMat, target: usize, src: usize, q: i128) {
    if q == 0 {
        return;
    }
    for j in 0..m[target].len() {
        m[target][j] -= q * m[src][j];
    }
}

/// Row echelon (Hermite) form.
///
/// Returns `(h, u, rank)` with `u * rows = h`, `u` unimodular (when
/// `track`), the first `rank` rows of `h` nonzero with strictly increasing
/// pivot columns, positive pivots, entries above each pivot reduced into
/// `[0, pivot)`, and the remaining rows zero.
fn echelon(rows: &[Vec<i64>], ncols: usize, track: bool) -> (WideMat, WideMat, usize) {
    let mut h = widen(rows);
    let m = h.len();
    for r in &h {
        assert_eq!(r.len(), ncols, "ragged matrix");
    }
    let mut u: WideMat = if track {
        (0..m).map(|i| (0..m).map(|j| (i == j) as i128).collect()).collect()
    } else {
        Vec::new()
    };
    let mut p = 0;
    for col in 0..ncols {
        if p == m {
            break;
        }
        for r in (p + 1)..m {
            if h[r][col] == 0 {
                continue;
            }
            let (a, b) = (h[p][col], h[r][col]);
            let (g, x, y) = xgcd128(a, b);
            let (ua, ub) = (-b / g, a / g);
            combine_rows(&mut h, p, r, x, y, ua, ub);
            if track {
                combine_rows(&mut u, p, r, x, y, ua, ub);
            }
        }
        if h[p][col] == 0 {
            continue;
        }
        if h[p][col] < 0 {
            h[p].iter_mut().for_each(|x| *x = -*x);
            if track {
                u[p].iter_mut().for_each(|x| *x = -*x);
            }
        }
        let piv = h[p][col];
        for i in 0..p {
            let q = h[i][col].div_euclid(piv);
            sub_multiple(&mut h, i, p, q);
            if track {
                sub_multiple(&mut u, i, p, q);
            }
        }
        p += 1;
    }
    (h, u, p)
}

/// Hermite normal form: the nonzero rows of the echelon form.
pub fn hnf(rows: &[Vec<i64>], ncols: usize) -> Mat {
    let (h, _, rank) = echelon(rows, ncols, false);
    narrow(h.into_iter().take(rank).collect())
}

/// Hermite normal form of a lattice that must have full rank `ncols`.
pub fn hnf_full(rows: &[Vec<i64>], ncols: usize) -> Result<Mat> {
    let h = hnf(rows, ncols);
    if h.len() != ncols {
        return Err(Error::NotFullRank(format!(
            "generators span rank {} in dimension {ncols}",
            h.len()
        )));
    }
    Ok(h)
}

fn pivot_col(row: &[i64]) -> Option<usize> {
    row.iter().position(|&x| x != 0)
}

/// Coefficients `c` with `c * h = v`, for `h` in echelon form.
pub fn echelon_coords(h: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let mut rest: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    let mut coeffs = Vec::with_capacity(h.len());
    for row in h {
        let pc = pivot_col(row)?;
        if rest[..pc].iter().any(|&x| x != 0) {
            return None;
        }
        let piv = row[pc] as i128;
        if rest[pc] % piv != 0 {
            return None;
        }
        let c = rest[pc] / piv;
        for (x, &r) in rest.iter_mut().zip(row) {
            *x -= c * r as i128;
        }
        coeffs.push(i64::try_from(c).ok()?);
    }
    rest.iter().all(|&x| x == 0).then_some(coeffs)
}

/// Membership of `v` in the lattice with echelon basis `h`.
pub fn contains(h: &[Vec<i64>], v: &[i64]) -> bool {
    echelon_coords(h, v).is_some()
}

/// Determinant of a square upper-triangular echelon basis.
pub fn triangular_det(h: &[Vec<i64>]) -> i64 {
    h.iter().enumerate().map(|(i, r)| r[i]).product()
}

/// Given generator rows `[a | b]` split after column `split`, the lattice
/// of right halves `b` of all combinations whose left half vanishes.
fn kernel_tail(rows: &[Vec<i64>], split: usize) -> Mat {
    let ncols = rows.first().map_or(0, |r| r.len());
    let (h, _, rank) = echelon(rows, ncols, false);
    let tails: Mat = narrow(
        h.into_iter()
            .take(rank)
            .filter(|r| r[..split].iter().all(|&x| x == 0))
            .map(|r| r[split..].to_vec())
            .collect(),
    );
    hnf(&tails, ncols - split)
}

/// Intersection of two lattices in `Z^n`, in Hermite form.
pub fn intersect(a: &[Vec<i64>], b: &[Vec<i64>], n: usize) -> Mat {
    // rows (x, x) for x in a and (y, 0) for y in b: a vanishing left half
    // means x + y = 0, leaving x in a and in b.
    let mut rows = Vec::with_capacity(a.len() + b.len());
    for x in a {
        rows.push(x.iter().chain(x.iter()).copied().collect());
    }
    for y in b {
        rows.push(y.iter().copied().chain(std::iter::repeat_n(0, n)).collect());
    }
    kernel_tail(&rows, n)
}

/// `{x in Z^k : x * map in lattice}` for a `k x n` matrix `map`.
pub fn preimage(map: &[Vec<i64>], lattice: &[Vec<i64>], n: usize) -> Mat {
    let k = map.len();
    let mut rows = Vec::with_capacity(k + lattice.len());
    for (i, r) in map.iter().enumerate() {
        let mut row = r.clone();
        row.extend((0..k).map(|j| (i == j) as i64));
        rows.push(row);
    }
    for r in lattice {
        let mut row = r.clone();
        row.extend(std::iter::repeat_n(0, k));
        rows.push(row);
    }
    kernel_tail(&rows, n)
}

/// An integer row vector `x` with `x * a = target`, if one exists.
pub fn solve_left(a: &[Vec<i64>], target: &[i64]) -> Option<Vec<i64>> {
    let ncols = target.len();
    let (h, u, rank) = echelon(a, ncols, true);
    let basis = narrow(h.into_iter().take(rank).collect());
    let y = echelon_coords(&basis, target)?;
    let m = a.len();
    let mut x = vec![0i128; m];
    for (i, &yi) in y.iter().enumerate() {
        for j in 0..m {
            x[j] += yi as i128 * u[i][j];
        }
    }
    x.into_iter().map(|v| i64::try_from(v).ok()).collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Mat {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(&x, r)| x * r[j]).sum())
                .collect()
        })
        .collect()
}

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
}

/// Smith normal form of a square nonsingular-or-not matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    /// Diagonal entries, each dividing the next; trailing zeros for
    /// singular input.
    pub diag: Vec<i64>,
    pub left: Mat,
    pub right: Mat,
}

/// Smith normal form with transforms: `left * a * right = diag(d_1, ..)`.
pub fn smith(a: &[Vec<i64>]) -> Smith {
    let n = a.len();
    for r in a {
        assert_eq!(r.len(), n, "smith expects a square matrix");
    }
    let mut m = widen(a);
    let mut left: WideMat = widen(&identity(n));
    let mut right: WideMat = widen(&identity(n));

    for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            m.swap(t, bi);
            left.swap(t, bi);
            for row in m.iter_mut().chain(right.iter_mut()) {
                row.swap(t, bj);
            }
            for i in (t + 1)..n {
                if m[i][t] != 0 {
                    let (x, y, ua, ub) = elimination(m[t][t], m[i][t]);
                    combine_rows(&mut m, t, i, x, y, ua, ub);
                    combine_rows(&mut left, t, i, x, y, ua, ub);
                }
            }
            for j in (t + 1)..n {
                if m[t][j] != 0 {
                    let (x, y, ua, ub) = elimination(m[t][t], m[t][j]);
                    for row in m.iter_mut().chain(right.iter_mut()) {
                        let (c0, c1) = (row[t], row[j]);
                        row[t] = x * c0 + y * c1;
                        row[j] = ua * c0 + ub * c1;
                    }
                }
            }
            if ((t + 1)..n).any(|i| m[i][t] != 0) {
                continue;
            }
            let piv = m[t][t];
            let bad = ((t + 1)..n).find(|&i| ((t + 1)..n).any(|j| m[i][j] % piv != 0));
            match bad {
                Some(i) => {
                    // fold the offending row into row t and go again
                    for j in 0..n {
                        let v = m[i][j];
                        m[t][j] += v;
                        let w = left[i][j];
                        left[t][j] += w;
                    }
                }
                None => break,
            }
        }
        if m[t][t] < 0 {
            m[t].iter_mut().for_each(|x| *x = -*x);
            left[t].iter_mut().for_each(|x| *x = -*x);
        }
    }
    let diag = (0..n).map(|i| i64::try_from(m[i][i]).expect("smith entry exceeds i64")).collect();
    Smith { diag, left: narrow(left), right: narrow(right) }
}

/// Invariant factors of the abelian group `Z^n / L` for a full-rank
/// lattice `L`, dropping the trivial factors 1.
pub fn quotient_invariants(basis: &[Vec<i64>]) -> Vec<i64> {
    smith(basis).diag.into_iter().filter(|&d| d != 1).collect()
}

/// Invariant factors of a finite abelian group given as a direct sum of
/// cyclic groups, trivial factors dropped.
pub fn normalize_cyclic_factors(orders: &[i64]) -> Vec<i64> {
    let n = orders.len();
    let diag: Mat = (0..n)
        .map(|i| (0..n).map(|j| if i == j { orders[i] } else { 0 }).collect())
        .collect();
    quotient_invariants(&diag)
}

/// Inverse of a unimodular 2x2 matrix.
pub fn inverse_unimodular_2x2(m: &[Vec<i64>]) -> Mat {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    assert!(det == 1 || det == -1, "matrix is not unimodular");
    vec![
        vec![m[1][1] * det, -m[0][1] * det],
        vec![-m[1][0] * det, m[0][0] * det],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det(m: &[Vec<i64>]) -> i128 {
        // Laplace expansion; fine for the tiny sizes used here
        let n = m.len();
        if n == 1 {
            return m[0][0] as i128;
        }
        let mut total = 0i128;
        for j in 0..n {
            let minor: Mat = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            total += sign * m[0][j] as i128 * det(&minor);
        }
        total
    }

    #[test]
    fn hnf_basic() {
        assert_eq!(hnf(&[vec![1, 2], vec![3, 4]], 2), vec![vec![1, 0], vec![0, 2]]);
        assert_eq!(hnf(&[vec![2, 4], vec![1, 2]], 2), vec![vec![1, 2]]);
        assert!(hnf_full(&[vec![2, 4], vec![1, 2]], 2).is_err());
        let h = hnf(&[vec![4, 6, 2], vec![2, 3, 7], vec![0, 5, 5], vec![1, 1, 1]], 3);
        assert_eq!(h.len(), 3);
        for (i, r) in h.iter().enumerate() {
            assert!(r[i] > 0);
            for rr in &h[..i] {
                assert!(rr[i] >= 0 && rr[i] < r[i]);
            }
        }
    }

    #[test]
    fn smith_with_equal_entries_terminates() {
        let a = vec![vec![1, 0, 0, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1], vec![0, 0, 0, 2]];
        assert_eq!(smith(&a).diag, vec![1, 1, 1, 2]);
        assert_eq!(quotient_invariants(&a), vec![2]);
    }

    #[test]
    fn intersection_by_membership() {
        let a = hnf(&[vec![1, 2], vec![0, 4]], 2);
        let b = hnf(&[vec![1, 0], vec![0, 4]], 2);
        let c = intersect(&a, &b, 2);
        assert_eq!(triangular_det(&c), 8);
        for x in -8..=8 {
            for y in -8..=8 {
                let v = [x, y];
                assert_eq!(contains(&c, &v), contains(&a, &v) && contains(&b, &v));
            }
        }
    }

    #[test]
    fn preimage_and_solve() {
        // x -> 2x mod lattice 6Z: preimage is 3Z
        let p = preimage(&[vec![2]], &[vec![6]], 1);
        assert_eq!(p, vec![vec![3]]);
        let x = solve_left(&[vec![6, 0], vec![4, 0], vec![0, 1]], &[2, 5]).unwrap();
        assert_eq!(6 * x[0] + 4 * x[1], 2);
        assert_eq!(x[2], 5);
        assert!(solve_left(&[vec![6, 0], vec![4, 0]], &[1, 0]).is_none());
    }

    #[test]
    fn smith_transforms() {
        let samples: Vec<Mat> = vec![
            vec![vec![2, 4], vec![6, 8]],
            vec![vec![1, 2], vec![0, 4]],
            vec![vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 4]],
            vec![vec![4, 6, 2, 0], vec![2, 3, 7, 1], vec![0, 5, 5, 5], vec![1, 1, 1, 9]],
        ];
        for a in samples {
            let s = smith(&a);
            let prod = mat_mul(&mat_mul(&s.left, &a), &s.right);
            for i in 0..a.len() {
                for j in 0..a.len() {
                    assert_eq!(prod[i][j], if i == j { s.diag[i] } else { 0 });
                }
            }
            assert_eq!(det(&s.left).abs(), 1);
            assert_eq!(det(&s.right).abs(), 1);
            for w in s.diag.windows(2) {
                assert_eq!(w[1] % w[0], 0);
            }
            assert_eq!(s.diag.iter().map(|&d| d as i128).product::<i128>(), det(&a).abs());
        }
        assert_eq!(normalize_cyclic_factors(&[2, 3, 4]), vec![2, 12]);
    }
}
