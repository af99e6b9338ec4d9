//! Truncated Dirichlet series as exact coefficient vectors.
//!
//! A series `sum a(n) n^-s` is kept as `a(1..=n_max)`; multiplication of
//! series is Dirichlet convolution of the coefficients.

use std::fmt;
use std::io::Write;

use serde::Serialize;

use crate::arith::{divisors, is_square, sigma};
use crate::okproj::ok_cardinality;
use crate::projline::cardinality;
use crate::quadring::{enumerate_ideals, QuadRing};
use crate::zlattice::strata;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DirichletSeries {
    coeffs: Vec<i64>,
}

impl DirichletSeries {
    /// Series with `a(n) = coeffs[n - 1]`.
    pub fn new(coeffs: Vec<i64>) -> Result<DirichletSeries> {
        if coeffs.is_empty() {
            return Err(Error::BadLength("a series needs at least one coefficient".into()));
        }
        Ok(DirichletSeries { coeffs })
    }

    fn from_fn(n_max: usize, f: impl FnMut(i64) -> Result<i64>) -> Result<DirichletSeries> {
        let coeffs = (1..=n_max as i64).map(f).collect::<Result<Vec<_>>>()?;
        DirichletSeries::new(coeffs)
    }

    pub fn n_max(&self) -> usize {
        self.coeffs.len()
    }

    /// `a(n)`, 1-based.
    pub fn get(&self, n: usize) -> i64 {
        self.coeffs[n - 1]
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }
}

/// `(f * g)(n) = sum_{de = n} f(d) g(e)`.
pub fn convolve(f: &DirichletSeries, g: &DirichletSeries) -> Result<DirichletSeries> {
    let n = f.n_max();
    if g.n_max() != n {
        return Err(Error::BadLength(format!("cannot convolve lengths {n} and {}", g.n_max())));
    }
    let mut out = vec![0i64; n];
    for d in 1..=n {
        let fd = f.get(d);
        if fd == 0 {
            continue;
        }
        for e in 1..=n / d {
            out[d * e - 1] += fd * g.get(e);
        }
    }
    DirichletSeries::new(out)
}

/// `zeta(s)`: `a(n) = 1`.
pub fn series_zeta(n_max: usize) -> Result<DirichletSeries> {
    DirichletSeries::from_fn(n_max, |_| Ok(1))
}

/// `zeta(s - 1)`: `a(n) = n`.
pub fn series_zeta_shift(n_max: usize) -> Result<DirichletSeries> {
    DirichletSeries::from_fn(n_max, Ok)
}

/// `zeta(2s)`: `a(n) = 1` for squares, else 0.
pub fn series_zeta_double(n_max: usize) -> Result<DirichletSeries> {
    DirichletSeries::from_fn(n_max, |n| Ok(is_square(n).is_some() as i64))
}

/// `a(n) = sigma(n)`.
pub fn series_sigma(n_max: usize) -> Result<DirichletSeries> {
    DirichletSeries::from_fn(n_max, sigma)
}

/// `a(n) = |P^1(Z/n)|`.
pub fn series_pf1(n_max: usize) -> Result<DirichletSeries> {
    DirichletSeries::from_fn(n_max, cardinality)
}

/// Number of index-`n` sublattices of `Z^2`, summed stratum by stratum.
pub fn series_z2(n_max: usize) -> Result<DirichletSeries> {
    DirichletSeries::from_fn(n_max, |n| strata(n)?.iter().map(|s| cardinality(s.d)).sum())
}

/// Kronecker symbol `(a / n)` for `n >= 1`.
pub fn kronecker(a: i64, n: i64) -> i64 {
    let mut n = n;
    let mut result = 1;
    while n % 2 == 0 {
        n /= 2;
        match a.rem_euclid(8) {
            1 | 7 => {}
            3 | 5 => result = -result,
            _ => return 0,
        }
    }
    // Jacobi symbol for odd n
    let mut a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// `a(n) = sum_{d | n} (disc / d)`, which counts ideals of norm `n` without
/// building them.
pub fn series_kronecker_count(ring: QuadRing, n_max: usize) -> Result<DirichletSeries> {
    let disc = ring.disc();
    DirichletSeries::from_fn(n_max, |n| Ok(divisors(n)?.iter().map(|&d| kronecker(disc, d)).sum()))
}

/// Dedekind zeta of `K`: `a(n)` = number of ideals of norm `n`.
pub fn series_ideal_count(ring: QuadRing, n_max: usize) -> Result<DirichletSeries> {
    DirichletSeries::from_fn(n_max, |n| Ok(enumerate_ideals(ring, n)?.len() as i64))
}

/// `zeta_K(s - 1)`: `a(n) = n * #{N(I) = n}`.
pub fn series_ideal_count_shift(ring: QuadRing, n_max: usize) -> Result<DirichletSeries> {
    DirichletSeries::from_fn(n_max, |n| Ok(n * enumerate_ideals(ring, n)?.len() as i64))
}

/// `zeta_K(2s)`: `a(n) = #{N(I) = sqrt(n)}` for squares, else 0.
pub fn series_ideal_count_double(ring: QuadRing, n_max: usize) -> Result<DirichletSeries> {
    DirichletSeries::from_fn(n_max, |n| match is_square(n) {
        Some(r) => Ok(enumerate_ideals(ring, r)?.len() as i64),
        None => Ok(0),
    })
}

/// `a(n) = sum_{N(I) = n} |P^1(O_K / I)|`.
pub fn series_ok_pf1(ring: QuadRing, n_max: usize) -> Result<DirichletSeries> {
    DirichletSeries::from_fn(n_max, |n| {
        enumerate_ideals(ring, n)?.iter().map(ok_cardinality).sum()
    })
}

/// Number of co-torsion submodules of `O_K^2` with quotient of order `n`,
/// counted through their invariants: pairs `(L, I)` with
/// `N(L)^2 N(I) = n`, each contributing `|P^1(O_K / I)|` modules.
pub fn series_ok_z2(ring: QuadRing, n_max: usize) -> Result<DirichletSeries> {
    DirichletSeries::from_fn(n_max, |n| {
        let mut total = 0;
        for s in divisors(n)? {
            if n % (s * s) != 0 {
                continue;
            }
            let ls = enumerate_ideals(ring, s)?.len() as i64;
            if ls == 0 {
                continue;
            }
            let per_l: i64 = enumerate_ideals(ring, n / (s * s))?.iter().map(ok_cardinality).sum::<Result<i64>>()?;
            total += ls * per_l;
        }
        Ok(total)
    })
}

/// Result of comparing two series coefficient by coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum IdentityReport {
    Equal { n_max: usize },
    Mismatch { n: usize, lhs: i64, rhs: i64 },
}

impl IdentityReport {
    pub fn is_equal(&self) -> bool {
        matches!(self, IdentityReport::Equal { .. })
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityReport::Equal { n_max } => write!(f, "equal up to {n_max}"),
            IdentityReport::Mismatch { n, lhs, rhs } => write!(f, "mismatch at n={n}: {lhs} != {rhs}"),
        }
    }
}

pub fn check_identity(lhs: &DirichletSeries, rhs: &DirichletSeries) -> Result<IdentityReport> {
    if lhs.n_max() != rhs.n_max() {
        return Err(Error::BadLength(format!("cannot compare lengths {} and {}", lhs.n_max(), rhs.n_max())));
    }
    for n in 1..=lhs.n_max() {
        if lhs.get(n) != rhs.get(n) {
            return Ok(IdentityReport::Mismatch { n, lhs: lhs.get(n), rhs: rhs.get(n) });
        }
    }
    Ok(IdentityReport::Equal { n_max: lhs.n_max() })
}

/// Writes `n,name1,name2,...` rows for series of equal length.
pub fn write_csv<W: Write>(out: W, columns: &[(&str, &DirichletSeries)]) -> Result<()> {
    let n_max = columns.first().map_or(0, |(_, s)| s.n_max());
    if columns.iter().any(|(_, s)| s.n_max() != n_max) {
        return Err(Error::BadLength("columns have different lengths".into()));
    }
    let io = |e: csv::Error| Error::Parse(format!("csv output failed: {e}"));
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["n"];
    header.extend(columns.iter().map(|(name, _)| *name));
    w.write_record(&header).map_err(io)?;
    for n in 1..=n_max {
        let mut row = vec![n.to_string()];
        row.extend(columns.iter().map(|(_, s)| s.get(n).to_string()));
        w.write_record(&row).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Parse(format!("csv output failed: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn head(s: &DirichletSeries, k: usize) -> Vec<i64> {
        s.coeffs()[..k].to_vec()
    }

    #[test]
    fn convolve_examples() {
        let one = series_zeta(12).unwrap();
        assert_eq!(convolve(&one, &one).unwrap().get(6), 4);
        assert_eq!(convolve(&series_zeta_shift(12).unwrap(), &one).unwrap().get(12), 28);
        let sq_pf1 = convolve(&series_zeta_double(12).unwrap(), &series_pf1(12).unwrap()).unwrap();
        assert_eq!(sq_pf1.get(12), 28);
        assert!(matches!(convolve(&one, &series_zeta(5).unwrap()), Err(Error::BadLength(_))));
        assert!(DirichletSeries::new(vec![]).is_err());
    }

    #[test]
    fn basic_series() {
        assert_eq!(head(&series_zeta_double(6).unwrap(), 6), vec![1, 0, 0, 1, 0, 0]);
        assert_eq!(head(&series_pf1(6).unwrap(), 6), vec![1, 3, 4, 6, 6, 12]);
        assert_eq!(series_zeta_shift(5).unwrap().get(5), 5);
        let z2 = series_z2(12).unwrap();
        assert_eq!((z2.get(1), z2.get(4), z2.get(12)), (1, 7, 28));
    }

    #[test]
    fn identity_examples() {
        let n = 100;
        let z2 = series_z2(n).unwrap();
        let lhs = convolve(&series_zeta_shift(n).unwrap(), &series_zeta(n).unwrap()).unwrap();
        assert_eq!(check_identity(&z2, &lhs).unwrap(), IdentityReport::Equal { n_max: 100 });
        let rhs = convolve(&series_zeta_double(n).unwrap(), &series_pf1(n).unwrap()).unwrap();
        assert!(check_identity(&z2, &rhs).unwrap().is_equal());
        let r = check_identity(&series_zeta(2).unwrap(), &series_zeta_shift(2).unwrap()).unwrap();
        assert_eq!(r, IdentityReport::Mismatch { n: 2, lhs: 1, rhs: 2 });
        assert_eq!(r.to_string(), "mismatch at n=2: 1 != 2");
        assert_eq!(IdentityReport::Equal { n_max: 100 }.to_string(), "equal up to 100");
    }

    #[test]
    fn field_examples() {
        let g = QuadRing::new(-1).unwrap();
        assert_eq!(head(&series_ideal_count(g, 5).unwrap(), 5), vec![1, 1, 0, 1, 2]);
        assert_eq!(series_ok_pf1(g, 2).unwrap().get(2), 3);
        let m5 = QuadRing::new(-5).unwrap();
        assert_eq!(series_ideal_count(m5, 2).unwrap().get(2), 1);
    }

    #[test]
    fn kronecker_values() {
        assert_eq!(kronecker(-4, 3), -1);
        assert_eq!(kronecker(-4, 5), 1);
        assert_eq!(kronecker(-4, 2), 0);
        assert_eq!(kronecker(-20, 3), 1);
        assert_eq!(kronecker(-3, 2), -1);
        assert_eq!(kronecker(-7, 2), 1);
        assert_eq!(kronecker(5, 1), 1);
    }

    #[test]
    fn csv_export() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &[("zeta", &series_zeta(2).unwrap()), ("shift", &series_zeta_shift(2).unwrap())]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n,zeta,shift\n1,1,1\n2,1,2\n");
    }
}
