//! Integer arithmetic: extended gcd, trial-division factorization and the
//! divisor functions used throughout the crate.

use std::fmt;

use crate::{Error, Result};

/// Default trial-division bound. Integers up to its square can be factored.
pub const DEFAULT_TRIAL_BOUND: i64 = 10_000_000;

/// Prime factorization of a positive integer, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    pairs: Vec<(i64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(i64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = i64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// The factored integer.
    pub fn value(&self) -> i64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b) * b).abs()
}

/// Extended Euclid: returns `(g, x, y)` with `g = gcd(a, b) >= 1` and
/// `a*x + b*y = g`.
pub fn xgcd(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    if a == 0 && b == 0 {
        return Err(Error::DegenerateInput("xgcd(0, 0)".into()));
    }
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        Ok((-r0, -s0, -t0))
    } else {
        Ok((r0, s0, t0))
    }
}

/// Inverse of `a` modulo `m` (`m >= 1`), if `a` is a unit.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = xgcd(a.rem_euclid(m), m).ok()?;
    (g == 1).then(|| x.rem_euclid(m))
}

/// Chinese remainder lift for coprime moduli: the unique `x` in `[0, m1*m2)`
/// with `x = r1 mod m1` and `x = r2 mod m2`.
pub fn crt_pair(r1: i64, m1: i64, r2: i64, m2: i64) -> Result<i64> {
    let (g, x, _) = xgcd(m1, m2)?;
    if g != 1 {
        return Err(Error::BadModuli(format!("{m1} and {m2} are not coprime")));
    }
    let m = m1 * m2;
    // x*m1 = 1 mod m2
    let k = ((r2 - r1) as i128 * x as i128).rem_euclid(m2 as i128) as i64;
    Ok((r1 + m1 * k).rem_euclid(m))
}

/// Deterministic primality by trial division.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn factorize(n: i64) -> Result<Factorization> {
    factorize_with_bound(n, DEFAULT_TRIAL_BOUND)
}

/// Trial-division factorization; `n` must not exceed `bound^2`.
pub fn factorize_with_bound(n: i64, bound: i64) -> Result<Factorization> {
    if n < 1 {
        return Err(Error::DegenerateInput(format!("cannot factor {n}")));
    }
    if n as i128 > bound as i128 * bound as i128 {
        return Err(Error::OutOfRange(format!(
            "{n} exceeds the trial-division range {bound}^2"
        )));
    }
    let mut pairs = Vec::new();
    let mut m = n;
    let mut push = |p: i64, m: &mut i64| {
        let mut e = 0;
        while *m % p == 0 {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            pairs.push((p, e));
        }
    };
    push(2, &mut m);
    let mut d = 3;
    while d * d <= m {
        push(d, &mut m);
        d += 2;
    }
    if m > 1 {
        pairs.push((m, 1));
    }
    Ok(Factorization { pairs })
}

/// Sum of divisors.
pub fn sigma(n: i64) -> Result<i64> {
    Ok(factorize(n)?
        .pairs()
        .iter()
        .map(|&(p, e)| (p.pow(e + 1) - 1) / (p - 1))
        .product())
}

/// All positive divisors, ascending.
pub fn divisors(n: i64) -> Result<Vec<i64>> {
    let fac = factorize(n)?;
    let mut out = vec![1i64];
    for &(p, e) in fac.pairs() {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: i64) -> i64 {
    assert!(n >= 0, "isqrt of negative {n}");
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// `Some(root)` when `n` is a perfect square.
pub fn is_square(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// Euler's totient.
pub fn totient(n: i64) -> Result<i64> {
    Ok(factorize(n)?
        .pairs()
        .iter()
        .map(|&(p, e)| p.pow(e - 1) * (p - 1))
        .product())
}

fn unzigzag(z: i64) -> i64 {
    if z % 2 == 1 {
        (z + 1) / 2
    } else {
        -z / 2
    }
}

/// Integer vectors of a fixed dimension in a deterministic order of
/// increasing max-norm, from the origin out to `radius`.
///
/// Within one shell the order is lexicographic on `0, 1, -1, 2, -2, ...`
/// with the first coordinate varying fastest.
#[derive(Debug, Clone)]
pub struct BoxSearch {
    radius: i64,
    shell: i64,
    counter: Vec<i64>,
    done: bool,
}

impl BoxSearch {
    pub fn new(dim: usize, radius: i64) -> Self {
        BoxSearch { radius, shell: 0, counter: vec![0; dim], done: dim == 0 }
    }

    fn advance(&mut self) -> bool {
        let top = 2 * self.shell;
        for c in self.counter.iter_mut() {
            if *c < top {
                *c += 1;
                return true;
            }
            *c = 0;
        }
        false
    }
}

impl Iterator for BoxSearch {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        if self.done {
            return None;
        }
        loop {
            let point: Vec<i64> = self.counter.iter().map(|&z| unzigzag(z)).collect();
            let on_shell = point.iter().any(|c| c.abs() == self.shell);
            if !self.advance() {
                self.shell += 1;
                self.counter.iter_mut().for_each(|c| *c = 0);
                if self.shell > self.radius {
                    self.done = true;
                }
            }
            if on_shell {
                return Some(point);
            }
            if self.done {
                return None;
            }
        }
    }
}
