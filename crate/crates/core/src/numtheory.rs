//! Integer number theory used by the cycle formulas: gcd, divisors, Euler's
//! totient and the alternating totient sum.

use crate::{Error, Result};

/// Greatest common divisor with `gcd(a, 0) = a` and `gcd(0, 0) = 0`.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// ascending prime order.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::domain("cannot factor 0"));
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(factors)
}

/// Smallest prime factor of `n`, or `None` for `n < 2`.
pub fn smallest_factor(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    factorize(n).ok().and_then(|f| f.first().map(|&(p, _)| p))
}

pub fn is_prime(n: u64) -> bool {
    smallest_factor(n) == Some(n)
}

/// Euler's totient: the number of `k` in `1..=n` coprime to `n`.
pub fn totient(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("totient is undefined at 0"));
    }
    let phi = factorize(n)?
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1));
    Ok(phi)
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::domain("divisors of 0 are not a finite set"));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// `sum over d | n of (-1)^d * totient(n / d)`, summed term by term.
///
/// Equals `-n` for odd `n` and `0` for even `n`; that value is checked by
/// tests, never used as a shortcut here.
pub fn alternating_totient_sum(n: u64) -> Result<i64> {
    let mut sum = 0i64;
    for d in divisors(n)? {
        let term = totient(n / d)? as i64;
        sum += if d % 2 == 0 { term } else { -term };
    }
    Ok(sum)
}
