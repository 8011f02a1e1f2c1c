use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Truncated power series in `t` over `F_p`, coefficients of `t^0 .. t^{precision-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeriesModP {
    prime: u64,
    coeffs: Vec<u64>,
}

impl PowerSeriesModP {
    pub fn new(prime: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= prime;
        }
        Self { prime, coeffs }
    }

    pub fn zero(prime: u64, precision: usize) -> Self {
        Self::new(prime, vec![0; precision])
    }

    pub fn one(prime: u64, precision: usize) -> Self {
        let mut s = Self::zero(prime, precision);
        if precision > 0 {
            s.coeffs[0] = 1;
        }
        s
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Lowest degree with a nonzero coefficient and that coefficient, or `None`
    /// if the truncation is identically zero.
    pub fn valuation(&self) -> Option<(usize, u64)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| **c != 0)
            .map(|(k, c)| (k, *c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.prime;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + b) % p)
            .collect();
        Self { prime: p, coeffs }
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.prime;
        Self {
            prime: p,
            coeffs: self.coeffs.iter().map(|a| mul_mod(*a, c, p)).collect(),
        }
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Self {
        let p = self.prime;
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                out[i + j] = (out[i + j] + mul_mod(*a, *b, p)) % p;
            }
        }
        Self { prime: p, coeffs: out }
    }
}

impl fmt::Display for PowerSeriesModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(k, c)| format!("{c}*t^{k}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0 + O(t^{})", self.coeffs.len())
        } else {
            write!(f, "{} + O(t^{}) mod {}", terms.join(" + "), self.coeffs.len(), self.prime)
        }
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn rational_mod(c: &Rational, p: u64) -> Result<u64> {
    let pb = BigInt::from(p);
    let den = c.denom().mod_floor(&pb);
    if den.is_zero() {
        return Err(Error::Invalid(format!("coefficient {c} has denominator divisible by {p}")));
    }
    let num = c.numer().mod_floor(&pb).to_u64().unwrap();
    let den = den.to_u64().unwrap();
    Ok(mul_mod(num, pow_mod(den, p - 2, p), p))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Substitutes `q = 1 + t` into a Laurent polynomial, reducing mod `prime` and keeping
/// the terms of degree below `precision`. Negative powers use `(1+t)^{-1} = sum (-t)^k`.
pub fn substitute_series(p: &LaurentPoly, prime: u64, precision: usize) -> Result<PowerSeriesModP> {
    if !super::is_prime(prime) {
        return Err(Error::Invalid(format!("modulus {prime} is not prime")));
    }
    if precision == 0 {
        return Err(Error::Invalid("precision must be at least 1".into()));
    }
    let mut one_plus_t = PowerSeriesModP::zero(prime, precision);
    one_plus_t.coeffs[0] = 1;
    if precision > 1 {
        one_plus_t.coeffs[1] = 1;
    }
    let geometric = PowerSeriesModP::new(
        prime,
        (0..precision)
            .map(|k| if k % 2 == 0 { 1 } else { prime - 1 })
            .collect(),
    );
    let mut acc = PowerSeriesModP::zero(prime, precision);
    for (e, c) in p.terms() {
        let c = rational_mod(c, prime)?;
        if c == 0 {
            continue;
        }
        let base = if e >= 0 { &one_plus_t } else { &geometric };
        let mut term = PowerSeriesModP::one(prime, precision);
        for _ in 0..e.unsigned_abs() {
            term = term.mul(base);
        }
        acc = acc.add(&term.scale(c));
    }
    Ok(acc)
}
