//! Exact arithmetic in `Q(q)`: Laurent polynomials, reduced rational functions,
//! q-numbers and q-factorials, cyclotomic polynomials, the unit test for the
//! localized ring `Z[q, q^{-1}, 1/n_{q^2}!]`, and power series at `q = 1 + t` mod p.

mod laurent;
mod ring;
mod series;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use laurent::{parse_rational, LaurentPoly};
pub use ring::RingElem;
pub use series::{substitute_series, PowerSeriesModP};

use crate::error::{Error, Result};

/// Arbitrary-precision rational with reduced sign-normalized fraction.
pub type Rational = num_rational::BigRational;

pub fn rational(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

/// `(1 - q^{ki}) / (1 - q^k)` with `k = 2` if `squared`, else `k = 1`.
pub fn qnum(i: i64, squared: bool) -> LaurentPoly {
    let k = if squared { 2 } else { 1 };
    if i >= 0 {
        LaurentPoly::from_terms((0..i).map(|j| (k * j, Rational::one())))
    } else {
        // (1 - q^{-km}) / (1 - q^k) = -q^{-km} (1 - q^{km}) / (1 - q^k)
        let m = -i;
        LaurentPoly::from_terms((0..m).map(|j| (k * j - k * m, -Rational::one())))
    }
}

/// `n_{q^2}! = 2_{q^2} 3_{q^2} ... n_{q^2}`.
pub fn qfactorial(n: u32) -> LaurentPoly {
    (2..=n as i64).fold(LaurentPoly::one(), |acc, i| &acc * &qnum(i, true))
}

/// The `d`-th cyclotomic polynomial, by exact division of `q^d - 1` by the
/// cyclotomic polynomials of the proper divisors of `d`.
pub fn cyclotomic(d: u32) -> LaurentPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut p = LaurentPoly::from_terms([(d as i64, Rational::one()), (0, -Rational::one())]);
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = p
                .exact_div(&cyclotomic(e))
                .expect("cyclotomic factor divides q^d - 1");
        }
    }
    p
}

/// `{d >= 3 : d | 2i for some 2 <= i <= n}`: the cyclotomic indices made invertible
/// by inverting `n_{q^2}!`.
pub fn allowed_cyclotomic_indices(n: u32) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    for i in 2..=n {
        for d in 3..=2 * i {
            if (2 * i) % d == 0 {
                out.insert(d);
            }
        }
    }
    out
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Divides an integer polynomial (ascending) by a monic one, if exact.
fn divide_monic_exact(a: &[BigInt], m: &[BigInt]) -> Option<Vec<BigInt>> {
    if a.len() < m.len() {
        return None;
    }
    let mut rem = a.to_vec();
    let dl = m.len();
    let mut quot = vec![BigInt::zero(); a.len() - dl + 1];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dl - 1].clone();
        if c.is_zero() {
            continue;
        }
        for (j, mj) in m.iter().enumerate() {
            rem[k + j] -= &c * mj;
        }
        quot[k] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

fn strip_allowed(mut p: Vec<BigInt>, allowed: &[Vec<BigInt>]) -> Vec<BigInt> {
    // q-power factors are already gone: callers pass the dense part only.
    for m in allowed {
        while let Some(q) = divide_monic_exact(&p, m) {
            p = q;
        }
    }
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn is_plus_minus_one(p: &[BigInt]) -> bool {
    p.len() == 1 && p[0].abs().is_one()
}

/// Whether `e` is a unit of `Z[q, q^{-1}, 1/n_{q^2}!]`.
///
/// Writes `e` as a quotient of coprime-content integer polynomials, then strips the
/// cyclotomic factors `Phi_d` for `d` in [`allowed_cyclotomic_indices`]; `e` is a unit
/// iff both residuals are `+-1`.
pub fn is_unit(e: &RingElem, n: u32) -> Result<bool> {
    if e.is_zero() {
        return Err(Error::Invalid("is_unit: zero is never a unit".into()));
    }
    let (kn, mut num) = e.numer().to_integral();
    let (kd, mut den) = e.denom().to_integral();
    for c in num.iter_mut() {
        *c *= &kd;
    }
    for c in den.iter_mut() {
        *c *= &kn;
    }
    let g = num
        .iter()
        .chain(den.iter())
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    for c in num.iter_mut().chain(den.iter_mut()) {
        *c = &*c / &g;
    }
    let allowed: Vec<Vec<BigInt>> = allowed_cyclotomic_indices(n)
        .into_iter()
        .map(|d| cyclotomic(d).to_integral().1)
        .collect();
    let num = strip_allowed(num, &allowed);
    let den = strip_allowed(den, &allowed);
    Ok(is_plus_minus_one(&num) && is_plus_minus_one(&den))
}

/// Rational prime factors of `x`, by trial division.
pub fn prime_factors(x: &BigInt) -> Vec<u64> {
    let mut x = x.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while BigInt::from(p) * BigInt::from(p) <= x {
        let bp = BigInt::from(p);
        if (&x % &bp).is_zero() {
            out.push(p);
            while (&x % &bp).is_zero() {
                x /= &bp;
            }
        }
        p += 1;
    }
    if x > BigInt::one() {
        use num_traits::ToPrimitive;
        out.push(x.to_u64().unwrap_or(u64::MAX));
    }
    out
}

/// Whether a nonzero rational is a unit of `Z[1/n!]`, i.e. all primes in it are `<= n`.
pub fn is_unit_z_nfact(c: &Rational, n: u32) -> bool {
    !c.is_zero()
        && prime_factors(c.numer())
            .into_iter()
            .chain(prime_factors(c.denom()))
            .all(|p| p <= n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, rational(c, 1))))
    }

    #[test]
    fn qnum_examples() {
        assert_eq!(qnum(3, true), lp(&[(0, 1), (2, 1), (4, 1)]));
        assert!(qnum(0, false).is_zero());
        assert_eq!(qnum(-1, true), lp(&[(-2, -1)]));
    }

    #[test]
    fn qnum_negative_matches_division() {
        for i in -6i64..0 {
            for squared in [false, true] {
                let k = if squared { 2 } else { 1 };
                let num = lp(&[(0, 1), (k * i, -1)]);
                let den = lp(&[(0, 1), (k, -1)]);
                let expect = RingElem::new(num, den).unwrap();
                assert_eq!(RingElem::from(qnum(i, squared)), expect, "i = {i}");
            }
        }
    }

    #[test]
    fn qfactorial_examples() {
        assert_eq!(qfactorial(3), lp(&[(0, 1), (2, 2), (4, 2), (6, 1)]));
        assert!(qfactorial(1).is_one());
        assert_eq!(qfactorial(2).eval(&Rational::one()).unwrap(), rational(2, 1));
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), lp(&[(1, 1), (0, -1)]));
        assert_eq!(cyclotomic(4), lp(&[(2, 1), (0, 1)]));
        assert_eq!(cyclotomic(6), lp(&[(2, 1), (1, -1), (0, 1)]));
        // q^4 - 1 divided by Phi_1 Phi_2 is Phi_4
        let q4 = lp(&[(4, 1), (0, -1)]);
        let rest = q4.exact_div(&(&cyclotomic(1) * &cyclotomic(2))).unwrap();
        assert_eq!(rest, cyclotomic(4));
    }

    #[test]
    fn is_unit_examples() {
        assert!(is_unit(&RingElem::q_pow(5), 3).unwrap());
        assert!(!is_unit(&RingElem::from(lp(&[(1, 1), (0, -1)])), 3).unwrap());
        assert!(is_unit(&RingElem::from(lp(&[(0, 1), (2, 1)])), 4).unwrap());
        assert!(!is_unit(&RingElem::from_int(2), 3).unwrap());
        assert!(is_unit(&RingElem::from_int(-1), 2).unwrap());
        assert!(is_unit(&RingElem::zero(), 3).is_err());
        // q + 1 = Phi_2 is never inverted
        assert!(!is_unit(&RingElem::from(lp(&[(1, 1), (0, 1)])), 5).unwrap());
        // 1 / (1 + q^2 + q^4) is a unit once 3_{q^2} is inverted
        let inv = RingElem::from(qnum(3, true)).inv().unwrap();
        assert!(is_unit(&inv, 3).unwrap());
        assert!(!is_unit(&inv, 2).unwrap());
    }

    #[test]
    fn series_examples() {
        let s = substitute_series(&LaurentPoly::q_pow(1), 2, 3).unwrap();
        assert_eq!(s.coeffs(), &[1, 1, 0]);
        let s = substitute_series(&lp(&[(0, 1), (2, 1)]), 2, 4).unwrap();
        assert_eq!(s.coeffs(), &[0, 0, 1, 0]);
        let s = substitute_series(&LaurentPoly::q_pow(-1), 3, 3).unwrap();
        assert_eq!(s.coeffs(), &[1, 2, 1]);
        assert!(substitute_series(&LaurentPoly::one(), 4, 3).is_err());
    }

    #[test]
    fn z_nfact_units() {
        assert!(is_unit_z_nfact(&rational(3, 2), 3));
        assert!(!is_unit_z_nfact(&rational(5, 2), 3));
        assert!(!is_unit_z_nfact(&Rational::zero(), 3));
    }
}
