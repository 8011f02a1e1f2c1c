use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Laurent polynomial in `q` with rational coefficients.
///
/// Stored densely as `q^low * (c_0 + c_1 q + ... + c_k q^k)` with `c_0` and `c_k` nonzero.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_dense(0, vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// `c * q^e`
    pub fn monomial(c: Rational, e: i64) -> Self {
        Self::from_dense(e, vec![c])
    }

    /// `q^e`
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// Builds `q^low * sum coeffs[k] q^k`, trimming zeros at both ends.
    pub fn from_dense(low: i64, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self {
            low: low + lead as i64,
            coeffs,
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let terms: Vec<(i64, Rational)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient (`None` for zero).
    pub fn low_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Spread `high - low` of the exponents; 0 for monomials and zero.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn trailing_coeff(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    pub fn coeff(&self, e: i64) -> Rational {
        let k = e - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            Rational::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    /// Returns the constant value if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.low == 0 && self.coeffs.len() == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            low: -self.high_exp().unwrap(),
            coeffs,
        }
    }

    /// Evaluates at a nonzero rational point. Errors on `q0 = 0` with negative exponents.
    pub fn eval(&self, q0: &Rational) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        if q0.is_zero() {
            if self.low < 0 {
                return Err(Error::Pole("negative power of q at q = 0".into()));
            }
            return Ok(self.coeff(0));
        }
        // Horner on the dense part, then multiply by q0^low.
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        Ok(acc * pow_rational(q0, self.low))
    }

    /// Clears denominators: returns `(k, p)` with `self = p / k`, `p` integral and `k > 0` minimal.
    pub fn to_integral(&self) -> (BigInt, Vec<BigInt>) {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        (l, coeffs)
    }

    pub(crate) fn dense(&self) -> (i64, &[Rational]) {
        (self.low, &self.coeffs)
    }

    /// Exact division in `Q[q, q^{-1}]`; `None` when the quotient is not a Laurent polynomial.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (quot, rem) = poly_divrem(&self.coeffs, &other.coeffs);
        if !rem.is_empty() {
            return None;
        }
        Some(Self::from_dense(self.low - other.low, quot))
    }
}

pub(crate) fn pow_rational(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow::pow(x.clone(), e as usize)
    } else {
        num_traits::pow::pow(x.recip(), (-e) as usize)
    }
}

/// Polynomial long division of dense coefficient vectors (ascending order).
/// Returns `(quotient, remainder)` with the remainder trimmed.
pub(crate) fn poly_divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem: Vec<Rational> = num.to_vec();
    let dlen = den.len();
    trim(&mut rem);
    if rem.len() < dlen {
        return (Vec::new(), rem);
    }
    let lead_inv = den[dlen - 1].recip();
    let mut quot = vec![Rational::zero(); rem.len() - dlen + 1];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dlen - 1] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            if !d.is_zero() {
                rem[k + j] -= &c * d;
            }
        }
        quot[k] = c;
    }
    rem.truncate(dlen - 1);
    trim(&mut rem);
    (quot, rem)
}

pub(crate) fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Monic gcd of two polynomials (ascending dense form) over Q.
pub(crate) fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = poly_divrem(&a, &b);
        a = b;
        b = r;
        if let Some(l) = b.last().cloned() {
            let inv = l.recip();
            for c in b.iter_mut() {
                *c *= &inv;
            }
        }
    }
    if let Some(l) = a.last().cloned() {
        let inv = l.recip();
        for c in a.iter_mut() {
            *c *= &inv;
        }
    }
    a
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(rhs.low);
        let hi = self.high_exp().unwrap().max(rhs.high_exp().unwrap());
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - lo) as usize + k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - lo) as usize + k] += c;
        }
        LaurentPoly::from_dense(lo, coeffs)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text form: terms in descending exponent order, each `c*q^e`,
/// joined by ` + ` / ` - `.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let mag = fmt_rational(&c.abs());
            match (k, c.is_negative()) {
                (0, false) => write!(f, "{mag}*q^{e}")?,
                (0, true) => write!(f, "-{mag}*q^{e}")?,
                (_, false) => write!(f, " + {mag}*q^{e}")?,
                (_, true) => write!(f, " - {mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let bad = || Error::Parse(format!("malformed Laurent polynomial: {s:?}"));
        let mut terms = Vec::new();
        let mut rest = s;
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        loop {
            let (term, tail) = match (rest.find(" + "), rest.find(" - ")) {
                (None, None) => (rest, None),
                (Some(a), None) => (&rest[..a], Some((1, &rest[a + 3..]))),
                (None, Some(b)) => (&rest[..b], Some((-1, &rest[b + 3..]))),
                (Some(a), Some(b)) if a < b => (&rest[..a], Some((1, &rest[a + 3..]))),
                (Some(_), Some(b)) => (&rest[..b], Some((-1, &rest[b + 3..]))),
            };
            let (c, e) = term.split_once("*q^").ok_or_else(bad)?;
            let c: Rational = parse_rational(c).ok_or_else(bad)?;
            let e: i64 = e.parse().map_err(|_| bad())?;
            terms.push((e, c * Rational::from_integer(sign.into())));
            match tail {
                None => break,
                Some((sg, t)) => {
                    sign = sg;
                    rest = t;
                }
            }
        }
        Ok(Self::from_terms(terms))
    }
}

/// Parses `a` or `a/b`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            (!b.is_zero()).then(|| Rational::new(a, b))
        }
    }
}
