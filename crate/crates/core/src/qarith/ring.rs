use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{poly_divrem, poly_gcd};
use super::{LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Element of the rational function field `Q(q)`, kept as a reduced fraction.
///
/// Normal form: the denominator is a polynomial with nonzero constant term, integer
/// coefficients with content 1 and a positive leading coefficient; numerator and
/// denominator are coprime. Two equal elements are therefore structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RingElem {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn q() -> Self {
        Self::from_poly(LaurentPoly::q_pow(1))
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from_poly(LaurentPoly::q_pow(e))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }

    /// `num / den`, reduced. Errors on a zero denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// The element as a Laurent polynomial, if its denominator is 1.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(Self {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Evaluates at `q = q0`. Errors when `q0` is a pole.
    pub fn eval(&self, q0: &Rational) -> Result<Rational> {
        let d = self.den.eval(q0)?;
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator {} vanishes at q = {q0}", self.den)));
        }
        Ok(self.num.eval(q0)? / d)
    }

    /// Total degree spread used as a pivot-size heuristic.
    pub fn complexity(&self) -> usize {
        self.num.span() + self.den.span() + self.num.terms().count()
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = den.low_exp().unwrap();
        let mut num = num.shift(-shift);
        let mut den = den.shift(-shift);
        if den.span() > 0 && num.span() > 0 {
            let (nlow, ncoeffs) = num.dense();
            let (_, dcoeffs) = den.dense();
            let g = poly_gcd(ncoeffs, dcoeffs);
            if g.len() > 1 {
                let (nq, _) = poly_divrem(ncoeffs, &g);
                let (dq, _) = poly_divrem(dcoeffs, &g);
                num = LaurentPoly::from_dense(nlow, nq);
                den = LaurentPoly::from_dense(0, dq);
            }
        }
        // Scale the denominator to a primitive integer polynomial with positive leading term.
        let (k, ints) = den.to_integral();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let mut f = Rational::new(k, content);
        if den.leading_coeff().unwrap().is_negative() {
            f = -f;
        }
        if !f.is_one() {
            num = num.scale(&f);
            den = den.scale(&f);
        }
        Self { num, den }
    }
}

impl Default for RingElem {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RingElem {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<Rational> for RingElem {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl Zero for RingElem {
    fn zero() -> Self {
        RingElem::zero()
    }
    fn is_zero(&self) -> bool {
        RingElem::is_zero(self)
    }
}

impl One for RingElem {
    fn one() -> Self {
        RingElem::one()
    }
}

impl<'a> Add<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RingElem::from_poly(&self.num + &rhs.num);
            }
            return RingElem::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RingElem::normalize(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        if self.is_zero() || rhs.is_zero() {
            return RingElem::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RingElem::from_poly(&self.num * &rhs.num);
        }
        RingElem::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    /// Panics on division by zero; use [`RingElem::inv`] for a fallible inverse.
    fn div(self, rhs: &RingElem) -> RingElem {
        self * &rhs.inv().expect("division by zero in Q(q)")
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RingElem> for RingElem {
            type Output = RingElem;
            fn $m(self, rhs: RingElem) -> RingElem {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

/// `num / den`, or just `num` when the denominator is 1.
impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} / {}", self.num, self.den)
        }
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for RingElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(" / ") {
            None => Ok(Self::from_poly(s.parse()?)),
            Some((n, d)) => Self::new(n.parse()?, d.parse()?),
        }
    }
}
