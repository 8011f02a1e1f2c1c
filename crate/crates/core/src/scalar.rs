//! Coefficient fields shared by the exact code paths: `Q(q)` itself and its
//! specializations `q = q0` for rational `q0`.

use std::fmt::{Debug, Display};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qarith::{qnum, LaurentPoly, Rational, RingElem};

/// An exact field of coefficients.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inverse(&self) -> Option<Self>;
    fn from_rational(c: Rational) -> Self;
    /// Size heuristic for pivot selection.
    fn complexity(&self) -> usize;
    fn to_ring(&self) -> RingElem;
    /// Embeds an element of `Q(q)` when it lies in this field as-is.
    fn from_ring(e: &RingElem) -> Option<Self>;

    fn from_int(c: i64) -> Self {
        Self::from_rational(Rational::from_integer(c.into()))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn from_rational(c: Rational) -> Self {
        c
    }
    fn complexity(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
    fn to_ring(&self) -> RingElem {
        RingElem::from_rational(self.clone())
    }
    fn from_ring(e: &RingElem) -> Option<Self> {
        e.as_constant()
    }
}

impl Scalar for RingElem {
    fn zero() -> Self {
        RingElem::zero()
    }
    fn one() -> Self {
        RingElem::one()
    }
    fn is_zero(&self) -> bool {
        RingElem::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn from_rational(c: Rational) -> Self {
        RingElem::from_rational(c)
    }
    fn complexity(&self) -> usize {
        RingElem::complexity(self)
    }
    fn to_ring(&self) -> RingElem {
        self.clone()
    }
    fn from_ring(e: &RingElem) -> Option<Self> {
        Some(e.clone())
    }
}

/// The deformation parameter `q` as seen from a coefficient field: the generic
/// indeterminate for `RingElem`, or a fixed nonzero rational `q0`.
#[derive(Clone, Debug)]
pub struct Param<C> {
    q: C,
    q_inv: C,
    point: Option<Rational>,
}

impl Param<RingElem> {
    pub fn symbolic() -> Self {
        Self {
            q: RingElem::q(),
            q_inv: RingElem::q_pow(-1),
            point: None,
        }
    }
}

impl Param<Rational> {
    /// Specialization `q = q0`; `q0` must be nonzero.
    pub fn at(q0: Rational) -> Result<Self> {
        if Zero::is_zero(&q0) {
            return Err(Error::Invalid("q0 = 0 is not allowed".into()));
        }
        Ok(Self {
            q_inv: q0.recip(),
            q: q0.clone(),
            point: Some(q0),
        })
    }

    /// The classical point `q = 1`.
    pub fn classical() -> Self {
        Self::at(One::one()).unwrap()
    }
}

impl<C: Scalar> Param<C> {
    /// `q = 1` in any coefficient field; used for the classical operators.
    pub fn at_one() -> Self {
        Self {
            q: C::one(),
            q_inv: C::one(),
            point: Some(One::one()),
        }
    }

    pub fn is_classical(&self) -> bool {
        self.point.as_ref().is_some_and(One::is_one)
    }

    pub fn q(&self) -> &C {
        &self.q
    }

    pub fn q_inv(&self) -> &C {
        &self.q_inv
    }

    /// `None` when symbolic.
    pub fn point(&self) -> Option<&Rational> {
        self.point.as_ref()
    }

    pub fn q_pow(&self, e: i64) -> C {
        let (base, n) = if e >= 0 { (&self.q, e) } else { (&self.q_inv, -e) };
        (0..n).fold(C::one(), |acc, _| acc.times(base))
    }

    /// Image of a Laurent polynomial.
    pub fn laurent(&self, p: &LaurentPoly) -> C {
        if self.point.is_none() {
            if let Some(c) = C::from_ring(&RingElem::from_poly(p.clone())) {
                return c;
            }
        }
        p.terms().fold(C::zero(), |acc, (e, c)| {
            acc.plus(&C::from_rational(c.clone()).times(&self.q_pow(e)))
        })
    }

    /// Image of an element of `Q(q)`; errors at a pole.
    pub fn specialize(&self, e: &RingElem) -> Result<C> {
        if self.point.is_none() {
            if let Some(c) = C::from_ring(e) {
                return Ok(c);
            }
        }
        let d = self.laurent(e.denom());
        let inv = d
            .inverse()
            .ok_or_else(|| Error::Pole(format!("denominator {} vanishes", e.denom())))?;
        Ok(self.laurent(e.numer()).times(&inv))
    }

    /// `i_{q^2}` (or `i_q`).
    pub fn qnum(&self, i: i64, squared: bool) -> C {
        self.laurent(&qnum(i, squared))
    }

    /// `q - q^{-1}`
    pub fn q_minus_qinv(&self) -> C {
        self.q.minus(&self.q_inv)
    }
}
