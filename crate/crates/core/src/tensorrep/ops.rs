use std::fmt;

use crate::error::{Error, Result};
use crate::qarith::{LaurentPoly, RingElem};
use crate::scalar::{Param, Scalar};
use crate::symgroup::Permutation;
use crate::tensorspace::{LinearMap, TensorVector, Word};

/// The operators acting on `V^n`.
#[derive(Clone, PartialEq, Debug)]
pub enum OpKind {
    Identity,
    /// `R_i` on tensor factors `i, i+1`.
    RBar(usize),
    X(usize),
    Y(usize),
    K(usize),
    KInv(usize),
    /// Quantized `H_i = q X_i Y_i - q^{-1} Y_i X_i`.
    H(usize),
    /// `1/2 + 1/2 H_0^2 + XY + YX` at `q = 1`, `d = 2`.
    CasimirClassical,
    /// `(q - q^{-1})^{-2}(qK + q^{-1}K^{-1} - 2) + q^{-1}K^{-1}YX`, `d = 2`.
    CasimirQuantized,
    /// Letter at position `k` moves to position `sigma(k)`.
    PermAction(Permutation),
    /// `ops[0] ∘ ops[1] ∘ ...`; the last factor acts first.
    Composite(Vec<LinearOperator>),
    LinearCombination(Vec<(RingElem, LinearOperator)>),
}

/// An operator on `V^n` with its ambient `(n, d)`.
#[derive(Clone, PartialEq, Debug)]
pub struct LinearOperator {
    kind: OpKind,
    n: usize,
    d: usize,
}

impl LinearOperator {
    pub fn new(kind: OpKind, n: usize, d: usize) -> Result<Self> {
        let check = |i: usize, max: usize| {
            if i == 0 || i > max {
                Err(Error::IndexOutOfRange { index: i, max })
            } else {
                Ok(())
            }
        };
        match &kind {
            OpKind::RBar(i) => check(*i, n.saturating_sub(1))?,
            OpKind::X(i) | OpKind::Y(i) | OpKind::K(i) | OpKind::KInv(i) | OpKind::H(i) => {
                check(*i, d.saturating_sub(1))?
            }
            OpKind::CasimirClassical | OpKind::CasimirQuantized if d != 2 => {
                return Err(Error::Invalid(format!("Casimir operators need d = 2, got d = {d}")));
            }
            OpKind::PermAction(p) if p.degree() != n => return Err(Error::DegreeMismatch(p.degree(), n)),
            OpKind::Composite(ops) => {
                for o in ops {
                    if o.ambient() != (n, d) {
                        return Err(Error::AmbientMismatch(o.n, o.d, n, d));
                    }
                }
            }
            OpKind::LinearCombination(ops) => {
                for (_, o) in ops {
                    if o.ambient() != (n, d) {
                        return Err(Error::AmbientMismatch(o.n, o.d, n, d));
                    }
                }
            }
            _ => {}
        }
        Ok(Self { kind, n, d })
    }

    pub fn kind(&self) -> &OpKind {
        &self.kind
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.n, self.d)
    }

    /// `self ∘ other`
    pub fn then_after(&self, other: &Self) -> Result<Self> {
        Self::new(OpKind::Composite(vec![self.clone(), other.clone()]), self.n, self.d)
    }

    /// `a*self + b*other`
    pub fn combine(a: RingElem, x: &Self, b: RingElem, y: &Self) -> Result<Self> {
        Self::new(OpKind::LinearCombination(vec![(a, x.clone()), (b, y.clone())]), x.n, x.d)
    }

    /// The commutator `[self, other]`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        Self::combine(
            RingElem::one(),
            &self.then_after(other)?,
            RingElem::from_int(-1),
            &other.then_after(self)?,
        )
    }

    /// Binds the operator to a coefficient field.
    pub fn at<'a, C: Scalar>(&'a self, param: &'a Param<C>) -> BoundOperator<'a, C> {
        BoundOperator { op: self, param }
    }

    pub fn apply<C: Scalar>(&self, param: &Param<C>, v: &TensorVector<C>) -> Result<TensorVector<C>> {
        if v.ambient() != (self.n, self.d) {
            let (n, d) = v.ambient();
            return Err(Error::AmbientMismatch(n, d, self.n, self.d));
        }
        match &self.kind {
            OpKind::Composite(ops) => ops.iter().rev().try_fold(v.clone(), |acc, o| o.apply(param, &acc)),
            OpKind::LinearCombination(terms) => {
                let mut out = TensorVector::zero(self.n, self.d);
                for (c, o) in terms {
                    out.axpy(&param.specialize(c)?, &o.apply(param, v)?)?;
                }
                Ok(out)
            }
            _ => self.at(param).apply(v),
        }
    }

    fn apply_word<C: Scalar>(&self, param: &Param<C>, w: &Word) -> Result<TensorVector<C>> {
        let d = self.d;
        match &self.kind {
            OpKind::Identity => Ok(TensorVector::from_word(w.clone(), d)),
            OpKind::RBar(i) => Ok(rbar_word(param, *i, w, d)),
            OpKind::X(i) => Ok(raise_lower_word(param, *i, w, d, true)),
            OpKind::Y(i) => Ok(raise_lower_word(param, *i, w, d, false)),
            OpKind::K(i) => Ok(TensorVector::from_word(w.clone(), d).scale(&param.q_pow(w.weight_unchecked(*i)))),
            OpKind::KInv(i) => {
                Ok(TensorVector::from_word(w.clone(), d).scale(&param.q_pow(-w.weight_unchecked(*i))))
            }
            OpKind::H(i) => {
                let c = param.q().times(&param.qnum(w.weight_unchecked(*i), true));
                Ok(TensorVector::from_word(w.clone(), d).scale(&c))
            }
            OpKind::CasimirClassical => casimir_classical_word(w, d),
            OpKind::CasimirQuantized => casimir_quantized_word(param, w, d),
            OpKind::PermAction(p) => Ok(TensorVector::from_word(w.permute_positions(p.images()), d)),
            OpKind::Composite(_) | OpKind::LinearCombination(_) => {
                self.apply(param, &TensorVector::from_word(w.clone(), d))
            }
        }
    }
}

impl fmt::Display for LinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            OpKind::Identity => write!(f, "1"),
            OpKind::RBar(i) => write!(f, "R{i}"),
            OpKind::X(i) => write!(f, "X{i}"),
            OpKind::Y(i) => write!(f, "Y{i}"),
            OpKind::K(i) => write!(f, "K{i}"),
            OpKind::KInv(i) => write!(f, "K{i}^-1"),
            OpKind::H(i) => write!(f, "H{i}"),
            OpKind::CasimirClassical => write!(f, "C0"),
            OpKind::CasimirQuantized => write!(f, "Cq"),
            OpKind::PermAction(p) => write!(f, "{}", p.cycle_string()),
            OpKind::Composite(ops) => {
                let parts: Vec<String> = ops.iter().map(|o| o.to_string()).collect();
                write!(f, "{}", parts.join("·"))
            }
            OpKind::LinearCombination(terms) => {
                let parts: Vec<String> = terms.iter().map(|(c, o)| format!("({c})({o})")).collect();
                write!(f, "{}", parts.join(" + "))
            }
        }
    }
}

/// A [`LinearOperator`] paired with the coefficient field it acts over.
pub struct BoundOperator<'a, C> {
    op: &'a LinearOperator,
    param: &'a Param<C>,
}

impl<C: Scalar> LinearMap<C> for BoundOperator<'_, C> {
    fn apply_word(&self, w: &Word) -> Result<TensorVector<C>> {
        self.op.apply_word(self.param, w)
    }

    fn apply(&self, v: &TensorVector<C>) -> Result<TensorVector<C>> {
        match self.op.kind {
            OpKind::Composite(_) | OpKind::LinearCombination(_) => self.op.apply(self.param, v),
            _ => {
                let (n, d) = v.ambient();
                let mut out = TensorVector::zero(n, d);
                for (w, c) in v.iter() {
                    out.axpy(c, &self.op.apply_word(self.param, w)?)?;
                }
                Ok(out)
            }
        }
    }
}

fn rbar_word<C: Scalar>(param: &Param<C>, i: usize, w: &Word, d: usize) -> TensorVector<C> {
    let l = w.letters();
    let (a, b) = (l[i - 1], l[i]);
    let mut swapped = l.to_vec();
    swapped.swap(i - 1, i);
    let swapped = Word::from_vec(swapped);
    let mut out = TensorVector::zero(w.len(), d);
    match a.cmp(&b) {
        std::cmp::Ordering::Equal => out.add_term(w.clone(), param.q()),
        std::cmp::Ordering::Less => {
            out.add_term(w.clone(), &param.q_minus_qinv());
            out.add_term(swapped, &C::one());
        }
        std::cmp::Ordering::Greater => out.add_term(swapped, &C::one()),
    }
    out
}

/// `X_i` (raise: letter `i+1 -> i`) or `Y_i` (lower: letter `i -> i+1`), each position `k`
/// weighted by `q^{|prefix before k|_i}`.
fn raise_lower_word<C: Scalar>(param: &Param<C>, i: usize, w: &Word, d: usize, raise: bool) -> TensorVector<C> {
    let (from, to) = if raise { (i + 1, i) } else { (i, i + 1) };
    let mut out = TensorVector::zero(w.len(), d);
    let mut prefix_weight = 0i64;
    for (k, &a) in w.letters().iter().enumerate() {
        let a = a as usize;
        if a == from {
            let mut v = w.letters().to_vec();
            v[k] = to as u8;
            out.add_term(Word::from_vec(v), &param.q_pow(prefix_weight));
        }
        if a == i {
            prefix_weight += 1;
        } else if a == i + 1 {
            prefix_weight -= 1;
        }
    }
    out
}

fn casimir_classical_word<C: Scalar>(w: &Word, d: usize) -> Result<TensorVector<C>> {
    let classical = Param::<C>::at_one();
    let (x, y) = (LinearOperator::new(OpKind::X(1), w.len(), d)?, LinearOperator::new(OpKind::Y(1), w.len(), d)?);
    let v = TensorVector::from_word(w.clone(), d);
    let h0 = w.weight_unchecked(1);
    let half = C::from_rational(crate::qarith::rational(1, 2));
    let diag = half.times(&C::from_int(1 + h0 * h0));
    let mut out = v.scale(&diag);
    out.axpy(&C::one(), &x.apply(&classical, &y.apply(&classical, &v)?)?)?;
    out.axpy(&C::one(), &y.apply(&classical, &x.apply(&classical, &v)?)?)?;
    Ok(out)
}

/// `(q^{m+1} + q^{-m-1} - 2) / (q - q^{-1})^2` for a word of weight `m`: the `K`-part of
/// the quantized Casimir, reduced in `Q(q)` so it stays finite at `q = 1`.
pub fn casimir_k_part(weight: i64) -> RingElem {
    let num = LaurentPoly::from_terms([
        (weight + 1, crate::qarith::rational(1, 1)),
        (-weight - 1, crate::qarith::rational(1, 1)),
        (0, crate::qarith::rational(-2, 1)),
    ]);
    let qd = LaurentPoly::from_terms([(1, crate::qarith::rational(1, 1)), (-1, crate::qarith::rational(-1, 1))]);
    RingElem::new(num, &qd * &qd).expect("nonzero denominator")
}

fn casimir_quantized_word<C: Scalar>(param: &Param<C>, w: &Word, d: usize) -> Result<TensorVector<C>> {
    let n = w.len();
    let m = w.weight_unchecked(1);
    let v = TensorVector::from_word(w.clone(), d);
    let mut out = v.scale(&param.specialize(&casimir_k_part(m))?);
    let yx = LinearOperator::new(OpKind::Y(1), n, d)?.apply(param, &LinearOperator::new(OpKind::X(1), n, d)?.apply(param, &v)?)?;
    // q^{-1} K^{-1} on YX w, which has the same weight m as w.
    out.axpy(&param.q_pow(-1 - m), &yx)?;
    Ok(out)
}

fn op<C: Scalar>(kind: OpKind, v: &TensorVector<C>) -> Result<LinearOperator> {
    let (n, d) = v.ambient();
    LinearOperator::new(kind, n, d)
}

/// `R_i v`
pub fn rbar_apply<C: Scalar>(param: &Param<C>, i: usize, v: &TensorVector<C>) -> Result<TensorVector<C>> {
    op(OpKind::RBar(i), v)?.apply(param, v)
}

pub fn x_apply<C: Scalar>(param: &Param<C>, i: usize, v: &TensorVector<C>) -> Result<TensorVector<C>> {
    op(OpKind::X(i), v)?.apply(param, v)
}

pub fn y_apply<C: Scalar>(param: &Param<C>, i: usize, v: &TensorVector<C>) -> Result<TensorVector<C>> {
    op(OpKind::Y(i), v)?.apply(param, v)
}

pub fn k_apply<C: Scalar>(param: &Param<C>, i: usize, v: &TensorVector<C>) -> Result<TensorVector<C>> {
    op(OpKind::K(i), v)?.apply(param, v)
}

pub fn h_apply<C: Scalar>(param: &Param<C>, i: usize, v: &TensorVector<C>) -> Result<TensorVector<C>> {
    op(OpKind::H(i), v)?.apply(param, v)
}

/// Classical Casimir; the operator is taken at `q = 1` whatever the coefficient field.
pub fn casimir_classical_apply<C: Scalar>(v: &TensorVector<C>) -> Result<TensorVector<C>> {
    op(OpKind::CasimirClassical, v)?.apply(&Param::at_one(), v)
}

/// Quantized Casimir; errors where the reduced `K`-part has a pole (`q0 = -1`, even weight).
pub fn casimir_quantized_apply<C: Scalar>(param: &Param<C>, v: &TensorVector<C>) -> Result<TensorVector<C>> {
    op(OpKind::CasimirQuantized, v)?.apply(param, v)
}

/// `T_w v = R_{i_1} ... R_{i_l} v` along the canonical reduced word of `w`.
pub fn apply_tw<C: Scalar>(param: &Param<C>, w: &Permutation, v: &TensorVector<C>) -> Result<TensorVector<C>> {
    let (n, _) = v.ambient();
    if w.degree() != n {
        return Err(Error::DegreeMismatch(w.degree(), n));
    }
    apply_rbar_word(param, &w.reduced_word(), v)
}

/// `R_{i_1} ... R_{i_l} v` for an arbitrary generator word.
pub fn apply_rbar_word<C: Scalar>(param: &Param<C>, word: &[usize], v: &TensorVector<C>) -> Result<TensorVector<C>> {
    word.iter().rev().try_fold(v.clone(), |acc, &i| rbar_apply(param, i, &acc))
}
