use super::shapes::Partition;
use crate::error::{Error, Result};
use crate::qarith::{qnum, RingElem};
use crate::scalar::{Param, Scalar};
use crate::tensorrep::y_apply;
use crate::tensorspace::TensorVector;

fn part(p: &Partition, k: usize) -> i64 {
    p.part(k) as i64
}

/// `P^_i` for the step into `p` at row `r`:
/// `P^_0 = 1`, `P^_i = (n_{r-i+1} - n_r + i) Y_{r-i} P^_{i-1} - q (n_{r-i+1} - n_r + i - 1) P^_{i-1} Y_{r-i}`
/// with q²-numbers, the `n_k` taken from the target `p`.
pub fn phat_apply<C: Scalar>(
    param: &Param<C>,
    p: &Partition,
    r: usize,
    i: usize,
    v: &TensorVector<C>,
) -> Result<TensorVector<C>> {
    if r == 0 || r > p.rows() {
        return Err(Error::IndexOutOfRange { index: r, max: p.rows() });
    }
    if i >= r {
        return Err(Error::IndexOutOfRange { index: i, max: r - 1 });
    }
    if i == 0 {
        return Ok(v.clone());
    }
    let nr = part(p, r);
    let k = part(p, r - i + 1) - nr + i as i64;
    let first = y_apply(param, r - i, &phat_apply(param, p, r, i - 1, v)?)?;
    let second = phat_apply(param, p, r, i - 1, &y_apply(param, r - i, v)?)?;
    let mut out = first.scale(&param.qnum(k, true));
    out.axpy(&param.q().times(&param.qnum(k - 1, true)).negated(), &second)?;
    Ok(out)
}

/// `(-1)^i q^{-i} / [(n_{r-1} - n_r + 1) ... (n_{r-i} - n_r + i)]`, q²-numbers.
pub fn p_coefficient(p: &Partition, r: usize, i: usize) -> Result<RingElem> {
    let nr = part(p, r);
    let mut den = RingElem::one();
    for j in 1..=i {
        den = &den * &RingElem::from_poly(qnum(part(p, r - j) - nr + j as i64, true));
    }
    let sign = if i.is_multiple_of(2) { RingElem::one() } else { RingElem::from_int(-1) };
    Ok(&(&sign * &RingElem::q_pow(-(i as i64))) * &den.inv()?)
}

/// `P(p' -> p) v = sum_{i=0}^{r-1} x_{r-i} P_i v`, where `p = p'` plus a box in row `r`.
pub fn p_step<C: Scalar>(param: &Param<C>, from: &Partition, r: usize, v: &TensorVector<C>) -> Result<TensorVector<C>> {
    let to = from
        .add_box(r)
        .ok_or_else(|| Error::Invalid(format!("cannot add a box to row {r} of {from}")))?;
    let (m, d) = v.ambient();
    if m != from.size() || d != from.rows() {
        return Err(Error::AmbientMismatch(m, d, from.size(), from.rows()));
    }
    let mut out = TensorVector::zero(m + 1, d);
    for i in 0..r {
        let c = param.specialize(&p_coefficient(&to, r, i)?)?;
        let pi = phat_apply(param, &to, r, i, v)?.scale(&c);
        out.axpy(&C::one(), &pi.prepend((r - i) as u8))?;
    }
    Ok(out)
}

/// `P(p_from -> p_to)` for part vectors differing by one box.
///
/// A target that fails to be non-increasing has `V(p_to; 0) = 0`, so the map is zero there.
pub fn p_morphism_apply<C: Scalar>(
    param: &Param<C>,
    p_from: &[usize],
    p_to: &[usize],
    v: &TensorVector<C>,
) -> Result<TensorVector<C>> {
    let mismatch = || Error::Invalid(format!("{p_from:?} -> {p_to:?} is not a single-box step"));
    if p_from.len() != p_to.len() {
        return Err(mismatch());
    }
    let diffs: Vec<usize> = (0..p_from.len()).filter(|&k| p_from[k] != p_to[k]).collect();
    if diffs.len() != 1 || p_to[diffs[0]] != p_from[diffs[0]] + 1 {
        return Err(mismatch());
    }
    let from = Partition::new(p_from.to_vec())?;
    let r = diffs[0] + 1;
    if from.add_box(r).is_none() {
        let (m, d) = v.ambient();
        return Ok(TensorVector::zero(m + 1, d));
    }
    p_step(param, &from, r, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::rational;
    use crate::tensorspace::Word;

    fn word(l: &[u8], d: usize) -> Word {
        Word::new(l.to_vec(), d).unwrap()
    }

    #[test]
    fn small_steps() {
        let sym = Param::symbolic();
        let x = TensorVector::from_word(word(&[1], 2), 2);
        assert_eq!(p_morphism_apply(&sym, &[1, 0], &[2, 0], &x).unwrap(), TensorVector::from_word(word(&[1, 1], 2), 2));
        let mut e = TensorVector::from_word(word(&[2, 1], 2), 2);
        e.add_term(word(&[1, 2], 2), &-RingElem::q_pow(-1));
        assert_eq!(p_morphism_apply(&sym, &[1, 0], &[1, 1], &x).unwrap(), e);
        // |beta| = 0
        let xy = TensorVector::from_word(word(&[1, 2], 2), 2);
        assert!(p_morphism_apply(&sym, &[1, 1], &[1, 2], &xy).unwrap().is_zero());
        assert!(p_morphism_apply(&sym, &[1, 0], &[2, 1], &x).is_err());
    }

    #[test]
    fn p_of_xx() {
        let sym = Param::symbolic();
        let xx = TensorVector::from_word(word(&[1, 1], 2), 2);
        let from = Partition::new(vec![2, 0]).unwrap();
        let got = p_step(&sym, &from, 2, &xx).unwrap();
        let q = RingElem::q();
        let q3 = RingElem::q_pow(3);
        let mut e = TensorVector::from_word(word(&[2, 1, 1], 2), 2);
        e.add_term(word(&[1, 2, 1], 2), &-(&q + &q3).inv().unwrap());
        e.add_term(word(&[1, 1, 2], 2), &-(&RingElem::one() + &(&q * &q)).inv().unwrap());
        assert_eq!(got, e);
        let classical = Param::classical();
        let xx1 = TensorVector::from_word(word(&[1, 1], 2), 2);
        let got1 = p_step(&classical, &from, 2, &xx1).unwrap();
        assert_eq!(got1.coeff(&word(&[1, 2, 1], 2)), rational(-1, 2));
        assert_eq!(got1.coeff(&word(&[1, 1, 2], 2)), rational(-1, 2));
    }

    #[test]
    fn phat_depths() {
        let sym = Param::symbolic();
        let p = Partition::new(vec![1, 1, 1]).unwrap();
        let v = TensorVector::from_word(word(&[2, 1], 3), 3);
        assert_eq!(phat_apply(&sym, &p, 3, 0, &v).unwrap(), v);
        assert_eq!(phat_apply(&sym, &p, 3, 1, &v).unwrap(), y_apply(&sym, 2, &v).unwrap());
        assert!(phat_apply(&sym, &p, 3, 3, &v).is_err());
    }
}
