//! The tensor power `V^n` of a rank-`d` module: words in the letters `1..=d`,
//! sparse vectors over an exact field, multidegrees and weights, the symmetric
//! bilinear inner product in which the words are orthonormal, and extraction of
//! operator matrices on spans of words.

mod matrix;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

pub use matrix::Matrix;

use crate::error::{Error, Result};
use crate::qarith::RingElem;
use crate::scalar::Scalar;

/// A monomial `x_{a_1} x_{a_2} ... x_{a_n}` of `V^n`, letters 1-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>, d: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&a| a == 0 || a as usize > d) {
            return Err(Error::IndexOutOfRange {
                index: bad as usize,
                max: d,
            });
        }
        Ok(Self(letters))
    }

    /// Unchecked constructor for internal rewrites that preserve the alphabet.
    pub(crate) fn from_vec(letters: Vec<u8>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter counts `(n_1, ..., n_d)`.
    pub fn multidegree(&self, d: usize) -> Multidegree {
        let mut counts = vec![0usize; d];
        for &a in &self.0 {
            counts[a as usize - 1] += 1;
        }
        Multidegree(counts)
    }

    /// `n_i - n_{i+1}` for `1 <= i <= d-1`.
    pub fn weight(&self, i: usize, d: usize) -> Result<i64> {
        if i == 0 || i >= d {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: d.saturating_sub(1),
            });
        }
        Ok(self.weight_unchecked(i))
    }

    pub(crate) fn weight_unchecked(&self, i: usize) -> i64 {
        self.0.iter().fold(0i64, |acc, &a| {
            if a as usize == i {
                acc + 1
            } else if a as usize == i + 1 {
                acc - 1
            } else {
                acc
            }
        })
    }

    /// `x_letter` followed by this word.
    pub fn prepend(&self, letter: u8) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        Self(v)
    }

    /// All `d^n` words in lexicographic order.
    pub fn all(n: usize, d: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (1..=d as u8).map(move |a| {
                        let mut v = w.0.clone();
                        v.push(a);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }

    /// All words with the given letter counts, in lexicographic order.
    pub fn with_multidegree(counts: &[usize]) -> Vec<Word> {
        let n: usize = counts.iter().sum();
        let mut out = Vec::new();
        let mut remaining = counts.to_vec();
        let mut cur = Vec::with_capacity(n);
        fn rec(rem: &mut [usize], cur: &mut Vec<u8>, n: usize, out: &mut Vec<Word>) {
            if cur.len() == n {
                out.push(Word(cur.clone()));
                return;
            }
            for k in 0..rem.len() {
                if rem[k] > 0 {
                    rem[k] -= 1;
                    cur.push(k as u8 + 1);
                    rec(rem, cur, n, out);
                    cur.pop();
                    rem[k] += 1;
                }
            }
        }
        rec(&mut remaining, &mut cur, n, &mut out);
        out
    }

    /// The word with letters moved by a position permutation: the letter at position `k`
    /// (1-based) goes to position `sigma(k)`.
    pub fn permute_positions(&self, images: &[usize]) -> Word {
        let mut v = vec![0u8; self.0.len()];
        for (k, &a) in self.0.iter().enumerate() {
            v[images[k] - 1] = a;
        }
        Word(v)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Letters 1..=4 print as `x y z w`, larger ones as `x5` etc.; the empty word as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for &a in &self.0 {
            match a {
                1 => f.write_str("x")?,
                2 => f.write_str("y")?,
                3 => f.write_str("z")?,
                4 => f.write_str("w")?,
                _ => write!(f, "x{a}")?,
            }
        }
        Ok(())
    }
}

/// Letter counts `(n_1, ..., n_d)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Multidegree(pub Vec<usize>);

impl Multidegree {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Sparse element of `V^n`.
#[derive(Clone, PartialEq)]
pub struct TensorVector<C = RingElem> {
    n: usize,
    d: usize,
    entries: BTreeMap<Word, C>,
}

impl<C: Scalar> TensorVector<C> {
    pub fn zero(n: usize, d: usize) -> Self {
        Self {
            n,
            d,
            entries: BTreeMap::new(),
        }
    }

    /// The unit `1` of `V^0`.
    pub fn unit(d: usize) -> Self {
        Self::from_word(Word::empty(), d)
    }

    pub fn from_word(w: Word, d: usize) -> Self {
        let mut v = Self::zero(w.len(), d);
        v.entries.insert(w, C::one());
        v
    }

    pub fn from_terms(n: usize, d: usize, terms: impl IntoIterator<Item = (Word, C)>) -> Result<Self> {
        let mut v = Self::zero(n, d);
        for (w, c) in terms {
            if w.len() != n {
                return Err(Error::AmbientMismatch(w.len(), d, n, d));
            }
            Word::new(w.0.clone(), d)?;
            v.add_term(w, &c);
        }
        Ok(v)
    }

    /// `(n, d)`
    pub fn ambient(&self) -> (usize, usize) {
        (self.n, self.d)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> C {
        self.entries.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in lexicographic word order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.entries.iter()
    }

    pub fn add_term(&mut self, w: Word, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.entries.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().plus(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if (self.n, self.d) != (other.n, other.d) {
            return Err(Error::AmbientMismatch(self.n, self.d, other.n, other.d));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (w, c) in &other.entries {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&C::one().negated()))
    }

    /// In-place `self += c * other`.
    pub fn axpy(&mut self, c: &C, other: &Self) -> Result<()> {
        self.check_ambient(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (w, x) in &other.entries {
            self.add_term(w.clone(), &c.times(x));
        }
        Ok(())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n, self.d);
        }
        Self {
            n: self.n,
            d: self.d,
            entries: self.entries.iter().map(|(w, x)| (w.clone(), x.times(c))).collect(),
        }
    }

    /// Left concatenation `x_letter * self`, landing in `V^{n+1}`.
    pub fn prepend(&self, letter: u8) -> Self {
        Self {
            n: self.n + 1,
            d: self.d,
            entries: self.entries.iter().map(|(w, c)| (w.prepend(letter), c.clone())).collect(),
        }
    }

    /// `sum_w u_w v_w`.
    pub fn inner_product(&self, other: &Self) -> Result<C> {
        self.check_ambient(other)?;
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        Ok(small.entries.iter().fold(C::zero(), |acc, (w, c)| match large.entries.get(w) {
            Some(x) => acc.plus(&c.times(x)),
            None => acc,
        }))
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> Result<D>) -> Result<TensorVector<D>> {
        let mut out = TensorVector::zero(self.n, self.d);
        for (w, c) in &self.entries {
            out.add_term(w.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// The common multidegree of all terms, if homogeneous and nonzero.
    pub fn multidegree(&self) -> Option<Multidegree> {
        let mut it = self.entries.keys().map(|w| w.multidegree(self.d));
        let first = it.next()?;
        it.all(|m| m == first).then_some(first)
    }

    /// Coordinates in the listed words; errors if some term lies outside.
    pub fn coordinates(&self, basis: &[Word]) -> Result<Vec<C>> {
        let index: BTreeMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut out = vec![C::zero(); basis.len()];
        for (w, c) in &self.entries {
            let i = index.get(w).ok_or_else(|| Error::OutsideSpan(w.to_string()))?;
            out[*i] = c.clone();
        }
        Ok(out)
    }

    /// JSON form: `[{ "word": [letters], "coeff": "<RingElem>" }, ...]`, words sorted.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|(w, c)| json!({ "word": w.letters(), "coeff": c.to_ring().to_string() }))
                .collect(),
        )
    }
}

impl<C: Scalar> fmt::Display for TensorVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.entries.iter().map(|(w, c)| format!("({c})*{w}")).collect();
        f.write_str(&terms.join(" + "))
    }
}

impl<C: Scalar> fmt::Debug for TensorVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A linear endomorphism of (a span of words in) `V^n`, given on basis words.
pub trait LinearMap<C: Scalar> {
    fn apply_word(&self, w: &Word) -> Result<TensorVector<C>>;

    fn apply(&self, v: &TensorVector<C>) -> Result<TensorVector<C>> {
        let (n, d) = v.ambient();
        let mut out: Option<TensorVector<C>> = None;
        for (w, c) in v.iter() {
            let img = self.apply_word(w)?;
            match out.as_mut() {
                None => out = Some(img.scale(c)),
                Some(acc) => acc.axpy(c, &img)?,
            }
        }
        Ok(out.unwrap_or_else(|| TensorVector::zero(n, d)))
    }
}

/// Wraps a closure on words as a [`LinearMap`].
pub struct FnMap<F>(pub F);

impl<C: Scalar, F: Fn(&Word) -> Result<TensorVector<C>>> LinearMap<C> for FnMap<F> {
    fn apply_word(&self, w: &Word) -> Result<TensorVector<C>> {
        (self.0)(w)
    }
}

/// Matrix of `op` on the span of `basis`: column `j` holds the coordinates of
/// `op(basis[j])`. Errors if an image leaves the span.
pub fn operator_matrix<C: Scalar>(op: &dyn LinearMap<C>, basis: &[Word]) -> Result<Matrix<C>> {
    operator_matrix_into(op, basis, basis)
}

/// Matrix of `op` from the span of `domain` into the span of `codomain`.
pub fn operator_matrix_into<C: Scalar>(
    op: &dyn LinearMap<C>,
    domain: &[Word],
    codomain: &[Word],
) -> Result<Matrix<C>> {
    let cols = domain
        .iter()
        .map(|w| op.apply_word(w)?.coordinates(codomain))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(cols, codomain.len()))
}

/// Exact right nullspace basis.
pub fn nullspace<C: Scalar>(m: &Matrix<C>) -> Vec<Vec<C>> {
    m.nullspace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::{rational, Rational};

    fn w(l: &[u8]) -> Word {
        Word::from_vec(l.to_vec())
    }

    #[test]
    fn multidegree_and_weight() {
        assert_eq!(w(&[1, 2, 1]).multidegree(2).counts(), &[2, 1]);
        assert_eq!(w(&[1, 1, 1]).multidegree(3).counts(), &[3, 0, 0]);
        assert_eq!(w(&[3, 1, 2]).multidegree(3).counts(), &[1, 1, 1]);
        assert_eq!(w(&[1, 2]).weight(1, 2).unwrap(), 0);
        assert_eq!(w(&[1, 1, 2]).weight(1, 2).unwrap(), 1);
        assert_eq!(w(&[2, 2, 2]).weight(1, 2).unwrap(), -3);
        assert!(w(&[1, 2]).weight(2, 2).is_err());
        assert!(w(&[1, 2]).weight(0, 2).is_err());
    }

    #[test]
    fn word_validation() {
        assert!(Word::new(vec![1, 3], 2).is_err());
        assert!(Word::new(vec![0], 2).is_err());
        assert!(Word::new(vec![2, 1], 2).is_ok());
    }

    #[test]
    fn enumeration_orders() {
        let all = Word::all(2, 2);
        assert_eq!(all, vec![w(&[1, 1]), w(&[1, 2]), w(&[2, 1]), w(&[2, 2])]);
        let md = Word::with_multidegree(&[2, 1]);
        assert_eq!(md, vec![w(&[1, 1, 2]), w(&[1, 2, 1]), w(&[2, 1, 1])]);
    }

    #[test]
    fn inner_product_examples() {
        let xy = TensorVector::<Rational>::from_word(w(&[1, 2]), 2);
        let yx = TensorVector::<Rational>::from_word(w(&[2, 1]), 2);
        assert_eq!(xy.inner_product(&xy).unwrap(), rational(1, 1));
        assert_eq!(xy.inner_product(&yx).unwrap(), rational(0, 1));
        // x(yx - xy) has norm 2
        let v = yx.sub(&xy).unwrap().prepend(1);
        assert_eq!(v.inner_product(&v).unwrap(), rational(2, 1));
        let other = TensorVector::<Rational>::from_word(w(&[1, 2]), 3);
        assert!(matches!(xy.inner_product(&other), Err(Error::AmbientMismatch(..))));
    }

    #[test]
    fn identity_operator_matrix() {
        let id = FnMap(|w: &Word| Ok(TensorVector::<Rational>::from_word(w.clone(), 2)));
        let basis = vec![w(&[1, 2]), w(&[2, 1])];
        assert_eq!(operator_matrix(&id, &basis).unwrap(), Matrix::identity(2));
        let flip = FnMap(|w: &Word| Ok(TensorVector::<Rational>::from_word(w.prepend(1), 2)));
        assert!(matches!(operator_matrix(&flip, &basis), Err(Error::OutsideSpan(_))));
    }

    #[test]
    fn json_form_is_sorted() {
        let v = TensorVector::<Rational>::from_terms(
            2,
            2,
            [(w(&[2, 1]), rational(1, 2)), (w(&[1, 2]), rational(-1, 1))],
        )
        .unwrap();
        assert_eq!(
            v.to_json().to_string(),
            r#"[{"coeff":"-1*q^0","word":[1,2]},{"coeff":"1/2*q^0","word":[2,1]}]"#
        );
    }
}
