use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use super::{GroupAlgebraElement, Permutation};
use crate::error::{Error, Result};
use crate::qarith::{Rational, RingElem};

/// Element of the Hecke algebra `H_n` over `Q(q)` in the `T_w` basis.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, RingElem>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    /// `T_w`
    pub fn basis(w: Permutation) -> Self {
        let n = w.degree();
        let mut terms = BTreeMap::new();
        terms.insert(w, RingElem::one());
        Self { n, terms }
    }

    /// `T_{s_i}`
    pub fn generator(i: usize, n: usize) -> Result<Self> {
        Ok(Self::basis(Permutation::simple(i, n)?))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, w: &Permutation) -> RingElem {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &RingElem)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Permutation, c: &RingElem) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RingElem) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// `T_{s_i} * self` by the two generator rules.
    pub fn left_mul_generator(&self, i: usize) -> Result<Self> {
        let s = Permutation::simple(i, self.n)?;
        let q_minus_qinv = &RingElem::q() - &RingElem::q_pow(-1);
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let sw = s.compose(w);
            if sw.length() > w.length() {
                out.add_term(sw, c);
            } else {
                out.add_term(w.clone(), &(c * &q_minus_qinv));
                out.add_term(sw, c);
            }
        }
        Ok(out)
    }

    /// `T_{s_{i_1}} ... T_{s_{i_l}} * self` for an arbitrary (not necessarily reduced) word.
    pub fn left_mul_word(&self, word: &[usize]) -> Result<Self> {
        word.iter().rev().try_fold(self.clone(), |acc, &i| acc.left_mul_generator(i))
    }

    /// `T_u T_v` expanded along the canonical reduced word of `u`; cached per pair.
    pub fn basis_product(u: &Permutation, v: &Permutation) -> Result<Arc<HeckeElement>> {
        if u.degree() != v.degree() {
            return Err(Error::DegreeMismatch(u.degree(), v.degree()));
        }
        let key = (u.clone(), v.clone());
        let cache = structure_constants();
        if let Some(hit) = cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let prod = Arc::new(Self::basis(v.clone()).left_mul_word(&u.reduced_word())?);
        let mut w = cache.write().unwrap();
        Ok(w.entry(key).or_insert(prod).clone())
    }

    /// Bilinear product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        let mut out = Self::zero(self.n);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let ab = a * b;
                for (w, c) in Self::basis_product(u, v)?.terms() {
                    out.add_term(w.clone(), &(&ab * c));
                }
            }
        }
        Ok(out)
    }

    /// Evaluation at `q = 1`, sending `T_w` to `w`.
    pub fn specialize_q1(&self) -> Result<GroupAlgebraElement> {
        let one = Rational::from_integer(1.into());
        let mut out = GroupAlgebraElement::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &c.eval(&one)?);
        }
        Ok(out)
    }
}

type ProductCache = RwLock<HashMap<(Permutation, Permutation), Arc<HeckeElement>>>;

fn structure_constants() -> &'static ProductCache {
    static CACHE: OnceLock<ProductCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Bilinear product of two Hecke elements.
pub fn hecke_multiply(a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
    a.mul(b)
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})*T{w}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(i: usize, n: usize) -> HeckeElement {
        HeckeElement::generator(i, n).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let t = s(1, 3);
        let sq = t.mul(&t).unwrap();
        let mut expect = t.scale(&(&RingElem::q() - &RingElem::q_pow(-1)));
        expect.add_term(Permutation::identity(3), &RingElem::one());
        assert_eq!(sq, expect);
    }

    #[test]
    fn lengths_add() {
        let p = s(1, 3).mul(&s(2, 3)).unwrap();
        let s1s2 = Permutation::simple(1, 3).unwrap().compose(&Permutation::simple(2, 3).unwrap());
        assert_eq!(p, HeckeElement::basis(s1s2));
    }

    #[test]
    fn identity_is_neutral() {
        for w in Permutation::all(3) {
            let tw = HeckeElement::basis(w);
            assert_eq!(HeckeElement::identity(3).mul(&tw).unwrap(), tw);
            assert_eq!(tw.mul(&HeckeElement::identity(3)).unwrap(), tw);
        }
    }

    #[test]
    fn specialization() {
        let t = s(1, 2);
        let sq = t.mul(&t).unwrap().specialize_q1().unwrap();
        assert_eq!(sq, GroupAlgebraElement::identity(2));
        assert_eq!(t.specialize_q1().unwrap(), GroupAlgebraElement::from_perm(Permutation::simple(1, 2).unwrap()));
        let pole = HeckeElement::identity(2).scale(&RingElem::from(crate::qarith::cyclotomic(1)).inv().unwrap());
        assert!(pole.specialize_q1().is_err());
    }

    #[test]
    fn degree_mismatch() {
        assert!(s(1, 2).mul(&s(1, 3)).is_err());
    }
}
