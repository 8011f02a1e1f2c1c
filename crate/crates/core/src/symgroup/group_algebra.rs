use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::Permutation;
use crate::error::{Error, Result};
use crate::qarith::{parse_rational, Rational};

/// Element of the rational group algebra `Q S_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_perm(Permutation::identity(n))
    }

    pub fn from_perm(p: Permutation) -> Self {
        let n = p.degree();
        let mut terms = BTreeMap::new();
        terms.insert(p, Rational::one());
        Self { n, terms }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, Rational)>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (p, c) in terms {
            if p.degree() != n {
                return Err(Error::DegreeMismatch(p.degree(), n));
            }
            out.add_term(p, &c);
        }
        Ok(out)
    }

    /// Parses a cycle-notation sum such as `[(1, "e"), (-1, "(1 2 3)")]` scaled by `scale`.
    pub fn from_cycle_terms(n: usize, scale: Rational, terms: &[(i64, &str)]) -> Result<Self> {
        let mut out = Self::zero(n);
        for &(c, cyc) in terms {
            let p = if cyc == "e" { Permutation::identity(n) } else { Permutation::from_cycles(n, cyc)? };
            out.add_term(p, &(Rational::from_integer(c.into()) * &scale));
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: Permutation, c: &Rational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        let mut acc: BTreeMap<Permutation, Rational> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                *acc.entry(a.compose(b)).or_insert_with(Rational::zero) += x * y;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self { n: self.n, terms: acc })
    }

    /// `g * self * g^{-1}`
    pub fn conjugate(&self, g: &Permutation) -> Self {
        let gi = g.inverse();
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(p, c)| (g.compose(p).compose(&gi), c.clone())).collect(),
        }
    }

    /// `[{ "perm": "[..]", "coeff": "a/b" }, ...]`, sorted by permutation.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(p, c)| json!({ "perm": p.to_string(), "coeff": c.to_string() }))
                .collect(),
        )
    }

    pub fn from_json(n: usize, v: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed group algebra element: {v}"));
        let arr = v.as_array().ok_or_else(bad)?;
        let mut out = Self::zero(n);
        for t in arr {
            let p: Permutation = t["perm"].as_str().ok_or_else(bad)?.parse()?;
            let c = parse_rational(t["coeff"].as_str().ok_or_else(bad)?).ok_or_else(bad)?;
            if p.degree() != n {
                return Err(Error::DegreeMismatch(p.degree(), n));
            }
            out.add_term(p, &c);
        }
        Ok(out)
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, c)| format!("{c}*{}", p.cycle_string())).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
