//! t-adic valuations of `i_{q^2}` at `q = 1 + t` modulo small primes, and the
//! deformation and faithfulness checks for `H_n` at `q = 1 + t`.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::qarith::{is_prime, qnum, substitute_series, Rational};
use crate::scalar::Param;
use crate::symgroup::{HeckeElement, Permutation};
use crate::tensorrep::{apply_tw, LinearOperator, OpKind};
use crate::tensorspace::{operator_matrix, FnMap, Matrix, TensorVector, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationRow {
    pub prime: u64,
    pub index: u32,
    pub valuation: usize,
    pub leading_coeff: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationReport {
    pub n: u32,
    pub rows: Vec<ValuationRow>,
}

/// Order in `t` of `i_{(1+t)^2}` mod `p` and its lowest coefficient.
///
/// Starts at precision `4i` and doubles while the truncation vanishes, up to `2ip`.
pub fn valuation_row(i: u32, p: u64) -> Result<ValuationRow> {
    if i < 2 {
        return Err(Error::Invalid(format!("index {i} must be at least 2")));
    }
    if !is_prime(p) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    let poly = qnum(i as i64, true);
    let cap = 2 * i as usize * p as usize;
    let mut precision = 4 * i as usize;
    loop {
        let s = substitute_series(&poly, p, precision.min(cap))?;
        if let Some((valuation, leading_coeff)) = s.valuation() {
            return Ok(ValuationRow { prime: p, index: i, valuation, leading_coeff });
        }
        if precision >= cap {
            return Err(Error::PrecisionExhausted(format!("{i}_(q^2) vanishes mod {p} to order {cap}")));
        }
        precision *= 2;
    }
}

/// Rows for every prime in `primes` (default: primes `<= n`) and every `2 <= i <= n`.
pub fn report(n: u32, primes: Option<&[u64]>) -> Result<ValuationReport> {
    let default: Vec<u64> = (2..=n as u64).filter(|&p| is_prime(p)).collect();
    let primes = primes.unwrap_or(&default);
    let mut rows = Vec::new();
    for &p in primes {
        for i in 2..=n {
            rows.push(valuation_row(i, p)?);
        }
    }
    Ok(ValuationReport { n, rows })
}

impl ValuationReport {
    /// Every row has a finite valuation with a nonzero leading coefficient.
    pub fn no_rational_prime_in_s(&self) -> bool {
        self.rows.iter().all(|r| r.leading_coeff % r.prime != 0)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("prime,i,valuation,leading_coeff\n");
        for r in &self.rows {
            writeln!(out, "{},{},{},{}", r.prime, r.index, r.valuation, r.leading_coeff).unwrap();
        }
        writeln!(out, "no_rational_prime_in_S: {}", self.no_rational_prime_in_s()).unwrap();
        out
    }
}

/// The `T_w` multiplication table at `q = 1` is the multiplication table of `S_n`.
pub fn deformation_fiber_check(n: usize) -> Result<bool> {
    let perms = Permutation::all(n);
    for u in &perms {
        for v in &perms {
            let prod = HeckeElement::basis(u.clone()).mul(&HeckeElement::basis(v.clone()))?;
            let at_one = prod.specialize_q1()?;
            let expected = crate::symgroup::GroupAlgebraElement::from_perm(u.compose(v));
            if at_one != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `T_w` acting on `V^n` (`d = n`) agrees with the Hecke product on generator pairs and on
/// `random_pairs` random pairs, and the `n!` operators are independent at `q0`.
pub fn faithfulness_check(n: usize, q0: &Rational, random_pairs: usize, seed: u64) -> Result<bool> {
    let d = n;
    let sym = Param::symbolic();
    let perms = Permutation::all(n);
    let words = Word::all(n, d);
    let element_on = |h: &HeckeElement, v: &TensorVector| -> Result<TensorVector> {
        let mut out = TensorVector::zero(n, d);
        for (w, c) in h.terms() {
            out.axpy(c, &apply_tw(&sym, w, v)?)?;
        }
        Ok(out)
    };
    let agrees = |u: &Permutation, v: &Permutation| -> Result<bool> {
        let prod = HeckeElement::basis(u.clone()).mul(&HeckeElement::basis(v.clone()))?;
        for w in &words {
            let x = TensorVector::from_word(w.clone(), d);
            if element_on(&prod, &x)? != apply_tw(&sym, u, &apply_tw(&sym, v, &x)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let gens: Vec<Permutation> = (1..n).map(|i| Permutation::simple(i, n)).collect::<Result<_>>()?;
    for a in &gens {
        for b in &gens {
            if !agrees(a, b)? {
                return Ok(false);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_pairs {
        let u = &perms[rng.gen_range(0..perms.len())];
        let v = &perms[rng.gen_range(0..perms.len())];
        if !agrees(u, v)? {
            return Ok(false);
        }
    }

    let at_q0 = Param::at(q0.clone())?;
    let rows = perms
        .iter()
        .map(|w| {
            let map = FnMap(|word: &Word| apply_tw(&at_q0, w, &TensorVector::from_word(word.clone(), d)));
            Ok(operator_matrix(&map, &words)?.entries().to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(rows).rank() == perms.len())
}

/// Independence of the place permutations on `V^n`, a sanity anchor at `q = 1`.
pub fn classical_faithfulness(n: usize) -> Result<bool> {
    let classical = Param::<Rational>::classical();
    let words = Word::all(n, n);
    let rows = Permutation::all(n)
        .into_iter()
        .map(|w| {
            let op = LinearOperator::new(OpKind::PermAction(w), n, n)?;
            Ok(operator_matrix(&op.at(&classical), &words)?.entries().to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    let count = rows.len();
    Ok(Matrix::from_rows(rows).rank() == count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::rational;

    #[test]
    fn valuation_examples() {
        let r = valuation_row(2, 2).unwrap();
        assert_eq!((r.valuation, r.leading_coeff), (2, 1));
        let r = valuation_row(3, 3).unwrap();
        assert_eq!((r.valuation, r.leading_coeff), (2, 1));
        let r = valuation_row(2, 3).unwrap();
        assert_eq!((r.valuation, r.leading_coeff), (0, 2));
        assert!(valuation_row(2, 4).is_err());
        assert!(valuation_row(1, 2).is_err());
    }

    #[test]
    fn report_csv() {
        let rep = report(4, None).unwrap();
        assert_eq!(rep.rows.len(), 6);
        assert!(rep.no_rational_prime_in_s());
        let csv = rep.to_csv();
        assert!(csv.starts_with("prime,i,valuation,leading_coeff\n2,2,2,1\n"));
        assert!(csv.ends_with("no_rational_prime_in_S: true\n"));
        assert_eq!(csv, report(4, None).unwrap().to_csv());
    }

    #[test]
    fn deformation_and_faithfulness() {
        for n in 2..=3 {
            assert!(deformation_fiber_check(n).unwrap());
        }
        assert!(faithfulness_check(2, &rational(2, 1), 5, 1).unwrap());
        assert!(faithfulness_check(3, &rational(2, 1), 20, 1).unwrap());
        assert!(classical_faithfulness(3).unwrap());
    }
}
