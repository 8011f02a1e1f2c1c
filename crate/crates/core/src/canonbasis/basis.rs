use rayon::prelude::*;
use serde_json::{json, Value};

use super::pmorph::p_step;
use super::shapes::{enumerate_sequences, seq_to_tableau, GeneratingSequence, Partition, StandardTableau};
use crate::error::{Error, Result};
use crate::qarith::{is_unit, qfactorial, Rational, RingElem};
use crate::scalar::{Param, Scalar};
use crate::symgroup::Permutation;
use crate::tensorrep::{LinearOperator, OpKind};
use crate::tensorspace::{operator_matrix_into, Matrix, TensorVector, Word};

/// One canonical basis vector with its tableau and generating sequence.
#[derive(Clone, Debug)]
pub struct BasisVector<C: Scalar> {
    pub tableau: StandardTableau,
    pub sequence: GeneratingSequence,
    pub vector: TensorVector<C>,
}

/// The canonical orthogonal basis of `V(p; 0)`, sorted by tableau reading word.
#[derive(Clone, Debug)]
pub struct CanonicalBasis<C: Scalar> {
    pub partition: Partition,
    pub elements: Vec<BasisVector<C>>,
}

/// `P_{r_1} ... P_{r_n} 1`, applying `r_n` first.
pub fn sequence_vector<C: Scalar>(param: &Param<C>, s: &GeneratingSequence, d: usize) -> Result<TensorVector<C>> {
    let chain = s.partitions(d)?;
    let mut v = TensorVector::unit(d);
    for (k, &r) in s.rows().iter().rev().enumerate() {
        v = p_step(param, &chain[k], r, &v)?;
    }
    Ok(v)
}

pub fn build_basis<C: Scalar>(param: &Param<C>, p: &Partition) -> Result<CanonicalBasis<C>> {
    let d = p.rows();
    let mut elements = enumerate_sequences(p)
        .into_par_iter()
        .map(|s| {
            Ok(BasisVector {
                tableau: seq_to_tableau(&s, d)?,
                vector: sequence_vector(param, &s, d)?,
                sequence: s,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    elements.sort_by_key(|e| e.tableau.reading_word());
    Ok(CanonicalBasis { partition: p.clone(), elements })
}

impl<C: Scalar> CanonicalBasis<C> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &TensorVector<C>> {
        self.elements.iter().map(|e| &e.vector)
    }

    pub fn norms(&self) -> Result<Vec<C>> {
        self.vectors().map(|v| v.inner_product(v)).collect()
    }

    /// Every pair of distinct basis vectors is orthogonal.
    pub fn is_orthogonal(&self) -> Result<bool> {
        let v: Vec<_> = self.vectors().collect();
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if !v[a].inner_product(v[b])?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `X_i v = 0` for every basis vector and every `i`.
    pub fn in_kernel(&self, param: &Param<C>) -> Result<bool> {
        let (n, d) = (self.partition.size(), self.partition.rows());
        for i in 1..d {
            let x = LinearOperator::new(OpKind::X(i), n, d)?;
            for v in self.vectors() {
                if !x.apply(param, v)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Matrices of `R_1, ..., R_{n-1}` on the span, entry `(S, T) = (R v_T, v_S) / (v_S, v_S)`.
    pub fn rep_matrices(&self, param: &Param<C>) -> Result<Vec<Matrix<C>>> {
        let (n, d) = (self.partition.size(), self.partition.rows());
        let norms = self.norms()?;
        let inv: Vec<C> = norms
            .iter()
            .map(|c| c.inverse().ok_or_else(|| Error::Singular("basis vector of norm zero".into())))
            .collect::<Result<_>>()?;
        (1..n)
            .map(|i| {
                let r = LinearOperator::new(OpKind::RBar(i), n, d)?;
                let f = self.len();
                let mut m = Matrix::zeros(f, f);
                for (t, vt) in self.vectors().enumerate() {
                    let img = r.apply(param, vt)?;
                    for (s, vs) in self.vectors().enumerate() {
                        m.set(s, t, img.inner_product(vs)?.times(&inv[s]));
                    }
                }
                Ok(m)
            })
            .collect()
    }

    /// `R_i v_T = sum_S M_i[S, T] v_S` exactly, i.e. the span is an `H_n`-submodule.
    pub fn reconstructs(&self, param: &Param<C>, mats: &[Matrix<C>]) -> Result<bool> {
        let (n, d) = (self.partition.size(), self.partition.rows());
        for (i, m) in mats.iter().enumerate() {
            let r = LinearOperator::new(OpKind::RBar(i + 1), n, d)?;
            for (t, vt) in self.vectors().enumerate() {
                let mut sum = TensorVector::zero(n, d);
                for (s, vs) in self.vectors().enumerate() {
                    sum.axpy(m.get(s, t), vs)?;
                }
                if sum != r.apply(param, vt)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Matrices of every `T_w`, `w` in `S_n` in lexicographic order.
    pub fn tw_matrices(&self, param: &Param<C>) -> Result<Vec<Matrix<C>>> {
        let gens = self.rep_matrices(param)?;
        let n = self.partition.size();
        Permutation::all(n)
            .iter()
            .map(|w| {
                w.reduced_word()
                    .iter()
                    .try_fold(Matrix::identity(self.len()), |acc, &i| acc.mul(&gens[i - 1]))
            })
            .collect()
    }

    pub fn to_json(&self, all_units: Option<bool>) -> Value {
        let mut obj = json!({
            "partition": self.partition.parts(),
            "tableaux": self.elements.iter().map(|e| e.tableau.to_json()).collect::<Vec<_>>(),
            "vectors": self.elements.iter().map(|e| e.vector.to_json()).collect::<Vec<_>>(),
            "norms": self.norms().map(|ns| ns.iter().map(|c| c.to_string()).collect::<Vec<_>>()).unwrap_or_default(),
        });
        if let Some(u) = all_units {
            obj["all_units"] = json!(u);
        }
        obj
    }
}

impl CanonicalBasis<RingElem> {
    /// Whether every norm is a unit of `Z[q, q^-1, 1/n_{q^2}!]`.
    pub fn all_unit(&self, n: u32) -> Result<bool> {
        for c in self.norms()? {
            if !is_unit(&c, n)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Norms of the canonical basis of `p` over `Q(q)`.
pub fn norms(p: &Partition) -> Result<Vec<RingElem>> {
    build_basis(&Param::symbolic(), p)?.norms()
}

pub fn all_unit(p: &Partition, n: u32) -> Result<bool> {
    build_basis(&Param::symbolic(), p)?.all_unit(n)
}

/// Rejects `q0` at which `n_{q^2}!` vanishes.
pub fn check_evaluation_point(q0: &Rational, n: usize) -> Result<Param<Rational>> {
    if qfactorial(n as u32).eval(q0)?.is_zero() {
        return Err(Error::Invalid(format!("q0 = {q0} is a root of {n}_(q^2)!")));
    }
    Param::at(q0.clone())
}

/// Dimension of `ker X_1 ∩ ... ∩ ker X_{d-1}` on the multidegree-`p` words at `q = q0`,
/// by elimination on the stacked matrices.
pub fn kernel_dimension_oracle(p: &Partition, q0: &Rational) -> Result<usize> {
    let param = check_evaluation_point(q0, p.size())?;
    kernel_basis(&param, p).map(|k| k.len())
}

/// A basis of the joint kernel of the `X_i` on the multidegree-`p` component, in coordinates
/// on `Word::with_multidegree(p)`.
pub fn kernel_basis<C: Scalar>(param: &Param<C>, p: &Partition) -> Result<Vec<Vec<C>>> {
    let (n, d) = (p.size(), p.rows());
    let domain = Word::with_multidegree(p.parts());
    let mut rows: Vec<Vec<C>> = Vec::new();
    for i in 1..d {
        if p.part(i + 1) == 0 {
            continue;
        }
        let mut counts = p.parts().to_vec();
        counts[i - 1] += 1;
        counts[i] -= 1;
        let codomain = Word::with_multidegree(&counts);
        let x = LinearOperator::new(OpKind::X(i), n, d)?;
        let m = operator_matrix_into(&x.at(param), &domain, &codomain)?;
        rows.extend((0..m.rows()).map(|r| m.row(r).to_vec()));
    }
    if rows.is_empty() {
        return Ok((0..domain.len()).map(|k| unit_vec(domain.len(), k)).collect());
    }
    Ok(Matrix::from_rows(rows).nullspace())
}

fn unit_vec<C: Scalar>(len: usize, k: usize) -> Vec<C> {
    let mut v = vec![C::zero(); len];
    v[k] = C::one();
    v
}

fn flatten<C: Scalar>(m: &Matrix<C>) -> Vec<C> {
    m.entries().to_vec()
}

/// `H_n` acts on `V(p; 0)` as the full matrix ring: the `T_w` span `f^2` dimensions at `q0`.
pub fn spans_full_algebra(p: &Partition, q0: &Rational) -> Result<bool> {
    let param = check_evaluation_point(q0, p.size())?;
    let basis = build_basis(&param, p)?;
    let f = basis.len();
    let rows: Vec<Vec<Rational>> = basis.tw_matrices(&param)?.iter().map(flatten).collect();
    Ok(Matrix::from_rows(rows).rank() == f * f)
}

/// Rank of `w -> (T_w on V(p; 0))_p` into the sum of the endomorphism rings over all
/// partitions of `n` into `d` parts, with the expected value `sum f^2`.
pub fn joint_rank(n: usize, d: usize, q0: &Rational) -> Result<(usize, usize)> {
    let param = check_evaluation_point(q0, n)?;
    let perms = Permutation::all(n);
    let mut rows: Vec<Vec<Rational>> = vec![Vec::new(); perms.len()];
    let mut expected = 0;
    for p in Partition::all(n, d) {
        let basis = build_basis(&param, &p)?;
        expected += basis.len() * basis.len();
        for (row, m) in rows.iter_mut().zip(basis.tw_matrices(&param)?) {
            row.extend(flatten(&m));
        }
    }
    Ok((Matrix::from_rows(rows).rank(), expected))
}
