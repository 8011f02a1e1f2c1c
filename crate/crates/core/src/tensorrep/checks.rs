//! Operator identities on `V^n`, checked exactly word by word.

use super::ops::{casimir_classical_apply, LinearOperator, OpKind};
use crate::error::Result;
use crate::qarith::{rational, Rational, RingElem};
use crate::report::Report;
use crate::scalar::{Param, Scalar};
use crate::symgroup::Permutation;
use crate::tensorspace::{operator_matrix, FnMap, LinearMap, Matrix, TensorVector, Word};

fn op(kind: OpKind, n: usize, d: usize) -> Result<LinearOperator> {
    LinearOperator::new(kind, n, d)
}

fn compose(ops: &[&LinearOperator]) -> Result<LinearOperator> {
    let (n, d) = ops[0].ambient();
    LinearOperator::new(OpKind::Composite(ops.iter().map(|o| (*o).clone()).collect()), n, d)
}

/// `a == b` on every word of `V^n`.
pub fn operators_agree<C: Scalar>(param: &Param<C>, a: &LinearOperator, b: &LinearOperator) -> Result<bool> {
    let (n, d) = a.ambient();
    for w in Word::all(n, d) {
        let v = TensorVector::from_word(w, d);
        if a.apply(param, &v)? != b.apply(param, &v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn commute<C: Scalar>(param: &Param<C>, a: &LinearOperator, b: &LinearOperator) -> Result<bool> {
    operators_agree(param, &a.then_after(b)?, &b.then_after(a)?)
}

/// Braid relations of the `R_i` over `Q(q)`.
pub fn braid_relations(n: usize, d: usize) -> Result<Report> {
    let p = Param::symbolic();
    let mut report = Report::new(format!("braid relations n={n} d={d}"));
    for i in 1..n {
        for j in i + 1..n {
            let (ri, rj) = (op(OpKind::RBar(i), n, d)?, op(OpKind::RBar(j), n, d)?);
            if j == i + 1 {
                let lhs = compose(&[&ri, &rj, &ri])?;
                let rhs = compose(&[&rj, &ri, &rj])?;
                report.push(format!("R{i} R{j} R{i} = R{j} R{i} R{j}"), operators_agree(&p, &lhs, &rhs)?);
            } else {
                report.push(format!("R{i} R{j} = R{j} R{i}"), commute(&p, &ri, &rj)?);
            }
        }
    }
    Ok(report)
}

/// `R_i^2 = (q - q^{-1}) R_i + 1`.
pub fn hecke_relation(n: usize, d: usize) -> Result<Report> {
    let p = Param::symbolic();
    let mut report = Report::new(format!("Hecke quadratic relation n={n} d={d}"));
    for i in 1..n {
        let r = op(OpKind::RBar(i), n, d)?;
        let lhs = r.then_after(&r)?;
        let rhs = LinearOperator::combine(p.q_minus_qinv(), &r, RingElem::one(), &op(OpKind::Identity, n, d)?)?;
        report.push(format!("R{i}^2 = (q - q^-1) R{i} + 1"), operators_agree(&p, &lhs, &rhs)?);
    }
    Ok(report)
}

/// Symmetry of the matrix of each `R_i` in the word basis, and preservation of multidegree.
pub fn self_adjoint_and_balanced(n: usize, d: usize) -> Result<Report> {
    let p = Param::symbolic();
    let words = Word::all(n, d);
    let mut report = Report::new(format!("R_i self-adjoint and balanced n={n} d={d}"));
    for i in 1..n {
        let r = op(OpKind::RBar(i), n, d)?;
        report.push(format!("R{i} symmetric"), operator_matrix(&r.at(&p), &words)?.is_symmetric());
        let mut balanced = true;
        for w in &words {
            let img = r.at(&p).apply_word(w)?;
            balanced &= img.iter().all(|(u, _)| u.multidegree(d) == w.multidegree(d));
        }
        report.push(format!("R{i} preserves multidegree"), balanced);
    }
    Ok(report)
}

/// `[R_i, X_j] = [R_i, Y_j] = [R_i, K_j] = 0`.
pub fn commutant(n: usize, d: usize) -> Result<Report> {
    let p = Param::symbolic();
    let mut report = Report::new(format!("R_i commute with U_q sl_d n={n} d={d}"));
    for i in 1..n {
        let r = op(OpKind::RBar(i), n, d)?;
        for j in 1..d {
            for (name, kind) in [("X", OpKind::X(j)), ("Y", OpKind::Y(j)), ("K", OpKind::K(j))] {
                report.push(format!("[R{i}, {name}{j}] = 0"), commute(&p, &r, &op(kind, n, d)?)?);
            }
        }
    }
    Ok(report)
}

/// `X_i Y_{i±1} = q Y_{i±1} X_i`.
pub fn q_commutation(n: usize, d: usize) -> Result<Report> {
    let p = Param::symbolic();
    let mut report = Report::new(format!("X_i Y_(i±1) = q Y_(i±1) X_i n={n} d={d}"));
    for i in 1..d {
        for j in [i.wrapping_sub(1), i + 1] {
            if j == 0 || j >= d {
                continue;
            }
            let (x, y) = (op(OpKind::X(i), n, d)?, op(OpKind::Y(j), n, d)?);
            let lhs = x.then_after(&y)?;
            let rhs = LinearOperator::combine(RingElem::q(), &y.then_after(&x)?, RingElem::zero(), &x)?;
            report.push(format!("X{i} Y{j} = q Y{j} X{i}"), operators_agree(&p, &lhs, &rhs)?);
        }
    }
    Ok(report)
}

/// `(q^{-1} - q) H_i = 1 - K_i^2` and `q X_i Y_i - q^{-1} Y_i X_i = H_i`.
pub fn h_versus_k(n: usize, d: usize) -> Result<Report> {
    let p = Param::symbolic();
    let mut report = Report::new(format!("quantized H against K n={n} d={d}"));
    let one = op(OpKind::Identity, n, d)?;
    for i in 1..d {
        let (h, k, x, y) = (
            op(OpKind::H(i), n, d)?,
            op(OpKind::K(i), n, d)?,
            op(OpKind::X(i), n, d)?,
            op(OpKind::Y(i), n, d)?,
        );
        let lhs = LinearOperator::combine(-p.q_minus_qinv(), &h, RingElem::zero(), &h)?;
        let rhs = LinearOperator::combine(RingElem::one(), &one, RingElem::from_int(-1), &k.then_after(&k)?)?;
        report.push(format!("(q^-1 - q) H{i} = 1 - K{i}^2"), operators_agree(&p, &lhs, &rhs)?);
        let comm = LinearOperator::combine(RingElem::q(), &x.then_after(&y)?, -RingElem::q_pow(-1), &y.then_after(&x)?)?;
        report.push(format!("q X{i} Y{i} - q^-1 Y{i} X{i} = H{i}"), operators_agree(&p, &comm, &h)?);
    }
    Ok(report)
}

/// Matrix of the classical Casimir on all of `V^n`, `d = 2`.
pub fn classical_casimir_matrix(n: usize) -> Result<Matrix<Rational>> {
    let words = Word::all(n, 2);
    let map = FnMap(|w: &Word| casimir_classical_apply(&TensorVector::<Rational>::from_word(w.clone(), 2)));
    operator_matrix(&map, &words)
}

/// The expected spectrum `{(r+1)^2/2 : r = n, n-2, ...}`.
pub fn expected_casimir_eigenvalues(n: usize) -> Vec<Rational> {
    (0..=n / 2).map(|i| {
        let r = (n - 2 * i + 1) as i64;
        rational(r * r, 2)
    })
    .collect()
}

/// The classical Casimir on `V^n` (`d = 2`) is diagonalizable with exactly the expected
/// eigenvalues: their eigenspaces are nonzero and fill the space.
pub fn classical_casimir_spectrum(n: usize) -> Result<Report> {
    let m = classical_casimir_matrix(n)?;
    let dim = m.rows();
    let mut report = Report::new(format!("classical Casimir spectrum n={n}"));
    let mut total = 0;
    for lambda in expected_casimir_eigenvalues(n) {
        let shifted = m.sub(&Matrix::identity(dim).scale(&lambda))?;
        let k = shifted.nullspace().len();
        total += k;
        report.push_detail(format!("eigenvalue {lambda} occurs"), k > 0, format!("multiplicity {k}"));
    }
    report.push_detail("eigenspaces fill V^n", total == dim, format!("{total} of {dim}"));
    Ok(report)
}

/// Centrality (commutes with `R_i`, `X`, `Y`, `K`) and symmetry of the quantized Casimir.
pub fn quantized_casimir(n: usize) -> Result<Report> {
    let p = Param::symbolic();
    let d = 2;
    let c = op(OpKind::CasimirQuantized, n, d)?;
    let mut report = Report::new(format!("quantized Casimir n={n}"));
    let mut others = vec![
        ("X".to_string(), op(OpKind::X(1), n, d)?),
        ("Y".to_string(), op(OpKind::Y(1), n, d)?),
        ("K".to_string(), op(OpKind::K(1), n, d)?),
    ];
    for i in 1..n {
        others.push((format!("R{i}"), op(OpKind::RBar(i), n, d)?));
    }
    for (name, o) in &others {
        report.push(format!("[Cq, {name}] = 0"), commute(&p, &c, o)?);
    }
    let words = Word::all(n, d);
    report.push("Cq symmetric", operator_matrix(&c.at(&p), &words)?.is_symmetric());
    Ok(report)
}

/// `lim_{q -> 1} Cq = C0 / 2`, entrywise on the reduced matrix of `Cq`.
///
/// Each entry of `Cq` is reduced in `Q(q)` with a denominator not vanishing at 1, so its
/// expansion at `q = 1 + t` has no negative powers and its `t^0` term is the value at 1.
pub fn casimir_limit(n: usize) -> Result<Report> {
    let words = Word::all(n, 2);
    let cq = operator_matrix(&op(OpKind::CasimirQuantized, n, 2)?.at(&Param::symbolic()), &words)?;
    let one = rational(1, 1);
    let regular = cq.entries().iter().all(|e| e.denom().eval(&one).is_ok_and(|v| !v.is_zero()));
    let limit = cq.map(|e| e.eval(&one))?;
    let half_c0 = classical_casimir_matrix(n)?.scale(&rational(1, 2));
    let mut report = Report::new(format!("Casimir limit n={n}"));
    report.push("Cq has no pole at q = 1", regular);
    report.push("Cq(q=1) = C0/2", limit == half_c0);
    Ok(report)
}

/// Class sums of `S_n` acting by place permutations have symmetric matrices.
pub fn class_sums_symmetric(n: usize, d: usize) -> Result<Report> {
    use std::collections::BTreeMap;
    let words = Word::all(n, d);
    let classical = Param::<Rational>::classical();
    let mut classes: BTreeMap<Vec<usize>, Vec<Permutation>> = BTreeMap::new();
    for g in Permutation::all(n) {
        classes.entry(g.cycle_type()).or_default().push(g);
    }
    let mut report = Report::new(format!("class sums symmetric n={n} d={d}"));
    for (ty, members) in classes {
        let mut total = Matrix::<Rational>::zeros(words.len(), words.len());
        for g in members {
            total = total.add(&operator_matrix(&op(OpKind::PermAction(g), n, d)?.at(&classical), &words)?)?;
        }
        report.push(format!("class {ty:?}"), total.is_symmetric());
    }
    Ok(report)
}

/// `T_w` at `q = 1` is the place permutation by `w`.
pub fn classical_tw_is_permutation(n: usize, d: usize) -> Result<bool> {
    let classical = Param::<Rational>::classical();
    for w in Permutation::all(n) {
        let perm = op(OpKind::PermAction(w.clone()), n, d)?;
        for word in Word::all(n, d) {
            let v = TensorVector::from_word(word, d);
            if super::ops::apply_tw(&classical, &w, &v)? != perm.apply(&classical, &v)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
