//! Verification suites for the canonical bases.

use super::basis::{build_basis, check_evaluation_point, kernel_basis, kernel_dimension_oracle, CanonicalBasis};
use super::pmorph::p_step;
use super::shapes::{Partition, StandardTableau};
use crate::error::Result;
use crate::qarith::{rational, Rational, RingElem};
use crate::report::Report;
use crate::scalar::{Param, Scalar};
use crate::tensorrep::{x_apply, y_apply};
use crate::tensorspace::{Matrix, TensorVector, Word};

fn coordinate_rank<C: Scalar>(vs: &[TensorVector<C>], p: &Partition) -> Result<usize> {
    if vs.is_empty() {
        return Ok(0);
    }
    let words = Word::with_multidegree(p.parts());
    let rows = vs.iter().map(|v| v.coordinates(&words)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(rows).rank())
}

fn killed_by_all_x<C: Scalar>(param: &Param<C>, v: &TensorVector<C>) -> Result<bool> {
    let d = v.ambient().1;
    for i in 1..d {
        if !x_apply(param, i, v)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Kernel property, orthogonality and rank for every partition of `n` into `d` parts.
///
/// Ranks are compared against the kernel-dimension oracle at `q0` and the tableau count.
pub fn basis_suite<C: Scalar>(param: &Param<C>, n: usize, d: usize, q0: &Rational) -> Result<Report> {
    let mut report = Report::new(format!("canonical bases n={n} d={d}"));
    let mut sum_squares = 0;
    for p in Partition::all(n, d) {
        let basis = build_basis(param, &p)?;
        let oracle = kernel_dimension_oracle(&p, q0)?;
        let tableaux = StandardTableau::all(&p).len();
        sum_squares += basis.len() * basis.len();
        report.push(format!("{p} X_i v = 0"), basis.in_kernel(param)?);
        report.push(format!("{p} orthogonal"), basis.is_orthogonal()?);
        report.push_detail(
            format!("{p} rank"),
            basis.len() == oracle && oracle == tableaux,
            format!("basis {}, kernel {oracle}, tableaux {tableaux}", basis.len()),
        );
    }
    if d >= n {
        let fact: usize = (1..=n).product();
        report.push_detail("sum f^2 = n!", sum_squares == fact, format!("{sum_squares} vs {fact}"));
    }
    Ok(report)
}

/// Unit norms over `Q(q)` for every partition of `n` into `d` parts, and at `q = 1` the
/// norms factor over primes `<= n`.
pub fn norms_suite(n: usize, d: usize) -> Result<Report> {
    let mut report = Report::new(format!("unit norms n={n} d={d}"));
    for p in Partition::all(n, d) {
        let basis = build_basis(&Param::symbolic(), &p)?;
        report.push(format!("{p} norms are units in Z[q,q^-1,1/n_(q^2)!]"), basis.all_unit(n as u32)?);
        let classical = build_basis(&Param::classical(), &p)?;
        let mut ok = true;
        for c in classical.norms()? {
            ok &= crate::qarith::is_unit_z_nfact(&c, n as u32);
        }
        report.push(format!("{p} norms at q=1 are units in Z[1/n!]"), ok);
    }
    Ok(report)
}

/// Matrices of the `R_i` on each basis satisfy the Hecke relation and reconstruct `R_i v` exactly.
pub fn submodule_suite<C: Scalar>(param: &Param<C>, n: usize, d: usize) -> Result<Report> {
    let mut report = Report::new(format!("R_i preserve the canonical spans n={n} d={d}"));
    let qq = param.q_minus_qinv();
    for p in Partition::all(n, d) {
        let basis = build_basis(param, &p)?;
        let mats = basis.rep_matrices(param)?;
        report.push(format!("{p} R_i v_T in span"), basis.reconstructs(param, &mats)?);
        let mut hecke = true;
        for m in &mats {
            let lhs = m.mul(m)?;
            let rhs = m.scale(&qq).add(&Matrix::identity(m.rows()))?;
            hecke &= lhs == rhs;
        }
        report.push(format!("{p} M^2 = (q - q^-1) M + 1"), hecke);
    }
    Ok(report)
}

/// The `P(p' -> p)` images of the `V(p'; 0)` lie in and span `V(p; 0)`, compared at `q0`.
pub fn spanning_suite(n: usize, d: usize, q0: &Rational) -> Result<Report> {
    let param = check_evaluation_point(q0, n)?;
    let mut report = Report::new(format!("V(p;0) is spanned by P(p'->p) images n={n} d={d} q0={q0}"));
    for p in Partition::all(n, d) {
        let mut images = Vec::new();
        for (r, pred) in p.predecessors() {
            for v in build_basis(&param, &pred)?.vectors() {
                images.push(p_step(&param, &pred, r, v)?);
            }
        }
        let mut inside = true;
        for v in &images {
            inside &= killed_by_all_x(&param, v)?;
        }
        let kernel = kernel_basis(&param, &p)?.len();
        let rank = coordinate_rank(&images, &p)?;
        report.push(format!("{p} images in kernel"), inside);
        report.push_detail(format!("{p} images span kernel"), rank == kernel, format!("rank {rank} of {kernel}"));
    }
    Ok(report)
}

fn two_row(n: usize, i: usize) -> Result<Partition> {
    Partition::new(vec![n - i, i])
}

/// `d = 2`: `V(n-i,i;0) = x V(n-i-1,i;0) ⊕ P V(n-i,i-1;0)` orthogonally.
pub fn two_row_decomposition(n: usize) -> Result<Report> {
    let param = Param::symbolic();
    let mut report = Report::new(format!("two-row orthogonal decomposition n={n}"));
    for i in 0..=n / 2 {
        let p = two_row(n, i)?;
        let left: Vec<TensorVector> = if n > 2 * i {
            build_basis(&param, &two_row(n - 1, i)?)?.vectors().map(|v| v.prepend(1)).collect()
        } else {
            Vec::new()
        };
        let right: Vec<TensorVector> = if i >= 1 {
            let pred = two_row(n - 1, i - 1)?;
            build_basis(&param, &pred)?
                .vectors()
                .map(|v| p_step(&param, &pred, 2, v))
                .collect::<Result<_>>()?
        } else {
            Vec::new()
        };
        let mut orthogonal = true;
        for a in &left {
            for b in &right {
                orthogonal &= a.inner_product(b)?.is_zero();
            }
        }
        let all: Vec<TensorVector> = left.iter().chain(&right).cloned().collect();
        let mut inside = true;
        for v in &all {
            inside &= killed_by_all_x(&param, v)?;
        }
        let kernel = kernel_basis(&param, &p)?.len();
        let rank = coordinate_rank(&all, &p)?;
        report.push(format!("{p} summands orthogonal"), orthogonal);
        report.push(format!("{p} summands in kernel"), inside);
        report.push_detail(
            format!("{p} summands fill V(p;0)"),
            rank == kernel && all.len() == kernel,
            format!("{} + {} of {kernel}", left.len(), right.len()),
        );
    }
    Ok(report)
}

/// For `alpha` in the canonical basis of `V(n-i,i;0)`, `lambda = n - 2i`:
/// `X Y^m alpha = q^{2-2m} (lambda-m+1) m Y^{m-1} alpha` (q²-numbers) for `1 <= m <= lambda`,
/// and `Y^{lambda+1} alpha = 0`.
pub fn lowering_suite(n: usize) -> Result<Report> {
    let param = Param::symbolic();
    let mut report = Report::new(format!("X Y^m on highest weight vectors n={n}"));
    for i in 0..=n / 2 {
        let p = two_row(n, i)?;
        let lambda = (n - 2 * i) as i64;
        let basis: CanonicalBasis<RingElem> = build_basis(&param, &p)?;
        let mut ladder_ok = true;
        let mut annihilated = true;
        for alpha in basis.vectors() {
            let mut prev = alpha.clone();
            for m in 1..=lambda {
                let cur = y_apply(&param, 1, &prev)?;
                let lhs = x_apply(&param, 1, &cur)?;
                let c = param.q_pow(2 - 2 * m).times(&param.qnum(lambda - m + 1, true)).times(&param.qnum(m, true));
                ladder_ok &= lhs == prev.scale(&c);
                prev = cur;
            }
            annihilated &= y_apply(&param, 1, &prev)?.is_zero();
        }
        report.push(format!("{p} X Y^m alpha = q^(2-2m)(lambda-m+1)m Y^(m-1) alpha"), ladder_ok);
        report.push(format!("{p} Y^(lambda+1) alpha = 0"), annihilated);
    }
    Ok(report)
}

/// The default evaluation points for rational checks.
pub fn sample_points() -> [Rational; 3] {
    [rational(2, 1), rational(3, 1), rational(5, 1)]
}
