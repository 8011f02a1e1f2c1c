//! The one floating-point path: `(cos t) R + sin t = e^{-t gamma} (12) e^{t gamma}` on
//! `V^2`, `d = 2`, with `q = sec t - tan t`.

use num_traits::ToPrimitive;

use super::ops::{LinearOperator, OpKind};
use crate::error::Result;
use crate::qarith::{LaurentPoly, RingElem};
use crate::scalar::Param;
use crate::tensorspace::{operator_matrix, Word};

type Mat = Vec<Vec<f64>>;

fn laurent_f64(p: &LaurentPoly, q: f64) -> f64 {
    p.terms().map(|(e, c)| c.to_f64().unwrap_or(f64::NAN) * q.powi(e as i32)).sum()
}

fn ring_f64(e: &RingElem, q: f64) -> f64 {
    laurent_f64(e.numer(), q) / laurent_f64(e.denom(), q)
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect()
}

/// Taylor series, summed until the terms drop below machine precision.
fn expm(a: &Mat) -> Mat {
    let n = a.len();
    let mut out = identity(n);
    let mut term = identity(n);
    for k in 1..200 {
        term = matmul(&term, a);
        for row in term.iter_mut() {
            for x in row.iter_mut() {
                *x /= k as f64;
            }
        }
        let size = term.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs()));
        for i in 0..n {
            for j in 0..n {
                out[i][j] += term[i][j];
            }
        }
        if size < 1e-18 {
            break;
        }
    }
    out
}

/// `e_{ij}` on `V`, indices 1-based.
fn unit(d: usize, i: usize, j: usize) -> Mat {
    let mut m = vec![vec![0.0; d]; d];
    m[i - 1][j - 1] = 1.0;
    m
}

fn kron(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![0.0; n * m]; n * m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

/// `gamma = sum_{i<j} e_ij ∧ e_ji` with `a ∧ b = (a⊗b - b⊗a)/2`.
fn gamma(d: usize) -> Mat {
    let mut g = vec![vec![0.0; d * d]; d * d];
    for i in 1..=d {
        for j in i + 1..=d {
            let ab = kron(&unit(d, i, j), &unit(d, j, i));
            let ba = kron(&unit(d, j, i), &unit(d, i, j));
            for r in 0..d * d {
                for c in 0..d * d {
                    g[r][c] += 0.5 * (ab[r][c] - ba[r][c]);
                }
            }
        }
    }
    g
}

/// Maximum absolute entry of `(cos t) R + sin t - e^{-t gamma} (12) e^{t gamma}`.
pub fn rotation_check(t: f64) -> Result<f64> {
    let d = 2;
    let words = Word::all(2, d);
    let symbolic = Param::symbolic();
    let rbar = LinearOperator::new(OpKind::RBar(1), 2, d)?;
    let rmat = operator_matrix(&rbar.at(&symbolic), &words)?;
    let flip = operator_matrix(
        &LinearOperator::new(OpKind::PermAction(crate::symgroup::Permutation::simple(1, 2)?), 2, d)?.at(&symbolic),
        &words,
    )?;
    let q = 1.0 / t.cos() - t.tan();
    let dim = words.len();
    let g = gamma(d);
    let scaled = |s: f64| -> Mat { g.iter().map(|r| r.iter().map(|x| s * x).collect()).collect() };
    let flip_f: Mat = (0..dim).map(|i| (0..dim).map(|j| ring_f64(flip.get(i, j), 1.0)).collect()).collect();
    let rhs = matmul(&matmul(&expm(&scaled(-t)), &flip_f), &expm(&scaled(t)));
    let mut worst = 0.0f64;
    for i in 0..dim {
        for j in 0..dim {
            let lhs = t.cos() * ring_f64(rmat.get(i, j), q) + if i == j { t.sin() } else { 0.0 };
            worst = worst.max((lhs - rhs[i][j]).abs());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residuals_are_tiny() {
        assert!(rotation_check(0.0).unwrap() < 1e-15);
        for t in [0.1, 0.25, -0.3] {
            assert!(rotation_check(t).unwrap() <= 1e-9, "t = {t}");
        }
    }

    #[test]
    fn gamma_is_antisymmetric() {
        let g = gamma(3);
        for i in 0..9 {
            for j in 0..9 {
                assert_eq!(g[i][j], -g[j][i]);
            }
        }
    }
}
