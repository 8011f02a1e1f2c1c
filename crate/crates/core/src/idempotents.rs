//! Idempotents of `Q S_n` at `q = 1`: central ones, the canonical projections onto the
//! canonical basis vectors, and the Frobenius-Young idempotents for comparison.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canonbasis::{build_basis, Partition, StandardTableau};
use crate::error::{Error, Result};
use crate::qarith::{prime_factors, rational, Rational};
use crate::report::Report;
use crate::scalar::Param;
use crate::symgroup::{GroupAlgebraElement, Permutation};
use crate::tensorspace::Matrix;

/// The matrices of every permutation on every `V(p; 0)`, `d = n`, in the canonical basis at `q = 1`.
pub struct RepresentationTable {
    n: usize,
    perms: Vec<Permutation>,
    partitions: Vec<Partition>,
    tableaux: Vec<Vec<StandardTableau>>,
    /// `rho[p][k]` is the matrix of `perms[k]` on the module of `partitions[p]`.
    rho: Vec<Vec<Matrix<Rational>>>,
    /// Inverse of the `n! x n!` matrix sending coefficient vectors to stacked block entries.
    solver: Matrix<Rational>,
}

pub fn rep_table(n: usize) -> Result<RepresentationTable> {
    if !(1..=5).contains(&n) {
        return Err(Error::Invalid(format!("n = {n} is outside 1..=5")));
    }
    let classical = Param::classical();
    let perms = Permutation::all(n);
    let partitions = Partition::all(n, n);
    let mut tableaux = Vec::new();
    let mut rho = Vec::new();
    for p in &partitions {
        let basis = build_basis(&classical, p)?;
        tableaux.push(basis.elements.iter().map(|e| e.tableau.clone()).collect());
        rho.push(basis.tw_matrices(&classical)?);
    }
    // column k: all block entries of rho(perms[k])
    let columns: Vec<Vec<Rational>> = (0..perms.len())
        .map(|k| rho.iter().flat_map(|blocks| blocks[k].entries().to_vec()).collect())
        .collect();
    let solver = Matrix::from_columns(columns, perms.len()).inverse()?;
    Ok(RepresentationTable { n, perms, partitions, tableaux, rho, solver })
}

impl RepresentationTable {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn tableaux(&self, p: usize) -> &[StandardTableau] {
        &self.tableaux[p]
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.tableaux.iter().map(Vec::len).collect()
    }

    pub fn matrix(&self, p: usize, g: &Permutation) -> &Matrix<Rational> {
        let k = self.perms.binary_search(g).expect("permutation of the right degree");
        &self.rho[p][k]
    }

    /// `rho_p(a)` for every `p`.
    pub fn blocks(&self, a: &GroupAlgebraElement) -> Result<Vec<Matrix<Rational>>> {
        self.partitions
            .iter()
            .enumerate()
            .map(|(p, _)| {
                let f = self.tableaux[p].len();
                a.terms()
                    .try_fold(Matrix::zeros(f, f), |acc, (g, c)| acc.add(&self.matrix(p, g).scale(c)))
            })
            .collect()
    }

    /// The unique element with the given block images.
    pub fn element_with_blocks(&self, blocks: &[Matrix<Rational>]) -> Result<GroupAlgebraElement> {
        let target: Vec<Rational> = blocks.iter().flat_map(|m| m.entries().to_vec()).collect();
        if target.len() != self.perms.len() {
            return Err(Error::DegreeMismatch(target.len(), self.perms.len()));
        }
        let coeffs = self.solver.apply(&target);
        GroupAlgebraElement::from_terms(self.n, self.perms.iter().cloned().zip(coeffs))
    }

    fn partition_index(&self, p: &Partition) -> Result<usize> {
        self.partitions
            .iter()
            .position(|x| x == p)
            .ok_or_else(|| Error::Invalid(format!("{p} is not a partition of {} into {} parts", self.n, self.n)))
    }

    fn zero_blocks(&self) -> Vec<Matrix<Rational>> {
        self.tableaux.iter().map(|t| Matrix::zeros(t.len(), t.len())).collect()
    }

    /// `rho(g h) = rho(g) rho(h)` on `pairs` random pairs drawn from a fixed seed.
    pub fn is_multiplicative(&self, pairs: usize, seed: u64) -> Result<bool> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..pairs {
            let g = &self.perms[rng.gen_range(0..self.perms.len())];
            let h = &self.perms[rng.gen_range(0..self.perms.len())];
            for p in 0..self.partitions.len() {
                if self.matrix(p, &g.compose(h)) != &self.matrix(p, g).mul(self.matrix(p, h))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Acts as the identity on `V(p; 0)` and as zero on the other modules.
pub fn central_idempotent(table: &RepresentationTable, p: &Partition) -> Result<GroupAlgebraElement> {
    let k = table.partition_index(p)?;
    let mut blocks = table.zero_blocks();
    blocks[k] = Matrix::identity(blocks[k].rows());
    table.element_with_blocks(&blocks)
}

/// Projection onto the canonical basis vector of `t`.
pub fn canonical_idempotent(table: &RepresentationTable, t: &StandardTableau) -> Result<GroupAlgebraElement> {
    let k = table.partition_index(&t.shape(table.n)?)?;
    let pos = table.tableaux[k]
        .iter()
        .position(|x| x == t)
        .ok_or_else(|| Error::Invalid(format!("{t} is not a tableau of the table")))?;
    let mut blocks = table.zero_blocks();
    blocks[k].set(pos, pos, rational(1, 1));
    table.element_with_blocks(&blocks)
}

/// `(f / n!) * (column antisymmetrizer) * (row symmetrizer)`.
pub fn frobenius_young_idempotent(t: &StandardTableau) -> Result<GroupAlgebraElement> {
    let n = t.size();
    let rows = t.rows();
    let cols: Vec<Vec<usize>> = (0..rows[0].len())
        .map(|j| rows.iter().filter_map(|r| r.get(j).copied()).collect())
        .collect();
    let row_sym = rows
        .iter()
        .try_fold(GroupAlgebraElement::identity(n), |acc, r| acc.mul(&set_symmetrizer(n, r, false)))?;
    let col_anti = cols
        .iter()
        .try_fold(GroupAlgebraElement::identity(n), |acc, c| acc.mul(&set_symmetrizer(n, c, true)))?;
    let f = StandardTableau::all(&t.shape(n)?).len() as i64;
    let fact: i64 = (1..=n as i64).product();
    Ok(col_anti.mul(&row_sym)?.scale(&rational(f, fact)))
}

/// Sum over permutations of `set` (fixing everything else), signed when `signed`.
fn set_symmetrizer(n: usize, set: &[usize], signed: bool) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::zero(n);
    for g in Permutation::all(set.len()) {
        let mut images: Vec<usize> = (1..=n).collect();
        for (k, &x) in set.iter().enumerate() {
            images[x - 1] = set[g.apply(k + 1) - 1];
        }
        let c = if signed { g.sign() } else { 1 };
        out.add_term(Permutation::new(images).expect("permutation of a subset"), &rational(c, 1));
    }
    out
}

/// The idempotent identities for `n`.
pub fn invariants(table: &RepresentationTable) -> Result<Report> {
    let n = table.n;
    let mut report = Report::new(format!("idempotents n={n}"));
    let one = GroupAlgebraElement::identity(n);
    report.push_detail(
        "sum f^2 = n!",
        table.dimensions().iter().map(|f| f * f).sum::<usize>() == table.perms.len(),
        format!("dimensions {:?}", table.dimensions()),
    );
    report.push("rho multiplicative on 20 random pairs", table.is_multiplicative(20, 7)?);

    let mut central_sum = GroupAlgebraElement::zero(n);
    let mut canonical_all = Vec::new();
    for (k, p) in table.partitions.iter().enumerate() {
        let e = central_idempotent(table, p)?;
        let conj = table.perms.iter().all(|g| e.conjugate(g) == e);
        report.push(format!("{p} central idempotent: e^2 = e"), e.mul(&e)? == e);
        report.push(format!("{p} central idempotent: g e g^-1 = e"), conj);
        central_sum = central_sum.add(&e)?;

        let mut shape_sum = GroupAlgebraElement::zero(n);
        let mut fy_sum = GroupAlgebraElement::zero(n);
        let mut fy_ok = true;
        for t in table.tableaux(k) {
            let c = canonical_idempotent(table, t)?;
            shape_sum = shape_sum.add(&c)?;
            let fy = frobenius_young_idempotent(t)?;
            fy_ok &= fy.mul(&fy)? == fy;
            fy_sum = fy_sum.add(&fy)?;
            canonical_all.push((t.clone(), c));
        }
        report.push(format!("{p} canonical idempotents sum to the central one"), shape_sum == e);
        report.push(format!("{p} Frobenius-Young idempotents are idempotent"), fy_ok);
        if n <= 4 {
            report.push(format!("{p} Frobenius-Young sum equals the central idempotent"), fy_sum == e);
        }
    }
    report.push("central idempotents sum to 1", central_sum == one);

    let mut orthogonal = true;
    let mut idempotent = true;
    let mut denominators = true;
    let mut total = GroupAlgebraElement::zero(n);
    for (i, (_, a)) in canonical_all.iter().enumerate() {
        idempotent &= a.mul(a)? == *a;
        for (j, (_, b)) in canonical_all.iter().enumerate() {
            if i != j {
                orthogonal &= a.mul(b)?.is_zero();
            }
        }
        denominators &= a.terms().all(|(_, c)| prime_factors(c.denom()).iter().all(|&p| p as usize <= n));
        total = total.add(a)?;
    }
    report.push("canonical idempotents are idempotent", idempotent);
    report.push("canonical idempotents are pairwise orthogonal", orthogonal);
    report.push("canonical idempotents sum to 1", total == one);
    report.push("canonical idempotents have coefficients in Z[1/n!]", denominators);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn cyc(scale: Rational, terms: &[(i64, &str)]) -> GroupAlgebraElement {
        GroupAlgebraElement::from_cycle_terms(3, scale, terms).unwrap()
    }

    #[test]
    fn three() {
        let table = rep_table(3).unwrap();
        assert_eq!(table.dimensions(), vec![1, 2, 1]);
        let p21 = Partition::new(vec![2, 1, 0]).unwrap();
        let e21 = central_idempotent(&table, &p21).unwrap();
        assert_eq!(e21, cyc(rational(1, 3), &[(2, "e"), (-1, "(1 2 3)"), (-1, "(1 3 2)")]));
        let trivial = central_idempotent(&table, &Partition::new(vec![3, 0, 0]).unwrap()).unwrap();
        let all_sixth =
            GroupAlgebraElement::from_terms(3, Permutation::all(3).into_iter().map(|g| (g, rational(1, 6)))).unwrap();
        assert_eq!(trivial, all_sixth);
        assert_eq!(canonical_idempotent(&table, &t(&[&[1, 2, 3]])).unwrap(), all_sixth);
        assert_eq!(frobenius_young_idempotent(&t(&[&[1, 2, 3]])).unwrap(), all_sixth);

        let c1 = canonical_idempotent(&table, &t(&[&[1, 2], &[3]])).unwrap();
        let c2 = canonical_idempotent(&table, &t(&[&[1, 3], &[2]])).unwrap();
        let half = rational(1, 2);
        assert_eq!(c1, cyc(half.clone(), &[(1, "e"), (1, "(2 3)")]).mul(&e21).unwrap());
        assert_eq!(c2, cyc(half, &[(1, "e"), (-1, "(2 3)")]).mul(&e21).unwrap());

        let f1 = frobenius_young_idempotent(&t(&[&[1, 2], &[3]])).unwrap();
        let f2 = frobenius_young_idempotent(&t(&[&[1, 3], &[2]])).unwrap();
        let third = rational(1, 3);
        assert_eq!(f1, cyc(third.clone(), &[(1, "e"), (1, "(1 2)"), (-1, "(1 3)"), (-1, "(1 2 3)")]));
        assert_eq!(f2, cyc(third, &[(1, "e"), (1, "(1 3)"), (-1, "(1 2)"), (-1, "(1 3 2)")]));
        assert_ne!(f1, c1);
        assert_eq!(f1.add(&f2).unwrap(), c1.add(&c2).unwrap());

        let report = invariants(&table).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn inductive_example() {
        // Projections 1/2 (1 ± (12)) of S_2 on xx and xy - yx, moved to the last two factors,
        // give the canonical idempotents of [[1,2],[3]] and [[1,3],[2]] after multiplying by e_(2,1).
        let table = rep_table(3).unwrap();
        let e21 = central_idempotent(&table, &Partition::new(vec![2, 1, 0]).unwrap()).unwrap();
        let table2 = rep_table(2).unwrap();
        for (sign, tab3, tab2) in [(1, t(&[&[1, 2], &[3]]), t(&[&[1, 2]])), (-1, t(&[&[1, 3], &[2]]), t(&[&[1], &[2]]))] {
            let small = canonical_idempotent(&table2, &tab2).unwrap();
            assert_eq!(small, GroupAlgebraElement::from_cycle_terms(2, rational(1, 2), &[(1, "e"), (sign, "(1 2)")]).unwrap());
            let shifted = GroupAlgebraElement::from_cycle_terms(3, rational(1, 2), &[(1, "e"), (sign, "(2 3)")]).unwrap();
            assert_eq!(shifted.mul(&e21).unwrap(), canonical_idempotent(&table, &tab3).unwrap());
        }
    }

    #[test]
    fn four() {
        let table = rep_table(4).unwrap();
        assert_eq!(table.dimensions(), vec![1, 3, 2, 3, 1]);
        let report = invariants(&table).unwrap();
        assert!(report.passed(), "{report}");
    }
}
