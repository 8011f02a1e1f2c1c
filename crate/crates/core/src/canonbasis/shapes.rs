use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A non-increasing partition `(n_1, ..., n_d)` of `n` with exactly `d` parts, zeros kept.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not non-increasing")));
        }
        Ok(Self(parts))
    }

    /// Pads `parts` with zeros to length `d`.
    pub fn with_rows(mut parts: Vec<usize>, d: usize) -> Result<Self> {
        while parts.len() > d && parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.len() > d {
            return Err(Error::Invalid(format!("{parts:?} has more than {d} nonzero parts")));
        }
        parts.resize(d, 0);
        Self::new(parts)
    }

    /// Parses `2,1` (or `2 1`) and pads to `d` parts.
    pub fn parse(s: &str, d: usize) -> Result<Self> {
        let parts = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::with_rows(parts, d)
    }

    pub fn empty(d: usize) -> Self {
        Self(vec![0; d])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `n_r`, 1-based.
    pub fn part(&self, r: usize) -> usize {
        self.0[r - 1]
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// All partitions of `n` into at most `d` parts, in decreasing lexicographic order.
    pub fn all(n: usize, d: usize) -> Vec<Self> {
        fn rec(left: usize, max: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if slots == 0 {
                if left == 0 {
                    out.push(Partition(cur.clone()));
                }
                return;
            }
            for k in (0..=max.min(left)).rev() {
                cur.push(k);
                rec(left - k, k, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, d, &mut Vec::new(), &mut out);
        out
    }

    /// Adds a box in row `r` if the result is still non-increasing.
    pub fn add_box(&self, r: usize) -> Option<Self> {
        if r == 0 || r > self.0.len() || (r > 1 && self.0[r - 2] == self.0[r - 1]) {
            return None;
        }
        let mut v = self.0.clone();
        v[r - 1] += 1;
        Some(Self(v))
    }

    /// Removes a box from row `r` if the result is still non-increasing.
    pub fn remove_box(&self, r: usize) -> Option<Self> {
        if r == 0 || r > self.0.len() || self.0[r - 1] == 0 || self.0.get(r).is_some_and(|&b| b == self.0[r - 1]) {
            return None;
        }
        let mut v = self.0.clone();
        v[r - 1] -= 1;
        Some(Self(v))
    }

    /// The `p' -> self` steps, as `(r, p')`.
    pub fn predecessors(&self) -> Vec<(usize, Self)> {
        (1..=self.0.len()).filter_map(|r| self.remove_box(r).map(|p| (r, p))).collect()
    }

    /// Number of standard tableaux by the hook length formula.
    pub fn hook_length_count(&self) -> u128 {
        let rows: Vec<usize> = self.0.iter().copied().filter(|&k| k > 0).collect();
        let n = self.size() as u128;
        let mut num: u128 = (1..=n).product();
        let mut hooks: u128 = 1;
        for (i, &len) in rows.iter().enumerate() {
            for j in 0..len {
                let below = rows[i + 1..].iter().filter(|&&l| l > j).count();
                hooks *= (len - j - 1 + below + 1) as u128;
            }
        }
        num /= hooks;
        num
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A generating sequence `(r_1, ..., r_n)`; `r_n` is applied first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GeneratingSequence(Vec<usize>);

impl GeneratingSequence {
    /// Validates that every terminal segment keeps the intermediate partitions non-increasing.
    pub fn new(rows: Vec<usize>, d: usize) -> Result<Self> {
        let s = Self(rows);
        s.partitions(d)?;
        Ok(s)
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The chain `(0^d) -> ... -> p`, starting from the empty partition.
    pub fn partitions(&self, d: usize) -> Result<Vec<Partition>> {
        let mut chain = vec![Partition::empty(d)];
        for &r in self.0.iter().rev() {
            let next = chain
                .last()
                .unwrap()
                .add_box(r)
                .ok_or_else(|| Error::Invalid(format!("{:?} is not a generating sequence for d = {d}", self.0)))?;
            chain.push(next);
        }
        Ok(chain)
    }

    pub fn shape(&self, d: usize) -> Result<Partition> {
        Ok(self.partitions(d)?.pop().unwrap())
    }
}

impl fmt::Display for GeneratingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A standard Young tableau, rows listed top to bottom.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StandardTableau(Vec<Vec<usize>>);

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = || Error::Invalid(format!("{rows:?} is not a standard tableau"));
        let rows: Vec<Vec<usize>> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for (i, row) in rows.iter().enumerate() {
            if i > 0 && row.len() > rows[i - 1].len() {
                return Err(bad());
            }
            for (j, &x) in row.iter().enumerate() {
                if x == 0 || x > n || seen[x - 1] {
                    return Err(bad());
                }
                seen[x - 1] = true;
                if (j > 0 && row[j - 1] >= x) || (i > 0 && rows[i - 1][j] >= x) {
                    return Err(bad());
                }
            }
        }
        Ok(Self(rows))
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Vec::len).sum()
    }

    pub fn shape(&self, d: usize) -> Result<Partition> {
        Partition::with_rows(self.0.iter().map(Vec::len).collect(), d)
    }

    /// Entries read row by row; the sort key for bases.
    pub fn reading_word(&self) -> Vec<usize> {
        self.0.concat()
    }

    pub fn to_json(&self) -> Value {
        json!(self.0)
    }

    /// All standard tableaux of a shape, by placing `n, n-1, ..., 1` in removable corners.
    pub fn all(shape: &Partition) -> Vec<Self> {
        fn rec(shape: &Partition, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
            let n = shape.size();
            if n == 0 {
                let mut t: Vec<Vec<usize>> = rows.iter().map(|r| r.iter().rev().copied().collect()).collect();
                t.retain(|r: &Vec<usize>| !r.is_empty());
                out.push(StandardTableau(t));
                return;
            }
            for (r, smaller) in shape.predecessors() {
                rows[r - 1].push(n);
                rec(&smaller, rows, out);
                rows[r - 1].pop();
            }
        }
        let mut out = Vec::new();
        rec(shape, &mut vec![Vec::new(); shape.rows()], &mut out);
        out.sort_by_key(StandardTableau::reading_word);
        out
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| format!("[{}]", r.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// `r_{n-i}` is the row in which `i + 1` is placed.
pub fn seq_to_tableau(s: &GeneratingSequence, d: usize) -> Result<StandardTableau> {
    s.partitions(d)?;
    let n = s.len();
    let mut rows = vec![Vec::new(); d];
    for i in 0..n {
        rows[s.rows()[n - 1 - i] - 1].push(i + 1);
    }
    StandardTableau::new(rows)
}

pub fn tableau_to_seq(t: &StandardTableau, d: usize) -> Result<GeneratingSequence> {
    let n = t.size();
    if t.rows().len() > d {
        return Err(Error::Invalid(format!("tableau {t} has more than {d} rows")));
    }
    let mut seq = vec![0; n];
    for (row, entries) in t.rows().iter().enumerate() {
        for &k in entries {
            seq[n - k] = row + 1;
        }
    }
    GeneratingSequence::new(seq, d)
}

/// All generating sequences of shape `p`, in lexicographic order.
pub fn enumerate_sequences(p: &Partition) -> Vec<GeneratingSequence> {
    fn rec(target: &Partition, cur: &Partition, rev: &mut Vec<usize>, out: &mut Vec<GeneratingSequence>) {
        if cur == target {
            out.push(GeneratingSequence(rev.iter().rev().copied().collect()));
            return;
        }
        for r in 1..=cur.rows() {
            if cur.part(r) < target.part(r) {
                if let Some(next) = cur.add_box(r) {
                    rev.push(r);
                    rec(target, &next, rev, out);
                    rev.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(p, &Partition::empty(p.rows()), &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_four() {
        let all = Partition::all(4, 4);
        let shapes: Vec<&[usize]> = all.iter().map(|x| x.parts()).collect();
        assert_eq!(
            shapes,
            vec![&[4, 0, 0, 0][..], &[3, 1, 0, 0], &[2, 2, 0, 0], &[2, 1, 1, 0], &[1, 1, 1, 1]]
        );
        let counts: Vec<usize> = all.iter().map(|x| enumerate_sequences(x).len()).collect();
        assert_eq!(counts, vec![1, 3, 2, 3, 1]);
        assert_eq!(Partition::all(3, 2).len(), 2);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::parse("2,1", 3).unwrap(), p(&[2, 1, 0]));
        assert!(Partition::parse("1,1,1", 2).is_err());
    }

    #[test]
    fn sequences_and_tableaux() {
        assert_eq!(enumerate_sequences(&p(&[3])).len(), 1);
        let seqs = enumerate_sequences(&p(&[2, 1]));
        assert_eq!(seqs.iter().map(|s| s.rows().to_vec()).collect::<Vec<_>>(), vec![vec![1, 2, 1], vec![2, 1, 1]]);
        let t = seq_to_tableau(&GeneratingSequence::new(vec![1, 1, 1], 1).unwrap(), 1).unwrap();
        assert_eq!(t.to_string(), "[[1,2,3]]");
        // x P x builds 1, then 2 in row 2, then 3 in row 1
        assert_eq!(seq_to_tableau(&seqs[0], 2).unwrap().to_string(), "[[1,3],[2]]");
        assert_eq!(seq_to_tableau(&seqs[1], 2).unwrap().to_string(), "[[1,2],[3]]");
        assert!(GeneratingSequence::new(vec![1, 2], 2).is_err());
        assert!(GeneratingSequence::new(vec![2, 1], 2).is_ok());
    }

    #[test]
    fn round_trip_n4_d2() {
        let mut total = 0;
        for shape in Partition::all(4, 2) {
            for s in enumerate_sequences(&shape) {
                let t = seq_to_tableau(&s, 2).unwrap();
                assert_eq!(tableau_to_seq(&t, 2).unwrap(), s);
                assert_eq!(t.shape(2).unwrap(), shape);
                total += 1;
            }
        }
        assert_eq!(total, 1 + 3 + 2);
    }

    #[test]
    fn tableau_enumeration_matches_hooks() {
        for n in 1..=6 {
            for shape in Partition::all(n, n) {
                let ts = StandardTableau::all(&shape);
                assert_eq!(ts.len() as u128, shape.hook_length_count());
                assert_eq!(ts.len(), enumerate_sequences(&shape).len());
                for t in &ts {
                    assert!(StandardTableau::new(t.rows().to_vec()).is_ok());
                }
            }
        }
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
    }
}
