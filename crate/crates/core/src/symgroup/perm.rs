use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// Products compose as functions: `(a * b)(k) = a(b(k))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    /// The adjacent transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(i - 1, i);
        Ok(Self(v))
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)` or `()` for the identity.
    pub fn from_cycles(n: usize, s: &str) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let bad = || Error::Parse(format!("malformed cycle notation: {s:?}"));
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let cycle: Vec<usize> = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            if cycle.iter().any(|&x| x == 0 || x > n) {
                return Err(bad());
            }
            // Cycles compose right to left.
            let mut step: Vec<usize> = (1..=n).collect();
            for k in 0..cycle.len() {
                step[cycle[k] - 1] = cycle[(k + 1) % cycle.len()];
            }
            let step = Self::new(step)?;
            images = (1..=n).map(|x| images[step.apply(x) - 1]).collect();
            rest = body[close + 1..].trim_start();
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self(other.0.iter().map(|&k| self.0[k - 1]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut v = vec![0; self.0.len()];
        for (k, &x) in self.0.iter().enumerate() {
            v[x - 1] = k + 1;
        }
        Self(v)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.0.len();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.0[i] > self.0[j]).count())
            .sum()
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// A reduced word `(i_1, ..., i_l)` with `s_{i_1} ... s_{i_l} = self`.
    ///
    /// Bubble algorithm on the one-line notation: the largest value not yet in place is
    /// moved rightward by adjacent swaps; the swap positions, read backwards, form the word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        let mut swaps = Vec::new();
        for target in (1..=v.len()).rev() {
            let mut pos = v.iter().position(|&x| x == target).unwrap();
            while pos + 1 < target {
                v.swap(pos, pos + 1);
                swaps.push(pos + 1);
                pos += 1;
            }
        }
        swaps.reverse();
        swaps
    }

    /// Product `s_{i_1} ... s_{i_l}` in `S_n`.
    pub fn from_word(word: &[usize], n: usize) -> Result<Self> {
        word.iter().try_fold(Self::identity(n), |acc, &i| Ok(acc.compose(&Self::simple(i, n)?)))
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for k in 0..n {
                if !used[k] {
                    used[k] = true;
                    cur.push(k + 1);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[k] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    /// Disjoint cycle notation, fixed points omitted; `()` for the identity.
    pub fn cycle_string(&self) -> String {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut s = String::new();
        for start in 1..=n {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start - 1] = true;
            let mut k = self.apply(start);
            while k != start {
                seen[k - 1] = true;
                cyc.push(k);
                k = self.apply(k);
            }
            let parts: Vec<String> = cyc.iter().map(usize::to_string).collect();
            s.push_str(&format!("({})", parts.join(" ")));
        }
        if s.is_empty() {
            "()".into()
        } else {
            s
        }
    }

    /// Sorted cycle lengths, used as the conjugacy-class key.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k - 1] {
                seen[k - 1] = true;
                len += 1;
                k = self.apply(k);
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

/// One-line notation `[2,3,1]`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts one-line notation `[2,3,1]`; cycle notation needs the degree, see
/// [`Permutation::from_cycles`].
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [..] one-line notation: {s:?}")))?;
        let images = body
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(3).length(), 0);
        assert_eq!(Permutation::simple(1, 3).unwrap().length(), 1);
        assert_eq!(Permutation::new(vec![4, 3, 2, 1]).unwrap().length(), 6);
    }

    #[test]
    fn reduced_words() {
        assert!(Permutation::identity(4).reduced_word().is_empty());
        let t13 = Permutation::from_cycles(3, "(1 3)").unwrap();
        let w = t13.reduced_word();
        assert!(w == vec![1, 2, 1] || w == vec![2, 1, 2]);
        let c = Permutation::from_cycles(3, "(1 2 3)").unwrap();
        assert_eq!(c.images(), &[2, 3, 1]);
        assert_eq!(c.reduced_word().len(), 2);
        for p in Permutation::all(4) {
            let w = p.reduced_word();
            assert_eq!(w.len(), p.length());
            assert_eq!(Permutation::from_word(&w, 4).unwrap(), p);
        }
    }

    #[test]
    fn composition_is_function_composition() {
        // (13)(12) = (123)
        let a = Permutation::from_cycles(3, "(1 3)").unwrap();
        let b = Permutation::from_cycles(3, "(1 2)").unwrap();
        assert_eq!(a.compose(&b), Permutation::from_cycles(3, "(1 2 3)").unwrap());
        assert_eq!(a.compose(&b).cycle_string(), "(1 2 3)");
    }

    #[test]
    fn parsing() {
        let p: Permutation = "[2,3,1]".parse().unwrap();
        assert_eq!(p.to_string(), "[2,3,1]");
        assert!("[1,1]".parse::<Permutation>().is_err());
        assert!("2,1".parse::<Permutation>().is_err());
        assert_eq!(Permutation::from_cycles(3, "()").unwrap(), Permutation::identity(3));
        // right-to-left: (1 2)(2 3) sends 1 -> 2, 2 -> 3, 3 -> 1
        assert_eq!(Permutation::from_cycles(3, "(1 2)(2 3)").unwrap().images(), &[2, 3, 1]);
        assert!(Permutation::from_cycles(3, "(1 4)").is_err());
    }

    #[test]
    fn length_changes_by_one() {
        for p in Permutation::all(4) {
            for i in 1..4 {
                let l = p.compose(&Permutation::simple(i, 4).unwrap()).length() as i64;
                assert_eq!((l - p.length() as i64).abs(), 1);
            }
        }
    }
}
