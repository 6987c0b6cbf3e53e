use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so `[2,1,0]` and `[2,1]` are
/// the same value. Ordering is graded: by size first, then lexicographically
/// on the parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts the input before normalising; never fails.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(r)`.
    pub fn row(r: u32) -> Self {
        Partition::from_unsorted(vec![r])
    }

    /// The single-column partition `(1^c)`.
    pub fn column(c: usize) -> Self {
        Partition { parts: vec![1; c] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|i| self.parts.iter().filter(|&&p| p > i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// True iff the diagram fits in a box with `k` rows and `m` columns.
    pub fn in_box(&self, k: usize, m: usize) -> bool {
        self.len() <= k && self.part(0) as usize <= m
    }

    /// Complement inside the `k × m` box, read from the bottom-right corner.
    pub fn complement_in_box(&self, k: usize, m: usize) -> Result<Partition> {
        if !self.in_box(k, m) {
            return Err(Error::InvalidArgument(format!(
                "{self} does not fit in a {k}x{m} box"
            )));
        }
        let parts = (0..k)
            .map(|i| m as u32 - self.part(k - 1 - i))
            .collect::<Vec<_>>();
        Partition::new(parts)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(n.max(v.len()), 0);
        v
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3,1]`, `3,1`, `[]` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(inner)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad partition part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `t`, in decreasing lexicographic order.
pub fn partitions_of(t: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(t, t, &mut cur, &mut out);
    out
}

/// All partitions of size at most `t`, graded.
pub fn partitions_up_to(t: u32) -> Vec<Partition> {
    (0..=t).flat_map(partitions_of).collect()
}

/// Partitions fitting in the `k × m` box, sorted in graded order.
pub fn box_partitions(k: usize, m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(k: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::from_unsorted(cur.clone()));
        if cur.len() == k {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            rec(k, p, cur, out);
            cur.pop();
        }
    }
    rec(k, m as u32, &mut cur, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn conjugation_is_an_involution() {
        for t in 0..=8 {
            for lam in partitions_of(t) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn in_box_examples() {
        assert!(p(&[2, 2]).in_box(2, 2));
        assert!(!p(&[3]).in_box(2, 2));
        assert!(!p(&[1, 1, 1]).in_box(2, 3));
    }

    #[test]
    fn trailing_zeros_are_irrelevant() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(p(&[2, 1, 0]).len(), 2);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
        assert!("[1,x]".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=7).map(|t| partitions_of(t).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn box_counts_match_binomials() {
        assert_eq!(box_partitions(2, 2).len(), 6);
        assert_eq!(box_partitions(3, 3).len(), 20);
        assert_eq!(box_partitions(1, 4).len(), 5);
    }

    #[test]
    fn complement_in_box() {
        assert_eq!(p(&[2, 1]).complement_in_box(2, 3).unwrap(), p(&[2, 1]));
        assert_eq!(p(&[1]).complement_in_box(2, 2).unwrap(), p(&[2, 1]));
        assert_eq!(Partition::empty().complement_in_box(2, 2).unwrap(), p(&[2, 2]));
    }
}
