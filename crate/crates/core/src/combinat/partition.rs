use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are always stripped, so `(2,1)` and `(2,1,0)` compare equal.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts `parts` decreasingly; zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    fn from_sorted(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(p: u32) -> Self {
        Self::from_sorted(vec![p])
    }

    /// The rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        Self::from_sorted(vec![cols; rows])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Part `i` (0-based); zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn fits(&self, rows: usize, cols: u32) -> bool {
        self.length() <= rows && self.first() <= cols
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.length() <= self.length() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn count_part(&self, value: u32) -> usize {
        self.0.iter().filter(|&&p| p == value).count()
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.length() + other.length());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            if j == other.0.len() || (i < self.0.len() && self.0[i] >= other.0[j]) {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        Partition(parts)
    }

    /// Removes one copy of every part of `sub`; `None` if some part is missing.
    pub fn remove_parts(&self, sub: &[u32]) -> Option<Partition> {
        let mut parts = self.0.clone();
        for s in sub {
            let pos = parts.iter().position(|p| p == s)?;
            parts.remove(pos);
        }
        Some(Partition(parts))
    }

    /// Boxes `(row, col)` of the diagram, 1-based.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("parts must be weakly decreasing")
    }
}

impl<const K: usize> From<[u32; K]> for Partition {
    fn from(parts: [u32; K]) -> Self {
        Partition::from(&parts[..])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Comma separated parts; `""` and `"0"` both denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::BadString(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions contained in the `rows x cols` rectangle, in lexicographic order.
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    fn go(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::from_sorted(cur.clone()));
        if cur.len() == rows {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            go(rows, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Partitions of `weight` with every part at most `max_part`.
pub fn partitions_of(weight: u32, max_part: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weight, max_part, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The strict partitions with parts at most `n`.
pub fn strict_partitions(n: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = (0u32..1 << n)
        .map(|mask| Partition((1..=n).rev().filter(|i| mask & (1 << (i - 1)) != 0).collect()))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_drops_zeros() {
        let a = Partition::new(vec![2, 1, 0, 0]).unwrap();
        assert_eq!(a, Partition::from([2, 1]));
        assert_eq!(a.length(), 2);
        assert_eq!(a.weight(), 3);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn parse() {
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), Partition::from([3, 2, 1]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,x".parse::<Partition>().is_err());
        assert!("1,3".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        // binomial(m+n, m)
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(partitions_in_box(3, 5).len(), 56);
        assert_eq!(strict_partitions(4).len(), 16);
        assert_eq!(partitions_of(6, 6).len(), 11);
        assert_eq!(partitions_of(6, 2).len(), 4);
    }

    #[test]
    fn union_and_removal() {
        let a = Partition::from([4, 2]);
        let b = Partition::from([3, 2, 2]);
        assert_eq!(a.union(&b), Partition::from([4, 3, 2, 2, 2]));
        assert_eq!(a.union(&b).remove_parts(&[2, 2]), Some(Partition::from([4, 3, 2])));
        assert_eq!(a.remove_parts(&[3]), None);
    }
}
