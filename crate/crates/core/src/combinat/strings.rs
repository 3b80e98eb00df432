use std::fmt;

use super::{Partition, Permutation};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// `{0,1}`: Schubert classes of a Grassmannian.
    Binary,
    /// `{0,1,2}`: Schubert classes of a two-step flag variety.
    Ternary,
}

impl Alphabet {
    pub fn size(self) -> u8 {
        match self {
            Alphabet::Binary => 2,
            Alphabet::Ternary => 3,
        }
    }
}

/// A boundary word over `{0,1}` or `{0,1,2}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabelString {
    symbols: Vec<u8>,
    alphabet: Alphabet,
}

impl LabelString {
    pub fn new(symbols: Vec<u8>, alphabet: Alphabet) -> Result<Self> {
        if let Some(bad) = symbols.iter().find(|&&s| s >= alphabet.size()) {
            return Err(Error::BadString(format!(
                "symbol {bad} is outside the {alphabet:?} alphabet"
            )));
        }
        Ok(LabelString { symbols, alphabet })
    }

    /// Parses digits; the alphabet is ternary iff a `2` occurs.
    pub fn parse(s: &str) -> Result<Self> {
        let symbols = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                '2' => Ok(2),
                _ => Err(Error::BadString(format!("unexpected character {c:?} in {s:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        let alphabet = if symbols.contains(&2) {
            Alphabet::Ternary
        } else {
            Alphabet::Binary
        };
        Ok(LabelString { symbols, alphabet })
    }

    pub fn parse_as(s: &str, alphabet: Alphabet) -> Result<Self> {
        let parsed = Self::parse(s)?;
        Self::new(parsed.symbols, alphabet)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn count(&self, symbol: u8) -> usize {
        self.symbols.iter().filter(|&&s| s == symbol).count()
    }

    /// Same symbols, viewed over the ternary alphabet.
    pub fn widen(&self) -> LabelString {
        LabelString {
            symbols: self.symbols.clone(),
            alphabet: Alphabet::Ternary,
        }
    }

    /// Positions (1-based) holding `symbol`, increasing.
    pub fn positions(&self, symbol: u8) -> Vec<u32> {
        self.symbols
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == symbol)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }
}

impl fmt::Display for LabelString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LabelString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

fn check_fits(lambda: &Partition, m: usize, n: u32) -> Result<()> {
    if lambda.fits(m, n) {
        Ok(())
    } else {
        Err(Error::DoesNotFit {
            partition: lambda.clone(),
            rows: m,
            cols: n as usize,
        })
    }
}

/// The 01-string of `lambda` inside the `m x n` rectangle: the border path from
/// the lower-left to the upper-right corner, vertical steps `0`, horizontal `1`.
pub fn to_01_string(lambda: &Partition, m: usize, n: u32) -> Result<LabelString> {
    check_fits(lambda, m, n)?;
    let len = m + n as usize;
    let mut symbols = vec![1u8; len];
    for i in 1..=m {
        let pos = i + lambda.part(m - i) as usize;
        symbols[pos - 1] = 0;
    }
    Ok(LabelString {
        symbols,
        alphabet: Alphabet::Binary,
    })
}

/// Inverse of [`to_01_string`]; `m` is the number of zeros.
pub fn from_01_string(s: &LabelString) -> Result<(Partition, usize, u32)> {
    if s.alphabet != Alphabet::Binary || s.symbols.contains(&2) {
        return Err(Error::BadString(format!("{s} is not a 01-string")));
    }
    let zeros = s.positions(0);
    let m = zeros.len();
    let n = (s.len() - m) as u32;
    // zero number i (1-based) sits at i + lambda_{m+1-i}
    let mut parts = vec![0u32; m];
    for (k, &pos) in zeros.iter().enumerate() {
        let i = k + 1;
        parts[m - i] = pos - i as u32;
    }
    Ok((Partition::new(parts)?, m, n))
}

/// Like [`from_01_string`] but insists on exactly `m` zeros.
pub fn from_01_string_in(s: &LabelString, m: usize) -> Result<Partition> {
    let (lambda, zeros, _) = from_01_string(s)?;
    if zeros != m {
        return Err(Error::BadString(format!(
            "{s} has {zeros} zeros, expected {m}"
        )));
    }
    Ok(lambda)
}

pub fn grassmann_permutation(lambda: &Partition, m: usize, n: u32) -> Result<Permutation> {
    let s = to_01_string(lambda, m, n)?;
    let mut images = s.positions(0);
    images.extend(s.positions(1));
    Permutation::new(images)
}

/// The 012-string `J^d(lambda)` indexing the modified Schubert variety in the
/// two-step flag variety `F(m-d, m+d; m+n)`.
pub fn jd_string(lambda: &Partition, m: usize, n: u32, d: usize) -> Result<LabelString> {
    if d > m.min(n as usize) {
        return Err(Error::OutOfRange(format!(
            "degree {d} exceeds min(m, n) = {}",
            m.min(n as usize)
        )));
    }
    let base = to_01_string(lambda, m, n)?;
    let mut symbols: Vec<u8> = base.symbols.iter().map(|s| 2 * s).collect();
    for s in symbols.iter_mut().filter(|s| **s == 2).take(d) {
        *s = 1;
    }
    for s in symbols.iter_mut().rev().filter(|s| **s == 0).take(d) {
        *s = 1;
    }
    Ok(LabelString {
        symbols,
        alphabet: Alphabet::Ternary,
    })
}

/// The permutation whose first `a` values are the positions of the `0`s,
/// next `b - a` those of the `1`s, and the rest those of the `2`s.
pub fn string012_to_permutation(s: &LabelString, a: usize, b: usize) -> Result<Permutation> {
    if a > b || b > s.len() || s.count(0) != a || s.count(1) != b - a {
        return Err(Error::BadString(format!(
            "{s} does not have {a} zeros and {} ones",
            b.saturating_sub(a)
        )));
    }
    let mut images = s.positions(0);
    images.extend(s.positions(1));
    images.extend(s.positions(2));
    Permutation::new(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_in_box;

    fn p<const K: usize>(parts: [u32; K]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn golden_strings() {
        assert_eq!(to_01_string(&p([4, 4, 3, 1]), 4, 5).unwrap().to_string(), "101101001");
        assert_eq!(to_01_string(&Partition::empty(), 2, 2).unwrap().to_string(), "0011");
        assert_eq!(to_01_string(&p([1]), 2, 2).unwrap().to_string(), "0101");
        assert!(to_01_string(&p([3]), 2, 2).is_err());
    }

    #[test]
    fn golden_permutations() {
        let w = grassmann_permutation(&p([4, 4, 3, 1]), 4, 5).unwrap();
        assert_eq!(w.images(), &[2, 5, 7, 8, 1, 3, 4, 6, 9]);
        assert!(grassmann_permutation(&Partition::empty(), 3, 2).unwrap().is_identity());
        assert_eq!(grassmann_permutation(&p([2, 2]), 2, 2).unwrap().images(), &[3, 4, 1, 2]);
    }

    #[test]
    fn golden_jd_strings() {
        assert_eq!(jd_string(&p([4, 4, 3, 1]), 4, 5, 2).unwrap().to_string(), "101202112");
        assert_eq!(jd_string(&p([3, 2, 1]), 3, 3, 1).unwrap().to_string(), "102021");
        assert_eq!(jd_string(&p([2, 1]), 3, 3, 1).unwrap().to_string(), "010212");
        assert_eq!(jd_string(&p([1]), 2, 2, 0).unwrap().to_string(), "0202");
        assert!(jd_string(&p([1]), 2, 2, 3).is_err());
    }

    #[test]
    fn golden_012_permutations() {
        let s = LabelString::parse("101202112").unwrap();
        let w = string012_to_permutation(&s, 2, 6).unwrap();
        assert_eq!(w.images(), &[2, 5, 1, 3, 7, 8, 4, 6, 9]);
        assert_eq!(w.length(), 8);
        let s = LabelString::parse("010212").unwrap();
        let w = string012_to_permutation(&s, 2, 4).unwrap();
        assert_eq!(w.images(), &[1, 3, 2, 5, 4, 6]);
        assert_eq!(w.length(), 2);
        let id = LabelString::parse("001122").unwrap();
        assert!(string012_to_permutation(&id, 2, 4).unwrap().is_identity());
        assert!(string012_to_permutation(&id, 3, 4).is_err());
    }

    #[test]
    fn round_trip_and_length() {
        for m in 0..=6usize {
            for n in 0..=(10 - m) as u32 {
                for lambda in partitions_in_box(m, n) {
                    let s = to_01_string(&lambda, m, n).unwrap();
                    assert_eq!(from_01_string_in(&s, m).unwrap(), lambda);
                    let w = grassmann_permutation(&lambda, m, n).unwrap();
                    assert_eq!(w.length(), lambda.weight() as u64);
                }
            }
        }
    }

    #[test]
    fn jd_codimension() {
        for m in 1..=5usize {
            for n in 1..=(9 - m) as u32 {
                for d in 0..=m.min(n as usize) {
                    for lambda in partitions_in_box(m, n) {
                        let s = jd_string(&lambda, m, n, d).unwrap();
                        assert_eq!(s.count(0), m - d);
                        assert_eq!(s.count(1), 2 * d);
                        let w = string012_to_permutation(&s, m - d, m + d).unwrap();
                        let target = lambda.weight() as i64 - (d * d) as i64;
                        if d == 0 || lambda.part(d - 1) as usize >= d {
                            assert_eq!(w.length() as i64, target, "{lambda:?} d={d}");
                        } else {
                            assert!(w.length() as i64 > target, "{lambda:?} d={d}");
                        }
                    }
                }
            }
        }
    }
}
