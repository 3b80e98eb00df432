use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1..N}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &w in &images {
            let i = w as usize;
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::OutOfRange(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &w)| w as usize == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> u64 {
        let mut inv = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        inv
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_and_length() {
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        let w = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(w.length(), 2);
        let longest = Permutation::new(vec![4, 3, 2, 1]).unwrap();
        assert_eq!(longest.length(), 6);
        assert_eq!(Permutation::identity(5).length(), 0);
    }
}
