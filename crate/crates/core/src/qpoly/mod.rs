//! Symmetric polynomials in `n` variables written in the elementary basis,
//! and the Q-tilde polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use crate::combinat::{add_horizontal_strip, skew_component_stats, Partition};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An element of `Lambda_n`; the key `lambda` stands for
/// `e_{lambda_1} e_{lambda_2} ...`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EPoly<C> {
    n: u32,
    terms: BTreeMap<Partition, C>,
}

impl<C: Scalar> EPoly<C> {
    pub fn zero(n: u32) -> Self {
        EPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: u32) -> Self {
        Self::monomial(n, Partition::empty(), C::one())
    }

    /// `c e_lambda`; zero if some part exceeds `n`.
    pub fn monomial(n: u32, lambda: Partition, c: C) -> Self {
        let mut out = Self::zero(n);
        out.add_term(lambda, c);
        out
    }

    /// The elementary polynomial `e_k` (`e_0 = 1`).
    pub fn e(n: u32, k: u32) -> Self {
        Self::monomial(n, Partition::row(k), C::one())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn add_term(&mut self, lambda: Partition, c: C) {
        if c.is_zero() || lambda.first() > self.n {
            return;
        }
        let cur = self.terms.remove(&lambda).unwrap_or_else(C::zero) + c;
        if !cur.is_zero() {
            self.terms.insert(lambda, cur);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        assert_eq!(self.n, other.n, "polynomials in different numbers of variables");
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone() * c.clone());
        }
    }

    pub fn coefficient(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    /// Common degree of all terms, if there is one.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut w = self.terms.keys().map(Partition::weight);
        let first = w.next()?;
        w.all(|x| x == first).then_some(first)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "polynomials in different numbers of variables");
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Scalar> fmt::Display for EPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() || k.is_empty() {
                write!(f, "{abs}")?;
            }
            for p in k.parts() {
                write!(f, "e{p}")?;
            }
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for EPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Coefficients in the basis `{Q~_nu : nu_1 <= n}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QtildeExpansion<C> {
    n: u32,
    terms: BTreeMap<Partition, C>,
}

impl<C: Scalar> QtildeExpansion<C> {
    pub fn zero(n: u32) -> Self {
        QtildeExpansion {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn add_term(&mut self, nu: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        let cur = self.terms.remove(&nu).unwrap_or_else(C::zero) + c;
        if !cur.is_zero() {
            self.terms.insert(nu, cur);
        }
    }

    pub fn coefficient(&self, nu: &Partition) -> C {
        self.terms.get(nu).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `Lambda_n` with memoized Q~ polynomials.
pub struct QtildeRing<C> {
    n: u32,
    pfaffians: RwLock<HashMap<Vec<u32>, EPoly<C>>>,
}

impl<C: Scalar> QtildeRing<C> {
    pub fn new(n: u32) -> Self {
        QtildeRing {
            n,
            pfaffians: RwLock::default(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `Q~_{i,j}` for `i >= j >= 0`.
    pub fn two_row(&self, i: u32, j: u32) -> EPoly<C> {
        let n = self.n;
        let mut out = EPoly::e(n, i).mul(&EPoly::e(n, j));
        let two = C::from_small(2);
        for k in 1..=j.min(n.saturating_sub(i)) {
            let sign = if k % 2 == 0 { two.clone() } else { -two.clone() };
            out.add_scaled(&EPoly::e(n, i + k).mul(&EPoly::e(n, j - k)), &sign);
        }
        out
    }

    pub fn qtilde(&self, lambda: &Partition) -> EPoly<C> {
        if lambda.first() > self.n {
            return EPoly::zero(self.n);
        }
        let mut parts = lambda.parts().to_vec();
        if parts.len() % 2 == 1 {
            parts.push(0);
        }
        self.pfaffian(&parts)
    }

    /// `Pfaffian[Q~_{a_i, a_j}]` for a weakly decreasing list of even length,
    /// expanded along the last row.
    fn pfaffian(&self, a: &[u32]) -> EPoly<C> {
        if a.is_empty() {
            return EPoly::one(self.n);
        }
        if a.len() == 2 {
            return self.two_row(a[0], a[1]);
        }
        if let Some(hit) = self.pfaffians.read().unwrap().get(a) {
            return hit.clone();
        }
        let out = self.pfaffian_along(a, a.len() - 1);
        self.pfaffians.write().unwrap().insert(a.to_vec(), out.clone());
        out
    }

    /// Laplace expansion along row `row` (0-based).
    fn pfaffian_along(&self, a: &[u32], row: usize) -> EPoly<C> {
        let mut out = EPoly::zero(self.n);
        for j in (0..a.len()).filter(|&j| j != row) {
            let (lo, hi) = (row.min(j), row.max(j));
            let rest: Vec<u32> = a
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != lo && k != hi)
                .map(|(_, &x)| x)
                .collect();
            // written with the upper entry (lo, hi), so no extra sign below the diagonal
            let parity = row + j + 1;
            let sign = if parity.is_multiple_of(2) { C::one() } else { -C::one() };
            let term = self.two_row(a[lo], a[hi]).mul(&self.pfaffian(&rest));
            out.add_scaled(&term, &sign);
        }
        out
    }

    /// `Q~_lambda` with the outermost Pfaffian expanded along `row`.
    pub fn qtilde_along(&self, lambda: &Partition, row: usize) -> EPoly<C> {
        if lambda.first() > self.n {
            return EPoly::zero(self.n);
        }
        let mut parts = lambda.parts().to_vec();
        if parts.len() % 2 == 1 {
            parts.push(0);
        }
        match parts.len() {
            0 => EPoly::one(self.n),
            2 => self.two_row(parts[0], parts[1]),
            len => self.pfaffian_along(&parts, row.min(len - 1)),
        }
    }

    /// Coordinates of `f` in the Q~ basis. `Q~_nu` is `e_nu` plus terms whose
    /// keys are lexicographically larger, so peeling off the smallest key
    /// terminates.
    pub fn expand(&self, f: &EPoly<C>) -> Result<QtildeExpansion<C>> {
        if f.n != self.n {
            return Err(Error::Contract(format!("expected Lambda_{}, got Lambda_{}", self.n, f.n)));
        }
        let mut rest = f.clone();
        let mut out = QtildeExpansion::zero(self.n);
        while let Some((key, c)) = rest.terms.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
            let q = self.qtilde(&key);
            let pivot = q.coefficient(&key);
            if !pivot.is_one() || q.terms.keys().next() != Some(&key) {
                return Err(Error::Contract(format!(
                    "Q~{key} is not unitriangular over e{key} (pivot {pivot})"
                )));
            }
            rest.add_scaled(&q, &(-c.clone()));
            out.add_term(key, c);
        }
        Ok(out)
    }

    /// Sum of `c Q~_nu` as a polynomial.
    pub fn reassemble(&self, x: &QtildeExpansion<C>) -> EPoly<C> {
        let mut out = EPoly::zero(self.n);
        for (nu, c) in x.iter() {
            out.add_scaled(&self.qtilde(nu), c);
        }
        out
    }

    fn check_e(&self, lambda: &Partition) -> Result<()> {
        if lambda.first() > self.n {
            return Err(Error::PartTooLarge {
                partition: lambda.clone(),
                bound: self.n,
            });
        }
        Ok(())
    }

    /// The constants `e_{lambda mu}^nu`.
    pub fn structure(&self, lambda: &Partition, mu: &Partition) -> Result<QtildeExpansion<C>> {
        self.check_e(lambda)?;
        self.check_e(mu)?;
        self.expand(&self.qtilde(lambda).mul(&self.qtilde(mu)))
    }

    /// The constants `f_{lambda mu}^nu` for `P~_lambda = 2^{-l(lambda)} Q~_lambda`.
    pub fn p_structure(&self, lambda: &Partition, mu: &Partition) -> Result<QtildeExpansion<C>> {
        let e = self.structure(lambda, mu)?;
        let mut out = QtildeExpansion::zero(self.n);
        let base = (lambda.length() + mu.length()) as i64;
        for (nu, c) in e.iter() {
            let shift = nu.length() as i64 - base;
            let v = if shift >= 0 {
                c.mul_pow2(shift as u32)
            } else {
                c.div_pow2((-shift) as u32).ok_or_else(|| {
                    Error::Contract(format!("f^{nu}_{{{lambda},{mu}}} = {c} / 2^{} is not integral", -shift))
                })?
            };
            out.add_term(nu.clone(), v);
        }
        Ok(out)
    }

    /// `Q~_lambda Q~_p` by the Pieri rule, for strict `lambda`.
    pub fn pieri(&self, lambda: &Partition, p: u32) -> Result<QtildeExpansion<C>> {
        if !lambda.is_strict() {
            return Err(Error::NotStrict(lambda.clone()));
        }
        self.check_e(lambda)?;
        if p > self.n {
            return Err(Error::OutOfRange(format!("Q~_{p} needs p <= {}", self.n)));
        }
        let mut out = QtildeExpansion::zero(self.n);
        for mu in add_horizontal_strip(lambda, p, lambda.length() + 1, self.n) {
            let stats = skew_component_stats(lambda, &mu)?;
            out.add_term(mu, C::one().mul_pow2(stats.n()));
        }
        Ok(out)
    }
}

pub fn qtilde_epoly(lambda: &Partition, n: u32) -> EPoly<i64> {
    QtildeRing::new(n).qtilde(lambda)
}

pub fn expand_in_qtilde(f: &EPoly<i64>, n: u32) -> Result<QtildeExpansion<i64>> {
    if f.homogeneous_weight().is_none() && !f.is_zero() {
        return Err(Error::OutOfRange("polynomial is not homogeneous".into()));
    }
    QtildeRing::new(n).expand(f)
}

pub fn qtilde_structure(lambda: &Partition, mu: &Partition, n: u32) -> Result<QtildeExpansion<i64>> {
    QtildeRing::new(n).structure(lambda, mu)
}

pub fn ptilde_structure(lambda: &Partition, mu: &Partition, n: u32) -> Result<QtildeExpansion<i64>> {
    QtildeRing::new(n).p_structure(lambda, mu)
}

pub fn qtilde_pieri(lambda: &Partition, p: u32, n: u32) -> Result<QtildeExpansion<i64>> {
    QtildeRing::new(n).pieri(lambda, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const K: usize>(parts: [u32; K]) -> Partition {
        Partition::from(parts)
    }

    fn map(x: &QtildeExpansion<i64>) -> Vec<(Partition, i64)> {
        x.iter().map(|(k, v)| (k.clone(), *v)).collect()
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(qtilde_epoly(&p([1, 1]), 3).to_string(), "e1e1 - 2e2");
        assert_eq!(qtilde_epoly(&p([2]), 3).to_string(), "e2");
        assert!(qtilde_epoly(&p([4, 1]), 3).is_zero());
        assert_eq!(qtilde_epoly(&Partition::empty(), 3).to_string(), "1");
    }

    #[test]
    fn expansions() {
        let e1 = EPoly::<i64>::e(2, 1);
        let x = expand_in_qtilde(&e1.mul(&e1), 2).unwrap();
        assert_eq!(map(&x), vec![(p([1, 1]), 1), (p([2]), 2)]);
        let q = qtilde_epoly(&p([3, 1]), 4);
        assert_eq!(map(&expand_in_qtilde(&q, 4).unwrap()), vec![(p([3, 1]), 1)]);
        assert!(expand_in_qtilde(&EPoly::zero(3), 3).unwrap().is_empty());
    }

    #[test]
    fn structure_examples() {
        let x = qtilde_structure(&p([3, 2, 1]), &p([3, 2, 1]), 4).unwrap();
        assert_eq!(x.coefficient(&p([4, 4, 2, 2])), -4);
        let x = qtilde_structure(&p([1]), &p([1]), 3).unwrap();
        assert_eq!(map(&x), vec![(p([1, 1]), 1), (p([2]), 2)]);
        let x = qtilde_structure(&Partition::empty(), &p([2, 1]), 3).unwrap();
        assert_eq!(map(&x), vec![(p([2, 1]), 1)]);
    }

    #[test]
    fn p_structure_examples() {
        let x = ptilde_structure(&p([1]), &p([1]), 2).unwrap();
        assert_eq!(map(&x), vec![(p([1, 1]), 1), (p([2]), 1)]);
        let x = ptilde_structure(&p([2]), &p([2]), 2).unwrap();
        assert_eq!(map(&x), vec![(p([2, 2]), 1)]);
        let x = ptilde_structure(&Partition::empty(), &p([2]), 2).unwrap();
        assert_eq!(map(&x), vec![(p([2]), 1)]);
    }

    #[test]
    fn pieri_examples() {
        let x = qtilde_pieri(&p([1]), 1, 2).unwrap();
        assert_eq!(map(&x), vec![(p([1, 1]), 1), (p([2]), 2)]);
        let x = qtilde_pieri(&p([2, 1]), 3, 3).unwrap();
        assert_eq!(map(&x), vec![(p([3, 2, 1]), 1)]);
        let x = qtilde_pieri(&Partition::empty(), 0, 3).unwrap();
        assert_eq!(map(&x), vec![(Partition::empty(), 1)]);
        assert!(qtilde_pieri(&p([1, 1]), 1, 3).is_err());
    }

    #[test]
    fn laplace_rows_agree() {
        let ring = QtildeRing::<i64>::new(4);
        for lambda in [p([4, 3, 1]), p([3, 2, 2, 1]), p([4, 3, 2, 1]), p([2, 2, 2, 1, 1])] {
            let base = ring.qtilde(&lambda);
            let rows = lambda.length() + lambda.length() % 2;
            for row in 0..rows {
                assert_eq!(ring.qtilde_along(&lambda, row), base, "{lambda} row {row}");
            }
        }
    }
}
