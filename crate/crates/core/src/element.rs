//! Elements of quantum cohomology rings.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinat::Partition;
use crate::scalar::Scalar;

/// The homogeneous space whose quantum cohomology an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    /// `G(m, m+n)`; Schubert classes indexed by partitions in the `m x n` box.
    Grassmannian { m: usize, n: u32 },
    /// `LG(n, 2n)`; strict partitions with parts at most `n`.
    Lagrangian { n: u32 },
    /// `OG(n+1, 2n+2)`; strict partitions with parts at most `n`.
    MaxOrthogonal { n: u32 },
}

impl Space {
    /// Degree of the quantum parameter `q`.
    pub fn q_degree(&self) -> u32 {
        match *self {
            Space::Grassmannian { m, n } => m as u32 + n,
            Space::Lagrangian { n } => n + 1,
            Space::MaxOrthogonal { n } => 2 * n,
        }
    }

    pub fn dimension(&self) -> u32 {
        match *self {
            Space::Grassmannian { m, n } => m as u32 * n,
            Space::Lagrangian { n } | Space::MaxOrthogonal { n } => n * (n + 1) / 2,
        }
    }

    /// Whether `lambda` indexes a Schubert class of this space.
    pub fn indexes(&self, lambda: &Partition) -> bool {
        match *self {
            Space::Grassmannian { m, n } => lambda.fits(m, n),
            Space::Lagrangian { n } | Space::MaxOrthogonal { n } => {
                lambda.is_strict() && lambda.first() <= n
            }
        }
    }
}

/// A finitely supported combination of `sigma_lambda q^d`.
///
/// Zero coefficients are never stored and keys iterate in `(partition, d)`
/// order, so equality and serialization are canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuantumElement<C> {
    space: Space,
    terms: BTreeMap<(Partition, u32), C>,
}

impl<C: Scalar> QuantumElement<C> {
    pub fn zero(space: Space) -> Self {
        QuantumElement {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(space: Space, lambda: Partition, d: u32) -> Self {
        let mut out = Self::zero(space);
        out.add_term(lambda, d, C::one());
        out
    }

    pub fn one(space: Space) -> Self {
        Self::basis(space, Partition::empty(), 0)
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn add_term(&mut self, lambda: Partition, d: u32, c: C) {
        debug_assert!(self.space.indexes(&lambda), "{lambda:?} is not a class of {:?}", self.space);
        if c.is_zero() {
            return;
        }
        let key = (lambda, d);
        let cur = self.terms.remove(&key).unwrap_or_else(C::zero) + c;
        if !cur.is_zero() {
            self.terms.insert(key, cur);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        assert_eq!(self.space, other.space, "cannot mix elements of different spaces");
        for ((lambda, d), v) in &other.terms {
            self.add_term(lambda.clone(), *d, v.clone() * c.clone());
        }
    }

    pub fn coefficient(&self, lambda: &Partition, d: u32) -> C {
        self.terms
            .get(&(lambda.clone(), d))
            .cloned()
            .unwrap_or_else(C::zero)
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

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u32, &C)> {
        self.terms.iter().map(|((l, d), c)| (l, *d, c))
    }

    /// Largest power of `q` present.
    pub fn max_q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(_, d)| *d).max()
    }

    /// The `q^0` part.
    pub fn classical_part(&self) -> Self {
        QuantumElement {
            space: self.space,
            terms: self
                .terms
                .iter()
                .filter(|((_, d), _)| *d == 0)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Total degree `|lambda| + d deg(q)` when every term agrees on it.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let qd = self.space.q_degree();
        let mut degrees = self.terms.keys().map(|(l, d)| l.weight() + d * qd);
        let first = degrees.next()?;
        degrees.all(|x| x == first).then_some(first)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.space);
        out.add_scaled(self, c);
        out
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: u32) -> Self {
        QuantumElement {
            space: self.space,
            terms: self
                .terms
                .iter()
                .map(|((l, d), c)| ((l.clone(), d + k), c.clone()))
                .collect(),
        }
    }

    pub fn convert<D: Scalar>(&self) -> QuantumElement<D> {
        QuantumElement {
            space: self.space,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let v = c.to_i128().expect("coefficient fits in i128");
                    (k.clone(), D::from_i128(v).expect("target scalar holds the value"))
                })
                .collect(),
        }
    }
}

impl<C: Scalar> std::ops::Add for &QuantumElement<C> {
    type Output = QuantumElement<C>;

    fn add(self, rhs: Self) -> QuantumElement<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one());
        out
    }
}

impl<C: Scalar> std::ops::Sub for &QuantumElement<C> {
    type Output = QuantumElement<C>;

    fn sub(self, rhs: Self) -> QuantumElement<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &(-C::one()));
        out
    }
}

/// Text form such as `s[3,3,2] + q*s[2] + q*s[1,1]`: terms by increasing
/// power of `q`, then by decreasing partition.
impl<C: Scalar> fmt::Display for QuantumElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|((la, da), _), ((lb, db), _)| da.cmp(db).then(lb.cmp(la)));
        for (i, ((lambda, d), c)) in keys.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            match d {
                0 => {}
                1 => write!(f, "q*")?,
                _ => write!(f, "q^{d}*")?,
            }
            let parts: Vec<String> = lambda.parts().iter().map(|p| p.to_string()).collect();
            write!(f, "s[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for QuantumElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_and_display() {
        let space = Space::Grassmannian { m: 3, n: 3 };
        let mut x = QuantumElement::<i64>::zero(space);
        x.add_term(Partition::from([1, 1]), 1, 1);
        x.add_term(Partition::from([3, 3, 2]), 0, 1);
        x.add_term(Partition::from([2]), 1, 1);
        assert_eq!(x.to_string(), "s[3,3,2] + q*s[2] + q*s[1,1]");
        x.add_term(Partition::from([2]), 1, -1);
        assert_eq!(x.len(), 2);
        x.add_term(Partition::empty(), 2, -3);
        assert_eq!(x.to_string(), "s[3,3,2] + q*s[1,1] - 3*q^2*s[]");
        assert_eq!(QuantumElement::<i64>::zero(space).to_string(), "0");
    }

    #[test]
    fn degrees() {
        let space = Space::Lagrangian { n: 2 };
        assert_eq!(space.q_degree(), 3);
        let mut x = QuantumElement::<i64>::basis(space, Partition::from([2, 1]), 0);
        x.add_term(Partition::empty(), 1, 2);
        assert_eq!(x.homogeneous_degree(), Some(3));
        x.add_term(Partition::from([1]), 0, 1);
        assert_eq!(x.homogeneous_degree(), None);
    }
}
