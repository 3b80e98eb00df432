//! Quantum cohomology of the Grassmannian `G(m, N)`, `N = m + n`.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use crate::combinat::{
    add_horizontal_strip, jd_string, partitions_in_box, rect_dual, remove_columns, Partition,
};
use crate::element::{QuantumElement, Space};
use crate::error::{Error, Result};
use crate::puzzle::count_puzzles_2step;
use crate::report::Report;
use crate::scalar::Scalar;

/// A signed product of special classes `sigma_p`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpecialMonomial {
    /// `+1` or `-1` for a single determinant term; collected expansions may
    /// carry other integers.
    pub coefficient: i64,
    /// Factors in decreasing order, each in `1..=n`.
    pub factors: Vec<u32>,
}

/// Terms of `det(sigma_{parts_i + j - i})` over the rows of `parts`, with
/// `sigma_0 = 1` and `sigma_p = 0` outside `0..=n`. Equal monomials are merged.
pub(crate) fn schur_det_monomials(parts: &[u32], n: u32) -> Vec<SpecialMonomial> {
    fn go(
        parts: &[u32],
        n: u32,
        row: usize,
        used: u64,
        sign: i64,
        factors: &mut Vec<u32>,
        out: &mut BTreeMap<Vec<u32>, i64>,
    ) {
        let k = parts.len();
        if row == k {
            let mut key = factors.clone();
            key.sort_unstable_by(|a, b| b.cmp(a));
            *out.entry(key).or_default() += sign;
            return;
        }
        // number of used columns to the right gives the inversion parity
        for col in 0..k {
            if used & (1 << col) != 0 {
                continue;
            }
            let idx = parts[row] as i64 + col as i64 - row as i64;
            if idx < 0 || idx > n as i64 {
                continue;
            }
            let flips = (used >> (col + 1)).count_ones() as i64;
            let s = if flips % 2 == 0 { sign } else { -sign };
            if idx > 0 {
                factors.push(idx as u32);
            }
            go(parts, n, row + 1, used | (1 << col), s, factors, out);
            if idx > 0 {
                factors.pop();
            }
        }
    }
    let mut out = BTreeMap::new();
    go(parts, n, 0, 0, 1, &mut Vec::new(), &mut out);
    out.into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(factors, coefficient)| SpecialMonomial {
            coefficient,
            factors,
        })
        .collect()
}

/// The ring `QH*(G(m, m+n))` with memoized Pieri and product tables.
pub struct Grassmannian<C> {
    m: usize,
    n: u32,
    pieri: RwLock<HashMap<(Partition, u32), QuantumElement<C>>>,
    products: RwLock<HashMap<(Partition, Partition), QuantumElement<C>>>,
}

impl<C: Scalar> Grassmannian<C> {
    pub fn new(m: usize, n: u32) -> Self {
        Grassmannian {
            m,
            n,
            pieri: RwLock::default(),
            products: RwLock::default(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `N = m + n`, also the degree of `q`.
    pub fn big_n(&self) -> u32 {
        self.m as u32 + self.n
    }

    pub fn space(&self) -> Space {
        Space::Grassmannian {
            m: self.m,
            n: self.n,
        }
    }

    pub fn classes(&self) -> Vec<Partition> {
        partitions_in_box(self.m, self.n)
    }

    fn check(&self, lambda: &Partition) -> Result<()> {
        if lambda.fits(self.m, self.n) {
            Ok(())
        } else {
            Err(Error::DoesNotFit {
                partition: lambda.clone(),
                rows: self.m,
                cols: self.n as usize,
            })
        }
    }

    pub fn basis(&self, lambda: &Partition) -> Result<QuantumElement<C>> {
        self.check(lambda)?;
        Ok(QuantumElement::basis(self.space(), lambda.clone(), 0))
    }

    /// `sigma_lambda * sigma_p`.
    pub fn quantum_pieri(&self, lambda: &Partition, p: u32) -> Result<QuantumElement<C>> {
        self.check(lambda)?;
        if p == 0 || p > self.n {
            return Err(Error::OutOfRange(format!("special class {p} needs 1 <= p <= {}", self.n)));
        }
        Ok(self.pieri_unchecked(lambda, p))
    }

    fn pieri_unchecked(&self, lambda: &Partition, p: u32) -> QuantumElement<C> {
        let key = (lambda.clone(), p);
        if let Some(hit) = self.pieri.read().unwrap().get(&key) {
            return hit.clone();
        }
        let space = self.space();
        let mut out = QuantumElement::zero(space);
        for mu in add_horizontal_strip(lambda, p, self.m, self.n) {
            out.add_term(mu, 0, C::one());
        }
        if lambda.length() == self.m {
            let remove = self.big_n() - p;
            for nu in self.rim_removals(lambda, remove) {
                out.add_term(nu, 1, C::one());
            }
        }
        debug_assert!(out.max_q_degree().unwrap_or(0) <= 1);
        self.pieri.write().unwrap().insert(key, out.clone());
        out
    }

    /// Every `nu` obtained by removing `k` boxes from the rim of `lambda`
    /// (no 2x2 square), at least one from each of the `m` rows.
    fn rim_removals(&self, lambda: &Partition, k: u32) -> Vec<Partition> {
        fn go(lambda: &Partition, m: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == m {
                if left == 0 {
                    out.push(Partition::new(cur.clone()).expect("rim removal keeps order"));
                }
                return;
            }
            let hi = lambda.part(i) - 1;
            let lo = lambda.part(i + 1).saturating_sub(1);
            for v in lo..=hi {
                let taken = lambda.part(i) - v;
                if taken > left {
                    continue;
                }
                cur.push(v);
                go(lambda, m, i + 1, left - taken, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(lambda, self.m, 0, k, &mut Vec::new(), &mut out);
        out
    }

    /// `x * sigma_p` for any element `x`; `p = 0` is the identity and `p > n`
    /// gives zero.
    pub fn multiply_special(&self, x: &QuantumElement<C>, p: u32) -> QuantumElement<C> {
        if p == 0 {
            return x.clone();
        }
        let mut out = QuantumElement::zero(self.space());
        if p > self.n {
            return out;
        }
        for (lambda, d, c) in x.iter() {
            out.add_scaled(&self.pieri_unchecked(lambda, p).shift_q(d), c);
        }
        out
    }

    /// Evaluates a combination of special monomials.
    pub fn evaluate(&self, monomials: &[SpecialMonomial], start: &QuantumElement<C>) -> QuantumElement<C> {
        let mut out = QuantumElement::zero(self.space());
        for mono in monomials {
            let mut x = start.clone();
            for &p in &mono.factors {
                x = self.multiply_special(&x, p);
            }
            out.add_scaled(&x, &C::from_small(mono.coefficient));
        }
        out
    }

    pub fn giambelli_monomials(&self, lambda: &Partition) -> Result<Vec<SpecialMonomial>> {
        self.check(lambda)?;
        Ok(schur_det_monomials(lambda.parts(), self.n))
    }

    /// `sigma_lambda * sigma_mu`; the lighter factor is expanded by Giambelli.
    pub fn product(&self, lambda: &Partition, mu: &Partition) -> Result<QuantumElement<C>> {
        self.check(lambda)?;
        self.check(mu)?;
        let (big, small) = if (lambda.weight(), lambda) >= (mu.weight(), mu) {
            (lambda, mu)
        } else {
            (mu, lambda)
        };
        let key = (big.clone(), small.clone());
        if let Some(hit) = self.products.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let start = QuantumElement::basis(self.space(), big.clone(), 0);
        let out = self.evaluate(&schur_det_monomials(small.parts(), self.n), &start);
        self.products.write().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// `sigma_lambda * sigma_mu` with `mu` expanded by Giambelli, bypassing the cache.
    pub fn product_expanding(&self, lambda: &Partition, mu: &Partition) -> Result<QuantumElement<C>> {
        self.check(lambda)?;
        self.check(mu)?;
        let start = QuantumElement::basis(self.space(), lambda.clone(), 0);
        Ok(self.evaluate(&schur_det_monomials(mu.parts(), self.n), &start))
    }

    /// Product of two arbitrary elements.
    pub fn multiply(&self, x: &QuantumElement<C>, y: &QuantumElement<C>) -> Result<QuantumElement<C>> {
        let mut out = QuantumElement::zero(self.space());
        for (a, da, ca) in x.iter() {
            for (b, db, cb) in y.iter() {
                let prod = self.product(a, b)?.shift_q(da + db);
                out.add_scaled(&prod, &(ca.clone() * cb.clone()));
            }
        }
        Ok(out)
    }

    fn degree_ok(&self, lambda: &Partition, mu: &Partition, nu: &Partition, d: u32) -> bool {
        lambda.weight() + mu.weight() + nu.weight()
            == self.m as u32 * self.n + d * self.big_n()
    }

    /// `<sigma_lambda, sigma_mu, sigma_nu>_d`.
    pub fn gw(&self, lambda: &Partition, mu: &Partition, nu: &Partition, d: u32) -> Result<C> {
        self.check(nu)?;
        let prod = self.product(lambda, mu)?;
        if !self.degree_ok(lambda, mu, nu, d) {
            return Ok(C::zero());
        }
        Ok(prod.coefficient(&rect_dual(nu, self.m, self.n)?, d))
    }

    /// The same invariant counted by two-step puzzles on `J^d` boundaries.
    pub fn gw_puzzle(&self, lambda: &Partition, mu: &Partition, nu: &Partition, d: u32) -> Result<PuzzleGw> {
        for x in [lambda, mu, nu] {
            self.check(x)?;
        }
        if !self.degree_ok(lambda, mu, nu, d) {
            return Ok(PuzzleGw {
                value: 0,
                degree_mismatch: true,
            });
        }
        let strings = [lambda, mu, nu]
            .map(|x| jd_string(x, self.m, self.n, d as usize));
        let [a, b, c] = strings;
        let value = count_puzzles_2step(&a?, &b?, &c?)?;
        Ok(PuzzleGw {
            value,
            degree_mismatch: false,
        })
    }

    /// `D_k = det(sigma_{1+j-i})_{k x k}` as an element of the ring.
    pub fn d_k(&self, k: usize) -> QuantumElement<C> {
        let monomials = schur_det_monomials(&vec![1; k], self.n);
        self.evaluate(&monomials, &QuantumElement::one(self.space()))
    }

    /// Checks `D_{m+1} = ... = D_{N-1} = 0`, `D_N + (-1)^n q = 0` and
    /// `sigma_n sigma_{1^m} = q`.
    pub fn presentation_report(&self) -> Report {
        let (m, n, big) = (self.m, self.n, self.big_n() as usize);
        let mut report = Report::new(format!("G({m},{big}) presentation"));
        let space = self.space();
        for k in m + 1..big {
            let dk = self.d_k(k);
            report.check(dk.is_zero(), || format!("D_{k} = {dk}"));
        }
        let mut rel = self.d_k(big);
        let sign = if n % 2 == 0 { C::one() } else { -C::one() };
        rel.add_scaled(&QuantumElement::one(space).shift_q(1), &sign);
        report.check(rel.is_zero(), || format!("D_{big} + (-1)^{n} q = {rel}"));
        let q = QuantumElement::<C>::one(space).shift_q(1);
        match self.product(&Partition::row(n), &Partition::rectangle(m, 1)) {
            Ok(prod) => report.check(prod == q, || format!("sigma_{n} sigma_(1^{m}) = {prod}")),
            Err(e) => report.check(false, || e.to_string()),
        }
        report
    }
}

/// A puzzle count together with whether the degree condition failed (in
/// which case the count is zero without looking at any puzzle).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PuzzleGw {
    pub value: u64,
    pub degree_mismatch: bool,
}

/// `(dim Y_d, dim X)` where `Y_d` is the two-step flag variety
/// `F(m-d, m+d; N)` and `X = G(m, N)`.
pub fn dims(m: usize, n: u32, d: u32) -> Result<(u32, u32)> {
    let (m32, big) = (m as u32, m as u32 + n);
    if d > m32.min(n) {
        return Err(Error::OutOfRange(format!("degree {d} exceeds min(m, n)")));
    }
    let y = m32 * n + d * big - 3 * d * d;
    let (a, b) = (m32 - d, m32 + d);
    if y != (big - b) * b + (b - a) * a {
        return Err(Error::Contract(format!("dimension formulas disagree for {m},{n},{d}")));
    }
    Ok((y, m32 * n))
}

pub fn quantum_pieri_a(lambda: &Partition, p: u32, m: usize, n: u32) -> Result<QuantumElement<i64>> {
    Grassmannian::new(m, n).quantum_pieri(lambda, p)
}

pub fn giambelli_monomials(lambda: &Partition, m: usize, n: u32) -> Result<Vec<SpecialMonomial>> {
    Grassmannian::<i64>::new(m, n).giambelli_monomials(lambda)
}

pub fn quantum_product_a(lambda: &Partition, mu: &Partition, m: usize, n: u32) -> Result<QuantumElement<i64>> {
    Grassmannian::new(m, n).product(lambda, mu)
}

pub fn gw_a(lambda: &Partition, mu: &Partition, nu: &Partition, d: u32, m: usize, n: u32) -> Result<i64> {
    Grassmannian::new(m, n).gw(lambda, mu, nu, d)
}

pub fn gw_a_puzzle(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    d: u32,
    m: usize,
    n: u32,
) -> Result<PuzzleGw> {
    Grassmannian::<i64>::new(m, n).gw_puzzle(lambda, mu, nu, d)
}

pub fn presentation_report_a(m: usize, n: u32) -> Report {
    Grassmannian::<i64>::new(m, n).presentation_report()
}

/// The classical product of the column-reduced classes on `G(m+d, N)`;
/// it is nonzero whenever `<lambda, mu, nu>_d` is.
pub fn reduced_classical_product(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    d: u32,
    m: usize,
    n: u32,
) -> Result<QuantumElement<i64>> {
    let (m2, n2) = (m + d as usize, n.saturating_sub(d));
    let g = Grassmannian::<i64>::new(m2, n2);
    let [a, b, c] = [lambda, mu, nu].map(|x| remove_columns(x, d));
    if d > n || [&a, &b, &c].iter().any(|x| !x.fits(m2, n2)) {
        return Ok(QuantumElement::zero(g.space()));
    }
    let ab = g.product(&a, &b)?.classical_part();
    Ok(g.multiply(&ab, &g.basis(&c)?)?.classical_part())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const K: usize>(parts: [u32; K]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn pieri_examples() {
        let x = quantum_pieri_a(&p([3, 2, 1]), 2, 3, 3).unwrap();
        assert_eq!(x.to_string(), "s[3,3,2] + q*s[2] + q*s[1,1]");
        let x = quantum_pieri_a(&p([1]), 1, 2, 2).unwrap();
        assert_eq!(x.to_string(), "s[2] + s[1,1]");
        let x = quantum_pieri_a(&p([2, 1]), 1, 2, 2).unwrap();
        assert_eq!(x.to_string(), "s[2,2] + q*s[]");
        assert!(quantum_pieri_a(&p([1]), 3, 2, 2).is_err());
        assert!(quantum_pieri_a(&p([3]), 1, 2, 2).is_err());
    }

    #[test]
    fn giambelli_examples() {
        let g = giambelli_monomials(&p([1, 1]), 2, 2).unwrap();
        assert_eq!(
            g,
            vec![
                SpecialMonomial { coefficient: 1, factors: vec![1, 1] },
                SpecialMonomial { coefficient: -1, factors: vec![2] },
            ]
        );
        let g = giambelli_monomials(&p([2]), 2, 2).unwrap();
        assert_eq!(g, vec![SpecialMonomial { coefficient: 1, factors: vec![2] }]);
        let g = giambelli_monomials(&Partition::empty(), 2, 2).unwrap();
        assert_eq!(g, vec![SpecialMonomial { coefficient: 1, factors: vec![] }]);
    }

    #[test]
    fn product_examples() {
        assert_eq!(quantum_product_a(&p([1]), &p([1]), 2, 2).unwrap().to_string(), "s[2] + s[1,1]");
        assert_eq!(quantum_product_a(&p([2]), &p([1, 1]), 2, 2).unwrap().to_string(), "q*s[]");
        assert_eq!(
            quantum_product_a(&p([3, 3, 3]), &Partition::empty(), 3, 3).unwrap().to_string(),
            "s[3,3,3]"
        );
    }

    #[test]
    fn gw_examples() {
        assert_eq!(gw_a(&p([3, 2, 1]), &p([3, 2, 1]), &p([2, 1]), 1, 3, 3).unwrap(), 2);
        assert_eq!(gw_a(&p([1]), &p([1]), &Partition::empty(), 0, 1, 2).unwrap(), 1);
    }

    #[test]
    fn dims_examples() {
        assert_eq!(dims(2, 2, 1).unwrap(), (5, 4));
        assert_eq!(dims(3, 4, 0).unwrap(), (12, 12));
        assert_eq!(dims(3, 3, 1).unwrap(), (12, 9));
        assert!(dims(2, 2, 3).is_err());
    }

    #[test]
    fn presentations_small() {
        for (m, n) in [(1, 1), (2, 2), (3, 3), (1, 3), (2, 3)] {
            let r = presentation_report_a(m, n);
            assert!(r.passed(), "{r}");
        }
    }
}
