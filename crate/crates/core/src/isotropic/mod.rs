//! Quantum cohomology of the Lagrangian Grassmannian `LG(n, 2n)` and the
//! maximal orthogonal Grassmannian `OG(n+1, 2n+2)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use crate::combinat::{
    add_horizontal_strip, hat_map, remove_horizontal_strip, skew_component_stats, strict_dual,
    strict_partitions, Partition,
};
use crate::element::{QuantumElement, Space};
use crate::error::{Error, Result};
use crate::qpoly::QtildeRing;
use crate::report::Report;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// `LG(n, 2n)`, classes `sigma_lambda`.
    Lagrangian,
    /// `OG(n+1, 2n+2)`, classes `tau_lambda`.
    Orthogonal,
}

/// A polynomial in the special classes and `q`: keys are (factors in
/// decreasing order, power of `q`).
type SpecialPoly<C> = BTreeMap<(Vec<u32>, u32), C>;

fn poly_add<C: Scalar>(out: &mut SpecialPoly<C>, key: (Vec<u32>, u32), c: C) {
    if c.is_zero() {
        return;
    }
    let cur = out.remove(&key).unwrap_or_else(C::zero) + c;
    if !cur.is_zero() {
        out.insert(key, cur);
    }
}

fn poly_mul<C: Scalar>(a: &SpecialPoly<C>, b: &SpecialPoly<C>) -> SpecialPoly<C> {
    let mut out = SpecialPoly::new();
    for ((fa, da), ca) in a {
        for ((fb, db), cb) in b {
            let mut f = fa.clone();
            f.extend_from_slice(fb);
            f.sort_unstable_by(|x, y| y.cmp(x));
            poly_add(&mut out, (f, da + db), ca.clone() * cb.clone());
        }
    }
    out
}

fn special<C: Scalar>(p: i64, d: u32, n: u32, c: C) -> SpecialPoly<C> {
    let mut out = SpecialPoly::new();
    if p == 0 {
        poly_add(&mut out, (vec![], d), c);
    } else if p > 0 && p <= n as i64 {
        poly_add(&mut out, (vec![p as u32], d), c);
    }
    out
}

/// The quantum cohomology ring of `LG(n, 2n)` or `OG(n+1, 2n+2)`.
pub struct IsotropicRing<C> {
    flavor: Flavor,
    n: u32,
    qtilde: QtildeRing<C>,
    pieri: RwLock<HashMap<(Partition, u32), QuantumElement<C>>>,
    products: RwLock<HashMap<(Partition, Partition), QuantumElement<C>>>,
}

impl<C: Scalar> IsotropicRing<C> {
    pub fn new(flavor: Flavor, n: u32) -> Self {
        let ambient = match flavor {
            Flavor::Lagrangian => n + 1,
            Flavor::Orthogonal => n,
        };
        IsotropicRing {
            flavor,
            n,
            qtilde: QtildeRing::new(ambient),
            pieri: RwLock::default(),
            products: RwLock::default(),
        }
    }

    pub fn lagrangian(n: u32) -> Self {
        Self::new(Flavor::Lagrangian, n)
    }

    pub fn orthogonal(n: u32) -> Self {
        Self::new(Flavor::Orthogonal, n)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn space(&self) -> Space {
        match self.flavor {
            Flavor::Lagrangian => Space::Lagrangian { n: self.n },
            Flavor::Orthogonal => Space::MaxOrthogonal { n: self.n },
        }
    }

    pub fn q_degree(&self) -> u32 {
        self.space().q_degree()
    }

    pub fn classes(&self) -> Vec<Partition> {
        strict_partitions(self.n)
    }

    fn check(&self, lambda: &Partition) -> Result<()> {
        if !lambda.is_strict() {
            return Err(Error::NotStrict(lambda.clone()));
        }
        if lambda.first() > self.n {
            return Err(Error::PartTooLarge {
                partition: lambda.clone(),
                bound: self.n,
            });
        }
        Ok(())
    }

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
        let n = self.n;
        let mut out = QuantumElement::zero(self.space());
        let stats = |inner: &Partition, outer: &Partition| {
            skew_component_stats(inner, outer).expect("strips contain their base")
        };
        let added = add_horizontal_strip(lambda, p, lambda.length() + 1, n);
        match self.flavor {
            Flavor::Lagrangian => {
                for mu in added.into_iter().filter(Partition::is_strict) {
                    let c = C::one().mul_pow2(stats(lambda, &mu).n());
                    out.add_term(mu, 0, c);
                }
                for nu in remove_horizontal_strip(lambda, n + 1 - p) {
                    if nu.is_strict() {
                        let c = C::one().mul_pow2(stats(&nu, lambda).n_prime());
                        out.add_term(nu, 1, c);
                    }
                }
            }
            Flavor::Orthogonal => {
                for mu in added {
                    let c = C::one().mul_pow2(stats(lambda, &mu).n_prime());
                    if mu.is_strict() {
                        out.add_term(mu, 0, c);
                    } else if mu.part(0) == n && mu.part(1) == n {
                        let rest = mu.remove_parts(&[n, n]).expect("two parts equal to n");
                        if rest.is_strict() {
                            out.add_term(rest, 1, c);
                        }
                    }
                }
            }
        }
        debug_assert!(out.max_q_degree().unwrap_or(0) <= 1);
        self.pieri.write().unwrap().insert(key, out.clone());
        out
    }

    /// `x * sigma_p` (or `tau_p`) for any element `x`.
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

    /// The quantum two-row Giambelli polynomial for `(i, j)`, `i >= j >= 0`.
    fn giambelli_two_row(&self, i: u32, j: u32) -> SpecialPoly<C> {
        let n = self.n;
        let (i64_, j64) = (i as i64, j as i64);
        if j == 0 {
            return special(i64_, 0, n, C::one());
        }
        let two = C::from_small(2);
        let sign = |k: i64| if k % 2 == 0 { C::one() } else { -C::one() };
        let mut out = poly_mul(&special(i64_, 0, n, C::one()), &special(j64, 0, n, C::one()));
        let top = match self.flavor {
            Flavor::Lagrangian => n as i64 - i64_,
            Flavor::Orthogonal => j64 - 1,
        };
        for k in 1..=top {
            let term = poly_mul(
                &special(i64_ + k, 0, n, sign(k) * two.clone()),
                &special(j64 - k, 0, n, C::one()),
            );
            for (key, c) in term {
                poly_add(&mut out, key, c);
            }
        }
        let extra = match self.flavor {
            Flavor::Lagrangian => special(i64_ + j64 - n as i64 - 1, 1, n, sign(n as i64 + 1 - i64_)),
            Flavor::Orthogonal => special(i64_ + j64, 0, n, sign(j64)),
        };
        for (key, c) in extra {
            poly_add(&mut out, key, c);
        }
        out
    }

    fn giambelli_pfaffian(&self, a: &[u32]) -> SpecialPoly<C> {
        match a.len() {
            0 => special(0, 0, self.n, C::one()),
            2 => self.giambelli_two_row(a[0], a[1]),
            r => {
                let mut out = SpecialPoly::new();
                for j in 0..r - 1 {
                    let rest: Vec<u32> = a
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j && k != r - 1)
                        .map(|(_, &x)| x)
                        .collect();
                    let sign = if j % 2 == 0 { C::one() } else { -C::one() };
                    let term = poly_mul(&self.giambelli_two_row(a[j], a[r - 1]), &self.giambelli_pfaffian(&rest));
                    for (key, c) in term {
                        poly_add(&mut out, key, c * sign.clone());
                    }
                }
                out
            }
        }
    }

    /// Quantum Giambelli: the class as a polynomial in special classes and `q`.
    fn giambelli(&self, lambda: &Partition) -> SpecialPoly<C> {
        let mut parts = lambda.parts().to_vec();
        if parts.len() % 2 == 1 {
            parts.push(0);
        }
        self.giambelli_pfaffian(&parts)
    }

    /// Product through quantum Giambelli and iterated quantum Pieri.
    pub fn product_by_pieri(&self, lambda: &Partition, mu: &Partition) -> Result<QuantumElement<C>> {
        self.check(lambda)?;
        self.check(mu)?;
        let mut out = QuantumElement::zero(self.space());
        let start = QuantumElement::basis(self.space(), lambda.clone(), 0);
        for ((factors, d), c) in self.giambelli(mu) {
            let mut x = start.shift_q(d);
            for &p in &factors {
                x = self.multiply_special(&x, p);
            }
            out.add_scaled(&x, &c);
        }
        Ok(out)
    }

    /// Product read off from Q~ (for LG) or P~ (for OG) structure constants.
    pub fn product_by_qtilde(&self, lambda: &Partition, mu: &Partition) -> Result<QuantumElement<C>> {
        self.check(lambda)?;
        self.check(mu)?;
        let mut out = QuantumElement::zero(self.space());
        match self.flavor {
            Flavor::Lagrangian => {
                let top = self.n + 1;
                for (kappa, e) in self.qtilde.structure(lambda, mu)?.iter() {
                    let d = kappa.count_part(top) as u32;
                    let nu = kappa.remove_parts(&vec![top; d as usize]).expect("counted parts");
                    if !nu.is_strict() {
                        continue;
                    }
                    let c = e.div_pow2(d).ok_or_else(|| {
                        Error::Contract(format!("2^{d} does not divide e^{kappa}_{{{lambda},{mu}}} = {e}"))
                    })?;
                    out.add_term(nu, d, c);
                }
            }
            Flavor::Orthogonal => {
                let n = self.n;
                for (kappa, f) in self.qtilde.p_structure(lambda, mu)?.iter() {
                    let d = kappa.count_part(n) as u32 / 2;
                    let nu = kappa.remove_parts(&vec![n; 2 * d as usize]).expect("counted parts");
                    if nu.is_strict() {
                        out.add_term(nu, d, f.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// `sigma_lambda * sigma_mu` (or `tau`); memoized, symmetric in its inputs.
    pub fn product(&self, lambda: &Partition, mu: &Partition) -> Result<QuantumElement<C>> {
        let key = if lambda >= mu {
            (lambda.clone(), mu.clone())
        } else {
            (mu.clone(), lambda.clone())
        };
        if let Some(hit) = self.products.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let out = self.product_by_qtilde(&key.0, &key.1)?;
        self.products.write().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// Both product routes, failing with a contract violation if they differ.
    pub fn product_checked(&self, lambda: &Partition, mu: &Partition) -> Result<QuantumElement<C>> {
        let a = self.product(lambda, mu)?;
        let b = self.product_by_pieri(lambda, mu)?;
        if a != b {
            return Err(Error::Contract(format!(
                "{:?} product of {lambda} and {mu}: structure constants give {a}, Pieri gives {b}",
                self.flavor
            )));
        }
        Ok(a)
    }

    pub fn multiply(&self, x: &QuantumElement<C>, y: &QuantumElement<C>) -> Result<QuantumElement<C>> {
        let mut out = QuantumElement::zero(self.space());
        for (a, da, ca) in x.iter() {
            for (b, db, cb) in y.iter() {
                out.add_scaled(&self.product(a, b)?.shift_q(da + db), &(ca.clone() * cb.clone()));
            }
        }
        Ok(out)
    }

    fn degree_ok(&self, lambda: &Partition, mu: &Partition, nu: &Partition, d: u32) -> bool {
        lambda.weight() + mu.weight() + nu.weight()
            == self.n * (self.n + 1) / 2 + d * self.q_degree()
    }

    /// `<lambda, mu, nu>_d`.
    pub fn gw(&self, lambda: &Partition, mu: &Partition, nu: &Partition, d: u32) -> Result<C> {
        self.check(nu)?;
        let prod = self.product(lambda, mu)?;
        if !self.degree_ok(lambda, mu, nu, d) {
            return Ok(C::zero());
        }
        Ok(prod.coefficient(&strict_dual(nu, self.n)?, d))
    }

    fn one(&self) -> QuantumElement<C> {
        QuantumElement::one(self.space())
    }

    fn special_class(&self, p: i64) -> QuantumElement<C> {
        if p < 0 || p > self.n as i64 {
            QuantumElement::zero(self.space())
        } else {
            QuantumElement::basis(self.space(), Partition::row(p as u32), 0)
        }
    }

    /// `sum c * x_a * x_b + sum c * x_s` over special classes.
    fn combination(&self, pairs: &[(i64, i64, C)], singles: &[(i64, C)]) -> Result<QuantumElement<C>> {
        let mut out = QuantumElement::zero(self.space());
        for (a, b, c) in pairs {
            out.add_scaled(&self.multiply(&self.special_class(*a), &self.special_class(*b))?, c);
        }
        for (s, c) in singles {
            out.add_scaled(&self.special_class(*s), c);
        }
        Ok(out)
    }

    /// Checks the defining relations of the ring (and, for OG, the two-row
    /// Giambelli identities).
    pub fn presentation_report(&self) -> Report {
        let n = self.n as i64;
        let mut report = Report::new(format!("{:?}({n}) presentation", self.flavor));
        let sign = |k: i64| if k.rem_euclid(2) == 0 { C::one() } else { -C::one() };
        let two = C::from_small(2);
        // sigma_a sigma_b + 2 sum_{k=1}^{top} (-1)^k sigma_{a+k} sigma_{b-k}
        let quadratic = |a: i64, b: i64, top: i64| {
            let mut pairs = vec![(a, b, C::one())];
            pairs.extend((1..=top).map(|k| (a + k, b - k, sign(k) * two.clone())));
            pairs
        };
        let mut run = |label: String, lhs: Result<QuantumElement<C>>, rhs: QuantumElement<C>| match lhs {
            Ok(lhs) => report.check(lhs == rhs, || format!("{label}: {lhs} != {rhs}")),
            Err(e) => report.check(false, || format!("{label}: {e}")),
        };
        match self.flavor {
            Flavor::Lagrangian => {
                for i in 1..=n {
                    let lhs = self.combination(&quadratic(i, i, n - i), &[]);
                    let rhs = self.special_class(2 * i - n - 1).shift_q(1).scale(&sign(n - i));
                    run(format!("relation {i}"), lhs, rhs);
                }
            }
            Flavor::Orthogonal => {
                for i in 1..n {
                    let lhs = self.combination(&quadratic(i, i, i - 1), &[(2 * i, sign(i))]);
                    run(format!("relation {i}"), lhs, QuantumElement::zero(self.space()));
                }
                let lhs = self.combination(&[(n, n, C::one())], &[]);
                run("tau_n^2 = q".into(), lhs, self.one().shift_q(1));
                for i in 2..=n {
                    for j in 1..i {
                        let lhs = self.combination(&quadratic(i, j, j - 1), &[(i + j, sign(j))]);
                        let class = Partition::new(vec![i as u32, j as u32]).expect("i > j");
                        let rhs = QuantumElement::basis(self.space(), class, 0);
                        run(format!("Giambelli ({i},{j})"), lhs, rhs);
                    }
                }
            }
        }
        report
    }
}

pub fn quantum_pieri_lg(lambda: &Partition, p: u32, n: u32) -> Result<QuantumElement<i64>> {
    IsotropicRing::lagrangian(n).quantum_pieri(lambda, p)
}

pub fn quantum_pieri_og(lambda: &Partition, p: u32, n: u32) -> Result<QuantumElement<i64>> {
    IsotropicRing::orthogonal(n).quantum_pieri(lambda, p)
}

pub fn quantum_product_lg(lambda: &Partition, mu: &Partition, n: u32) -> Result<QuantumElement<i64>> {
    IsotropicRing::lagrangian(n).product_checked(lambda, mu)
}

pub fn quantum_product_og(lambda: &Partition, mu: &Partition, n: u32) -> Result<QuantumElement<i64>> {
    IsotropicRing::orthogonal(n).product_checked(lambda, mu)
}

pub fn gw_lg(lambda: &Partition, mu: &Partition, nu: &Partition, d: u32, n: u32) -> Result<i64> {
    IsotropicRing::lagrangian(n).gw(lambda, mu, nu, d)
}

pub fn gw_og(lambda: &Partition, mu: &Partition, nu: &Partition, d: u32, n: u32) -> Result<i64> {
    IsotropicRing::orthogonal(n).gw(lambda, mu, nu, d)
}

/// Compares a degree-one invariant of `LG(n, 2n)` with half the classical
/// triple intersection on `LG(n+1, 2n+2)`.
pub fn line_number_check_lg<C: Scalar>(
    lg: &IsotropicRing<C>,
    bigger: &IsotropicRing<C>,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<(C, C)> {
    let n = lg.n();
    if lg.flavor() != Flavor::Lagrangian || bigger.flavor() != Flavor::Lagrangian || bigger.n() != n + 1 {
        return Err(Error::OutOfRange("line numbers compare LG(n) with LG(n+1)".into()));
    }
    if lambda.weight() + mu.weight() + nu.weight() != n * (n + 1) / 2 + n + 1 {
        return Err(Error::OutOfRange(format!("{lambda}, {mu}, {nu} have the wrong total degree")));
    }
    let quantum = lg.gw(lambda, mu, nu, 1)?;
    let classical = bigger.gw(lambda, mu, nu, 0)?;
    let half = classical
        .div_pow2(1)
        .ok_or_else(|| Error::Contract(format!("classical triple {classical} is odd")))?;
    Ok((quantum, half))
}

/// Both sides of the OG/LG comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityCheck<C> {
    pub og: C,
    /// `None` when `l(lambda) < 2d + 1`; the OG value must then vanish.
    pub lg: Option<C>,
    pub e: Option<u32>,
}

impl<C: Scalar> DualityCheck<C> {
    pub fn holds(&self) -> bool {
        match &self.lg {
            Some(lg) => *lg == self.og,
            None => self.og.is_zero(),
        }
    }
}

/// `<tau_lambda, tau_mu, tau_nu>_d` on `OG(n+1, 2n+2)` against
/// `<sigma_hat(lambda), sigma_mu^v, sigma_nu^v>_e` on `LG(n-1, 2n-2)`.
pub fn duality_check<C: Scalar>(
    og: &IsotropicRing<C>,
    lg: &IsotropicRing<C>,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    d: u32,
) -> Result<DualityCheck<C>> {
    let n = og.n();
    if og.flavor() != Flavor::Orthogonal || lg.flavor() != Flavor::Lagrangian || n < 1 || lg.n() + 1 != n {
        return Err(Error::OutOfRange("duality compares OG(n) with LG(n-1)".into()));
    }
    if lambda.is_empty() {
        return Err(Error::OutOfRange("lambda must be nonzero".into()));
    }
    for x in [mu, nu] {
        if x.first() >= n || !x.is_strict() {
            return Err(Error::OutOfRange(format!("{x} is not in D_{}", n - 1)));
        }
    }
    let og_value = og.gw(lambda, mu, nu, d)?;
    let len = lambda.length() as i64;
    let e = len - 2 * d as i64 - 1;
    if e < 0 {
        return Ok(DualityCheck {
            og: og_value,
            lg: None,
            e: None,
        });
    }
    let e = e as u32;
    let lg_value = lg.gw(
        &hat_map(lambda, n)?,
        &strict_dual(mu, n - 1)?,
        &strict_dual(nu, n - 1)?,
        e,
    )?;
    Ok(DualityCheck {
        og: og_value,
        lg: Some(lg_value),
        e: Some(e),
    })
}

pub fn presentation_report_isotropic(flavor: Flavor, n: u32) -> Report {
    IsotropicRing::<i64>::new(flavor, n).presentation_report()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const K: usize>(parts: [u32; K]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn lg_pieri_examples() {
        assert_eq!(quantum_pieri_lg(&p([2, 1]), 1, 2).unwrap().to_string(), "q*s[1]");
        // (1,1) is not strict, so only the Q~ Pieri rule sees it
        assert_eq!(quantum_pieri_lg(&p([1]), 1, 3).unwrap().to_string(), "2*s[2]");
        assert_eq!(quantum_pieri_lg(&p([2]), 2, 2).unwrap().to_string(), "q*s[1]");
        assert!(quantum_pieri_lg(&p([1, 1]), 1, 3).is_err());
        assert!(quantum_pieri_lg(&p([1]), 4, 3).is_err());
    }

    #[test]
    fn og_pieri_examples() {
        assert_eq!(quantum_pieri_og(&p([2]), 2, 2).unwrap().to_string(), "q*s[]");
        assert_eq!(quantum_pieri_og(&p([2]), 1, 2).unwrap().to_string(), "s[2,1]");
        assert_eq!(quantum_pieri_og(&p([2, 1]), 2, 2).unwrap().to_string(), "q*s[1]");
    }

    #[test]
    fn product_examples() {
        assert_eq!(quantum_product_lg(&p([2, 1]), &p([1]), 2).unwrap().to_string(), "q*s[1]");
        assert_eq!(quantum_product_lg(&Partition::empty(), &Partition::empty(), 2).unwrap().to_string(), "s[]");
        assert_eq!(quantum_product_lg(&p([1]), &p([1]), 2).unwrap().to_string(), "2*s[2]");
        assert_eq!(quantum_product_og(&p([2]), &p([2]), 2).unwrap().to_string(), "q*s[]");
        assert_eq!(quantum_product_og(&p([3, 1]), &p([3]), 3).unwrap().to_string(), "q*s[1]");
        assert_eq!(quantum_product_og(&p([2, 1]), &p([3]), 3).unwrap().to_string(), "s[3,2,1]");
    }

    #[test]
    fn gw_examples() {
        assert_eq!(gw_lg(&p([1]), &p([1]), &p([1]), 1, 1).unwrap(), 1);
        assert_eq!(gw_og(&p([2, 1]), &Partition::empty(), &Partition::empty(), 0, 2).unwrap(), 1);
        assert_eq!(gw_lg(&p([1]), &p([1]), &p([1]), 0, 1).unwrap(), 0);
    }

    #[test]
    fn duality_example() {
        let og = IsotropicRing::<i64>::orthogonal(2);
        let lg = IsotropicRing::<i64>::lagrangian(1);
        let e = Partition::empty();
        let r = duality_check(&og, &lg, &p([2, 1]), &e, &e, 0).unwrap();
        assert_eq!(r, DualityCheck { og: 1, lg: Some(1), e: Some(1) });
        let r = duality_check(&og, &lg, &p([2]), &e, &p([1]), 1).unwrap();
        assert!(r.lg.is_none() && r.holds());
    }

    #[test]
    fn small_presentations() {
        for n in 1..=3 {
            for flavor in [Flavor::Lagrangian, Flavor::Orthogonal] {
                let r = presentation_report_isotropic(flavor, n);
                assert!(r.passed(), "{r}");
            }
        }
    }
}
