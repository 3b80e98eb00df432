//! Exhaustive identity suites over small spaces.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::combinat::{jd_string, partitions_of, rect_dual, strict_dual, strict_partitions, Partition};
use crate::element::QuantumElement;
use crate::error::Error;
use crate::isotropic::{duality_check, line_number_check_lg, Flavor, IsotropicRing};
use crate::puzzle::count_puzzles_2step;
use crate::qpoly::{EPoly, QtildeRing};
use crate::report::Report;
use crate::typea::{reduced_classical_product, Grassmannian};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Presentations,
    PuzzleConjecture,
    Duality,
    LineNumbers,
    QtildeProperties,
    Symmetry,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Presentations,
        Suite::PuzzleConjecture,
        Suite::Duality,
        Suite::LineNumbers,
        Suite::QtildeProperties,
        Suite::Symmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Presentations => "presentations",
            Suite::PuzzleConjecture => "puzzle-conjecture",
            Suite::Duality => "duality",
            Suite::LineNumbers => "line-numbers",
            Suite::QtildeProperties => "qtilde-properties",
            Suite::Symmetry => "symmetry",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown suite {s:?}")))
    }
}

/// Size limits for the suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest `N = m + n` for Grassmannians.
    pub max_big_n: u32,
    /// Largest `n` for LG and OG (and for `Lambda_n`).
    pub max_n: u32,
    /// Largest weight in the Q~ property checks.
    pub max_weight: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_big_n: 8,
            max_n: 4,
            max_weight: 12,
        }
    }
}

pub fn run(suite: Suite, bounds: &Bounds) -> Vec<Report> {
    match suite {
        Suite::Presentations => presentations(bounds),
        Suite::PuzzleConjecture => vec![puzzle_conjecture(bounds.max_big_n)],
        Suite::Duality => vec![og_lg_duality(bounds.max_n)],
        Suite::LineNumbers => vec![line_numbers(bounds.max_n)],
        Suite::QtildeProperties => qtilde_properties(bounds.max_n, bounds.max_weight),
        Suite::Symmetry => symmetry(bounds),
    }
}

/// Every `G(m, N)` with `m, n >= 1` and `N <= max_big_n`.
pub fn grassmannians(max_big_n: u32) -> Vec<(usize, u32)> {
    (2..=max_big_n)
        .flat_map(|big| (1..big).map(move |m| (m as usize, big - m)))
        .collect()
}

fn merge_all(name: &str, parts: impl IntoIterator<Item = Report>) -> Report {
    let mut out = Report::new(name);
    for r in parts {
        out.merge(r);
    }
    out
}

pub fn presentations(bounds: &Bounds) -> Vec<Report> {
    let a = merge_all(
        &format!("type A presentation, N <= {}", bounds.max_big_n),
        grassmannians(bounds.max_big_n)
            .into_par_iter()
            .map(|(m, n)| Grassmannian::<i64>::new(m, n).presentation_report())
            .collect::<Vec<_>>(),
    );
    let iso = |flavor: Flavor, label: &str| {
        merge_all(
            &format!("{label} presentation, n <= {}", bounds.max_n),
            (1..=bounds.max_n)
                .into_par_iter()
                .map(|n| IsotropicRing::<i64>::new(flavor, n).presentation_report())
                .collect::<Vec<_>>(),
        )
    };
    vec![a, iso(Flavor::Lagrangian, "LG"), iso(Flavor::Orthogonal, "OG")]
}

/// `gw_a` against two-step puzzle counts for every valid triple.
pub fn puzzle_conjecture(max_big_n: u32) -> Report {
    let parts: Vec<Report> = grassmannians(max_big_n)
        .into_par_iter()
        .map(|(m, n)| {
            let g = Grassmannian::<i64>::new(m, n);
            let classes = g.classes();
            let big = g.big_n();
            let jobs: Vec<(&Partition, &Partition, u32)> = classes
                .iter()
                .flat_map(|a| classes.iter().map(move |b| (a, b)))
                .flat_map(|(a, b)| (0..=(m as u32).min(n)).map(move |d| (a, b, d)))
                .collect();
            let reports: Vec<Report> = jobs
                .into_par_iter()
                .map(|(a, b, d)| {
                    let mut r = Report::new("");
                    let target = (m as u32 * n + d * big) as i64 - (a.weight() + b.weight()) as i64;
                    if target < 0 {
                        return r;
                    }
                    for c in classes.iter().filter(|c| c.weight() as i64 == target) {
                        let quantum = g.gw(a, b, c, d).expect("classes fit");
                        let strings = [a, b, c].map(|x| jd_string(x, m, n, d as usize).expect("d <= min(m,n)"));
                        let puzzles = count_puzzles_2step(&strings[0], &strings[1], &strings[2]).expect("J^d strings match");
                        r.check(quantum == puzzles as i64, || {
                            format!("G({m},{big}) <{a},{b},{c}>_{d}: Pieri {quantum}, puzzles {puzzles}")
                        });
                    }
                    r
                })
                .collect();
            merge_all("", reports)
        })
        .collect();
    merge_all(&format!("puzzle conjecture, N <= {max_big_n}"), parts)
}

pub fn og_lg_duality(max_n: u32) -> Report {
    let parts: Vec<Report> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let og = IsotropicRing::<i64>::orthogonal(n);
            let lg = IsotropicRing::<i64>::lagrangian(n - 1);
            let small = strict_partitions(n - 1);
            let dim = n * (n + 1) / 2;
            let mut r = Report::new("");
            for lambda in og.classes().iter().filter(|l| !l.is_empty()) {
                for mu in &small {
                    for nu in &small {
                        let total = lambda.weight() + mu.weight() + nu.weight();
                        if total < dim || (total - dim) % (2 * n) != 0 {
                            continue;
                        }
                        let d = (total - dim) / (2 * n);
                        match duality_check(&og, &lg, lambda, mu, nu, d) {
                            Ok(c) => r.check(c.holds(), || {
                                format!("OG({n}) <{lambda},{mu},{nu}>_{d} = {} vs LG {:?}", c.og, c.lg)
                            }),
                            Err(e) => r.check(false, || e.to_string()),
                        }
                    }
                }
            }
            r
        })
        .collect();
    merge_all(&format!("OG/LG duality, n <= {max_n}"), parts)
}

pub fn line_numbers(max_n: u32) -> Report {
    let parts: Vec<Report> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let lg = IsotropicRing::<i64>::lagrangian(n);
            let bigger = IsotropicRing::<i64>::lagrangian(n + 1);
            let classes = lg.classes();
            let target = n * (n + 1) / 2 + n + 1;
            let mut r = Report::new("");
            for a in &classes {
                for b in &classes {
                    for c in classes.iter().filter(|c| a.weight() + b.weight() + c.weight() == target) {
                        match line_number_check_lg(&lg, &bigger, a, b, c) {
                            Ok((q, half)) => r.check(q == half, || {
                                format!("LG({n}) <{a},{b},{c}>_1 = {q}, half classical = {half}")
                            }),
                            Err(e) => r.check(false, || e.to_string()),
                        }
                    }
                }
            }
            r
        })
        .collect();
    merge_all(&format!("line numbers, n <= {max_n}"), parts)
}

/// Polynomials in explicit variables, keyed by exponent vectors.
type MonoPoly = BTreeMap<Vec<u32>, i64>;

fn mono_mul(a: &MonoPoly, b: &MonoPoly) -> MonoPoly {
    let mut out = MonoPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `e_k` in `vars` variables, each raised to `power`.
fn elementary_monomials(vars: usize, k: u32, power: u32) -> MonoPoly {
    let mut out = MonoPoly::new();
    for mask in 0u32..(1 << vars) {
        if mask.count_ones() == k {
            let e = (0..vars).map(|i| if mask & (1 << i) != 0 { power } else { 0 }).collect();
            out.insert(e, 1);
        }
    }
    out
}

fn epoly_to_monomials(f: &EPoly<i64>, vars: usize) -> MonoPoly {
    let mut out = MonoPoly::new();
    for (key, c) in f.iter() {
        let mut term: MonoPoly = [(vec![0; vars], *c)].into();
        for &k in key.parts() {
            term = mono_mul(&term, &elementary_monomials(vars, k, 1));
        }
        for (e, v) in term {
            *out.entry(e).or_default() += v;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// The members of `E_n` of each weight up to `max_weight`.
fn e_partitions(n: u32, max_weight: u32) -> Vec<Partition> {
    (0..=max_weight).flat_map(|w| partitions_of(w, n)).collect()
}

pub fn qtilde_properties(max_n: u32, max_weight: u32) -> Vec<Report> {
    let per_n: Vec<Vec<Report>> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let ring = QtildeRing::<i64>::new(n);
            let all = e_partitions(n, max_weight);
            let mut round_trip = Report::new("");
            let mut factor = Report::new("");
            let mut squares = Report::new("");
            let mut pieri = Report::new("");
            let mut laplace = Report::new("");
            let mut vanish = Report::new("");
            for kappa in &all {
                // e_kappa is a basis of the homogeneous pieces, so linearity covers every polynomial
                let f = EPoly::monomial(n, kappa.clone(), 1);
                match ring.expand(&f) {
                    Ok(x) => {
                        let back = ring.reassemble(&x);
                        round_trip.check(back == f, || format!("n={n} e{kappa}: reassembled {back}"));
                    }
                    Err(e) => round_trip.check(false, || e.to_string()),
                }
                let q = ring.qtilde(kappa);
                for i in 1..=n {
                    if kappa.weight() + 2 * i > max_weight {
                        continue;
                    }
                    let plus = kappa.union(&Partition::rectangle(2, i));
                    let prod = q.mul(&ring.qtilde(&Partition::rectangle(2, i)));
                    factor.check(ring.qtilde(&plus) == prod, || format!("n={n} {kappa} + ({i},{i})"));
                }
                let rows = kappa.length() + kappa.length() % 2;
                if rows >= 4 {
                    for row in 0..rows {
                        laplace.check(ring.qtilde_along(kappa, row) == q, || format!("n={n} {kappa} row {row}"));
                    }
                }
            }
            for i in 1..=n {
                let lhs = epoly_to_monomials(&ring.qtilde(&Partition::rectangle(2, i)), n as usize);
                let rhs = elementary_monomials(n as usize, i, 2);
                squares.check(lhs == rhs, || format!("n={n} Q~({i},{i}) != e_{i}(x^2)"));
                let big = Partition::new(vec![n + i, 1]).expect("decreasing");
                vanish.check(ring.qtilde(&big).is_zero(), || format!("n={n} Q~{big} != 0"));
            }
            for lambda in strict_partitions(n).iter().filter(|l| l.weight() <= max_weight) {
                for p in 0..=n.min(max_weight - lambda.weight()) {
                    let rule = ring.pieri(lambda, p);
                    let direct = ring.structure(lambda, &Partition::row(p));
                    pieri.check(rule.is_ok() && rule == direct, || format!("n={n} {lambda} * Q~_{p}"));
                }
            }
            vec![round_trip, factor, squares, pieri, laplace, vanish]
        })
        .collect();
    let names = [
        "Q~ basis round trip",
        "Q~ factorization",
        "Q~(i,i) = e_i(x^2)",
        "Q~ Pieri vs structure constants",
        "Pfaffian row independence",
        "Q~ vanishing for large parts",
    ];
    let mut out: Vec<Report> = names
        .iter()
        .enumerate()
        .map(|(k, name)| {
            merge_all(
                &format!("{name}, n <= {max_n}, weight <= {max_weight}"),
                per_n.iter().map(|v| v[k].clone()),
            )
        })
        .collect();
    out.push(lg_divisibility(max_n));
    out
}

/// `2^d` divides every `e_{lambda mu}^{((n+1)^d, nu)}` in `Lambda_{n+1}`.
pub fn lg_divisibility(max_n: u32) -> Report {
    let parts: Vec<Report> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let ring = QtildeRing::<i64>::new(n + 1);
            let classes = strict_partitions(n);
            let mut r = Report::new("");
            for a in &classes {
                for b in classes.iter().filter(|b| *b <= a) {
                    let e = ring.structure(a, b).expect("classes lie in E_{n+1}");
                    for (kappa, c) in e.iter() {
                        let d = kappa.count_part(n + 1) as u32;
                        let nu = kappa.remove_parts(&vec![n + 1; d as usize]).expect("counted");
                        if nu.is_strict() {
                            r.check(c % (1 << d) == 0, || format!("n={n} e^{kappa}_{{{a},{b}}} = {c}"));
                        }
                    }
                }
            }
            r
        })
        .collect();
    merge_all(&format!("2^d divisibility, n <= {max_n}"), parts)
}

fn grading_and_sign<C: crate::Scalar>(
    r: &mut Report,
    label: &str,
    x: &QuantumElement<C>,
    weight: u32,
    strict: bool,
) {
    let qd = x.space().q_degree();
    for (nu, d, c) in x.iter() {
        r.check(nu.weight() + d * qd == weight, || format!("{label}: key {nu} q^{d} has the wrong degree"));
        r.check(!c.is_negative(), || format!("{label}: negative coefficient {c} at {nu} q^{d}"));
        if strict {
            r.check(nu.is_strict(), || format!("{label}: non-strict key {nu}"));
        }
    }
}

pub fn symmetry(bounds: &Bounds) -> Vec<Report> {
    let mut out = type_a_properties(bounds.max_big_n);
    out.push(associativity_a());
    for flavor in [Flavor::Lagrangian, Flavor::Orthogonal] {
        out.push(isotropic_properties(flavor, bounds.max_n));
    }
    out
}

/// Commutativity, grading, nonnegativity and S3 symmetry up to `N <= 7`;
/// Poincare duality and the vanishing criteria up to `max_big_n`.
fn type_a_properties(max_big_n: u32) -> Vec<Report> {
    let names = [
        "type A commutativity, grading, positivity, N <= 7",
        "type A S3 symmetry of GW invariants, N <= 7",
        "type A duality pairing",
        "type A vanishing when lambda_d < d",
        "type A nonzero GW implies nonzero reduced product, N <= 7",
        "type A no q-terms when l(lambda) + l(mu) <= m",
    ];
    let per_space: Vec<Vec<Report>> = grassmannians(max_big_n)
        .into_par_iter()
        .map(|(m, n)| {
            let g = Grassmannian::<i64>::new(m, n);
            let big = g.big_n();
            let small = big <= 7;
            let classes = g.classes();
            let mut reps: Vec<Report> = names.iter().map(|_| Report::new("")).collect();
            let label = |a: &Partition, b: &Partition| format!("G({m},{big}) {a}*{b}");
            for a in &classes {
                for b in &classes {
                    let ab = g.product(a, b).expect("classes fit");
                    if small {
                        let ab2 = g.product_expanding(a, b).expect("classes fit");
                        let ba = g.product_expanding(b, a).expect("classes fit");
                        reps[0].check(ab == ba && ab2 == ba, || format!("{}: {ab} vs {ba}", label(a, b)));
                        grading_and_sign(&mut reps[0], &label(a, b), &ab, a.weight() + b.weight(), false);
                    }
                    if a.weight() + b.weight() == m as u32 * n {
                        let top = Partition::rectangle(m, n);
                        let want = i64::from(rect_dual(a, m, n).expect("fits") == *b);
                        let got = ab.coefficient(&top, 0);
                        reps[2].check(got == want, || format!("{}: point coefficient {got}", label(a, b)));
                    }
                    if a.length() + b.length() <= m {
                        let d = ab.max_q_degree().unwrap_or(0);
                        reps[5].check(d == 0, || format!("{}: has q^{d}", label(a, b)));
                    }
                }
            }
            for d in 0..=(m as u32).min(n) {
                for a in &classes {
                    for b in &classes {
                        let target = (m as u32 * n + d * big) as i64 - (a.weight() + b.weight()) as i64;
                        for c in classes.iter().filter(|c| c.weight() as i64 == target) {
                            let v = g.gw(a, b, c, d).expect("fits");
                            if small {
                                let perms = [g.gw(b, c, a, d), g.gw(b, a, c, d), g.gw(c, b, a, d)];
                                let ok = perms.iter().all(|x| x.as_ref().ok() == Some(&v));
                                reps[1].check(ok, || format!("G({m},{big}) <{a},{b},{c}>_{d} not symmetric"));
                                if v != 0 {
                                    let t = reduced_classical_product(a, b, c, d, m, n).expect("valid");
                                    reps[4].check(!t.is_zero(), || format!("G({m},{big}) <{a},{b},{c}>_{d} = {v}, reduced product 0"));
                                }
                            }
                            if d >= 1 && a.part(d as usize - 1) < d {
                                reps[3].check(v == 0, || format!("G({m},{big}) <{a},{b},{c}>_{d} = {v}"));
                            }
                        }
                    }
                }
            }
            reps
        })
        .collect();
    names
        .iter()
        .enumerate()
        .map(|(k, name)| {
            merge_all(
                &if name.contains("N <=") {
                    name.to_string()
                } else {
                    format!("{name}, N <= {max_big_n}")
                },
                per_space.iter().map(|v| v[k].clone()),
            )
        })
        .collect()
}

/// `(x y) z = x (y z)` on all basis triples of `G(2,4)`, `G(2,5)` and `G(3,6)`.
fn associativity_a() -> Report {
    let parts: Vec<Report> = [(2usize, 2u32), (2, 3), (3, 3)]
        .into_par_iter()
        .map(|(m, n)| {
            let g = Grassmannian::<i64>::new(m, n);
            let classes = g.classes();
            let mut r = Report::new("");
            for a in &classes {
                for b in &classes {
                    let ab = g.product(a, b).expect("fits");
                    for c in &classes {
                        let bc = g.product(b, c).expect("fits");
                        let left = g.multiply(&ab, &g.basis(c).expect("fits")).expect("fits");
                        let right = g.multiply(&g.basis(a).expect("fits"), &bc).expect("fits");
                        r.check(left == right, || format!("G({m},{}) ({a}*{b})*{c}", m as u32 + n));
                    }
                }
            }
            r
        })
        .collect();
    merge_all("type A associativity, G(2,4) G(2,5) G(3,6)", parts)
}

/// Route agreement, grading, positivity, strictness and S3 symmetry.
fn isotropic_properties(flavor: Flavor, max_n: u32) -> Report {
    let parts: Vec<Report> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let ring = IsotropicRing::<i64>::new(flavor, n);
            let classes = ring.classes();
            let mut r = Report::new("");
            for a in &classes {
                for b in &classes {
                    let label = format!("{flavor:?}({n}) {a}*{b}");
                    match ring.product_checked(a, b) {
                        Ok(x) => grading_and_sign(&mut r, &label, &x, a.weight() + b.weight(), true),
                        Err(e) => r.check(false, || e.to_string()),
                    }
                }
            }
            let dim = n * (n + 1) / 2;
            for a in &classes {
                for b in &classes {
                    for c in &classes {
                        let total = a.weight() + b.weight() + c.weight();
                        if total < dim || (total - dim) % ring.q_degree() != 0 {
                            continue;
                        }
                        let d = (total - dim) / ring.q_degree();
                        let v = ring.gw(a, b, c, d).expect("classes");
                        let perms = [ring.gw(b, c, a, d), ring.gw(b, a, c, d), ring.gw(c, b, a, d)];
                        let ok = perms.iter().all(|x| x.as_ref().ok() == Some(&v)) && v >= 0;
                        r.check(ok, || format!("{flavor:?}({n}) <{a},{b},{c}>_{d} = {v} not symmetric"));
                    }
                }
            }
            // dual classes pair to the point
            for a in &classes {
                let dual = strict_dual(a, n).expect("strict");
                let x = ring.product(a, &dual).expect("classes");
                let top = Partition::new((1..=n).rev().collect()).expect("staircase");
                r.check(x.coefficient(&top, 0) == 1, || format!("{flavor:?}({n}) {a} * {dual}: {x}"));
            }
            r
        })
        .collect();
    merge_all(&format!("{flavor:?} routes, grading, positivity, S3 symmetry, n <= {max_n}"), parts)
}

/// True when every report passed.
pub fn all_passed(reports: &[Report]) -> bool {
    reports.iter().all(Report::passed)
}
