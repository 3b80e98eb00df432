//! Comparisons with independent computations: Schur polynomials in explicit
//! variables, the abacus reduction of quantum products, and small spaces with
//! known quantum rings.

use std::collections::BTreeMap;

use qschubert::combinat::{partitions_in_box, to_01_string, Partition};
use qschubert::isotropic::{quantum_product_lg, quantum_product_og};
use qschubert::puzzle::count_puzzles_1step;
use qschubert::typea::{gw_a, quantum_product_a};
use qschubert::{QhElem, Space};

type Poly = BTreeMap<Vec<u32>, i64>;
/// `(lambda, mu, [(nu, d, c)])` rows of a multiplication table.
type Table<'a> = &'a [(&'a [u32], &'a [u32], &'a [(&'a [u32], u32, i64)])];

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// `s_lambda(x_1..x_k)` by enumerating semistandard tableaux.
fn schur(lambda: &[u32], k: usize) -> Poly {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut out = Poly::new();
    let mut grid: Vec<Vec<usize>> = lambda.iter().map(|&l| vec![0; l as usize]).collect();
    fill(&cells, 0, &mut grid, k, &mut out);
    out
}

fn fill(cells: &[(usize, usize)], i: usize, grid: &mut Vec<Vec<usize>>, k: usize, out: &mut Poly) {
    if i == cells.len() {
        let mut e = vec![0u32; k];
        for row in grid.iter() {
            for &v in row {
                e[v] += 1;
            }
        }
        *out.entry(e).or_default() += 1;
        return;
    }
    let (r, c) = cells[i];
    let lo_left = if c > 0 { grid[r][c - 1] } else { 0 };
    let lo_up = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
    for v in lo_left.max(lo_up)..k {
        grid[r][c] = v;
        fill(cells, i + 1, grid, k, out);
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Schur expansion of a symmetric polynomial: peel off the leading monomial.
fn schur_expand(mut f: Poly, k: usize) -> BTreeMap<Vec<u32>, i64> {
    let mut out = BTreeMap::new();
    while let Some((e, c)) = f.iter().next_back().map(|(e, c)| (e.clone(), *c)) {
        assert!(e.windows(2).all(|w| w[0] >= w[1]), "leading monomial {e:?} is not dominant");
        for (m, v) in schur(&e, k) {
            *f.entry(m).or_default() -= c * v;
        }
        f.retain(|_, x| *x != 0);
        let key: Vec<u32> = e.into_iter().filter(|&x| x > 0).collect();
        out.insert(key, c);
    }
    out
}

/// Quantum product on `G(m, m+n)`: classical product in `m` variables, then
/// each bead at position `b >= N` on the abacus moves to `b - N` with a
/// factor `(-1)^(m-1) q`.
fn abacus_product(lambda: &Partition, mu: &Partition, m: usize, n: u32) -> QhElem {
    let big = m as u32 + n;
    let prod = mul(&schur(lambda.parts(), m), &schur(mu.parts(), m));
    let mut out = QhElem::zero(Space::Grassmannian { m, n });
    for (nu, c) in schur_expand(prod, m) {
        let mut beads: Vec<u32> = (0..m)
            .map(|i| nu.get(i).copied().unwrap_or(0) + (m - 1 - i) as u32)
            .collect();
        let mut d = 0;
        for b in beads.iter_mut() {
            while *b >= big {
                *b -= big;
                d += 1;
            }
        }
        let mut inversions = 0;
        for i in 0..m {
            for j in i + 1..m {
                if beads[i] < beads[j] {
                    inversions += 1;
                }
            }
        }
        beads.sort_unstable_by(|a, b| b.cmp(a));
        if beads.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let parts: Vec<u32> = beads.iter().enumerate().map(|(i, &b)| b - (m - 1 - i) as u32).collect();
        let sign = if ((m as u32 - 1) * d + inversions).is_multiple_of(2) { 1 } else { -1 };
        out.add_term(Partition::from_unsorted(parts), d, sign * c);
    }
    out
}

#[test]
fn schur_oracle_sanity() {
    // s_1^2 = s_2 + s_{1,1} in two variables
    let s1 = schur(&[1], 2);
    let x = schur_expand(mul(&s1, &s1), 2);
    assert_eq!(x, BTreeMap::from([(vec![1, 1], 1), (vec![2], 1)]));
    assert_eq!(schur(&[2, 1], 3).values().sum::<i64>(), 8);
}

#[test]
fn type_a_products_match_abacus() {
    for big in 2..=6u32 {
        for m in 1..big as usize {
            let n = big - m as u32;
            let classes = partitions_in_box(m, n);
            for a in &classes {
                for b in &classes {
                    let want = abacus_product(a, b, m, n);
                    let got = quantum_product_a(a, b, m, n).unwrap();
                    assert_eq!(got, want, "G({m},{big}) {a} * {b}");
                }
            }
        }
    }
}

#[test]
fn one_step_puzzles_match_schur_products() {
    for big in 2..=6u32 {
        for m in 1..big as usize {
            let n = big - m as u32;
            let classes = partitions_in_box(m, n);
            for a in &classes {
                for b in &classes {
                    for c in classes.iter().filter(|c| a.weight() + b.weight() + c.weight() == m as u32 * n) {
                        let want = gw_a(a, b, c, 0, m, n).unwrap();
                        let [x, y, z] = [a, b, c].map(|x| to_01_string(x, m, n).unwrap());
                        let got = count_puzzles_1step(&x, &y, &z).unwrap();
                        assert_eq!(got as i64, want, "G({m},{big}) <{a},{b},{c}>");
                    }
                }
            }
        }
    }
}

fn table(space: Space, rows: Table, product: impl Fn(&Partition, &Partition) -> QhElem) {
    for &(a, b, terms) in rows {
        let mut want = QhElem::zero(space);
        for &(nu, d, c) in terms {
            want.add_term(p(nu), d, c);
        }
        assert_eq!(product(&p(a), &p(b)), want, "{space:?} {a:?} * {b:?}");
        assert_eq!(product(&p(b), &p(a)), want, "{space:?} {b:?} * {a:?}");
    }
}

#[test]
fn lagrangian_line_and_quadric() {
    // LG(1,2) is P^1 with deg q = 2
    table(Space::Lagrangian { n: 1 }, &[(&[1], &[1], &[(&[], 1, 1)])], |a, b| {
        quantum_product_lg(a, b, 1).unwrap()
    });
    // LG(2,4) is a quadric threefold: hyperplane, line, point; deg q = 3
    let rows: Table = &[
        (&[1], &[1], &[(&[2], 0, 2)]),
        (&[1], &[2], &[(&[2, 1], 0, 1), (&[], 1, 1)]),
        (&[1], &[2, 1], &[(&[1], 1, 1)]),
        (&[2], &[2], &[(&[1], 1, 1)]),
        (&[2], &[2, 1], &[(&[2], 1, 1)]),
        (&[2, 1], &[2, 1], &[(&[], 2, 1)]),
    ];
    table(Space::Lagrangian { n: 2 }, rows, |a, b| quantum_product_lg(a, b, 2).unwrap());
}

#[test]
fn orthogonal_line_and_projective_space() {
    table(Space::MaxOrthogonal { n: 1 }, &[(&[1], &[1], &[(&[], 1, 1)])], |a, b| {
        quantum_product_og(a, b, 1).unwrap()
    });
    // OG(3,6) is P^3 with deg q = 4
    let rows: Table = &[
        (&[1], &[1], &[(&[2], 0, 1)]),
        (&[1], &[2], &[(&[2, 1], 0, 1)]),
        (&[1], &[2, 1], &[(&[], 1, 1)]),
        (&[2], &[2], &[(&[], 1, 1)]),
        (&[2], &[2, 1], &[(&[1], 1, 1)]),
        (&[2, 1], &[2, 1], &[(&[2], 1, 1)]),
    ];
    table(Space::MaxOrthogonal { n: 2 }, rows, |a, b| quantum_product_og(a, b, 2).unwrap());
}
