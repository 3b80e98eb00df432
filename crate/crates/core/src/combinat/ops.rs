use super::Partition;
use crate::error::{Error, Result};

/// Transpose of the Young diagram.
pub fn conjugate(lambda: &Partition) -> Partition {
    let parts = (1..=lambda.first())
        .map(|j| lambda.parts().iter().filter(|&&p| p >= j).count() as u32)
        .collect();
    Partition::new(parts).expect("column lengths are decreasing")
}

/// Complement of `lambda` in the `m x n` rectangle, rotated by 180 degrees.
pub fn rect_dual(lambda: &Partition, m: usize, n: u32) -> Result<Partition> {
    if !lambda.fits(m, n) {
        return Err(Error::DoesNotFit {
            partition: lambda.clone(),
            rows: m,
            cols: n as usize,
        });
    }
    Partition::new((0..m).map(|i| n - lambda.part(m - 1 - i)).collect())
}

/// The strict partition whose parts are `{1..n}` minus the parts of `nu`.
pub fn strict_dual(nu: &Partition, n: u32) -> Result<Partition> {
    check_strict_bounded(nu, n)?;
    Ok(Partition::new((1..=n).rev().filter(|i| !nu.parts().contains(i)).collect())
        .expect("decreasing by construction"))
}

/// Drops the leftmost `d` columns.
pub fn remove_columns(lambda: &Partition, d: u32) -> Partition {
    Partition::new(lambda.parts().iter().map(|&p| p.saturating_sub(d)).collect())
        .expect("shifting keeps the order")
}

/// `(n - lambda_l, ..., n - lambda_1)` with zero parts dropped.
pub fn hat_map(lambda: &Partition, n: u32) -> Result<Partition> {
    check_strict_bounded(lambda, n)?;
    Ok(Partition::new(lambda.parts().iter().rev().map(|&p| n - p).collect())
        .expect("reversed strict parts decrease"))
}

fn check_strict_bounded(lambda: &Partition, n: u32) -> Result<()> {
    if !lambda.is_strict() {
        return Err(Error::NotStrict(lambda.clone()));
    }
    if lambda.first() > n {
        return Err(Error::PartTooLarge {
            partition: lambda.clone(),
            bound: n,
        });
    }
    Ok(())
}

/// Connected components of a skew diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkewStats {
    pub components: usize,
    /// Components containing no box of the first column.
    pub off_first_column: usize,
}

impl SkewStats {
    /// `N(lambda, mu)` of the isotropic Pieri rules.
    pub fn n(&self) -> u32 {
        self.off_first_column as u32
    }

    /// One less than the number of components (zero for an empty skew shape).
    pub fn n_prime(&self) -> u32 {
        self.components.saturating_sub(1) as u32
    }
}

/// Components of `mu / lambda`, where two boxes are connected if they share
/// an edge or a vertex.
pub fn skew_component_stats(lambda: &Partition, mu: &Partition) -> Result<SkewStats> {
    if !mu.contains(lambda) {
        return Err(Error::NotContained {
            inner: lambda.clone(),
            outer: mu.clone(),
        });
    }
    let boxes: Vec<(i64, i64)> = (0..mu.length())
        .flat_map(|i| (lambda.part(i) + 1..=mu.part(i)).map(move |j| (i as i64 + 1, j as i64)))
        .collect();
    let mut comp = vec![usize::MAX; boxes.len()];
    let mut components = 0;
    let mut off_first_column = 0;
    for start in 0..boxes.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = components;
        let mut stack = vec![start];
        let mut touches_first = false;
        while let Some(b) = stack.pop() {
            let (r, c) = boxes[b];
            touches_first |= c == 1;
            for (k, &(r2, c2)) in boxes.iter().enumerate() {
                if comp[k] == usize::MAX && (r - r2).abs() <= 1 && (c - c2).abs() <= 1 {
                    comp[k] = components;
                    stack.push(k);
                }
            }
        }
        if !touches_first {
            off_first_column += 1;
        }
        components += 1;
    }
    Ok(SkewStats {
        components,
        off_first_column,
    })
}

/// Every `mu` with `mu / lambda` a horizontal strip of `p` boxes, at most
/// `max_rows` rows and first part at most `max_part`.
pub fn add_horizontal_strip(
    lambda: &Partition,
    p: u32,
    max_rows: usize,
    max_part: u32,
) -> Vec<Partition> {
    fn go(
        lambda: &Partition,
        i: usize,
        rows: usize,
        left: u32,
        max_part: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if i == rows {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing keeps order"));
            }
            return;
        }
        let lo = lambda.part(i);
        let hi = if i == 0 { max_part } else { lambda.part(i - 1) };
        if lo > hi {
            return;
        }
        for v in lo..=hi.min(lo + left) {
            cur.push(v);
            go(lambda, i + 1, rows, left - (v - lo), max_part, cur, out);
            cur.pop();
        }
    }
    let rows = (lambda.length() + 1).min(max_rows.max(lambda.length()));
    let mut out = Vec::new();
    go(lambda, 0, rows, p, max_part, &mut Vec::new(), &mut out);
    out
}

/// Every `nu` with `lambda / nu` a horizontal strip of `p` boxes.
pub fn remove_horizontal_strip(lambda: &Partition, p: u32) -> Vec<Partition> {
    fn go(lambda: &Partition, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == lambda.length() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing keeps order"));
            }
            return;
        }
        let hi = lambda.part(i);
        let lo = lambda.part(i + 1);
        for v in (lo..=hi).rev() {
            if hi - v > left {
                break;
            }
            cur.push(v);
            go(lambda, i + 1, left - (hi - v), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, p, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{partitions_in_box, strict_partitions};

    fn p<const K: usize>(parts: [u32; K]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p([5, 3, 2])), p([3, 3, 2, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&p([1, 1, 1])), p([3]));
    }

    #[test]
    fn rect_dual_examples() {
        assert_eq!(rect_dual(&p([2, 1]), 3, 3).unwrap(), p([3, 2, 1]));
        assert_eq!(rect_dual(&p([3, 3]), 2, 3).unwrap(), Partition::empty());
        assert_eq!(rect_dual(&p([1]), 2, 2).unwrap(), p([2, 1]));
        assert!(rect_dual(&p([3]), 2, 2).is_err());
    }

    #[test]
    fn strict_dual_examples() {
        assert_eq!(strict_dual(&p([4, 2, 1]), 5).unwrap(), p([5, 3]));
        assert_eq!(strict_dual(&Partition::empty(), 3).unwrap(), p([3, 2, 1]));
        assert_eq!(strict_dual(&p([2]), 2).unwrap(), p([1]));
        assert!(strict_dual(&p([2, 2]), 3).is_err());
        assert!(strict_dual(&p([4]), 3).is_err());
    }

    #[test]
    fn remove_columns_examples() {
        assert_eq!(remove_columns(&p([3, 2, 1]), 1), p([2, 1]));
        assert_eq!(remove_columns(&p([3, 2, 1]), 3), Partition::empty());
        assert_eq!(remove_columns(&p([4, 4, 3, 1]), 2), p([2, 2, 1]));
    }

    #[test]
    fn hat_map_examples() {
        assert_eq!(hat_map(&p([2, 1]), 3).unwrap(), p([2, 1]));
        assert_eq!(hat_map(&p([4]), 4).unwrap(), Partition::empty());
        assert_eq!(hat_map(&p([3, 1]), 4).unwrap(), p([3, 1]));
        assert!(hat_map(&p([1, 1]), 3).is_err());
    }

    #[test]
    fn skew_examples() {
        let s = skew_component_stats(&p([1]), &p([2])).unwrap();
        assert_eq!((s.components, s.off_first_column), (1, 1));
        let s = skew_component_stats(&p([1]), &p([1, 1])).unwrap();
        assert_eq!((s.components, s.off_first_column), (1, 0));
        let s = skew_component_stats(&p([1]), &p([2, 1])).unwrap();
        assert_eq!((s.components, s.off_first_column), (1, 0));
        let s = skew_component_stats(&p([2]), &p([4, 1])).unwrap();
        assert_eq!((s.components, s.off_first_column), (2, 1));
        assert!(skew_component_stats(&p([2]), &p([1, 1])).is_err());
    }

    #[test]
    fn involutions() {
        for m in 0..=6usize {
            for n in 0..=(10 - m) as u32 {
                for lambda in partitions_in_box(m, n) {
                    assert_eq!(conjugate(&conjugate(&lambda)), lambda);
                    let dual = rect_dual(&lambda, m, n).unwrap();
                    assert_eq!(rect_dual(&dual, m, n).unwrap(), lambda);
                    assert_eq!(dual.weight() + lambda.weight(), m as u32 * n);
                }
            }
        }
        for n in 0..=8 {
            for nu in strict_partitions(n) {
                assert_eq!(strict_dual(&strict_dual(&nu, n).unwrap(), n).unwrap(), nu);
            }
        }
    }

    #[test]
    fn skew_rotation_symmetry() {
        // rotating mu/lambda by 180 degrees inside a box maps it to dual(lambda)/dual(mu)
        let (m, n) = (4usize, 4u32);
        let all = partitions_in_box(m, n);
        for lambda in &all {
            for mu in all.iter().filter(|mu| mu.contains(lambda)) {
                let a = skew_component_stats(lambda, mu).unwrap();
                let b = skew_component_stats(
                    &rect_dual(mu, m, n).unwrap(),
                    &rect_dual(lambda, m, n).unwrap(),
                )
                .unwrap();
                assert_eq!(a.components, b.components);
            }
        }
    }

    #[test]
    fn horizontal_strips() {
        let mut got = add_horizontal_strip(&p([2, 1]), 2, 3, 3);
        got.sort();
        assert_eq!(got, vec![p([2, 2, 1]), p([3, 1, 1]), p([3, 2])]);
        let mut got = remove_horizontal_strip(&p([3, 1]), 2);
        got.sort();
        assert_eq!(got, vec![p([1, 1]), p([2])]);
        // brute force comparison
        let all = partitions_in_box(4, 5);
        for lambda in all.iter().filter(|l| l.length() <= 3) {
            for k in 0..=5 {
                let mut fast = add_horizontal_strip(lambda, k, 4, 5);
                fast.sort();
                let slow: Vec<Partition> = all
                    .iter()
                    .filter(|mu| {
                        mu.contains(lambda)
                            && mu.weight() == lambda.weight() + k
                            && (0..4).all(|i| lambda.part(i) >= mu.part(i + 1))
                    })
                    .cloned()
                    .collect();
                assert_eq!(fast, slow, "{lambda:?} + {k}");
            }
        }
    }
}
