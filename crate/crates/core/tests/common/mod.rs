//! Independent oracles shared by the integration tests. Nothing here calls
//! the tableau enumeration or the determinant code under test.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use socle_core::Partition;

/// Partitions of `n` built by a plain recursion, largest part first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn p(parts: &[usize]) -> Partition {
    Partition::from_parts(parts)
}

/// Shapes obtained from `shape` by adding a horizontal strip of `k` cells.
fn add_horizontal_strip(shape: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut base = shape.to_vec();
    base.push(0);
    let mut out = Vec::new();
    fn go(i: usize, left: usize, base: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == base.len() {
            if left == 0 {
                let mut s = cur.clone();
                while s.last() == Some(&0) {
                    s.pop();
                }
                out.push(s);
            }
            return;
        }
        // row i may grow up to the old length of row i-1
        let cap = if i == 0 {
            left
        } else {
            (base[i - 1] - base[i]).min(left)
        };
        for add in 0..=cap {
            cur[i] = base[i] + add;
            go(i + 1, left - add, base, cur, out);
        }
        cur[i] = base[i];
    }
    let mut cur = base.clone();
    go(0, k, &base, &mut cur, &mut out);
    out
}

/// Kostka number: semistandard tableaux of shape `shape` and content
/// `content` (any composition), counted as chains of horizontal strips.
pub fn kostka(shape: &[usize], content: &[usize]) -> u64 {
    let mut layer: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    layer.insert(Vec::new(), 1);
    for &c in content {
        let mut next = BTreeMap::new();
        for (s, count) in layer {
            for t in add_horizontal_strip(&s, c) {
                if t.len() <= shape.len() && t.iter().zip(shape).all(|(a, b)| a <= b) {
                    *next.entry(t).or_insert(0) += count;
                }
            }
        }
        layer = next;
    }
    let target: Vec<usize> = shape.iter().copied().filter(|&x| x > 0).collect();
    layer.get(&target).copied().unwrap_or(0)
}

/// Compositions `β ≤ α` (entrywise) with `|β| = size`.
fn sub_compositions(alpha: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, left: usize, alpha: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == alpha.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for b in 0..=alpha[i].min(left) {
            cur.push(b);
            go(i + 1, left - b, alpha, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, size, alpha, &mut Vec::new(), &mut out);
    out
}

/// Schur expansion of `s_μ s_ν` via monomial coefficients and the
/// unitriangularity of the Kostka matrix.
pub fn lr_product(mu: &[usize], nu: &[usize]) -> BTreeMap<Vec<usize>, u64> {
    let (a, b) = (mu.iter().sum::<usize>(), nu.iter().sum::<usize>());
    let n = a + b;
    let dominant = partitions(n);
    let monomial: Vec<i64> = dominant
        .iter()
        .map(|alpha| {
            sub_compositions(alpha, a)
                .iter()
                .map(|beta| {
                    let gamma: Vec<usize> = alpha.iter().zip(beta).map(|(x, y)| x - y).collect();
                    kostka(mu, beta) * kostka(nu, &gamma)
                })
                .sum::<u64>() as i64
        })
        .collect();
    // `partitions` lists in decreasing lexicographic order, which refines
    // dominance, so each coefficient only needs the earlier ones
    let mut coeffs: Vec<i64> = Vec::with_capacity(dominant.len());
    for (i, lambda) in dominant.iter().enumerate() {
        let mut c = monomial[i];
        for (j, kappa) in dominant[..i].iter().enumerate() {
            if coeffs[j] != 0 {
                c -= coeffs[j] * kostka(kappa, lambda) as i64;
            }
        }
        coeffs.push(c);
    }
    dominant
        .into_iter()
        .zip(coeffs)
        .filter(|(_, c)| *c != 0)
        .map(|(l, c)| {
            assert!(c > 0, "negative Schur coefficient");
            (l, c as u64)
        })
        .collect()
}

/// `c^λ_{μν}` from [`lr_product`].
pub fn lr_oracle(lambda: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    lr_product(mu, nu).get(lambda).copied().unwrap_or(0)
}

/// `s_λ(x)` as a sum over semistandard fillings with entries `< x.len()`.
pub fn schur_by_tableaux(shape: &[usize], x: &[BigRational]) -> BigRational {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        x: &[BigRational],
        acc: &mut BigRational,
    ) {
        if k == cells.len() {
            let mut term = BigRational::one();
            for row in grid.iter() {
                for &v in row {
                    term *= &x[v];
                }
            }
            *acc += term;
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..x.len() {
            grid[r][c] = v;
            go(k + 1, cells, grid, x, acc);
        }
    }
    let mut acc = BigRational::zero();
    go(0, &cells, &mut grid, x, &mut acc);
    acc
}

/// Standard Young tableaux counted by removing corners.
pub fn syt_by_corners(shape: &[usize]) -> BigUint {
    fn go(shape: &mut Vec<usize>, memo: &mut BTreeMap<Vec<usize>, BigUint>) -> BigUint {
        if shape.iter().all(|&x| x == 0) {
            return BigUint::one();
        }
        if let Some(v) = memo.get(shape.as_slice()) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for i in 0..shape.len() {
            let next = shape.get(i + 1).copied().unwrap_or(0);
            if shape[i] > next {
                shape[i] -= 1;
                total += go(shape, memo);
                shape[i] += 1;
            }
        }
        memo.insert(shape.clone(), total.clone());
        total
    }
    go(&mut shape.to_vec(), &mut BTreeMap::new())
}

pub fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

pub fn bigi(n: i64) -> BigInt {
    BigInt::from(n)
}
