//! Littlewood–Richardson coefficients by enumerating LR skew tableaux.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::partition::Partition;

type Key = (Partition, Partition, Partition);

fn cache() -> &'static RwLock<HashMap<Key, BigUint>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, BigUint>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `c^λ_{μν}`: the number of skew tableaux of shape `λ/μ` and content `ν`
/// that are weakly increasing along rows, strictly increasing down columns,
/// and whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return BigUint::zero();
    }
    if mu.is_empty() {
        return BigUint::from((lambda == nu) as u32);
    }
    if nu.is_empty() {
        return BigUint::from((lambda == mu) as u32);
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(c) = cache().read().expect("lr cache poisoned").get(&key) {
        return c.clone();
    }
    let c = BigUint::from(count_lr_tableaux(lambda, mu, nu));
    cache()
        .write()
        .expect("lr cache poisoned")
        .insert(key, c.clone());
    c
}

struct Filler<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    content: &'a [usize],
    /// `grid[r][c]` holds the entry at cell `(r, c)`; 0 for cells of `μ`.
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl Filler<'_> {
    /// Fills row `row` from column `col` leftwards (reading order right to
    /// left, top to bottom). Entries are 1-based.
    fn fill(&mut self, row: usize, col: usize) -> u64 {
        if row == self.lambda.len() {
            return 1;
        }
        let start = self.mu.part(row);
        let end = self.lambda.part(row);
        if col < start || col == usize::MAX || end == start {
            // row done
            let next = row + 1;
            let next_col = self.lambda.part(next).wrapping_sub(1);
            return self.fill(next, next_col);
        }
        // row weak: entry <= entry to the right (already placed)
        let max_row = if col + 1 < end {
            self.grid[row][col + 1]
        } else {
            self.content.len()
        };
        // column strict: entry > entry above (if above is a skew cell)
        let min_col = if row > 0 && col >= self.mu.part(row - 1) {
            self.grid[row - 1][col] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in min_col..=max_row.min(row + 1) {
            let i = v - 1;
            if self.counts[i] == self.content[i] {
                continue;
            }
            if i > 0 && self.counts[i] + 1 > self.counts[i - 1] {
                continue;
            }
            self.counts[i] += 1;
            self.grid[row][col] = v;
            total += self.fill(row, col.wrapping_sub(1));
            self.counts[i] -= 1;
        }
        self.grid[row][col] = 0;
        total
    }
}

fn count_lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let mut filler = Filler {
        lambda,
        mu,
        content: nu.parts(),
        grid: vec![vec![0; lambda.part(0)]; lambda.len()],
        counts: vec![0; nu.len()],
    };
    filler.fill(0, lambda.part(0) - 1)
}
