//! Integer partitions and the classical counting formulas built on them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers. Trailing zeros are
/// stripped on construction, so `[]` is the unique empty partition.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                input: format!("{parts:?}"),
                reason: format!("parts must be weakly decreasing ({} < {})", w[0], w[1]),
            });
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                input: format!("{parts:?}"),
                reason: "zero part before a positive part".into(),
            });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts already known to be valid.
    ///
    /// Panics on invalid input; intended for literals and internal use.
    pub fn from_parts(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// True iff the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Cells `(row, col)` of the Young diagram in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Hook length of the cell `(row, col)`.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.parts[row] - col - 1;
        let leg = self.parts[row + 1..]
            .iter()
            .take_while(|&&p| p > col)
            .count();
        arm + leg + 1
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn syt_count(&self) -> BigUint {
        let n = self.size();
        let mut num = BigUint::one();
        for k in 2..=n {
            num *= k;
        }
        let den = self
            .cells()
            .fold(BigUint::one(), |acc, (r, c)| acc * self.hook(r, c));
        debug_assert!((&num % &den).is_zero());
        num / den
    }

    /// `dim S_λ(ℂⁿ)` by the hook content formula.
    pub fn dim_schur(&self, n: usize) -> BigUint {
        if self.len() > n {
            return BigUint::zero();
        }
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (r, c) in self.cells() {
            // n + c - r > 0 because r < len <= n
            num *= n + c - r;
            den *= self.hook(r, c);
        }
        debug_assert!((&num % &den).is_zero());
        num / den
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out
    }

    /// All partitions of `n` with at most `rows` parts.
    pub fn all_with_rows(n: usize, rows: usize) -> Vec<Partition> {
        Partition::all(n)
            .into_iter()
            .filter(|p| p.len() <= rows)
            .collect()
    }

    /// All partitions `μ ⊆ self`, including `∅` and `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_subpartitions(&self.parts, 0, usize::MAX, &mut current, &mut out);
        out
    }
}

fn fill_partitions(n: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=n.min(max)).rev() {
        current.push(p);
        fill_partitions(n - p, p, current, out);
        current.pop();
    }
}

fn fill_subpartitions(
    outer: &[usize],
    row: usize,
    max: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    out.push(Partition {
        parts: current.clone(),
    });
    if row == outer.len() {
        return;
    }
    for p in 1..=outer[row].min(max) {
        current.push(p);
        fill_subpartitions(outer, row + 1, p, current, out);
        current.pop();
    }
}

impl Ord for Partition {
    /// Size first, then lexicographic on parts.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,1"`; `"-"` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let bad = |reason: &str| Error::InvalidPartition {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() {
            return Err(bad("empty string (use \"-\" for the empty partition)"));
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad("expected comma-separated positive integers"))?;
        if parts.contains(&0) {
            return Err(bad("parts must be positive"));
        }
        Partition::new(parts).map_err(|_| bad("parts must be weakly decreasing"))
    }
}

impl fmt::Display for Partition {
    /// Text form used on the command line: `3,1` or `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}
