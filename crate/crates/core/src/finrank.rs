//! Finite-rank `gl(n)` dimension formulas used to cross-check the
//! symmetric-function combinatorics.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::coproduct;

/// Bipartition label of an irreducible mixed tensor module of `gl(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedWeight {
    beta: Partition,
    gamma: Partition,
    n: usize,
}

impl MixedWeight {
    pub fn new(beta: Partition, gamma: Partition, n: usize) -> Result<Self> {
        let parts = beta.len() + gamma.len();
        if n == 0 || parts > n {
            return Err(Error::RankTooSmall { rank: n, parts });
        }
        Ok(MixedWeight { beta, gamma, n })
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn gamma(&self) -> &Partition {
        &self.gamma
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `(β₁, …, β_s, 0, …, 0, -γ_t, …, -γ₁)`.
    pub fn highest_weight(&self) -> Vec<i64> {
        let mut w = vec![0i64; self.n];
        for (i, &b) in self.beta.parts().iter().enumerate() {
            w[i] = b as i64;
        }
        for (i, &g) in self.gamma.parts().iter().enumerate() {
            w[self.n - 1 - i] = -(g as i64);
        }
        w
    }
}

/// Weyl dimension formula `Π_{i<j} (w_i - w_j + j - i) / (j - i)`.
pub fn dim_mixed(w: &MixedWeight) -> BigUint {
    let hw = w.highest_weight();
    let n = hw.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= hw[i] - hw[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    let (d, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "Weyl quotient must be exact for {w:?}");
    d.to_biguint()
        .expect("dominant weight has positive dimension")
}

/// Checks `dim S_λ(ℂ^{a+b}) = Σ c^λ_{μν} dim S_μ(ℂ^a) dim S_ν(ℂ^b)`.
pub fn branching_identity_check(lambda: &Partition, a: usize, b: usize) -> bool {
    let lhs = lambda.dim_schur(a + b);
    let rhs: BigUint = coproduct(lambda)
        .terms()
        .map(|(mu, nu, c)| {
            c.to_biguint().expect("LR coefficients are nonnegative")
                * mu.dim_schur(a)
                * nu.dim_schur(b)
        })
        .sum();
    lhs == rhs
}
