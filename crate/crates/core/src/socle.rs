//! Socle layers of the simple tensor modules `W_{λ,μ}` over the Mackey Lie
//! algebra, and composition lengths of mixed tensor powers.
//!
//! Layer `k` of `W_{λ,μ}` is read off the degree-`k` left component of
//! `Δ(λ)`: every term `α ⊗ β` with coefficient `c` contributes the simple
//! `(V*/V_*)_α ⊗ V_{β,μ}` with multiplicity `c`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::{coproduct, homogeneous_component, to_biguint, Side};

/// `(V*/V_*)_α ⊗ V_{β,μ}` with its multiplicity in a layer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleConstituent {
    pub alpha: Partition,
    pub beta: Partition,
    pub mu: Partition,
    #[serde(rename = "mult", with = "biguint_number")]
    pub multiplicity: BigUint,
}

/// Socle filtration of `W_{λ,μ}`, bottom-up: `layers[0]` is the socle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub layers: Vec<Vec<SimpleConstituent>>,
}

impl SocleReport {
    /// Composition length: total multiplicity over all layers.
    pub fn length(&self) -> BigUint {
        self.layers
            .iter()
            .flatten()
            .map(|c| c.multiplicity.clone())
            .sum()
    }
}

pub fn socle_layers(lambda: &Partition, mu: &Partition) -> SocleReport {
    let delta = coproduct(lambda);
    let layers = (0..=lambda.size())
        .map(|k| {
            homogeneous_component(&delta, k, Side::Left)
                .terms()
                .map(|(alpha, beta, c)| SimpleConstituent {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    mu: mu.clone(),
                    multiplicity: to_biguint(c),
                })
                .collect()
        })
        .collect();
    SocleReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        layers,
    }
}

/// `Σ_{α,β} c^λ_{αβ}`; independent of `μ`.
pub fn simple_length(lambda: &Partition, mu: &Partition) -> BigUint {
    socle_layers(lambda, mu).length()
}

/// A simple constituent `V_{β,γ}` of `V_*^{⊗p} ⊗ V^{⊗q}`; `β` labels the
/// `V_*` side and `γ` the `V` side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixedConstituent {
    pub beta: Partition,
    pub gamma: Partition,
    #[serde(rename = "mult", with = "biguint_number")]
    pub multiplicity: BigUint,
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Simple constituents of `V_*^{⊗p} ⊗ V^{⊗q}` with multiplicities
/// `C(p,r)·C(q,r)·r!·f_β·f_γ`, `r = p - |β| = q - |γ|`.
///
/// `r` counts contracted pairs: choose `r` dual and `r` primal tensorands and
/// a matching between them, then split the remaining traceless tensors by
/// Schur–Weyl duality.
pub fn decompose_mixed_tensor(p: usize, q: usize) -> Vec<MixedConstituent> {
    let mut out = Vec::new();
    for r in 0..=p.min(q) {
        let pairs = binomial(p, r) * binomial(q, r) * factorial(r);
        for beta in Partition::all(p - r) {
            for gamma in Partition::all(q - r) {
                let multiplicity = &pairs * beta.syt_count() * gamma.syt_count();
                out.push(MixedConstituent {
                    beta: beta.clone(),
                    gamma,
                    multiplicity,
                });
            }
        }
    }
    out
}

fn mixed_length(p: usize, q: usize) -> BigUint {
    decompose_mixed_tensor(p, q)
        .into_iter()
        .map(|c| c.multiplicity)
        .sum()
}

/// Composition length of `(V*)^{⊗m} ⊗ V^{⊗n}` over the Mackey Lie algebra.
///
/// Choosing which `m₁` of the `m` dual factors land in `V*/V_*` gives the
/// binomial; `(V*/V_*)^{⊗m₁}` splits into `f_λ` copies of each
/// `(V*/V_*)_λ`, and each tensors simply with every constituent of
/// `V_*^{⊗m₂} ⊗ V^{⊗n}`.
pub fn tensor_length(m: usize, n: usize) -> BigUint {
    (0..=m)
        .map(|m1| {
            let schur_pieces: BigUint = Partition::all(m1).iter().map(Partition::syt_count).sum();
            binomial(m, m1) * schur_pieces * mixed_length(m - m1, n)
        })
        .sum()
}

/// Binary words `r` of length `m` with `|r| ≤ k`; a 1 marks a tensorand in
/// `V*`, a 0 one in `V_*`. Words come out in lexicographic order.
pub fn filtration_words(m: usize, k: usize) -> Result<Vec<Vec<u8>>> {
    if k > m {
        return Err(Error::WeightExceedsLength { k, m });
    }
    let mut out = Vec::new();
    let mut word = vec![0u8; m];
    fn go(word: &mut Vec<u8>, i: usize, ones: usize, k: usize, out: &mut Vec<Vec<u8>>) {
        if i == word.len() {
            out.push(word.clone());
            return;
        }
        word[i] = 0;
        go(word, i + 1, ones, k, out);
        if ones < k {
            word[i] = 1;
            go(word, i + 1, ones + 1, k, out);
            word[i] = 0;
        }
    }
    go(&mut word, 0, 0, k, &mut out);
    Ok(out)
}

mod biguint_number {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        let n: serde_json::Number = v.to_string().parse().expect("integer is a JSON number");
        n.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        n.to_string()
            .parse()
            .map_err(|_| D::Error::custom(format!("{n} is not a nonnegative integer")))
    }
}
