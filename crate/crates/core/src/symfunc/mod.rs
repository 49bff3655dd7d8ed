//! The ring of symmetric functions in the Schur basis, with the graded Hopf
//! structure needed for socle layers: products, coproducts and homogeneous
//! components.

mod eval;
mod lr;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;

pub use eval::{complete_homogeneous, eval_schur};
pub use lr::lr_coefficient;

/// A finitely supported integer combination of Schur functions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpr {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(lambda: Partition) -> Self {
        let mut e = Self::zero();
        e.add_term(lambda, BigInt::from(1));
        e
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in (degree, lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_component(&self, k: usize) -> SchurExpr {
        SchurExpr {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == k)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &SchurExpr) -> SchurExpr {
        let mut out = SchurExpr::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let coef = ca * cb;
                for (lam, c) in schur_product(a, b).terms {
                    out.add_term(lam, &coef * c);
                }
            }
        }
        out
    }
}

impl AddAssign<&SchurExpr> for SchurExpr {
    fn add_assign(&mut self, rhs: &SchurExpr) {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), c.clone());
        }
    }
}

impl Add for SchurExpr {
    type Output = SchurExpr;

    fn add(mut self, rhs: SchurExpr) -> SchurExpr {
        self += &rhs;
        self
    }
}

impl fmt::Display for SchurExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            write!(f, "{}·s({p})", c.abs())?;
        }
        Ok(())
    }
}

/// A finitely supported integer combination of `μ ⊗ ν`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorSchurExpr {
    terms: BTreeMap<(Partition, Partition), BigInt>,
}

/// Which tensor leg a grading or projection refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl TensorSchurExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, left: Partition, right: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        let entry = self.terms.entry(key.clone()).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, left: &Partition, right: &Partition) -> BigInt {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Partition, &BigInt)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies the counit (coefficient of `∅`) to one leg.
    pub fn counit(&self, side: Side) -> SchurExpr {
        let mut out = SchurExpr::zero();
        for ((l, r), c) in &self.terms {
            let (kill, keep) = match side {
                Side::Left => (l, r),
                Side::Right => (r, l),
            };
            if kill.is_empty() {
                out.add_term(keep.clone(), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for TensorSchurExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((l, r), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            write!(f, "{}·({l})⊗({r})", c.abs())?;
        }
        Ok(())
    }
}

/// `s_μ · s_ν` in the Schur basis.
pub fn schur_product(mu: &Partition, nu: &Partition) -> SchurExpr {
    let mut out = SchurExpr::zero();
    for lambda in Partition::all(mu.size() + nu.size()) {
        if !lambda.contains(mu) || !lambda.contains(nu) {
            continue;
        }
        let c = lr_coefficient(&lambda, mu, nu);
        out.add_term(lambda, BigInt::from(c));
    }
    out
}

/// `Δ(s_λ) = Σ c^λ_{μν} μ ⊗ ν`, enumerating `μ ⊆ λ`.
pub fn coproduct(lambda: &Partition) -> TensorSchurExpr {
    let mut out = TensorSchurExpr::zero();
    for mu in lambda.subpartitions() {
        for nu in Partition::all(lambda.size() - mu.size()) {
            if !lambda.contains(&nu) {
                continue;
            }
            let c = lr_coefficient(lambda, &mu, &nu);
            out.add_term(mu.clone(), nu, BigInt::from(c));
        }
    }
    out
}

/// Terms of `f` whose `side` leg has degree exactly `k`.
pub fn homogeneous_component(f: &TensorSchurExpr, k: usize, side: Side) -> TensorSchurExpr {
    TensorSchurExpr {
        terms: f
            .terms
            .iter()
            .filter(|((l, r), _)| match side {
                Side::Left => l.size() == k,
                Side::Right => r.size() == k,
            })
            .map(|(key, c)| (key.clone(), c.clone()))
            .collect(),
    }
}

fn to_json_number(c: &BigInt) -> serde_json::Number {
    c.to_string()
        .parse()
        .expect("integer literal is a JSON number")
}

fn from_json_number<E: serde::de::Error>(n: &serde_json::Number) -> Result<BigInt, E> {
    n.to_string()
        .parse::<BigInt>()
        .map_err(|_| E::custom(format!("coefficient {n} is not an integer")))
}

#[derive(Serialize, Deserialize)]
struct SchurTermJson {
    partition: Partition,
    coeff: serde_json::Number,
}

#[derive(Serialize, Deserialize)]
struct TensorTermJson {
    left: Partition,
    right: Partition,
    coeff: serde_json::Number,
}

impl Serialize for SchurExpr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<SchurTermJson> = self
            .terms
            .iter()
            .map(|(p, c)| SchurTermJson {
                partition: p.clone(),
                coeff: to_json_number(c),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurExpr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<SchurTermJson>::deserialize(d)?;
        let mut out = SchurExpr::zero();
        for t in terms {
            out.add_term(t.partition, from_json_number(&t.coeff)?);
        }
        Ok(out)
    }
}

impl Serialize for TensorSchurExpr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TensorTermJson> = self
            .terms
            .iter()
            .map(|((l, r), c)| TensorTermJson {
                left: l.clone(),
                right: r.clone(),
                coeff: to_json_number(c),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TensorSchurExpr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TensorTermJson>::deserialize(d)?;
        let mut out = TensorSchurExpr::zero();
        for t in terms {
            out.add_term(t.left, t.right, from_json_number(&t.coeff)?);
        }
        Ok(out)
    }
}

/// Non-negative coefficient as an unsigned integer.
pub(crate) fn to_biguint(c: &BigInt) -> BigUint {
    c.to_biguint().expect("nonnegative coefficient")
}
