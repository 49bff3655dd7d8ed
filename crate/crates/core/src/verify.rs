//! Self-check suites: Hopf identities, branching, and the finite-rank
//! comparisons against explicit modules.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::brute::{
    build_tensor_module, grade_filtration, highest_weight_multiplicity, is_essential_filtration,
    layer_constituent_counts, parabolic, schur_module, socle_filtration_parabolic,
    trivial_pair_counterexample, vandermonde_span, young_project, Algebra, BruteConfig,
    SparseMatrix,
};
use crate::error::{Error, Result};
use crate::finrank::{branching_identity_check, dim_mixed, MixedWeight};
use crate::linalg::Rational;
use crate::partition::Partition;
use crate::socle::{decompose_mixed_tensor, tensor_length};
use crate::symfunc::{coproduct, eval_schur, lr_coefficient, schur_product, Side};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Hopf,
    Branching,
    Brute,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hopf" => Ok(Suite::Hopf),
            "branching" => Ok(Suite::Branching),
            "brute" => Ok(Suite::Brute),
            "all" => Ok(Suite::All),
            other => Err(Error::UnknownSuite(other.to_string())),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Hopf => "hopf",
            Suite::Branching => "branching",
            Suite::Brute => "brute",
            Suite::All => "all",
        })
    }
}

/// One checked identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, failures: Vec<String>, cases: usize) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{cases} cases")
        } else {
            format!(
                "{} of {cases} cases failed, first: {}",
                failures.len(),
                failures[0]
            )
        };
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub seed: u64,
    pub brute: BruteConfig,
}

impl VerifyOptions {
    pub fn new(seed: u64, brute: BruteConfig) -> Self {
        VerifyOptions { seed, brute }
    }
}

pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Hopf | Suite::All) {
        out.extend(hopf_suite(opts.seed));
    }
    if matches!(suite, Suite::Branching | Suite::All) {
        out.extend(branching_suite());
    }
    if matches!(suite, Suite::Brute | Suite::All) {
        out.extend(brute_suite(&opts.brute)?);
    }
    Ok(out)
}

fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(Partition::all).collect()
}

/// Runs `f` on every item in parallel and gathers the failure messages in
/// input order.
fn collect_failures<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Option<String> + Sync + Send,
) -> Vec<String> {
    items
        .par_iter()
        .map(f)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

type Triple = BTreeMap<(Partition, Partition, Partition), BigInt>;

fn coassociativity_holds(lambda: &Partition) -> bool {
    let delta = coproduct(lambda);
    let mut left = Triple::new();
    let mut right = Triple::new();
    for (a, b, c) in delta.terms() {
        for (a1, a2, c1) in coproduct(a).terms() {
            *left.entry((a1.clone(), a2.clone(), b.clone())).or_default() += c * c1;
        }
        for (b1, b2, c2) in coproduct(b).terms() {
            *right
                .entry((a.clone(), b1.clone(), b2.clone()))
                .or_default() += c * c2;
        }
    }
    left.retain(|_, v| !v.is_zero());
    right.retain(|_, v| !v.is_zero());
    left == right
}

fn counit_holds(lambda: &Partition) -> bool {
    let delta = coproduct(lambda);
    let expected = crate::symfunc::SchurExpr::single(lambda.clone());
    delta.counit(Side::Left) == expected && delta.counit(Side::Right) == expected
}

fn lr_symmetric(lambda: &Partition) -> Option<String> {
    let delta = coproduct(lambda);
    for (mu, nu, c) in delta.terms() {
        if delta.coeff(nu, mu) != *c {
            return Some(format!("c^{lambda:?}_{{{mu:?},{nu:?}}}"));
        }
    }
    None
}

/// `⟨s_μ s_ν, s_λ⟩ = ⟨s_μ ⊗ s_ν, Δ s_λ⟩` for every `|μ| + |ν| = |λ|`.
fn duality_holds(lambda: &Partition) -> Option<String> {
    let n = lambda.size();
    let delta = coproduct(lambda);
    for k in 0..=n {
        for mu in Partition::all(k) {
            for nu in Partition::all(n - k) {
                let product = schur_product(&mu, &nu).coeff(lambda);
                if product != delta.coeff(&mu, &nu) {
                    return Some(format!("{lambda:?} against {mu:?}·{nu:?}"));
                }
            }
        }
    }
    None
}

/// A random rational with numerator in `[-5, 5]` and denominator in `[1, 4]`.
fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(
        rng.gen_range(-5i64..=5).into(),
        rng.gen_range(1i64..=4).into(),
    )
}

/// Fixed-seed evaluation points `(x, y)` with alphabet sizes cycling through
/// `1..=3` on each side.
pub fn bi_alphabet_points(seed: u64, count: usize) -> Vec<(Vec<Rational>, Vec<Rational>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let (a, b) = (1 + i % 3, 1 + (i / 3) % 3);
            let x = (0..a).map(|_| random_rational(&mut rng)).collect();
            let y = (0..b).map(|_| random_rational(&mut rng)).collect();
            (x, y)
        })
        .collect()
}

/// `s_λ(x, y) = Σ c^λ_{μν} s_μ(x) s_ν(y)`.
pub fn bi_alphabet_holds(lambda: &Partition, x: &[Rational], y: &[Rational]) -> bool {
    let joined: Vec<Rational> = x.iter().chain(y).cloned().collect();
    let lhs = eval_schur(lambda, &joined);
    let mut rhs = Rational::zero();
    for (mu, nu, c) in coproduct(lambda).terms() {
        rhs += Rational::from_integer(c.clone()) * eval_schur(mu, x) * eval_schur(nu, y);
    }
    lhs == rhs
}

pub fn hopf_suite(seed: u64) -> Vec<Check> {
    let upto8 = partitions_up_to(8);
    let upto7 = partitions_up_to(7);
    let upto6 = partitions_up_to(6);
    let points = bi_alphabet_points(seed, 20);
    vec![
        Check::new(
            "coassociativity |λ| ≤ 8",
            collect_failures(&upto8, |l| {
                (!coassociativity_holds(l)).then(|| format!("{l:?}"))
            }),
            upto8.len(),
        ),
        Check::new(
            "counit |λ| ≤ 8",
            collect_failures(&upto8, |l| (!counit_holds(l)).then(|| format!("{l:?}"))),
            upto8.len(),
        ),
        Check::new(
            "LR symmetry |λ| ≤ 8",
            collect_failures(&upto8, lr_symmetric),
            upto8.len(),
        ),
        Check::new(
            "product/coproduct duality |λ| ≤ 7",
            collect_failures(&upto7, duality_holds),
            upto7.len(),
        ),
        Check::new(
            "bi-alphabet evaluation |λ| ≤ 6, 20 points",
            collect_failures(&upto6, |l| {
                points
                    .iter()
                    .position(|(x, y)| !bi_alphabet_holds(l, x, y))
                    .map(|i| format!("{l:?} at point {i}"))
            }),
            upto6.len() * points.len(),
        ),
    ]
}

pub fn branching_suite() -> Vec<Check> {
    let cases: Vec<(Partition, usize, usize)> = partitions_up_to(6)
        .into_iter()
        .flat_map(|l| {
            (0..=3).flat_map(move |a| {
                let l = l.clone();
                (0..=3).map(move |b| (l.clone(), a, b))
            })
        })
        .collect();
    vec![Check::new(
        "branching dim S_λ(ℂ^{a+b}) |λ| ≤ 6, a,b ≤ 3",
        collect_failures(&cases, |(l, a, b)| {
            (!branching_identity_check(l, *a, *b)).then(|| format!("{l:?} a={a} b={b}"))
        }),
        cases.len(),
    )]
}

/// `Σ_{|α|=k} c^λ_{αβ} dim S_α(ℂ^{N-b}) dim S_β(ℂ^b)` for each `k`.
pub fn expected_layer_dims(lambda: &Partition, rank: usize, b: usize) -> Vec<BigUint> {
    let n = lambda.size();
    (0..=n)
        .map(|k| {
            let mut total = BigUint::zero();
            for alpha in Partition::all(k) {
                for beta in Partition::all(n - k) {
                    let c = lr_coefficient(lambda, &alpha, &beta);
                    if !c.is_zero() {
                        total += c * alpha.dim_schur(rank - b) * beta.dim_schur(b);
                    }
                }
            }
            total
        })
        .collect()
}

/// Stable-range socle shadow grid: `(N, b)` pairs checked against the
/// branching formula.
pub const SHADOW_GRID: [(usize, usize); 4] = [(4, 2), (5, 2), (5, 3), (6, 3)];

fn shadow_case(
    lambda: &Partition,
    rank: usize,
    b: usize,
    cfg: &BruteConfig,
) -> Result<Option<String>> {
    let module = schur_module(rank, lambda, cfg)?;
    let p = parabolic(rank, b)?;
    let got: Vec<BigUint> = socle_filtration_parabolic(&module, &p, &cfg.cancel)?
        .layer_dims()
        .into_iter()
        .map(BigUint::from)
        .collect();
    let expected = expected_layer_dims(lambda, rank, b);
    Ok((got != expected).then(|| format!("{lambda:?} at N={rank} b={b}: {got:?} vs {expected:?}")))
}

fn young_case(
    rank: usize,
    lambda: &Partition,
    mu: &Partition,
    cfg: &BruteConfig,
) -> Result<Option<String>> {
    let module = build_tensor_module(rank, lambda.size(), mu.size(), cfg)?;
    let got = BigUint::from(young_project(&module, lambda, mu, &cfg.cancel)?.dim());
    let expected = if mu.is_empty() {
        lambda.dim_schur(rank)
    } else if lambda.is_empty() {
        mu.dim_schur(rank)
    } else if lambda.len() + mu.len() > rank {
        BigUint::zero()
    } else {
        dim_mixed(&MixedWeight::new(lambda.clone(), mu.clone(), rank)?)
    };
    Ok((got != expected).then(|| format!("N={rank} ({lambda:?};{mu:?}): {got} vs {expected}")))
}

/// Highest weight of the constituent labelled `(β, γ)` of
/// `(ℂⁿ*)^{⊗p} ⊗ (ℂⁿ)^{⊗q}`, with `β` on the dual side.
pub fn mixed_highest_weight(beta: &Partition, gamma: &Partition, rank: usize) -> Vec<i64> {
    let mut w = vec![0i64; rank];
    for (i, &g) in gamma.parts().iter().enumerate() {
        w[i] += g as i64;
    }
    for (i, &b) in beta.parts().iter().enumerate() {
        w[rank - 1 - i] -= b as i64;
    }
    w
}

fn mixed_case(p: usize, q: usize, cfg: &BruteConfig) -> Result<Option<String>> {
    let rank = p + q + 1;
    let module = build_tensor_module(rank, p, q, cfg)?;
    let constituents = decompose_mixed_tensor(p, q);
    let mut total = BigUint::zero();
    for c in &constituents {
        let w = mixed_highest_weight(&c.beta, &c.gamma, rank);
        let brute = highest_weight_multiplicity(&module, rank, &w, &cfg.cancel)?;
        if BigUint::from(brute) != c.multiplicity {
            return Ok(Some(format!(
                "p={p} q={q} ({:?};{:?}): brute {brute} vs {}",
                c.beta, c.gamma, c.multiplicity
            )));
        }
        total +=
            &c.multiplicity * dim_mixed(&MixedWeight::new(c.beta.clone(), c.gamma.clone(), rank)?);
    }
    let full = BigUint::from(rank).pow((p + q) as u32);
    Ok((total != full).then(|| format!("p={p} q={q}: dimension sum {total} vs {full}")))
}

fn grade_essential_case(m: usize, cfg: &BruteConfig) -> Result<Option<String>> {
    let (rank, b) = (2 * m.max(1), m.max(1));
    let module = build_tensor_module(rank, m, 0, cfg)?;
    let p = parabolic(rank, b)?;
    let grade = grade_filtration(&module, &p)?;
    let essential = is_essential_filtration(&module, &grade, &Algebra::Parabolic(p), &cfg.cancel)?;
    Ok((!essential).then(|| format!("m={m} at N={rank} b={b}")))
}

fn constituent_count_case(m: usize, cfg: &BruteConfig) -> Result<Option<String>> {
    let (rank, b) = (2 * m.max(1), m.max(1));
    let module = build_tensor_module(rank, m, 0, cfg)?;
    let p = parabolic(rank, b)?;
    let f = socle_filtration_parabolic(&module, &p, &cfg.cancel)?;
    let brute: usize = layer_constituent_counts(&module, &f, &p, &cfg.cancel)?
        .iter()
        .sum();
    let formula = tensor_length(m, 0);
    Ok((BigUint::from(brute) != formula).then(|| format!("m={m}: brute {brute} vs {formula}")))
}

/// Diagonal operator with eigenvalues `(k+1)^j`, `j = 1..=k`, and the
/// coordinate vectors as components.
pub fn vandermonde_case(k: usize) -> (Vec<Vec<Rational>>, SparseMatrix) {
    let base = BigInt::from(k + 1);
    let diag: Vec<Rational> = (1..=k)
        .map(|j| Rational::from_integer(base.pow(j as u32)))
        .collect();
    let comps = (0..k)
        .map(|i| {
            let mut v = vec![Rational::zero(); k];
            v[i] = Rational::one();
            v
        })
        .collect();
    (comps, SparseMatrix::diagonal(&diag))
}

fn fold_results(name: &str, results: Vec<Result<Option<String>>>) -> Result<Check> {
    let cases = results.len();
    let mut failures = Vec::new();
    for r in results {
        if let Some(msg) = r? {
            failures.push(msg);
        }
    }
    Ok(Check::new(name, failures, cases))
}

pub fn brute_suite(cfg: &BruteConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let mut young = Vec::new();
    for rank in 1..=4 {
        for total in 0..=3 {
            for m in 0..=total {
                for lambda in Partition::all(m) {
                    for mu in Partition::all(total - m) {
                        young.push((rank, lambda.clone(), mu));
                    }
                }
            }
        }
    }
    let results = young
        .par_iter()
        .map(|(rank, l, m)| young_case(*rank, l, m, cfg))
        .collect();
    checks.push(fold_results(
        "Young image ranks, N ≤ 4, sizes ≤ 3",
        results,
    )?);

    let mut shadow = Vec::new();
    for (rank, b) in SHADOW_GRID {
        for lambda in partitions_up_to(b.min(rank - b)) {
            shadow.push((lambda, rank, b));
        }
    }
    let results = shadow
        .par_iter()
        .map(|(l, rank, b)| shadow_case(l, *rank, *b, cfg))
        .collect();
    checks.push(fold_results("parabolic socle layers of S_λ(ℂᴺ*)", results)?);

    let results = (0..=3).map(|m| grade_essential_case(m, cfg)).collect();
    checks.push(fold_results("grade filtration essential, m ≤ 3", results)?);

    let (module, filtration) = trivial_pair_counterexample()?;
    let essential = is_essential_filtration(
        &module,
        &filtration,
        &Algebra::Generators(Vec::new()),
        &cfg.cancel,
    )?;
    checks.push(Check::new(
        "line in trivial ⊕ trivial is not essential",
        if essential {
            vec!["reported essential".into()]
        } else {
            Vec::new()
        },
        1,
    ));

    let pairs: Vec<(usize, usize)> = (0..=5)
        .flat_map(|s| (0..=s).map(move |p| (p, s - p)))
        .collect();
    let results = pairs
        .par_iter()
        .map(|&(p, q)| mixed_case(p, q, cfg))
        .collect();
    checks.push(fold_results(
        "mixed tensor multiplicities, p+q ≤ 5",
        results,
    )?);

    let results = (1..=3).map(|m| constituent_count_case(m, cfg)).collect();
    checks.push(fold_results(
        "length of (ℂᴺ*)^{⊗m} from layer constituents, m ≤ 3",
        results,
    )?);

    let results = (1..=6)
        .map(|k| {
            let (comps, h) = vandermonde_case(k);
            let span = vandermonde_span(&comps, &h, &cfg.cancel)?;
            Ok((span != k).then(|| format!("{k} components span {span}")))
        })
        .collect();
    checks.push(fold_results(
        "Vandermonde span, eigenvalues (k+1)^j",
        results,
    )?);

    Ok(checks)
}
