//! Weight spaces for commuting semisimple operators.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::module::{ExplicitModule, Generator, SparseMatrix};
use crate::error::{Error, Result};
use crate::linalg::{inf_norm, nullspace, CancelToken, Matrix, Rational, Subspace};

pub type Weight = Vec<Rational>;

/// Simultaneous eigenspace decomposition of `module` under `h`.
///
/// Diagonal actions are read off directly. Otherwise each operator's rational
/// eigenvalues are found from its characteristic polynomial and the joint
/// eigenspaces are built by intersecting kernels.
pub fn weight_decompose(
    module: &ExplicitModule,
    h: &[Generator],
    cancel: &CancelToken,
) -> Result<BTreeMap<Weight, Subspace>> {
    let mats = h
        .iter()
        .map(|g| module.action_of(*g))
        .collect::<Result<Vec<_>>>()?;
    for (a, x) in mats.iter().enumerate() {
        for (b, y) in mats.iter().enumerate().skip(a + 1) {
            if x.mul(y) != y.mul(x) {
                return Err(Error::NonCommuting(h[a].to_string(), h[b].to_string()));
            }
        }
    }
    let dim = module.dim();
    if mats.iter().all(|m| m.is_diagonal()) {
        let mut groups: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for j in 0..dim {
            let w = mats.iter().map(|m| m.diagonal_entry(j)).collect();
            groups.entry(w).or_default().push(j);
        }
        return Ok(groups
            .into_iter()
            .map(|(w, idx)| (w, Subspace::coordinate(dim, idx)))
            .collect());
    }

    let mut eigen = Vec::with_capacity(mats.len());
    for (g, m) in h.iter().zip(&mats) {
        let dense = m.to_dense();
        let values = rational_eigenvalues(&dense)?;
        let mut total = 0;
        for t in &values {
            total += shifted(&dense, t).nullspace(cancel)?.len();
        }
        if total != dim {
            return Err(Error::NotDiagonalizable(g.to_string()));
        }
        eigen.push((dense, values));
    }

    // extend partial weights one operator at a time
    let mut partial: Vec<(Weight, Vec<Vec<Rational>>)> = vec![(Vec::new(), Vec::new())];
    for (dense, values) in &eigen {
        let mut next = Vec::new();
        for (w, rows) in &partial {
            for t in values {
                cancel.check()?;
                let mut stacked = rows.clone();
                stacked.extend(shifted(dense, t).into_rows());
                if !nullspace(stacked.clone(), dim, cancel)?.is_empty() {
                    let mut w = w.clone();
                    w.push(t.clone());
                    next.push((w, stacked));
                }
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|(w, rows)| {
            let basis = nullspace(rows, dim, cancel)?;
            Ok((w, Subspace::span(dim, basis, cancel)?))
        })
        .collect()
}

fn shifted(m: &Matrix, t: &Rational) -> Matrix {
    m.sub(&Matrix::identity(m.nrows()).scale(t))
}

/// Distinct rational roots of the characteristic polynomial of `m`.
///
/// With `D` the lcm of the entry denominators, `Dm` has an integral monic
/// characteristic polynomial, so its rational eigenvalues are integers
/// bounded by the row-sum norm.
fn rational_eigenvalues(m: &Matrix) -> Result<Vec<Rational>> {
    let d = m
        .rows()
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled = m.scale(&Rational::from_integer(d.clone()));
    let poly: Vec<BigInt> = scaled
        .charpoly()?
        .into_iter()
        .map(|c| c.to_integer())
        .collect();
    let bound = inf_norm(&scaled).to_integer();
    let mut roots = Vec::new();
    let mut t = -bound.clone();
    while t <= bound {
        if horner(&poly, &t).is_zero() {
            roots.push(Rational::new(t.clone(), d.clone()));
        }
        t += 1;
    }
    Ok(roots)
}

fn horner(poly: &[BigInt], t: &BigInt) -> BigInt {
    poly.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
}

/// Dimension of `span{x, hx, …, h^d x}` for `x` the sum of `components`,
/// `d + 1` their number. Every component must be an eigenvector of `h`,
/// with pairwise distinct eigenvalues; the span is then the full count.
pub fn vandermonde_span(
    components: &[Vec<Rational>],
    h: &SparseMatrix,
    cancel: &CancelToken,
) -> Result<usize> {
    let dim = h.dim();
    let mut eigenvalues: Vec<Rational> = Vec::with_capacity(components.len());
    for (i, v) in components.iter().enumerate() {
        if v.len() != dim {
            return Err(Error::SizeMismatch(format!(
                "component {i} has length {}, expected {dim}",
                v.len()
            )));
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return Err(Error::ZeroComponent(i));
        };
        let hv = h.apply(v);
        let t = &hv[pivot] / &v[pivot];
        if hv.iter().zip(v).any(|(a, b)| *a != &t * b) {
            return Err(Error::NotAnEigenvector(i));
        }
        if let Some(first) = eigenvalues.iter().position(|s| *s == t) {
            return Err(Error::RepeatedEigenvalue {
                value: t.to_string(),
                first,
                second: i,
            });
        }
        eigenvalues.push(t);
    }
    let mut x = vec![Rational::zero(); dim];
    for v in components {
        for (a, b) in x.iter_mut().zip(v) {
            *a += b;
        }
    }
    let mut krylov = Vec::with_capacity(components.len());
    for _ in 0..components.len() {
        cancel.check()?;
        let next = h.apply(&x);
        krylov.push(std::mem::replace(&mut x, next));
    }
    Ok(Subspace::span(dim, krylov, cancel)?.dim())
}

/// Multiplicity of the simple `gl(N)` module of highest weight `weight` in
/// a module whose diagonal units act diagonally: the dimension of the
/// vectors of that weight killed by every raising unit `E_ij`, `i < j`.
pub fn highest_weight_multiplicity(
    module: &ExplicitModule,
    rank: usize,
    weight: &[i64],
    cancel: &CancelToken,
) -> Result<usize> {
    if weight.len() != rank {
        return Err(Error::SizeMismatch(format!(
            "weight of length {} for rank {rank}",
            weight.len()
        )));
    }
    let cartan: Vec<Generator> = (0..rank).map(|i| Generator::unit(i, i)).collect();
    let mats = cartan
        .iter()
        .map(|g| module.action_of(*g))
        .collect::<Result<Vec<_>>>()?;
    if !mats.iter().all(|m| m.is_diagonal()) {
        return Err(Error::NotDiagonalizable("Cartan subalgebra".into()));
    }
    let target: Vec<Rational> = weight
        .iter()
        .map(|&w| Rational::from_integer(w.into()))
        .collect();
    let space: Vec<usize> = (0..module.dim())
        .filter(|&j| {
            mats.iter()
                .zip(&target)
                .all(|(m, t)| m.diagonal_entry(j) == *t)
        })
        .collect();
    if space.is_empty() {
        return Ok(0);
    }
    let mut rows: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
    for i in 0..rank {
        for j in i + 1..rank {
            cancel.check()?;
            let e = module.action_of(Generator::unit(i, j))?;
            for (c, &col) in space.iter().enumerate() {
                for (r, v) in e.column(col) {
                    rows.entry((i * rank + j, *r))
                        .or_insert_with(|| vec![Rational::zero(); space.len()])[c] += v;
                }
            }
        }
    }
    let rows: Vec<Vec<Rational>> = rows
        .into_values()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    Ok(nullspace(rows, space.len(), cancel)?.len())
}

/// Whether `v` is nonzero and all its support lies in a single weight.
pub fn is_weight_vector(weights: &BTreeMap<Weight, Subspace>, v: &[Rational]) -> bool {
    v.iter().any(|x| !x.is_zero()) && weights.values().any(|s| s.contains(v))
}
