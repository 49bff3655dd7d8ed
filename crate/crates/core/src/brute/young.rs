//! Young symmetrizers acting on tensor positions.

use num_traits::Zero;

use super::module::{build_tensor_module, traceless_subspace, ExplicitModule, TensorShape};
use super::BruteConfig;
use crate::error::{Error, Result};
use crate::linalg::{CancelToken, Rational, Subspace};
use crate::partition::Partition;

/// All permutations of `items`.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn sign(perm: &[usize], items: &[usize]) -> i64 {
    // parity of the permutation sending items[i] to perm[i]
    let pos: Vec<usize> = perm
        .iter()
        .map(|p| items.iter().position(|x| x == p).expect("same support"))
        .collect();
    let mut seen = vec![false; pos.len()];
    let mut s = 1;
    for i in 0..pos.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = pos[j];
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

/// Group elements as full position maps `σ: [0, total) → [0, total)`, with
/// signs, for the direct product of symmetric groups on `blocks`.
fn product_group(blocks: &[Vec<usize>], total: usize) -> Vec<(Vec<usize>, i64)> {
    let mut elems = vec![((0..total).collect::<Vec<_>>(), 1i64)];
    for block in blocks {
        let perms = permutations(block);
        let mut next = Vec::with_capacity(elems.len() * perms.len());
        for (base, s) in &elems {
            for p in &perms {
                let mut map = base.clone();
                for (src, dst) in block.iter().zip(p) {
                    map[*src] = *dst;
                }
                next.push((map, s * sign(p, block)));
            }
        }
        elems = next;
    }
    elems
}

/// Positions of the canonical (row-reading) tableau of `shape`, offset by
/// `offset`: returns (rows, columns).
fn tableau_blocks(shape: &Partition, offset: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut rows = Vec::new();
    let mut next = offset;
    for &len in shape.parts() {
        rows.push((next..next + len).collect::<Vec<_>>());
        next += len;
    }
    let cols = (0..shape.part(0))
        .map(|c| {
            rows.iter()
                .filter(|r| r.len() > c)
                .map(|r| r[c])
                .collect::<Vec<_>>()
        })
        .collect();
    (rows, cols)
}

/// Index tables for position permutations acting on tensor words.
struct PositionAction {
    tables: Vec<(Vec<usize>, i64)>,
}

impl PositionAction {
    fn new(shape: TensorShape, group: Vec<(Vec<usize>, i64)>) -> Self {
        let dim = shape.dim();
        let m = shape.dual;
        let tables = group
            .into_iter()
            .map(|(map, s)| {
                let table = (0..dim)
                    .map(|i| {
                        let w = shape.word(i);
                        let mut t = w.clone();
                        for (src, &dst) in map.iter().enumerate() {
                            // σ moves the tensorand at `src` to `dst`
                            if src < m {
                                t.dual[dst] = w.dual[src];
                            } else {
                                t.primal[dst - m] = w.primal[src - m];
                            }
                        }
                        shape.index(&t)
                    })
                    .collect();
                (table, s)
            })
            .collect();
        PositionAction { tables }
    }

    /// `Σ_σ sign(σ)^signed · σ v`.
    fn apply(&self, v: &[Rational], signed: bool) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); v.len()];
        for (table, s) in &self.tables {
            for (i, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                if signed && *s < 0 {
                    out[table[i]] -= x;
                } else {
                    out[table[i]] += x;
                }
            }
        }
        out
    }
}

/// `c_λ ⊗ c_μ`: row symmetrizer then column antisymmetrizer of the canonical
/// tableaux, `λ` on the dual positions and `μ` on the primal ones.
pub struct YoungSymmetrizer {
    rows: PositionAction,
    cols: PositionAction,
}

impl YoungSymmetrizer {
    pub fn new(shape: TensorShape, lambda: &Partition, mu: &Partition) -> Result<Self> {
        if lambda.size() != shape.dual || mu.size() != shape.primal {
            return Err(Error::SizeMismatch(format!(
                "shapes ({lambda}; {mu}) do not fit {} dual and {} primal tensorands",
                shape.dual, shape.primal
            )));
        }
        let total = shape.dual + shape.primal;
        let (mut rows, mut cols) = tableau_blocks(lambda, 0);
        let (r2, c2) = tableau_blocks(mu, shape.dual);
        rows.extend(r2);
        cols.extend(c2);
        Ok(YoungSymmetrizer {
            rows: PositionAction::new(shape, product_group(&rows, total)),
            cols: PositionAction::new(shape, product_group(&cols, total)),
        })
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.cols.apply(&self.rows.apply(v, false), true)
    }
}

/// Image of `c_λ ⊗ c_μ` on the traceless tensors of `module`.
pub fn young_project(
    module: &ExplicitModule,
    lambda: &Partition,
    mu: &Partition,
    cancel: &CancelToken,
) -> Result<Subspace> {
    let shape = module.shape().ok_or(Error::NotTensorModule)?;
    let sym = YoungSymmetrizer::new(shape, lambda, mu)?;
    let traceless = traceless_subspace(module, cancel)?;
    let images = traceless
        .basis()
        .iter()
        .map(|v| {
            cancel.check()?;
            Ok(sym.apply(v))
        })
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(module.dim(), images, cancel)
}

/// `S_λ(ℂᴺ*)` as an explicit module, in the coordinates of its Young image.
pub fn schur_module(rank: usize, lambda: &Partition, cfg: &BruteConfig) -> Result<ExplicitModule> {
    let full = build_tensor_module(rank, lambda.size(), 0, cfg)?;
    let image = young_project(&full, lambda, &Partition::empty(), &cfg.cancel)?;
    full.restrict(&image, &cfg.cancel)
}
