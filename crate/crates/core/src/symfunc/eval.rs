//! Evaluation of Schur polynomials at rational points.

use num_traits::{One, Zero};

use crate::linalg::{Matrix, Rational};
use crate::partition::Partition;

/// `h_k(x_1, …, x_n)`; zero for negative `k`.
pub fn complete_homogeneous(k: i64, point: &[Rational]) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let k = k as usize;
    // h[j] accumulates h_j over the variables seen so far
    let mut h = vec![Rational::zero(); k + 1];
    h[0] = Rational::one();
    for x in point {
        for j in 1..=k {
            let prev = &h[j - 1] * x;
            h[j] += prev;
        }
    }
    h.swap_remove(k)
}

/// `s_λ(x_1, …, x_n)` by the Jacobi–Trudi determinant `det(h_{λ_i - i + j})`.
/// Vanishes automatically when `λ` has more than `n` parts.
pub fn eval_schur(lambda: &Partition, point: &[Rational]) -> Rational {
    let l = lambda.len();
    if l == 0 {
        return Rational::one();
    }
    let max = lambda.part(0) + l;
    let h: Vec<Rational> = (0..max as i64)
        .map(|k| complete_homogeneous(k, point))
        .collect();
    let rows = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let k = lambda.part(i) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        Rational::zero()
                    } else {
                        h[k as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows)
        .and_then(|m| m.det())
        .expect("square Jacobi-Trudi matrix")
}
