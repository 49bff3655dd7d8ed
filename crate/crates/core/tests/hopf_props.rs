mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use socle_core::symfunc::{
    coproduct, eval_schur, homogeneous_component, lr_coefficient, schur_product, SchurExpr, Side,
    TensorSchurExpr,
};
use socle_core::Partition;

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=5).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lr_symmetry(l in partition(8), m in partition(4)) {
        for nu in Partition::all(l.size().saturating_sub(m.size())) {
            prop_assert_eq!(lr_coefficient(&l, &m, &nu), lr_coefficient(&l, &nu, &m));
        }
    }

    #[test]
    fn product_is_commutative_and_graded(a in partition(4), b in partition(4)) {
        let ab = schur_product(&a, &b);
        prop_assert_eq!(&ab, &schur_product(&b, &a));
        for (l, _) in ab.terms() {
            prop_assert_eq!(l.size(), a.size() + b.size());
            prop_assert!(l.contains(&a) && l.contains(&b));
        }
    }

    #[test]
    fn product_is_associative(a in partition(3), b in partition(3), c in partition(2)) {
        let left = SchurExpr::single(a.clone()).mul(&schur_product(&b, &c));
        let right = schur_product(&a, &b).mul(&SchurExpr::single(c.clone()));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn coproduct_is_multiplicative(a in partition(3), b in partition(3)) {
        // Δ(s_a s_b) = Δ(s_a) Δ(s_b)
        let mut lhs = TensorSchurExpr::zero();
        for (l, c) in schur_product(&a, &b).terms() {
            for (x, y, d) in coproduct(l).terms() {
                lhs.add_term(x.clone(), y.clone(), c * d);
            }
        }
        let mut rhs = TensorSchurExpr::zero();
        for (a1, a2, c1) in coproduct(&a).terms() {
            for (b1, b2, c2) in coproduct(&b).terms() {
                for (x, d1) in schur_product(a1, b1).terms() {
                    for (y, d2) in schur_product(a2, b2).terms() {
                        rhs.add_term(x.clone(), y.clone(), c1 * c2 * d1 * d2);
                    }
                }
            }
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn homogeneous_components_partition_the_coproduct(l in partition(7)) {
        let delta = coproduct(&l);
        let mut total = 0;
        for k in 0..=l.size() {
            let part = homogeneous_component(&delta, k, Side::Left);
            prop_assert!(part.terms().all(|(a, b, _)| a.size() == k && b.size() == l.size() - k));
            prop_assert_eq!(&part, &homogeneous_component(&delta, l.size() - k, Side::Right));
            total += part.len();
        }
        prop_assert_eq!(total, delta.len());
    }

    #[test]
    fn bi_alphabet(l in partition(5), x in prop::collection::vec(rational(), 0..=3), y in prop::collection::vec(rational(), 0..=3)) {
        let joined: Vec<BigRational> = x.iter().chain(&y).cloned().collect();
        let mut rhs = BigRational::zero();
        for (mu, nu, c) in coproduct(&l).terms() {
            rhs += BigRational::from_integer(c.clone()) * eval_schur(mu, &x) * eval_schur(nu, &y);
        }
        prop_assert_eq!(eval_schur(&l, &joined), rhs);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in partition(3), b in partition(3), x in prop::collection::vec(rational(), 1..=3)) {
        let mut rhs = BigRational::zero();
        for (l, c) in schur_product(&a, &b).terms() {
            rhs += BigRational::from_integer(c.clone()) * eval_schur(l, &x);
        }
        prop_assert_eq!(eval_schur(&a, &x) * eval_schur(&b, &x), rhs);
    }
}

#[test]
fn counit_recovers_input() {
    for n in 0..=8 {
        for l in Partition::all(n) {
            let delta = coproduct(&l);
            assert_eq!(delta.counit(Side::Left), SchurExpr::single(l.clone()));
            assert_eq!(delta.counit(Side::Right), SchurExpr::single(l.clone()));
        }
    }
}

#[test]
fn coproduct_coefficients_sum_matches_oracle() {
    // Σ_{μ,ν} c^λ_{μν} recomputed from the Kostka product expansion
    for n in 0..=6 {
        for l in common::partitions(n) {
            let mut expected = 0u64;
            for k in 0..=n {
                for mu in common::partitions(k) {
                    for nu in common::partitions(n - k) {
                        expected += common::lr_oracle(&l, &mu, &nu);
                    }
                }
            }
            let got: BigInt = coproduct(&common::p(&l))
                .terms()
                .map(|(_, _, c)| c.clone())
                .sum();
            assert_eq!(got, BigInt::from(expected), "{l:?}");
        }
    }
}
