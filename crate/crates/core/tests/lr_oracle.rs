mod common;

use common::{big, lr_product, p, partitions, schur_by_tableaux, syt_by_corners};
use num_bigint::BigUint;
use num_rational::BigRational;
use socle_core::symfunc::{eval_schur, lr_coefficient, schur_product};
use socle_core::Partition;

#[test]
fn kostka_oracle_sanity() {
    assert_eq!(common::kostka(&[2, 1], &[1, 1, 1]), 2);
    assert_eq!(common::kostka(&[3], &[1, 2]), 1);
    assert_eq!(common::kostka(&[1, 1], &[2]), 0);
    let product = lr_product(&[1], &[1]);
    assert_eq!(product.get(&vec![2]), Some(&1));
    assert_eq!(product.get(&vec![1, 1]), Some(&1));
}

#[test]
fn lr_coefficients_match_kostka_inversion() {
    for total in 0..=7 {
        for a in 0..=total {
            for mu in partitions(a) {
                for nu in partitions(total - a) {
                    let expected = lr_product(&mu, &nu);
                    for lambda in partitions(total) {
                        let want = big(expected.get(&lambda).copied().unwrap_or(0));
                        let got = lr_coefficient(&p(&lambda), &p(&mu), &p(&nu));
                        assert_eq!(got, want, "c^{lambda:?}_{{{mu:?},{nu:?}}}");
                    }
                }
            }
        }
    }
}

#[test]
fn lr_coefficients_at_size_eight_sampled() {
    let cases = [
        (vec![4, 2, 1, 1], vec![2, 1], vec![3, 1, 1]),
        (vec![4, 3, 1], vec![3, 1], vec![2, 2]),
        (vec![3, 3, 2], vec![2, 1], vec![2, 2, 1]),
        (vec![4, 2, 2], vec![3, 1], vec![2, 1, 1]),
        (vec![5, 3], vec![4, 1], vec![3]),
        (vec![3, 2, 2, 1], vec![2, 2], vec![2, 1, 1]),
    ];
    for (lambda, mu, nu) in cases {
        let want = big(common::lr_oracle(&lambda, &mu, &nu));
        assert_eq!(lr_coefficient(&p(&lambda), &p(&mu), &p(&nu)), want);
    }
}

#[test]
fn schur_product_matches_oracle() {
    let mu = p(&[2, 1]);
    let nu = p(&[2, 1]);
    let got = schur_product(&mu, &nu);
    for (lambda, c) in lr_product(&[2, 1], &[2, 1]) {
        assert_eq!(got.coeff(&p(&lambda)), num_bigint::BigInt::from(c));
    }
    assert_eq!(got.coeff(&p(&[3, 2, 1])), 2.into());
}

#[test]
fn syt_counts_match_corner_removal() {
    for n in 0..=10 {
        for shape in partitions(n) {
            assert_eq!(p(&shape).syt_count(), syt_by_corners(&shape), "{shape:?}");
        }
    }
}

#[test]
fn jacobi_trudi_matches_tableau_sum() {
    let points: Vec<Vec<BigRational>> = vec![
        vec![q(1, 2), q(-2, 1), q(3, 1)],
        vec![q(2, 3), q(1, 1)],
        vec![q(-1, 4)],
        vec![q(1, 1), q(1, 3), q(-5, 2), q(2, 1)],
    ];
    for n in 0..=5 {
        for shape in partitions(n) {
            for x in &points {
                assert_eq!(
                    eval_schur(&p(&shape), x),
                    schur_by_tableaux(&shape, x),
                    "{shape:?} at {x:?}"
                );
            }
        }
    }
}

#[test]
fn dim_schur_matches_tableau_count_at_ones() {
    for n in 0..=5 {
        for shape in partitions(n) {
            for rank in 0..=4 {
                let ones = vec![q(1, 1); rank];
                let count = schur_by_tableaux(&shape, &ones);
                assert_eq!(
                    BigRational::from_integer(p(&shape).dim_schur(rank).into()),
                    count
                );
            }
        }
    }
}

#[test]
fn sum_of_squared_syt_counts_is_factorial() {
    for n in 0..=9 {
        let total: BigUint = Partition::all(n).iter().map(|l| l.syt_count().pow(2)).sum();
        let fact: BigUint = (1..=n as u64).map(BigUint::from).product();
        assert_eq!(total, fact);
    }
}

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}
