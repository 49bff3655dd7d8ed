mod common;

use common::{big, lr_oracle, p, partitions};
use num_bigint::BigUint;
use socle_core::finrank::{dim_mixed, MixedWeight};
use socle_core::socle::{
    decompose_mixed_tensor, filtration_words, simple_length, socle_layers, tensor_length,
    SimpleConstituent, SocleReport,
};
use socle_core::Partition;

#[test]
fn layers_match_lr_oracle() {
    for n in 0..=6 {
        for l in partitions(n) {
            let mu = p(&[2, 1]);
            let report = socle_layers(&p(&l), &mu);
            assert_eq!(report.layers.len(), n + 1);
            for (k, layer) in report.layers.iter().enumerate() {
                assert!(!layer.is_empty(), "{l:?} layer {k} empty");
                let mut expected = Vec::new();
                for alpha in partitions(k) {
                    for beta in partitions(n - k) {
                        let c = lr_oracle(&l, &alpha, &beta);
                        if c > 0 {
                            expected.push((alpha.clone(), beta, c));
                        }
                    }
                }
                let mut got: Vec<(Vec<usize>, Vec<usize>, u64)> = layer
                    .iter()
                    .map(|c| {
                        assert_eq!(c.mu, mu);
                        let m: u64 = c.multiplicity.clone().try_into().unwrap();
                        (c.alpha.parts().to_vec(), c.beta.parts().to_vec(), m)
                    })
                    .collect();
                got.sort();
                expected.sort();
                assert_eq!(got, expected, "{l:?} layer {k}");
            }
        }
    }
}

#[test]
fn bottom_and_top_layers() {
    for n in 1..=6 {
        for l in Partition::all(n) {
            let r = socle_layers(&l, &Partition::empty());
            let one = |alpha: Partition, beta: Partition| SimpleConstituent {
                alpha,
                beta,
                mu: Partition::empty(),
                multiplicity: big(1),
            };
            assert_eq!(r.layers[0], vec![one(Partition::empty(), l.clone())]);
            assert_eq!(r.layers[n], vec![one(l.clone(), Partition::empty())]);
        }
    }
}

#[test]
fn simple_length_ignores_mu() {
    for l in Partition::all(4) {
        let base = simple_length(&l, &Partition::empty());
        for mu in [p(&[1]), p(&[3, 2]), p(&[1, 1, 1])] {
            assert_eq!(simple_length(&l, &mu), base);
        }
    }
    assert_eq!(simple_length(&p(&[2, 1]), &Partition::empty()), big(6));
}

#[test]
fn mixed_dimension_sum() {
    for s in 0..=5 {
        for pp in 0..=s {
            let qq = s - pp;
            for rank in [s.max(1), s + 1, s + 2] {
                let mut total = BigUint::from(0u32);
                for c in decompose_mixed_tensor(pp, qq) {
                    let w = MixedWeight::new(c.beta, c.gamma, rank).unwrap();
                    total += c.multiplicity * dim_mixed(&w);
                }
                assert_eq!(
                    total,
                    BigUint::from(rank).pow(s as u32),
                    "p={pp} q={qq} n={rank}"
                );
            }
        }
    }
}

/// Number of permutations of `n` squaring to the identity, by the
/// recurrence `a(n) = a(n-1) + (n-1) a(n-2)`.
fn involutions(n: usize) -> BigUint {
    let (mut a, mut b) = (big(1), big(1));
    for k in 2..=n {
        let next = &b + (k as u64 - 1) * &a;
        a = b;
        b = next;
    }
    if n == 0 {
        big(1)
    } else {
        b
    }
}

#[test]
fn pure_dual_length_counts_involutions() {
    // Σ_λ f_λ over λ ⊢ k is the number of involutions of k, so the length of
    // (V*)^{⊗m} is Σ C(m,k) inv(k) inv(m-k)
    for m in 0..=6 {
        let mut expected = big(0);
        let mut binom = big(1);
        for k in 0..=m {
            expected += &binom * involutions(k) * involutions(m - k);
            binom = binom * (m - k) as u64 / (k as u64 + 1);
        }
        assert_eq!(tensor_length(m, 0), expected, "m={m}");
    }
}

#[test]
fn length_examples() {
    assert_eq!(tensor_length(1, 0), big(2));
    assert_eq!(tensor_length(0, 1), big(1));
    assert_eq!(tensor_length(1, 1), big(3));
    assert_eq!(tensor_length(0, 0), big(1));
}

#[test]
fn filtration_word_counts() {
    for m in 0..=6 {
        for k in 0..=m {
            let words = filtration_words(m, k).unwrap();
            let expected: usize = (0..=k)
                .map(|j| (0..j).fold(1usize, |acc, i| acc * (m - i) / (i + 1)))
                .sum();
            assert_eq!(words.len(), expected);
            assert!(words.windows(2).all(|w| w[0] < w[1]));
            assert!(words
                .iter()
                .all(|w| w.iter().filter(|&&b| b == 1).count() <= k));
        }
    }
    assert!(filtration_words(2, 3).is_err());
}

#[test]
fn json_round_trip_is_byte_identical() {
    for l in Partition::all(4) {
        let report = socle_layers(&l, &p(&[1]));
        let text = serde_json::to_string(&report).unwrap();
        let back: SocleReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
