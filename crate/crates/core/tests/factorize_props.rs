use proptest::prelude::*;

use seqfact::factorize::{self, FactorKind, PreviousFactorIndex};
use seqfact::sequences::{SequenceGenerator, SequenceId};

fn word() -> impl Strategy<Value = Vec<u8>> {
    (1u8..4).prop_flat_map(|k| prop::collection::vec(0..k, 0..300))
}

proptest! {
    #[test]
    fn fast_equals_direct_scan(x in word()) {
        prop_assert_eq!(factorize::z_factorize(&x, usize::MAX), factorize::z_factorize_fast(&x, usize::MAX));
        prop_assert_eq!(factorize::c_factorize(&x, usize::MAX), factorize::c_factorize_fast(&x, usize::MAX));
    }

    #[test]
    fn factors_tile_the_word(x in word(), count in 1usize..50) {
        for kind in [FactorKind::Z, FactorKind::C] {
            let f = factorize::factorize_fast(&x, kind, count);
            let pairs: Vec<(u64, u64)> = f.pairs().iter().map(|&(i, n)| (i as u64, n as u64)).collect();
            prop_assert!(seqfact::theorems::verify_coverage(&pairs));
            prop_assert_eq!(f.words(&x).concat(), x[..f.factors.last().map_or(0, |l| l.start + l.length)].to_vec());
            prop_assert!(f.settled + 1 >= f.len() && f.settled <= f.len());
        }
    }

    #[test]
    fn settled_factors_satisfy_the_predicates(x in word()) {
        let z = factorize::z_factorize_fast(&x, usize::MAX);
        for fac in &z.factors[..z.settled] {
            prop_assert!(factorize::is_z_factor(&x, fac.start, fac.length));
        }
        let c = factorize::c_factorize_fast(&x, usize::MAX);
        for fac in &c.factors[..c.settled] {
            let (i, n) = (fac.start, fac.length);
            let fresh = factorize::is_fresh_letter(&x, i);
            if fresh {
                prop_assert_eq!(n, 1);
            } else {
                // maximal: one more letter has no earlier occurrence
                prop_assert!(factorize::is_c_factor(&x, i, n));
            }
        }
    }

    #[test]
    fn lpf_matches_scan(x in word()) {
        let idx = PreviousFactorIndex::new(&x);
        for i in 0..x.len() {
            prop_assert_eq!(idx.lpf(i), factorize::lpf_naive(&x, i));
        }
    }
}

#[test]
fn catalog_prefixes_agree() {
    for seq in SequenceId::ALL {
        let x = SequenceGenerator::catalog(seq).prefix(10_000).to_vec();
        assert_eq!(factorize::z_factorize(&x, usize::MAX), factorize::z_factorize_fast(&x, usize::MAX), "{seq}");
        assert_eq!(factorize::c_factorize(&x, usize::MAX), factorize::c_factorize_fast(&x, usize::MAX), "{seq}");
    }
}

#[test]
fn eq1_and_eq2() {
    assert!(seqfact::theorems::verify_eq1(20));
    assert!(seqfact::theorems::verify_eq2(20));
}
