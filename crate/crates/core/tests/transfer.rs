mod common;

use common::{load, random_module};
use proptest::prelude::*;
use taut_core::extension::SplitExtension;
use taut_core::rep::{decompose, direct_sum, is_isomorphic};

fn extensions() -> Vec<SplitExtension> {
    vec![
        load("ex41.alg").extension("E41").unwrap().clone(),
        load("ex42.alg").extension("E42").unwrap().clone(),
        load("ex38.alg").extension("E38").unwrap().clone(),
    ]
}

#[test]
fn restrict_after_induce_is_identity() {
    for e in extensions() {
        for seed in 0..20 {
            let m = random_module(e.base(), seed);
            let back = e.restrict(&e.induce(&m));
            assert!(is_isomorphic(&back, &m), "{} seed {seed}: dims {:?} vs {:?}", e.name(), back.dims(), m.dims());
        }
    }
}

#[test]
fn induction_matches_summands() {
    for e in extensions() {
        for seed in 100..120 {
            let m = random_module(e.base(), seed);
            let before = decompose(&m).unwrap();
            let after = decompose(&e.induce(&m)).unwrap();
            assert_eq!(before.len(), after.len(), "{} seed {seed}", e.name());
            for (piece, _) in before.summands() {
                assert!(after.summands().iter().any(|(q, _)| is_isomorphic(q, &e.induce(piece))));
            }
        }
    }
}

#[test]
fn forget_splits_off_tensor_e() {
    for e in extensions() {
        for seed in 200..210 {
            let m = random_module(e.base(), seed);
            let split = direct_sum(e.base(), &[&m, &e.tensor_e(&m)]);
            assert!(is_isomorphic(&e.forget(&e.induce(&m)), &split), "{} seed {seed}", e.name());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tensor_e_is_additive(a in any::<u64>(), b in any::<u64>(), which in 0usize..3) {
        let e = &extensions()[which];
        let (m, n) = (random_module(e.base(), a), random_module(e.base(), b));
        let lhs = e.tensor_e(&direct_sum(e.base(), &[&m, &n]));
        let rhs = direct_sum(e.base(), &[&e.tensor_e(&m), &e.tensor_e(&n)]);
        prop_assert!(is_isomorphic(&lhs, &rhs));
    }

    #[test]
    fn induce_is_additive(a in any::<u64>(), b in any::<u64>(), which in 0usize..3) {
        let e = &extensions()[which];
        let (m, n) = (random_module(e.base(), a), random_module(e.base(), b));
        let lhs = e.induce(&direct_sum(e.base(), &[&m, &n]));
        let rhs = direct_sum(e.total(), &[&e.induce(&m), &e.induce(&n)]);
        prop_assert!(is_isomorphic(&lhs, &rhs));
    }
}

#[test]
fn random_modules_are_varied() {
    let e = &extensions()[0];
    let dims: Vec<Vec<usize>> = (0..20).map(|s| random_module(e.base(), s).dims().to_vec()).collect();
    assert!(dims.iter().all(|d| d.iter().sum::<usize>() > 0));
    let distinct: std::collections::BTreeSet<_> = dims.iter().collect();
    assert!(distinct.len() > 5, "{dims:?}");
    assert!(dims.iter().any(|d| d.iter().sum::<usize>() >= 4));
}
