#![allow(dead_code)]

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use taut_core::document::Document;
use taut_core::linalg::Fp;
use taut_core::presentation::Algebra;
use taut_core::rep::{coker, projective_map, Representation};
use taut_core::tautilt::{check_pair, SttPair};

pub fn load(name: &str) -> Document {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../alg").join(name);
    Document::parse(&std::fs::read_to_string(&path).unwrap(), 30).unwrap()
}

/// The cokernel of a random map between small projectives, never zero.
pub fn random_module(alg: &Algebra, seed: u64) -> Representation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = random_coker(alg, &mut rng);
        if !m.is_zero() {
            return m;
        }
    }
}

fn random_coker(alg: &Algebra, rng: &mut ChaCha8Rng) -> Representation {
    let n = alg.vertex_count();
    let targets: Vec<usize> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(0..n)).collect();
    let sources: Vec<usize> = (0..rng.gen_range(0..3)).map(|_| rng.gen_range(0..n)).collect();
    let entries: Vec<Vec<Vec<Fp>>> = targets
        .iter()
        .map(|&i| {
            sources
                .iter()
                .map(|&j| {
                    let mut x = vec![Fp::ZERO; alg.dim()];
                    for &b in alg.basis_between(i, j) {
                        if rng.gen_bool(0.7) {
                            x[b] = Fp::new(rng.gen_range(0..7));
                        }
                    }
                    x
                })
                .collect()
        })
        .collect();
    coker(&projective_map(alg, &targets, &sources, &entries)).0
}

/// Every pair `(T, P)` with `T` a subset of `inds`, `P` a set of vertices,
/// `|T| + |P| = n`, that passes `check_pair`.
pub fn brute_force(alg: &Algebra, inds: &[Representation]) -> Vec<SttPair> {
    let n = alg.vertex_count();
    let mut out = Vec::new();
    for tmask in 0u32..(1 << inds.len()) {
        for pmask in 0u32..(1 << n) {
            if (tmask.count_ones() + pmask.count_ones()) as usize != n {
                continue;
            }
            let t = (0..inds.len()).filter(|i| tmask >> i & 1 == 1).map(|i| inds[i].clone()).collect();
            let p = (0..n).filter(|v| pmask >> v & 1 == 1).collect();
            let v = check_pair(alg, t, p).unwrap();
            if v.is_stt() {
                out.push(v.pair);
            }
        }
    }
    out
}
