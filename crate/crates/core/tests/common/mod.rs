#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tpalg_core::{FieldSpec, SuperAlgebra};

/// A structurally valid algebra: supersymmetric `∘`, superskew bracket,
/// parity-respecting entries, each present with probability `density`.
pub fn random_algebra(rng: &mut ChaCha8Rng, field: FieldSpec, n: usize, graded: bool, density: f64) -> SuperAlgebra {
    let parity: Vec<u8> = (0..n).map(|_| if graded { rng.random_range(0..2) } else { 0 }).collect();
    let nonzero = |rng: &mut ChaCha8Rng| match field.order() {
        Some(p) => field.from_i64(rng.random_range(1..p as i64)),
        None => field.from_i64([-2, -1, 1, 2][rng.random_range(0..4)]),
    };
    let mut b = SuperAlgebra::builder("random", field, parity.clone());
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                if (parity[i] + parity[j]) % 2 != parity[k] {
                    continue;
                }
                let both_odd = parity[i] == 1 && parity[j] == 1;
                if !(i == j && both_odd) && rng.random_bool(density) {
                    b = b.circ_sym_scalar(i, j, k, nonzero(rng));
                }
                if !(i == j && !both_odd) && rng.random_bool(density) {
                    b = b.bracket_skew_scalar(i, j, k, nonzero(rng));
                }
            }
        }
    }
    b.build().expect("valid by construction")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
