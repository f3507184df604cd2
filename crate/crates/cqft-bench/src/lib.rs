//! Seeded input builders shared by the benchmark targets.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cqft::random::{random_real_signal, random_signal};
use cqft::{CQuat, Cplx, Signal1d};

/// i + j + k + (j - k)I, a complex axis exercising the general code path.
pub fn example_axis() -> CQuat {
    CQuat::new(
        Cplx::new(0.0, 0.0),
        Cplx::new(1.0, 0.0),
        Cplx::new(1.0, 1.0),
        Cplx::new(1.0, -1.0),
    )
}

pub fn quaternion_signal(seed: u64, n: usize) -> Signal1d {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Signal1d::new(random_signal(&mut rng, n)).unwrap()
}

pub fn real_quaternion_signal(seed: u64, n: usize) -> Signal1d {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Signal1d::new(random_real_signal(&mut rng, n)).unwrap()
}

pub fn complex_signal(seed: u64, n: usize) -> Vec<Cplx> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_signal(&mut rng, n)
        .into_iter()
        .map(|q| q.w)
        .collect()
}
