//! Seeded random generators for complexified quaternions, transform axes,
//! and test signals. All functions are deterministic given the caller's RNG
//! state, so reports and failures are reproducible from a seed.

use rand::Rng;

use crate::algebra::{CQuat, Cplx, Quat};

/// Uniform complexified quaternion with all eight components in [-1, 1).
pub fn random_cquat<R: Rng + ?Sized>(rng: &mut R) -> CQuat {
    let c = |rng: &mut R| Cplx::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    CQuat::new(c(rng), c(rng), c(rng), c(rng))
}

/// Uniform real quaternion with components in [-1, 1).
pub fn random_real_cquat<R: Rng + ?Sized>(rng: &mut R) -> CQuat {
    CQuat::from_reals(
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    )
}

fn random_pure<R: Rng + ?Sized>(rng: &mut R) -> Quat {
    Quat::new(
        0.0,
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    )
}

/// A valid transform axis built constructively: a random real pure direction
/// `a` scaled to norm 1 + beta, plus an orthogonal pure direction of norm
/// beta as the imaginary part, for random beta >= 0. The result is pure with
/// orthogonal parts whose norms differ by exactly one, hence a root of -1.
pub fn random_axis<R: Rng + ?Sized>(rng: &mut R) -> CQuat {
    loop {
        let a = random_pure(rng);
        let mut b = random_pure(rng);
        let na = a.norm_sqr();
        if na < 1e-2 {
            continue;
        }
        b = b - a * (a.dot(b) / na);
        let nb = b.norm_sqr();
        if nb < 1e-4 {
            continue;
        }
        let beta = rng.gen_range(0.0..3.0);
        let re = a * ((1.0 + beta) / na).sqrt();
        let im = b * (beta / nb).sqrt();
        return CQuat::from_parts(re, im);
    }
}

/// A non-zero null quaternion: orthogonal real and imaginary parts of equal
/// norm, so the semi-norm vanishes identically.
pub fn random_null_cquat<R: Rng + ?Sized>(rng: &mut R) -> CQuat {
    loop {
        let a = Quat::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let mut b = Quat::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let na = a.norm_sqr();
        if na < 1e-2 {
            continue;
        }
        b = b - a * (a.dot(b) / na);
        let nb = b.norm_sqr();
        if nb < 1e-4 {
            continue;
        }
        let b = b * (na / nb).sqrt();
        return CQuat::from_parts(a, b);
    }
}

/// Length-n signal of uniform complexified quaternions.
pub fn random_signal<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<CQuat> {
    (0..n).map(|_| random_cquat(rng)).collect()
}

/// Length-n signal of uniform real quaternions.
pub fn random_real_signal<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<CQuat> {
    (0..n).map(|_| random_real_cquat(rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_axes_are_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let mu = random_axis(&mut rng);
            assert!(mu.is_root_of_minus_one(1e-12), "{mu:?}");
            let sq = mu * mu + CQuat::ONE;
            assert!(sq.max_abs_component() <= 1e-10, "{mu:?}");
        }
    }

    #[test]
    fn generated_nulls_are_null_and_nonzero() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..500 {
            let q = random_null_cquat(&mut rng);
            assert!(q.is_null(1e-12));
            assert!(!q.is_zero());
        }
    }

    #[test]
    fn seeded_draws_are_reproducible() {
        let run = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (random_axis(&mut rng), random_signal(&mut rng, 4))
        };
        assert_eq!(run(99), run(99));
    }

    #[test]
    fn real_signals_have_no_imaginary_part() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for q in random_real_signal(&mut rng, 64) {
            assert!(q.is_real());
        }
    }
}
