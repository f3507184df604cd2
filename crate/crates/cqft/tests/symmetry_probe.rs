//! Exploratory probe: which candidate involutions T satisfy
//! F[N-u] = T(F[u]) for forward left-kernel spectra of real-quaternion
//! signals? Candidates are the quaternion conjugate, the complex conjugate,
//! their composition, and each additionally conjugated by the axis
//! (q -> -mu*q*mu). The probe prints a table of findings (run with
//! --nocapture to see it) and asserts only that every combination was
//! measured; no particular symmetry is claimed.

use cqft::random::{random_axis, random_real_signal};
use cqft::{cqfft, max_relative_error, CQuat, Cplx, Direction, Side, Signal1d, TransformSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Cplx {
    Cplx::new(re, im)
}

fn example_axis() -> CQuat {
    CQuat::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(1.0, -1.0))
}

type Involution = Box<dyn Fn(CQuat) -> CQuat>;

fn candidates(mu: CQuat) -> Vec<(&'static str, Involution)> {
    let conj_mu = move |q: CQuat| -(mu * q * mu);
    let mut list: Vec<(&'static str, Involution)> = vec![
        ("quat", Box::new(|q: CQuat| q.quat_conj())),
        ("cplx", Box::new(|q: CQuat| q.complex_conj())),
        (
            "quat+cplx",
            Box::new(|q: CQuat| q.quat_conj().complex_conj()),
        ),
        ("conj_mu", Box::new(conj_mu)),
    ];
    list.push((
        "quat.conj_mu",
        Box::new(move |q: CQuat| conj_mu(q).quat_conj()),
    ));
    list.push((
        "cplx.conj_mu",
        Box::new(move |q: CQuat| conj_mu(q).complex_conj()),
    ));
    list.push((
        "quat+cplx.conj_mu",
        Box::new(move |q: CQuat| conj_mu(q).quat_conj().complex_conj()),
    ));
    list
}

/// Worst relative mismatch of F[N-u] vs T(F[u]) over several random signals.
fn probe(mu: CQuat, t: &Involution, scalar_only: bool, rng: &mut ChaCha8Rng) -> f64 {
    let n = 16;
    let mut worst = 0.0_f64;
    for _ in 0..6 {
        let samples = if scalar_only {
            (0..n)
                .map(|_| CQuat::from_reals(rng.gen_range(-1.0..1.0), 0.0, 0.0, 0.0))
                .collect()
        } else {
            random_real_signal(rng, n)
        };
        let f = Signal1d::new(samples).unwrap();
        let spec = TransformSpec::new(mu, Side::Left, Direction::Forward);
        let spectrum = cqfft(&f, &spec).unwrap().into_samples();
        let mirrored: Vec<CQuat> = (0..n).map(|u| spectrum[(n - u) % n]).collect();
        let mapped: Vec<CQuat> = spectrum.iter().map(|&q| t(q)).collect();
        worst = worst.max(max_relative_error(&mirrored, &mapped));
    }
    worst
}

#[test]
fn involution_search_on_mirrored_spectra() {
    let mut rng = ChaCha8Rng::seed_from_u64(1201);
    let axes = [
        ("i", CQuat::I),
        ("example", example_axis()),
        ("random", random_axis(&mut rng)),
    ];
    let mut measured = 0;
    for (population, scalar_only) in [("scalar-real", true), ("real-quaternion", false)] {
        println!("signal population: {population}");
        for (axis_name, mu) in axes {
            for (name, t) in candidates(mu) {
                let dev = probe(mu, &t, scalar_only, &mut rng);
                assert!(dev.is_finite());
                let verdict = if dev <= 1e-10 { "HOLDS" } else { "no" };
                println!("  axis {axis_name:<8} T = {name:<18} max dev {dev:9.2e}  {verdict}");
                measured += 1;
            }
        }
    }
    assert_eq!(measured, 2 * axes.len() * 7);
}
