//! Self-contained complex FFT engine.
//!
//! `cdft` is the O(N^2) reference evaluation; `cfft` dispatches to an
//! iterative radix-2 kernel for power-of-two lengths and to the Bluestein
//! chirp-z algorithm otherwise, so every length N >= 1 is supported.
//! Forward uses the exp(-2*pi*I*nu/N) kernel; inverse flips the sign and
//! scales by 1/N. Per-length plans (twiddles, chirp tables, filter spectra)
//! are cached behind a mutex and shared across threads.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::Cplx;

/// Transform direction; fixes the kernel's exponent sign and whether the
/// 1/N scale is applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

impl Direction {
    /// Sign of the exponent: -1 forward, +1 inverse.
    pub fn sign(self) -> f64 {
        match self {
            Direction::Forward => -1.0,
            Direction::Inverse => 1.0,
        }
    }

    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Inverse,
            Direction::Inverse => Direction::Forward,
        }
    }
}

/// Seam for swapping in a platform FFT: anything that can run an unscaled
/// complex transform in place. The built-in engine is [`BuiltinFft`].
pub trait FftProvider: Send + Sync {
    /// Unscaled transform: no 1/N on the inverse; the caller owns scaling.
    fn fft_unscaled(&self, x: &mut [Cplx], direction: Direction);
}

/// The in-repo radix-2 / Bluestein engine.
#[derive(Clone, Copy, Debug, Default)]
pub struct BuiltinFft;

impl FftProvider for BuiltinFft {
    fn fft_unscaled(&self, x: &mut [Cplx], direction: Direction) {
        fft_unscaled_inplace(x, direction);
    }
}

/// Reference DFT, O(N^2): X[u] = sum_n exp(sign*2*pi*I*n*u/N) x[n], with the
/// 1/N scale on the inverse.
pub fn cdft(x: &[Cplx], direction: Direction) -> Vec<Cplx> {
    let n = x.len();
    let kernel = kernel_table(n, direction);
    let mut out = Vec::with_capacity(n);
    for u in 0..n {
        let mut acc = Cplx::new(0.0, 0.0);
        for (i, &xi) in x.iter().enumerate() {
            acc += kernel[(i as u128 * u as u128 % n as u128) as usize] * xi;
        }
        out.push(acc);
    }
    if direction == Direction::Inverse {
        let scale = 1.0 / n as f64;
        for v in &mut out {
            *v *= scale;
        }
    }
    out
}

/// exp(sign*2*pi*I*m/N) for m in 0..N.
pub(crate) fn kernel_table(n: usize, direction: Direction) -> Vec<Cplx> {
    let step = direction.sign() * std::f64::consts::TAU / n as f64;
    (0..n)
        .map(|m| {
            let (sin, cos) = (step * m as f64).sin_cos();
            Cplx::new(cos, sin)
        })
        .collect()
}

/// Fast transform, same contract as [`cdft`] for any N >= 1.
pub fn cfft(x: &[Cplx], direction: Direction) -> Vec<Cplx> {
    let mut out = x.to_vec();
    fft_unscaled_inplace(&mut out, direction);
    if direction == Direction::Inverse {
        let scale = 1.0 / x.len() as f64;
        for v in &mut out {
            *v *= scale;
        }
    }
    out
}

enum Plan {
    Radix2 {
        // exp(sign*2*pi*I*k/n) for k < n/2
        twiddles: Vec<Cplx>,
    },
    Bluestein {
        n: usize,
        // exp(sign*pi*I*k^2/n) for k < n, with k^2 reduced mod 2n in integers
        chirp: Vec<Cplx>,
        // forward FFT of the circularly wrapped conjugate chirp, length len
        filter_fft: Vec<Cplx>,
        len: usize,
        fwd: Arc<Plan>,
        inv: Arc<Plan>,
    },
}

type PlanCache = Mutex<HashMap<(usize, Direction), Arc<Plan>>>;

fn plan_cache() -> &'static PlanCache {
    static CACHE: OnceLock<PlanCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn get_plan(n: usize, direction: Direction) -> Arc<Plan> {
    if let Some(plan) = plan_cache().lock().unwrap().get(&(n, direction)) {
        return plan.clone();
    }
    // Built outside the lock: Bluestein planning recurses into power-of-two
    // plans and runs length-len FFTs of its own.
    let built = Arc::new(build_plan(n, direction));
    plan_cache()
        .lock()
        .unwrap()
        .entry((n, direction))
        .or_insert(built)
        .clone()
}

fn build_plan(n: usize, direction: Direction) -> Plan {
    if n.is_power_of_two() {
        let step = direction.sign() * std::f64::consts::TAU / n as f64;
        let twiddles = (0..n / 2)
            .map(|k| {
                let (sin, cos) = (step * k as f64).sin_cos();
                Cplx::new(cos, sin)
            })
            .collect();
        return Plan::Radix2 { twiddles };
    }
    // k^2 mod 2n stays exact in u128 for any practical n, so the chirp
    // angles never lose precision to a huge argument.
    let two_n = 2 * n as u128;
    let step = direction.sign() * std::f64::consts::PI / n as f64;
    let chirp: Vec<Cplx> = (0..n)
        .map(|k| {
            let sq = (k as u128 * k as u128 % two_n) as f64;
            let (sin, cos) = (step * sq).sin_cos();
            Cplx::new(cos, sin)
        })
        .collect();
    let len = (2 * n - 1).next_power_of_two();
    let fwd = get_plan(len, Direction::Forward);
    let inv = get_plan(len, Direction::Inverse);
    let mut filter = vec![Cplx::new(0.0, 0.0); len];
    filter[0] = chirp[0].conj();
    for k in 1..n {
        filter[k] = chirp[k].conj();
        filter[len - k] = chirp[k].conj();
    }
    radix2_inplace(&mut filter, twiddles_of(&fwd));
    Plan::Bluestein {
        n,
        chirp,
        filter_fft: filter,
        len,
        fwd,
        inv,
    }
}

fn twiddles_of(plan: &Plan) -> &[Cplx] {
    match plan {
        Plan::Radix2 { twiddles } => twiddles,
        Plan::Bluestein { .. } => unreachable!("power-of-two lengths use radix-2 plans"),
    }
}

pub(crate) fn fft_unscaled_inplace(x: &mut [Cplx], direction: Direction) {
    let n = x.len();
    if n <= 1 {
        return;
    }
    let plan = get_plan(n, direction);
    match &*plan {
        Plan::Radix2 { twiddles } => radix2_inplace(x, twiddles),
        Plan::Bluestein {
            n,
            chirp,
            filter_fft,
            len,
            fwd,
            inv,
        } => {
            let mut a = vec![Cplx::new(0.0, 0.0); *len];
            for k in 0..*n {
                a[k] = x[k] * chirp[k];
            }
            radix2_inplace(&mut a, twiddles_of(fwd));
            for (av, fv) in a.iter_mut().zip(filter_fft) {
                *av *= fv;
            }
            radix2_inplace(&mut a, twiddles_of(inv));
            let scale = 1.0 / *len as f64;
            for (k, out) in x.iter_mut().enumerate() {
                *out = a[k] * chirp[k] * scale;
            }
        }
    }
}

/// Iterative decimation-in-time radix-2; `twiddles[k]` holds the length-n
/// kernel at k < n/2 and stages index it with stride n/m.
fn radix2_inplace(x: &mut [Cplx], twiddles: &[Cplx]) {
    let n = x.len();
    debug_assert!(n.is_power_of_two() && twiddles.len() == n / 2);
    if n <= 1 {
        return;
    }
    let shift = usize::BITS - n.trailing_zeros();
    for i in 0..n {
        let j = i.reverse_bits() >> shift;
        if j > i {
            x.swap(i, j);
        }
    }
    let mut m = 2;
    while m <= n {
        let half = m / 2;
        let stride = n / m;
        let mut start = 0;
        while start < n {
            for k in 0..half {
                let t = twiddles[k * stride] * x[start + k + half];
                let u = x[start + k];
                x[start + k] = u + t;
                x[start + k + half] = u - t;
            }
            start += m;
        }
        m *= 2;
    }
}
