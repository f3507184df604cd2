//! Fourier transforms of complexified-quaternion signals.
//!
//! Two interchangeable engines compute the same pair
//!
//! ```text
//! F[u] = sum_n exp(-2*pi*mu*n*u/N) f[n]        (forward, left kernel)
//! f[n] = (1/N) sum_u exp(+2*pi*mu*n*u/N) F[u]  (inverse)
//! ```
//!
//! for a transform axis `mu` (a complexified-quaternion root of -1), with a
//! right-kernel variant placing the exponential after the signal. `cqdft`
//! evaluates the sums directly in quaternion arithmetic, O(N^2); `cqfft`
//! factors the transform through an orthonormal basis (mu, nu, xi) into four
//! ordinary complex FFTs, with two-FFT reductions for purely real or purely
//! imaginary signals and a single-FFT path for scalar signals under the
//! degenerate axis `I`. Two-dimensional versions transform rows then
//! columns with the same axis and side.

use crate::algebra::{CQuat, Cplx, Quat, DEFAULT_TOL};
use crate::basis::complete_basis;
use crate::cfft::{kernel_table, BuiltinFft, Direction, FftProvider};
use crate::error::{Error, Result};

/// Which side of the signal the exponential kernel multiplies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Transform axis: a validated root of -1, or the commuting complex unit
/// `I`, which is usable only on signals with no vector part.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Axis {
    Root(CQuat),
    DegenerateI,
}

/// Full description of one transform: axis, kernel side, direction, and the
/// tolerance used to validate the axis.
#[derive(Clone, Copy, Debug)]
pub struct TransformSpec {
    pub axis: Axis,
    pub side: Side,
    pub direction: Direction,
    pub tol: f64,
}

impl TransformSpec {
    pub fn new(axis: CQuat, side: Side, direction: Direction) -> TransformSpec {
        TransformSpec {
            axis: Axis::Root(axis),
            side,
            direction,
            tol: DEFAULT_TOL,
        }
    }

    /// Spec for the degenerate axis `I`.
    pub fn degenerate(side: Side, direction: Direction) -> TransformSpec {
        TransformSpec {
            axis: Axis::DegenerateI,
            side,
            direction,
            tol: DEFAULT_TOL,
        }
    }

    pub fn with_tol(mut self, tol: f64) -> TransformSpec {
        self.tol = tol;
        self
    }

    /// Same axis and side, opposite direction.
    pub fn reversed(mut self) -> TransformSpec {
        self.direction = self.direction.flip();
        self
    }

    /// Validate the axis, returning its exact pure part for kernel use, or
    /// `None` for the degenerate axis. All engines transform with the
    /// purified axis so that a marginally impure input (within tol) cannot
    /// make them disagree.
    fn checked_axis(&self) -> Result<Option<CQuat>> {
        match self.axis {
            Axis::DegenerateI => Ok(None),
            Axis::Root(mu) => {
                if !mu.is_root_of_minus_one(self.tol) {
                    return Err(Error::InvalidAxis);
                }
                Ok(Some(mu.vector_part()))
            }
        }
    }
}

/// Non-empty 1-D signal of finite complexified quaternions.
#[derive(Clone, Debug, PartialEq)]
pub struct Signal1d {
    samples: Vec<CQuat>,
}

impl Signal1d {
    pub fn new(samples: Vec<CQuat>) -> Result<Signal1d> {
        if samples.is_empty() {
            return Err(Error::EmptySignal);
        }
        if samples.iter().any(|q| !q.is_finite()) {
            return Err(Error::NonFiniteSample);
        }
        Ok(Signal1d { samples })
    }

    fn from_output(samples: Vec<CQuat>) -> Signal1d {
        Signal1d { samples }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn samples(&self) -> &[CQuat] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<CQuat> {
        self.samples
    }
}

/// Rectangular 2-D signal, row-major, all samples finite.
#[derive(Clone, Debug, PartialEq)]
pub struct Signal2d {
    rows: usize,
    cols: usize,
    samples: Vec<CQuat>,
}

impl Signal2d {
    pub fn new(rows: usize, cols: usize, samples: Vec<CQuat>) -> Result<Signal2d> {
        if rows == 0 || cols == 0 || samples.is_empty() {
            return Err(Error::EmptySignal);
        }
        if samples.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                got: samples.len(),
            });
        }
        if samples.iter().any(|q| !q.is_finite()) {
            return Err(Error::NonFiniteSample);
        }
        Ok(Signal2d {
            rows,
            cols,
            samples,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn samples(&self) -> &[CQuat] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<CQuat> {
        self.samples
    }

    pub fn get(&self, r: usize, c: usize) -> CQuat {
        self.samples[r * self.cols + c]
    }

    pub fn transpose(&self) -> Signal2d {
        let mut out = Vec::with_capacity(self.samples.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                out.push(self.get(r, c));
            }
        }
        Signal2d {
            rows: self.cols,
            cols: self.rows,
            samples: out,
        }
    }
}

/// Reference transform: direct evaluation of the defining sums in
/// complexified-quaternion arithmetic. Ground truth for `cqfft`.
pub fn cqdft(f: &Signal1d, spec: &TransformSpec) -> Result<Signal1d> {
    direct_1d(f.samples(), spec).map(Signal1d::from_output)
}

/// Fast transform via four complex FFTs (fewer on the reduction paths).
/// Matches `cqdft` up to rounding.
pub fn cqfft(f: &Signal1d, spec: &TransformSpec) -> Result<Signal1d> {
    fast_1d(f.samples(), spec, &BuiltinFft).map(Signal1d::from_output)
}

/// `cqfft` with a caller-supplied complex FFT engine.
pub fn cqfft_with_provider(
    f: &Signal1d,
    spec: &TransformSpec,
    provider: &dyn FftProvider,
) -> Result<Signal1d> {
    fast_1d(f.samples(), spec, provider).map(Signal1d::from_output)
}

/// The four-FFT path with reduction dispatch disabled. Same contract as
/// `cqfft`; exists so the reduction shortcuts can be checked against the
/// full factorization from outside the crate. The degenerate axis has no
/// four-FFT form and keeps its scalar path.
pub fn cqfft_general(f: &Signal1d, spec: &TransformSpec) -> Result<Signal1d> {
    let out = match spec.checked_axis()? {
        None => fast_scalar(f.samples(), spec, &BuiltinFft)?,
        Some(mu) => fast_general(f.samples(), mu, spec, &BuiltinFft)?,
    };
    Ok(Signal1d::from_output(out))
}

/// 2-D reference transform: `cqdft` along rows, then along columns.
pub fn cqdft2(f: &Signal2d, spec: &TransformSpec) -> Result<Signal2d> {
    transform_2d(f, spec, &|row, spec| direct_1d(row, spec))
}

/// 2-D fast transform: `cqfft` along rows, then along columns. The inverse
/// picks up 1/R and 1/C from the two passes, 1/(RC) total.
pub fn cqfft2(f: &Signal2d, spec: &TransformSpec) -> Result<Signal2d> {
    transform_2d(f, spec, &|row, spec| fast_1d(row, spec, &BuiltinFft))
}

type RowEngine<'a> = &'a dyn Fn(&[CQuat], &TransformSpec) -> Result<Vec<CQuat>>;

fn transform_2d(f: &Signal2d, spec: &TransformSpec, engine: RowEngine) -> Result<Signal2d> {
    let (rows, cols) = (f.rows, f.cols);
    let mut grid = f.samples.clone();
    for r in 0..rows {
        let out = engine(&grid[r * cols..(r + 1) * cols], spec)?;
        grid[r * cols..(r + 1) * cols].copy_from_slice(&out);
    }
    let mut col_buf = Vec::with_capacity(rows);
    for c in 0..cols {
        col_buf.clear();
        col_buf.extend((0..rows).map(|r| grid[r * cols + c]));
        let out = engine(&col_buf, spec)?;
        for (r, v) in out.into_iter().enumerate() {
            grid[r * cols + c] = v;
        }
    }
    Ok(Signal2d {
        rows,
        cols,
        samples: grid,
    })
}

fn direct_1d(f: &[CQuat], spec: &TransformSpec) -> Result<Vec<CQuat>> {
    let n = f.len();
    let mu = match spec.checked_axis()? {
        None => return direct_scalar(f, spec),
        Some(mu) => mu,
    };
    let sign = spec.direction.sign();
    let step = sign * std::f64::consts::TAU / n as f64;
    let kernel: Vec<CQuat> = (0..n)
        .map(|m| {
            let (sin, cos) = (step * m as f64).sin_cos();
            CQuat::scalar(Cplx::new(cos, 0.0)) + mu * sin
        })
        .collect();
    let mut out = Vec::with_capacity(n);
    for u in 0..n {
        let mut acc = CQuat::ZERO;
        for (i, &fi) in f.iter().enumerate() {
            let e = kernel[(i as u128 * u as u128 % n as u128) as usize];
            acc = acc
                + match spec.side {
                    Side::Left => e * fi,
                    Side::Right => fi * e,
                };
        }
        out.push(acc);
    }
    scale_if_inverse(&mut out, spec.direction);
    Ok(out)
}

/// Degenerate-axis path shared by both engines' entry checks: the kernel is
/// a complex scalar, so the transform is the ordinary complex DFT of the
/// scalar components. Signals with any vector part are rejected.
fn require_scalar(f: &[CQuat]) -> Result<()> {
    if f.iter().all(|q| q.is_scalar()) {
        Ok(())
    } else {
        Err(Error::DegenerateAxisMisuse)
    }
}

fn direct_scalar(f: &[CQuat], spec: &TransformSpec) -> Result<Vec<CQuat>> {
    require_scalar(f)?;
    let n = f.len();
    let kernel = kernel_table(n, spec.direction);
    let mut out = Vec::with_capacity(n);
    for u in 0..n {
        let mut acc = Cplx::new(0.0, 0.0);
        for (i, fi) in f.iter().enumerate() {
            acc += kernel[(i as u128 * u as u128 % n as u128) as usize] * fi.w;
        }
        out.push(CQuat::scalar(acc));
    }
    scale_if_inverse(&mut out, spec.direction);
    Ok(out)
}

fn fast_1d(f: &[CQuat], spec: &TransformSpec, fft: &dyn FftProvider) -> Result<Vec<CQuat>> {
    let mu = match spec.checked_axis()? {
        None => return fast_scalar(f, spec, fft),
        Some(mu) => mu,
    };
    // Reduction dispatch is exact so that a nominally real signal takes the
    // same code path no matter how it was produced.
    if f.iter().all(|q| q.is_real()) {
        return Ok(fast_real(f, mu, spec, fft, false));
    }
    if f.iter().all(|q| q.is_imaginary()) {
        return Ok(fast_real(f, mu, spec, fft, true));
    }
    fast_general(f, mu, spec, fft)
}

fn fast_scalar(f: &[CQuat], spec: &TransformSpec, fft: &dyn FftProvider) -> Result<Vec<CQuat>> {
    require_scalar(f)?;
    let mut buf: Vec<Cplx> = f.iter().map(|q| q.w).collect();
    fft.fft_unscaled(&mut buf, spec.direction);
    let mut out: Vec<CQuat> = buf.into_iter().map(CQuat::scalar).collect();
    scale_if_inverse(&mut out, spec.direction);
    Ok(out)
}

/// General path: resolve samples onto (1, mu, nu, xi), run four complex
/// FFTs, reassemble. The coordinates split into four real-coefficient
/// combinations of {1, mu}, each isomorphic to the complex numbers with mu
/// in the role of the imaginary unit; the kernel lives in the same
/// commutative subalgebra, so each piece transforms independently. For the
/// right kernel the nu-pair picks up the opposite exponent sign because nu
/// anticommutes with mu: moving nu past the kernel conjugates it.
pub(crate) fn fast_general(
    f: &[CQuat],
    mu: CQuat,
    spec: &TransformSpec,
    fft: &dyn FftProvider,
) -> Result<Vec<CQuat>> {
    let n = f.len();
    let basis = complete_basis(mu, spec.tol)?;
    let mut c1 = Vec::with_capacity(n);
    let mut c2 = Vec::with_capacity(n);
    let mut c3 = Vec::with_capacity(n);
    let mut c4 = Vec::with_capacity(n);
    for &q in f {
        let co = basis.to_basis(q);
        c1.push(Cplx::new(co.w.re, co.xp.re));
        c2.push(Cplx::new(co.w.im, co.xp.im));
        c3.push(Cplx::new(co.yp.re, co.zp.re));
        c4.push(Cplx::new(co.yp.im, co.zp.im));
    }
    let pair_dir = match spec.side {
        Side::Left => spec.direction,
        Side::Right => spec.direction.flip(),
    };
    fft.fft_unscaled(&mut c1, spec.direction);
    fft.fft_unscaled(&mut c2, spec.direction);
    fft.fft_unscaled(&mut c3, pair_dir);
    fft.fft_unscaled(&mut c4, pair_dir);
    let mut out = Vec::with_capacity(n);
    for u in 0..n {
        let coords = crate::basis::BasisCoords {
            w: Cplx::new(c1[u].re, c2[u].re),
            xp: Cplx::new(c1[u].im, c2[u].im),
            yp: Cplx::new(c3[u].re, c4[u].re),
            zp: Cplx::new(c3[u].im, c4[u].im),
        };
        out.push(basis.from_basis(coords));
    }
    scale_if_inverse(&mut out, spec.direction);
    Ok(out)
}

/// Reduction for purely real (or, with `imaginary` set, purely imaginary)
/// signals: two packed complex FFTs recover the cosine and sine sums
///
/// ```text
/// C[u] = sum_n cos(2*pi*n*u/N) f[n],  S[u] = sum_n sin(2*pi*n*u/N) f[n]
/// ```
///
/// componentwise, and the spectrum is C -/+ mu*S (left kernel, forward /
/// inverse) or C -/+ S*mu (right kernel). An imaginary signal I*g
/// transforms as I times the transform of g.
pub(crate) fn fast_real(
    f: &[CQuat],
    mu: CQuat,
    spec: &TransformSpec,
    fft: &dyn FftProvider,
    imaginary: bool,
) -> Vec<CQuat> {
    let n = f.len();
    let part = |q: &CQuat| if imaginary { q.im_part() } else { q.re_part() };
    let mut g1: Vec<Cplx> = f.iter().map(|q| Cplx::new(part(q).w, part(q).x)).collect();
    let mut g2: Vec<Cplx> = f.iter().map(|q| Cplx::new(part(q).y, part(q).z)).collect();
    fft.fft_unscaled(&mut g1, Direction::Forward);
    fft.fft_unscaled(&mut g2, Direction::Forward);
    let mut out = Vec::with_capacity(n);
    for u in 0..n {
        let m = (n - u) % n;
        let cos_part = Quat::new(
            (g1[u].re + g1[m].re) / 2.0,
            (g1[u].im + g1[m].im) / 2.0,
            (g2[u].re + g2[m].re) / 2.0,
            (g2[u].im + g2[m].im) / 2.0,
        );
        let sin_part = Quat::new(
            (g1[m].im - g1[u].im) / 2.0,
            (g1[u].re - g1[m].re) / 2.0,
            (g2[m].im - g2[u].im) / 2.0,
            (g2[u].re - g2[m].re) / 2.0,
        );
        let c = CQuat::from_parts(cos_part, Quat::ZERO);
        let s = CQuat::from_parts(sin_part, Quat::ZERO);
        let signed_s = match spec.direction {
            Direction::Forward => -s,
            Direction::Inverse => s,
        };
        let q = match spec.side {
            Side::Left => c + mu * signed_s,
            Side::Right => c + signed_s * mu,
        };
        out.push(if imaginary {
            q * Cplx::new(0.0, 1.0)
        } else {
            q
        });
    }
    scale_if_inverse(&mut out, spec.direction);
    out
}

fn scale_if_inverse(out: &mut [CQuat], direction: Direction) {
    if direction == Direction::Inverse {
        let scale = 1.0 / out.len() as f64;
        for v in out.iter_mut() {
            *v = *v * scale;
        }
    }
}

/// Number of non-zero samples whose semi-norm vanishes within `tol`.
/// Diagnostic only; transforms proceed regardless.
pub fn count_null_samples(samples: &[CQuat], tol: f64) -> usize {
    samples
        .iter()
        .filter(|q| !q.is_zero() && q.is_null(tol))
        .count()
}

/// Summary of a signal's null structure.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleDiagnostics {
    pub total: usize,
    /// Samples that are exactly zero.
    pub zero_count: usize,
    /// Non-zero samples whose semi-norm vanishes within tolerance.
    pub null_count: usize,
    /// Smallest scaled semi-norm magnitude over non-zero samples, with its
    /// index; the same ratio `is_null` compares against the tolerance.
    pub min_ratio: Option<(usize, f64)>,
}

pub fn sample_diagnostics(samples: &[CQuat], tol: f64) -> SampleDiagnostics {
    let mut zero_count = 0;
    let mut null_count = 0;
    let mut min_ratio: Option<(usize, f64)> = None;
    for (i, q) in samples.iter().enumerate() {
        if q.is_zero() {
            zero_count += 1;
            continue;
        }
        if q.is_null(tol) {
            null_count += 1;
        }
        let scale = f64::max(1.0, q.re_part().norm_sqr() + q.im_part().norm_sqr());
        let ratio = q.seminorm().norm() / scale;
        if min_ratio.is_none_or(|(_, r)| ratio < r) {
            min_ratio = Some((i, ratio));
        }
    }
    SampleDiagnostics {
        total: samples.len(),
        zero_count,
        null_count,
        min_ratio,
    }
}

/// Largest componentwise absolute difference between two equal-length
/// signals, divided by the largest component magnitude across both.
pub fn max_relative_error(a: &[CQuat], b: &[CQuat]) -> f64 {
    assert_eq!(a.len(), b.len(), "signals must have equal length");
    let mut diff = 0.0_f64;
    let mut scale = 0.0_f64;
    for (x, y) in a.iter().zip(b) {
        diff = diff.max((*x - *y).max_abs_component());
        scale = scale.max(x.max_abs_component()).max(y.max_abs_component());
    }
    diff / scale.max(1e-300)
}
