//! Discrete Fourier transforms of complexified-quaternion signals.
//!
//! Samples are quaternions `w + x*i + y*j + z*k` whose components are
//! complex numbers over a second, commuting unit `I`. A transform is fixed
//! by an axis `mu` (any complexified quaternion with `mu * mu = -1`), the
//! side on which the kernel multiplies, and a direction:
//!
//! ```text
//! F[u] = sum_n exp(-2*pi*mu*n*u/N) f[n]          forward, left kernel
//! f[n] = (1/N) sum_u exp(2*pi*mu*n*u/N) F[u]     inverse
//! ```
//!
//! [`cqdft`] evaluates the sums directly in quaternion arithmetic and serves
//! as the reference; [`cqfft`] reaches the same values through at most four
//! ordinary complex FFTs after a change of basis, in O(N log N). Both come
//! in 2-D row/column versions, and the FFT layer ([`cfft`](crate::cfft)) is
//! self-contained, handling any length via radix-2 and Bluestein kernels.
//!
//! ```
//! use cqft::{cqfft, max_relative_error, CQuat, Cplx, Direction, Side, Signal1d, TransformSpec};
//!
//! // an axis with complex direction: i + j + k + (j - k)I
//! let mu = CQuat::new(
//!     Cplx::new(0.0, 0.0),
//!     Cplx::new(1.0, 0.0),
//!     Cplx::new(1.0, 1.0),
//!     Cplx::new(1.0, -1.0),
//! );
//! let f = Signal1d::new(vec![CQuat::ONE, CQuat::I, CQuat::J, CQuat::K]).unwrap();
//! let spec = TransformSpec::new(mu, Side::Left, Direction::Forward);
//! let spectrum = cqfft(&f, &spec).unwrap();
//! let back = cqfft(&spectrum, &spec.reversed()).unwrap();
//! assert!(max_relative_error(f.samples(), back.samples()) < 1e-12);
//! ```

pub mod algebra;
pub mod basis;
pub mod cfft;
pub mod error;
pub mod random;
pub mod transform;

pub use algebra::{exp_axis, CQuat, Cplx, Quat, DEFAULT_TOL};
pub use basis::{complete_basis, BasisCoords, OrthonormalBasis};
pub use cfft::{cdft, cfft, BuiltinFft, Direction, FftProvider};
pub use error::{Error, Result};
pub use transform::{
    count_null_samples, cqdft, cqdft2, cqfft, cqfft2, cqfft_general, cqfft_with_provider,
    max_relative_error, sample_diagnostics, Axis, SampleDiagnostics, Side, Signal1d, Signal2d,
    TransformSpec,
};
