//! Complexified quaternion arithmetic.
//!
//! A complexified quaternion is `w + x·i + y·j + z·k` with complex
//! components. The complex unit `I` commutes with the quaternion units
//! `i`, `j`, `k`, so complex scalars move freely through products, while the
//! quaternion units keep their usual non-commutative table. The inner
//! product used throughout is the symmetric bilinear form
//! `<q,p> = w_q·w_p + x_q·x_p + y_q·y_p + z_q·z_p` with no conjugation; the
//! induced semi-norm is complex-valued and vanishes on a cone of non-zero
//! elements, so this is not a division algebra.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Complex scalar; its imaginary unit is the commuting `I`.
pub type Cplx = num_complex::Complex<f64>;

/// Default tolerance for the validation predicates. Absolute, scaled by an
/// input-magnitude factor inside each predicate.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A real quaternion, the real or imaginary part of a [`CQuat`].
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Quat {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quat {
    pub const ZERO: Quat = Quat {
        w: 0.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Quat {
        Quat { w, x, y, z }
    }

    /// Euclidean inner product of the four components.
    pub fn dot(self, other: Quat) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Quaternion norm `<q,q>`, the sum of squared components.
    pub fn norm_sqr(self) -> f64 {
        self.dot(self)
    }

    pub fn is_zero(self) -> bool {
        self.w == 0.0 && self.x == 0.0 && self.y == 0.0 && self.z == 0.0
    }

    pub fn is_finite(self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Quat {
    type Output = Quat;
    fn add(self, o: Quat) -> Quat {
        Quat::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quat {
    type Output = Quat;
    fn sub(self, o: Quat) -> Quat {
        Quat::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Quat {
    type Output = Quat;
    fn mul(self, s: f64) -> Quat {
        Quat::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

/// A complexified quaternion `w + x·i + y·j + z·k` with complex components.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct CQuat {
    pub w: Cplx,
    pub x: Cplx,
    pub y: Cplx,
    pub z: Cplx,
}

const C_ZERO: Cplx = Cplx::new(0.0, 0.0);
const C_ONE: Cplx = Cplx::new(1.0, 0.0);

impl CQuat {
    pub const ZERO: CQuat = CQuat {
        w: C_ZERO,
        x: C_ZERO,
        y: C_ZERO,
        z: C_ZERO,
    };
    pub const ONE: CQuat = CQuat {
        w: C_ONE,
        x: C_ZERO,
        y: C_ZERO,
        z: C_ZERO,
    };
    /// Quaternion unit `i` (not the commuting complex unit `I`).
    pub const I: CQuat = CQuat {
        w: C_ZERO,
        x: C_ONE,
        y: C_ZERO,
        z: C_ZERO,
    };
    /// Quaternion unit `j`.
    pub const J: CQuat = CQuat {
        w: C_ZERO,
        x: C_ZERO,
        y: C_ONE,
        z: C_ZERO,
    };
    /// Quaternion unit `k`.
    pub const K: CQuat = CQuat {
        w: C_ZERO,
        x: C_ZERO,
        y: C_ZERO,
        z: C_ONE,
    };

    pub fn new(w: Cplx, x: Cplx, y: Cplx, z: Cplx) -> CQuat {
        CQuat { w, x, y, z }
    }

    /// A real quaternion embedded into the complexified algebra.
    pub fn from_reals(w: f64, x: f64, y: f64, z: f64) -> CQuat {
        CQuat::new(
            Cplx::new(w, 0.0),
            Cplx::new(x, 0.0),
            Cplx::new(y, 0.0),
            Cplx::new(z, 0.0),
        )
    }

    /// A complex scalar embedded into the algebra (zero vector part).
    pub fn scalar(c: Cplx) -> CQuat {
        CQuat::new(c, C_ZERO, C_ZERO, C_ZERO)
    }

    /// Reassemble `re + im·I` from real and imaginary quaternion parts.
    pub fn from_parts(re: Quat, im: Quat) -> CQuat {
        CQuat::new(
            Cplx::new(re.w, im.w),
            Cplx::new(re.x, im.x),
            Cplx::new(re.y, im.y),
            Cplx::new(re.z, im.z),
        )
    }

    /// Componentwise real part, a real quaternion.
    pub fn re_part(self) -> Quat {
        Quat::new(self.w.re, self.x.re, self.y.re, self.z.re)
    }

    /// Componentwise imaginary part, a real quaternion.
    pub fn im_part(self) -> Quat {
        Quat::new(self.w.im, self.x.im, self.y.im, self.z.im)
    }

    /// The same value with its scalar component zeroed.
    pub fn vector_part(self) -> CQuat {
        CQuat::new(C_ZERO, self.x, self.y, self.z)
    }

    /// Quaternion conjugate `w - x·i - y·j - z·k`. Complex components are
    /// untouched; `(qp)* = p*·q*`.
    pub fn quat_conj(self) -> CQuat {
        CQuat::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Complex conjugate of each component, i.e. `Re(q) - Im(q)·I`.
    pub fn complex_conj(self) -> CQuat {
        CQuat::new(self.w.conj(), self.x.conj(), self.y.conj(), self.z.conj())
    }

    /// Bilinear inner product `<q,p>`; symmetric, complex-valued, no
    /// conjugation, so not positive definite.
    pub fn inner(self, other: CQuat) -> Cplx {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Semi-norm `<q,q>`. Splits as
    /// `(|Re q| - |Im q|) + 2<Re q, Im q>·I` in terms of the real-quaternion
    /// norms and inner product of the two parts.
    pub fn seminorm(self) -> Cplx {
        self.inner(self)
    }

    /// Principal complex square root of the semi-norm
    /// (Re >= 0, ties broken by Im >= 0).
    pub fn modulus(self) -> Cplx {
        principal_sqrt(self.seminorm())
    }

    /// Whether the semi-norm vanishes within `tol`, scaled by the magnitude
    /// of the value. Equivalent (within tolerance) to the real and imaginary
    /// parts being orthogonal real quaternions of equal norm.
    pub fn is_null(self, tol: f64) -> bool {
        let scale = f64::max(1.0, self.re_part().norm_sqr() + self.im_part().norm_sqr());
        self.seminorm().norm() <= tol * scale
    }

    /// Whether `q` is a root of -1: pure, with orthogonal real/imaginary
    /// vector parts whose norms differ by exactly one. Equivalently, pure
    /// with unit semi-norm, so that `q^2 = -1`.
    pub fn is_root_of_minus_one(self, tol: f64) -> bool {
        let re = self.re_part();
        let im = self.im_part();
        let re_vec = Quat::new(0.0, re.x, re.y, re.z);
        let im_vec = Quat::new(0.0, im.x, im.y, im.z);
        let scale = f64::max(1.0, re_vec.norm_sqr() + im_vec.norm_sqr());
        self.w.norm() <= tol * scale
            && re_vec.dot(im_vec).abs() <= tol * scale
            && (re_vec.norm_sqr() - im_vec.norm_sqr() - 1.0).abs() <= tol * scale
    }

    pub fn is_finite(self) -> bool {
        self.re_part().is_finite() && self.im_part().is_finite()
    }

    /// Exact zero test on all eight real components.
    pub fn is_zero(self) -> bool {
        self.re_part().is_zero() && self.im_part().is_zero()
    }

    /// Exact test for a zero imaginary part (a real quaternion value).
    pub fn is_real(self) -> bool {
        self.im_part().is_zero()
    }

    /// Exact test for a zero real part (an imaginary quaternion value).
    pub fn is_imaginary(self) -> bool {
        self.re_part().is_zero()
    }

    /// Exact test for a zero vector part (a complex scalar value).
    pub fn is_scalar(self) -> bool {
        self.x == C_ZERO && self.y == C_ZERO && self.z == C_ZERO
    }

    /// Largest absolute value among the eight real components.
    pub fn max_abs_component(self) -> f64 {
        let re = self.re_part();
        let im = self.im_part();
        [re.w, re.x, re.y, re.z, im.w, im.x, im.y, im.z]
            .iter()
            .fold(0.0_f64, |m, c| m.max(c.abs()))
    }
}

impl Add for CQuat {
    type Output = CQuat;
    fn add(self, o: CQuat) -> CQuat {
        CQuat::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for CQuat {
    type Output = CQuat;
    fn sub(self, o: CQuat) -> CQuat {
        CQuat::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for CQuat {
    type Output = CQuat;
    fn neg(self) -> CQuat {
        CQuat::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for CQuat {
    type Output = CQuat;
    /// Hamilton product with complex coefficients: associative,
    /// non-commutative, with `I` commuting through every factor.
    fn mul(self, o: CQuat) -> CQuat {
        CQuat::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

impl Mul<Cplx> for CQuat {
    type Output = CQuat;
    fn mul(self, s: Cplx) -> CQuat {
        CQuat::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<CQuat> for Cplx {
    type Output = CQuat;
    fn mul(self, q: CQuat) -> CQuat {
        q * self
    }
}

impl Mul<f64> for CQuat {
    type Output = CQuat;
    fn mul(self, s: f64) -> CQuat {
        CQuat::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

/// `cos(theta) + axis·sin(theta)` for a validated root of -1, the transform
/// kernel evaluated at one angle. The result always has unit semi-norm.
pub fn exp_axis(axis: CQuat, theta: f64) -> Result<CQuat> {
    if !axis.is_root_of_minus_one(DEFAULT_TOL) {
        return Err(Error::InvalidAxis);
    }
    Ok(exp_axis_unchecked(axis, theta))
}

pub(crate) fn exp_axis_unchecked(axis: CQuat, theta: f64) -> CQuat {
    let (sin, cos) = theta.sin_cos();
    CQuat::scalar(Cplx::new(cos, 0.0)) + axis * sin
}

/// Principal complex square root: result has Re >= 0, and Im >= 0 whenever
/// Re is zero.
pub(crate) fn principal_sqrt(z: Cplx) -> Cplx {
    let r = z.sqrt();
    if r.re < 0.0 || (r.re == 0.0 && r.im < 0.0) {
        Cplx::new(-r.re, -r.im)
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Cplx {
        Cplx::new(re, im)
    }

    /// The worked axis `i + j + k + (j - k)I`.
    fn example_axis() -> CQuat {
        CQuat::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(1.0, -1.0))
    }

    fn approx_c(a: Cplx, b: Cplx, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    fn approx_q(a: CQuat, b: CQuat, tol: f64) -> bool {
        (a - b).max_abs_component() <= tol
    }

    fn arb_cplx() -> impl Strategy<Value = Cplx> {
        (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(re, im)| Cplx::new(re, im))
    }

    fn arb_cquat() -> impl Strategy<Value = CQuat> {
        (arb_cplx(), arb_cplx(), arb_cplx(), arb_cplx())
            .prop_map(|(w, x, y, z)| CQuat::new(w, x, y, z))
    }

    #[test]
    fn unit_multiplication_table() {
        assert_eq!(CQuat::I * CQuat::J, CQuat::K);
        assert_eq!(CQuat::J * CQuat::K, CQuat::I);
        assert_eq!(CQuat::K * CQuat::I, CQuat::J);
        assert_eq!(CQuat::J * CQuat::I, -CQuat::K);
        assert_eq!(CQuat::I * CQuat::I, -CQuat::ONE);
    }

    #[test]
    fn example_axis_squares_to_minus_one() {
        let mu = example_axis();
        assert!(approx_q(mu * mu, -CQuat::ONE, 1e-15));
    }

    #[test]
    fn null_square_expands_by_hand() {
        // (1 + Ii)^2 = 1 + 2Ii + I^2 i^2 = 2 + 2Ii
        let q = CQuat::new(c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0));
        let expect = CQuat::new(c(2.0, 0.0), c(0.0, 2.0), c(0.0, 0.0), c(0.0, 0.0));
        assert_eq!(q * q, expect);
    }

    #[test]
    fn quat_conj_fixes_scalars_and_flips_vectors() {
        let q = CQuat::ONE + CQuat::I;
        assert_eq!(q.quat_conj(), CQuat::ONE - CQuat::I);
        let s = CQuat::from_reals(3.0, 0.0, 0.0, 0.0);
        assert_eq!(s.quat_conj(), s);
    }

    #[test]
    fn complex_conj_examples() {
        let q = CQuat::new(c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
        let expect = CQuat::new(c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, -1.0));
        assert_eq!(q.complex_conj(), expect);
        let p = CQuat::from_reals(0.0, 5.0, 0.0, 0.0);
        assert_eq!(p.complex_conj(), p);
    }

    #[test]
    fn part_extraction() {
        // i + (j - k)I
        let q = CQuat::new(c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0));
        assert_eq!(q.re_part(), Quat::new(0.0, 1.0, 0.0, 0.0));
        assert_eq!(q.im_part(), Quat::new(0.0, 0.0, 1.0, -1.0));
        assert_eq!(CQuat::from_parts(q.re_part(), q.im_part()), q);
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(CQuat::I.inner(CQuat::J), c(0.0, 0.0));
        let mu = example_axis();
        assert!(approx_c(mu.inner(mu), c(1.0, 0.0), 1e-15));
        let q = CQuat::new(c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0));
        assert_eq!(q.inner(q), c(0.0, 0.0));
    }

    #[test]
    fn seminorm_examples() {
        let q = CQuat::new(c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0));
        assert_eq!(q.seminorm(), c(0.0, 0.0));
        assert!(approx_c(example_axis().seminorm(), c(1.0, 0.0), 1e-15));
    }

    #[test]
    fn modulus_examples() {
        assert_eq!(CQuat::from_reals(2.0, 0.0, 0.0, 0.0).modulus(), c(2.0, 0.0));
        let null = CQuat::new(c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0));
        assert_eq!(null.modulus(), c(0.0, 0.0));
    }

    #[test]
    fn principal_sqrt_branch() {
        assert_eq!(principal_sqrt(c(4.0, 0.0)), c(2.0, 0.0));
        // Negative real axis maps to the non-negative imaginary axis.
        let r = principal_sqrt(c(-4.0, 0.0));
        assert!(approx_c(r, c(0.0, 2.0), 1e-15));
        let r = principal_sqrt(c(-4.0, -0.0));
        assert!(r.im >= 0.0, "branch must pick Im >= 0 on the cut, got {r}");
    }

    #[test]
    fn null_detection() {
        let q = CQuat::new(c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0));
        assert!(q.is_null(1e-12));
        assert!(!example_axis().is_null(1e-12));
        // j + kI: j^2 + (kI)^2 = -1 + 1 = 0
        let p = CQuat::new(c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
        assert!(p.is_null(1e-12));
    }

    #[test]
    fn root_validation() {
        assert!(CQuat::I.is_root_of_minus_one(1e-12));
        assert!(example_axis().is_root_of_minus_one(1e-12));
        // i + jI is null, not a root: |Re| - |Im| = 0 and (i + jI)^2 = 0.
        let q = CQuat::new(c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0));
        assert!(!q.is_root_of_minus_one(1e-12));
        assert_eq!(q * q, CQuat::ZERO);
        // Not pure.
        assert!(!(CQuat::ONE + CQuat::I).is_root_of_minus_one(1e-12));
    }

    #[test]
    fn exp_axis_examples() {
        let mu = example_axis();
        assert!(approx_q(exp_axis(mu, 0.0).unwrap(), CQuat::ONE, 1e-15));
        assert!(approx_q(
            exp_axis(mu, std::f64::consts::FRAC_PI_2).unwrap(),
            mu,
            1e-15
        ));
        assert_eq!(
            exp_axis(CQuat::ONE + CQuat::I, 1.0),
            Err(Error::InvalidAxis)
        );
    }

    #[test]
    fn exp_axis_is_additive_in_angle() {
        let mu = example_axis();
        let mut rng_state = 0x1234_5678_u64;
        let mut next = move || {
            // xorshift, plenty for angle sampling
            rng_state ^= rng_state << 13;
            rng_state ^= rng_state >> 7;
            rng_state ^= rng_state << 17;
            (rng_state >> 11) as f64 / (1u64 << 53) as f64 * 12.0 - 6.0
        };
        for _ in 0..100 {
            let (a, b) = (next(), next());
            let lhs = exp_axis(mu, a).unwrap() * exp_axis(mu, b).unwrap();
            let rhs = exp_axis(mu, a + b).unwrap();
            assert!(approx_q(lhs, rhs, 1e-12));
            assert!(approx_c(
                exp_axis(mu, a).unwrap().seminorm(),
                c(1.0, 0.0),
                1e-12
            ));
        }
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(q in arb_cquat(), p in arb_cquat(), r in arb_cquat()) {
            let lhs = (q * p) * r;
            let rhs = q * (p * r);
            let scale = lhs.max_abs_component().max(1.0);
            prop_assert!((lhs - rhs).max_abs_component() <= 1e-12 * scale);
        }

        #[test]
        fn complex_unit_commutes(q in arb_cquat(), p in arb_cquat()) {
            let i = Cplx::new(0.0, 1.0);
            let a = (q * i) * p;
            let b = q * (p * i);
            let d = (q * p) * i;
            let scale = d.max_abs_component().max(1.0);
            prop_assert!((a - d).max_abs_component() <= 1e-12 * scale);
            prop_assert!((b - d).max_abs_component() <= 1e-12 * scale);
        }

        #[test]
        fn seminorm_is_multiplicative(q in arb_cquat(), p in arb_cquat()) {
            let lhs = (q * p).seminorm();
            let rhs = q.seminorm() * p.seminorm();
            let scale = rhs.norm().max(1.0);
            prop_assert!((lhs - rhs).norm() <= 1e-10 * scale);
        }

        #[test]
        fn seminorm_splits_into_parts(q in arb_cquat()) {
            let re = q.re_part();
            let im = q.im_part();
            let expect = Cplx::new(re.norm_sqr() - im.norm_sqr(), 2.0 * re.dot(im));
            let scale = expect.norm().max(1.0);
            prop_assert!((q.seminorm() - expect).norm() <= 1e-12 * scale);
        }

        #[test]
        fn pure_square_law(q in arb_cquat()) {
            let v = q.vector_part();
            let lhs = v * v;
            let rhs = -CQuat::scalar(v.seminorm());
            let scale = rhs.max_abs_component().max(1.0);
            prop_assert!((lhs - rhs).max_abs_component() <= 1e-12 * scale);
        }

        #[test]
        fn quat_conj_reverses_products(q in arb_cquat(), p in arb_cquat()) {
            let lhs = (q * p).quat_conj();
            let rhs = p.quat_conj() * q.quat_conj();
            let scale = lhs.max_abs_component().max(1.0);
            prop_assert!((lhs - rhs).max_abs_component() <= 1e-12 * scale);
        }

        #[test]
        fn complex_conj_matches_part_split(q in arb_cquat()) {
            let rebuilt = CQuat::from_parts(q.re_part(), -q.im_part());
            prop_assert_eq!(q.complex_conj(), rebuilt);
        }

        #[test]
        fn parts_round_trip(q in arb_cquat()) {
            prop_assert_eq!(CQuat::from_parts(q.re_part(), q.im_part()), q);
        }

        #[test]
        fn modulus_squares_back(q in arb_cquat()) {
            let m = q.modulus();
            let scale = q.seminorm().norm().max(1.0);
            prop_assert!((m * m - q.seminorm()).norm() <= 1e-10 * scale);
            prop_assert!(m.re > 0.0 || (m.re == 0.0 && m.im >= 0.0));
        }
    }

    #[test]
    fn constructed_orthogonal_equal_norm_pairs_are_null() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
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
            if a.norm_sqr() < 1e-2 || b.norm_sqr() < 1e-2 {
                continue;
            }
            b = b - a * (a.dot(b) / a.norm_sqr());
            if b.norm_sqr() < 1e-6 {
                continue;
            }
            b = b * (a.norm_sqr() / b.norm_sqr()).sqrt();
            let q = CQuat::from_parts(a, b);
            assert!(q.is_null(1e-12), "expected null: {q:?}");
        }
    }
}
