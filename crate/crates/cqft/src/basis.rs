//! Orthonormal basis completion for a transform axis.
//!
//! Given a validated axis `mu` this module finds two more unit pure
//! complexified quaternions `nu`, `xi` with all pairwise bilinear inner
//! products zero and `mu * nu = xi`. The rows of the resulting 3x3 complex
//! matrix are the (i, j, k) components of `mu`, `nu`, `xi`; it is orthogonal
//! under the plain (unconjugated) transpose, so the transpose inverts the
//! coordinate change.

use crate::algebra::{principal_sqrt, CQuat, Cplx, DEFAULT_TOL};
use crate::error::{Error, Result};

/// Right-handed orthonormal triple of unit pure complexified quaternions.
#[derive(Clone, Copy, Debug)]
pub struct OrthonormalBasis {
    pub mu: CQuat,
    pub nu: CQuat,
    pub xi: CQuat,
    /// Rows are the (i, j, k) components of `mu`, `nu`, `xi`.
    pub matrix: [[Cplx; 3]; 3],
}

/// Coordinates of one sample in the basis (1, mu, nu, xi).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BasisCoords {
    pub w: Cplx,
    pub xp: Cplx,
    pub yp: Cplx,
    pub zp: Cplx,
}

fn vec3(q: CQuat) -> [Cplx; 3] {
    [q.x, q.y, q.z]
}

fn pure(v: [Cplx; 3]) -> CQuat {
    CQuat::new(Cplx::new(0.0, 0.0), v[0], v[1], v[2])
}

/// Extend a validated axis to a full orthonormal basis.
///
/// Each of the units i, j, k is projected onto the orthogonal complement of
/// `mu`; the candidate whose projection has the largest semi-norm magnitude
/// is normalized into `nu` (first match wins on ties), and `xi = mu * nu`.
/// A near-null best projection is reported as `DegenerateBasis` rather than
/// patched over, since the division by its square root would be unstable.
pub fn complete_basis(mu: CQuat, tol: f64) -> Result<OrthonormalBasis> {
    if !mu.is_root_of_minus_one(tol) {
        return Err(Error::InvalidAxis);
    }
    let mu = pure(vec3(mu));
    let candidates = [CQuat::I, CQuat::J, CQuat::K];
    let mut best: Option<(CQuat, Cplx)> = None;
    for c in candidates {
        let p = c - mu * c.inner(mu);
        let s = p.seminorm();
        if best.is_none_or(|(_, bs)| s.norm() > bs.norm()) {
            best = Some((p, s));
        }
    }
    let (p, s) = best.unwrap();
    if s.norm() <= tol {
        return Err(Error::DegenerateBasis);
    }
    let nu = p * (Cplx::new(1.0, 0.0) / principal_sqrt(s));
    let xi = mu * nu;
    Ok(OrthonormalBasis {
        mu,
        nu,
        xi,
        matrix: [vec3(mu), vec3(nu), vec3(xi)],
    })
}

/// Extend with the default tolerance.
pub fn complete_basis_default(mu: CQuat) -> Result<OrthonormalBasis> {
    complete_basis(mu, DEFAULT_TOL)
}

impl OrthonormalBasis {
    /// Resolve a sample onto (1, mu, nu, xi): the scalar part carries over
    /// and the vector part is multiplied by the basis matrix.
    pub fn to_basis(&self, q: CQuat) -> BasisCoords {
        let v = vec3(q);
        let m = &self.matrix;
        let row = |r: &[Cplx; 3]| r[0] * v[0] + r[1] * v[1] + r[2] * v[2];
        BasisCoords {
            w: q.w,
            xp: row(&m[0]),
            yp: row(&m[1]),
            zp: row(&m[2]),
        }
    }

    /// Expand basis coordinates back onto (1, i, j, k) via the transposed
    /// matrix; exact inverse of `to_basis` up to rounding.
    pub fn from_basis(&self, c: BasisCoords) -> CQuat {
        let m = &self.matrix;
        let col = |k: usize| m[0][k] * c.xp + m[1][k] * c.yp + m[2][k] * c.zp;
        CQuat::new(c.w, col(0), col(1), col(2))
    }
}
