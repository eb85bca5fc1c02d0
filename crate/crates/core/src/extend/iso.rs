//! Isomorphism of extension data.
//!
//! `(rho, omega)` and `(rho', omega')` over the same `(g, h)` are isomorphic
//! iff some `xi: g -> h` satisfies
//!
//! 1. `phi_h xi = xi phi_g`,
//! 2. `rho'_x - rho_x = ad_{xi(x)}`,
//! 3. `omega' - omega = rho_x xi(y) - rho_y xi(x) + [xi x, xi y] - xi [x, y]`.
//!
//! The search is two linear solves. Condition 2 fixes `xi` up to a map
//! `c: g -> Cen(h)`; central values drop out of `[xi x, xi y]`, so 1 and 3
//! are linear in `c`.

use crate::cohom::Cochain;
use crate::error::{Error, Result};
use crate::exactla::{matrix_of, solve, vector, Matrix};
use crate::Scalar;

use super::ExtensionData;

/// The `m^2 x m` matrix sending `u` to the row-major vectorization of `ad_u`.
pub(crate) fn ad_map<F: Scalar>(h: &crate::homlie::HomLieAlgebra<F>) -> Matrix<F> {
    let m = h.dim();
    matrix_of(m * m, m, |a| h.ad_basis(a).into_vec())
}

/// `u` with `ad_u = d`, if any.
pub(crate) fn ad_preimage<F: Scalar>(ad: &Matrix<F>, d: &Matrix<F>) -> Result<Option<Vec<F>>> {
    Ok(solve(ad, d.as_slice())?.map(|s| s.particular))
}

/// The right-hand side of condition 3 for a given `xi` (an `m x n` matrix).
fn omega_shift<F: Scalar>(d: &ExtensionData<F>, xi: &Matrix<F>) -> Cochain<F> {
    let (g, h) = (d.g(), d.h());
    let (n, m) = (g.dim(), h.dim());
    let cols: Vec<Vec<F>> = (0..n).map(|i| xi.column(i)).collect();
    Cochain::from_fn(2, n, m, |t| {
        let (i, j) = (t[0], t[1]);
        let mut v = d.rho()[i].mul_vec(&cols[j]);
        v = vector::sub(&v, &d.rho()[j].mul_vec(&cols[i]));
        v = vector::add(&v, &h.br(&cols[i], &cols[j]));
        vector::sub(&v, &xi.mul_vec(g.basis_bracket(i, j)))
    })
}

/// The datum `(rho + ad_xi, omega + shift)` obtained from `d` by moving the
/// section by `xi`. It is isomorphic to `d` whenever `phi_h xi = xi phi_g`.
pub fn transport<F: Scalar>(d: &ExtensionData<F>, xi: &Matrix<F>) -> Result<ExtensionData<F>> {
    let (n, m) = (d.g().dim(), d.h().dim());
    if xi.rows() != m || xi.cols() != n {
        return Err(Error::DimensionMismatch {
            context: "transport map",
            expected: m * n,
            found: xi.rows() * xi.cols(),
        });
    }
    let rho = (0..n)
        .map(|i| &d.rho()[i] + &d.h().ad(&xi.column(i)))
        .collect();
    let omega = d.omega().add(&omega_shift(d, xi));
    ExtensionData::new(d.g().clone(), d.h().clone(), rho, omega)
}

/// Whether `xi` satisfies conditions 1–3 from `d1` to `d2`.
pub fn check_iso_witness<F: Scalar>(d1: &ExtensionData<F>, d2: &ExtensionData<F>, xi: &Matrix<F>) -> Result<bool> {
    same_pair(d1, d2)?;
    if d1.h().twist() * xi != xi * d1.g().twist() {
        return Ok(false);
    }
    Ok(transport(d1, xi)? == *d2)
}

fn same_pair<F: Scalar>(d1: &ExtensionData<F>, d2: &ExtensionData<F>) -> Result<()> {
    if d1.g() != d2.g() || d1.h() != d2.h() {
        return Err(Error::Precondition("extension data are over different (g, h)".into()));
    }
    Ok(())
}

/// A witness `xi` that `d1` and `d2` are isomorphic, or `None`.
pub fn isomorphic<F: Scalar>(d1: &ExtensionData<F>, d2: &ExtensionData<F>) -> Result<Option<Matrix<F>>> {
    same_pair(d1, d2)?;
    for d in [d1, d2] {
        let report = d.validate()?;
        if !report.is_valid() {
            return Err(Error::InvalidExtensionData(report));
        }
    }
    let (g, h) = (d1.g(), d1.h());
    let (n, m) = (g.dim(), h.dim());

    // Stage 1: xi0(e_i) with ad_{xi0(e_i)} = rho'_i - rho_i.
    let ad = ad_map(h);
    let mut xi0_cols = Vec::with_capacity(n);
    for i in 0..n {
        match ad_preimage(&ad, &(&d2.rho()[i] - &d1.rho()[i]))? {
            Some(u) => xi0_cols.push(u),
            None => return Ok(None),
        }
    }
    let xi0 = Matrix::from_columns(m, &xi0_cols);

    // Stage 2: central correction c = Z gamma, gamma an r x n matrix.
    let cen = h.center()?;
    let z = cen.basis_columns();
    let r = cen.dim();
    let (phi, psi) = (g.twist(), h.twist());
    let rhs_twist = &(&xi0 * phi) - &(psi * &xi0);
    let rhs_omega = d2.omega().sub(&d1.omega().add(&omega_shift(d1, &xi0)));
    let unknowns = r * n;
    let system = matrix_of(m * n + rhs_omega.values().len(), unknowns, |k| {
        let gamma = Matrix::from_fn(r, n, |a, b| if a * n + b == k { F::one() } else { F::zero() });
        let c = &z * &gamma;
        let mut col = (&(psi * &c) - &(&c * phi)).into_vec();
        // Central values drop out of [c x, c y], so this part is linear in c.
        col.extend(omega_shift(d1, &c).into_values());
        col
    });
    let mut rhs = rhs_twist.into_vec();
    rhs.extend(rhs_omega.into_values());
    let Some(sol) = solve(&system, &rhs)? else {
        return Ok(None);
    };
    let gamma = Matrix::from_vec(r, n, sol.particular)?;
    let xi = &xi0 + &(&z * &gamma);
    if !check_iso_witness(d1, d2, &xi)? {
        return Err(Error::Internal("isomorphism witness fails verification".into()));
    }
    Ok(Some(xi))
}
