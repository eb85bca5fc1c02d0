use crate::cohom::{cohomology, Cochain, Cohomology};
use crate::derived::DerSection;
use crate::error::{Error, Result};
use crate::exactla::{matrix_of, solve, Matrix};
use crate::homlie::HomLieAlgebra;
use crate::Scalar;

use super::iso::{ad_map, ad_preimage, transport};
use super::lift::{construct_omega, induced_with, lift_out_morphism, CenterSplitting, OutMorphism};
use super::obstruction::{der_section, obstruction, ObstructionResult};
use super::ExtensionData;

/// Isomorphism classes of extensions realizing an extensible `rbar`,
/// parametrized by `H^2(g; rhohat)` around a base datum `(rho, omega0)`.
#[derive(Debug, Clone)]
pub struct Classification<F> {
    obstruction: ObstructionResult<F>,
    base: ExtensionData<F>,
    h2: Cohomology<F>,
    center_basis: Matrix<F>,
}

pub fn classify<F: Scalar>(rbar: &OutMorphism<F>) -> Result<Classification<F>> {
    let obs = obstruction(rbar)?;
    let Some(base) = obs.repaired().cloned() else {
        return Err(Error::NotExtensible(obs.class().iter().map(ToString::to_string).collect()));
    };
    let h2 = cohomology(obs.rep_center(), 2)?;
    let center_basis = rbar.h().center()?.basis_columns();
    Ok(Classification {
        obstruction: obs,
        base,
        h2,
        center_basis,
    })
}

impl<F: Scalar> Classification<F> {
    pub fn obstruction(&self) -> &ObstructionResult<F> {
        &self.obstruction
    }

    /// The datum `(rho, omega0)` at the origin of the parametrization.
    pub fn base(&self) -> &ExtensionData<F> {
        &self.base
    }

    /// `H^2(g; rhohat)`, whose canonical basis indexes the classes.
    pub fn h2(&self) -> &Cohomology<F> {
        &self.h2
    }

    pub fn dim(&self) -> usize {
        self.h2.dim()
    }

    /// `(rho, omega0 + lambda)` for a central 2-cocycle `lambda` given in
    /// `Cen(h)` coordinates.
    pub fn datum_for_cocycle(&self, lambda: &Cochain<F>) -> Result<ExtensionData<F>> {
        if !self.h2.is_cocycle(lambda)? {
            return Err(Error::Precondition("lambda is not a compatible 2-cocycle".into()));
        }
        let omega = self.base.omega().add(&lambda.map_values(&self.center_basis));
        let data = self.base.with_omega(omega)?;
        let report = data.validate()?;
        if !report.is_valid() {
            return Err(Error::Internal(format!("classified datum is invalid: {report}")));
        }
        Ok(data)
    }

    /// The datum for the class with the given `H^2` coordinates.
    pub fn datum(&self, coords: &[F]) -> Result<ExtensionData<F>> {
        self.datum_for_cocycle(&self.h2.representative(coords))
    }

    /// `H^2` coordinates of the class of a valid datum `d`; `None` if `d`
    /// induces a different morphism into `Out(h)`.
    pub fn class_of_datum(&self, d: &ExtensionData<F>) -> Result<Option<Vec<F>>> {
        let Some(aligned) = self.align(d)? else {
            return Ok(None);
        };
        let diff = aligned.omega().sub(self.base.omega());
        let h = self.base.h();
        let cen = h.center()?;
        let n = self.base.g().dim();
        let mut values = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = cen
                    .coordinates(diff.value(&[i, j]))
                    .ok_or_else(|| Error::Internal("aligned data differ by a non-central cochain".into()))?;
                values.extend(v);
            }
        }
        let lambda = Cochain::from_values(2, n, cen.dim(), values)?;
        self.h2
            .class_of(&lambda)?
            .ok_or_else(|| Error::Internal("aligned data differ by a non-cocycle".into()))
            .map(Some)
    }

    /// An isomorphic copy of `d` whose action equals the base action.
    fn align(&self, d: &ExtensionData<F>) -> Result<Option<ExtensionData<F>>> {
        if d.g() != self.base.g() || d.h() != self.base.h() {
            return Err(Error::Precondition("datum is over a different (g, h)".into()));
        }
        let report = d.validate()?;
        if !report.is_valid() {
            return Err(Error::InvalidExtensionData(report));
        }
        let (g, h) = (d.g(), d.h());
        let (n, m) = (g.dim(), h.dim());
        let ad = ad_map(h);
        let mut cols = Vec::with_capacity(n);
        for i in 0..n {
            match ad_preimage(&ad, &(&self.base.rho()[i] - &d.rho()[i]))? {
                Some(u) => cols.push(u),
                None => return Ok(None),
            }
        }
        let b0 = Matrix::from_columns(m, &cols);
        // Correct b0 by a central-valued c so that phi_h b = b phi_g.
        let z = h.center()?.basis_columns();
        let r = z.cols();
        let (phi, psi) = (g.twist(), h.twist());
        let system = matrix_of(m * n, r * n, |k| {
            let gamma = Matrix::from_fn(r, n, |a, b| if a * n + b == k { F::one() } else { F::zero() });
            let c = &z * &gamma;
            (&(psi * &c) - &(&c * phi)).into_vec()
        });
        let rhs = (&(&b0 * phi) - &(psi * &b0)).into_vec();
        let sol = solve(&system, &rhs)?.ok_or_else(|| {
            Error::Internal("no twist-compatible correction between data with equal Out images".into())
        })?;
        let b = &b0 + &(&z * &Matrix::from_vec(r, n, sol.particular)?);
        let aligned = transport(d, &b)?;
        if aligned.rho() != self.base.rho() {
            return Err(Error::Internal("alignment did not reproduce the base action".into()));
        }
        Ok(Some(aligned))
    }
}

/// The correspondence between extension data and morphisms into `Out(h)`
/// when `Cen(h) = 0`.
#[derive(Debug, Clone)]
pub struct CenterFreeCorrespondence<F> {
    g: HomLieAlgebra<F>,
    h: HomLieAlgebra<F>,
    out: crate::derived::OutAlgebra<F>,
    section: DerSection<F>,
    splitting: CenterSplitting<F>,
}

pub fn bijection_center_zero<F: Scalar>(
    g: &HomLieAlgebra<F>,
    h: &HomLieAlgebra<F>,
) -> Result<CenterFreeCorrespondence<F>> {
    g.ensure_valid()?;
    h.ensure_valid()?;
    if !h.center()?.is_zero() {
        return Err(Error::Precondition(
            "Cen(h) is nonzero; use the obstruction and classification operations instead".into(),
        ));
    }
    let zero = OutMorphism::zero(g.clone(), h)?;
    let section = der_section(&zero)?;
    let splitting = CenterSplitting::canonical(h)?;
    Ok(CenterFreeCorrespondence {
        g: g.clone(),
        h: h.clone(),
        out: zero.out().clone(),
        section,
        splitting,
    })
}

impl<F: Scalar> CenterFreeCorrespondence<F> {
    pub fn out(&self) -> &crate::derived::OutAlgebra<F> {
        &self.out
    }

    pub fn to_out_morphism(&self, d: &ExtensionData<F>) -> Result<OutMorphism<F>> {
        if d.g() != &self.g || d.h() != &self.h {
            return Err(Error::Precondition("datum is over a different (g, h)".into()));
        }
        let report = d.validate()?;
        if !report.is_valid() {
            return Err(Error::InvalidExtensionData(report));
        }
        induced_with(d, &self.out)
    }

    /// The unique (up to isomorphism) datum inducing `rbar`.
    pub fn to_datum(&self, rbar: &OutMorphism<F>) -> Result<ExtensionData<F>> {
        if rbar.g() != &self.g || rbar.h() != &self.h {
            return Err(Error::Precondition("morphism is over a different (g, h)".into()));
        }
        let rho = lift_out_morphism(rbar, &self.section)?;
        let omega = construct_omega(&self.g, &rho, &self.splitting)?;
        let data = ExtensionData::new(self.g.clone(), self.h.clone(), rho, omega)?;
        let report = data.validate()?;
        if !report.is_valid() {
            return Err(Error::Internal(format!("center-free lift is invalid: {report}")));
        }
        Ok(data)
    }
}
