use crate::cohom::{
    coboundary_with, cohomology, increasing_tuples, restrict_to_center, Cochain, Cohomology, Representation,
};
use crate::derived::{diagonal_sections_der, DerSection};
use crate::error::{Error, Result, StandingSequence};
use crate::exactla::{vector, Matrix};
use crate::Scalar;

use super::lift::{construct_omega, lift_out_morphism, CenterSplitting, OutMorphism};
use super::ExtensionData;

/// The obstruction class of `rbar: g -> Out(h)`, computed from a lift
/// `rho = s(rbar)` and a compatible `omega` with `ad ∘ omega = alpha`.
#[derive(Debug, Clone)]
pub struct ObstructionResult<F> {
    rho: Vec<Matrix<F>>,
    omega: Cochain<F>,
    rep_center: Representation<F>,
    h3: Cohomology<F>,
    three_cocycle: Cochain<F>,
    class: Vec<F>,
    witness_sigma: Option<Cochain<F>>,
    repaired: Option<ExtensionData<F>>,
}

impl<F: Scalar> ObstructionResult<F> {
    pub fn rho(&self) -> &[Matrix<F>] {
        &self.rho
    }

    pub fn omega(&self) -> &Cochain<F> {
        &self.omega
    }

    /// `rhohat`: the restriction of `rho` to `Cen(h)`, in center coordinates.
    pub fn rep_center(&self) -> &Representation<F> {
        &self.rep_center
    }

    /// `H^3(g; rhohat)`.
    pub fn cohomology(&self) -> &Cohomology<F> {
        &self.h3
    }

    /// `d_rho omega`, in `Cen(h)` coordinates.
    pub fn three_cocycle(&self) -> &Cochain<F> {
        &self.three_cocycle
    }

    /// Coordinates of the class in `H^3(g; rhohat)`.
    pub fn class(&self) -> &[F] {
        &self.class
    }

    pub fn class_is_zero(&self) -> bool {
        vector::is_zero(&self.class)
    }

    /// `sigma` with `d sigma = d_rho omega`, in center coordinates.
    pub fn witness_sigma(&self) -> Option<&Cochain<F>> {
        self.witness_sigma.as_ref()
    }

    /// The valid datum `(rho, omega - sigma)`.
    pub fn repaired(&self) -> Option<&ExtensionData<F>> {
        self.repaired.as_ref()
    }
}

/// The canonical section of `Der(h) -> Out(h)`, or the standing-sequence
/// error.
pub fn der_section<F: Scalar>(rbar: &OutMorphism<F>) -> Result<DerSection<F>> {
    let fam = diagonal_sections_der(rbar.out())?.ok_or(Error::StandingSequence(StandingSequence::DerivationsOverOuter))?;
    fam.canonical()
}

pub fn obstruction<F: Scalar>(rbar: &OutMorphism<F>) -> Result<ObstructionResult<F>> {
    let s = der_section(rbar)?;
    let t = CenterSplitting::canonical(rbar.h())?;
    obstruction_with(rbar, &s, &t, None)
}

/// The obstruction computed from a chosen section `s`, splitting `t` and an
/// optional central shift `tau` of `omega` (a compatible 2-cochain in
/// `Cen(h)` coordinates).
pub fn obstruction_with<F: Scalar>(
    rbar: &OutMorphism<F>,
    s: &DerSection<F>,
    t: &CenterSplitting<F>,
    tau: Option<&Cochain<F>>,
) -> Result<ObstructionResult<F>> {
    let (g, h) = (rbar.g(), rbar.h());
    if t.h() != h {
        return Err(Error::Precondition("splitting belongs to a different algebra".into()));
    }
    let rho = lift_out_morphism(rbar, s)?;
    let mut omega = construct_omega(g, &rho, t)?;
    let rep_center = restrict_to_center(g, h, &rho)?;
    let cen_basis = t.center().basis_columns();
    if let Some(tau) = tau {
        if !rep_center.is_compatible(tau) || tau.degree() != 2 {
            return Err(Error::Precondition("central shift is not a compatible 2-cochain".into()));
        }
        omega = omega.add(&tau.map_values(&cen_basis));
    }
    let eta_full = coboundary_with(g, &rho, &omega);
    let cen = t.center();
    let mut values = Vec::new();
    for tuple in increasing_tuples(g.dim(), 3) {
        let v = cen
            .coordinates(eta_full.value(&tuple))
            .ok_or_else(|| Error::Internal("d_rho omega has a non-central value".into()))?;
        values.extend(v);
    }
    let eta = Cochain::from_values(3, g.dim(), cen.dim(), values)?;
    let h3 = cohomology(&rep_center, 3)?;
    let class = h3
        .class_of(&eta)?
        .ok_or_else(|| Error::Internal("d_rho omega is not a cocycle".into()))?;
    let (witness_sigma, repaired) = if vector::is_zero(&class) {
        let sigma = h3
            .primitive(&eta)?
            .ok_or_else(|| Error::Internal("trivial class without a primitive".into()))?;
        let fixed = omega.sub(&sigma.map_values(&cen_basis));
        let data = ExtensionData::new(g.clone(), h.clone(), rho.clone(), fixed)?;
        let report = data.validate()?;
        if !report.is_valid() {
            return Err(Error::Internal(format!("repaired datum is invalid: {report}")));
        }
        (Some(sigma), Some(data))
    } else {
        (None, None)
    };
    Ok(ObstructionResult {
        rho,
        omega,
        rep_center,
        h3,
        three_cocycle: eta,
        class,
        witness_sigma,
        repaired,
    })
}
