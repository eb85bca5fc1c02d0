use crate::error::{Error, Result};
use crate::exactla::{vector, Matrix, Subquotient};
use crate::homlie::{gl::bracket_with_inverse, matrix_from_vec, HomLieAlgebra};
use crate::Scalar;

use super::DerivationAlgebra;

/// `Out(g) = Der(g)/Inn(g)` with the induced bracket and twist.
///
/// Out coordinates refer to the canonical complement of `Inn(g)` inside the
/// RREF coordinates of `Der(g)`; the canonical representative of a class is
/// the derivation with zero `Inn`-pivot coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutAlgebra<F> {
    der: DerivationAlgebra<F>,
    classes: Subquotient<F>,
    algebra: HomLieAlgebra<F>,
}

pub fn out_algebra<F: Scalar>(d: &DerivationAlgebra<F>) -> Result<OutAlgebra<F>> {
    let g = d.base();
    let n = g.dim();
    let phi = g.twist();
    let phi_inv = phi.try_inverse("twist")?;
    let classes = Subquotient::new(d.der().clone(), d.inn().clone())?;

    // Inn is an ideal stable under Ad_phi, so brackets and twists of classes
    // do not depend on representatives.
    let reps: Vec<Matrix<F>> = classes
        .representatives()
        .iter()
        .map(|v| matrix_from_vec(n, v))
        .collect();
    for inner in d.inn_matrices() {
        if !d.inn().contains((&(phi * &inner) * &phi_inv).as_slice()) {
            return Err(Error::Internal("Inn(g) is not Ad_phi-invariant".into()));
        }
        for der in d.basis_matrices() {
            let c = bracket_with_inverse(&inner, &der, phi, &phi_inv);
            if !d.inn().contains(c.as_slice()) {
                return Err(Error::Internal("Inn(g) is not an ideal of Der(g)".into()));
            }
        }
    }

    let class = |m: &Matrix<F>| {
        classes
            .class_of(m.as_slice())
            .ok_or_else(|| Error::Internal("Der(g) is not closed".into()))
    };
    let k = reps.len();
    let mut structure = Vec::with_capacity(k * k * k);
    for a in &reps {
        for b in &reps {
            structure.extend(class(&bracket_with_inverse(a, b, phi, &phi_inv))?);
        }
    }
    let twist_cols = reps
        .iter()
        .map(|a| class(&(&(phi * a) * &phi_inv)))
        .collect::<Result<Vec<_>>>()?;
    let algebra = HomLieAlgebra::new(
        format!("Out({})", g.name()),
        k,
        structure,
        Matrix::from_columns(k, &twist_cols),
    )?;
    let report = algebra.validate();
    if !report.is_valid() {
        return Err(Error::Internal(format!("induced structure on Out(g) is not Hom-Lie: {report}")));
    }
    Ok(OutAlgebra {
        der: d.clone(),
        classes,
        algebra,
    })
}

impl<F: Scalar> OutAlgebra<F> {
    pub fn derivations(&self) -> &DerivationAlgebra<F> {
        &self.der
    }

    pub fn classes(&self) -> &Subquotient<F> {
        &self.classes
    }

    /// The induced Hom-Lie algebra `(Out(g), [.,.]', Ad')`.
    pub fn algebra(&self) -> &HomLieAlgebra<F> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// The quotient map `pi`; `None` if `d` is not a derivation.
    pub fn project(&self, d: &Matrix<F>) -> Option<Vec<F>> {
        self.classes.class_of(d.as_slice())
    }

    /// Canonical representative derivation of a class.
    pub fn representative(&self, coords: &[F]) -> Matrix<F> {
        matrix_from_vec(self.der.base().dim(), &self.classes.representative(coords))
    }

    pub fn is_zero_class(&self, d: &Matrix<F>) -> bool {
        self.project(d).is_some_and(|c| vector::is_zero(&c))
    }
}
