//! Derivations of a Hom-Lie algebra.
//!
//! A linear map `D` is a derivation when
//! `D[x,y] = [phi x, D' y] + [D' x, phi y]` with `D' = phi^-1 D phi`.
//! `Der(g)` is closed under `[.,.]_phi` and `Ad_phi`, the inner derivations
//! `ad_x` form an ideal, and `Out(g) = Der(g)/Inn(g)` inherits a Hom-Lie
//! structure.
//!
//! Matrices are vectorized row-major whenever they are treated as points of
//! `gl(g)`; all bases below are RREF in that vectorization.

mod complement;
mod out;
mod section;

pub use complement::{invariant_complement, invariant_complements, InvariantComplements};
pub use out::{out_algebra, OutAlgebra};
pub use section::{diagonal_section_der, diagonal_sections_der, DerSection, DerSectionFamily};

use crate::error::{check_dim, Error, Result};
use crate::exactla::{kernel, matrix_of, vector, Matrix, Subspace};
use crate::homlie::{matrix_from_vec, HomLieAlgebra};
use crate::Scalar;

/// `D[e_i,e_j] - [phi e_i, D' e_j] - [D' e_i, phi e_j]` with `D' = phi^-1 D phi`.
fn residual<F: Scalar>(
    g: &HomLieAlgebra<F>,
    phi_inv: &Matrix<F>,
    d: &Matrix<F>,
    i: usize,
    j: usize,
) -> Vec<F> {
    let phi = g.twist();
    let conj = &(phi_inv * d) * phi;
    let lhs = d.mul_vec(g.basis_bracket(i, j));
    let r1 = g.br(&phi.column(i), &conj.column(j));
    let r2 = g.br(&conj.column(i), &phi.column(j));
    vector::sub(&vector::sub(&lhs, &r1), &r2)
}

/// `Ok(None)` if `d` is a derivation of `g`, otherwise the first basis pair
/// `(i, j)`, `i < j`, where the derivation rule fails.
pub fn is_derivation<F: Scalar>(d: &Matrix<F>, g: &HomLieAlgebra<F>) -> Result<Option<(usize, usize)>> {
    let n = g.dim();
    check_dim("derivation rows", n, d.rows())?;
    check_dim("derivation cols", n, d.cols())?;
    let phi_inv = g.twist().try_inverse("twist")?;
    for i in 0..n {
        for j in i + 1..n {
            if !vector::is_zero(&residual(g, &phi_inv, d, i, j)) {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// `Der(g)` together with `Inn(g)` and the action of `Ad_phi` on `Der(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationAlgebra<F> {
    base: HomLieAlgebra<F>,
    der: Subspace<F>,
    inn: Subspace<F>,
    twist_action: Matrix<F>,
}

/// Solves the derivation rule as a linear system in the `n^2` entries of `D`.
pub fn derivation_algebra<F: Scalar>(g: &HomLieAlgebra<F>) -> Result<DerivationAlgebra<F>> {
    g.ensure_valid()?;
    let n = g.dim();
    let phi = g.twist();
    let phi_inv = phi.try_inverse("twist")?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let system = matrix_of(pairs.len() * n, n * n, |p| {
        let unit = matrix_from_vec(n, &vector::unit(n * n, p));
        pairs
            .iter()
            .flat_map(|&(i, j)| residual(g, &phi_inv, &unit, i, j))
            .collect()
    });
    let der = kernel(&system);
    let inn = Subspace::span(
        n * n,
        &(0..n).map(|i| g.ad_basis(i).into_vec()).collect::<Vec<_>>(),
    );
    if !inn.is_subspace_of(&der) {
        return Err(Error::Internal("an inner derivation failed the derivation rule".into()));
    }
    let cols: Option<Vec<Vec<F>>> = der
        .basis()
        .iter()
        .map(|b| {
            let m = matrix_from_vec(n, b);
            der.coordinates((&(phi * &m) * &phi_inv).as_slice())
        })
        .collect();
    let cols = cols.ok_or_else(|| Error::Internal("Der(g) is not Ad_phi-invariant".into()))?;
    Ok(DerivationAlgebra {
        base: g.clone(),
        twist_action: Matrix::from_columns(der.dim(), &cols),
        der,
        inn,
    })
}

impl<F: Scalar> DerivationAlgebra<F> {
    pub fn base(&self) -> &HomLieAlgebra<F> {
        &self.base
    }

    /// `Der(g)` inside the vectorized `gl(g)`.
    pub fn der(&self) -> &Subspace<F> {
        &self.der
    }

    /// `Inn(g)` inside the vectorized `gl(g)`.
    pub fn inn(&self) -> &Subspace<F> {
        &self.inn
    }

    /// Matrix of `Ad_phi` in the coordinates of the RREF basis of `Der(g)`.
    pub fn twist_action(&self) -> &Matrix<F> {
        &self.twist_action
    }

    pub fn basis_matrices(&self) -> Vec<Matrix<F>> {
        let n = self.base.dim();
        self.der.basis().iter().map(|b| matrix_from_vec(n, b)).collect()
    }

    pub fn inn_matrices(&self) -> Vec<Matrix<F>> {
        let n = self.base.dim();
        self.inn.basis().iter().map(|b| matrix_from_vec(n, b)).collect()
    }

    pub fn contains(&self, d: &Matrix<F>) -> bool {
        d.rows() == self.base.dim() && d.cols() == self.base.dim() && self.der.contains(d.as_slice())
    }

    /// `Der(g)` as a Hom-Lie algebra in its own RREF coordinates.
    pub fn as_hom_lie(&self) -> Result<HomLieAlgebra<F>> {
        let phi = self.base.twist();
        let phi_inv = phi.try_inverse("twist")?;
        let basis = self.basis_matrices();
        let d = basis.len();
        let mut structure = Vec::with_capacity(d * d * d);
        for a in &basis {
            for b in &basis {
                let c = crate::homlie::gl::bracket_with_inverse(a, b, phi, &phi_inv);
                let coords = self
                    .der
                    .coordinates(c.as_slice())
                    .ok_or_else(|| Error::Internal("Der(g) is not closed under the bracket".into()))?;
                structure.extend(coords);
            }
        }
        HomLieAlgebra::new(
            format!("Der({})", self.base.name()),
            d,
            structure,
            self.twist_action.clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homlie::{fixture, gl_bracket};
    use crate::Q;

    #[test]
    fn zero_and_inner_are_derivations() {
        for name in ["heisenberg3", "heisenberg3_236", "aff1_3", "sl2"] {
            let g = fixture::<Q>(name).unwrap();
            assert_eq!(is_derivation(&Matrix::zeros(g.dim(), g.dim()), &g).unwrap(), None);
            for i in 0..g.dim() {
                assert_eq!(is_derivation(&g.ad_basis(i), &g).unwrap(), None, "{name} ad_e{i}");
            }
        }
    }

    #[test]
    fn projection_onto_e1_is_not_a_derivation_of_aff1() {
        let g = fixture::<Q>("aff1_1").unwrap();
        let d = Matrix::diag(&[Q::int(1), Q::int(0)]);
        assert_eq!(is_derivation(&d, &g).unwrap(), Some((0, 1)));
        assert!(is_derivation(&Matrix::identity(3), &g).is_err());
    }

    #[test]
    fn abelian_derivations_are_everything() {
        let d = derivation_algebra(&HomLieAlgebra::<Q>::abelian(2)).unwrap();
        assert_eq!(d.der().dim(), 4);
        assert_eq!(d.inn().dim(), 0);
    }

    #[test]
    fn der_closed_under_twisted_bracket() {
        let g = fixture::<Q>("heisenberg3_236").unwrap();
        let d = derivation_algebra(&g).unwrap();
        let basis = d.basis_matrices();
        for a in &basis {
            for b in &basis {
                assert!(d.contains(&gl_bracket(a, b, g.twist()).unwrap()));
            }
        }
        assert!(d.as_hom_lie().unwrap().is_valid());
    }

    #[test]
    fn invalid_algebra_rejected() {
        let g = fixture::<Q>("heisenberg3").unwrap().with_constant(0, 1, 2, Q::int(5));
        assert!(derivation_algebra(&g).is_err());
    }
}
