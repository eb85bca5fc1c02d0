use crate::error::{Error, Result};
use crate::exactla::{vector, Matrix, Subspace};
use crate::homlie::matrix_from_vec;
use crate::Scalar;

use super::{invariant_complements, DerivationAlgebra, InvariantComplements, OutAlgebra};

/// A linear section `s: Out(g) -> Der(g)` of the quotient map with
/// `pi . s = id` and `Ad_phi . s = s . Ad'_phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerSection<F> {
    n: usize,
    /// Column `j` is the vectorized derivation `s(e_j)`.
    matrix: Matrix<F>,
}

impl<F: Scalar> DerSection<F> {
    /// Builds `(pi|_W)^-1` for an `Ad_phi`-invariant complement `W` of `Inn`,
    /// given in `Der` coordinates.
    pub fn from_complement(out: &OutAlgebra<F>, w: &Subspace<F>) -> Result<Self> {
        let der = out.derivations();
        let n = der.base().dim();
        let k = out.dim();
        let quotient = out.classes().quotient();
        let proj = Matrix::from_columns(k, &w.basis().iter().map(|b| quotient.project(b)).collect::<Vec<_>>());
        let proj_inv = proj
            .inverse()
            .ok_or_else(|| Error::Internal("complement does not map isomorphically onto Out".into()))?;
        let in_der = &w.basis_columns() * &proj_inv;
        let cols: Vec<Vec<F>> = (0..k)
            .map(|j| der.der().from_coordinates(&in_der.column(j)))
            .collect();
        let section = DerSection {
            n,
            matrix: Matrix::from_columns(n * n, &cols),
        };
        section.check(out)?;
        Ok(section)
    }

    fn check(&self, out: &OutAlgebra<F>) -> Result<()> {
        let phi = out.derivations().base().twist();
        let phi_inv = phi.try_inverse("twist")?;
        let k = out.dim();
        for j in 0..k {
            let unit = vector::unit(k, j);
            let d = self.apply(&unit);
            if out.project(&d) != Some(unit.clone()) {
                return Err(Error::Internal("section does not split the quotient map".into()));
            }
            let lhs = &(phi * &d) * &phi_inv;
            let rhs = self.apply(&out.algebra().twist().column(j));
            if lhs != rhs {
                return Err(Error::Internal("section is not twist-equivariant".into()));
            }
        }
        Ok(())
    }

    /// `s(class)` as an `n x n` derivation matrix.
    pub fn apply(&self, class: &[F]) -> Matrix<F> {
        matrix_from_vec(self.n, &self.matrix.mul_vec(class))
    }

    /// Column `j` is the vectorized derivation `s(e_j)`.
    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }
}

/// Every diagonal section of `Der(g) -> Out(g)`, parametrized affinely.
#[derive(Debug, Clone)]
pub struct DerSectionFamily<F> {
    out: OutAlgebra<F>,
    complements: InvariantComplements<F>,
}

impl<F: Scalar> DerSectionFamily<F> {
    pub fn dim(&self) -> usize {
        self.complements.dim()
    }

    pub fn canonical(&self) -> Result<DerSection<F>> {
        DerSection::from_complement(&self.out, &self.complements.canonical())
    }

    pub fn member(&self, coeffs: &[F]) -> Result<DerSection<F>> {
        DerSection::from_complement(&self.out, &self.complements.complement(coeffs))
    }
}

/// `None` when `0 -> Inn -> Der -> Out -> 0` has no diagonal section over
/// the base field.
pub fn diagonal_sections_der<F: Scalar>(out: &OutAlgebra<F>) -> Result<Option<DerSectionFamily<F>>> {
    let der = out.derivations();
    let inn_coords = out.classes().quotient().denominator();
    let fam = invariant_complements(der.der().dim(), inn_coords, der.twist_action())?;
    Ok(fam.map(|complements| DerSectionFamily {
        out: out.clone(),
        complements,
    }))
}

pub fn diagonal_section_der<F: Scalar>(
    d: &DerivationAlgebra<F>,
    out: &OutAlgebra<F>,
) -> Result<Option<DerSection<F>>> {
    if out.derivations() != d {
        return Err(Error::Precondition("Out algebra was computed from different derivations".into()));
    }
    diagonal_sections_der(out)?.map(|f| f.canonical()).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived::{derivation_algebra, out_algebra};
    use crate::homlie::fixture;
    use crate::Q;

    #[test]
    fn heisenberg_sections_exist() {
        for name in ["heisenberg3", "heisenberg3_236"] {
            let h = fixture::<Q>(name).unwrap();
            let d = derivation_algebra(&h).unwrap();
            let o = out_algebra(&d).unwrap();
            let s = diagonal_section_der(&d, &o).unwrap().expect(name);
            for j in 0..o.dim() {
                assert!(d.contains(&s.apply(&vector::unit(o.dim(), j))));
            }
        }
    }

    #[test]
    fn zero_out_gives_zero_section() {
        let g = fixture::<Q>("aff1_1").unwrap();
        let d = derivation_algebra(&g).unwrap();
        let o = out_algebra(&d).unwrap();
        let s = diagonal_section_der(&d, &o).unwrap().unwrap();
        assert_eq!(s.matrix().cols(), 0);
    }
}
