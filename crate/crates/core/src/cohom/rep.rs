use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::exactla::Matrix;
use crate::homlie::{gl_algebra, is_morphism, HomLieAlgebra};
use crate::Scalar;

/// A representation `(rho, V, beta)` of a Hom-Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation<F> {
    base: HomLieAlgebra<F>,
    v_dim: usize,
    rho: Vec<Matrix<F>>,
    beta: Matrix<F>,
}

/// First failing representation identity, with 0-based basis indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepWitness {
    /// `rho(phi e_i) beta != beta rho(e_i)`.
    Twist { i: usize },
    /// `rho([e_i, e_j]) beta != rho(phi e_i) rho(e_j) - rho(phi e_j) rho(e_i)`.
    Bracket { i: usize, j: usize },
}

impl fmt::Display for RepWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RepWitness::Twist { i } => write!(f, "twist compatibility fails at e{}", i + 1),
            RepWitness::Bracket { i, j } => write!(f, "bracket compatibility fails at (e{},e{})", i + 1, j + 1),
        }
    }
}

impl<F: Scalar> Representation<F> {
    pub fn new(base: HomLieAlgebra<F>, rho: Vec<Matrix<F>>, beta: Matrix<F>) -> Result<Self> {
        check_dim("representation matrices", base.dim(), rho.len())?;
        let v_dim = beta.rows();
        check_dim("beta columns", v_dim, beta.cols())?;
        for m in &rho {
            check_dim("representation matrix rows", v_dim, m.rows())?;
            check_dim("representation matrix columns", v_dim, m.cols())?;
        }
        if !beta.is_invertible() {
            return Err(Error::Singular("representation beta"));
        }
        Ok(Representation { base, v_dim, rho, beta })
    }

    /// `rho = 0` on `V` with the given `beta`.
    pub fn trivial(base: HomLieAlgebra<F>, beta: Matrix<F>) -> Result<Self> {
        let n = beta.rows();
        let rho = vec![Matrix::zeros(n, n); base.dim()];
        Self::new(base, rho, beta)
    }

    /// `rho(e_i) = ad_{e_i}`, `beta = phi`.
    pub fn adjoint(g: &HomLieAlgebra<F>) -> Self {
        let rho = (0..g.dim()).map(|i| g.ad_basis(i)).collect();
        Representation {
            base: g.clone(),
            v_dim: g.dim(),
            rho,
            beta: g.twist().clone(),
        }
    }

    pub fn base(&self) -> &HomLieAlgebra<F> {
        &self.base
    }

    pub fn v_dim(&self) -> usize {
        self.v_dim
    }

    pub fn rho(&self) -> &[Matrix<F>] {
        &self.rho
    }

    pub fn beta(&self) -> &Matrix<F> {
        &self.beta
    }

    /// `rho(x)` for an arbitrary element, by linearity.
    pub fn rho_of(&self, x: &[F]) -> Matrix<F> {
        rho_of(&self.rho, self.v_dim, x)
    }

    fn direct_witness(&self) -> Option<RepWitness> {
        let g = &self.base;
        let n = g.dim();
        let phi = g.twist();
        let phi_rho: Vec<Matrix<F>> = (0..n).map(|i| self.rho_of(&phi.column(i))).collect();
        for i in 0..n {
            if &phi_rho[i] * &self.beta != &self.beta * &self.rho[i] {
                return Some(RepWitness::Twist { i });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let lhs = &self.rho_of(g.basis_bracket(i, j)) * &self.beta;
                let rhs = &(&phi_rho[i] * &self.rho[j]) - &(&phi_rho[j] * &self.rho[i]);
                if lhs != rhs {
                    return Some(RepWitness::Bracket { i, j });
                }
            }
        }
        None
    }

    /// `None` if both representation identities hold, else the first failure.
    ///
    /// The verdict is cross-checked against `rho` being a Hom-Lie morphism
    /// into `(gl(V), [.,.]_beta, Ad_beta)`.
    pub fn validate(&self) -> Result<Option<RepWitness>> {
        let witness = self.direct_witness();
        let v2 = self.v_dim * self.v_dim;
        let columns: Vec<Vec<F>> = self.rho.iter().map(|m| m.as_slice().to_vec()).collect();
        let as_map = Matrix::from_columns(v2, &columns);
        let gl = gl_algebra(&self.beta)?;
        let morphism = is_morphism(&as_map, &self.base, &gl)?.is_none();
        if morphism != witness.is_none() {
            return Err(Error::Internal(format!(
                "representation check disagrees with the gl(V) morphism check ({witness:?})"
            )));
        }
        Ok(witness)
    }

    pub fn is_valid(&self) -> Result<bool> {
        Ok(self.validate()?.is_none())
    }

    pub fn ensure_valid(&self) -> Result<()> {
        match self.validate()? {
            None => Ok(()),
            Some(w) => Err(Error::InvalidRepresentation(w.to_string())),
        }
    }
}

pub(crate) fn rho_of<F: Scalar>(rho: &[Matrix<F>], v_dim: usize, x: &[F]) -> Matrix<F> {
    let mut out = Matrix::zeros(v_dim, v_dim);
    for (c, m) in x.iter().zip(rho) {
        if !c.is_zero() {
            out = &out + &m.scale(c);
        }
    }
    out
}

/// The representation `x -> rho_x|_{Cen(h)}` on the center of `h`, in the
/// RREF coordinates of `Cen(h)`, with `beta = phi_h|_{Cen(h)}`.
pub fn restrict_to_center<F: Scalar>(
    g: &HomLieAlgebra<F>,
    h: &HomLieAlgebra<F>,
    rho: &[Matrix<F>],
) -> Result<Representation<F>> {
    check_dim("action matrices", g.dim(), rho.len())?;
    let cen = h.center()?;
    let restrict = |m: &Matrix<F>, what: &str| {
        cen.restrict(m)
            .ok_or_else(|| Error::Precondition(format!("{what} does not preserve Cen(h)")))
    };
    let restricted = rho
        .iter()
        .enumerate()
        .map(|(i, m)| {
            check_dim("action matrix rows", h.dim(), m.rows())?;
            check_dim("action matrix columns", h.dim(), m.cols())?;
            restrict(m, &format!("rho(e{})", i + 1))
        })
        .collect::<Result<Vec<_>>>()?;
    let beta = restrict(h.twist(), "phi_h")?;
    let rep = Representation::new(g.clone(), restricted, beta)?;
    rep.ensure_valid()?;
    Ok(rep)
}
