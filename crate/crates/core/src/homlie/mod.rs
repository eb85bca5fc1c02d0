//! Hom-Lie algebras given by structure constants.

mod fixtures;
pub(crate) mod gl;
mod morphism;

use std::fmt;

pub use fixtures::{fixture, FIXTURE_NAMES};
pub use gl::{ad_twist, gl_algebra, gl_bracket, matrix_from_vec};
pub use morphism::{is_morphism, MorphismWitness};

use crate::error::{check_dim, Error, Result};
use crate::exactla::{kernel, vector, Matrix, Subspace};
use crate::Scalar;

/// A finite-dimensional Hom-Lie algebra `(g, [.,.], phi)`.
///
/// `structure` holds `c[i][j][k]` at index `(i * dim + j) * dim + k`, meaning
/// `[e_i, e_j] = sum_k c[i][j][k] e_k`. Both `c[i][j]` and `c[j][i]` are
/// stored; skew-symmetry is checked by [`validate`](Self::validate) rather
/// than assumed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomLieAlgebra<F> {
    name: String,
    dim: usize,
    structure: Vec<F>,
    twist: Matrix<F>,
}

/// One failed axiom, with the basis tuple (0-based) that witnesses it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Violation {
    /// `c[i][j][k] != -c[j][i][k]` (with `i <= j`).
    NotSkew { i: usize, j: usize, k: usize },
    SingularTwist,
    /// `phi[e_i, e_j] != [phi e_i, phi e_j]`.
    NotMultiplicative { i: usize, j: usize },
    /// The Hom-Jacobi sum on `(e_i, e_j, e_k)` is non-zero.
    HomJacobi { i: usize, j: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NotSkew { i, j, k } => write!(
                f,
                "skew-symmetry fails at (e{},e{}) in the e{} coefficient",
                i + 1,
                j + 1,
                k + 1
            ),
            Violation::SingularTwist => write!(f, "twist is singular"),
            Violation::NotMultiplicative { i, j } => write!(
                f,
                "twist does not preserve the bracket at (e{},e{})",
                i + 1,
                j + 1
            ),
            Violation::HomJacobi { i, j, k } => write!(
                f,
                "Hom-Jacobi identity fails at (e{},e{},e{})",
                i + 1,
                j + 1,
                k + 1
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("; "))
    }
}

impl<F: Scalar> HomLieAlgebra<F> {
    /// Builds an algebra from a raw structure tensor. Only shapes are checked.
    pub fn new(name: impl Into<String>, dim: usize, structure: Vec<F>, twist: Matrix<F>) -> Result<Self> {
        check_dim("structure tensor", dim * dim * dim, structure.len())?;
        check_dim("twist rows", dim, twist.rows())?;
        check_dim("twist cols", dim, twist.cols())?;
        Ok(HomLieAlgebra {
            name: name.into(),
            dim,
            structure,
            twist,
        })
    }

    /// Builds an algebra from the brackets `[e_i, e_j]` with `i < j`; the
    /// lower triangle is filled in by skew-symmetry.
    pub fn from_brackets(
        name: impl Into<String>,
        dim: usize,
        brackets: &[(usize, usize, Vec<(usize, F)>)],
        twist: Matrix<F>,
    ) -> Result<Self> {
        let mut structure = vec![F::zero(); dim * dim * dim];
        for (i, j, terms) in brackets {
            let (i, j) = (*i, *j);
            if !(i < j && j < dim) {
                return Err(Error::Precondition(format!(
                    "bracket entry ({i},{j}) must satisfy i < j < {dim}"
                )));
            }
            for (k, c) in terms {
                if *k >= dim {
                    return Err(Error::Precondition(format!("basis index {k} out of range")));
                }
                let a = (i * dim + j) * dim + k;
                let b = (j * dim + i) * dim + k;
                structure[a] = structure[a].clone() + c.clone();
                structure[b] = structure[b].clone() - c.clone();
            }
        }
        Self::new(name, dim, structure, twist)
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(
            format!("abelian_{dim}"),
            dim,
            vec![F::zero(); dim * dim * dim],
            Matrix::identity(dim),
        )
        .expect("shapes are consistent")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twist(&self) -> &Matrix<F> {
        &self.twist
    }

    pub fn structure(&self) -> &[F] {
        &self.structure
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &F {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    /// `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[F] {
        let start = (i * self.dim + j) * self.dim;
        &self.structure[start..start + self.dim]
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        HomLieAlgebra {
            name: name.into(),
            ..self.clone()
        }
    }

    pub fn with_twist(&self, twist: Matrix<F>) -> Result<Self> {
        Self::new(self.name.clone(), self.dim, self.structure.clone(), twist)
    }

    /// Copy with a single raw structure constant overwritten (no skew fix-up).
    pub fn with_constant(&self, i: usize, j: usize, k: usize, value: F) -> Self {
        let mut out = self.clone();
        out.structure[(i * self.dim + j) * self.dim + k] = value;
        out
    }

    /// Bilinear bracket of coordinate vectors.
    pub fn bracket(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        check_dim("bracket lhs", self.dim, x.len())?;
        check_dim("bracket rhs", self.dim, y.len())?;
        Ok(self.br(x, y))
    }

    pub(crate) fn br(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = vector::zeros(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.clone() * yj.clone();
                vector::axpy(&mut out, &c, self.basis_bracket(i, j));
            }
        }
        out
    }

    pub fn apply_twist(&self, x: &[F]) -> Vec<F> {
        self.twist.mul_vec(x)
    }

    /// Matrix of `ad_x = [x, .]`.
    pub fn ad(&self, x: &[F]) -> Matrix<F> {
        let n = self.dim;
        Matrix::from_columns(n, &(0..n).map(|j| self.br(x, &vector::unit(n, j))).collect::<Vec<_>>())
    }

    pub fn ad_basis(&self, i: usize) -> Matrix<F> {
        self.ad(&vector::unit(self.dim, i))
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let s = self.constant(i, j, k).clone() + self.constant(j, i, k).clone();
                    if !s.is_zero() {
                        violations.push(Violation::NotSkew { i, j, k });
                    }
                }
            }
        }
        if !self.twist.is_invertible() {
            violations.push(Violation::SingularTwist);
        }
        let images: Vec<Vec<F>> = (0..n).map(|i| self.twist.column(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.apply_twist(self.basis_bracket(i, j));
                let rhs = self.br(&images[i], &images[j]);
                if lhs != rhs {
                    violations.push(Violation::NotMultiplicative { i, j });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !vector::is_zero(&self.hom_jacobi(i, j, k)) {
                        violations.push(Violation::HomJacobi { i, j, k });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// `[phi e_i, [e_j, e_k]] + [phi e_j, [e_k, e_i]] + [phi e_k, [e_i, e_j]]`
    pub fn hom_jacobi(&self, i: usize, j: usize, k: usize) -> Vec<F> {
        let phi = |a: usize| self.twist.column(a);
        let mut s = self.br(&phi(i), self.basis_bracket(j, k));
        s = vector::add(&s, &self.br(&phi(j), self.basis_bracket(k, i)));
        vector::add(&s, &self.br(&phi(k), self.basis_bracket(i, j)))
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidAlgebra(report))
        }
    }

    /// `Cen(g) = {u : [u, e_j] = 0 for all j}`, checked to be twist-invariant.
    pub fn center(&self) -> Result<Subspace<F>> {
        let n = self.dim;
        // row (j, k), column i: c[i][j][k]
        let m = Matrix::from_fn(n * n, n, |row, i| {
            let (j, k) = (row / n, row % n);
            self.constant(i, j, k).clone()
        });
        let cen = kernel(&m);
        if !cen.is_invariant_under(&self.twist) {
            return Err(Error::Precondition(format!(
                "center of {} is not twist-invariant; the twist is not multiplicative",
                self.name
            )));
        }
        Ok(cen)
    }

    /// `(g, alpha . [.,.], alpha)` for a Lie algebra `self` (its twist is
    /// ignored) and an automorphism `alpha` of it.
    pub fn yau_twist(&self, alpha: &Matrix<F>) -> Result<Self> {
        check_dim("yau twist", self.dim, alpha.rows())?;
        let n = self.dim;
        let mut structure = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                structure.extend(alpha.mul_vec(self.basis_bracket(i, j)));
            }
        }
        Self::new(format!("{}^twisted", self.name), n, structure, alpha.clone())
    }

    /// Direct sum with brackets and twists acting blockwise.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        let d = n + m;
        let mut structure = vec![F::zero(); d * d * d];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    structure[(i * d + j) * d + k] = self.constant(i, j, k).clone();
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    structure[((n + i) * d + n + j) * d + n + k] = other.constant(i, j, k).clone();
                }
            }
        }
        Self::new(
            format!("{}+{}", self.name, other.name),
            d,
            structure,
            self.twist.block_diag(&other.twist),
        )
        .expect("shapes are consistent")
    }
}
