use crate::error::{check_dim, Result};
use crate::Scalar;

use super::{vector, Matrix};

/// A linear subspace of `F^n`, stored by its reduced row-echelon basis.
///
/// The RREF basis is unique for a given subspace, so two `Subspace` values
/// compare equal exactly when they span the same space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient_dim: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| vector::unit(ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of `vectors`. Panics if a vector has the wrong length.
    pub fn span(ambient_dim: usize, vectors: &[Vec<F>]) -> Self {
        Self::try_span(ambient_dim, vectors).expect("vector length differs from ambient dimension")
    }

    pub fn try_span(ambient_dim: usize, vectors: &[Vec<F>]) -> Result<Self> {
        for v in vectors {
            check_dim("Subspace::span", ambient_dim, v.len())?;
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient_dim));
        }
        let m = Matrix::from_rows(vectors.to_vec())?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace {
            ambient_dim,
            basis,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not occupied by a pivot, ascending.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut it = self.pivots.iter().peekable();
        (0..self.ambient_dim)
            .filter(|&c| {
                if it.peek() == Some(&&c) {
                    it.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    /// The basis as the columns of an `ambient_dim x dim` matrix.
    pub fn basis_columns(&self) -> Matrix<F> {
        Matrix::from_columns(self.ambient_dim, &self.basis)
    }

    /// The canonical representative of `v` modulo this subspace: the unique
    /// vector congruent to `v` that vanishes on every pivot coordinate.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ambient_dim, "vector length");
        let mut out = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                vector::axpy(&mut out, &-c, b);
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    pub fn try_contains(&self, v: &[F]) -> Result<bool> {
        check_dim("Subspace::contains", self.ambient_dim, v.len())?;
        Ok(self.contains(v))
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is not in the
    /// subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given basis coordinates.
    pub fn from_coordinates(&self, coords: &[F]) -> Vec<F> {
        vector::combine(self.ambient_dim, coords, &self.basis)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        check_dim("Subspace::sum", self.ambient_dim, other.ambient_dim)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::try_span(self.ambient_dim, &all)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        check_dim("Subspace::intersect", self.ambient_dim, other.ambient_dim)?;
        let n = self.ambient_dim;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(n));
        }
        // a.u - b.v = 0  <=>  a.u lies in both
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| vector::neg(v)));
        let m = Matrix::from_columns(n, &cols);
        let ker = super::kernel(&m);
        let r = self.dim();
        let common: Vec<Vec<F>> = ker
            .basis()
            .iter()
            .map(|k| self.from_coordinates(&k[..r]))
            .collect();
        Self::try_span(n, &common)
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, a: &Matrix<F>) -> Result<Self> {
        check_dim("Subspace::map", self.ambient_dim, a.cols())?;
        let images: Vec<Vec<F>> = self.basis.iter().map(|b| a.mul_vec(b)).collect();
        Self::try_span(a.rows(), &images)
    }

    pub fn is_invariant_under(&self, a: &Matrix<F>) -> bool {
        a.cols() == self.ambient_dim
            && a.rows() == self.ambient_dim
            && self.basis.iter().all(|b| self.contains(&a.mul_vec(b)))
    }

    /// Matrix of `a` restricted to this (invariant) subspace, in RREF-basis
    /// coordinates. `None` if the subspace is not invariant.
    pub fn restrict(&self, a: &Matrix<F>) -> Option<Matrix<F>> {
        let cols: Option<Vec<Vec<F>>> = self
            .basis
            .iter()
            .map(|b| self.coordinates(&a.mul_vec(b)))
            .collect();
        Some(Matrix::from_columns(self.dim(), &cols?))
    }
}
