use crate::error::{check_dim, Error, Result};
use crate::Scalar;

use super::{vector, Subspace};

/// `F^n / U` with canonical representatives.
///
/// The complement is spanned by the coordinate vectors at the non-pivot
/// positions of `U`'s RREF basis, in ascending order. Projection reduces a
/// vector modulo `U` and reads those coordinates; lifting places coordinates
/// back at the same positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpace<F> {
    ambient_dim: usize,
    denominator: Subspace<F>,
    complement: Vec<usize>,
}

impl<F: Scalar> QuotientSpace<F> {
    pub fn new(ambient_dim: usize, denominator: Subspace<F>) -> Result<Self> {
        check_dim("quotient", ambient_dim, denominator.ambient_dim())?;
        let complement = denominator.non_pivots();
        Ok(QuotientSpace {
            ambient_dim,
            denominator,
            complement,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn denominator(&self) -> &Subspace<F> {
        &self.denominator
    }

    /// Indices `j` such that the unit vectors `e_j` form the complement basis.
    pub fn complement_indices(&self) -> &[usize] {
        &self.complement
    }

    pub fn complement_basis(&self) -> Vec<Vec<F>> {
        self.complement
            .iter()
            .map(|&j| vector::unit(self.ambient_dim, j))
            .collect()
    }

    pub fn project(&self, v: &[F]) -> Vec<F> {
        let r = self.denominator.reduce(v);
        self.complement.iter().map(|&j| r[j].clone()).collect()
    }

    pub fn lift(&self, coords: &[F]) -> Vec<F> {
        assert_eq!(coords.len(), self.dim(), "quotient coordinate length");
        let mut v = vector::zeros(self.ambient_dim);
        for (&j, c) in self.complement.iter().zip(coords) {
            v[j] = c.clone();
        }
        v
    }
}

/// A quotient `N / D` of two nested subspaces of the same ambient space, as
/// used for `Der/Inn` and `Z^k/B^k`.
///
/// The quotient is formed in the RREF coordinates of `N`, so representatives
/// always lie in `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subquotient<F> {
    numerator: Subspace<F>,
    denominator: Subspace<F>,
    quotient: QuotientSpace<F>,
}

impl<F: Scalar> Subquotient<F> {
    pub fn new(numerator: Subspace<F>, denominator: Subspace<F>) -> Result<Self> {
        check_dim("subquotient", numerator.ambient_dim(), denominator.ambient_dim())?;
        let inner: Option<Vec<Vec<F>>> = denominator
            .basis()
            .iter()
            .map(|b| numerator.coordinates(b))
            .collect();
        let inner = inner.ok_or_else(|| {
            Error::Precondition("denominator is not contained in numerator".into())
        })?;
        let den_in_num = Subspace::try_span(numerator.dim(), &inner)?;
        let quotient = QuotientSpace::new(numerator.dim(), den_in_num)?;
        Ok(Subquotient {
            numerator,
            denominator,
            quotient,
        })
    }

    pub fn numerator(&self) -> &Subspace<F> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Subspace<F> {
        &self.denominator
    }

    /// The quotient in numerator coordinates.
    pub fn quotient(&self) -> &QuotientSpace<F> {
        &self.quotient
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Class coordinates of `v`, or `None` if `v` is not in the numerator.
    pub fn class_of(&self, v: &[F]) -> Option<Vec<F>> {
        let c = self.numerator.coordinates(v)?;
        Some(self.quotient.project(&c))
    }

    /// Canonical representative (an ambient vector) of the class with the
    /// given coordinates.
    pub fn representative(&self, coords: &[F]) -> Vec<F> {
        self.numerator.from_coordinates(&self.quotient.lift(coords))
    }

    /// Canonical representatives of the quotient basis.
    pub fn representatives(&self) -> Vec<Vec<F>> {
        (0..self.dim())
            .map(|i| self.representative(&vector::unit(self.dim(), i)))
            .collect()
    }

    /// `v` and `w` represent the same class.
    pub fn same_class(&self, v: &[F], w: &[F]) -> bool {
        self.denominator.contains(&vector::sub(v, w))
    }
}
