//! Exact linear algebra over a [`Scalar`] field.
//!
//! Everything is deterministic: subspaces are kept in reduced row-echelon
//! form with ascending pivots, particular solutions set free variables to
//! zero, and quotient complements use ascending non-pivot coordinates.

mod matrix;
mod quotient;
mod subspace;
pub mod vector;

pub use matrix::Matrix;
pub use quotient::{QuotientSpace, Subquotient};
pub use subspace::Subspace;

use crate::error::{check_dim, Result};
use crate::Scalar;

/// Solution set of `A x = b`: a particular solution plus the kernel of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet<F> {
    /// Free variables are set to zero.
    pub particular: Vec<F>,
    pub kernel: Subspace<F>,
}

/// Solves `A x = b` exactly. `Ok(None)` means the system is inconsistent.
pub fn solve<F: Scalar>(a: &Matrix<F>, b: &[F]) -> Result<Option<SolutionSet<F>>> {
    check_dim("solve", a.rows(), b.len())?;
    let (rows, cols) = (a.rows(), a.cols());
    let mut aug = Matrix::zeros(rows, cols + 1);
    for r in 0..rows {
        for c in 0..cols {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, cols, b[r].clone());
    }
    let pivots = aug.rref_in_place();
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut particular = vector::zeros(cols);
    for (i, &p) in pivots.iter().enumerate() {
        particular[p] = aug.get(i, cols).clone();
    }
    Ok(Some(SolutionSet {
        particular,
        kernel: kernel_from_rref(&aug, &pivots, cols),
    }))
}

fn kernel_from_rref<F: Scalar>(r: &Matrix<F>, pivots: &[usize], cols: usize) -> Subspace<F> {
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let basis: Vec<Vec<F>> = free
        .iter()
        .map(|&f| {
            let mut v = vector::unit(cols, f);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            v
        })
        .collect();
    Subspace::span(cols, &basis)
}

pub fn kernel<F: Scalar>(a: &Matrix<F>) -> Subspace<F> {
    let (r, pivots) = a.rref();
    kernel_from_rref(&r, &pivots, a.cols())
}

/// Column space of `a`.
pub fn image<F: Scalar>(a: &Matrix<F>) -> Subspace<F> {
    Subspace::span(a.rows(), &a.transpose().row_vecs())
}

/// Assembles the matrix of a linear map from its action on the standard
/// basis of an `in_dim`-dimensional space.
pub fn matrix_of<F: Scalar>(
    out_dim: usize,
    in_dim: usize,
    mut f: impl FnMut(usize) -> Vec<F>,
) -> Matrix<F> {
    let cols: Vec<Vec<F>> = (0..in_dim).map(&mut f).collect();
    Matrix::from_columns(out_dim, &cols)
}
