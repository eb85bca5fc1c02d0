use crate::error::{check_dim, Result};
use crate::exactla::{vector, Matrix};
use crate::Scalar;

use super::HomLieAlgebra;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismWitness {
    /// `f[e_i, e_j] != [f e_i, f e_j]`
    Bracket { i: usize, j: usize },
    /// `f(phi e_i) != phi(f e_i)`
    Twist { i: usize },
}

impl std::fmt::Display for MorphismWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            MorphismWitness::Bracket { i, j } => {
                write!(f, "bracket not preserved at (e{},e{})", i + 1, j + 1)
            }
            MorphismWitness::Twist { i } => write!(f, "twist not intertwined at e{}", i + 1),
        }
    }
}

/// Checks that `f: src -> dst` (a `dst.dim x src.dim` matrix) is a morphism
/// of Hom-Lie algebras. `Ok(None)` means it is; otherwise the first failing
/// basis tuple is returned.
pub fn is_morphism<F: Scalar>(
    f: &Matrix<F>,
    src: &HomLieAlgebra<F>,
    dst: &HomLieAlgebra<F>,
) -> Result<Option<MorphismWitness>> {
    check_dim("morphism domain", src.dim(), f.cols())?;
    check_dim("morphism codomain", dst.dim(), f.rows())?;
    let n = src.dim();
    let images: Vec<Vec<F>> = (0..n).map(|i| f.column(i)).collect();
    for i in 0..n {
        let lhs = f.mul_vec(&src.twist().column(i));
        let rhs = dst.apply_twist(&images[i]);
        if lhs != rhs {
            return Ok(Some(MorphismWitness::Twist { i }));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = f.mul_vec(src.basis_bracket(i, j));
            let rhs = dst.br(&images[i], &images[j]);
            if !vector::is_zero(&vector::sub(&lhs, &rhs)) {
                return Ok(Some(MorphismWitness::Bracket { i, j }));
            }
        }
    }
    Ok(None)
}
