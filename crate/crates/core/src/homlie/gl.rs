//! The regular Hom-Lie algebra `(gl(V), [.,.]_beta, Ad_beta)`.

use crate::error::{check_dim, Result};
use crate::exactla::Matrix;
use crate::Scalar;

use super::HomLieAlgebra;

/// `beta A beta^-1 B beta^-1 - beta B beta^-1 A beta^-1`
pub fn gl_bracket<F: Scalar>(a: &Matrix<F>, b: &Matrix<F>, beta: &Matrix<F>) -> Result<Matrix<F>> {
    let inv = beta.try_inverse("beta")?;
    check_square("gl_bracket lhs", a, beta)?;
    check_square("gl_bracket rhs", b, beta)?;
    Ok(bracket_with_inverse(a, b, beta, &inv))
}

pub(crate) fn bracket_with_inverse<F: Scalar>(
    a: &Matrix<F>,
    b: &Matrix<F>,
    beta: &Matrix<F>,
    inv: &Matrix<F>,
) -> Matrix<F> {
    let ab = &(&(&(beta * a) * inv) * b) * inv;
    let ba = &(&(&(beta * b) * inv) * a) * inv;
    &ab - &ba
}

/// `Ad_beta(A) = beta A beta^-1`
pub fn ad_twist<F: Scalar>(beta: &Matrix<F>, a: &Matrix<F>) -> Result<Matrix<F>> {
    let inv = beta.try_inverse("beta")?;
    check_square("ad_twist", a, beta)?;
    Ok(&(beta * a) * &inv)
}

fn check_square<F: Scalar>(context: &'static str, a: &Matrix<F>, beta: &Matrix<F>) -> Result<()> {
    check_dim(context, beta.rows(), a.rows())?;
    check_dim(context, beta.cols(), a.cols())
}

/// Reads a row-major vectorized `n x n` matrix.
pub fn matrix_from_vec<F: Scalar>(n: usize, v: &[F]) -> Matrix<F> {
    Matrix::from_vec(n, n, v.to_vec()).expect("vectorized matrix length")
}

/// `gl(V)` as a Hom-Lie algebra of dimension `n^2`, with basis the matrix
/// units `E_rc` in row-major order.
pub fn gl_algebra<F: Scalar>(beta: &Matrix<F>) -> Result<HomLieAlgebra<F>> {
    let n = beta.rows();
    let inv = beta.try_inverse("beta")?;
    let d = n * n;
    let unit = |p: usize| {
        let mut m = Matrix::zeros(n, n);
        m.set(p / n, p % n, F::one());
        m
    };
    let units: Vec<Matrix<F>> = (0..d).map(unit).collect();
    let mut structure = Vec::with_capacity(d * d * d);
    for a in &units {
        for b in &units {
            structure.extend(bracket_with_inverse(a, b, beta, &inv).into_vec());
        }
    }
    let twist_cols: Vec<Vec<F>> = units
        .iter()
        .map(|u| (&(beta * u) * &inv).into_vec())
        .collect();
    HomLieAlgebra::new(format!("gl_{n}"), d, structure, Matrix::from_columns(d, &twist_cols))
}
