//! Built-in algebras.

use crate::exactla::Matrix;
use crate::Scalar;

use super::HomLieAlgebra;

/// Names accepted by [`fixture`]. `abelian_N` and `aff1_Q` take a positive
/// integer parameter.
pub const FIXTURE_NAMES: &[&str] = &["abelian_N", "aff1_Q", "heisenberg3", "heisenberg3_236", "sl2"];

/// Looks up a built-in algebra.
///
/// - `abelian_N`: N-dimensional abelian, twist = identity.
/// - `aff1_Q`: `[e1,e2] = e2`, twist = diag(1, Q).
/// - `heisenberg3`: `[e1,e2] = e3`, twist = identity.
/// - `heisenberg3_236`: `[e1,e2] = e3`, twist = diag(2, 3, 6).
/// - `sl2`: basis (h, e, f) with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`,
///   twist = identity.
pub fn fixture<F: Scalar>(name: &str) -> Option<HomLieAlgebra<F>> {
    if let Some(n) = name.strip_prefix("abelian_") {
        let n: usize = n.parse().ok().filter(|&n| n > 0)?;
        return Some(HomLieAlgebra::abelian(n));
    }
    if let Some(q) = name.strip_prefix("aff1_") {
        let q: i64 = q.parse().ok().filter(|&q| q > 0)?;
        let twist = Matrix::diag(&[F::one(), F::int(q)]);
        return HomLieAlgebra::from_brackets(name, 2, &[(0, 1, vec![(1, F::one())])], twist).ok();
    }
    match name {
        "heisenberg3" => heisenberg(name, Matrix::identity(3)),
        "heisenberg3_236" => heisenberg(name, Matrix::diag(&[F::int(2), F::int(3), F::int(6)])),
        "sl2" => HomLieAlgebra::from_brackets(
            name,
            3,
            &[
                (0, 1, vec![(1, F::int(2))]),
                (0, 2, vec![(2, F::int(-2))]),
                (1, 2, vec![(0, F::one())]),
            ],
            Matrix::identity(3),
        )
        .ok(),
        _ => None,
    }
}

fn heisenberg<F: Scalar>(name: &str, twist: Matrix<F>) -> Option<HomLieAlgebra<F>> {
    HomLieAlgebra::from_brackets(name, 3, &[(0, 1, vec![(2, F::one())])], twist).ok()
}
