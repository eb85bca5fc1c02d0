//! Complements of an invariant subspace that are themselves invariant.
//!
//! Let `U` be `A`-invariant and `P0` the projection onto `U` along the
//! coordinate complement. Every projection onto `U` is `P0 + Q` with
//! `im Q ⊆ U` and `U ⊆ ker Q`; it commutes with `A` iff
//! `Q A - A Q = A P0 - P0 A`. Each solution gives the invariant complement
//! `ker(P0 + Q)`, and every invariant complement arises this way, so one
//! linear solve decides existence without leaving the base field.

use crate::error::{check_dim, Error, Result};
use crate::exactla::{kernel, matrix_of, solve, vector, Matrix, Subspace};
use crate::Scalar;

/// All `A`-invariant complements of `U`, parametrized affinely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantComplements<F> {
    subspace: Subspace<F>,
    /// `P0 + Q` for the particular solution (free variables zero).
    base_projection: Matrix<F>,
    /// Homogeneous solutions `Q`.
    free: Vec<Matrix<F>>,
}

pub fn invariant_complements<F: Scalar>(
    ambient_dim: usize,
    u: &Subspace<F>,
    a: &Matrix<F>,
) -> Result<Option<InvariantComplements<F>>> {
    check_dim("invariant_complement subspace", ambient_dim, u.ambient_dim())?;
    check_dim("invariant_complement rows", ambient_dim, a.rows())?;
    check_dim("invariant_complement cols", ambient_dim, a.cols())?;
    if !a.is_invertible() {
        return Err(Error::Singular("invariant_complement operator"));
    }
    if !u.is_invariant_under(a) {
        return Err(Error::Precondition("subspace is not invariant under the operator".into()));
    }
    let n = ambient_dim;
    let pivots = u.pivots();
    let mut p0 = Matrix::zeros(n, n);
    for (b, &p) in u.basis().iter().zip(pivots) {
        for (r, x) in b.iter().enumerate() {
            p0.set(r, p, x.clone());
        }
    }
    // Q_{ij} = u_i (e_j^T (I - P0)) for j outside the pivots.
    let non_pivots = u.non_pivots();
    let mut units = Vec::new();
    for b in u.basis() {
        for &j in &non_pivots {
            let mut row: Vec<F> = vector::unit(n, j);
            for (c, &p) in u.basis().iter().zip(pivots) {
                row[p] = row[p].clone() - c[j].clone();
            }
            units.push(Matrix::from_fn(n, n, |r, c| b[r].clone() * row[c].clone()));
        }
    }
    let commutator = |q: &Matrix<F>| &(q * a) - &(a * q);
    let system = matrix_of(n * n, units.len(), |k| commutator(&units[k]).into_vec());
    let target = &(a * &p0) - &(&p0 * a);
    let Some(sol) = solve(&system, target.as_slice())? else {
        return Ok(None);
    };
    let combine = |coeffs: &[F]| {
        let mut m = Matrix::zeros(n, n);
        for (c, q) in coeffs.iter().zip(&units) {
            if !c.is_zero() {
                m = &m + &q.scale(c);
            }
        }
        m
    };
    let base_projection = &p0 + &combine(&sol.particular);
    let free = sol.kernel.basis().iter().map(|k| combine(k)).collect();
    Ok(Some(InvariantComplements {
        subspace: u.clone(),
        base_projection,
        free,
    }))
}

/// The canonical `A`-invariant complement of `U`, or `None` if there is none
/// over the base field.
pub fn invariant_complement<F: Scalar>(
    ambient_dim: usize,
    u: &Subspace<F>,
    a: &Matrix<F>,
) -> Result<Option<Subspace<F>>> {
    Ok(invariant_complements(ambient_dim, u, a)?.map(|fam| fam.canonical()))
}

impl<F: Scalar> InvariantComplements<F> {
    /// Number of free parameters of the family.
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn subspace(&self) -> &Subspace<F> {
        &self.subspace
    }

    /// The `A`-commuting projection onto `U` for the given parameters
    /// (length [`dim`](Self::dim)).
    pub fn projection(&self, coeffs: &[F]) -> Matrix<F> {
        assert_eq!(coeffs.len(), self.free.len(), "complement family parameters");
        let mut p = self.base_projection.clone();
        for (c, q) in coeffs.iter().zip(&self.free) {
            if !c.is_zero() {
                p = &p + &q.scale(c);
            }
        }
        p
    }

    pub fn complement(&self, coeffs: &[F]) -> Subspace<F> {
        let w = kernel(&self.projection(coeffs));
        debug_assert_eq!(w.dim() + self.subspace.dim(), self.subspace.ambient_dim());
        w
    }

    pub fn canonical(&self) -> Subspace<F> {
        self.complement(&vector::zeros(self.free.len()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn qv(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| Q::int(x)).collect()
    }

    #[test]
    fn identity_gives_coordinate_complement() {
        let u = Subspace::span(3, &[qv(&[1, 2, 0])]);
        let w = invariant_complement(3, &u, &Matrix::identity(3)).unwrap().unwrap();
        assert_eq!(w, Subspace::span(3, &[qv(&[0, 1, 0]), qv(&[0, 0, 1])]));
    }

    #[test]
    fn jordan_block_has_none() {
        let u = Subspace::span(2, &[qv(&[1, 0])]);
        let a = Matrix::<Q>::from_i64(&[&[1, 1], &[0, 1]]);
        assert_eq!(invariant_complement(2, &u, &a).unwrap(), None);
    }

    #[test]
    fn eigenspace_complement() {
        let u = Subspace::span(2, &[qv(&[1, 0])]);
        let a = Matrix::diag(&qv(&[1, 2]));
        let w = invariant_complement(2, &u, &a).unwrap().unwrap();
        assert_eq!(w, Subspace::span(2, &[qv(&[0, 1])]));
    }

    #[test]
    fn non_obvious_complement() {
        // A = [[1,1],[0,2]]: U = span(e1); the invariant complement is the
        // 2-eigenspace span(1,1), not span(e2).
        let u = Subspace::span(2, &[qv(&[1, 0])]);
        let a = Matrix::<Q>::from_i64(&[&[1, 1], &[0, 2]]);
        let w = invariant_complement(2, &u, &a).unwrap().unwrap();
        assert_eq!(w, Subspace::span(2, &[qv(&[1, 1])]));
    }

    #[test]
    fn errors() {
        let u = Subspace::span(2, &[qv(&[1, 0])]);
        let swap = Matrix::<Q>::from_i64(&[&[0, 1], &[1, 0]]);
        assert!(matches!(invariant_complement(2, &u, &swap), Err(Error::Precondition(_))));
        let singular = Matrix::<Q>::from_i64(&[&[1, 0], &[0, 0]]);
        assert!(matches!(invariant_complement(2, &u, &singular), Err(Error::Singular(_))));
    }

    #[test]
    fn family_members_are_invariant_complements() {
        let u = Subspace::span(3, &[qv(&[1, 0, 0])]);
        let a = Matrix::<Q>::identity(3);
        let fam = invariant_complements(3, &u, &a).unwrap().unwrap();
        assert_eq!(fam.dim(), 2);
        let w = fam.complement(&qv(&[3, -1]));
        assert_eq!(w.dim(), 2);
        assert!(w.intersect(&u).unwrap().is_zero());
        assert!(w.is_invariant_under(&a));
    }
}
