//! Seeded random generators for property tests and self-checks.
//!
//! Every generator draws from a caller-supplied [`Rng`], so a fixed seed
//! gives a reproducible stream of algebras, representations, cochains and
//! extension data. Random algebras are Yau twists `(L, alpha[.,.], alpha)` of
//! small Lie algebras by automorphisms, moved to a random basis.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cohom::{cochain_space, cohomology, restrict_to_center, Cochain, Representation};
use crate::derived::derivation_algebra;
use crate::error::Result;
use crate::exactla::{kernel, matrix_of, Matrix, Subspace};
use crate::extend::ExtensionData;
use crate::homlie::{fixture, HomLieAlgebra};
use crate::Scalar;

/// An integer in `[-bound, bound]`.
pub fn small_int<F: Scalar, R: Rng + ?Sized>(rng: &mut R, bound: i64) -> F {
    F::int(rng.gen_range(-bound..=bound))
}

/// A rational `p/q` with `|p| <= 3`, `q` in `{1, 2}`.
pub fn small_rational<F: Scalar, R: Rng + ?Sized>(rng: &mut R) -> F {
    F::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

/// A non-zero rational of the same shape.
pub fn nonzero_rational<F: Scalar, R: Rng + ?Sized>(rng: &mut R) -> F {
    loop {
        let x = small_rational::<F, R>(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A random linear combination with small integer coefficients.
pub fn combination<F: Scalar, R: Rng + ?Sized>(rng: &mut R, space: &Subspace<F>) -> Vec<F> {
    let coeffs: Vec<F> = (0..space.dim()).map(|_| small_int(rng, 2)).collect();
    space.from_coordinates(&coeffs)
}

/// An invertible matrix with entries in `[-2, 2]`.
pub fn invertible<F: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix<F> {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| small_int(rng, 2));
        if m.is_invertible() {
            return m;
        }
    }
}

/// A product of unit lower and unit upper triangular matrices with entries
/// in `{-1, 0, 1}`: determinant 1 and an integral inverse.
pub fn unimodular<F: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix<F> {
    let mut tri = |lower: bool| {
        Matrix::from_fn(n, n, |r, c| {
            if r == c {
                F::one()
            } else if (r > c) == lower {
                small_int(rng, 1)
            } else {
                F::zero()
            }
        })
    };
    let l = tri(true);
    let u = tri(false);
    &l * &u
}

/// The same algebra in the basis given by the columns of `p`:
/// `[x, y]' = p^-1 [p x, p y]`, `phi' = p^-1 phi p`.
pub fn change_basis<F: Scalar>(g: &HomLieAlgebra<F>, p: &Matrix<F>) -> Result<HomLieAlgebra<F>> {
    let n = g.dim();
    let p_inv = p.try_inverse("change of basis")?;
    let cols: Vec<Vec<F>> = (0..n).map(|i| p.column(i)).collect();
    let mut structure = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            structure.extend(p_inv.mul_vec(&g.bracket(&cols[i], &cols[j])?));
        }
    }
    let twist = &(&p_inv * g.twist()) * p;
    HomLieAlgebra::new(g.name(), n, structure, twist)
}

/// A Lie algebra (twist = identity) with an automorphism and the Lie
/// representations compatible with it, before twisting.
struct TwistableLie<F> {
    lie: HomLieAlgebra<F>,
    alpha: Matrix<F>,
    /// `(rho, beta)` with `rho(alpha x) = beta rho(x) beta^-1`.
    reps: Vec<(Vec<Matrix<F>>, Matrix<F>)>,
}

fn named<F: Scalar>(name: &str) -> HomLieAlgebra<F> {
    fixture(name).expect("built-in fixture")
}

fn aff1_auto<F: Scalar, R: Rng + ?Sized>(rng: &mut R) -> Matrix<F> {
    // e1 -> e1 + t e2, e2 -> s e2
    let (t, s): (F, F) = (small_rational(rng), nonzero_rational(rng));
    Matrix::from_fn(2, 2, |r, c| match (r, c) {
        (0, 0) => F::one(),
        (1, 0) => t.clone(),
        (1, 1) => s.clone(),
        _ => F::zero(),
    })
}

fn heisenberg_auto<F: Scalar, R: Rng + ?Sized>(rng: &mut R) -> Matrix<F> {
    let a: Matrix<F> = invertible(rng, 2);
    let (p, q): (F, F) = (small_int(rng, 2), small_int(rng, 2));
    let det = a.det();
    Matrix::from_fn(3, 3, |r, c| match (r, c) {
        (2, 0) => p.clone(),
        (2, 1) => q.clone(),
        (2, 2) => det.clone(),
        (r, c) if r < 2 && c < 2 => a.get(r, c).clone(),
        _ => F::zero(),
    })
}

/// `exp(t ad_x)` for a nilpotent `ad_x` with `ad_x^3 = 0`.
fn unipotent<F: Scalar>(ad: &Matrix<F>, t: &F) -> Matrix<F> {
    let sq = ad * ad;
    let half = t.clone() * t.clone() / F::int(2);
    &(&Matrix::identity(ad.rows()) + &ad.scale(t)) + &sq.scale(&half)
}

fn sl2_auto<F: Scalar, R: Rng + ?Sized>(rng: &mut R, sl2: &HomLieAlgebra<F>) -> Matrix<F> {
    let s: F = nonzero_rational(rng);
    let scale = Matrix::diag(&[F::one(), s.clone(), F::one() / s]);
    let ue = unipotent(&sl2.ad_basis(1), &small_rational(rng));
    let uf = unipotent(&sl2.ad_basis(2), &small_rational(rng));
    &(&scale * &ue) * &uf
}

fn padded<F: Scalar>(m: &Matrix<F>, extra: usize) -> Matrix<F> {
    m.block_diag(&Matrix::zeros(extra, extra))
}

fn twistable<F: Scalar, R: Rng + ?Sized>(rng: &mut R, max_dim: usize) -> TwistableLie<F> {
    let mut kinds = vec!["abelian", "aff1", "heisenberg", "sl2"];
    if max_dim >= 4 {
        kinds.extend(["aff1+abelian", "aff1+aff1", "heisenberg+abelian"]);
    }
    let kind = *kinds.choose(rng).expect("non-empty");
    let (lie, alpha, factor): (HomLieAlgebra<F>, Matrix<F>, Option<(Matrix<F>, usize)>) = match kind {
        "abelian" => {
            let n = rng.gen_range(1..=max_dim.min(3));
            (HomLieAlgebra::abelian(n), invertible(rng, n), None)
        }
        "aff1" => (named("aff1_1"), aff1_auto(rng), None),
        "heisenberg" => (named("heisenberg3"), heisenberg_auto(rng), None),
        "sl2" => {
            let l = named("sl2");
            let a = sl2_auto(rng, &l);
            (l, a, None)
        }
        "aff1+abelian" => {
            let a1 = aff1_auto(rng);
            let c: F = nonzero_rational(rng);
            let l = named::<F>("aff1_1").direct_sum(&HomLieAlgebra::abelian(1));
            (l, a1.block_diag(&Matrix::diag(&[c])), Some((a1, 1)))
        }
        "aff1+aff1" => {
            let a1 = aff1_auto(rng);
            let a2 = aff1_auto(rng);
            let l = named::<F>("aff1_1").direct_sum(&named("aff1_1"));
            (l, a1.block_diag(&a2), Some((a1, 2)))
        }
        _ => {
            let a1 = heisenberg_auto(rng);
            let c: F = nonzero_rational(rng);
            let l = named::<F>("heisenberg3").direct_sum(&HomLieAlgebra::abelian(1));
            (l, a1.block_diag(&Matrix::diag(&[c])), Some((a1, 1)))
        }
    };
    let lie = lie.with_twist(Matrix::identity(lie.dim())).expect("square twist");
    let n = lie.dim();
    let ad: Vec<Matrix<F>> = (0..n).map(|i| lie.ad_basis(i)).collect();
    let mut reps = Vec::new();
    for v in 1..=3 {
        reps.push((vec![Matrix::zeros(v, v); n], invertible(rng, v)));
    }
    if n <= 3 {
        reps.push((ad.clone(), alpha.clone()));
    }
    if n <= 2 {
        let c: F = nonzero_rational(rng);
        reps.push((ad.iter().map(|a| padded(a, 1)).collect(), alpha.block_diag(&Matrix::diag(&[c]))));
    }
    if let Some((a1, extra)) = factor {
        // The adjoint action of the first summand, through the projection.
        let k = n - extra;
        let rho = (0..n)
            .map(|i| {
                if i < k {
                    Matrix::from_fn(k, k, |r, c| ad[i].get(r, c).clone())
                } else {
                    Matrix::zeros(k, k)
                }
            })
            .collect();
        reps.push((rho, a1));
    }
    TwistableLie { lie, alpha, reps }
}

/// A random valid regular Hom-Lie algebra of dimension at most `max_dim`
/// (`max_dim` is 3 or 4).
pub fn hom_lie<F: Scalar, R: Rng + ?Sized>(rng: &mut R, max_dim: usize) -> HomLieAlgebra<F> {
    hom_lie_with_rep(rng, max_dim).0
}

/// A random valid algebra together with a random valid representation of
/// dimension at most 3.
pub fn hom_lie_with_rep<F: Scalar, R: Rng + ?Sized>(
    rng: &mut R,
    max_dim: usize,
) -> (HomLieAlgebra<F>, Representation<F>) {
    let t = twistable::<F, R>(rng, max_dim);
    let n = t.lie.dim();
    let (rho, beta) = t.reps.choose(rng).expect("trivial representations exist").clone();
    let twisted = t.lie.yau_twist(&t.alpha).expect("automorphism has the right shape");
    let p = unimodular(rng, n);
    let g = change_basis(&twisted, &p).expect("unimodular basis change").renamed("random");
    // rho~(x) = beta rho(x), pulled back along p, then conjugated by q on V.
    let v = beta.rows();
    let q: Matrix<F> = unimodular(rng, v);
    let q_inv = q.try_inverse("basis of V").expect("unimodular");
    let tilde: Vec<Matrix<F>> = rho.iter().map(|r| &beta * r).collect();
    let moved = (0..n)
        .map(|i| {
            let mut acc = Matrix::zeros(v, v);
            for (k, r) in tilde.iter().enumerate() {
                acc = &acc + &r.scale(p.get(k, i));
            }
            &(&q_inv * &acc) * &q
        })
        .collect();
    let beta = &(&q_inv * &beta) * &q;
    let rep = Representation::new(g.clone(), moved, beta).expect("invertible beta");
    debug_assert!(g.is_valid());
    (g, rep)
}

/// A random compatible `k`-cochain of `r`.
pub fn cochain<F: Scalar, R: Rng + ?Sized>(rng: &mut R, r: &Representation<F>, k: usize) -> Result<Cochain<F>> {
    let space = cochain_space(r, k)?;
    Cochain::from_values(k, r.base().dim(), r.v_dim(), combination(rng, &space))
}

/// `{xi: g -> h | phi_h xi = xi phi_g}`, vectorized row-major.
pub fn equivariant_maps<F: Scalar>(g: &HomLieAlgebra<F>, h: &HomLieAlgebra<F>) -> Subspace<F> {
    let (n, m) = (g.dim(), h.dim());
    let system = matrix_of(m * n, m * n, |k| {
        let xi = Matrix::from_fn(m, n, |r, c| if r * n + c == k { F::one() } else { F::zero() });
        (&(h.twist() * &xi) - &(&xi * g.twist())).into_vec()
    });
    kernel(&system)
}

/// Generates valid extension data over a fixed `(g, h)`.
///
/// A datum is drawn as follows, then moved by a random equivariant `xi`:
/// for one-dimensional `g`, `rho(e1)` is a random derivation with
/// `phi_h D = c D phi_h` (where `phi_g e1 = c e1`) and `omega = 0`;
/// otherwise `rho = 0` and `omega` is a random central 2-cocycle.
#[derive(Debug, Clone)]
pub struct DataSampler<F> {
    g: HomLieAlgebra<F>,
    h: HomLieAlgebra<F>,
    actions: Option<Subspace<F>>,
    cocycles: Vec<Cochain<F>>,
    xi_space: Subspace<F>,
}

impl<F: Scalar> DataSampler<F> {
    pub fn new(g: &HomLieAlgebra<F>, h: &HomLieAlgebra<F>) -> Result<Self> {
        g.ensure_valid()?;
        h.ensure_valid()?;
        let (n, m) = (g.dim(), h.dim());
        let mut actions = None;
        let mut cocycles = Vec::new();
        if n == 1 {
            let c = g.twist().get(0, 0).clone();
            let der = derivation_algebra(h)?;
            let psi = h.twist();
            let basis = der.basis_matrices();
            let constraint = matrix_of(m * m, basis.len(), |k| {
                (&(psi * &basis[k]) - &(&basis[k] * psi).scale(&c)).into_vec()
            });
            let coeffs = kernel(&constraint);
            let vecs: Vec<Vec<F>> = coeffs
                .basis()
                .iter()
                .map(|w| {
                    let mut acc = Matrix::zeros(m, m);
                    for (b, x) in basis.iter().zip(w) {
                        acc = &acc + &b.scale(x);
                    }
                    acc.into_vec()
                })
                .collect();
            actions = Some(Subspace::span(m * m, &vecs));
        } else {
            let rho = vec![Matrix::zeros(m, m); n];
            let hat = restrict_to_center(g, h, &rho)?;
            let cen = h.center()?.basis_columns();
            let z2 = cohomology(&hat, 2)?;
            for v in z2.cocycles().basis() {
                let lam = Cochain::from_values(2, n, hat.v_dim(), v.clone())?;
                cocycles.push(lam.map_values(&cen));
            }
        }
        Ok(DataSampler {
            g: g.clone(),
            h: h.clone(),
            actions,
            cocycles,
            xi_space: equivariant_maps(g, h),
        })
    }

    pub fn g(&self) -> &HomLieAlgebra<F> {
        &self.g
    }

    pub fn h(&self) -> &HomLieAlgebra<F> {
        &self.h
    }

    /// A random valid datum.
    pub fn valid<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<ExtensionData<F>> {
        let (n, m) = (self.g.dim(), self.h.dim());
        let base = match &self.actions {
            Some(space) => {
                let d = Matrix::from_vec(m, m, combination(rng, space))?;
                ExtensionData::new(self.g.clone(), self.h.clone(), vec![d], Cochain::zero(2, n, m))?
            }
            None => {
                let mut omega = Cochain::zero(2, n, m);
                for c in &self.cocycles {
                    omega = omega.add(&c.scale(&small_int(rng, 2)));
                }
                ExtensionData::trivial(self.g.clone(), self.h.clone()).with_omega(omega)?
            }
        };
        let xi = Matrix::from_vec(m, n, combination(rng, &self.xi_space))?;
        crate::extend::transport(&base, &xi)
    }

    /// A valid datum with one coefficient of `rho` or `omega` perturbed by a
    /// non-zero rational. The result may or may not still be valid.
    pub fn mutated<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<ExtensionData<F>> {
        let d = self.valid(rng)?;
        let (n, m) = (self.g.dim(), self.h.dim());
        let delta: F = nonzero_rational(rng);
        let mut rho = d.rho().to_vec();
        let mut omega = d.omega().clone();
        let omega_len = omega.values().len();
        let slot = rng.gen_range(0..n * m * m + omega_len);
        if slot < n * m * m {
            let (i, rest) = (slot / (m * m), slot % (m * m));
            let (r, c) = (rest / m, rest % m);
            let x = rho[i].get(r, c).clone() + delta;
            rho[i].set(r, c, x);
        } else {
            let mut values = omega.into_values();
            let k = slot - n * m * m;
            values[k] = values[k].clone() + delta;
            omega = Cochain::from_values(2, n, m, values)?;
        }
        ExtensionData::new(self.g.clone(), self.h.clone(), rho, omega)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;
    use rand::SeedableRng;

    #[test]
    fn generated_algebras_and_representations_are_valid() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..40 {
            let (g, r) = hom_lie_with_rep::<Q, _>(&mut rng, 4);
            assert!(g.is_valid(), "{g:?}");
            assert!(r.is_valid().unwrap());
            assert!(r.v_dim() <= 3 && g.dim() <= 4);
        }
    }

    #[test]
    fn sampled_data_are_valid() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for (gn, hn) in [("abelian_1", "heisenberg3_236"), ("abelian_2", "heisenberg3"), ("aff1_2", "aff1_1")] {
            let s = DataSampler::new(&named::<Q>(gn), &named(hn)).unwrap();
            for _ in 0..5 {
                assert!(s.valid(&mut rng).unwrap().is_valid().unwrap());
            }
        }
    }
}
