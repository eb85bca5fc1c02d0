use crate::cohom::{rho_of, Cochain};
use crate::derived::{
    derivation_algebra, invariant_complements, is_derivation, out_algebra, DerSection, InvariantComplements, OutAlgebra,
};
use crate::error::{check_dim, Error, Result, StandingSequence};
use crate::exactla::{solve, Matrix, Subspace};
use crate::homlie::{gl_bracket, is_morphism, HomLieAlgebra};
use crate::Scalar;

use super::iso::ad_map;
use super::ExtensionData;

/// A Hom-Lie morphism `rbar: g -> Out(h)`, given by the Out coordinates of
/// `rbar(e_i)` (column `i` of `images`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutMorphism<F> {
    g: HomLieAlgebra<F>,
    out: OutAlgebra<F>,
    images: Matrix<F>,
}

impl<F: Scalar> OutMorphism<F> {
    /// Checks that the images define a morphism into `Out(h)`.
    pub fn new(g: HomLieAlgebra<F>, out: OutAlgebra<F>, images: Matrix<F>) -> Result<Self> {
        check_dim("Out morphism rows", out.dim(), images.rows())?;
        check_dim("Out morphism columns", g.dim(), images.cols())?;
        g.ensure_valid()?;
        if let Some(w) = is_morphism(&images, &g, out.algebra())? {
            return Err(Error::Precondition(format!("map into Out(h) is not a morphism: {w}")));
        }
        Ok(OutMorphism { g, out, images })
    }

    /// The zero morphism into `Out(h)`.
    pub fn zero(g: HomLieAlgebra<F>, h: &HomLieAlgebra<F>) -> Result<Self> {
        let out = out_algebra(&derivation_algebra(h)?)?;
        let images = Matrix::zeros(out.dim(), g.dim());
        Self::new(g, out, images)
    }

    pub fn g(&self) -> &HomLieAlgebra<F> {
        &self.g
    }

    pub fn h(&self) -> &HomLieAlgebra<F> {
        self.out.derivations().base()
    }

    pub fn out(&self) -> &OutAlgebra<F> {
        &self.out
    }

    pub fn images(&self) -> &Matrix<F> {
        &self.images
    }

    pub fn image(&self, i: usize) -> Vec<F> {
        self.images.column(i)
    }
}

/// `rbar = pi ∘ rho` for a valid datum.
pub fn induced_out_morphism<F: Scalar>(data: &ExtensionData<F>) -> Result<OutMorphism<F>> {
    let report = data.validate()?;
    if !report.is_valid() {
        return Err(Error::InvalidExtensionData(report));
    }
    let out = out_algebra(&derivation_algebra(data.h())?)?;
    induced_with(data, &out)
}

pub(crate) fn induced_with<F: Scalar>(data: &ExtensionData<F>, out: &OutAlgebra<F>) -> Result<OutMorphism<F>> {
    let cols = data
        .rho()
        .iter()
        .map(|r| {
            out.project(r)
                .ok_or_else(|| Error::Internal("action of a valid datum is not a derivation".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let images = Matrix::from_columns(out.dim(), &cols);
    OutMorphism::new(data.g().clone(), out.clone(), images)
        .map_err(|e| Error::Internal(format!("induced map is not a morphism: {e}")))
}

/// `rho_x = s(rbar_x)` for a diagonal section `s` of `Der(h) -> Out(h)`.
pub fn lift_out_morphism<F: Scalar>(rbar: &OutMorphism<F>, s: &DerSection<F>) -> Result<Vec<Matrix<F>>> {
    let h = rbar.h();
    let mut rho = Vec::with_capacity(rbar.g.dim());
    for i in 0..rbar.g.dim() {
        let image = rbar.image(i);
        let d = s.apply(&image);
        if is_derivation(&d, h)?.is_some() || rbar.out.project(&d).as_deref() != Some(&image[..]) {
            return Err(Error::Internal("section does not lift Out classes to derivations".into()));
        }
        rho.push(d);
    }
    Ok(rho)
}

/// An equivariant right inverse `t` of `ad: h -> Inn(h)`: `ad ∘ t = id` and
/// `phi_h ∘ t = t ∘ Ad_phi`, given by inverting `ad` on a twist-invariant
/// complement `W` of `Cen(h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterSplitting<F> {
    h: HomLieAlgebra<F>,
    center: Subspace<F>,
    complement: Subspace<F>,
    /// Vectorized `ad_w` for the basis of `W`, as columns.
    ad_on_complement: Matrix<F>,
}

/// All twist-invariant complements of `Cen(h)`, or `None` when there is none
/// over the base field.
pub fn center_splittings<F: Scalar>(h: &HomLieAlgebra<F>) -> Result<Option<InvariantComplements<F>>> {
    let cen = h.center()?;
    invariant_complements(h.dim(), &cen, h.twist())
}

impl<F: Scalar> CenterSplitting<F> {
    pub fn canonical(h: &HomLieAlgebra<F>) -> Result<Self> {
        let fam = center_splittings(h)?.ok_or(Error::StandingSequence(StandingSequence::CenterOverInner))?;
        Self::from_complement(h, fam.canonical())
    }

    pub fn from_complement(h: &HomLieAlgebra<F>, w: Subspace<F>) -> Result<Self> {
        let center = h.center()?;
        if w.dim() + center.dim() != h.dim() || !w.intersect(&center)?.is_zero() {
            return Err(Error::Precondition("not a complement of Cen(h)".into()));
        }
        if !w.is_invariant_under(h.twist()) {
            return Err(Error::Precondition("complement of Cen(h) is not twist-invariant".into()));
        }
        let ad = ad_map(h);
        let ad_on_complement = &ad * &w.basis_columns();
        let split = CenterSplitting {
            h: h.clone(),
            center,
            complement: w,
            ad_on_complement,
        };
        let psi = h.twist();
        let psi_inv = psi.try_inverse("twist")?;
        for a in 0..h.dim() {
            let inner = h.ad_basis(a);
            let u = split.apply(&inner)?.expect("inner derivation");
            if h.ad(&u) != inner {
                return Err(Error::Internal("splitting is not a right inverse of ad".into()));
            }
            let moved = split.apply(&(&(psi * &inner) * &psi_inv))?.expect("inner derivation");
            if psi.mul_vec(&u) != moved {
                return Err(Error::Internal("splitting is not twist-equivariant".into()));
            }
        }
        Ok(split)
    }

    pub fn h(&self) -> &HomLieAlgebra<F> {
        &self.h
    }

    pub fn center(&self) -> &Subspace<F> {
        &self.center
    }

    pub fn complement(&self) -> &Subspace<F> {
        &self.complement
    }

    /// `t(D)`, or `None` if `D` is not inner.
    pub fn apply(&self, d: &Matrix<F>) -> Result<Option<Vec<F>>> {
        let m = self.h.dim();
        check_dim("splitting argument rows", m, d.rows())?;
        check_dim("splitting argument columns", m, d.cols())?;
        Ok(solve(&self.ad_on_complement, d.as_slice())?.map(|s| self.complement.from_coordinates(&s.particular)))
    }
}

/// `alpha(x, y) = [rho_x, rho_y]_{phi_h} - rho_{[x,y]}`.
pub(crate) fn curvature<F: Scalar>(g: &HomLieAlgebra<F>, h: &HomLieAlgebra<F>, rho: &[Matrix<F>], i: usize, j: usize) -> Result<Matrix<F>> {
    let comm = gl_bracket(&rho[i], &rho[j], h.twist())?;
    Ok(&comm - &rho_of(rho, h.dim(), g.basis_bracket(i, j)))
}

/// `omega = t ∘ alpha`, so that `ad_{omega(x,y)} = alpha(x, y)` and
/// `phi_h omega = omega phi_g^{⊗2}`.
pub fn construct_omega<F: Scalar>(
    g: &HomLieAlgebra<F>,
    rho: &[Matrix<F>],
    t: &CenterSplitting<F>,
) -> Result<Cochain<F>> {
    let h = t.h();
    let (n, m) = (g.dim(), h.dim());
    check_dim("action count", n, rho.len())?;
    let mut omega = Cochain::zero(2, n, m);
    for i in 0..n {
        for j in i + 1..n {
            let alpha = curvature(g, h, rho, i, j)?;
            let Some(u) = t.apply(&alpha)? else {
                return Err(Error::Precondition(format!(
                    "rbar is not liftable: [rho_x,rho_y] - rho_[x,y] is not inner at (e{},e{})",
                    i + 1,
                    j + 1
                )));
            };
            omega.set_value(&[i, j], &u);
        }
    }
    if omega.map_values(h.twist()) != omega.precompose(g.twist()) {
        return Err(Error::Precondition("action does not commute with the twists".into()));
    }
    Ok(omega)
}
