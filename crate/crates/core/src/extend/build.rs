use crate::cohom::Cochain;
use crate::derived::invariant_complement;
use crate::error::{check_dim, Error, Result};
use crate::exactla::{image, solve, vector, Matrix};
use crate::homlie::{is_morphism, HomLieAlgebra};
use crate::Scalar;

use super::ExtensionData;

/// A short exact sequence `h -> total -> g` of Hom-Lie algebras, with the
/// maps as matrices in the standard bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawExtension<F> {
    g: HomLieAlgebra<F>,
    h: HomLieAlgebra<F>,
    total: HomLieAlgebra<F>,
    iota: Matrix<F>,
    p: Matrix<F>,
}

impl<F: Scalar> RawExtension<F> {
    /// Checks exactness and that both maps are Hom-Lie morphisms.
    pub fn new(
        g: HomLieAlgebra<F>,
        h: HomLieAlgebra<F>,
        total: HomLieAlgebra<F>,
        iota: Matrix<F>,
        p: Matrix<F>,
    ) -> Result<Self> {
        let (n, m, t) = (g.dim(), h.dim(), total.dim());
        check_dim("extension total dimension", n + m, t)?;
        check_dim("inclusion rows", t, iota.rows())?;
        check_dim("inclusion columns", m, iota.cols())?;
        check_dim("projection rows", n, p.rows())?;
        check_dim("projection columns", t, p.cols())?;
        for (what, alg) in [("g", &g), ("h", &h), ("total", &total)] {
            alg.ensure_valid()
                .map_err(|e| Error::Precondition(format!("algebra {what} is not Hom-Lie: {e}")))?;
        }
        if iota.rank() != m || p.rank() != n || !(&p * &iota).is_zero() {
            return Err(Error::Precondition("maps do not form a short exact sequence".into()));
        }
        if let Some(w) = is_morphism(&iota, &h, &total)? {
            return Err(Error::Precondition(format!("inclusion is not a morphism: {w}")));
        }
        if let Some(w) = is_morphism(&p, &total, &g)? {
            return Err(Error::Precondition(format!("projection is not a morphism: {w}")));
        }
        Ok(RawExtension { g, h, total, iota, p })
    }

    pub fn g(&self) -> &HomLieAlgebra<F> {
        &self.g
    }

    pub fn h(&self) -> &HomLieAlgebra<F> {
        &self.h
    }

    pub fn total(&self) -> &HomLieAlgebra<F> {
        &self.total
    }

    pub fn iota(&self) -> &Matrix<F> {
        &self.iota
    }

    pub fn p(&self) -> &Matrix<F> {
        &self.p
    }

    /// Whether `s: g -> total` satisfies `p s = id` and `phi s = s phi_g`.
    pub fn is_diagonal_section(&self, s: &Matrix<F>) -> bool {
        s.rows() == self.total.dim()
            && s.cols() == self.g.dim()
            && &self.p * s == Matrix::identity(self.g.dim())
            && self.total.twist() * s == s * self.g.twist()
    }

    /// A diagonal section built from a twist-invariant complement of
    /// `iota(h)`, or `None` if there is none over the base field.
    pub fn diagonal_section(&self) -> Result<Option<Matrix<F>>> {
        let t = self.total.dim();
        let Some(w) = invariant_complement(t, &image(&self.iota), self.total.twist())? else {
            return Ok(None);
        };
        let wb = w.basis_columns();
        let pw = (&self.p * &wb)
            .inverse()
            .ok_or_else(|| Error::Internal("complement does not map onto g".into()))?;
        let s = &wb * &pw;
        if !self.is_diagonal_section(&s) {
            return Err(Error::Internal("constructed section is not diagonal".into()));
        }
        Ok(Some(s))
    }

    fn pull_back(&self, v: &[F]) -> Result<Vec<F>> {
        let sol = solve(&self.iota, v)?
            .ok_or_else(|| Error::Internal("value does not lie in the image of h".into()))?;
        Ok(sol.particular)
    }

    /// Extension datum relative to `section`, or relative to a computed
    /// diagonal section when `section` is `None`.
    pub fn extract(&self, section: Option<&Matrix<F>>) -> Result<(ExtensionData<F>, Matrix<F>)> {
        let s = match section {
            Some(s) => {
                if !self.is_diagonal_section(s) {
                    return Err(Error::Precondition("supplied section is not a diagonal section".into()));
                }
                s.clone()
            }
            None => self.diagonal_section()?.ok_or_else(|| {
                Error::NotDiagonal("the twist of the total algebra admits no invariant complement of h".into())
            })?,
        };
        let (n, m) = (self.g.dim(), self.h.dim());
        let sx: Vec<Vec<F>> = (0..n).map(|i| s.column(i)).collect();
        let iu: Vec<Vec<F>> = (0..m).map(|a| self.iota.column(a)).collect();
        let mut rho = Vec::with_capacity(n);
        for x in &sx {
            let cols = iu
                .iter()
                .map(|u| self.pull_back(&self.total.br(x, u)))
                .collect::<Result<Vec<_>>>()?;
            rho.push(Matrix::from_columns(m, &cols));
        }
        let mut omega = Cochain::zero(2, n, m);
        for i in 0..n {
            for j in i + 1..n {
                let top = self.total.br(&sx[i], &sx[j]);
                let lifted = s.mul_vec(self.g.basis_bracket(i, j));
                omega.set_value(&[i, j], &self.pull_back(&vector::sub(&top, &lifted))?);
            }
        }
        let data = ExtensionData::new(self.g.clone(), self.h.clone(), rho, omega)?;
        let report = data.validate()?;
        if !report.is_valid() {
            return Err(Error::Internal(format!("extracted datum is invalid: {report}")));
        }
        Ok((data, s))
    }
}

/// The total algebra `g ⊕ h` of a valid extension datum, in the basis
/// `(e_1..e_n, f_1..f_m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionAlgebra<F> {
    data: ExtensionData<F>,
    raw: RawExtension<F>,
    section: Matrix<F>,
}

/// Total algebra of `(rho, omega)` without checking the datum; the result
/// may fail Hom-Lie validation.
pub fn build_extension_unchecked<F: Scalar>(data: &ExtensionData<F>) -> HomLieAlgebra<F> {
    let (g, h) = (data.g(), data.h());
    let (n, m) = (g.dim(), h.dim());
    let t = n + m;
    let mut structure = vector::zeros(t * t * t);
    let mut put = |i: usize, j: usize, v: &[F], offset: usize| {
        for (k, x) in v.iter().enumerate() {
            structure[(i * t + j) * t + offset + k] = x.clone();
        }
    };
    for i in 0..n {
        for j in 0..n {
            put(i, j, g.basis_bracket(i, j), 0);
            put(i, j, &data.omega().eval_basis(&[i, j]), n);
        }
        for a in 0..m {
            let col = data.rho()[i].column(a);
            put(i, n + a, &col, n);
            put(n + a, i, &vector::neg(&col), n);
        }
    }
    for a in 0..m {
        for b in 0..m {
            put(n + a, n + b, h.basis_bracket(a, b), n);
        }
    }
    let name = format!("ext({},{})", g.name(), h.name());
    HomLieAlgebra::new(name, t, structure, g.twist().block_diag(h.twist())).expect("consistent shapes")
}

pub fn build_extension<F: Scalar>(data: &ExtensionData<F>) -> Result<ExtensionAlgebra<F>> {
    data.g().ensure_valid()?;
    data.h().ensure_valid()?;
    let report = data.validate()?;
    if !report.is_valid() {
        return Err(Error::InvalidExtensionData(report));
    }
    let total = build_extension_unchecked(data);
    let report = total.validate();
    if !report.is_valid() {
        return Err(Error::Internal(format!("total algebra of a valid datum is not Hom-Lie: {report}")));
    }
    let (n, m) = (data.g().dim(), data.h().dim());
    let t = n + m;
    let iota = Matrix::from_fn(t, m, |r, c| if r == n + c { F::one() } else { F::zero() });
    let p = Matrix::from_fn(n, t, |r, c| if r == c { F::one() } else { F::zero() });
    let section = p.transpose();
    let raw = RawExtension::new(data.g().clone(), data.h().clone(), total, iota, p)
        .map_err(|e| Error::Internal(format!("extension maps are not morphisms: {e}")))?;
    if !raw.is_diagonal_section(&section) {
        return Err(Error::Internal("canonical section is not diagonal".into()));
    }
    Ok(ExtensionAlgebra {
        data: data.clone(),
        raw,
        section,
    })
}

impl<F: Scalar> ExtensionAlgebra<F> {
    pub fn data(&self) -> &ExtensionData<F> {
        &self.data
    }

    pub fn total(&self) -> &HomLieAlgebra<F> {
        self.raw.total()
    }

    pub fn iota(&self) -> &Matrix<F> {
        self.raw.iota()
    }

    pub fn p(&self) -> &Matrix<F> {
        self.raw.p()
    }

    /// The canonical diagonal section `x -> x + 0`.
    pub fn section(&self) -> &Matrix<F> {
        &self.section
    }

    pub fn raw(&self) -> &RawExtension<F> {
        &self.raw
    }
}

/// Recovers `(rho, omega)` from an extension.
pub fn extract_data<F: Scalar>(raw: &RawExtension<F>, section: Option<&Matrix<F>>) -> Result<ExtensionData<F>> {
    Ok(raw.extract(section)?.0)
}
