use crate::error::{check_dim, Error, Result};
use crate::exactla::{kernel, matrix_of, solve, vector, Matrix, Subquotient, Subspace};
use crate::homlie::HomLieAlgebra;
use crate::Scalar;

use super::cochain::{binomial, Cochain};
use super::rep::{rho_of, Representation};

/// The coboundary formula for an arbitrary family of operators `rho(e_i)` on
/// `V`, with no compatibility checks:
///
/// `(df)(x_1..x_{k+1}) = sum_i (-1)^{i+1} rho(phi^{k-1} x_i) f(..x̂_i..)
///   + sum_{i<j} (-1)^{i+j} f([x_i,x_j], phi x_1, ..x̂_i..x̂_j.., phi x_{k+1})`.
///
/// For `k = 2` this is the formal operator used on extension data, where
/// `rho` acts on a possibly non-abelian `h`.
pub fn coboundary_with<F: Scalar>(g: &HomLieAlgebra<F>, rho: &[Matrix<F>], f: &Cochain<F>) -> Cochain<F> {
    let n = g.dim();
    let k = f.degree();
    let v = f.v_dim();
    assert_eq!(f.g_dim(), n, "cochain over a different algebra");
    assert_eq!(rho.len(), n, "one operator per basis element");
    let phi = g.twist();
    let phi_pow = phi.pow(k.saturating_sub(1) as u32);
    let acting: Vec<Matrix<F>> = (0..n).map(|i| rho_of(rho, v, &phi_pow.column(i))).collect();
    let phi_cols: Vec<Vec<F>> = (0..n).map(|i| phi.column(i)).collect();
    Cochain::from_fn(k + 1, n, v, |t| {
        let mut acc = vector::zeros(v);
        for (i, &ti) in t.iter().enumerate() {
            let rest: Vec<usize> = t.iter().enumerate().filter(|&(m, _)| m != i).map(|(_, &x)| x).collect();
            let term = acting[ti].mul_vec(f.value(&rest));
            if i % 2 == 0 {
                acc = vector::add(&acc, &term);
            } else {
                acc = vector::sub(&acc, &term);
            }
        }
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let br = g.basis_bracket(t[i], t[j]);
                if vector::is_zero(br) {
                    continue;
                }
                let mut args = Vec::with_capacity(k);
                args.push(br.to_vec());
                for (m, &tm) in t.iter().enumerate() {
                    if m != i && m != j {
                        args.push(phi_cols[tm].clone());
                    }
                }
                let term = f.eval(&args);
                if (i + j) % 2 == 0 {
                    acc = vector::add(&acc, &term);
                } else {
                    acc = vector::sub(&acc, &term);
                }
            }
        }
        acc
    })
}

impl<F: Scalar> Representation<F> {
    pub fn zero_cochain(&self, k: usize) -> Cochain<F> {
        Cochain::zero(k, self.base().dim(), self.v_dim())
    }

    pub fn is_compatible(&self, f: &Cochain<F>) -> bool {
        f.g_dim() == self.base().dim()
            && f.v_dim() == self.v_dim()
            && f.is_compatible(self.base().twist(), self.beta())
    }

    /// `d_rho f`; `f` must be a compatible cochain of degree at least 1.
    pub fn coboundary(&self, f: &Cochain<F>) -> Result<Cochain<F>> {
        check_dim("cochain algebra dimension", self.base().dim(), f.g_dim())?;
        check_dim("cochain value dimension", self.v_dim(), f.v_dim())?;
        if f.degree() == 0 {
            return Err(Error::UnsupportedDegree(0));
        }
        if !self.is_compatible(f) {
            return Err(Error::Precondition("cochain is not twist-compatible".into()));
        }
        let df = coboundary_with(self.base(), self.rho(), f);
        if !self.is_compatible(&df) {
            return Err(Error::Internal("coboundary left the compatible cochains".into()));
        }
        Ok(df)
    }
}

/// The compatible `k`-cochains `C^k(g; V)` inside the full alternating
/// coordinate space of dimension `C(n,k) * v_dim`.
pub fn cochain_space<F: Scalar>(r: &Representation<F>, k: usize) -> Result<Subspace<F>> {
    if k == 0 {
        return Err(Error::UnsupportedDegree(0));
    }
    let (n, v) = (r.base().dim(), r.v_dim());
    let full = binomial(n, k) * v;
    let phi = r.base().twist();
    let constraint = matrix_of(full, full, |c| {
        let mut values = vector::zeros(full);
        values[c] = F::one();
        let f = Cochain::from_values(k, n, v, values).expect("unit cochain");
        f.map_values(r.beta()).sub(&f.precompose(phi)).into_values()
    });
    Ok(kernel(&constraint))
}

/// `Z^k`, `B^k` and `H^k = Z^k / B^k` for a representation.
#[derive(Debug, Clone)]
pub struct Cohomology<F> {
    rep: Representation<F>,
    degree: usize,
    cochains: Subspace<F>,
    classes: Subquotient<F>,
    /// Basis of `C^{k-1}` as columns, and `d` applied to it; empty for `k = 1`.
    lower_basis: Matrix<F>,
    lower_image: Matrix<F>,
}

pub fn cohomology<F: Scalar>(r: &Representation<F>, k: usize) -> Result<Cohomology<F>> {
    let cochains = cochain_space(r, k)?;
    let (n, v) = (r.base().dim(), r.v_dim());
    let full = binomial(n, k) * v;
    let next = binomial(n, k + 1) * v;
    let as_cochain = |deg: usize, values: &[F]| Cochain::from_values(deg, n, v, values.to_vec());

    let images = cochains
        .basis()
        .iter()
        .map(|b| Ok(r.coboundary(&as_cochain(k, b)?)?.into_values()))
        .collect::<Result<Vec<_>>>()?;
    let d = Matrix::from_columns(next, &images);
    let cocycle_coords = kernel(&d);
    let cocycles = Subspace::span(
        full,
        &cocycle_coords
            .basis()
            .iter()
            .map(|c| vector::combine(full, c, cochains.basis()))
            .collect::<Vec<_>>(),
    );

    let (lower_basis, lower_image) = if k == 1 {
        (Matrix::zeros(0, 0), Matrix::zeros(full, 0))
    } else {
        let lower = cochain_space(r, k - 1)?;
        let imgs = lower
            .basis()
            .iter()
            .map(|b| Ok(r.coboundary(&as_cochain(k - 1, b)?)?.into_values()))
            .collect::<Result<Vec<_>>>()?;
        (lower.basis_columns(), Matrix::from_columns(full, &imgs))
    };
    let coboundaries = Subspace::span(full, &(0..lower_image.cols()).map(|c| lower_image.column(c)).collect::<Vec<_>>());
    if !coboundaries.is_subspace_of(&cocycles) {
        return Err(Error::Internal("d∘d is not zero".into()));
    }
    let classes = Subquotient::new(cocycles, coboundaries)?;
    Ok(Cohomology {
        rep: r.clone(),
        degree: k,
        cochains,
        classes,
        lower_basis,
        lower_image,
    })
}

impl<F: Scalar> Cohomology<F> {
    pub fn representation(&self) -> &Representation<F> {
        &self.rep
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cochains(&self) -> &Subspace<F> {
        &self.cochains
    }

    pub fn cocycles(&self) -> &Subspace<F> {
        self.classes.numerator()
    }

    pub fn coboundaries(&self) -> &Subspace<F> {
        self.classes.denominator()
    }

    pub fn classes(&self) -> &Subquotient<F> {
        &self.classes
    }

    /// `dim H^k`.
    pub fn dim(&self) -> usize {
        self.classes.dim()
    }

    fn cochain(&self, values: Vec<F>) -> Cochain<F> {
        Cochain::from_values(self.degree, self.rep.base().dim(), self.rep.v_dim(), values).expect("cochain shape")
    }

    /// Cocycles whose classes form the canonical basis of `H^k`.
    pub fn representatives(&self) -> Vec<Cochain<F>> {
        self.classes.representatives().into_iter().map(|v| self.cochain(v)).collect()
    }

    pub fn representative(&self, coords: &[F]) -> Cochain<F> {
        self.cochain(self.classes.representative(coords))
    }

    fn check_shape(&self, f: &Cochain<F>) -> Result<()> {
        check_dim("cochain degree", self.degree, f.degree())?;
        check_dim("cochain algebra dimension", self.rep.base().dim(), f.g_dim())?;
        check_dim("cochain value dimension", self.rep.v_dim(), f.v_dim())
    }

    pub fn is_cocycle(&self, f: &Cochain<F>) -> Result<bool> {
        self.check_shape(f)?;
        Ok(self.cocycles().contains(f.values()))
    }

    pub fn is_coboundary(&self, f: &Cochain<F>) -> Result<bool> {
        self.check_shape(f)?;
        Ok(self.coboundaries().contains(f.values()))
    }

    /// Coordinates of `[f]` in `H^k`; `None` if `f` is not a cocycle.
    pub fn class_of(&self, f: &Cochain<F>) -> Result<Option<Vec<F>>> {
        self.check_shape(f)?;
        Ok(self.classes.class_of(f.values()))
    }

    /// Whether `f - g` is a coboundary; both must be cocycles.
    pub fn same_class(&self, f: &Cochain<F>, g: &Cochain<F>) -> Result<bool> {
        self.check_shape(f)?;
        self.check_shape(g)?;
        if !self.cocycles().contains(f.values()) || !self.cocycles().contains(g.values()) {
            return Err(Error::Precondition("class comparison of non-cocycles".into()));
        }
        Ok(self.classes.same_class(f.values(), g.values()))
    }

    /// A compatible `(k-1)`-cochain `s` with `d s = f`, if one exists.
    pub fn primitive(&self, f: &Cochain<F>) -> Result<Option<Cochain<F>>> {
        self.check_shape(f)?;
        if self.degree == 1 {
            return Ok(f.is_zero().then(|| Cochain::zero(0, self.rep.base().dim(), self.rep.v_dim())));
        }
        let Some(sol) = solve(&self.lower_image, f.values())? else {
            return Ok(None);
        };
        let values = self.lower_basis.mul_vec(&sol.particular);
        let s = Cochain::from_values(self.degree - 1, self.rep.base().dim(), self.rep.v_dim(), values)?;
        if self.rep.coboundary(&s)? != *f {
            return Err(Error::Internal("primitive does not reproduce the coboundary".into()));
        }
        Ok(Some(s))
    }
}
