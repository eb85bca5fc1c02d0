use std::fmt;

use crate::cohom::{coboundary_with, rho_of, Cochain};
use crate::derived::is_derivation;
use crate::error::{check_dim, Result};
use crate::exactla::{vector, Matrix};
use crate::homlie::{gl_bracket, HomLieAlgebra};
use crate::Scalar;

/// A pair `(rho, omega)` describing a diagonal extension of `g` by `h`:
/// `rho(e_i)` acts on `h`, and `omega` is an `h`-valued 2-cochain on `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionData<F> {
    g: HomLieAlgebra<F>,
    h: HomLieAlgebra<F>,
    rho: Vec<Matrix<F>>,
    omega: Cochain<F>,
}

/// One failed identity of an extension datum. Indices are 0-based; display
/// is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionViolation {
    /// `phi_h rho(e_i) != rho(phi e_i) phi_h`.
    ActionTwist { i: usize },
    /// `rho(e_i)` fails the derivation identity on `(f_a, f_b)`.
    NotDerivation { i: usize, a: usize, b: usize },
    /// `phi_h omega(e_i, e_j) != omega(phi e_i, phi e_j)`.
    CochainTwist { i: usize, j: usize },
    /// `[rho_i, rho_j]_{phi_h} - rho([e_i, e_j]) != ad_{omega(e_i, e_j)}`.
    Curvature { i: usize, j: usize },
    /// `(d_rho omega)(e_i, e_j, e_k) != 0`.
    Cocycle { i: usize, j: usize, k: usize },
}

impl ExtensionViolation {
    /// Short stable name of the failed identity.
    pub fn kind(&self) -> &'static str {
        match self {
            ExtensionViolation::ActionTwist { .. } => "action-twist",
            ExtensionViolation::NotDerivation { .. } => "derivation",
            ExtensionViolation::CochainTwist { .. } => "cochain-twist",
            ExtensionViolation::Curvature { .. } => "curvature",
            ExtensionViolation::Cocycle { .. } => "cocycle",
        }
    }
}

impl fmt::Display for ExtensionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ExtensionViolation::ActionTwist { i } => {
                write!(f, "action-twist: phi_h rho(x) != rho(phi x) phi_h at x=e{}", i + 1)
            }
            ExtensionViolation::NotDerivation { i, a, b } => write!(
                f,
                "derivation: rho(e{}) is not a derivation of h at (f{},f{})",
                i + 1,
                a + 1,
                b + 1
            ),
            ExtensionViolation::CochainTwist { i, j } => {
                write!(f, "cochain-twist: phi_h omega != omega(phi, phi) at (e{},e{})", i + 1, j + 1)
            }
            ExtensionViolation::Curvature { i, j } => {
                write!(f, "curvature: [rho_x,rho_y] - rho_[x,y] != ad_omega(x,y) at (e{},e{})", i + 1, j + 1)
            }
            ExtensionViolation::Cocycle { i, j, k } => {
                write!(f, "cocycle: d_rho omega != 0 at (e{},e{},e{})", i + 1, j + 1, k + 1)
            }
        }
    }
}

/// Every violated identity of an extension datum; empty iff the datum is
/// valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExtensionReport {
    pub violations: Vec<ExtensionViolation>,
}

impl ExtensionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ExtensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid extension datum");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("; "))
    }
}

impl<F: Scalar> ExtensionData<F> {
    pub fn new(g: HomLieAlgebra<F>, h: HomLieAlgebra<F>, rho: Vec<Matrix<F>>, omega: Cochain<F>) -> Result<Self> {
        let (n, m) = (g.dim(), h.dim());
        check_dim("extension action count", n, rho.len())?;
        for r in &rho {
            check_dim("extension action rows", m, r.rows())?;
            check_dim("extension action columns", m, r.cols())?;
        }
        check_dim("extension cochain degree", 2, omega.degree())?;
        check_dim("extension cochain domain", n, omega.g_dim())?;
        check_dim("extension cochain values", m, omega.v_dim())?;
        Ok(ExtensionData { g, h, rho, omega })
    }

    /// `rho = 0`, `omega = 0`: the direct product.
    pub fn trivial(g: HomLieAlgebra<F>, h: HomLieAlgebra<F>) -> Self {
        let (n, m) = (g.dim(), h.dim());
        ExtensionData {
            rho: vec![Matrix::zeros(m, m); n],
            omega: Cochain::zero(2, n, m),
            g,
            h,
        }
    }

    pub fn g(&self) -> &HomLieAlgebra<F> {
        &self.g
    }

    pub fn h(&self) -> &HomLieAlgebra<F> {
        &self.h
    }

    pub fn rho(&self) -> &[Matrix<F>] {
        &self.rho
    }

    pub fn omega(&self) -> &Cochain<F> {
        &self.omega
    }

    pub fn rho_of(&self, x: &[F]) -> Matrix<F> {
        rho_of(&self.rho, self.h.dim(), x)
    }

    pub fn with_omega(&self, omega: Cochain<F>) -> Result<Self> {
        Self::new(self.g.clone(), self.h.clone(), self.rho.clone(), omega)
    }

    /// `d_rho omega` with the formal coboundary (values in `h`).
    pub fn formal_coboundary(&self) -> Cochain<F> {
        coboundary_with(&self.g, &self.rho, &self.omega)
    }

    /// Checks all five identities and lists every failure.
    pub fn validate(&self) -> Result<ExtensionReport> {
        let (g, h) = (&self.g, &self.h);
        let n = g.dim();
        let phi = g.twist();
        let psi = h.twist();
        let mut violations = Vec::new();
        for i in 0..n {
            if psi * &self.rho[i] != &self.rho_of(&phi.column(i)) * psi {
                violations.push(ExtensionViolation::ActionTwist { i });
            }
        }
        for (i, r) in self.rho.iter().enumerate() {
            if let Some((a, b)) = is_derivation(r, h)? {
                violations.push(ExtensionViolation::NotDerivation { i, a, b });
            }
        }
        let twisted = self.omega.precompose(phi);
        for i in 0..n {
            for j in i + 1..n {
                let lhs = psi.mul_vec(self.omega.value(&[i, j]));
                if lhs != twisted.value(&[i, j]) {
                    violations.push(ExtensionViolation::CochainTwist { i, j });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let comm = gl_bracket(&self.rho[i], &self.rho[j], psi)?;
                let lhs = &comm - &self.rho_of(g.basis_bracket(i, j));
                if lhs != h.ad(self.omega.value(&[i, j])) {
                    violations.push(ExtensionViolation::Curvature { i, j });
                }
            }
        }
        let d = self.formal_coboundary();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !vector::is_zero(d.value(&[i, j, k])) {
                        violations.push(ExtensionViolation::Cocycle { i, j, k });
                    }
                }
            }
        }
        Ok(ExtensionReport { violations })
    }

    pub fn is_valid(&self) -> Result<bool> {
        Ok(self.validate()?.is_valid())
    }
}

pub fn validate_extension_data<F: Scalar>(data: &ExtensionData<F>) -> Result<ExtensionReport> {
    data.validate()
}
