use crate::error::{check_dim, Result};
use crate::exactla::{vector, Matrix};
use crate::Scalar;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Strictly increasing `k`-tuples of `0..n` in lexicographic order.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    if k > n {
        return out;
    }
    let mut t: Vec<usize> = (0..k).collect();
    loop {
        out.push(t.clone());
        let Some(i) = (0..k).rev().find(|&i| t[i] < n - k + i) else {
            return out;
        };
        t[i] += 1;
        for j in i + 1..k {
            t[j] = t[j - 1] + 1;
        }
    }
}

/// Lexicographic rank of a strictly increasing tuple.
pub fn tuple_index(n: usize, tuple: &[usize]) -> usize {
    let k = tuple.len();
    let mut rank = 0;
    let mut start = 0;
    for (i, &c) in tuple.iter().enumerate() {
        for j in start..c {
            rank += binomial(n - 1 - j, k - 1 - i);
        }
        start = c + 1;
    }
    rank
}

/// Sorts `indices` in place and returns the permutation sign, or `None` if
/// an index repeats.
fn sort_with_sign(indices: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if indices.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(negative)
    }
}

/// An alternating `k`-linear map `g^k -> V`, stored on increasing basis tuples.
///
/// Coordinate `tuple_index(I) * v_dim + a` holds component `a` of `f(e_I)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cochain<F> {
    degree: usize,
    g_dim: usize,
    v_dim: usize,
    values: Vec<F>,
}

impl<F: Scalar> Cochain<F> {
    pub fn zero(degree: usize, g_dim: usize, v_dim: usize) -> Self {
        Cochain {
            degree,
            g_dim,
            v_dim,
            values: vector::zeros(binomial(g_dim, degree) * v_dim),
        }
    }

    pub fn from_values(degree: usize, g_dim: usize, v_dim: usize, values: Vec<F>) -> Result<Self> {
        check_dim("cochain coordinates", binomial(g_dim, degree) * v_dim, values.len())?;
        Ok(Cochain {
            degree,
            g_dim,
            v_dim,
            values,
        })
    }

    /// Builds a cochain from its values on increasing basis tuples.
    pub fn from_fn(degree: usize, g_dim: usize, v_dim: usize, mut f: impl FnMut(&[usize]) -> Vec<F>) -> Self {
        let mut values = Vec::with_capacity(binomial(g_dim, degree) * v_dim);
        for t in increasing_tuples(g_dim, degree) {
            let v = f(&t);
            assert_eq!(v.len(), v_dim, "cochain value length");
            values.extend(v);
        }
        Cochain {
            degree,
            g_dim,
            v_dim,
            values,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn g_dim(&self) -> usize {
        self.g_dim
    }

    pub fn v_dim(&self) -> usize {
        self.v_dim
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn into_values(self) -> Vec<F> {
        self.values
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.values)
    }

    /// `f(e_I)` for a strictly increasing tuple `I`.
    pub fn value(&self, tuple: &[usize]) -> &[F] {
        let start = tuple_index(self.g_dim, tuple) * self.v_dim;
        &self.values[start..start + self.v_dim]
    }

    pub fn set_value(&mut self, tuple: &[usize], value: &[F]) {
        assert_eq!(value.len(), self.v_dim, "cochain value length");
        let start = tuple_index(self.g_dim, tuple) * self.v_dim;
        self.values[start..start + self.v_dim].clone_from_slice(value);
    }

    /// `f(e_{i_1}, ..., e_{i_k})` for basis indices in any order.
    pub fn eval_basis(&self, indices: &[usize]) -> Vec<F> {
        assert_eq!(indices.len(), self.degree, "cochain arity");
        let mut sorted = indices.to_vec();
        match sort_with_sign(&mut sorted) {
            None => vector::zeros(self.v_dim),
            Some(false) => self.value(&sorted).to_vec(),
            Some(true) => vector::neg(self.value(&sorted)),
        }
    }

    /// Evaluation on arbitrary vectors by multilinear expansion.
    pub fn eval(&self, args: &[Vec<F>]) -> Vec<F> {
        assert_eq!(args.len(), self.degree, "cochain arity");
        let supports: Vec<Vec<(usize, &F)>> = args
            .iter()
            .map(|a| {
                assert_eq!(a.len(), self.g_dim, "cochain argument length");
                a.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        let mut acc = vector::zeros(self.v_dim);
        let mut chosen = Vec::with_capacity(self.degree);
        self.expand(&supports, &mut chosen, F::one(), &mut acc);
        acc
    }

    fn expand(&self, supports: &[Vec<(usize, &F)>], chosen: &mut Vec<usize>, coeff: F, acc: &mut [F]) {
        let depth = chosen.len();
        if depth == supports.len() {
            let mut sorted = chosen.clone();
            if let Some(negative) = sort_with_sign(&mut sorted) {
                let c = if negative { -coeff } else { coeff };
                vector::axpy(acc, &c, self.value(&sorted));
            }
            return;
        }
        for &(i, x) in &supports[depth] {
            if chosen.contains(&i) {
                continue;
            }
            chosen.push(i);
            self.expand(supports, chosen, coeff.clone() * x.clone(), acc);
            chosen.pop();
        }
    }

    fn check_same_shape(&self, other: &Self) {
        assert_eq!(
            (self.degree, self.g_dim, self.v_dim),
            (other.degree, other.g_dim, other.v_dim),
            "cochain shapes differ"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_shape(other);
        Cochain {
            values: vector::add(&self.values, &other.values),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same_shape(other);
        Cochain {
            values: vector::sub(&self.values, &other.values),
            ..self.clone()
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        Cochain {
            values: vector::scale(s, &self.values),
            ..self.clone()
        }
    }

    /// `A ∘ f` for a linear map `A: V -> W` given as a `w x v` matrix.
    pub fn map_values(&self, a: &Matrix<F>) -> Self {
        assert_eq!(a.cols(), self.v_dim, "value map domain");
        let (m, v) = (binomial(self.g_dim, self.degree), self.v_dim);
        let mut values = Vec::with_capacity(m * a.rows());
        for t in 0..m {
            values.extend(a.mul_vec(&self.values[t * v..(t + 1) * v]));
        }
        Cochain {
            degree: self.degree,
            g_dim: self.g_dim,
            v_dim: a.rows(),
            values,
        }
    }

    /// `f ∘ A^{⊗k}` for `A: g -> g`.
    pub fn precompose(&self, a: &Matrix<F>) -> Self {
        assert_eq!((a.rows(), a.cols()), (self.g_dim, self.g_dim), "argument map shape");
        let cols: Vec<Vec<F>> = (0..self.g_dim).map(|j| a.column(j)).collect();
        Cochain::from_fn(self.degree, self.g_dim, self.v_dim, |t| {
            let args: Vec<Vec<F>> = t.iter().map(|&i| cols[i].clone()).collect();
            self.eval(&args)
        })
    }

    /// Whether `beta ∘ f = f ∘ phi^{⊗k}`.
    pub fn is_compatible(&self, phi: &Matrix<F>, beta: &Matrix<F>) -> bool {
        self.map_values(beta) == self.precompose(phi)
    }
}
