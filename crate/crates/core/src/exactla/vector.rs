//! Plain coordinate-vector helpers.

use crate::Scalar;

pub fn zeros<F: Scalar>(n: usize) -> Vec<F> {
    vec![F::zero(); n]
}

pub fn unit<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    let mut v = zeros(n);
    v[i] = F::one();
    v
}

pub fn is_zero<F: Scalar>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn dot<F: Scalar>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = F::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc + x.clone() * y.clone();
        }
    }
    acc
}

pub fn add<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    assert_eq!(a.len(), b.len(), "vector length");
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    assert_eq!(a.len(), b.len(), "vector length");
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn neg<F: Scalar>(a: &[F]) -> Vec<F> {
    a.iter().map(|x| -x.clone()).collect()
}

pub fn scale<F: Scalar>(s: &F, a: &[F]) -> Vec<F> {
    a.iter().map(|x| s.clone() * x.clone()).collect()
}

/// `acc += s * x`
pub fn axpy<F: Scalar>(acc: &mut [F], s: &F, x: &[F]) {
    assert_eq!(acc.len(), x.len(), "vector length");
    if s.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(x) {
        if !b.is_zero() {
            *a = a.clone() + s.clone() * b.clone();
        }
    }
}

/// `sum_i coeffs[i] * vectors[i]`, of length `n`.
pub fn combine<F: Scalar>(n: usize, coeffs: &[F], vectors: &[Vec<F>]) -> Vec<F> {
    assert_eq!(coeffs.len(), vectors.len());
    let mut acc = zeros(n);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut acc, c, v);
    }
    acc
}
