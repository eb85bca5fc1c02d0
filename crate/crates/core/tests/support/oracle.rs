//! Brute-force reference implementations, written directly from the defining
//! identities on plain `Vec<Vec<F>>` matrices. They share no linear algebra
//! with the library: elimination, inverses and brackets are all redone here.

#![allow(dead_code)]

use homlie_core::homlie::{HomLieAlgebra, Violation};
use homlie_core::Scalar;

pub type Dense<F> = Vec<Vec<F>>;

pub fn zeros<F: Scalar>(r: usize, c: usize) -> Dense<F> {
    vec![vec![F::zero(); c]; r]
}

pub fn identity<F: Scalar>(n: usize) -> Dense<F> {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = F::one();
    }
    m
}

pub fn mul<F: Scalar>(a: &Dense<F>, b: &Dense<F>) -> Dense<F> {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, |r: &Vec<F>| r.len()));
    let mut out: Dense<F> = zeros(r, c);
    for i in 0..r {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..c {
                out[i][j] = out[i][j].clone() + a[i][t].clone() * b[t][j].clone();
            }
        }
    }
    out
}

pub fn sub<F: Scalar>(a: &Dense<F>, b: &Dense<F>) -> Dense<F> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p.clone() - q.clone()).collect())
        .collect()
}

pub fn apply<F: Scalar>(a: &Dense<F>, v: &[F]) -> Vec<F> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone()))
        .collect()
}

/// Row reduction in place; returns the pivot columns.
fn eliminate<F: Scalar>(m: &mut Dense<F>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r: &Vec<F>| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = m[i][j].clone() - f.clone() * m[r][j].clone();
                    m[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank<F: Scalar>(m: &Dense<F>) -> usize {
    let mut m = m.clone();
    eliminate(&mut m).len()
}

/// A basis of `{x : m x = 0}` for an `r x cols` matrix.
pub fn nullspace<F: Scalar>(m: &Dense<F>, cols: usize) -> Vec<Vec<F>> {
    let mut m = m.clone();
    let pivots = eliminate(&mut m);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![F::zero(); cols];
        x[free] = F::one();
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = -m[r][free].clone();
        }
        basis.push(x);
    }
    basis
}

/// Whether `a x = b` has a solution.
pub fn consistent<F: Scalar>(a: &Dense<F>, b: &[F]) -> bool {
    let aug: Dense<F> = a.iter().zip(b).map(|(row, x)| {
        let mut r = row.clone();
        r.push(x.clone());
        r
    }).collect();
    rank(a) == rank(&aug)
}

pub fn inverse<F: Scalar>(a: &Dense<F>) -> Option<Dense<F>> {
    let n = a.len();
    let mut aug: Dense<F> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let pivots = eliminate(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Constants as a nested array `c[i][j][k]`, read entry by entry.
pub fn constants<F: Scalar>(g: &HomLieAlgebra<F>) -> Vec<Vec<Vec<F>>> {
    let n = g.dim();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| g.constant(i, j, k).clone()).collect()).collect())
        .collect()
}

pub fn twist<F: Scalar>(g: &HomLieAlgebra<F>) -> Dense<F> {
    let n = g.dim();
    (0..n).map(|r| (0..n).map(|c| g.twist().get(r, c).clone()).collect()).collect()
}

pub fn bracket<F: Scalar>(c: &[Vec<Vec<F>>], x: &[F], y: &[F]) -> Vec<F> {
    let n = c.len();
    let mut out = vec![F::zero(); n];
    for i in 0..n {
        for j in 0..n {
            let s = x[i].clone() * y[j].clone();
            if s.is_zero() {
                continue;
            }
            for k in 0..n {
                out[k] = out[k].clone() + s.clone() * c[i][j][k].clone();
            }
        }
    }
    out
}

fn col<F: Scalar>(m: &Dense<F>, j: usize) -> Vec<F> {
    m.iter().map(|r| r[j].clone()).collect()
}

fn unit<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    (0..n).map(|k| if k == i { F::one() } else { F::zero() }).collect()
}

fn add_vec<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

fn is_zero_vec<F: Scalar>(a: &[F]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Every axiom failure, enumerated in the validator's documented order:
/// skewness (`i <= j`), singular twist, multiplicativity (`i < j`),
/// Hom-Jacobi (`i < j < k`).
pub fn axiom_violations<F: Scalar>(g: &HomLieAlgebra<F>) -> Vec<Violation> {
    let c = constants(g);
    let phi = twist(g);
    let n = g.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                if !(c[i][j][k].clone() + c[j][i][k].clone()).is_zero() {
                    out.push(Violation::NotSkew { i, j, k });
                }
            }
        }
    }
    if rank(&phi) < n {
        out.push(Violation::SingularTwist);
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = apply(&phi, &c[i][j]);
            let rhs = bracket(&c, &col(&phi, i), &col(&phi, j));
            if lhs != rhs {
                out.push(Violation::NotMultiplicative { i, j });
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let s1 = bracket(&c, &col(&phi, i), &c[j][k]);
                let s2 = bracket(&c, &col(&phi, j), &c[k][i]);
                let s3 = bracket(&c, &col(&phi, k), &c[i][j]);
                if !is_zero_vec(&add_vec(&add_vec(&s1, &s2), &s3)) {
                    out.push(Violation::HomJacobi { i, j, k });
                }
            }
        }
    }
    out
}

/// `ad_x` as a dense matrix: column `j` is `[x, e_j]`.
pub fn ad<F: Scalar>(c: &[Vec<Vec<F>>], x: &[F]) -> Dense<F> {
    let n = c.len();
    let cols: Vec<Vec<F>> = (0..n).map(|j| bracket(c, x, &unit(n, j))).collect();
    (0..n).map(|r| cols.iter().map(|v| v[r].clone()).collect()).collect()
}

fn flatten<F: Scalar>(m: &Dense<F>) -> Vec<F> {
    m.iter().flatten().cloned().collect()
}

fn unflatten<F: Scalar>(n: usize, v: &[F]) -> Dense<F> {
    v.chunks(n).map(<[F]>::to_vec).collect()
}

/// The linear system whose kernel is `Der(g)` (rows: `(i, j, k)`; columns:
/// the `n^2` entries of `D`).
fn derivation_system<F: Scalar>(g: &HomLieAlgebra<F>) -> Dense<F> {
    let n = g.dim();
    let c = constants(g);
    let phi = twist(g);
    let phi_inv = inverse(&phi).expect("invertible twist");
    let mut columns = Vec::with_capacity(n * n);
    for e in 0..n * n {
        let d = unflatten(n, &unit(n * n, e));
        let conj = mul(&mul(&phi_inv, &d), &phi);
        let mut column = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let lhs = apply(&d, &c[i][j]);
                let r1 = bracket(&c, &col(&phi, i), &col(&conj, j));
                let r2 = bracket(&c, &col(&conj, i), &col(&phi, j));
                for k in 0..n {
                    column.push(lhs[k].clone() - r1[k].clone() - r2[k].clone());
                }
            }
        }
        columns.push(column);
    }
    let rows = columns[0].len();
    (0..rows).map(|r| columns.iter().map(|col| col[r].clone()).collect()).collect()
}

/// A basis of `Der(g)`, as matrices.
pub fn derivations<F: Scalar>(g: &HomLieAlgebra<F>) -> Vec<Dense<F>> {
    let n = g.dim();
    nullspace(&derivation_system(g), n * n)
        .into_iter()
        .map(|v| unflatten(n, &v))
        .collect()
}

/// `(dim Der, dim Inn, dim Out, dim Cen)`.
pub fn derivation_dims<F: Scalar>(g: &HomLieAlgebra<F>) -> (usize, usize, usize, usize) {
    let n = g.dim();
    let c = constants(g);
    let der = n * n - rank(&derivation_system(g));
    let inn_rows: Dense<F> = (0..n).map(|i| flatten(&ad(&c, &unit(n, i)))).collect();
    let inn = rank(&inn_rows);
    // Cen: x with sum_i x_i c[i][j][k] = 0 for all (j, k).
    let cen_sys: Dense<F> = (0..n * n).map(|r| (0..n).map(|i| c[i][r / n][r % n].clone()).collect()).collect();
    let cen = n - rank(&cen_sys);
    (der, inn, der - inn, cen)
}

/// Sorts `idx` in place and returns the permutation sign, or `None` on a
/// repeated index.
fn sort_sign(idx: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    for i in 0..idx.len() {
        for j in 0..idx.len() - 1 - i {
            if idx[j] == idx[j + 1] {
                return None;
            }
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                negative = !negative;
            }
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(negative)
}

/// An alternating multilinear map given on increasing basis tuples.
pub struct Alternating<'a, F> {
    pub n: usize,
    pub v: usize,
    pub on_sorted: &'a dyn Fn(&[usize]) -> Vec<F>,
}

impl<F: Scalar> Alternating<'_, F> {
    fn basis(&self, idx: &[usize]) -> Vec<F> {
        let mut s = idx.to_vec();
        match sort_sign(&mut s) {
            None => vec![F::zero(); self.v],
            Some(neg) => {
                let val = (self.on_sorted)(&s);
                if neg {
                    val.into_iter().map(|x| -x).collect()
                } else {
                    val
                }
            }
        }
    }

    /// Evaluation on arbitrary vectors by full multilinear expansion.
    pub fn eval(&self, args: &[Vec<F>]) -> Vec<F> {
        let k = args.len();
        let mut out = vec![F::zero(); self.v];
        let mut idx = vec![0usize; k];
        loop {
            let coeff = idx.iter().enumerate().fold(F::one(), |acc, (p, &i)| acc * args[p][i].clone());
            if !coeff.is_zero() {
                let val = self.basis(&idx);
                for (o, x) in out.iter_mut().zip(val) {
                    *o = o.clone() + coeff.clone() * x;
                }
            }
            let mut p = 0;
            loop {
                if p == k {
                    return out;
                }
                idx[p] += 1;
                if idx[p] < self.n {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
        }
    }
}

/// The coboundary of a `k`-cochain on an increasing `(k+1)`-tuple, with
/// `rho(e_i)` acting and `phi` the twist of `g`:
/// `sum_i (-1)^i rho(phi^{k-1} x_i) f(..) + sum_{i<j} (-1)^{i+j} f([x_i,x_j], phi ..)`
/// (0-based signs). With `phi = id` this is the Chevalley–Eilenberg formula.
pub fn coboundary_at<F: Scalar>(
    g: &HomLieAlgebra<F>,
    rho: &[Dense<F>],
    f: &Alternating<'_, F>,
    k: usize,
    tuple: &[usize],
) -> Vec<F> {
    let n = g.dim();
    let c = constants(g);
    let phi = twist(g);
    let mut phi_pow = identity(n);
    for _ in 1..k {
        phi_pow = mul(&phi_pow, &phi);
    }
    let rho_of = |x: &[F]| -> Dense<F> {
        let mut acc: Dense<F> = zeros(f.v, f.v);
        for (i, xi) in x.iter().enumerate() {
            for r in 0..f.v {
                for s in 0..f.v {
                    acc[r][s] = acc[r][s].clone() + xi.clone() * rho[i][r][s].clone();
                }
            }
        }
        acc
    };
    let mut out = vec![F::zero(); f.v];
    for (i, &ti) in tuple.iter().enumerate() {
        let rest: Vec<Vec<F>> = tuple
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != i)
            .map(|(_, &t)| unit(n, t))
            .collect();
        let term = apply(&rho_of(&col(&phi_pow, ti)), &f.eval(&rest));
        for (o, x) in out.iter_mut().zip(term) {
            *o = if i % 2 == 0 { o.clone() + x } else { o.clone() - x };
        }
    }
    for i in 0..tuple.len() {
        for j in i + 1..tuple.len() {
            let mut args = vec![c[tuple[i]][tuple[j]].clone()];
            for (m, &t) in tuple.iter().enumerate() {
                if m != i && m != j {
                    args.push(col(&phi, t));
                }
            }
            let term = f.eval(&args);
            for (o, x) in out.iter_mut().zip(term) {
                *o = if (i + j) % 2 == 0 { o.clone() + x } else { o.clone() - x };
            }
        }
    }
    out
}

pub fn increasing(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Whether some `h`-valued 2-cochain `omega` on `g` satisfies, for the
/// fixed action `rho`: twist compatibility, `ad_{omega(x,y)} =
/// [rho_x, rho_y]_{phi_h} - rho_{[x,y]}`, and `d_rho omega = 0`. All three
/// are linear in `omega`; feasibility is a rank comparison.
pub fn omega_feasible<F: Scalar>(g: &HomLieAlgebra<F>, h: &HomLieAlgebra<F>, rho: &[Dense<F>]) -> bool {
    let (a, b) = omega_system(g, h, rho);
    consistent(&a, &b)
}

/// All `omega` solving the same system, as `particular + span(kernel)`.
pub fn omega_solutions<F: Scalar>(
    g: &HomLieAlgebra<F>,
    h: &HomLieAlgebra<F>,
    rho: &[Dense<F>],
) -> Option<(Vec<F>, Vec<Vec<F>>)> {
    let (a, b) = omega_system(g, h, rho);
    let unknowns = a.first().map_or(0, |r: &Vec<F>| r.len());
    let mut aug: Dense<F> = a
        .iter()
        .zip(&b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = eliminate(&mut aug);
    if pivots.last() == Some(&unknowns) {
        return None;
    }
    let mut particular = vec![F::zero(); unknowns];
    for (r, &p) in pivots.iter().enumerate() {
        particular[p] = aug[r][unknowns].clone();
    }
    Some((particular, nullspace(&a, unknowns)))
}

fn omega_system<F: Scalar>(g: &HomLieAlgebra<F>, h: &HomLieAlgebra<F>, rho: &[Dense<F>]) -> (Dense<F>, Vec<F>) {
    let (n, m) = (g.dim(), h.dim());
    let pairs = increasing(n, 2);
    let unknowns = pairs.len() * m;
    let cg = constants(g);
    let ch = constants(h);
    let phi = twist(g);
    let psi = twist(h);
    let psi_inv = inverse(&psi).expect("invertible twist");
    let rho_of = |x: &[F]| -> Dense<F> {
        let mut acc: Dense<F> = zeros(m, m);
        for (i, xi) in x.iter().enumerate() {
            for r in 0..m {
                for s in 0..m {
                    acc[r][s] = acc[r][s].clone() + xi.clone() * rho[i][r][s].clone();
                }
            }
        }
        acc
    };
    // Each equation is an affine function of omega: evaluate it at 0 and at
    // every unit omega.
    let equations = |values: &[F]| -> Vec<F> {
        let lookup = |t: &[usize]| -> Vec<F> {
            let p = pairs.iter().position(|q| q == t).expect("pair");
            values[p * m..(p + 1) * m].to_vec()
        };
        let omega = Alternating {
            n,
            v: m,
            on_sorted: &lookup,
        };
        let mut eqs = Vec::new();
        for t in &pairs {
            let (i, j) = (t[0], t[1]);
            let w = omega.eval(&[unit(n, i), unit(n, j)]);
            let lhs = apply(&psi, &w);
            let rhs = omega.eval(&[col(&phi, i), col(&phi, j)]);
            eqs.extend(lhs.into_iter().zip(rhs).map(|(a, b)| a - b));
            let ri = &rho[i];
            let rj = &rho[j];
            let comm = sub(
                &mul(&mul(&mul(&mul(&psi, ri), &psi_inv), rj), &psi_inv),
                &mul(&mul(&mul(&mul(&psi, rj), &psi_inv), ri), &psi_inv),
            );
            let alpha = sub(&comm, &rho_of(&cg[i][j]));
            let adw = ad(&ch, &w);
            eqs.extend(flatten(&sub(&adw, &alpha)));
        }
        for t in increasing(n, 3) {
            eqs.extend(coboundary_at(g, rho, &omega, 2, &t));
        }
        eqs
    };
    let at_zero = equations(&vec![F::zero(); unknowns]);
    let cols: Vec<Vec<F>> = (0..unknowns)
        .map(|u| {
            equations(&unit(unknowns, u))
                .into_iter()
                .zip(&at_zero)
                .map(|(a, b)| a - b.clone())
                .collect()
        })
        .collect();
    let rows = at_zero.len();
    let a: Dense<F> = (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let b: Vec<F> = at_zero.into_iter().map(|x| -x).collect();
    (a, b)
}
