#![allow(dead_code)]

pub mod oracle;

use proptest::prelude::*;
use proptest::test_runner::FileFailurePersistence;
use qent_core::qmat::{tensor, validate_density, ComplexMatrix, DensityMatrix, C64};

/// Raw entries for a Gram-built density matrix on `n` levels.
pub fn raw(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0f64..1.0, 2 * n * n)
}

/// G G^dagger / Tr, with a small identity admixture so the trace never vanishes.
pub fn density_from(v: &[f64], dims: &[usize]) -> DensityMatrix {
    let n: usize = dims.iter().product();
    let g = ComplexMatrix::from_fn(n, n, |i, j| {
        C64::new(v[2 * (i * n + j)], v[2 * (i * n + j) + 1])
    });
    let m = &(&g * &g.adjoint()) + &ComplexMatrix::identity(n).scale(1e-6);
    let t = m.trace().re;
    validate_density(&m.scale(1.0 / t), dims).expect("Gram matrices are states")
}

/// Unconstrained complex matrix with entries in the unit square.
pub fn matrix(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    raw(n).prop_map(move |v| {
        ComplexMatrix::from_fn(n, n, |i, j| {
            C64::new(v[2 * (i * n + j)], v[2 * (i * n + j) + 1])
        })
    })
}

pub fn hermitian(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    matrix(n).prop_map(|m| (&m + &m.adjoint()).scale(0.5))
}

pub fn state(dims: &'static [usize]) -> impl Strategy<Value = DensityMatrix> {
    let n: usize = dims.iter().product();
    raw(n).prop_map(move |v| density_from(&v, dims))
}

pub fn vector(n: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n).prop_filter_map("zero vector", |v| {
        let z: Vec<C64> = v.into_iter().map(|(a, b)| C64::new(a, b)).collect();
        let norm = z.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        (norm > 1e-3).then(|| z.into_iter().map(|x| x / norm).collect())
    })
}

/// Unitary from Gram-Schmidt on random columns.
pub fn unitary_from(v: &[f64], d: usize) -> ComplexMatrix {
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(d);
    for k in 0..d {
        let mut c: Vec<C64> = (0..d)
            .map(|i| {
                C64::new(v[2 * (k * d + i)], v[2 * (k * d + i) + 1])
                    + if i == k { 2.0 } else { 0.0 }
            })
            .collect();
        for q in &cols {
            let dot: C64 = q.iter().zip(&c).map(|(a, b)| a.conj() * b).sum();
            for (x, y) in c.iter_mut().zip(q) {
                *x -= dot * y;
            }
        }
        let n = c.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        cols.push(c.into_iter().map(|x| x / n).collect());
    }
    ComplexMatrix::from_fn(d, d, |i, j| cols[j][i])
}

pub fn unitary(d: usize) -> impl Strategy<Value = ComplexMatrix> {
    raw(d).prop_map(move |v| unitary_from(&v, d))
}

pub fn conjugate(u: &ComplexMatrix, rho: &DensityMatrix) -> DensityMatrix {
    let m = &(u * rho.mat()) * &u.adjoint();
    validate_density(&m, rho.dims()).expect("unitary conjugation keeps a state")
}

pub fn local(us: &[&ComplexMatrix]) -> ComplexMatrix {
    let mut acc = us[0].clone();
    for u in &us[1..] {
        acc = tensor(&acc, u);
    }
    acc
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

/// Integration tests have no lib.rs next to them, so failure files are off.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: Some(Box::new(FileFailurePersistence::Off)),
        ..ProptestConfig::default()
    }
}
