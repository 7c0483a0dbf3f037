//! Index-loop reference implementations.

use qent_core::qmat::ComplexMatrix;

/// <i1 j1| rho^{T_B} |i2 j2> = <i1 j2| rho |i2 j1>.
pub fn pt_oracle(m: &ComplexMatrix, d1: usize, d2: usize) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(d1 * d2, d1 * d2);
    for i1 in 0..d1 {
        for j1 in 0..d2 {
            for i2 in 0..d1 {
                for j2 in 0..d2 {
                    out[(i1 * d2 + j1, i2 * d2 + j2)] = m[(i1 * d2 + j2, i2 * d2 + j1)];
                }
            }
        }
    }
    out
}

/// (rho_A)_{i i'} = sum_j rho_{(i j), (i' j)}.
pub fn trace_b_oracle(m: &ComplexMatrix, d1: usize, d2: usize) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(d1, d1);
    for i in 0..d1 {
        for k in 0..d1 {
            for j in 0..d2 {
                out[(i, k)] += m[(i * d2 + j, k * d2 + j)];
            }
        }
    }
    out
}

pub fn trace_a_oracle(m: &ComplexMatrix, d1: usize, d2: usize) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(d2, d2);
    for j in 0..d2 {
        for l in 0..d2 {
            for i in 0..d1 {
                out[(j, l)] += m[(i * d2 + j, i * d2 + l)];
            }
        }
    }
    out
}

pub fn kron_oracle(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (n, m) = (a.rows(), b.rows());
    let mut out = ComplexMatrix::zeros(n * m, n * m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[(i * m + k, j * m + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    out
}
