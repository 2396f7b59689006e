//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

use alloc::vec;
use alloc::vec::Vec;

use super::SymmetricMatrix;
use crate::error::SpectraError;

pub const MAX_SWEEPS: usize = 100;

/// Stop once the off-diagonal Frobenius norm is at most this times `||M||_F`.
pub const RELATIVE_OFFDIAG_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct Decomposition {
    /// Unsorted, aligned with the columns of `vectors`.
    pub values: Vec<f64>,
    /// Column-major orthogonal matrix, present when requested.
    pub vectors: Option<Vec<f64>>,
    pub offdiag_residual: f64,
    pub sweeps: usize,
}

impl Decomposition {
    pub fn values_descending(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    /// Largest eigenvalue and its (unit 2-norm) eigenvector. On ties the
    /// lowest column index wins.
    pub fn top_pair(&self) -> (f64, Vec<f64>) {
        let n = self.values.len();
        let k = (0..n).fold(0, |best, i| if self.values[i] > self.values[best] { i } else { best });
        let vectors = self.vectors.as_ref().expect("decomposition computed without vectors");
        (self.values[k], vectors[k * n..(k + 1) * n].to_vec())
    }
}

fn offdiag_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += a[i * n + j] * a[i * n + j];
        }
    }
    libm::sqrt(2.0 * s)
}

/// Diagonalise `m` by plane rotations, sweeping the upper triangle row by
/// row. Deterministic: identical input gives bit-identical output.
pub fn jacobi(m: &SymmetricMatrix, want_vectors: bool) -> Result<Decomposition, SpectraError> {
    let n = m.order();
    if n == 0 {
        return Err(SpectraError::Empty);
    }
    let mut a = m.data().to_vec();
    let mut v = if want_vectors {
        let mut v = vec![0.0; n * n];
        for i in 0..n {
            v[i * n + i] = 1.0;
        }
        Some(v)
    } else {
        None
    };
    let tol = RELATIVE_OFFDIAG_TOL * m.frobenius_norm();
    let mut off = offdiag_norm(&a, n);
    let mut sweeps = 0;
    while off > tol {
        if sweeps == MAX_SWEEPS {
            return Err(SpectraError::NoConvergence { sweeps, residual: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + libm::sqrt(theta * theta + 1.0))
                } else {
                    -1.0 / (-theta + libm::sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_p = c * akp - s * akq;
                    let new_q = s * akp + c * akq;
                    a[k * n + p] = new_p;
                    a[p * n + k] = new_p;
                    a[k * n + q] = new_q;
                    a[q * n + k] = new_q;
                }
                if let Some(v) = v.as_mut() {
                    // column-major: column p is v[p*n..]
                    for k in 0..n {
                        let vkp = v[p * n + k];
                        let vkq = v[q * n + k];
                        v[p * n + k] = c * vkp - s * vkq;
                        v[q * n + k] = s * vkp + c * vkq;
                    }
                }
            }
        }
        off = offdiag_norm(&a, n);
    }
    Ok(Decomposition {
        values: (0..n).map(|i| a[i * n + i]).collect(),
        vectors: v,
        offdiag_residual: off,
        sweeps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_needs_no_sweeps() {
        let m = SymmetricMatrix::tridiagonal(&[1.0, 5.0, 3.0], &[0.0, 0.0]);
        let d = jacobi(&m, true).unwrap();
        assert_eq!(d.sweeps, 0);
        assert_eq!(d.values_descending(), [5.0, 3.0, 1.0]);
    }

    #[test]
    fn vectors_are_orthonormal_eigenvectors() {
        let m = SymmetricMatrix::from_upper(5, |i, j| 1.0 / (1 + i + j) as f64 + if i == j { 2.0 } else { 0.0 });
        let d = jacobi(&m, true).unwrap();
        let v = d.vectors.as_ref().unwrap();
        for k in 0..5 {
            let col = &v[k * 5..(k + 1) * 5];
            let mx = m.mul_vec(col);
            for i in 0..5 {
                assert!((mx[i] - d.values[k] * col[i]).abs() < 1e-12);
            }
            for l in 0..5 {
                let dot: f64 = col.iter().zip(&v[l * 5..(l + 1) * 5]).map(|(a, b)| a * b).sum();
                let expect = if k == l { 1.0 } else { 0.0 };
                assert!((dot - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn deterministic() {
        let m = SymmetricMatrix::generalized_laplacian(crate::GraphFamily::cycle(7).unwrap(), &[1, 9, 2, 2, 2, 2, 2]);
        let a = jacobi(&m, true).unwrap();
        let b = jacobi(&m, true).unwrap();
        assert_eq!(a.values, b.values);
        assert_eq!(a.vectors, b.vectors);
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(jacobi(&SymmetricMatrix::zeros(0), false).unwrap_err(), SpectraError::Empty);
    }
}
