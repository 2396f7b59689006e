//! Generalized Laplacians `diag(d) - A` and their spectra.

mod inertia;
mod jacobi;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::SpectraError;
use crate::family::GraphFamily;
use crate::structure::ArithmeticalStructure;

pub use inertia::{count_eigenvalues_above_tridiagonal, count_eigenvalues_above_tridiagonal_rational};
pub use jacobi::{jacobi, Decomposition, MAX_SWEEPS, RELATIVE_OFFDIAG_TOL};

/// Dense real symmetric matrix, row-major. Every constructor writes `(i, j)`
/// and `(j, i)` from the same value, so symmetry is exact.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(order: usize) -> Self {
        SymmetricMatrix { order, data: vec![0.0; order * order] }
    }

    /// Fill from the upper triangle `f(i, j)`, `i <= j`.
    pub fn from_upper(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in i..order {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// `None` unless `rows` is square and exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return None;
                }
            }
        }
        Some(Self::from_upper(n, |i, j| rows[i][j]))
    }

    /// `diag(d) - A(G)` for a cycle or path.
    pub fn generalized_laplacian(family: GraphFamily, d: &[u64]) -> Self {
        assert_eq!(d.len(), family.n(), "label count does not match the graph");
        let n = family.n();
        Self::from_upper(n, |i, j| {
            if i == j {
                d[i] as f64
            } else if family.are_adjacent(i, j) {
                -1.0
            } else {
                0.0
            }
        })
    }

    /// Symmetric tridiagonal matrix.
    pub fn tridiagonal(diag: &[f64], off: &[f64]) -> Self {
        assert_eq!(off.len() + 1, diag.len().max(1));
        Self::from_upper(diag.len(), |i, j| {
            if i == j {
                diag[i]
            } else if j == i + 1 {
                off[i]
            } else {
                0.0
            }
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.order + j] = v;
        self.data[j * self.order + i] = v;
    }

    pub(crate) fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|x| x * x).sum())
    }

    /// Entrywise absolute value `|M|`.
    pub fn absolute(&self) -> Self {
        SymmetricMatrix { order: self.order, data: self.data.iter().map(|x| libm::fabs(*x)).collect() }
    }

    pub fn max_row_sum(&self) -> f64 {
        (0..self.order).map(|i| self.row(i).iter().sum::<f64>()).fold(f64::NEG_INFINITY, f64::max)
    }

    /// Principal submatrix with row and column `k` removed.
    pub fn delete(&self, k: usize) -> Self {
        let idx: Vec<usize> = (0..self.order).filter(|&i| i != k).collect();
        Self::from_upper(idx.len(), |i, j| self.get(idx[i], idx[j]))
    }

    pub fn add(&self, other: &SymmetricMatrix) -> Self {
        assert_eq!(self.order, other.order);
        SymmetricMatrix {
            order: self.order,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// `c I - M`.
    pub fn shifted_negation(&self, c: f64) -> Self {
        Self::from_upper(self.order, |i, j| if i == j { c - self.get(i, i) } else { -self.get(i, j) })
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.order).map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }
}

/// Eigenvalues in descending order with the solver's convergence certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// Off-diagonal Frobenius norm when the iteration stopped.
    pub offdiag_residual: f64,
}

impl Spectrum {
    pub fn mu1(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn smallest(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }
}

/// Eigenpair with the vector scaled to infinity norm 1 and its
/// largest-magnitude entry positive.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
}

impl EigenPair {
    /// `||M x - lambda x||_inf`.
    pub fn residual(&self, m: &SymmetricMatrix) -> f64 {
        m.mul_vec(&self.vector)
            .iter()
            .zip(&self.vector)
            .map(|(mx, x)| libm::fabs(mx - self.value * x))
            .fold(0.0, f64::max)
    }
}

pub fn build_l(s: &ArithmeticalStructure) -> SymmetricMatrix {
    SymmetricMatrix::generalized_laplacian(s.family(), s.d().as_slice())
}

pub fn eigenvalues(m: &SymmetricMatrix) -> Result<Spectrum, SpectraError> {
    let dec = jacobi(m, false)?;
    Ok(Spectrum { eigenvalues: dec.values_descending(), offdiag_residual: dec.offdiag_residual })
}

pub fn top_eigenpair(m: &SymmetricMatrix) -> Result<EigenPair, SpectraError> {
    let dec = jacobi(m, true)?;
    let (value, mut vector) = dec.top_pair();
    let (imax, _) = vector
        .iter()
        .enumerate()
        .fold((0, -1.0), |best, (i, x)| if libm::fabs(*x) > best.1 { (i, libm::fabs(*x)) } else { best });
    let scale = vector[imax];
    for x in &mut vector {
        *x /= scale;
    }
    Ok(EigenPair { value, vector })
}

pub fn spectral_radius(s: &ArithmeticalStructure) -> Result<f64, SpectraError> {
    Ok(eigenvalues(&build_l(s))?.mu1())
}

/// Largest eigenvalue of the generalized Laplacian of a bare `d`-vector.
pub fn mu1_of(family: GraphFamily, d: &[u64]) -> Result<f64, SpectraError> {
    Ok(eigenvalues(&SymmetricMatrix::generalized_laplacian(family, d))?.mu1())
}

/// `mu_1(2I - A(C_n)) = 2 - 2 cos(2 pi floor(n/2) / n)`; exactly 4 for even `n`.
pub fn laplacian_mu1_exact(n: usize) -> f64 {
    assert!(n >= 3);
    if n % 2 == 0 {
        return 4.0;
    }
    2.0 - 2.0 * libm::cos(2.0 * core::f64::consts::PI * (n / 2) as f64 / n as f64)
}

pub fn rayleigh_quotient(m: &SymmetricMatrix, x: &[f64]) -> Result<f64, SpectraError> {
    if x.len() != m.order() {
        return Err(SpectraError::DimensionMismatch { order: m.order(), got: x.len() });
    }
    let xx: f64 = x.iter().map(|v| v * v).sum();
    if xx == 0.0 {
        return Err(SpectraError::ZeroVector);
    }
    let mx = m.mul_vec(x);
    Ok(x.iter().zip(&mx).map(|(a, b)| a * b).sum::<f64>() / xx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{DVector, RVector};

    fn cycle(n: usize) -> GraphFamily {
        GraphFamily::cycle(n).unwrap()
    }

    #[test]
    fn build_small() {
        let m = SymmetricMatrix::generalized_laplacian(cycle(3), &[2, 2, 2]);
        let expect = [[2.0, -1.0, -1.0], [-1.0, 2.0, -1.0], [-1.0, -1.0, 2.0]];
        for i in 0..3 {
            assert_eq!(m.row(i), &expect[i]);
        }
    }

    #[test]
    fn build_max_structure() {
        let s = ArithmeticalStructure::from_parts(
            cycle(6),
            DVector::new(vec![1, 8, 2, 2, 2, 2]).unwrap(),
            RVector::from_u64s(&[6, 1, 2, 3, 4, 5]).unwrap(),
        );
        let m = build_l(&s);
        assert_eq!(m.get(0, 5), -1.0);
        assert_eq!(m.get(1, 1), 8.0);
        assert_eq!(m.get(0, 2), 0.0);
        let r = [6.0, 1.0, 2.0, 3.0, 4.0, 5.0];
        assert!(m.mul_vec(&r).iter().all(|&x| x == 0.0));
    }

    #[test]
    fn two_by_two() {
        let m = SymmetricMatrix::from_rows(&[vec![2.0, -1.0], vec![-1.0, 2.0]]).unwrap();
        let s = eigenvalues(&m).unwrap();
        assert!((s.eigenvalues[0] - 3.0).abs() < 1e-12);
        assert!((s.eigenvalues[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn not_symmetric() {
        assert!(SymmetricMatrix::from_rows(&[vec![1.0, 2.0], vec![2.5, 1.0]]).is_none());
    }

    #[test]
    fn lemma_value_c4() {
        let mu = mu1_of(cycle(4), &[3, 1, 3, 2]).unwrap();
        assert!((mu - 4.41421).abs() < 1e-5, "{mu}");
        // 3 + sqrt(2)
        assert!((mu - (3.0 + core::f64::consts::SQRT_2)).abs() < 1e-12);
    }

    #[test]
    fn laplacian_closed_form() {
        assert_eq!(laplacian_mu1_exact(4), 4.0);
        assert!((laplacian_mu1_exact(3) - 3.0).abs() < 1e-15);
        assert!((laplacian_mu1_exact(5) - 3.618).abs() < 1e-3);
    }

    #[test]
    fn rayleigh_e2() {
        let n = 6;
        let m = SymmetricMatrix::generalized_laplacian(cycle(n), &[1, 8, 2, 2, 2, 2]);
        let mut e2 = vec![0.0; n];
        e2[1] = 1.0;
        assert_eq!(rayleigh_quotient(&m, &e2).unwrap(), (n + 2) as f64);
        assert_eq!(rayleigh_quotient(&m, &[0.0; 6]), Err(SpectraError::ZeroVector));
        assert!(matches!(rayleigh_quotient(&m, &[1.0]), Err(SpectraError::DimensionMismatch { .. })));
    }

    #[test]
    fn top_pair_of_max_structure() {
        let m = SymmetricMatrix::generalized_laplacian(cycle(6), &[1, 8, 2, 2, 2, 2]);
        let p = top_eigenpair(&m).unwrap();
        assert_eq!(p.vector[1], 1.0);
        for (i, x) in p.vector.iter().enumerate() {
            if i != 1 {
                assert!(x.abs() <= 2.0 / 6.0, "entry {i} = {x}");
            }
        }
        assert!(p.residual(&m) <= 1e-9 * p.value);
        assert!((rayleigh_quotient(&m, &p.vector).unwrap() - p.value).abs() < 1e-9);
    }

    #[test]
    fn top_pair_degenerate() {
        let m = SymmetricMatrix::generalized_laplacian(cycle(3), &[2, 2, 2]);
        let p = top_eigenpair(&m).unwrap();
        assert!((p.value - 3.0).abs() < 1e-12);
        assert!(p.residual(&m) <= 1e-9 * 3.0);
    }

    #[test]
    fn deletion_and_abs() {
        let m = SymmetricMatrix::generalized_laplacian(cycle(4), &[3, 1, 3, 2]);
        let sub = m.delete(3);
        assert_eq!(sub.order(), 3);
        assert_eq!(sub.row(0), &[3.0, -1.0, 0.0]);
        assert_eq!(m.absolute().max_row_sum(), 5.0);
    }
}
