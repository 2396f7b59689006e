//! Exact integer kernels of generalized Laplacians.
//!
//! Two independent routes: the cycle recurrence `r_{k+1} = d_k r_k - r_{k-1}`
//! carried as integer linear forms in `(r_0, r_1)`, and fraction-free
//! (Bareiss) Gauss-Jordan elimination on the full matrix. The recurrence is
//! the fast path for cycles; Bareiss handles paths and cross-checks cycles.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::family::GraphFamily;

/// `a * x + b * y` in the two unknowns `x = r_0`, `y = r_1`.
#[derive(Clone, Debug)]
struct LinearForm {
    a: BigInt,
    b: BigInt,
}

impl LinearForm {
    fn scaled_minus(&self, k: u64, other: &LinearForm) -> LinearForm {
        LinearForm {
            a: &self.a * k - &other.a,
            b: &self.b * k - &other.b,
        }
    }

    fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x + &self.b * y
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

/// Positive primitive kernel vector of `diag(d) - A(C_n)`, if one exists.
///
/// A kernel of dimension two never contains a positive vector (an
/// irreducible Z-matrix with a positive null vector has a simple zero
/// eigenvalue), so that case is reported as `None` like an empty kernel.
pub(crate) fn cycle_kernel(d: &[u64]) -> Option<Vec<BigUint>> {
    let n = d.len();
    debug_assert!(n >= 3);
    let mut forms = Vec::with_capacity(n);
    forms.push(LinearForm { a: BigInt::one(), b: BigInt::zero() });
    forms.push(LinearForm { a: BigInt::zero(), b: BigInt::one() });
    for k in 1..n - 1 {
        let next = forms[k].scaled_minus(d[k], &forms[k - 1]);
        forms.push(next);
    }
    // wrap-around equations at vertex n-1 and vertex 0
    let last = forms[n - 1].scaled_minus(d[n - 1], &forms[n - 2]);
    let last = LinearForm { a: last.a - 1, b: last.b };
    let first = LinearForm {
        a: BigInt::from(d[0]) - &forms[n - 1].a,
        b: -&forms[n - 1].b - 1,
    };
    if last.is_zero() && first.is_zero() {
        return None;
    }
    let det = &last.a * &first.b - &last.b * &first.a;
    if !det.is_zero() {
        return None;
    }
    let row = if last.is_zero() { &first } else { &last };
    let (x, y) = (row.b.clone(), -row.a.clone());
    let r: Vec<BigInt> = forms.iter().map(|f| f.eval(&x, &y)).collect();
    positive_primitive(r)
}

/// Positive primitive kernel vector of `diag(d) - A` for either family, via
/// Bareiss elimination. `None` unless the kernel is one-dimensional and
/// spanned by a strictly positive vector.
pub(crate) fn bareiss_positive_kernel(family: GraphFamily, d: &[u64]) -> Option<Vec<BigUint>> {
    let basis = integer_kernel(&laplacian_rows(family, d), d.len());
    if basis.len() != 1 {
        return None;
    }
    positive_primitive(basis.into_iter().next().unwrap())
}

pub(crate) fn laplacian_rows(family: GraphFamily, d: &[u64]) -> Vec<Vec<BigInt>> {
    let n = family.n();
    let mut rows = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = BigInt::from(d[i]);
        for j in family.neighbors(i) {
            row[j] -= 1;
        }
    }
    rows
}

/// A basis of the integer kernel of the `rows.len() x ncols` matrix, each
/// vector primitive (content 1). Fraction-free Gauss-Jordan: every division
/// by the previous pivot is exact.
pub fn integer_kernel(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let m = a.len();
    let mut prev = BigInt::one();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let piv = a[rank][c].clone();
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == rank {
                continue;
            }
            let f = row[c].clone();
            for (x, pr) in row.iter_mut().zip(&pivot_row) {
                let num = &piv * &*x - &f * pr;
                debug_assert!((&num % &prev).is_zero());
                *x = num / &prev;
            }
        }
        prev = piv;
        pivot_cols.push(c);
        rank += 1;
    }

    let mut is_pivot = vec![false; ncols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let lcm = pivot_cols
        .iter()
        .enumerate()
        .fold(BigInt::one(), |acc, (i, &c)| acc.lcm(&a[i][c]));

    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![BigInt::zero(); ncols];
            x[f] = lcm.clone();
            for (i, &c) in pivot_cols.iter().enumerate() {
                x[c] = -(&a[i][f] * &lcm) / &a[i][c];
            }
            make_primitive(x)
        })
        .collect()
}

fn make_primitive(mut x: Vec<BigInt>) -> Vec<BigInt> {
    let g = x.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in &mut x {
            *v /= &g;
        }
    }
    x
}

/// Flip to the positive orthant and divide out the content; `None` if any
/// entry is zero or the signs are mixed.
fn positive_primitive(r: Vec<BigInt>) -> Option<Vec<BigUint>> {
    let sign = r.first()?.sign();
    if sign == Sign::NoSign || r.iter().any(|v| v.sign() != sign) {
        return None;
    }
    let r = make_primitive(r);
    Some(r.into_iter().map(|v| v.abs().magnitude().clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn ubig(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn recurrence_figure_structure() {
        assert_eq!(cycle_kernel(&[1, 8, 2, 2, 2, 2]), Some(ubig(&[6, 1, 2, 3, 4, 5])));
        assert_eq!(cycle_kernel(&[1, 5, 2]), Some(ubig(&[3, 1, 2])));
    }

    #[test]
    fn recurrence_rejects() {
        // forces r = 0
        assert_eq!(cycle_kernel(&[2, 2, 3]), None);
        // two-dimensional kernel, no positive vector
        assert_eq!(cycle_kernel(&[1; 6]), None);
    }

    #[test]
    fn bareiss_matches_recurrence() {
        let c6 = GraphFamily::cycle(6).unwrap();
        assert_eq!(
            bareiss_positive_kernel(c6, &[1, 8, 2, 2, 2, 2]),
            Some(ubig(&[6, 1, 2, 3, 4, 5]))
        );
        assert_eq!(bareiss_positive_kernel(c6, &[1; 6]), None);
        let c3 = GraphFamily::cycle(3).unwrap();
        assert_eq!(bareiss_positive_kernel(c3, &[2, 2, 3]), None);
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let rows = vec![big(&[1, 2, 3]), big(&[2, 4, 6])];
        let basis = integer_kernel(&rows, 3);
        assert_eq!(basis.len(), 2);
        for x in &basis {
            for row in &rows {
                let dot: BigInt = row.iter().zip(x).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn full_rank_has_empty_kernel() {
        let rows = vec![big(&[2, -1]), big(&[-1, 2])];
        assert!(integer_kernel(&rows, 2).is_empty());
    }
}
