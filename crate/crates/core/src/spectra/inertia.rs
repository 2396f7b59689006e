//! Exact eigenvalue counting for integer symmetric tridiagonal matrices.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Number of eigenvalues strictly greater than `shift`, by the signs of the
/// leading principal minors of `T - shift I` (Sylvester's law of inertia on
/// the `LDL^T` pivots `p_k / p_{k-1}`), in exact integer arithmetic.
///
/// Returns `None` when an intermediate minor vanishes, where the pivot
/// sequence breaks down.
pub fn count_eigenvalues_above_tridiagonal(diag: &[i64], off: &[i64], shift: i64) -> Option<usize> {
    count_eigenvalues_above_tridiagonal_rational(diag, off, shift, 1)
}

/// As [`count_eigenvalues_above_tridiagonal`] with the rational shift
/// `num / den` (`den > 0`), working on `den T - num I`.
pub fn count_eigenvalues_above_tridiagonal_rational(diag: &[i64], off: &[i64], num: i64, den: i64) -> Option<usize> {
    let n = diag.len();
    assert_eq!(off.len() + 1, n.max(1));
    assert!(den > 0);
    let den_b = BigInt::from(den);
    let mut prev2 = BigInt::zero();
    let mut prev = BigInt::from(1);
    let mut above = 0;
    for k in 0..n {
        let b2 = if k == 0 { BigInt::zero() } else { BigInt::from(off[k - 1]) * off[k - 1] * &den_b * &den_b };
        let a = BigInt::from(diag[k]) * &den_b - num;
        let cur = a * &prev - b2 * &prev2;
        if cur.is_zero() && k + 1 < n {
            return None;
        }
        if !cur.is_zero() && cur.is_positive() == prev.is_positive() {
            above += 1;
        }
        prev2 = prev;
        prev = cur;
    }
    Some(above)
}
