//! Subdivision, smoothing and the dihedral action on cycle structures.
//!
//! Edge and vertex indices in this module's public functions are 1-based,
//! matching the labels `v_1, ..., v_n` used in printed output.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::error::TransformError;
use crate::family::GraphFamily;
use crate::structure::{ArithmeticalStructure, DVector, RVector};

/// An element of the dihedral group `D_2n`, acting on positions by
/// `j -> rotation + j` or `j -> rotation - j` (mod n).
///
/// [`apply`] reads `new[j] = old[sigma(j)]`, so `rotation = 1` shifts a
/// vector left by one place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    n: usize,
    rotation: usize,
    reflected: bool,
}

impl DihedralElement {
    pub fn new(n: usize, rotation: usize, reflected: bool) -> Self {
        assert!(n > 0, "dihedral group of a 0-gon");
        DihedralElement { n, rotation: rotation % n, reflected }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, 0, false)
    }

    pub fn rotation(&self) -> usize {
        self.rotation
    }

    pub fn reflected(&self) -> bool {
        self.reflected
    }

    pub fn order_of_group(&self) -> usize {
        2 * self.n
    }

    /// All `2n` elements: rotations first, then reflections.
    pub fn all(n: usize) -> impl Iterator<Item = DihedralElement> {
        [false, true]
            .into_iter()
            .flat_map(move |refl| (0..n).map(move |k| DihedralElement::new(n, k, refl)))
    }

    /// Position read by `new[j]`.
    pub fn source(&self, j: usize) -> usize {
        if self.reflected {
            (self.rotation + self.n - j % self.n) % self.n
        } else {
            (self.rotation + j) % self.n
        }
    }

    /// `self.compose(other)` acts as `sigma_self . sigma_other`, so that
    /// `apply(apply(s, g), h) == apply(s, g.compose(h))`.
    pub fn compose(&self, other: &DihedralElement) -> DihedralElement {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let shifted = if self.reflected {
            (self.rotation + n - other.rotation) % n
        } else {
            (self.rotation + other.rotation) % n
        };
        DihedralElement::new(n, shifted, self.reflected != other.reflected)
    }

    pub fn inverse(&self) -> DihedralElement {
        if self.reflected {
            *self
        } else {
            DihedralElement::new(self.n, self.n - self.rotation, false)
        }
    }

    pub fn permute<T: Clone>(&self, v: &[T]) -> Vec<T> {
        debug_assert_eq!(v.len(), self.n);
        (0..self.n).map(|j| v[self.source(j)].clone()).collect()
    }
}

/// Representative of a `D_2n` orbit: the lexicographically least `d` among
/// all `2n` images. `d` determines `r`, so the key is complete.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(DVector);

impl CanonicalKey {
    pub(crate) fn wrap(d: DVector) -> CanonicalKey {
        CanonicalKey(d)
    }

    pub fn d(&self) -> &DVector {
        &self.0
    }

    pub fn into_d(self) -> DVector {
        self.0
    }

    /// Canonical key of a bare cycle `d`-vector.
    pub fn of_cycle_d(d: &[u64]) -> CanonicalKey {
        CanonicalKey(DVector::from_vec_unchecked(least_dihedral_image(d)))
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub(crate) fn least_dihedral_image<T: Ord + Copy>(d: &[T]) -> Vec<T> {
    let n = d.len();
    let mut best: Vec<T> = d.to_vec();
    let mut buf: Vec<T> = Vec::with_capacity(n);
    for g in DihedralElement::all(n) {
        buf.clear();
        buf.extend((0..n).map(|j| d[g.source(j)]));
        if buf < best {
            core::mem::swap(&mut buf, &mut best);
        }
    }
    best
}

fn require_cycle(s: &ArithmeticalStructure) -> Result<(), TransformError> {
    if !s.family().is_cycle() {
        return Err(TransformError::NotACycle);
    }
    Ok(())
}

/// Insert a vertex `w` with `d_w = 1`, `r_w = r_i + r_{i+1}` between `v_i`
/// and `v_{i+1}` (1-based, `v_{n+1} = v_1`). `w` becomes vertex `i + 1` of
/// the result and later vertices shift up by one.
pub fn subdivide(s: &ArithmeticalStructure, edge: usize) -> Result<ArithmeticalStructure, TransformError> {
    require_cycle(s)?;
    let n = s.n();
    if edge == 0 || edge > n {
        return Err(TransformError::IndexOutOfRange { index: edge, n });
    }
    let (i, j) = (edge - 1, edge % n);
    let mut d = s.d().as_slice().to_vec();
    d[i] += 1;
    d[j] += 1;
    d.insert(edge, 1);
    let r_old = s.r().as_slice();
    let mut r: Vec<BigUint> = r_old.to_vec();
    r.insert(edge, &r_old[i] + &r_old[j]);
    let family = GraphFamily::cycle(n + 1).expect("n + 1 >= 4");
    Ok(ArithmeticalStructure::from_parts(
        family,
        DVector::from_vec_unchecked(d),
        RVector::from_vec_unchecked(r),
    ))
}

/// Remove `v_i` (1-based, requires `d_i = 1`) and join its neighbours,
/// decrementing their `d`-labels. Surviving vertices keep their cyclic order
/// and their `r`-labels.
pub fn smooth(s: &ArithmeticalStructure, vertex: usize) -> Result<ArithmeticalStructure, TransformError> {
    require_cycle(s)?;
    let n = s.n();
    if vertex == 0 || vertex > n {
        return Err(TransformError::IndexOutOfRange { index: vertex, n });
    }
    let v = vertex - 1;
    let label = s.d().as_slice()[v];
    if label != 1 {
        return Err(TransformError::SmoothAtNonUnit { vertex, label });
    }
    if n == 3 {
        return Err(TransformError::SizeTooSmall);
    }
    let mut d = s.d().as_slice().to_vec();
    let (prev, next) = ((v + n - 1) % n, (v + 1) % n);
    if d[prev] < 2 || d[next] < 2 {
        return Err(TransformError::InvalidStructure);
    }
    d[prev] -= 1;
    d[next] -= 1;
    d.remove(v);
    let mut r = s.r().as_slice().to_vec();
    r.remove(v);
    let family = GraphFamily::cycle(n - 1).expect("n - 1 >= 3");
    Ok(ArithmeticalStructure::from_parts(
        family,
        DVector::from_vec_unchecked(d),
        RVector::from_vec_unchecked(r),
    ))
}

/// Permute `d` and `r` together by `g`.
pub fn apply(s: &ArithmeticalStructure, g: &DihedralElement) -> Result<ArithmeticalStructure, TransformError> {
    require_cycle(s)?;
    assert_eq!(g.n, s.n(), "group element for the wrong cycle length");
    Ok(ArithmeticalStructure::from_parts(
        s.family(),
        DVector::from_vec_unchecked(g.permute(s.d().as_slice())),
        RVector::from_vec_unchecked(g.permute(s.r().as_slice())),
    ))
}

pub fn canonical_key(s: &ArithmeticalStructure) -> Result<CanonicalKey, TransformError> {
    require_cycle(s)?;
    Ok(CanonicalKey::of_cycle_d(s.d().as_slice()))
}
