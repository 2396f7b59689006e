use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::StructureError;
use crate::family::{GraphFamily, GraphKind};
use crate::kernel;

/// Diagonal labels `d`. Every entry is at least 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DVector(Vec<u64>);

impl DVector {
    pub fn new(entries: Vec<u64>) -> Result<Self, StructureError> {
        if let Some(vertex) = entries.iter().position(|&e| e == 0) {
            return Err(StructureError::NonPositiveEntry { vertex });
        }
        Ok(DVector(entries))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }

    pub fn max_entry(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u64>) -> Self {
        debug_assert!(entries.iter().all(|&e| e > 0));
        DVector(entries)
    }
}

impl fmt::Display for DVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

/// Kernel labels `r`: positive, arbitrary precision, gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RVector(Vec<BigUint>);

impl RVector {
    pub fn new(entries: Vec<BigUint>) -> Result<Self, StructureError> {
        if let Some(vertex) = entries.iter().position(Zero::is_zero) {
            return Err(StructureError::NonPositiveEntry { vertex });
        }
        let g = entries.iter().fold(BigUint::zero(), |g, v| g.gcd(v));
        if !g.is_one() {
            return Err(StructureError::NotPrimitive(g.to_string()));
        }
        Ok(RVector(entries))
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self, StructureError> {
        Self::new(entries.iter().map(|&e| BigUint::from(e)).collect())
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> BigUint {
        self.0.iter().sum()
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<BigUint>) -> Self {
        RVector(entries)
    }
}

impl fmt::Display for RVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, it: impl Iterator<Item = T>) -> fmt::Result {
    f.write_str("(")?;
    for (i, v) in it.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str(")")
}

/// A pair `(d, r)` on a cycle or path.
///
/// Construction through [`ArithmeticalStructure::from_parts`] does not check
/// `(diag(d) - A) r = 0`; call [`validate`] for that.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArithmeticalStructure {
    family: GraphFamily,
    d: DVector,
    r: RVector,
}

impl ArithmeticalStructure {
    pub fn from_parts(family: GraphFamily, d: DVector, r: RVector) -> Self {
        ArithmeticalStructure { family, d, r }
    }

    /// Solve for `r`. A `d` without a positive kernel yields `Ok(None)`.
    pub fn from_d(family: GraphFamily, d: DVector) -> Result<Option<Self>, StructureError> {
        Ok(match r_from_d(family, &d)? {
            KernelSolution::Valid(r) => Some(ArithmeticalStructure { family, d, r }),
            KernelSolution::NoPositiveKernel => None,
        })
    }

    pub fn from_r(family: GraphFamily, r: RVector) -> Result<Self, StructureError> {
        let d = d_from_r(family, &r)?;
        Ok(ArithmeticalStructure { family, d, r })
    }

    pub fn family(&self) -> GraphFamily {
        self.family
    }

    pub fn n(&self) -> usize {
        self.family.n()
    }

    pub fn d(&self) -> &DVector {
        &self.d
    }

    pub fn r(&self) -> &RVector {
        &self.r
    }

    pub fn into_parts(self) -> (GraphFamily, DVector, RVector) {
        (self.family, self.d, self.r)
    }

    /// `d` equals the degree sequence.
    pub fn is_laplacian(&self) -> bool {
        self.d
            .as_slice()
            .iter()
            .enumerate()
            .all(|(v, &dv)| dv == self.family.degree(v))
    }

    pub fn validate(&self) -> bool {
        validate(self)
    }
}

impl fmt::Display for ArithmeticalStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} d={} r={}", self.family.kind().name(), self.n(), self.d, self.r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelSolution {
    Valid(RVector),
    NoPositiveKernel,
}

impl KernelSolution {
    pub fn is_valid(&self) -> bool {
        matches!(self, KernelSolution::Valid(_))
    }

    pub fn r(&self) -> Option<&RVector> {
        match self {
            KernelSolution::Valid(r) => Some(r),
            KernelSolution::NoPositiveKernel => None,
        }
    }

    pub fn into_r(self) -> Option<RVector> {
        match self {
            KernelSolution::Valid(r) => Some(r),
            KernelSolution::NoPositiveKernel => None,
        }
    }
}

/// The structure `(deg(G), 1)`.
pub fn laplacian_structure(family: GraphFamily) -> ArithmeticalStructure {
    let n = family.n();
    let d = (0..n).map(|v| family.degree(v)).collect();
    ArithmeticalStructure {
        family,
        d: DVector::from_vec_unchecked(d),
        r: RVector::from_vec_unchecked(vec![BigUint::one(); n]),
    }
}

fn check_len(family: GraphFamily, got: usize) -> Result<(), StructureError> {
    if got != family.n() {
        return Err(StructureError::LengthMismatch { expected: family.n(), got });
    }
    Ok(())
}

/// The unique positive gcd-1 vector in the kernel of `diag(d) - A`, computed
/// exactly. Cycles use the linear-form recurrence, paths use Bareiss
/// elimination.
pub fn r_from_d(family: GraphFamily, d: &DVector) -> Result<KernelSolution, StructureError> {
    check_len(family, d.len())?;
    let r = match family.kind() {
        GraphKind::Cycle => kernel::cycle_kernel(d.as_slice()),
        GraphKind::Path => kernel::bareiss_positive_kernel(family, d.as_slice()),
    };
    Ok(match r {
        Some(r) => KernelSolution::Valid(RVector::from_vec_unchecked(r)),
        None => KernelSolution::NoPositiveKernel,
    })
}

/// Same contract as [`r_from_d`], always through Bareiss elimination.
pub fn r_from_d_bareiss(family: GraphFamily, d: &DVector) -> Result<KernelSolution, StructureError> {
    check_len(family, d.len())?;
    Ok(match kernel::bareiss_positive_kernel(family, d.as_slice()) {
        Some(r) => KernelSolution::Valid(RVector::from_vec_unchecked(r)),
        None => KernelSolution::NoPositiveKernel,
    })
}

/// `d_i = (sum of neighbouring r) / r_i`, requiring every division to be exact.
pub fn d_from_r(family: GraphFamily, r: &RVector) -> Result<DVector, StructureError> {
    check_len(family, r.len())?;
    let r = r.as_slice();
    let mut d = Vec::with_capacity(r.len());
    for (v, rv) in r.iter().enumerate() {
        let s: BigUint = family.neighbors(v).map(|w| &r[w]).sum();
        let (q, rem) = s.div_rem(rv);
        if !rem.is_zero() || q.is_zero() {
            return Err(StructureError::NonIntegralQuotient { vertex: v });
        }
        d.push(q.to_u64().ok_or(StructureError::Overflow { vertex: v })?);
    }
    Ok(DVector(d))
}

/// Exact check of every invariant: sizes, positivity, `gcd(r) = 1` and
/// `r_v d_v = sum of neighbouring r` at every vertex.
pub fn validate(s: &ArithmeticalStructure) -> bool {
    let n = s.family.n();
    let (d, r) = (s.d.as_slice(), s.r.as_slice());
    if d.len() != n || r.len() != n {
        return false;
    }
    if d.contains(&0) || r.iter().any(Zero::is_zero) {
        return false;
    }
    if !r.iter().fold(BigUint::zero(), |g, v| g.gcd(v)).is_one() {
        return false;
    }
    (0..n).all(|v| {
        let s_nb: BigUint = s.family.neighbors(v).map(|w| &r[w]).sum();
        &r[v] * d[v] == s_nb
    })
}
