//! Complete catalogs of arithmetical structures.
//!
//! Cycle catalogs are built by repeated subdivision starting from a
//! brute-forced `C_3`, and independently by an exhaustive scan over bounded
//! `d`-vectors. Path catalogs come from the exhaustive scan only.
//!
//! Catalogs store `d`-vectors packed one byte per entry into a `u128`, in
//! ascending lexicographic order; `r` is recomputed on demand.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::EnumerationError;
use crate::family::{GraphFamily, GraphKind};
use crate::structure::{r_from_d, ArithmeticalStructure, DVector, KernelSolution};
use crate::theorems::report::{NReport, VerificationReport, Witness};
use crate::transforms::{CanonicalKey, DihedralElement};

/// Largest order a packed catalog can hold.
pub const MAX_PACKED_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    /// Largest `n` for [`enumerate_cycle`]; at most [`MAX_PACKED_N`].
    pub max_cycle_n: usize,
    /// Largest `n` for [`brute_force_cycle`].
    pub max_brute_force_n: usize,
    /// Largest `n` for [`enumerate_path`].
    pub max_path_n: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits { max_cycle_n: 12, max_brute_force_n: 9, max_path_n: 9 }
    }
}

fn pack(d: &[u64]) -> Option<u128> {
    if d.len() > MAX_PACKED_N {
        return None;
    }
    d.iter().try_fold(0u128, |acc, &x| {
        let b = u8::try_from(x).ok()?;
        Some((acc << 8) | b as u128)
    })
}

fn unpack_into(p: u128, n: usize, out: &mut [u8; MAX_PACKED_N]) {
    for i in 0..n {
        out[i] = (p >> (8 * (n - 1 - i))) as u8;
    }
}

fn pack_bytes(d: &[u8]) -> u128 {
    d.iter().fold(0u128, |acc, &b| (acc << 8) | b as u128)
}

fn unpack(p: u128, n: usize) -> Vec<u64> {
    let mut buf = [0u8; MAX_PACKED_N];
    unpack_into(p, n, &mut buf);
    buf[..n].iter().map(|&b| b as u64).collect()
}

/// Least packed image of `d` under the symmetry group of the family.
fn packed_canonical(kind: GraphKind, d: &[u8]) -> u128 {
    let n = d.len();
    let mut img = [0u8; MAX_PACKED_N];
    match kind {
        GraphKind::Cycle => {
            let mut best = u128::MAX;
            for g in DihedralElement::all(n) {
                for (j, slot) in img[..n].iter_mut().enumerate() {
                    *slot = d[g.source(j)];
                }
                best = best.min(pack_bytes(&img[..n]));
            }
            best
        }
        GraphKind::Path => {
            for (j, slot) in img[..n].iter_mut().enumerate() {
                *slot = d[n - 1 - j];
            }
            pack_bytes(d).min(pack_bytes(&img[..n]))
        }
    }
}

/// Every arithmetical structure on one graph, keyed by `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureCatalog {
    family: GraphFamily,
    packed: Vec<u128>,
}

impl StructureCatalog {
    fn from_packed(family: GraphFamily, mut packed: Vec<u128>) -> Self {
        packed.sort_unstable();
        packed.dedup();
        StructureCatalog { family, packed }
    }

    /// Build a catalog from known `d`-vectors, e.g. read back from a cache
    /// file. Duplicates are dropped. Membership is not re-validated here.
    pub fn from_d_vectors<I>(family: GraphFamily, ds: I) -> Result<Self, EnumerationError>
    where
        I: IntoIterator<Item = DVector>,
    {
        let n = family.n();
        if n > MAX_PACKED_N {
            return Err(EnumerationError::CapExceeded { n, cap: MAX_PACKED_N });
        }
        let packed = ds
            .into_iter()
            .map(|d| {
                if d.len() != n {
                    return Err(EnumerationError::WrongPredecessor { got: d.len(), want: n });
                }
                pack(d.as_slice()).ok_or(EnumerationError::CapExceeded { n, cap: MAX_PACKED_N })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_packed(family, packed))
    }

    pub fn family(&self) -> GraphFamily {
        self.family
    }

    pub fn n(&self) -> usize {
        self.family.n()
    }

    pub fn len(&self) -> usize {
        self.packed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.packed.is_empty()
    }

    /// `d`-vectors in ascending lexicographic order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = DVector> + '_ {
        let n = self.n();
        self.packed.iter().map(move |&p| DVector::from_vec_unchecked(unpack(p, n)))
    }

    pub fn get(&self, index: usize) -> Option<DVector> {
        self.packed.get(index).map(|&p| DVector::from_vec_unchecked(unpack(p, self.n())))
    }

    pub fn contains(&self, d: &[u64]) -> bool {
        d.len() == self.n() && pack(d).is_some_and(|p| self.packed.binary_search(&p).is_ok())
    }

    /// Full structures, with `r` recomputed exactly for each entry.
    pub fn structures(&self) -> impl ExactSizeIterator<Item = ArithmeticalStructure> + '_ {
        let family = self.family;
        self.iter().map(move |d| {
            ArithmeticalStructure::from_d(family, d)
                .ok()
                .flatten()
                .expect("catalog entries are arithmetical structures")
        })
    }

    /// Symmetry class of every entry (dihedral for cycles, reversal for paths).
    pub fn orbit_index(&self) -> BTreeMap<CanonicalKey, Vec<DVector>> {
        let n = self.n();
        let kind = self.family.kind();
        let mut index: BTreeMap<CanonicalKey, Vec<DVector>> = BTreeMap::new();
        let mut buf = [0u8; MAX_PACKED_N];
        for &p in &self.packed {
            unpack_into(p, n, &mut buf);
            let key = unpack(packed_canonical(kind, &buf[..n]), n);
            index
                .entry(CanonicalKey::wrap(DVector::from_vec_unchecked(key)))
                .or_default()
                .push(DVector::from_vec_unchecked(unpack(p, n)));
        }
        index
    }

    fn canonical_keys_sorted(&self) -> Vec<u128> {
        let n = self.n();
        let kind = self.family.kind();
        let mut buf = [0u8; MAX_PACKED_N];
        let mut keys: Vec<u128> = self
            .packed
            .iter()
            .map(|&p| {
                unpack_into(p, n, &mut buf);
                packed_canonical(kind, &buf[..n])
            })
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys
    }

    pub fn max_entry(&self) -> u64 {
        let n = self.n();
        let mut buf = [0u8; MAX_PACKED_N];
        self.packed
            .iter()
            .map(|&p| {
                unpack_into(p, n, &mut buf);
                buf[..n].iter().copied().max().unwrap_or(0) as u64
            })
            .max()
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OrbitCount {
    pub n: usize,
    pub total: usize,
    pub up_to_symmetry: usize,
}

fn check_cycle_n(n: usize, cap: usize) -> Result<(), EnumerationError> {
    if n < 3 {
        return Err(EnumerationError::TooSmall { n, min: 3 });
    }
    let cap = cap.min(MAX_PACKED_N);
    if n > cap {
        return Err(EnumerationError::CapExceeded { n, cap });
    }
    Ok(())
}

/// One inductive step: the Laplacian structure on `C_{m+1}` together with
/// every subdivision of every structure in the `C_m` catalog.
pub fn subdivision_step(prev: &StructureCatalog) -> Result<StructureCatalog, EnumerationError> {
    let m = prev.n();
    if !prev.family.is_cycle() {
        return Err(EnumerationError::WrongPredecessor { got: m, want: m + 1 });
    }
    let n = m + 1;
    check_cycle_n(n, MAX_PACKED_N)?;
    let mut out: Vec<u128> = Vec::with_capacity(prev.len() * (m + 1) + 1);
    out.push(pack_bytes(&[2u8; MAX_PACKED_N][..n]));
    let mut src = [0u8; MAX_PACKED_N];
    let mut dst = [0u8; MAX_PACKED_N];
    for &p in &prev.packed {
        unpack_into(p, m, &mut src);
        // slots 0 and m both sit on the edge (m-1, 0); both labelings are needed
        for slot in 0..=m {
            let (i, j) = ((slot + m - 1) % m, slot % m);
            let mut k = 0;
            for (pos, &v) in src[..m].iter().enumerate() {
                if pos == slot {
                    dst[k] = 1;
                    k += 1;
                }
                dst[k] = v + u8::from(pos == i) + u8::from(pos == j);
                k += 1;
            }
            if slot == m {
                dst[k] = 1;
            }
            out.push(pack_bytes(&dst[..n]));
        }
    }
    Ok(StructureCatalog::from_packed(GraphFamily::cycle(n).expect("n >= 4"), out))
}

/// All structures on `C_n`: brute-forced base case `C_3`, then subdivision.
pub fn enumerate_cycle(n: usize, limits: &EnumerationLimits) -> Result<StructureCatalog, EnumerationError> {
    check_cycle_n(n, limits.max_cycle_n)?;
    let mut cat = brute_force_cycle(3, 7, limits)?;
    while cat.n() < n {
        cat = subdivision_step(&cat)?;
    }
    Ok(cat)
}

/// 2x2 integer transfer matrix product, row-major.
type Transfer = [i128; 4];

fn times_transfer(p: &Transfer, d: u64) -> Transfer {
    // p * [[d, -1], [1, 0]]
    let d = d as i128;
    [p[0] * d + p[1], -p[0], p[2] * d + p[3], -p[2]]
}

/// Every `d` in `[1, d_cap]^n` with a positive kernel, by exhaustive scan.
///
/// `det(diag(d) - A(C_n)) = tr(T_1 ... T_n) - 2` with
/// `T_i = [[d_i, -1], [1, 0]]`, which is affine in `d_n`. The scan therefore
/// runs over all prefixes `d_1..d_{n-1}` and solves `det = 0` for `d_n`
/// instead of trying each value; every candidate is then confirmed by
/// [`r_from_d`].
pub fn brute_force_cycle(
    n: usize,
    d_cap: u64,
    limits: &EnumerationLimits,
) -> Result<StructureCatalog, EnumerationError> {
    check_cycle_n(n, limits.max_brute_force_n)?;
    let min_cap = n as u64 + 4;
    if d_cap < min_cap {
        return Err(EnumerationError::DCapTooSmall { cap: d_cap, min: min_cap });
    }
    if d_cap > u8::MAX as u64 {
        return Err(EnumerationError::DCapTooSmall { cap: d_cap, min: u8::MAX as u64 });
    }
    let family = GraphFamily::cycle(n).expect("n >= 3");
    let mut found = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    scan_cycle(family, d_cap, &[1, 0, 0, 1], &mut prefix, &mut found);
    Ok(StructureCatalog::from_packed(family, found))
}

fn scan_cycle(family: GraphFamily, cap: u64, p: &Transfer, prefix: &mut Vec<u64>, found: &mut Vec<u128>) {
    let n = family.n();
    if prefix.len() == n - 1 {
        // det = d_n * P11 + P12 - P21 - 2
        let rest = p[1] - p[2] - 2;
        let candidates: Vec<u64> = if p[0] == 0 {
            if rest == 0 { (1..=cap).collect() } else { Vec::new() }
        } else if (-rest) % p[0] == 0 && (-rest) / p[0] >= 1 && (-rest) / p[0] <= cap as i128 {
            alloc::vec![((-rest) / p[0]) as u64]
        } else {
            Vec::new()
        };
        for last in candidates {
            prefix.push(last);
            let d = DVector::from_vec_unchecked(prefix.clone());
            if matches!(r_from_d(family, &d), Ok(KernelSolution::Valid(_))) {
                found.push(pack(prefix).expect("cap fits in a byte"));
            }
            prefix.pop();
        }
        return;
    }
    for v in 1..=cap {
        prefix.push(v);
        scan_cycle(family, cap, &times_transfer(p, v), prefix, found);
        prefix.pop();
    }
}

/// Result of the bounded path search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSearch {
    pub catalog: StructureCatalog,
    /// Entries were searched in `1..=bound`.
    pub bound: u64,
    /// Some structure found has an entry equal to `bound`, so larger entries
    /// may exist beyond the search window.
    pub bound_hit: bool,
}

/// Exhaustive search for structures on `P_n` with entries in `1..=2n`.
///
/// With leading minors `p_k` of `diag(d) - A(P_n)`, `det = p_n` and
/// `d_n = p_{n-2} / p_{n-1}`. Requiring `d_n >= 1` forces
/// `|p_{n-1}| <= |p_{n-2}|`, which leaves at most three values of `d_{n-1}`
/// per prefix; the scan enumerates `d_1..d_{n-2}` freely.
pub fn enumerate_path(n: usize, limits: &EnumerationLimits) -> Result<PathSearch, EnumerationError> {
    if n < 2 {
        return Err(EnumerationError::TooSmall { n, min: 2 });
    }
    let cap = limits.max_path_n.min(MAX_PACKED_N);
    if n > cap {
        return Err(EnumerationError::CapExceeded { n, cap });
    }
    let family = GraphFamily::path(n).expect("n >= 2");
    let bound = 2 * n as u64;
    let mut found = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    scan_path(family, bound, (1, 0), &mut prefix, &mut found);
    let catalog = StructureCatalog::from_packed(family, found);
    let bound_hit = catalog.max_entry() >= bound;
    Ok(PathSearch { catalog, bound, bound_hit })
}

/// `minors = (p_k, p_{k-1})` for the current prefix of length `k`.
fn scan_path(family: GraphFamily, bound: u64, minors: (i128, i128), prefix: &mut Vec<u64>, found: &mut Vec<u128>) {
    let n = family.n();
    let (pk, pk1) = minors;
    if prefix.len() == n - 2 {
        if pk == 0 {
            return;
        }
        // |d * pk - pk1| <= |pk| puts d within 1 of pk1 / pk
        let base = pk1.div_euclid(pk);
        for dm in (base - 2).max(1)..=(base + 2).min(bound as i128) {
            let next = dm * pk - pk1;
            if next == 0 || pk % next != 0 {
                continue;
            }
            let dn = pk / next;
            if dn < 1 || dn > bound as i128 {
                continue;
            }
            prefix.push(dm as u64);
            prefix.push(dn as u64);
            let d = DVector::from_vec_unchecked(prefix.clone());
            if matches!(r_from_d(family, &d), Ok(KernelSolution::Valid(_))) {
                found.push(pack(prefix).expect("bound fits in a byte"));
            }
            prefix.truncate(n - 2);
        }
        return;
    }
    for v in 1..=bound {
        prefix.push(v);
        scan_path(family, bound, (v as i128 * pk - pk1, pk), prefix, found);
        prefix.pop();
    }
}

/// Number of structures and number of symmetry classes.
pub fn count_orbits(catalog: &StructureCatalog) -> OrbitCount {
    OrbitCount {
        n: catalog.n(),
        total: catalog.len(),
        up_to_symmetry: catalog.canonical_keys_sorted().len(),
    }
}

/// Orbit count by Burnside's lemma: the mean number of catalog entries fixed
/// by a group element. Independent of canonical keys.
pub fn burnside_count(catalog: &StructureCatalog) -> usize {
    let n = catalog.n();
    let mut buf = [0u8; MAX_PACKED_N];
    let perms: Vec<Vec<usize>> = match catalog.family.kind() {
        GraphKind::Cycle => DihedralElement::all(n).map(|g| (0..n).map(|j| g.source(j)).collect()).collect(),
        GraphKind::Path => alloc::vec![(0..n).collect(), (0..n).rev().collect()],
    };
    let mut fixed = 0usize;
    for &p in &catalog.packed {
        unpack_into(p, n, &mut buf);
        fixed += perms
            .iter()
            .filter(|perm| perm.iter().enumerate().all(|(j, &s)| buf[j] == buf[s]))
            .count();
    }
    debug_assert_eq!(fixed % perms.len(), 0);
    fixed / perms.len()
}

/// Every non-Laplacian structure on `C_n`, `n >= 4`, has a vertex with
/// `d_i = 1` whose two neighbours both have `d != 1`.
pub fn check_unit_vertex(catalog: &StructureCatalog) -> VerificationReport {
    let n = catalog.n();
    let mut per = NReport::new(n);
    if !catalog.family.is_cycle() || n < 4 {
        per.not_applicable("statement needs a cycle with n >= 4");
    } else {
        let mut worst = 0usize;
        for d in catalog.iter() {
            let d = d.as_slice();
            if d.iter().all(|&x| x == 2) {
                continue;
            }
            let isolated_units = (0..n)
                .filter(|&i| d[i] == 1 && d[(i + n - 1) % n] != 1 && d[(i + 1) % n] != 1)
                .count();
            if isolated_units == 0 {
                per.fail_with(Witness::structure_from_d(catalog.family, d, None));
            }
            worst = worst.max(usize::from(isolated_units == 0));
        }
        per.set_margin(if worst == 0 { 1.0 } else { -1.0 });
    }
    let mut report = VerificationReport::new("unit-vertex");
    report.push(per);
    report
}

/// Catalogs by `n`, with cached spectral radii, built on demand.
#[derive(Debug, Clone, Default)]
pub struct CatalogStore {
    limits: EnumerationLimits,
    cycles: BTreeMap<usize, StructureCatalog>,
    radii: BTreeMap<usize, Vec<f64>>,
    build_on_demand: bool,
}

impl CatalogStore {
    pub fn new(limits: EnumerationLimits) -> Self {
        CatalogStore { limits, cycles: BTreeMap::new(), radii: BTreeMap::new(), build_on_demand: true }
    }

    /// A store whose theorem checks report a missing catalog instead of
    /// enumerating it.
    pub fn preloaded_only(limits: EnumerationLimits) -> Self {
        CatalogStore { build_on_demand: false, ..Self::new(limits) }
    }

    pub fn limits(&self) -> &EnumerationLimits {
        &self.limits
    }

    pub fn insert(&mut self, catalog: StructureCatalog) {
        if catalog.family.is_cycle() {
            let n = catalog.n();
            self.radii.remove(&n);
            self.cycles.insert(n, catalog);
        }
    }

    /// Spectral radii aligned with the catalog order of `n`.
    pub fn insert_radii(&mut self, n: usize, radii: Vec<f64>) {
        if self.cycles.get(&n).is_some_and(|c| c.len() == radii.len()) {
            self.radii.insert(n, radii);
        }
    }

    pub fn catalog(&self, n: usize) -> Option<&StructureCatalog> {
        self.cycles.get(&n)
    }

    pub fn ensure_cycle(&mut self, n: usize) -> Result<&StructureCatalog, EnumerationError> {
        if !self.cycles.contains_key(&n) {
            check_cycle_n(n, self.limits.max_cycle_n)?;
            let start = self.cycles.range(3..n).next_back().map(|(_, c)| c.clone());
            let mut cat = match start {
                Some(c) => c,
                None => {
                    let base = brute_force_cycle(3, 7, &self.limits)?;
                    self.cycles.insert(3, base.clone());
                    base
                }
            };
            while cat.n() < n {
                cat = subdivision_step(&cat)?;
                self.cycles.entry(cat.n()).or_insert_with(|| cat.clone());
            }
            self.cycles.insert(n, cat);
        }
        Ok(&self.cycles[&n])
    }

    pub(crate) fn builds_on_demand(&self) -> bool {
        self.build_on_demand
    }

    pub fn radii(&self, n: usize) -> Option<&[f64]> {
        self.radii.get(&n).map(Vec::as_slice)
    }

    pub(crate) fn store_radii(&mut self, n: usize, radii: Vec<f64>) {
        self.radii.insert(n, radii);
    }
}
