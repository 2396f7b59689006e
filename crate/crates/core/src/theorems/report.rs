use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::family::GraphFamily;
use crate::structure::{r_from_d, DVector};

/// At most this many witnesses are kept per `n`.
pub const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Verdict {
    Pass,
    Fail,
    /// `n` lies outside the statement's hypothesis; recorded, never a failure.
    NotApplicable,
}

/// Concrete object reproducing an observation through the public API.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum Witness {
    Structure {
        graph: String,
        d: Vec<u64>,
        /// Decimal strings; empty if `d` has no positive kernel.
        r: Vec<String>,
        mu1: Option<f64>,
    },
    /// A matrix `diag(diagonal) - A(P_n)` that is not itself a structure.
    PathMatrix { diagonal: Vec<u64>, mu1: f64 },
}

impl Witness {
    pub fn structure_from_d(family: GraphFamily, d: &[u64], mu1: Option<f64>) -> Witness {
        let r = DVector::new(d.to_vec())
            .ok()
            .and_then(|dv| r_from_d(family, &dv).ok())
            .and_then(|k| k.into_r())
            .map(|r| r.as_slice().iter().map(ToString::to_string).collect())
            .unwrap_or_default();
        Witness::Structure { graph: family.kind().name().to_string(), d: d.to_vec(), r, mu1 }
    }
}

/// Outcome of one statement at one `n`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NReport {
    pub n: usize,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    /// Slack of the tightest inequality checked; negative on failure.
    /// `None` when nothing was measured.
    pub margin: Option<f64>,
    /// Named numeric observations (extreme values, counts).
    pub observed: BTreeMap<String, f64>,
    pub notes: Vec<String>,
}

impl NReport {
    pub fn new(n: usize) -> Self {
        NReport {
            n,
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
            margin: None,
            observed: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    pub fn fail_with(&mut self, w: Witness) {
        self.verdict = Verdict::Fail;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(w);
        }
    }

    pub fn not_applicable(&mut self, note: &str) {
        if self.verdict == Verdict::Pass {
            self.verdict = Verdict::NotApplicable;
        }
        self.notes.push(note.to_string());
    }

    pub fn note(&mut self, note: String) {
        self.notes.push(note);
    }

    pub fn set_margin(&mut self, m: f64) {
        self.margin = Some(m);
    }

    /// Record the slack of one inequality (`lhs <= rhs` has slack `rhs - lhs`).
    pub fn slack(&mut self, s: f64) {
        if self.margin.is_none_or(|m| s < m) {
            self.margin = Some(s);
        }
    }

    pub fn observe(&mut self, key: &str, value: f64) {
        self.observed.insert(key.to_string(), value);
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Tolerances {
    /// Strict inequalities must hold by at least this much.
    pub strict_margin: f64,
    /// Equalities are accepted within this distance.
    pub equality: f64,
    /// Jacobi stopping rule, relative to the Frobenius norm.
    pub jacobi_relative: f64,
    /// Two-decimal rounding of printed values.
    pub rounding: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            strict_margin: 1e-9,
            equality: 1e-9,
            jacobi_relative: crate::spectra::RELATIVE_OFFDIAG_TOL,
            rounding: 0.005,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VerificationReport {
    pub theorem_id: String,
    /// Inclusive `(first, last)` range of `n`; `(0, 0)` when empty.
    pub n_range: (usize, usize),
    pub per_n: Vec<NReport>,
    pub tolerances: Tolerances,
}

impl VerificationReport {
    pub fn new(theorem_id: &str) -> Self {
        VerificationReport {
            theorem_id: theorem_id.to_string(),
            n_range: (0, 0),
            per_n: Vec::new(),
            tolerances: Tolerances::default(),
        }
    }

    pub fn push(&mut self, r: NReport) {
        self.n_range = if self.per_n.is_empty() {
            (r.n, r.n)
        } else {
            (self.n_range.0.min(r.n), self.n_range.1.max(r.n))
        };
        self.per_n.push(r);
    }

    pub fn passed(&self) -> bool {
        self.per_n.iter().all(NReport::passed)
    }

    pub fn get(&self, n: usize) -> Option<&NReport> {
        self.per_n.iter().find(|r| r.n == n)
    }
}
