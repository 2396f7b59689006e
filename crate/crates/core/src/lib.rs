//! Arithmetical structures on cycle and path graphs.
//!
//! An arithmetical structure on a connected graph is a pair of positive
//! integer vectors `(d, r)` with `(diag(d) - A) r = 0` and `gcd(r) = 1`.
//! This crate enumerates every such structure on the cycle `C_n`, groups them
//! into dihedral orbits, computes the spectrum of the generalized Laplacian
//! `diag(d) - A` with a self-contained Jacobi eigensolver, and runs the
//! extremal spectral-radius checks (minimum at the Laplacian structure,
//! maximum at `d = (1, n+2, 2, ..., 2)`) exhaustively at desk scale.
//!
//! The crate is `no_std` and needs only `alloc`. File formats, the report
//! document and the command-line frontend live in the `arithstruct-cli`
//! crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod enumeration;
mod error;
pub mod family;
pub mod kernel;
pub mod spectra;
pub mod structure;
pub mod theorems;
pub mod transforms;

pub use enumeration::{
    brute_force_cycle, burnside_count, check_unit_vertex, count_orbits, enumerate_cycle, enumerate_path,
    subdivision_step, CatalogStore, EnumerationLimits, OrbitCount, PathSearch, StructureCatalog,
};
pub use error::{EnumerationError, SpectraError, StructureError, TheoremError, TransformError};
pub use family::{GraphFamily, GraphKind};
pub use spectra::{
    build_l, eigenvalues, laplacian_mu1_exact, mu1_of, rayleigh_quotient, spectral_radius, top_eigenpair,
    EigenPair, Spectrum, SymmetricMatrix,
};
pub use structure::{
    d_from_r, laplacian_structure, r_from_d, validate, ArithmeticalStructure, DVector,
    KernelSolution, RVector,
};
pub use transforms::{apply, canonical_key, smooth, subdivide, CanonicalKey, DihedralElement};
