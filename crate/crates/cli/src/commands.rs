use std::fs::File;
use std::io::{BufWriter, Write};

use arithstruct::theorems::{TheoremId, Tolerances, VerificationReport, Verifier};
use arithstruct::{
    count_orbits, eigenvalues, r_from_d, top_eigenpair, DVector, EnumerationLimits, GraphFamily, GraphKind,
    KernelSolution, SymmetricMatrix,
};
use serde::{Deserialize, Serialize};

use crate::args::{CatalogFormat, CountArgs, EnumerateArgs, SpectraArgs, TableArgs, TableFormat, VerifyArgs};
use crate::cache::Cache;
use crate::catalogs::Catalogs;
use crate::error::CliError;
use crate::records::{catalog_records, orbit_records, write_csv, write_jsonl, write_markdown, CatalogRecord};

pub const SCHEMA_VERSION: &str = "1";

fn report_path_bound(catalogs: &Catalogs, kind: GraphKind, n: usize) {
    if kind == GraphKind::Path {
        if let Some(info) = catalogs.path_info(n) {
            eprintln!(
                "path n={n}: entries searched up to {}, bound hit: {}",
                info.bound,
                if info.bound_hit { "yes (count may be incomplete)" } else { "no" }
            );
        }
    }
}

pub fn enumerate(args: &EnumerateArgs, limits: EnumerationLimits, stdout: &mut dyn Write) -> Result<(), CliError> {
    let kind: GraphKind = args.graph.into();
    let mut catalogs = Catalogs::new(limits, Cache::resolve(args.cache.as_deref()));
    let mut records = Vec::new();
    for n in args.range().iter() {
        let (cat, radii) = catalogs.get(kind, n)?;
        let counts = count_orbits(cat);
        eprintln!("{} n={n}: {} structures, {} up to symmetry", kind.name(), counts.total, counts.up_to_symmetry);
        if args.up_to_symmetry {
            records.extend(orbit_records(cat, true)?);
        } else {
            records.extend(catalog_records(cat, Some(radii)));
        }
        report_path_bound(&catalogs, kind, n);
    }
    let mut file;
    let out: &mut dyn Write = match &args.out {
        Some(path) => {
            file = BufWriter::new(File::create(path)?);
            &mut file
        }
        None => stdout,
    };
    match args.format {
        CatalogFormat::Jsonl => write_jsonl(out, &records),
        CatalogFormat::Csv => write_csv(out, &records, &[]),
        CatalogFormat::Md => write_markdown(out, &records),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SpectraOutput {
    pub graph: String,
    pub n: usize,
    pub d: Vec<u64>,
    pub r: Vec<String>,
    pub mu1: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenvalues: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenvector: Option<Vec<f64>>,
}

pub fn spectra(args: &SpectraArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let family = GraphFamily::new(args.graph.into(), args.d.len())?;
    let d = DVector::new(args.d.clone())?;
    let r = match r_from_d(family, &d)? {
        KernelSolution::Valid(r) => r,
        KernelSolution::NoPositiveKernel => {
            return Err(CliError::InvalidStructure(format!("{d} has no positive kernel vector")));
        }
    };
    let m = SymmetricMatrix::generalized_laplacian(family, d.as_slice());
    let spectrum = eigenvalues(&m)?;
    let eigenvector = if args.eigvec { Some(top_eigenpair(&m)?.vector) } else { None };
    let out = SpectraOutput {
        graph: family.kind().name().to_string(),
        n: family.n(),
        r: CatalogRecord::new(family, d.as_slice(), &r, None).r,
        d: d.into_inner(),
        mu1: spectrum.mu1(),
        eigenvalues: args.full.then(|| spectrum.eigenvalues.clone()),
        eigenvector,
    };
    serde_json::to_writer_pretty(&mut *stdout, &out)?;
    writeln!(stdout)?;
    Ok(())
}

/// Orbit rows of `C_n` sorted by spectral radius, then canonical key.
pub fn table_rows(catalogs: &mut Catalogs, n: usize) -> Result<Vec<CatalogRecord>, CliError> {
    let cat = catalogs.catalog(GraphKind::Cycle, n)?;
    let mut rows = orbit_records(cat, true)?;
    // values closer than 1e-9 count as ties
    let key = |r: &CatalogRecord| (r.mu1.expect("computed") * 1e9).round() as i64;
    rows.sort_by(|a, b| key(a).cmp(&key(b)).then_with(|| a.canonical.cmp(&b.canonical)));
    Ok(rows)
}

pub fn table(args: &TableArgs, limits: EnumerationLimits, stdout: &mut dyn Write) -> Result<(), CliError> {
    let mut catalogs = Catalogs::new(limits, Cache::resolve(args.cache.as_deref()));
    let rows = table_rows(&mut catalogs, args.n)?;
    let top = rows.iter().filter_map(|r| r.mu1).fold(f64::NEG_INFINITY, f64::max);
    let is_max: Vec<bool> = rows.iter().map(|r| r.mu1.is_some_and(|m| m >= top - 1e-9)).collect();
    eprintln!("cycle n={}: {} orbits", args.n, rows.len());
    match args.format {
        TableFormat::Md => {
            writeln!(stdout, "| d | r | mu1 | orbit size | |")?;
            writeln!(stdout, "|---|---|---|---|---|")?;
            for (row, max) in rows.iter().zip(&is_max) {
                writeln!(
                    stdout,
                    "| ({}) | ({}) | {:.2} | {} | {} |",
                    row.d_list(),
                    row.r.join(","),
                    row.mu1.expect("computed"),
                    row.orbit_size.expect("orbit rows"),
                    if *max { "max" } else { "" }
                )?;
            }
            stdout.flush()?;
            Ok(())
        }
        TableFormat::Csv => {
            let rounded: Vec<CatalogRecord> = rows
                .into_iter()
                .map(|mut r| {
                    r.mu1 = r.mu1.map(|m| (m * 100.0).round() / 100.0);
                    r
                })
                .collect();
            let flags = is_max.iter().map(|m| m.to_string()).collect();
            write_csv(stdout, &rounded, &[("max", flags)])
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Caps {
    pub max_cycle_n: usize,
    pub max_brute_force_n: usize,
    pub max_path_n: usize,
    pub family_sweep_cap: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Environment {
    pub tolerances: Tolerances,
    pub caps: Caps,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    pub reports: Vec<VerificationReport>,
    pub environment: Environment,
}

impl ReportDocument {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }
}

fn needs_catalog(t: TheoremId, n: usize, cap: usize) -> bool {
    match t {
        TheoremId::LemmaM | TheoremId::D313 | TheoremId::Eigvec => false,
        TheoremId::Max => n <= cap,
        // checked only for n >= 6
        TheoremId::DStar => n >= 6,
        _ => true,
    }
}

pub fn verify_document(args: &VerifyArgs, limits: EnumerationLimits) -> Result<ReportDocument, CliError> {
    let ids = args.theorem.ids();
    let cap = limits.max_cycle_n;
    let mut wanted = Vec::new();
    for n in args.n_range.iter() {
        for &t in &ids {
            if needs_catalog(t, n, cap) {
                if n > cap {
                    return Err(CliError::CapExceeded(format!("{t} needs the full catalog, n = {n} exceeds the cap {cap}")));
                }
                if n >= 3 && !wanted.contains(&n) {
                    wanted.push(n);
                }
            }
        }
    }
    let mut catalogs = Catalogs::new(limits, Cache::resolve(args.cache.as_deref()));
    for &n in &wanted {
        catalogs.get(GraphKind::Cycle, n)?;
    }
    let mut verifier = Verifier::new(catalogs.into_store());
    let mut reports = Vec::new();
    for t in ids {
        let report = verifier.run(t, args.n_range.iter())?;
        eprintln!("{t}: {}", if report.passed() { "pass" } else { "FAIL" });
        reports.push(report);
    }
    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        command: format!("verify --theorem {} --n-range {}", args.theorem_name(), args.n_range),
        environment: Environment {
            tolerances: *verifier.tolerances(),
            caps: Caps {
                max_cycle_n: limits.max_cycle_n,
                max_brute_force_n: limits.max_brute_force_n,
                max_path_n: limits.max_path_n,
                family_sweep_cap: verifier.family_sweep_cap,
            },
        },
        reports,
    })
}

/// Exit status 1 on any failed check, after the report has been written.
pub fn verify(args: &VerifyArgs, limits: EnumerationLimits, stdout: &mut dyn Write) -> Result<(), CliError> {
    let doc = verify_document(args, limits)?;
    serde_json::to_writer_pretty(&mut *stdout, &doc)?;
    writeln!(stdout)?;
    stdout.flush()?;
    if doc.passed() {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}

pub fn count(args: &CountArgs, limits: EnumerationLimits, stdout: &mut dyn Write) -> Result<(), CliError> {
    let kind: GraphKind = args.graph.into();
    let mut catalogs = Catalogs::new(limits, Cache::resolve(args.cache.as_deref()));
    writeln!(stdout, "n,count")?;
    for n in args.n_range.iter() {
        let counts = count_orbits(catalogs.catalog(kind, n)?);
        let value = if args.up_to_symmetry { counts.up_to_symmetry } else { counts.total };
        writeln!(stdout, "{n},{value}")?;
        report_path_bound(&catalogs, kind, n);
    }
    stdout.flush()?;
    Ok(())
}
