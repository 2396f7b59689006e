//! Catalog records and their JSON-lines, CSV and Markdown renderings.

use std::io::Write;

use arithstruct::{
    mu1_of, r_from_d, ArithmeticalStructure, CanonicalKey, DVector, GraphFamily, GraphKind, KernelSolution,
    RVector, StructureCatalog,
};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// One line of a catalog file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub graph: String,
    pub n: usize,
    pub d: Vec<u64>,
    /// Decimal strings, so values past 64 bits survive other JSON readers.
    pub r: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu1: Option<f64>,
    pub canonical: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_size: Option<usize>,
}

pub fn canonical_of(kind: GraphKind, d: &[u64]) -> Vec<u64> {
    match kind {
        GraphKind::Cycle => CanonicalKey::of_cycle_d(d).into_d().into_inner(),
        GraphKind::Path => {
            let rev: Vec<u64> = d.iter().rev().copied().collect();
            rev.min(d.to_vec())
        }
    }
}

impl CatalogRecord {
    pub fn new(family: GraphFamily, d: &[u64], r: &RVector, mu1: Option<f64>) -> Self {
        CatalogRecord {
            graph: family.kind().name().to_string(),
            n: family.n(),
            d: d.to_vec(),
            r: r.as_slice().iter().map(ToString::to_string).collect(),
            mu1,
            canonical: canonical_of(family.kind(), d),
            orbit_size: None,
        }
    }

    /// Build the record for a catalog entry, recomputing `r`.
    pub fn for_d(family: GraphFamily, d: &[u64], mu1: Option<f64>) -> Self {
        let dv = DVector::new(d.to_vec()).expect("catalog entries are positive");
        let r = match r_from_d(family, &dv) {
            Ok(KernelSolution::Valid(r)) => r,
            _ => panic!("catalog entry {dv} is not an arithmetical structure"),
        };
        CatalogRecord::new(family, d, &r, mu1)
    }

    /// Parse back into a structure, checking every field against `family`.
    pub fn to_structure(&self, family: GraphFamily) -> Result<ArithmeticalStructure, String> {
        if self.graph != family.kind().name() || self.n != family.n() {
            return Err(format!("record for {} n={} in a {} n={} file", self.graph, self.n, family.kind().name(), family.n()));
        }
        let d = DVector::new(self.d.clone()).map_err(|e| e.to_string())?;
        let r = self
            .r
            .iter()
            .map(|s| s.parse::<BigUint>().map_err(|e| format!("bad r entry {s:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        let r = RVector::new(r).map_err(|e| e.to_string())?;
        let s = ArithmeticalStructure::from_parts(family, d, r);
        if !s.validate() {
            return Err(format!("d = {} and r = {} do not form a structure", s.d(), s.r()));
        }
        if self.canonical != canonical_of(family.kind(), &self.d) {
            return Err(format!("wrong canonical key for {}", s.d()));
        }
        Ok(s)
    }

    fn joined(v: &[impl ToString]) -> String {
        v.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
    }
}

/// Spectral radius of every catalog entry, in catalog order.
pub fn compute_radii(catalog: &StructureCatalog) -> Result<Vec<f64>, CliError> {
    let family = catalog.family();
    let ds: Vec<DVector> = catalog.iter().collect();
    Ok(ds.par_iter().map(|d| mu1_of(family, d.as_slice())).collect::<Result<Vec<_>, _>>()?)
}

pub fn catalog_records(catalog: &StructureCatalog, radii: Option<&[f64]>) -> Vec<CatalogRecord> {
    let family = catalog.family();
    let ds: Vec<DVector> = catalog.iter().collect();
    ds.par_iter()
        .enumerate()
        .map(|(i, d)| CatalogRecord::for_d(family, d.as_slice(), radii.map(|r| r[i])))
        .collect()
}

/// One record per orbit: the canonical representative with its orbit size.
pub fn orbit_records(catalog: &StructureCatalog, with_mu1: bool) -> Result<Vec<CatalogRecord>, CliError> {
    let family = catalog.family();
    let reps: Vec<(Vec<u64>, usize)> = catalog
        .orbit_index()
        .into_iter()
        .map(|(key, members)| (key.into_d().into_inner(), members.len()))
        .collect();
    reps.into_par_iter()
        .map(|(d, size)| {
            let mu = if with_mu1 { Some(mu1_of(family, &d)?) } else { None };
            let mut rec = CatalogRecord::for_d(family, &d, mu);
            rec.orbit_size = Some(size);
            Ok(rec)
        })
        .collect()
}

pub fn write_jsonl<W: Write>(mut out: W, records: &[CatalogRecord]) -> Result<(), CliError> {
    for rec in records {
        serde_json::to_writer(&mut out, rec)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

/// Header `n,d,r,mu1,orbit_size` (plus `extra` columns); `d` and `r` are
/// semicolon-joined inside one quoted field.
pub fn write_csv<W: Write>(mut out: W, records: &[CatalogRecord], extra: &[(&str, Vec<String>)]) -> Result<(), CliError> {
    write!(out, "n,d,r,mu1,orbit_size")?;
    for (name, _) in extra {
        write!(out, ",{name}")?;
    }
    writeln!(out)?;
    for (i, rec) in records.iter().enumerate() {
        let mu = rec.mu1.map(|m| format!("{m}")).unwrap_or_default();
        let size = rec.orbit_size.map(|s| s.to_string()).unwrap_or_default();
        write!(out, "{},\"{}\",\"{}\",{},{}", rec.n, CatalogRecord::joined(&rec.d), CatalogRecord::joined(&rec.r), mu, size)?;
        for (_, col) in extra {
            write!(out, ",{}", col[i])?;
        }
        writeln!(out)?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_markdown<W: Write>(mut out: W, records: &[CatalogRecord]) -> Result<(), CliError> {
    writeln!(out, "| n | d | r | mu1 | orbit size |")?;
    writeln!(out, "|---|---|---|---|---|")?;
    for rec in records {
        let mu = rec.mu1.map(|m| format!("{m:.6}")).unwrap_or_default();
        let size = rec.orbit_size.map(|s| s.to_string()).unwrap_or_default();
        writeln!(out, "| {} | ({}) | ({}) | {} | {} |", rec.n, rec.d_list(), rec.r.join(","), mu, size)?;
    }
    out.flush()?;
    Ok(())
}

impl CatalogRecord {
    pub fn d_list(&self) -> String {
        self.d.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_round_trip() {
        let fam = GraphFamily::cycle(6).unwrap();
        let rec = CatalogRecord::for_d(fam, &[1, 8, 2, 2, 2, 2], Some(8.3));
        assert_eq!(rec.r, ["6", "1", "2", "3", "4", "5"]);
        assert_eq!(rec.canonical, [1, 2, 2, 2, 2, 8]);
        let line = serde_json::to_string(&rec).unwrap();
        assert!(!line.contains("orbit_size"));
        let back: CatalogRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back, rec);
        assert!(back.to_structure(fam).is_ok());
    }

    #[test]
    fn corrupt_records_rejected() {
        let fam = GraphFamily::cycle(3).unwrap();
        let mut rec = CatalogRecord::for_d(fam, &[1, 5, 2], None);
        rec.r[0] = "4".into();
        assert!(rec.to_structure(fam).is_err());
        let mut rec = CatalogRecord::for_d(fam, &[1, 5, 2], None);
        rec.canonical = vec![1, 5, 2];
        assert!(rec.to_structure(fam).is_err());
        assert!(CatalogRecord::for_d(fam, &[1, 5, 2], None).to_structure(GraphFamily::cycle(4).unwrap()).is_err());
    }

    #[test]
    fn csv_quoting() {
        let fam = GraphFamily::cycle(3).unwrap();
        let rec = CatalogRecord::for_d(fam, &[1, 5, 2], Some(5.5));
        let mut buf = Vec::new();
        write_csv(&mut buf, &[rec], &[]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("n,d,r,mu1,orbit_size"));
        assert_eq!(lines.next(), Some("3,\"1;5;2\",\"3;1;2\",5.5,"));
    }
}
