//! Catalog provider shared by the commands: cache first, then enumeration.

use std::collections::BTreeMap;

use arithstruct::{
    enumerate_path, CatalogStore, DVector, EnumerationLimits, GraphFamily, GraphKind, StructureCatalog,
};

use crate::cache::Cache;
use crate::error::CliError;
use crate::records::{catalog_records, compute_radii, CatalogRecord};

type Loaded = (StructureCatalog, Option<Vec<f64>>);

#[derive(Debug, Clone, Copy)]
pub struct PathInfo {
    pub bound: u64,
    pub bound_hit: bool,
}

pub struct Catalogs {
    limits: EnumerationLimits,
    cache: Option<Cache>,
    store: CatalogStore,
    paths: BTreeMap<usize, Loaded>,
    path_info: BTreeMap<usize, PathInfo>,
}

impl Catalogs {
    pub fn new(limits: EnumerationLimits, cache: Option<Cache>) -> Self {
        Catalogs { limits, cache, store: CatalogStore::new(limits), paths: BTreeMap::new(), path_info: BTreeMap::new() }
    }

    pub fn limits(&self) -> &EnumerationLimits {
        &self.limits
    }

    pub fn into_store(self) -> CatalogStore {
        self.store
    }

    /// Catalog of `C_n` or `P_n`.
    pub fn catalog(&mut self, kind: GraphKind, n: usize) -> Result<&StructureCatalog, CliError> {
        self.load(kind, n)?;
        Ok(match kind {
            GraphKind::Cycle => self.store.catalog(n).expect("loaded"),
            GraphKind::Path => &self.paths[&n].0,
        })
    }

    /// Catalog together with the spectral radius of every entry.
    pub fn get(&mut self, kind: GraphKind, n: usize) -> Result<(&StructureCatalog, &[f64]), CliError> {
        self.load(kind, n)?;
        let missing = match kind {
            GraphKind::Cycle => self.store.radii(n).is_none(),
            GraphKind::Path => self.paths[&n].1.is_none(),
        };
        if missing {
            let radii = compute_radii(self.catalog(kind, n)?)?;
            match kind {
                GraphKind::Cycle => self.store.insert_radii(n, radii),
                GraphKind::Path => self.paths.get_mut(&n).expect("loaded").1 = Some(radii),
            }
        }
        Ok(match kind {
            GraphKind::Cycle => (self.store.catalog(n).expect("loaded"), self.store.radii(n).expect("computed")),
            GraphKind::Path => {
                let (c, r) = &self.paths[&n];
                (c, r.as_deref().expect("computed"))
            }
        })
    }

    /// Search-bound details of a path catalog loaded earlier.
    pub fn path_info(&self, n: usize) -> Option<PathInfo> {
        self.path_info.get(&n).copied()
    }

    fn loaded(&self, kind: GraphKind, n: usize) -> bool {
        match kind {
            GraphKind::Cycle => self.store.catalog(n).is_some(),
            GraphKind::Path => self.paths.contains_key(&n),
        }
    }

    fn load(&mut self, kind: GraphKind, n: usize) -> Result<(), CliError> {
        if self.loaded(kind, n) {
            return Ok(());
        }
        let family = self.family(kind, n)?;
        if let Some((catalog, radii)) = self.read_cache(family)? {
            self.install(family, catalog, radii);
            return Ok(());
        }
        let catalog = match kind {
            GraphKind::Cycle => self.store.ensure_cycle(n)?.clone(),
            GraphKind::Path => enumerate_path(n, &self.limits)?.catalog,
        };
        let mut radii = None;
        if let Some(cache) = &self.cache {
            let r = compute_radii(&catalog)?;
            let records = catalog_records(&catalog, Some(&r));
            let path = cache.write(family, &records)?;
            eprintln!("cached {} structures in {}", records.len(), path.display());
            radii = Some(r);
        }
        self.install(family, catalog, radii);
        Ok(())
    }

    fn family(&self, kind: GraphKind, n: usize) -> Result<GraphFamily, CliError> {
        let (min, cap) = match kind {
            GraphKind::Cycle => (3, self.limits.max_cycle_n),
            GraphKind::Path => (2, self.limits.max_path_n),
        };
        if n < min {
            return Err(CliError::Usage(format!("a {} needs n >= {min}, got {n}", kind.name())));
        }
        if n > cap {
            return Err(CliError::CapExceeded(format!("n = {n} exceeds the {} cap {cap}", kind.name())));
        }
        Ok(GraphFamily::new(kind, n)?)
    }

    fn install(&mut self, family: GraphFamily, catalog: StructureCatalog, radii: Option<Vec<f64>>) {
        let n = family.n();
        match family.kind() {
            GraphKind::Cycle => {
                self.store.insert(catalog);
                if let Some(r) = radii {
                    self.store.insert_radii(n, r);
                }
            }
            GraphKind::Path => {
                let bound = 2 * n as u64;
                let info = PathInfo { bound, bound_hit: catalog.max_entry() >= bound };
                self.path_info.insert(n, info);
                self.paths.insert(n, (catalog, radii));
            }
        }
    }

    /// A validated cached catalog, or `None` (missing or unusable file).
    fn read_cache(&self, family: GraphFamily) -> Result<Option<Loaded>, CliError> {
        let Some(cache) = &self.cache else { return Ok(None) };
        let Some(mut records) = cache.read(family)? else { return Ok(None) };
        let path = cache.path(family.kind(), family.n());
        if let Err(why) = check_records(family, &records) {
            eprintln!("ignoring cache file {}: {why}", path.display());
            return Ok(None);
        }
        records.sort_by(|a, b| a.d.cmp(&b.d));
        let catalog = StructureCatalog::from_d_vectors(
            family,
            records.iter().map(|r| DVector::new(r.d.clone()).expect("checked")),
        )?;
        if catalog.len() != records.len() {
            eprintln!("ignoring cache file {}: duplicate records", path.display());
            return Ok(None);
        }
        let radii = records.iter().map(|r| r.mu1).collect::<Option<Vec<f64>>>();
        Ok(Some((catalog, radii)))
    }
}

fn check_records(family: GraphFamily, records: &[CatalogRecord]) -> Result<(), String> {
    use rayon::prelude::*;
    if family.kind() == GraphKind::Cycle {
        let want = binomial(2 * family.n() - 1, family.n() - 1);
        if records.len() as u128 != want {
            return Err(format!("{} records, expected {want}", records.len()));
        }
    }
    records.par_iter().try_for_each(|r| r.to_structure(family).map(|_| ()))
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
