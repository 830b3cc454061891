//! On-disk cache of cohomology results, keyed by a caller-chosen string plus the crate version.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cohomology::{BlockDims, CohomologyRepr, CohomologyResult};
use crate::realize::FamilyParams;
use crate::supercore::{parse_rational, SymbolSystem, Weight};

#[derive(Clone, Debug)]
pub struct ResultCache {
    dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    version: String,
    key: String,
    system: String,
    result: CohomologyRepr,
}

impl ResultCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        ResultCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        let safe: String = key.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' }).collect();
        self.dir.join(format!("{safe}-v{}.json", env!("CARGO_PKG_VERSION")))
    }

    /// A stored result, if present, readable, and expressed in `system`.
    pub fn load(&self, key: &str, system: &Arc<SymbolSystem>) -> Option<CohomologyResult> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let e: Entry = serde_json::from_str(&text).ok()?;
        if e.version != env!("CARGO_PKG_VERSION") || e.key != key || e.system != system.name || e.result.symbols != system.symbols {
            return None;
        }
        let r = e.result;
        let blocks = r
            .blocks
            .iter()
            .map(|b| {
                let coeffs = b.coords.iter().map(|c| parse_rational(c)).collect::<Option<Vec<_>>>()?;
                Some(BlockDims { weight: Weight::new(system.clone(), coeffs), even: b.even, odd: b.odd })
            })
            .collect::<Option<Vec<_>>>()?;
        Some(CohomologyResult {
            params: FamilyParams { family: r.family, m: r.params.m, n: r.params.n },
            degree: r.degree,
            route: r.route,
            coefficients: r.coefficients,
            symbols: r.symbols,
            total: blocks.iter().map(|b| b.even + b.odd).sum(),
            blocks,
        })
    }

    /// Best effort: failures to write leave the cache cold, never break a computation.
    pub fn store(&self, key: &str, system: &Arc<SymbolSystem>, result: &CohomologyResult) {
        let system = system.name.clone();
        let e = Entry { version: env!("CARGO_PKG_VERSION").into(), key: key.into(), system, result: result.to_repr() };
        if fs::create_dir_all(&self.dir).is_ok() {
            if let Ok(text) = serde_json::to_string_pretty(&e) {
                let _ = fs::write(self.path(key), text);
            }
        }
    }
}
