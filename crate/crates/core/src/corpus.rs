//! Regression cases: one TOML file per hyperplane with its expected
//! verdict.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::hyperplane::{analyze, AnalysisOptions, AnalysisReport, Hyperplane};
use crate::parse::parse_field;

#[derive(Debug, Clone, Deserialize)]
pub struct CorpusCase {
    #[serde(skip)]
    pub path: PathBuf,
    pub field: String,
    pub a: String,
    #[serde(rename = "F")]
    pub f: String,
    pub expected_verdict: String,
    #[serde(default)]
    pub notes: String,
}

impl CorpusCase {
    pub fn name(&self) -> String {
        self.path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    }

    pub fn run(&self, opts: AnalysisOptions) -> Result<AnalysisReport> {
        let k = parse_field(&self.field)?;
        analyze(&Hyperplane::parse(&self.a, &self.f, &k)?, opts)
    }
}

pub fn load_case(path: &Path) -> Result<CorpusCase> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    let mut case: CorpusCase =
        toml::from_str(&text).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
    case.path = path.to_path_buf();
    Ok(case)
}

/// All `*.toml` cases in `dir`, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<CorpusCase>> {
    let entries = std::fs::read_dir(dir)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    paths.sort();
    paths.iter().map(|p| load_case(p)).collect()
}
