use std::path::Path;

use anyhow::{anyhow, Context, Result};
use serde::de::DeserializeOwned;

use rootgraded::chevalley::ChevalleyAlgebra;
use rootgraded::dialg::{Dialgebra, DialgebraJson};
use rootgraded::leibniz::LeibnizJson;
use rootgraded::report::RunReport;
use rootgraded::rootsys::RootSystem;

/// Reads and parses a JSON file, recording its digest in the report. Parse
/// errors carry the line, column and offending field.
pub fn read_json<T: DeserializeOwned>(path: &Path, report: &mut RunReport) -> Result<T> {
    let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let value = serde_json::from_slice(&bytes).with_context(|| format!("{}: malformed JSON", path.display()))?;
    let name = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
    report.add_input(name, &bytes);
    Ok(value)
}

pub fn dialgebra(path: &Path, report: &mut RunReport) -> Result<Dialgebra> {
    let json: DialgebraJson = read_json(path, report)?;
    Dialgebra::from_json(&json).map_err(|e| anyhow!("{}: {e}", path.display()))
}

pub fn leibniz_json(path: &Path, report: &mut RunReport) -> Result<LeibnizJson> {
    let json: LeibnizJson = read_json(path, report)?;
    if json.basis.len() != json.dim {
        return Err(anyhow!(
            "{}: basis has {} names for dimension {}",
            path.display(),
            json.basis.len(),
            json.dim
        ));
    }
    Ok(json)
}

pub fn root_system(label: &str) -> Result<RootSystem> {
    RootSystem::from_label(label).map_err(|e| anyhow!("root system {label:?}: {e}"))
}

pub fn chevalley(label: &str) -> Result<ChevalleyAlgebra> {
    ChevalleyAlgebra::build(&root_system(label)?).map_err(|e| anyhow!("g({label}): {e}"))
}

pub fn write_json(path: &Path, value: &impl serde::Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}
