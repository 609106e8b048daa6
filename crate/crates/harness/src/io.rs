//! Instance files: UTF-8 JSON with a `"version": 1` field. Matrices are
//! stored as `{"dim": k, "entries": [[re, im], ...]}` in row-major order,
//! and floats use the shortest representation that round-trips exactly.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};
use crate::instance::ModuleInstance;

pub const FORMAT_VERSION: u64 = 1;

#[derive(Serialize, Deserialize)]
struct InstanceFile {
    version: u64,
    instance: ModuleInstance,
}

pub fn instance_to_string(instance: &ModuleInstance) -> String {
    let file = InstanceFile {
        version: FORMAT_VERSION,
        instance: instance.clone(),
    };
    serde_json::to_string_pretty(&file).expect("instances always serialize")
}

pub fn instance_from_str(text: &str) -> Result<ModuleInstance> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    match value.get("version") {
        Some(serde_json::Value::Number(v)) if v.as_u64() == Some(FORMAT_VERSION) => {}
        Some(other) => {
            return Err(HarnessError::VersionMismatch {
                found: other.to_string(),
            })
        }
        None => {
            return Err(HarnessError::VersionMismatch {
                found: "missing".into(),
            })
        }
    }
    let file: InstanceFile = serde_json::from_str(text)?;
    file.instance.validate()?;
    Ok(file.instance)
}

pub fn save_instance(path: &Path, instance: &ModuleInstance) -> Result<()> {
    let mut text = instance_to_string(instance);
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

pub fn load_instance(path: &Path) -> Result<ModuleInstance> {
    instance_from_str(&std::fs::read_to_string(path)?)
}
