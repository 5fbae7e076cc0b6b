//! Run configuration: a single JSON document, optionally patched by
//! `--set dot.path=value` overrides before validation.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::Value;

use whichpath::experiment::{ExperimentConfig, ExperimentParams};

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub experiment: ExperimentBlock,
    #[serde(default)]
    pub detector: Option<DetectorBlock>,
    #[serde(default)]
    pub sweep: Option<SweepBlock>,
    #[serde(default)]
    pub mc: Option<McBlock>,
    #[serde(default)]
    pub output: Option<OutputBlock>,
    /// Free-form documentation slot, accepted and ignored.
    #[serde(default)]
    #[allow(dead_code)]
    pub note: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentBlock {
    /// Slit spacing, cm.
    pub d: f64,
    /// Emitter-to-screen distance, cm.
    #[serde(rename = "L")]
    pub l: f64,
    /// Slit-plane position along L, in (0, 1).
    #[serde(default = "default_slit_fraction")]
    pub slit_fraction: f64,
    /// Field-detector distance in the slit plane, cm.
    #[serde(rename = "R")]
    pub r: f64,
    /// Particle speed, cm/s.
    pub v: f64,
    /// Particle mass, g.
    pub m: f64,
    /// Charge in units of |e| for point evaluations.
    #[serde(rename = "Z", default)]
    pub z: f64,
    /// Optional override of log(pi L / lambda).
    #[serde(default)]
    pub log_term: Option<f64>,
    /// Free-form documentation slot, accepted and ignored.
    #[serde(default)]
    #[allow(dead_code)]
    pub note: Option<String>,
}

fn default_slit_fraction() -> f64 {
    0.5
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BrDetectorBlock {
    /// Cubic averaging volume edge, cm.
    pub xi: f64,
    /// Measurement time, s.
    #[serde(rename = "T_meas")]
    pub t_meas: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GravityDetectorBlock {
    /// Equilibrium mirror separation, cm.
    #[serde(rename = "S")]
    pub s: f64,
    /// Oscillator frequency, rad/s.
    pub omega: f64,
    /// Equilibrium midpoint, cm.
    #[serde(default)]
    pub x0: f64,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum DetectorBlock {
    BohrRosenfeld(BrDetectorBlock),
    Gravity(GravityDetectorBlock),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepBlock {
    pub z_min: f64,
    pub z_max: f64,
    pub n_points: usize,
    #[serde(default)]
    pub log_spaced: bool,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct McBlock {
    pub n_particles: u64,
    pub seed: u64,
    pub bins: usize,
    /// Screen halfwidth, cm.
    pub halfwidth: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputBlock {
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub path: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl RunConfig {
    pub fn experiment_config(&self) -> Result<ExperimentConfig, CliError> {
        let b = &self.experiment;
        let mut p = ExperimentParams::new(b.d, b.l, b.r, b.v, b.m);
        p.slit_fraction = b.slit_fraction;
        p.charge_number = b.z;
        p.log_term_override = b.log_term;
        ExperimentConfig::new(p).map_err(CliError::from)
    }

    pub fn sweep_grid(&self, command: &str) -> Result<Vec<f64>, CliError> {
        let sweep = self.sweep.as_ref().ok_or_else(|| {
            CliError::Config(format!("`{command}` needs a `sweep` block (z_min, z_max, n_points)"))
        })?;
        if !(sweep.z_min >= 0.0 && sweep.z_max >= sweep.z_min) {
            return Err(CliError::Config(format!(
                "sweep range must satisfy 0 <= z_min <= z_max, got [{}, {}]",
                sweep.z_min, sweep.z_max
            )));
        }
        if sweep.n_points < 2 {
            return Err(CliError::Config(format!(
                "sweep needs at least 2 points, got {}",
                sweep.n_points
            )));
        }
        if sweep.log_spaced && sweep.z_min <= 0.0 {
            return Err(CliError::Config("log-spaced sweep requires z_min > 0".into()));
        }
        let n = sweep.n_points;
        let grid = (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                if sweep.log_spaced {
                    sweep.z_min * (sweep.z_max / sweep.z_min).powf(t)
                } else {
                    sweep.z_min + (sweep.z_max - sweep.z_min) * t
                }
            })
            .collect();
        Ok(grid)
    }
}

/// Read, patch, and validate a run configuration.
pub fn load(path: &Path, overrides: &[String]) -> Result<RunConfig, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    if overrides.is_empty() {
        // Direct parse keeps line/column positions in error messages.
        return serde_json::from_str(&text)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())));
    }
    let mut value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    for spec in overrides {
        apply_override(&mut value, spec)?;
    }
    serde_json::from_value(value).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

fn apply_override(root: &mut Value, spec: &str) -> Result<(), CliError> {
    let (path, raw) = spec
        .split_once('=')
        .ok_or_else(|| CliError::Config(format!("override `{spec}` must look like KEY=VALUE")))?;
    let new_value: Value =
        serde_json::from_str(raw).unwrap_or_else(|_| Value::String(raw.to_string()));
    let segments: Vec<&str> = path.split('.').collect();
    if segments.iter().any(|s| s.is_empty()) {
        return Err(CliError::Config(format!("override key `{path}` has an empty segment")));
    }
    let (last, parents) = segments.split_last().expect("nonempty after split");
    let mut cursor = root;
    for (i, seg) in parents.iter().enumerate() {
        let obj = cursor.as_object_mut().ok_or_else(|| {
            CliError::Config(format!(
                "override key `{path}`: `{}` is not an object",
                segments[..=i].join(".")
            ))
        })?;
        cursor = obj
            .entry(seg.to_string())
            .or_insert_with(|| Value::Object(serde_json::Map::new()));
    }
    let obj = cursor
        .as_object_mut()
        .ok_or_else(|| CliError::Config(format!("override key `{path}` does not address an object")))?;
    obj.insert((*last).to_string(), new_value);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn override_parses_and_creates_paths() {
        let mut v: Value = serde_json::from_str(r#"{"experiment": {"d": 1.0}}"#).unwrap();
        apply_override(&mut v, "experiment.d=2e-4").unwrap();
        apply_override(&mut v, "experiment.log_term=20").unwrap();
        apply_override(&mut v, "output.format=json").unwrap();
        assert_eq!(v["experiment"]["d"], Value::from(2e-4));
        assert_eq!(v["experiment"]["log_term"], Value::from(20));
        assert_eq!(v["output"]["format"], Value::from("json"));
    }

    #[test]
    fn override_rejects_malformed() {
        let mut v: Value = serde_json::from_str("{}").unwrap();
        assert!(apply_override(&mut v, "no-equals").is_err());
        assert!(apply_override(&mut v, "a..b=1").is_err());
        apply_override(&mut v, "x=1").unwrap();
        assert!(apply_override(&mut v, "x.y=1").is_err());
    }
}
