//! Sweep configuration, read from JSON with a closed schema.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sparsenet_core::generators::{BaParams, GgpParams, DEFAULT_EPSILON, DEFAULT_TRUNCATION_TOLERANCE};
use sparsenet_core::stats::CoreConfig;

use crate::Error;

/// Largest replicate count the seed layout leaves room for.
pub const MAX_REPLICATES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ModelSpec {
    Ggp {
        sigma: f64,
        #[serde(default = "default_tau")]
        tau: f64,
        #[serde(default = "default_epsilon")]
        epsilon: f64,
        #[serde(default = "default_truncation_tolerance")]
        truncation_tolerance: f64,
    },
    Er {
        /// Edge probability; required with `fixed_p` calibration.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        p: Option<f64>,
        /// With `match_ggp_density`, match only the GGP series with this
        /// sigma instead of pooling all GGP series at the size.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        match_sigma: Option<f64>,
    },
    Ba {
        m: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        m0: Option<usize>,
    },
}

fn default_tau() -> f64 {
    1.0
}
fn default_epsilon() -> f64 {
    DEFAULT_EPSILON
}
fn default_truncation_tolerance() -> f64 {
    DEFAULT_TRUNCATION_TOLERANCE
}

impl ModelSpec {
    pub fn id(&self) -> &'static str {
        match self {
            ModelSpec::Ggp { .. } => "ggp",
            ModelSpec::Er { .. } => "er",
            ModelSpec::Ba { .. } => "ba",
        }
    }

    pub fn sigma(&self) -> Option<f64> {
        match *self {
            ModelSpec::Ggp { sigma, .. } => Some(sigma),
            _ => None,
        }
    }

    /// GGP parameters with the given mass scale.
    pub fn ggp_params(&self, alpha: f64) -> Option<GgpParams> {
        match *self {
            ModelSpec::Ggp {
                sigma,
                tau,
                epsilon,
                truncation_tolerance,
            } => Some(
                GgpParams::new(alpha, sigma, tau)
                    .with_epsilon(epsilon)
                    .with_truncation_tolerance(truncation_tolerance),
            ),
            _ => None,
        }
    }

    pub fn ba_params(&self, n: usize) -> Option<BaParams> {
        match *self {
            ModelSpec::Ba { m, m0 } => Some(BaParams {
                n,
                m,
                m0: m0.unwrap_or(m),
            }),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErCalibration {
    FixedP,
    MatchGgpDensity,
}

/// Core/periphery optimizer settings; the seed comes from each replicate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoreSettings {
    #[serde(default = "default_restarts")]
    pub restarts: usize,
    #[serde(default = "default_moves_per_node")]
    pub moves_per_node: usize,
}

fn default_restarts() -> usize {
    10
}
fn default_moves_per_node() -> usize {
    50
}

impl Default for CoreSettings {
    fn default() -> Self {
        Self {
            restarts: default_restarts(),
            moves_per_node: default_moves_per_node(),
        }
    }
}

impl CoreSettings {
    pub fn to_core_config(self) -> CoreConfig {
        CoreConfig {
            restarts: self.restarts,
            moves_per_node: self.moves_per_node,
            ..CoreConfig::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub models: Vec<ModelSpec>,
    pub size_grid: Vec<usize>,
    pub replicates: usize,
    pub master_seed: u64,
    #[serde(default = "default_er_calibration")]
    pub er_calibration: ErCalibration,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    /// Relative width of a GGP size bin: a realized node count `n` belongs
    /// to target `s` when `|n - s| <= binning / 2 * s`.
    #[serde(default = "default_binning")]
    pub binning: f64,
    #[serde(default)]
    pub core: CoreSettings,
}

fn default_er_calibration() -> ErCalibration {
    ErCalibration::MatchGgpDensity
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("out")
}

fn default_binning() -> f64 {
    0.5
}

impl Default for ExperimentConfig {
    /// GGP at sigma 0, 0.5 and 0.8 (tau 1), density-matched ER and BA with
    /// m = 2, sizes 200 to 1600, 20 replicates.
    fn default() -> Self {
        let ggp = |sigma| ModelSpec::Ggp {
            sigma,
            tau: 1.0,
            epsilon: DEFAULT_EPSILON,
            truncation_tolerance: DEFAULT_TRUNCATION_TOLERANCE,
        };
        Self {
            models: vec![
                ggp(0.0),
                ggp(0.5),
                ggp(0.8),
                ModelSpec::Er {
                    p: None,
                    match_sigma: None,
                },
                ModelSpec::Ba { m: 2, m0: None },
            ],
            size_grid: vec![200, 400, 800, 1600],
            replicates: 20,
            master_seed: 20_160_101,
            er_calibration: default_er_calibration(),
            output_dir: default_output_dir(),
            binning: default_binning(),
            core: CoreSettings::default(),
        }
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let config: Self = serde_json::from_str(text).map_err(|e| Error::Config {
            path: "$".into(),
            msg: e.to_string(),
        })?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<(), Error> {
        let fail = |path: String, msg: &str| {
            Err(Error::Config {
                path,
                msg: msg.to_string(),
            })
        };
        if self.models.is_empty() {
            return fail("models".into(), "at least one model is required");
        }
        if self.models.len() > u16::MAX as usize {
            return fail("models".into(), "too many models");
        }
        if self.size_grid.is_empty() {
            return fail("size_grid".into(), "at least one size is required");
        }
        if self.size_grid.len() > u16::MAX as usize {
            return fail("size_grid".into(), "too many sizes");
        }
        if self.size_grid.windows(2).any(|w| w[0] >= w[1]) {
            return fail("size_grid".into(), "sizes must be strictly ascending");
        }
        if self.size_grid[0] < 2 {
            return fail("size_grid[0]".into(), "sizes must be at least 2");
        }
        if self.replicates == 0 || self.replicates > MAX_REPLICATES {
            return fail("replicates".into(), "must be between 1 and 2^20");
        }
        if !(self.binning > 0.0 && self.binning.is_finite()) {
            return fail("binning".into(), "must be a positive relative width");
        }
        if self.core.restarts == 0 || self.core.moves_per_node == 0 {
            return fail("core".into(), "restarts and moves_per_node must be positive");
        }
        let has_ggp = self.models.iter().any(|m| matches!(m, ModelSpec::Ggp { .. }));
        for (i, model) in self.models.iter().enumerate() {
            let at = |field: &str| format!("models[{i}].{field}");
            match *model {
                ModelSpec::Ggp { .. } => {
                    let params = model.ggp_params(1.0).expect("ggp");
                    if let Err(e) = params.validate() {
                        return fail(at("sigma|tau|epsilon"), &e.to_string());
                    }
                }
                ModelSpec::Er { p, match_sigma } => match self.er_calibration {
                    ErCalibration::FixedP => match p {
                        None => return fail(at("p"), "required with fixed_p calibration"),
                        Some(p) if !(0.0..=1.0).contains(&p) => return fail(at("p"), "must lie in [0, 1]"),
                        _ => {}
                    },
                    ErCalibration::MatchGgpDensity => {
                        if p.is_some() {
                            return fail(at("p"), "not allowed with match_ggp_density");
                        }
                        if !has_ggp {
                            return fail(at("kind"), "match_ggp_density needs a ggp model");
                        }
                        if let Some(s) = match_sigma {
                            if !self.models.iter().any(|m| m.sigma() == Some(s)) {
                                return fail(at("match_sigma"), "no ggp model has this sigma");
                            }
                        }
                    }
                },
                ModelSpec::Ba { .. } => {
                    for &n in &self.size_grid {
                        if let Err(e) = model.ba_params(n).expect("ba").validate() {
                            return fail(at("m"), &e.to_string());
                        }
                    }
                }
            }
        }
        let mut keys: Vec<(&str, Option<u64>)> = self
            .models
            .iter()
            .map(|m| (m.id(), m.sigma().map(f64::to_bits)))
            .collect();
        keys.sort();
        if keys.windows(2).any(|w| w[0] == w[1]) {
            return fail("models".into(), "every (model, sigma) series must be unique");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_round_trips_and_validates() {
        let c = ExperimentConfig::default();
        c.validate().unwrap();
        assert_eq!(ExperimentConfig::from_json(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let mut v: serde_json::Value = serde_json::from_str(&ExperimentConfig::default().to_json()).unwrap();
        v["replicats"] = 3.into();
        assert!(ExperimentConfig::from_json(&v.to_string()).is_err());

        let mut v: serde_json::Value = serde_json::from_str(&ExperimentConfig::default().to_json()).unwrap();
        v["models"][0]["sigmaa"] = 0.5.into();
        assert!(ExperimentConfig::from_json(&v.to_string()).is_err());
    }

    #[test]
    fn minimal_model_entries() {
        let text = r#"{
            "models": [{"kind": "ggp", "sigma": 0.5}, {"kind": "er"}, {"kind": "ba", "m": 2}],
            "size_grid": [50, 100],
            "replicates": 2,
            "master_seed": 1,
            "er_calibration": "match_ggp_density",
            "output_dir": "x",
            "binning": 0.5
        }"#;
        let c = ExperimentConfig::from_json(text).unwrap();
        assert_eq!(c.models[0].ggp_params(3.0).unwrap().tau, 1.0);
        assert_eq!(c.core, CoreSettings::default());
    }

    fn field_path(c: &ExperimentConfig) -> String {
        match c.validate() {
            Err(Error::Config { path, .. }) => path,
            other => panic!("expected config error, got {other:?}"),
        }
    }

    #[test]
    fn invalid_fields_are_reported_by_path() {
        let c = ExperimentConfig {
            size_grid: vec![400, 200],
            ..ExperimentConfig::default()
        };
        assert_eq!(field_path(&c), "size_grid");

        let c = ExperimentConfig {
            replicates: 0,
            ..ExperimentConfig::default()
        };
        assert_eq!(field_path(&c), "replicates");

        let c = ExperimentConfig {
            er_calibration: ErCalibration::FixedP,
            ..ExperimentConfig::default()
        };
        assert_eq!(field_path(&c), "models[3].p");

        let mut c = ExperimentConfig::default();
        c.models[4] = ModelSpec::Ba { m: 3, m0: Some(2) };
        assert_eq!(field_path(&c), "models[4].m");

        let mut c = ExperimentConfig::default();
        c.models.push(c.models[1].clone());
        assert_eq!(field_path(&c), "models");
    }
}
