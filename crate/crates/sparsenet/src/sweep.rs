//! Statistics-versus-size sweeps over GGP, ER and BA graphs.
//!
//! Rows are produced in `(model, size, replicate)` order, the order of
//! `models` and `size_grid` in the config. Each replicate's generator seed
//! is derived from the master seed and the row's position, so reruns are
//! byte-identical and any subset of rows can be recomputed on its own.
//!
//! Groups are computed in dependency order (density-matched ER needs the
//! GGP edge counts at the same size) and emitted in row order as soon as
//! every preceding group is done.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;
use sparsenet_core::generators::{generate_ba, generate_er, generate_ggp, ErParams, GenerateError};
use sparsenet_core::{Graph, Seed};

use crate::calibrate::alpha_for_nodes;
use crate::config::{ErCalibration, ExperimentConfig, ModelSpec};
use crate::row::{core_seed, ExperimentRow, GraphStatistics, RowKey, CSV_HEADER};
use crate::Error;

/// Draws per GGP replicate before giving up on landing in the size bin.
pub const MAX_GGP_ATTEMPTS: u64 = 256;

pub const RESULTS_FILE: &str = "results.csv";
pub const MANIFEST_FILE: &str = "manifest.json";

/// Position of a replicate draw in the sweep, packed as
/// `model:16 | size:16 | replicate:20 | attempt:12` bits.
pub fn seed_counter(model: usize, size: usize, replicate: usize, attempt: u64) -> u64 {
    debug_assert!(model < 1 << 16 && size < 1 << 16 && replicate < 1 << 20 && attempt < 1 << 12);
    ((model as u64) << 48) | ((size as u64) << 32) | ((replicate as u64) << 12) | attempt
}

pub fn replicate_seed(master: Seed, model: usize, size: usize, replicate: usize, attempt: u64) -> Seed {
    master.child(seed_counter(model, size, replicate, attempt))
}

/// Parameters resolved while sweeping, recorded next to the CSV.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResolvedGroup {
    pub model: String,
    pub sigma: Option<f64>,
    pub n_target: usize,
    /// GGP mass scale aimed at `n_target`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    /// ER edge probability.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutput {
    pub rows: Vec<ExperimentRow>,
    pub groups: Vec<ResolvedGroup>,
}

/// Draws `(replicate, attempt)`; `None` when a GGP draw misses its size bin.
type Generator = dyn Fn(usize, u64) -> Result<Option<(Graph, Seed)>, Error> + Sync;

/// Runs the sweep in memory.
pub fn run_sweep(config: &ExperimentConfig) -> Result<SweepOutput, Error> {
    run_sweep_with(config, &BTreeMap::new(), |_| Ok(()))
}

/// Runs the sweep, reusing rows from `existing` (matched by key) and
/// handing each row to `sink` in final order as soon as it is available.
pub fn run_sweep_with(
    config: &ExperimentConfig,
    existing: &BTreeMap<RowKey, ExperimentRow>,
    mut sink: impl FnMut(&ExperimentRow) -> Result<(), Error>,
) -> Result<SweepOutput, Error> {
    config.validate()?;
    let sizes = config.size_grid.len();
    let group_index = |model: usize, size: usize| model * sizes + size;
    let mut done: Vec<Option<(Vec<ExperimentRow>, ResolvedGroup)>> = vec![None; config.models.len() * sizes];

    let deferred =
        |m: &ModelSpec| matches!(m, ModelSpec::Er { .. }) && config.er_calibration == ErCalibration::MatchGgpDensity;
    let order: Vec<(usize, usize)> = [false, true]
        .into_iter()
        .flat_map(|late| {
            config
                .models
                .iter()
                .enumerate()
                .filter(move |(_, m)| deferred(m) == late)
                .flat_map(move |(mi, _)| (0..sizes).map(move |si| (mi, si)))
        })
        .collect();

    let mut cursor = 0;
    for (mi, si) in order {
        let group = run_group(config, mi, si, &done, existing)?;
        done[group_index(mi, si)] = Some(group);
        while cursor < done.len() {
            match &done[cursor] {
                Some((rows, _)) => {
                    for row in rows {
                        sink(row)?;
                    }
                    cursor += 1;
                }
                None => break,
            }
        }
    }

    let mut rows = Vec::new();
    let mut groups = Vec::new();
    for (r, g) in done.into_iter().map(|g| g.expect("every group computed")) {
        rows.extend(r);
        groups.push(g);
    }
    Ok(SweepOutput { rows, groups })
}

fn run_group(
    config: &ExperimentConfig,
    mi: usize,
    si: usize,
    done: &[Option<(Vec<ExperimentRow>, ResolvedGroup)>],
    existing: &BTreeMap<RowKey, ExperimentRow>,
) -> Result<(Vec<ExperimentRow>, ResolvedGroup), Error> {
    let model = &config.models[mi];
    let n_target = config.size_grid[si];
    let master = Seed(config.master_seed);

    let mut resolved = ResolvedGroup {
        model: model.id().to_string(),
        sigma: model.sigma(),
        n_target,
        alpha: None,
        p: None,
    };
    let generator: Box<Generator> = match *model {
        ModelSpec::Ggp { .. } => {
            let template = model.ggp_params(1.0).expect("ggp");
            let alpha = alpha_for_nodes(&template, n_target as f64);
            resolved.alpha = Some(alpha);
            let params = model.ggp_params(alpha).expect("ggp");
            let half_width = config.binning / 2.0 * n_target as f64;
            Box::new(move |rep, attempt| {
                let seed = replicate_seed(master, mi, si, rep, attempt);
                match generate_ggp(params, seed) {
                    Ok(g) if (g.node_count() as f64 - n_target as f64).abs() <= half_width => Ok(Some((g, seed))),
                    Ok(_) | Err(GenerateError::DegenerateDraw { .. }) => Ok(None),
                    Err(e) => Err(Error::generation("ggp", seed, e)),
                }
            })
        }
        ModelSpec::Er { p, match_sigma } => {
            let p = match config.er_calibration {
                ErCalibration::FixedP => p.expect("validated"),
                ErCalibration::MatchGgpDensity => matched_probability(config, si, match_sigma, done),
            };
            resolved.p = Some(p);
            Box::new(move |rep, _| {
                let seed = replicate_seed(master, mi, si, rep, 0);
                generate_er(ErParams { n: n_target, p }, seed)
                    .map(|g| Some((g, seed)))
                    .map_err(|e| Error::generation("er", seed, e))
            })
        }
        ModelSpec::Ba { .. } => {
            let params = model.ba_params(n_target).expect("ba");
            Box::new(move |rep, _| {
                let seed = replicate_seed(master, mi, si, rep, 0);
                generate_ba(params, seed)
                    .map(|g| Some((g, seed)))
                    .map_err(|e| Error::generation("ba", seed, e))
            })
        }
    };

    let core = config.core.to_core_config();
    let rows = (0..config.replicates)
        .into_par_iter()
        .map(|rep| {
            let key: RowKey = (resolved.model.clone(), resolved.sigma.map(f64::to_bits), n_target, rep);
            if let Some(row) = existing.get(&key) {
                return Ok(row.clone());
            }
            let mut drawn = None;
            for attempt in 0..MAX_GGP_ATTEMPTS {
                if let Some(found) = generator(rep, attempt)? {
                    drawn = Some(found);
                    break;
                }
            }
            let (graph, seed) = drawn.ok_or_else(|| Error::GenerationFailed {
                model: resolved.model.clone(),
                seed: replicate_seed(master, mi, si, rep, 0).value(),
                msg: format!("no draw landed in the size bin after {MAX_GGP_ATTEMPTS} attempts"),
            })?;
            let stats = GraphStatistics::compute(&graph, &core.with_seed(core_seed(seed))).map_err(|e| {
                Error::GenerationFailed {
                    model: resolved.model.clone(),
                    seed: seed.value(),
                    msg: e.to_string(),
                }
            })?;
            Ok(ExperimentRow {
                model: resolved.model.clone(),
                sigma: resolved.sigma,
                n_target,
                n_realized: graph.node_count(),
                edges: graph.edge_count(),
                replicate: rep,
                seed: seed.value(),
                components: stats.components,
                clustering: stats.clustering,
                assortativity: stats.assortativity,
                core_share: stats.core_share,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok((rows, resolved))
}

/// `p` giving the mean GGP edge count at this size (pooled over all GGP
/// series, or only the one with `match_sigma`) in expectation.
fn matched_probability(
    config: &ExperimentConfig,
    si: usize,
    match_sigma: Option<f64>,
    done: &[Option<(Vec<ExperimentRow>, ResolvedGroup)>],
) -> f64 {
    let sizes = config.size_grid.len();
    let n = config.size_grid[si] as f64;
    let edges: Vec<f64> = config
        .models
        .iter()
        .enumerate()
        .filter(|(_, m)| match (m.sigma(), match_sigma) {
            (Some(s), Some(want)) => s == want,
            (Some(_), None) => true,
            (None, _) => false,
        })
        .flat_map(|(mi, _)| {
            done[mi * sizes + si]
                .as_ref()
                .expect("ggp groups run first")
                .0
                .iter()
                .map(|r| r.edges as f64)
        })
        .collect();
    let mean = edges.iter().sum::<f64>() / edges.len() as f64;
    (mean / (n * (n - 1.0) / 2.0)).clamp(0.0, 1.0)
}

/// Reads previously written rows for resuming.
pub fn load_existing(path: &Path) -> Result<BTreeMap<RowKey, ExperimentRow>, Error> {
    if !path.exists() {
        return Ok(BTreeMap::new());
    }
    let text = std::fs::read_to_string(path)?;
    Ok(crate::row::parse_csv(&text)?
        .into_iter()
        .map(|r| (r.key(), r))
        .collect())
}

/// Runs the sweep and writes `results.csv` (row by row, flushed as rows
/// become final) and `manifest.json` into `output_dir`. With `resume`,
/// rows already present in `results.csv` are reused instead of recomputed.
pub fn run_sweep_to_dir(config: &ExperimentConfig, resume: bool) -> Result<SweepOutput, Error> {
    config.validate()?;
    let dir = &config.output_dir;
    std::fs::create_dir_all(dir)?;
    let results: PathBuf = dir.join(RESULTS_FILE);
    let existing = if resume {
        load_existing(&results)?
    } else {
        BTreeMap::new()
    };
    let mut out = BufWriter::new(File::create(&results)?);
    writeln!(out, "{CSV_HEADER}")?;
    out.flush()?;
    let output = run_sweep_with(config, &existing, |row| {
        writeln!(out, "{}", row.to_csv_line())?;
        out.flush()?;
        Ok(())
    })?;
    drop(out);

    #[derive(Serialize)]
    struct Manifest<'a> {
        config: &'a ExperimentConfig,
        groups: &'a [ResolvedGroup],
    }
    let manifest = Manifest {
        config,
        groups: &output.groups,
    };
    let mut text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    text.push('\n');
    std::fs::write(dir.join(MANIFEST_FILE), text)?;
    Ok(output)
}
