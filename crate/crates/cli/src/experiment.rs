//! Random-instance harness: seeded edge-colored instances with disjoint
//! color classes, and rainbow-triangle discovery rates over many trials.
//!
//! Results are an empirical illustration on random instances only; they say
//! nothing about extremal colorings.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use rainbow_bounds::{EdgeColoredGraph, Error, Result};

/// Label stamped on every report.
pub const SCOPE_LABEL: &str = "empirical — random instances only";

/// Instance shape: `num_colors` pairwise-disjoint color classes of exactly
/// `class_size` edges each on `n` vertices.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ExperimentConfig {
    pub n: usize,
    pub num_colors: usize,
    pub class_size: usize,
    pub seed: u64,
    pub trials: usize,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.num_colors == 0 || self.class_size == 0 {
            return Err(Error::Domain(
                "n, num_colors and class_size must all be positive".into(),
            ));
        }
        let pairs = self.n as u64 * (self.n as u64 - 1) / 2;
        let want = self.num_colors as u64 * self.class_size as u64;
        if want > pairs {
            return Err(Error::Domain(format!(
                "{} classes of {} edges need {want} distinct edges, but K_{} has only {pairs}",
                self.num_colors, self.class_size, self.n
            )));
        }
        Ok(())
    }
}

/// Deterministic instance for `(cfg.seed, trial)`.
///
/// The generator is ChaCha8 keyed by `seed` with the trial index as the
/// stream, so trials are independent and reproducible. The colored edges are
/// the first `num_colors * class_size` entries of a partial Fisher-Yates
/// shuffle of the lexicographic edge list of `K_n`, colored in blocks of
/// `class_size`: classes are disjoint and exactly sized by construction.
pub fn generate_instance(cfg: &ExperimentConfig, trial: usize) -> Result<EdgeColoredGraph> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial as u64);

    let mut pool: Vec<(u32, u32)> = (0..cfg.n as u32)
        .flat_map(|u| (u + 1..cfg.n as u32).map(move |v| (u, v)))
        .collect();
    let want = cfg.num_colors * cfg.class_size;
    for i in 0..want {
        let j = rng.random_range(i..pool.len());
        pool.swap(i, j);
    }
    EdgeColoredGraph::from_colored_edges(
        cfg.n,
        pool[..want]
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (u, v, (i / cfg.class_size) as u32)),
    )
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TrialOutcome {
    pub trial: usize,
    pub found: bool,
    pub witness: Option<(u32, u32, u32)>,
}

/// Aggregate over all trials of one configuration.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    /// Always [`SCOPE_LABEL`].
    pub scope: &'static str,
    pub trials: Vec<TrialOutcome>,
    pub found: usize,
    /// `found / trials`; `None` (JSON null) when there were no trials.
    pub rate: Option<f64>,
    /// Not serialized: timing would break byte-identical output.
    #[serde(skip)]
    pub wall_time: Duration,
}

/// Generates and scans one instance per trial.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let start = Instant::now();
    let mut trials = Vec::with_capacity(cfg.trials);
    let mut found = 0usize;
    for trial in 0..cfg.trials {
        let instance = generate_instance(cfg, trial)?;
        let witness = instance.find_rainbow_triangle();
        if witness.is_some() {
            found += 1;
        }
        trials.push(TrialOutcome {
            trial,
            found: witness.is_some(),
            witness,
        });
    }
    let rate = (cfg.trials > 0).then(|| found as f64 / cfg.trials as f64);
    Ok(ExperimentReport {
        config: *cfg,
        scope: SCOPE_LABEL,
        trials,
        found,
        rate,
        wall_time: start.elapsed(),
    })
}
