//! Batched ratio experiments over generated corpora.
//!
//! Every trial is a pure function of (family, n, trial seed), so trials run
//! in any order — in parallel when the `parallel` feature is on — and the
//! output is assembled single-threaded in (n, trial) order either way. CSV
//! rendering uses shortest round-trip float formatting with LF line endings,
//! suitable for byte-exact golden files.

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{generate, trial_seed, GeneratedInstance, InstanceFamily};
use crate::error::Error;
use crate::oracle::EXACT_TSP_LIMIT;
use crate::pipeline::{solve_problem_a, SolveOptions};

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
    pub family: InstanceFamily,
    /// Compute the exact optimum and ratio per trial (limits n to 16).
    pub oracle: bool,
}

impl ExperimentConfig {
    fn validate(&self) -> Result<(), Error> {
        if self.n_min < 3 {
            return Err(Error::BadConfig(format!(
                "n_min must be at least 3, got {}",
                self.n_min
            )));
        }
        if self.n_min > self.n_max {
            return Err(Error::BadConfig(format!(
                "n_min {} exceeds n_max {}",
                self.n_min, self.n_max
            )));
        }
        if self.trials == 0 {
            return Err(Error::BadConfig("trials must be positive".into()));
        }
        if self.oracle && self.n_max > EXACT_TSP_LIMIT {
            return Err(Error::BadConfig(format!(
                "oracle ratios need n_max <= {EXACT_TSP_LIMIT}, got {}",
                self.n_max
            )));
        }
        if matches!(self.family, InstanceFamily::RandomGraph) {
            return Err(Error::BadConfig(
                "ratio experiments run on complete metric families".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialRow {
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    pub weight: f64,
    pub oracle_weight: Option<f64>,
    pub ratio: Option<f64>,
    pub mst_ms: f64,
    pub matching_ms: f64,
    pub euler_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentSummary {
    pub max_ratio: Option<f64>,
    pub mean_ratio: Option<f64>,
    pub count: usize,
}

#[derive(Debug, Clone)]
pub struct ExperimentOutput {
    pub rows: Vec<TrialRow>,
    pub summary: ExperimentSummary,
}

fn run_trial(config: &ExperimentConfig, n: usize, trial: usize) -> Result<TrialRow, Error> {
    let seed = trial_seed(config.seed, n, trial);
    let instance = match generate(config.family, n, seed)? {
        GeneratedInstance::Metric(m) => m,
        GeneratedInstance::General(_) => {
            return Err(Error::BadConfig("experiment family must be metric".into()))
        }
    };
    let options = SolveOptions {
        // Generated families are metric by construction; visible violations
        // would be a generator bug, so keep validation on.
        validate_metric: true,
        metric_tolerance: Some(crate::fp_tolerance(instance.max_weight())),
        compute_oracle: config.oracle,
    };
    let report = solve_problem_a(&instance, &options)?;
    Ok(TrialRow {
        n,
        trial,
        seed,
        weight: report.weight,
        oracle_weight: report.oracle_weight,
        ratio: report.ratio,
        mst_ms: report.timings_ms.get("mst").copied().unwrap_or(0.0),
        matching_ms: report.timings_ms.get("matching").copied().unwrap_or(0.0),
        euler_ms: report.timings_ms.get("euler").copied().unwrap_or(0.0),
    })
}

fn specs(config: &ExperimentConfig) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in config.n_min..=config.n_max {
        for trial in 0..config.trials {
            out.push((n, trial));
        }
    }
    out
}

fn summarize(rows: &[TrialRow]) -> ExperimentSummary {
    let ratios: Vec<f64> = rows.iter().filter_map(|r| r.ratio).collect();
    if ratios.is_empty() {
        ExperimentSummary {
            max_ratio: None,
            mean_ratio: None,
            count: rows.len(),
        }
    } else {
        let max = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
        ExperimentSummary {
            max_ratio: Some(max),
            mean_ratio: Some(mean),
            count: rows.len(),
        }
    }
}

/// Run every trial sequentially; the reference path for benchmarks and the
/// fallback when the `parallel` feature is off.
pub fn run_experiment_sequential(config: &ExperimentConfig) -> Result<ExperimentOutput, Error> {
    config.validate()?;
    let rows: Result<Vec<TrialRow>, Error> = specs(config)
        .iter()
        .map(|&(n, trial)| run_trial(config, n, trial))
        .collect();
    let rows = rows?;
    let summary = summarize(&rows);
    Ok(ExperimentOutput { rows, summary })
}

/// Run trials in parallel over the fixed (n, trial) grid. Collection
/// preserves the grid order, so results are identical to the sequential
/// runner row for row.
#[cfg(feature = "parallel")]
pub fn run_experiment_parallel(config: &ExperimentConfig) -> Result<ExperimentOutput, Error> {
    config.validate()?;
    let rows: Result<Vec<TrialRow>, Error> = specs(config)
        .par_iter()
        .map(|&(n, trial)| run_trial(config, n, trial))
        .collect();
    let rows = rows?;
    let summary = summarize(&rows);
    Ok(ExperimentOutput { rows, summary })
}

/// The default entry point: parallel when compiled in, sequential otherwise.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentOutput, Error> {
    #[cfg(feature = "parallel")]
    {
        run_experiment_parallel(config)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_experiment_sequential(config)
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| format!("{x}")).unwrap_or_default()
}

/// One row per trial, sorted by (n, trial): n, seed, heuristic weight,
/// oracle weight and ratio when available, stage timings.
pub fn render_csv(rows: &[TrialRow], zero_timings: bool) -> String {
    let mut out = String::from("n,seed,weight,oracle_weight,ratio,mst_ms,matching_ms,euler_ms\n");
    for row in rows {
        let (mst, matching, euler) = if zero_timings {
            (0.0, 0.0, 0.0)
        } else {
            (row.mst_ms, row.matching_ms, row.euler_ms)
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.n,
            row.seed,
            row.weight,
            fmt_opt(row.oracle_weight),
            fmt_opt(row.ratio),
            mst,
            matching,
            euler
        ));
    }
    out
}

pub fn summary_json(summary: &ExperimentSummary) -> String {
    serde_json::to_string(summary).expect("summary serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config() -> ExperimentConfig {
        ExperimentConfig {
            n_min: 4,
            n_max: 6,
            trials: 5,
            seed: 7,
            family: InstanceFamily::EuclideanUnitSquare,
            oracle: true,
        }
    }

    #[test]
    fn row_grid_is_complete_and_sorted() {
        let out = run_experiment(&small_config()).unwrap();
        assert_eq!(out.rows.len(), 3 * 5);
        let keys: Vec<_> = out.rows.iter().map(|r| (r.n, r.trial)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(out.summary.count, 15);
        assert!(out.summary.max_ratio.unwrap() < 1.5);
        assert!(out.summary.mean_ratio.unwrap() >= 1.0 - crate::TAU_FP);
    }

    #[test]
    fn sequential_and_default_agree() {
        let cfg = small_config();
        let a = run_experiment(&cfg).unwrap();
        let b = run_experiment_sequential(&cfg).unwrap();
        assert_eq!(a.rows.len(), b.rows.len());
        for (x, y) in a.rows.iter().zip(b.rows.iter()) {
            assert_eq!(x.seed, y.seed);
            assert_eq!(x.weight, y.weight);
            assert_eq!(x.oracle_weight, y.oracle_weight);
        }
        assert_eq!(a.summary.max_ratio, b.summary.max_ratio);
    }

    #[test]
    fn csv_shape_and_determinism() {
        let cfg = small_config();
        let out = run_experiment(&cfg).unwrap();
        let csv = render_csv(&out.rows, true);
        let again = render_csv(&run_experiment(&cfg).unwrap().rows, true);
        assert_eq!(csv, again);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 1 + 15);
        assert_eq!(
            lines[0],
            "n,seed,weight,oracle_weight,ratio,mst_ms,matching_ms,euler_ms"
        );
        assert!(lines[1].ends_with(",0,0,0"));
    }

    #[test]
    fn bad_configs_are_rejected() {
        let mut cfg = small_config();
        cfg.n_min = 2;
        assert!(matches!(run_experiment(&cfg), Err(Error::BadConfig(_))));
        let mut cfg = small_config();
        cfg.n_max = 18;
        assert!(matches!(run_experiment(&cfg), Err(Error::BadConfig(_))));
        let mut cfg = small_config();
        cfg.family = InstanceFamily::RandomGraph;
        assert!(matches!(run_experiment(&cfg), Err(Error::BadConfig(_))));
        let mut cfg = small_config();
        cfg.trials = 0;
        assert!(matches!(run_experiment(&cfg), Err(Error::BadConfig(_))));
    }

    #[test]
    fn summary_serializes_with_nulls_when_no_oracle() {
        let mut cfg = small_config();
        cfg.oracle = false;
        let out = run_experiment(&cfg).unwrap();
        let json = summary_json(&out.summary);
        assert!(json.contains("\"max_ratio\":null"));
        assert!(json.contains("\"count\":15"));
    }
}
