//! End-to-end check that the intersection product matrix and the cellular
//! cup product matrix are mutually inverse.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cellular::cup_matrix;
use crate::chow::intersection_matrix;
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::matrix::{mat_inverse, mat_mul, RationalMatrix};
use crate::random::{random_complete_fan, splitmix64};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub fan: Fan,
    pub m_int: RationalMatrix,
    pub m_cup: RationalMatrix,
    /// `m_int · m_cup`.
    pub product: RationalMatrix,
    pub identity_holds: bool,
    /// Whether an independently computed inverse of `m_cup` equals `m_int`.
    pub oracle_agrees: bool,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.identity_holds && self.oracle_agrees
    }
}

/// Computes both matrices of a normalized fan and checks they are inverse.
pub fn verify_duality(fan: &Fan) -> Result<DualityReport> {
    fan.require_normalized()?;
    let m_int = intersection_matrix(fan)?;
    let m_cup = cup_matrix(fan)?.matrix;
    let product = mat_mul(&m_int, &m_cup)?;
    let identity_holds = product.is_identity();
    let oracle_agrees = match mat_inverse(&m_cup) {
        Ok(inv) => inv == m_int,
        Err(Error::Singular) => false,
        Err(e) => return Err(e),
    };
    Ok(DualityReport { fan: fan.clone(), m_int, m_cup, product, identity_holds, oracle_agrees })
}

/// Seed of trial `index` in a batch with the given master seed.
///
/// `splitmix64(master ^ splitmix64(index))`, so any trial can be replayed from
/// `(master, index)` alone.
pub fn trial_seed(master: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(index))
}

/// The fan drawn by trial `index` of a batch. The ray count is uniform in
/// `ray_counts` and drawn from the trial seed; the fan itself uses the seed
/// stream of the same generator.
pub fn trial_fan(master: u64, index: u64, ray_counts: (usize, usize), coord_bound: i64) -> Result<(u64, Fan)> {
    let seed = trial_seed(master, index);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rays = rng.gen_range(ray_counts.0..=ray_counts.1);
    let fan = random_complete_fan(rays, coord_bound, rng.gen())?;
    Ok((seed, fan))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialFailure {
    pub index: u64,
    pub seed: u64,
    pub fan: Fan,
    pub report: DualityReport,
}

/// Outcome of [`batch_verify`]. `failures` are theorem violations, which
/// indicate an implementation bug; `generation_failures` counts trials where
/// no fan could be drawn.
#[derive(Debug, Clone)]
pub struct BatchSummary {
    pub trials: usize,
    pub failures: Vec<TrialFailure>,
    pub generation_failures: Vec<(u64, Error)>,
    pub elapsed: Duration,
}

impl BatchSummary {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Serialize)]
struct FailureRecord<'a> {
    index: u64,
    seed: u64,
    rays: &'a [crate::lattice::LatticeVector],
}

impl BatchSummary {
    /// Replay data for every failure, as JSON.
    pub fn failures_json(&self) -> serde_json::Value {
        let records: Vec<_> =
            self.failures.iter().map(|f| FailureRecord { index: f.index, seed: f.seed, rays: f.fan.rays() }).collect();
        serde_json::to_value(records).unwrap_or_default()
    }
}

enum Outcome {
    Pass,
    Fail(Box<TrialFailure>),
    NoFan(u64, Error),
}

/// Runs `trials` independent random checks in parallel.
pub fn batch_verify(trials: usize, ray_counts: (usize, usize), coord_bound: i64, seed: u64) -> Result<BatchSummary> {
    let (lo, hi) = ray_counts;
    if lo < 3 || hi < lo {
        return Err(Error::InvalidParameter(format!("ray count range {lo}..={hi} must satisfy 3 <= min <= max")));
    }
    if coord_bound < 1 {
        return Err(Error::InvalidParameter(format!("coordinate bound {coord_bound} must be positive")));
    }
    let start = Instant::now();
    let outcomes: Vec<Outcome> = (0..trials as u64)
        .into_par_iter()
        .map(|index| {
            let (seed, fan) = match trial_fan(seed, index, ray_counts, coord_bound) {
                Ok(x) => x,
                Err(e) => return Outcome::NoFan(index, e),
            };
            match verify_duality(&fan) {
                Ok(report) if report.passed() => Outcome::Pass,
                Ok(report) => Outcome::Fail(Box::new(TrialFailure { index, seed, fan, report })),
                Err(e) => Outcome::NoFan(index, e),
            }
        })
        .collect();
    let mut summary =
        BatchSummary { trials, failures: Vec::new(), generation_failures: Vec::new(), elapsed: Duration::ZERO };
    for outcome in outcomes {
        match outcome {
            Outcome::Pass => {}
            Outcome::Fail(f) => summary.failures.push(*f),
            Outcome::NoFan(i, e) => summary.generation_failures.push((i, e)),
        }
    }
    summary.elapsed = start.elapsed();
    Ok(summary)
}
