//! Monte Carlo rates for random presentations.
//!
//! For each requested relator length `l`, the lab draws `trials` random
//! presentations (each relator an independent, exactly uniform cyclically
//! reduced word of length at most `l`), runs the small-cancellation checks,
//! and counts how often `C'(1/6)` holds, how often no relator is a proper
//! power, and how often the full incoherence certificate goes through.
//!
//! Reproducibility contract: the per-trial random stream depends only on
//! `(seed, length, trial index)`, and per-length results are integer counts
//! combined by addition, so the table is byte-identical for any worker count,
//! including 1.

use super::sampler::CyclicWordSampler;
use super::{incoherence_certificate, piece_report, Certificate, Presentation, Word};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

/// Parameters of one lab run.
#[derive(Clone, Debug)]
pub struct MonteCarloParams {
    pub generators: usize,
    pub relators: usize,
    /// Maximum relator lengths to sweep, one table row each.
    pub lengths: Vec<usize>,
    /// Trials per length.
    pub trials: u32,
    pub seed: u64,
    /// Worker threads; 0 picks the runtime default.
    pub threads: usize,
}

/// Counts for one relator length.  Rates and intervals are derived views;
/// the counts themselves are the exact, aggregation-order-free data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RateRow {
    pub length: usize,
    pub trials: u32,
    pub c_prime_sixth: u32,
    pub no_proper_powers: u32,
    pub certified: u32,
    /// Trials in which two sampled relators coincided as words.
    pub relator_collisions: u32,
}

impl RateRow {
    pub fn c16_rate(&self) -> f64 {
        f64::from(self.c_prime_sixth) / f64::from(self.trials)
    }

    pub fn no_pp_rate(&self) -> f64 {
        f64::from(self.no_proper_powers) / f64::from(self.trials)
    }

    pub fn certified_rate(&self) -> f64 {
        f64::from(self.certified) / f64::from(self.trials)
    }

    /// Wilson 95% confidence interval for the certified rate.
    pub fn certified_interval(&self) -> (f64, f64) {
        wilson_interval(self.certified, self.trials, WILSON_Z95)
    }
}

/// One row per requested length, in request order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RateTable {
    pub rows: Vec<RateRow>,
}

/// Invalid lab parameters.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MonteCarloError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// The 97.5% standard normal quantile, for 95% Wilson intervals.
pub const WILSON_Z95: f64 = 1.959963984540054;

/// Wilson score interval for `successes` out of `trials`, clamped to [0, 1].
pub fn wilson_interval(successes: u32, trials: u32, z: f64) -> (f64, f64) {
    assert!(trials > 0, "interval needs at least one trial");
    let n = f64::from(trials);
    let p = f64::from(successes) / n;
    let zz = z * z;
    let denominator = 1.0 + zz / n;
    let center = (p + zz / (2.0 * n)) / denominator;
    let half = (z / denominator) * (p * (1.0 - p) / n + zz / (4.0 * n * n)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Derives the seed of one trial's random stream from the lab seed, the
/// relator length, and the trial index (a fixed splitmix-style mix, part of
/// the reproducibility contract).
pub fn trial_seed(seed: u64, length: usize, trial: u32) -> u64 {
    let mut state = seed
        ^ (length as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ u64::from(trial).wrapping_mul(0xD1B5_4A32_D192_ED03);
    state = (state ^ (state >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    state = (state ^ (state >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    state ^ (state >> 31)
}

#[derive(Clone, Copy, Default)]
struct Counts {
    c_prime_sixth: u32,
    no_proper_powers: u32,
    certified: u32,
    relator_collisions: u32,
}

impl Counts {
    fn add(self, other: Counts) -> Counts {
        Counts {
            c_prime_sixth: self.c_prime_sixth + other.c_prime_sixth,
            no_proper_powers: self.no_proper_powers + other.no_proper_powers,
            certified: self.certified + other.certified,
            relator_collisions: self.relator_collisions + other.relator_collisions,
        }
    }
}

fn run_trial(
    params: &MonteCarloParams,
    sampler: &CyclicWordSampler,
    length: usize,
    trial: u32,
) -> Counts {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(params.seed, length, trial));
    let relators: Vec<Word> = (0..params.relators)
        .map(|_| sampler.sample(&mut rng))
        .collect();

    let mut sorted = relators.clone();
    sorted.sort();
    let collided = sorted.windows(2).any(|pair| pair[0] == pair[1]);

    let presentation = Presentation::new(params.generators, relators)
        .expect("sampled relators are nonempty and cyclically reduced");
    let c16 = piece_report(&presentation).c_prime_sixth;
    let no_pp = presentation.relators().iter().all(|r| {
        r.proper_power_root()
            .expect("sampled relators are nonempty")
            .is_none()
    });
    let certified = matches!(
        incoherence_certificate(&presentation),
        Certificate::Certified { .. }
    );

    Counts {
        c_prime_sixth: u32::from(c16),
        no_proper_powers: u32::from(no_pp),
        certified: u32::from(certified),
        relator_collisions: u32::from(collided),
    }
}

/// Runs the lab and returns one row per requested length.
pub fn monte_carlo(params: &MonteCarloParams) -> Result<RateTable, MonteCarloError> {
    if params.generators < 2 {
        return Err(MonteCarloError::InvalidParameters(
            "need at least 2 generators".to_owned(),
        ));
    }
    if params.relators == 0 {
        return Err(MonteCarloError::InvalidParameters(
            "need at least 1 relator".to_owned(),
        ));
    }
    if params.trials == 0 {
        return Err(MonteCarloError::InvalidParameters(
            "need at least 1 trial".to_owned(),
        ));
    }
    if params.lengths.is_empty() {
        return Err(MonteCarloError::InvalidParameters(
            "need at least one length".to_owned(),
        ));
    }
    if params.lengths.contains(&0) {
        return Err(MonteCarloError::InvalidParameters(
            "lengths must be positive".to_owned(),
        ));
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(params.threads)
        .build()
        .map_err(|e| MonteCarloError::InvalidParameters(e.to_string()))?;

    let rows = pool.install(|| {
        params
            .lengths
            .iter()
            .map(|&length| {
                let sampler = CyclicWordSampler::new(params.generators, length);
                let counts = (0..params.trials)
                    .into_par_iter()
                    .map(|trial| run_trial(params, &sampler, length, trial))
                    .reduce(Counts::default, Counts::add);
                RateRow {
                    length,
                    trials: params.trials,
                    c_prime_sixth: counts.c_prime_sixth,
                    no_proper_powers: counts.no_proper_powers,
                    certified: counts.certified,
                    relator_collisions: counts.relator_collisions,
                }
            })
            .collect()
    });
    Ok(RateTable { rows })
}
