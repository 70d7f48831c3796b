//! Monte Carlo estimation of `P{C_s > 0}`.
//!
//! Every trial owns three random streams (transmitters, eavesdroppers,
//! receiver) whose ids are a pure function of the trial index, so the success
//! count does not depend on how trials are scheduled across threads.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{Point, Region};
use crate::placement::{sample_iud, ProcessSpec, SeedStream};
use crate::strategies::StrategyConfig;

/// Default width of the normal-approximation confidence band, in sigmas.
pub const DEFAULT_Z: f64 = 3.0;

const STREAMS_PER_TRIAL: u64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    Transmitters = 0,
    Eavesdroppers = 1,
    Receiver = 2,
}

fn stream(master_seed: u64, trial_id: u64, role: Role) -> SeedStream {
    SeedStream::new(master_seed, trial_id * STREAMS_PER_TRIAL + role as u64)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub tx_process: ProcessSpec,
    pub eve_process: ProcessSpec,
    pub strategy: StrategyConfig,
    pub region: Region,
}

impl Scenario {
    pub fn new(
        tx_process: ProcessSpec,
        eve_process: ProcessSpec,
        strategy: StrategyConfig,
    ) -> Self {
        Self {
            tx_process,
            eve_process,
            strategy,
            region: Region::UNIT_SQUARE,
        }
    }

    /// Point sets of one trial: friendly nodes, eavesdroppers, receiver.
    pub fn realise(&self, trial_id: u64, master_seed: u64) -> (Vec<Point>, Vec<Point>, Point) {
        let tx = self.tx_process.sample(
            self.region,
            stream(master_seed, trial_id, Role::Transmitters),
        );
        let eve = self.eve_process.sample(
            self.region,
            stream(master_seed, trial_id, Role::Eavesdroppers),
        );
        let rx = sample_iud(
            1,
            self.region,
            stream(master_seed, trial_id, Role::Receiver),
        )[0];
        (tx, eve, rx)
    }
}

/// One network realisation: does the strategy reach positive secrecy?
pub fn run_trial(scenario: &Scenario, trial_id: u64, master_seed: u64) -> bool {
    let (tx, eve, rx) = scenario.realise(trial_id, master_seed);
    scenario.strategy.positive_secrecy(&tx, &eve, rx)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub successes: u64,
    pub trials: u64,
    pub p_hat: f64,
    /// `z * sqrt(p_hat (1 - p_hat) / trials)`.
    pub ci_half_width: f64,
    pub z: f64,
    pub master_seed: u64,
}

impl Estimate {
    pub fn from_counts(successes: u64, trials: u64, z: f64, master_seed: u64) -> Self {
        let p_hat = successes as f64 / trials as f64;
        Self {
            successes,
            trials,
            p_hat,
            ci_half_width: z * (p_hat * (1.0 - p_hat) / trials as f64).sqrt(),
            z,
            master_seed,
        }
    }

    /// Binomial standard error of `p_hat`.
    pub fn std_error(&self) -> f64 {
        (self.p_hat * (1.0 - self.p_hat) / self.trials as f64).sqrt()
    }
}

/// Scenario parameter that a sweep can vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepAxis {
    /// Transmitter count or rate.
    Tx,
    /// Eavesdropper count or rate.
    Eve,
    Beta,
    Power,
    Noise,
    JamPower,
}

impl SweepAxis {
    pub const ALL: [SweepAxis; 6] = [
        SweepAxis::Tx,
        SweepAxis::Eve,
        SweepAxis::Beta,
        SweepAxis::Power,
        SweepAxis::Noise,
        SweepAxis::JamPower,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SweepAxis::Tx => "tx",
            SweepAxis::Eve => "eve",
            SweepAxis::Beta => "beta",
            SweepAxis::Power => "power",
            SweepAxis::Noise => "noise",
            SweepAxis::JamPower => "jam-power",
        }
    }

    fn aliases(&self) -> &'static [&'static str] {
        match self {
            SweepAxis::Tx => &["n_T", "nt", "lambda_T", "lambda-t"],
            SweepAxis::Eve => &["n_E", "ne", "lambda_E", "lambda-e"],
            SweepAxis::JamPower => &["jam_power"],
            _ => &[],
        }
    }

    /// Copy of `base` with this parameter set to `value`.
    pub fn apply(&self, base: &Scenario, value: f64) -> Result<Scenario> {
        let mut s = *base;
        let ch = &mut s.strategy.channel;
        match self {
            SweepAxis::Tx => s.tx_process = base.tx_process.with_param(value)?,
            SweepAxis::Eve => s.eve_process = base.eve_process.with_param(value)?,
            SweepAxis::Beta => ch.beta = value,
            SweepAxis::Power => ch.power = value,
            SweepAxis::Noise => ch.noise_var = value,
            SweepAxis::JamPower => ch.jammer_power = value,
        }
        s.strategy.channel =
            crate::secrecy::ChannelParams::new(ch.power, ch.noise_var, ch.beta, ch.jammer_power)?;
        Ok(s)
    }
}

impl fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepAxis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SweepAxis::ALL
            .into_iter()
            .find(|a| a.name() == s || a.aliases().contains(&s))
            .ok_or_else(|| Error::UnknownAxis {
                axis: s.to_string(),
                valid: SweepAxis::ALL.map(|a| a.name()).join(", "),
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub scenario: Scenario,
    pub estimate: Estimate,
}

/// Runs trials on a fixed-size thread pool. The result never depends on the
/// number of threads.
pub struct Engine {
    pool: rayon::ThreadPool,
    z: f64,
}

impl Engine {
    /// `threads = 0` uses one thread per available core.
    pub fn new(threads: usize) -> Result<Self> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?;
        Ok(Self { pool, z: DEFAULT_Z })
    }

    pub fn with_z(mut self, z: f64) -> Self {
        self.z = z;
        self
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }

    pub fn estimate(&self, scenario: &Scenario, trials: u64, master_seed: u64) -> Result<Estimate> {
        if trials == 0 {
            return Err(Error::ZeroTrials);
        }
        let successes = self
            .pool
            .install(|| count_successes(scenario, trials, master_seed));
        Ok(Estimate::from_counts(
            successes,
            trials,
            self.z,
            master_seed,
        ))
    }

    /// One estimate per value of `axis`, every point using the same master
    /// seed.
    pub fn sweep(
        &self,
        base: &Scenario,
        axis: SweepAxis,
        values: &[f64],
        trials: u64,
        master_seed: u64,
    ) -> Result<Vec<SweepRow>> {
        values
            .iter()
            .map(|&value| {
                let scenario = axis.apply(base, value)?;
                let estimate = self.estimate(&scenario, trials, master_seed)?;
                Ok(SweepRow {
                    value,
                    scenario,
                    estimate,
                })
            })
            .collect()
    }
}

/// Integer success count; the reduction is order-insensitive.
fn count_successes(scenario: &Scenario, trials: u64, master_seed: u64) -> u64 {
    let trials = usize::try_from(trials).expect("trial count exceeds usize");
    (0..trials)
        .into_par_iter()
        .with_min_len(256)
        .filter(|&t| run_trial(scenario, t as u64, master_seed))
        .count() as u64
}

/// [`Engine::estimate`] on rayon's global pool.
pub fn estimate(scenario: &Scenario, trials: u64, master_seed: u64) -> Result<Estimate> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let successes = count_successes(scenario, trials, master_seed);
    Ok(Estimate::from_counts(
        successes,
        trials,
        DEFAULT_Z,
        master_seed,
    ))
}

/// Parses an axis name, then sweeps it on rayon's global pool.
pub fn sweep(
    base: &Scenario,
    axis: &str,
    values: &[f64],
    trials: u64,
    master_seed: u64,
) -> Result<Vec<SweepRow>> {
    let axis: SweepAxis = axis.parse()?;
    values
        .iter()
        .map(|&value| {
            let scenario = axis.apply(base, value)?;
            Ok(SweepRow {
                value,
                scenario,
                estimate: estimate(&scenario, trials, master_seed)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::secrecy::ChannelParams;
    use crate::strategies::StrategyKind;

    fn coop(tx: &str, eve: &str) -> Scenario {
        Scenario::new(
            tx.parse().unwrap(),
            eve.parse().unwrap(),
            StrategyConfig::new(StrategyKind::CoopTransmit, ChannelParams::default()),
        )
    }

    #[test]
    fn trial_edge_cases() {
        let no_eve = coop("iud:1", "iud:0");
        let no_tx = coop("poisson:0", "iud:5");
        for t in 0..100 {
            assert!(run_trial(&no_eve, t, 1));
            assert!(!run_trial(&no_tx, t, 1));
        }
    }

    #[test]
    fn trial_is_deterministic() {
        let s = coop("iud:4", "poisson:3");
        for t in 0..200 {
            assert_eq!(run_trial(&s, t, 99), run_trial(&s, t, 99));
        }
    }

    #[test]
    fn streams_are_distinct() {
        let s = coop("iud:3", "iud:3");
        let (tx, eve, rx) = s.realise(7, 1);
        assert_ne!(tx, eve);
        assert!(!tx.contains(&rx));
        let (tx2, _, _) = s.realise(8, 1);
        assert_ne!(tx, tx2);
    }

    #[test]
    fn zero_trials_rejected() {
        assert_eq!(
            estimate(&coop("iud:1", "iud:1"), 0, 1),
            Err(Error::ZeroTrials)
        );
        let engine = Engine::new(1).unwrap();
        assert_eq!(
            engine.estimate(&coop("iud:1", "iud:1"), 0, 1),
            Err(Error::ZeroTrials)
        );
    }

    #[test]
    fn estimate_fields_consistent() {
        let e = estimate(&coop("iud:2", "iud:2"), 5000, 3).unwrap();
        assert_eq!(e.p_hat * e.trials as f64, e.successes as f64);
        assert!((e.ci_half_width - 3.0 * e.std_error()).abs() < 1e-15);
        assert_eq!(e.master_seed, 3);
    }

    #[test]
    fn thread_count_does_not_matter() {
        let s = coop("iud:5", "poisson:4");
        let one = Engine::new(1).unwrap().estimate(&s, 20_000, 17).unwrap();
        let four = Engine::new(4).unwrap().estimate(&s, 20_000, 17).unwrap();
        assert_eq!(one, four);
        assert_eq!(one, estimate(&s, 20_000, 17).unwrap());
    }

    #[test]
    fn single_transmitter_matches_exact_law() {
        let e = estimate(&coop("iud:1", "iud:1"), 100_000, 2).unwrap();
        assert!((e.p_hat - 0.5).abs() <= 0.005, "{}", e.p_hat);
        let e = estimate(&coop("iud:1", "poisson:1"), 100_000, 2).unwrap();
        let exact = 1.0 - (-1.0f64).exp();
        assert!((e.p_hat - exact).abs() <= 0.005, "{}", e.p_hat);
    }

    #[test]
    fn sweep_axes() {
        let base = coop("iud:1", "iud:1");
        let rows = sweep(&base, "n_T", &[1.0, 2.0, 3.0], 2000, 5).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[2].scenario.tx_process, ProcessSpec::Iud(3));
        assert!(sweep(&base, "tx", &[], 10, 5).unwrap().is_empty());
        match sweep(&base, "radius", &[1.0], 10, 5) {
            Err(Error::UnknownAxis { valid, .. }) => assert!(valid.contains("jam-power")),
            other => panic!("{other:?}"),
        }
        assert!(sweep(&base, "tx", &[1.5], 10, 5).is_err());
        assert!(sweep(&base, "beta", &[7.0], 10, 5).is_err());
        let rows = sweep(&base, "beta", &[2.0, 6.0], 10, 5).unwrap();
        assert_eq!(rows[1].scenario.strategy.channel.beta, 6.0);
    }

    #[test]
    fn sweep_fig4_abscissa() {
        let base = coop("iud:10", "iud:1");
        let values: Vec<f64> = (1..=10).map(f64::from).collect();
        let rows = sweep(&base, "eve", &values, 500, 7).unwrap();
        assert_eq!(rows.len(), 10);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.scenario.eve_process, ProcessSpec::Iud(i + 1));
            assert_eq!(row.scenario.tx_process, ProcessSpec::Iud(10));
        }
    }
}
