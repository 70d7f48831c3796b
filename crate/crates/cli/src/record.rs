//! CSV rows emitted by `sim`, `sweep` and `figure`.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context};
use coopsec::bounds::{
    exact_single_tx_iud_eve, exact_single_tx_poisson_eve, ub_iud_iud, ub_poisson_tx_iud_eve,
};
use coopsec::{BoundKind, BoundResult, Estimate, ProcessSpec, Scenario, StrategyKind};

pub const HEADER: [&str; 12] = [
    "tx_process",
    "tx_param",
    "eve_process",
    "eve_param",
    "strategy",
    "beta",
    "trials",
    "seed",
    "p_hat",
    "ci_half_width",
    "bound",
    "bound_kind",
];

/// Significant digits for every real-valued column.
pub const SIG_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub tx_process: String,
    pub tx_param: f64,
    pub eve_process: String,
    pub eve_param: f64,
    pub strategy: String,
    pub beta: f64,
    pub trials: u64,
    pub seed: u64,
    pub p_hat: f64,
    pub ci_half_width: f64,
    pub bound: Option<f64>,
    pub bound_kind: Option<String>,
}

impl RunRecord {
    pub fn new(scenario: &Scenario, estimate: &Estimate) -> Self {
        let bound = bound_for(scenario);
        Self {
            tx_process: scenario.tx_process.family().into(),
            tx_param: scenario.tx_process.param(),
            eve_process: scenario.eve_process.family().into(),
            eve_param: scenario.eve_process.param(),
            strategy: scenario.strategy.strategy.name().into(),
            beta: scenario.strategy.channel.beta,
            trials: estimate.trials,
            seed: estimate.master_seed,
            p_hat: estimate.p_hat,
            ci_half_width: estimate.ci_half_width,
            bound: bound.map(|b| b.value),
            bound_kind: bound.map(|b| b.kind.name().into()),
        }
    }

    pub fn to_csv_row(&self) -> String {
        let mut row = String::new();
        let _ = write!(
            row,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.tx_process,
            format_real(self.tx_param),
            self.eve_process,
            format_real(self.eve_param),
            self.strategy,
            format_real(self.beta),
            self.trials,
            self.seed,
            format_real(self.p_hat),
            format_real(self.ci_half_width),
            self.bound.map(format_real).unwrap_or_default(),
            self.bound_kind.as_deref().unwrap_or_default(),
        );
        row
    }

    /// Parses the leading twelve fields of a data row; trailing
    /// figure-specific columns are ignored.
    pub fn parse_csv_row(line: &str) -> anyhow::Result<Self> {
        let fields: Vec<&str> = line.trim_end_matches(['\r', '\n']).split(',').collect();
        if fields.len() < HEADER.len() {
            bail!(
                "expected at least {} fields, found {}",
                HEADER.len(),
                fields.len()
            );
        }
        let real = |i: usize| -> anyhow::Result<f64> {
            fields[i]
                .parse()
                .with_context(|| format!("column {} = `{}`", HEADER[i], fields[i]))
        };
        let int = |i: usize| -> anyhow::Result<u64> {
            fields[i]
                .parse()
                .with_context(|| format!("column {} = `{}`", HEADER[i], fields[i]))
        };
        let family = |i: usize| -> anyhow::Result<String> {
            match fields[i] {
                f @ ("iud" | "poisson" | "hex" | "square") => Ok(f.to_string()),
                f => Err(anyhow!(
                    "column {} = `{f}` is not a process family",
                    HEADER[i]
                )),
            }
        };
        let strategy: StrategyKind = fields[4].parse()?;
        let bound = match fields[10] {
            "" => None,
            _ => Some(real(10)?),
        };
        let bound_kind = match fields[11] {
            "" => None,
            k => Some(
                BoundKind::from_name(k)
                    .ok_or_else(|| anyhow!("unknown bound kind `{k}`"))?
                    .name()
                    .to_string(),
            ),
        };
        if bound.is_some() != bound_kind.is_some() {
            bail!("bound and bound_kind must be both present or both empty");
        }
        Ok(Self {
            tx_process: family(0)?,
            tx_param: real(1)?,
            eve_process: family(2)?,
            eve_param: real(3)?,
            strategy: strategy.name().to_string(),
            beta: real(5)?,
            trials: int(6)?,
            seed: int(7)?,
            p_hat: real(8)?,
            ci_half_width: real(9)?,
            bound,
            bound_kind,
        })
    }
}

pub fn header_line(extra: &[&str]) -> String {
    HEADER
        .iter()
        .chain(extra)
        .copied()
        .collect::<Vec<_>>()
        .join(",")
}

/// Plain decimal with [`SIG_DIGITS`] significant digits.
pub fn format_real(x: f64) -> String {
    format_sig(x, SIG_DIGITS)
}

pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Closed form matching the scenario, when one exists.
pub fn bound_for(scenario: &Scenario) -> Option<BoundResult> {
    use ProcessSpec::*;
    let strategy = scenario.strategy.strategy;
    let single = |eve: ProcessSpec| match eve {
        Iud(n_e) => Some(exact_single_tx_iud_eve(n_e)),
        Poisson(l) => Some(exact_single_tx_poisson_eve(l)),
        _ => None,
    };
    match (strategy, scenario.tx_process, scenario.eve_process) {
        (StrategyKind::CoopTransmit | StrategyKind::Direct, Iud(1), eve) => single(eve),
        // the direct link uses one IUD transmitter regardless of n_T
        (StrategyKind::Direct, Iud(n), eve) if n >= 1 => single(eve),
        (StrategyKind::CoopTransmit, Iud(n_t), Iud(n_e)) if n_t >= 2 => Some(ub_iud_iud(n_t, n_e)),
        (StrategyKind::CoopTransmit, Poisson(l), Iud(n_e)) => Some(ub_poisson_tx_iud_eve(l, n_e)),
        _ => None,
    }
}
