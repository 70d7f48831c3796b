//! Parameter grids behind each reproduced figure.

use anyhow::Result;
use coopsec::bounds::ub_asymptotic;
use coopsec::{ChannelParams, Engine, ProcessSpec, Scenario, StrategyConfig, StrategyKind};

use crate::record::{format_real, header_line, RunRecord};

/// Transmitter family constructor, eavesdropper process and strategy of one
/// comparison curve.
type Series = (fn(usize) -> ProcessSpec, ProcessSpec, StrategyKind);

pub const FIGURE_IDS: std::ops::RangeInclusive<u8> = 2..=7;

/// Eavesdropper count or rate used throughout the strategy comparison.
pub const COMPARISON_EVE: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct FigureTable {
    /// Columns appended after the standard record columns.
    pub extra_columns: Vec<&'static str>,
    pub rows: Vec<(RunRecord, Vec<Option<f64>>)>,
}

impl FigureTable {
    pub fn to_csv(&self) -> String {
        let mut out = header_line(&self.extra_columns);
        out.push('\n');
        for (record, extra) in &self.rows {
            out.push_str(&record.to_csv_row());
            for v in extra {
                out.push(',');
                out.push_str(&v.map(format_real).unwrap_or_default());
            }
            out.push('\n');
        }
        out
    }
}

/// The scenarios of figure `id`, in output order, with any extra column
/// values. Returns `None` for ids outside [`FIGURE_IDS`].
pub fn figure_grid(id: u8, channel: ChannelParams) -> Option<Vec<(Scenario, Vec<Option<f64>>)>> {
    use ProcessSpec::*;
    let mk = |tx, eve, strategy| Scenario::new(tx, eve, StrategyConfig::new(strategy, channel));
    let coop = |tx, eve| (mk(tx, eve, StrategyKind::CoopTransmit), Vec::new());
    let grid: Vec<_> = match id {
        2 => (1..=10)
            .flat_map(|n_e| (1..=10).map(move |n_t| (n_t, n_e)))
            .map(|(n_t, n_e)| coop(Iud(n_t), Iud(n_e)))
            .collect(),
        3 => [1, 2, 5, 10]
            .into_iter()
            .flat_map(|n_e| (1..=20).map(move |n_t| (n_t, n_e)))
            .map(|(n_t, n_e)| coop(Iud(n_t), Iud(n_e)))
            .collect(),
        4 => (1..=10)
            .map(|n_e| {
                let k = 10.0 / n_e as f64;
                let (s, _) = coop(Iud(10), Iud(n_e));
                (s, vec![Some(ub_asymptotic(k).value)])
            })
            .collect(),
        5 => [1, 5, 10]
            .into_iter()
            .flat_map(|n_e| (1..=10).map(move |l| (l, n_e)))
            .map(|(l, n_e)| coop(Poisson(l as f64), Iud(n_e)))
            .collect(),
        6 => (1..=10)
            .flat_map(|l| (1..=10).map(move |n_t| (n_t, l)))
            .map(|(n_t, l)| coop(Iud(n_t), Poisson(l as f64)))
            .collect(),
        7 => {
            let n_e = COMPARISON_EVE;
            let rate = n_e as f64;
            let series: [Series; 9] = [
                (HexLattice, Iud(n_e), StrategyKind::CoopTransmit),
                (SquareLattice, Iud(n_e), StrategyKind::CoopTransmit),
                (Iud, Iud(n_e), StrategyKind::CoopTransmit),
                (Iud, Poisson(rate), StrategyKind::CoopTransmit),
                (|n| Poisson(n as f64), Iud(n_e), StrategyKind::CoopTransmit),
                (
                    |n| Poisson(n as f64),
                    Poisson(rate),
                    StrategyKind::CoopTransmit,
                ),
                (Iud, Iud(n_e), StrategyKind::BestRelay),
                (Iud, Iud(n_e), StrategyKind::BestJammer),
                (Iud, Iud(n_e), StrategyKind::Direct),
            ];
            series
                .into_iter()
                .flat_map(|(tx, eve, strategy)| {
                    (1..=10).map(move |n| (mk(tx(n), eve, strategy), Vec::new()))
                })
                .collect()
        }
        _ => return None,
    };
    Some(grid)
}

pub fn extra_columns(id: u8) -> Vec<&'static str> {
    match id {
        4 => vec!["asymptotic_bound"],
        _ => Vec::new(),
    }
}

/// Runs every scenario of figure `id` with the same master seed.
pub fn run_figure(
    id: u8,
    channel: ChannelParams,
    engine: &Engine,
    trials: u64,
    seed: u64,
) -> Result<Option<FigureTable>> {
    let Some(grid) = figure_grid(id, channel) else {
        return Ok(None);
    };
    let rows = grid
        .into_iter()
        .map(|(scenario, extra)| {
            let est = engine.estimate(&scenario, trials, seed)?;
            Ok((RunRecord::new(&scenario, &est), extra))
        })
        .collect::<Result<_>>()?;
    Ok(Some(FigureTable {
        extra_columns: extra_columns(id),
        rows,
    }))
}
