//! Fixtures shared by the criterion benches.

use coopsec::placement::sample_iud;
use coopsec::{ChannelParams, Deployment, ProcessSpec, Region, Scenario, SeedStream};
use coopsec::{StrategyConfig, StrategyKind};

/// Random IUD deployment with `n_t` transmitters and `n_e` eavesdroppers.
pub fn iud_deployment(n_t: usize, n_e: usize, seed: u64) -> Deployment {
    let r = Region::UNIT_SQUARE;
    Deployment::new(
        sample_iud(n_t, r, SeedStream::new(seed, 0)),
        sample_iud(n_e, r, SeedStream::new(seed, 1)),
        sample_iud(1, r, SeedStream::new(seed, 2))[0],
    )
}

pub fn scenario(tx: ProcessSpec, eve: ProcessSpec, strategy: StrategyKind) -> Scenario {
    Scenario::new(
        tx,
        eve,
        StrategyConfig::new(strategy, ChannelParams::default()),
    )
}
