//! Simulation and analytics for secret-key exchange by cooperative
//! transmitting.
//!
//! A set of friendly transmitters splits a pre-secret into blocks, one block
//! per transmitter. A receiver can derive the key securely when it sits
//! strictly inside at least one transmitter's *secrecy disk*, the disk
//! around the transmitter out to its nearest eavesdropper. The crate samples
//! transmitter and eavesdropper layouts on the unit square, estimates the
//! covered fraction by Monte Carlo, evaluates the closed-form bounds, and
//! compares against single-relay and single-jammer cooperation.

pub mod bounds;
pub mod error;
pub mod geometry;
pub mod keyexchange;
pub mod montecarlo;
pub mod placement;
pub mod secrecy;
pub mod strategies;

pub use bounds::{BoundKind, BoundResult};
pub use error::{Error, Result};
pub use geometry::{distance, nearest, Point, Region};
pub use keyexchange::{ExchangeOutcome, Key};
pub use montecarlo::{Engine, Estimate, Scenario, SweepAxis, SweepRow};
pub use placement::{ProcessSpec, SeedStream};
pub use secrecy::{covered, ChannelParams, Deployment, DiskRadius};
pub use strategies::{StrategyConfig, StrategyKind};
