//! AWGN capacities, secrecy capacity, secrecy disks and the
//! cooperative-transmitting coverage predicate.

use std::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::geometry::{distance, Point};

/// Link parameters shared by every transmitter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    /// Transmit power `P_t`, linear units.
    pub power: f64,
    /// Noise variance at receiver and eavesdroppers.
    pub noise_var: f64,
    /// Path-loss exponent.
    pub beta: f64,
    /// Jammer power `P_j`; only the jamming strategy reads it.
    pub jammer_power: f64,
}

impl ChannelParams {
    pub fn new(power: f64, noise_var: f64, beta: f64, jammer_power: f64) -> Result<Self> {
        let check = |name, value: f64, ok: bool, reason| {
            if ok && value.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidParameter {
                    name,
                    value,
                    reason,
                })
            }
        };
        check("power", power, power > 0.0, "must be positive")?;
        check("noise_var", noise_var, noise_var > 0.0, "must be positive")?;
        check(
            "beta",
            beta,
            (2.0..=6.0).contains(&beta),
            "must lie in [2, 6]",
        )?;
        check(
            "jammer_power",
            jammer_power,
            jammer_power >= 0.0,
            "must be nonnegative",
        )?;
        Ok(Self {
            power,
            noise_var,
            beta,
            jammer_power,
        })
    }

    /// Received power at distance `dist`, `P_t * dist^-beta`. Infinite at 0.
    #[inline]
    pub(crate) fn received(&self, power: f64, dist: f64) -> f64 {
        if dist == 0.0 {
            f64::INFINITY
        } else {
            power * dist.powf(-self.beta)
        }
    }
}

impl Default for ChannelParams {
    /// Unit power and noise, `beta = 4`, jammer power equal to transmit power.
    fn default() -> Self {
        Self {
            power: 1.0,
            noise_var: 1.0,
            beta: 4.0,
            jammer_power: 1.0,
        }
    }
}

/// Point-to-point AWGN capacity `1/2 log2(1 + P_t d^-beta / sigma^2)` in bits
/// per channel use.
pub fn capacity(params: &ChannelParams, dist: f64) -> Result<f64> {
    if dist == 0.0 {
        return Err(Error::Singularity);
    }
    Ok(capacity_unchecked(params, dist))
}

/// Same as [`capacity`] but yields `+inf` at zero distance.
#[inline]
pub(crate) fn capacity_unchecked(params: &ChannelParams, dist: f64) -> f64 {
    let snr = params.received(params.power, dist) / params.noise_var;
    // ln_1p keeps tiny SNRs from collapsing to zero capacity
    0.5 * snr.ln_1p() / LN_2
}

pub fn secrecy_capacity(c_main: f64, c_eve: f64) -> f64 {
    (c_main - c_eve).max(0.0)
}

/// Radius of a transmitter's secrecy disk: distance to its nearest
/// eavesdropper, or unbounded with none present.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DiskRadius {
    Finite(f64),
    Unbounded,
}

impl DiskRadius {
    /// Strict containment: a point at exactly the radius is outside.
    #[inline]
    pub fn contains(&self, dist: f64) -> bool {
        match *self {
            DiskRadius::Finite(r) => dist < r,
            DiskRadius::Unbounded => true,
        }
    }

    pub fn as_f64(&self) -> f64 {
        match *self {
            DiskRadius::Finite(r) => r,
            DiskRadius::Unbounded => f64::INFINITY,
        }
    }
}

pub fn secrecy_disk_radius(t: Point, eavesdroppers: &[Point]) -> DiskRadius {
    eavesdroppers
        .iter()
        .map(|e| distance(t, *e))
        .reduce(f64::min)
        .map_or(DiskRadius::Unbounded, DiskRadius::Finite)
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Deployment {
    pub transmitters: Vec<Point>,
    pub eavesdroppers: Vec<Point>,
    pub receiver: Point,
}

impl Deployment {
    pub fn new(transmitters: Vec<Point>, eavesdroppers: Vec<Point>, receiver: Point) -> Self {
        Self {
            transmitters,
            eavesdroppers,
            receiver,
        }
    }
}

/// Whether the receiver sits strictly inside some transmitter's secrecy
/// disk, i.e. positive secrecy capacity exists for at least one block.
pub fn covered(d: &Deployment) -> bool {
    covers(&d.transmitters, &d.eavesdroppers, d.receiver)
}

pub(crate) fn covers(transmitters: &[Point], eavesdroppers: &[Point], receiver: Point) -> bool {
    transmitters
        .iter()
        .any(|t| inside_disk(*t, eavesdroppers, receiver))
}

/// `d(t, r) < min_e d(t, e)` without materialising the radius; stops as soon
/// as one eavesdropper is at least as close as the receiver.
#[inline]
pub(crate) fn inside_disk(t: Point, eavesdroppers: &[Point], receiver: Point) -> bool {
    let d_tr = distance(t, receiver);
    eavesdroppers.iter().all(|e| d_tr < distance(t, *e))
}

/// Coverage evaluated through capacities instead of distances: some
/// transmitter has `C_s = max(C_tr - max_e C_te, 0) > 0`.
pub fn covered_via_capacity(d: &Deployment, params: &ChannelParams) -> bool {
    d.transmitters.iter().any(|t| {
        let c_main = capacity_unchecked(params, distance(*t, d.receiver));
        let c_eve = d
            .eavesdroppers
            .iter()
            .map(|e| capacity_unchecked(params, distance(*t, *e)))
            .fold(0.0, f64::max);
        secrecy_capacity(c_main, c_eve) > 0.0
    })
}
