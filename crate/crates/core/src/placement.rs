//! Point-process samplers for transmitters and eavesdroppers.
//!
//! Random families draw from a [`SeedStream`], so a given
//! `(master_seed, stream_id)` pair always yields the same points. IUD
//! samples are prefix-stable: asking for `n + 1` points from a stream
//! returns the same first `n` points as asking for `n`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{Point, Region};

/// Largest mean handled by sequential-search inversion. Larger means are
/// split into independent pieces no bigger than this.
const INVERSION_MAX_MEAN: f64 = 30.0;

/// Addresses one independent random stream. Backed by ChaCha8, whose 64-bit
/// stream selector lets every trial and role own a stream without any
/// coordination between threads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeedStream {
    pub master_seed: u64,
    pub stream_id: u64,
}

impl SeedStream {
    pub const fn new(master_seed: u64, stream_id: u64) -> Self {
        Self {
            master_seed,
            stream_id,
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master_seed);
        rng.set_stream(self.stream_id);
        rng
    }
}

/// One of the four spatial families, with its parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProcessSpec {
    /// Fixed number of independent uniform points.
    Iud(usize),
    /// Homogeneous Poisson process with the given rate per unit area.
    Poisson(f64),
    HexLattice(usize),
    SquareLattice(usize),
}

impl ProcessSpec {
    pub fn family(&self) -> &'static str {
        match self {
            ProcessSpec::Iud(_) => "iud",
            ProcessSpec::Poisson(_) => "poisson",
            ProcessSpec::HexLattice(_) => "hex",
            ProcessSpec::SquareLattice(_) => "square",
        }
    }

    pub fn param(&self) -> f64 {
        match *self {
            ProcessSpec::Iud(n) | ProcessSpec::HexLattice(n) | ProcessSpec::SquareLattice(n) => {
                n as f64
            }
            ProcessSpec::Poisson(rate) => rate,
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(self, ProcessSpec::Iud(_) | ProcessSpec::Poisson(_))
    }

    /// Same family with a new parameter. Count families require a
    /// nonnegative integer.
    pub fn with_param(&self, value: f64) -> Result<ProcessSpec> {
        let count = || -> Result<usize> {
            if value >= 0.0 && value.fract() == 0.0 && value <= u32::MAX as f64 {
                Ok(value as usize)
            } else {
                Err(Error::InvalidParameter {
                    name: "count",
                    value,
                    reason: "must be a nonnegative integer",
                })
            }
        };
        Ok(match self {
            ProcessSpec::Iud(_) => ProcessSpec::Iud(count()?),
            ProcessSpec::HexLattice(_) => ProcessSpec::HexLattice(count()?),
            ProcessSpec::SquareLattice(_) => ProcessSpec::SquareLattice(count()?),
            ProcessSpec::Poisson(_) => {
                if !(value >= 0.0 && value.is_finite()) {
                    return Err(Error::InvalidParameter {
                        name: "rate",
                        value,
                        reason: "must be finite and nonnegative",
                    });
                }
                ProcessSpec::Poisson(value)
            }
        })
    }

    /// Draws one realisation. Lattices ignore the seed.
    pub fn sample(&self, region: Region, seed: SeedStream) -> Vec<Point> {
        match *self {
            ProcessSpec::Iud(n) => sample_iud(n, region, seed),
            ProcessSpec::Poisson(rate) => sample_poisson(rate, region, seed),
            ProcessSpec::HexLattice(n) => hex_lattice(n, region),
            ProcessSpec::SquareLattice(n) => square_lattice(n, region),
        }
    }
}

impl fmt::Display for ProcessSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ProcessSpec::Poisson(rate) => write!(f, "poisson:{rate}"),
            ProcessSpec::Iud(n) | ProcessSpec::HexLattice(n) | ProcessSpec::SquareLattice(n) => {
                write!(f, "{}:{n}", self.family())
            }
        }
    }
}

impl FromStr for ProcessSpec {
    type Err = Error;

    /// Parses `iud:<n>`, `poisson:<rate>`, `hex:<n>` or `square:<n>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidProcessSpec {
            token: s.to_string(),
            reason: reason.to_string(),
        };
        let (family, param) = s
            .split_once(':')
            .ok_or_else(|| bad("expected <family>:<parameter>"))?;
        let family = family.trim().to_ascii_lowercase();
        let param = param.trim();
        let count = || {
            param
                .parse::<usize>()
                .map_err(|_| bad("parameter must be a nonnegative integer"))
        };
        match family.as_str() {
            "iud" => Ok(ProcessSpec::Iud(count()?)),
            "hex" => Ok(ProcessSpec::HexLattice(count()?)),
            "square" => Ok(ProcessSpec::SquareLattice(count()?)),
            "poisson" => {
                let rate: f64 = param
                    .parse()
                    .map_err(|_| bad("rate must be a real number"))?;
                if !(rate >= 0.0 && rate.is_finite()) {
                    return Err(bad("rate must be finite and nonnegative"));
                }
                Ok(ProcessSpec::Poisson(rate))
            }
            _ => Err(bad("family must be one of iud, poisson, hex, square")),
        }
    }
}

/// `n` independent points uniform on the region.
pub fn sample_iud(n: usize, region: Region, seed: SeedStream) -> Vec<Point> {
    let mut rng = seed.rng();
    iud_from(&mut rng, n, region)
}

fn iud_from<R: Rng>(rng: &mut R, n: usize, region: Region) -> Vec<Point> {
    (0..n)
        .map(|_| {
            let u: f64 = rng.random();
            let v: f64 = rng.random();
            region.point_at(u, v)
        })
        .collect()
}

/// Two-stage Poisson sampler: draw `l ~ Poisson(rate * area)`, then place
/// `l` IUD points. Both stages use the same stream, count first.
pub fn sample_poisson(rate: f64, region: Region, seed: SeedStream) -> Vec<Point> {
    let mut rng = seed.rng();
    let l = poisson_count(&mut rng, rate * region.area());
    iud_from(&mut rng, l, region)
}

/// Exact Poisson variate. Sequential-search inversion up to
/// [`INVERSION_MAX_MEAN`]; above that the mean is split into equal pieces
/// and the independent counts summed, which is still exactly Poisson.
pub fn poisson_count<R: Rng>(rng: &mut R, mean: f64) -> usize {
    if mean.is_nan() || mean <= 0.0 {
        return 0;
    }
    if mean <= INVERSION_MAX_MEAN {
        return poisson_inversion(rng, mean);
    }
    let pieces = (mean / INVERSION_MAX_MEAN).ceil() as usize;
    let piece = mean / pieces as f64;
    (0..pieces).map(|_| poisson_inversion(rng, piece)).sum()
}

fn poisson_inversion<R: Rng>(rng: &mut R, mean: f64) -> usize {
    let u: f64 = rng.random();
    let mut k = 0usize;
    let mut p = (-mean).exp();
    let mut cdf = p;
    while u > cdf {
        k += 1;
        p *= mean / k as f64;
        if p == 0.0 {
            // cdf saturated below u through rounding; remaining mass is
            // far below f64 resolution.
            break;
        }
        cdf += p;
    }
    k
}

/// Row/column layout for the square lattice: `rows = round(sqrt(n))`,
/// `cols = ceil(n / rows)`, surplus positions dropped from the right end of
/// the last row.
fn square_shape(n: usize) -> (usize, usize) {
    let rows = ((n as f64).sqrt().round() as usize).clamp(1, n);
    (rows, n.div_ceil(rows))
}

/// Geometry of an `rows x cols` triangular lattice fitted into the unit
/// square: horizontal pitch, vertical pitch and the first point.
#[derive(Debug, Clone, Copy)]
struct HexFit {
    h: f64,
    v: f64,
    x0: f64,
    y0: f64,
}

const HEX_ROW_RATIO: f64 = 0.866_025_403_784_438_6; // sqrt(3) / 2

fn hex_fit(rows: usize, cols: usize) -> HexFit {
    let shifted = rows > 1;
    // Each point owns an h x (sqrt(3)/2 h) cell; the pattern plus the
    // half-pitch shift of odd rows must fit inside the unit square.
    let width_cells = cols as f64 + if shifted { 0.5 } else { 0.0 };
    let h = (1.0 / width_cells).min(1.0 / (rows as f64 * HEX_ROW_RATIO));
    let v = h * HEX_ROW_RATIO;
    HexFit {
        h,
        v,
        x0: 0.5 - 0.5 * (width_cells - 1.0) * h,
        y0: 0.5 - 0.5 * (rows as f64 - 1.0) * v,
    }
}

/// Row count giving the largest pitch, i.e. the most spread-out layout.
/// Ties go to fewer rows.
fn hex_rows(n: usize) -> usize {
    let mut best = (1, hex_fit(1, n).h);
    for rows in 2..=n {
        let h = hex_fit(rows, n.div_ceil(rows)).h;
        if h > best.1 {
            best = (rows, h);
        }
    }
    best.0
}

/// `n` points on a triangular (hexagonal-packing) lattice centred in the
/// region. Odd rows are shifted right by half a pitch and the vertical pitch
/// is `sqrt(3)/2` of the horizontal one. The row count maximises the pitch;
/// surplus positions are dropped from the right end of the last row.
pub fn hex_lattice(n: usize, region: Region) -> Vec<Point> {
    if n == 0 {
        return Vec::new();
    }
    let rows = hex_rows(n);
    let cols = n.div_ceil(rows);
    let HexFit { h, v, x0, y0 } = hex_fit(rows, cols);
    (0..n)
        .map(|k| {
            let (i, j) = (k / cols, k % cols);
            let shift = if i % 2 == 1 { 0.5 * h } else { 0.0 };
            region.point_at(x0 + j as f64 * h + shift, y0 + i as f64 * v)
        })
        .collect()
}

/// `n` grid points in row-major order. For `n = m^2` these are the cell
/// centres `((j + 0.5)/m, (i + 0.5)/m)`.
pub fn square_lattice(n: usize, region: Region) -> Vec<Point> {
    if n == 0 {
        return Vec::new();
    }
    let (rows, cols) = square_shape(n);
    (0..n)
        .map(|k| {
            let (i, j) = (k / cols, k % cols);
            region.point_at(
                (j as f64 + 0.5) / cols as f64,
                (i as f64 + 0.5) / rows as f64,
            )
        })
        .collect()
}
