//! Planar primitives: points, the unit-square study region and
//! nearest-neighbour queries.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn distance(&self, other: &Point) -> f64 {
        distance(*self, *other)
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Self { x, y }
    }
}

/// The study region `[0,1] x [0,1]`. No wrap-around and no edge correction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Region;

impl Region {
    pub const UNIT_SQUARE: Region = Region;

    pub fn area(&self) -> f64 {
        1.0
    }

    pub fn contains(&self, p: &Point) -> bool {
        (0.0..=1.0).contains(&p.x) && (0.0..=1.0).contains(&p.y)
    }

    /// Maps a pair of unit variates onto the region.
    #[inline]
    pub(crate) fn point_at(&self, u: f64, v: f64) -> Point {
        Point::new(u, v)
    }
}

/// Euclidean distance on the plane.
#[inline]
pub fn distance(p: Point, q: Point) -> f64 {
    (p.x - q.x).hypot(p.y - q.y)
}

/// Index and distance of the candidate closest to `query`. Ties go to the
/// lowest index.
pub fn nearest(query: Point, candidates: &[Point]) -> Result<(usize, f64)> {
    let mut iter = candidates.iter().enumerate();
    let (_, first) = iter
        .next()
        .ok_or(Error::EmptyInput("nearest: candidate list"))?;
    let mut best = (0, distance(query, *first));
    for (i, c) in iter {
        let d = distance(query, *c);
        if d < best.1 {
            best = (i, d);
        }
    }
    Ok(best)
}
