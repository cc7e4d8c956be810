//! Exact geometric predicates and primitives.
//!
//! Every combinatorial decision made elsewhere in the crate reduces to a sign
//! computation in this module. Predicates are evaluated in hardware floating
//! point with a forward error bound and fall back to arbitrary-precision
//! rational arithmetic when the bound cannot certify the sign.

mod angular;
mod clip;
mod exact;
mod filter;
pub mod instrument;
pub mod polygon;
mod predicates;

pub use angular::{angular_order_around, Direction};
pub use clip::clip_to_box;
pub use predicates::{
    cross_sign, intersection_order_along, orient, point_on_segment, segments_intersect,
    side_of_segment, IntersectMode, ParamOrder,
};

use serde::{Deserialize, Serialize};
use std::fmt;

/// A point in the plane. Coordinates are finite; negative zero is normalized
/// away so that bitwise keys agree with value equality.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        assert!(x.is_finite() && y.is_finite(), "point coordinates must be finite");
        // +0.0 collapses -0.0 to +0.0
        Point { x: x + 0.0, y: y + 0.0 }
    }

    /// Bit-level key for hashing; valid because construction normalizes -0.0.
    pub fn key(&self) -> (u64, u64) {
        (self.x.to_bits(), self.y.to_bits())
    }

    pub fn lex_le(&self, other: &Point) -> bool {
        (self.x, self.y) <= (other.x, other.y)
    }

    pub fn to(&self, target: Point) -> Vector {
        Vector { x: target.x - self.x, y: target.y - self.y }
    }

    pub fn translate(&self, v: Vector) -> Point {
        Point::new(self.x + v.x, self.y + v.y)
    }

    pub fn dist(&self, other: Point) -> f64 {
        self.to(other).norm()
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A free vector; directions of rays and segments.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vector {
    pub x: f64,
    pub y: f64,
}

impl Vector {
    pub fn new(x: f64, y: f64) -> Self {
        assert!(x.is_finite() && y.is_finite(), "vector components must be finite");
        Vector { x, y }
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0.0 && self.y == 0.0
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn scale(&self, s: f64) -> Vector {
        Vector { x: self.x * s, y: self.y * s }
    }
}

/// A directed segment whose source is the lexicographic minimum of its two
/// endpoints (compare x, then y). Construction normalizes the order.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    source: Point,
    target: Point,
}

impl Segment {
    /// Builds a segment over two distinct points, swapping them if needed so
    /// that the source is lexicographically smallest.
    pub fn new(a: Point, b: Point) -> Self {
        assert!(a != b, "segment endpoints must be distinct");
        if a.lex_le(&b) {
            Segment { source: a, target: b }
        } else {
            Segment { source: b, target: a }
        }
    }

    pub fn source(&self) -> Point {
        self.source
    }

    pub fn target(&self) -> Point {
        self.target
    }

    pub fn direction(&self) -> Vector {
        self.source.to(self.target)
    }

    /// Closed lexicographic interval test for a point already known to lie on
    /// the supporting line. Lexicographic order is monotone along the line.
    pub fn lex_contains(&self, p: &Point) -> bool {
        self.source.lex_le(p) && p.lex_le(&self.target)
    }

    pub fn midpoint(&self) -> Point {
        Point::new(
            0.5 * (self.source.x + self.target.x),
            0.5 * (self.source.y + self.target.y),
        )
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?} -> {:?}]", self.source, self.target)
    }
}

/// Axis-aligned box with strictly positive extent on both axes.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundingBox {
    min: Point,
    max: Point,
}

impl BoundingBox {
    pub fn new(min: Point, max: Point) -> Self {
        assert!(
            min.x < max.x && min.y < max.y,
            "bounding box must have positive extent: {min:?} {max:?}"
        );
        BoundingBox { min, max }
    }

    /// Smallest box containing all points; `None` when the iterator is empty.
    /// Degenerate (zero-extent) dimensions are widened to a unit interval
    /// around the data.
    pub fn around_points<I: IntoIterator<Item = Point>>(points: I) -> Option<Self> {
        let mut it = points.into_iter();
        let first = it.next()?;
        let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (first.x, first.y, first.x, first.y);
        for p in it {
            lo_x = lo_x.min(p.x);
            lo_y = lo_y.min(p.y);
            hi_x = hi_x.max(p.x);
            hi_y = hi_y.max(p.y);
        }
        if lo_x == hi_x {
            lo_x -= 0.5;
            hi_x += 0.5;
        }
        if lo_y == hi_y {
            lo_y -= 0.5;
            hi_y += 0.5;
        }
        Some(BoundingBox::new(Point::new(lo_x, lo_y), Point::new(hi_x, hi_y)))
    }

    pub fn min(&self) -> Point {
        self.min
    }

    pub fn max(&self) -> Point {
        self.max
    }

    pub fn center(&self) -> Point {
        Point::new(0.5 * (self.min.x + self.max.x), 0.5 * (self.min.y + self.max.y))
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn diagonal(&self) -> f64 {
        self.width().hypot(self.height())
    }

    /// Closed containment.
    pub fn contains(&self, p: &Point) -> bool {
        self.min.x <= p.x && p.x <= self.max.x && self.min.y <= p.y && p.y <= self.max.y
    }

    /// Strict containment.
    pub fn contains_strictly(&self, p: &Point) -> bool {
        self.min.x < p.x && p.x < self.max.x && self.min.y < p.y && p.y < self.max.y
    }
}

/// Side of an oriented line or turn direction of a point triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Left,
    Right,
    Collinear,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::Left => Orientation::Right,
            Orientation::Right => Orientation::Left,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Errors raised by geometric operations.
#[derive(Debug, thiserror::Error)]
pub enum GeomError {
    #[error("direction vector must be nonzero")]
    ZeroDirection,
    #[error("segments {0} and {1} have exactly parallel directions at a common event point")]
    ParallelDirections(usize, usize),
    #[error("segment does not intersect the reference segment")]
    MissingIntersection,
}
