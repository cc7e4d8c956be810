//! Instrumentation for the coordinate-free guarantee.
//!
//! Arrangement construction and count propagation must never materialize an
//! intersection coordinate. Every routine that does compute one goes through
//! [`segment_intersection_point`], which bumps a global counter and trips a
//! debug assertion inside a [`CoordinateFreeZone`].

use super::{Point, Segment};
use std::cell::Cell;
use std::sync::atomic::{AtomicU64, Ordering};

static COORDINATE_COMPUTATIONS: AtomicU64 = AtomicU64::new(0);

thread_local! {
    static FORBIDDEN: Cell<bool> = const { Cell::new(false) };
}

/// Number of intersection coordinates materialized so far, process-wide.
pub fn coordinate_computations() -> u64 {
    COORDINATE_COMPUTATIONS.load(Ordering::Relaxed)
}

/// Guard marking a region of code that must stay coordinate-free on the
/// current thread. Nested zones are fine.
pub struct CoordinateFreeZone {
    was: bool,
}

impl CoordinateFreeZone {
    pub fn enter() -> Self {
        let was = FORBIDDEN.with(|f| f.replace(true));
        CoordinateFreeZone { was }
    }
}

impl Drop for CoordinateFreeZone {
    fn drop(&mut self) {
        let was = self.was;
        FORBIDDEN.with(|f| f.set(was));
    }
}

/// Intersection point of the supporting lines of `a` and `b`, or `None` when
/// they are parallel. The single entry point for coordinate materialization.
pub fn segment_intersection_point(a: &Segment, b: &Segment) -> Option<Point> {
    debug_assert!(
        FORBIDDEN.with(|f| !f.get()),
        "intersection coordinates computed inside a coordinate-free zone"
    );
    COORDINATE_COMPUTATIONS.fetch_add(1, Ordering::Relaxed);
    let (a0, av) = (a.source(), a.direction());
    let (b0, bv) = (b.source(), b.direction());
    let den = av.x * bv.y - av.y * bv.x;
    if den == 0.0 {
        return None;
    }
    let t = ((b0.x - a0.x) * bv.y - (b0.y - a0.y) * bv.x) / den;
    Some(Point::new(a0.x + t * av.x, a0.y + t * av.y))
}
