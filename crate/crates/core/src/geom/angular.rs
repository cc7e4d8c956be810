//! Exact counterclockwise ordering of directions around a common event point.
//!
//! Event points are known combinatorially, never by coordinates, so a
//! direction is described by an ordered pair of input points whose difference
//! is the direction vector. The order is decided by half-plane separation and
//! exact cross-product signs alone.

use super::predicates::cross_sign;
use super::{GeomError, Point};
use std::cmp::Ordering;

/// Direction `to - from`, pointing away from the event point.
#[derive(Clone, Copy, Debug)]
pub struct Direction {
    pub from: Point,
    pub to: Point,
}

impl Direction {
    pub fn new(from: Point, to: Point) -> Self {
        assert!(from != to, "direction must be nonzero");
        Direction { from, to }
    }

    pub fn reversed(self) -> Self {
        Direction { from: self.to, to: self.from }
    }

    /// 0 for angles in [0, pi), 1 for [pi, 2pi). Exact: signs of coordinate
    /// differences are exact in floating point.
    fn half(&self) -> u8 {
        let dy = self.to.y - self.from.y;
        let dx = self.to.x - self.from.x;
        if dy > 0.0 || (dy == 0.0 && dx > 0.0) {
            0
        } else {
            1
        }
    }
}

/// Counterclockwise cyclic order of the given directions, starting from the
/// one closest to the positive x-axis. Returns the permutation of input
/// indices. Two exactly-parallel directions with the same orientation are a
/// degeneracy the caller must have removed (by atomizing overlaps).
pub fn angular_order_around(dirs: &[Direction]) -> Result<Vec<usize>, GeomError> {
    let mut order: Vec<usize> = (0..dirs.len()).collect();
    let mut degenerate: Option<(usize, usize)> = None;
    order.sort_by(|&i, &j| {
        let (a, b) = (&dirs[i], &dirs[j]);
        match a.half().cmp(&b.half()) {
            Ordering::Equal => match cross_sign(a.from, a.to, b.from, b.to) {
                Ordering::Greater => Ordering::Less, // b is CCW of a
                Ordering::Less => Ordering::Greater,
                Ordering::Equal => {
                    if degenerate.is_none() {
                        degenerate = Some((i, j));
                    }
                    i.cmp(&j)
                }
            },
            other => other,
        }
    });
    if let Some((i, j)) = degenerate {
        return Err(GeomError::ParallelDirections(i, j));
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dir(x: f64, y: f64) -> Direction {
        Direction::new(Point::new(0.0, 0.0), Point::new(x, y))
    }

    #[test]
    fn three_rays_sorted_by_angle() {
        // 0, 90 and 200 degrees.
        let dirs = [dir(1.0, 0.0), dir(0.0, 1.0), dir(-0.94, -0.34)];
        let order = angular_order_around(&dirs).unwrap();
        assert_eq!(order, vec![0, 1, 2]);
    }

    #[test]
    fn crossing_segment_ends_alternate() {
        // Two segments through the origin along +/-x and +/-y: the four ends
        // alternate a+, b+, a-, b-.
        let ends = [dir(1.0, 0.0), dir(-1.0, 0.0), dir(0.0, 1.0), dir(0.0, -1.0)];
        let order = angular_order_around(&ends).unwrap();
        assert_eq!(order, vec![0, 2, 1, 3]);
    }

    #[test]
    fn same_direction_is_degenerate() {
        let ends = [dir(1.0, 1.0), dir(2.0, 2.0)];
        assert!(matches!(
            angular_order_around(&ends),
            Err(GeomError::ParallelDirections(0, 1))
        ));
    }

    #[test]
    fn opposite_directions_are_fine() {
        let ends = [dir(1.0, 1.0), dir(-1.0, -1.0)];
        assert_eq!(angular_order_around(&ends).unwrap(), vec![0, 1]);
    }
}
