//! Parametric clipping of rays against an axis-aligned box.

use super::{BoundingBox, GeomError, Point, Vector};

/// Clips the ray `origin + t * dir, t >= 0` to the closed box. Returns the
/// clipped portion as a pair of points in ray order, or `None` when the ray
/// misses the box or the clip degenerates to a single point.
///
/// When an endpoint lies on a box wall, the wall coordinate is set exactly
/// and the other coordinate clamped into the wall's range, so that clipped
/// endpoints are incident to wall segments under exact predicates.
pub fn clip_to_box(
    origin: Point,
    dir: Vector,
    bbox: &BoundingBox,
) -> Result<Option<(Point, Point)>, GeomError> {
    if dir.is_zero() {
        return Err(GeomError::ZeroDirection);
    }
    let (min, max) = (bbox.min(), bbox.max());
    let mut t0 = 0.0f64;
    let mut t1 = f64::INFINITY;
    // Wall hit responsible for each parameter: 0 = none (origin), 1..=4 =
    // x=min.x, x=max.x, y=min.y, y=max.y.
    let mut wall0 = 0u8;
    let mut wall1 = 0u8;

    for (o, d, lo, hi, wall_lo, wall_hi) in [
        (origin.x, dir.x, min.x, max.x, 1u8, 2u8),
        (origin.y, dir.y, min.y, max.y, 3u8, 4u8),
    ] {
        if d == 0.0 {
            if o < lo || o > hi {
                return Ok(None);
            }
            continue;
        }
        let (ta, tb, wa, wb) = if d > 0.0 {
            ((lo - o) / d, (hi - o) / d, wall_lo, wall_hi)
        } else {
            ((hi - o) / d, (lo - o) / d, wall_hi, wall_lo)
        };
        if ta > t0 {
            t0 = ta;
            wall0 = wa;
        }
        if tb < t1 {
            t1 = tb;
            wall1 = wb;
        }
        if t0 > t1 {
            return Ok(None);
        }
    }
    if !t1.is_finite() {
        // Both axes unconstrained cannot happen for a nonzero direction.
        return Ok(None);
    }

    let entry = materialize(origin, dir, t0, wall0, bbox);
    let exit = materialize(origin, dir, t1, wall1, bbox);
    if entry == exit {
        return Ok(None);
    }
    Ok(Some((entry, exit)))
}

fn materialize(origin: Point, dir: Vector, t: f64, wall: u8, bbox: &BoundingBox) -> Point {
    let (min, max) = (bbox.min(), bbox.max());
    let clamp = |v: f64, lo: f64, hi: f64| v.max(lo).min(hi);
    match wall {
        0 => origin,
        1 => Point::new(min.x, clamp(origin.y + t * dir.y, min.y, max.y)),
        2 => Point::new(max.x, clamp(origin.y + t * dir.y, min.y, max.y)),
        3 => Point::new(clamp(origin.x + t * dir.x, min.x, max.x), min.y),
        4 => Point::new(clamp(origin.x + t * dir.x, min.x, max.x), max.y),
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_box() -> BoundingBox {
        BoundingBox::new(Point::new(-1.0, -1.0), Point::new(1.0, 1.0))
    }

    #[test]
    fn ray_from_inside() {
        let got = clip_to_box(Point::new(0.0, 0.0), Vector::new(1.0, 0.0), &unit_box())
            .unwrap()
            .unwrap();
        assert_eq!(got, (Point::new(0.0, 0.0), Point::new(1.0, 0.0)));
    }

    #[test]
    fn ray_pointing_away_misses() {
        let got = clip_to_box(Point::new(2.0, 2.0), Vector::new(1.0, 1.0), &unit_box()).unwrap();
        assert!(got.is_none());
    }

    #[test]
    fn ray_entering_and_exiting() {
        let got = clip_to_box(Point::new(-2.0, 0.0), Vector::new(1.0, 0.0), &unit_box())
            .unwrap()
            .unwrap();
        assert_eq!(got, (Point::new(-1.0, 0.0), Point::new(1.0, 0.0)));
    }

    #[test]
    fn zero_direction_is_an_error() {
        assert!(clip_to_box(Point::new(0.0, 0.0), Vector::new(0.0, 0.0), &unit_box()).is_err());
    }

    #[test]
    fn exit_lands_exactly_on_wall() {
        let b = unit_box();
        let (_, exit) =
            clip_to_box(Point::new(0.1, 0.2), Vector::new(0.7, 0.3), &b).unwrap().unwrap();
        assert!(exit.x == b.max().x || exit.x == b.min().x || exit.y == b.max().y || exit.y == b.min().y);
        assert!(b.contains(&exit));
    }
}
