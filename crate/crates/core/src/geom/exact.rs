//! Arbitrary-precision rational fallback for predicate signs.
//!
//! Every finite f64 is a dyadic rational, so conversion is lossless and the
//! signs computed here are the exact signs of the real-valued expressions.

use super::Point;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

pub(crate) fn big(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite coordinate")
}

fn sign(x: &BigRational) -> Ordering {
    if x.is_zero() {
        Ordering::Equal
    } else if x.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

fn cross(ax: &BigRational, ay: &BigRational, bx: &BigRational, by: &BigRational) -> BigRational {
    ax * by - ay * bx
}

/// Sign of (q - p) x (r - p).
pub(crate) fn orient_sign(p: Point, q: Point, r: Point) -> Ordering {
    let (px, py) = (big(p.x), big(p.y));
    let det = cross(&(big(q.x) - &px), &(big(q.y) - &py), &(big(r.x) - &px), &(big(r.y) - &py));
    sign(&det)
}

/// Sign of (a2 - a1) x (b2 - b1).
pub(crate) fn cross_sign(a1: Point, a2: Point, b1: Point, b2: Point) -> Ordering {
    let det = cross(
        &(big(a2.x) - big(a1.x)),
        &(big(a2.y) - big(a1.y)),
        &(big(b2.x) - big(b1.x)),
        &(big(b2.y) - big(b1.y)),
    );
    sign(&det)
}

/// Numerator and denominator of the parameter at which the supporting line of
/// `(a0, a1)` meets the segment `s0 + t * (s1 - s0)`.
fn line_param(
    s0: Point,
    s1: Point,
    a0: Point,
    a1: Point,
) -> (BigRational, BigRational) {
    let sx = big(s1.x) - big(s0.x);
    let sy = big(s1.y) - big(s0.y);
    let ax = big(a1.x) - big(a0.x);
    let ay = big(a1.y) - big(a0.y);
    let num = cross(&(big(a0.x) - big(s0.x)), &(big(a0.y) - big(s0.y)), &ax, &ay);
    let den = cross(&sx, &sy, &ax, &ay);
    (num, den)
}

/// Order along `s` of the intersections with `a` and `b`. `a` and `b` must
/// not be parallel to `s`.
pub(crate) fn order_cross_cross(
    s0: Point,
    s1: Point,
    a0: Point,
    a1: Point,
    b0: Point,
    b1: Point,
) -> Ordering {
    let (na, da) = line_param(s0, s1, a0, a1);
    let (nb, db) = line_param(s0, s1, b0, b1);
    assert!(!da.is_zero() && !db.is_zero(), "parallel segment in parameter comparison");
    // t_a - t_b = (na*db - nb*da) / (da*db)
    let diff = &na * &db - &nb * &da;
    let mut ord = sign(&diff);
    if sign(&(da * db)) == Ordering::Less {
        ord = ord.reverse();
    }
    ord
}

/// Order along `s` of a point `p` lying exactly on the supporting line of `s`
/// versus the intersection with `a`.
pub(crate) fn order_point_cross(
    s0: Point,
    s1: Point,
    p: Point,
    a0: Point,
    a1: Point,
) -> Ordering {
    let (na, da) = line_param(s0, s1, a0, a1);
    assert!(!da.is_zero(), "parallel segment in parameter comparison");
    // Pick a coordinate in which s has extent; t_p = (p.c - s0.c) / sv.c.
    let (pc, s0c, svc) = if s1.x != s0.x {
        (big(p.x), big(s0.x), big(s1.x) - big(s0.x))
    } else {
        (big(p.y), big(s0.y), big(s1.y) - big(s0.y))
    };
    // t_p - t_a = ((pc - s0c)*da - svc*na) / (svc*da)
    let diff = (pc - s0c) * &da - &svc * na;
    let mut ord = sign(&diff);
    if sign(&(svc * da)) == Ordering::Less {
        ord = ord.reverse();
    }
    ord
}

