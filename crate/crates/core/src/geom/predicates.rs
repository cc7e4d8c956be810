//! Sign predicates: fast filtered evaluation with exact rational fallback.

use super::exact;
use super::filter::Filtered;
use super::{GeomError, Orientation, Point, Segment};
use std::cmp::Ordering;

fn orient_filtered(p: Point, q: Point, r: Point) -> Option<Ordering> {
    let px = Filtered::exact(p.x);
    let py = Filtered::exact(p.y);
    let det = (Filtered::exact(q.x) - px) * (Filtered::exact(r.y) - py)
        - (Filtered::exact(q.y) - py) * (Filtered::exact(r.x) - px);
    det.sign()
}

/// Exact sign of (q - p) x (r - p): `Left` for a counterclockwise turn.
pub fn orient(p: Point, q: Point, r: Point) -> Orientation {
    let s = orient_filtered(p, q, r).unwrap_or_else(|| exact::orient_sign(p, q, r));
    match s {
        Ordering::Greater => Orientation::Left,
        Ordering::Less => Orientation::Right,
        Ordering::Equal => Orientation::Collinear,
    }
}

/// Side of the directed segment on which `p` lies.
pub fn side_of_segment(s: &Segment, p: Point) -> Orientation {
    orient(s.source(), s.target(), p)
}

fn cross_sign_filtered(a1: Point, a2: Point, b1: Point, b2: Point) -> Option<Ordering> {
    let det = (Filtered::exact(a2.x) - Filtered::exact(a1.x))
        * (Filtered::exact(b2.y) - Filtered::exact(b1.y))
        - (Filtered::exact(a2.y) - Filtered::exact(a1.y))
            * (Filtered::exact(b2.x) - Filtered::exact(b1.x));
    det.sign()
}

/// Exact sign of (a2 - a1) x (b2 - b1); the workhorse of angular comparisons.
pub fn cross_sign(a1: Point, a2: Point, b1: Point, b2: Point) -> Ordering {
    cross_sign_filtered(a1, a2, b1, b2).unwrap_or_else(|| exact::cross_sign(a1, a2, b1, b2))
}

/// True when `p` lies on the closed segment `s`.
pub fn point_on_segment(s: &Segment, p: Point) -> bool {
    orient(s.source(), s.target(), p) == Orientation::Collinear && s.lex_contains(&p)
}

/// True when `p` lies on `s` strictly between its endpoints.
pub fn point_in_segment_interior(s: &Segment, p: Point) -> bool {
    point_on_segment(s, p) && p != s.source() && p != s.target()
}

/// Intersection flavor for [`segments_intersect`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntersectMode {
    /// Interior-interior transversal crossing only.
    Proper,
    /// Any contact of the closed segments, including endpoint touches and
    /// collinear overlap.
    Closed,
}

/// Exact segment intersection test.
pub fn segments_intersect(a: &Segment, b: &Segment, mode: IntersectMode) -> bool {
    let (p1, p2) = (a.source(), a.target());
    let (q1, q2) = (b.source(), b.target());
    let o1 = orient(p1, p2, q1);
    let o2 = orient(p1, p2, q2);
    let o3 = orient(q1, q2, p1);
    let o4 = orient(q1, q2, p2);

    match mode {
        IntersectMode::Proper => {
            o1 != Orientation::Collinear
                && o2 != Orientation::Collinear
                && o3 != Orientation::Collinear
                && o4 != Orientation::Collinear
                && o1 != o2
                && o3 != o4
        }
        IntersectMode::Closed => {
            if o1 != Orientation::Collinear
                && o2 != Orientation::Collinear
                && o3 != Orientation::Collinear
                && o4 != Orientation::Collinear
            {
                return o1 != o2 && o3 != o4;
            }
            // Some endpoint is collinear with the other supporting line; any
            // remaining contact must involve an endpoint on a segment.
            (o1 == Orientation::Collinear && a.lex_contains(&q1))
                || (o2 == Orientation::Collinear && a.lex_contains(&q2))
                || (o3 == Orientation::Collinear && b.lex_contains(&p1))
                || (o4 == Orientation::Collinear && b.lex_contains(&p2))
        }
    }
}

/// Result of comparing two intersection parameters along a reference segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamOrder {
    ABeforeB,
    BBeforeA,
    Equal,
}

impl From<Ordering> for ParamOrder {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => ParamOrder::ABeforeB,
            Ordering::Greater => ParamOrder::BBeforeA,
            Ordering::Equal => ParamOrder::Equal,
        }
    }
}

fn line_param_filtered(s0: Point, s1: Point, a0: Point, a1: Point) -> (Filtered, Filtered) {
    let sx = Filtered::exact(s1.x) - Filtered::exact(s0.x);
    let sy = Filtered::exact(s1.y) - Filtered::exact(s0.y);
    let ax = Filtered::exact(a1.x) - Filtered::exact(a0.x);
    let ay = Filtered::exact(a1.y) - Filtered::exact(a0.y);
    let num = (Filtered::exact(a0.x) - Filtered::exact(s0.x)) * ay
        - (Filtered::exact(a0.y) - Filtered::exact(s0.y)) * ax;
    let den = sx * ay - sy * ax;
    (num, den)
}

fn order_cross_cross_filtered(s: &Segment, a: &Segment, b: &Segment) -> Option<Ordering> {
    let (na, da) = line_param_filtered(s.source(), s.target(), a.source(), a.target());
    let (nb, db) = line_param_filtered(s.source(), s.target(), b.source(), b.target());
    let diff = (na * db - nb * da).sign()?;
    let flip = (da * db).sign()?;
    match flip {
        Ordering::Less => Some(diff.reverse()),
        Ordering::Greater => Some(diff),
        Ordering::Equal => None, // cannot happen for certified nonzero dens
    }
}

/// Comparator form of [`intersection_order_along`] without the precondition
/// checks: both `a` and `b` must be non-parallel to `s`.
pub(crate) fn order_along(s: &Segment, a: &Segment, b: &Segment) -> Ordering {
    order_cross_cross_filtered(s, a, b).unwrap_or_else(|| {
        exact::order_cross_cross(
            s.source(),
            s.target(),
            a.source(),
            a.target(),
            b.source(),
            b.target(),
        )
    })
}

fn order_point_cross_filtered(s: &Segment, p: Point, a: &Segment) -> Option<Ordering> {
    let (na, da) = line_param_filtered(s.source(), s.target(), a.source(), a.target());
    let (pc, s0c, svc) = if s.source().x != s.target().x {
        (p.x, s.source().x, Filtered::exact(s.target().x) - Filtered::exact(s.source().x))
    } else {
        (p.y, s.source().y, Filtered::exact(s.target().y) - Filtered::exact(s.source().y))
    };
    let diff = ((Filtered::exact(pc) - Filtered::exact(s0c)) * da - svc * na).sign()?;
    let flip = (svc * da).sign()?;
    match flip {
        Ordering::Less => Some(diff.reverse()),
        Ordering::Greater => Some(diff),
        Ordering::Equal => None,
    }
}

/// Position along `s` of a point `p` lying exactly on the supporting line of
/// `s`, compared to the intersection of `s` with `a`.
pub(crate) fn order_point_along(s: &Segment, p: Point, a: &Segment) -> Ordering {
    order_point_cross_filtered(s, p, a).unwrap_or_else(|| {
        exact::order_point_cross(s.source(), s.target(), p, a.source(), a.target())
    })
}

/// True when the supporting lines of `s` and `a` are parallel.
pub(crate) fn is_parallel(s: &Segment, a: &Segment) -> bool {
    cross_sign(s.source(), s.target(), a.source(), a.target()) == Ordering::Equal
}

/// Order of the intersection parameters of `a` and `b` along the direction of
/// `s`. Both segments must intersect `s` in the closed sense; the result is
/// what exact rational comparison of the parameters would give, computed from
/// sign predicates only.
pub fn intersection_order_along(
    s: &Segment,
    a: &Segment,
    b: &Segment,
) -> Result<ParamOrder, GeomError> {
    if !segments_intersect(s, a, IntersectMode::Closed)
        || !segments_intersect(s, b, IntersectMode::Closed)
    {
        return Err(GeomError::MissingIntersection);
    }
    // A segment that touches s and is parallel to it must be collinear; its
    // contact is a single shared endpoint (overlaps are atomized upstream).
    let pos_a = if is_parallel(s, a) {
        collinear_contact(s, a)?
    } else {
        None
    };
    let pos_b = if is_parallel(s, b) {
        collinear_contact(s, b)?
    } else {
        None
    };
    let ord = match (pos_a, pos_b) {
        (None, None) => order_along(s, a, b),
        (Some(pa), None) => order_point_along(s, pa, b),
        (None, Some(pb)) => order_point_along(s, pb, a).reverse(),
        (Some(pa), Some(pb)) => (pa.x, pa.y).partial_cmp(&(pb.x, pb.y)).unwrap(),
    };
    Ok(ord.into())
}

fn collinear_contact(s: &Segment, a: &Segment) -> Result<Option<Point>, GeomError> {
    for p in [a.source(), a.target()] {
        if point_on_segment(s, p) {
            return Ok(Some(p));
        }
    }
    Err(GeomError::MissingIntersection)
}
