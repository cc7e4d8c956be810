//! Floating-point evaluation with a running forward error bound.
//!
//! A `Filtered` value carries the rounded result together with an absolute
//! bound on its distance to the exact result. Signs certified against the
//! bound are exact; everything else is answered by the rational layer.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Sub};

/// Unit roundoff of f64 (2^-53).
const U: f64 = f64::EPSILON / 2.0;
/// Absorbs absolute rounding error of products that may underflow.
const TINY: f64 = f64::MIN_POSITIVE;
/// Conservative inflation covering the rounding of the bound itself.
const SLACK: f64 = 1.0 + 16.0 * f64::EPSILON;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Filtered {
    val: f64,
    err: f64,
}

impl Filtered {
    pub(crate) fn exact(v: f64) -> Self {
        debug_assert!(v.is_finite());
        Filtered { val: v, err: 0.0 }
    }

    /// Certified sign, or `None` when the bound straddles zero.
    pub(crate) fn sign(self) -> Option<Ordering> {
        if self.val > self.err {
            Some(Ordering::Greater)
        } else if self.val < -self.err {
            Some(Ordering::Less)
        } else if self.err == 0.0 {
            // No rounding occurred anywhere in the expression.
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

impl Add for Filtered {
    type Output = Filtered;
    fn add(self, o: Filtered) -> Filtered {
        let val = self.val + o.val;
        let err = (self.err + o.err + U * val.abs()) * SLACK;
        Filtered { val, err }
    }
}

impl Sub for Filtered {
    type Output = Filtered;
    fn sub(self, o: Filtered) -> Filtered {
        let val = self.val - o.val;
        let err = (self.err + o.err + U * val.abs()) * SLACK;
        Filtered { val, err }
    }
}

impl Mul for Filtered {
    type Output = Filtered;
    fn mul(self, o: Filtered) -> Filtered {
        let val = self.val * o.val;
        let err = (self.err * o.val.abs()
            + o.err * self.val.abs()
            + self.err * o.err
            + U * val.abs()
            + TINY)
            * SLACK;
        Filtered { val, err }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certifies_clear_signs() {
        let a = Filtered::exact(1.0);
        let b = Filtered::exact(3.0);
        assert_eq!((a * b - a).sign(), Some(Ordering::Greater));
        assert_eq!((a - a * b).sign(), Some(Ordering::Less));
    }

    #[test]
    fn exact_zero_from_pure_subtraction() {
        let a = Filtered::exact(0.125);
        assert_eq!((a - a).sign(), Some(Ordering::Equal));
    }

    #[test]
    fn ambiguous_products_are_uncertain() {
        // 0.1 * 0.3 - 0.3 * 0.1 is zero in both exact and rounded arithmetic,
        // but products carry rounding error, so the filter must not certify.
        let a = Filtered::exact(0.1);
        let b = Filtered::exact(0.3);
        assert_eq!((a * b - b * a).sign(), None);
    }
}
