//! Ford circles, horocircles and the tangency geometry between them.
//!
//! Only base points and radii are carried: a horocircle with base `x` and
//! radius `r` has centre `(x, r)`, so every question about two of them
//! reduces to `|x − y|²` versus `4rs`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::real::{CfStream, RealNumber};

/// The Ford circle `C_x` of `x = a/b`: base `x`, radius `1/(2b²)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FordCircle {
    base: Rational,
    radius: Rational,
}

impl FordCircle {
    pub fn new(base: Rational) -> Self {
        let b = base.denom();
        let radius = Rational::new(1, b * b * 2u32).expect("positive denominator");
        FordCircle { base, radius }
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    pub fn radius(&self) -> &Rational {
        &self.radius
    }

    /// `b` for the base `a/b`.
    pub fn den(&self) -> &BigInt {
        self.base.denom()
    }

    /// Centre as `(x, y)` in the upper half-plane.
    pub fn center(&self) -> (Rational, Rational) {
        (self.base.clone(), self.radius.clone())
    }
}

pub fn ford_circle(x: &Rational) -> FordCircle {
    FordCircle::new(x.clone())
}

/// Radius of a horocircle based at a real point.
///
/// When the base point is a stream the radius has the form
/// `scale · (α − center)²` and is only ever compared, never evaluated.
#[derive(Clone, Debug)]
pub enum HoroRadius {
    Exact(Rational),
    Quadratic {
        scale: Rational,
        center: Rational,
        at: CfStream,
    },
}

impl HoroRadius {
    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            HoroRadius::Exact(r) => Some(r),
            HoroRadius::Quadratic { .. } => None,
        }
    }

    /// A quadratic radius vanishes only at `α = center`, which is impossible
    /// for an irrational `α`.
    pub fn is_zero(&self) -> bool {
        matches!(self, HoroRadius::Exact(r) if r.is_zero())
    }

    pub fn compare(&self, other: &HoroRadius) -> Result<Ordering> {
        use HoroRadius::{Exact, Quadratic};
        match (self, other) {
            (Exact(r), Exact(s)) => Ok(r.cmp(s)),
            (Exact(r), Quadratic { scale, center, at }) => {
                // r − scale·(t − center)²
                let two = BigInt::from(2);
                let c2 = -scale;
                let c1 = scale.mul_int(&two) * center;
                let c0 = r - &(scale * &center.square());
                RealNumber::Stream(at.clone()).sign_of_quadratic(&c2, &c1, &c0)
            }
            (Quadratic { .. }, Exact(_)) => Ok(other.compare(self)?.reverse()),
            (
                Quadratic { scale: s1, center: x1, at: a1 },
                Quadratic { scale: s2, center: x2, at: a2 },
            ) => {
                if !a1.same_point(a2) {
                    return Err(Error::Incomparable);
                }
                // s1·(t − x1)² − s2·(t − x2)²
                let two = BigInt::from(2);
                let c2 = s1 - s2;
                let c1 = -((s1 * x1) - (s2 * x2)).mul_int(&two);
                let c0 = s1 * &x1.square() - s2 * &x2.square();
                RealNumber::Stream(a1.clone()).sign_of_quadratic(&c2, &c1, &c0)
            }
        }
    }
}

/// A circle tangent to the real axis at `base`, otherwise in the upper
/// half-plane. Radius zero is the degenerate point circle.
#[derive(Clone, Debug)]
pub struct Horocircle {
    pub base: RealNumber,
    pub radius: HoroRadius,
}

fn ensure_distinct(x: &Rational, y: &Rational) -> Result<()> {
    if x == y {
        Err(Error::IdenticalCircles)
    } else {
        Ok(())
    }
}

/// `|ad − bc|` for `x = a/b`, `y = c/d`.
fn determinant(x: &Rational, y: &Rational) -> BigInt {
    (x.numer() * y.denom() - x.denom() * y.numer()).abs()
}

/// `C_x` and `C_y` touch iff `|ad − bc| = 1`.
pub fn are_tangent(x: &Rational, y: &Rational) -> Result<bool> {
    ensure_distinct(x, y)?;
    Ok(determinant(x, y).is_one())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GapRelation {
    TangentEquality,
    StrictlyApart,
}

/// `|x − y|² − 4rs` for horocircles with bases `x`, `y` and radii `r`, `s`.
/// Non-negative exactly when they meet in at most one point, zero exactly
/// when they are tangent.
pub fn horocircle_gap(x: &Rational, r: &Rational, y: &Rational, s: &Rational) -> Rational {
    let four = BigInt::from(4);
    (x - y).square() - (r * s).mul_int(&four)
}

/// Classifies the gap between two Ford circles.
///
/// # Panics
///
/// On a negative gap, which would mean two Ford circles overlap.
pub fn gap_relation(x: &Rational, y: &Rational) -> Result<GapRelation> {
    ensure_distinct(x, y)?;
    let (cx, cy) = (ford_circle(x), ford_circle(y));
    let gap = horocircle_gap(x, cx.radius(), y, cy.radius());
    match gap.signum() {
        Ordering::Equal => Ok(GapRelation::TangentEquality),
        Ordering::Greater => Ok(GapRelation::StrictlyApart),
        Ordering::Less => panic!("Ford circles at {x} and {y} overlap (gap {gap})"),
    }
}

/// Radius `½(bα − a)²` of the horocircle based at `α` tangent to `C_{a/b}`.
pub fn tangent_horocircle_radius(alpha: &RealNumber, x: &Rational) -> HoroRadius {
    let half_b_sq = Rational::new(x.denom() * x.denom(), 2).expect("nonzero");
    match alpha {
        RealNumber::Rational(t) => HoroRadius::Exact(half_b_sq * (t - x).square()),
        RealNumber::Stream(s) => HoroRadius::Quadratic {
            scale: half_b_sq,
            center: x.clone(),
            at: s.clone(),
        },
    }
}

pub fn tangent_horocircle(alpha: &RealNumber, x: &Rational) -> Horocircle {
    Horocircle {
        base: alpha.clone(),
        radius: tangent_horocircle_radius(alpha, x),
    }
}

/// Radius `|base − z|² / (4r)` of the horocircle based at `z` tangent to the
/// horocircle `(base, r)`.
pub fn generic_tangent_radius(base: &RealNumber, radius: &Rational, z: &RealNumber) -> Result<HoroRadius> {
    if !radius.is_positive() {
        return Err(Error::NonPositiveRadius);
    }
    let scale = Rational::new(radius.denom().clone(), radius.numer() * 4u32)?;
    match (base, z) {
        (RealNumber::Rational(x), RealNumber::Rational(t)) => Ok(HoroRadius::Exact(scale * (x - t).square())),
        (RealNumber::Rational(x), RealNumber::Stream(s)) | (RealNumber::Stream(s), RealNumber::Rational(x)) => {
            Ok(HoroRadius::Quadratic {
                scale,
                center: x.clone(),
                at: s.clone(),
            })
        }
        (RealNumber::Stream(s), RealNumber::Stream(t)) => {
            if s.same_point(t) {
                Ok(HoroRadius::Exact(Rational::zero()))
            } else {
                Err(Error::Incomparable)
            }
        }
    }
}

/// For tangent `C_x`, `C_y` and a rational `z` strictly between `x` and `y`,
/// reports whether `C_z` is smaller than both.
pub fn lemma_x_check(x: &Rational, y: &Rational, z: &Rational) -> Result<bool> {
    if x == y || !are_tangent(x, y)? {
        return Err(Error::NotBetweenTangent);
    }
    if !RealNumber::Rational(z.clone()).strictly_between(x, y)? {
        return Err(Error::NotBetweenTangent);
    }
    let rz = ford_circle(z).radius;
    Ok(rz < ford_circle(x).radius && rz < ford_circle(y).radius)
}

/// For tangent `C_x`, `C_y` with `C_x` the larger, `α` strictly between `x`
/// and `y`, and `z` outside the closed interval, reports whether the
/// horocircle at `α` tangent to `C_x` is smaller than the one tangent to `C_z`.
pub fn lemma_q_check(x: &Rational, y: &Rational, alpha: &RealNumber, z: &Rational) -> Result<bool> {
    if x == y || !are_tangent(x, y)? || ford_circle(x).radius <= ford_circle(y).radius {
        return Err(Error::ConfigurationMismatch);
    }
    if !alpha.strictly_between(x, y)? {
        return Err(Error::ConfigurationMismatch);
    }
    let (lo, hi) = if x < y { (x, y) } else { (y, x) };
    if lo <= z && z <= hi {
        return Err(Error::ConfigurationMismatch);
    }
    let sx = tangent_horocircle_radius(alpha, x);
    let sz = tangent_horocircle_radius(alpha, z);
    Ok(sx.compare(&sz)? == Ordering::Less)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::{golden_ratio, sqrt_real};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn q(n: i64, d: i64) -> RealNumber {
        RealNumber::Rational(r(n, d))
    }

    fn exact(h: HoroRadius) -> Rational {
        h.as_exact().cloned().expect("exact radius")
    }

    #[test]
    fn ford_circle_examples() {
        assert_eq!(ford_circle(&r(1, 2)).radius(), &r(1, 8));
        assert_eq!(ford_circle(&r(0, 1)).radius(), &r(1, 2));
        assert_eq!(ford_circle(&r(3, 5)).radius(), &r(1, 50));
        assert_eq!(ford_circle(&r(3, 5)).center(), (r(3, 5), r(1, 50)));
    }

    #[test]
    fn tangency_examples() {
        assert!(are_tangent(&r(0, 1), &r(1, 1)).unwrap());
        assert!(are_tangent(&r(1, 2), &r(2, 3)).unwrap());
        assert!(are_tangent(&r(1, 2), &r(3, 5)).unwrap());
        assert!(!are_tangent(&r(1, 3), &r(3, 5)).unwrap());
        assert_eq!(are_tangent(&r(1, 3), &r(1, 3)), Err(Error::IdenticalCircles));
    }

    #[test]
    fn gap_examples() {
        assert_eq!(gap_relation(&r(0, 1), &r(1, 1)).unwrap(), GapRelation::TangentEquality);
        assert_eq!(gap_relation(&r(1, 3), &r(3, 5)).unwrap(), GapRelation::StrictlyApart);
        assert_eq!(gap_relation(&r(1, 2), &r(2, 3)).unwrap(), GapRelation::TangentEquality);
        assert_eq!(gap_relation(&r(2, 3), &r(2, 3)), Err(Error::IdenticalCircles));
        // (4/15)² − 4·(1/18)·(1/50) = 16/225 − 1/225
        assert_eq!(horocircle_gap(&r(1, 3), &r(1, 18), &r(3, 5), &r(1, 50)), r(15, 225));
        // Two overlapping horocircles give a negative gap.
        assert!(horocircle_gap(&r(0, 1), &r(1, 1), &r(1, 1), &r(1, 1)).is_negative());
    }

    #[test]
    fn tangent_radius_examples() {
        assert_eq!(exact(tangent_horocircle_radius(&q(1, 3), &r(1, 2))), r(1, 18));
        assert!(tangent_horocircle_radius(&q(1, 2), &r(1, 2)).is_zero());
        assert_eq!(exact(tangent_horocircle_radius(&q(3, 5), &r(1, 2))), r(1, 50));
        assert!(!tangent_horocircle_radius(&golden_ratio(), &r(8, 5)).is_zero());
    }

    #[test]
    fn generic_radius_examples() {
        let g = |b: RealNumber, rad: Rational, z: RealNumber| exact(generic_tangent_radius(&b, &rad, &z).unwrap());
        assert_eq!(g(q(0, 1), r(1, 2), q(1, 1)), r(1, 2));
        assert_eq!(g(q(2, 7), r(1, 9), q(2, 7)), r(0, 1));
        assert_eq!(g(q(1, 2), r(1, 8), q(1, 3)), r(1, 18));
        assert_eq!(
            generic_tangent_radius(&q(0, 1), &r(0, 1), &q(1, 1)).unwrap_err(),
            Error::NonPositiveRadius
        );
        let phi = golden_ratio();
        assert!(generic_tangent_radius(&phi, &r(1, 2), &phi).unwrap().is_zero());
        assert_eq!(
            generic_tangent_radius(&phi, &r(1, 2), &sqrt_real(2).unwrap()).unwrap_err(),
            Error::Incomparable
        );
    }

    #[test]
    fn generic_radius_matches_ford_radius_for_streams() {
        let phi = golden_ratio();
        for x in [r(3, 2), r(8, 5), r(7, 4), r(-1, 3)] {
            let ford = tangent_horocircle_radius(&phi, &x);
            let generic =
                generic_tangent_radius(&RealNumber::Rational(x.clone()), ford_circle(&x).radius(), &phi).unwrap();
            assert_eq!(ford.compare(&generic).unwrap(), Ordering::Equal, "{x}");
        }
    }

    #[test]
    fn quadratic_radii_compare_against_exact() {
        // ½(2φ − 3)² = ½(0.236…)² ≈ 0.0279
        let rad = tangent_horocircle_radius(&golden_ratio(), &r(3, 2));
        assert_eq!(rad.compare(&HoroRadius::Exact(r(1, 40))).unwrap(), Ordering::Greater);
        assert_eq!(rad.compare(&HoroRadius::Exact(r(1, 30))).unwrap(), Ordering::Less);
        assert_eq!(HoroRadius::Exact(r(1, 30)).compare(&rad).unwrap(), Ordering::Greater);
    }

    #[test]
    fn between_tangent_examples() {
        assert!(lemma_x_check(&r(1, 2), &r(2, 3), &r(3, 5)).unwrap());
        assert!(lemma_x_check(&r(0, 1), &r(1, 1), &r(1, 2)).unwrap());
        assert!(lemma_x_check(&r(0, 1), &r(1, 1), &r(2, 5)).unwrap());
        assert_eq!(lemma_x_check(&r(1, 3), &r(3, 5), &r(1, 2)), Err(Error::NotBetweenTangent));
        assert_eq!(lemma_x_check(&r(0, 1), &r(1, 1), &r(3, 2)), Err(Error::NotBetweenTangent));
    }

    #[test]
    fn bracketing_radius_examples() {
        assert!(lemma_q_check(&r(1, 2), &r(2, 3), &q(3, 5), &r(1, 1)).unwrap());
        assert!(lemma_q_check(&r(1, 2), &r(2, 3), &q(3, 5), &r(0, 1)).unwrap());
        assert!(lemma_q_check(&r(0, 1), &r(1, 2), &q(1, 3), &r(1, 1)).unwrap());
        // Irrational α = √2 − 1 sits in (2/5, 1/2): x = 1/2 is the larger circle.
        let s2m1 = "cf:0;(2)".parse::<RealNumber>().unwrap();
        assert!(lemma_q_check(&r(1, 2), &r(2, 5), &s2m1, &r(0, 1)).unwrap());
        // Wrong radius order, α outside, z inside.
        assert_eq!(
            lemma_q_check(&r(2, 3), &r(1, 2), &q(3, 5), &r(1, 1)),
            Err(Error::ConfigurationMismatch)
        );
        assert_eq!(
            lemma_q_check(&r(1, 2), &r(2, 3), &q(3, 4), &r(1, 1)),
            Err(Error::ConfigurationMismatch)
        );
        assert_eq!(
            lemma_q_check(&r(1, 2), &r(2, 3), &q(3, 5), &r(2, 3)),
            Err(Error::ConfigurationMismatch)
        );
    }
}
