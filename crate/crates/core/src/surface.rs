//! The two-dimensional variety
//! `v^4 w^3 = u (u + D^2 w) (u + D^2 T^4 w) (u^2 - D^4 T^4 w^2)^2`
//! fibered over the line by `T`, and the maps connecting it to the curve:
//! the constant-fiber embedding, the fourth-point transform pairing each
//! curve point with a partner of complementary ratio, the forward map from
//! point pairs, and its inverse.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::elliptic::{Curve, CurvePoint};
use crate::error::{Error, Result};
use crate::proj;
use crate::rational::Rational;

/// A point `((u:v:w), T)`: a canonical primitive integer triple together
/// with an exact rational fiber coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfacePoint {
    u: BigInt,
    v: BigInt,
    w: BigInt,
    t: Rational,
}

impl SurfacePoint {
    pub fn new(u: BigInt, v: BigInt, w: BigInt, t: Rational) -> Result<Self> {
        let [u, v, w] = proj::canonicalize(u, v, w)?;
        Ok(SurfacePoint { u, v, w, t })
    }

    pub fn u(&self) -> &BigInt {
        &self.u
    }

    pub fn v(&self) -> &BigInt {
        &self.v
    }

    pub fn w(&self) -> &BigInt {
        &self.w
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }
}

impl fmt::Display for SurfacePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}:{}:{}), {})", self.u, self.v, self.w, self.t)
    }
}

/// Exact check of the defining equation, evaluated over the rationals.
pub fn on_surface(curve: &Curve, s: &SurfacePoint) -> bool {
    let d2 = curve.d().square();
    let d4t4 = d2.square() * s.t.powu(4);
    let u = Rational::from_integer(s.u.clone());
    let v = Rational::from_integer(s.v.clone());
    let w = Rational::from_integer(s.w.clone());
    let lhs = v.powu(4) * w.powu(3);
    let core = u.square() - &d4t4 * w.square();
    let rhs = &u * (&u + &d2 * &w) * (&u + d2 * s.t.powu(4) * &w) * core.square();
    lhs == rhs
}

/// The embedding `(X:Y:Z) -> ((X^2 Z : (X^2 + D^2 Z^2) Y : Z^3), 1)`. The
/// fiber coordinate of the image is always exactly 1.
pub fn embed(curve: &Curve, p: &CurvePoint) -> Result<SurfacePoint> {
    curve.require_on_curve(p)?;
    if p.is_identity() {
        return Err(Error::DegenerateImage("the identity has no surface image"));
    }
    let (s, t) = (curve.d().numer(), curve.d().denom());
    let t2 = t * t;
    let (x, y, z) = p.coords();
    let u = &t2 * x * x * z;
    let v = (&t2 * x * x + s * s * z * z) * y;
    let w = &t2 * z * z * z;
    SurfacePoint::new(u, v, w, Rational::one())
}

/// The partner map `(X:Y:Z) -> (D (X^2 - D^2 Z^2) : 2 D^2 Y Z : -(X + D Z)^2)`.
/// The image satisfies `(Y/X) * (Y'/X') = 2 D` exactly.
pub fn fourth_point_transform(curve: &Curve, p: &CurvePoint) -> Result<CurvePoint> {
    curve.require_on_curve(p)?;
    let (s, t) = (curve.d().numer(), curve.d().denom());
    let (x, y, z) = p.coords();
    // the whole image collapses where X + D Z = 0
    let pole = t * x + s * z;
    if pole.is_zero() {
        return Err(Error::DegenerateImage("X + D*Z = 0"));
    }
    // cleared of D's denominator by scaling with t^3
    let xp = s * (t * t * x * x - s * s * z * z);
    let yp = BigInt::from(2) * s * s * t * y * z;
    let zp = -(t * &pole * &pole);
    CurvePoint::new(xp, yp, zp)
}

fn rational_coords(p: &CurvePoint) -> (Rational, Rational, Rational) {
    let (x, y, z) = p.coords();
    (
        Rational::from_integer(x.clone()),
        Rational::from_integer(y.clone()),
        Rational::from_integer(z.clone()),
    )
}

/// The forward map from a pair of curve points to a surface point, with
/// fiber coordinate `T = 2 D (X/Y) (X'/Y')`.
pub fn forward_map(curve: &Curve, p: &CurvePoint, q: &CurvePoint) -> Result<SurfacePoint> {
    curve.require_on_curve(p)?;
    curve.require_on_curve(q)?;
    for r in [p, q] {
        let (x, y, z) = r.coords();
        if x.is_zero() || y.is_zero() || z.is_zero() {
            return Err(Error::DegenerateImage("torsion input to the forward map"));
        }
    }
    let d = curve.d();
    let d2 = d.square();
    let (x, y, z) = rational_coords(p);
    let (xp, yp, zp) = rational_coords(q);
    let a = x.square() - &d2 * z.square();
    let ap = xp.square() - &d2 * zp.square();
    let sum = &xp + d * &zp;
    let diff = &xp - d * &zp;
    let u = -(Rational::from(4) * d.powu(3) * x.square() * &xp * &yp * &zp * &a * &ap);
    let v = Rational::from(8)
        * d.powu(5)
        * x.square()
        * xp.square()
        * &zp
        * (&d2 * z.square() * sum.square() - x.square() * diff.square());
    let w = &yp * a.square() * &diff * sum.powu(3);
    let t = Rational::from(2) * d * (&x / &y) * (&xp / &yp);
    let [u, v, w] = proj::clear_denominators(&u, &v, &w)?;
    SurfacePoint::new(u, v, w, t)
}

/// The inverse map: recovers a pair of curve points from a surface point.
/// The recovered ratios satisfy `(Y/X) * (Y'/X') = 2 D / T` exactly.
pub fn inverse_map(curve: &Curve, s: &SurfacePoint) -> Result<(CurvePoint, CurvePoint)> {
    if !on_surface(curve, s) {
        return Err(Error::NotOnSurface(s.to_string()));
    }
    if s.w.is_zero() {
        return Err(Error::DegenerateLocus("w"));
    }
    if s.v.is_zero() {
        return Err(Error::DegenerateLocus("v"));
    }
    if s.t.is_zero() {
        return Err(Error::DegenerateLocus("T"));
    }
    let d = curve.d();
    let d2 = d.square();
    let u = Rational::from_integer(s.u.clone());
    let v = Rational::from_integer(s.v.clone());
    let w = Rational::from_integer(s.w.clone());
    let t = &s.t;
    // u^2 - D^4 T^4 w^2, the factor every component divides by
    let core = u.square() - d2.square() * t.powu(4) * w.square();
    if core.is_zero() {
        return Err(Error::DegenerateLocus("u^2 - D^4*T^4*w^2"));
    }
    let x1 = t * v.square() * &w;
    let y1 = &v * &core;
    let z1 = t.powu(3) * (&u + &d2 * &w) * &core;
    let bracket = Rational::from(2) * d * v.square() * w.square()
        - &core
            * (u.square() + Rational::from(2) * &d2 * &u * &w + d2.square() * t.powu(4) * w.square());
    let x2 = d * w.square() * &core * &bracket;
    let y2 = Rational::from(2) * &d2 * &v * w.powu(3) * &bracket;
    let z2 = w.square() * core.powu(3);
    let [x1, y1, z1] = proj::clear_denominators(&x1, &y1, &z1)?;
    let [x2, y2, z2] = proj::clear_denominators(&x2, &y2, &z2)?;
    let first = CurvePoint::new(x1, y1, z1)?;
    let second = CurvePoint::new(x2, y2, z2)?;
    debug_assert!(curve.contains(&first) && curve.contains(&second));
    Ok((first, second))
}
