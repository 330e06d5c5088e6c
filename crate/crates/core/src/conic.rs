//! The hyperbola `a*x*y + b*x + c*y + d = 0`.
//!
//! A [`Conic`] requires `a != 0` and `a*d - b*c != 0`; it carries the derived
//! curve parameter `D = (a*d - b*c) / (2*a^2)`. Affine points are represented
//! by [`ConicPoint`], which is only constructible through [`Conic::point`] so
//! that membership and the asymptote exclusions `a*x + c != 0`,
//! `a*y + b != 0` hold by construction.

use crate::elliptic::Curve;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conic {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
    curve_d: Rational,
}

impl Conic {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::NotAHyperbola);
        }
        let det = &a * &d - &b * &c;
        if det.is_zero() {
            return Err(Error::DegenerateConic);
        }
        let curve_d = &det / (Rational::from(2) * &a * &a);
        Ok(Conic { a, b, c, d, curve_d })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    /// The parameter `D = (a*d - b*c) / (2*a^2)` of the associated curve
    /// `Y^2 Z = X^3 - D^2 X Z^2`.
    pub fn curve_d(&self) -> &Rational {
        &self.curve_d
    }

    /// The associated curve itself.
    pub fn curve(&self) -> Curve {
        Curve::new(self.curve_d.clone()).expect("conic invariant guarantees D != 0")
    }

    pub fn ad_minus_bc(&self) -> Rational {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Exact membership test for the defining polynomial.
    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        (&self.a * x * y + &self.b * x + &self.c * y + &self.d).is_zero()
    }

    /// Solve the defining equation for y: `y = -(b*x + d) / (a*x + c)`.
    pub fn y_from_x(&self, x: &Rational) -> Result<Rational> {
        let den = &self.a * x + &self.c;
        if den.is_zero() {
            return Err(Error::OnAsymptote("a*x + c"));
        }
        Ok(-(&self.b * x + &self.d) / den)
    }

    /// Slope of the chord through the conic points above `x_i` and `x_j`:
    /// `(a*d - b*c) / ((a*x_i + c) * (a*x_j + c))`. At `x_i == x_j` this is
    /// the tangent slope.
    pub fn chord_slope(&self, x_i: &Rational, x_j: &Rational) -> Result<Rational> {
        let den_i = &self.a * x_i + &self.c;
        let den_j = &self.a * x_j + &self.c;
        if den_i.is_zero() || den_j.is_zero() {
            return Err(Error::OnAsymptote("a*x + c"));
        }
        Ok(self.ad_minus_bc() / (den_i * den_j))
    }

    /// Validating constructor for affine points on this conic.
    pub fn point(&self, x: Rational, y: Rational) -> Result<ConicPoint> {
        if !self.contains(&x, &y) {
            return Err(Error::OffConic {
                x: Box::new(x),
                y: Box::new(y),
            });
        }
        if (&self.a * &x + &self.c).is_zero() {
            return Err(Error::OnAsymptote("a*x + c"));
        }
        if (&self.a * &y + &self.b).is_zero() {
            return Err(Error::OnAsymptote("a*y + b"));
        }
        Ok(ConicPoint { x, y })
    }
}

/// An affine rational point on a [`Conic`], off both asymptotes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ConicPoint {
    x: Rational,
    y: Rational,
}

impl ConicPoint {
    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn coords(&self) -> (Rational, Rational) {
        (self.x.clone(), self.y.clone())
    }
}

impl std::fmt::Display for ConicPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Points on the line `a*x + b*y = c` with `a = 2r/(r^2+1)`,
/// `b = (r^2-1)/(r^2+1)`, parametrized so that the distance between the
/// points for parameters `s` and `t` is exactly `|s - t|`. Test fixture for
/// the distance verifier.
pub fn classic_line(r: &Rational, c: &Rational, ts: &[Rational]) -> Vec<(Rational, Rational)> {
    let r2p1 = r.square() + Rational::one();
    let a = (Rational::from(2) * r) / &r2p1;
    let b = (r.square() - Rational::one()) / &r2p1;
    ts.iter()
        .map(|t| (&a * c - &b * t, &b * c + &a * t))
        .collect()
}

/// Points on the circle `(x-h)^2 + (y-k)^2 = r^2` parametrized so that the
/// distance between the points for `s` and `t` is
/// `|4 (s-t) (s t + 1) / ((s^2+1) (t^2+1))| * r`. Test fixture for the
/// distance verifier.
pub fn classic_circle(
    center: (&Rational, &Rational),
    radius: &Rational,
    ts: &[Rational],
) -> Vec<(Rational, Rational)> {
    let (h, k) = center;
    let one = Rational::one();
    let six = Rational::from(6);
    let four = Rational::from(4);
    ts.iter()
        .map(|t| {
            let t2 = t.square();
            let den = (&t2 + &one).square();
            let x = h + (t2.square() - &six * &t2 + &one) / &den * radius;
            let y = k + &four * (t * &t2 - t) / &den * radius;
            (x, y)
        })
        .collect()
}
