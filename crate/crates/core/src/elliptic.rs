//! Projective arithmetic on the curve `Y^2 Z = X^3 - D^2 X Z^2`.
//!
//! Points are stored as primitive integer triples with a fixed sign
//! convention, so each projective class has a unique representative and
//! equality is structural. The group law is the chord-tangent construction,
//! evaluated in exact rational arithmetic with every coincidence case handled
//! explicitly. For rational `D = p/q` the bounded point search works in the
//! cleared-denominator integer model `D' = p*q` (via `(X, Y) -> (q^2 X,
//! q^3 Y)`) and maps results back, so enumeration and perfect-square
//! detection stay integral.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::proj;
use crate::rational::{Rational, integer_sqrt};

/// Default naive-height bound for [`Curve::find_points`].
pub const DEFAULT_HEIGHT_BOUND: u64 = 1_000_000;
/// Default bound on `e` in abscissae `x = m / e^2`.
pub const DEFAULT_DENOM_BOUND: u32 = 8;

/// The curve `Y^2 Z = X^3 - D^2 X Z^2` for a nonzero rational `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    d: Rational,
}

/// Sign choice of the curve involution `(X:Y:Z) -> (-D^2 X Z : ±D^2 Y Z : X^2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvolutionSign {
    Plus,
    Minus,
}

/// A projective point in canonical primitive form: integer coordinates with
/// gcd 1, `Z > 0` for finite points, and `(0:1:0)` as the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurvePoint {
    x: BigInt,
    y: BigInt,
    z: BigInt,
}

impl CurvePoint {
    /// Canonicalizes an arbitrary integer triple; `(0, 0, 0)` is rejected.
    pub fn new(x: BigInt, y: BigInt, z: BigInt) -> Result<Self> {
        let [x, y, z] = proj::canonicalize(x, y, z)?;
        Ok(CurvePoint { x, y, z })
    }

    pub fn identity() -> Self {
        CurvePoint {
            x: BigInt::zero(),
            y: BigInt::one(),
            z: BigInt::zero(),
        }
    }

    /// Canonical point for affine rational coordinates.
    pub fn from_affine(x: &Rational, y: &Rational) -> Self {
        let l = x.denom().lcm(y.denom());
        let xi = x.numer() * (&l / x.denom());
        let yi = y.numer() * (&l / y.denom());
        CurvePoint::new(xi, yi, l).expect("affine points have z >= 1")
    }

    pub fn is_identity(&self) -> bool {
        self.z.is_zero() && self.x.is_zero()
    }

    pub fn coords(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.x, &self.y, &self.z)
    }

    /// Affine coordinates `(X/Z, Y/Z)`; `None` for the identity.
    pub fn affine(&self) -> Option<(Rational, Rational)> {
        if self.z.is_zero() {
            return None;
        }
        let x = Rational::new(self.x.clone(), self.z.clone()).expect("z != 0");
        let y = Rational::new(self.y.clone(), self.z.clone()).expect("z != 0");
        Some((x, y))
    }

    /// The ratio `Y/X`; `None` when `X = 0`.
    pub fn xy_ratio(&self) -> Option<Rational> {
        if self.x.is_zero() {
            return None;
        }
        Some(Rational::new(self.y.clone(), self.x.clone()).expect("x != 0"))
    }

    fn negated(&self) -> CurvePoint {
        CurvePoint::new(self.x.clone(), -&self.y, self.z.clone()).expect("nonzero triple")
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.x, self.y, self.z)
    }
}

impl fmt::Debug for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for CurvePoint {
    type Err = Error;

    /// Parses `X:Y:Z` with integer components.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid projective point '{s}'"));
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut coords = Vec::with_capacity(3);
        for part in parts {
            let digits = part.strip_prefix('-').unwrap_or(part);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            coords.push(part.parse::<BigInt>().map_err(|_| bad())?);
        }
        let z = coords.pop().unwrap();
        let y = coords.pop().unwrap();
        let x = coords.pop().unwrap();
        CurvePoint::new(x, y, z)
    }
}

impl Curve {
    pub fn new(d: Rational) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroCurveParameter);
        }
        Ok(Curve { d })
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    /// Exact membership test of the homogeneous cubic. With `D = s/t` the
    /// equation is checked in the integral form
    /// `t^2 Y^2 Z = t^2 X^3 - s^2 X Z^2`.
    pub fn contains(&self, p: &CurvePoint) -> bool {
        let (s, t) = (self.d.numer(), self.d.denom());
        let t2 = t * t;
        let (x, y, z) = (&p.x, &p.y, &p.z);
        &t2 * y * y * z == &t2 * x * x * x - s * s * x * z * z
    }

    pub(crate) fn require_on_curve(&self, p: &CurvePoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve(p.to_string()))
        }
    }

    /// Group addition. The identity is `(0:1:0)`; the result is canonical
    /// and on the curve.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.require_on_curve(p)?;
        self.require_on_curve(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        if p.is_identity() {
            return q.clone();
        }
        if q.is_identity() {
            return p.clone();
        }
        let (x1, y1) = p.affine().expect("finite point");
        let (x2, y2) = q.affine().expect("finite point");
        let lambda = if x1 == x2 {
            if y1 == -&y2 {
                // opposite points, and doubling of a two-torsion point
                return CurvePoint::identity();
            }
            // tangent slope; y1 == y2 != 0 since x determines y up to sign
            (Rational::from(3) * x1.square() - self.d.square())
                / (Rational::from(2) * &y1)
        } else {
            (&y2 - &y1) / (&x2 - &x1)
        };
        let x3 = lambda.square() - &x1 - &x2;
        let y3 = lambda * (&x1 - &x3) - y1;
        CurvePoint::from_affine(&x3, &y3)
    }

    pub fn neg(&self, p: &CurvePoint) -> Result<CurvePoint> {
        self.require_on_curve(p)?;
        Ok(p.negated())
    }

    /// `k`-fold sum by double-and-add; `0 * P` is the identity and
    /// `(-k) * P = -(k * P)`.
    pub fn scalar_mul(&self, k: i64, p: &CurvePoint) -> Result<CurvePoint> {
        self.require_on_curve(p)?;
        Ok(self.scalar_mul_unchecked(k, p))
    }

    fn scalar_mul_unchecked(&self, k: i64, p: &CurvePoint) -> CurvePoint {
        if k == 0 {
            return CurvePoint::identity();
        }
        let magnitude = k.unsigned_abs();
        let mut acc = CurvePoint::identity();
        for bit in (0..u64::BITS - magnitude.leading_zeros()).rev() {
            acc = self.add_unchecked(&acc, &acc);
            if (magnitude >> bit) & 1 == 1 {
                acc = self.add_unchecked(&acc, p);
            }
        }
        if k < 0 { acc.negated() } else { acc }
    }

    /// Finite-order test. Structurally, torsion is exactly the locus
    /// `Y * Z = 0` (the identity and the three points with `Y = 0`); a
    /// multiple check up to the uniform bound 12 guards the remaining
    /// points. Torsion points are integral on the cleared-denominator model
    /// `y^2 = x^3 - (pq)^2 x` with `|x| <= 5 (pq)^2 + 2 |pq|`, so points
    /// beyond that bound have infinite order and skip the multiple check.
    pub fn is_torsion(&self, p: &CurvePoint) -> Result<bool> {
        self.require_on_curve(p)?;
        if p.y.is_zero() || p.z.is_zero() {
            return Ok(true);
        }
        let (s, t) = (self.d.numer(), self.d.denom());
        let model_d = s * t;
        let x_scaled = t * t * &p.x; // the integer-model abscissa times Z
        if !(&x_scaled % &p.z).is_zero() {
            return Ok(false);
        }
        let x_model = x_scaled / &p.z;
        let height_bound = BigInt::from(5) * &model_d * &model_d + BigInt::from(2) * model_d.abs();
        if x_model.magnitude() > height_bound.magnitude() {
            return Ok(false);
        }
        for m in 2..=12 {
            if self.scalar_mul_unchecked(m, p).is_identity() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The involution `(X:Y:Z) -> (-D^2 X Z : ±D^2 Y Z : X^2)`, which negates
    /// the ratio `Y/X` up to the chosen sign.
    pub fn involution(&self, p: &CurvePoint, sign: InvolutionSign) -> Result<CurvePoint> {
        self.require_on_curve(p)?;
        if p.x.is_zero() || p.z.is_zero() {
            return Err(Error::DegenerateImage("involution undefined where X*Z = 0"));
        }
        let (s, t) = (self.d.numer(), self.d.denom());
        let s2 = s * s;
        let x = -(&s2 * &p.x * &p.z);
        let mut y = &s2 * &p.y * &p.z;
        if sign == InvolutionSign::Minus {
            y = -y;
        }
        let z = t * t * &p.x * &p.x;
        CurvePoint::new(x, y, z)
    }

    /// Enumerate rational points of naive height at most `height_bound`:
    /// abscissae `x = m / e^2` with `1 <= e <= denom_bound`,
    /// `|m| <= height_bound * e^2`, `gcd(m, e) = 1`, keeping those whose
    /// ordinate is rational. Output order is deterministic: by `e`, then `m`,
    /// then sign of the ordinate (positive first). For non-integral `D` the
    /// enumeration runs in the integer model and the bounds apply there.
    pub fn find_points(&self, height_bound: u64, denom_bound: u32) -> Vec<CurvePoint> {
        let denom_bound = denom_bound.max(1);
        let q = self.d.denom();
        let model_d = self.d.numer() * q;
        let q2 = q * q;
        let q3 = &q2 * q;
        let mut out = Vec::new();
        for found in search_integer_model(&model_d, height_bound, denom_bound) {
            let e = BigInt::from(found.e);
            let e2 = &e * &e;
            let x = Rational::new(found.m.clone(), e2 * &q2).expect("e > 0");
            let y_abs = Rational::new(
                BigInt::from(found.n.clone()),
                &e * &e * &e * &q3,
            )
            .expect("e > 0");
            if found.n.is_zero() {
                out.push(CurvePoint::from_affine(&x, &y_abs));
            } else {
                out.push(CurvePoint::from_affine(&x, &y_abs));
                out.push(CurvePoint::from_affine(&x, &-y_abs));
            }
        }
        out
    }
}

/// One abscissa `m / e^2` whose ordinate `±n / e^3` is rational.
struct Found {
    m: BigInt,
    n: BigUint,
    e: u64,
}

fn search_integer_model(d: &BigInt, height: u64, e_max: u32) -> Vec<Found> {
    let mut out = Vec::new();
    let fast = fast_path_applicable(d, height, e_max);
    for e in 1..=u64::from(e_max) {
        if fast {
            scan_fast(d.to_i128().expect("checked"), height, e, &mut out);
        } else {
            scan_big(d, height, e, &mut out);
        }
    }
    out
}

/// The i128 scan is used only when every intermediate value provably fits;
/// it is bit-identical to the big-integer scan.
fn fast_path_applicable(d: &BigInt, height: u64, e_max: u32) -> bool {
    if d.to_i64().is_none() {
        return false;
    }
    let m_max = BigInt::from(height) * BigInt::from(e_max) * BigInt::from(e_max);
    let e4 = BigInt::from(e_max).pow(4);
    let bound = m_max.pow(3u32) + d * d * &m_max * e4;
    bound < (BigInt::one() << 126)
}

fn scan_fast(d: i128, height: u64, e: u64, out: &mut Vec<Found>) {
    let e2 = (e as i128) * (e as i128);
    let c = d * d * e2 * e2;
    let m_max = height as i128 * e2;
    let mut m = -m_max;
    while m <= m_max {
        if num_integer::gcd(m.unsigned_abs(), e as u128) == 1 {
            let t = m * m * m - c * m;
            if t == 0 {
                out.push(Found {
                    m: m.into(),
                    n: BigUint::zero(),
                    e,
                });
            } else if t > 0
                && let Some(r) = exact_sqrt_u128(t as u128)
            {
                out.push(Found {
                    m: m.into(),
                    n: r.into(),
                    e,
                });
            }
        }
        m += 1;
    }
}

fn scan_big(d: &BigInt, height: u64, e: u64, out: &mut Vec<Found>) {
    let e_big = BigInt::from(e);
    let e2 = &e_big * &e_big;
    let c = d * d * &e2 * &e2;
    let m_max = BigInt::from(height) * &e2;
    let e_u = BigUint::from(e);
    let mut m = -&m_max;
    while m <= m_max {
        if m.magnitude().gcd(&e_u).is_one() {
            let t: BigInt = &m * &m * &m - &c * &m;
            if t.is_zero() {
                out.push(Found {
                    m: m.clone(),
                    n: BigUint::zero(),
                    e,
                });
            } else if t.is_positive()
                && let Some(r) = exact_sqrt_big(t.magnitude())
            {
                out.push(Found {
                    m: m.clone(),
                    n: r,
                    e,
                });
            }
        }
        m += 1;
    }
}

// Bit i of each mask is set iff i is a square modulo the respective modulus;
// together the four filters reject most non-squares before any root is taken.
const fn square_mask_u64(modulus: u32) -> u64 {
    let mut mask = 0u64;
    let mut i = 0;
    while i < modulus {
        mask |= 1 << ((i * i) % modulus);
        i += 1;
    }
    mask
}

const fn square_mask_u128(modulus: u32) -> u128 {
    let mut mask = 0u128;
    let mut i = 0;
    while i < modulus {
        mask |= 1 << ((i * i) % modulus);
        i += 1;
    }
    mask
}

const SQUARES_MOD_64: u64 = square_mask_u64(64);
const SQUARES_MOD_63: u64 = square_mask_u64(63);
const SQUARES_MOD_65: u128 = square_mask_u128(65);
const SQUARES_MOD_11: u64 = square_mask_u64(11);

fn passes_square_filters(m64: u64, m63: u64, m65: u64, m11: u64) -> bool {
    (SQUARES_MOD_64 >> m64) & 1 == 1
        && (SQUARES_MOD_63 >> m63) & 1 == 1
        && (SQUARES_MOD_65 >> m65) & 1 == 1
        && (SQUARES_MOD_11 >> m11) & 1 == 1
}

fn exact_sqrt_u128(t: u128) -> Option<u128> {
    if !passes_square_filters(
        (t % 64) as u64,
        (t % 63) as u64,
        (t % 65) as u64,
        (t % 11) as u64,
    ) {
        return None;
    }
    let r = t.isqrt();
    (r * r == t).then_some(r)
}

fn exact_sqrt_big(t: &BigUint) -> Option<BigUint> {
    let rem = |m: u32| (t % BigUint::from(m)).to_u64().expect("small modulus");
    if !passes_square_filters(rem(64), rem(63), rem(65), rem(11)) {
        return None;
    }
    let (root, exact) = integer_sqrt(t);
    exact.then_some(root)
}
