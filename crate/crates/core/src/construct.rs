//! Rational distance sets on a conic from families of curve points.
//!
//! A [`CompatibleSystem`] indexes one non-torsion curve point per unordered
//! pair of `{1..n}`; when the pairwise ratio products agree on every
//! quadruple of indices, the system realizes `n` points on the conic whose
//! pairwise distances are all rational. The irrational intermediates of the
//! underlying derivation are never materialized: every formula here is
//! written in terms of the rational ratios `Y/X`.

use std::collections::BTreeMap;

use crate::conic::{Conic, ConicPoint};
use crate::distance::{self, DistanceReport};
use crate::elliptic::{Curve, CurvePoint};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::surface;

/// A family of curve points indexed by unordered pairs `{i, j}` of
/// `{1..n}`, all pairs present.
#[derive(Clone, Debug)]
pub struct CompatibleSystem {
    n: usize,
    points: BTreeMap<(usize, usize), CurvePoint>,
}

/// Outcome of a compatibility check: the flag plus every violated quadruple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub compatible: bool,
    pub violations: Vec<[usize; 4]>,
}

fn pair_key(i: usize, j: usize) -> (usize, usize) {
    if i < j { (i, j) } else { (j, i) }
}

impl CompatibleSystem {
    pub fn new(n: usize, points: BTreeMap<(usize, usize), CurvePoint>) -> Result<Self> {
        if n < 3 {
            return Err(Error::MalformedSystem(format!(
                "n must be at least 3, got {n}"
            )));
        }
        for i in 1..=n {
            for j in (i + 1)..=n {
                if !points.contains_key(&(i, j)) {
                    return Err(Error::MissingPair(i, j));
                }
            }
        }
        let expected = n * (n - 1) / 2;
        if points.len() != expected {
            return Err(Error::MalformedSystem(format!(
                "expected {expected} pairs, found {}",
                points.len()
            )));
        }
        Ok(CompatibleSystem { n, points })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn point(&self, i: usize, j: usize) -> &CurvePoint {
        self.points
            .get(&pair_key(i, j))
            .expect("all pairs present by construction")
    }

    /// The ratio `Y/X` of the pair's curve point; `None` where `X = 0`.
    pub fn ratio(&self, i: usize, j: usize) -> Option<Rational> {
        self.point(i, j).xy_ratio()
    }

    /// Verifies that every stored point is on the curve and non-torsion,
    /// then checks the ratio-product relations on every index quadruple.
    pub fn check(&self, curve: &Curve) -> Result<CompatibilityReport> {
        for point in self.points.values() {
            if curve.is_torsion(point)? {
                return Err(Error::TorsionPoint(point.to_string()));
            }
        }
        let r = |i, j| self.ratio(i, j).expect("non-torsion points have X != 0");
        let mut violations = Vec::new();
        for p in 1..=self.n {
            for q in (p + 1)..=self.n {
                for s in (q + 1)..=self.n {
                    for t in (s + 1)..=self.n {
                        let m1 = r(p, q) * r(s, t);
                        let m2 = r(p, s) * r(q, t);
                        let m3 = r(p, t) * r(q, s);
                        if m1 != m2 || m2 != m3 {
                            violations.push([p, q, s, t]);
                        }
                    }
                }
            }
        }
        Ok(CompatibilityReport {
            compatible: violations.is_empty(),
            violations,
        })
    }
}

/// A verified rational distance set on a conic.
#[derive(Clone, Debug)]
pub struct RationalDistanceSet {
    conic: Conic,
    points: Vec<ConicPoint>,
    report: DistanceReport,
}

impl RationalDistanceSet {
    pub fn conic(&self) -> &Conic {
        &self.conic
    }

    pub fn points(&self) -> &[ConicPoint] {
        &self.points
    }

    pub fn report(&self) -> &DistanceReport {
        &self.report
    }

    /// Set when some of the generated points coincide.
    pub fn degenerate(&self) -> bool {
        self.report.degenerate
    }

    pub fn coords(&self) -> Vec<(Rational, Rational)> {
        self.points.iter().map(|p| p.coords()).collect()
    }
}

/// The `(i, j)` pairs admissible for computing point `t`: distinct indices,
/// both different from `t`, in deterministic order.
pub fn admissible_pairs(n: usize, t: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 1..=n {
        if i == t {
            continue;
        }
        for j in (i + 1)..=n {
            if j != t {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Coordinates of the conic point for index `t`, computed with the given
/// admissible pair: `x_t = 2 D n_ij / (n_it n_jt) - c/a` and
/// `y_t = -b/a - (n_it n_jt) / n_ij`. For a compatible system the result is
/// independent of the pair choice.
pub fn system_point_coords(
    conic: &Conic,
    system: &CompatibleSystem,
    t: usize,
    pair: (usize, usize),
) -> Result<(Rational, Rational)> {
    let n = system.n();
    let (i, j) = pair;
    if t == 0 || t > n || i == 0 || i > n || j == 0 || j > n || i == j || i == t || j == t {
        return Err(Error::MalformedSystem(format!(
            "pair ({i}, {j}) is not admissible for point {t} with n = {n}"
        )));
    }
    let ratio = |i, j| {
        system
            .ratio(i, j)
            .ok_or(Error::TorsionPoint(system.point(i, j).to_string()))
    };
    let theta = ratio(i, j)? / (ratio(i, t)? * ratio(j, t)?);
    let two_d = Rational::from(2) * conic.curve_d();
    let x = two_d * &theta - conic.c() / conic.a();
    let y = -(conic.b() / conic.a()) - theta.recip()?;
    Ok((x, y))
}

fn finish_set(conic: &Conic, points: Vec<ConicPoint>) -> Result<RationalDistanceSet> {
    let coords: Vec<_> = points.iter().map(|p| p.coords()).collect();
    let report = distance::verify_set(conic, &coords);
    if let Some(pair) = report.pairs.iter().find(|p| !p.is_rational()) {
        // a construction emitting an irrational distance is a bug
        return Err(Error::IrrationalDistance {
            i: pair.i,
            j: pair.j,
        });
    }
    Ok(RationalDistanceSet {
        conic: conic.clone(),
        points,
        report,
    })
}

/// Realize a compatible system as `n` points on the conic, verifying
/// compatibility first and every pairwise distance before returning.
/// Coincident generated points set the degeneracy flag but are returned.
pub fn set_from_system(conic: &Conic, system: &CompatibleSystem) -> Result<RationalDistanceSet> {
    let curve = conic.curve();
    let report = system.check(&curve)?;
    if !report.compatible {
        return Err(Error::IncompatibleSystem(report.violations));
    }
    let n = system.n();
    let mut points = Vec::with_capacity(n);
    for t in 1..=n {
        let pair = admissible_pairs(n, t)[0];
        let (x, y) = system_point_coords(conic, system, t, pair)?;
        points.push(conic.point(x, y)?);
    }
    finish_set(conic, points)
}

fn require_infinite_order(curve: &Curve, points: [&CurvePoint; 3]) -> Result<()> {
    for q in points {
        if curve.is_torsion(q)? {
            return Err(Error::TorsionPoint(q.to_string()));
        }
    }
    Ok(())
}

/// Three-point rational distance set from three non-torsion curve points,
/// assigned to the pairs `{2,3}`, `{1,3}`, `{1,2}` in that order.
pub fn three_point_set(
    conic: &Conic,
    q1: &CurvePoint,
    q2: &CurvePoint,
    q3: &CurvePoint,
) -> Result<RationalDistanceSet> {
    let curve = conic.curve();
    require_infinite_order(&curve, [q1, q2, q3])?;
    let mut points = BTreeMap::new();
    points.insert((2, 3), q1.clone());
    points.insert((1, 3), q2.clone());
    points.insert((1, 2), q3.clone());
    set_from_system(conic, &CompatibleSystem::new(3, points)?)
}

/// The compatible `n = 4` system generated by three non-torsion points:
/// each pair `{i, 4}` holds the fourth-point transform of the point on the
/// complementary pair, so all complementary ratio products equal `2 D`.
pub fn four_point_system(
    curve: &Curve,
    q1: &CurvePoint,
    q2: &CurvePoint,
    q3: &CurvePoint,
) -> Result<CompatibleSystem> {
    require_infinite_order(curve, [q1, q2, q3])?;
    let mut points = BTreeMap::new();
    points.insert((2, 3), q1.clone());
    points.insert((1, 3), q2.clone());
    points.insert((1, 2), q3.clone());
    points.insert((1, 4), surface::fourth_point_transform(curve, q1)?);
    points.insert((2, 4), surface::fourth_point_transform(curve, q2)?);
    points.insert((3, 4), surface::fourth_point_transform(curve, q3)?);
    CompatibleSystem::new(4, points)
}

/// Four-point rational distance set from three non-torsion curve points.
/// Computed through the completed system and cross-checked against the
/// closed form of the fourth point,
/// `x_4 = n_1 n_2 n_3 / (2 D) - c/a`, `y_4 = -b/a - 4 D^2 / (n_1 n_2 n_3)`;
/// the two routes must agree exactly.
pub fn four_point_set(
    conic: &Conic,
    q1: &CurvePoint,
    q2: &CurvePoint,
    q3: &CurvePoint,
) -> Result<RationalDistanceSet> {
    let curve = conic.curve();
    let system = four_point_system(&curve, q1, q2, q3)?;
    let set = set_from_system(conic, &system)?;
    let ratio = |q: &CurvePoint| q.xy_ratio().expect("non-torsion points have X != 0");
    let product = ratio(q1) * ratio(q2) * ratio(q3);
    let two_d = Rational::from(2) * conic.curve_d();
    let x4 = &product / &two_d - conic.c() / conic.a();
    let y4 = -(conic.b() / conic.a()) - two_d.square() / &product;
    let direct = conic.point(x4, y4)?;
    if set.points[3] != direct {
        return Err(Error::Internal("four-point construction routes disagree"));
    }
    Ok(set)
}

/// Extend a rational distance set of three conic points by the fourth point
/// `x_4 = -(c + A/(ad - bc))/a`, `y_4 = -(b + B/(ad - bc))/a` where
/// `A = prod(a y_t + b)` and `B = prod(a x_t + c)`. The precondition that
/// the input triple has rational pairwise distances is verified; the flag
/// reports when the new point coincides with an input point.
pub fn extend_three(
    conic: &Conic,
    p1: &ConicPoint,
    p2: &ConicPoint,
    p3: &ConicPoint,
) -> Result<(ConicPoint, bool)> {
    let pts = [p1, p2, p3];
    for i in 0..3 {
        for j in (i + 1)..3 {
            if distance::distance(&pts[i].coords(), &pts[j].coords()).is_none() {
                return Err(Error::IrrationalDistance { i: i + 1, j: j + 1 });
            }
        }
    }
    extend_three_unchecked(conic, p1, p2, p3)
}

/// [`extend_three`] without the rational-distance precondition check; the
/// three distance extractions are the only cost skipped.
pub fn extend_three_unchecked(
    conic: &Conic,
    p1: &ConicPoint,
    p2: &ConicPoint,
    p3: &ConicPoint,
) -> Result<(ConicPoint, bool)> {
    let (a, b, c) = (conic.a(), conic.b(), conic.c());
    let k = conic.ad_minus_bc();
    let prod_y = (a * p1.y() + b) * (a * p2.y() + b) * (a * p3.y() + b);
    let prod_x = (a * p1.x() + c) * (a * p2.x() + c) * (a * p3.x() + c);
    let x4 = -((c + prod_y / &k) / a);
    let y4 = -((b + prod_x / &k) / a);
    let p4 = conic.point(x4, y4)?;
    let degenerate = [p1, p2, p3].iter().any(|p| **p == p4);
    Ok((p4, degenerate))
}

/// The curve abscissa determined by a pair of conic points at rational
/// distance: `X_ij = -D (x_i - x_j) / ((y_i - y_j) + |P_i - P_j|)`. It
/// satisfies the slope identity
/// `(X_ij^2 - D^2) / (2 D X_ij) = (y_i - y_j) / (x_i - x_j)` exactly; its
/// ordinate need not be rational and is not computed here.
pub fn pair_to_curve_x(conic: &Conic, p_i: &ConicPoint, p_j: &ConicPoint) -> Result<Rational> {
    if p_i == p_j {
        return Err(Error::CoincidentPoints);
    }
    let dx = p_i.x() - p_j.x();
    let dy = p_i.y() - p_j.y();
    let dist = (dx.square() + dy.square())
        .sqrt()
        .expect("nonnegative")
        .ok_or(Error::IrrationalDistance { i: 1, j: 2 })?;
    let d = conic.curve_d();
    let x = -(d * &dx) / (&dy + &dist);
    debug_assert_eq!(
        (x.square() - d.square()) / (Rational::from(2) * d * &x),
        &dy / &dx
    );
    Ok(x)
}
