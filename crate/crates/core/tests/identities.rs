//! Cross-module identities on generated rational distance sets.

use hyperdist::construct::{
    extend_three, four_point_set, four_point_system, system_point_coords, three_point_set,
};
use hyperdist::distance;
use hyperdist::{Conic, Curve, CurvePoint, Rational};

fn rat(s: &str) -> Rational {
    s.parse().unwrap()
}

/// Conics with a prescribed curve parameter: choose a, b, c and solve
/// d = (2 D a^2 + b c) / a.
fn conics_with_d(d: &Rational) -> Vec<Conic> {
    let mut out = Vec::new();
    for (a, b, c) in [
        ("1", "0", "0"),
        ("2", "1", "-3"),
        ("-1/2", "5", "1/3"),
        ("3", "-2/5", "7"),
    ] {
        let (a, b, c) = (rat(a), rat(b), rat(c));
        let coeff_d = (Rational::from(2) * d * &a * &a + &b * &c) / &a;
        let conic = Conic::new(a, b, c, coeff_d).unwrap();
        assert_eq!(conic.curve_d(), d);
        out.push(conic);
    }
    out
}

/// A small pool of non-torsion points: found generators plus doubles and
/// pairwise sums.
fn pool(curve: &Curve) -> Vec<CurvePoint> {
    let mut pool: Vec<CurvePoint> = curve
        .find_points(60, 2)
        .into_iter()
        .filter(|p| !curve.is_torsion(p).unwrap())
        .collect();
    let base = pool.clone();
    for p in &base {
        let double = curve.scalar_mul(2, p).unwrap();
        if !pool.contains(&double) {
            pool.push(double);
        }
    }
    for pair in base.windows(2) {
        let sum = curve.add(&pair[0], &pair[1]).unwrap();
        if !sum.is_identity() && !curve.is_torsion(&sum).unwrap() && !pool.contains(&sum) {
            pool.push(sum);
        }
    }
    pool
}

fn triples(points: &[CurvePoint]) -> Vec<[&CurvePoint; 3]> {
    let mut out = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            for r in points {
                out.push([p, q, r]);
            }
        }
    }
    out
}

#[test]
fn generated_sets_satisfy_the_chord_identities() {
    for d in ["5", "6"] {
        let d = rat(d);
        let curve = Curve::new(d.clone()).unwrap();
        let points = pool(&curve);
        assert!(points.len() >= 4, "pool too small for D = {d}");
        for conic in conics_with_d(&d) {
            for [q1, q2, q3] in triples(&points).into_iter().take(6) {
                let set = three_point_set(&conic, q1, q2, q3).unwrap();
                let pts = set.points();
                // the pair {s,t} is held by the remaining input point
                let holders = [(1, 2, q3), (1, 3, q2), (2, 3, q1)];
                for (s, t, q) in holders {
                    let (xq, _) = q.affine().unwrap();
                    let slope = (xq.square() - d.square())
                        / (Rational::from(2) * &d * &xq);
                    assert_eq!(
                        slope,
                        conic
                            .chord_slope(pts[s - 1].x(), pts[t - 1].x())
                            .unwrap(),
                        "slope identity failed for D = {d}"
                    );
                }
                // product identity: for each t, with {i, j} the complement,
                // (a d - b c) / (a x_t + c)^2
                //   = s(i,t) * s(j,t) / s(i,j) in terms of chord slopes
                let slope_of = |q: &CurvePoint| {
                    let (xq, _) = q.affine().unwrap();
                    (xq.square() - d.square()) / (Rational::from(2) * &d * &xq)
                };
                let assignments = [(q3, q2, q1), (q3, q1, q2), (q2, q1, q3)];
                for (t, (qit, qjt, qij)) in assignments.into_iter().enumerate() {
                    let axc = conic.a() * pts[t].x() + conic.c();
                    let lhs = conic.ad_minus_bc() / axc.square();
                    let rhs = slope_of(qit) * slope_of(qjt)
                        / slope_of(qij);
                    assert_eq!(lhs, rhs, "product identity failed for D = {d}");
                }
            }
        }
    }
}

#[test]
fn four_point_sets_satisfy_the_distance_identity() {
    let d = rat("6");
    let curve = Curve::new(d.clone()).unwrap();
    let points = pool(&curve);
    let conic = conics_with_d(&d).remove(1);
    let mut checked = 0;
    for [q1, q2, q3] in triples(&points).into_iter().take(8) {
        let system = four_point_system(&curve, q1, q2, q3).unwrap();
        let set = hyperdist::construct::set_from_system(&conic, &system).unwrap();
        let pts = set.coords();
        let ratio = |i, j| system.ratio(i, j).unwrap();
        for (s, t, i, j) in [
            (1, 2, 3, 4),
            (1, 3, 2, 4),
            (1, 4, 2, 3),
            (2, 3, 1, 4),
            (2, 4, 1, 3),
            (3, 4, 1, 2),
        ] {
            let measured = distance::distance(&pts[s - 1], &pts[t - 1]).unwrap();
            let scale = ratio(i, j) / (ratio(i, s) * ratio(j, s))
                - ratio(i, j) / (ratio(i, t) * ratio(j, t));
            let (x_st, _) = system.point(s, t).affine().unwrap();
            let expected = (scale * (x_st.square() + d.square()) / &x_st).abs();
            assert_eq!(measured, expected);
            checked += 1;
        }
    }
    assert!(checked >= 40);
}

#[test]
fn extension_matches_the_fourth_point_on_generated_sets() {
    for d in ["5", "6", "7"] {
        let d = rat(d);
        let curve = Curve::new(d.clone()).unwrap();
        let points = pool(&curve);
        assert!(points.len() >= 3, "pool too small for D = {d}");
        for conic in conics_with_d(&d) {
            for [q1, q2, q3] in triples(&points).into_iter().take(4) {
                let set = four_point_set(&conic, q1, q2, q3).unwrap();
                let pts = set.points();
                let (p4, _) = extend_three(&conic, &pts[0], &pts[1], &pts[2]).unwrap();
                assert_eq!(&p4, &pts[3]);
                assert!(set.report().all_rational);
            }
        }
    }
}

#[test]
fn found_points_have_no_small_order() {
    for d in ["5", "6", "7"] {
        let curve = Curve::new(rat(d)).unwrap();
        for p in curve.find_points(50, 2) {
            let structurally_torsion = {
                let (_, y, z) = p.coords();
                use num_traits::Zero;
                y.is_zero() || z.is_zero()
            };
            if structurally_torsion {
                continue;
            }
            for m in 1..=12 {
                assert!(!curve.scalar_mul(m, &p).unwrap().is_identity());
            }
        }
    }
}

#[test]
fn choice_independence_across_curves() {
    for d in ["5", "7"] {
        let d = rat(d);
        let curve = Curve::new(d.clone()).unwrap();
        let points = pool(&curve);
        let conic = conics_with_d(&d).remove(2);
        for [q1, q2, q3] in triples(&points).into_iter().take(5) {
            let system = four_point_system(&curve, q1, q2, q3).unwrap();
            for t in 1..=4 {
                let pairs = hyperdist::construct::admissible_pairs(4, t);
                let first = system_point_coords(&conic, &system, t, pairs[0]).unwrap();
                for &pair in &pairs[1..] {
                    assert_eq!(
                        system_point_coords(&conic, &system, t, pair).unwrap(),
                        first
                    );
                }
            }
        }
    }
}
