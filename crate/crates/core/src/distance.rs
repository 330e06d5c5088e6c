//! Exact Euclidean distances and whole-set rationality verification.

use crate::conic::Conic;
use crate::rational::Rational;

/// `(x_i - x_j)^2 + (y_i - y_j)^2`, always rational.
pub fn squared_distance(p: &(Rational, Rational), q: &(Rational, Rational)) -> Rational {
    (&p.0 - &q.0).square() + (&p.1 - &q.1).square()
}

/// The exact distance when it is rational, `None` otherwise.
pub fn distance(p: &(Rational, Rational), q: &(Rational, Rational)) -> Option<Rational> {
    squared_distance(p, q)
        .sqrt()
        .expect("squared distances are nonnegative")
}

/// One unordered pair in a [`DistanceReport`]; indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDistance {
    pub i: usize,
    pub j: usize,
    pub squared: Rational,
    /// Present exactly when the squared distance is a rational square.
    pub distance: Option<Rational>,
}

impl PairDistance {
    pub fn is_rational(&self) -> bool {
        self.distance.is_some()
    }
}

/// Verdict for a whole point set: every pair listed, with membership
/// failures and coincidences recorded alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub pairs: Vec<PairDistance>,
    /// Conjunction of the per-pair rationality flags.
    pub all_rational: bool,
    /// Set when some pair coincides (distance zero).
    pub degenerate: bool,
    /// 1-based indices of points that fail conic membership.
    pub off_conic: Vec<usize>,
}

impl DistanceReport {
    pub fn ok(&self) -> bool {
        self.all_rational && self.off_conic.is_empty()
    }
}

/// Check conic membership for every point and rationality for every pair.
/// Irrationality is reported, never raised.
pub fn verify_set(conic: &Conic, points: &[(Rational, Rational)]) -> DistanceReport {
    let off_conic = points
        .iter()
        .enumerate()
        .filter(|(_, (x, y))| !conic.contains(x, y))
        .map(|(idx, _)| idx + 1)
        .collect();
    let mut pairs = Vec::new();
    let mut all_rational = true;
    let mut degenerate = false;
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let squared = squared_distance(&points[i], &points[j]);
            degenerate |= squared.is_zero();
            let dist = squared.sqrt().expect("nonnegative");
            all_rational &= dist.is_some();
            pairs.push(PairDistance {
                i: i + 1,
                j: j + 1,
                squared,
                distance: dist,
            });
        }
    }
    DistanceReport {
        pairs,
        all_rational,
        degenerate,
        off_conic,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::{classic_circle, classic_line};

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn p(x: &str, y: &str) -> (Rational, Rational) {
        (rat(x), rat(y))
    }

    fn xy12() -> Conic {
        Conic::new(rat("1"), rat("0"), rat("0"), rat("12")).unwrap()
    }

    fn worked_example_points() -> Vec<(Rational, Rational)> {
        vec![
            p("34040/3619", "-10857/8510"),
            p("11914/23265", "-139590/5957"),
            p("186120/5957", "-5957/15510"),
            p("32571/34040", "-136160/10857"),
        ]
    }

    #[test]
    fn distance_examples() {
        let pts = worked_example_points();
        assert_eq!(distance(&pts[0], &pts[1]), Some(rat("1555297/65142")));
        assert_eq!(distance(&pts[0], &pts[0]), Some(rat("0")));
        assert_eq!(distance(&p("1", "-12"), &p("12", "-1")), None); // squared 242
    }

    #[test]
    fn distance_is_symmetric_and_zero_iff_equal() {
        let pts = worked_example_points();
        for a in &pts {
            for b in &pts {
                assert_eq!(distance(a, b), distance(b, a));
                assert_eq!(squared_distance(a, b).is_zero(), a == b);
            }
        }
    }

    #[test]
    fn triangle_inequality_on_rational_triples() {
        let pts = worked_example_points();
        for a in &pts {
            for b in &pts {
                for c in &pts {
                    let ab = distance(a, b).unwrap();
                    let bc = distance(b, c).unwrap();
                    let ac = distance(a, c).unwrap();
                    assert!(ac <= ab + bc);
                }
            }
        }
    }

    #[test]
    fn verify_worked_example_set() {
        let report = verify_set(&xy12(), &worked_example_points());
        assert!(report.ok());
        assert!(!report.degenerate);
        let expected = [
            (1, 2, "1555297/65142"),
            (1, 3, "28848020/1319901"),
            (1, 4, "1040847151/73914456"),
            (2, 3, "2129555051/55435842"),
            (2, 4, "1726556399/158388120"),
            (3, 4, "1555297/47656"),
        ];
        for (i, j, d) in expected {
            let pair = report
                .pairs
                .iter()
                .find(|pd| pd.i == i && pd.j == j)
                .unwrap();
            assert_eq!(pair.distance, Some(rat(d)));
        }
    }

    #[test]
    fn verify_flags_exactly_the_bad_pairs() {
        let mut pts = worked_example_points();
        pts.truncate(3);
        pts.push(p("1", "-12"));
        let report = verify_set(&xy12(), &pts);
        assert!(!report.all_rational);
        assert!(report.off_conic.is_empty()); // (1, -12) is on the conic
        let flagged: Vec<(usize, usize)> = report
            .pairs
            .iter()
            .filter(|pd| !pd.is_rational())
            .map(|pd| (pd.i, pd.j))
            .collect();
        assert_eq!(flagged, vec![(1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn verify_trivial_sets() {
        let conic = xy12();
        assert!(verify_set(&conic, &[]).ok());
        let single = verify_set(&conic, &[p("1", "-12")]);
        assert!(single.ok() && single.pairs.is_empty());
    }

    #[test]
    fn verify_reports_off_conic_points() {
        let report = verify_set(&xy12(), &[p("1", "-12"), p("1", "1")]);
        assert_eq!(report.off_conic, vec![2]);
        assert!(!report.ok());
    }

    #[test]
    fn line_fixture_distances() {
        let ts = [rat("0"), rat("5"), rat("-7/3"), rat("1/2")];
        let pts = classic_line(&rat("2/3"), &rat("4"), &ts);
        for (i, s) in ts.iter().enumerate() {
            for (j, t) in ts.iter().enumerate() {
                let expect = (s - t).abs();
                assert_eq!(distance(&pts[i], &pts[j]), Some(expect));
            }
        }
    }

    #[test]
    fn circle_fixture_distances() {
        let ts = [rat("0"), rat("1"), rat("2"), rat("-1/2"), rat("3/4")];
        let h = rat("2");
        let k = rat("-1/3");
        let r = rat("5/2");
        let pts = classic_circle((&h, &k), &r, &ts);
        let one = Rational::one();
        for (i, s) in ts.iter().enumerate() {
            for (j, t) in ts.iter().enumerate() {
                let num = Rational::from(4) * (s - t) * (s * t + &one);
                let den = (s.square() + &one) * (t.square() + &one);
                let expect = (num / den * &r).abs();
                assert_eq!(distance(&pts[i], &pts[j]), Some(expect));
            }
        }
    }
}
