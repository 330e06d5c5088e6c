//! JSON wire formats. Rationals travel as `p/q` strings, curve points as
//! `X:Y:Z` strings, conics as `{"a", "b", "c", "d"}` objects, and point
//! sets as `{"conic", "points", "distances", "degenerate"}` documents.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::conic::Conic;
use crate::construct::RationalDistanceSet;
use crate::distance::DistanceReport;
use crate::elliptic::Curve;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::surface::SurfacePoint;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConicJson {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl ConicJson {
    pub fn from_conic(conic: &Conic) -> Self {
        ConicJson {
            a: conic.a().clone(),
            b: conic.b().clone(),
            c: conic.c().clone(),
            d: conic.d().clone(),
        }
    }

    pub fn to_conic(&self) -> Result<Conic> {
        Conic::new(
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CurveJson {
    #[serde(rename = "D")]
    pub d: Rational,
}

impl CurveJson {
    pub fn from_curve(curve: &Curve) -> Self {
        CurveJson {
            d: curve.d().clone(),
        }
    }

    pub fn to_curve(&self) -> Result<Curve> {
        Curve::new(self.d.clone())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurfacePointJson {
    pub u: String,
    pub v: String,
    pub w: String,
    #[serde(rename = "T")]
    pub t: Rational,
}

impl SurfacePointJson {
    pub fn from_point(point: &SurfacePoint) -> Self {
        SurfacePointJson {
            u: point.u().to_string(),
            v: point.v().to_string(),
            w: point.w().to_string(),
            t: point.t().clone(),
        }
    }

    pub fn to_point(&self) -> Result<SurfacePoint> {
        let parse = |s: &str| {
            BigInt::from_str(s)
                .map_err(|_| Error::Parse(format!("invalid integer literal '{s}'")))
        };
        SurfacePoint::new(
            parse(&self.u)?,
            parse(&self.v)?,
            parse(&self.w)?,
            self.t.clone(),
        )
    }
}

/// A point-set document: the verification input format and the `gen`
/// output format.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SetJson {
    pub conic: ConicJson,
    pub points: Vec<[Rational; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub distances: Vec<(String, String, Rational)>,
    #[serde(default)]
    pub degenerate: bool,
}

impl SetJson {
    pub fn from_set(set: &RationalDistanceSet) -> Self {
        SetJson {
            conic: ConicJson::from_conic(set.conic()),
            points: set
                .points()
                .iter()
                .map(|p| [p.x().clone(), p.y().clone()])
                .collect(),
            distances: set
                .report()
                .pairs
                .iter()
                .map(|p| {
                    (
                        p.i.to_string(),
                        p.j.to_string(),
                        p.distance
                            .clone()
                            .expect("constructed sets have rational distances"),
                    )
                })
                .collect(),
            degenerate: set.degenerate(),
        }
    }

    pub fn coords(&self) -> Vec<(Rational, Rational)> {
        self.points
            .iter()
            .map(|[x, y]| (x.clone(), y.clone()))
            .collect()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportPairJson {
    pub i: usize,
    pub j: usize,
    pub squared: Rational,
    pub distance: Option<Rational>,
    pub rational: bool,
}

/// The `verify` output format.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportJson {
    pub pairs: Vec<ReportPairJson>,
    pub all_rational: bool,
    pub degenerate: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub off_conic: Vec<usize>,
}

impl ReportJson {
    pub fn from_report(report: &DistanceReport) -> Self {
        ReportJson {
            pairs: report
                .pairs
                .iter()
                .map(|p| ReportPairJson {
                    i: p.i,
                    j: p.j,
                    squared: p.squared.clone(),
                    distance: p.distance.clone(),
                    rational: p.is_rational(),
                })
                .collect(),
            all_rational: report.all_rational,
            degenerate: report.degenerate,
            off_conic: report.off_conic.clone(),
        }
    }
}
