//! Singularity reports: scan, lift, verify and classify.

use serde::{Deserialize, Serialize};

use crate::exactalg::{rational_to_string, DEFAULT_JET, Q};
use crate::Result;

use super::classify::{classify_point, classify_point_mod, SingType, MODULAR_PRIMES};
use super::plane::{plane_component_test, plane_test_applies, PlaneFlag};
use super::quadric::{normalize_point, quadric_rank, Location};
use super::scan::{lift_point, reduce_point, singular_points_scan};
use super::scheme::TwoThreeScheme;

/// More singular F_p-points than a reduced (2,3) curve can have.
pub const NON_ISOLATED_THRESHOLD: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    /// Rational coordinates as strings, or residues for modular points.
    pub point: Vec<String>,
    /// `None` for exact rational points; `Some(p)` when the point was only
    /// found and classified over F_p.
    pub prime: Option<u64>,
    #[serde(rename = "type")]
    pub sing_type: SingType,
    pub location: Location,
    pub plane_component: PlaneFlag,
}

impl SingularPoint {
    pub fn is_exact(&self) -> bool {
        self.prime.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityReport {
    pub quadric_rank: usize,
    pub complete_intersection: bool,
    pub non_isolated: bool,
    pub jet: u32,
    /// Number of singular points found by the scan at each prime.
    pub scan_counts: Vec<(u64, usize)>,
    pub points: Vec<SingularPoint>,
}

impl SingularityReport {
    pub fn types(&self) -> Vec<SingType> {
        self.points.iter().map(|p| p.sing_type).collect()
    }

    pub fn at(&self, loc: Location) -> impl Iterator<Item = &SingularPoint> {
        self.points.iter().filter(move |p| p.location == loc)
    }

    pub fn is_smooth(&self) -> bool {
        self.points.is_empty() && !self.non_isolated
    }
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub primes: Vec<u64>,
    pub jet: u32,
    /// Extra exact candidates (e.g. from corpus metadata).
    pub candidates: Vec<Vec<Q>>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { primes: vec![101, 103, 107], jet: DEFAULT_JET, candidates: vec![] }
    }
}

pub fn classify_scheme(c: &TwoThreeScheme, opts: &ReportOptions) -> Result<SingularityReport> {
    let rank = quadric_rank(c.q()).rank;
    let ci = c.is_complete_intersection();
    let mut report = SingularityReport {
        quadric_rank: rank,
        complete_intersection: ci,
        non_isolated: !ci,
        jet: opts.jet,
        scan_counts: vec![],
        points: vec![],
    };
    if !ci {
        return Ok(report);
    }
    let mut scans = Vec::new();
    for &p in &opts.primes {
        let pts = singular_points_scan(c, p)?;
        report.scan_counts.push((p, pts.len()));
        if pts.len() > NON_ISOLATED_THRESHOLD {
            report.non_isolated = true;
        }
        scans.push((p, pts));
    }
    if report.non_isolated {
        return Ok(report);
    }

    let mut exact: Vec<Vec<Q>> = Vec::new();
    let lifted = scans.iter().flat_map(|(p, pts)| pts.iter().filter_map(move |x| lift_point(x, *p)));
    for cand in opts.candidates.iter().cloned().chain(lifted) {
        let cand = normalize_point(&cand);
        if cand.iter().all(|x| x == &Q::from_integer(0.into())) || exact.contains(&cand) || !c.contains(&cand) {
            continue;
        }
        if let Ok((t, loc)) = classify_point(c.q(), c.f(), &cand, opts.jet) {
            let flag = if plane_test_applies(t, loc) {
                plane_component_test(c, &cand, opts.jet).unwrap_or(PlaneFlag::Unknown)
            } else {
                PlaneFlag::NotConsulted
            };
            report.points.push(SingularPoint {
                point: cand.iter().map(rational_to_string).collect(),
                prime: None,
                sing_type: t,
                location: loc,
                plane_component: flag,
            });
            exact.push(cand);
        }
    }
    report.points.sort_by(|a, b| a.point.cmp(&b.point));

    // points without a small rational lift: classify at the richest prime
    let best = scans
        .iter()
        .filter(|(p, _)| MODULAR_PRIMES.contains(p))
        .max_by_key(|(p, pts)| (pts.len(), std::cmp::Reverse(*p)));
    if let Some((p, pts)) = best {
        let known: Vec<Vec<u64>> = exact.iter().filter_map(|x| reduce_point(x, *p)).collect();
        for x in pts.iter().filter(|x| !known.contains(x)) {
            let (t, loc) = classify_point_mod(c.q(), c.f(), *p, x, opts.jet)?;
            report.points.push(SingularPoint {
                point: x.iter().map(|v| v.to_string()).collect(),
                prime: Some(*p),
                sing_type: t,
                location: loc,
                plane_component: if plane_test_applies(t, loc) { PlaneFlag::Unknown } else { PlaneFlag::NotConsulted },
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::singclass::SingType::*;

    fn types_at(r: &SingularityReport, loc: Location) -> Vec<SingType> {
        let mut t: Vec<_> = r.at(loc).map(|p| p.sing_type).collect();
        t.sort();
        t
    }

    #[test]
    fn c_ab_generic() {
        let c = TwoThreeScheme::parse("x3^2 - x2 x4", "x2^3 + x1 x2 x3 + x1^2 x4").unwrap();
        let r = classify_scheme(&c, &ReportOptions::default()).unwrap();
        assert_eq!(r.quadric_rank, 3);
        assert_eq!(types_at(&r, Location::VertexOfQ), vec![A(3)]);
        assert_eq!(types_at(&r, Location::SmoothPointOfQ), vec![A(5)]);
        assert_eq!(r.points.len(), 2);
    }

    #[test]
    fn c_d_five_points() {
        let c = TwoThreeScheme::parse("x1 x2", "x3^3 + x4^3").unwrap();
        let r = classify_scheme(&c, &ReportOptions::default()).unwrap();
        let mut t = r.types();
        t.sort();
        assert_eq!(t, vec![A(1), A(1), A(1), D4, D4]);
        assert_eq!(types_at(&r, Location::OnSingularLineOfQ), vec![A(1), A(1), A(1)]);
    }

    #[test]
    fn two_a5() {
        let c = TwoThreeScheme::parse("x1 x4 - x2 x3", "x1 x3^2 + x2^2 x4").unwrap();
        let r = classify_scheme(&c, &ReportOptions::default()).unwrap();
        assert_eq!(r.quadric_rank, 4);
        assert_eq!(r.types(), vec![A(5), A(5)]);
        assert!(r.points.iter().all(|p| p.is_exact()));
    }

    #[test]
    fn plane_witness() {
        // conic in x2 = x3 meeting the residual quartic with contact 4
        let c = TwoThreeScheme::parse(
            "x1 x4 - x2 x3",
            "x1 x2^2 - 2 x1 x2 x3 - x1 x2 x4 + x1 x3^2 + x1 x3 x4 + x2^2 x3 - x2 x3^2 + x2 x4^2 - x3 x4^2",
        )
        .unwrap();
        let r = classify_scheme(&c, &ReportOptions::default()).unwrap();
        let p = r.points.iter().find(|p| p.point == ["1", "0", "0", "0"]).unwrap();
        assert_eq!(p.sing_type, A(7));
        assert_eq!(p.plane_component, PlaneFlag::True);
    }
}
