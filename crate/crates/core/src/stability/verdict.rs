//! The geometric stability tables: (2,3) curves and their Chow points, and
//! cubic threefolds.

use serde::{Deserialize, Serialize};

use crate::correspond::CorrespondenceReport;
use crate::singclass::{Location, PlaneFlag, SingType, SingularityReport};

use super::onepss::OnePs;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Stable,
    StrictlySemistable,
    Unstable,
    NotApplicable,
}

/// Closed orbits of strictly semistable points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MinimalOrbit {
    #[serde(rename = "C_D")]
    CD,
    #[serde(rename = "C_2A5")]
    C2A5,
    /// Some `C_{A,B}` with `4A/B^2 != 1`.
    #[serde(rename = "C_AB(j!=1)")]
    CAB,
    /// `C_{A,B}` with `4A/B^2 = 1`, the double twisted cubic.
    #[serde(rename = "C_AB(j=1)")]
    CABRibbon,
    #[serde(rename = "F_D")]
    FD,
    #[serde(rename = "F_AB(j!=1)")]
    FAB,
    #[serde(rename = "F_c")]
    Fc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityVerdict {
    pub status: Status,
    /// Item labels of the table that decide the verdict. For `Unstable`
    /// from the complement of the semistable items, the items that fail.
    pub reasons: Vec<String>,
    pub detail: String,
    pub minimal_orbit: Option<MinimalOrbit>,
    pub certificate: Option<OnePs>,
}

impl StabilityVerdict {
    fn new(status: Status, reasons: &[&str], detail: impl Into<String>) -> Self {
        StabilityVerdict {
            status,
            reasons: reasons.iter().map(|s| s.to_string()).collect(),
            detail: detail.into(),
            minimal_orbit: None,
            certificate: None,
        }
    }

    fn orbit(mut self, o: MinimalOrbit) -> Self {
        self.minimal_orbit = Some(o);
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFlags {
    /// The scheme is a ribbon: a double structure on a twisted cubic.
    pub ribbon: bool,
}

fn inconclusive(t: SingType) -> bool {
    matches!(t, SingType::InconclusiveAtJet(_))
}

fn worse_than_ade_a_d4(t: SingType) -> bool {
    matches!(t, SingType::Corank2Other | SingType::NotHypersurface | SingType::NonIsolated)
}

/// Decision table for the Chow point of a (2,3) scheme.
pub fn git_verdict(report: &SingularityReport, flags: &CurveFlags) -> StabilityVerdict {
    use Status::*;
    if !report.complete_intersection {
        return StabilityVerdict::new(Unstable, &["0"], "not a complete intersection of a quadric and a cubic");
    }
    if report.non_isolated {
        return if flags.ribbon {
            StabilityVerdict::new(StrictlySemistable, &["0"], "genus 4 ribbon: cycle is the doubled twisted cubic")
                .orbit(MinimalOrbit::CABRibbon)
        } else {
            StabilityVerdict::new(Unstable, &["0"], "non-reduced and not a ribbon")
        };
    }
    if report.points.iter().any(|p| p.sing_type == SingType::NotHypersurface) {
        return StabilityVerdict::new(Unstable, &["0'"], "quadric and cubic are simultaneously singular");
    }
    match report.quadric_rank {
        4 | 3 => verdict_rank34(report),
        2 => {
            let on_line = report.at(Location::OnSingularLineOfQ).count();
            if on_line == 3 {
                StabilityVerdict::new(StrictlySemistable, &["2.iii"], "meets the singular line of Q in three distinct points")
                    .orbit(MinimalOrbit::CD)
            } else {
                StabilityVerdict::new(
                    Unstable,
                    &["1", "2.iii"],
                    format!("rank 2 quadric, {on_line} distinct points on its singular line"),
                )
            }
        }
        r => StabilityVerdict::new(Unstable, &["0"], format!("quadric of rank {r}")),
    }
}

fn verdict_rank34(report: &SingularityReport) -> StabilityVerdict {
    use Status::*;
    let rank4 = report.quadric_rank == 4;
    let (alpha, beta) = if rank4 { ("2.i.alpha", "2.i.beta") } else { ("2.ii.alpha", "2.ii.beta") };
    if let Some(p) = report.points.iter().find(|p| inconclusive(p.sing_type)) {
        return StabilityVerdict::new(NotApplicable, &["1", alpha], format!("type {} at {:?}", p.sing_type, p.point));
    }
    let at_vertex = |p: &&crate::singclass::SingularPoint| p.location == Location::VertexOfQ;
    let vertex: Vec<_> = report.points.iter().filter(at_vertex).collect();
    let smooth: Vec<_> = report.points.iter().filter(|p| !at_vertex(p)).collect();

    if let Some(p) = report.points.iter().find(|p| worse_than_ade_a_d4(p.sing_type)) {
        return StabilityVerdict::new(Unstable, &["1", alpha, beta], format!("{} at {:?}", p.sing_type, p.point));
    }
    if let Some(p) = vertex.iter().find(|p| !matches!(p.sing_type, SingType::A(_))) {
        return StabilityVerdict::new(Unstable, &["2.ii"], format!("{} at the vertex", p.sing_type));
    }

    let vk = |p: &crate::singclass::SingularPoint| match p.sing_type {
        SingType::A(k) => k,
        _ => u32::MAX,
    };
    let stable = smooth.iter().all(|p| matches!(p.sing_type, SingType::A(k) if k <= 4))
        && vertex.iter().all(|p| vk(p) <= 2);
    if stable {
        return StabilityVerdict::new(Stable, &["1"], "at worst A_1..A_4 at smooth points of Q, A_1 or A_2 at the vertex");
    }

    // the high A_k singularities where the plane-component flag is consulted
    let high: Vec<_> = smooth
        .iter()
        .filter(|p| matches!(p.sing_type, SingType::A(k) if k >= 6))
        .chain(vertex.iter().filter(|p| vk(p) >= 4))
        .collect();
    if let Some(p) = high.iter().find(|p| p.plane_component == PlaneFlag::True) {
        return StabilityVerdict::new(
            Unstable,
            &["1", alpha, beta],
            format!("{} at {:?} lies on a plane component", p.sing_type, p.point),
        );
    }
    if let Some(p) = high.iter().find(|p| p.plane_component != PlaneFlag::False) {
        return StabilityVerdict::new(
            NotApplicable,
            &[beta],
            format!("plane-component flag {:?} at {:?}", p.plane_component, p.point),
        );
    }

    let d4 = smooth.iter().any(|p| p.sing_type == SingType::D4);
    let a5 = smooth.iter().any(|p| p.sing_type == SingType::A(5));
    let a3_vertex = vertex.iter().any(|p| vk(p) == 3);
    let mut reasons = Vec::new();
    if d4 || a5 || a3_vertex {
        reasons.push(alpha);
    }
    if !high.is_empty() {
        reasons.push(beta);
    }
    let orbit = if d4 {
        MinimalOrbit::CD
    } else if a5 || a3_vertex {
        if rank4 {
            MinimalOrbit::C2A5
        } else {
            MinimalOrbit::CAB
        }
    } else {
        MinimalOrbit::CABRibbon
    };
    StabilityVerdict::new(StrictlySemistable, &reasons, "strictly semistable by the rank-of-Q table").orbit(orbit)
}

/// Degeneration targets of a strictly semistable curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DegenerationTarget {
    #[serde(rename = "C_D")]
    CD,
    /// Either `C_{2A5}` or some `C_{A,B}` with `4A/B^2 != 1`.
    #[serde(rename = "C_2A5_or_C_AB(j!=1)")]
    C2A5OrCAB,
    /// The ribbon `C_{A,B}` with `4A/B^2 = 1`.
    #[serde(rename = "C_AB(j=1)")]
    Ribbon,
}

/// `None` unless the verdict is strictly semistable.
pub fn degeneration_target(report: &SingularityReport, verdict: &StabilityVerdict) -> Option<DegenerationTarget> {
    if verdict.status != Status::StrictlySemistable {
        return None;
    }
    if report.points.iter().any(|p| p.sing_type == SingType::D4) || report.quadric_rank == 2 {
        return Some(DegenerationTarget::CD);
    }
    let a5_smooth = report.at(Location::SmoothPointOfQ).any(|p| p.sing_type == SingType::A(5));
    let a3_vertex = report.at(Location::VertexOfQ).any(|p| p.sing_type == SingType::A(3));
    if report.quadric_rank >= 3 && !report.non_isolated && (a5_smooth || a3_vertex) {
        return Some(DegenerationTarget::C2A5OrCAB);
    }
    Some(DegenerationTarget::Ribbon)
}

/// A singular point of a cubic threefold with the flag "X contains a
/// plane through the null line", consulted for `A_n`, `n >= 6`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreefoldSingularity {
    pub point: Vec<String>,
    #[serde(rename = "type")]
    pub sing_type: SingType,
    pub plane_through_null_line: PlaneFlag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreefoldData {
    pub points: Vec<ThreefoldSingularity>,
    pub non_isolated: bool,
    /// Consulted only for non-isolated singularities.
    pub chordal: Option<bool>,
}

impl ThreefoldData {
    /// Singularities of `x0 q + f` read off a correspondence report: the
    /// marked point from direct jet reduction, the rest from the off-p scan.
    /// Plane flags come from the matching curve singularity (at the vertex
    /// for the marked point).
    pub fn from_correspondence(r: &CorrespondenceReport, chordal: Option<bool>) -> ThreefoldData {
        let high = |t: SingType| matches!(t, SingType::A(n) if n >= 6);
        let mut points = Vec::new();
        let mut marked = vec!["1".to_string()];
        marked.extend(std::iter::repeat_n("0".to_string(), 4));
        let marked_flag = if high(r.marked_point_direct) {
            r.curve.at(Location::VertexOfQ).map(|p| p.plane_component).next().unwrap_or(PlaneFlag::Unknown)
        } else {
            PlaneFlag::NotConsulted
        };
        points.push(ThreefoldSingularity {
            point: marked,
            sing_type: r.marked_point_direct,
            plane_through_null_line: marked_flag,
        });
        for tp in &r.threefold_points {
            let flag = if high(tp.sing_type) {
                r.pairs
                    .iter()
                    .find(|m| m.threefold_point == tp.point)
                    .and_then(|m| r.curve.points.iter().find(|p| p.point == m.curve_point))
                    .map(|p| p.plane_component)
                    .unwrap_or(PlaneFlag::Unknown)
            } else {
                PlaneFlag::NotConsulted
            };
            points.push(ThreefoldSingularity {
                point: tp.point.clone(),
                sing_type: tp.sing_type,
                plane_through_null_line: flag,
            });
        }
        let non_isolated = r.threefold_non_isolated
            || r.curve.non_isolated
            || r.marked_point_direct == SingType::NonIsolated;
        ThreefoldData { points, non_isolated, chordal: if non_isolated { chordal } else { None } }
    }
}

/// Decision table for cubic threefolds.
pub fn allcock_verdict(x: &ThreefoldData) -> StabilityVerdict {
    use Status::*;
    if x.non_isolated {
        return match x.chordal {
            Some(true) => StabilityVerdict::new(StrictlySemistable, &["3.d"], "chordal cubic").orbit(MinimalOrbit::Fc),
            Some(false) => StabilityVerdict::new(Unstable, &["4.a"], "non-isolated singularities, not chordal"),
            None => StabilityVerdict::new(NotApplicable, &["3.d", "4.a"], "chordal flag missing"),
        };
    }
    if let Some(p) = x.points.iter().find(|p| inconclusive(p.sing_type)) {
        return StabilityVerdict::new(NotApplicable, &["1", "4.b"], format!("type {} at {:?}", p.sing_type, p.point));
    }
    if x.points.iter().all(|p| matches!(p.sing_type, SingType::A(k) if k <= 4)) {
        return StabilityVerdict::new(Stable, &["1"], "at worst A_1..A_4 singularities");
    }
    if let Some(p) = x.points.iter().find(|p| worse_than_ade_a_d4(p.sing_type)) {
        return StabilityVerdict::new(Unstable, &["4.b"], format!("{} at {:?}", p.sing_type, p.point));
    }
    let high: Vec<_> = x.points.iter().filter(|p| matches!(p.sing_type, SingType::A(n) if n >= 6)).collect();
    if let Some(p) = high.iter().find(|p| p.plane_through_null_line == PlaneFlag::True) {
        return StabilityVerdict::new(Unstable, &["4.b"], format!("{} with a plane through its null line", p.sing_type));
    }
    if let Some(p) = high.iter().find(|p| p.plane_through_null_line != PlaneFlag::False) {
        return StabilityVerdict::new(
            NotApplicable,
            &["3.c", "4.b"],
            format!("plane flag {:?} at {:?}", p.plane_through_null_line, p.point),
        );
    }
    let d4 = x.points.iter().any(|p| p.sing_type == SingType::D4);
    let a5 = x.points.iter().any(|p| p.sing_type == SingType::A(5));
    let mut reasons = Vec::new();
    if d4 {
        reasons.push("3.a");
    }
    if a5 {
        reasons.push("3.b");
    }
    if !high.is_empty() {
        reasons.push("3.c");
    }
    let orbit = if d4 {
        MinimalOrbit::FD
    } else if a5 {
        MinimalOrbit::FAB
    } else {
        MinimalOrbit::Fc
    };
    StabilityVerdict::new(StrictlySemistable, &reasons, "strictly semistable cubic threefold").orbit(orbit)
}

/// The threefold orbit matching a curve orbit under `C -> x0 q + f`.
pub fn cubic_orbit_of(o: MinimalOrbit) -> MinimalOrbit {
    match o {
        MinimalOrbit::CD => MinimalOrbit::FD,
        MinimalOrbit::C2A5 | MinimalOrbit::CAB => MinimalOrbit::FAB,
        MinimalOrbit::CABRibbon => MinimalOrbit::Fc,
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::singclass::SingularPoint;

    fn pt(t: SingType, loc: Location) -> SingularPoint {
        SingularPoint {
            point: vec!["1".into(), "0".into(), "0".into(), "0".into()],
            prime: None,
            sing_type: t,
            location: loc,
            plane_component: if matches!(t, SingType::A(k) if k >= 6) || (matches!(t, SingType::A(k) if k >= 4) && loc == Location::VertexOfQ) {
                PlaneFlag::False
            } else {
                PlaneFlag::NotConsulted
            },
        }
    }

    fn report(rank: usize, points: Vec<SingularPoint>) -> SingularityReport {
        SingularityReport {
            quadric_rank: rank,
            complete_intersection: true,
            non_isolated: false,
            jet: 16,
            scan_counts: vec![],
            points,
        }
    }

    use Location::*;
    use SingType::*;

    #[test]
    fn table_rows() {
        let f = CurveFlags::default();
        assert_eq!(git_verdict(&report(4, vec![]), &f).status, Status::Stable);
        assert_eq!(git_verdict(&report(3, vec![pt(A(2), VertexOfQ)]), &f).status, Status::Stable);
        let v = git_verdict(&report(4, vec![pt(A(5), SmoothPointOfQ), pt(A(5), SmoothPointOfQ)]), &f);
        assert_eq!((v.status, v.minimal_orbit), (Status::StrictlySemistable, Some(MinimalOrbit::C2A5)));
        assert_eq!(v.reasons, vec!["2.i.alpha"]);
        let v = git_verdict(&report(3, vec![pt(A(3), VertexOfQ), pt(A(5), SmoothPointOfQ)]), &f);
        assert_eq!(v.reasons, vec!["2.ii.alpha"]);
        let v = git_verdict(&report(3, vec![pt(A(4), VertexOfQ)]), &f);
        assert_eq!((v.status, v.reasons.clone()), (Status::StrictlySemistable, vec!["2.ii.beta".to_string()]));
        let v = git_verdict(&report(4, vec![pt(A(7), SmoothPointOfQ)]), &f);
        assert_eq!(v.reasons, vec!["2.i.beta"]);
        let mut p = pt(A(7), SmoothPointOfQ);
        p.plane_component = PlaneFlag::True;
        assert_eq!(git_verdict(&report(4, vec![p.clone()]), &f).status, Status::Unstable);
        p.plane_component = PlaneFlag::Unknown;
        assert_eq!(git_verdict(&report(4, vec![p]), &f).status, Status::NotApplicable);
        let cd = report(2, vec![pt(A(1), OnSingularLineOfQ), pt(A(1), OnSingularLineOfQ), pt(A(1), OnSingularLineOfQ), pt(D4, SmoothPointOfQ)]);
        let v = git_verdict(&cd, &f);
        assert_eq!((v.status, v.minimal_orbit), (Status::StrictlySemistable, Some(MinimalOrbit::CD)));
        assert_eq!(degeneration_target(&cd, &v), Some(DegenerationTarget::CD));
        assert_eq!(git_verdict(&report(4, vec![pt(NotHypersurface, SmoothPointOfQ)]), &f).reasons, vec!["0'"]);
        assert_eq!(git_verdict(&report(3, vec![pt(D4, VertexOfQ)]), &f).status, Status::Unstable);
        let v = git_verdict(&report(4, vec![pt(InconclusiveAtJet(16), SmoothPointOfQ)]), &f);
        assert_eq!(v.status, Status::NotApplicable);
    }

    #[test]
    fn ribbons() {
        let mut r = report(3, vec![]);
        r.non_isolated = true;
        assert_eq!(git_verdict(&r, &CurveFlags::default()).status, Status::Unstable);
        let v = git_verdict(&r, &CurveFlags { ribbon: true });
        assert_eq!((v.status, v.minimal_orbit), (Status::StrictlySemistable, Some(MinimalOrbit::CABRibbon)));
        assert_eq!(degeneration_target(&r, &v), Some(DegenerationTarget::Ribbon));
    }

    fn tf(types: &[SingType]) -> ThreefoldData {
        ThreefoldData {
            points: types
                .iter()
                .map(|&t| ThreefoldSingularity {
                    point: vec![],
                    sing_type: t,
                    plane_through_null_line: if matches!(t, A(n) if n >= 6) { PlaneFlag::False } else { PlaneFlag::NotConsulted },
                })
                .collect(),
            non_isolated: false,
            chordal: None,
        }
    }

    #[test]
    fn threefold_rows() {
        assert_eq!(allcock_verdict(&tf(&[A(1), A(4)])).status, Status::Stable);
        let v = allcock_verdict(&tf(&[A(5)]));
        assert_eq!((v.reasons.clone(), v.minimal_orbit), (vec!["3.b".to_string()], Some(MinimalOrbit::FAB)));
        let v = allcock_verdict(&tf(&[D4, D4, D4]));
        assert_eq!(v.minimal_orbit, Some(MinimalOrbit::FD));
        assert_eq!(allcock_verdict(&tf(&[A(6)])).reasons, vec!["3.c"]);
        assert_eq!(allcock_verdict(&tf(&[Corank2Other])).reasons, vec!["4.b"]);
        let mut x = tf(&[]);
        x.non_isolated = true;
        assert_eq!(allcock_verdict(&x).status, Status::NotApplicable);
        x.chordal = Some(false);
        assert_eq!(allcock_verdict(&x).reasons, vec!["4.a"]);
        x.chordal = Some(true);
        assert_eq!(allcock_verdict(&x).minimal_orbit, Some(MinimalOrbit::Fc));
    }
}
