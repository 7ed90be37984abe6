//! The built-in corpus of curves and cubic threefolds with their expected
//! singularities and verdicts.

use serde::{Deserialize, Serialize};

use crate::correspond::CubicThreefold;
use crate::exactalg::Q;
use crate::singclass::{Location, TwoThreeScheme};
use crate::stability::{CurveFlags, MinimalOrbit, Status};
use crate::Result;

/// Where an expectation comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// A normal form or value quoted from the literature.
    Stated,
    /// Follows from a short independent computation or argument.
    Derived,
    /// An exemplar built for the corpus; expectation read off the table.
    Constructed,
    /// A value where the literature has a known misprint; both readings kept.
    Discrepancy,
}

/// Where an expected singular point sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Site {
    Curve(Location),
    /// The marked double point of a cubic threefold.
    Marked,
    /// Any other singular point of a cubic threefold.
    OffMarked,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Scheme { q: &'static str, f: &'static str, flags: CurveFlags },
    /// A cubic threefold with a double point at `(1,0,0,0,0)`, or none.
    Cubic { f: &'static str, marked: bool },
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub payload: Payload,
    /// Expected singular points, in any order.
    pub singularities: Vec<(&'static str, Site)>,
    pub status: Status,
    pub reasons: &'static [&'static str],
    pub minimal_orbit: Option<MinimalOrbit>,
    pub provenance: Provenance,
    pub note: &'static str,
}

impl CorpusEntry {
    pub fn scheme(&self) -> Option<Result<TwoThreeScheme>> {
        match &self.payload {
            Payload::Scheme { q, f, .. } => Some(TwoThreeScheme::parse(q, f)),
            Payload::Cubic { .. } => None,
        }
    }

    pub fn flags(&self) -> CurveFlags {
        match &self.payload {
            Payload::Scheme { flags, .. } => *flags,
            Payload::Cubic { .. } => CurveFlags::default(),
        }
    }

    pub fn cubic(&self) -> Option<Result<CubicThreefold>> {
        match &self.payload {
            Payload::Cubic { f, marked } => {
                let p = marked.then(|| {
                    let mut v = vec![Q::from_integer(0.into()); 5];
                    v[0] = Q::from_integer(1.into());
                    v
                });
                Some(CubicThreefold::parse(f, p))
            }
            Payload::Scheme { .. } => None,
        }
    }

    pub fn is_normal_form(&self) -> bool {
        self.name.starts_with("C_") || self.name.starts_with("F_")
    }
}

const SMOOTH_Q: &str = "x1 x4 - x2 x3";
const CONE_Q: &str = "x3^2 - x2 x4";
const NONE: CurveFlags = CurveFlags { ribbon: false };

fn curve(
    name: &'static str,
    q: &'static str,
    f: &'static str,
    singularities: Vec<(&'static str, Location)>,
    status: Status,
    reasons: &'static [&'static str],
    minimal_orbit: Option<MinimalOrbit>,
    provenance: Provenance,
    note: &'static str,
) -> CorpusEntry {
    CorpusEntry {
        name,
        payload: Payload::Scheme { q, f, flags: NONE },
        singularities: singularities.into_iter().map(|(t, l)| (t, Site::Curve(l))).collect(),
        status,
        reasons,
        minimal_orbit,
        provenance,
        note,
    }
}

/// Curves first, then cubics; order is part of the report format.
pub fn corpus() -> Vec<CorpusEntry> {
    use Location::*;
    use Status::*;
    let mut v = vec![
        curve(
            "smooth",
            SMOOTH_Q,
            "x1^3 + x2^3 + x3^3 + x1 x2 x3 + x4^3",
            vec![],
            Stable,
            &["1"],
            None,
            Provenance::Constructed,
            "smooth canonical curve on a smooth quadric",
        ),
        curve(
            "stable_a1",
            SMOOTH_Q,
            "x1 x3^2 + x2^2 x4 + x1 x2^2 + x4^3",
            vec![("A1", SmoothPointOfQ)],
            Stable,
            &["1"],
            None,
            Provenance::Constructed,
            "one node",
        ),
        curve(
            "stable_a2",
            SMOOTH_Q,
            "x2^2 x4 + x1 x3 x4 + x1^3 + x3^3 + x2^3",
            vec![("A2", SmoothPointOfQ)],
            Stable,
            &["1"],
            None,
            Provenance::Constructed,
            "one cusp",
        ),
        curve(
            "stable_a3_a1",
            SMOOTH_Q,
            "x1 x3^2 + x2^2 x4 + x1 x3 x4 + x1^3",
            vec![("A3", SmoothPointOfQ), ("A1", SmoothPointOfQ)],
            Stable,
            &["1"],
            None,
            Provenance::Constructed,
            "tacnode and node",
        ),
        curve(
            "stable_a4",
            SMOOTH_Q,
            "x1 x3^2 - 2 x1 x2 x3 + x1 x2^2 + x2 x4^2 + x4^3",
            vec![("A4", SmoothPointOfQ)],
            Stable,
            &["1"],
            None,
            Provenance::Constructed,
            "(t - s)^2 + s^3 t^2 in the chart x1 = 1, tangent off the rulings",
        ),
        curve(
            "stable_a2_vertex",
            CONE_Q,
            "x1^2 x4 + x1 x2^2 + x3^3 + x4^3",
            vec![("A2", VertexOfQ)],
            Stable,
            &["1"],
            None,
            Provenance::Constructed,
            "cusp at the vertex of the cone",
        ),
        curve(
            "C_2A5",
            SMOOTH_Q,
            "x1 x3^2 + x2^2 x4",
            vec![("A5", SmoothPointOfQ), ("A5", SmoothPointOfQ)],
            StrictlySemistable,
            &["2.i.alpha"],
            Some(MinimalOrbit::C2A5),
            Provenance::Stated,
            "closed orbit with two A5 points",
        ),
        curve(
            "C_AB(1,1)",
            CONE_Q,
            "x2^3 + x1 x2 x3 + x1^2 x4",
            vec![("A3", VertexOfQ), ("A5", SmoothPointOfQ)],
            StrictlySemistable,
            &["2.ii.alpha"],
            Some(MinimalOrbit::CAB),
            Provenance::Stated,
            "generic member, 4A/B^2 = 4",
        ),
        curve(
            "C_AB(0,1)",
            CONE_Q,
            "x1 x2 x3 + x1^2 x4",
            vec![("A3", VertexOfQ), ("A5", SmoothPointOfQ), ("A1", SmoothPointOfQ)],
            StrictlySemistable,
            &["2.ii.alpha"],
            Some(MinimalOrbit::CAB),
            Provenance::Stated,
            "4A/B^2 = 0",
        ),
        CorpusEntry {
            name: "C_AB(1,-2)",
            payload: Payload::Scheme { q: CONE_Q, f: "x2^3 - 2 x1 x2 x3 + x1^2 x4", flags: CurveFlags { ribbon: true } },
            singularities: vec![],
            status: StrictlySemistable,
            reasons: &["0"],
            minimal_orbit: Some(MinimalOrbit::CABRibbon),
            provenance: Provenance::Stated,
            note: "4A/B^2 = 1: the ribbon on the twisted cubic, projected from the chordal cubic",
        },
        curve(
            "C_D",
            "x1 x2",
            "x3^3 + x4^3",
            vec![("A1", OnSingularLineOfQ), ("A1", OnSingularLineOfQ), ("A1", OnSingularLineOfQ), ("D4", SmoothPointOfQ), ("D4", SmoothPointOfQ)],
            StrictlySemistable,
            &["2.iii"],
            Some(MinimalOrbit::CD),
            Provenance::Stated,
            "three lines in each plane through the singular line",
        ),
        curve(
            "vertex_a3",
            CONE_Q,
            "x1^2 x4 + x2^3 + x3^3 + x4^3",
            vec![("A3", VertexOfQ)],
            StrictlySemistable,
            &["2.ii.alpha"],
            Some(MinimalOrbit::CAB),
            Provenance::Constructed,
            "A3 at the vertex",
        ),
        curve(
            "vertex_a4",
            CONE_Q,
            "x2^3 - 2 x1 x2 x3 + x1^2 x4 + x1 x2 x4",
            vec![("A4", VertexOfQ), ("A3", SmoothPointOfQ)],
            StrictlySemistable,
            &["2.ii.beta"],
            Some(MinimalOrbit::CABRibbon),
            Provenance::Constructed,
            "A4 at the vertex, no plane component through it",
        ),
        curve(
            "simultaneous_cone",
            "x2 x3 - x4^2",
            "x1 x2 x3 + x2^3 + x3^3 + x4^3",
            vec![("NotHypersurface", VertexOfQ)],
            Unstable,
            &["0'"],
            None,
            Provenance::Constructed,
            "the cubic is singular at the vertex of the cone",
        ),
        curve(
            "simultaneous_planes",
            "x1 x2",
            "x3^2 x4 + x1^3 + x2^3",
            vec![("NotHypersurface", OnSingularLineOfQ), ("A1", OnSingularLineOfQ)],
            Unstable,
            &["0'"],
            None,
            Provenance::Constructed,
            "the cubic is singular at a point of the singular line of the plane pair",
        ),
        curve(
            "nonreduced_planes",
            "x1 x2",
            "x1^2 x3 + x2^2 x4",
            vec![],
            Unstable,
            &["0"],
            None,
            Provenance::Derived,
            "double line in a plane; destabilized by weights (0,1,1,1)",
        ),
    ];
    v.extend([
        CorpusEntry {
            name: "F_AB(1,1)",
            payload: Payload::Cubic { f: "x0 x3^2 - x0 x2 x4 + x2^3 + x1 x2 x3 + x1^2 x4", marked: true },
            singularities: vec![("A5", Site::Marked), ("A5", Site::OffMarked)],
            status: StrictlySemistable,
            reasons: &["3.b"],
            minimal_orbit: Some(MinimalOrbit::FAB),
            provenance: Provenance::Stated,
            note: "two A5 points",
        },
        CorpusEntry {
            name: "F_D",
            payload: Payload::Cubic { f: "x0 x1 x2 + x3^3 + x4^3", marked: true },
            singularities: vec![("D4", Site::Marked), ("D4", Site::OffMarked), ("D4", Site::OffMarked)],
            status: StrictlySemistable,
            reasons: &["3.a"],
            minimal_orbit: Some(MinimalOrbit::FD),
            provenance: Provenance::Stated,
            note: "three D4 points",
        },
        CorpusEntry {
            name: "F_c",
            payload: Payload::Cubic { f: "x0 x3^2 - x0 x2 x4 + x2^3 - 2 x1 x2 x3 + x1^2 x4", marked: true },
            singularities: vec![],
            status: StrictlySemistable,
            reasons: &["3.d"],
            minimal_orbit: Some(MinimalOrbit::Fc),
            provenance: Provenance::Discrepancy,
            note: "chordal cubic, minus the Hankel determinant; the printed cross term has the opposite sign",
        },
        CorpusEntry {
            name: "fermat_cubic",
            payload: Payload::Cubic { f: "x0^3 + x1^3 + x2^3 + x3^3 + x4^3", marked: false },
            singularities: vec![],
            status: Stable,
            reasons: &["1"],
            minimal_orbit: None,
            provenance: Provenance::Derived,
            note: "smooth",
        },
    ]);
    v
}
