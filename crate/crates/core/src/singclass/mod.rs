//! Singular points of quadric/cubic complete intersections in P^3.

pub mod classify;
pub mod plane;
pub mod quadric;
pub mod report;
pub mod scan;
pub mod scheme;

pub use classify::{classify_branch, classify_local, classify_point, verify_singular_point, SingType};
pub use plane::{plane_component_test, plane_test_applies, PlaneFlag};
pub use quadric::{quadric_rank, Location, QuadricRank};
pub use report::{classify_scheme, ReportOptions, SingularPoint, SingularityReport};
pub use scan::singular_points_scan;
pub use scheme::{scheme_vars, TwoThreeScheme};
