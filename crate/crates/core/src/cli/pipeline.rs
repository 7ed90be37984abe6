//! The two stability routes for corpus entries: the curve table and the
//! cubic threefold table reached through `x0 q + f`.

use crate::correspond::{chordal_detect, correspondence_check, cubic_to_curve, CorrespondenceReport, CubicThreefold};
use crate::exactalg::DEFAULT_JET;
use crate::singclass::{classify_scheme, ReportOptions, SingularityReport, TwoThreeScheme};
use crate::stability::{allcock_verdict, git_verdict, CurveFlags, StabilityVerdict, ThreefoldData};
use crate::{Error, Result};

pub const PRIMES: [u64; 2] = [101, 103];

pub fn curve_verdict(c: &TwoThreeScheme, flags: &CurveFlags) -> Result<(SingularityReport, StabilityVerdict)> {
    let r = classify_scheme(c, &ReportOptions::default())?;
    let v = git_verdict(&r, flags);
    Ok((r, v))
}

/// Threefold data of `x0 q + f` with the chordal flag filled in when the
/// singularities are not isolated.
pub fn threefold_data(c: &TwoThreeScheme) -> Result<(CorrespondenceReport, ThreefoldData)> {
    let r = correspondence_check(c, &PRIMES, DEFAULT_JET)?;
    let mut d = ThreefoldData::from_correspondence(&r, None);
    if d.non_isolated {
        d.chordal = Some(chordal_detect(c)?);
    }
    Ok((r, d))
}

pub fn threefold_verdict_of_curve(c: &TwoThreeScheme) -> Result<(ThreefoldData, StabilityVerdict)> {
    let (_, d) = threefold_data(c)?;
    let v = allcock_verdict(&d);
    Ok((d, v))
}

/// Verdict for a cubic with a double point at `(1,0,0,0,0)`, by projecting
/// from it.
pub fn cubic_verdict(x: &CubicThreefold) -> Result<(ThreefoldData, StabilityVerdict)> {
    let p = x
        .marked()
        .ok_or_else(|| Error::Refused("the cubic needs a marked double point".into()))?
        .to_vec();
    let c = cubic_to_curve(x, &p, None)?;
    threefold_verdict_of_curve(&c)
}
