//! Classify the singular points of the generic C_AB curve.

use canon4::singclass::{classify_scheme, ReportOptions, TwoThreeScheme};

fn main() -> canon4::Result<()> {
    let c = TwoThreeScheme::parse("x3^2 - x2 x4", "x2^3 + x1 x2 x3 + x1^2 x4")?;
    let r = classify_scheme(&c, &ReportOptions::default())?;
    println!("quadric rank {}", r.quadric_rank);
    for p in &r.points {
        println!("{} at ({}) on {:?}", p.sing_type, p.point.join(":"), p.location);
    }
    Ok(())
}
