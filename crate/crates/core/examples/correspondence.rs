//! Pass from a curve to its cubic threefold and back, and compare singularities.

use canon4::correspond::{correspondence_check, cubic_to_curve, curve_to_cubic};
use canon4::exactalg::q;
use canon4::singclass::TwoThreeScheme;

fn main() -> canon4::Result<()> {
    let c = TwoThreeScheme::parse("x1 x4 - x2 x3", "x1 x3^2 + x2^2 x4")?;
    let x = curve_to_cubic(&c)?;
    println!("F = {}", x.f());

    let p = vec![q(1), q(0), q(0), q(0), q(0)];
    let back = cubic_to_curve(&x, &p, None)?;
    println!("round trip gives the same scheme: {}", back.same_scheme(&c));

    let r = correspondence_check(&c, &[101, 103], canon4::exactalg::DEFAULT_JET)?;
    println!("{}", serde_json::to_string_pretty(&r)?);
    Ok(())
}
