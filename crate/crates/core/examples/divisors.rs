//! Divisor classes: conversions, pencils and the Hassett-Keel slope.

use canon4::divisors::*;
use canon4::exactalg::q;

fn main() -> canon4::Result<()> {
    let pol = PicClass::lambda_delta(9, -1);
    println!("9 lambda - delta = {}", pol.to(PicBasis::EtaH));
    for cfg in [PencilConfig::FixedQuadric, PencilConfig::FixedCubic] {
        println!("{cfg:?}: {} singular fibres", pencil_singular_count(cfg).singular_fibers);
    }
    let t = test_curve_constraints(&q(9), &q(1))?;
    println!("b1 = {}, b2 = {}", t.b1, t.b2);
    let reduced = absorb_exceptional(&t.class).expect("b1, b2 >= b0");
    println!("alpha = {}", hassett_keel_alpha(&reduced).expect("equal boundary coefficients"));
    Ok(())
}
