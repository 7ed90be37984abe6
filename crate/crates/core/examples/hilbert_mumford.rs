//! Destabilizing and zero-weight one-parameter subgroups for cubics and Chow forms.

use canon4::correspond::CubicThreefold;
use canon4::singclass::TwoThreeScheme;
use canon4::stability::{chow_certificate, chow_form, chow_weight_min, destabilize_search, zero_weight_witness, FrameSearch};

fn main() -> canon4::Result<()> {
    let planes = TwoThreeScheme::parse("x1 x2", "x1^2 x3 + x2^2 x4")?;
    let r = chow_form(&planes)?;
    println!("Chow form of degree {:?} with {} terms", r.poly.degree(), r.poly.num_terms());
    if let Some(w) = chow_certificate(&r) {
        println!("destabilizing 1-PS {w:?}, weight {}", chow_weight_min(&r, &w).unwrap());
    }

    let fd = CubicThreefold::parse("x0 x1 x2 + x3^3 + x4^3", None)?;
    println!("F_D zero-weight 1-PS: {:?}", zero_weight_witness(fd.f()));

    let fermat = CubicThreefold::parse("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", None)?;
    let found = destabilize_search(fermat.f(), &FrameSearch::random(20, 1))?;
    println!("Fermat cubic destabilized in 21 frames: {}", found.is_some());
    Ok(())
}
