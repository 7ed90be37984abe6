//! Stability verdicts for a few curves from the corpus.

use canon4::cli::corpus;
use canon4::cli::pipeline::curve_verdict;

fn main() -> canon4::Result<()> {
    for e in corpus().iter().filter(|e| ["stable_a2_vertex", "C_D", "simultaneous_cone"].contains(&e.name)) {
        let c = e.scheme().expect("a curve")?;
        let (_, v) = curve_verdict(&c, &e.flags())?;
        println!("{:<18} {:?} {:?} orbit {:?}", e.name, v.status, v.reasons, v.minimal_orbit);
    }
    Ok(())
}
