//! Run one group of the corpus checks and print the text report.

use canon4::cli::run_corpus;

fn main() -> canon4::Result<()> {
    let group = std::env::args().nth(1).unwrap_or_else(|| "divisors".into());
    let report = run_corpus(Some(&group), 7)?;
    print!("{}", report.to_text());
    Ok(())
}
