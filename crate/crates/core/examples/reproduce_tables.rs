//! Recomputes the weighted projective space example cell by cell.

use wschub::fixtures::reproduce;

pub fn run_example() -> wschub::Result<()> {
    let report = reproduce("wps-p4-tables")?;
    print!("{}", report.to_text());
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("fixture example");
}
