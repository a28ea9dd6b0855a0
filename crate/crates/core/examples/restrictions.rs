//! Fixed-point restrictions of Schubert classes and the Euler class of a point.

use wschub::fixtures::lg24_flag;
use wschub::schubert::{Basis, Calculus};
use wschub::weighted::NumericConfig;

pub fn run_example() -> wschub::Result<()> {
    let flag = lg24_flag()?;
    let point = flag.cosets.len() - 1;
    let (c, factors) = flag.restrictions().euler_factors(point);
    println!("non-weighted point class at the point: {} = {} × {:?}", flag.restrictions().value(point, point), c, factors);

    let calc = Calculus::new(NumericConfig::numeric(flag.clone(), &[8, -1, -1])?);
    for w in 0..calc.len() {
        let row: Vec<String> = (0..calc.len())
            .map(|x| calc.weighted_restrict(w, x, Basis::Weighted).map(|p| p.to_string()))
            .collect::<wschub::Result<_>>()?;
        println!("δ_{}: {}", w, row.join(" | "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("restriction example");
}
