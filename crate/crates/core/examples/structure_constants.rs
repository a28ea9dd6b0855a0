//! Products of Schubert classes in the weighted and plain bases.

use wschub::fixtures::gr24_flag;
use wschub::schubert::{Basis, Calculus};
use wschub::weighted::NumericConfig;

pub fn run_example() -> wschub::Result<()> {
    let calc = Calculus::new(NumericConfig::numeric(gr24_flag()?, &[9, 1, 2, 3, 4])?);
    let g = calc.cfg.group();
    let name = |p: usize| g.format_word(calc.cfg.cosets().element(p));
    for (u, v) in [(1, 1), (1, 2), (2, 2)] {
        for basis in [Basis::Weighted, Basis::Plain] {
            let e = calc.structure_constants(u, v, basis)?;
            let terms: Vec<String> = e.support().iter().map(|&w| format!("({})·[{}]", e.coeffs[w], name(w))).collect();
            println!("[{}]·[{}] ({}) = {}", name(u), name(v), basis, terms.join(" + "));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("structure constant example");
}
