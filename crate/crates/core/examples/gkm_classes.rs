//! Schubert classes satisfy the weighted GKM divisibility; a perturbed tuple does not.

use wschub::exactpoly::{rat, Poly};
use wschub::fixtures::projective_flag;
use wschub::schubert::{Basis, Calculus};
use wschub::weighted::NumericConfig;

pub fn run_example() -> wschub::Result<()> {
    let calc = Calculus::new(NumericConfig::numeric(projective_flag(3)?, &[1, 2, 3, 4])?);
    println!("{} edges in the moment graph", calc.edges().len());
    for w in 0..calc.len() {
        let c = calc.class(w, Basis::Weighted)?;
        println!("class {}: GKM {}", w, if calc.gkm_check(&c).is_ok() { "ok" } else { "fails" });
    }
    let mut c = calc.class(1, Basis::Weighted)?;
    c.values[2] = &c.values[2] + &Poly::constant(calc.nvars(), rat(1));
    println!("perturbed class: {:?}", calc.gkm_check(&c).err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("GKM example");
}
