//! Closed-form Chevalley products, each checked against the GKM product.

use wschub::exactpoly::{rat, Rational};
use wschub::schubert::{Basis, Calculus};
use wschub::weighted::{Flag, NumericConfig};
use wschub::rootdata::RootDatum;

pub fn run_example() -> wschub::Result<()> {
    let flag = Flag::new(&RootDatum::preset("cstar_sp4")?, &[1, 2, 1], None)?;
    let calc = Calculus::new(NumericConfig::numeric(flag, &[9, -2, -1])?);
    let mu: Vec<Rational> = vec![rat(0), rat(1), rat(0)];
    for v in 0..calc.len() {
        let e = calc.chevalley_mu(&mu, v, Basis::Weighted)?;
        let d = calc.chevalley_divisor(1, v, Basis::Weighted)?;
        println!(
            "v = p{}: x1·δ_v has {} terms; divisor product has {} terms",
            v,
            e.support().len(),
            d.general.support().len()
        );
    }
    let lm = calc.lambda_multiply(calc.len() / 2)?;
    println!("vλ·δ^H_v = {:?}", lm.support());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("Chevalley example");
}
