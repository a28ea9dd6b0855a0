//! `a_w`, stabilizer orders and `q_w` for the weighted Lagrangian Grassmannian.

use wschub::fixtures::lg24_flag;
use wschub::weighted::NumericConfig;

pub fn run_example() -> wschub::Result<()> {
    let flag = lg24_flag()?;
    for chi in [[8, -1, -1], [3, -1, 0], [11, -4, -3]] {
        let cfg = NumericConfig::numeric(flag.clone(), &chi)?;
        let diag = cfg.validate();
        let row: Vec<String> = (0..flag.cosets.len())
            .map(|p| format!("a={} q={}", cfg.a_rep(p), cfg.q_value(p)))
            .collect();
        println!("χ = {:?} valid={} : {}", chi, diag.is_valid(), row.join(", "));
    }
    let bad = NumericConfig::numeric(flag, &[11, -4, 3])?;
    println!("χ = [11, -4, 3]: {:?}", bad.validate().messages);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("weighted configuration example");
}
