//! Positivity certificates for weighted structure constants.

use wschub::positivity::{certify_product, verify_certificate};
use wschub::fixtures::lg24_flag;
use wschub::schubert::Calculus;
use wschub::weighted::NumericConfig;

pub fn run_example() -> wschub::Result<()> {
    let flag = lg24_flag()?;
    let calc = Calculus::new(NumericConfig::numeric(flag.clone(), &[11, -4, -3])?);
    let nw = Calculus::new(NumericConfig::nonweighted(flag)?);
    let pc = certify_product(&calc, &nw, 2, 2)?;
    for (y, cert) in pc.certificates.iter().enumerate() {
        if pc.constants[y].is_zero() {
            continue;
        }
        let violations = verify_certificate(&calc.cfg, cert, &pc.constants[y]);
        println!("c^{} = {}  ({} terms, violations {:?})", y, pc.constants[y], cert.terms.len(), violations);
        println!("  {}", cert.to_json(&calc.cfg));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("certificate example");
}
