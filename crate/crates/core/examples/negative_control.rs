//! A weighted `ℙ⁴` structure constant that is not a nonnegative combination of negative roots.

use wschub::fixtures::{projective_flag, wps_position};
use wschub::positivity::negroot_expand_at;
use wschub::schubert::{Basis, Calculus};
use wschub::weighted::NumericConfig;

pub fn run_example() -> wschub::Result<()> {
    let calc = Calculus::new(NumericConfig::numeric(projective_flag(4)?, &[1, 1, 1, 2, 3])?);
    let v = |k| wps_position(&calc, k);
    let sq = calc.structure_constants(v(2), v(2), Basis::Plain)?;
    for (target, at) in [(2, 1), (1, 1)] {
        let e = negroot_expand_at(&calc, sq.coeff(v(target)), v(at))?;
        println!(
            "coefficient of δ_Z{} at v{}: {}  nonnegative: {}",
            target,
            at,
            e.poly.fmt_with(&|i| format!("b{}", i)),
            e.is_nonneg()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("negative control example");
}
