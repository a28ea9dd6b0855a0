//! Weyl group, Bruhat covers and maximal coset representatives of `Sp₄`.

use wschub::rootdata::{RootDatum, WeylGroup};
use wschub::weighted::Flag;

pub fn run_example() -> wschub::Result<()> {
    let datum = RootDatum::preset("cstar_sp4")?;
    let g = WeylGroup::new(&datum)?;
    println!("{}: |W| = {}, longest element {}", datum.name, g.len(), g.format_word(g.longest()));
    for (root, coroot) in &datum.positive_roots {
        println!("  root {:?} coroot {:?}", root, coroot);
    }
    let flag = Flag::from_group(g, &[1, 1, 1], Some(&[0]))?;
    for p in 0..flag.cosets.len() {
        let below: Vec<String> = flag
            .cosets
            .covers_below(p)
            .iter()
            .map(|c| flag.group.format_word(flag.cosets.element(c.lower)))
            .collect();
        println!(
            "  W^P[{}] = {:<12} wλ = {:?}  covers {:?}",
            p,
            flag.group.format_word(flag.cosets.element(p)),
            flag.rep_lambda(p),
            below
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("root data example");
}
