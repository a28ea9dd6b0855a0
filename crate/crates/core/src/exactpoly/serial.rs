use super::field::{parse_rational, Field, Rational};
use super::poly::{Monomial, Poly};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Wire form of one polynomial term.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exponents: Vec<u32>,
}

/// Terms in descending graded-lex order.
pub fn poly_to_json<F: Field>(p: &Poly<F>) -> Vec<TermJson> {
    p.terms()
        .rev()
        .map(|(m, c)| TermJson {
            coeff: c.to_string(),
            exponents: m.0.clone(),
        })
        .collect()
}

pub fn poly_from_json(nvars: usize, terms: &[TermJson]) -> Result<Poly<Rational>> {
    let mut p = Poly::zero(nvars);
    for t in terms {
        if t.exponents.len() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: t.exponents.len(),
            });
        }
        let c = parse_rational(&t.coeff)
            .ok_or_else(|| Error::InvalidInput(format!("bad coefficient {:?}", t.coeff)))?;
        p.add_term(Monomial(t.exponents.clone()), c);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::field::ratio;

    #[test]
    fn round_trip() {
        let p = &Poly::<Rational>::var(3, 1).pow(2).scale(&ratio(-3, 4)) + &Poly::var(3, 0);
        let j = serde_json::to_string(&poly_to_json(&p)).unwrap();
        assert_eq!(j, r#"[{"coeff":"-3/4","exponents":[0,2,0]},{"coeff":"1","exponents":[1,0,0]}]"#);
        let back: Vec<TermJson> = serde_json::from_str(&j).unwrap();
        assert_eq!(poly_from_json(3, &back).unwrap(), p);
    }
}
