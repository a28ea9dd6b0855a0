//! JSON run configuration and element labels.
//!
//! ```json
//! {
//!   "preset": "lg24",
//!   "group": "cstar_sp4",
//!   "lambda": [1, 1, 1],
//!   "parabolic": [1],
//!   "chi": [8, -1, -1],
//!   "basis": "weighted",
//!   "u": "w1", "v": "s2.s1.s2",
//!   "out": "json"
//! }
//! ```
//!
//! `preset` is one of `wps(m)`, `gr24` or `lg24` and fills `group`, `lambda` and
//! `parabolic`. Otherwise `group` is a root-datum preset (`gl(k)`, `cstar_gl(k)`,
//! `cstar_sp4`) or `{"simple_roots": [[..]], "simple_coroots": [[..]]}`.
//! `parabolic` lists one-based simple roots and defaults to those orthogonal to
//! `λ`. `chi` is an integer array, `"symbolic"`, or absent for the non-weighted
//! cocharacter `χ₀`.
//!
//! Elements are reduced words (`s1.s3.s2`, `e`) naming a maximal coset
//! representative, or aliases: `top`, `bottom`, `pK` (position `K` in canonical
//! order, `p0` the top), `vK` (the point with `vλ = x_K`), `wK` (Lagrangian
//! labels, the same as `pK`), and `{i,j,..}` (the point with `wλ = x₀ + x_i + x_j + ..`).

use crate::error::{Error, Result};
use crate::rootdata::{parse_word, DatumSpec, RootDatum};
use crate::weighted::Flag;
use serde::Deserialize;
use std::sync::Arc;

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum GroupSpec {
    Preset(String),
    Explicit {
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
    },
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ChiSpec {
    Integers(Vec<i64>),
    Keyword(String),
}

#[derive(Clone, Debug, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub preset: Option<String>,
    pub group: Option<GroupSpec>,
    pub lambda: Option<Vec<i64>>,
    pub parabolic: Option<Vec<usize>>,
    pub chi: Option<ChiSpec>,
    pub basis: Option<String>,
    pub w: Option<String>,
    pub x: Option<String>,
    pub u: Option<String>,
    pub v: Option<String>,
    pub alpha: Option<usize>,
    pub mu: Option<Vec<i64>>,
    pub line: Option<Vec<i64>>,
    pub basepoint: Option<String>,
    pub fixture: Option<String>,
    pub out: Option<String>,
}

/// How `χ` is to be instantiated.
#[derive(Clone, Debug, PartialEq)]
pub enum ChiChoice {
    Numeric(Vec<i64>),
    Symbolic,
    NonWeighted,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidConfig(msg.into())
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| invalid(format!("malformed config: {}", e)))
    }

    pub fn from_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| invalid(format!("cannot read {}: {}", path.display(), e)))?;
        Self::from_json(&text)
    }

    /// Builds the flag from `preset` or from `group`, `lambda` and `parabolic`.
    pub fn flag(&self) -> Result<Arc<Flag>> {
        let (datum, lambda, parabolic) = match &self.preset {
            Some(p) => {
                if self.group.is_some() || self.lambda.is_some() || self.parabolic.is_some() {
                    return Err(invalid("`preset` excludes `group`, `lambda` and `parabolic`"));
                }
                flag_preset(p)?
            }
            None => {
                let group = self.group.as_ref().ok_or_else(|| invalid("missing `group` or `preset`"))?;
                let spec = match group {
                    GroupSpec::Preset(s) => DatumSpec::Preset(s.clone()),
                    GroupSpec::Explicit {
                        simple_roots,
                        simple_coroots,
                    } => DatumSpec::Explicit {
                        simple_roots: simple_roots.clone(),
                        simple_coroots: simple_coroots.clone(),
                    },
                };
                let datum = RootDatum::build(&spec).map_err(|e| invalid(e.to_string()))?;
                let lambda = self.lambda.clone().ok_or_else(|| invalid("missing `lambda`"))?;
                let parabolic = match &self.parabolic {
                    None => None,
                    Some(j) => Some(
                        j.iter()
                            .map(|&i| i.checked_sub(1).ok_or_else(|| invalid("parabolic indices are one-based")))
                            .collect::<Result<Vec<_>>>()?,
                    ),
                };
                (datum, lambda, parabolic)
            }
        };
        Flag::new(&datum, &lambda, parabolic.as_deref()).map_err(|e| invalid(e.to_string()))
    }

    pub fn chi_choice(&self) -> Result<ChiChoice> {
        match &self.chi {
            None => Ok(ChiChoice::NonWeighted),
            Some(ChiSpec::Integers(v)) => Ok(ChiChoice::Numeric(v.clone())),
            Some(ChiSpec::Keyword(k)) if k == "symbolic" => Ok(ChiChoice::Symbolic),
            Some(ChiSpec::Keyword(k)) => Err(invalid(format!("`chi` must be an integer array or \"symbolic\", not {:?}", k))),
        }
    }
}

/// `(datum, λ, zero-based parabolic)` for a named weighted flag variety.
pub fn flag_preset(name: &str) -> Result<(RootDatum, Vec<i64>, Option<Vec<usize>>)> {
    let name = name.trim();
    if let Some(m) = name.strip_prefix("wps(").and_then(|s| s.strip_suffix(')')) {
        let m: usize = m.trim().parse().map_err(|_| invalid(format!("bad preset {:?}", name)))?;
        if m == 0 {
            return Err(invalid("wps(m) needs m ≥ 1"));
        }
        let mut lambda = vec![0; m + 1];
        lambda[0] = 1;
        return Ok((RootDatum::preset(&format!("gl({})", m + 1))?, lambda, Some((1..m).collect())));
    }
    match name {
        "gr24" => Ok((RootDatum::preset("cstar_gl(4)")?, vec![1, 1, 1, 0, 0], Some(vec![0, 2]))),
        "lg24" => Ok((RootDatum::preset("cstar_sp4")?, vec![1, 1, 1], Some(vec![0]))),
        _ => Err(invalid(format!("unknown preset {:?}; expected wps(m), gr24 or lg24", name))),
    }
}

/// Resolves an element label to a position in `W^P`.
pub fn resolve_element(flag: &Flag, label: &str) -> Result<usize> {
    let label = label.trim();
    let cos = &flag.cosets;
    let n = cos.len();
    let by_weight = |mu: Vec<i64>| {
        (0..n)
            .find(|&p| flag.rep_lambda(p) == mu.as_slice())
            .ok_or_else(|| Error::InvalidInput(format!("no fixed point matches label {:?}", label)))
    };
    let index = |s: &str| s.parse::<usize>().ok();
    if label == "top" {
        return Ok(cos.top());
    }
    if label == "bottom" {
        return Ok(cos.bottom());
    }
    if let Some(k) = label.strip_prefix('p').or_else(|| label.strip_prefix('w')).and_then(index) {
        return if k < n {
            Ok(k)
        } else {
            Err(Error::InvalidInput(format!("{:?}: only {} fixed points", label, n)))
        };
    }
    if let Some(k) = label.strip_prefix('v').and_then(index) {
        if k >= flag.rank() {
            return Err(Error::InvalidInput(format!("{:?}: no coordinate x{}", label, k)));
        }
        let mut mu = vec![0; flag.rank()];
        mu[k] = 1;
        return by_weight(mu);
    }
    if let Some(inner) = label.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
        let mut mu = vec![0; flag.rank()];
        mu[0] = 1;
        for t in inner.split(',') {
            let i = index(t.trim()).filter(|&i| i >= 1 && i < flag.rank()).ok_or_else(|| {
                Error::InvalidInput(format!("{:?}: bad index {:?}", label, t))
            })?;
            mu[i] += 1;
        }
        return by_weight(mu);
    }
    let word = parse_word(label).ok_or_else(|| Error::InvalidInput(format!("cannot parse element {:?}", label)))?;
    let g = &flag.group;
    let w = g.from_word(&word)?;
    if g.length(w) != word.len() {
        return Err(Error::InvalidInput(format!("{:?} is not a reduced word", label)));
    }
    cos.position(w).ok_or_else(|| {
        Error::NotRepresentative(format!(
            "{} (its coset has maximal representative {})",
            label,
            g.format_word(cos.element(cos.coset_of(w)))
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_and_labels() {
        let cfg = RunConfig::from_json(r#"{"preset": "lg24", "chi": [8, -1, -1]}"#).unwrap();
        let f = cfg.flag().unwrap();
        assert_eq!(f.cosets.len(), 4);
        assert_eq!(resolve_element(&f, "w3").unwrap(), 3);
        assert_eq!(resolve_element(&f, "top").unwrap(), 0);
        let w = f.group.format_word(f.cosets.element(2));
        assert_eq!(resolve_element(&f, &w).unwrap(), 2);
        assert_eq!(cfg.chi_choice().unwrap(), ChiChoice::Numeric(vec![8, -1, -1]));

        let gr = RunConfig::from_json(r#"{"preset": "gr24"}"#).unwrap().flag().unwrap();
        let p = resolve_element(&gr, "{2,4}").unwrap();
        assert_eq!(gr.rep_lambda(p), &[1, 0, 1, 0, 1]);

        let wps = RunConfig::from_json(r#"{"preset": "wps(4)"}"#).unwrap().flag().unwrap();
        assert_eq!(resolve_element(&wps, "v1").unwrap(), 3);
    }

    #[test]
    fn explicit_group_and_errors() {
        let cfg = RunConfig::from_json(
            r#"{"group": {"simple_roots": [[1,-1,0],[0,1,-1]], "simple_coroots": [[1,-1,0],[0,1,-1]]},
                "lambda": [2,1,0], "chi": "symbolic"}"#,
        )
        .unwrap();
        let f = cfg.flag().unwrap();
        assert_eq!(f.cosets.len(), 6);
        assert_eq!(cfg.chi_choice().unwrap(), ChiChoice::Symbolic);
        assert!(matches!(resolve_element(&f, "s1.s1"), Err(Error::InvalidInput(_))));
        assert!(RunConfig::from_json(r#"{"grup": "gl(3)"}"#).is_err());
        let bad = RunConfig::from_json(r#"{"group": "gl(3)", "lambda": [1,0,0], "parabolic": [1]}"#).unwrap();
        assert!(matches!(bad.flag(), Err(Error::InvalidConfig(_))));
        let gl3 = RunConfig::from_json(r#"{"group": "gl(3)", "lambda": [1,0,0]}"#).unwrap().flag().unwrap();
        assert!(matches!(resolve_element(&gl3, "e"), Err(Error::NotRepresentative(_))));
    }
}
