//! The `wschub` command line: argument parsing, command dispatch and exit codes.

use crate::config::{resolve_element, ChiChoice, RunConfig};
use crate::error::Error;
use crate::exactpoly::field::{Field, Rational};
use crate::exactpoly::ratfunc::RatFunc;
use crate::fixtures;
use crate::positivity::{certify_product, negroot_expand_at, verify_certificate};
use crate::schubert::{Basis, Calculus, SchubertExpansion};
use crate::weighted::{Flag, NumericConfig, SymbolicConfig, WeightedConfig};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::sync::Arc;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_CONFIG: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "wschub", version, about = "Exact equivariant Schubert calculus on weighted flag varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// JSON run configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub out: Option<OutFormat>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List W^P with a_w, q_w, inversion sets and Bruhat covers.
    Describe,
    /// Restriction of the class of `w` to the fixed point `x`.
    Restrict {
        #[arg(long)]
        w: Option<String>,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        basis: Option<String>,
    },
    /// Schubert expansion of the product of the classes of `u` and `v`.
    Multiply {
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        v: Option<String>,
        #[arg(long)]
        basis: Option<String>,
    },
    /// Closed-form Chevalley product, checked against the GKM product.
    Chevalley {
        #[arg(long)]
        v: Option<String>,
        /// One-based simple root for the divisor product.
        #[arg(long)]
        alpha: Option<usize>,
        /// Comma-separated weight for multiplication by a character.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        mu: Option<Vec<i64>>,
        /// Comma-separated Levi-invariant weight for a line bundle class.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        line: Option<Vec<i64>>,
        #[arg(long)]
        basis: Option<String>,
    },
    /// Positivity certificates for the structure constants of `u` and `v`.
    Certify {
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        v: Option<String>,
        #[arg(long)]
        w: Option<String>,
        #[arg(long)]
        basepoint: Option<String>,
    },
    /// Recompute a worked example cell by cell.
    Reproduce {
        fixture: Option<String>,
    },
}

/// Output text and exit status of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    json: Value,
    text: String,
    code: i32,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report { json, text, code: EXIT_OK }
    }
}

/// Failure in the configuration stage or the computation stage.
enum Failure {
    Config(Error),
    Compute(Error),
}

type Step<T> = std::result::Result<T, Failure>;

fn config_err(e: Error) -> Failure {
    Failure::Config(e)
}

fn compute_err(e: Error) -> Failure {
    Failure::Compute(e)
}

pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let cfg = match &cli.config {
        Some(p) => RunConfig::from_file(p),
        None => Ok(RunConfig::default()),
    };
    let cfg = match cfg {
        Ok(c) => c,
        Err(e) => return failure(Failure::Config(e)),
    };
    let out = match (cli.out, cfg.out.as_deref()) {
        (Some(o), _) => o,
        (None, None) | (None, Some("text")) => OutFormat::Text,
        (None, Some("json")) => OutFormat::Json,
        (None, Some(o)) => {
            return failure(Failure::Config(Error::InvalidConfig(format!("unknown output format {:?}", o))))
        }
    };
    match dispatch(&cli.command, &cfg) {
        Ok(r) => Outcome {
            code: r.code,
            stdout: match out {
                OutFormat::Json => format!("{}\n", serde_json::to_string_pretty(&r.json).expect("json")),
                OutFormat::Text => r.text,
            },
            stderr: String::new(),
        },
        Err(f) => failure(f),
    }
}

fn failure(f: Failure) -> Outcome {
    let (code, msg) = match f {
        Failure::Config(e @ Error::InvalidConfig(_)) => (EXIT_INVALID_CONFIG, e.to_string()),
        Failure::Config(e) => (EXIT_INVALID_CONFIG, format!("invalid configuration: {}", e)),
        Failure::Compute(e) => (EXIT_COMPUTATION, format!("computation error: {}", e)),
    };
    Outcome {
        code,
        stdout: String::new(),
        stderr: format!("wschub: {}\n", msg),
    }
}

fn pick(flag: Option<&String>, cfg: Option<&String>, what: &str) -> Step<String> {
    flag.or(cfg)
        .cloned()
        .ok_or_else(|| config_err(Error::InvalidConfig(format!("missing `{}`", what))))
}

fn pick_basis(flag: Option<&String>, cfg: Option<&String>) -> Step<Basis> {
    match flag.or(cfg) {
        None => Ok(Basis::Weighted),
        Some(s) => s.parse().map_err(config_err),
    }
}

/// A calculus over rationals or over rational functions in the `a_i`.
enum Session {
    Numeric(Calculus<Rational>),
    Symbolic(Calculus<RatFunc>),
}

fn open(cfg: &RunConfig) -> Step<(Arc<Flag>, Session)> {
    let flag = cfg.flag().map_err(config_err)?;
    let session = match cfg.chi_choice().map_err(config_err)? {
        ChiChoice::Numeric(chi) => {
            let c = NumericConfig::numeric(flag.clone(), &chi).map_err(config_err)?;
            check_valid(&c)?;
            Session::Numeric(Calculus::new(c))
        }
        ChiChoice::NonWeighted => {
            let c = NumericConfig::nonweighted(flag.clone()).map_err(config_err)?;
            check_valid(&c)?;
            Session::Numeric(Calculus::new(c))
        }
        ChiChoice::Symbolic => {
            let c = SymbolicConfig::symbolic(flag.clone()).map_err(config_err)?;
            check_valid(&c)?;
            Session::Symbolic(Calculus::new(c))
        }
    };
    Ok((flag, session))
}

fn check_valid<F: Field>(c: &WeightedConfig<F>) -> Step<()> {
    let d = c.validate();
    if d.is_valid() {
        Ok(())
    } else {
        Err(config_err(Error::InvalidConfig(d.messages.join("; "))))
    }
}

fn element(flag: &Flag, label: &str) -> Step<usize> {
    resolve_element(flag, label).map_err(config_err)
}

fn word<F: Field>(calc: &Calculus<F>, p: usize) -> String {
    calc.cfg.group().format_word(calc.cfg.cosets().element(p))
}

fn expansion_json<F: Field>(calc: &Calculus<F>, e: &SchubertExpansion<F>) -> Value {
    json!({
        "basis": e.basis.to_string(),
        "terms": e.support().iter().map(|&p| json!({
            "position": p,
            "class": word(calc, p),
            "coeff": e.coeffs[p].to_string(),
        })).collect::<Vec<_>>(),
    })
}

fn expansion_text<F: Field>(calc: &Calculus<F>, e: &SchubertExpansion<F>) -> String {
    let sym = match e.basis {
        Basis::Weighted => "δ",
        Basis::Plain => "δ^H",
    };
    if e.is_zero() {
        return "0\n".into();
    }
    e.support()
        .iter()
        .map(|&p| {
            let c = &e.coeffs[p];
            let c = if c.len() == 1 { c.to_string() } else { format!("({})", c) };
            format!("  {} {}[p{} {}]\n", c, sym, p, word(calc, p))
        })
        .collect()
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> Step<Report> {
    if let Command::Reproduce { fixture } = cmd {
        let name = pick(fixture.as_ref(), cfg.fixture.as_ref(), "fixture")?;
        return reproduce(&name);
    }
    let (flag, session) = open(cfg)?;
    match session {
        Session::Numeric(calc) => match cmd {
            Command::Certify { u, v, w, basepoint } => {
                let u = element(&flag, &pick(u.as_ref(), cfg.u.as_ref(), "u")?)?;
                let v = element(&flag, &pick(v.as_ref(), cfg.v.as_ref(), "v")?)?;
                let w = match w.as_ref().or(cfg.w.as_ref()) {
                    Some(l) => Some(element(&flag, l)?),
                    None => None,
                };
                let b = match basepoint.as_ref().or(cfg.basepoint.as_ref()) {
                    Some(l) => Some(element(&flag, l)?),
                    None => None,
                };
                certify(&calc, u, v, w, b)
            }
            Command::Describe => Ok(describe_numeric(&calc)),
            _ => generic(cmd, cfg, &flag, &calc),
        },
        Session::Symbolic(calc) => match cmd {
            Command::Certify { .. } => Err(config_err(Error::Symbolic("certify needs integer χ".into()))),
            _ => generic(cmd, cfg, &flag, &calc),
        },
    }
}

fn generic<F: Field>(cmd: &Command, cfg: &RunConfig, flag: &Flag, calc: &Calculus<F>) -> Step<Report> {
    match cmd {
        Command::Describe => Ok(describe_common(calc).into_report()),
        Command::Restrict { w, x, basis } => {
            let w = element(flag, &pick(w.as_ref(), cfg.w.as_ref(), "w")?)?;
            let x = element(flag, &pick(x.as_ref(), cfg.x.as_ref(), "x")?)?;
            let basis = pick_basis(basis.as_ref(), cfg.basis.as_ref())?;
            let value = calc.weighted_restrict(w, x, basis).map_err(compute_err)?;
            let plain = calc.restrict_nonweighted(w, x);
            let json = json!({
                "w": word(calc, w),
                "x": word(calc, x),
                "basis": basis.to_string(),
                "value": value.to_string(),
                "nonweighted": plain.to_string(),
            });
            let text = format!(
                "restriction of class {} at {} ({} basis): {}\nnon-weighted restriction: {}\n",
                word(calc, w),
                word(calc, x),
                basis,
                value,
                plain
            );
            Ok(Report::ok(json, text))
        }
        Command::Multiply { u, v, basis } => {
            let u = element(flag, &pick(u.as_ref(), cfg.u.as_ref(), "u")?)?;
            let v = element(flag, &pick(v.as_ref(), cfg.v.as_ref(), "v")?)?;
            let basis = pick_basis(basis.as_ref(), cfg.basis.as_ref())?;
            let e = calc.structure_constants(u, v, basis).map_err(compute_err)?;
            let json = json!({"u": word(calc, u), "v": word(calc, v), "product": expansion_json(calc, &e)});
            let text = format!("class {} times class {}:\n{}", word(calc, u), word(calc, v), expansion_text(calc, &e));
            Ok(Report::ok(json, text))
        }
        Command::Chevalley { v, alpha, mu, line, basis } => {
            let v = element(flag, &pick(v.as_ref(), cfg.v.as_ref(), "v")?)?;
            let basis = pick_basis(basis.as_ref(), cfg.basis.as_ref())?;
            let alpha = alpha.or(cfg.alpha);
            let mu = mu.clone().or_else(|| cfg.mu.clone());
            let line = line.clone().or_else(|| cfg.line.clone());
            let chosen = [alpha.is_some(), mu.is_some(), line.is_some()].iter().filter(|&&b| b).count();
            if chosen > 1 {
                return Err(config_err(Error::InvalidConfig("give at most one of `alpha`, `mu`, `line`".into())));
            }
            let check_len = |m: &Vec<i64>| {
                if m.len() == calc.nvars() {
                    Ok(calc.cfg.lift(m))
                } else {
                    Err(config_err(Error::DimensionMismatch { expected: calc.nvars(), found: m.len() }))
                }
            };
            let (kind, forms): (String, Vec<(&str, SchubertExpansion<F>)>) = if let Some(a) = alpha {
                let i = a.checked_sub(1).ok_or_else(|| config_err(Error::InvalidConfig("`alpha` is one-based".into())))?;
                let d = calc.chevalley_divisor(i, v, basis).map_err(|e| match e {
                    Error::InvalidInput(_) | Error::NotRepresentative(_) => config_err(e),
                    e => compute_err(e),
                })?;
                let mut forms = vec![("general", d.general)];
                if let Some(c) = d.cominuscule {
                    forms.push(("cominuscule", c));
                }
                if let Some(r) = d.rebased {
                    forms.push(("w0-rebased", r));
                }
                (format!("divisor of α{} (class {})", a, word(calc, d.u)), forms)
            } else if let Some(m) = mu {
                let m = check_len(&m)?;
                let e = calc.chevalley_mu(&m, v, basis).map_err(compute_err)?;
                (format!("character {:?}", mu_text(&m)), vec![("general", e)])
            } else if let Some(m) = line {
                let m = check_len(&m)?;
                let e = calc.chevalley_line(&m, v, basis).map_err(|e| match e {
                    Error::InvalidInput(_) => config_err(e),
                    e => compute_err(e),
                })?;
                (format!("line bundle {:?}", mu_text(&m)), vec![("general", e)])
            } else {
                if basis != Basis::Plain {
                    return Err(config_err(Error::InvalidConfig("the λ-multiplication formula is stated in the plain basis".into())));
                }
                let e = calc.lambda_multiply(v).map_err(compute_err)?;
                ("vλ".to_string(), vec![("general", e)])
            };
            let json = json!({
                "v": word(calc, v),
                "multiplier": kind,
                "verified_against_gkm": true,
                "forms": forms.iter().map(|(n, e)| json!({"form": n, "expansion": expansion_json(calc, e)})).collect::<Vec<_>>(),
            });
            let mut text = format!("{} times class {} (closed forms agree with the GKM product)\n", kind, word(calc, v));
            for (n, e) in &forms {
                text.push_str(&format!(" {}:\n{}", n, expansion_text(calc, e)));
            }
            Ok(Report::ok(json, text))
        }
        Command::Certify { .. } | Command::Reproduce { .. } => unreachable!("handled in dispatch"),
    }
}

fn mu_text<F: Field>(m: &[F]) -> Vec<String> {
    m.iter().map(|x| x.to_string()).collect()
}

struct Describe {
    json: Value,
    text: String,
}

impl Describe {
    fn into_report(self) -> Report {
        Report::ok(self.json, self.text)
    }
}

fn describe_common<F: Field>(calc: &Calculus<F>) -> Describe {
    let cfg = &calc.cfg;
    let cos = cfg.cosets();
    let flag = &cfg.flag;
    let diag = cfg.validate();
    let mut points = Vec::new();
    let mut text = format!(
        "{} with λ = {:?}, parabolic {:?}\n|W^P| = {}, λ minuscule: {}\nχ = [{}]\n",
        cfg.datum().name,
        flag.lambda,
        cos.parabolic.iter().map(|i| i + 1).collect::<Vec<_>>(),
        calc.len(),
        flag.is_minuscule(),
        cfg.chi().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
    );
    for p in 0..calc.len() {
        let inv: Vec<Vec<i64>> = cos.inversion_set(p).iter().map(|&k| flag.positive_root(k).to_vec()).collect();
        let below: Vec<String> = cos.covers_below(p).iter().map(|c| word(calc, c.lower)).collect();
        let a = cfg.a_rep(p).to_string();
        points.push(json!({
            "position": p,
            "word": word(calc, p),
            "w_lambda": flag.rep_lambda(p),
            "a": a,
            "inversions": inv,
            "covers": below,
        }));
        text.push_str(&format!(
            "p{} {}: wλ = {:?}, a_w = {}, Φ_w^P = {:?}, covers {}\n",
            p,
            word(calc, p),
            flag.rep_lambda(p),
            a,
            inv,
            if below.is_empty() { "none".to_string() } else { below.join(", ") }
        ));
    }
    for m in &diag.messages {
        text.push_str(&format!("warning: {}\n", m));
    }
    let json = json!({
        "datum": cfg.datum().name,
        "lambda": flag.lambda,
        "parabolic": cos.parabolic.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "minuscule": flag.is_minuscule(),
        "chi": cfg.chi().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "points": points,
        "diagnostics": diag.messages,
    });
    Describe { json, text }
}

fn describe_numeric(calc: &Calculus<Rational>) -> Report {
    let mut d = describe_common(calc);
    let cfg = &calc.cfg;
    d.text.push_str(&format!("gcd(χ) = {}\n", cfg.gcd_chi()));
    for p in 0..calc.len() {
        let (stab, below, equal) = cfg.stab_divisibility(p);
        d.text.push_str(&format!(
            "p{}: q_w = {}, |Stab| = {}, gcd(a_y : y ≤ w) = {}{}\n",
            p,
            cfg.q_value(p),
            stab,
            below,
            if equal { " (equal)" } else { "" }
        ));
        let pt = &mut d.json["points"][p];
        pt["q"] = json!(cfg.q_value(p).to_string());
        pt["stabilizer"] = json!(stab.to_string());
        pt["gcd_below"] = json!(below.to_string());
    }
    d.json["gcd_chi"] = json!(cfg.gcd_chi().to_string());
    d.json["chi_input"] = json!(cfg.chi_raw());
    d.into_report()
}

fn certify(calc: &Calculus<Rational>, u: usize, v: usize, only: Option<usize>, basepoint: Option<usize>) -> Step<Report> {
    let nw = Calculus::new(NumericConfig::nonweighted(calc.cfg.flag.clone()).map_err(compute_err)?);
    let pc = match certify_product(calc, &nw, u, v) {
        Ok(pc) => pc,
        Err(Error::Infeasible(m)) => {
            let json = json!({"u": word(calc, u), "v": word(calc, v), "status": "violation", "reason": m});
            return Ok(Report {
                text: format!("no certificate: {}\n", m),
                json,
                code: EXIT_VIOLATION,
            });
        }
        Err(e) => return Err(compute_err(e)),
    };
    let mut bad = false;
    let mut entries = Vec::new();
    let mut text = format!("structure constants of {} and {}\n", word(calc, u), word(calc, v));
    for y in 0..calc.len() {
        if only.map_or(false, |w| w != y) {
            continue;
        }
        let c = &pc.constants[y];
        if c.is_zero() && only.is_none() {
            continue;
        }
        let cert = &pc.certificates[y];
        let violations = verify_certificate(&calc.cfg, cert, c);
        bad |= !violations.is_empty();
        let mut entry = json!({
            "w": word(calc, y),
            "constant": c.to_string(),
            "certificate": cert.to_json(&calc.cfg),
            "violations": violations.iter().map(|v| format!("{:?}", v)).collect::<Vec<_>>(),
        });
        text.push_str(&format!(
            " c[{}] = {}\n   certificate with {} terms: {}\n",
            word(calc, y),
            c,
            cert.terms.len(),
            if violations.is_empty() { "verified".to_string() } else { format!("violations {:?}", violations) }
        ));
        if let Some(b) = basepoint {
            let e = negroot_expand_at(calc, c, b).map_err(compute_err)?;
            let nonneg = e.is_nonneg();
            bad |= !nonneg;
            entry["basepoint"] = json!({
                "at": word(calc, b),
                "coordinates": e.poly.fmt_with(&|i| format!("b{}", i)),
                "nonnegative": nonneg,
            });
            text.push_str(&format!(
                "   at {} in negative simple roots: {} ({})\n",
                word(calc, b),
                e.poly.fmt_with(&|i| format!("b{}", i)),
                if nonneg { "nonnegative" } else { "NEGATIVE" }
            ));
        }
        entries.push(entry);
    }
    let json = json!({
        "u": word(calc, u),
        "v": word(calc, v),
        "status": if bad { "violation" } else { "verified" },
        "constants": entries,
    });
    Ok(Report {
        json,
        text,
        code: if bad { EXIT_VIOLATION } else { EXIT_OK },
    })
}

fn reproduce(name: &str) -> Step<Report> {
    let names: Vec<&str> = if name == "all" { fixtures::FIXTURES.to_vec() } else { vec![name] };
    let mut reports = Vec::new();
    for n in names {
        reports.push(fixtures::reproduce(n).map_err(|e| match e {
            Error::InvalidInput(_) => config_err(e),
            e => compute_err(e),
        })?);
    }
    let passed = reports.iter().all(|r| r.passed());
    Ok(Report {
        json: json!({"passed": passed, "fixtures": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>()}),
        text: reports.iter().map(|r| r.to_text()).collect(),
        code: if passed { EXIT_OK } else { EXIT_VIOLATION },
    })
}
