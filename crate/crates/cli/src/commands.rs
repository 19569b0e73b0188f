use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;
use twistcheck::algebroid::{
    check_balanced_routes, check_bialgebroid_with, check_main_theorem, check_smash, scalar_extension_unchecked,
    smash_product, CheckOptions,
};
use twistcheck::hopf::{check_bialgebra, check_hopf, BialgebraData};
use twistcheck::twist::{check_twist, Twist};
use twistcheck::yd::{
    check_braided_commutative, check_comodule, check_czgen, check_module, check_rmatrix, check_yd, check_yd_algebra,
    YDAlgebra, YDModule,
};
use twistcheck::{Check, Error, Report};

use crate::spec::{Loaded, Object};

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Run the axiom checks of one object.
    Verify { kind: VerifyKind, name: String },
    /// Smash product A♯H, and its scalar-extension bialgebroid when A is
    /// braided commutative.
    Smash { a: String, h: String },
    /// Twisting theorems for YD data and bialgebroids.
    #[command(subcommand)]
    Theorem(TheoremCommand),
    /// Verify every object in the file, then every entry of `runs`.
    Report,
}

#[derive(Clone, Debug, Subcommand)]
pub enum TheoremCommand {
    /// Twisting of a YD module or YD algebra X by F, parts (i)-(vi).
    Czgen { h: String, f: String, x: String },
    /// Scalar extension of the twisted pair against the twist of the scalar
    /// extension.
    Main { a: String, h: String, f: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Bialgebra,
    Hopf,
    Twist,
    Yd,
    Ydalgebra,
    Rmatrix,
    Module,
    Comodule,
    /// Braided commutativity of a YD algebra.
    Braided,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub seed: u64,
}

#[derive(Debug, Error)]
#[error("{0}")]
pub struct InputError(pub String);

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub command: String,
    pub passed: bool,
    pub reports: Vec<Report>,
}

impl Outcome {
    pub fn new(command: String, reports: Vec<Report>) -> Outcome {
        Outcome {
            command,
            passed: reports.iter().all(Report::passed),
            reports,
        }
    }
}

/// One `runs` entry, parsed with the same grammar as the command line.
#[derive(Parser)]
#[command(no_binary_name = true)]
struct RunLine {
    #[command(subcommand)]
    command: Command,
}

pub fn execute(loaded: &Loaded, cmd: &Command, opts: RunOptions) -> Result<Vec<Report>, InputError> {
    match cmd {
        Command::Verify { kind, name } => verify(loaded, *kind, name).map(|r| vec![r]),
        Command::Smash { a, h } => smash(loaded, a, h, opts),
        Command::Theorem(TheoremCommand::Czgen { h, f, x }) => czgen(loaded, h, f, x).map(|r| vec![r]),
        Command::Theorem(TheoremCommand::Main { a, h, f }) => main_theorem(loaded, a, h, f).map(|r| vec![r]),
        Command::Report => {
            let mut out = Vec::new();
            for (name, obj) in &loaded.objects {
                let kind = default_kind(obj);
                let mut r = verify(loaded, kind, name)?;
                r.subject = format!("{name}: {}", r.subject);
                out.push(r);
            }
            for line in &loaded.runs {
                let parsed = RunLine::try_parse_from(line)
                    .map_err(|e| InputError(format!("runs entry `{}`: {}", line.join(" "), e.kind())))?;
                if matches!(parsed.command, Command::Report) {
                    return Err(InputError("runs entries cannot call `report`".into()));
                }
                for mut r in execute(loaded, &parsed.command, opts)? {
                    r.subject = format!("{}: {}", line.join(" "), r.subject);
                    out.push(r);
                }
            }
            Ok(out)
        }
    }
}

fn default_kind(obj: &Object) -> VerifyKind {
    match obj {
        Object::Bialgebra(_) => VerifyKind::Bialgebra,
        Object::Hopf { .. } => VerifyKind::Hopf,
        Object::Module(_) => VerifyKind::Module,
        Object::Comodule(_) => VerifyKind::Comodule,
        Object::Yd(_) => VerifyKind::Yd,
        Object::YdAlgebra(_) => VerifyKind::Ydalgebra,
        Object::Twist(_) => VerifyKind::Twist,
        Object::RMatrix(_) => VerifyKind::Rmatrix,
    }
}

fn get<'a>(loaded: &'a Loaded, name: &str) -> Result<&'a Object, InputError> {
    loaded.get(name).ok_or_else(|| InputError(format!("no object named `{name}`")))
}

fn wrong_kind(name: &str, obj: &Object, wanted: &str) -> InputError {
    InputError(format!("`{name}` is a {}, not {wanted}", obj.kind()))
}

fn bialgebra<'a>(loaded: &'a Loaded, name: &str) -> Result<&'a BialgebraData, InputError> {
    let o = get(loaded, name)?;
    o.bialgebra().ok_or_else(|| wrong_kind(name, o, "a bialgebra"))
}

fn twist<'a>(loaded: &'a Loaded, name: &str) -> Result<&'a Twist, InputError> {
    match get(loaded, name)? {
        Object::Twist(t) => Ok(t),
        o => Err(wrong_kind(name, o, "a twist")),
    }
}

fn yd_algebra<'a>(loaded: &'a Loaded, name: &str) -> Result<&'a YDAlgebra, InputError> {
    match get(loaded, name)? {
        Object::YdAlgebra(a) => Ok(a),
        o => Err(wrong_kind(name, o, "a YD algebra")),
    }
}

fn yd_module<'a>(loaded: &'a Loaded, name: &str) -> Result<&'a YDModule, InputError> {
    match get(loaded, name)? {
        Object::Yd(y) => Ok(y),
        Object::YdAlgebra(a) => Ok(&a.yd),
        o => Err(wrong_kind(name, o, "a YD module")),
    }
}

fn verify(loaded: &Loaded, kind: VerifyKind, name: &str) -> Result<Report, InputError> {
    let obj = get(loaded, name)?;
    let report = match (kind, obj) {
        (VerifyKind::Bialgebra, o) => check_bialgebra(o.bialgebra().ok_or_else(|| wrong_kind(name, o, "a bialgebra"))?),
        (VerifyKind::Hopf, Object::Hopf { data, .. }) => {
            let mut r = check_bialgebra(&data.bialgebra);
            r.absorb("", check_hopf(&mut data.clone()));
            r.subject = "hopf".into();
            r
        }
        (VerifyKind::Twist, Object::Twist(t)) => check_twist(&t.host, &t.f),
        (VerifyKind::Yd, _) => check_yd(yd_module(loaded, name)?),
        (VerifyKind::Ydalgebra, Object::YdAlgebra(a)) => check_yd_algebra(a),
        (VerifyKind::Braided, Object::YdAlgebra(a)) => check_braided_commutative(a),
        (VerifyKind::Rmatrix, Object::RMatrix(r)) => check_rmatrix(&r.host, &r.r),
        (VerifyKind::Module, Object::Module(m)) => check_module(m),
        (VerifyKind::Module, Object::Yd(y)) => check_module(&y.module),
        (VerifyKind::Module, Object::YdAlgebra(a)) => check_module(&a.yd.module),
        (VerifyKind::Comodule, Object::Comodule(c)) => check_comodule(c),
        (VerifyKind::Comodule, Object::Yd(y)) => check_comodule(&y.comodule),
        (VerifyKind::Comodule, Object::YdAlgebra(a)) => check_comodule(&a.yd.comodule),
        (k, o) => {
            let wanted = k.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
            return Err(wrong_kind(name, o, &format!("a {wanted}")));
        }
    };
    Ok(report)
}

fn same_host(a: &BialgebraData, b: &BialgebraData, what: &str) -> Result<(), InputError> {
    if a == b {
        Ok(())
    } else {
        Err(InputError(format!("{what} lives on a different bialgebra")))
    }
}

fn smash(loaded: &Loaded, a: &str, h: &str, opts: RunOptions) -> Result<Vec<Report>, InputError> {
    let alg = yd_algebra(loaded, a)?;
    let host = bialgebra(loaded, h)?;
    same_host(alg.host(), host, a)?;
    let mut out = Vec::new();
    match smash_product(alg, host) {
        Ok(s) => out.push(check_smash(&s)),
        Err(Error::CheckFailed(r)) => return Ok(vec![*r]),
        Err(e) => return Err(InputError(e.to_string())),
    }
    let braided = check_braided_commutative(alg);
    if !braided.passed() {
        let mut r = Report::new("scalar extension");
        r.push(Check::pass("skipped: A is not braided commutative").with_detail("skipped"));
        out.push(r);
        return Ok(out);
    }
    let b = scalar_extension_unchecked(alg).map_err(|e| InputError(e.to_string()))?;
    out.push(check_bialgebroid_with(&b, CheckOptions { seed: opts.seed, ..CheckOptions::default() }));
    let mut routes = check_balanced_routes(&b.balanced, &b.total);
    let expected = alg.dim() * host.dim() * host.dim();
    routes.push(Check::from_bool(
        "dim 𝓗⊗_A𝓗 = dim A·(dim H)²",
        b.balanced.dim() == expected,
        format!("{} vs {expected}", b.balanced.dim()),
    ));
    out.push(routes);
    Ok(out)
}

fn czgen(loaded: &Loaded, h: &str, f: &str, x: &str) -> Result<Report, InputError> {
    let host = bialgebra(loaded, h)?;
    let t = twist(loaded, f)?;
    same_host(&t.host, host, f)?;
    let m = yd_module(loaded, x)?;
    same_host(m.host(), host, x)?;
    let a = match get(loaded, x)? {
        Object::YdAlgebra(a) => Some(a),
        _ => None,
    };
    Ok(check_czgen(t, m, a))
}

fn main_theorem(loaded: &Loaded, a: &str, h: &str, f: &str) -> Result<Report, InputError> {
    let alg = yd_algebra(loaded, a)?;
    let host = bialgebra(loaded, h)?;
    let t = twist(loaded, f)?;
    same_host(alg.host(), host, a)?;
    same_host(&t.host, host, f)?;
    Ok(check_main_theorem(alg, t))
}
