use std::fmt::Display;
use std::io::Write;

use clap::{Args, ValueEnum};
use nonham::enumeration::{
    condition_soundness_sweep, cone_correspondence, size_bound_sweep, verify_corollary12, verify_lemma5,
    verify_lemma7, verify_theorem8, JoinTemplate, RunOptions,
};
use serde::Serialize;

use crate::{usage, Failure, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Theorem8,
    Corollary12,
    Lemma5,
    Lemma7,
    Conditions,
    /// Cones over nontraceable extremal graphs against the next order up.
    Cone,
    /// Every graph above `f(n,k)` edges is hamiltonian.
    SizeBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Template {
    Plain,
    #[value(name = "plus_k2", alias = "plus-k2")]
    PlusK2,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    target: Target,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, value_enum)]
    template: Option<Template>,
    #[arg(long)]
    f: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn need(v: Option<usize>, flag: &str, target: Target) -> Result<usize, Failure> {
    v.ok_or_else(|| usage(format!("{target:?} needs --{flag}").to_lowercase()))
}

/// Reject flags the target does not read, before any computation.
fn only(args: &VerifyArgs, allowed: &[&str]) -> Result<(), Failure> {
    let given = [
        ("n", args.n.is_some()),
        ("k", args.k.is_some()),
        ("s", args.s.is_some()),
        ("t", args.t.is_some()),
        ("template", args.template.is_some()),
        ("f", args.f.is_some()),
        ("n-max", args.n_max.is_some()),
    ];
    for (flag, present) in given {
        if present && !allowed.contains(&flag) {
            return Err(usage(format!("--{flag} does not apply to this target")));
        }
    }
    Ok(())
}

fn emit<R: Serialize + Display>(report: &R, agrees: bool, format: Format, out: &mut impl Write) -> Result<u8, Failure> {
    match format {
        Format::Json => {
            let v = serde_json::to_string_pretty(report).map_err(|e| usage(e.to_string()))?;
            writeln!(out, "{v}")?;
        }
        Format::Text => write!(out, "{report}")?,
        Format::Csv => return Err(usage("verification reports are text or json")),
    }
    Ok(if agrees { 0 } else { 1 })
}

pub fn run(args: &VerifyArgs, out: &mut impl Write) -> Result<u8, Failure> {
    let opts = RunOptions { workers: args.workers, force: args.force };
    let t = args.target;
    if args.format == Format::Csv {
        return Err(usage("verification reports are text or json"));
    }
    match t {
        Target::Theorem8 | Target::Corollary12 | Target::Cone => {
            only(args, &["n", "k"])?;
            let (n, k) = (need(args.n, "n", t)?, need(args.k, "k", t)?);
            match t {
                Target::Theorem8 => {
                    let r = verify_theorem8(n, k, opts)?;
                    emit(&r, r.agrees, args.format, out)
                }
                Target::Corollary12 => {
                    let r = verify_corollary12(n, k, opts)?;
                    emit(&r, r.agrees, args.format, out)
                }
                _ => {
                    let r = cone_correspondence(n, k, opts)?;
                    emit(&r, r.agrees, args.format, out)
                }
            }
        }
        Target::Lemma5 => {
            only(args, &["n"])?;
            let r = verify_lemma5(need(args.n, "n", t)?)?;
            emit(&r, r.agrees, args.format, out)
        }
        Target::Lemma7 => {
            only(args, &["s", "t", "template", "f"])?;
            let template = match args.template {
                Some(Template::Plain) => JoinTemplate::Plain,
                Some(Template::PlusK2) => JoinTemplate::PlusK2,
                None => return Err(usage("lemma7 needs --template")),
            };
            let r = verify_lemma7(need(args.s, "s", t)?, need(args.t, "t", t)?, template, need(args.f, "f", t)?, opts)?;
            emit(&r, r.holds, args.format, out)
        }
        Target::Conditions => {
            only(args, &["n-max"])?;
            let r = condition_soundness_sweep(need(args.n_max, "n-max", t)?, opts)?;
            emit(&r, r.sound, args.format, out)
        }
        Target::SizeBound => {
            only(args, &["n-max"])?;
            let r = size_bound_sweep(need(args.n_max, "n-max", t)?, opts)?;
            emit(&r, r.holds, args.format, out)
        }
    }
}
