use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Args, ValueEnum};
use nonham::formulas::{f, g_via_max, phi};
use nonham::Error;
use serde::Serialize;

use crate::{usage, Failure, Format};

const INFEASIBLE: &str = "—";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    F,
    Phi,
    G,
}

#[derive(Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    what: What,
    /// A value `7` or an inclusive range `5..9`.
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    #[arg(long, value_parser = parse_range)]
    k: RangeInclusive<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("not a number: {t:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    if hi > 10_000 {
        return Err(format!("range end {hi} is too large"));
    }
    Ok(lo..=hi)
}

#[derive(Serialize)]
struct Cell {
    n: usize,
    k: usize,
    value: Option<usize>,
    regime: Option<String>,
    extremal_families: Vec<String>,
}

fn cell(what: What, n: usize, k: usize) -> Result<Cell, Failure> {
    let value = match what {
        What::F => f(n, k),
        What::Phi => phi(n, k),
        What::G => {
            return Ok(match g_via_max(n, k) {
                Ok((v, cs)) => {
                    let mut families = Vec::new();
                    for &c in &cs {
                        for spec in f(n, c)?.regime.extremal_families {
                            families.push(spec.to_string());
                        }
                    }
                    let argmax = cs.iter().map(ToString::to_string).collect::<Vec<_>>().join(";");
                    Cell { n, k, value: Some(v), regime: Some(format!("argmax_c={argmax}")), extremal_families: families }
                }
                Err(Error::Domain(_)) => Cell { n, k, value: None, regime: None, extremal_families: Vec::new() },
                Err(e) => return Err(e.into()),
            });
        }
    };
    Ok(match value {
        Ok(v) => Cell {
            n,
            k,
            value: Some(v.value),
            regime: Some(v.regime.branch.to_string()),
            extremal_families: v.regime.extremal_families.iter().map(ToString::to_string).collect(),
        },
        Err(Error::Domain(_)) => Cell { n, k, value: None, regime: None, extremal_families: Vec::new() },
        Err(e) => return Err(e.into()),
    })
}

const MAX_CELLS: usize = 1_000_000;

pub fn run(args: &TableArgs, out: &mut impl Write) -> Result<u8, Failure> {
    let total = args.n.clone().count() * args.k.clone().count();
    if total > MAX_CELLS {
        return Err(usage(format!("{total} cells requested, at most {MAX_CELLS} allowed")));
    }
    let mut cells = Vec::new();
    for n in args.n.clone() {
        for k in args.k.clone() {
            cells.push(cell(args.what, n, k)?);
        }
    }
    match args.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &cells).map_err(|e| usage(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let csv_err = |e: csv::Error| usage(e.to_string());
            w.write_record(["n", "k", "value", "regime", "extremal_families"]).map_err(csv_err)?;
            for c in &cells {
                let value = c.value.map_or(INFEASIBLE.to_string(), |v| v.to_string());
                let regime = c.regime.clone().unwrap_or_default();
                w.write_record([c.n.to_string(), c.k.to_string(), value, regime, c.extremal_families.join(";")])
                    .map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Text => write_grid(args, &cells, out)?,
    }
    Ok(0)
}

/// Rows are `n`, columns `k`; each cell is the value and its regime tag.
fn write_grid(args: &TableArgs, cells: &[Cell], out: &mut impl Write) -> std::io::Result<()> {
    let ks: Vec<usize> = args.k.clone().collect();
    let text = |c: &Cell| match (c.value, &c.regime) {
        (Some(v), Some(r)) => format!("{v} {r}"),
        _ => INFEASIBLE.to_string(),
    };
    let corner = match args.what {
        What::F => "f",
        What::Phi => "phi",
        What::G => "g",
    };
    let head = format!("{corner} n\\k");
    let first = cells.iter().map(|c| c.n.to_string().len()).max().unwrap_or(0).max(head.chars().count());
    let widths: Vec<usize> = ks
        .iter()
        .enumerate()
        .map(|(j, k)| {
            cells
                .iter()
                .skip(j)
                .step_by(ks.len())
                .map(|c| text(c).chars().count())
                .max()
                .unwrap_or(0)
                .max(k.to_string().len())
        })
        .collect();
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));
    let mut line = pad(&head, first);
    for (k, w) in ks.iter().zip(&widths) {
        line.push_str("  ");
        line.push_str(&pad(&k.to_string(), *w));
    }
    writeln!(out, "{}", line.trim_end())?;
    for row in cells.chunks(ks.len()) {
        let mut line = pad(&row[0].n.to_string(), first);
        for (c, w) in row.iter().zip(&widths) {
            line.push_str("  ");
            line.push_str(&pad(&text(c), *w));
        }
        writeln!(out, "{}", line.trim_end())?;
    }
    Ok(())
}
