use std::io::{self, BufRead, Write};

use clap::{Args, ValueEnum};
use nonham::hamiltonicity::{
    chvatal_condition, chvatal_erdos_condition, dirac_condition, is_hamiltonian, is_traceable, ota_condition,
};
use nonham::invariants::{bondy_connectivity_condition, connectivity, independence_number};
use nonham::{decode_graph6, encode_graph6, Graph, Result};
use serde::Serialize;

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckFormat {
    Text,
    Json,
}

#[derive(Args)]
pub struct CheckArgs {
    /// graph6 strings; standard input is read, one per line, when none are given.
    graphs: Vec<String>,
    /// `json` writes one JSON object per line.
    #[arg(long, value_enum, default_value = "text")]
    format: CheckFormat,
}

/// Which sufficient conditions fire. `None` where a condition is undefined.
#[derive(Serialize)]
pub struct Conditions {
    pub dirac: Option<bool>,
    pub chvatal: Option<bool>,
    pub chvatal_erdos: Option<bool>,
    /// Evaluated with `k = κ`; `None` unless `2 ≤ κ < α`.
    pub ota: Option<bool>,
    /// Every `k` for which the degree sequence certifies `(k+1)`-connectivity.
    pub bondy: Vec<usize>,
}

#[derive(Serialize)]
pub struct Summary {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub degrees: Vec<usize>,
    pub kappa: usize,
    pub cut: Option<Vec<usize>>,
    pub alpha: usize,
    pub independent_set: Vec<usize>,
    /// `None` below order 3.
    pub hamiltonian: Option<bool>,
    pub cycle: Option<Vec<usize>>,
    pub traceable: bool,
    pub path: Option<Vec<usize>>,
    pub conditions: Conditions,
}

fn list(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn tri(v: Option<bool>) -> String {
    v.map_or("n/a".to_string(), |b| b.to_string())
}

impl Summary {
    pub fn of(g: &Graph) -> Result<Summary> {
        let n = g.order();
        let degrees = g.degree_sequence();
        let c = connectivity(g);
        let a = independence_number(g);
        let (hamiltonian, cycle) = if n >= 3 {
            let h = is_hamiltonian(g)?;
            (Some(h.decision), h.witness)
        } else {
            (None, None)
        };
        let (traceable, path) = if n >= 1 {
            let t = is_traceable(g)?;
            (t.decision, t.witness)
        } else {
            (false, None)
        };
        let big = n >= 3;
        let conditions = Conditions {
            dirac: big.then(|| dirac_condition(g)).transpose()?,
            chvatal: big.then(|| chvatal_condition(&degrees)).transpose()?,
            chvatal_erdos: big.then(|| chvatal_erdos_condition(g)).transpose()?,
            ota: (big && c.kappa >= 2 && c.kappa < a.alpha).then(|| ota_condition(g, c.kappa)).transpose()?,
            bondy: (0..n.saturating_sub(1))
                .filter_map(|k| bondy_connectivity_condition(&degrees, k).ok().filter(|&b| b).map(|_| k))
                .collect(),
        };
        Ok(Summary {
            graph6: encode_graph6(g),
            order: n,
            size: g.size(),
            degrees: degrees.as_slice().to_vec(),
            kappa: c.kappa,
            cut: c.witness_cut,
            alpha: a.alpha,
            independent_set: a.witness_set,
            hamiltonian,
            cycle,
            traceable,
            path,
            conditions,
        })
    }

    pub fn write_text(&self, out: &mut impl Write) -> io::Result<()> {
        writeln!(out, "order: {}", self.order)?;
        writeln!(out, "size: {}", self.size)?;
        writeln!(out, "degrees: {}", list(&self.degrees))?;
        match &self.cut {
            Some(cut) => writeln!(out, "kappa: {} cut: {}", self.kappa, list(cut))?,
            None => writeln!(out, "kappa: {} (complete)", self.kappa)?,
        }
        writeln!(out, "alpha: {} set: {}", self.alpha, list(&self.independent_set))?;
        match &self.cycle {
            Some(c) => writeln!(out, "hamiltonian: true cycle: {}", list(c))?,
            None => writeln!(out, "hamiltonian: {}", tri(self.hamiltonian))?,
        }
        match &self.path {
            Some(p) => writeln!(out, "traceable: true path: {}", list(p))?,
            None => writeln!(out, "traceable: {}", self.traceable)?,
        }
        let c = &self.conditions;
        writeln!(out, "dirac: {}", tri(c.dirac))?;
        writeln!(out, "chvatal: {}", tri(c.chvatal))?;
        writeln!(out, "chvatal_erdos: {}", tri(c.chvatal_erdos))?;
        writeln!(out, "ota: {}", tri(c.ota))?;
        writeln!(out, "bondy_k: {}", list(&c.bondy))
    }
}

fn report(line: &str, format: CheckFormat, first: &mut bool, out: &mut impl Write) -> std::result::Result<(), String> {
    let g = decode_graph6(line).map_err(|e| e.to_string())?;
    let s = Summary::of(&g).map_err(|e| e.to_string())?;
    let io = |e: io::Error| e.to_string();
    match format {
        CheckFormat::Json => writeln!(out, "{}", serde_json::to_string(&s).map_err(|e| e.to_string())?).map_err(io),
        CheckFormat::Text => {
            if !*first {
                writeln!(out).map_err(io)?;
            }
            *first = false;
            writeln!(out, "graph: {}", s.graph6).map_err(io)?;
            s.write_text(out).map_err(io)
        }
    }
}

/// Diagnose each input graph; malformed lines are reported on standard error
/// and skipped, and make the exit code 2.
pub fn run(args: &CheckArgs, out: &mut impl Write) -> std::result::Result<u8, Failure> {
    let lines: Vec<String> = if args.graphs.is_empty() {
        io::stdin().lock().lines().collect::<io::Result<_>>()?
    } else {
        args.graphs.clone()
    };
    let mut bad = 0;
    let mut first = true;
    for (i, raw) in lines.iter().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Err(why) = report(line, args.format, &mut first, out) {
            bad += 1;
            eprintln!("error: input {}: {why}", i + 1);
        }
    }
    Ok(if bad > 0 { 2 } else { 0 })
}
