use std::io::Write;

use serde::Serialize;
use serde_json::{json, Value};

use zc_core::graph::io::to_graph6;
use zc_core::graph::{is_cactus, CactusGraph, Graph};
use zc_core::indices::{
    first_zagreb, multiplicative_zagreb_1, multiplicative_zagreb_2, narumi_katayama, second_zagreb, Exponent,
    IndexValue,
};

use crate::{Cli, CliResult};

/// Envelope for JSON output: tool version and the full parsed configuration.
pub struct Report {
    header: Value,
}

impl Report {
    pub fn new(cli: &Cli) -> Self {
        let config = serde_json::to_value(cli).expect("configuration serializes");
        Report { header: json!({ "tool": "zc", "version": env!("CARGO_PKG_VERSION"), "config": config }) }
    }

    pub fn json(&self, out: &mut impl Write, body: Value) -> CliResult<()> {
        let mut doc = self.header.clone();
        if let (Value::Object(doc), Value::Object(body)) = (&mut doc, body) {
            doc.extend(body);
        }
        serde_json::to_writer_pretty(&mut *out, &doc).map_err(std::io::Error::from)?;
        writeln!(out)?;
        Ok(())
    }
}

#[derive(Serialize)]
pub struct IndexRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub is_cactus: bool,
    /// Why the graph is not a cactus.
    pub violation: Option<String>,
    pub cycles: Option<usize>,
    pub m1: u64,
    pub m2: u64,
    pub nk: String,
    pub c: Exponent,
    pub pi1: IndexValue,
    pub pi2: IndexValue,
}

impl IndexRow {
    pub fn new(g: &Graph, c: Exponent) -> Self {
        let check = is_cactus(g);
        let cycles = check.is_cactus.then(|| CactusGraph::new(g.clone()).map(|cg| cg.cycle_count()).ok()).flatten();
        IndexRow {
            graph6: to_graph6(g),
            n: g.n(),
            m: g.edge_count(),
            k: g.pendant_count(),
            is_cactus: check.is_cactus,
            violation: check.violation.map(|v| v.to_string()),
            cycles,
            m1: first_zagreb(g),
            m2: second_zagreb(g),
            nk: narumi_katayama(g).to_string(),
            c,
            pi1: multiplicative_zagreb_1(g, c),
            pi2: multiplicative_zagreb_2(g),
        }
    }

    pub fn csv(out: &mut impl Write, rows: &[IndexRow]) -> CliResult<()> {
        writeln!(out, "graph6,n,m,k,is_cactus,M1,M2,NK,c,pi1,pi1_log,pi2,pi2_log")?;
        for r in rows {
            let log = |v: &IndexValue| v.log_value().map_or_else(String::new, |l| format!("{l:.12}"));
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{},{}",
                r.graph6,
                r.n,
                r.m,
                r.k,
                r.is_cactus,
                r.m1,
                r.m2,
                r.nk,
                r.c,
                r.pi1,
                log(&r.pi1),
                r.pi2,
                log(&r.pi2)
            )?;
        }
        Ok(())
    }

    pub fn text(out: &mut impl Write, rows: &[IndexRow]) -> CliResult<()> {
        for (i, r) in rows.iter().enumerate() {
            if i > 0 {
                writeln!(out)?;
            }
            writeln!(out, "graph {}: {} (n={}, m={}, k={})", i + 1, r.graph6, r.n, r.m, r.k)?;
            match (&r.violation, r.cycles) {
                (None, Some(cycles)) => writeln!(out, "  cactus: yes (cycles: {cycles})")?,
                (v, _) => writeln!(out, "  cactus: no ({})", v.as_deref().unwrap_or("unknown"))?,
            }
            writeln!(out, "  M1 = {}", r.m1)?;
            writeln!(out, "  M2 = {}", r.m2)?;
            writeln!(out, "  NK = {}", r.nk)?;
            writeln!(out, "  pi1[c={}] = {}  ({})", r.c, r.pi1, describe(&r.pi1))?;
            writeln!(out, "  pi2 = {}  ({})", r.pi2, describe(&r.pi2))?;
        }
        Ok(())
    }
}

/// Factored form and natural log, e.g. `2^3 * 3^2, ln = 4.276666`.
fn describe(v: &IndexValue) -> String {
    let factors: Vec<String> = v.base_factors().iter().map(|(b, e)| format!("{b}^{e}")).collect();
    let base = if factors.is_empty() { "1".to_string() } else { factors.join(" * ") };
    let base = if v.power().is_integer() && v.power().num() == 1 { base } else { format!("({base})^({})", v.power()) };
    match v.log_value() {
        Some(l) => format!("{base}, ln = {l:.6}"),
        None => base,
    }
}

/// Left-aligned plain-text columns.
pub struct Table {
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<const N: usize>(header: [&str; N]) -> Self {
        Table { rows: vec![header.iter().map(|s| s.to_string()).collect()] }
    }

    pub fn row<const N: usize>(&mut self, cells: [String; N]) {
        self.rows.push(cells.to_vec());
    }

    pub fn write(&self, out: &mut impl Write) -> CliResult<()> {
        let cols = self.rows[0].len();
        let widths: Vec<usize> = (0..cols).map(|c| self.rows.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
        for r in &self.rows {
            let cells: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
            writeln!(out, "{}", cells.join("  ").trim_end())?;
        }
        Ok(())
    }
}
