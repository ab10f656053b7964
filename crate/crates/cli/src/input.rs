use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use serde::Serialize;

use zc_core::graph::io::{from_graph6_line, parse_edge_list, parse_graph6_lines};
use zc_core::graph::Graph;

use crate::{CliResult, Failure};

#[derive(Args, Debug, Serialize)]
pub struct InputArgs {
    /// File of graph6 lines or an edge list; `-` reads standard input.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Inline graph6 string (repeatable).
    #[arg(long)]
    pub graph6: Vec<String>,
    /// Read the input file as an edge list even if it looks like graph6.
    #[arg(long)]
    pub edges: bool,
}

/// Edge lists have two labels per line; graph6 has one token.
fn looks_like_edge_list(text: &str) -> bool {
    text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).any(|l| l.split_whitespace().count() >= 2)
}

impl InputArgs {
    /// All graphs given on the command line. Without any input, standard
    /// input is read when `stdin_default` is set.
    pub fn load(&self, stdin_default: bool) -> CliResult<Vec<Graph>> {
        let mut graphs = Vec::new();
        for (i, s) in self.graph6.iter().enumerate() {
            graphs.push(from_graph6_line(s.trim(), i + 1)?);
        }
        let text = match &self.input {
            Some(p) if p.as_os_str() == "-" => Some(read_stdin()?),
            Some(p) => Some(
                std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?,
            ),
            None if graphs.is_empty() && stdin_default => Some(read_stdin()?),
            None => None,
        };
        if let Some(text) = text {
            if self.edges || looks_like_edge_list(&text) {
                graphs.push(parse_edge_list(&text)?);
            } else {
                graphs.extend(parse_graph6_lines(&text)?);
            }
        }
        if graphs.is_empty() {
            return Err(Failure::Usage("no input graph (use --input or --graph6)".into()));
        }
        Ok(graphs)
    }
}

fn read_stdin() -> CliResult<String> {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s)?;
    Ok(s)
}
