use std::io::Write;

use super::VerificationReport;
use crate::error::{Error, Result};
use crate::graph::io::to_graph6;
use crate::graph::Graph;

pub const CSV_COLUMNS: [&str; 8] = ["theorem", "n", "k", "c", "predicted", "observed", "verdict", "witness_count"];

/// One CSV row per report. Values are exact decimals, or `(base)^(c)` for a
/// non-integer exponent. The prediction reads `condition` when only the
/// structural test applies.
pub fn reports_to_csv(reports: &[VerificationReport]) -> Result<String> {
    let io_err = |e: csv::Error| Error::Internal(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_COLUMNS).map_err(io_err)?;
    for r in reports {
        w.write_record([
            r.theorem_id.to_string(),
            r.n.to_string(),
            r.k.to_string(),
            r.c.map_or_else(String::new, |c| c.to_string()),
            r.predicted.as_ref().map_or_else(|| "condition".to_string(), |b| b.value.to_string()),
            r.observed_extreme.as_ref().map_or_else(String::new, |v| v.to_string()),
            format!("{:?}", r.verdict).to_lowercase(),
            r.witnesses.len().to_string(),
        ])
        .map_err(io_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

/// Writes one graph6 line per graph.
pub fn write_graph6_lines<'a, W, I>(out: &mut W, graphs: I) -> std::io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a Graph>,
{
    for g in graphs {
        writeln!(out, "{}", to_graph6(g))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::TheoremId;
    use crate::enumeration::verify_theorem;
    use crate::indices::Exponent;

    #[test]
    fn csv_shape() {
        let reports = verify_theorem(TheoremId::T5, 5, &[Exponent::ONE]).unwrap();
        let csv = reports_to_csv(&reports).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "theorem,n,k,c,predicted,observed,verdict,witness_count");
        assert!(csv.lines().any(|l| l == "T5,5,2,,4096,4096,confirmed,1"));
        assert_eq!(csv.lines().count(), reports.len() + 1);
    }

    #[test]
    fn graph6_stream() {
        let mut buf = Vec::new();
        write_graph6_lines(&mut buf, [&Graph::cycle(5), &Graph::complete(4)]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "Dhc\nC~\n");
    }
}
