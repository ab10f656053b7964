use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use super::{Catalog, EnumeratedCactus};
use crate::bounds::{bound_for, theorem3_condition_check, BoundSpec, Direction, TheoremId};
use crate::error::{Error, Result};
use crate::graph::DegreeSequence;
use crate::indices::{Exponent, Index, IndexValue};

/// The graphs attaining the extreme of an index over one class.
#[derive(Clone, Debug)]
pub struct Census<'a> {
    /// `None` when the class is empty.
    pub value: Option<IndexValue>,
    pub graphs: Vec<&'a EnumeratedCactus>,
}

impl Census<'_> {
    pub fn sequences(&self) -> BTreeSet<DegreeSequence> {
        self.graphs.iter().map(|c| c.graph.degree_sequence()).collect()
    }
}

/// All classes in the catalog attaining the minimum or maximum of `index`
/// among cacti with `n` vertices and `k` pendant vertices.
pub fn extremal_census(catalog: &Catalog, n: usize, k: usize, index: Index, direction: Direction) -> Census<'_> {
    let want = match direction {
        Direction::Lower => Ordering::Less,
        Direction::Upper => Ordering::Greater,
    };
    let mut best: Option<IndexValue> = None;
    let mut graphs = Vec::new();
    for c in catalog.class(n, k) {
        let v = index.evaluate(&c.graph);
        let ord = best.as_ref().map_or(want, |b| v.compare(b));
        if ord == want {
            best = Some(v);
            graphs.clear();
            graphs.push(c);
        } else if ord == Ordering::Equal {
            graphs.push(c);
        }
    }
    Census { value: best, graphs }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Confirmed,
    Mismatch,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem_id: TheoremId,
    pub n: usize,
    pub k: usize,
    /// Exponent of the first index; absent for the second index.
    pub c: Option<Exponent>,
    /// Absent when only the structural condition is checked.
    pub predicted: Option<BoundSpec>,
    pub observed_extreme: Option<IndexValue>,
    pub observed_extremal_sequences: Vec<DegreeSequence>,
    pub verdict: Verdict,
    /// graph6 of every class attaining the extreme.
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
}

/// Compares every closed form (or structural condition) of `theorem` with the
/// exhaustive extreme over each applicable class of order at most `n_max`.
/// The second index ignores `c_values`.
pub fn verify_theorem(theorem: TheoremId, n_max: usize, c_values: &[Exponent]) -> Result<Vec<VerificationReport>> {
    let catalog = Catalog::build(n_max)?;
    verify_with_catalog(&catalog, theorem, n_max, c_values)
}

pub(crate) fn verify_with_catalog(
    catalog: &Catalog,
    theorem: TheoremId,
    n_max: usize,
    c_values: &[Exponent],
) -> Result<Vec<VerificationReport>> {
    if n_max > catalog.n_max() {
        return Err(Error::TooLarge { n: n_max, limit: catalog.n_max() });
    }
    let exponents: Vec<Option<Exponent>> = match theorem.index(Exponent::ONE) {
        Index::Pi2 => vec![None],
        Index::Pi1(_) if c_values.is_empty() => vec![Some(Exponent::ONE)],
        Index::Pi1(_) => c_values.iter().copied().map(Some).collect(),
    };
    let mut out = Vec::new();
    for n in 1..=n_max {
        for k in 0..=n {
            if !theorem.is_applicable(n, k) {
                continue;
            }
            for &c in &exponents {
                out.push(verify_one(catalog, theorem, n, k, c)?);
            }
        }
    }
    Ok(out)
}

fn verify_one(
    catalog: &Catalog,
    theorem: TheoremId,
    n: usize,
    k: usize,
    c: Option<Exponent>,
) -> Result<VerificationReport> {
    let index = theorem.index(c.unwrap_or(Exponent::ONE));
    let census = extremal_census(catalog, n, k, index, theorem.direction());
    let observed_sequences = census.sequences();
    let mut notes = Vec::new();

    let (predicted, confirmed) = if theorem.has_closed_form(n, k) {
        let bound = bound_for(theorem, n, k, c.unwrap_or(Exponent::ONE))?;
        let value_ok = census.value.as_ref().and_then(|v| v.cmp_exact(&bound.value)) == Some(Ordering::Equal);
        if !value_ok {
            notes.push(format!(
                "observed {:?} differs from predicted {}",
                census.value.as_ref().map(|v| v.to_string()),
                bound.value
            ));
        }
        let predicted_sequences: BTreeSet<DegreeSequence> = bound.extremal_degree_sequences.iter().cloned().collect();
        let seq_ok = predicted_sequences == observed_sequences;
        if !seq_ok {
            notes.push(format!(
                "extremal sequences {observed_sequences:?} differ from predicted {predicted_sequences:?}"
            ));
        }
        (Some(bound), value_ok && seq_ok)
    } else {
        let mut ok = !census.graphs.is_empty();
        for c in &census.graphs {
            let report = theorem3_condition_check(&c.cactus())?;
            if !report.satisfied {
                ok = false;
                notes.push(format!("{}: {}", c.form, report.failures.join("; ")));
            } else if let Some(via) = report.via {
                notes.push(format!("{}: {via:?}", c.form));
            }
        }
        (None, ok)
    };

    Ok(VerificationReport {
        theorem_id: theorem,
        n,
        k,
        c,
        predicted,
        observed_extreme: census.value.clone(),
        observed_extremal_sequences: observed_sequences.into_iter().collect(),
        verdict: if confirmed { Verdict::Confirmed } else { Verdict::Mismatch },
        witnesses: census.graphs.iter().map(|c| c.form.0.clone()).collect(),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn c1() -> Exponent {
        Exponent::ONE
    }

    #[test]
    fn census_examples() {
        let cat = Catalog::build(5).unwrap();
        let cen = extremal_census(&cat, 5, 0, Index::Pi1(c1()), Direction::Upper);
        assert_eq!(cen.value.unwrap().exact(), Some(BigUint::from(64u32)));
        assert_eq!(cen.graphs.len(), 1);
        assert_eq!(cen.graphs[0].graph.degree_sequence(), vec![4, 2, 2, 2, 2]);
        let cen = extremal_census(&cat, 5, 2, Index::Pi2, Direction::Lower);
        assert_eq!(cen.value.unwrap().exact(), Some(BigUint::from(64u32)));
        assert_eq!(cen.graphs[0].graph.degree_sequence(), vec![2, 2, 2, 1, 1]);
        let cen = extremal_census(&cat, 4, 4, Index::Pi1(c1()), Direction::Upper);
        assert!(cen.value.is_none());
        assert!(cen.graphs.is_empty());
    }

    #[test]
    fn spot_verifications() {
        let cat = Catalog::build(8).unwrap();
        let r = verify_one(&cat, TheoremId::T4, 6, 3, None).unwrap();
        assert_eq!(r.verdict, Verdict::Confirmed);
        assert_eq!(r.observed_extreme.unwrap().exact(), Some(BigUint::from(432u32)));
        assert_eq!(r.observed_extremal_sequences, vec![vec![3, 2, 2, 1, 1, 1]]);
        let r = verify_one(&cat, TheoremId::T3, 8, 0, Some(c1())).unwrap();
        assert_eq!(r.verdict, Verdict::Confirmed);
        assert_eq!(r.observed_extreme.unwrap().exact(), Some(BigUint::from(1152u32)));
    }

    #[test]
    fn all_theorems_small() {
        let cat = Catalog::build(7).unwrap();
        for t in TheoremId::ALL {
            for r in verify_with_catalog(&cat, t, 7, &[c1()]).unwrap() {
                assert_eq!(r.verdict, Verdict::Confirmed, "{t} n={} k={}: {:?}", r.n, r.k, r.notes);
            }
        }
        assert!(verify_theorem(TheoremId::T1, 12, &[c1()]).is_err());
    }
}
