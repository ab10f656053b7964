//! Isomorph-free generation of all cacti of small order, and the exhaustive
//! checks built on it.

mod report;
mod verify;

pub use report::{reports_to_csv, write_graph6_lines, CSV_COLUMNS};
pub use verify::{extremal_census, verify_theorem, Census, Verdict, VerificationReport};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::io::to_graph6;
use crate::graph::{canonical_labeling, CactusGraph, CanonicalForm, Graph};

/// Largest order accepted by the enumerator.
pub const ENUM_LIMIT: usize = 9;

/// One isomorphism class, stored in its canonical labelling.
#[derive(Clone, Debug)]
pub struct EnumeratedCactus {
    pub form: CanonicalForm,
    pub graph: Graph,
}

impl EnumeratedCactus {
    pub fn cactus(&self) -> CactusGraph {
        CactusGraph::new(self.graph.clone()).expect("enumerated graphs are cacti")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationResult {
    pub n: usize,
    /// `None` means every pendant count.
    pub k: Option<usize>,
    pub count: usize,
    /// graph6 of each class, in canonical order.
    pub graphs: Vec<String>,
    #[serde(skip)]
    pub classes: Vec<EnumeratedCactus>,
}

/// All cacti of order `1..=n_max`, one per isomorphism class.
#[derive(Clone, Debug)]
pub struct Catalog {
    levels: Vec<Vec<EnumeratedCactus>>,
}

fn check_cap(n: usize) -> Result<()> {
    if n > ENUM_LIMIT {
        return Err(Error::TooLarge { n, limit: ENUM_LIMIT });
    }
    Ok(())
}

impl Catalog {
    /// Generates every order up to `n_max` bottom-up. A cactus on `m >= 2`
    /// vertices arises from a smaller one by attaching its end block: a
    /// pendant edge, or a cycle of length `3..=m` glued at one vertex.
    pub fn build(n_max: usize) -> Result<Self> {
        check_cap(n_max)?;
        let mut levels: Vec<Vec<EnumeratedCactus>> = vec![Vec::new()];
        if n_max == 0 {
            return Ok(Catalog { levels });
        }
        levels.push(vec![canonical(Graph::empty(1))]);
        for m in 2..=n_max {
            let mut jobs: Vec<(usize, usize, usize)> = Vec::new(); // (source order, index, block size)
            for (j, level) in levels.iter().enumerate().skip(1) {
                jobs.extend((0..level.len()).map(|i| (j, i, m - j + 1)));
            }
            let found: BTreeMap<CanonicalForm, Graph> = jobs
                .par_iter()
                .flat_map_iter(|&(j, i, block)| {
                    let base = &levels[j][i].graph;
                    (0..base.n()).map(move |at| {
                        let piece = if block == 2 { Graph::path(2) } else { Graph::cycle(block) };
                        let g = base.glue(at, &piece, 0);
                        let c = canonical(g);
                        (c.form, c.graph)
                    })
                })
                .collect::<Vec<_>>()
                .into_iter()
                .collect();
            levels.push(found.into_iter().map(|(form, graph)| EnumeratedCactus { form, graph }).collect());
        }
        Ok(Catalog { levels })
    }

    pub fn n_max(&self) -> usize {
        self.levels.len() - 1
    }

    /// All classes of order `n`, sorted by canonical form.
    pub fn order(&self, n: usize) -> &[EnumeratedCactus] {
        self.levels.get(n).map_or(&[], |v| v.as_slice())
    }

    /// Classes of order `n` with exactly `k` pendant vertices.
    pub fn class(&self, n: usize, k: usize) -> Vec<&EnumeratedCactus> {
        self.order(n).iter().filter(|c| c.graph.pendant_count() == k).collect()
    }
}

fn canonical(g: Graph) -> EnumeratedCactus {
    let (perm, form) = canonical_labeling(&g).expect("orders stay within the canonical limit");
    let graph = g.relabel(&perm);
    debug_assert_eq!(to_graph6(&graph), form.0);
    EnumeratedCactus { form, graph }
}

/// One representative per isomorphism class of cacti on `n` vertices, all of
/// them or only those with `k` pendant vertices.
pub fn enumerate_cacti(n: usize, k: Option<usize>) -> Result<EnumerationResult> {
    check_cap(n)?;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let catalog = Catalog::build(n)?;
    Ok(result_from(&catalog, n, k))
}

pub(crate) fn result_from(catalog: &Catalog, n: usize, k: Option<usize>) -> EnumerationResult {
    let classes: Vec<EnumeratedCactus> = match k {
        Some(k) => catalog.class(n, k).into_iter().cloned().collect(),
        None => catalog.order(n).to_vec(),
    };
    EnumerationResult {
        n,
        k,
        count: classes.len(),
        graphs: classes.iter().map(|c| c.form.0.clone()).collect(),
        classes,
    }
}
