//! Canonical labelling by individualisation-refinement over equitable
//! partitions, exhaustive over the search tree (no automorphism group
//! computation). Twin vertices are explored once per cell since swapping
//! two twins is always an automorphism.

use super::io::to_graph6;
use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`].
pub const CANON_LIMIT: usize = 10;

/// Canonical byte string: the graph6 encoding of the canonically relabelled
/// graph. Equal iff the graphs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with_limit(g, CANON_LIMIT)
}

pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<CanonicalForm> {
    let (perm, _) = labeling(g, limit)?;
    Ok(CanonicalForm(to_graph6(&g.relabel(&perm))))
}

/// Returns the canonical relabelling (`perm[v]` is the new label of `v`) and
/// the canonical form.
pub fn canonical_labeling(g: &Graph) -> Result<(Vec<usize>, CanonicalForm)> {
    let (perm, _) = labeling(g, CANON_LIMIT)?;
    let form = CanonicalForm(to_graph6(&g.relabel(&perm)));
    Ok((perm, form))
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

fn labeling(g: &Graph, limit: usize) -> Result<(Vec<usize>, Vec<u8>)> {
    let n = g.n();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    if n == 0 {
        return Ok((vec![], vec![]));
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut initial: Partition = Vec::new();
    for v in by_degree {
        match initial.last_mut() {
            Some(cell) if g.degree(cell[0]) == g.degree(v) => cell.push(v),
            _ => initial.push(vec![v]),
        }
    }
    let mut search = Search { g, best: None };
    search.descend(refine(g, initial));
    let (bits, order) = search.best.expect("search reaches at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((perm, bits))
}

impl Search<'_> {
    fn descend(&mut self, partition: Partition) {
        let Some(target) = partition.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = partition.into_iter().map(|c| c[0]).collect();
            let bits = adjacency_bits(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| bits < *b) {
                self.best = Some((bits, order));
            }
            return;
        };
        let cell = &partition[target];
        let mut tried: Vec<usize> = Vec::new();
        for &v in cell {
            if tried.iter().any(|&u| are_twins(self.g, u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = partition[..target].to_vec();
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&partition[target + 1..]);
            self.descend(refine(self.g, next));
        }
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let a = g.neighbors(u).iter().filter(|&&w| w != v);
    let b = g.neighbors(v).iter().filter(|&&w| w != u);
    a.eq(b)
}

/// Splits cells by neighbour counts into every cell until the partition is
/// equitable. Cell order depends only on the signatures, so the refinement
/// commutes with relabelling.
fn refine(g: &Graph, mut partition: Partition) -> Partition {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in partition.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let cells = partition.len();
        let mut next: Partition = Vec::with_capacity(cells);
        for cell in &partition {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0usize; cells];
                    for &w in g.neighbors(v) {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let done = next.len() == partition.len();
        partition = next;
        if done {
            return partition;
        }
    }
}

/// Upper-triangle adjacency bits in graph6 order under the given vertex order.
fn adjacency_bits(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(order[i], order[j]) as u8);
        }
    }
    bits
}
