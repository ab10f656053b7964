use crate::error::{Error, Result};
use crate::graph::{CactusGraph, Graph};
use crate::indices::narumi_katayama;

/// Vertices of the 2-core: what remains after repeatedly stripping leaves.
fn two_core(g: &Graph) -> Vec<bool> {
    let mut deg = g.degrees();
    let mut alive = vec![true; g.n()];
    let mut stack: Vec<usize> = (0..g.n()).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    alive
}

/// Strips every pendant tree off the cycles and hangs the pieces back one at a
/// time, largest first, each on the non-pendant vertex of smallest current
/// degree (ties to the smaller label). A piece is the whole tree behind one
/// bridge leaving the 2-core; it keeps its internal shape and its root.
///
/// Requires at least one pendant vertex, `n >= k + 4` and a cycle. The first
/// index of the result is at least that of the input, for every exponent;
/// this is checked exactly.
pub fn pro_algorithm(g: &CactusGraph) -> Result<CactusGraph> {
    let (n, k) = (g.n(), g.k());
    if k == 0 || n < k + 4 {
        return Err(Error::Precondition(format!("needs k >= 1 and n >= k + 4, got n={n}, k={k}")));
    }
    if g.is_tree() {
        return Err(Error::Precondition("needs a cycle to reattach onto".into()));
    }
    let graph = g.graph();
    let core = two_core(graph);

    // (size, root, anchor, side)
    let mut pieces: Vec<(usize, usize, usize)> = Vec::new();
    let mut kept: Vec<(usize, usize)> = Vec::new();
    for (u, v) in graph.edges() {
        match (core[u], core[v]) {
            (true, false) | (false, true) => {
                let (anchor, root) = if core[u] { (u, v) } else { (v, u) };
                let size = g.bridge_side(anchor, root).iter().filter(|&&b| b).count();
                pieces.push((size, root, anchor));
            }
            _ => kept.push((u, v)),
        }
    }
    pieces.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut deg = vec![0usize; n];
    for &(u, v) in &kept {
        deg[u] += 1;
        deg[v] += 1;
    }
    // vertices currently present: the core plus the pieces hung so far
    let mut present = core.clone();
    let mut edges = kept;
    for &(_, root, anchor) in &pieces {
        let side = g.bridge_side(anchor, root);
        let target = (0..n)
            .filter(|&v| present[v] && deg[v] >= 2)
            .min_by_key(|&v| (deg[v], v))
            .expect("the core has vertices of degree >= 2");
        edges.push((target, root));
        deg[target] += 1;
        deg[root] += 1;
        for v in (0..n).filter(|&v| side[v]) {
            present[v] = true;
        }
    }

    let out = CactusGraph::new(Graph::from_edges(n, edges)?)?;
    if out.k() != k {
        return Err(Error::PostCheck(format!("reattachment changed k from {k} to {}", out.k())));
    }
    if narumi_katayama(out.graph()) < narumi_katayama(graph) {
        return Err(Error::PostCheck("reattachment lowered the first index".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;

    fn cactus(n: usize, edges: &[(usize, usize)]) -> CactusGraph {
        CactusGraph::new(Graph::from_edges(n, edges.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn spreads_pendants_over_low_degrees() {
        // triangle chain 0-1-2, 2-3-4, 4-5-6 with both pendants on junction 2
        let g = cactus(9, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6), (4, 6), (2, 7), (2, 8)]);
        let out = pro_algorithm(&g).unwrap();
        assert!(narumi_katayama(out.graph()) > narumi_katayama(g.graph()));
        assert_eq!(out.degree(2), 4);
        assert_eq!(out.degree_sequence(), vec![4, 4, 3, 3, 2, 2, 2, 1, 1]);
    }

    #[test]
    fn stable_input_is_a_fixpoint() {
        // square with one pendant on each of two opposite vertices
        let g = cactus(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5), (1, 6), (3, 7)]);
        let out = pro_algorithm(&g).unwrap();
        assert_eq!(canonical_form(out.graph()).unwrap(), canonical_form(g.graph()).unwrap());
    }

    #[test]
    fn preconditions() {
        let small = cactus(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        assert!(matches!(pro_algorithm(&small), Err(Error::Precondition(_))));
        let tree = CactusGraph::new(Graph::path(7)).unwrap();
        assert!(matches!(pro_algorithm(&tree), Err(Error::Precondition(_))));
    }
}
