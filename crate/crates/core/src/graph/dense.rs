use serde::Serialize;

use super::CactusGraph;

/// A bundle of `r >= 1` pendant paths sharing the spine `u1 .. up`, each
/// ending in its own leaf attached at `up`. With `r = 1` it is a plain
/// pendant path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensePath {
    pub anchor: usize,
    /// `u1 .. up`, starting at the anchor. A single entry means the leaves hang
    /// directly off the anchor.
    pub spine: Vec<usize>,
    pub leaves: Vec<usize>,
    /// Length of each pendant path, i.e. `spine.len()` edges.
    pub length: usize,
    /// False when the anchor lies on no cycle (it is a branching vertex of a
    /// tree part instead).
    pub anchor_on_cycle: bool,
}

impl DensePath {
    /// Vertices of the path other than the anchor.
    pub fn detached_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.spine[1..].iter().chain(self.leaves.iter()).copied()
    }
}

fn leaf_neighbors(g: &CactusGraph, v: usize) -> Vec<usize> {
    g.graph().neighbors(v).iter().copied().filter(|&w| g.degree(w) == 1).collect()
}

fn eligible(g: &CactusGraph, v: usize) -> bool {
    g.on_cycle(v) || g.degree(v) >= 3
}

fn is_tip_candidate(g: &CactusGraph, v: usize) -> bool {
    !g.on_cycle(v) && g.degree(v) >= 3 && g.graph().neighbors(v).iter().filter(|&&w| g.degree(w) > 1).count() == 1
}

/// A tip candidate is absorbed into the dense path of the anchor it hangs from,
/// unless the walk back ends at another tip candidate or at a leaf.
fn is_absorbed(g: &CactusGraph, v: usize) -> bool {
    if !is_tip_candidate(g, v) {
        return false;
    }
    let graph = g.graph();
    let mut prev = v;
    let mut cur = *graph.neighbors(v).iter().find(|&&w| g.degree(w) > 1).expect("tip has a non-leaf neighbour");
    loop {
        if eligible(g, cur) {
            return !is_tip_candidate(g, cur);
        }
        match g.degree(cur) {
            2 => {
                let next = graph.neighbors(cur).iter().copied().find(|&w| w != prev).expect("degree 2");
                prev = cur;
                cur = next;
            }
            _ => return false,
        }
    }
}

/// Reports every maximal dense path of `g` once.
pub fn find_dense_paths(g: &CactusGraph) -> Vec<DensePath> {
    let graph = g.graph();
    let n = g.n();
    let anchors: Vec<usize> = (0..n).filter(|&v| eligible(g, v) && !is_absorbed(g, v)).collect();
    let is_anchor = {
        let mut flags = vec![false; n];
        for &a in &anchors {
            flags[a] = true;
        }
        flags
    };

    let mut out = Vec::new();
    for &a in &anchors {
        let on_cycle = g.on_cycle(a);
        let leaves = leaf_neighbors(g, a);
        if !leaves.is_empty() {
            out.push(DensePath { anchor: a, spine: vec![a], leaves, length: 1, anchor_on_cycle: on_cycle });
        }
        for &w in graph.neighbors(a) {
            if g.degree(w) == 1 || is_anchor[w] || !g.is_bridge(a, w) {
                continue;
            }
            let mut spine = vec![a];
            let mut prev = a;
            let mut cur = w;
            loop {
                if is_anchor[cur] {
                    break;
                }
                spine.push(cur);
                if g.degree(cur) == 2 {
                    let next = graph.neighbors(cur).iter().copied().find(|&x| x != prev).expect("degree 2");
                    if g.degree(next) == 1 {
                        let length = spine.len();
                        out.push(DensePath { anchor: a, spine, leaves: vec![next], length, anchor_on_cycle: on_cycle });
                        break;
                    }
                    prev = cur;
                    cur = next;
                } else {
                    // absorbed tip: every neighbour except `prev` is a leaf
                    let leaves: Vec<usize> = graph.neighbors(cur).iter().copied().filter(|&x| x != prev).collect();
                    debug_assert!(leaves.iter().all(|&x| g.degree(x) == 1));
                    let length = spine.len();
                    out.push(DensePath { anchor: a, spine, leaves, length, anchor_on_cycle: on_cycle });
                    break;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cactus(n: usize, edges: &[(usize, usize)]) -> CactusGraph {
        CactusGraph::new(Graph::from_edges(n, edges.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn triangle_with_pendant_edge() {
        let g = cactus(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        let d = find_dense_paths(&g);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].anchor, 0);
        assert_eq!(d[0].length, 1);
        assert_eq!(d[0].leaves, vec![3]);
        assert!(d[0].anchor_on_cycle);
    }

    #[test]
    fn triangle_with_length_two_path() {
        let g = cactus(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)]);
        let d = find_dense_paths(&g);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].length, 2);
        assert_eq!(d[0].spine, vec![0, 3]);
        assert_eq!(d[0].leaves, vec![4]);
    }

    #[test]
    fn bare_cycle_has_none() {
        assert!(find_dense_paths(&CactusGraph::new(Graph::cycle(5)).unwrap()).is_empty());
        assert!(find_dense_paths(&CactusGraph::new(Graph::path(5)).unwrap()).is_empty());
    }

    #[test]
    fn bundle_at_spine_end() {
        // triangle, 0-3, 3-4, 3-5 : one dense path of length 2 with r = 2
        let g = cactus(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (3, 5)]);
        let d = find_dense_paths(&g);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].spine, vec![0, 3]);
        assert_eq!(d[0].leaves, vec![4, 5]);
        assert_eq!(d[0].length, 2);
    }

    #[test]
    fn star_and_spider_are_cycle_free() {
        let d = find_dense_paths(&CactusGraph::new(Graph::star(4)).unwrap());
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].spine, vec![0]);
        assert_eq!(d[0].leaves.len(), 4);
        assert!(!d[0].anchor_on_cycle);

        // spider with legs 2, 1, 1 centred at 0
        let g = cactus(5, &[(0, 1), (1, 2), (0, 3), (0, 4)]);
        let mut lengths: Vec<usize> = find_dense_paths(&g).iter().map(|p| p.length).collect();
        lengths.sort();
        assert_eq!(lengths, vec![1, 2]);
    }

    #[test]
    fn paths_between_cycles_are_not_dense() {
        // two triangles joined by the path 2-6-3
        let g = cactus(7, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 6), (6, 3)]);
        assert!(find_dense_paths(&g).is_empty());
    }
}
