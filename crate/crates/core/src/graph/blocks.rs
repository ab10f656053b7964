use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    /// An isolated vertex (only for the one-vertex graph).
    Vertex,
    Edge,
    Cycle,
    /// A biconnected block that is neither an edge nor a cycle.
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub kind: BlockKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
    /// Edges `(block index, cut vertex)` of the bipartite block-cut tree.
    pub block_cut_tree: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    /// Blocks containing at most one cut vertex.
    pub fn end_blocks(&self) -> Vec<usize> {
        let mut cuts_in = vec![0usize; self.blocks.len()];
        for &(b, _) in &self.block_cut_tree {
            cuts_in[b] += 1;
        }
        (0..self.blocks.len()).filter(|&b| cuts_in[b] <= 1).collect()
    }
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<(usize, usize)>>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.timer += 1;
        self.disc[u] = self.timer;
        self.low[u] = self.timer;
        for &w in self.g.neighbors(u) {
            if Some(w) == parent {
                continue;
            }
            if self.disc[w] == 0 {
                self.stack.push((u, w));
                self.visit(w, Some(u));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

/// Splits a connected graph into its maximal biconnected blocks.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let components = g.component_count();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![Block { vertices: vec![0], edges: vec![], kind: BlockKind::Vertex }],
            cut_vertices: vec![],
            block_cut_tree: vec![],
        });
    }

    let mut t = Tarjan { g, disc: vec![0; n], low: vec![0; n], timer: 0, stack: Vec::new(), blocks: Vec::new() };
    t.visit(0, None);

    let mut blocks: Vec<Block> = t
        .blocks
        .into_iter()
        .map(|raw| {
            let mut edges: Vec<(usize, usize)> = raw.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
            edges.sort_unstable();
            let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            let kind = match (edges.len(), vertices.len()) {
                (1, 2) => BlockKind::Edge,
                (e, v) if e == v && v >= 3 => BlockKind::Cycle,
                _ => BlockKind::Other,
            };
            Block { vertices, edges, kind }
        })
        .collect();
    blocks.sort_by(|a, b| a.edges.cmp(&b.edges));

    let mut membership = vec![0usize; n];
    for b in &blocks {
        for &v in &b.vertices {
            membership[v] += 1;
        }
    }
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| membership[v] >= 2).collect();
    let mut block_cut_tree = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            if membership[v] >= 2 {
                block_cut_tree.push((i, v));
            }
        }
    }
    Ok(BlockDecomposition { blocks, cut_vertices, block_cut_tree })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum CactusViolation {
    Empty,
    Disconnected { components: usize },
    BadBlock { vertices: Vec<usize>, edges: usize },
}

impl fmt::Display for CactusViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CactusViolation::Empty => write!(f, "graph has no vertices"),
            CactusViolation::Disconnected { components } => {
                write!(f, "graph is disconnected ({components} components)")
            }
            CactusViolation::BadBlock { vertices, edges } => {
                write!(f, "block on vertices {vertices:?} has {edges} edges and is neither an edge nor a cycle")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CactusCheck {
    pub is_cactus: bool,
    pub violation: Option<CactusViolation>,
}

/// True iff `g` is connected and every block is an edge or a cycle.
pub fn is_cactus(g: &Graph) -> CactusCheck {
    let fail = |v| CactusCheck { is_cactus: false, violation: Some(v) };
    let decomposition = match block_decomposition(g) {
        Ok(d) => d,
        Err(Error::EmptyGraph) => return fail(CactusViolation::Empty),
        Err(Error::Disconnected { components }) => return fail(CactusViolation::Disconnected { components }),
        Err(e) => unreachable!("block decomposition failed unexpectedly: {e}"),
    };
    match decomposition.blocks.iter().find(|b| b.kind == BlockKind::Other) {
        Some(b) => fail(CactusViolation::BadBlock { vertices: b.vertices.clone(), edges: b.edges.len() }),
        None => CactusCheck { is_cactus: true, violation: None },
    }
}

/// A validated cactus with cached structure.
#[derive(Clone, Debug)]
pub struct CactusGraph {
    graph: Graph,
    k: usize,
    cycles: Vec<Vec<usize>>,
    blocks: BlockDecomposition,
    cycles_at: Vec<Vec<usize>>,
    edge_cycle: HashMap<(usize, usize), usize>,
}

impl CactusGraph {
    pub fn new(graph: Graph) -> Result<Self> {
        let check = is_cactus(&graph);
        if let Some(v) = check.violation {
            return Err(Error::NotCactus(v.to_string()));
        }
        let blocks = block_decomposition(&graph)?;
        let mut cycles = Vec::new();
        let mut cycles_at = vec![Vec::new(); graph.n()];
        let mut edge_cycle = HashMap::new();
        for b in blocks.blocks.iter().filter(|b| b.kind == BlockKind::Cycle) {
            let idx = cycles.len();
            let order = cyclic_order(&graph, b);
            for &v in &order {
                cycles_at[v].push(idx);
            }
            for &e in &b.edges {
                edge_cycle.insert(e, idx);
            }
            cycles.push(order);
        }
        let k = graph.pendant_count();
        Ok(CactusGraph { graph, k, cycles, blocks, cycles_at, edge_cycle })
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Number of pendant (degree-one) vertices.
    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// Cycles in cyclic vertex order, each starting at its smallest vertex.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn blocks(&self) -> &BlockDecomposition {
        &self.blocks
    }

    /// Indices of the cycles through `v`.
    pub fn cycles_at(&self, v: usize) -> &[usize] {
        &self.cycles_at[v]
    }

    pub fn on_cycle(&self, v: usize) -> bool {
        !self.cycles_at[v].is_empty()
    }

    /// The cycle containing edge `uv`, if any.
    pub fn cycle_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_cycle.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn is_bridge(&self, u: usize, v: usize) -> bool {
        self.graph.has_edge(u, v) && self.cycle_of_edge(u, v).is_none()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.graph.degree(v)
    }

    pub fn degree_sequence(&self) -> super::DegreeSequence {
        self.graph.degree_sequence()
    }

    /// True when the graph has no cycles.
    pub fn is_tree(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Vertices on `x`'s side of the bridge `ux`.
    pub fn bridge_side(&self, u: usize, x: usize) -> Vec<bool> {
        debug_assert!(self.is_bridge(u, x));
        self.graph.reachable_avoiding(x, &[], Some((u, x)))
    }

    /// Vertices hanging off cycle `c` at its vertex `a` (the component of
    /// `G - a` that contains the rest of `c`), including `a` itself.
    pub fn cycle_side(&self, c: usize, a: usize) -> Vec<bool> {
        let other = *self.cycles[c].iter().find(|&&v| v != a).expect("cycle has 3+ vertices");
        let mut side = self.graph.reachable_avoiding(other, &[a], None);
        side[a] = true;
        side
    }
}

fn cyclic_order(g: &Graph, b: &Block) -> Vec<usize> {
    let inside = |w: usize| b.vertices.binary_search(&w).is_ok();
    let start = b.vertices[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = *g.neighbors(start).iter().find(|&&w| inside(w)).expect("cycle vertex");
    while cur != start {
        order.push(cur);
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| w != prev && inside(w))
            .expect("cycle vertices have two neighbours in the block");
        prev = cur;
        cur = next;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn cactus_examples() {
        assert!(is_cactus(&Graph::cycle(3)).is_cactus);
        assert!(is_cactus(&bowtie()).is_cactus);
        let k4 = is_cactus(&Graph::complete(4));
        assert!(!k4.is_cactus);
        assert!(matches!(k4.violation, Some(CactusViolation::BadBlock { edges: 6, .. })));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_cactus(&split).violation, Some(CactusViolation::Disconnected { components: 2 }));
        assert!(is_cactus(&Graph::empty(1)).is_cactus);
        assert_eq!(is_cactus(&Graph::empty(0)).violation, Some(CactusViolation::Empty));
    }

    #[test]
    fn decomposition_examples() {
        let d = block_decomposition(&bowtie()).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert!(d.blocks.iter().all(|b| b.kind == BlockKind::Cycle));
        assert_eq!(d.cut_vertices, vec![0]);

        let d = block_decomposition(&Graph::path(4)).unwrap();
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.cut_vertices, vec![1, 2]);
        assert_eq!(d.end_blocks().len(), 2);

        // C4 with a pendant edge at vertex 0.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let d = block_decomposition(&g).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, vec![0]);

        assert!(matches!(
            block_decomposition(&Graph::from_edges(3, [(0, 1)]).unwrap()),
            Err(Error::Disconnected { components: 2 })
        ));
    }

    #[test]
    fn cactus_graph_caches() {
        let c = CactusGraph::new(bowtie()).unwrap();
        assert_eq!(c.k(), 0);
        assert_eq!(c.cycle_count(), 2);
        assert_eq!(c.cycles_at(0).len(), 2);
        assert!(!c.is_bridge(0, 1));
        assert_eq!(c.cycles()[0], vec![0, 1, 2]);
        let side = c.cycle_side(1, 0);
        assert_eq!(side, vec![true, false, false, true, true]);
        assert!(CactusGraph::new(Graph::complete(4)).is_err());
    }
}
