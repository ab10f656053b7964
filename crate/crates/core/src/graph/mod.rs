//! Simple undirected graphs on dense vertex labels `0..n`, plus the cactus
//! structure built on top of them.

mod blocks;
mod canon;
mod dense;
pub mod io;
pub mod random;

pub use blocks::{
    block_decomposition, is_cactus, Block, BlockDecomposition, BlockKind, CactusCheck, CactusGraph, CactusViolation,
};
pub use canon::{canonical_form, canonical_form_with_limit, canonical_labeling, CanonicalForm, CANON_LIMIT};
pub use dense::{find_dense_paths, DensePath};

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A sorted degree sequence, largest degree first.
pub type DegreeSequence = Vec<usize>;

/// Simple undirected graph. Immutable once built; edits produce new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Rejects self-loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj, edge_count })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Number of vertices of degree exactly one.
    pub fn pendant_count(&self) -> usize {
        self.adj.iter().filter(|l| l.len() == 1).count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn component_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Vertices reachable from `start` without entering any vertex in `blocked`
    /// and without traversing the edge `skip` (in either direction).
    pub fn reachable_avoiding(&self, start: usize, blocked: &[usize], skip: Option<(usize, usize)>) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        for &b in blocked {
            seen[b] = true;
        }
        if seen[start] {
            return vec![false; self.n()];
        }
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if let Some((a, b)) = skip {
                    if (u == a && w == b) || (u == b && w == a) {
                        continue;
                    }
                }
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        for &b in blocked {
            seen[b] = false;
        }
        seen
    }

    /// BFS distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// A shortest path from `s` to `t` (inclusive), if one exists.
    pub fn shortest_path(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n()];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &w in &self.adj[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if parent[t] == usize::MAX {
            return None;
        }
        let mut path = vec![t];
        let mut cur = t;
        while cur != s {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }

    /// Applies edge removals then additions, returning a new graph.
    pub fn with_edits(&self, removed: &[(usize, usize)], added: &[(usize, usize)]) -> Result<Self> {
        let mut adj = self.adj.clone();
        let mut edge_count = self.edge_count;
        for &(u, v) in removed {
            if !self.has_edge(u, v) {
                return Err(Error::MissingEdge(u, v));
            }
            let pu = adj[u].binary_search(&v).map_err(|_| Error::MissingEdge(u, v))?;
            adj[u].remove(pu);
            let pv = adj[v].binary_search(&u).map_err(|_| Error::MissingEdge(u, v))?;
            adj[v].remove(pv);
            edge_count -= 1;
        }
        for &(u, v) in added {
            let n = adj.len();
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            match adj[u].binary_search(&v) {
                Ok(_) => return Err(Error::DuplicateEdge(u.min(v), u.max(v))),
                Err(p) => adj[u].insert(p, v),
            }
            let p = adj[v].binary_search(&u).unwrap_err();
            adj[v].insert(p, u);
            edge_count += 1;
        }
        Ok(Graph { adj, edge_count })
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n());
        let edges = self.edges().map(|(u, v)| (perm[u], perm[v]));
        Graph::from_edges(self.n(), edges).expect("relabeling is a bijection")
    }

    /// Disjoint union followed by identifying `self`'s vertex `at` with
    /// `other`'s vertex `other_at`. Vertices of `other` are appended after
    /// those of `self`, skipping the identified vertex.
    pub fn glue(&self, at: usize, other: &Graph, other_at: usize) -> Self {
        let offset = self.n();
        let map = |w: usize| -> usize {
            if w == other_at {
                at
            } else if w < other_at {
                offset + w
            } else {
                offset + w - 1
            }
        };
        let edges = self.edges().chain(other.edges().map(|(u, v)| (map(u), map(v))));
        Graph::from_edges(self.n() + other.n() - 1, edges).expect("gluing preserves simplicity")
    }

    /// Stable 64-bit fingerprint of the labelled edge set.
    pub fn fingerprint(&self) -> u64 {
        // FNV-1a over (n, edges)
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        };
        eat(self.n() as u64);
        for (u, v) in self.edges() {
            eat(((u as u64) << 32) | v as u64);
        }
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(Graph::from_edges(2, [(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 })));
    }

    #[test]
    fn edge_count_is_half_degree_sum() {
        for g in [Graph::cycle(5), Graph::star(4), Graph::path(4), Graph::complete(5)] {
            assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
            for (u, v) in g.edges() {
                assert!(g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn pendant_counts() {
        assert_eq!(Graph::path(4).pendant_count(), 2);
        assert_eq!(Graph::cycle(5).pendant_count(), 0);
        assert_eq!(Graph::star(4).pendant_count(), 4);
        assert_eq!(Graph::empty(1).pendant_count(), 0);
    }

    #[test]
    fn edits_and_glue() {
        let c4 = Graph::cycle(4);
        let g = c4.with_edits(&[(0, 1)], &[(0, 2)]).unwrap();
        assert!(g.has_edge(0, 2) && !g.has_edge(0, 1));
        assert_eq!(g.edge_count(), 4);
        assert!(c4.with_edits(&[(0, 2)], &[]).is_err());
        assert!(c4.with_edits(&[], &[(0, 1)]).is_err());

        let bowtie = Graph::cycle(3).glue(0, &Graph::cycle(3), 0);
        assert_eq!(bowtie.n(), 5);
        assert_eq!(bowtie.degree_sequence(), vec![4, 2, 2, 2, 2]);
    }

    #[test]
    fn reachability_and_paths() {
        let p = Graph::path(5);
        let side = p.reachable_avoiding(3, &[], Some((2, 3)));
        assert_eq!(side, vec![false, false, false, true, true]);
        assert_eq!(p.shortest_path(0, 4), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(p.distances_from(2), vec![2, 1, 0, 1, 2]);
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.component_count(), 2);
        assert_eq!(two.shortest_path(0, 3), None);
    }
}
