//! Concrete cacti attaining each closed-form bound.

use serde::Serialize;

use crate::bounds::{bound_for, Gamma, TheoremId};
use crate::error::{Error, Result};
use crate::graph::{CactusGraph, Graph};
use crate::indices::Exponent;

/// Named graph shapes. Every shape has its vertex `0` as the hub.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Builder {
    Cycle {
        len: usize,
    },
    /// A cycle with a pendant path of `tail` edges at one vertex.
    Tadpole {
        cycle_len: usize,
        tail: usize,
    },
    /// Paths of the given lengths sharing the first vertex.
    Spider {
        legs: Vec<usize>,
    },
    Star {
        leaves: usize,
    },
    /// Two adjacent centres carrying `a` and `b` leaves.
    DoubleStar {
        a: usize,
        b: usize,
    },
    /// A triangle whose vertices carry the given numbers of leaves.
    PendantTriangle {
        pendants: [usize; 3],
    },
    /// Triangles glued in a path, consecutive ones sharing one vertex.
    TriangleChain {
        triangles: usize,
    },
    /// Two triangle chains joined by a bridge between end vertices.
    BridgedTriangleChain {
        left: usize,
        right: usize,
    },
    /// A caterpillar realizing a tree degree sequence.
    BalancedTree {
        degrees: Vec<usize>,
    },
    /// Triangles (and optionally one 4-cycle) through a common vertex, which
    /// also carries pendant edges and optionally one pendant path of length 2.
    FriendshipWithPendants {
        triangles: usize,
        quad: bool,
        pendant_edges: usize,
        long_tail: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionRecipe {
    pub theorem_id: TheoremId,
    pub n: usize,
    pub k: usize,
    pub builder: Builder,
}

/// Incremental edge list with fresh vertex allocation.
struct Sketch {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Sketch {
    fn new() -> Self {
        Sketch { n: 1, edges: Vec::new() }
    }

    fn fresh(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn path_from(&mut self, at: usize, len: usize) -> usize {
        let mut cur = at;
        for _ in 0..len {
            let v = self.fresh();
            self.edges.push((cur, v));
            cur = v;
        }
        cur
    }

    /// Cycle of `len` through `at`; returns the new vertices in cyclic order.
    fn cycle_at(&mut self, at: usize, len: usize) -> Vec<usize> {
        let ring: Vec<usize> = (1..len).map(|_| self.fresh()).collect();
        let mut prev = at;
        for &v in &ring {
            self.edges.push((prev, v));
            prev = v;
        }
        self.edges.push((prev, at));
        ring
    }

    fn leaves(&mut self, at: usize, count: usize) {
        for _ in 0..count {
            self.path_from(at, 1);
        }
    }

    /// Chain of triangles starting at `at`; returns the far end vertex.
    fn triangle_chain(&mut self, at: usize, triangles: usize) -> usize {
        let mut end = at;
        for _ in 0..triangles {
            end = self.cycle_at(end, 3)[1];
        }
        end
    }

    fn finish(self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges)
    }
}

impl Builder {
    pub fn build(&self) -> Result<Graph> {
        let mut s = Sketch::new();
        match self {
            Builder::Cycle { len } => return Ok(Graph::cycle(*len)),
            Builder::Star { leaves } => return Ok(Graph::star(*leaves)),
            Builder::BalancedTree { degrees } => return realize_tree_degree_sequence(degrees),
            Builder::Tadpole { cycle_len, tail } => {
                s.cycle_at(0, *cycle_len);
                s.path_from(0, *tail);
            }
            Builder::Spider { legs } => {
                for &len in legs {
                    s.path_from(0, len);
                }
            }
            Builder::DoubleStar { a, b } => {
                let other = s.path_from(0, 1);
                s.leaves(0, *a);
                s.leaves(other, *b);
            }
            Builder::PendantTriangle { pendants } => {
                let ring = s.cycle_at(0, 3);
                for (&v, &p) in [0, ring[0], ring[1]].iter().zip(pendants) {
                    s.leaves(v, p);
                }
            }
            Builder::TriangleChain { triangles } => {
                s.triangle_chain(0, *triangles);
            }
            Builder::BridgedTriangleChain { left, right } => {
                let end = s.triangle_chain(0, *left);
                let start = s.path_from(end, 1);
                s.triangle_chain(start, *right);
            }
            Builder::FriendshipWithPendants { triangles, quad, pendant_edges, long_tail } => {
                for _ in 0..*triangles {
                    s.cycle_at(0, 3);
                }
                if *quad {
                    s.cycle_at(0, 4);
                }
                s.leaves(0, *pendant_edges);
                if *long_tail {
                    s.path_from(0, 2);
                }
            }
        }
        s.finish()
    }
}

/// The shape used to witness `theorem` at `(n, k)`.
pub fn recipe(theorem: TheoremId, n: usize, k: usize) -> Result<ConstructionRecipe> {
    if !theorem.has_closed_form(n, k) {
        return Err(Error::Inadmissible { theorem: theorem.to_string(), n, k });
    }
    let builder = match theorem {
        TheoremId::T1 | TheoremId::T4 if k == 0 => Builder::Cycle { len: n },
        TheoremId::T1 | TheoremId::T4 if k == 1 => Builder::Tadpole { cycle_len: n - 1, tail: 1 },
        TheoremId::T1 => {
            let mut legs = vec![1; k];
            legs[0] = n - k;
            Builder::Spider { legs }
        }
        TheoremId::T4 => {
            let g = Gamma::new(n, k)?;
            let mut degrees = vec![2 + g.ceil_g; g.upper_count()];
            degrees.extend(std::iter::repeat_n(2 + g.floor_g, g.lower_count()));
            degrees.extend(std::iter::repeat_n(1, k));
            Builder::BalancedTree { degrees }
        }
        TheoremId::T2 => match n - k {
            1 => Builder::Star { leaves: k },
            2 => Builder::DoubleStar { a: k.div_ceil(2), b: k / 2 },
            _ => {
                let (hi, lo) = (k.div_ceil(3), k / 3);
                Builder::PendantTriangle { pendants: [hi, lo, k - hi - lo] }
            }
        },
        TheoremId::T3 if n == 4 => Builder::Cycle { len: 4 },
        TheoremId::T3 if n % 2 == 1 => Builder::TriangleChain { triangles: (n - 1) / 2 },
        TheoremId::T3 => {
            let triangles = (n - 2) / 2;
            Builder::BridgedTriangleChain { left: triangles.div_ceil(2), right: triangles / 2 }
        }
        TheoremId::T5 => {
            let free = n - k - 1;
            if free.is_multiple_of(2) {
                Builder::FriendshipWithPendants { triangles: free / 2, quad: false, pendant_edges: k, long_tail: false }
            } else if k >= 1 {
                Builder::FriendshipWithPendants {
                    triangles: free / 2,
                    quad: false,
                    pendant_edges: k - 1,
                    long_tail: true,
                }
            } else {
                Builder::FriendshipWithPendants {
                    triangles: (free - 3) / 2,
                    quad: true,
                    pendant_edges: 0,
                    long_tail: false,
                }
            }
        }
    };
    Ok(ConstructionRecipe { theorem_id: theorem, n, k, builder })
}

/// A member of the class attaining the bound of `theorem` at `(n, k)`.
/// The result is checked against the predicted degree sequence.
pub fn construct_extremal(theorem: TheoremId, n: usize, k: usize) -> Result<CactusGraph> {
    let r = recipe(theorem, n, k)?;
    let g = CactusGraph::new(r.builder.build()?)?;
    let bound = bound_for(theorem, n, k, Exponent::ONE)?;
    if g.n() != n || g.k() != k || !bound.extremal_degree_sequences.contains(&g.degree_sequence()) {
        return Err(Error::Internal(format!("{theorem} ({n}, {k}) built degree sequence {:?}", g.degree_sequence())));
    }
    Ok(g)
}

/// A caterpillar with the given degrees: vertices of degree at least 2 form
/// the spine in the given order, leaves are attached to fill each degree.
pub fn realize_tree_degree_sequence(seq: &[usize]) -> Result<Graph> {
    let n = seq.len();
    let infeasible = |why: &str| Error::InfeasibleSequence(format!("{seq:?}: {why}"));
    if n < 2 {
        return Err(infeasible("a tree with degree-1 entries needs at least two vertices"));
    }
    if seq.contains(&0) {
        return Err(infeasible("zero degree"));
    }
    if seq.iter().sum::<usize>() != 2 * (n - 1) {
        return Err(infeasible("degree sum is not 2(n-1)"));
    }
    if n == 2 {
        return Graph::from_edges(2, [(0, 1)]);
    }
    let spine: Vec<usize> = seq.iter().copied().filter(|&d| d >= 2).collect();
    let mut edges: Vec<(usize, usize)> = (1..spine.len()).map(|i| (i - 1, i)).collect();
    let mut next_leaf = spine.len();
    for (i, &d) in spine.iter().enumerate() {
        let on_spine = (i > 0) as usize + (i + 1 < spine.len()) as usize;
        for _ in on_spine..d {
            edges.push((i, next_leaf));
            next_leaf += 1;
        }
    }
    debug_assert_eq!(next_leaf, n);
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::admissible_pairs;
    use crate::graph::canonical_form;

    #[test]
    fn spider_for_minimum_first_index() {
        let g = construct_extremal(TheoremId::T1, 6, 3).unwrap();
        assert!(g.is_tree());
        assert_eq!(g.degree_sequence(), vec![3, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn hub_for_maximum_second_index() {
        let g = construct_extremal(TheoremId::T5, 6, 2).unwrap();
        assert_eq!(g.degree_sequence(), vec![4, 2, 2, 2, 1, 1]);
        assert_eq!(g.cycle_count(), 1);
        assert_eq!(g.degree(0), 4);
    }

    #[test]
    fn triangle_chain() {
        let g = construct_extremal(TheoremId::T3, 7, 0).unwrap();
        assert_eq!(g.degree_sequence(), vec![4, 4, 2, 2, 2, 2, 2]);
        assert_eq!(g.cycle_count(), 3);
        let g = construct_extremal(TheoremId::T3, 8, 0).unwrap();
        assert_eq!(g.degree_sequence(), vec![4, 3, 3, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn all_constructions_realize_their_sequences() {
        for t in TheoremId::ALL {
            for (n, k) in admissible_pairs(t, 12) {
                if t.has_closed_form(n, k) {
                    let g = construct_extremal(t, n, k).unwrap();
                    assert_eq!((g.n(), g.k()), (n, k));
                }
            }
        }
        assert!(construct_extremal(TheoremId::T3, 8, 1).is_err());
        assert!(construct_extremal(TheoremId::T2, 9, 2).is_err());
    }

    #[test]
    fn tree_realization() {
        assert_eq!(realize_tree_degree_sequence(&[1, 1]).unwrap().edge_count(), 1);
        let g = realize_tree_degree_sequence(&[3, 2, 2, 1, 1, 1]).unwrap();
        assert_eq!(g.degree_sequence(), vec![3, 2, 2, 1, 1, 1]);
        assert!(g.is_connected());
        let ds = realize_tree_degree_sequence(&[3, 3, 1, 1, 1, 1]).unwrap();
        let expected = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(canonical_form(&ds).unwrap(), canonical_form(&expected).unwrap());
        assert!(realize_tree_degree_sequence(&[2, 2, 1]).is_err());
        assert!(realize_tree_degree_sequence(&[1]).is_err());
        assert!(realize_tree_degree_sequence(&[2, 0, 1, 1]).is_err());
    }
}
