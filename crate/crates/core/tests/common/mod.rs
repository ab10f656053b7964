//! Brute-force reference implementations, deliberately sharing no code with
//! the library: bitmask graphs, cycle listing by path search, isomorphism
//! classes by trying every permutation, and the closed forms as written.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::One;

/// Adjacency bitmasks on at most 16 vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Small {
    pub n: usize,
    pub adj: Vec<u16>,
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = (u.min(v), u.max(v));
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

impl Small {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![0u16; n];
        for (u, v) in edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Small { n, adj }
    }

    pub fn from_library(g: &zc_core::graph::Graph) -> Self {
        Small::from_edges(g.n(), g.edges())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|a| a.count_ones() as usize).collect()
    }

    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn pendants(&self) -> usize {
        self.degrees().iter().filter(|&&d| d == 1).count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] >> v & 1 == 1 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let mut next = 0;
            for v in 0..self.n {
                if frontier >> v & 1 == 1 {
                    next |= self.adj[v];
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Every simple cycle, as the bitmask of its edges.
    pub fn cycles(&self) -> BTreeSet<u128> {
        let mut out = BTreeSet::new();
        for s in 0..self.n {
            let mut path = vec![s];
            self.extend_path(s, &mut path, &mut out);
        }
        out
    }

    fn extend_path(&self, s: usize, path: &mut Vec<usize>, out: &mut BTreeSet<u128>) {
        let last = *path.last().unwrap();
        for w in 0..self.n {
            if self.adj[last] >> w & 1 == 0 {
                continue;
            }
            if w == s && path.len() >= 3 {
                let mut mask = 0u128;
                for i in 0..path.len() {
                    mask |= 1 << pair_index(self.n, path[i], path[(i + 1) % path.len()]);
                }
                out.insert(mask);
            } else if w > s && !path.contains(&w) {
                path.push(w);
                self.extend_path(s, path, out);
                path.pop();
            }
        }
    }

    /// Connected, and no edge lies on two different cycles.
    pub fn is_cactus(&self) -> bool {
        if !self.connected() {
            return false;
        }
        let mut used = 0u128;
        for c in self.cycles() {
            if used & c != 0 {
                return false;
            }
            used |= c;
        }
        true
    }

    /// Smallest edge bitmask over all relabellings.
    pub fn canonical(&self) -> u128 {
        let edges = self.edges();
        let mut best = u128::MAX;
        for p in permutations(self.n) {
            let mut code = 0u128;
            for &(u, v) in &edges {
                code |= 1 << pair_index(self.n, p[u], p[v]);
            }
            best = best.min(code);
        }
        best
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism classes of cacti on `n` vertices found by testing every
/// labelled graph, grouped by pendant count.
pub fn filtered_cacti(n: usize) -> BTreeMap<usize, BTreeSet<u128>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out: BTreeMap<usize, BTreeSet<u128>> = BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        let g = Small::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e));
        if g.is_cactus() {
            out.entry(g.pendants()).or_default().insert(g.canonical());
        }
    }
    out
}

pub fn pow(b: u64, e: u64) -> BigUint {
    BigUint::from(b).pow(e as u32)
}

/// Product of `d^c` over the degrees.
pub fn first_index(degrees: &[usize], c: u64) -> BigUint {
    degrees.iter().fold(BigUint::one(), |acc, &d| acc * pow(d as u64, c))
}

/// Product of `d^d` over the degrees.
pub fn second_index(degrees: &[usize]) -> BigUint {
    degrees.iter().fold(BigUint::one(), |acc, &d| acc * pow(d as u64, d as u64))
}

/// Product over edges of `d(u) d(v)`.
pub fn second_index_by_edges(g: &Small) -> BigUint {
    let d = g.degrees();
    g.edges().iter().fold(BigUint::one(), |acc, &(u, v)| acc * BigUint::from((d[u] * d[v]) as u64))
}

fn seq(parts: &[(usize, usize)]) -> Vec<usize> {
    let mut s: Vec<usize> = parts.iter().flat_map(|&(d, m)| std::iter::repeat_n(d, m)).collect();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// Minimum of the first index with exponent `c`, and its degree sequence.
pub fn min_first(n: usize, k: usize, c: u64) -> (BigUint, Vec<usize>) {
    if k <= 1 {
        (pow(3, (k as u64) * c) * pow(2, (n - 2 * k) as u64 * c), seq(&[(3, k), (2, n - 2 * k), (1, k)]))
    } else {
        (pow(2, (n - k - 1) as u64 * c) * pow(k as u64, c), seq(&[(k, 1), (2, n - k - 1), (1, k)]))
    }
}

/// Maximum of the first index when `n <= k + 3`.
pub fn max_first_few_internal(n: usize, k: usize, c: u64) -> (BigUint, Vec<usize>) {
    let s = match n - k {
        1 => seq(&[(k, 1), (1, k)]),
        2 => seq(&[(k.div_ceil(2) + 1, 1), (k / 2 + 1, 1), (1, k)]),
        _ => {
            let (hi, lo) = (k.div_ceil(3), k / 3);
            seq(&[(hi + 2, 1), (lo + 2, 1), (k - hi - lo + 2, 1), (1, k)])
        }
    };
    (first_index(&s, c), s)
}

/// Maximum of the first index without pendant vertices, `n >= 4`.
pub fn max_first_no_pendants(n: usize, c: u64) -> (BigUint, Vec<usize>) {
    if n == 4 {
        (pow(16, c), vec![2, 2, 2, 2])
    } else if n % 2 == 1 {
        let t = (n - 5) / 2;
        (pow(2, (3 * t as u64 + 6) * c), seq(&[(4, t + 1), (2, t + 4)]))
    } else {
        let t = n / 2 - 3;
        (pow(2, (3 * t as u64 + 4) * c) * pow(9, c), seq(&[(4, t), (3, 2), (2, t + 4)]))
    }
}

/// Minimum of the second index.
pub fn min_second(n: usize, k: usize) -> (BigUint, Vec<usize>) {
    if k <= 1 {
        return (pow(3, 3 * k as u64) * pow(2, 2 * (n - 2 * k) as u64), seq(&[(3, k), (2, n - 2 * k), (1, k)]));
    }
    let (num, den) = (k - 2, n - k);
    let (fl, ce) = (num / den, num.div_ceil(den));
    let upper = k - 2 - fl * den;
    let lower = n + 2 + fl * den - 2 * k;
    let value = pow((2 + ce) as u64, ((2 + ce) * upper) as u64) * pow((2 + fl) as u64, ((2 + fl) * lower) as u64);
    (value, seq(&[(2 + ce, upper), (2 + fl, lower), (1, k)]))
}

/// Maximum of the second index.
pub fn max_second(n: usize, k: usize) -> (BigUint, Vec<usize>) {
    let hub = if (n - k).is_multiple_of(2) { n - 2 } else { n - 1 };
    (pow(hub as u64, hub as u64) * pow(2, 2 * (n - k - 1) as u64), seq(&[(hub, 1), (2, n - k - 1), (1, k)]))
}
