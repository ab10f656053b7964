//! Closed-form extremal values and extremal degree sequences for the five
//! cactus bounds, plus the structural test for maximizers of the first index
//! when pendant vertices are present.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{find_dense_paths, CactusGraph, DegreeSequence};
use crate::indices::{Exponent, Index, IndexKind, IndexValue};

/// The five extremal results, by what they bound:
///
/// * `T1` minimum of the first index,
/// * `T2` maximum of the first index when `n <= k + 3`,
/// * `T3` maximum of the first index when `n >= k + 4`,
/// * `T4` minimum of the second index,
/// * `T5` maximum of the second index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Lower,
    Upper,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] = [TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4, TheoremId::T5];

    pub fn direction(self) -> Direction {
        match self {
            TheoremId::T1 | TheoremId::T4 => Direction::Lower,
            _ => Direction::Upper,
        }
    }

    pub fn index_kind(self) -> IndexKind {
        match self {
            TheoremId::T4 | TheoremId::T5 => IndexKind::Pi2,
            _ => IndexKind::Pi1c,
        }
    }

    pub fn index(self, c: Exponent) -> Index {
        match self.index_kind() {
            IndexKind::Pi1c => Index::Pi1(c),
            IndexKind::Pi2 => Index::Pi2,
        }
    }

    /// Whether the result speaks about the class of cacti with `n` vertices
    /// and `k` pendant vertices.
    pub fn is_applicable(self, n: usize, k: usize) -> bool {
        match self {
            TheoremId::T1 | TheoremId::T4 | TheoremId::T5 => class_is_general(n, k),
            TheoremId::T2 => match n.checked_sub(k) {
                Some(1) | Some(2) => k >= 2,
                Some(3) => true,
                _ => false,
            },
            TheoremId::T3 => (k == 0 && n >= 4) || (k >= 1 && n >= k + 4),
        }
    }

    /// Whether a closed-form value exists at `(n, k)`. Only `T3` with `k >= 1`
    /// is applicable without one.
    pub fn has_closed_form(self, n: usize, k: usize) -> bool {
        self.is_applicable(n, k) && !(self == TheoremId::T3 && k >= 1)
    }
}

/// Classes covered by the unrestricted bounds. `K2` (n = 2) and the single
/// vertex are left out, as is `k = 1` with `n = 3`, which is empty.
fn class_is_general(n: usize, k: usize) -> bool {
    match k {
        0 => n >= 3,
        1 => n >= 4,
        _ => n > k && n >= 3,
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "T1" | "1" => Ok(TheoremId::T1),
            "T2" | "2" => Ok(TheoremId::T2),
            "T3" | "3" => Ok(TheoremId::T3),
            "T4" | "4" => Ok(TheoremId::T4),
            "T5" | "5" => Ok(TheoremId::T5),
            _ => Err(Error::Parse { line: 0, message: format!("unknown theorem {s:?}") }),
        }
    }
}

/// A closed-form bound with the degree sequences of the graphs attaining it.
#[derive(Clone, Debug, Serialize)]
pub struct BoundSpec {
    pub theorem_id: TheoremId,
    pub direction: Direction,
    pub index_kind: IndexKind,
    pub n: usize,
    pub k: usize,
    /// Exponent of the first index; absent for the second index.
    pub c: Option<Exponent>,
    pub value: IndexValue,
    pub extremal_degree_sequences: Vec<DegreeSequence>,
}

impl BoundSpec {
    pub fn index(&self) -> Index {
        match self.c {
            Some(c) => Index::Pi1(c),
            None => Index::Pi2,
        }
    }
}

/// The balancing ratio `(k - 2) / (n - k)` and its floor and ceiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gamma {
    pub n: usize,
    pub k: usize,
    pub gamma: Rational64,
    pub floor_g: usize,
    pub ceil_g: usize,
}

impl Gamma {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k < 2 || n <= k {
            return Err(Error::Inadmissible { theorem: "gamma".into(), n, k });
        }
        let gamma = Rational64::new((k - 2) as i64, (n - k) as i64);
        let floor_g = gamma.floor().to_integer().to_usize().expect("non-negative");
        let ceil_g = gamma.ceil().to_integer().to_usize().expect("non-negative");
        Ok(Gamma { n, k, gamma, floor_g, ceil_g })
    }

    /// Vertices of the higher degree `2 + ceil`.
    pub fn upper_count(&self) -> usize {
        self.k - 2 - self.floor_g * (self.n - self.k)
    }

    /// Vertices of the lower degree `2 + floor`.
    pub fn lower_count(&self) -> usize {
        self.n + 2 + self.floor_g * (self.n - self.k) - 2 * self.k
    }
}

fn inadmissible(t: TheoremId, n: usize, k: usize) -> Error {
    Error::Inadmissible { theorem: t.to_string(), n, k }
}

fn sequence(parts: &[(usize, usize)]) -> DegreeSequence {
    let mut s: Vec<usize> = parts.iter().flat_map(|&(d, cnt)| std::iter::repeat_n(d, cnt)).collect();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

fn bound_spec(
    t: TheoremId,
    n: usize,
    k: usize,
    c: Option<Exponent>,
    factors: Vec<(u64, u64)>,
    sequences: Vec<DegreeSequence>,
) -> BoundSpec {
    BoundSpec {
        theorem_id: t,
        direction: t.direction(),
        index_kind: t.index_kind(),
        n,
        k,
        c,
        value: IndexValue::from_factors(factors, c.unwrap_or(Exponent::ONE)),
        extremal_degree_sequences: sequences,
    }
}

/// Minimum of the first index over cacti with `n` vertices, `k` pendant.
pub fn theorem1_lower(n: usize, k: usize, c: Exponent) -> Result<BoundSpec> {
    let t = TheoremId::T1;
    if !t.is_applicable(n, k) {
        return Err(inadmissible(t, n, k));
    }
    let (n64, k64) = (n as u64, k as u64);
    Ok(if k <= 1 {
        bound_spec(
            t,
            n,
            k,
            Some(c),
            vec![(3, k64), (2, n64 - 2 * k64)],
            vec![sequence(&[(3, k), (2, n - 2 * k), (1, k)])],
        )
    } else {
        bound_spec(
            t,
            n,
            k,
            Some(c),
            vec![(2, n64 - k64 - 1), (k64, 1)],
            vec![sequence(&[(k, 1), (2, n - k - 1), (1, k)])],
        )
    })
}

/// Maximum of the first index when `n` is `k + 1`, `k + 2` or `k + 3`.
pub fn theorem2_upper(n: usize, k: usize, c: Exponent) -> Result<BoundSpec> {
    let t = TheoremId::T2;
    if !t.is_applicable(n, k) {
        return Err(inadmissible(t, n, k));
    }
    let hubs: Vec<usize> = match n - k {
        1 => vec![k],
        2 => vec![k.div_ceil(2) + 1, k / 2 + 1],
        _ => {
            let (hi, lo) = (k.div_ceil(3), k / 3);
            vec![hi + 2, lo + 2, k - hi - lo + 2]
        }
    };
    let factors = hubs.iter().map(|&d| (d as u64, 1)).collect();
    let mut parts: Vec<(usize, usize)> = hubs.iter().map(|&d| (d, 1)).collect();
    parts.push((1, k));
    Ok(bound_spec(t, n, k, Some(c), factors, vec![sequence(&parts)]))
}

/// Maximum of the first index over cacti without pendant vertices.
pub fn theorem3_upper_k0(n: usize, c: Exponent) -> Result<BoundSpec> {
    let t = TheoremId::T3;
    if n < 4 {
        return Err(inadmissible(t, n, 0));
    }
    Ok(if n == 4 {
        bound_spec(t, n, 0, Some(c), vec![(2, 4)], vec![sequence(&[(2, 4)])])
    } else if n % 2 == 1 {
        let tt = (n - 5) / 2;
        bound_spec(t, n, 0, Some(c), vec![(2, 3 * tt as u64 + 6)], vec![sequence(&[(4, tt + 1), (2, tt + 4)])])
    } else {
        let tt = (n - 6) / 2;
        bound_spec(
            t,
            n,
            0,
            Some(c),
            vec![(2, 3 * tt as u64 + 4), (9, 1)],
            vec![sequence(&[(4, tt), (3, 2), (2, tt + 4)])],
        )
    })
}

/// Minimum of the second index.
pub fn theorem4_lower(n: usize, k: usize) -> Result<BoundSpec> {
    let t = TheoremId::T4;
    if !t.is_applicable(n, k) {
        return Err(inadmissible(t, n, k));
    }
    let (n64, k64) = (n as u64, k as u64);
    if k <= 1 {
        return Ok(bound_spec(
            t,
            n,
            k,
            None,
            vec![(3, 3 * k64), (2, 2 * (n64 - 2 * k64))],
            vec![sequence(&[(3, k), (2, n - 2 * k), (1, k)])],
        ));
    }
    let g = Gamma::new(n, k)?;
    let (hi, lo) = (2 + g.ceil_g, 2 + g.floor_g);
    let (y2, y1) = (g.upper_count(), g.lower_count());
    Ok(bound_spec(
        t,
        n,
        k,
        None,
        vec![(hi as u64, (hi * y2) as u64), (lo as u64, (lo * y1) as u64)],
        vec![sequence(&[(hi, y2), (lo, y1), (1, k)])],
    ))
}

/// Maximum of the second index.
pub fn theorem5_upper(n: usize, k: usize) -> Result<BoundSpec> {
    let t = TheoremId::T5;
    if !t.is_applicable(n, k) {
        return Err(inadmissible(t, n, k));
    }
    let hub = if (n - k).is_multiple_of(2) { n - 2 } else { n - 1 };
    let twos = n - k - 1;
    Ok(bound_spec(
        t,
        n,
        k,
        None,
        vec![(hub as u64, hub as u64), (2, 2 * twos as u64)],
        vec![sequence(&[(hub, 1), (2, twos), (1, k)])],
    ))
}

/// Dispatches to the closed form of `theorem` at `(n, k)`. `c` is ignored for
/// the second index.
pub fn bound_for(theorem: TheoremId, n: usize, k: usize, c: Exponent) -> Result<BoundSpec> {
    match theorem {
        TheoremId::T1 => theorem1_lower(n, k, c),
        TheoremId::T2 => theorem2_upper(n, k, c),
        TheoremId::T3 if k == 0 => theorem3_upper_k0(n, c),
        TheoremId::T3 => Err(inadmissible(theorem, n, k)),
        TheoremId::T4 => theorem4_lower(n, k),
        TheoremId::T5 => theorem5_upper(n, k),
    }
}

/// Which alternative of the maximizer condition holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConditionClause {
    /// Non-pendant degrees pairwise differ by at most one.
    Balanced,
    /// Low degrees, triangles only, short dense paths and short bridges
    /// between cycles.
    Compact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub satisfied: bool,
    pub via: Option<ConditionClause>,
    /// One line per violated requirement; empty when satisfied.
    pub failures: Vec<String>,
}

/// Lengths of the paths that join two cycles through vertices on no cycle.
/// Cycles sharing a vertex contribute nothing.
pub fn cycle_connecting_path_lengths(g: &CactusGraph) -> Vec<usize> {
    let graph = g.graph();
    let mut out = Vec::new();
    for a in 0..g.n() {
        if !g.on_cycle(a) {
            continue;
        }
        // BFS from `a` through off-cycle vertices only
        let mut dist = vec![usize::MAX; g.n()];
        dist[a] = 0;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            for &w in graph.neighbors(u) {
                if dist[w] != usize::MAX || !g.is_bridge(u, w) {
                    continue;
                }
                dist[w] = dist[u] + 1;
                if g.on_cycle(w) {
                    if w > a {
                        out.push(dist[w]);
                    }
                } else {
                    queue.push_back(w);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Tests the necessary condition on maximizers of the first index when
/// `k >= 1` and `n >= k + 4`.
pub fn theorem3_condition_check(g: &CactusGraph) -> Result<ConditionReport> {
    let (n, k) = (g.n(), g.k());
    if k == 0 || n < k + 4 {
        return Err(Error::Precondition(format!("needs k >= 1 and n >= k + 4, got n={n}, k={k}")));
    }
    let inner: Vec<(usize, usize)> = (0..n).map(|v| (g.degree(v), v)).filter(|&(d, _)| d > 1).collect();
    let (lo, lo_v) = *inner.iter().min().expect("n >= k + 4 leaves inner vertices");
    let (hi, hi_v) = *inner.iter().max().expect("non-empty");
    if hi - lo <= 1 {
        return Ok(ConditionReport { satisfied: true, via: Some(ConditionClause::Balanced), failures: vec![] });
    }

    let mut failures = vec![format!("balanced: vertex {hi_v} has degree {hi} and vertex {lo_v} has degree {lo}")];
    let before = failures.len();
    if let Some(&(d, v)) = inner.iter().find(|&&(d, _)| d > 4) {
        failures.push(format!("compact: vertex {v} has degree {d} > 4"));
    }
    if let Some(cyc) = g.cycles().iter().find(|c| c.len() > 3) {
        failures.push(format!("compact: cycle {cyc:?} has length {}", cyc.len()));
    }
    let dense: Vec<usize> = find_dense_paths(g).iter().map(|p| p.length).collect();
    if let Some(&len) = dense.iter().find(|&&l| l > 2) {
        failures.push(format!("compact: a dense path has length {len}"));
    }
    if dense.iter().filter(|&&l| l == 2).count() > 1 {
        failures.push("compact: more than one dense path of length 2".into());
    }
    let joins = cycle_connecting_path_lengths(g);
    if let Some(&len) = joins.iter().find(|&&l| l > 1) {
        failures.push(format!("compact: a path between two cycles has length {len}"));
    }
    if joins.iter().filter(|&&l| l == 1).count() > 1 {
        failures.push("compact: more than one bridge joins two cycles".into());
    }
    if failures.len() == before {
        return Ok(ConditionReport { satisfied: true, via: Some(ConditionClause::Compact), failures: vec![] });
    }
    Ok(ConditionReport { satisfied: false, via: None, failures })
}

/// Every applicable theorem with a closed form, for each `(n, k)` with
/// `3 <= n <= n_max`.
pub fn admissible_pairs(theorem: TheoremId, n_max: usize) -> Vec<(usize, usize)> {
    (1..=n_max).flat_map(|n| (0..=n).map(move |k| (n, k))).filter(|&(n, k)| theorem.is_applicable(n, k)).collect()
}

/// Distinct sequences, sorted, for set comparisons.
pub fn sequence_set(seqs: &[DegreeSequence]) -> BTreeSet<DegreeSequence> {
    seqs.iter().cloned().collect()
}
