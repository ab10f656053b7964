use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::{LemmaId, MoveDirection, Objective, RewriteMove, SearchConfig, TargetIndex};
use crate::error::{Error, Result};
use crate::graph::{find_dense_paths, CactusGraph, Graph};
use crate::indices::{multiplicative_zagreb_2, narumi_katayama, IndexKind};

type Edge = (usize, usize);

fn norm((u, v): Edge) -> Edge {
    (u.min(v), u.max(v))
}

/// Collects candidate edits, dropping ill-formed ones and duplicates.
struct Collector<'a> {
    g: &'a CactusGraph,
    direction: MoveDirection,
    fingerprint: u64,
    seen: BTreeSet<(Vec<Edge>, Vec<Edge>)>,
    out: Vec<RewriteMove>,
}

impl Collector<'_> {
    fn push(&mut self, lemma_id: LemmaId, site: Vec<usize>, removed: Vec<Edge>, added: Vec<Edge>, target: TargetIndex) {
        let graph = self.g.graph();
        let mut removed: Vec<Edge> = removed.into_iter().map(norm).collect();
        let mut added: Vec<Edge> = added.into_iter().map(norm).collect();
        removed.sort_unstable();
        added.sort_unstable();
        let well_formed = removed.iter().all(|&(u, v)| graph.has_edge(u, v))
            && added.iter().all(|&(u, v)| u != v && !graph.has_edge(u, v) && !removed.contains(&(u, v)))
            && added.windows(2).all(|w| w[0] != w[1]);
        if !well_formed || !self.seen.insert((removed.clone(), added.clone())) {
            return;
        }
        self.out.push(RewriteMove {
            lemma_id,
            site,
            removed,
            added,
            direction: self.direction,
            target_index: target,
            fingerprint: self.fingerprint,
        });
    }
}

/// How a branch transfer must shift degree between its two endpoints.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Shift {
    /// From a vertex to one of degree smaller by more than the weight.
    Balance,
    /// From a vertex to one of degree greater than its own minus the weight.
    Concentrate,
}

/// Every candidate edit on `g` for the configured objective and index.
/// Each family's pattern conditions imply a strict change in the requested
/// direction; [`apply_move`] re-checks it.
pub fn find_moves(g: &CactusGraph, cfg: &SearchConfig) -> Vec<RewriteMove> {
    let mut c = Collector {
        g,
        direction: cfg.objective.direction(),
        fingerprint: g.graph().fingerprint(),
        seen: BTreeSet::new(),
        out: Vec::new(),
    };
    if g.n() < 3 {
        return c.out;
    }
    let kind = cfg.index.kind();
    let target = match kind {
        IndexKind::Pi1c => TargetIndex::Pi1c,
        IndexKind::Pi2 => TargetIndex::Pi2,
    };
    match (cfg.objective, kind) {
        (Objective::Minimize, _) => {
            merge_cycles(&mut c);
            break_cycles(&mut c);
            let shift = if kind == IndexKind::Pi1c { Shift::Concentrate } else { Shift::Balance };
            transfers(&mut c, shift, cfg.objective, target);
        }
        (Objective::Maximize, _) => {
            split_long_cycles(&mut c);
            split_square_pairs(&mut c);
            fold_dense_pairs(&mut c);
            square_and_dense(&mut c);
            chords(&mut c);
            let shift = if kind == IndexKind::Pi1c { Shift::Balance } else { Shift::Concentrate };
            transfers(&mut c, shift, cfg.objective, target);
        }
    }
    let mut out = c.out;
    out.sort_by(|a, b| (a.lemma_id, &a.site, &a.removed, &a.added).cmp(&(b.lemma_id, &b.site, &b.removed, &b.added)));
    out
}

/// Applies `m` to `g` and checks the result: a cactus with the same vertex and
/// pendant counts whose targeted index moved strictly in `m.direction`.
pub fn apply_move(g: &CactusGraph, m: &RewriteMove) -> Result<CactusGraph> {
    if g.graph().fingerprint() != m.fingerprint {
        return Err(Error::StaleMove(format!("{} was found on a different graph", m.lemma_id)));
    }
    if let Some(&(u, v)) = m.removed.iter().find(|&&(u, v)| !g.graph().has_edge(u, v)) {
        return Err(Error::StaleMove(format!("edge {u}-{v} is gone")));
    }
    let post = |why: String| Error::PostCheck(format!("{} at {:?}: {why}", m.lemma_id, m.site));
    let edited = g.graph().with_edits(&m.removed, &m.added).map_err(|e| post(e.to_string()))?;
    let out = CactusGraph::new(edited).map_err(|e| post(e.to_string()))?;
    if out.n() != g.n() || out.k() != g.k() {
        return Err(post(format!("(n, k) changed from ({}, {}) to ({}, {})", g.n(), g.k(), out.n(), out.k())));
    }
    let want = match m.direction {
        MoveDirection::IncreasesIndex => Ordering::Greater,
        MoveDirection::DecreasesIndex => Ordering::Less,
    };
    // x -> x^c is increasing, so the Narumi-Katayama product decides every c
    if m.target_index.covers(IndexKind::Pi1c) && narumi_katayama(out.graph()).cmp(&narumi_katayama(g.graph())) != want {
        return Err(post("first index did not move strictly".into()));
    }
    if m.target_index.covers(IndexKind::Pi2) {
        let (before, after) = (multiplicative_zagreb_2(g.graph()), multiplicative_zagreb_2(out.graph()));
        if after.cmp_exact(&before) != Some(want) {
            return Err(post("second index did not move strictly".into()));
        }
    }
    Ok(out)
}

fn neighbors_on_cycle(g: &CactusGraph, cycle: usize, v: usize) -> [usize; 2] {
    let cyc = &g.cycles()[cycle];
    let i = cyc.iter().position(|&x| x == v).expect("vertex on cycle");
    let len = cyc.len();
    [cyc[(i + 1) % len], cyc[(i + len - 1) % len]]
}

/// The shortest path between two cycles through bridges only, as
/// `(z1, .., zp)` with `z1` on `a` and `zp` on `b`.
fn bridge_path_between(g: &CactusGraph, a: usize, b: usize) -> Option<Vec<usize>> {
    let graph = g.graph();
    let mut best: Option<Vec<usize>> = None;
    for &z1 in &g.cycles()[a] {
        for &zp in &g.cycles()[b] {
            if z1 == zp {
                continue;
            }
            let Some(path) = graph.shortest_path(z1, zp) else { continue };
            let interior_clear =
                path[1..path.len() - 1].iter().all(|&v| !g.cycles_at(v).contains(&a) && !g.cycles_at(v).contains(&b));
            let all_bridges = path.windows(2).all(|w| g.is_bridge(w[0], w[1]));
            if interior_clear && all_bridges && best.as_ref().is_none_or(|p| path.len() < p.len()) {
                best = Some(path);
            }
        }
    }
    best
}

/// Two cycles become one: cut one edge at each end of the junction and join
/// the freed cycle neighbours.
fn merge_cycles(c: &mut Collector) {
    let g = c.g;
    let cycles = g.cycle_count();
    for a in 0..cycles {
        for b in a + 1..cycles {
            let shared: Vec<usize> = g.cycles()[a].iter().copied().filter(|v| g.cycles()[b].contains(v)).collect();
            let (z1, zp) = match shared.first() {
                Some(&z) => (z, z),
                None => match bridge_path_between(g, a, b) {
                    Some(p) => (p[0], *p.last().expect("non-empty")),
                    None => continue,
                },
            };
            for x1 in neighbors_on_cycle(g, a, z1) {
                for xp in neighbors_on_cycle(g, b, zp) {
                    c.push(
                        LemmaId::L1,
                        vec![z1, zp, x1, xp],
                        vec![(x1, z1), (xp, zp)],
                        vec![(x1, xp)],
                        TargetIndex::Both,
                    );
                }
            }
        }
    }
}

/// Drop a cycle edge between two vertices of degree at least 3, or trade a
/// cycle edge `u1 w1` for re-hanging a pendant tree from `v1` onto `w1`.
fn break_cycles(c: &mut Collector) {
    let g = c.g;
    let graph = g.graph();
    let cycle_edges: Vec<Edge> = graph.edges().filter(|&(u, v)| g.cycle_of_edge(u, v).is_some()).collect();
    for &(u, v) in &cycle_edges {
        if g.degree(u) >= 3 && g.degree(v) >= 3 {
            c.push(LemmaId::L2Prime, vec![u, v], vec![(u, v)], vec![], TargetIndex::Both);
        }
    }
    // pendant trees: bridges whose far side holds no cycle vertex
    let mut hanging: Vec<(usize, usize)> = Vec::new();
    for (a, b) in graph.edges() {
        if !g.is_bridge(a, b) {
            continue;
        }
        for (v1, v2) in [(a, b), (b, a)] {
            let side = g.bridge_side(v1, v2);
            if (0..g.n()).all(|x| !side[x] || !g.on_cycle(x)) {
                hanging.push((v1, v2));
            }
        }
    }
    for &(p, q) in &cycle_edges {
        for (u1, w1) in [(p, q), (q, p)] {
            for &(v1, v2) in &hanging {
                if v1 == w1 {
                    continue;
                }
                let degrees_ok = if v1 == u1 { g.degree(u1) >= 4 } else { g.degree(u1) >= 3 && g.degree(v1) >= 3 };
                if !degrees_ok {
                    continue;
                }
                c.push(
                    LemmaId::L2Prime,
                    vec![u1, w1, v1, v2],
                    vec![(u1, w1), (v1, v2)],
                    vec![(v2, w1)],
                    TargetIndex::Both,
                );
            }
        }
    }
}

/// The branches hanging at `a`: `(weight, attachment vertices, side)` where
/// the side excludes `a`. A bridge branch has weight 1, a cycle branch 2.
fn branches_at(g: &CactusGraph, a: usize) -> Vec<(usize, Vec<usize>, Vec<bool>)> {
    let mut out = Vec::new();
    for &x in g.graph().neighbors(a) {
        if g.is_bridge(a, x) {
            out.push((1, vec![x], g.bridge_side(a, x)));
        }
    }
    for &cyc in g.cycles_at(a) {
        let mut side = g.cycle_side(cyc, a);
        side[a] = false;
        out.push((2, neighbors_on_cycle(g, cyc, a).to_vec(), side));
    }
    out
}

fn transfer_label(g: &CactusGraph, a: usize, b: usize, shift: Shift, objective: Objective) -> LemmaId {
    match (shift, objective) {
        (Shift::Balance, _) => LemmaId::L3,
        (Shift::Concentrate, Objective::Minimize) => LemmaId::T1Shift,
        (Shift::Concentrate, Objective::Maximize) => {
            if g.cycles_at(a).iter().any(|c| g.cycles_at(b).contains(c)) {
                LemmaId::L7
            } else if g.on_cycle(a) && g.on_cycle(b) {
                LemmaId::L10
            } else {
                LemmaId::L9
            }
        }
    }
}

fn shift_ok(shift: Shift, da: usize, db: usize, w: usize) -> bool {
    match shift {
        Shift::Balance => da > db + w,
        Shift::Concentrate => da < db + w,
    }
}

/// Re-hang a branch from `a` at `b`, or slide a cycle edge at `a` across the
/// bridge `ab`. Degree moves from `a` to `b`; `a` and `b` keep degree >= 2.
fn transfers(c: &mut Collector, shift: Shift, objective: Objective, target: TargetIndex) {
    let g = c.g;
    let graph = g.graph();
    for a in 0..g.n() {
        let da = g.degree(a);
        for (w, roots, side) in branches_at(g, a) {
            if da < w + 2 {
                continue;
            }
            for (b, &behind) in side.iter().enumerate() {
                let db = g.degree(b);
                if b == a || behind || db < 2 || !shift_ok(shift, da, db, w) {
                    continue;
                }
                let removed = roots.iter().map(|&r| (a, r)).collect();
                let added = roots.iter().map(|&r| (b, r)).collect();
                let mut site = vec![a, b];
                site.extend(&roots);
                c.push(transfer_label(g, a, b, shift, objective), site, removed, added, target);
            }
        }
        // slides: cycle edge a-y becomes b-y across the bridge a-b
        for &b in graph.neighbors(a) {
            let db = g.degree(b);
            if !g.is_bridge(a, b) || db < 2 || da < 3 || !shift_ok(shift, da, db, 1) {
                continue;
            }
            for &cyc in g.cycles_at(a) {
                for y in neighbors_on_cycle(g, cyc, a) {
                    let lemma = match (shift, objective, g.on_cycle(b)) {
                        (Shift::Concentrate, Objective::Maximize, true) => LemmaId::L8b,
                        _ => transfer_label(g, a, b, shift, objective),
                    };
                    c.push(lemma, vec![a, b, y], vec![(a, y)], vec![(b, y)], target);
                }
            }
        }
    }
}

/// On a cycle `v1 v2 v3 v4 ..` of length >= 5, replace `v3 v4` by `v1 v3`
/// and `v1 v4`.
fn split_long_cycles(c: &mut Collector) {
    let g = c.g;
    for cyc in g.cycles() {
        let len = cyc.len();
        if len < 5 {
            continue;
        }
        for i in 0..len {
            for step in [1, len - 1] {
                let at = |j: usize| cyc[(i + j * step) % len];
                let (v1, v3, v4) = (at(0), at(2), at(3));
                c.push(LemmaId::L4a, vec![v1, v3, v4], vec![(v3, v4)], vec![(v1, v3), (v1, v4)], TargetIndex::Both);
            }
        }
    }
}

/// Orientations `(x1, x2, x3, x4)` of a 4-cycle.
fn square_orientations(cyc: &[usize]) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for i in 0..4 {
        for step in [1, 3] {
            let at = |j: usize| cyc[(i + j * step) % 4];
            out.push([at(0), at(1), at(2), at(3)]);
        }
    }
    out
}

/// The component of `v` after deleting the edges `v p` and `v q`.
fn detached_part(graph: &Graph, v: usize, p: usize, q: usize) -> Vec<bool> {
    let cut = graph.with_edits(&[(v, p), (v, q)], &[]).expect("edges exist");
    cut.reachable_avoiding(v, &[], None)
}

/// Two 4-cycles `x1 x2 x3 x4` and `y1 y2 y3 y4`: detach `x4` (with whatever
/// hangs on it), close `x1 x3`, and fold it onto `y1 y2` while `y2 y4` cuts
/// the second square.
fn split_square_pairs(c: &mut Collector) {
    let g = c.g;
    let squares: Vec<&Vec<usize>> = g.cycles().iter().filter(|c| c.len() == 4).collect();
    for (i, xs) in squares.iter().enumerate() {
        for (j, ys) in squares.iter().enumerate() {
            if i == j {
                continue;
            }
            for [x4, x1, _, x3] in square_orientations(xs) {
                let part = detached_part(g.graph(), x4, x1, x3);
                for [y1, y2, _, y4] in square_orientations(ys) {
                    if part[y1] || part[y2] || part[y4] {
                        continue;
                    }
                    c.push(
                        LemmaId::L4b,
                        vec![x1, x3, x4, y1, y2, y4],
                        vec![(x1, x4), (x3, x4), (y1, y4)],
                        vec![(x1, x3), (x4, y1), (x4, y2), (y2, y4)],
                        TargetIndex::Both,
                    );
                }
            }
        }
    }
}

/// Two dense paths `x1 x2 ..` and `y1 y2 y3 ..` of length 2: hang `y3` on
/// `y1` directly and close `y2` into a triangle with `x1 x2`.
fn fold_dense_pairs(c: &mut Collector) {
    let g = c.g;
    let dense: Vec<_> = find_dense_paths(g).into_iter().filter(|p| p.length == 2).collect();
    for p in &dense {
        for q in &dense {
            if p.anchor == q.anchor {
                continue;
            }
            let (x1, x2) = (p.spine[0], p.spine[1]);
            let (y1, y2, y3) = (q.spine[0], q.spine[1], q.leaves[0]);
            c.push(
                LemmaId::L5b,
                vec![x1, x2, y1, y2, y3],
                vec![(y1, y2), (y2, y3)],
                vec![(y1, y3), (x1, y2), (x2, y2)],
                TargetIndex::Both,
            );
        }
    }
}

/// A 4-cycle `x1 x2 x3 x4` and a dense path `y1 y2 ..` of length 2: close
/// `x1 x3` and move `x2` (with whatever hangs on it) onto `y1 y2`.
fn square_and_dense(c: &mut Collector) {
    let g = c.g;
    let dense: Vec<_> = find_dense_paths(g).into_iter().filter(|p| p.length == 2).collect();
    if dense.is_empty() {
        return;
    }
    for sq in g.cycles().iter().filter(|c| c.len() == 4) {
        for [x2, x1, _, x3] in square_orientations(sq) {
            let part = detached_part(g.graph(), x2, x1, x3);
            for d in &dense {
                let (y1, y2) = (d.spine[0], d.spine[1]);
                if part[y1] || part[y2] {
                    continue;
                }
                c.push(
                    LemmaId::L6,
                    vec![x1, x2, x3, y1, y2],
                    vec![(x1, x2), (x2, x3)],
                    vec![(x2, y1), (x2, y2), (x1, x3)],
                    TargetIndex::Both,
                );
            }
        }
    }
}

/// Join two non-adjacent non-pendant vertices whose connecting path consists
/// of bridges; the path becomes a cycle.
fn chords(c: &mut Collector) {
    let g = c.g;
    let graph = g.graph();
    for u in 0..g.n() {
        if g.degree(u) < 2 {
            continue;
        }
        for v in u + 1..g.n() {
            if g.degree(v) < 2 || graph.has_edge(u, v) {
                continue;
            }
            let path = graph.shortest_path(u, v).expect("connected");
            if !path.windows(2).all(|w| g.is_bridge(w[0], w[1])) {
                continue;
            }
            let branching_tree_end = [u, v].iter().any(|&x| !g.on_cycle(x) && g.degree(x) >= 3);
            let lemma = if g.on_cycle(u) && g.on_cycle(v) {
                LemmaId::L8a
            } else if branching_tree_end {
                LemmaId::L9
            } else {
                LemmaId::L5a
            };
            c.push(lemma, path, vec![], vec![(u, v)], TargetIndex::Both);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::{multiplicative_zagreb_1, Exponent, Index};
    use crate::rewrite::{Objective, SearchConfig};

    fn cactus(n: usize, edges: &[Edge]) -> CactusGraph {
        CactusGraph::new(Graph::from_edges(n, edges.iter().copied()).unwrap()).unwrap()
    }

    fn cfg(objective: Objective, index: Index) -> SearchConfig {
        SearchConfig::new(objective, index)
    }

    const PI1: Index = Index::Pi1(Exponent::ONE);

    #[test]
    fn merge_available_for_joined_cycles() {
        // triangles 0-1-2 and 3-4-5 joined by the path 2-6-3
        let g = cactus(7, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 6), (6, 3)]);
        let moves = find_moves(&g, &cfg(Objective::Minimize, PI1));
        let merge = moves.iter().find(|m| m.lemma_id == LemmaId::L1).expect("merge move");
        let out = apply_move(&g, merge).unwrap();
        assert_eq!(out.cycle_count(), 1);
    }

    #[test]
    fn chord_on_long_cycle() {
        let g = CactusGraph::new(Graph::cycle(5)).unwrap();
        let moves = find_moves(&g, &cfg(Objective::Maximize, PI1));
        let m = moves.iter().find(|m| m.lemma_id == LemmaId::L4a).expect("split move");
        let out = apply_move(&g, m).unwrap();
        assert_eq!(multiplicative_zagreb_1(out.graph(), Exponent::ONE).exact(), Some(64u32.into()));
    }

    #[test]
    fn minimal_spider_has_no_improving_moves() {
        let g = cactus(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]);
        assert!(find_moves(&g, &cfg(Objective::Minimize, PI1)).is_empty());
    }

    #[test]
    fn balancing_leaf_transfer() {
        // degrees 5 and 2 on a tree: 0 has leaves 2..5, 0-1, 1-6
        let g = cactus(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 6)]);
        let moves = find_moves(&g, &cfg(Objective::Minimize, Index::Pi2));
        let m = moves.iter().find(|m| m.lemma_id == LemmaId::L3 && m.site[..2] == [0, 1]).expect("balancing move");
        let out = apply_move(&g, m).unwrap();
        assert!(multiplicative_zagreb_2(out.graph()).compare(&multiplicative_zagreb_2(g.graph())).is_lt());
    }

    #[test]
    fn concentrating_tree_on_cycle() {
        // triangle 0-1-2, tree vertex 3 of degree 3 hanging at 0 with leaves 4, 5
        let g = cactus(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (3, 5)]);
        let moves = find_moves(&g, &cfg(Objective::Maximize, Index::Pi2));
        assert!(moves.iter().any(|m| m.lemma_id == LemmaId::L9));
        for m in &moves {
            apply_move(&g, m).unwrap();
        }
    }

    #[test]
    fn stale_moves_are_rejected() {
        let g = CactusGraph::new(Graph::cycle(6)).unwrap();
        let moves = find_moves(&g, &cfg(Objective::Maximize, PI1));
        let other = apply_move(&g, &moves[0]).unwrap();
        assert!(matches!(apply_move(&other, &moves[0]), Err(Error::StaleMove(_))));
    }

    #[test]
    fn every_listed_move_applies() {
        let graphs = [
            cactus(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 4), (2, 7)]),
            cactus(9, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 6), (6, 7), (7, 4), (0, 8)]),
            cactus(8, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (2, 5), (5, 6), (1, 7)]),
        ];
        for g in &graphs {
            for objective in [Objective::Maximize, Objective::Minimize] {
                for index in [PI1, Index::Pi2] {
                    for m in find_moves(g, &cfg(objective, index)) {
                        apply_move(g, &m).unwrap_or_else(|e| panic!("{e}"));
                    }
                }
            }
        }
    }
}
