use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{apply_move, find_moves, LemmaId, SearchConfig, TieBreak};
use crate::error::Result;
use crate::graph::CactusGraph;
use crate::indices::IndexValue;

#[derive(Clone, Debug, Serialize)]
pub struct TraceEntry {
    pub lemma_id: LemmaId,
    pub site: Vec<usize>,
    pub index_before: IndexValue,
    pub index_after: IndexValue,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub graph: CactusGraph,
    pub trace: Vec<TraceEntry>,
    pub steps: usize,
    /// True when the step budget ran out before a local optimum was reached.
    pub exhausted: bool,
    pub final_value: IndexValue,
}

/// First-improvement descent (or ascent): at each step apply the first
/// candidate move in tie-break order, until none remains or `max_steps`
/// moves have been applied. Every step strictly improves the index, so the
/// search terminates on its own; the budget is a safety net.
///
/// A move that fails its post-check is an error, never silently skipped.
pub fn local_search(g: &CactusGraph, cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let mut rng = match cfg.tie_break {
        TieBreak::Lexicographic => None,
        TieBreak::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut graph = g.clone();
    let mut value = cfg.index.evaluate(graph.graph());
    let mut trace = Vec::new();
    loop {
        let mut moves = find_moves(&graph, cfg);
        if moves.is_empty() {
            return Ok(SearchOutcome { graph, steps: trace.len(), trace, exhausted: false, final_value: value });
        }
        if trace.len() == cfg.max_steps {
            return Ok(SearchOutcome { graph, steps: trace.len(), trace, exhausted: true, final_value: value });
        }
        if let Some(rng) = rng.as_mut() {
            moves.shuffle(rng);
        }
        let m = &moves[0];
        let next = apply_move(&graph, m)?;
        let after = cfg.index.evaluate(next.graph());
        trace.push(TraceEntry {
            lemma_id: m.lemma_id,
            site: m.site.clone(),
            index_before: value,
            index_after: after.clone(),
        });
        graph = next;
        value = after;
    }
}
