//! Strictly improving edits on cacti that keep the vertex and pendant counts,
//! the reattachment procedure for pendant trees, and a first-improvement
//! local search chaining them.

mod moves;
mod pro;
mod search;

pub use moves::{apply_move, find_moves};
pub use pro::pro_algorithm;
pub use search::{local_search, SearchOutcome, TraceEntry};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indices::{Index, IndexKind};

/// Which move family produced an edit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LemmaId {
    /// Merge two cycles into one across the path or vertex joining them.
    L1,
    /// Break a cycle: drop a cycle edge, or trade it for re-hanging a pendant
    /// tree on the cycle.
    #[serde(rename = "L2'")]
    L2Prime,
    /// Move a branch from a vertex to one of degree smaller by more than the
    /// branch weight.
    L3,
    /// Split a cycle of length at least 5 into a triangle and a shorter cycle.
    L4a,
    /// Turn two 4-cycles into three triangles.
    L4b,
    /// Close a pendant tree path into a cycle with a chord.
    L5a,
    /// Fold one length-2 dense path into a triangle on another.
    L5b,
    /// Shrink a 4-cycle and use the freed vertex to close a length-2 dense
    /// path into a triangle.
    L6,
    /// Move a branch between two vertices of one cycle toward the larger degree.
    L7,
    /// Close the bridge path between two cycles with a chord.
    L8a,
    /// Slide a cycle edge across a bridge between two cycles toward the larger
    /// degree.
    L8b,
    /// Concentrate a pendant tree on its cycle vertex.
    L9,
    /// Move a branch between vertices of different cycles toward the larger
    /// degree.
    L10,
    /// One reattachment of the pendant-tree procedure.
    #[serde(rename = "PRO_STEP")]
    ProStep,
    /// Move a branch toward a vertex of at least the same degree.
    #[serde(rename = "T1_SHIFT")]
    T1Shift,
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string tag"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveDirection {
    DecreasesIndex,
    IncreasesIndex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TargetIndex {
    Pi1c,
    Pi2,
    Both,
}

impl TargetIndex {
    fn covers(self, kind: IndexKind) -> bool {
        matches!(
            (self, kind),
            (TargetIndex::Both, _) | (TargetIndex::Pi1c, IndexKind::Pi1c) | (TargetIndex::Pi2, IndexKind::Pi2)
        )
    }
}

/// One edit, bound to the exact labelled graph it was found on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RewriteMove {
    pub lemma_id: LemmaId,
    /// The vertices the pattern matched, in pattern order.
    pub site: Vec<usize>,
    pub removed: Vec<(usize, usize)>,
    pub added: Vec<(usize, usize)>,
    pub direction: MoveDirection,
    pub target_index: TargetIndex,
    /// Fingerprint of the graph the move applies to.
    pub fingerprint: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Maximize,
    Minimize,
}

impl Objective {
    pub fn direction(self) -> MoveDirection {
        match self {
            Objective::Maximize => MoveDirection::IncreasesIndex,
            Objective::Minimize => MoveDirection::DecreasesIndex,
        }
    }
}

/// Order in which candidate moves are tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TieBreak {
    /// By move family, then site, then edits.
    Lexicographic,
    /// A seeded shuffle of the lexicographic order.
    Seeded(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub objective: Objective,
    pub index: Index,
    pub max_steps: usize,
    pub tie_break: TieBreak,
}

impl SearchConfig {
    pub fn new(objective: Objective, index: Index) -> Self {
        SearchConfig { objective, index, max_steps: 10_000, tie_break: TieBreak::Lexicographic }
    }

    pub fn with_max_steps(mut self, max_steps: usize) -> Self {
        self.max_steps = max_steps;
        self
    }

    pub fn with_tie_break(mut self, tie_break: TieBreak) -> Self {
        self.tie_break = tie_break;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_steps == 0 {
            return Err(Error::Precondition("max_steps must be at least 1".into()));
        }
        Ok(())
    }
}
