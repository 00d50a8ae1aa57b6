use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::sequence::SSequence;

/// Assignment of vertices to slots of an [`SSequence`]; `None` marks an
/// uncolored vertex in a partial coloring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    slots: Vec<Option<usize>>,
}

impl Coloring {
    pub fn empty(n: usize) -> Self {
        Coloring {
            slots: vec![None; n],
        }
    }

    pub fn from_total(slots: &[usize]) -> Self {
        Coloring {
            slots: slots.iter().map(|&s| Some(s)).collect(),
        }
    }

    pub fn from_partial(slots: Vec<Option<usize>>) -> Self {
        Coloring { slots }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> Option<usize> {
        self.slots[v]
    }

    pub fn set(&mut self, v: usize, slot: Option<usize>) {
        self.slots[v] = slot;
    }

    pub fn slots(&self) -> &[Option<usize>] {
        &self.slots
    }

    pub fn is_total(&self) -> bool {
        self.slots.iter().all(Option::is_some)
    }

    pub fn colored_count(&self) -> usize {
        self.slots.iter().filter(|s| s.is_some()).count()
    }

    /// Number of distinct slots in use.
    pub fn slots_used(&self) -> usize {
        let mut used: Vec<usize> = self.slots.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    pub fn to_witness(&self, sequence: &SSequence) -> Witness {
        Witness {
            sequence: sequence.clone(),
            assignment: self.slots.clone(),
        }
    }
}

/// JSON form of a coloring: `{"sequence":[...],"assignment":[slot per vertex]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub sequence: SSequence,
    pub assignment: Vec<Option<usize>>,
}

impl Witness {
    pub fn coloring(&self) -> Coloring {
        Coloring::from_partial(self.assignment.clone())
    }
}

/// Two same-slot vertices that are too close.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub slot: usize,
    pub dist: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("vertex {vertex} uses slot {slot}, but the sequence has {len} slots")]
    SlotOutOfRange {
        vertex: usize,
        slot: usize,
        len: usize,
    },
    #[error("coloring covers {found} vertices, graph has {expected}")]
    LengthMismatch { expected: usize, found: usize },
}

/// Lists every pair `u < v` sharing slot `i` with `dist(u, v) <= s_i`.
///
/// An empty list means `c` is a valid (possibly partial) S-packing coloring.
pub fn verify_coloring(
    g: &Graph,
    s: &SSequence,
    c: &Coloring,
) -> Result<Vec<Violation>, VerifyError> {
    if c.len() != g.n() {
        return Err(VerifyError::LengthMismatch {
            expected: g.n(),
            found: c.len(),
        });
    }
    for (vertex, slot) in c.slots.iter().enumerate() {
        if let Some(slot) = *slot {
            if slot >= s.len() {
                return Err(VerifyError::SlotOutOfRange {
                    vertex,
                    slot,
                    len: s.len(),
                });
            }
        }
    }
    let mut out = Vec::new();
    for u in 0..g.n() {
        let Some(slot) = c.get(u) else { continue };
        let radius = s.radius(slot);
        for v in u + 1..g.n() {
            if c.get(v) == Some(slot) && g.dist(u, v) <= radius {
                out.push(Violation {
                    u,
                    v,
                    slot,
                    dist: g.dist(u, v),
                });
            }
        }
    }
    Ok(out)
}

/// Convenience: a total coloring with no violations.
pub fn is_valid_total(g: &Graph, s: &SSequence, c: &Coloring) -> bool {
    c.is_total() && matches!(verify_coloring(g, s, c), Ok(v) if v.is_empty())
}
