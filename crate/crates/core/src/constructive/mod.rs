//! Constructive colorings of subcubic graphs.
//!
//! Each algorithm colors the levels of a level ordering from the deepest one
//! up to level 1 and then resolves the two root vertices with a small case
//! analysis. Every intermediate coloring is checked against the real
//! distance constraints. When no listed case applies, strict mode returns
//! [`ConstructError::CaseFailure`] naming the case; lenient mode falls back
//! to the exact solver.
//!
//! Slot tables (slot index: name):
//!
//! | method            | sequence          | slots                              |
//! |-------------------|-------------------|------------------------------------|
//! | `color_1_2x6`     | (1,2,2,2,2,2,2)   | 0: 1, 1..=6: 2a..2f                |
//! | `color_3irr_1222` | (1,2,2,2)         | 0: 1, 1..=3: 2a..2c                |
//! | `color_11223`     | (1,1,2,2,3)       | 0: 1a, 1: 1b, 2: 2a, 3: 2b, 4: 3   |
//! | `color_3irr_112`  | (1,1,2)           | 0: 1a, 1: 1b, 2: 2                 |
//! | `color_subdivided_1333` | (1,3,3,3)   | 0: 1, 1..=3: 3a..3c                |

mod irregular_112;
mod irregular_1222;
mod one_2x6;
mod painter;
mod s11223;
mod subdivision;

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::levels::LevelError;
use crate::sequence::SSequence;
use crate::solver::{decide, verify_coloring, Coloring, Outcome, Violation};

pub use irregular_112::color_3irr_112;
pub use irregular_1222::color_3irr_1222;
pub use one_2x6::color_1_2x6;
pub use s11223::color_11223;
pub use subdivision::{
    check_bipartite_equivalence, color_subdivided_1333, lift_subdivision, BipartiteReport,
};

use painter::Painter;

/// What to do when the case analysis does not cover a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Strict,
    Lenient,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("input coloring is invalid ({} violations)", .0.len())]
    InvalidInput(Vec<Violation>),
    #[error("{method}: no case applies ({case}){}", vertex.map(|v| format!(" at vertex {v}")).unwrap_or_default())]
    CaseFailure {
        method: String,
        case: String,
        vertex: Option<usize>,
    },
    #[error("{method}: fallback solver found no coloring")]
    FallbackFailed { method: String },
}

impl From<LevelError> for ConstructError {
    fn from(e: LevelError) -> Self {
        ConstructError::Precondition(e.to_string())
    }
}

/// One rule application: `slot == None` records an erase.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplayEntry {
    pub vertex: usize,
    pub slot: Option<usize>,
    pub subsidiary: Option<usize>,
    pub rule: &'static str,
}

/// Main coloring plus the alternate slot kept for local recoloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsidiaryColoring {
    pub main: Coloring,
    pub subsidiary: Vec<Option<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub sequence: SSequence,
    pub coloring: SubsidiaryColoring,
    pub replay: Vec<ReplayEntry>,
    /// Set when lenient mode replaced a failed case analysis by the solver.
    pub fallback: Option<String>,
}

impl Construction {
    pub fn main(&self) -> &Coloring {
        &self.coloring.main
    }
}

/// The constructive methods, for callers that pick one by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Subdivided1333,
    OneTwoX6,
    Irregular1222,
    S11223,
    Irregular112,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Subdivided1333,
        Method::OneTwoX6,
        Method::Irregular1222,
        Method::S11223,
        Method::Irregular112,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Subdivided1333 => "s1333",
            Method::OneTwoX6 => "12x6",
            Method::Irregular1222 => "1222",
            Method::S11223 => "11223",
            Method::Irregular112 => "112",
        }
    }

    pub fn from_name(name: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.name() == name)
    }

    pub fn run(self, g: &Graph, mode: Mode) -> Result<Construction, ConstructError> {
        match self {
            Method::Subdivided1333 => color_subdivided_1333(g),
            Method::OneTwoX6 => color_1_2x6(g, mode),
            Method::Irregular1222 => color_3irr_1222(g, mode),
            Method::S11223 => color_11223(g, mode),
            Method::Irregular112 => color_3irr_112(g, mode),
        }
    }
}

fn require_subcubic(g: &Graph) -> Result<(), ConstructError> {
    if g.max_degree() > 3 {
        return Err(ConstructError::Precondition(format!(
            "maximum degree {} exceeds 3",
            g.max_degree()
        )));
    }
    Ok(())
}

fn require_connected(g: &Graph) -> Result<(), ConstructError> {
    if g.n() == 0 || !g.is_connected() {
        return Err(ConstructError::Precondition("graph must be connected and non-empty".into()));
    }
    Ok(())
}

fn require_3_irregular(g: &Graph) -> Result<(), ConstructError> {
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| g.degree(u) == 3 && g.degree(v) == 3) {
        return Err(ConstructError::Precondition(format!(
            "adjacent degree-3 vertices {u} and {v}"
        )));
    }
    Ok(())
}

/// Lowest edge in lexicographic order satisfying `keep`.
fn lowest_edge(g: &Graph, keep: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
    g.edges().iter().copied().filter(|&(u, v)| keep(u, v)).min()
}

/// Components of the subgraph induced by `vs`, each listed in walk order
/// (from the lowest-index end for paths), with a flag for cycles. Only valid
/// when every induced degree is at most 2.
fn walk_components(g: &Graph, vs: &[usize]) -> Vec<(Vec<usize>, bool)> {
    let inside: BTreeSet<usize> = vs.iter().copied().collect();
    let local = |v: usize| -> Vec<usize> {
        g.neighbors(v).iter().copied().filter(|w| inside.contains(w)).collect()
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &v in vs {
        if seen.contains(&v) {
            continue;
        }
        // collect the component, then pick a start
        let mut comp = vec![v];
        seen.insert(v);
        let mut i = 0;
        while i < comp.len() {
            for w in local(comp[i]) {
                if seen.insert(w) {
                    comp.push(w);
                }
            }
            i += 1;
        }
        let is_cycle = comp.len() >= 3 && comp.iter().all(|&w| local(w).len() == 2);
        let start = if is_cycle {
            *comp.iter().min().unwrap()
        } else {
            *comp.iter().filter(|&&w| local(w).len() <= 1).min().unwrap()
        };
        let mut walk = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = local(cur)
                .into_iter()
                .filter(|&w| w != prev && !walk.contains(&w))
                .min();
            match next {
                Some(w) => {
                    walk.push(w);
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        out.push((walk, is_cycle));
    }
    out
}

fn finish(p: Painter<'_>, s: SSequence) -> Result<Construction, ConstructError> {
    let method = p.method;
    if let Some(v) = (0..p.g.n()).find(|&v| p.get(v).is_none()) {
        return Err(p.fail("uncolored vertex", v));
    }
    let g = p.g;
    let (main, subsidiary, replay) = p.into_parts();
    let violations = verify_coloring(g, &s, &main).expect("slots come from the sequence");
    assert!(violations.is_empty(), "{method} produced an invalid coloring: {violations:?}");
    Ok(Construction {
        sequence: s,
        coloring: SubsidiaryColoring { main, subsidiary },
        replay,
        fallback: None,
    })
}

/// Applies the mode to the outcome of a case analysis.
fn with_mode(
    g: &Graph,
    s: &SSequence,
    method: &'static str,
    mode: Mode,
    result: Result<Construction, ConstructError>,
) -> Result<Construction, ConstructError> {
    match result {
        Err(err @ ConstructError::CaseFailure { .. }) if mode == Mode::Lenient => {
            log::warn!("{err}; falling back to the exact solver");
            match decide(g, s).outcome {
                Outcome::Sat(main) => Ok(Construction {
                    sequence: s.clone(),
                    coloring: SubsidiaryColoring {
                        subsidiary: vec![None; g.n()],
                        main,
                    },
                    replay: Vec::new(),
                    fallback: Some(err.to_string()),
                }),
                _ => Err(ConstructError::FallbackFailed {
                    method: method.to_string(),
                }),
            }
        }
        other => other,
    }
}
