//! Colorings of subdivided graphs.
//!
//! In `S(G)` two original vertices at distance `d` in `G` are at distance
//! `2d`, so an `i`-packing of `G` is a `(2i + 1)`-packing of `S(G)`. Putting
//! radius 1 on every subdivision vertex lifts an S-coloring of `G` to a
//! `(1, 2s_1 + 1, ..., 2s_k + 1)`-coloring of `S(G)`.

use crate::graph::Graph;
use crate::sequence::SSequence;
use crate::solver::{decide, verify_coloring, Coloring, Outcome};

use super::{
    require_subcubic, Construction, ConstructError, ReplayEntry, SubsidiaryColoring,
};

/// Lifts a valid S-coloring of `g` to `subdivide(g)` under
/// `s.subdivision_lift()`. Vertex `n + i` of the subdivision is the middle of
/// edge `i`.
pub fn lift_subdivision(
    g: &Graph,
    s: &SSequence,
    c: &Coloring,
) -> Result<Construction, ConstructError> {
    let violations = verify_coloring(g, s, c)
        .map_err(|e| ConstructError::Precondition(e.to_string()))?;
    if !violations.is_empty() {
        return Err(ConstructError::InvalidInput(violations));
    }
    if !c.is_total() {
        return Err(ConstructError::Precondition("input coloring is partial".into()));
    }
    let slots: Vec<usize> = (0..g.n())
        .map(|v| c.get(v).unwrap() + 1)
        .chain(std::iter::repeat(0).take(g.edge_count()))
        .collect();
    Ok(plain(s.subdivision_lift(), slots, "lift"))
}

fn plain(sequence: SSequence, slots: Vec<usize>, rule: &'static str) -> Construction {
    let replay = slots
        .iter()
        .enumerate()
        .map(|(vertex, &slot)| ReplayEntry {
            vertex,
            slot: Some(slot),
            subsidiary: None,
            rule,
        })
        .collect();
    let n = slots.len();
    Construction {
        sequence,
        coloring: SubsidiaryColoring {
            main: Coloring::from_total(&slots),
            subsidiary: vec![None; n],
        },
        replay,
        fallback: None,
    }
}

/// Proper edge 3-coloring of K4 on vertices 0..4: the three perfect matchings.
fn k4_edge_color(u: usize, v: usize) -> usize {
    match (u.min(v), u.max(v)) {
        (0, 1) | (2, 3) => 0,
        (0, 2) | (1, 3) => 1,
        _ => 2,
    }
}

/// A `(1,3,3,3)`-coloring of `subdivide(g)`.
///
/// Components other than K4 get a proper 3-coloring (which exists for every
/// subcubic graph except K4) lifted to the subdivision. A K4 component puts
/// radius 1 on its original vertices and slot `3_γ(e)` on the middle of each
/// edge `e`, for a proper edge 3-coloring `γ`.
pub fn color_subdivided_1333(g: &Graph) -> Result<Construction, ConstructError> {
    require_subcubic(g)?;
    let n = g.n();
    let mut slots = vec![usize::MAX; n + g.edge_count()];
    let mut k4_vertices = vec![None; n];
    for comp in g.components() {
        let h = g.induced(&comp);
        if h.n() == 4 && h.edge_count() == 6 {
            for (i, &v) in comp.iter().enumerate() {
                k4_vertices[v] = Some(i);
                slots[v] = 0;
            }
            continue;
        }
        let three = SSequence::new(vec![1, 1, 1]).unwrap();
        let Outcome::Sat(c) = decide(&h, &three).outcome else {
            return Err(ConstructError::CaseFailure {
                method: "color_subdivided_1333".into(),
                case: "proper 3-coloring of a non-K4 component".into(),
                vertex: comp.first().copied(),
            });
        };
        for (i, &v) in comp.iter().enumerate() {
            slots[v] = c.get(i).unwrap() + 1;
        }
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        slots[n + i] = match (k4_vertices[u], k4_vertices[v]) {
            (Some(a), Some(b)) => k4_edge_color(a, b) + 1,
            _ => 0,
        };
    }
    let construction = plain(SSequence::new(vec![1, 3, 3, 3]).unwrap(), slots, "s1333");
    let sub = g.subdivide();
    let violations = verify_coloring(&sub, &construction.sequence, construction.main())
        .expect("slots come from the sequence");
    assert!(violations.is_empty(), "invalid (1,3,3,3)-coloring: {violations:?}");
    Ok(construction)
}

/// The four verdicts of the bipartite equivalence for graphs of minimum
/// degree at least 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct BipartiteReport {
    pub sub_122: bool,
    pub sub_123: bool,
    pub sub_133: bool,
    pub bipartite: bool,
}

impl BipartiteReport {
    pub fn agree(&self) -> bool {
        self.sub_122 == self.bipartite
            && self.sub_123 == self.bipartite
            && self.sub_133 == self.bipartite
    }
}

/// Decides `S(g)` under (1,2,2), (1,2,3) and (1,3,3) with the exact solver
/// and compares with bipartiteness of `g`.
pub fn check_bipartite_equivalence(g: &Graph) -> Result<BipartiteReport, ConstructError> {
    if g.n() == 0 || (0..g.n()).any(|v| g.degree(v) < 3) {
        return Err(ConstructError::Precondition("minimum degree must be at least 3".into()));
    }
    let sub = g.subdivide();
    let verdict = |terms: [u32; 3]| -> Result<bool, ConstructError> {
        match decide(&sub, &SSequence::new(terms.to_vec()).unwrap()).outcome {
            Outcome::Sat(_) => Ok(true),
            Outcome::Unsat => Ok(false),
            Outcome::Unknown => Err(ConstructError::Precondition("solver gave up".into())),
        }
    };
    Ok(BipartiteReport {
        sub_122: verdict([1, 2, 2])?,
        sub_123: verdict([1, 2, 3])?,
        sub_133: verdict([1, 3, 3])?,
        bipartite: g.bipartition().is_some(),
    })
}
