//! (1,2,2,2)-coloring of 3-irregular subcubic graphs.
//!
//! The root edge joins two vertices of degree at most 2. Without such an
//! edge every edge has exactly one endpoint of degree 3, so the graph is the
//! subdivision of a subcubic graph `H` (the degree-3 vertices) with leaves
//! attached; a proper 3-coloring of `H`, or the edge-coloring construction
//! when `H` is K4, then gives a (1,3,3,3)-coloring, which is also a
//! (1,2,2,2)-coloring.
//!
//! Otherwise levels are colored from the deepest up, vertices of degree at
//! most 2 before those of degree 3 within a level. A degree-2 vertex that
//! sees color 1 moves its 1-colored neighbor to a color 2. Such moves can
//! leave a degree-3 vertex `w` colored 2 without a 1-colored neighbor, and
//! a 1-colored neighbor of `w` whose other neighbors were moved the same way
//! sees all three colors 2. The first case is undone by returning `w` to
//! color 1 (rule `level-case-1-restore`); when nothing else works the vertex
//! and its colored distance-2 ball are recolored by exhaustive search (rule
//! `gap-repair`).

use crate::canon::canonical_labeling;
use crate::graph::Graph;
use crate::levels::level_ordering;
use crate::named;
use crate::sequence::SSequence;
use crate::solver::{decide, Outcome};

use super::painter::Painter;
use super::{
    finish, lowest_edge, require_3_irregular, require_connected, require_subcubic, with_mode,
    Construction, ConstructError, Mode,
};

const METHOD: &str = "color_3irr_1222";
const ONE: usize = 0;
const TWOS: [usize; 3] = [1, 2, 3];

pub fn color_3irr_1222(g: &Graph, mode: Mode) -> Result<Construction, ConstructError> {
    require_subcubic(g)?;
    require_connected(g)?;
    require_3_irregular(g)?;
    let s = SSequence::new(vec![1, 2, 2, 2]).unwrap();
    with_mode(g, &s, METHOD, mode, build(g, &s))
}

fn build(g: &Graph, s: &SSequence) -> Result<Construction, ConstructError> {
    let mut p = Painter::new(g, s, METHOD);
    let Some((x, y)) = lowest_edge(g, |u, v| g.degree(u) <= 2 && g.degree(v) <= 2) else {
        color_subdivision(&mut p)?;
        return finish(p, s.clone());
    };
    let lo = level_ordering(g, (x, y))?;
    let levels = lo.levels();
    let r = levels.len() - 1;
    if r >= 1 {
        color_deepest(&mut p, &levels[r])?;
        for level in levels[1..r].iter().rev() {
            // vertices of degree at most 2 first, so that they take color 1
            let (low, high): (Vec<usize>, Vec<usize>) = level.iter().partition(|&&u| g.degree(u) <= 2);
            for u in low.into_iter().chain(high) {
                step(&mut p, u)?;
            }
        }
    }
    endgame(&mut p, x, y)?;
    finish(p, s.clone())
}

/// The deepest level is a union of paths on at most 3 vertices: vertices of
/// degree at most 2 take color 1 first, the rest color 1 or a free color 2.
fn color_deepest(p: &mut Painter<'_>, vs: &[usize]) -> Result<(), ConstructError> {
    for &v in vs.iter().filter(|&&v| p.g.degree(v) <= 2) {
        if p.free(v, ONE) {
            p.paint(v, ONE, None, "deepest-1")?;
        }
    }
    for &v in vs {
        if p.get(v).is_some() {
            continue;
        }
        let slot = p
            .first_free(v, [ONE].into_iter().chain(TWOS))
            .ok_or_else(|| p.fail("deepest", v))?;
        p.paint(v, slot, None, "deepest-2")?;
    }
    Ok(())
}

fn step(p: &mut Painter<'_>, u: usize) -> Result<(), ConstructError> {
    if p.free(u, ONE) {
        return p.paint(u, ONE, None, "level-1");
    }
    if p.g.degree(u) == 3 {
        if let Some(c) = p.first_free(u, TWOS) {
            return p.paint(u, c, None, "level-case-1");
        }
        // a later recoloring took color 1 away from next to a 2-colored
        // neighbor; that neighbor can return to color 1
        for w in p.g.neighbors(u).to_vec() {
            if p.get(w).is_some_and(|c| c != ONE) && p.attempt(|p| {
                p.paint(w, ONE, None, "level-case-1-restore")?;
                let c = p.first_free(u, TWOS).ok_or_else(|| p.fail("level-case-1-restore", u))?;
                p.paint(u, c, None, "level-case-1-restore")
            }) {
                return Ok(());
            }
        }
        return p.gap_repair(&[u], "gap-repair");
    }
    // the 1-colored neighbor moves to a color 2
    let holders = p.neighbors_with(u, ONE);
    if p.attempt(|p| {
        for w in holders {
            p.recolor(w, &TWOS, &[], "level-case-2")?;
        }
        p.paint(u, ONE, None, "level-case-2")
    }) {
        return Ok(());
    }
    p.gap_repair(&[u], "gap-repair")
}

fn endgame(p: &mut Painter<'_>, x: usize, y: usize) -> Result<(), ConstructError> {
    let other = |v: usize, w: usize| p.g.neighbors(v).iter().copied().find(|&z| z != w);
    let (x1, y1) = (other(x, y), other(y, x));
    let deg3 = |v: Option<usize>| v.is_some_and(|v| p.g.degree(v) == 3);
    let case = match (deg3(x1), deg3(y1)) {
        (true, true) => {
            let far = |v: usize, root: usize| -> Vec<usize> {
                p.g.neighbors(v).iter().copied().filter(|&z| z != root).collect()
            };
            let (xf, yf) = (far(x1.unwrap(), x), far(y1.unwrap(), y));
            let pairs = xf
                .iter()
                .flat_map(|&a| yf.iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| p.g.has_edge(a, b))
                .count();
            if pairs >= 2 {
                return special_graph(p);
            }
            "L0-case-1"
        }
        (false, false) => "L0-case-3",
        _ => "L0-case-2",
    };
    for (a, b) in [(x, y), (y, x)] {
        if p.attempt(|p| {
            for w in p.neighbors_with(a, ONE) {
                p.recolor(w, &TWOS, &[], case)?;
            }
            p.paint(a, ONE, None, case)?;
            let c = p.first_free(b, TWOS).ok_or_else(|| p.fail(case, b))?;
            p.paint(b, c, None, case)
        }) {
            return Ok(());
        }
    }
    if p.attempt(|p| {
        for v in [x, y] {
            let c = p.first_free(v, TWOS).ok_or_else(|| p.fail(case, v))?;
            p.paint(v, c, None, case)?;
        }
        Ok(())
    }) {
        return Ok(());
    }
    Err(p.fail(case, x))
}

/// Two cross pairs adjacent: the graph is the fixture `g1222`, colored as in
/// its figure and transported along an isomorphism.
fn special_graph(p: &mut Painter<'_>) -> Result<(), ConstructError> {
    let fixture = named::g1222();
    let g = p.g;
    let iso = (g.n() == fixture.n()).then(|| {
        let lg = canonical_labeling(g).ok()?;
        let lf = canonical_labeling(&fixture).ok()?;
        let mut from_canon = vec![0; g.n()];
        for (w, &c) in lf.iter().enumerate() {
            from_canon[c] = w;
        }
        let map: Vec<usize> = (0..g.n()).map(|v| from_canon[lg[v]]).collect();
        g.edges()
            .iter()
            .all(|&(u, v)| fixture.has_edge(map[u], map[v]))
            .then_some(map)
    });
    let Some(Some(map)) = iso else {
        return Err(p.fail("L0-case-1 with two adjacent cross pairs", 0));
    };
    for v in 0..g.n() {
        if p.get(v).is_some() {
            p.erase(v, "special-graph");
        }
    }
    for (v, &w) in map.iter().enumerate() {
        p.paint(v, named::G1222_COLORING[w], None, "special-graph")?;
    }
    Ok(())
}

/// Colors the subdivision-plus-leaves structure left when no edge joins two
/// vertices of degree at most 2.
fn color_subdivision(p: &mut Painter<'_>) -> Result<(), ConstructError> {
    const RULE: &str = "subdivision";
    let g = p.g;
    let originals: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 3).collect();
    if originals.is_empty() {
        for v in 0..g.n() {
            p.paint(v, ONE, None, RULE)?;
        }
        return Ok(());
    }
    let index = |v: usize| originals.binary_search(&v).ok();
    let mut h_edges: Vec<(usize, usize)> = Vec::new();
    let mut middles: Vec<(usize, (usize, usize))> = Vec::new();
    for v in (0..g.n()).filter(|&v| g.degree(v) == 2) {
        let (a, b) = (g.neighbors(v)[0], g.neighbors(v)[1]);
        let (Some(ia), Some(ib)) = (index(a), index(b)) else {
            return Err(p.fail(RULE, v));
        };
        let e = (ia.min(ib), ia.max(ib));
        middles.push((v, e));
        if !h_edges.contains(&e) {
            h_edges.push(e);
        }
    }
    let h = Graph::new(originals.len(), &h_edges).map_err(|_| p.fail(RULE, originals[0]))?;
    if h.n() == 4 && h.edge_count() == 6 && middles.len() == 6 {
        for &v in &originals {
            p.paint(v, ONE, None, RULE)?;
        }
        for (v, (a, b)) in middles {
            let gamma = match (a, b) {
                (0, 1) | (2, 3) => 0,
                (0, 2) | (1, 3) => 1,
                _ => 2,
            };
            p.paint(v, TWOS[gamma], None, RULE)?;
        }
        return Ok(());
    }
    let Outcome::Sat(c) = decide(&h, &SSequence::new(vec![1, 1, 1]).unwrap()).outcome else {
        return Err(p.fail("subdivision: proper 3-coloring", originals[0]));
    };
    for (i, &v) in originals.iter().enumerate() {
        p.paint(v, TWOS[c.get(i).unwrap()], None, RULE)?;
    }
    for v in (0..g.n()).filter(|&v| g.degree(v) <= 2) {
        p.paint(v, ONE, None, RULE)?;
    }
    Ok(())
}
