//! (1,1,2,2,3)-coloring of subcubic graphs.
//!
//! Levels are colored from the deepest up, preferring `1a` then `1b`. A
//! vertex seeing both colors 1 first tries to flip one of its 1-colored
//! neighbors; failing that it takes a color 2, after moving the vertices
//! that block it (the far neighbors `u12`, `u22`) to their subsidiary
//! colors or to color 3. Moving a vertex to color 3 may first push other
//! 3-colored vertices within distance 3 back to a color 2. The root
//! vertices are finished by the seven endgame configurations.
//!
//! Two configurations escape the case analysis. When the far neighbors
//! `u12`, `u22` are siblings at distance 2 they can share neither color 3 nor
//! a color 2, and a far neighbor colored 2 next to a sibling colored 2 has no
//! subsidiary, so the set of shared colors may be empty. In both the level
//! step cannot keep a subsidiary for `u`; the vertex and its colored
//! distance-2 ball are then recolored by exhaustive search (rule
//! `gap-repair`). The same fallback closes the endgame.

use crate::graph::Graph;
use crate::levels::{level_ordering, LevelOrdering};
use crate::sequence::SSequence;

use super::painter::Painter;
use super::{
    finish, lowest_edge, require_connected, require_subcubic, walk_components, with_mode,
    Construction, ConstructError, Mode,
};

const METHOD: &str = "color_11223";
const A1: usize = 0;
const B1: usize = 1;
const A2: usize = 2;
const B2: usize = 3;
const THREE: usize = 4;
const ONES: [usize; 2] = [A1, B1];
const TWOS: [usize; 2] = [A2, B2];
const HIGH: [usize; 3] = [A2, B2, THREE];

pub fn color_11223(g: &Graph, mode: Mode) -> Result<Construction, ConstructError> {
    require_subcubic(g)?;
    require_connected(g)?;
    let s = SSequence::new(vec![1, 1, 2, 2, 3]).unwrap();
    with_mode(g, &s, METHOD, mode, build(g, &s))
}

fn build(g: &Graph, s: &SSequence) -> Result<Construction, ConstructError> {
    let mut p = Painter::new(g, s, METHOD);
    let Some((x, y)) = lowest_edge(g, |_, _| true) else {
        p.paint(0, A1, None, "single vertex")?;
        return finish(p, s.clone());
    };
    let lo = level_ordering(g, (x, y))?;
    let levels = lo.levels();
    let r = levels.len() - 1;
    if r >= 1 {
        color_deepest(&mut p, &levels[r])?;
        for level in levels[1..r].iter().rev() {
            for &u in level {
                step(&mut p, &lo, u)?;
            }
        }
    }
    endgame(&mut p, x, y)?;
    finish(p, s.clone())
}

/// Paths and even cycles alternate `1a`/`1b`; an odd cycle ends on `2a`,
/// or `2b` when another `2a` is within distance 2.
fn color_deepest(p: &mut Painter<'_>, vs: &[usize]) -> Result<(), ConstructError> {
    for (walk, is_cycle) in walk_components(p.g, vs) {
        let m = walk.len();
        for (i, &v) in walk.iter().enumerate() {
            if is_cycle && m % 2 == 1 && i == m - 1 {
                let slot = p.first_free(v, TWOS).ok_or_else(|| p.fail("deepest-odd-cycle", v))?;
                let other = if slot == A2 { B2 } else { A2 };
                p.paint(v, slot, Some(other), "deepest-2")?;
            } else {
                p.paint(v, ONES[i % 2], None, "deepest-1")?;
            }
        }
    }
    Ok(())
}

/// A subsidiary for `u` holding `t`: the other color 2 when free, or color 3
/// when only cousins of `u` hold it within distance 3.
fn subsidiary_for(p: &Painter<'_>, lo: &LevelOrdering, u: usize, t: usize) -> Option<usize> {
    let other = if t == A2 { B2 } else { A2 };
    if p.free(u, other) {
        return Some(other);
    }
    p.blockers(u, THREE)
        .iter()
        .all(|&w| lo.are_cousins(u, w))
        .then_some(THREE)
}

fn step(p: &mut Painter<'_>, lo: &LevelOrdering, u: usize) -> Result<(), ConstructError> {
    if let Some(c) = p.first_free(u, ONES) {
        return p.paint(u, c, None, "level-1");
    }
    // flip a 1-colored neighbor that lacks the opposite color
    for (from, to) in [(A1, B1), (B1, A1)] {
        for w in p.neighbors_with(u, from) {
            if p.attempt(|p| {
                p.recolor(w, &[to], &[], "level-flip")?;
                p.paint(u, from, None, "level-flip")
            }) {
                return Ok(());
            }
        }
    }
    let case = level_case(p, u);
    let sibling_two = lo.siblings[u].iter().filter_map(|&v| p.get(v)).find(|c| TWOS.contains(c));
    let order: Vec<usize> = match sibling_two {
        Some(c) => TWOS.iter().copied().filter(|&t| t != c).chain([c]).collect(),
        None => TWOS.to_vec(),
    };
    // vertices the cases may move: colors 2 and 3 within distance 2, siblings excluded
    let zone: Vec<usize> = (0..p.g.n())
        .filter(|&w| {
            p.g.dist(u, w) <= 2
                && !lo.are_siblings(u, w)
                && p.get(w).is_some_and(|c| HIGH.contains(&c))
        })
        .collect();
    let mut plans: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for (i, &z) in zone.iter().enumerate() {
        for tz in HIGH {
            plans.push(vec![(z, tz)]);
            for &z2 in &zone[i + 1..] {
                for tz2 in HIGH {
                    plans.push(vec![(z, tz), (z2, tz2)]);
                }
            }
        }
    }
    plans.retain(|plan| plan.iter().all(|&(z, tz)| p.get(z) != Some(tz)));
    for plan in &plans {
        if p.attempt(|p| {
            for &(z, tz) in plan {
                move_to(p, z, tz, case)?;
            }
            finish_two(p, lo, u, &order, sibling_two.is_some(), case)
        }) {
            return Ok(());
        }
    }
    // no configuration leaves a subsidiary
    p.gap_repair(&[u], "gap-repair")
}

/// Colors `u` with a color 2 that comes with a subsidiary (not needed when a
/// sibling holds a color 2), clearing 3-colored vertices within distance 3
/// when the subsidiary has to be color 3.
fn finish_two(
    p: &mut Painter<'_>,
    lo: &LevelOrdering,
    u: usize,
    order: &[usize],
    sibling_two: bool,
    case: &'static str,
) -> Result<(), ConstructError> {
    for &t in order {
        if !p.free(u, t) {
            continue;
        }
        let sub = subsidiary_for(p, lo, u, t);
        if sub.is_some() || sibling_two {
            return p.paint(u, t, sub, case);
        }
        if p.attempt(|p| {
            for z in p.blockers(u, THREE) {
                if !lo.are_cousins(u, z) {
                    p.recolor(z, &TWOS, &[t], case)?;
                }
            }
            p.paint(u, t, Some(THREE), case)
        }) {
            return Ok(());
        }
    }
    Err(p.fail(case, u))
}

/// Names the configuration by the colors `α`, `β` of the far neighbors of
/// the `1a` and `1b` neighbors of `u`.
fn level_case(p: &Painter<'_>, u: usize) -> &'static str {
    let harmful = |one: usize| {
        p.neighbors_with(u, one).iter().any(|&w| {
            p.g.neighbors(w).iter().any(|&z| z != u && p.get(z).is_some_and(|c| HIGH.contains(&c)))
        })
    };
    match (harmful(A1), harmful(B1)) {
        (false, false) => "level-case-1",
        (true, true) => "level-case-3",
        _ => "level-case-2",
    }
}

/// Moves `z` to slot `t`; moving to color 3 first pushes the 3-colored
/// vertices within distance 3 of `z` to a color 2 by their subsidiaries.
fn move_to(p: &mut Painter<'_>, z: usize, t: usize, rule: &'static str) -> Result<(), ConstructError> {
    if t == THREE {
        for w in p.blockers(z, THREE) {
            p.recolor(w, &TWOS, &[], rule)?;
        }
    }
    let old = p.get(z);
    p.paint(z, t, old, rule)
}

fn endgame(p: &mut Painter<'_>, x: usize, y: usize) -> Result<(), ConstructError> {
    let orientations = [(x, y, A1, B1), (x, y, B1, A1), (y, x, A1, B1), (y, x, B1, A1)];
    // case 1, directly or after flipping a 1-colored neighbor
    for &(a, b, ca, cb) in &orientations[..2] {
        if p.attempt(|p| {
            p.paint(a, ca, None, "L0-case-1")?;
            p.paint(b, cb, None, "L0-case-1")
        }) {
            return Ok(());
        }
    }
    let ones_near: Vec<usize> = [x, y]
        .iter()
        .flat_map(|&v| p.g.neighbors(v).to_vec())
        .filter(|&w| w != x && w != y && p.get(w).is_some_and(|c| ONES.contains(&c)))
        .collect();
    for &w in &ones_near {
        for &(a, b, ca, cb) in &orientations[..2] {
            if p.attempt(|p| {
                p.recolor(w, &ONES, &[], "L0-case-1")?;
                p.paint(a, ca, None, "L0-case-1")?;
                p.paint(b, cb, None, "L0-case-1")
            }) {
                return Ok(());
            }
        }
    }
    // cases 2 to 6: `b` takes a color 1, `a` a color 2 or 3
    for &(a, b, _, cb) in &orientations {
        if p.attempt(|p| {
            p.paint(b, cb, None, "L0-one-side")?;
            give_high(p, a)
        }) {
            return Ok(());
        }
    }
    // case 7: both take a color 2
    for (a, b) in [(x, y), (y, x)] {
        if p.attempt(|p| {
            take_two(p, a, A2, "L0-case-7")?;
            take_two(p, b, B2, "L0-case-7")
        }) {
            return Ok(());
        }
    }
    p.gap_repair(&[x, y], "gap-repair")
}

/// Gives `a` a color 2 or 3, clearing its blockers by subsidiaries.
fn give_high(p: &mut Painter<'_>, a: usize) -> Result<(), ConstructError> {
    if let Some(c) = p.first_free(a, HIGH) {
        return p.paint(a, c, None, "L0-free");
    }
    // a neighbor colored 3 first moves to its subsidiary
    for w in p.neighbors_with(a, THREE) {
        for t in TWOS {
            if p.attempt(|p| {
                p.recolor(w, &TWOS, &[t], "L0-case-5")?;
                take_two(p, a, t, "L0-case-5")
            }) {
                return Ok(());
            }
        }
    }
    for t in TWOS {
        if p.attempt(|p| take_two(p, a, t, "L0-case-2-5-6")) {
            return Ok(());
        }
    }
    if p.attempt(|p| {
        for z in p.blockers(a, THREE) {
            p.recolor(z, &TWOS, &[], "L0-case-3-4")?;
        }
        p.paint(a, THREE, None, "L0-case-3-4")
    }) {
        return Ok(());
    }
    Err(p.fail("L0-high", a))
}

/// Recolors every vertex within distance 2 of `a` holding `t` by its
/// subsidiary, then colors `a` with `t`.
fn take_two(p: &mut Painter<'_>, a: usize, t: usize, rule: &'static str) -> Result<(), ConstructError> {
    for z in p.blockers(a, t) {
        p.recolor(z, &HIGH, &[t], rule)?;
    }
    p.paint(a, t, None, rule)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::solver::is_valid_total;

    fn check(g: &Graph) {
        let out = color_11223(g, Mode::Strict).unwrap();
        assert!(is_valid_total(g, &out.sequence, out.main()));
    }

    #[test]
    fn examples() {
        check(&named::petersen());
        check(&named::f1p16());
        check(&named::complete(4));
        check(&named::complete(1));
        for n in 3..10 {
            check(&named::cycle(n));
            check(&named::path(n));
        }
    }

    #[test]
    fn sibling_far_neighbors_need_repair() {
        for code in ["K}?GOGI@PEAE", "MwEA@?QA_a@G@H@E?", "M}?GOK_C?P?c?d?U?"] {
            let g = crate::graph6::parse_graph6(code.as_bytes()).unwrap();
            let out = color_11223(&g, Mode::Strict).unwrap();
            assert!(is_valid_total(&g, &out.sequence, out.main()));
            assert!(out.replay.iter().any(|e| e.rule == "gap-repair"), "{code}");
        }
    }

    #[test]
    fn all_cubic_up_to_ten() {
        for g in crate::enumerate::enumerate_cubic_up_to(10).unwrap().values().flatten() {
            check(g);
        }
    }
}
