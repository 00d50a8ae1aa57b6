//! (1,2,2,2,2,2,2)-coloring of subcubic graphs.
//!
//! Levels are colored from the deepest up: color 1 whenever no neighbor has
//! it, otherwise the first free color 2 with a second one kept as the
//! subsidiary. The deepest level is a union of paths and cycles, colored by
//! pattern with `2a`, `2b`, `2c` and repaired with the shadow colors `2d`,
//! `2e`, `2f`. The root vertices are then finished by swapping with a
//! neighbor's subsidiary when needed.
//!
//! When `y` takes color 1 and all three neighbors of `x` hold color 1, `x`
//! has no neighbor to swap with and all six colors 2 may lie at distance 2.
//! The root vertices and their colored distance-2 balls are then recolored by
//! exhaustive search (rule `gap-repair`).

use crate::graph::Graph;
use crate::levels::{level_ordering, LevelOrdering};
use crate::sequence::SSequence;

use super::painter::Painter;
use super::{
    finish, lowest_edge, require_connected, require_subcubic, walk_components, with_mode,
    Construction, ConstructError, Mode,
};

const METHOD: &str = "color_1_2x6";
const ONE: usize = 0;
const TWOS: [usize; 6] = [1, 2, 3, 4, 5, 6];

fn shadow(slot: usize) -> usize {
    if slot <= 3 {
        slot + 3
    } else {
        slot - 3
    }
}

pub fn color_1_2x6(g: &Graph, mode: Mode) -> Result<Construction, ConstructError> {
    require_subcubic(g)?;
    require_connected(g)?;
    let s = SSequence::repeated(1, 2, 7);
    with_mode(g, &s, METHOD, mode, build(g, &s))
}

fn build(g: &Graph, s: &SSequence) -> Result<Construction, ConstructError> {
    let mut p = Painter::new(g, s, METHOD);
    let Some((x, y)) = lowest_edge(g, |_, _| true) else {
        p.paint(0, ONE, None, "single vertex")?;
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

fn color_deepest(p: &mut Painter<'_>, vs: &[usize]) -> Result<(), ConstructError> {
    let mut pattern: Vec<(usize, usize)> = Vec::new();
    for (walk, is_cycle) in walk_components(p.g, vs) {
        let m = walk.len();
        let mut slots: Vec<usize> = (0..m)
            .map(|i| if i % 2 == 0 { ONE } else { 1 + (i / 2) % 3 })
            .collect();
        if is_cycle && m % 2 == 1 {
            // the last vertex would meet color 1 at both ends
            slots[m - 1] = (1..=3).find(|&c| c != slots[m - 2] && c != slots[1]).unwrap();
        } else if is_cycle && slots[m - 1] == slots[1] {
            slots[m - 1] = (1..=3).find(|&c| c != slots[m - 3] && c != slots[1]).unwrap();
        }
        pattern.extend(walk.into_iter().zip(slots));
    }
    for &(v, slot) in pattern.iter().filter(|&&(_, s)| s == ONE) {
        p.paint(v, slot, None, "deepest-1")?;
    }
    for &(v, slot) in pattern.iter().filter(|&&(_, s)| s != ONE) {
        if p.free(v, slot) {
            p.paint(v, slot, Some(shadow(slot)), "deepest-2")?;
        } else {
            p.paint(v, shadow(slot), Some(slot), "deepest-shadow")?;
        }
    }
    Ok(())
}

fn step(p: &mut Painter<'_>, lo: &LevelOrdering, u: usize) -> Result<(), ConstructError> {
    if p.neighbors_with(u, ONE).is_empty() {
        return p.paint(u, ONE, None, "level-1");
    }
    let free: Vec<usize> = TWOS.iter().copied().filter(|&c| p.free(u, c)).collect();
    let Some(&alpha) = free.first() else {
        return Err(p.fail("level-2", u));
    };
    // the subsidiary may coincide with a sibling's color
    let beta = free.get(1).copied().or_else(|| {
        TWOS.iter().copied().find(|&c| {
            c != alpha && p.blockers(u, c).iter().all(|&w| lo.are_siblings(u, w))
        })
    });
    p.paint(u, alpha, beta, "level-2")
}

/// Ways to give `v` a color 2: a free one, or the color of a neighbor that
/// moves to its subsidiary.
fn give_two(p: &mut Painter<'_>, v: usize, rule: &'static str) -> Result<(), ConstructError> {
    if let Some(c) = p.first_free(v, TWOS) {
        return p.paint(v, c, None, rule);
    }
    let donors: Vec<usize> = p.g.neighbors(v).iter().copied().filter(|&w| p.get(w).is_some_and(|c| c != ONE)).collect();
    for w in donors {
        let c = p.get(w).unwrap();
        if p.attempt(|p| {
            p.recolor(w, &TWOS, &[], rule)?;
            p.paint(v, c, None, rule)
        }) {
            return Ok(());
        }
    }
    Err(p.fail(rule, v))
}

fn endgame(p: &mut Painter<'_>, x: usize, y: usize) -> Result<(), ConstructError> {
    let sees_one = |p: &Painter<'_>, v: usize| !p.neighbors_with(v, ONE).is_empty();
    let (ox, oy) = (sees_one(p, x), sees_one(p, y));
    if ox && oy {
        for (a, b) in [(x, y), (y, x)] {
            if p.attempt(|p| {
                give_two(p, a, "L0-both-see-1")?;
                give_two(p, b, "L0-both-see-1")
            }) {
                return Ok(());
            }
        }
        return p.gap_repair(&[x, y], "gap-repair");
    }
    if ox != oy {
        let (a, b) = if ox { (x, y) } else { (y, x) };
        p.paint(b, ONE, None, "L0-one-sees-1")?;
        if p.attempt(|p| give_two(p, a, "L0-one-sees-1")) {
            return Ok(());
        }
        // every neighbor of `a` may hold color 1 while all six colors 2 are within distance 2
        return p.gap_repair(&[a], "gap-repair");
    }
    for (a, b) in [(x, y), (y, x)] {
        if p.attempt(|p| {
            p.paint(b, ONE, None, "L0-none-sees-1")?;
            give_two_deep(p, a, b)
        }) {
            return Ok(());
        }
    }
    p.gap_repair(&[x, y], "gap-repair")
}

/// `a` has two neighbors `a1`, `a2` colored 2, each with one further
/// neighbor `a1'`, `a2'` colored 2.
fn give_two_deep(p: &mut Painter<'_>, a: usize, b: usize) -> Result<(), ConstructError> {
    const RULE: &str = "L0-none-sees-1";
    if p.attempt(|p| give_two(p, a, RULE)) {
        return Ok(());
    }
    let inner: Vec<usize> = p.g.neighbors(a).iter().copied().filter(|&w| w != b).collect();
    let [a1, a2] = inner[..] else {
        return Err(p.fail(RULE, a));
    };
    for (w1, w2) in [(a1, a2), (a2, a1)] {
        let outer: Vec<usize> = p
            .g
            .neighbors(w1)
            .iter()
            .copied()
            .filter(|&w| w != a && p.get(w).is_some_and(|c| c != ONE))
            .collect();
        for w in outer {
            let c = p.get(w).unwrap();
            if p.attempt(|p| {
                p.recolor(w, &TWOS, &[], RULE)?;
                p.paint(a, c, None, RULE)
            }) {
                return Ok(());
            }
            // w moves onto the color of w1: exchange w1 and w2 first
            if p.attempt(|p| {
                let (c1, c2) = (p.get(w1).unwrap(), p.get(w2).unwrap());
                p.erase(w1, RULE);
                p.erase(w2, RULE);
                p.paint(w1, c2, Some(c1), RULE)?;
                p.paint(w2, c1, Some(c2), RULE)?;
                p.recolor(w, &TWOS, &[], RULE)?;
                p.paint(a, c, None, RULE)
            }) {
                return Ok(());
            }
        }
    }
    Err(p.fail(RULE, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::solver::is_valid_total;

    fn check(g: &Graph) -> Construction {
        let out = color_1_2x6(g, Mode::Strict).unwrap();
        assert!(is_valid_total(g, &out.sequence, out.main()));
        out
    }

    #[test]
    fn examples() {
        let out = check(&named::petersen());
        assert!(out.main().slots_used() <= 7);
        check(&named::complete(4));
        check(&named::complete(1));
        check(&named::complete(2));
        check(&named::f1p16());
        for n in 3..10 {
            check(&named::cycle(n));
            check(&named::path(n));
        }
    }

    #[test]
    fn all_cubic_up_to_ten() {
        for g in crate::enumerate::enumerate_cubic_up_to(10).unwrap().values().flatten() {
            check(g);
        }
    }

    #[test]
    fn root_with_three_one_neighbors_needs_repair() {
        let g = crate::graph6::parse_graph6(b"MsP@@?OC?T@I@c@W?").unwrap();
        let out = check(&g);
        assert!(out.replay.iter().any(|e| e.rule == "gap-repair"));
        assert!(out.replay.iter().any(|e| e.rule == "L0-one-sees-1"));
    }

    #[test]
    fn rejects_high_degree() {
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(matches!(color_1_2x6(&star, Mode::Strict), Err(ConstructError::Precondition(_))));
    }
}
