//! (1,1,2)-coloring of 3-irregular subcubic graphs.
//!
//! The root edge joins two vertices of degree at most 2; without one the
//! graph is bipartite and the two sides get `1a` and `1b`. Only degree-3
//! vertices take color 2 while the levels are colored; the root vertices may
//! take it in the endgame.

use crate::graph::Graph;
use crate::levels::level_ordering;
use crate::sequence::SSequence;

use super::painter::Painter;
use super::{
    finish, lowest_edge, require_3_irregular, require_connected, require_subcubic,
    walk_components, with_mode, Construction, ConstructError, Mode,
};

const METHOD: &str = "color_3irr_112";
const A1: usize = 0;
const B1: usize = 1;
const TWO: usize = 2;
const ONES: [usize; 2] = [A1, B1];

pub fn color_3irr_112(g: &Graph, mode: Mode) -> Result<Construction, ConstructError> {
    require_subcubic(g)?;
    require_connected(g)?;
    require_3_irregular(g)?;
    let s = SSequence::new(vec![1, 1, 2]).unwrap();
    with_mode(g, &s, METHOD, mode, build(g, &s))
}

fn build(g: &Graph, s: &SSequence) -> Result<Construction, ConstructError> {
    let mut p = Painter::new(g, s, METHOD);
    let Some((x, y)) = lowest_edge(g, |u, v| g.degree(u) <= 2 && g.degree(v) <= 2) else {
        let sides = g.bipartition().ok_or_else(|| p.fail("no root edge and not bipartite", 0))?;
        for (v, &side) in sides.iter().enumerate() {
            p.paint(v, ONES[side as usize], None, "bipartite")?;
        }
        return finish(p, s.clone());
    };
    let lo = level_ordering(g, (x, y))?;
    let levels = lo.levels();
    let r = levels.len() - 1;
    if r >= 1 {
        for (walk, _) in walk_components(g, &levels[r]) {
            for v in walk {
                let c = p.first_free(v, ONES).ok_or_else(|| p.fail("deepest", v))?;
                p.paint(v, c, None, "deepest")?;
            }
        }
        for level in levels[1..r].iter().rev() {
            for &u in level {
                step(&mut p, u)?;
            }
        }
    }
    endgame(&mut p, x, y)?;
    finish(p, s.clone())
}

fn step(p: &mut Painter<'_>, u: usize) -> Result<(), ConstructError> {
    if let Some(c) = p.first_free(u, ONES) {
        return p.paint(u, c, None, "level-1");
    }
    if p.g.degree(u) <= 2 {
        return Err(p.fail("level-degree-2", u));
    }
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
    if p.free(u, TWO) {
        return p.paint(u, TWO, None, "level-2");
    }
    Err(p.fail("level-2", u))
}

fn endgame(p: &mut Painter<'_>, x: usize, y: usize) -> Result<(), ConstructError> {
    const RULE: &str = "L0";
    for (ca, cb) in [(A1, B1), (B1, A1)] {
        if p.attempt(|p| {
            p.paint(x, ca, None, RULE)?;
            p.paint(y, cb, None, RULE)
        }) {
            return Ok(());
        }
    }
    // a 1-colored neighbor of degree at most 2 whose other neighbor is not
    // 1-colored switches, freeing its color for the root
    for (a, b) in [(x, y), (y, x)] {
        for w in p.g.neighbors(a).to_vec() {
            if w == b || p.g.degree(w) > 2 {
                continue;
            }
            for (ca, cb) in [(A1, B1), (B1, A1)] {
                if p.attempt(|p| {
                    p.recolor(w, &ONES, &[], "L0-recolor")?;
                    p.paint(a, ca, None, "L0-recolor")?;
                    p.paint(b, cb, None, "L0-recolor")
                }) {
                    return Ok(());
                }
            }
        }
    }
    for (a, b) in [(x, y), (y, x)] {
        if p.attempt(|p| {
            p.paint(a, TWO, None, "L0-2")?;
            let c = p.first_free(b, ONES).ok_or_else(|| p.fail("L0-2", b))?;
            p.paint(b, c, None, "L0-2")
        }) {
            return Ok(());
        }
    }
    Err(p.fail(RULE, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::solver::is_valid_total;

    fn check(g: &Graph) -> Construction {
        let out = color_3irr_112(g, Mode::Strict).unwrap();
        assert!(is_valid_total(g, &out.sequence, out.main()));
        out
    }

    #[test]
    fn examples() {
        let out = check(&named::cycle(5));
        assert_eq!(out.main().slots().iter().filter(|&&s| s == Some(TWO)).count(), 1);
        check(&named::petersen().subdivide());
        check(&named::g1222());
        check(&named::complete(1));
        check(&named::complete(2));
        // no root edge: bipartite short cut
        let out = check(&named::k33().subdivide());
        assert!(out.main().slots().iter().all(|&s| s != Some(TWO)));
    }

    #[test]
    fn subdivided_cubic_graphs() {
        for g in crate::enumerate::enumerate_cubic_up_to(10).unwrap().values().flatten() {
            check(&g.subdivide());
        }
    }
}
