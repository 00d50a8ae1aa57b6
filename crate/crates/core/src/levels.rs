//! Level orderings of a connected graph from a root edge.
//!
//! Level `i` holds the vertices at distance `i` from the root edge. Two
//! vertices are siblings when they are non-adjacent, share a level `i >= 1`
//! and have a common neighbor in level `i - 1`. Two vertices are cousins when
//! they are at distance 3 and every path `u a b v` of length 3 between them
//! has `a` or `b` strictly below `min(level(u), level(v))`.
//!
//! Siblings and cousins are stored as sets: a vertex with two neighbors one
//! level down can have two siblings, so the usual "at most one sibling"
//! bound does not hold for every subcubic graph.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LevelError {
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelOrdering {
    pub root_edge: (usize, usize),
    pub level: Vec<u32>,
    pub siblings: Vec<Vec<usize>>,
    pub cousins: Vec<Vec<usize>>,
}

pub fn level_ordering(g: &Graph, e: (usize, usize)) -> Result<LevelOrdering, LevelError> {
    let (x, y) = e;
    if x >= g.n() || y >= g.n() || !g.has_edge(x, y) {
        return Err(LevelError::NotAnEdge(x, y));
    }
    if !g.is_connected() {
        return Err(LevelError::Disconnected);
    }
    let n = g.n();
    let level: Vec<u32> = (0..n).map(|v| g.dist(v, x).min(g.dist(v, y))).collect();

    let mut siblings = vec![Vec::new(); n];
    for u in 0..n {
        if level[u] == 0 {
            continue;
        }
        for &w in g.neighbors(u) {
            if level[w] + 1 != level[u] {
                continue;
            }
            for &v in g.neighbors(w) {
                if v != u && level[v] == level[u] && !g.has_edge(u, v) && !siblings[u].contains(&v) {
                    siblings[u].push(v);
                }
            }
        }
        siblings[u].sort_unstable();
    }

    let mut cousins = vec![Vec::new(); n];
    for u in 0..n {
        for v in 0..n {
            if g.dist(u, v) != 3 {
                continue;
            }
            let floor = level[u].min(level[v]);
            let dips = g.neighbors(u).iter().all(|&a| {
                g.neighbors(a)
                    .iter()
                    .filter(|&&b| g.has_edge(b, v))
                    .all(|&b| level[a] < floor || level[b] < floor)
            });
            if dips {
                cousins[u].push(v);
            }
        }
    }

    Ok(LevelOrdering {
        root_edge: e,
        level,
        siblings,
        cousins,
    })
}

impl LevelOrdering {
    /// Largest level index.
    pub fn depth(&self) -> u32 {
        self.level.iter().copied().max().unwrap_or(0)
    }

    /// Vertices of each level in ascending index order.
    pub fn levels(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.depth() as usize + 1];
        for (v, &l) in self.level.iter().enumerate() {
            out[l as usize].push(v);
        }
        out
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels().iter().map(Vec::len).collect()
    }

    pub fn are_siblings(&self, u: usize, v: usize) -> bool {
        self.siblings[u].contains(&v)
    }

    pub fn are_cousins(&self, u: usize, v: usize) -> bool {
        self.cousins[u].contains(&v)
    }

    /// Slots on the neighbors of `u`.
    pub fn c1(&self, g: &Graph, colors: &[Option<usize>], u: usize) -> BTreeSet<usize> {
        g.neighbors(u).iter().filter_map(|&v| colors[v]).collect()
    }

    /// Slots at distance 2 from `u`, siblings excluded.
    pub fn c2(&self, g: &Graph, colors: &[Option<usize>], u: usize) -> BTreeSet<usize> {
        self.at_distance(g, colors, u, 2, |v| !self.are_siblings(u, v))
    }

    /// Slots at distance 3 from `u`, cousins excluded.
    pub fn c3(&self, g: &Graph, colors: &[Option<usize>], u: usize) -> BTreeSet<usize> {
        self.at_distance(g, colors, u, 3, |v| !self.are_cousins(u, v))
    }

    /// Slots from `allowed` held by cousins of `u`.
    pub fn c3_tilde(
        &self,
        colors: &[Option<usize>],
        u: usize,
        allowed: &[usize],
    ) -> BTreeSet<usize> {
        self.cousins[u]
            .iter()
            .filter_map(|&v| colors[v])
            .filter(|s| allowed.contains(s))
            .collect()
    }

    fn at_distance(
        &self,
        g: &Graph,
        colors: &[Option<usize>],
        u: usize,
        d: u32,
        keep: impl Fn(usize) -> bool,
    ) -> BTreeSet<usize> {
        (0..g.n())
            .filter(|&v| g.dist(u, v) == d && keep(v))
            .filter_map(|v| colors[v])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn four_cycle_has_no_siblings() {
        let c4 = named::cycle(4);
        for &e in c4.edges() {
            let lo = level_ordering(&c4, e).unwrap();
            assert_eq!(lo.level_sizes(), vec![2, 2]);
            assert!(lo.siblings.iter().all(Vec::is_empty));
        }
    }

    #[test]
    fn petersen_levels() {
        let p = named::petersen();
        for &e in p.edges() {
            let lo = level_ordering(&p, e).unwrap();
            // BFS from both endpoints: 2 + 4 neighbors, the remaining 4 at distance 2.
            let oracle: Vec<usize> = (0..3)
                .map(|i| (0..10).filter(|&v| p.dist(v, e.0).min(p.dist(v, e.1)) == i).count())
                .collect();
            assert_eq!(lo.level_sizes(), oracle);
            assert_eq!(oracle, vec![2, 4, 4]);
        }
    }

    #[test]
    fn figure_fixture() {
        let g = named::fig1();
        let lo = level_ordering(&g, (0, 1)).unwrap();
        assert_eq!(lo.level, vec![0, 0, 1, 1, 2, 2, 2, 3, 3]);
        assert!(lo.are_siblings(4, 5));
        assert!(!lo.are_siblings(4, 6));
        assert_eq!(lo.cousins[7], vec![5, 8]);
    }

    #[test]
    fn level_invariants_on_cubic_graphs() {
        for g in crate::enumerate::enumerate_cubic(10).unwrap() {
            let e = g.edges()[0];
            let lo = level_ordering(&g, e).unwrap();
            for &(u, v) in g.edges() {
                assert!(lo.level[u].abs_diff(lo.level[v]) <= 1);
            }
            for u in 0..g.n() {
                for &v in &lo.siblings[u] {
                    assert!(lo.are_siblings(v, u));
                    assert!(!g.has_edge(u, v) && lo.level[u] == lo.level[v] && lo.level[u] >= 1);
                }
                for &v in &lo.cousins[u] {
                    assert!(lo.are_cousins(v, u));
                }
            }
        }
    }

    #[test]
    fn rejects_non_edges() {
        assert_eq!(
            level_ordering(&named::cycle(5), (0, 2)),
            Err(LevelError::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn c_sets() {
        let g = named::fig1();
        let lo = level_ordering(&g, (0, 1)).unwrap();
        let mut colors = vec![None; 9];
        colors[5] = Some(2);
        colors[4] = Some(3);
        colors[8] = Some(4);
        // 4 and 5 are siblings, so 5 is hidden from C2(4) while 8 is not.
        assert_eq!(lo.c2(&g, &colors, 4), [4].into());
        assert_eq!(lo.c1(&g, &colors, 7), [3].into());
        assert_eq!(lo.c3_tilde(&colors, 7, &[2, 3]), [2].into());
    }
}
