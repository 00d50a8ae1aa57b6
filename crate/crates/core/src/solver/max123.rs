//! Largest vertex set coverable by disjoint 1-, 2- and 3-packings.

use std::time::Instant;

use crate::graph::Graph;

use super::coloring::Coloring;
use super::search::{SearchStats, SolverOptions};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Max123 {
    pub size: usize,
    /// Partial coloring under (1,2,3) reaching `size`.
    pub witness: Coloring,
    /// False when the budget ran out before the bound was proven.
    pub optimal: bool,
    pub stats: SearchStats,
}

/// Branch and bound over (slot 0, slot 1, slot 2, uncolored) per vertex.
///
/// The bound counts, for the undecided vertices, those that still have at
/// least one feasible slot.
pub fn max_123_subset(g: &Graph, opts: &SolverOptions) -> Max123 {
    let start = Instant::now();
    let n = g.n();
    let mut st = State {
        g,
        order: super::search::vertex_order(g),
        assign: vec![None; n],
        best: 0,
        best_assign: vec![None; n],
        nodes: 0,
        max_depth: 0,
        aborted: false,
        opts,
        start,
    };
    st.dfs(0, 0);
    Max123 {
        size: st.best,
        witness: Coloring::from_partial(st.best_assign.clone()),
        optimal: !st.aborted,
        stats: SearchStats {
            nodes: st.nodes,
            max_depth: st.max_depth,
            elapsed: start.elapsed(),
        },
    }
}

struct State<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    assign: Vec<Option<usize>>,
    best: usize,
    best_assign: Vec<Option<usize>>,
    nodes: u64,
    max_depth: usize,
    aborted: bool,
    opts: &'a SolverOptions,
    start: Instant,
}

impl State<'_> {
    fn feasible(&self, v: usize, slot: usize) -> bool {
        let radius = slot as u32 + 1;
        self.assign
            .iter()
            .enumerate()
            .all(|(w, &s)| s != Some(slot) || self.g.dist(v, w) > radius)
    }

    fn bound(&self, depth: usize) -> usize {
        self.order[depth..]
            .iter()
            .filter(|&&v| (0..3).any(|slot| self.feasible(v, slot)))
            .count()
    }

    fn dfs(&mut self, depth: usize, colored: usize) {
        self.nodes += 1;
        self.max_depth = self.max_depth.max(depth);
        let budget = &self.opts.budget;
        if budget.max_nodes.is_some_and(|m| self.nodes > m)
            || budget
                .time_limit
                .is_some_and(|t| self.nodes % 1024 == 0 && self.start.elapsed() > t)
        {
            self.aborted = true;
        }
        if self.aborted {
            return;
        }
        if colored > self.best {
            self.best = colored;
            self.best_assign = self.assign.clone();
        }
        if depth == self.order.len() || colored + self.bound(depth) <= self.best {
            return;
        }
        let v = self.order[depth];
        for slot in 0..3 {
            if self.feasible(v, slot) {
                self.assign[v] = Some(slot);
                self.dfs(depth + 1, colored + 1);
                self.assign[v] = None;
                if self.aborted {
                    return;
                }
            }
        }
        self.dfs(depth + 1, colored);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::sequence::SSequence;
    use crate::solver::coloring::verify_coloring;

    /// Exhaustive oracle over all 4^n assignments.
    fn brute(g: &Graph) -> usize {
        let n = g.n();
        let mut best = 0;
        let mut digits = vec![0usize; n];
        loop {
            let ok = (0..n).all(|u| {
                (u + 1..n).all(|v| {
                    digits[u] == 3
                        || digits[u] != digits[v]
                        || g.dist(u, v) > digits[u] as u32 + 1
                })
            });
            if ok {
                best = best.max(digits.iter().filter(|&&d| d < 3).count());
            }
            let mut i = 0;
            while i < n && digits[i] == 3 {
                digits[i] = 0;
                i += 1;
            }
            if i == n {
                return best;
            }
            digits[i] += 1;
        }
    }

    #[test]
    fn small_cases() {
        let opts = SolverOptions::default();
        let s: SSequence = "1,2,3".parse().unwrap();
        for (g, expected) in [
            (named::complete(4), 3),
            (named::cycle(5), 4),
            (named::complete(1), 1),
        ] {
            assert_eq!(brute(&g), expected);
            let r = max_123_subset(&g, &opts);
            assert_eq!(r.size, expected);
            assert!(r.optimal);
            assert_eq!(r.witness.colored_count(), expected);
            assert!(verify_coloring(&g, &s, &r.witness).unwrap().is_empty());
        }
    }

    #[test]
    fn petersen_matches_brute_force() {
        let p = named::petersen();
        assert_eq!(max_123_subset(&p, &SolverOptions::default()).size, brute(&p));
    }
}
