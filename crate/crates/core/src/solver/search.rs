//! Depth-first backtracking over a static vertex order.
//!
//! For each vertex, slots are tried in index order. Slot `i` is feasible for
//! `v` when no vertex already in slot `i` lies within distance `s_i`, which is
//! a word-wise AND of a precomputed ball mask with the slot's member set.
//! Among slots of equal radius, an empty slot may only be opened if the slot
//! before it in the same run is already non-empty.

use std::time::{Duration, Instant};

use crate::graph::Graph;
use crate::sequence::SSequence;

use super::coloring::Coloring;

/// Resource limits; exceeding either yields [`Outcome::Unknown`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            time_limit: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    pub budget: Budget,
    pub symmetry_breaking: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            budget: Budget::unlimited(),
            symmetry_breaking: true,
        }
    }
}

impl SolverOptions {
    pub fn with_budget(budget: Budget) -> Self {
        SolverOptions {
            budget,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_depth: usize,
    pub elapsed: Duration,
}

impl SearchStats {
    pub fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.elapsed += other.elapsed;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Sat(Coloring),
    /// Exhaustive search found no coloring.
    Unsat,
    /// The budget ran out first.
    Unknown,
}

impl Outcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, Outcome::Sat(_))
    }

    pub fn is_unsat(&self) -> bool {
        matches!(self, Outcome::Unsat)
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            Outcome::Sat(_) => "sat",
            Outcome::Unsat => "unsat",
            Outcome::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub outcome: Outcome,
    pub stats: SearchStats,
}

/// Decides S-colorability with no budget.
pub fn decide(g: &Graph, s: &SSequence) -> Decision {
    decide_with(g, s, &SolverOptions::default())
}

pub fn decide_with(g: &Graph, s: &SSequence, opts: &SolverOptions) -> Decision {
    let start = Instant::now();
    let mut search = Search::new(g, s, opts, start);
    let found = search.dfs(0);
    let stats = SearchStats {
        nodes: search.nodes,
        max_depth: search.max_depth,
        elapsed: start.elapsed(),
    };
    let outcome = if found {
        let mut c = Coloring::empty(g.n());
        for v in 0..g.n() {
            c.set(v, Some(search.assign[v]));
        }
        Outcome::Sat(c)
    } else if search.aborted {
        Outcome::Unknown
    } else {
        Outcome::Unsat
    };
    Decision { outcome, stats }
}

/// Static search order: decreasing degree, then decreasing eccentricity,
/// ties by index.
pub fn vertex_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    let ecc: Vec<u32> = (0..g.n()).map(|v| g.eccentricity(v)).collect();
    order.sort_by(|&a, &b| {
        g.degree(b)
            .cmp(&g.degree(a))
            .then(ecc[b].cmp(&ecc[a]))
            .then(a.cmp(&b))
    });
    order
}

struct Search<'a> {
    order: Vec<usize>,
    words: usize,
    slots: usize,
    /// `balls[slot_radius_index][v * words..]`: vertices within the slot's radius of v.
    balls: Vec<Vec<u64>>,
    radius_index: Vec<usize>,
    group_start: Vec<usize>,
    members: Vec<u64>,
    assign: Vec<usize>,
    symmetry: bool,
    budget: &'a Budget,
    start: Instant,
    nodes: u64,
    max_depth: usize,
    aborted: bool,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, s: &SSequence, opts: &'a SolverOptions, start: Instant) -> Self {
        let n = g.n();
        let words = n.div_ceil(64).max(1);
        let mut radii: Vec<u32> = s.terms().to_vec();
        radii.dedup();
        let balls = radii
            .iter()
            .map(|&r| {
                let mut mask = vec![0u64; n * words];
                for v in 0..n {
                    for w in g.ball(v, r) {
                        mask[v * words + w / 64] |= 1 << (w % 64);
                    }
                }
                mask
            })
            .collect();
        let radius_index = s
            .terms()
            .iter()
            .map(|t| radii.iter().position(|r| r == t).unwrap())
            .collect();
        let mut group_start = vec![0; s.len()];
        for range in s.groups() {
            for i in range.clone() {
                group_start[i] = range.start;
            }
        }
        Search {
            order: vertex_order(g),
            words,
            slots: s.len(),
            balls,
            radius_index,
            group_start,
            members: vec![0; s.len() * words],
            assign: vec![usize::MAX; n],
            symmetry: opts.symmetry_breaking,
            budget: &opts.budget,
            start,
            nodes: 0,
            max_depth: 0,
            aborted: false,
        }
    }

    #[inline]
    fn slot_empty(&self, slot: usize) -> bool {
        self.members[slot * self.words..(slot + 1) * self.words]
            .iter()
            .all(|&w| w == 0)
    }

    #[inline]
    fn feasible(&self, v: usize, slot: usize) -> bool {
        let ball = &self.balls[self.radius_index[slot]][v * self.words..(v + 1) * self.words];
        let members = &self.members[slot * self.words..(slot + 1) * self.words];
        ball.iter().zip(members).all(|(b, m)| b & m == 0)
    }

    #[inline]
    fn toggle(&mut self, v: usize, slot: usize) {
        self.members[slot * self.words + v / 64] ^= 1 << (v % 64);
    }

    fn out_of_budget(&mut self) -> bool {
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                self.aborted = true;
            }
        }
        if let Some(limit) = self.budget.time_limit {
            if self.nodes % 4096 == 0 && self.start.elapsed() > limit {
                self.aborted = true;
            }
        }
        self.aborted
    }

    fn dfs(&mut self, depth: usize) -> bool {
        self.nodes += 1;
        self.max_depth = self.max_depth.max(depth);
        if self.out_of_budget() {
            return false;
        }
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for slot in 0..self.slots {
            if self.symmetry
                && slot != self.group_start[slot]
                && self.slot_empty(slot - 1)
            {
                continue;
            }
            if !self.feasible(v, slot) {
                continue;
            }
            self.toggle(v, slot);
            self.assign[v] = slot;
            if self.dfs(depth + 1) {
                return true;
            }
            self.toggle(v, slot);
            self.assign[v] = usize::MAX;
            if self.aborted {
                return false;
            }
        }
        false
    }
}

/// Result of a chromatic-length query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChromaticLength {
    /// Smallest prefix length admitting a coloring.
    Length(usize),
    /// Not colorable even with the whole family.
    ExceedsFamily,
    /// Budget exhausted; every prefix shorter than `lower_bound` is UNSAT.
    Unknown { lower_bound: usize },
}

/// Smallest `k` such that the graph is `prefix(family, k)`-colorable.
pub fn chromatic_length(g: &Graph, family: &SSequence, opts: &SolverOptions) -> ChromaticLength {
    chromatic_length_stats(g, family, opts).0
}

pub fn chromatic_length_stats(
    g: &Graph,
    family: &SSequence,
    opts: &SolverOptions,
) -> (ChromaticLength, SearchStats) {
    let mut stats = SearchStats::default();
    for k in 1..=family.len() {
        let prefix = family.prefix(k).expect("k within family length");
        let d = decide_with(g, &prefix, opts);
        stats.absorb(&d.stats);
        match d.outcome {
            Outcome::Sat(_) => return (ChromaticLength::Length(k), stats),
            Outcome::Unsat => {}
            Outcome::Unknown => return (ChromaticLength::Unknown { lower_bound: k }, stats),
        }
    }
    (ChromaticLength::ExceedsFamily, stats)
}

/// Packing chromatic number, or a proven lower bound when the budget runs out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PackingChromatic {
    Exact(usize),
    AtLeast(usize),
}

/// Least `k` with a `(1, 2, ..., k)`-coloring. Components are handled
/// together; the result is the maximum over components.
pub fn packing_chromatic(g: &Graph, opts: &SolverOptions) -> PackingChromatic {
    if g.n() == 0 {
        return PackingChromatic::Exact(0);
    }
    for k in 1..=g.n() {
        match decide_with(g, &SSequence::packing(k), opts).outcome {
            Outcome::Sat(_) => return PackingChromatic::Exact(k),
            Outcome::Unsat => {}
            Outcome::Unknown => return PackingChromatic::AtLeast(k),
        }
    }
    unreachable!("n distinct slots always suffice")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::solver::coloring::is_valid_total;

    fn seq(s: &str) -> SSequence {
        s.parse().unwrap()
    }

    fn sat(g: &Graph, s: &str) -> bool {
        let s = seq(s);
        match decide(g, &s).outcome {
            Outcome::Sat(c) => {
                assert!(is_valid_total(g, &s, &c));
                true
            }
            Outcome::Unsat => false,
            Outcome::Unknown => panic!("unbounded search returned unknown"),
        }
    }

    #[test]
    fn small_certificates() {
        let k4 = named::complete(4);
        assert!(!sat(&k4, "1,1,1"));
        assert!(sat(&k4, "1,1,1,1"));
        assert!(!sat(&named::cycle(5), "1,2,2"));
        let p = named::petersen();
        assert!(!sat(&p, "1,2,2,2,2,2"));
        assert!(sat(&p, "1,2,2,2,2,2,2"));
        assert!(!sat(&p, "1,1,2,3"));
        assert!(sat(&p, "1,1,2,2,3"));
    }

    #[test]
    fn fixture_certificates() {
        assert!(!sat(&named::fbip14(), "1,2,2,2,2,3"));
        assert!(sat(&named::fbip14(), "1,2,2,2,2,2"));
        assert!(!sat(&named::f1p16(), "1,1,3,3,3"));
    }

    #[test]
    fn chromatic_lengths() {
        let opts = SolverOptions::default();
        assert_eq!(
            chromatic_length(&named::complete(4), &seq("1,2,2,2,2,2,2"), &opts),
            ChromaticLength::Length(4)
        );
        assert_eq!(
            chromatic_length(&named::petersen(), &seq("1,1,2,3,3"), &opts),
            ChromaticLength::Length(5)
        );
        assert_eq!(
            chromatic_length(&named::complete(1), &seq("2,3"), &opts),
            ChromaticLength::Length(1)
        );
        assert_eq!(
            chromatic_length(&named::complete(4), &seq("1,1"), &opts),
            ChromaticLength::ExceedsFamily
        );
    }

    #[test]
    fn packing_chromatic_numbers() {
        let opts = SolverOptions::default();
        assert_eq!(packing_chromatic(&named::complete(4), &opts), PackingChromatic::Exact(4));
        assert_eq!(
            packing_chromatic(&named::complete(4).subdivide(), &opts),
            PackingChromatic::Exact(5)
        );
        assert_eq!(packing_chromatic(&named::complete(1), &opts), PackingChromatic::Exact(1));
        // K4 plus a disjoint edge: maximum over components
        let two = named::complete(4).disjoint_union(&named::path(2));
        assert_eq!(packing_chromatic(&two, &opts), PackingChromatic::Exact(4));
    }

    #[test]
    fn budget_gives_unknown_not_unsat() {
        let opts = SolverOptions::with_budget(Budget::nodes(5));
        let d = decide_with(&named::petersen(), &seq("1,2,2,2,2,2"), &opts);
        assert_eq!(d.outcome, Outcome::Unknown);
        assert!(matches!(
            packing_chromatic(&named::petersen(), &opts),
            PackingChromatic::AtLeast(_)
        ));
    }

    #[test]
    fn stats_are_recorded() {
        let d = decide(&named::petersen(), &seq("1,2,2,2,2,2,2"));
        assert!(d.stats.nodes >= 1);
        assert_eq!(d.stats.max_depth, 10);
    }

    #[test]
    fn empty_graph_is_trivially_colorable() {
        assert!(decide(&Graph::empty(), &seq("1")).outcome.is_sat());
    }
}
