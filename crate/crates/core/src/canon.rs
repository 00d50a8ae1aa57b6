//! Canonical labeling by individualization and refinement.
//!
//! Vertices start in cells keyed by (degree, distance profile); cells are
//! split by neighbor-cell counts until equitable. Non-discrete partitions
//! are resolved by individualizing each vertex of the first non-singleton
//! cell in turn. Every discrete leaf induces a relabeling, and the
//! lexicographically smallest upper-triangle bit string over all leaves is
//! the canonical form. Automorphisms discovered between equal leaves prune
//! sibling branches at the root.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::graph6;

/// Largest order accepted by [`canonical_form`].
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("canonical form supports at most {MAX_ORDER} vertices, got {0}")]
    TooLarge(usize),
}

/// graph6 bytes of the canonically relabeled graph; equal exactly for
/// isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        graph6::parse_graph6(&self.0).expect("canonical form is valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_graph6())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    let labeling = canonical_labeling(g)?;
    Ok(CanonicalForm(
        graph6::write_graph6(&g.relabel(&labeling)).into_bytes(),
    ))
}

/// `labeling[v]` is the canonical index of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, CanonError> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(CanonError::TooLarge(n));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut search = Canon {
        g,
        best: None,
        orbits: (0..n).collect(),
    };
    let root = refine(g, initial_partition(g));
    search.explore(root, 0);
    let (_, order) = search.best.expect("at least one leaf");
    let mut labeling = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labeling[v] = pos;
    }
    Ok(labeling)
}

type Partition = Vec<Vec<usize>>;

fn initial_partition(g: &Graph) -> Partition {
    let n = g.n();
    let key = |v: usize| {
        let mut profile = vec![0usize; n + 1];
        for w in 0..n {
            let d = g.dist(v, w);
            profile[if d == crate::graph::INFINITE { n } else { d as usize }] += 1;
        }
        (g.degree(v), profile)
    };
    let mut keyed: Vec<_> = (0..n).map(|v| (key(v), v)).collect();
    keyed.sort();
    let mut cells: Partition = Vec::new();
    for i in 0..keyed.len() {
        if i == 0 || keyed[i].0 != keyed[i - 1].0 {
            cells.push(Vec::new());
        }
        cells.last_mut().unwrap().push(keyed[i].1);
    }
    cells
}

/// Splits cells by sorted neighbor-cell signatures until stable.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut changed = false;
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig: Vec<usize> = g.neighbors(v).iter().map(|&w| cell_of[w]).collect();
                    sig.sort_unstable();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let start = next.len();
            for i in 0..keyed.len() {
                if i == 0 || keyed[i].0 != keyed[i - 1].0 {
                    next.push(Vec::new());
                }
                next.last_mut().unwrap().push(keyed[i].1);
            }
            if next.len() - start > 1 {
                changed = true;
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn upper_triangle_bits(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64).max(1)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

struct Canon<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    /// Union-find over vertices joined by discovered automorphisms.
    orbits: Vec<usize>,
}

impl Canon<'_> {
    fn find(&mut self, mut v: usize) -> usize {
        while self.orbits[v] != v {
            self.orbits[v] = self.orbits[self.orbits[v]];
            v = self.orbits[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.orbits[ra.max(rb)] = ra.min(rb);
        }
    }

    fn explore(&mut self, cells: Partition, depth: usize) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells.iter().map(|c| c[0]).collect());
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if depth == 0 {
                let rv = self.find(v);
                if explored.iter().any(|&u| self.find(u) == rv) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            let refined = refine(self.g, child);
            self.explore(refined, depth + 1);
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let bits = upper_triangle_bits(self.g, &order);
        match &self.best {
            None => self.best = Some((bits, order)),
            Some((best_bits, best_order)) => {
                if bits < *best_bits {
                    self.best = Some((bits, order));
                } else if bits == *best_bits {
                    // order[i] -> best_order[i] is an automorphism
                    let pairs: Vec<(usize, usize)> =
                        order.iter().copied().zip(best_order.iter().copied()).collect();
                    for (a, b) in pairs {
                        self.union(a, b);
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        for i in (1..perm.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        g.relabel(&perm)
    }

    #[test]
    fn invariant_under_relabeling() {
        for g in [named::petersen(), named::fbip14(), named::f1p16(), named::g1222()] {
            let f = canonical_form(&g).unwrap();
            for k in 0..5 {
                assert_eq!(canonical_form(&shuffled(&g, k)).unwrap(), f);
            }
        }
    }

    #[test]
    fn distinguishes_hexagon_from_two_triangles() {
        let c6 = named::cycle(6);
        let two_c3 = named::cycle(3).disjoint_union(&named::cycle(3));
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&two_c3).unwrap());
    }

    #[test]
    fn representative_is_isomorphic() {
        let f = canonical_form(&named::petersen()).unwrap();
        let h = f.to_graph();
        assert_eq!(canonical_form(&h).unwrap(), f);
        assert_eq!(h.edge_count(), 15);
    }

    #[test]
    fn order_limit() {
        assert_eq!(
            canonical_form(&named::path(65)),
            Err(CanonError::TooLarge(65))
        );
    }
}
