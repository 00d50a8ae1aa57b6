//! Simple undirected graphs with an eagerly computed distance matrix.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Distance between vertices in different components.
pub const INFINITE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{u}, {v}}} has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
}

/// An immutable simple graph on vertices `0..n`.
///
/// Edges are kept in insertion order (each normalized so that `u < v`),
/// adjacency lists are sorted, and all-pairs hop distances are computed by
/// BFS at construction time.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    dist: Vec<u32>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if adj[a].contains(&b) {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            adj[a].push(b);
            adj[b].push(a);
            normalized.push((a, b));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let dist = all_pairs_bfs(n, &adj);
        Ok(Graph {
            n,
            edges: normalized,
            adj,
            dist,
        })
    }

    /// The graph with no vertices.
    pub fn empty() -> Self {
        Graph::new(0, &[]).expect("empty graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in insertion order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Hop distance, or [`INFINITE`] across components.
    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Largest finite distance from `v`.
    pub fn eccentricity(&self, v: usize) -> u32 {
        (0..self.n)
            .map(|w| self.dist(v, w))
            .filter(|&d| d != INFINITE)
            .max()
            .unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || (0..self.n).all(|w| self.dist(0, w) != INFINITE)
    }

    /// `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        if !self.is_connected() {
            return None;
        }
        Some((0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0))
    }

    /// Vertices within distance `radius` of `v`, excluding `v` itself.
    pub fn ball(&self, v: usize, radius: u32) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| w != v && self.dist(v, w) <= radius)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let comp: Vec<usize> = (s..self.n)
                .filter(|&w| self.dist(s, w) != INFINITE)
                .collect();
            for &w in &comp {
                seen[w] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Graph::new(vertices.len(), &edges).expect("induced subgraph of a simple graph")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.n, &edges).expect("relabeling preserves simplicity")
    }

    /// Two-coloring of the vertices if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for &w in &self.adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    /// True when no edge joins two vertices of degree `d`.
    pub fn is_irregular(&self, d: usize) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| !(self.degree(u) == d && self.degree(v) == d))
    }

    pub fn classify(&self) -> GraphClass {
        let max_degree = self.max_degree();
        GraphClass {
            max_degree,
            is_cubic: self.n > 0 && self.adj.iter().all(|a| a.len() == 3),
            is_subcubic: max_degree <= 3,
            is_3_irregular: self.is_irregular(3),
            is_bipartite: self.bipartition().is_some(),
            diameter: self.diameter(),
        }
    }

    /// The subdivision S(G): every edge replaced by a path of length two.
    ///
    /// Original vertices keep their indices; the vertex subdividing the
    /// `i`-th edge is `n + i`.
    pub fn subdivide(&self) -> Graph {
        let n = self.n;
        let mut edges = Vec::with_capacity(2 * self.edges.len());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            edges.push((u, n + i));
            edges.push((v, n + i));
        }
        Graph::new(n + self.edges.len(), &edges).expect("subdivision is simple")
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, &edges).expect("disjoint union is simple")
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Structural summary of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphClass {
    pub max_degree: usize,
    pub is_cubic: bool,
    pub is_subcubic: bool,
    /// No two adjacent vertices both have degree 3.
    pub is_3_irregular: bool,
    pub is_bipartite: bool,
    /// `None` for disconnected graphs.
    pub diameter: Option<u32>,
}

fn all_pairs_bfs(n: usize, adj: &[Vec<usize>]) -> Vec<u32> {
    let mut dist = vec![INFINITE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let dv = row[v];
            for &w in &adj[v] {
                if row[w] == INFINITE {
                    row[w] = dv + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    fn floyd_warshall(g: &Graph) -> Vec<u32> {
        let n = g.n();
        let mut d = vec![INFINITE; n * n];
        for v in 0..n {
            d[v * n + v] = 0;
        }
        for &(u, v) in g.edges() {
            d[u * n + v] = 1;
            d[v * n + u] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let (a, b) = (d[i * n + k], d[k * n + j]);
                    if a != INFINITE && b != INFINITE && a + b < d[i * n + j] {
                        d[i * n + j] = a + b;
                    }
                }
            }
        }
        d
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.dist(0, 0), 0);
        assert_eq!(g.diameter(), Some(0));
    }

    #[test]
    fn path_distances() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.dist(0, 2), 2);
        assert_eq!(g.dist(2, 0), 2);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(4, &[(0, 1), (0, 1)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert_eq!(
            Graph::new(4, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert_eq!(Graph::new(3, &[(2, 2)]).unwrap_err(), GraphError::SelfLoop(2));
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 3, n: 3 })
        ));
    }

    #[test]
    fn disconnected_distance_is_infinite() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.dist(0, 2), INFINITE);
        assert_eq!(g.diameter(), None);
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn bfs_matches_floyd_warshall() {
        let g = Graph::new(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (5, 6), (4, 1)],
        )
        .unwrap();
        let fw = floyd_warshall(&g);
        for u in 0..7 {
            for v in 0..7 {
                assert_eq!(g.dist(u, v), fw[u * 7 + v]);
            }
        }
    }

    #[test]
    fn subdivide_triangle_is_hexagon() {
        let c3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let s = c3.subdivide();
        assert_eq!(s.n(), 6);
        assert_eq!(s.edge_count(), 6);
        assert!((0..6).all(|v| s.degree(v) == 2));
        assert!(s.is_connected());
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(s.dist(u, v), 2 * c3.dist(u, v));
            }
        }
    }

    #[test]
    fn subdivide_k1_and_k4() {
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.subdivide(), k1);
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = k4.subdivide();
        assert_eq!(s.n(), 10);
        assert!((0..4).all(|v| s.degree(v) == 3));
        assert!((4..10).all(|v| s.degree(v) == 2));
    }

    #[test]
    fn irregularity() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let class = c5.classify();
        assert!(class.is_3_irregular);
        assert!(!class.is_bipartite);
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!k4.classify().is_3_irregular);
        assert!(k4.subdivide().classify().is_3_irregular);
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.relabel(&[3, 2, 1, 0]);
        assert!(h.has_edge(3, 2) && h.has_edge(2, 1) && h.has_edge(1, 0));
        assert_eq!(h.dist(3, 0), 3);
    }
}
