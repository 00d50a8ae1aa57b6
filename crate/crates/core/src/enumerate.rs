//! Connected cubic graphs up to isomorphism, generated or read from a
//! graph6 catalog.
//!
//! Generation starts from K4 and applies three operations: edge insertion
//! (subdivide two distinct edges and join the new vertices), diamond
//! insertion on an edge, and attaching a K4 with one subdivided edge to a
//! subdivided edge. Edge insertion alone misses graphs where every edge
//! reduction would create a parallel edge. Isomorphic copies are removed by
//! canonical form, and the per-order counts are checked against
//! [`KNOWN_COUNTS`].

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;
use crate::graph6::{Graph6Error, Graph6Reader};
use crate::named;

/// Largest order the built-in generator accepts.
pub const MAX_GENERATED_ORDER: usize = 18;

/// Number of connected cubic graphs of order 4, 6, ..., 18.
pub const KNOWN_COUNTS: [(usize, usize); 8] = [
    (4, 1),
    (6, 2),
    (8, 5),
    (10, 19),
    (12, 85),
    (14, 509),
    (16, 4060),
    (18, 41301),
];

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("no cubic graph has odd order {0}")]
    OddOrder(usize),
    #[error("order {0} is outside the generator range 4..={MAX_GENERATED_ORDER}")]
    OutOfRange(usize),
    #[error("catalog {path}: {source}")]
    Catalog {
        path: PathBuf,
        #[source]
        source: Graph6Error,
    },
}

fn check_order(n: usize) -> Result<(), EnumerateError> {
    if n % 2 == 1 {
        return Err(EnumerateError::OddOrder(n));
    }
    if !(4..=MAX_GENERATED_ORDER).contains(&n) {
        return Err(EnumerateError::OutOfRange(n));
    }
    Ok(())
}

/// All connected cubic graphs of order `n`, one per isomorphism class,
/// as canonical representatives sorted by canonical form.
pub fn enumerate_cubic(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    check_order(n)?;
    Ok(enumerate_cubic_up_to(n)?.remove(&n).unwrap_or_default())
}

/// Every even order from 4 to `n_max`, keyed by order.
///
/// Order `n` is built from order `n - 2` by edge insertion, from order
/// `n - 4` by diamond insertion and from order `n - 6` by block attachment.
pub fn enumerate_cubic_up_to(n_max: usize) -> Result<BTreeMap<usize, Vec<Graph>>, EnumerateError> {
    check_order((n_max - n_max % 2).max(4))?;
    let mut levels: BTreeMap<usize, BTreeSet<CanonicalForm>> = BTreeMap::new();
    levels.insert(4, [canonical_form(&named::complete(4)).unwrap()].into());
    let mut n = 6;
    while n <= n_max {
        let mut next = expand(&levels[&(n - 2)], |g, edges| {
            let mut out = Vec::new();
            for i in 0..edges.len() {
                for j in i + 1..edges.len() {
                    out.push(insert_edge(g, edges[i], edges[j]));
                }
            }
            out
        });
        if let Some(base) = levels.get(&(n - 4)) {
            next.extend(expand(base, |g, edges| {
                edges.iter().map(|&e| insert_diamond(g, e)).collect()
            }));
        }
        if let Some(base) = levels.get(&(n - 6)) {
            next.extend(expand(base, |g, edges| {
                edges.iter().map(|&e| attach_block(g, e)).collect()
            }));
        }
        levels.insert(n, next);
        n += 2;
    }
    Ok(levels
        .into_iter()
        .map(|(n, forms)| (n, forms.iter().map(CanonicalForm::to_graph).collect()))
        .collect())
}

fn expand<F>(parents: &BTreeSet<CanonicalForm>, children: F) -> BTreeSet<CanonicalForm>
where
    F: Fn(&Graph, &[(usize, usize)]) -> Vec<Graph> + Sync,
{
    use rayon::prelude::*;
    let parents: Vec<Graph> = parents.iter().map(CanonicalForm::to_graph).collect();
    parents
        .par_iter()
        .map(|g| {
            children(g, g.edges())
                .iter()
                .map(|c| canonical_form(c).expect("order within canonical limit"))
                .collect::<BTreeSet<_>>()
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// Subdivides `e1` and `e2` with two new vertices and joins them.
pub fn insert_edge(g: &Graph, e1: (usize, usize), e2: (usize, usize)) -> Graph {
    let (p, q) = (g.n(), g.n() + 1);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&e| e != e1 && e != e2)
        .collect();
    edges.extend([(e1.0, p), (p, e1.1), (e2.0, q), (q, e2.1), (p, q)]);
    Graph::new(g.n() + 2, &edges).expect("edge insertion keeps the graph simple")
}

/// Replaces the edge `uv` by the path `u a {b c} d v` where `a b c d` is a
/// diamond (K4 minus the edge `ad`).
pub fn insert_diamond(g: &Graph, e: (usize, usize)) -> Graph {
    let n = g.n();
    let (a, b, c, d) = (n, n + 1, n + 2, n + 3);
    let mut edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&f| f != e).collect();
    edges.extend([(e.0, a), (a, b), (a, c), (b, c), (b, d), (c, d), (d, e.1)]);
    Graph::new(n + 4, &edges).expect("diamond insertion keeps the graph simple")
}

/// Subdivides `uv` with a new vertex `w` and hangs from `w` a K4 with one
/// subdivided edge.
pub fn attach_block(g: &Graph, e: (usize, usize)) -> Graph {
    let n = g.n();
    let (w, t, a, b, c, d) = (n, n + 1, n + 2, n + 3, n + 4, n + 5);
    let mut edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&f| f != e).collect();
    edges.extend([(e.0, w), (w, e.1), (w, t), (t, a), (t, b), (a, c), (a, d), (b, c), (b, d), (c, d)]);
    Graph::new(n + 6, &edges).expect("block attachment keeps the graph simple")
}

/// Keeps only bipartite graphs.
pub fn filter_bipartite<I>(graphs: I) -> impl Iterator<Item = Graph>
where
    I: IntoIterator<Item = Graph>,
{
    graphs.into_iter().filter(|g| g.bipartition().is_some())
}

/// Where the graphs of each order come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provider {
    Generate,
    /// A graph6 file; only connected cubic graphs of the requested orders
    /// are used.
    Catalog(PathBuf),
}

impl Provider {
    pub fn describe(&self) -> String {
        match self {
            Provider::Generate => "generate".into(),
            Provider::Catalog(p) => format!("catalog:{}", p.display()),
        }
    }

    /// Graphs of every even order in `n_min..=n_max`.
    pub fn graphs(
        &self,
        n_min: usize,
        n_max: usize,
    ) -> Result<BTreeMap<usize, Vec<Graph>>, EnumerateError> {
        match self {
            Provider::Generate => {
                let mut all = enumerate_cubic_up_to(n_max)?;
                all.retain(|&n, _| n >= n_min);
                Ok(all)
            }
            Provider::Catalog(path) => read_catalog(path, n_min, n_max),
        }
    }
}

/// Streams a graph6 catalog, keeping connected cubic graphs with order in
/// range.
pub fn read_catalog(
    path: &Path,
    n_min: usize,
    n_max: usize,
) -> Result<BTreeMap<usize, Vec<Graph>>, EnumerateError> {
    let wrap = |source: Graph6Error| EnumerateError::Catalog {
        path: path.to_path_buf(),
        source,
    };
    let file = File::open(path).map_err(|e| wrap(e.into()))?;
    let mut out: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    for g in Graph6Reader::new(BufReader::new(file)) {
        let g = g.map_err(wrap)?;
        let n = g.n();
        if n < n_min || n > n_max || !g.classify().is_cubic || !g.is_connected() {
            continue;
        }
        out.entry(n).or_default().push(g);
    }
    Ok(out)
}
