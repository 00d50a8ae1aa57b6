//! Fixture graphs with frozen vertex labelings.
//!
//! The labelings below are committed and mirrored by the graph6 files under
//! `fixtures/`; example colorings in tests refer to these indices.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NamedGraphError {
    #[error("unknown graph name `{0}`")]
    Unknown(String),
}

/// Names accepted by [`named_graph`] that take no parameter.
pub const FIXTURE_NAMES: &[&str] = &[
    "k1", "k2", "k4", "k33", "petersen", "fbip14", "f1p16", "g1222", "fig1",
];

/// Looks up a fixture graph by name.
///
/// Accepted: `k1`, `k2`, `k4`, `k33`, `petersen`, `fbip14`, `f1p16`,
/// `g1222`, `fig1`, `cycle(n)`, `path(n)`, `complete(n)` and `sub(NAME)` for
/// the subdivision of another named graph.
pub fn named_graph(name: &str) -> Result<Graph, NamedGraphError> {
    let unknown = || NamedGraphError::Unknown(name.to_string());
    let name = name.trim();
    if let Some(inner) = strip_call(name, "sub") {
        return Ok(named_graph(inner)?.subdivide());
    }
    for (prefix, build) in [
        ("cycle", cycle as fn(usize) -> Graph),
        ("path", path),
        ("complete", complete),
    ] {
        if let Some(arg) = strip_call(name, prefix) {
            let k: usize = arg.trim().parse().map_err(|_| unknown())?;
            if prefix == "cycle" && k < 3 {
                return Err(unknown());
            }
            return Ok(build(k));
        }
    }
    let g = match name.to_ascii_lowercase().as_str() {
        "k1" => complete(1),
        "k2" => complete(2),
        "k4" => complete(4),
        "k33" => k33(),
        "petersen" => petersen(),
        "fbip14" => fbip14(),
        "f1p16" => f1p16(),
        "g1222" => g1222(),
        "fig1" => fig1(),
        _ => return Err(unknown()),
    };
    Ok(g)
}

fn strip_call<'a>(name: &'a str, prefix: &str) -> Option<&'a str> {
    name.strip_prefix(prefix)?
        .strip_prefix('(')?
        .strip_suffix(')')
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).unwrap()
}

/// K_{3,3} with parts {0,1,2} and {3,4,5}.
pub fn k33() -> Graph {
    let edges: Vec<(usize, usize)> = (0..3)
        .flat_map(|u| (3..6).map(move |v| (u, v)))
        .collect();
    Graph::new(6, &edges).unwrap()
}

/// Outer 5-cycle 0..4, spokes `i -- i+5`, inner pentagram on 5..9.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).unwrap()
}

/// Bipartite cubic graph of order 14 that is (1,2,2,2,2,2)-chromatic.
///
/// Labeling (figure node names in parentheses): 0 (root), 1-3 (its three
/// children f1, f2, f3), 4-9 (f11, f12, f21, f22, f31, f32),
/// 10-13 (f111, f112, f221, f321).
pub fn fbip14() -> Graph {
    const EDGES: [(usize, usize); 21] = [
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 4),
        (1, 5),
        (2, 6),
        (2, 7),
        (3, 8),
        (3, 9),
        (4, 10),
        (4, 11),
        (7, 12),
        (9, 13),
        (10, 6),
        (10, 8),
        (11, 7),
        (11, 9),
        (12, 5),
        (12, 8),
        (13, 5),
        (13, 6),
    ];
    Graph::new(14, &EDGES).unwrap()
}

/// Slot assignment printed on the [`fbip14`] drawing, as indices into
/// (1,2,2,2,2,2): slot 0 is color 1, slots 1..=5 are 2a..2e.
pub const FBIP14_COLORING: [usize; 14] = [0, 1, 2, 3, 0, 2, 1, 3, 4, 5, 5, 4, 0, 0];

/// Cubic graph of order 12 made of four triangles, not (1,1,3,3,3)-colorable.
///
/// Triangles: {0,1,4}, {2,3,5}, {6,7,10}, {8,9,11}; connecting edges
/// 1-2, 0-6, 5-7, 3-9, 4-8, 11-10.
pub fn f1p16() -> Graph {
    const EDGES: [(usize, usize); 18] = [
        (0, 1),
        (1, 4),
        (4, 0),
        (2, 3),
        (3, 5),
        (5, 2),
        (6, 7),
        (7, 10),
        (10, 6),
        (8, 9),
        (9, 11),
        (11, 8),
        (1, 2),
        (0, 6),
        (5, 7),
        (3, 9),
        (4, 8),
        (11, 10),
    ];
    Graph::new(12, &EDGES).unwrap()
}

/// The drawn (1,1,3,3,3,3)-coloring of [`f1p16`]: slots 0,1 are 1a,1b and
/// slots 2..=5 are 3a..3d.
pub const F1P16_COLORING: [usize; 12] = [2, 0, 1, 3, 1, 0, 0, 1, 0, 4, 5, 1];

/// The exceptional 3-irregular graph of order 8.
///
/// 0 = x, 1 = y (the root edge), 2 = x1, 3 = y1, and the two cross pairs
/// 4-5 (x11, y11) and 6-7 (x12, y12).
pub fn g1222() -> Graph {
    const EDGES: [(usize, usize); 9] = [
        (0, 1),
        (0, 2),
        (1, 3),
        (2, 4),
        (2, 6),
        (3, 5),
        (3, 7),
        (4, 5),
        (6, 7),
    ];
    Graph::new(8, &EDGES).unwrap()
}

/// The drawn (1,2,2,2)-coloring of [`g1222`]; slot 0 is 1, slots 1..=3 are
/// 2a..2c.
pub const G1222_COLORING: [usize; 8] = [3, 2, 1, 1, 2, 0, 0, 3];

/// A small graph realizing the sibling/cousin schematic.
///
/// Root edge 0-1 (x, y); 2 = r, 3 = r' (level 1); 4 = w, 5 = v, 6 = z
/// (level 2); 7 = u, 8 = v' (level 3). Here 4 and 5 are siblings and both
/// 5 and 8 are cousins of 7.
pub fn fig1() -> Graph {
    const EDGES: [(usize, usize); 9] = [
        (0, 1),
        (0, 2),
        (1, 3),
        (2, 4),
        (2, 5),
        (3, 6),
        (4, 6),
        (4, 7),
        (6, 8),
    ];
    Graph::new(9, &EDGES).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn girth(g: &Graph) -> Option<u32> {
        let mut best: Option<u32> = None;
        for &(u, v) in g.edges() {
            // shortest cycle through edge uv = 1 + dist(u, v) in G - uv
            let rest: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .copied()
                .filter(|&e| e != (u, v))
                .collect();
            let h = Graph::new(g.n(), &rest).unwrap();
            let d = h.dist(u, v);
            if d != crate::graph::INFINITE {
                best = Some(best.map_or(d + 1, |b| b.min(d + 1)));
            }
        }
        best
    }

    #[test]
    fn petersen_shape() {
        let p = named_graph("petersen").unwrap();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert_eq!(girth(&p), Some(5));
        let class = p.classify();
        assert!(class.is_cubic && !class.is_bipartite);
        assert_eq!(class.diameter, Some(2));
    }

    #[test]
    fn fbip14_is_bipartite_cubic_with_equal_parts() {
        let g = fbip14();
        let class = g.classify();
        assert!(class.is_cubic && class.is_bipartite);
        let side = g.bipartition().unwrap();
        assert_eq!(side.iter().filter(|&&s| s).count(), 7);
        assert_eq!(class.diameter, Some(3));
    }

    #[test]
    fn f1p16_has_four_triangles_and_diameter_three() {
        let g = f1p16();
        assert!(g.classify().is_cubic);
        assert_eq!(g.diameter(), Some(3));
        let mut triangles = 0;
        for a in 0..12 {
            for b in a + 1..12 {
                for c in b + 1..12 {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        triangles += 1;
                    }
                }
            }
        }
        assert_eq!(triangles, 4);
    }

    #[test]
    fn g1222_structure() {
        let g = g1222();
        let class = g.classify();
        assert!(class.is_subcubic && class.is_3_irregular && !class.is_cubic);
        let deg3: Vec<usize> = (0..8).filter(|&v| g.degree(v) == 3).collect();
        assert_eq!(deg3, vec![2, 3]);
        // root edge x-y joins two degree-2 vertices
        assert!(g.has_edge(0, 1) && g.degree(0) == 2 && g.degree(1) == 2);
    }

    #[test]
    fn parameterized_names() {
        assert_eq!(named_graph("cycle(5)").unwrap().edge_count(), 5);
        assert_eq!(named_graph("path(4)").unwrap().edge_count(), 3);
        assert_eq!(named_graph("sub(k4)").unwrap().n(), 10);
        assert!(named_graph("cycle(2)").is_err());
        assert!(named_graph("dodecahedron").is_err());
    }
}
