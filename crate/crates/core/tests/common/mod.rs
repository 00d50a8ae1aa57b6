//! Generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use spacking::{Graph, SSequence};

/// Random graph on `n` vertices with maximum degree 3, not necessarily
/// connected: `attempts` random pairs are joined when both have room.
pub fn random_subcubic<R: Rng>(rng: &mut R, n: usize, attempts: usize) -> Graph {
    let mut deg = vec![0; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for _ in 0..attempts {
        if n < 2 {
            break;
        }
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let (u, v) = (u.min(v), u.max(v));
        if u == v || deg[u] == 3 || deg[v] == 3 || edges.contains(&(u, v)) {
            continue;
        }
        deg[u] += 1;
        deg[v] += 1;
        edges.push((u, v));
    }
    Graph::new(n, &edges).unwrap()
}

/// Random connected subcubic graph in which no two degree-3 vertices are
/// adjacent. Built as a random tree, then densified with random edges that
/// keep the constraint.
pub fn random_3_irregular<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let allowed = |adj: &Vec<Vec<usize>>, u: usize, v: usize| -> bool {
        if u == v || adj[u].contains(&v) || adj[u].len() == 3 || adj[v].len() == 3 {
            return false;
        }
        // degrees after adding uv
        let du = adj[u].len() + 1;
        let dv = adj[v].len() + 1;
        if du == 3 && dv == 3 {
            return false;
        }
        if du == 3 && adj[u].iter().any(|&w| adj[w].len() == 3) {
            return false;
        }
        if dv == 3 && adj[v].iter().any(|&w| adj[w].len() == 3) {
            return false;
        }
        true
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let v = order[i];
        let mut candidates: Vec<usize> = order[..i].iter().copied().filter(|&u| allowed(&adj, u, v)).collect();
        candidates.shuffle(rng);
        // a tree vertex of degree at most 1 always accepts, so this never runs dry
        let u = candidates[0];
        adj[u].push(v);
        adj[v].push(u);
    }
    for _ in 0..n {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if allowed(&adj, u, v) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
        .collect();
    Graph::new(n, &edges).unwrap()
}

fn distances(g: &Graph) -> Vec<Vec<u32>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.dist(u, v)).collect()).collect()
}

/// Tries all `len(S)^n` assignments.
pub fn naive_colorable(g: &Graph, s: &SSequence) -> bool {
    let n = g.n();
    let k = s.len();
    let d = distances(g);
    let r = s.terms();
    let mut a = vec![0usize; n];
    loop {
        let ok = (0..n).all(|u| (u + 1..n).all(|v| a[u] != a[v] || d[u][v] > r[a[u]]));
        if ok {
            return true;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            a[i] += 1;
            if a[i] < k {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

/// Largest number of vertices in a valid partial (1,2,3)-coloring, by trying
/// all `4^n` partial assignments.
pub fn naive_max_123(g: &Graph) -> usize {
    let n = g.n();
    let d = distances(g);
    let radius = [1u32, 2, 3];
    let mut best = 0;
    for code in 0..4usize.pow(n as u32) {
        let a: Vec<usize> = (0..n).map(|i| (code >> (2 * i)) & 3).collect();
        let size = a.iter().filter(|&&x| x > 0).count();
        if size <= best {
            continue;
        }
        let ok = (0..n).all(|u| {
            a[u] == 0 || (u + 1..n).all(|v| a[u] != a[v] || d[u][v] > radius[a[u] - 1])
        });
        if ok {
            best = size;
        }
    }
    best
}

/// Non-decreasing sequences over `{1, 2, 3}` of length 1 to 4.
pub fn small_sequences() -> Vec<SSequence> {
    let mut out = Vec::new();
    fn extend(prefix: &mut Vec<u32>, out: &mut Vec<SSequence>) {
        if !prefix.is_empty() {
            out.push(SSequence::new(prefix.clone()).unwrap());
        }
        if prefix.len() == 4 {
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1);
        for t in lo..=3 {
            prefix.push(t);
            extend(prefix, out);
            prefix.pop();
        }
    }
    extend(&mut Vec::new(), &mut out);
    out
}
