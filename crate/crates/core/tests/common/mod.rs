//! Shared brute-force oracles, independent of the library's algorithms.

#![allow(dead_code)]

use artin_invariants::graph::DefiningGraph;
use rand::Rng;

/// All simple cycles as vertex-index sequences, each listed once
/// (least vertex first, lesser second vertex fixes the orientation).
pub fn simple_cycles(g: &DefiningGraph) -> Vec<Vec<usize>> {
    let n = g.n_vertices();
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        cycle_dfs(g, s, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
        path.pop();
    }
    out
}

fn cycle_dfs(
    g: &DefiningGraph,
    s: usize,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let u = *path.last().unwrap();
    for &v in g.neighbors(u) {
        if v == s {
            if path.len() >= 3 && path[1] < u {
                out.push(path.clone());
            }
            continue;
        }
        if v < s || on_path[v] {
            continue;
        }
        path.push(v);
        on_path[v] = true;
        cycle_dfs(g, s, path, on_path, out);
        on_path[v] = false;
        path.pop();
    }
}

/// Girth by exhaustive cycle enumeration; `None` for forests.
pub fn girth_oracle(g: &DefiningGraph) -> Option<usize> {
    simple_cycles(g).iter().map(|c| c.len()).min()
}

/// Weighted girth as the direct minimum over simple cycles of
/// `length + #{edges of label >= 3}`; `None` for forests.
pub fn weighted_girth_oracle(g: &DefiningGraph) -> Option<usize> {
    simple_cycles(g)
        .iter()
        .map(|c| {
            let k = c.len();
            let big = (0..k)
                .filter(|&i| g.label(c[i], c[(i + 1) % k]).expect("cycle edge") >= 3)
                .count();
            k + big
        })
        .min()
}

/// Whether some girth-realizing cycle has all labels 2.
pub fn some_min_cycle_all_small(g: &DefiningGraph) -> Option<bool> {
    let cycles = simple_cycles(g);
    let girth = cycles.iter().map(|c| c.len()).min()?;
    Some(cycles.iter().filter(|c| c.len() == girth).any(|c| {
        let k = c.len();
        (0..k).all(|i| g.label(c[i], c[(i + 1) % k]) == Some(2))
    }))
}

/// A random simple graph on `n` vertices with edge probability `p` and
/// labels drawn from `labels`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64, labels: &[u32]) -> DefiningGraph {
    let mut g = DefiningGraph::new();
    for i in 0..n {
        g.add_vertex(&format!("v{i}")).unwrap();
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(p) {
                let m = labels[rng.gen_range(0..labels.len())];
                g.add_edge(&format!("v{i}"), &format!("v{j}"), m).unwrap();
            }
        }
    }
    g
}

/// Whether two label sequences are equal up to rotation and reflection.
pub fn dihedral_equivalent(a: &[u32], b: &[u32]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    for start in 0..n {
        let rotated: Vec<u32> = (0..n).map(|i| a[(start + i) % n]).collect();
        if rotated == b {
            return true;
        }
        let mut reflected = rotated;
        reflected.reverse();
        if reflected == b {
            return true;
        }
    }
    false
}

/// Number of orbits of binary necklaces with `k` beads and exactly `b`
/// ones, under the dihedral group, by explicit orbit enumeration.
pub fn necklace_orbit_count(k: usize, b: usize) -> usize {
    use std::collections::BTreeSet;
    let mut seen: BTreeSet<Vec<bool>> = BTreeSet::new();
    let mut orbits = 0usize;
    for bits in 0u64..(1 << k) {
        if bits.count_ones() as usize != b {
            continue;
        }
        let vec: Vec<bool> = (0..k).map(|i| bits >> i & 1 == 1).collect();
        if seen.contains(&vec) {
            continue;
        }
        orbits += 1;
        for start in 0..k {
            let rotated: Vec<bool> = (0..k).map(|i| vec[(start + i) % k]).collect();
            let mut reflected = rotated.clone();
            reflected.reverse();
            seen.insert(rotated);
            seen.insert(reflected);
        }
    }
    orbits
}

/// Articulation test by deletion: removing `v` disconnects its component.
pub fn separating_vertex_oracle(g: &DefiningGraph) -> bool {
    let n = g.n_vertices();
    'vertices: for v in 0..n {
        // Members of v's component, excluding v.
        let mut members = Vec::new();
        let mut seen = vec![false; n];
        seen[v] = true;
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        if members.len() < 2 {
            continue;
        }
        // Flood from one member while avoiding v.
        let mut reach = vec![false; n];
        reach[members[0]] = true;
        let mut stack = vec![members[0]];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if w != v && !reach[w] {
                    reach[w] = true;
                    stack.push(w);
                }
            }
        }
        for &m in &members {
            if !reach[m] {
                return true;
            }
        }
        continue 'vertices;
    }
    false
}

/// Induced cycles by subset check: a vertex subset spans an induced cycle
/// exactly when its induced subgraph is connected and 2-regular.
pub fn induced_cycle_sets(g: &DefiningGraph) -> Vec<Vec<usize>> {
    let n = g.n_vertices();
    let mut out = Vec::new();
    for bits in 0u64..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|&i| bits >> i & 1 == 1).collect();
        if subset.len() < 3 {
            continue;
        }
        let degree_ok = subset.iter().all(|&u| {
            subset.iter().filter(|&&v| v != u && g.has_edge(u, v)).count() == 2
        });
        if !degree_ok {
            continue;
        }
        // Connectivity within the subset.
        let mut seen = vec![subset[0]];
        let mut stack = vec![subset[0]];
        while let Some(u) = stack.pop() {
            for &v in &subset {
                if v != u && g.has_edge(u, v) && !seen.contains(&v) {
                    seen.push(v);
                    stack.push(v);
                }
            }
        }
        if seen.len() == subset.len() {
            out.push(subset);
        }
    }
    out
}
