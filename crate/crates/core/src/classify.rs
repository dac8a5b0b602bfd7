//! Class predicates of Artin groups read off the defining graph.
//!
//! The trichotomy spherical / euclidean / hyperbolic for a `(p,q,r)`-triangle
//! is a strict comparison of `1/p + 1/q + 1/r` with 1, so everything here is
//! exact rational arithmetic; no floating point is involved.
//!
//! Two-dimensionality is decided on triangles alone: a spherical subset of
//! three or more generators always contains a spherical triangle, so a graph
//! is two-dimensional exactly when no triangle has angle sum above 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::graph::{CycleSubgraph, DefiningGraph};

/// An operation was invoked outside the hypotheses of the statement that
/// justifies it.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{operation}: hypothesis not satisfied: {hypothesis}")]
pub struct ScopeError {
    pub operation: &'static str,
    pub hypothesis: String,
}

impl ScopeError {
    pub fn new(operation: &'static str, hypothesis: impl Into<String>) -> Self {
        ScopeError { operation, hypothesis: hypothesis.into() }
    }
}

/// One 3-clique of the graph with its label triple `p <= q <= r` and the
/// exact value of `1/p + 1/q + 1/r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleEntry {
    pub vertices: [String; 3],
    pub labels: [u32; 3],
    pub sum: BigRational,
}

impl TriangleEntry {
    pub fn is_spherical(&self) -> bool {
        self.sum > BigRational::one()
    }

    pub fn is_euclidean(&self) -> bool {
        self.sum == BigRational::one()
    }
}

/// Aggregated classification of a defining graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub right_angled: bool,
    pub large_type: bool,
    pub two_dimensional: bool,
    /// Present exactly when the graph is two-dimensional; the
    /// characterisation used here is stated for that case only.
    pub hyperbolic_type: Option<bool>,
    pub euclidean_triangles: Vec<TriangleEntry>,
    pub spherical_triangles: Vec<TriangleEntry>,
    pub full_2222_squares: Vec<[String; 4]>,
    pub has_leaf: bool,
    pub connected: bool,
}

fn ratio(num: i64, den: u32) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Every 3-clique, listed once in lexicographic vertex-index order, with
/// labels sorted ascending and the exact rational sum of reciprocals.
pub fn triangle_census(g: &DefiningGraph) -> Vec<TriangleEntry> {
    let n = g.n_vertices();
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in (b + 1)..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    let mut labels =
                        [g.label(a, b).unwrap(), g.label(b, c).unwrap(), g.label(a, c).unwrap()];
                    labels.sort_unstable();
                    let sum = ratio(1, labels[0]) + ratio(1, labels[1]) + ratio(1, labels[2]);
                    out.push(TriangleEntry {
                        vertices: [
                            g.vertex_name(a).to_owned(),
                            g.vertex_name(b).to_owned(),
                            g.vertex_name(c).to_owned(),
                        ],
                        labels,
                        sum,
                    });
                }
            }
        }
    }
    out
}

/// True when no triangle is spherical (`1/p + 1/q + 1/r > 1`).
pub fn is_two_dimensional(g: &DefiningGraph) -> bool {
    triangle_census(g).iter().all(|t| !t.is_spherical())
}

/// All induced 4-cycles whose four edges are labelled 2.
///
/// Induced means the two diagonals are non-edges. Each square is reported
/// once as a [`CycleSubgraph`] in canonical traversal order.
pub fn full_2222_squares(g: &DefiningGraph) -> Vec<CycleSubgraph> {
    let n = g.n_vertices();
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    // The induced subgraph on {a,b,c,d} must be a 4-cycle
                    // with all labels 2. With a fixed as least vertex, the
                    // possible cyclic orders are a-b-c-d, a-b-d-c, a-c-b-d.
                    let label2 = |u: usize, v: usize| g.label(u, v) == Some(2);
                    let non_edge = |u: usize, v: usize| !g.has_edge(u, v);
                    let orders: [[usize; 4]; 3] =
                        [[a, b, c, d], [a, b, d, c], [a, c, b, d]];
                    for order in orders {
                        let [p, q, r, s] = order;
                        if label2(p, q)
                            && label2(q, r)
                            && label2(r, s)
                            && label2(s, p)
                            && non_edge(p, r)
                            && non_edge(q, s)
                        {
                            let cyc = CycleSubgraph::new(g, order.to_vec())
                                .expect("checked 4-cycle");
                            out.push(cyc);
                            break;
                        }
                    }
                }
            }
        }
    }
    out
}

/// The Moussong characterisation for two-dimensional Artin groups: every
/// triangle strictly hyperbolic and no `(2,2,2,2)`-square as a full
/// subgraph.
///
/// Refuses input that is not two-dimensional; the characterisation is
/// stated for that case only.
pub fn is_hyperbolic_type(g: &DefiningGraph) -> Result<bool, ScopeError> {
    let census = triangle_census(g);
    if census.iter().any(|t| t.is_spherical()) {
        return Err(ScopeError::new("is_hyperbolic_type", "two-dimensional"));
    }
    Ok(census.iter().all(|t| !t.is_euclidean()) && full_2222_squares(g).is_empty())
}

/// All class predicates in one pass.
pub fn classify(g: &DefiningGraph) -> ClassReport {
    let census = triangle_census(g);
    let two_dimensional = census.iter().all(|t| !t.is_spherical());
    let squares = full_2222_squares(g);
    let square_names: Vec<[String; 4]> = squares
        .iter()
        .map(|s| {
            let names = s.names(g);
            [names[0].to_owned(), names[1].to_owned(), names[2].to_owned(), names[3].to_owned()]
        })
        .collect();
    let euclidean: Vec<TriangleEntry> =
        census.iter().filter(|t| t.is_euclidean()).cloned().collect();
    let spherical: Vec<TriangleEntry> =
        census.iter().filter(|t| t.is_spherical()).cloned().collect();
    let hyperbolic_type = if two_dimensional {
        Some(euclidean.is_empty() && squares.is_empty())
    } else {
        None
    };
    ClassReport {
        right_angled: g.is_right_angled(),
        large_type: g.is_large_type(),
        two_dimensional,
        hyperbolic_type,
        euclidean_triangles: euclidean,
        spherical_triangles: spherical,
        full_2222_squares: square_names,
        has_leaf: !g.leaves().is_empty(),
        connected: g.is_connected(),
    }
}
