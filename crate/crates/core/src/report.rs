//! Per-graph invariant reports and the pairwise distinguisher.
//!
//! Every reported field carries a scope tag: PROVEN, with the fact it rests
//! on, or INFORMATIONAL for quantities that are not known to be isomorphism
//! invariants (vertex and edge counts in particular remain open questions
//! and are never used to distinguish groups).

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::classify::{classify, ClassReport};
use crate::graph::{DefiningGraph, ExtendedLength};
use crate::tree_cycles::{lower_bound_report, LowerBoundReport};

/// Fact names quoted in verdicts and report tags.
pub mod facts {
    pub const COMPONENTS: &str =
        "the number of free factors (connected components) is an isomorphism invariant";
    pub const GIRTH: &str = "the girth of the defining graph is an isomorphism invariant";
    pub const RIGHT_ANGLED: &str = "being right-angled is an isomorphism invariant (Baudisch)";
    pub const TWO_DIMENSIONAL: &str = "being two-dimensional is an isomorphism invariant";
    pub const RANK: &str = "the abelianization rank is an isomorphism invariant";
    pub const SEPARATING: &str =
        "having a separating vertex is an isomorphism invariant (Jones-Mangioni-Sartori)";
    pub const LARGE_TYPE: &str = "being large type is an isomorphism invariant (Martin-Vaskou)";
    pub const LABEL_SETS: &str =
        "isomorphic two-dimensional hyperbolic-type Artin groups have the same set of labels >= 3";
    pub const WEIGHTED_GIRTH: &str =
        "the weighted girth is an isomorphism invariant among two-dimensional hyperbolic-type Artin groups";
    pub const CYCLE_RIGIDITY: &str =
        "Artin groups on labelled cycles are isomorphically rigid";
    pub const COMMUTATION_GIRTH: &str =
        "for leafless two-dimensional hyperbolic-type graphs the weighted girth is the girth of the commutation graph";
    pub const TREE_CYCLE_BOUNDS: &str =
        "cycles of standard trees have length at least the girth, and weighted girth at least the weighted girth for triangle-free or hyperbolic-type graphs";
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "scope", rename_all = "UPPERCASE")]
pub enum Scope {
    Proven { fact: &'static str },
    Informational,
}

/// A value with its scope tag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tagged<T> {
    pub value: T,
    #[serde(flatten)]
    pub scope: Scope,
}

impl<T> Tagged<T> {
    fn proven(value: T, fact: &'static str) -> Self {
        Tagged { value, scope: Scope::Proven { fact } }
    }

    fn informational(value: T) -> Self {
        Tagged { value, scope: Scope::Informational }
    }
}

/// A field that only exists inside its theorem's hypotheses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Gated<T> {
    Value(Tagged<T>),
    Skipped { skipped: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleOut {
    pub vertices: [String; 3],
    pub labels: [u32; 3],
    pub reciprocal_sum: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReportOut {
    pub right_angled: Tagged<bool>,
    pub large_type: Tagged<bool>,
    pub two_dimensional: Tagged<bool>,
    pub hyperbolic_type: Tagged<Option<bool>>,
    pub euclidean_triangles: Vec<TriangleOut>,
    pub spherical_triangles: Vec<TriangleOut>,
    pub full_2222_squares: Vec<[String; 4]>,
    pub has_leaf: bool,
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBoundsOut {
    pub length_bound: ExtendedLength,
    pub wg_bound: Option<ExtendedLength>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wg_skip_reason: Option<String>,
}

/// The full invariant report of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    pub hash: String,
    pub component_count: Tagged<usize>,
    pub vertex_count: Tagged<usize>,
    pub edge_count: Tagged<usize>,
    pub girth: Tagged<ExtendedLength>,
    pub weighted_girth: Tagged<ExtendedLength>,
    pub abelianization_rank: Tagged<usize>,
    pub odd_class_count: Tagged<usize>,
    pub classification: ClassReportOut,
    pub leaf_count: Tagged<usize>,
    pub separating_vertex: Tagged<bool>,
    pub commutation_girth: Gated<ExtendedLength>,
    pub lower_bounds: Gated<LowerBoundsOut>,
}

fn class_report_out(class: &ClassReport) -> ClassReportOut {
    let triangle_out = |t: &crate::classify::TriangleEntry| TriangleOut {
        vertices: t.vertices.clone(),
        labels: t.labels,
        reciprocal_sum: t.sum.to_string(),
    };
    ClassReportOut {
        right_angled: Tagged::proven(class.right_angled, facts::RIGHT_ANGLED),
        large_type: Tagged::proven(class.large_type, facts::LARGE_TYPE),
        two_dimensional: Tagged::proven(class.two_dimensional, facts::TWO_DIMENSIONAL),
        hyperbolic_type: Tagged::informational(class.hyperbolic_type),
        euclidean_triangles: class.euclidean_triangles.iter().map(triangle_out).collect(),
        spherical_triangles: class.spherical_triangles.iter().map(triangle_out).collect(),
        full_2222_squares: class.full_2222_squares.clone(),
        has_leaf: class.has_leaf,
        connected: class.connected,
    }
}

/// Builds the deterministic report of one graph; `file` is carried through
/// for identification only.
pub fn report(g: &DefiningGraph, file: Option<&str>) -> InvariantReport {
    let class = classify(g);
    let two_dim_hyp = class.two_dimensional && class.hyperbolic_type == Some(true);
    let wg_scope = if two_dim_hyp {
        Tagged::proven(g.weighted_girth(), facts::WEIGHTED_GIRTH)
    } else {
        Tagged::informational(g.weighted_girth())
    };
    let commutation = match g.commutation_girth() {
        Ok(v) => Gated::Value(Tagged::proven(v, facts::COMMUTATION_GIRTH)),
        Err(e) => Gated::Skipped { skipped: e.hypothesis },
    };
    let lower_bounds = match lower_bound_report(g) {
        Ok(LowerBoundReport { length_bound, wg_bound, wg_skip_reason }) => Gated::Value(
            Tagged::proven(LowerBoundsOut { length_bound, wg_bound, wg_skip_reason }, facts::TREE_CYCLE_BOUNDS),
        ),
        Err(e) => Gated::Skipped { skipped: e.hypothesis },
    };
    let rank = g.abelianization_rank();
    InvariantReport {
        schema: 1,
        file: file.map(str::to_owned),
        hash: content_hash(g),
        component_count: Tagged::proven(g.component_count(), facts::COMPONENTS),
        vertex_count: Tagged::informational(g.n_vertices()),
        edge_count: Tagged::informational(g.n_edges()),
        girth: Tagged::proven(g.girth(), facts::GIRTH),
        weighted_girth: wg_scope,
        abelianization_rank: Tagged::proven(rank, facts::RANK),
        odd_class_count: Tagged::proven(rank, facts::RANK),
        classification: class_report_out(&class),
        leaf_count: Tagged::informational(g.leaves().len()),
        separating_vertex: Tagged::proven(separating_vertex_exists(g), facts::SEPARATING),
        commutation_girth: commutation,
        lower_bounds,
    }
}

/// SHA-256 of the canonical graph text.
pub fn content_hash(g: &DefiningGraph) -> String {
    let mut hasher = Sha256::new();
    hasher.update(g.canonical_text().as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Articulation-point detection (per component, OR-ed for disconnected
/// input).
pub fn separating_vertex_exists(g: &DefiningGraph) -> bool {
    let n = g.n_vertices();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0usize;
    let mut found = false;

    // Iterative Tarjan lowlink with an explicit stack.
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        let mut root_children = 0usize;
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (u, parent, ref mut next)) = stack.last_mut() {
            if *next < g.neighbors(u).len() {
                let v = g.neighbors(u)[*next];
                *next += 1;
                if v == parent {
                    continue;
                }
                if disc[v] == usize::MAX {
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, u, 0));
                } else {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if p != root && low[u] >= disc[p] {
                        found = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            found = true;
        }
    }
    found
}

/// One invariant skipped during comparison, with the unmet hypothesis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedInvariant {
    pub invariant: &'static str,
    pub unmet_hypothesis: &'static str,
}

/// Outcome of comparing two graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum ComparisonVerdict {
    /// Some proven invariant takes different values: the groups are not
    /// isomorphic.
    Distinguished {
        invariant: &'static str,
        left: String,
        right: String,
        fact: &'static str,
        agreeing: Vec<&'static str>,
    },
    /// Both inputs are labelled cycles and the cycles are isomorphic, so
    /// the groups are isomorphic.
    GroupsIsomorphic { witness: Vec<(String, String)> },
    /// Every applicable invariant agrees; nothing proven distinguishes the
    /// groups and no positive identification applies.
    Inconclusive {
        agreeing: Vec<&'static str>,
        skipped: Vec<SkippedInvariant>,
    },
}

/// Applies the proven invariants in fixed order — cheap and unconditional
/// first, hypothesis-gated later — and reports the first disagreement, a
/// labelled-cycle identification, or an inconclusive summary.
///
/// The label comparison uses *sets* of labels at least 3, the exact form
/// of the statement quoted in the verdict. A finer multiset version is
/// known for two-dimensional groups (Martin–Vaskou) but is deliberately
/// not enforced, so that every verdict stays quotable as printed.
pub fn compare(g: &DefiningGraph, h: &DefiningGraph) -> ComparisonVerdict {
    let mut agreeing: Vec<&'static str> = Vec::new();
    let mut skipped: Vec<SkippedInvariant> = Vec::new();

    macro_rules! check {
        ($name:expr, $fact:expr, $lv:expr, $rv:expr) => {{
            let (lv, rv) = ($lv, $rv);
            if lv != rv {
                return ComparisonVerdict::Distinguished {
                    invariant: $name,
                    left: format!("{}", lv),
                    right: format!("{}", rv),
                    fact: $fact,
                    agreeing,
                };
            }
            agreeing.push($name);
        }};
    }

    check!("component count", facts::COMPONENTS, g.component_count(), h.component_count());
    check!("girth", facts::GIRTH, g.girth(), h.girth());
    check!("right-angled", facts::RIGHT_ANGLED, g.is_right_angled(), h.is_right_angled());

    let g_class = classify(g);
    let h_class = classify(h);
    check!(
        "two-dimensional",
        facts::TWO_DIMENSIONAL,
        g_class.two_dimensional,
        h_class.two_dimensional
    );
    check!(
        "abelianization rank",
        facts::RANK,
        g.abelianization_rank(),
        h.abelianization_rank()
    );
    check!(
        "separating vertex",
        facts::SEPARATING,
        separating_vertex_exists(g),
        separating_vertex_exists(h)
    );
    check!("large type", facts::LARGE_TYPE, g.is_large_type(), h.is_large_type());

    let both_two_dim = g_class.two_dimensional && h_class.two_dimensional;
    let both_hyp = g_class.hyperbolic_type == Some(true) && h_class.hyperbolic_type == Some(true);
    if !both_two_dim {
        skipped.push(SkippedInvariant {
            invariant: "label set (>= 3)",
            unmet_hypothesis: "two-dimensional",
        });
        skipped.push(SkippedInvariant {
            invariant: "weighted girth",
            unmet_hypothesis: "two-dimensional",
        });
    } else if !both_hyp {
        skipped.push(SkippedInvariant {
            invariant: "label set (>= 3)",
            unmet_hypothesis: "hyperbolic type",
        });
        skipped.push(SkippedInvariant {
            invariant: "weighted girth",
            unmet_hypothesis: "hyperbolic type",
        });
    } else {
        check!(
            "label set (>= 3)",
            facts::LABEL_SETS,
            format!("{:?}", g.big_labels()),
            format!("{:?}", h.big_labels())
        );
        check!("weighted girth", facts::WEIGHTED_GIRTH, g.weighted_girth(), h.weighted_girth());
    }

    if g.is_cycle_graph() && h.is_cycle_graph() {
        match g.labelled_isomorphic(h) {
            Ok(Some(map)) => {
                let witness = map
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| (g.vertex_name(i).to_owned(), h.vertex_name(j).to_owned()))
                    .collect();
                return ComparisonVerdict::GroupsIsomorphic { witness };
            }
            Ok(None) => {
                return ComparisonVerdict::Distinguished {
                    invariant: "labelled cycle rigidity",
                    left: format!("cycle {:?}", g.cycle_labels().unwrap_or_default()),
                    right: format!("cycle {:?}", h.cycle_labels().unwrap_or_default()),
                    fact: facts::CYCLE_RIGIDITY,
                    agreeing,
                };
            }
            Err(_) => {
                skipped.push(SkippedInvariant {
                    invariant: "labelled cycle rigidity",
                    unmet_hypothesis: "within isomorphism search budget",
                });
            }
        }
    } else {
        skipped.push(SkippedInvariant {
            invariant: "labelled cycle rigidity",
            unmet_hypothesis: "labelled cycle",
        });
    }

    ComparisonVerdict::Inconclusive { agreeing, skipped }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separating_vertex_examples() {
        assert!(separating_vertex_exists(&DefiningGraph::path(3)));
        assert!(!separating_vertex_exists(&DefiningGraph::cycle(&[2; 5])));
        // Two triangles sharing a vertex.
        let bowtie = DefiningGraph::from_edges(&[
            ("a", "b", 3),
            ("b", "c", 3),
            ("c", "a", 3),
            ("c", "d", 3),
            ("d", "e", 3),
            ("e", "c", 3),
        ])
        .unwrap();
        assert!(separating_vertex_exists(&bowtie));
        // Isolated vertices and single edges have none.
        let mut dots = DefiningGraph::new();
        dots.add_vertex("x").unwrap();
        dots.add_vertex("y").unwrap();
        assert!(!separating_vertex_exists(&dots));
        assert!(!separating_vertex_exists(&DefiningGraph::path(2)));
    }

    #[test]
    fn report_c5() {
        let g = DefiningGraph::cycle(&[2; 5]);
        let r = report(&g, Some("c5.graph"));
        assert_eq!(r.schema, 1);
        assert_eq!(r.girth.value, ExtendedLength::Finite(5));
        assert_eq!(r.weighted_girth.value, ExtendedLength::Finite(5));
        assert!(matches!(r.weighted_girth.scope, Scope::Proven { .. }));
        assert_eq!(r.abelianization_rank.value, 5);
        assert!(r.classification.right_angled.value);
        assert_eq!(r.classification.hyperbolic_type.value, Some(true));
        assert!(matches!(r.commutation_girth, Gated::Value(_)));
    }

    #[test]
    fn report_euclidean_triangle_is_scope_limited() {
        let g = DefiningGraph::cycle(&[2, 4, 4]);
        let r = report(&g, None);
        assert_eq!(r.girth.value, ExtendedLength::Finite(3));
        assert_eq!(r.weighted_girth.value, ExtendedLength::Finite(5));
        assert!(matches!(r.weighted_girth.scope, Scope::Informational));
        assert_eq!(r.abelianization_rank.value, 3);
        assert!(matches!(r.commutation_girth, Gated::Skipped { .. }));
    }

    #[test]
    fn report_edgeless() {
        let mut g = DefiningGraph::new();
        for v in ["a", "b", "c"] {
            g.add_vertex(v).unwrap();
        }
        let r = report(&g, None);
        assert_eq!(r.component_count.value, 3);
        assert_eq!(r.girth.value, ExtendedLength::Infinite);
    }

    #[test]
    fn compare_detects_girth() {
        let g = DefiningGraph::cycle(&[2, 4, 4]);
        let h = DefiningGraph::cycle(&[2, 2, 2, 4]);
        match compare(&g, &h) {
            ComparisonVerdict::Distinguished { invariant, left, right, .. } => {
                assert_eq!(invariant, "girth");
                assert_eq!(left, "3");
                assert_eq!(right, "4");
            }
            other => panic!("expected girth distinction, got {other:?}"),
        }
    }

    #[test]
    fn compare_is_reflexively_silent() {
        for g in [
            DefiningGraph::cycle(&[2, 4, 4]),
            DefiningGraph::path(4),
            DefiningGraph::cycle(&[2, 3, 5]),
        ] {
            assert!(
                !matches!(compare(&g, &g), ComparisonVerdict::Distinguished { .. }),
                "self-comparison distinguished"
            );
        }
    }

    #[test]
    fn compare_identical_cycles_isomorphic() {
        let g = DefiningGraph::cycle(&[2, 3, 4, 3]);
        let h = DefiningGraph::cycle(&[3, 4, 3, 2]);
        assert!(matches!(compare(&g, &h), ComparisonVerdict::GroupsIsomorphic { .. }));
    }

    #[test]
    fn compare_cycle_rigidity() {
        let g = DefiningGraph::cycle(&[2, 2, 4, 4]);
        let h = DefiningGraph::cycle(&[2, 4, 2, 4]);
        match compare(&g, &h) {
            ComparisonVerdict::Distinguished { invariant, fact, agreeing, .. } => {
                assert_eq!(invariant, "labelled cycle rigidity");
                assert_eq!(fact, facts::CYCLE_RIGIDITY);
                assert!(agreeing.contains(&"girth"));
                assert!(agreeing.contains(&"weighted girth"));
            }
            other => panic!("expected rigidity distinction, got {other:?}"),
        }
    }

    #[test]
    fn compare_scope_discipline() {
        // A spherical triangle is not two-dimensional: weighted girth must
        // be skipped with the failed hypothesis named. A pendant edge keeps
        // the graph off the cycle-rigidity route.
        let mut g = DefiningGraph::cycle(&[2, 3, 5]);
        g.add_edge("u1", "hair", 2).unwrap();
        match compare(&g, &g) {
            ComparisonVerdict::Inconclusive { skipped, .. } => {
                let wg = skipped.iter().find(|s| s.invariant == "weighted girth").unwrap();
                assert_eq!(wg.unmet_hypothesis, "two-dimensional");
            }
            other => panic!("expected inconclusive, got {other:?}"),
        }
        // Euclidean triangles are two-dimensional but not hyperbolic type.
        let mut e = DefiningGraph::cycle(&[2, 4, 4]);
        e.add_edge("u1", "hair", 2).unwrap();
        match compare(&e, &e) {
            ComparisonVerdict::Inconclusive { skipped, .. } => {
                let wg = skipped.iter().find(|s| s.invariant == "weighted girth").unwrap();
                assert_eq!(wg.unmet_hypothesis, "hyperbolic type");
            }
            other => panic!("expected inconclusive, got {other:?}"),
        }
        // Identical cycle inputs take the rigidity route instead.
        let c = DefiningGraph::cycle(&[2, 3, 5]);
        assert!(matches!(compare(&c, &c), ComparisonVerdict::GroupsIsomorphic { .. }));
    }

    #[test]
    fn json_schema_field_present() {
        let g = DefiningGraph::cycle(&[2; 4]);
        let r = report(&g, None);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["schema"], 1);
        assert_eq!(json["girth"]["scope"], "PROVEN");
        let verdict = compare(&g, &g);
        let json = serde_json::to_value(&verdict).unwrap();
        assert!(json["verdict"].is_string());
    }
}
