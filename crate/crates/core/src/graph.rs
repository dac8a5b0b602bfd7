//! Labelled simplicial graphs and their elementary invariants.
//!
//! A [`DefiningGraph`] is a finite simplicial graph with an integer label
//! `m >= 2` on every edge. Vertices are identified by strings; internally
//! they are indexed in order of first appearance, which makes all outputs
//! deterministic.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

/// Maximum vertex count accepted by [`DefiningGraph::labelled_isomorphic`].
pub const ISO_BUDGET: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("{}self-loop at vertex '{vertex}'", fmt_line(.line))]
    SelfLoop { vertex: String, line: Option<usize> },
    #[error("{}duplicate edge {{{u}, {v}}}", fmt_line(.line))]
    DuplicateEdge { u: String, v: String, line: Option<usize> },
    #[error("{}edge {{{u}, {v}}} has label {m} < 2", fmt_line(.line))]
    LabelTooSmall { u: String, v: String, m: i64, line: Option<usize> },
    #[error("line {line}: {msg}")]
    BadDirective { line: usize, msg: String },
    #[error("{}invalid identifier '{id}' (must be nonempty, without whitespace or '#')", fmt_line(.line))]
    BadIdentifier { id: String, line: Option<usize> },
    #[error("edge references undeclared vertex '{id}'")]
    DanglingVertex { id: String },
    #[error("not a cycle subgraph: {msg}")]
    InvalidCycle { msg: String },
    #[error("graph with {size} vertices exceeds the isomorphism search budget of {budget}")]
    IsoBudgetExceeded { size: usize, budget: usize },
    #[error("invalid structured graph: {msg}")]
    BadStructured { msg: String },
}

fn fmt_line(line: &Option<usize>) -> String {
    match line {
        Some(n) => format!("line {n}: "),
        None => String::new(),
    }
}

/// A girth-like quantity: a finite length (at least 3) or infinity.
///
/// Forests have no cycle subgraphs, so their girth and weighted girth are
/// infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtendedLength {
    Finite(usize),
    Infinite,
}

impl ExtendedLength {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedLength::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            ExtendedLength::Finite(n) => Some(n),
            ExtendedLength::Infinite => None,
        }
    }
}

impl PartialOrd for ExtendedLength {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedLength {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use ExtendedLength::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtendedLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedLength::Finite(n) => write!(f, "{n}"),
            ExtendedLength::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for ExtendedLength {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedLength::Finite(n) => serializer.serialize_u64(*n as u64),
            ExtendedLength::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// A finite labelled simplicial graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningGraph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    /// Edge labels keyed by vertex-index pairs `(u, v)` with `u < v`.
    edges: BTreeMap<(usize, usize), u32>,
    adj: Vec<Vec<usize>>,
}

impl DefiningGraph {
    pub fn new() -> Self {
        DefiningGraph {
            vertices: Vec::new(),
            index: HashMap::new(),
            edges: BTreeMap::new(),
            adj: Vec::new(),
        }
    }

    fn check_identifier(id: &str, line: Option<usize>) -> Result<(), GraphError> {
        if id.is_empty() || id.contains(char::is_whitespace) || id.contains('#') {
            return Err(GraphError::BadIdentifier { id: id.to_owned(), line });
        }
        Ok(())
    }

    /// Declares a vertex (idempotent) and returns its index.
    pub fn add_vertex(&mut self, id: &str) -> Result<usize, GraphError> {
        Self::check_identifier(id, None)?;
        Ok(self.intern(id))
    }

    fn intern(&mut self, id: &str) -> usize {
        if let Some(&i) = self.index.get(id) {
            return i;
        }
        let i = self.vertices.len();
        self.vertices.push(id.to_owned());
        self.index.insert(id.to_owned(), i);
        self.adj.push(Vec::new());
        i
    }

    pub fn add_edge(&mut self, u: &str, v: &str, m: u32) -> Result<(), GraphError> {
        self.add_edge_at(u, v, m, None)
    }

    fn add_edge_at(&mut self, u: &str, v: &str, m: u32, line: Option<usize>) -> Result<(), GraphError> {
        Self::check_identifier(u, line)?;
        Self::check_identifier(v, line)?;
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u.to_owned(), line });
        }
        if m < 2 {
            return Err(GraphError::LabelTooSmall {
                u: u.to_owned(),
                v: v.to_owned(),
                m: m as i64,
                line,
            });
        }
        let iu = self.intern(u);
        let iv = self.intern(v);
        let key = (iu.min(iv), iu.max(iv));
        if self.edges.contains_key(&key) {
            return Err(GraphError::DuplicateEdge { u: u.to_owned(), v: v.to_owned(), line });
        }
        self.edges.insert(key, m);
        self.adj[iu].push(iv);
        self.adj[iv].push(iu);
        self.adj[iu].sort_unstable();
        self.adj[iv].sort_unstable();
        Ok(())
    }

    /// Parses the edge-list text format.
    ///
    /// One directive per line: `vertex <id>` or `edge <id> <id> <label>`.
    /// Everything after `#` is a comment; blank lines are ignored. Vertex
    /// order is the order of first appearance.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut g = DefiningGraph::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let stripped = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let tokens: Vec<&str> = stripped.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            match tokens[0] {
                "vertex" => {
                    if tokens.len() != 2 {
                        return Err(GraphError::BadDirective {
                            line,
                            msg: format!("expected 'vertex <id>', got '{}'", stripped.trim()),
                        });
                    }
                    Self::check_identifier(tokens[1], Some(line))?;
                    g.intern(tokens[1]);
                }
                "edge" => {
                    if tokens.len() != 4 {
                        return Err(GraphError::BadDirective {
                            line,
                            msg: format!("expected 'edge <id> <id> <label>', got '{}'", stripped.trim()),
                        });
                    }
                    let m: i64 = tokens[3].parse().map_err(|_| GraphError::BadDirective {
                        line,
                        msg: format!("label '{}' is not an integer", tokens[3]),
                    })?;
                    if m < 2 {
                        return Err(GraphError::LabelTooSmall {
                            u: tokens[1].to_owned(),
                            v: tokens[2].to_owned(),
                            m,
                            line: Some(line),
                        });
                    }
                    if m > u32::MAX as i64 {
                        return Err(GraphError::BadDirective {
                            line,
                            msg: format!("label '{}' is too large", tokens[3]),
                        });
                    }
                    g.add_edge_at(tokens[1], tokens[2], m as u32, Some(line))?;
                }
                other => {
                    return Err(GraphError::BadDirective {
                        line,
                        msg: format!("unknown directive '{other}'"),
                    });
                }
            }
        }
        Ok(g)
    }

    /// Builds a graph from `(u, v, m)` triples.
    pub fn from_edges(edges: &[(&str, &str, u32)]) -> Result<Self, GraphError> {
        let mut g = DefiningGraph::new();
        for &(u, v, m) in edges {
            g.add_edge(u, v, m)?;
        }
        Ok(g)
    }

    /// Parses the structured (JSON) graph format:
    /// `{"vertices": ["a", ...], "edges": [{"u": "a", "v": "b", "m": 3}, ...]}`.
    ///
    /// Unlike the text format, edges here must reference declared vertices.
    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        #[derive(Deserialize)]
        struct EdgeIn {
            u: String,
            v: String,
            m: i64,
        }
        #[derive(Deserialize)]
        struct GraphIn {
            vertices: Vec<String>,
            edges: Vec<EdgeIn>,
        }
        let parsed: GraphIn = serde_json::from_str(text)
            .map_err(|e| GraphError::BadStructured { msg: e.to_string() })?;
        let mut g = DefiningGraph::new();
        for v in &parsed.vertices {
            g.add_vertex(v)?;
        }
        for e in &parsed.edges {
            if !g.index.contains_key(&e.u) {
                return Err(GraphError::DanglingVertex { id: e.u.clone() });
            }
            if !g.index.contains_key(&e.v) {
                return Err(GraphError::DanglingVertex { id: e.v.clone() });
            }
            if e.m < 2 {
                return Err(GraphError::LabelTooSmall {
                    u: e.u.clone(),
                    v: e.v.clone(),
                    m: e.m,
                    line: None,
                });
            }
            g.add_edge(&e.u, &e.v, e.m as u32)?;
        }
        Ok(g)
    }

    /// The labelled cycle `C_n` on vertices `u1..un` with the given labels.
    ///
    /// Panics if fewer than three labels are given or a label is below 2.
    pub fn cycle(labels: &[u32]) -> Self {
        let n = labels.len();
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = DefiningGraph::new();
        for (i, &m) in labels.iter().enumerate() {
            let u = format!("u{}", i + 1);
            let v = format!("u{}", (i + 1) % n + 1);
            g.add_edge(&u, &v, m).expect("cycle labels must be >= 2");
        }
        g
    }

    /// The simplicial path `P_n` on `u1..un`, all labels 2.
    pub fn path(n: usize) -> Self {
        let mut g = DefiningGraph::new();
        if n == 0 {
            return g;
        }
        g.intern("u1");
        for i in 1..n {
            g.add_edge(&format!("u{i}"), &format!("u{}", i + 1), 2).unwrap();
        }
        g
    }

    /// The simplicial pod `S_k`: centre `u0` joined to `u1..uk`, all labels 2.
    pub fn pod(k: usize) -> Self {
        let mut g = DefiningGraph::new();
        g.intern("u0");
        for i in 1..=k {
            g.add_edge("u0", &format!("u{i}"), 2).unwrap();
        }
        g
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn label(&self, u: usize, v: usize) -> Option<u32> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.label(u, v).is_some()
    }

    /// Edges as `(u, v, m)` with `u < v`, in deterministic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    /// The set of labels `>= 3`, deduplicated and sorted.
    pub fn big_labels(&self) -> Vec<u32> {
        let mut labels: Vec<u32> = self.edges.values().copied().filter(|&m| m >= 3).collect();
        labels.sort_unstable();
        labels.dedup();
        labels
    }

    pub fn is_right_angled(&self) -> bool {
        self.edges.values().all(|&m| m == 2)
    }

    pub fn is_large_type(&self) -> bool {
        self.edges.values().all(|&m| m >= 3)
    }

    /// Connected components as sorted vertex-index lists, sorted by minimum.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n_vertices();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n_vertices()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Length of a shortest cycle subgraph; infinite for forests.
    ///
    /// BFS from every vertex; each non-tree edge closes a walk through the
    /// root whose length bounds the girth from above, and a root on a
    /// shortest cycle realises it exactly.
    pub fn girth(&self) -> ExtendedLength {
        let n = self.n_vertices();
        let mut best = usize::MAX;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            ExtendedLength::Infinite
        } else {
            ExtendedLength::Finite(best)
        }
    }

    /// Replaces every edge of label `>= 3` by a length-two path through a
    /// fresh vertex. All labels of the result are 2.
    ///
    /// The fresh vertex for `{u, v}` is named `<a>__<b>__mid` with `a <= b`
    /// the endpoint names in lexicographic order, so the output is
    /// deterministic and diffable.
    pub fn subdivide_big(&self) -> DefiningGraph {
        let mut g = DefiningGraph::new();
        for v in &self.vertices {
            g.intern(v);
        }
        for (u, v, m) in self.edges() {
            let (a, b) = {
                let un = self.vertex_name(u);
                let vn = self.vertex_name(v);
                if un <= vn {
                    (un, vn)
                } else {
                    (vn, un)
                }
            };
            if m >= 3 {
                let mid = format!("{a}__{b}__mid");
                g.add_edge(a, &mid, 2).expect("fresh midpoint vertex");
                g.add_edge(&mid, b, 2).expect("fresh midpoint vertex");
            } else {
                g.add_edge(a, b, 2).expect("copied edge");
            }
        }
        g
    }

    /// Girth of [`DefiningGraph::subdivide_big`]: the minimum over cycle
    /// subgraphs of length plus the number of edges of label `>= 3`.
    pub fn weighted_girth(&self) -> ExtendedLength {
        self.subdivide_big().girth()
    }

    /// Connected components of the subgraph of odd-labelled edges.
    ///
    /// Two generators are conjugate exactly when their vertices are joined
    /// by a path of odd labels, so these classes are conjugacy classes of
    /// standard generators.
    pub fn odd_classes(&self) -> OddPartition {
        let n = self.n_vertices();
        let mut dsu = Dsu::new(n);
        for (u, v, m) in self.edges() {
            if m % 2 == 1 {
                dsu.union(u, v);
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            blocks.entry(dsu.find(v)).or_default().push(v);
        }
        OddPartition { blocks: blocks.into_values().collect() }
    }

    /// Rank of the abelianization: the number of odd classes.
    pub fn abelianization_rank(&self) -> usize {
        self.odd_classes().class_count()
    }

    /// Weighted girth reported as the girth of the commutation graph.
    ///
    /// The identification requires a two-dimensional hyperbolic-type group
    /// with a leafless defining graph; outside that scope the call is
    /// refused rather than answered.
    pub fn commutation_girth(&self) -> Result<ExtendedLength, crate::classify::ScopeError> {
        let class = crate::classify::classify(self);
        if !class.two_dimensional {
            return Err(crate::classify::ScopeError::new("commutation_girth", "two-dimensional"));
        }
        if class.hyperbolic_type != Some(true) {
            return Err(crate::classify::ScopeError::new("commutation_girth", "hyperbolic type"));
        }
        if class.has_leaf {
            return Err(crate::classify::ScopeError::new("commutation_girth", "no leaves"));
        }
        Ok(self.weighted_girth())
    }

    /// A label-preserving isomorphism onto `other`, if one exists.
    ///
    /// Returns the lexicographically least mapping (as a vector indexed by
    /// this graph's vertices). Graphs above [`ISO_BUDGET`] vertices are
    /// refused rather than searched.
    pub fn labelled_isomorphic(&self, other: &DefiningGraph) -> Result<Option<Vec<usize>>, GraphError> {
        let n = self.n_vertices();
        if n > ISO_BUDGET || other.n_vertices() > ISO_BUDGET {
            return Err(GraphError::IsoBudgetExceeded {
                size: n.max(other.n_vertices()),
                budget: ISO_BUDGET,
            });
        }
        if n != other.n_vertices() || self.n_edges() != other.n_edges() {
            return Ok(None);
        }
        let mut self_labels: Vec<u32> = self.edges.values().copied().collect();
        let mut other_labels: Vec<u32> = other.edges.values().copied().collect();
        self_labels.sort_unstable();
        other_labels.sort_unstable();
        if self_labels != other_labels {
            return Ok(None);
        }

        // Per-vertex sorted label lists; preserved by any isomorphism.
        let signature = |g: &DefiningGraph, v: usize| -> Vec<u32> {
            let mut sig: Vec<u32> = g.adj[v].iter().map(|&w| g.label(v, w).unwrap()).collect();
            sig.sort_unstable();
            sig
        };
        let self_sigs: Vec<Vec<u32>> = (0..n).map(|v| signature(self, v)).collect();
        let other_sigs: Vec<Vec<u32>> = (0..n).map(|v| signature(other, v)).collect();

        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn search(
            g: &DefiningGraph,
            h: &DefiningGraph,
            g_sigs: &[Vec<u32>],
            h_sigs: &[Vec<u32>],
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            i: usize,
        ) -> bool {
            if i == g.n_vertices() {
                return true;
            }
            for c in 0..h.n_vertices() {
                if used[c] || g_sigs[i] != h_sigs[c] {
                    continue;
                }
                if (0..i).all(|j| g.label(i, j) == h.label(map[j], c)) {
                    map[i] = c;
                    used[c] = true;
                    if search(g, h, g_sigs, h_sigs, map, used, i + 1) {
                        return true;
                    }
                    map[i] = usize::MAX;
                    used[c] = false;
                }
            }
            false
        }
        if search(self, other, &self_sigs, &other_sigs, &mut map, &mut used, 0) {
            Ok(Some(map))
        } else {
            Ok(None)
        }
    }

    /// Whether the graph is a single cycle: connected, every degree 2.
    pub fn is_cycle_graph(&self) -> bool {
        self.n_vertices() >= 3
            && self.is_connected()
            && (0..self.n_vertices()).all(|v| self.degree(v) == 2)
    }

    /// For a cycle graph, the labels in traversal order starting at vertex
    /// 0 toward its smaller neighbour; `None` otherwise.
    pub fn cycle_labels(&self) -> Option<Vec<u32>> {
        if !self.is_cycle_graph() {
            return None;
        }
        let mut labels = Vec::with_capacity(self.n_vertices());
        let mut prev = 0usize;
        let mut cur = self.adj[0][0];
        labels.push(self.label(prev, cur).unwrap());
        while cur != 0 {
            let nbrs = self.neighbors(cur);
            let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
            labels.push(self.label(cur, next).unwrap());
            prev = cur;
            cur = next;
        }
        Some(labels)
    }

    /// All induced (chordless) cycles, optionally capped in length.
    ///
    /// Each cycle is reported once, with vertices in a canonical traversal
    /// order (least vertex first, lesser neighbour second).
    pub fn induced_cycles(&self, max_len: Option<usize>) -> Vec<CycleSubgraph> {
        let n = self.n_vertices();
        let cap = max_len.unwrap_or(n);
        let mut out = Vec::new();
        let mut path: Vec<usize> = Vec::new();
        let mut on_path = vec![false; n];
        for s in 0..n {
            path.push(s);
            on_path[s] = true;
            self.chordless_dfs(s, cap, &mut path, &mut on_path, &mut out);
            on_path[s] = false;
            path.pop();
        }
        out
    }

    fn chordless_dfs(
        &self,
        s: usize,
        cap: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<CycleSubgraph>,
    ) {
        let u = *path.last().unwrap();
        for &v in &self.adj[u] {
            if v <= s || on_path[v] {
                continue;
            }
            // A chordless extension may touch the path only at u, except for
            // the closing edge back to s.
            let mut adj_s = false;
            let mut chord = false;
            for &p in path.iter() {
                if p == u {
                    continue;
                }
                if self.has_edge(v, p) {
                    if p == s {
                        adj_s = true;
                    } else {
                        chord = true;
                        break;
                    }
                }
            }
            if chord {
                continue;
            }
            if adj_s {
                if path.len() >= 2 && path[1] < v {
                    let mut cyc = path.clone();
                    cyc.push(v);
                    out.push(CycleSubgraph { vertices: cyc });
                }
                continue;
            }
            if path.len() < cap {
                path.push(v);
                on_path[v] = true;
                self.chordless_dfs(s, cap, path, on_path, out);
                on_path[v] = false;
                path.pop();
            }
        }
    }

    /// Canonical text rendering: vertex directives in order of first
    /// appearance, then edges in index order. Used for content hashing.
    pub fn canonical_text(&self) -> String {
        let mut s = String::new();
        for v in &self.vertices {
            s.push_str(&format!("vertex {v}\n"));
        }
        for (u, v, m) in self.edges() {
            s.push_str(&format!("edge {} {} {}\n", self.vertex_name(u), self.vertex_name(v), m));
        }
        s
    }

    /// DOT export: undirected, labels as edge attributes, big edges bold.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph defining_graph {\n");
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\";\n"));
        }
        for (u, v, m) in self.edges() {
            let style = if m >= 3 { ", style=bold" } else { "" };
            s.push_str(&format!(
                "  \"{}\" -- \"{}\" [label={m}{style}];\n",
                self.vertex_name(u),
                self.vertex_name(v)
            ));
        }
        s.push_str("}\n");
        s
    }
}

impl Default for DefiningGraph {
    fn default() -> Self {
        Self::new()
    }
}

impl Serialize for DefiningGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct EdgeOut<'a> {
            u: &'a str,
            v: &'a str,
            m: u32,
        }
        let edges: Vec<EdgeOut> = self
            .edges()
            .map(|(u, v, m)| EdgeOut { u: self.vertex_name(u), v: self.vertex_name(v), m })
            .collect();
        let mut st = serializer.serialize_struct("DefiningGraph", 2)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

/// A cycle subgraph of a host graph, stored as vertex indices in cyclic
/// order. Consecutive vertices (cyclically) are edges of the host and all
/// vertices are distinct.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleSubgraph {
    vertices: Vec<usize>,
}

impl CycleSubgraph {
    pub fn new(host: &DefiningGraph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        let k = vertices.len();
        if k < 3 {
            return Err(GraphError::InvalidCycle { msg: format!("only {k} vertices, need at least 3") });
        }
        let mut seen = std::collections::HashSet::new();
        for &v in &vertices {
            if v >= host.n_vertices() {
                return Err(GraphError::InvalidCycle { msg: format!("vertex index {v} out of range") });
            }
            if !seen.insert(v) {
                return Err(GraphError::InvalidCycle {
                    msg: format!("vertex '{}' repeated", host.vertex_name(v)),
                });
            }
        }
        for i in 0..k {
            let u = vertices[i];
            let v = vertices[(i + 1) % k];
            if !host.has_edge(u, v) {
                return Err(GraphError::InvalidCycle {
                    msg: format!(
                        "consecutive pair {{{}, {}}} is not an edge",
                        host.vertex_name(u),
                        host.vertex_name(v)
                    ),
                });
            }
        }
        Ok(CycleSubgraph { vertices })
    }

    pub fn from_names(host: &DefiningGraph, names: &[&str]) -> Result<Self, GraphError> {
        let mut vertices = Vec::with_capacity(names.len());
        for name in names {
            match host.vertex_index(name) {
                Some(i) => vertices.push(i),
                None => {
                    return Err(GraphError::InvalidCycle { msg: format!("unknown vertex '{name}'") })
                }
            }
        }
        Self::new(host, vertices)
    }

    /// Number of vertices (equivalently, edges) of the cycle; always >= 3,
    /// so there is no `is_empty`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Labels of consecutive edges, aligned with the vertex order.
    pub fn edge_labels(&self, host: &DefiningGraph) -> Vec<u32> {
        let k = self.len();
        (0..k)
            .map(|i| host.label(self.vertices[i], self.vertices[(i + 1) % k]).expect("validated cycle edge"))
            .collect()
    }

    pub fn names<'g>(&self, host: &'g DefiningGraph) -> Vec<&'g str> {
        self.vertices.iter().map(|&v| host.vertex_name(v)).collect()
    }

    /// Number of edges of label `>= 3`.
    pub fn big_edge_count(&self, host: &DefiningGraph) -> usize {
        self.edge_labels(host).iter().filter(|&&m| m >= 3).count()
    }

    /// Length plus the number of big edges.
    pub fn weighted_girth(&self, host: &DefiningGraph) -> usize {
        self.len() + self.big_edge_count(host)
    }
}

/// Partition of the vertex set into odd-connectivity classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddPartition {
    blocks: Vec<Vec<usize>>,
}

impl OddPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn class_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&v))
    }

    pub fn same_class(&self, u: usize, v: usize) -> bool {
        self.class_of(u).is_some() && self.class_of(u) == self.class_of(v)
    }
}

struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let mut ra = self.find(a);
        let mut rb = self.find(b);
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}
