//! Exact word calculus for right-angled Artin groups and finite balls of
//! the extension graph.
//!
//! In a RAAG, every group element has a unique shortest word up to swapping
//! adjacent commuting letters. The normal form here is the shortest word,
//! canonicalized as the lexicographically least shuffle, so structural
//! equality of normal forms is group equality. On top of that, the
//! extension graph — vertices are conjugates of generators, edges are
//! commuting pairs — is materialized in finite balls: an extension vertex
//! `v^g` is stored as `v` together with the minimal right-coset
//! representative of `g` modulo the centralizer `<star(v)>`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::graph::DefiningGraph;

/// Default ceiling on extension-ball vertex counts.
pub const DEFAULT_BALL_BUDGET: usize = 20_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RaagError {
    #[error("host is not right-angled: edge {{{u}, {v}}} has label {m}")]
    NotRightAngled { u: String, v: String, m: u32 },
    #[error("host is not triangle free: {{{a}, {b}, {c}}} spans a triangle")]
    NotTriangleFree { a: String, b: String, c: String },
    #[error("unknown generator '{name}'")]
    UnknownGenerator { name: String },
    #[error("word belongs to a different host graph")]
    HostMismatch,
    #[error("ball budget exceeded: reached {reached} vertices with the budget at {budget}")]
    BudgetExceeded { reached: usize, budget: usize },
    #[error("cannot parse word: {msg}")]
    BadWord { msg: String },
}

/// One letter of a group word: a generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    fn inverted(self) -> Letter {
        Letter { gen: self.gen, inverse: !self.inverse }
    }
}

/// A word over the generators of a right-angled host.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RaagWord {
    letters: Vec<Letter>,
    fingerprint: u64,
}

impl RaagWord {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// A word in canonical reduced shuffle form. Two words represent the same
/// group element exactly when their normal forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalForm(RaagWord);

impl NormalForm {
    pub fn word(&self) -> &RaagWord {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A right-angled Artin group: a validated all-label-2 defining graph.
#[derive(Debug, Clone)]
pub struct Raag {
    graph: DefiningGraph,
    fingerprint: u64,
    /// Letter comparison key: generators sorted by name, then sign.
    name_rank: Vec<usize>,
}

impl Raag {
    pub fn new(graph: DefiningGraph) -> Result<Self, RaagError> {
        for (u, v, m) in graph.edges() {
            if m != 2 {
                return Err(RaagError::NotRightAngled {
                    u: graph.vertex_name(u).to_owned(),
                    v: graph.vertex_name(v).to_owned(),
                    m,
                });
            }
        }
        let fingerprint = fingerprint(&graph.canonical_text());
        let mut order: Vec<usize> = (0..graph.n_vertices()).collect();
        order.sort_by(|&a, &b| graph.vertex_name(a).cmp(graph.vertex_name(b)));
        let mut name_rank = vec![0usize; graph.n_vertices()];
        for (rank, &v) in order.iter().enumerate() {
            name_rank[v] = rank;
        }
        Ok(Raag { graph, fingerprint, name_rank })
    }

    pub fn graph(&self) -> &DefiningGraph {
        &self.graph
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.graph.has_edge(a, b)
    }

    fn letter_key(&self, l: Letter) -> (usize, bool) {
        (self.name_rank[l.gen], l.inverse)
    }

    /// Builds a word from `(generator, inverse)` pairs.
    pub fn word_from_pairs(&self, pairs: &[(&str, bool)]) -> Result<RaagWord, RaagError> {
        let mut letters = Vec::with_capacity(pairs.len());
        for &(name, inverse) in pairs {
            let gen = self
                .graph
                .vertex_index(name)
                .ok_or_else(|| RaagError::UnknownGenerator { name: name.to_owned() })?;
            letters.push(Letter { gen, inverse });
        }
        Ok(RaagWord { letters, fingerprint: self.fingerprint })
    }

    /// Parses a whitespace-separated word; `a^-1` is the inverse of `a`.
    pub fn parse_word(&self, text: &str) -> Result<RaagWord, RaagError> {
        let mut pairs = Vec::new();
        for token in text.split_whitespace() {
            if let Some(stripped) = token.strip_suffix("^-1") {
                pairs.push((stripped, true));
            } else if token.contains('^') {
                return Err(RaagError::BadWord {
                    msg: format!("unsupported exponent in '{token}' (only ^-1)"),
                });
            } else {
                pairs.push((token, false));
            }
        }
        self.word_from_pairs(&pairs)
    }

    fn check_host(&self, w: &RaagWord) -> Result<(), RaagError> {
        if w.fingerprint != self.fingerprint {
            return Err(RaagError::HostMismatch);
        }
        for l in &w.letters {
            if l.gen >= self.graph.n_vertices() {
                return Err(RaagError::HostMismatch);
            }
        }
        Ok(())
    }

    pub fn concat(&self, a: &RaagWord, b: &RaagWord) -> RaagWord {
        let mut letters = a.letters.clone();
        letters.extend_from_slice(&b.letters);
        RaagWord { letters, fingerprint: self.fingerprint }
    }

    pub fn inverse(&self, w: &RaagWord) -> RaagWord {
        let letters = w.letters.iter().rev().map(|l| l.inverted()).collect();
        RaagWord { letters, fingerprint: self.fingerprint }
    }

    /// Fully reduces a letter sequence: repeatedly cancels pairs `x ... x^-1`
    /// whose in-between letters all commute with `x`.
    fn reduce(&self, mut letters: Vec<Letter>) -> Vec<Letter> {
        'outer: loop {
            for i in 0..letters.len() {
                let li = letters[i];
                for j in (i + 1)..letters.len() {
                    let lj = letters[j];
                    if lj.gen == li.gen {
                        if lj.inverse != li.inverse {
                            letters.remove(j);
                            letters.remove(i);
                            continue 'outer;
                        }
                        // Same generator, same sign: nothing can travel past.
                        break;
                    }
                    if !self.adjacent(li.gen, lj.gen) {
                        break;
                    }
                }
            }
            return letters;
        }
    }

    /// The lexicographically least shuffle of a reduced word: repeatedly
    /// emit the least letter that can commute to the front.
    fn lex_least_shuffle(&self, mut letters: Vec<Letter>) -> Vec<Letter> {
        let mut out = Vec::with_capacity(letters.len());
        while !letters.is_empty() {
            let mut best: Option<(usize, (usize, bool))> = None;
            for i in 0..letters.len() {
                if !(0..i).all(|j| self.adjacent(letters[j].gen, letters[i].gen)) {
                    continue;
                }
                let key = self.letter_key(letters[i]);
                if best.is_none_or(|(_, bk)| key < bk) {
                    best = Some((i, key));
                }
            }
            let (i, _) = best.expect("some letter is always available");
            out.push(letters.remove(i));
        }
        out
    }

    /// Canonical reduced shuffle form. Idempotent, and equal for two words
    /// exactly when they represent the same group element.
    pub fn normal_form(&self, w: &RaagWord) -> Result<NormalForm, RaagError> {
        self.check_host(w)?;
        let reduced = self.reduce(w.letters.clone());
        let canonical = self.lex_least_shuffle(reduced);
        Ok(NormalForm(RaagWord { letters: canonical, fingerprint: self.fingerprint }))
    }

    /// Whether two words commute as group elements: the normal form of the
    /// commutator `w1 w2 w1^-1 w2^-1` is empty.
    pub fn commutes(&self, w1: &RaagWord, w2: &RaagWord) -> Result<bool, RaagError> {
        self.check_host(w1)?;
        self.check_host(w2)?;
        let commutator = self.concat(
            &self.concat(w1, w2),
            &self.concat(&self.inverse(w1), &self.inverse(w2)),
        );
        Ok(self.normal_form(&commutator)?.is_identity())
    }

    /// Renders a word using generator names.
    pub fn render(&self, w: &RaagWord) -> String {
        if w.is_empty() {
            return "1".to_owned();
        }
        w.letters
            .iter()
            .map(|l| {
                let name = self.graph.vertex_name(l.gen);
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.to_owned()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Minimal right-coset representative of `<star(base)>·word`: strips
    /// every front-available letter whose generator lies in the star of
    /// `base`, then canonicalizes the remainder.
    fn canonical_conjugator(&self, base: usize, word: &RaagWord) -> RaagWord {
        let mut letters = self.reduce(word.letters.clone());
        let in_star =
            |gen: usize| gen == base || self.adjacent(gen, base);
        'strip: loop {
            for i in 0..letters.len() {
                if in_star(letters[i].gen)
                    && (0..i).all(|j| self.adjacent(letters[j].gen, letters[i].gen))
                {
                    letters.remove(i);
                    continue 'strip;
                }
            }
            break;
        }
        let canonical = self.lex_least_shuffle(self.reduce(letters));
        RaagWord { letters: canonical, fingerprint: self.fingerprint }
    }

    /// The extension-graph vertex `base^conjugator` with the conjugator
    /// put into canonical minimal-coset form, so two calls yield equal
    /// vertices exactly when the conjugates are equal group elements.
    pub fn ext_vertex(&self, base: &str, conjugator: &RaagWord) -> Result<ExtVertex, RaagError> {
        self.check_host(conjugator)?;
        let base = self
            .graph
            .vertex_index(base)
            .ok_or_else(|| RaagError::UnknownGenerator { name: base.to_owned() })?;
        Ok(ExtVertex { base, conjugator: self.canonical_conjugator(base, conjugator) })
    }

    /// The group element `base^conjugator` as a reduced word.
    pub fn conjugate_word(&self, v: &ExtVertex) -> RaagWord {
        let base = RaagWord {
            letters: vec![Letter { gen: v.base, inverse: false }],
            fingerprint: self.fingerprint,
        };
        let conj = self.concat(&self.concat(&self.inverse(&v.conjugator), &base), &v.conjugator);
        let reduced = self.reduce(conj.letters);
        RaagWord { letters: reduced, fingerprint: self.fingerprint }
    }

    /// The ball of the extension graph of radius `r` in conjugator length,
    /// with the default vertex budget.
    pub fn ext_ball(&self, r: usize) -> Result<ExtBall, RaagError> {
        self.ext_ball_with_budget(r, DEFAULT_BALL_BUDGET)
    }

    /// Vertices are all `base^conjugator` with canonical conjugator length
    /// at most `r`; edges are commuting pairs. Construction refuses to grow
    /// past `budget` vertices.
    pub fn ext_ball_with_budget(&self, r: usize, budget: usize) -> Result<ExtBall, RaagError> {
        let n = self.graph.n_vertices();
        let mut verts: BTreeSet<(usize, Vec<Letter>)> = BTreeSet::new();
        for base in 0..n {
            // Breadth-first over canonical representatives: every canonical
            // representative of length l+1 is canonicalize(rep · letter) for
            // some canonical representative of length l.
            let mut level: BTreeSet<Vec<Letter>> = BTreeSet::new();
            let empty = RaagWord { letters: Vec::new(), fingerprint: self.fingerprint };
            level.insert(self.canonical_conjugator(base, &empty).letters);
            for rep in &level {
                if verts.insert((base, rep.clone())) && verts.len() > budget {
                    return Err(RaagError::BudgetExceeded { reached: verts.len(), budget });
                }
            }
            for _ in 0..r {
                let mut next: BTreeSet<Vec<Letter>> = BTreeSet::new();
                for rep in &level {
                    for gen in 0..n {
                        for inverse in [false, true] {
                            let mut letters = rep.clone();
                            letters.push(Letter { gen, inverse });
                            let word = RaagWord { letters, fingerprint: self.fingerprint };
                            let canon = self.canonical_conjugator(base, &word);
                            if canon.letters.len() == rep.len() + 1 {
                                next.insert(canon.letters);
                            }
                        }
                    }
                }
                for rep in &next {
                    if verts.insert((base, rep.clone())) && verts.len() > budget {
                        return Err(RaagError::BudgetExceeded { reached: verts.len(), budget });
                    }
                }
                level = next;
            }
        }
        let vertices: Vec<ExtVertex> = verts
            .into_iter()
            .map(|(base, letters)| ExtVertex {
                base,
                conjugator: RaagWord { letters, fingerprint: self.fingerprint },
            })
            .collect();
        let elements: Vec<RaagWord> = vertices.iter().map(|v| self.conjugate_word(v)).collect();
        let mut edges = BTreeSet::new();
        for i in 0..vertices.len() {
            for j in (i + 1)..vertices.len() {
                if self.commutes(&elements[i], &elements[j])? {
                    edges.insert((i, j));
                }
            }
        }
        Ok(ExtBall { host: self.graph.clone(), radius: r, vertices, edges })
    }

    /// Certifies an embedding of the RAAG of `pattern` into this group by
    /// finding the pattern as an induced subgraph of the radius-`r`
    /// extension ball. `None` means not found at this radius; it is a
    /// one-sided answer, not a non-embeddability proof.
    ///
    /// The host must be triangle free for the induced-subgraph criterion to
    /// characterize embeddings.
    pub fn certify_embedding(
        &self,
        pattern: &DefiningGraph,
        r: usize,
        budget: usize,
    ) -> Result<Option<Vec<ExtVertex>>, RaagError> {
        if let Some(t) = crate::classify::triangle_census(&self.graph).into_iter().next() {
            let [a, b, c] = t.vertices;
            return Err(RaagError::NotTriangleFree { a, b, c });
        }
        let ball = self.ext_ball_with_budget(r, budget)?;
        Ok(find_induced(pattern, &ball).map(|injection| {
            injection.into_iter().map(|i| ball.vertices[i].clone()).collect()
        }))
    }
}

fn fingerprint(text: &str) -> u64 {
    // FNV-1a; only used to catch words crossing between hosts.
    let mut hash: u64 = 0xcbf29ce484222325;
    for byte in text.bytes() {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

/// A vertex of the extension graph: a conjugate `base^conjugator` of a
/// generator, with the conjugator in canonical minimal-coset form so that
/// structural equality is group equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtVertex {
    pub base: usize,
    pub conjugator: RaagWord,
}

/// A finite ball of the extension graph. Vertices are sorted, so the
/// order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtBall {
    pub host: DefiningGraph,
    pub radius: usize,
    pub vertices: Vec<ExtVertex>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl ExtBall {
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == i || b == i).count()
    }

    /// The sub-ball of vertices whose conjugator length is at most `r`.
    /// Vertex order and edges are induced.
    pub fn restrict(&self, r: usize) -> ExtBall {
        let keep: Vec<usize> = (0..self.vertices.len())
            .filter(|&i| self.vertices[i].conjugator.len() <= r)
            .collect();
        let remap: BTreeMap<usize, usize> =
            keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let vertices = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(a, b)| match (remap.get(&a), remap.get(&b)) {
                (Some(&x), Some(&y)) => Some((x.min(y), x.max(y))),
                _ => None,
            })
            .collect();
        ExtBall { host: self.host.clone(), radius: r, vertices, edges }
    }

    /// Human-readable vertex description.
    pub fn describe(&self, i: usize) -> String {
        let v = &self.vertices[i];
        let base = self.host.vertex_name(v.base);
        if v.conjugator.is_empty() {
            base.to_owned()
        } else {
            let rendered: Vec<String> = v
                .conjugator
                .letters()
                .iter()
                .map(|l| {
                    let name = self.host.vertex_name(l.gen);
                    if l.inverse {
                        format!("{name}^-1")
                    } else {
                        name.to_owned()
                    }
                })
                .collect();
            format!("{base}^({})", rendered.join(" "))
        }
    }

    /// DOT export of the ball graph.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph extension_ball {\n");
        for i in 0..self.vertices.len() {
            s.push_str(&format!("  v{i} [label=\"{}\"];\n", self.describe(i)));
        }
        for &(a, b) in &self.edges {
            s.push_str(&format!("  v{a} -- v{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Display for ExtVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}^(len {})", self.base, self.conjugator.len())
    }
}

/// Finds the pattern (labels ignored) as an induced subgraph of the ball:
/// edges and non-edges of the pattern must both be preserved. Returns the
/// first injection in deterministic search order.
pub fn find_induced(pattern: &DefiningGraph, ball: &ExtBall) -> Option<Vec<usize>> {
    let pn = pattern.n_vertices();
    if pn > ball.n_vertices() {
        return None;
    }
    let degrees: Vec<usize> = (0..ball.n_vertices()).map(|i| ball.degree(i)).collect();
    let mut map = vec![usize::MAX; pn];
    let mut used = vec![false; ball.n_vertices()];
    fn search(
        pattern: &DefiningGraph,
        ball: &ExtBall,
        degrees: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        i: usize,
    ) -> bool {
        if i == pattern.n_vertices() {
            return true;
        }
        for c in 0..ball.n_vertices() {
            if used[c] || degrees[c] < pattern.degree(i) {
                continue;
            }
            let consistent = (0..i).all(|j| pattern.has_edge(i, j) == ball.has_edge(map[j], c));
            if consistent {
                map[i] = c;
                used[c] = true;
                if search(pattern, ball, degrees, map, used, i + 1) {
                    return true;
                }
                map[i] = usize::MAX;
                used[c] = false;
            }
        }
        false
    }
    if search(pattern, ball, &degrees, &mut map, &mut used, 0) {
        Some(map)
    } else {
        None
    }
}
