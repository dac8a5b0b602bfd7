//! Exact curvature ledgers for disc diagrams.
//!
//! Angles are stored as rational multiples of π ([`AngleQ`]); curvature of a
//! face with `n` sides is `(2 - n)π` plus its corner angles, curvature of a
//! vertex is `π` (boundary) or `2π` (interior) minus its corner angles, and
//! the combinatorial Gauss–Bonnet theorem says the grand total of a disc
//! diagram is exactly `2π`. The residual reported here is the deviation from
//! that identity, computed with zero rounding.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::ScopeError;
use crate::graph::{CycleSubgraph, DefiningGraph, ExtendedLength};

/// An exact rational `q`, read as the angle (or curvature) `q·π`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AngleQ(BigRational);

impl AngleQ {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        AngleQ(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        AngleQ(BigRational::from(BigInt::from(n)))
    }

    pub fn from_ratio(r: BigRational) -> Self {
        AngleQ(r)
    }

    pub fn zero() -> Self {
        AngleQ(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

impl Add for AngleQ {
    type Output = AngleQ;
    fn add(self, rhs: AngleQ) -> AngleQ {
        AngleQ(self.0 + rhs.0)
    }
}

impl Add<&AngleQ> for AngleQ {
    type Output = AngleQ;
    fn add(self, rhs: &AngleQ) -> AngleQ {
        AngleQ(self.0 + &rhs.0)
    }
}

impl Sub for AngleQ {
    type Output = AngleQ;
    fn sub(self, rhs: AngleQ) -> AngleQ {
        AngleQ(self.0 - rhs.0)
    }
}

impl Neg for AngleQ {
    type Output = AngleQ;
    fn neg(self) -> AngleQ {
        AngleQ(-self.0)
    }
}

impl AddAssign for AngleQ {
    fn add_assign(&mut self, rhs: AngleQ) {
        self.0 += rhs.0;
    }
}

impl std::iter::Sum for AngleQ {
    fn sum<I: Iterator<Item = AngleQ>>(iter: I) -> AngleQ {
        iter.fold(AngleQ::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for AngleQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for AngleQ {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("edge label {m} < 2")]
    LabelTooSmall { m: i64 },
    #[error("duplicate vertex id '{id}'")]
    DuplicateVertex { id: String },
    #[error("corner references unknown vertex '{id}'")]
    UnknownVertex { id: String },
    #[error("face {face} has {n} corners; a polygon needs at least 3")]
    FaceTooSmall { face: usize, n: usize },
    #[error("face {face} repeats vertex '{id}'")]
    RepeatedFaceVertex { face: usize, id: String },
    #[error("vertex '{id}' is of type 2 and needs a label >= 2")]
    MissingLabel { id: String },
    #[error("vertex '{id}' is of type {vtype} and must not carry a label")]
    UnexpectedLabel { id: String, vtype: u8 },
    #[error("corner at '{id}' has angle {q} outside [0, 2]")]
    AngleOutOfRange { id: String, q: String },
    #[error("vertex '{id}' belongs to no face")]
    CornerlessVertex { id: String },
    #[error("edge {{{u}, {v}}} lies in {count} faces; a disc allows 1 or 2")]
    EdgeIncidence { u: String, v: String, count: usize },
    #[error("Euler characteristic V - E + F = {chi}, expected 1")]
    EulerMismatch { chi: i64 },
    #[error("boundary edges do not form a single cycle")]
    BoundaryNotCycle,
    #[error("vertex '{id}' is declared {declared} but lies on the {actual}")]
    BoundaryMismatch { id: String, declared: &'static str, actual: &'static str },
    #[error("diagram is not connected")]
    Disconnected,
    #[error("invalid diagram JSON: {msg}")]
    BadJson { msg: String },
    #[error("index {index} out of range for {what}")]
    BadIndex { what: &'static str, index: usize },
}

/// Vertex type in the Deligne complex: 0 (trivial coset), 1 (generator
/// coset), 2 (dihedral coset, labelled).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexType(pub u8);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramVertex {
    pub id: String,
    pub vtype: VertexType,
    pub label: Option<u32>,
    pub boundary: bool,
}

/// One corner of a face: a vertex together with the angle `q·π` there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corner {
    pub vertex: usize,
    pub angle: AngleQ,
}

/// A two-dimensional polygonal complex embedded in a disc, with per-corner
/// angles. Faces are cyclic corner sequences; edges are implied by
/// consecutive corners.
///
/// Construction validates the disc structure: Euler characteristic
/// `V - E + F = 1`, every edge on one or two faces, and the free edges
/// forming a single cycle through exactly the declared boundary vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscDiagram {
    vertices: Vec<DiagramVertex>,
    faces: Vec<Vec<Corner>>,
}

impl DiscDiagram {
    pub fn new(vertices: Vec<DiagramVertex>, faces: Vec<Vec<Corner>>) -> Result<Self, DiagramError> {
        let d = DiscDiagram { vertices, faces };
        d.validate()?;
        Ok(d)
    }

    pub fn vertices(&self) -> &[DiagramVertex] {
        &self.vertices
    }

    pub fn faces(&self) -> &[Vec<Corner>] {
        &self.faces
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let mut ids = std::collections::HashSet::new();
        for v in &self.vertices {
            if !ids.insert(v.id.as_str()) {
                return Err(DiagramError::DuplicateVertex { id: v.id.clone() });
            }
            match (v.vtype.0, v.label) {
                (2, None) => return Err(DiagramError::MissingLabel { id: v.id.clone() }),
                (2, Some(m)) if m < 2 => {
                    return Err(DiagramError::LabelTooSmall { m: m as i64 })
                }
                (t, Some(_)) if t != 2 => {
                    return Err(DiagramError::UnexpectedLabel { id: v.id.clone(), vtype: t })
                }
                _ => {}
            }
        }

        let two = BigRational::from(BigInt::from(2));
        let mut corner_count = vec![0usize; self.vertices.len()];
        for (fi, face) in self.faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(DiagramError::FaceTooSmall { face: fi, n: face.len() });
            }
            let mut face_verts = std::collections::HashSet::new();
            for corner in face {
                if corner.vertex >= self.vertices.len() {
                    return Err(DiagramError::BadIndex { what: "corner vertex", index: corner.vertex });
                }
                let id = &self.vertices[corner.vertex].id;
                if !face_verts.insert(corner.vertex) {
                    return Err(DiagramError::RepeatedFaceVertex { face: fi, id: id.clone() });
                }
                if corner.angle.as_ratio().is_negative() || corner.angle.as_ratio() > &two {
                    return Err(DiagramError::AngleOutOfRange {
                        id: id.clone(),
                        q: corner.angle.to_string(),
                    });
                }
                corner_count[corner.vertex] += 1;
            }
        }
        for (v, &c) in corner_count.iter().enumerate() {
            if c == 0 {
                return Err(DiagramError::CornerlessVertex { id: self.vertices[v].id.clone() });
            }
        }

        // Edge incidences: every edge on one or two faces.
        let incidences = self.edge_incidences();
        for (&(u, v), &count) in &incidences {
            if count > 2 {
                return Err(DiagramError::EdgeIncidence {
                    u: self.vertices[u].id.clone(),
                    v: self.vertices[v].id.clone(),
                    count,
                });
            }
        }

        let chi = self.vertices.len() as i64 - incidences.len() as i64 + self.faces.len() as i64;
        if chi != 1 {
            return Err(DiagramError::EulerMismatch { chi });
        }

        // Free edges must form one cycle covering the declared boundary.
        let mut boundary_adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (&(u, v), &count) in &incidences {
            if count == 1 {
                boundary_adj.entry(u).or_default().push(v);
                boundary_adj.entry(v).or_default().push(u);
            }
        }
        for (&v, nbrs) in &boundary_adj {
            if nbrs.len() != 2 {
                return Err(DiagramError::BoundaryNotCycle);
            }
            if !self.vertices[v].boundary {
                return Err(DiagramError::BoundaryMismatch {
                    id: self.vertices[v].id.clone(),
                    declared: "interior",
                    actual: "boundary",
                });
            }
        }
        for (vi, v) in self.vertices.iter().enumerate() {
            if v.boundary && !boundary_adj.contains_key(&vi) {
                return Err(DiagramError::BoundaryMismatch {
                    id: v.id.clone(),
                    declared: "boundary",
                    actual: "interior",
                });
            }
        }
        if let Some((&start, _)) = boundary_adj.iter().next() {
            // Walk the 2-regular boundary graph; one cycle must cover it.
            let mut seen = std::collections::HashSet::from([start]);
            let mut prev = start;
            let mut cur = boundary_adj[&start][0];
            while cur != start {
                seen.insert(cur);
                let nbrs = &boundary_adj[&cur];
                let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
                prev = cur;
                cur = next;
            }
            if seen.len() != boundary_adj.len() {
                return Err(DiagramError::BoundaryNotCycle);
            }
        } else if self.vertices.iter().any(|v| v.boundary) {
            return Err(DiagramError::BoundaryNotCycle);
        }

        // Connectivity over the 1-skeleton.
        if !self.vertices.is_empty() {
            let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
            for &(u, v) in incidences.keys() {
                adj[u].push(v);
                adj[v].push(u);
            }
            let mut seen = vec![false; self.vertices.len()];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            if seen.iter().any(|&s| !s) {
                return Err(DiagramError::Disconnected);
            }
        }
        Ok(())
    }

    /// Edges (unordered index pairs) with the number of face incidences.
    fn edge_incidences(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for face in &self.faces {
            let k = face.len();
            for i in 0..k {
                let u = face[i].vertex;
                let v = face[(i + 1) % k].vertex;
                *out.entry((u.min(v), u.max(v))).or_insert(0) += 1;
            }
        }
        out
    }

    /// Parses the structured diagram format:
    /// `{"vertices":[{"id","type","label?","boundary"}],
    ///   "faces":[[{"v","q_num","q_den"}]]}`.
    pub fn from_json(text: &str) -> Result<Self, DiagramError> {
        #[derive(Deserialize)]
        struct VertexIn {
            id: String,
            #[serde(rename = "type")]
            vtype: u8,
            #[serde(default)]
            label: Option<u32>,
            boundary: bool,
        }
        #[derive(Deserialize)]
        struct CornerIn {
            v: String,
            q_num: i64,
            q_den: i64,
        }
        #[derive(Deserialize)]
        struct DiagramIn {
            vertices: Vec<VertexIn>,
            faces: Vec<Vec<CornerIn>>,
        }
        let parsed: DiagramIn =
            serde_json::from_str(text).map_err(|e| DiagramError::BadJson { msg: e.to_string() })?;
        let mut index = std::collections::HashMap::new();
        let mut vertices = Vec::new();
        for (i, v) in parsed.vertices.into_iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(DiagramError::DuplicateVertex { id: v.id });
            }
            vertices.push(DiagramVertex {
                id: v.id,
                vtype: VertexType(v.vtype),
                label: v.label,
                boundary: v.boundary,
            });
        }
        let mut faces = Vec::new();
        for face in parsed.faces {
            let mut corners = Vec::new();
            for c in face {
                let &vi = index
                    .get(&c.v)
                    .ok_or(DiagramError::UnknownVertex { id: c.v.clone() })?;
                if c.q_den == 0 {
                    return Err(DiagramError::BadJson { msg: format!("corner at '{}' has zero denominator", c.v) });
                }
                corners.push(Corner { vertex: vi, angle: AngleQ::new(c.q_num, c.q_den) });
            }
            faces.push(corners);
        }
        DiscDiagram::new(vertices, faces)
    }
}

/// The Moussong angles of the triangle over an edge of label `m`, in units
/// of π: type-0 corner `(m-1)/2m`, type-1 corner `1/2`, type-2 corner
/// `1/2m`. The three sum to 1 (a euclidean triangle) for every `m`.
pub fn moussong_corner_angles(m: u32) -> Result<(AngleQ, AngleQ, AngleQ), DiagramError> {
    if m < 2 {
        return Err(DiagramError::LabelTooSmall { m: m as i64 });
    }
    let type0 = AngleQ::new(m as i64 - 1, 2 * m as i64);
    let type1 = AngleQ::new(1, 2);
    let type2 = AngleQ::new(1, 2 * m as i64);
    Ok((type0, type1, type2))
}

/// Face curvature `(2 - n) + Σ q_i` in units of π, where `n` is the corner
/// count.
pub fn face_curvature(angles: &[AngleQ]) -> AngleQ {
    assert!(angles.len() >= 3, "a polygon has at least 3 corners");
    let mut total = AngleQ::from_int(2 - angles.len() as i64);
    for a in angles {
        total = total + a;
    }
    total
}

/// Vertex curvature in units of π: `1 - Σ q_i` on the boundary, `2 - Σ q_i`
/// in the interior. An interior vertex with no corners is malformed.
pub fn vertex_curvature(boundary: bool, angles: &[AngleQ]) -> Result<AngleQ, DiagramError> {
    if !boundary && angles.is_empty() {
        return Err(DiagramError::CornerlessVertex { id: "<interior>".to_owned() });
    }
    let base = if boundary { AngleQ::from_int(1) } else { AngleQ::from_int(2) };
    let mut total = base;
    for a in angles {
        total = total - a.clone();
    }
    Ok(total)
}

/// The full curvature ledger of a validated diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurvatureLedger {
    /// Curvature per face, aligned with the diagram's face order.
    pub face_curvatures: Vec<AngleQ>,
    /// Curvature per vertex, aligned with the diagram's vertex order.
    pub vertex_curvatures: Vec<AngleQ>,
    pub face_total: AngleQ,
    pub vertex_total: AngleQ,
    /// `Σκ(v) + Σκ(P) - 2` in units of π; zero for a consistent diagram.
    pub residual: AngleQ,
}

impl CurvatureLedger {
    pub fn total(&self) -> AngleQ {
        self.face_total.clone() + &self.vertex_total
    }

    /// Moves `1/2·π` from a face to each of the listed vertices, returning
    /// the transformed ledger. The grand total is unchanged, so the residual
    /// is too.
    pub fn redistribute(&self, face: usize, vertices: &[usize]) -> Result<CurvatureLedger, DiagramError> {
        if face >= self.face_curvatures.len() {
            return Err(DiagramError::BadIndex { what: "face", index: face });
        }
        let mut out = self.clone();
        let half = AngleQ::new(1, 2);
        for &v in vertices {
            if v >= self.vertex_curvatures.len() {
                return Err(DiagramError::BadIndex { what: "vertex", index: v });
            }
            out.face_curvatures[face] = out.face_curvatures[face].clone() - half.clone();
            out.vertex_curvatures[v] += half.clone();
            out.face_total = out.face_total.clone() - half.clone();
            out.vertex_total += half.clone();
        }
        Ok(out)
    }
}

/// Computes the per-face and per-vertex curvatures and the Gauss–Bonnet
/// residual of a validated diagram.
pub fn ledger(d: &DiscDiagram) -> CurvatureLedger {
    let mut vertex_angles: Vec<Vec<AngleQ>> = vec![Vec::new(); d.vertices().len()];
    let mut face_curvatures = Vec::with_capacity(d.faces().len());
    for face in d.faces() {
        let angles: Vec<AngleQ> = face.iter().map(|c| c.angle.clone()).collect();
        face_curvatures.push(face_curvature(&angles));
        for c in face {
            vertex_angles[c.vertex].push(c.angle.clone());
        }
    }
    let vertex_curvatures: Vec<AngleQ> = d
        .vertices()
        .iter()
        .zip(&vertex_angles)
        .map(|(v, angles)| vertex_curvature(v.boundary, angles).expect("validated diagram"))
        .collect();
    let face_total: AngleQ = face_curvatures.iter().cloned().sum();
    let vertex_total: AngleQ = vertex_curvatures.iter().cloned().sum();
    let residual = face_total.clone() + &vertex_total - AngleQ::from_int(2);
    CurvatureLedger { face_curvatures, vertex_curvatures, face_total, vertex_total, residual }
}

/// `Σκ(v) + Σκ(P) - 2` in units of π; exactly zero for a geometrically
/// consistent diagram.
pub fn gauss_bonnet_residual(d: &DiscDiagram) -> AngleQ {
    ledger(d).residual
}

/// The fan diagram bounded by the standard trees of a cycle subgraph: one
/// interior type-0 vertex and, per cycle edge, two Moussong triangles
/// sharing that edge's type-2 vertex. The boundary alternates type-1 and
/// type-2 vertices and the Gauss–Bonnet residual is zero by construction.
pub fn fundamental_disc(g: &DefiningGraph, cycle: &CycleSubgraph) -> DiscDiagram {
    let k = cycle.len();
    let labels = cycle.edge_labels(g);
    let mut vertices = vec![DiagramVertex {
        id: "0:center".to_owned(),
        vtype: VertexType(0),
        label: None,
        boundary: false,
    }];
    let center = 0usize;
    let mut type1 = Vec::with_capacity(k);
    for &v in cycle.vertices() {
        type1.push(vertices.len());
        vertices.push(DiagramVertex {
            id: format!("1:{}", g.vertex_name(v)),
            vtype: VertexType(1),
            label: None,
            boundary: true,
        });
    }
    let mut type2 = Vec::with_capacity(k);
    for (i, &label) in labels.iter().enumerate() {
        let u = cycle.vertices()[i];
        let v = cycle.vertices()[(i + 1) % k];
        let (a, b) = {
            let un = g.vertex_name(u);
            let vn = g.vertex_name(v);
            if un <= vn {
                (un, vn)
            } else {
                (vn, un)
            }
        };
        type2.push(vertices.len());
        vertices.push(DiagramVertex {
            id: format!("2:{a}|{b}"),
            vtype: VertexType(2),
            label: Some(label),
            boundary: true,
        });
    }
    let mut faces = Vec::with_capacity(2 * k);
    for (i, &label) in labels.iter().enumerate() {
        let (a0, a1, a2) = moussong_corner_angles(label).expect("labels >= 2 in a valid graph");
        faces.push(vec![
            Corner { vertex: center, angle: a0.clone() },
            Corner { vertex: type1[i], angle: a1.clone() },
            Corner { vertex: type2[i], angle: a2.clone() },
        ]);
        faces.push(vec![
            Corner { vertex: center, angle: a0 },
            Corner { vertex: type2[i], angle: a2 },
            Corner { vertex: type1[(i + 1) % k], angle: a1 },
        ]);
    }
    DiscDiagram::new(vertices, faces).expect("fan diagram is a disc by construction")
}

/// The Moussong length of a cycle subgraph, `Σ (m_e - 1)/m_e` in units of
/// π. Equals `girth γ - Σ 1/m_e`.
pub fn moussong_cycle_length(g: &DefiningGraph, cycle: &CycleSubgraph) -> AngleQ {
    cycle.edge_labels(g).iter().map(|&m| AngleQ::new(m as i64 - 1, m as i64)).sum()
}

/// Upper bound for the curvature of an interior type-0 vertex whose link
/// traces the cycle, in the simplicial (Moussong) metric:
/// `(2 - girth γ) + Σ 1/m_e` in units of π.
pub fn type0_bound_simplicial(g: &DefiningGraph, cycle: &CycleSubgraph) -> AngleQ {
    let mut total = AngleQ::from_int(2 - cycle.len() as i64);
    for m in cycle.edge_labels(g) {
        total += AngleQ::new(1, m as i64);
    }
    total
}

/// The cubical counterpart, `(4 - girth γ)/2` in units of π. The bound is
/// stated for hosts of girth at least 4, so girth-3 hosts are refused.
pub fn type0_bound_cubical(g: &DefiningGraph, cycle: &CycleSubgraph) -> Result<AngleQ, ScopeError> {
    if g.girth() == ExtendedLength::Finite(3) {
        return Err(ScopeError::new("type0_bound_cubical", "girth at least 4"));
    }
    Ok(AngleQ::new(4 - cycle.len() as i64, 2))
}
