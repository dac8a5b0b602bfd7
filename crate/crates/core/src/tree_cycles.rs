//! Abstract boundary patterns of cycles of standard trees.
//!
//! A cycle of k standard trees meets itself in k intersection vertices, each
//! of label 2 (SMALL) or at least 3 (BIG). Only the pattern of marks matters
//! for the curvature budget, so configurations are binary necklaces up to
//! rotation and reflection. The weighted girth of a configuration is
//! `k + #BIG`, and a configuration is excluded whenever the positive
//! curvature its marked vertices can contribute, plus the best possible
//! type-0 curvature of the ambient graph, falls short of the 2π that the
//! Gauss–Bonnet theorem demands.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::classify::{classify, ScopeError};
use crate::curvature::{type0_bound_simplicial, AngleQ};
use crate::graph::{DefiningGraph, ExtendedLength};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("a cycle of standard trees needs at least 3 trees, got {k}")]
    TooShort { k: usize },
    #[error("type-0 cap {cap} is not below 2; the budget argument needs cap < 2")]
    CapTooLarge { cap: String },
    #[error("invalid marks string '{s}': use 'S' and 'B' only")]
    BadMarks { s: String },
}

/// Intersection-vertex mark: label 2 (SMALL) or label at least 3 (BIG).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mark {
    Small,
    Big,
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mark::Small => write!(f, "S"),
            Mark::Big => write!(f, "B"),
        }
    }
}

/// The boundary pattern of a cycle of standard trees: `k >= 3` trees and a
/// cyclic sequence of marks, stored in canonical form (lexicographically
/// least under rotation and reflection, SMALL < BIG).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeCycleConfig {
    marks: Vec<Mark>,
    simple: bool,
}

impl TreeCycleConfig {
    pub fn new(marks: Vec<Mark>, simple: bool) -> Result<Self, ConfigError> {
        let k = marks.len();
        if k < 3 {
            return Err(ConfigError::TooShort { k });
        }
        Ok(TreeCycleConfig { marks: canonical_necklace(&marks), simple })
    }

    pub fn from_marks_str(s: &str, simple: bool) -> Result<Self, ConfigError> {
        let marks: Result<Vec<Mark>, ()> = s
            .chars()
            .map(|c| match c {
                'S' | 's' => Ok(Mark::Small),
                'B' | 'b' => Ok(Mark::Big),
                _ => Err(()),
            })
            .collect();
        match marks {
            Ok(m) => Self::new(m, simple),
            Err(()) => Err(ConfigError::BadMarks { s: s.to_owned() }),
        }
    }

    pub fn k(&self) -> usize {
        self.marks.len()
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn big_count(&self) -> usize {
        self.marks.iter().filter(|&&m| m == Mark::Big).count()
    }

    pub fn small_count(&self) -> usize {
        self.k() - self.big_count()
    }

    /// `k + #BIG`.
    pub fn weighted_girth(&self) -> usize {
        self.k() + self.big_count()
    }

    pub fn marks_string(&self) -> String {
        self.marks.iter().map(|m| m.to_string()).collect()
    }
}

impl fmt::Display for TreeCycleConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} marks={}", self.k(), self.marks_string())
    }
}

/// `k + #BIG` of a configuration.
pub fn config_wg(c: &TreeCycleConfig) -> usize {
    c.weighted_girth()
}

fn canonical_necklace(marks: &[Mark]) -> Vec<Mark> {
    let k = marks.len();
    let mut best: Option<Vec<Mark>> = None;
    let mut consider = |candidate: Vec<Mark>| {
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    };
    for start in 0..k {
        let rotated: Vec<Mark> = (0..k).map(|i| marks[(start + i) % k]).collect();
        let mut reflected = rotated.clone();
        reflected.reverse();
        consider(rotated);
        consider(reflected);
    }
    best.expect("nonempty necklace")
}

/// All canonical simple configurations of weighted girth `w`: `k >= 3`,
/// `k + #BIG = w`, `#BIG <= k`, up to rotation and reflection.
pub fn enumerate_simple_configs(w: usize) -> Vec<TreeCycleConfig> {
    let mut out = BTreeSet::new();
    if w < 3 {
        return Vec::new();
    }
    for k in 3..=w {
        let b = w - k;
        if b > k {
            continue;
        }
        // Place the b BIG marks on each b-subset of positions and
        // canonicalize; the set dedups dihedral duplicates.
        for subset in k_subsets(k, b) {
            let mut marks = vec![Mark::Small; k];
            for i in subset {
                marks[i] = Mark::Big;
            }
            out.insert(TreeCycleConfig::new(marks, true).expect("k >= 3"));
        }
    }
    out.into_iter().collect()
}

/// All b-element subsets of 0..k in lexicographic order.
fn k_subsets(k: usize, b: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if b > k {
        return out;
    }
    let mut current: Vec<usize> = (0..b).collect();
    loop {
        out.push(current.clone());
        // Advance to the next combination.
        let mut i = b;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + k - b {
                break;
            }
        }
        current[i] += 1;
        for j in (i + 1)..b {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Two simple configurations glued at one shared tree, with the gluing
/// vertex carrying its own mark. The shared tree is counted once, so the
/// weighted girth of the glued trace is `wg(first) + wg(second) - 1`; the
/// gluing vertex is the pinch point, not one of the trace's intersection
/// vertices, and does not contribute.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WedgeConfig {
    first: TreeCycleConfig,
    second: TreeCycleConfig,
    gluing_mark: Mark,
}

impl WedgeConfig {
    pub fn new(
        a: TreeCycleConfig,
        b: TreeCycleConfig,
        gluing_mark: Mark,
    ) -> Result<Self, ConfigError> {
        // Constituent validity (k >= 3) is enforced by TreeCycleConfig.
        let (first, second) = if a <= b { (a, b) } else { (b, a) };
        let w = WedgeConfig { first, second, gluing_mark };
        debug_assert!(w.tree_count() >= 4);
        Ok(w)
    }

    pub fn first(&self) -> &TreeCycleConfig {
        &self.first
    }

    pub fn second(&self) -> &TreeCycleConfig {
        &self.second
    }

    pub fn gluing_mark(&self) -> Mark {
        self.gluing_mark
    }

    /// Distinct trees of the glued object; the shared tree counted once.
    pub fn tree_count(&self) -> usize {
        self.first.k() + self.second.k() - 1
    }

    pub fn weighted_girth(&self) -> usize {
        self.first.weighted_girth() + self.second.weighted_girth() - 1
    }
}

impl fmt::Display for WedgeConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "wedge[{} + {} @ {}]",
            self.first, self.second, self.gluing_mark
        )
    }
}

/// All canonical wedges of combined weighted girth `w`. Nothing exists
/// below `w = 5`: each constituent has weighted girth at least 3.
pub fn enumerate_wedge_configs(w: usize) -> Vec<WedgeConfig> {
    let mut out = BTreeSet::new();
    if w < 5 {
        return Vec::new();
    }
    // wg(first) + wg(second) = w + 1, each at least 3.
    for wa in 3..=(w + 1 - 3) {
        let wb = w + 1 - wa;
        if wa > wb {
            break;
        }
        for a in enumerate_simple_configs(wa) {
            for b in enumerate_simple_configs(wb) {
                for mark in [Mark::Small, Mark::Big] {
                    out.insert(WedgeConfig::new(a.clone(), b.clone(), mark).expect("valid constituents"));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// The best (largest) type-0 curvature the ambient graph allows, as an
/// exact rational multiple of π, or negative infinity when no cycle of
/// standard trees can exist at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cap {
    NegInfinite,
    Finite(AngleQ),
}

impl fmt::Display for Cap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cap::NegInfinite => write!(f, "-inf"),
            Cap::Finite(q) => write!(f, "{q}"),
        }
    }
}

/// Per-vertex curvature caps for the budget argument: a SMALL intersection
/// vertex contributes at most π/2, a BIG one at most π, and every interior
/// type-0 vertex at most `type0_cap` (required below 2π).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassBudget {
    pub small_cap: AngleQ,
    pub big_cap: AngleQ,
    pub type0_cap: Cap,
}

impl ClassBudget {
    pub fn new(type0_cap: Cap) -> Result<Self, ConfigError> {
        if let Cap::Finite(q) = &type0_cap {
            if q.as_ratio() >= &BigRational::from(BigInt::from(2)) {
                return Err(ConfigError::CapTooLarge { cap: q.to_string() });
            }
        }
        Ok(ClassBudget {
            small_cap: AngleQ::new(1, 2),
            big_cap: AngleQ::from_int(1),
            type0_cap,
        })
    }
}

/// Outcome of the coarse curvature budget. `Feasible` means "not excluded
/// by this first-pass inequality", never "realizable".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BudgetVerdict {
    Feasible,
    Infeasible(String),
}

impl BudgetVerdict {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, BudgetVerdict::Infeasible(_))
    }
}

/// The positive budget of a configuration: `#SMALL·(1/2) + #BIG·1` plus the
/// type-0 cap, in units of π.
pub fn budget_total(c: &TreeCycleConfig, b: &ClassBudget) -> Cap {
    match &b.type0_cap {
        Cap::NegInfinite => Cap::NegInfinite,
        Cap::Finite(cap) => {
            let mut total = cap.clone();
            for _ in 0..c.small_count() {
                total = total + &b.small_cap;
            }
            for _ in 0..c.big_count() {
                total = total + &b.big_cap;
            }
            Cap::Finite(total)
        }
    }
}

/// Gauss–Bonnet exclusion: the configuration is infeasible when the most
/// positive curvature its marked vertices and one type-0 vertex can carry
/// still falls below 2π. The certificate prints the exact inequality.
pub fn budget_check(c: &TreeCycleConfig, b: &ClassBudget) -> BudgetVerdict {
    let s = c.small_count();
    let big = c.big_count();
    match budget_total(c, b) {
        Cap::NegInfinite => BudgetVerdict::Infeasible(format!(
            "{s}*({}) + {big}*({}) + (-inf) < 2 [pi units; no cycles of standard trees exist]",
            b.small_cap, b.big_cap
        )),
        Cap::Finite(total) => {
            if total.as_ratio() < &BigRational::from(BigInt::from(2)) {
                BudgetVerdict::Infeasible(format!(
                    "{s}*({}) + {big}*({}) + ({}) = {} < 2 [pi units]",
                    b.small_cap,
                    b.big_cap,
                    match &b.type0_cap {
                        Cap::Finite(q) => q.to_string(),
                        Cap::NegInfinite => unreachable!("finite total"),
                    },
                    total
                ))
            } else {
                BudgetVerdict::Feasible
            }
        }
    }
}

/// Which Deligne-complex metric the type-0 bound is taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Simplicial,
    Cubical,
}

impl std::str::FromStr for Metric {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "simplicial" => Ok(Metric::Simplicial),
            "cubical" => Ok(Metric::Cubical),
            other => Err(format!("unknown metric '{other}' (use simplicial or cubical)")),
        }
    }
}

/// Derives the type-0 cap of a graph: the maximum of the per-cycle bounds
/// over induced cycles of length at most 6, together with the uniform `-π`
/// bound whenever longer induced cycles exist. Forests have no cycles of
/// standard trees at all, so their cap is negative infinity.
pub fn class_budget_from_graph(g: &DefiningGraph, metric: Metric) -> Result<ClassBudget, ScopeError> {
    let class = classify(g);
    if !class.two_dimensional {
        return Err(ScopeError::new("class_budget_from_graph", "two-dimensional"));
    }
    match metric {
        Metric::Cubical => {
            match g.girth() {
                ExtendedLength::Finite(3) => {
                    Err(ScopeError::new("class_budget_from_graph", "girth at least 4"))
                }
                ExtendedLength::Infinite => {
                    Ok(ClassBudget::new(Cap::NegInfinite).expect("cap below 2"))
                }
                ExtendedLength::Finite(girth) => {
                    // (4 - L)/2 is decreasing in L, so the girth cycle is the
                    // maximizer; a shortest cycle is always induced.
                    let cap = AngleQ::new(4 - girth as i64, 2);
                    Ok(ClassBudget::new(Cap::Finite(cap)).expect("cap below 2"))
                }
            }
        }
        Metric::Simplicial => {
            let cycles = g.induced_cycles(None);
            if cycles.is_empty() {
                return Ok(ClassBudget::new(Cap::NegInfinite).expect("cap below 2"));
            }
            let mut best: Option<AngleQ> = None;
            for cycle in &cycles {
                let bound = if cycle.len() <= 6 {
                    type0_bound_simplicial(g, cycle)
                } else {
                    AngleQ::from_int(-1)
                };
                if best.as_ref().is_none_or(|b| bound > *b) {
                    best = Some(bound);
                }
            }
            Ok(ClassBudget::new(Cap::Finite(best.expect("nonempty cycles")))
                .expect("bounds are below 2"))
        }
    }
}

/// The lower bounds that cycles of standard trees inherit from the graph:
/// every cycle has at least `girth Γ` trees, and weighted girth at least
/// `wg Γ` when the graph is triangle-free or of hyperbolic type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundReport {
    pub length_bound: ExtendedLength,
    pub wg_bound: Option<ExtendedLength>,
    /// Why the weighted-girth bound was omitted, when it was.
    pub wg_skip_reason: Option<String>,
}

pub fn lower_bound_report(g: &DefiningGraph) -> Result<LowerBoundReport, ScopeError> {
    let class = classify(g);
    if !class.two_dimensional {
        return Err(ScopeError::new("lower_bound_report", "two-dimensional"));
    }
    let triangle_free = g.girth() != ExtendedLength::Finite(3);
    let hyperbolic = class.hyperbolic_type == Some(true);
    if triangle_free || hyperbolic {
        Ok(LowerBoundReport {
            length_bound: g.girth(),
            wg_bound: Some(g.weighted_girth()),
            wg_skip_reason: None,
        })
    } else {
        Ok(LowerBoundReport {
            length_bound: g.girth(),
            wg_bound: None,
            wg_skip_reason: Some("neither triangle-free nor hyperbolic type".to_owned()),
        })
    }
}
