//! Invariant reports, pairwise distinguishers and curvature audits for
//! Artin-group defining graphs.
//!
//! Exit codes: 0 for inconclusive or isomorphic verdicts (and all other
//! successful commands), 1 when `compare` distinguishes the groups, 2 for
//! input errors, so batch runs can triage corpora by exit status.

use std::fs;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use artin_invariants::curvature::{ledger, DiscDiagram};
use artin_invariants::graph::DefiningGraph;
use artin_invariants::raag::{find_induced, Raag, DEFAULT_BALL_BUDGET};
use artin_invariants::report::{compare, report, ComparisonVerdict, Gated, InvariantReport, Scope};
use artin_invariants::tree_cycles::{
    budget_check, budget_total, class_budget_from_graph, enumerate_simple_configs,
    enumerate_wedge_configs, BudgetVerdict, Metric, TreeCycleConfig,
};

#[derive(Parser)]
#[command(name = "artin", version, about = "Isomorphism invariants of Artin-group defining graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BallArgs {
    /// Conjugator-length radius of the extension ball.
    #[arg(long)]
    radius: usize,
    /// Vertex budget for ball construction.
    #[arg(long, default_value_t = DEFAULT_BALL_BUDGET)]
    budget: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report of one graph.
    Report {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Compare two graphs invariant by invariant.
    Compare {
        file1: String,
        file2: String,
        #[arg(long)]
        json: bool,
    },
    /// Girth of the defining graph.
    Girth { file: String },
    /// Weighted girth of the defining graph.
    Wg { file: String },
    /// Enumerate tree-cycle configurations of a given weighted girth.
    Configs {
        #[arg(long)]
        wg: usize,
        /// Also list the non-simple (wedge) configurations.
        #[arg(long)]
        wedges: bool,
    },
    /// Check a configuration against the curvature budget of a graph.
    Budget {
        file: String,
        #[arg(long)]
        metric: String,
        /// Marks string, e.g. SSBS (S = label 2, B = label >= 3).
        #[arg(long)]
        config: String,
    },
    /// Audit the Gauss-Bonnet ledger of a disc diagram (JSON).
    Gb { file: String },
    /// Build a ball of the extension graph of a right-angled group.
    Extball {
        file: String,
        #[command(flatten)]
        ball: BallArgs,
        /// Emit DOT instead of the vertex listing.
        #[arg(long)]
        dot: bool,
    },
    /// Certify a RAAG embedding via an induced subgraph of the extension ball.
    Embed {
        pattern: String,
        file: String,
        #[command(flatten)]
        ball: BallArgs,
    },
    /// DOT export of a defining graph.
    Dot { file: String },
}

fn load_graph(path: &str) -> Result<DefiningGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read '{path}'"))?;
    let graph = if text.trim_start().starts_with('{') {
        DefiningGraph::from_json(&text)
    } else {
        DefiningGraph::parse(&text)
    };
    graph.with_context(|| format!("cannot parse graph '{path}'"))
}

fn scope_suffix(scope: &Scope) -> String {
    match scope {
        Scope::Proven { fact } => format!("[PROVEN: {fact}]"),
        Scope::Informational => "[INFORMATIONAL]".to_owned(),
    }
}

fn print_report(r: &InvariantReport) {
    println!("schema: {}", r.schema);
    if let Some(file) = &r.file {
        println!("file: {file}");
    }
    println!("hash: {}", r.hash);
    println!("components: {} {}", r.component_count.value, scope_suffix(&r.component_count.scope));
    println!("vertices: {} {}", r.vertex_count.value, scope_suffix(&r.vertex_count.scope));
    println!("edges: {} {}", r.edge_count.value, scope_suffix(&r.edge_count.scope));
    println!("girth: {} {}", r.girth.value, scope_suffix(&r.girth.scope));
    println!(
        "weighted girth: {} {}",
        r.weighted_girth.value,
        scope_suffix(&r.weighted_girth.scope)
    );
    println!(
        "abelianization rank: {} {}",
        r.abelianization_rank.value,
        scope_suffix(&r.abelianization_rank.scope)
    );
    println!(
        "odd classes: {} {}",
        r.odd_class_count.value,
        scope_suffix(&r.odd_class_count.scope)
    );
    let c = &r.classification;
    println!("right-angled: {} {}", c.right_angled.value, scope_suffix(&c.right_angled.scope));
    println!("large type: {} {}", c.large_type.value, scope_suffix(&c.large_type.scope));
    println!(
        "two-dimensional: {} {}",
        c.two_dimensional.value,
        scope_suffix(&c.two_dimensional.scope)
    );
    match c.hyperbolic_type.value {
        Some(h) => println!("hyperbolic type: {h} {}", scope_suffix(&c.hyperbolic_type.scope)),
        None => println!("hyperbolic type: not applicable (not two-dimensional)"),
    }
    for t in &c.euclidean_triangles {
        println!(
            "  euclidean triangle {:?} labels {:?} (reciprocal sum {})",
            t.vertices, t.labels, t.reciprocal_sum
        );
    }
    for t in &c.spherical_triangles {
        println!(
            "  spherical triangle {:?} labels {:?} (reciprocal sum {})",
            t.vertices, t.labels, t.reciprocal_sum
        );
    }
    for s in &c.full_2222_squares {
        println!("  (2,2,2,2)-square {s:?}");
    }
    println!("has leaf: {}", c.has_leaf);
    println!("connected: {}", c.connected);
    println!("leaf count: {} {}", r.leaf_count.value, scope_suffix(&r.leaf_count.scope));
    println!(
        "separating vertex: {} {}",
        r.separating_vertex.value,
        scope_suffix(&r.separating_vertex.scope)
    );
    match &r.commutation_girth {
        Gated::Value(v) => {
            println!("commutation girth: {} {}", v.value, scope_suffix(&v.scope))
        }
        Gated::Skipped { skipped } => {
            println!("commutation girth: skipped (hypothesis not met: {skipped})")
        }
    }
    match &r.lower_bounds {
        Gated::Value(v) => {
            println!(
                "tree-cycle length bound: {} {}",
                v.value.length_bound,
                scope_suffix(&v.scope)
            );
            match (&v.value.wg_bound, &v.value.wg_skip_reason) {
                (Some(b), _) => println!("tree-cycle weighted-girth bound: {b}"),
                (None, Some(reason)) => {
                    println!("tree-cycle weighted-girth bound: omitted ({reason})")
                }
                (None, None) => {}
            }
        }
        Gated::Skipped { skipped } => {
            println!("tree-cycle bounds: skipped (hypothesis not met: {skipped})")
        }
    }
}

fn print_verdict(v: &ComparisonVerdict) {
    match v {
        ComparisonVerdict::Distinguished { invariant, left, right, fact, agreeing } => {
            println!("DISTINGUISHED by {invariant}: {left} vs {right}");
            println!("  rests on: {fact}");
            if !agreeing.is_empty() {
                println!("  agreeing before the distinction: {}", agreeing.join(", "));
            }
        }
        ComparisonVerdict::GroupsIsomorphic { witness } => {
            println!("GROUPS ISOMORPHIC (labelled cycles match)");
            let pairs: Vec<String> =
                witness.iter().map(|(a, b)| format!("{a} -> {b}")).collect();
            println!("  witness: {}", pairs.join(", "));
        }
        ComparisonVerdict::Inconclusive { agreeing, skipped } => {
            println!("INCONCLUSIVE: no implemented invariant distinguishes the groups");
            println!("  agreeing: {}", agreeing.join(", "));
            for s in skipped {
                println!("  skipped {}: needs {}", s.invariant, s.unmet_hypothesis);
            }
        }
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Report { file, json } => {
            let g = load_graph(&file)?;
            let r = report(&g, Some(&file));
            if json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                print_report(&r);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare { file1, file2, json } => {
            let g = load_graph(&file1)?;
            let h = load_graph(&file2)?;
            let verdict = compare(&g, &h);
            if json {
                let mut value = serde_json::to_value(&verdict)?;
                value["schema"] = serde_json::json!(1);
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                print_verdict(&verdict);
            }
            match verdict {
                ComparisonVerdict::Distinguished { .. } => Ok(ExitCode::from(1)),
                _ => Ok(ExitCode::SUCCESS),
            }
        }
        Command::Girth { file } => {
            let g = load_graph(&file)?;
            println!("{}", g.girth());
            Ok(ExitCode::SUCCESS)
        }
        Command::Wg { file } => {
            let g = load_graph(&file)?;
            println!("{}", g.weighted_girth());
            Ok(ExitCode::SUCCESS)
        }
        Command::Configs { wg, wedges } => {
            if wg > 20 {
                bail!("weighted girth {wg} is too large to enumerate (limit 20)");
            }
            let simple = enumerate_simple_configs(wg);
            for c in &simple {
                println!("{c}");
            }
            println!("simple configurations of weighted girth {wg}: {}", simple.len());
            if wedges {
                let wedge_list = enumerate_wedge_configs(wg);
                for w in &wedge_list {
                    println!("{w}");
                }
                println!("wedge configurations of weighted girth {wg}: {}", wedge_list.len());
                println!("total: {}", simple.len() + wedge_list.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Budget { file, metric, config } => {
            let g = load_graph(&file)?;
            let metric: Metric = metric.parse().map_err(anyhow::Error::msg)?;
            let config = TreeCycleConfig::from_marks_str(&config, true)?;
            let budget = class_budget_from_graph(&g, metric)?;
            println!("type-0 cap: {} [pi units]", budget.type0_cap);
            match budget_check(&config, &budget) {
                BudgetVerdict::Infeasible(certificate) => {
                    println!("{config}: INFEASIBLE");
                    println!("  certificate: {certificate}");
                }
                BudgetVerdict::Feasible => {
                    println!("{config}: FEASIBLE (not excluded by the coarse budget)");
                    println!("  total: {} [pi units, >= 2]", budget_total(&config, &budget));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gb { file } => {
            let text = fs::read_to_string(&file).with_context(|| format!("cannot read '{file}'"))?;
            let diagram = DiscDiagram::from_json(&text)?;
            let l = ledger(&diagram);
            for (i, face) in diagram.faces().iter().enumerate() {
                println!("face {i} ({} corners): curvature {} pi", face.len(), l.face_curvatures[i]);
            }
            for (i, v) in diagram.vertices().iter().enumerate() {
                let position = if v.boundary { "boundary" } else { "interior" };
                println!(
                    "vertex {} (type {}, {position}): curvature {} pi",
                    v.id, v.vtype.0, l.vertex_curvatures[i]
                );
            }
            println!("face total: {} pi", l.face_total);
            println!("vertex total: {} pi", l.vertex_total);
            println!("residual (total - 2): {} pi", l.residual);
            Ok(ExitCode::SUCCESS)
        }
        Command::Extball { file, ball, dot } => {
            let g = load_graph(&file)?;
            let host = Raag::new(g)?;
            let b = host.ext_ball_with_budget(ball.radius, ball.budget)?;
            if dot {
                print!("{}", b.to_dot());
            } else {
                println!("radius {}: {} vertices, {} edges", b.radius, b.n_vertices(), b.edges.len());
                for i in 0..b.n_vertices() {
                    println!("  {}", b.describe(i));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Embed { pattern, file, ball } => {
            let p = load_graph(&pattern)?;
            if !p.is_right_angled() {
                eprintln!("warning: pattern labels other than 2 are ignored");
            }
            let g = load_graph(&file)?;
            let host = Raag::new(g)?;
            let b = host.ext_ball_with_budget(ball.radius, ball.budget)?;
            match find_induced(&p, &b) {
                Some(injection) => {
                    println!("CERTIFIED: induced copy found at radius {}", ball.radius);
                    for (i, &target) in injection.iter().enumerate() {
                        println!("  {} -> {}", p.vertex_name(i), b.describe(target));
                    }
                }
                None => {
                    println!(
                        "UNKNOWN: no induced copy within radius {} (not a non-embeddability proof)",
                        ball.radius
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dot { file } => {
            let g = load_graph(&file)?;
            print!("{}", g.to_dot());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
