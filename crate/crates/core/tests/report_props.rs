//! Behavioural properties of the pairwise distinguisher.

mod common;

use artin_invariants::graph::DefiningGraph;
use artin_invariants::report::{compare, report, ComparisonVerdict};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn corpus(seed: u64, count: usize) -> Vec<DefiningGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|round| {
            let n = 3 + round % 6;
            let p = 0.2 + 0.06 * (round % 8) as f64;
            common::random_graph(&mut rng, n, p, &[2, 2, 3, 4, 6, 7])
        })
        .collect()
}

#[test]
fn compare_never_distinguishes_a_graph_from_itself() {
    for g in corpus(51, 200) {
        assert!(
            !matches!(compare(&g, &g), ComparisonVerdict::Distinguished { .. }),
            "self-distinction on {}",
            g.canonical_text()
        );
    }
}

#[test]
fn compare_is_symmetric_up_to_swapping_values() {
    let graphs = corpus(52, 40);
    for i in 0..graphs.len() {
        for j in (i + 1)..graphs.len() {
            let forward = compare(&graphs[i], &graphs[j]);
            let backward = compare(&graphs[j], &graphs[i]);
            match (&forward, &backward) {
                (
                    ComparisonVerdict::Distinguished { invariant: fi, left: fl, right: fr, .. },
                    ComparisonVerdict::Distinguished { invariant: bi, left: bl, right: br, .. },
                ) => {
                    assert_eq!(fi, bi);
                    assert_eq!(fl, br);
                    assert_eq!(fr, bl);
                }
                (ComparisonVerdict::GroupsIsomorphic { .. }, ComparisonVerdict::GroupsIsomorphic { .. }) => {}
                (ComparisonVerdict::Inconclusive { .. }, ComparisonVerdict::Inconclusive { .. }) => {}
                other => panic!("asymmetric verdicts: {other:?}"),
            }
        }
    }
}

#[test]
fn distinguished_girth_is_rederivable_from_reports() {
    let graphs = corpus(53, 60);
    let mut hits = 0;
    for i in 0..graphs.len() {
        for j in (i + 1)..graphs.len() {
            if let ComparisonVerdict::Distinguished { invariant, left, right, .. } =
                compare(&graphs[i], &graphs[j])
            {
                if invariant == "girth" {
                    hits += 1;
                    let ri = report(&graphs[i], None);
                    let rj = report(&graphs[j], None);
                    assert_ne!(ri.girth.value, rj.girth.value);
                    assert_eq!(format!("{}", ri.girth.value), left);
                    assert_eq!(format!("{}", rj.girth.value), right);
                }
            }
        }
    }
    assert!(hits > 10, "sample produced too few girth distinctions ({hits})");
}
