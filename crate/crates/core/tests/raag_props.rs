//! Word-calculus properties: confluence of the normal form against an
//! exhaustive rewriting oracle, and group-equality semantics of canonical
//! extension-graph vertices.

mod common;

use std::collections::{BTreeSet, VecDeque};

use artin_invariants::graph::DefiningGraph;
use artin_invariants::raag::{Letter, Raag, RaagWord, DEFAULT_BALL_BUDGET};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_right_angled<R: Rng>(rng: &mut R, n: usize, p: f64) -> Raag {
    Raag::new(common::random_graph(rng, n, p, &[2])).unwrap()
}

fn random_word<R: Rng>(rng: &mut R, host: &Raag, len: usize) -> RaagWord {
    let n = host.graph().n_vertices();
    let pairs: Vec<(String, bool)> = (0..len)
        .map(|_| {
            let gen = rng.gen_range(0..n);
            (host.graph().vertex_name(gen).to_owned(), rng.gen_bool(0.5))
        })
        .collect();
    let borrowed: Vec<(&str, bool)> = pairs.iter().map(|(s, b)| (s.as_str(), *b)).collect();
    host.word_from_pairs(&borrowed).unwrap()
}

/// Every word reachable from `letters` by swapping adjacent commuting
/// letters and deleting adjacent inverse pairs. The minimum length over
/// this set is the geodesic length.
fn reachable_words(host: &Raag, letters: &[Letter]) -> BTreeSet<Vec<Letter>> {
    let mut seen = BTreeSet::from([letters.to_vec()]);
    let mut queue = VecDeque::from([letters.to_vec()]);
    while let Some(word) = queue.pop_front() {
        for i in 0..word.len() {
            if i + 1 < word.len() {
                let (a, b) = (word[i], word[i + 1]);
                if a.gen == b.gen && a.inverse != b.inverse {
                    let mut shorter = word.clone();
                    shorter.drain(i..=i + 1);
                    if seen.insert(shorter.clone()) {
                        queue.push_back(shorter);
                    }
                }
                if a.gen != b.gen && host.graph().has_edge(a.gen, b.gen) {
                    let mut swapped = word.clone();
                    swapped.swap(i, i + 1);
                    if seen.insert(swapped.clone()) {
                        queue.push_back(swapped);
                    }
                }
            }
        }
    }
    seen
}

#[test]
fn normal_form_kills_inverses() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for round in 0..1000 {
        let host = random_right_angled(&mut rng, 2 + round % 5, 0.5);
        let len = rng.gen_range(0..8);
        let w = random_word(&mut rng, &host, len);
        let product = host.concat(&w, &host.inverse(&w));
        assert!(
            host.normal_form(&product).unwrap().is_identity(),
            "w w^-1 did not reduce to 1 for {}",
            host.render(&w)
        );
    }
}

#[test]
fn normal_form_is_idempotent_and_represents_the_element() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..300 {
        let host = random_right_angled(&mut rng, 5, 0.4);
        let len = rng.gen_range(0..8);
        let w = random_word(&mut rng, &host, len);
        let nf = host.normal_form(&w).unwrap();
        let again = host.normal_form(nf.word()).unwrap();
        assert_eq!(nf, again, "normal form must be idempotent");
        // w and nf(w) are the same group element.
        let quotient = host.concat(&w, &host.inverse(nf.word()));
        assert!(host.normal_form(&quotient).unwrap().is_identity());
    }
}

#[test]
fn normal_form_matches_exhaustive_shuffle_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for round in 0..120 {
        let host = random_right_angled(&mut rng, 2 + round % 4, 0.5);
        let len = rng.gen_range(0..=8);
        let w = random_word(&mut rng, &host, len);
        let nf = host.normal_form(&w).unwrap();
        let reachable = reachable_words(&host, w.letters());
        let min_len = reachable.iter().map(|v| v.len()).min().unwrap();
        assert_eq!(nf.len(), min_len, "geodesic length disagrees on {}", host.render(&w));
        assert!(
            reachable.contains(nf.word().letters()),
            "canonical form must be reachable by swaps and cancellations"
        );
    }
}

#[test]
fn ext_vertex_equality_is_group_equality() {
    // The canonical coset representative is an assumed backend fact;
    // validate it against brute-force conjugate equality.
    let hosts: Vec<Raag> = vec![
        Raag::new(DefiningGraph::pod(2)).unwrap(),
        Raag::new(DefiningGraph::path(3)).unwrap(),
        Raag::new({
            let mut g = DefiningGraph::new();
            g.add_vertex("a").unwrap();
            g.add_vertex("b").unwrap();
            g
        })
        .unwrap(),
    ];
    for host in &hosts {
        let n = host.graph().n_vertices();
        // All conjugator words of length <= 2.
        let mut words: Vec<RaagWord> = vec![host.parse_word("").unwrap()];
        let letters: Vec<(String, bool)> = (0..n)
            .flat_map(|g| {
                let name = host.graph().vertex_name(g).to_owned();
                [(name.clone(), false), (name, true)]
            })
            .collect();
        for (l1, s1) in &letters {
            words.push(host.word_from_pairs(&[(l1, *s1)]).unwrap());
            for (l2, s2) in &letters {
                words.push(host.word_from_pairs(&[(l1, *s1), (l2, *s2)]).unwrap());
            }
        }
        for base in 0..n {
            let base_name = host.graph().vertex_name(base).to_owned();
            let base_word = host.word_from_pairs(&[(&base_name, false)]).unwrap();
            let conj = |g: &RaagWord| {
                host.concat(&host.concat(&host.inverse(g), &base_word), g)
            };
            for g in &words {
                for h in &words {
                    let structural = host.ext_vertex(&base_name, g).unwrap()
                        == host.ext_vertex(&base_name, h).unwrap();
                    let quotient = host.concat(&conj(g), &host.inverse(&conj(h)));
                    let group_equal = host.normal_form(&quotient).unwrap().is_identity();
                    assert_eq!(
                        structural,
                        group_equal,
                        "vertex equality mismatch: base {base_name}, g = {}, h = {}",
                        host.render(g),
                        host.render(h)
                    );
                }
            }
        }
    }
}

#[test]
fn ext_vertex_equality_holds_for_longer_conjugators() {
    // Length-3 conjugators exercise stripping through blocked letters.
    let host = Raag::new(DefiningGraph::pod(2)).unwrap();
    let n = host.graph().n_vertices();
    let letters: Vec<(String, bool)> = (0..n)
        .flat_map(|g| {
            let name = host.graph().vertex_name(g).to_owned();
            [(name.clone(), false), (name, true)]
        })
        .collect();
    let mut words: Vec<RaagWord> = vec![host.parse_word("").unwrap()];
    for (l1, s1) in &letters {
        words.push(host.word_from_pairs(&[(l1, *s1)]).unwrap());
        for (l2, s2) in &letters {
            words.push(host.word_from_pairs(&[(l1, *s1), (l2, *s2)]).unwrap());
            for (l3, s3) in &letters {
                words
                    .push(host.word_from_pairs(&[(l1, *s1), (l2, *s2), (l3, *s3)]).unwrap());
            }
        }
    }
    let base_name = "u1";
    let base_word = host.parse_word(base_name).unwrap();
    let canonical: Vec<_> =
        words.iter().map(|g| host.ext_vertex(base_name, g).unwrap()).collect();
    let conjugates: Vec<RaagWord> = words
        .iter()
        .map(|g| host.concat(&host.concat(&host.inverse(g), &base_word), g))
        .collect();
    for i in 0..words.len() {
        for j in (i + 1)..words.len() {
            let structural = canonical[i] == canonical[j];
            let quotient = host.concat(&conjugates[i], &host.inverse(&conjugates[j]));
            let group_equal = host.normal_form(&quotient).unwrap().is_identity();
            assert_eq!(
                structural,
                group_equal,
                "length-3 vertex equality mismatch: g = {}, h = {}",
                host.render(&words[i]),
                host.render(&words[j])
            );
        }
    }
}

#[test]
fn balls_restrict_consistently_across_hosts() {
    for host in [
        Raag::new(DefiningGraph::pod(2)).unwrap(),
        Raag::new(DefiningGraph::path(3)).unwrap(),
        Raag::new(DefiningGraph::cycle(&[2; 4])).unwrap(),
    ] {
        let big = host.ext_ball(2).unwrap();
        for r in 0..2 {
            assert_eq!(big.restrict(r), host.ext_ball(r).unwrap());
        }
    }
}

#[test]
fn join_hosts_have_join_balls() {
    // C_4 is the join of the edgeless pairs {u1, u3} and {u2, u4}; the
    // extension ball must be the join of the factor balls.
    let join = Raag::new(DefiningGraph::cycle(&[2; 4])).unwrap();
    let factor = Raag::new({
        let mut g = DefiningGraph::new();
        g.add_vertex("u1").unwrap();
        g.add_vertex("u3").unwrap();
        g
    })
    .unwrap();
    let r = 2;
    let ball = join.ext_ball(r).unwrap();
    let factor_ball = factor.ext_ball(r).unwrap();

    let part = |i: usize| -> usize {
        // u1, u3 -> 0; u2, u4 -> 1.
        let name = join.graph().vertex_name(ball.vertices[i].base);
        if name == "u1" || name == "u3" {
            0
        } else {
            1
        }
    };
    for i in 0..ball.n_vertices() {
        for j in (i + 1)..ball.n_vertices() {
            if part(i) != part(j) {
                assert!(ball.has_edge(i, j), "cross-factor pairs must commute");
            }
        }
    }
    // Part-0 of the join ball matches the standalone factor ball: same
    // conjugator descriptions and no internal edges on either side.
    let part0: Vec<String> = (0..ball.n_vertices())
        .filter(|&i| part(i) == 0)
        .map(|i| ball.describe(i))
        .collect();
    let factor_all: Vec<String> =
        (0..factor_ball.n_vertices()).map(|i| factor_ball.describe(i)).collect();
    assert_eq!(part0, factor_all);
    assert!(factor_ball.edges.is_empty());
    for i in 0..ball.n_vertices() {
        for j in (i + 1)..ball.n_vertices() {
            if part(i) == 0 && part(j) == 0 {
                assert!(!ball.has_edge(i, j));
            }
        }
    }
}

#[test]
fn pod_balls_radius_2_are_stars() {
    for k in 2..=4 {
        let host = Raag::new(DefiningGraph::pod(k)).unwrap();
        let ball = host.ext_ball_with_budget(2, DEFAULT_BALL_BUDGET).unwrap();
        let center_base = host.graph().vertex_index("u0").unwrap();
        let centers: Vec<usize> =
            (0..ball.n_vertices()).filter(|&i| ball.vertices[i].base == center_base).collect();
        assert_eq!(centers.len(), 1, "the centre is conjugation-invariant");
        let c = centers[0];
        assert_eq!(ball.degree(c), ball.n_vertices() - 1);
        assert_eq!(ball.edges.len(), ball.n_vertices() - 1, "every edge meets the centre");
    }
}
