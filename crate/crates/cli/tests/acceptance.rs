//! Acceptance suite. Each test covers one gate criterion, checks it at
//! zero tolerance (all values are exact), and prints one pass line.
//!
//! Run with:  cargo test -p cbg-cli --test acceptance -- --nocapture

use std::collections::BTreeSet;

use cbg_cli::{scan, verify_counterexample};
use cbg_core::codec;
use cbg_core::connectivity;
use cbg_core::constructions::{named, star_decompose, star_product, Name, StarDecomposition, StarProductSpec};
use cbg_core::factors;
use cbg_core::generator::{count, generate, GenSpec};
use cbg_core::graph::{Girth, Graph};
use cbg_core::oracle;
use cbg_core::symmetry;

struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    fn perm(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.below(i + 1);
            p.swap(i, j);
        }
        p
    }

    fn graph(&mut self, n: usize, edge_percent: u64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.next() % 100 < edge_percent {
                    edges.push((u, v));
                }
            }
        }
        Graph::build(n, &edges).expect("random simple graph")
    }
}

fn cert(g: &Graph) -> String {
    symmetry::canonical_form(g).certificate
}

fn girth6_corpus(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut n = 14;
    while n <= max_n {
        generate(GenSpec::new(n, 6).unwrap(), &mut |g| out.push(g.clone()));
        n += 2;
    }
    out
}

/// Criterion 1: girth >= 6 census counts for n = 14..24 match the
/// expected values exactly.
#[test]
fn criterion_1_census_girth6() {
    let expected = [(14usize, 1u64), (16, 1), (18, 3), (20, 10), (22, 28), (24, 162)];
    for (n, want) in expected {
        let got = count(GenSpec::new(n, 6).unwrap());
        assert_eq!(got, want, "census count at n={}", n);
    }
    println!("ACCEPTANCE 1 census girth>=6 n=14..24 PASS (1, 1, 3, 10, 28, 162)");
}

/// Criterion 2: girth >= 8 census at n = 30 is a single graph, cubic
/// bipartite of girth exactly 8 and irreducible.
#[test]
fn criterion_2_census_girth8_n30() {
    let mut found = Vec::new();
    generate(GenSpec::new(30, 8).unwrap(), &mut |g| found.push(g.clone()));
    assert_eq!(found.len(), 1, "exactly one girth>=8 graph on 30 vertices");
    let g = &found[0];
    assert!(g.is_regular(3));
    assert!(g.is_bipartite());
    assert!(g.is_connected());
    assert_eq!(g.girth(), Girth::Finite(8));
    assert_eq!(star_decompose(g), StarDecomposition::Irreducible);
    println!("ACCEPTANCE 2 census girth>=8 n=30 PASS (1 graph, girth 8, irreducible)");
}

/// Criterion 3: the embedded counterexample passes all 13 golden checks,
/// including 312 2-factors by both enumerators.
#[test]
fn criterion_3_counterexample_golden() {
    let checks = verify_counterexample(&named(Name::CounterexampleG));
    assert_eq!(checks.len(), 13);
    for c in &checks {
        assert!(c.pass, "check failed: {} ({})", c.name, c.detail);
    }
    println!("ACCEPTANCE 3 counterexample golden checklist PASS (13/13)");
}

/// Criterion 4: scanning the full girth >= 6 corpus up to 24 vertices for
/// essentially 4-edge-connected pseudo-2FI graphs yields exactly the
/// Heawood and Pappus graphs.
#[test]
fn criterion_4_scan_survivors() {
    let outcome = scan(24, 6).expect("scan runs");
    let survivors: BTreeSet<String> = outcome.survivors.iter().map(cert).collect();
    let expected: BTreeSet<String> = [cert(&named(Name::Heawood)), cert(&named(Name::Pappus))]
        .into_iter()
        .collect();
    assert_eq!(survivors, expected, "survivors must be Heawood and Pappus");
    let generated: u64 = outcome.tallies.iter().map(|t| t.1).sum();
    assert_eq!(generated, 1 + 1 + 3 + 10 + 28 + 162);
    println!("ACCEPTANCE 4 scan n<=24 survivors PASS (Heawood, Pappus)");
}

/// Companion to criterion 4: the girth >= 8 corpus through 30 vertices
/// has no essentially 4-edge-connected pseudo-2FI graph at all.
#[test]
fn criterion_4b_scan_girth8_no_survivors() {
    let outcome = scan(30, 8).expect("scan runs");
    assert!(outcome.survivors.is_empty(), "no survivors expected");
    let generated: u64 = outcome.tallies.iter().map(|t| t.1).sum();
    assert_eq!(generated, 1, "only the 30-vertex girth-8 graph exists in range");
    println!("ACCEPTANCE 4b scan girth>=8 n<=30 PASS (0 survivors)");
}

/// Criterion 5: the only 2-factor hamiltonian graph in the girth >= 6
/// corpus up to 24 vertices is the Heawood graph.
#[test]
fn criterion_5_two_factor_hamiltonian_slice() {
    let mut hits = Vec::new();
    for g in girth6_corpus(24) {
        let verdict = factors::two_factor_hamiltonian(&g);
        assert!(!verdict.vacuous, "corpus graphs all have 2-factors");
        if verdict.two_factor_hamiltonian {
            hits.push(cert(&g));
        }
    }
    assert_eq!(hits, vec![cert(&named(Name::Heawood))]);
    println!("ACCEPTANCE 5 2FH graphs in girth>=6 n<=24 PASS (Heawood only)");
}

/// Criterion 6: the two independent 2-factor enumerators produce
/// identical sets and counts on the n <= 20 corpus and the named graphs.
#[test]
fn criterion_6_dual_enumerator_equivalence() {
    let mut graphs = girth6_corpus(20);
    graphs.extend(Name::ALL.iter().map(|&n| named(n)));
    let mut checked = 0;
    for g in &graphs {
        let mut direct = factors::two_factors_direct(g);
        let mut via = factors::two_factors_via_matchings(g).expect("corpus graphs are cubic");
        assert_eq!(direct.len(), via.len(), "count mismatch");
        direct.sort();
        via.sort();
        assert_eq!(direct, via, "2-factor set mismatch");
        checked += 1;
    }
    assert_eq!(checked, 15 + 5);
    println!(
        "ACCEPTANCE 6 dual enumerator agreement PASS ({} graphs, identical sets)",
        checked
    );
}

/// Criterion 7a: graph6 round-trip on 10,000 random graphs.
#[test]
fn criterion_7a_graph6_roundtrip() {
    let mut rng = Rng(0x6a09e667f3bcc908);
    for i in 0..10_000usize {
        let n = 1 + rng.below(24);
        let g = rng.graph(n, 50);
        let line = codec::encode_graph6(&g);
        assert_eq!(codec::decode_graph6(&line).expect("round trip"), g, "case {}", i);
    }
    // Large-header sizes as well.
    for n in [63usize, 64] {
        let mut edges = Vec::new();
        for v in 1..n {
            edges.push((0, v));
        }
        let g = Graph::build(n, &edges).unwrap();
        assert_eq!(codec::decode_graph6(&codec::encode_graph6(&g)).unwrap(), g);
    }
    println!("ACCEPTANCE 7a graph6 round-trip PASS (10000 graphs)");
}

/// Criterion 7b: canonical form is invariant under 100 random
/// relabelings per graph.
#[test]
fn criterion_7b_canonical_invariance() {
    let mut rng = Rng(0xbb67ae8584caa73b);
    let mut corpus: Vec<Graph> = Name::ALL.iter().map(|&n| named(n)).collect();
    corpus.extend(girth6_corpus(18));
    for _ in 0..20 {
        let n = 2 + rng.below(11);
        corpus.push(rng.graph(n, 40));
    }
    for g in &corpus {
        let reference = cert(g);
        for _ in 0..100 {
            let p = rng.perm(g.n());
            assert_eq!(cert(&g.relabel(&p)), reference, "certificate must be label-free");
        }
    }
    println!(
        "ACCEPTANCE 7b canonical invariance PASS ({} graphs x 100 relabelings)",
        corpus.len()
    );
}

/// Criterion 7c: automorphism group order agrees with the all-permutations
/// oracle on every labeled graph with up to 6 vertices and on random
/// samples at 7 and 8 vertices (where the backtracking oracle is checked
/// too).
#[test]
fn criterion_7c_automorphism_oracle() {
    let mut cases = 0u64;
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::build(n, &edges).unwrap();
            let fast = symmetry::automorphisms(&g).group_size;
            let naive = oracle::automorphism_count_all_permutations(&g) as u128;
            assert_eq!(fast, naive, "n={} mask={}", n, mask);
            cases += 1;
        }
    }
    let mut rng = Rng(0x3c6ef372fe94f82b);
    for n in [7usize, 8] {
        for _ in 0..300 {
            let density = 30 + rng.below(40) as u64;
            let g = rng.graph(n, density);
            let fast = symmetry::automorphisms(&g).group_size;
            let naive = oracle::automorphism_count_all_permutations(&g) as u128;
            let backtracking = oracle::automorphism_count_backtracking(&g) as u128;
            assert_eq!(fast, naive);
            assert_eq!(fast, backtracking);
            cases += 1;
        }
    }
    println!("ACCEPTANCE 7c automorphism oracle PASS ({} graphs)", cases);
}

/// Criterion 7d: connectivity predicates agree with exhaustive cut
/// enumeration on every test graph with at most 21 edges.
#[test]
fn criterion_7d_connectivity_oracle() {
    let mut corpus: Vec<Graph> = vec![
        named(Name::K33),
        named(Name::Heawood), // 21 edges
        Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap(),
        petersen(),
        // Two squares joined by two edges.
        Graph::build(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (2, 6)],
        )
        .unwrap(),
    ];
    let k33 = named(Name::K33);
    corpus.push(
        star_product(&StarProductSpec {
            g1: &k33,
            g2: &k33,
            x: 0,
            y: 0,
            pairing: [(3, 3), (4, 4), (5, 5)],
        })
        .unwrap(),
    );
    for n in [6usize, 8, 10, 12] {
        generate(GenSpec::new(n, 4).unwrap(), &mut |g| corpus.push(g.clone()));
    }
    let mut rng = Rng(0xa54ff53a5f1d36f1);
    let mut added = 0;
    while added < 30 {
        let n = 4 + rng.below(5);
        let g = rng.graph(n, 40);
        if g.edge_count() <= 21 {
            corpus.push(g);
            added += 1;
        }
    }

    let mut checked = 0;
    for g in &corpus {
        assert!(g.edge_count() <= 21, "oracle corpus stays within 21 edges");
        assert_eq!(
            connectivity::edge_connectivity(g),
            oracle::edge_connectivity_exhaustive(g)
        );
        let (e4, witness) = connectivity::is_essentially_4_edge_connected(g);
        let naive_min = oracle::essential_cut_min_exhaustive(g);
        assert_eq!(e4, naive_min.map_or(true, |c| c >= 4));
        if let Some(cut) = witness {
            assert!(cut.validate(g));
            assert!(cut.edges.len() < 4);
            let min = naive_min.expect("witness implies an essential cut exists");
            assert!(min <= cut.edges.len());
        }
        assert_eq!(
            connectivity::cyclic_edge_connectivity(g),
            oracle::cyclic_cut_min_exhaustive(g)
        );
        checked += 1;
    }
    println!("ACCEPTANCE 7d connectivity oracle PASS ({} graphs <= 21 edges)", checked);
}

/// Criterion 7e: star product followed by decomposition returns the two
/// factors, on 100 random pairs of irreducible cubic bipartite graphs.
#[test]
fn criterion_7e_star_roundtrip() {
    let mut pool: Vec<Graph> = vec![named(Name::K33)];
    for n in [14usize, 16, 18] {
        generate(GenSpec::new(n, 6).unwrap(), &mut |g| pool.push(g.clone()));
    }
    for g in &pool {
        assert_eq!(star_decompose(g), StarDecomposition::Irreducible);
    }
    let mut rng = Rng(0x510e527fade682d1);
    for round in 0..100 {
        let g1 = &pool[rng.below(pool.len())];
        let g2 = &pool[rng.below(pool.len())];
        let x = rng.below(g1.n());
        let y = rng.below(g2.n());
        let xs = g1.neighbors(x);
        let ys_perm = rng.perm(3);
        let ys = g2.neighbors(y);
        let spec = StarProductSpec {
            g1,
            g2,
            x,
            y,
            pairing: [
                (xs[0], ys[ys_perm[0]]),
                (xs[1], ys[ys_perm[1]]),
                (xs[2], ys[ys_perm[2]]),
            ],
        };
        let product = star_product(&spec).expect("valid spec");
        assert_eq!(product.n(), g1.n() + g2.n() - 2);
        assert_eq!(product.edge_count(), g1.edge_count() + g2.edge_count() - 3);
        assert!(product.is_regular(3));

        let StarDecomposition::Pieces(a, b) = star_decompose(&product) else {
            panic!("round {}: product must decompose", round)
        };
        let mut got = vec![cert(&a), cert(&b)];
        let mut want = vec![cert(g1), cert(g2)];
        got.sort();
        want.sort();
        assert_eq!(got, want, "round {}: pieces must match the factors", round);
    }
    println!("ACCEPTANCE 7e star product/decompose round-trip PASS (100 pairs)");
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::build(10, &edges).unwrap()
}
