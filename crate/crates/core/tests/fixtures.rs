//! The shipped fixture files must stay in lockstep with the in-code named
//! graphs, in both formats.

use std::path::Path;

use cbg_core::codec;
use cbg_core::constructions::{named, Name};

fn fixture(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {}", path.display(), e))
}

#[test]
fn graph6_fixtures_match_named_graphs() {
    for name in Name::ALL {
        let text = fixture(&format!("{}.g6", name.slug()));
        let g = codec::decode_graph6(text.trim_end()).expect("fixture decodes");
        assert_eq!(g, named(name), "{} graph6 fixture drifted", name);
        assert_eq!(text, format!("{}\n", codec::encode_graph6(&named(name))));
    }
}

#[test]
fn adjlist_fixtures_match_named_graphs() {
    for name in Name::ALL {
        let text = fixture(&format!("{}.adj", name.slug()));
        let g = codec::read_adjlist(&text).expect("fixture parses");
        assert_eq!(g, named(name), "{} adjacency fixture drifted", name);
        assert_eq!(text, codec::write_adjlist(&named(name)));
    }
}

#[test]
fn counterexample_fixture_matches_reference_rows() {
    // The reference adjacency list, row for row.
    let text = fixture("counterexample_g.adj");
    let expected = "\
0: 1 13 29\n1: 0 2 26\n2: 1 3 21\n3: 2 4 28\n4: 3 5 19\n5: 4 6 22\n6: 5 7 15\n7: 6 8 24\n\
8: 7 9 27\n9: 8 10 18\n10: 9 11 25\n11: 10 12 20\n12: 11 13 17\n13: 0 12 14\n14: 13 15 23\n\
15: 6 14 16\n16: 15 17 29\n17: 12 16 18\n18: 9 17 19\n19: 4 18 20\n20: 11 19 21\n\
21: 2 20 22\n22: 5 21 23\n23: 14 22 24\n24: 7 23 25\n25: 10 24 26\n26: 1 25 27\n\
27: 8 26 28\n28: 3 27 29\n29: 0 16 28\n";
    assert_eq!(text, expected);
}
