//! Named graphs, star products and their inverses, and membership testing
//! for the star-product families.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::graph::{Edge, Graph};
use crate::symmetry;

/// The graphs the analyses keep coming back to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Name {
    K33,
    Heawood,
    Pappus,
    CounterexampleG,
    MoebiusKantor,
}

impl Name {
    pub const ALL: [Name; 5] = [
        Name::K33,
        Name::Heawood,
        Name::Pappus,
        Name::CounterexampleG,
        Name::MoebiusKantor,
    ];

    /// Lowercase identifier used for fixture file names.
    pub fn slug(&self) -> &'static str {
        match self {
            Name::K33 => "k33",
            Name::Heawood => "heawood",
            Name::Pappus => "pappus",
            Name::CounterexampleG => "counterexample_g",
            Name::MoebiusKantor => "moebius_kantor",
        }
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for Name {
    type Err = String;

    fn from_str(s: &str) -> Result<Name, String> {
        match s.to_ascii_lowercase().as_str() {
            "k33" | "k3,3" => Ok(Name::K33),
            "heawood" => Ok(Name::Heawood),
            "pappus" => Ok(Name::Pappus),
            "counterexample_g" | "counterexample" | "g" => Ok(Name::CounterexampleG),
            "moebius_kantor" | "moebius-kantor" | "mobius_kantor" => Ok(Name::MoebiusKantor),
            other => Err(format!("unknown graph name: {}", other)),
        }
    }
}

/// Adjacency of the 30-vertex counterexample, row `v` listing its three
/// neighbors.
const COUNTEREXAMPLE_ADJ: [[usize; 3]; 30] = [
    [1, 13, 29],
    [0, 2, 26],
    [1, 3, 21],
    [2, 4, 28],
    [3, 5, 19],
    [4, 6, 22],
    [5, 7, 15],
    [6, 8, 24],
    [7, 9, 27],
    [8, 10, 18],
    [9, 11, 25],
    [10, 12, 20],
    [11, 13, 17],
    [0, 12, 14],
    [13, 15, 23],
    [6, 14, 16],
    [15, 17, 29],
    [12, 16, 18],
    [9, 17, 19],
    [4, 18, 20],
    [11, 19, 21],
    [2, 20, 22],
    [5, 21, 23],
    [14, 22, 24],
    [7, 23, 25],
    [10, 24, 26],
    [1, 25, 27],
    [8, 26, 28],
    [3, 27, 29],
    [0, 16, 28],
];

/// Returns the fixed labeled copy of a named graph.
pub fn named(name: Name) -> Graph {
    match name {
        Name::K33 => {
            let mut edges = Vec::new();
            for u in 0..3 {
                for v in 3..6 {
                    edges.push((u, v));
                }
            }
            Graph::build(6, &edges).expect("K3,3 is valid")
        }
        Name::Heawood => lcf(&[5, -5], 7),
        Name::Pappus => lcf(&[5, 7, -7, 7, -7, -5], 3),
        Name::CounterexampleG => {
            let mut edges = Vec::new();
            for (v, nbrs) in COUNTEREXAMPLE_ADJ.iter().enumerate() {
                for &w in nbrs {
                    if v < w {
                        edges.push((v, w));
                    }
                }
            }
            Graph::build(30, &edges).expect("counterexample adjacency is valid")
        }
        Name::MoebiusKantor => generalized_petersen(8, 3),
    }
}

/// Graph from LCF notation: a hamiltonian cycle on `reps * pattern.len()`
/// vertices plus the chord `i -> i + pattern[i mod len]`.
fn lcf(pattern: &[i64], reps: usize) -> Graph {
    let n = pattern.len() * reps;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for i in 0..n {
        let cyc = (i, (i + 1) % n);
        let chord_to = ((i as i64 + pattern[i % pattern.len()]).rem_euclid(n as i64)) as usize;
        for (a, b) in [cyc, (i, chord_to)] {
            let key = (a.min(b), a.max(b));
            if seen.insert(key) {
                edges.push(key);
            }
        }
    }
    Graph::build(n, &edges).expect("LCF construction is valid")
}

fn generalized_petersen(n: usize, k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, i + n));
        edges.push((i + n, (i + k) % n + n));
    }
    Graph::build(2 * n, &edges).expect("generalized Petersen construction is valid")
}

/// Inputs for a star product: delete `x` from `g1` and `y` from `g2`, then
/// join the neighbor triples according to `pairing`.
pub struct StarProductSpec<'a> {
    pub g1: &'a Graph,
    pub g2: &'a Graph,
    pub x: usize,
    pub y: usize,
    /// `pairing[i] = (xi, yi)` with `xi` a neighbor of `x`, `yi` of `y`.
    pub pairing: [(usize, usize); 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarError {
    /// `x` or `y` does not have degree 3.
    BadDegree { vertex: usize },
    /// The pairing is not a bijection between the two neighbor triples.
    BadPairing,
}

impl fmt::Display for StarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarError::BadDegree { vertex } => {
                write!(f, "vertex {} does not have degree 3", vertex)
            }
            StarError::BadPairing => write!(f, "pairing is not a neighbor bijection"),
        }
    }
}

impl std::error::Error for StarError {}

/// Builds the star product on `|V1| + |V2| - 2` vertices.
///
/// Vertices of `g1 - x` come first in their original order, then those of
/// `g2 - y`. The three pairing edges form the seam between the two sides.
pub fn star_product(spec: &StarProductSpec) -> Result<Graph, StarError> {
    let StarProductSpec { g1, g2, x, y, pairing } = spec;
    if g1.degree(*x) != 3 {
        return Err(StarError::BadDegree { vertex: *x });
    }
    if g2.degree(*y) != 3 {
        return Err(StarError::BadDegree { vertex: *y });
    }
    let mut xs: Vec<usize> = pairing.iter().map(|&(a, _)| a).collect();
    let mut ys: Vec<usize> = pairing.iter().map(|&(_, b)| b).collect();
    xs.sort_unstable();
    ys.sort_unstable();
    if xs != g1.neighbors(*x) || ys != g2.neighbors(*y) {
        return Err(StarError::BadPairing);
    }

    let map1: Vec<Option<usize>> = {
        let mut next = 0;
        (0..g1.n())
            .map(|v| {
                if v == *x {
                    None
                } else {
                    let id = next;
                    next += 1;
                    Some(id)
                }
            })
            .collect()
    };
    let offset = g1.n() - 1;
    let map2: Vec<Option<usize>> = {
        let mut next = offset;
        (0..g2.n())
            .map(|v| {
                if v == *y {
                    None
                } else {
                    let id = next;
                    next += 1;
                    Some(id)
                }
            })
            .collect()
    };
    let mut edges = Vec::new();
    for e in g1.edges() {
        if let (Some(a), Some(b)) = (map1[e.u], map1[e.v]) {
            edges.push((a, b));
        }
    }
    for e in g2.edges() {
        if let (Some(a), Some(b)) = (map2[e.u], map2[e.v]) {
            edges.push((a, b));
        }
    }
    for &(xi, yi) in pairing {
        edges.push((
            map1[xi].expect("pairing endpoint is not x"),
            map2[yi].expect("pairing endpoint is not y"),
        ));
    }
    Ok(Graph::build(g1.n() + g2.n() - 2, &edges).expect("star product of valid graphs is valid"))
}

/// Result of attempting to invert a star product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarDecomposition {
    /// The two factors; the side containing vertex 0 comes first.
    Pieces(Graph, Graph),
    Irreducible,
}

/// Splits `g` along its lexicographically least essential 3-edge-cut of
/// three pairwise independent edges, contracting each side to a new
/// degree-3 vertex. Returns `Irreducible` when no such cut exists.
pub fn star_decompose(g: &Graph) -> StarDecomposition {
    assert!(g.is_regular(3), "star decomposition expects a cubic graph");
    assert!(g.is_connected(), "star decomposition expects a connected graph");
    let edges = g.edges();
    let m = edges.len();
    for i in 0..m {
        for j in i + 1..m {
            if share_endpoint(&edges[i], &edges[j]) {
                continue;
            }
            for k in j + 1..m {
                if share_endpoint(&edges[i], &edges[k]) || share_endpoint(&edges[j], &edges[k]) {
                    continue;
                }
                let cut = [edges[i], edges[j], edges[k]];
                if let Some(pieces) = try_split(g, &cut) {
                    return StarDecomposition::Pieces(pieces.0, pieces.1);
                }
            }
        }
    }
    StarDecomposition::Irreducible
}

fn share_endpoint(a: &Edge, b: &Edge) -> bool {
    a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v
}

/// Accepts the cut when its removal leaves exactly two components with all
/// three edges crossing between them; builds the contracted factors.
fn try_split(g: &Graph, cut: &[Edge; 3]) -> Option<(Graph, Graph)> {
    let n = g.n();
    let removed = |u: usize, v: usize| {
        cut.iter()
            .any(|e| (e.u, e.v) == (u.min(v), u.max(v)))
    };
    let mut comp = vec![usize::MAX; n];
    let mut ncomp = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        if ncomp == 2 {
            return None;
        }
        comp[start] = ncomp;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if removed(u, v) || comp[v] != usize::MAX {
                    continue;
                }
                comp[v] = ncomp;
                stack.push(v);
            }
        }
        ncomp += 1;
    }
    if ncomp != 2 {
        return None;
    }
    for e in cut {
        if comp[e.u] == comp[e.v] {
            return None;
        }
    }
    let piece = |side: usize| -> Graph {
        let vertices: Vec<usize> = (0..n).filter(|&v| comp[v] == side).collect();
        let mut local = vec![usize::MAX; n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let hub = vertices.len();
        let mut edges = Vec::new();
        for e in g.edges() {
            if comp[e.u] == side && comp[e.v] == side {
                edges.push((local[e.u], local[e.v]));
            }
        }
        for e in cut {
            let endpoint = if comp[e.u] == side { e.u } else { e.v };
            edges.push((local[endpoint], hub));
        }
        Graph::build(hub + 1, &edges).expect("contracted factor is valid")
    };
    let first_side = comp[0];
    Some((piece(first_side), piece(1 - first_side)))
}

/// True iff repeatedly splitting along essential 3-cuts reduces `g` to
/// pieces each isomorphic to a basis graph. Memoized by certificate since
/// repeated products share factors.
pub fn in_family(g: &Graph, basis: &[Graph]) -> bool {
    let basis_certs: Vec<String> = basis
        .iter()
        .map(|b| symmetry::canonical_form(b).certificate)
        .collect();
    let mut memo: HashMap<String, bool> = HashMap::new();
    in_family_rec(g, &basis_certs, &mut memo)
}

fn in_family_rec(g: &Graph, basis_certs: &[String], memo: &mut HashMap<String, bool>) -> bool {
    let cert = symmetry::canonical_form(g).certificate;
    if basis_certs.contains(&cert) {
        return true;
    }
    if let Some(&cached) = memo.get(&cert) {
        return cached;
    }
    let result = match star_decompose(g) {
        StarDecomposition::Irreducible => false,
        StarDecomposition::Pieces(a, b) => {
            in_family_rec(&a, basis_certs, memo) && in_family_rec(&b, basis_certs, memo)
        }
    };
    memo.insert(cert, result);
    result
}
