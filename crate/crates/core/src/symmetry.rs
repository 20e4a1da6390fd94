//! Canonical forms, graph identity, automorphism groups and
//! vertex-transitivity via individualization-refinement.
//!
//! The search refines an ordered partition to equitability, individualizes
//! vertices from the first smallest non-singleton cell, and takes the
//! minimal graph6 encoding over all discrete leaves as the certificate.
//! Automorphisms are harvested from leaves with equal encodings and used
//! both to prune the search and to compute the exact group order through a
//! Schreier-style stabilizer chain.

use std::collections::{HashSet, VecDeque};

use crate::codec::graph6_bytes_with;
use crate::graph::Graph;

pub(crate) type Perm = Vec<usize>;

pub(crate) fn compose(p: &Perm, q: &Perm) -> Perm {
    // (p . q)(v) = p[q[v]]
    q.iter().map(|&v| p[v]).collect()
}

pub(crate) fn inverse(p: &Perm) -> Perm {
    let mut inv = vec![0; p.len()];
    for (v, &img) in p.iter().enumerate() {
        inv[img] = v;
    }
    inv
}

fn is_identity(p: &Perm) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

/// Canonical relabeling plus the graph6 certificate of the relabeled graph.
///
/// Certificates of two graphs are equal iff the graphs are isomorphic,
/// provided both were computed from the same initial-partition shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Vertex `v` of the input receives canonical label `relabeling[v]`.
    pub relabeling: Vec<usize>,
    /// graph6 line of the canonically relabeled graph.
    pub certificate: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismInfo {
    /// Exact order of the automorphism group.
    pub group_size: u128,
    /// Vertex orbits, each sorted, ordered by smallest member.
    pub vertex_orbits: Vec<Vec<usize>>,
    /// A generating set for the group (may be empty for the trivial group).
    pub generators: Vec<Perm>,
}

impl AutomorphismInfo {
    pub fn orbit_id(&self) -> Vec<usize> {
        let mut id = vec![0; self.vertex_orbits.iter().map(|o| o.len()).sum()];
        for (i, orbit) in self.vertex_orbits.iter().enumerate() {
            for &v in orbit {
                id[v] = i;
            }
        }
        id
    }
}

/// Combined result of one refinement search.
#[derive(Debug, Clone)]
pub struct Symmetry {
    pub canonical: CanonicalForm,
    pub automorphisms: AutomorphismInfo,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    analyze(g, None).canonical
}

pub fn automorphisms(g: &Graph) -> AutomorphismInfo {
    analyze(g, None).automorphisms
}

/// True iff some automorphism maps any vertex to any other.
pub fn is_vertex_transitive(g: &Graph) -> bool {
    automorphisms(g).vertex_orbits.len() == 1
}

/// Runs the search once, producing certificate and group data together.
///
/// `initial` is an optional ordered color partition; cells keep their
/// relative order in the canonical labeling, so certificates computed under
/// different initial partitions must never be compared.
pub fn analyze(g: &Graph, initial: Option<&[Vec<usize>]>) -> Symmetry {
    let n = g.n();
    let cells: Vec<Vec<usize>> = match initial {
        Some(cells) => {
            let mut seen = vec![false; n];
            for cell in cells {
                for &v in cell {
                    assert!(v < n && !seen[v], "initial partition must partition 0..n");
                    seen[v] = true;
                }
            }
            assert!(seen.iter().all(|&s| s), "initial partition must cover 0..n");
            cells.iter().filter(|c| !c.is_empty()).cloned().collect()
        }
        None => vec![(0..n).collect()],
    };

    let mut ctx = SearchCtx {
        g,
        first: None,
        best: None,
        gens: Vec::new(),
    };
    let queue: VecDeque<u64> = cells.iter().map(|c| cell_mask(c)).collect();
    let mut path = Vec::new();
    ctx.node(cells, queue, &mut path);

    let (best_cert, best_perm) = ctx.best.expect("search visits at least one leaf");
    let orbits = orbits_from_generators(n, &ctx.gens);
    let group_size = group_order(n, &ctx.gens);
    Symmetry {
        canonical: CanonicalForm {
            relabeling: best_perm,
            certificate: String::from_utf8(best_cert).expect("graph6 is printable ASCII"),
        },
        automorphisms: AutomorphismInfo {
            group_size,
            vertex_orbits: orbits,
            generators: ctx.gens,
        },
    }
}

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0u64, |m, &v| m | 1 << v)
}

struct SearchCtx<'a> {
    g: &'a Graph,
    first: Option<(Vec<u8>, Perm)>,
    best: Option<(Vec<u8>, Perm)>,
    gens: Vec<Perm>,
}

impl<'a> SearchCtx<'a> {
    fn node(&mut self, mut cells: Vec<Vec<usize>>, queue: VecDeque<u64>, path: &mut Vec<usize>) {
        refine(self.g, &mut cells, queue);

        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);

        let Some(target) = target else {
            self.leaf(&cells);
            return;
        };

        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() && self.pruned_by_orbit(path, &explored, v) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&u| u != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            path.push(v);
            self.node(child, VecDeque::from([1u64 << v]), path);
            path.pop();
            explored.push(v);
        }
    }

    /// True when a discovered automorphism fixing every path vertex maps
    /// `v` into the explored set; the subtree is then isomorphic to an
    /// already-searched sibling and can be skipped.
    fn pruned_by_orbit(&self, path: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.n();
        let mut uf = UnionFind::new(n);
        for gen in &self.gens {
            if path.iter().any(|&p| gen[p] != p) {
                continue;
            }
            for x in 0..n {
                uf.union(x, gen[x]);
            }
        }
        let rv = uf.find(v);
        explored.iter().any(|&u| uf.find(u) == rv)
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.g.n();
        let mut perm = vec![0; n];
        let mut inv = vec![0; n];
        for (pos, cell) in cells.iter().enumerate() {
            debug_assert_eq!(cell.len(), 1);
            perm[cell[0]] = pos;
            inv[pos] = cell[0];
        }
        let cert = graph6_bytes_with(n, |i, j| self.g.has_edge(inv[i], inv[j]));

        let Some((first_cert, first_perm)) = self.first.clone() else {
            self.first = Some((cert.clone(), perm.clone()));
            self.best = Some((cert, perm));
            return;
        };
        if cert == first_cert {
            self.record_automorphism(&inverse(&first_perm), &perm);
        }
        let (best_cert, best_perm) = self.best.clone().expect("best set with first");
        if cert == best_cert && best_cert != first_cert {
            self.record_automorphism(&inverse(&best_perm), &perm);
        }
        if cert < best_cert {
            self.best = Some((cert, perm));
        }
    }

    fn record_automorphism(&mut self, stored_inv: &Perm, perm: &Perm) {
        let gamma = compose(stored_inv, perm);
        if !is_identity(&gamma) && !self.gens.contains(&gamma) {
            self.gens.push(gamma);
        }
    }
}

/// Equitable refinement of an ordered partition.
///
/// `queue` holds splitter sets as bitmasks. Cells are repeatedly split by
/// neighbor counts into a splitter; subcells are ordered by ascending count
/// and each becomes a splitter itself. Terminates when every cell has a
/// uniform count into every splitter seen.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>, mut queue: VecDeque<u64>) {
    while let Some(w) = queue.pop_front() {
        let mut i = 0;
        while i < cells.len() {
            if cells[i].len() == 1 {
                i += 1;
                continue;
            }
            let counts: Vec<u32> = cells[i]
                .iter()
                .map(|&v| (g.neighbor_bits(v) & w).count_ones())
                .collect();
            if counts.iter().all(|&c| c == counts[0]) {
                i += 1;
                continue;
            }
            let mut keyed: Vec<(u32, usize)> = counts
                .iter()
                .zip(cells[i].iter())
                .map(|(&c, &v)| (c, v))
                .collect();
            keyed.sort_by_key(|&(c, _)| c);
            let mut runs: Vec<Vec<usize>> = Vec::new();
            for (c, v) in keyed {
                match runs.last_mut() {
                    Some(run) if (g.neighbor_bits(run[0]) & w).count_ones() == c => run.push(v),
                    _ => runs.push(vec![v]),
                }
            }
            let num_runs = runs.len();
            for run in &runs {
                queue.push_back(cell_mask(run));
            }
            cells.splice(i..=i, runs);
            i += num_runs;
        }
    }
}

/// Orbits of `0..n` under the group generated by `gens`.
fn orbits_from_generators(n: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(n);
    for gen in gens {
        for v in 0..n {
            uf.union(v, gen[v]);
        }
    }
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        buckets[uf.find(v)].push(v);
    }
    buckets.retain(|b| !b.is_empty());
    buckets.sort_by_key(|b| b[0]);
    buckets
}

/// Exact group order by recursive orbit-stabilizer with Schreier's lemma.
///
/// Fine for the group sizes that arise on desk-scale graphs; aborts rather
/// than overflow or thrash on pathologically large groups.
fn group_order(n: usize, gens: &[Perm]) -> u128 {
    let gens: Vec<Perm> = gens.iter().filter(|p| !is_identity(p)).cloned().collect();
    if gens.is_empty() {
        return 1;
    }
    let base = (0..n)
        .find(|&v| gens.iter().any(|g| g[v] != v))
        .expect("non-identity generator moves a point");

    // Orbit of the base point with a transversal.
    let mut transversal: Vec<Option<Perm>> = vec![None; n];
    transversal[base] = Some((0..n).collect());
    let mut orbit = vec![base];
    let mut head = 0;
    while head < orbit.len() {
        let x = orbit[head];
        head += 1;
        let tx = transversal[x].clone().expect("orbit points have transversals");
        for gen in &gens {
            let y = gen[x];
            if transversal[y].is_none() {
                transversal[y] = Some(compose(gen, &tx));
                orbit.push(y);
            }
        }
    }

    // Schreier generators for the stabilizer of the base point.
    let mut stab: HashSet<Perm> = HashSet::new();
    for &x in &orbit {
        let tx = transversal[x].as_ref().expect("in orbit");
        for gen in &gens {
            let y = gen[x];
            let ty_inv = inverse(transversal[y].as_ref().expect("in orbit"));
            let schreier = compose(&ty_inv, &compose(gen, tx));
            if !is_identity(&schreier) {
                stab.insert(schreier);
            }
        }
        assert!(
            stab.len() < 1_000_000,
            "automorphism group too large for desk-scale order computation"
        );
    }
    let stab: Vec<Perm> = stab.into_iter().collect();
    (orbit.len() as u128)
        .checked_mul(group_order(n, &stab))
        .expect("group order exceeds u128")
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}
