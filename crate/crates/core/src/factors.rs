//! Perfect matchings, 2-factors and the two central predicates.
//!
//! Two independent enumeration routes are kept deliberately separate: a
//! direct search that assembles vertex-disjoint cycles, and a perfect
//! matching backtracker whose complements give the 2-factors of a cubic
//! graph. Agreement of the two routes on every cubic input is the crate's
//! core cross-validation contract.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::{Edge, Graph};

/// A perfect matching as a sorted edge list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matching {
    pub edges: Vec<Edge>,
}

/// A 2-factor: vertex-disjoint cycles covering every vertex.
///
/// Each cycle starts at its smallest vertex with the smaller of its two
/// neighbors second; cycles are ordered by their smallest vertex. Two
/// 2-factors are equal iff they have the same edge set, which this
/// normal form makes a plain structural comparison.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TwoFactor {
    pub cycles: Vec<Vec<usize>>,
}

impl TwoFactor {
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn edge_set(&self) -> Vec<Edge> {
        let mut edges = Vec::new();
        for cycle in &self.cycles {
            for i in 0..cycle.len() {
                edges.push(Edge::new(cycle[i], cycle[(i + 1) % cycle.len()]));
            }
        }
        edges.sort_unstable();
        edges
    }

    /// Sanity checks against the owning graph: disjoint cycles covering
    /// all vertices, every consecutive pair an edge.
    pub fn validate(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for cycle in &self.cycles {
            if cycle.len() < 3 {
                return false;
            }
            for i in 0..cycle.len() {
                let u = cycle[i];
                let v = cycle[(i + 1) % cycle.len()];
                if seen[u] || !g.has_edge(u, v) {
                    return false;
                }
                seen[u] = true;
            }
        }
        seen.iter().all(|&s| s)
    }
}

impl fmt::Display for TwoFactor {
    /// Comma-separated cycles of dash-separated vertices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, cycle) in self.cycles.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            for (j, v) in cycle.iter().enumerate() {
                if j > 0 {
                    write!(f, "-")?;
                }
                write!(f, "{}", v)?;
            }
        }
        Ok(())
    }
}

/// Weakly increasing multiset of cycle lengths; sums to |V|.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CycleStructure {
    pub lengths: Vec<usize>,
}

impl fmt::Display for CycleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.lengths.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l)?;
        }
        write!(f, ")")
    }
}

pub fn cycle_structure(f: &TwoFactor) -> CycleStructure {
    let mut lengths: Vec<usize> = f.cycles.iter().map(|c| c.len()).collect();
    lengths.sort_unstable();
    CycleStructure { lengths }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorError {
    /// Operation requires a cubic graph.
    NotCubic,
    /// The supplied matching is not a perfect matching of the graph.
    NotAPerfectMatching,
}

impl fmt::Display for FactorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorError::NotCubic => write!(f, "graph is not cubic"),
            FactorError::NotAPerfectMatching => write!(f, "not a perfect matching of the graph"),
        }
    }
}

impl std::error::Error for FactorError {}

/// Visits all perfect matchings in lexicographic edge-list order.
/// The visitor returns `false` to stop early.
pub fn for_each_perfect_matching(g: &Graph, visit: &mut impl FnMut(&Matching) -> bool) {
    let n = g.n();
    if n % 2 == 1 {
        return;
    }
    let mut covered = 0u64;
    let mut chosen: Vec<Edge> = Vec::with_capacity(n / 2);
    match_next(g, &mut covered, &mut chosen, visit);
}

fn match_next(
    g: &Graph,
    covered: &mut u64,
    chosen: &mut Vec<Edge>,
    visit: &mut impl FnMut(&Matching) -> bool,
) -> bool {
    let n = g.n();
    let v = match (0..n).find(|&v| *covered >> v & 1 == 0) {
        Some(v) => v,
        None => {
            return visit(&Matching {
                edges: chosen.clone(),
            });
        }
    };
    // Branch on the lowest uncovered vertex: every matching covers it, so
    // this enumerates each matching exactly once.
    for &w in g.neighbors(v) {
        if *covered >> w & 1 == 1 {
            continue;
        }
        *covered |= 1 << v | 1 << w;
        chosen.push(Edge::new(v, w));
        let go_on = match_next(g, covered, chosen, visit);
        chosen.pop();
        *covered &= !(1 << v | 1 << w);
        if !go_on {
            return false;
        }
    }
    true
}

pub fn perfect_matchings(g: &Graph) -> Vec<Matching> {
    let mut out = Vec::new();
    for_each_perfect_matching(g, &mut |m| {
        out.push(m.clone());
        true
    });
    out
}

pub fn count_perfect_matchings(g: &Graph) -> u64 {
    let mut count = 0;
    for_each_perfect_matching(g, &mut |_| {
        count += 1;
        true
    });
    count
}

/// The 2-factor left by deleting a perfect matching from a cubic graph.
pub fn complement_two_factor(g: &Graph, m: &Matching) -> Result<TwoFactor, FactorError> {
    if !g.is_regular(3) {
        return Err(FactorError::NotCubic);
    }
    let n = g.n();
    let mut matched_with = vec![usize::MAX; n];
    for e in &m.edges {
        if e.u >= n || e.v >= n || !g.has_edge(e.u, e.v) {
            return Err(FactorError::NotAPerfectMatching);
        }
        if matched_with[e.u] != usize::MAX || matched_with[e.v] != usize::MAX {
            return Err(FactorError::NotAPerfectMatching);
        }
        matched_with[e.u] = e.v;
        matched_with[e.v] = e.u;
    }
    if matched_with.iter().any(|&w| w == usize::MAX) {
        return Err(FactorError::NotAPerfectMatching);
    }
    // Remaining degree is exactly 2; walk the cycles.
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| w != prev && w != matched_with[cur] && (w == start || !seen[w]))
                .expect("complement of a perfect matching in a cubic graph is 2-regular");
            if next == start {
                break;
            }
            seen[next] = true;
            cycle.push(next);
            prev = cur;
            cur = next;
        }
        cycles.push(normalize_cycle(cycle));
    }
    cycles.sort_by_key(|c| c[0]);
    Ok(TwoFactor { cycles })
}

fn normalize_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    // Rotate the smallest vertex to the front.
    let min_pos = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(i, _)| i)
        .expect("cycle is non-empty");
    cycle.rotate_left(min_pos);
    // Reflect so the second vertex is the smaller neighbor.
    if cycle.len() >= 3 && cycle[1] > *cycle.last().expect("len >= 3") {
        cycle[1..].reverse();
    }
    cycle
}

/// Visits all 2-factors by growing vertex-disjoint cycles from the
/// smallest uncovered vertex. Shares no enumeration code with the
/// matching-based route. The visitor returns `false` to stop early.
pub fn for_each_two_factor(g: &Graph, visit: &mut impl FnMut(&TwoFactor) -> bool) {
    let n = g.n();
    let mut state = CycleSearch {
        g,
        covered: 0,
        avail: (0..n).map(|v| g.degree(v)).collect(),
        cycles: Vec::new(),
        path: Vec::new(),
    };
    state.next_cycle(visit);
}

struct CycleSearch<'a> {
    g: &'a Graph,
    covered: u64,
    /// Number of uncovered neighbors per vertex, maintained incrementally.
    avail: Vec<usize>,
    cycles: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl<'a> CycleSearch<'a> {
    fn cover(&mut self, v: usize) {
        self.covered |= 1 << v;
        for &w in self.g.neighbors(v) {
            self.avail[w] -= 1;
        }
    }

    fn uncover(&mut self, v: usize) {
        self.covered &= !(1 << v);
        for &w in self.g.neighbors(v) {
            self.avail[w] += 1;
        }
    }

    /// A vertex not yet covered must still be completable into a cycle.
    /// Between cycles it needs two uncovered neighbors. While a path is
    /// open, the path head and the cycle start can stand in for missing
    /// uncovered neighbors.
    fn feasible(&self, head: Option<(usize, usize)>) -> bool {
        let n = self.g.n();
        for x in 0..n {
            if self.covered >> x & 1 == 1 {
                continue;
            }
            let mut options = self.avail[x];
            if let Some((cur, start)) = head {
                options += usize::from(self.g.has_edge(x, cur));
                options += usize::from(self.g.has_edge(x, start));
            }
            if options < 2 {
                return false;
            }
        }
        true
    }

    fn next_cycle(&mut self, visit: &mut impl FnMut(&TwoFactor) -> bool) -> bool {
        let n = self.g.n();
        let start = match (0..n).find(|&v| self.covered >> v & 1 == 0) {
            Some(v) => v,
            None => {
                let tf = TwoFactor {
                    cycles: self.cycles.clone(),
                };
                return visit(&tf);
            }
        };
        self.cover(start);
        self.path.push(start);
        let go_on = self.extend(start, start, visit);
        self.path.pop();
        self.uncover(start);
        go_on
    }

    fn extend(&mut self, start: usize, cur: usize, visit: &mut impl FnMut(&TwoFactor) -> bool) -> bool {
        for i in 0..self.g.neighbors(cur).len() {
            let w = self.g.neighbors(cur)[i];
            if w == start && self.path.len() >= 3 && self.path[1] < cur {
                // Close the cycle; the direction check keeps one traversal
                // per cycle. The path is handed over to the cycle list and
                // restored afterwards so the next cycle starts clean.
                let finished = std::mem::take(&mut self.path);
                self.cycles.push(finished);
                let go_on = if self.feasible(None) {
                    self.next_cycle(visit)
                } else {
                    true
                };
                self.path = self.cycles.pop().expect("cycle pushed above");
                if !go_on {
                    return false;
                }
            } else if w != start && self.covered >> w & 1 == 0 {
                self.cover(w);
                self.path.push(w);
                let go_on = if self.feasible(Some((w, start))) {
                    self.extend(start, w, visit)
                } else {
                    true
                };
                self.path.pop();
                self.uncover(w);
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
}

pub fn two_factors_direct(g: &Graph) -> Vec<TwoFactor> {
    let mut out = Vec::new();
    for_each_two_factor(g, &mut |tf| {
        out.push(tf.clone());
        true
    });
    out
}

/// 2-factors through the matching route: every perfect matching of a cubic
/// graph leaves a 2-factor, and the correspondence is a bijection.
pub fn two_factors_via_matchings(g: &Graph) -> Result<Vec<TwoFactor>, FactorError> {
    if !g.is_regular(3) {
        return Err(FactorError::NotCubic);
    }
    let mut out = Vec::new();
    let mut err = None;
    for_each_perfect_matching(g, &mut |m| match complement_two_factor(g, m) {
        Ok(tf) => {
            out.push(tf);
            true
        }
        Err(e) => {
            err = Some(e);
            false
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Number of 2-factors, counted by the direct enumerator.
pub fn count_two_factors(g: &Graph) -> u64 {
    let mut count = 0;
    for_each_two_factor(g, &mut |_| {
        count += 1;
        true
    });
    count
}

/// Outcome of the cycle-parity test.
#[derive(Debug, Clone)]
pub struct ParityVerdict {
    pub pseudo_2fi: bool,
    /// True when the graph has no 2-factor at all and the verdict holds
    /// vacuously.
    pub vacuous: bool,
    /// On failure, the first two 2-factors of different cycle-count parity
    /// in enumeration order.
    pub witness: Option<(TwoFactor, TwoFactor)>,
}

/// True iff the parity of the number of cycles is the same in every
/// 2-factor. Stops at the first parity conflict.
pub fn pseudo_two_factor_isomorphic(g: &Graph) -> ParityVerdict {
    let mut first: Option<TwoFactor> = None;
    let mut witness = None;
    for_each_two_factor(g, &mut |tf| match &first {
        None => {
            first = Some(tf.clone());
            true
        }
        Some(f0) => {
            if f0.cycle_count() % 2 != tf.cycle_count() % 2 {
                witness = Some((f0.clone(), tf.clone()));
                false
            } else {
                true
            }
        }
    });
    ParityVerdict {
        pseudo_2fi: witness.is_none(),
        vacuous: first.is_none(),
        witness,
    }
}

/// Outcome of the all-2-factors-hamiltonian test.
#[derive(Debug, Clone)]
pub struct HamiltonianVerdict {
    pub two_factor_hamiltonian: bool,
    pub vacuous: bool,
    /// On failure, the first 2-factor with more than one cycle.
    pub witness: Option<TwoFactor>,
}

/// True iff every 2-factor is a single hamiltonian cycle. Stops at the
/// first multi-cycle 2-factor.
pub fn two_factor_hamiltonian(g: &Graph) -> HamiltonianVerdict {
    let mut any = false;
    let mut witness = None;
    for_each_two_factor(g, &mut |tf| {
        any = true;
        if tf.cycle_count() > 1 {
            witness = Some(tf.clone());
            false
        } else {
            true
        }
    });
    HamiltonianVerdict {
        two_factor_hamiltonian: witness.is_none(),
        vacuous: !any,
        witness,
    }
}

/// Deduplicated cycle structures over all 2-factors.
pub fn two_factor_structure_set(g: &Graph) -> BTreeSet<CycleStructure> {
    let mut set = BTreeSet::new();
    for_each_two_factor(g, &mut |tf| {
        set.insert(cycle_structure(tf));
        true
    });
    set
}
