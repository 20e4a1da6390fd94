//! Edge-connectivity predicates: global edge connectivity, essential
//! 4-edge-connectivity, and cyclic edge-connectivity.
//!
//! All cut values are exact. Minimum cuts between contracted terminals are
//! computed by augmenting-path max-flow on a small capacity matrix; the
//! cyclic variant enumerates chordless cycles as terminal candidates,
//! which is sound because each side of an optimal cyclic cut contains a
//! shortest cycle of that side, and such a cycle is chordless in the whole
//! graph.

use std::fmt;

use crate::graph::{Edge, Graph};

/// An edge cut with the two vertex sets it separates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    pub edges: Vec<Edge>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl EdgeCut {
    /// Checks the defining properties against `g`: the listed edges cross
    /// the partition and their removal disconnects the two sides.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.n();
        let mut side = vec![u8::MAX; n];
        for &v in &self.side_a {
            side[v] = 0;
        }
        for &v in &self.side_b {
            if side[v] != u8::MAX {
                return false;
            }
            side[v] = 1;
        }
        if side.iter().any(|&s| s == u8::MAX) {
            return false;
        }
        for e in &self.edges {
            if side[e.u] == side[e.v] {
                return false;
            }
        }
        // No crossing edge outside the cut.
        for e in g.edges() {
            if side[e.u] != side[e.v] && !self.edges.contains(&e) {
                return false;
            }
        }
        !self.side_a.is_empty() && !self.side_b.is_empty()
    }
}

impl fmt::Display for EdgeCut {
    /// Space-separated `u-v` edge tokens.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", e)?;
        }
        Ok(())
    }
}

/// Unit-capacity max-flow between two merged vertex sets.
///
/// Vertices in `src` are contracted to the source, those in `dst` to the
/// sink. Augments until `cutoff`; when the result is below the cutoff it
/// is the exact min cut and `source_side` marks the residual-reachable
/// original vertices.
struct FlowResult {
    value: usize,
    source_side: Vec<bool>,
}

fn min_cut_contracted(g: &Graph, src: &[usize], dst: &[usize], cutoff: usize) -> FlowResult {
    let n = g.n();
    let mut id = vec![usize::MAX; n];
    for &v in src {
        id[v] = 0;
    }
    for &v in dst {
        debug_assert_eq!(id[v], usize::MAX, "terminal sets must be disjoint");
        id[v] = 1;
    }
    let mut next = 2;
    for v in 0..n {
        if id[v] == usize::MAX {
            id[v] = next;
            next += 1;
        }
    }
    // Capacity matrix over contracted vertices; parallel edges add up.
    let mut cap = vec![vec![0u32; next]; next];
    for e in g.edges() {
        let (a, b) = (id[e.u], id[e.v]);
        if a != b {
            cap[a][b] += 1;
            cap[b][a] += 1;
        }
    }
    let mut flow = 0;
    let mut parent = vec![usize::MAX; next];
    while flow < cutoff {
        parent.fill(usize::MAX);
        parent[0] = 0;
        let mut queue = vec![0usize];
        let mut head = 0;
        'bfs: while head < queue.len() {
            let u = queue[head];
            head += 1;
            for v in 0..next {
                if parent[v] == usize::MAX && cap[u][v] > 0 {
                    parent[v] = u;
                    if v == 1 {
                        break 'bfs;
                    }
                    queue.push(v);
                }
            }
        }
        if parent[1] == usize::MAX {
            break;
        }
        // Augment one unit along the path.
        let mut v = 1;
        while v != 0 {
            let u = parent[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
    // Residual reachability from the source, expanded to original labels.
    let mut reach = vec![false; next];
    reach[0] = true;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for v in 0..next {
            if !reach[v] && cap[u][v] > 0 {
                reach[v] = true;
                queue.push(v);
            }
        }
    }
    FlowResult {
        value: flow,
        source_side: (0..n).map(|v| reach[id[v]]).collect(),
    }
}

/// Global edge connectivity; 0 for disconnected graphs and for the
/// one-vertex graph.
pub fn edge_connectivity(g: &Graph) -> usize {
    if g.n() == 1 || !g.is_connected() {
        return 0;
    }
    let m = g.edge_count();
    let mut best = m + 1;
    for t in 1..g.n() {
        let r = min_cut_contracted(g, &[0], &[t], best);
        best = best.min(r.value);
        if best == 0 {
            break;
        }
    }
    best.min(m)
}

fn cut_from_sides(g: &Graph, source_side: &[bool]) -> EdgeCut {
    let mut side_a = Vec::new();
    let mut side_b = Vec::new();
    for v in 0..g.n() {
        if source_side[v] {
            side_a.push(v);
        } else {
            side_b.push(v);
        }
    }
    let edges = g
        .edges()
        .into_iter()
        .filter(|e| source_side[e.u] != source_side[e.v])
        .collect();
    EdgeCut { edges, side_a, side_b }
}

/// True iff no edge cut of size at most 3 leaves two or more components
/// that each contain an edge. On failure, returns such a cut.
///
/// Every essential cut separates two vertex-disjoint edges, so taking the
/// exact min cut between every contracted pair of disjoint edges and
/// checking it against 4 decides the predicate.
pub fn is_essentially_4_edge_connected(g: &Graph) -> (bool, Option<EdgeCut>) {
    let edges = g.edges();
    for (i, e1) in edges.iter().enumerate() {
        for e2 in edges.iter().skip(i + 1) {
            if e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v {
                continue;
            }
            let r = min_cut_contracted(g, &[e1.u, e1.v], &[e2.u, e2.v], 4);
            if r.value < 4 {
                let cut = cut_from_sides(g, &r.source_side);
                debug_assert_eq!(cut.edges.len(), r.value);
                return (false, Some(cut));
            }
        }
    }
    (true, None)
}

/// All chordless cycles, each a normalized vertex sequence.
///
/// A cycle is grown from its smallest vertex; a new vertex may be adjacent
/// to no path vertex other than its predecessor (and the start, in which
/// case the cycle closes immediately). Each chordless cycle is produced
/// exactly once.
pub fn chordless_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        grow_chordless(g, start, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
        path.pop();
    }
    out
}

fn grow_chordless(
    g: &Graph,
    cur: usize,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let start = path[0];
    for &w in g.neighbors(cur) {
        if w <= start || on_path[w] {
            continue;
        }
        // Chordless: w may touch the path only at its predecessor and
        // (for closing) the start.
        let interior = if path.len() >= 2 { &path[1..path.len() - 1] } else { &[] };
        if interior.iter().any(|&p| g.has_edge(w, p)) {
            continue;
        }
        if path.len() >= 2 && g.has_edge(w, start) {
            if path[1] < w {
                let mut cycle = path.clone();
                cycle.push(w);
                out.push(cycle);
            }
            // Extending past w would leave the chord w-start behind.
            continue;
        }
        path.push(w);
        on_path[w] = true;
        grow_chordless(g, w, path, on_path, out);
        on_path[w] = false;
        path.pop();
    }
}

/// Minimum size of an edge cut leaving at least two components that each
/// contain a cycle; `None` when no two vertex-disjoint cycles exist.
pub fn cyclic_edge_connectivity(g: &Graph) -> Option<usize> {
    let cycles = chordless_cycles(g);
    let masks: Vec<u64> = cycles
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let mut best: Option<usize> = None;
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if masks[i] & masks[j] != 0 {
                continue;
            }
            let cutoff = best.unwrap_or(g.edge_count() + 1);
            let r = min_cut_contracted(g, &cycles[i], &cycles[j], cutoff);
            if r.value < cutoff {
                best = Some(r.value);
            }
        }
    }
    best
}
