//! Brute-force reference implementations used to validate the fast paths.
//!
//! Everything here trades speed for obviousness: exhaustive permutation
//! scans, exhaustive edge-subset scans, and a labeled cubic-bipartite
//! enumerator. These are deliberately kept free of the refinement,
//! max-flow and canonical-augmentation machinery they are used to check.

use crate::graph::{Girth, Graph};

/// Counts automorphisms by running through all n! permutations.
///
/// Only sensible for n <= 8.
pub fn automorphism_count_all_permutations(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 8, "all-permutations oracle is for n <= 8");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    permute(&mut perm, 0, &mut |p| {
        if is_automorphism(g, p) {
            count += 1;
        }
    });
    count
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

fn is_automorphism(g: &Graph, p: &[usize]) -> bool {
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            if u < v && !g.has_edge(p[u], p[v]) {
                return false;
            }
        }
    }
    true
}

/// Counts automorphisms by backtracking over partial vertex images.
///
/// Independent of the partition-refinement search; handles sizes like the
/// 14-vertex case where the all-permutations scan is out of reach.
pub fn automorphism_count_backtracking(g: &Graph) -> u64 {
    let n = g.n();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut count = 0u64;
    extend_map(g, 0, &mut image, &mut used, &mut count);
    count
}

fn extend_map(g: &Graph, v: usize, image: &mut Vec<usize>, used: &mut Vec<bool>, count: &mut u64) {
    let n = g.n();
    if v == n {
        *count += 1;
        return;
    }
    'cand: for w in 0..n {
        if used[w] || g.degree(w) != g.degree(v) {
            continue;
        }
        // Every already-mapped neighbor relation must be preserved both ways.
        for u in 0..v {
            if g.has_edge(u, v) != g.has_edge(image[u], w) {
                continue 'cand;
            }
        }
        image[v] = w;
        used[w] = true;
        extend_map(g, v + 1, image, used, count);
        used[w] = false;
        image[v] = usize::MAX;
    }
}

/// Girth by shortest cycle through every edge (edge removed, then BFS).
pub fn girth_by_edge_removal(g: &Graph) -> Girth {
    let mut best = usize::MAX;
    for e in g.edges() {
        if let Some(l) = g.shortest_cycle_through_edge(e.u, e.v) {
            best = best.min(l);
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Component structure of the graph with an edge subset removed: returns
/// per-component `(vertex_count, edge_count)`.
fn components_without(g: &Graph, removed: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let n = g.n();
    let gone = |u: usize, v: usize| {
        removed
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    };
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[start] = id;
        let mut stack = vec![start];
        let mut vertices = 0usize;
        let mut half_edges = 0usize;
        while let Some(u) = stack.pop() {
            vertices += 1;
            for &v in g.neighbors(u) {
                if gone(u, v) {
                    continue;
                }
                half_edges += 1;
                if comp[v] == usize::MAX {
                    comp[v] = id;
                    stack.push(v);
                }
            }
        }
        out.push((vertices, half_edges / 2));
    }
    out
}

fn edge_subsets_of_size(edges: &[(usize, usize)], k: usize, visit: &mut impl FnMut(&[(usize, usize)]) -> bool) -> bool {
    fn rec(
        edges: &[(usize, usize)],
        k: usize,
        start: usize,
        chosen: &mut Vec<(usize, usize)>,
        visit: &mut impl FnMut(&[(usize, usize)]) -> bool,
    ) -> bool {
        if chosen.len() == k {
            return visit(chosen);
        }
        for i in start..edges.len() {
            chosen.push(edges[i]);
            if rec(edges, k, i + 1, chosen, visit) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    rec(edges, k, 0, &mut Vec::new(), visit)
}

/// Edge connectivity by exhaustive subset enumeration in ascending size.
pub fn edge_connectivity_exhaustive(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    for k in 0..=edges.len() {
        let mut found = false;
        edge_subsets_of_size(&edges, k, &mut |subset| {
            if components_without(g, subset).len() > 1 {
                found = true;
                return true;
            }
            false
        });
        if found {
            return k;
        }
    }
    edges.len()
}

/// Smallest essential edge cut (two or more components that each contain
/// an edge) by exhaustive enumeration; `None` when no such cut exists.
pub fn essential_cut_min_exhaustive(g: &Graph) -> Option<usize> {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    for k in 0..=edges.len() {
        let mut found = false;
        edge_subsets_of_size(&edges, k, &mut |subset| {
            let comps = components_without(g, subset);
            if comps.iter().filter(|&&(_, e)| e > 0).count() >= 2 {
                found = true;
                return true;
            }
            false
        });
        if found {
            return Some(k);
        }
    }
    None
}

/// Smallest cyclic edge cut (two or more components that each contain a
/// cycle) by exhaustive enumeration; `None` when no such cut exists.
///
/// A component contains a cycle iff its edge count reaches its vertex
/// count.
pub fn cyclic_cut_min_exhaustive(g: &Graph) -> Option<usize> {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    for k in 0..=edges.len() {
        let mut found = false;
        edge_subsets_of_size(&edges, k, &mut |subset| {
            let comps = components_without(g, subset);
            if comps.iter().filter(|&&(v, e)| e >= v).count() >= 2 {
                found = true;
                return true;
            }
            false
        });
        if found {
            return Some(k);
        }
    }
    None
}

/// Enumerates labeled connected cubic bipartite graphs with girth at least
/// `min_girth` on `n` vertices, with the symmetry-breaking restriction that
/// vertex 0 is adjacent to exactly {1, 2, 3}.
///
/// Every isomorphism class of such graphs has at least one labeling with
/// that neighborhood (map any vertex to 0 and its neighbors to 1, 2, 3),
/// so bucketing the output by certificate counts isomorphism classes.
/// The construction completes the smallest incomplete vertex first; since
/// all earlier vertices are already full, its missing neighbors lie among
/// later vertices, which makes each labeled graph arise exactly once.
pub fn labeled_cubic_bipartite(n: usize, min_girth: usize, visit: &mut impl FnMut(&Graph)) {
    assert!(n >= 4 && n % 2 == 0);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    // Forced first step: N(0) = {1, 2, 3}.
    for v in 1..=3 {
        adj[0].push(v);
        adj[v].push(0);
    }
    complete_next(&mut adj, n, min_girth, visit);
}

fn complete_next(adj: &mut Vec<Vec<usize>>, n: usize, min_girth: usize, visit: &mut impl FnMut(&Graph)) {
    let v = match (0..n).find(|&v| adj[v].len() < 3) {
        Some(v) => v,
        None => {
            let mut edges = Vec::new();
            for u in 0..n {
                for &w in &adj[u] {
                    if u < w {
                        edges.push((u, w));
                    }
                }
            }
            let g = Graph::build(n, &edges).expect("enumerator builds simple graphs");
            if g.is_connected() {
                visit(&g);
            }
            return;
        }
    };
    let need = 3 - adj[v].len();
    let candidates: Vec<usize> = (v + 1..n).filter(|&w| adj[w].len() < 3 && !adj[v].contains(&w)).collect();
    choose_neighbors(adj, n, min_girth, v, need, 0, &candidates, visit);
}

fn choose_neighbors(
    adj: &mut Vec<Vec<usize>>,
    n: usize,
    min_girth: usize,
    v: usize,
    need: usize,
    start: usize,
    candidates: &[usize],
    visit: &mut impl FnMut(&Graph),
) {
    if need == 0 {
        complete_next(adj, n, min_girth, visit);
        return;
    }
    if candidates.len() - start < need {
        return;
    }
    for i in start..candidates.len() {
        let w = candidates[i];
        if adj[w].len() >= 3 {
            continue;
        }
        adj[v].push(w);
        adj[w].push(v);
        if partial_ok(adj, v, w, min_girth) {
            choose_neighbors(adj, n, min_girth, v, need - 1, i + 1, candidates, visit);
        }
        adj[v].pop();
        adj[w].pop();
    }
}

/// After inserting edge (v, w): no odd cycle and no cycle shorter than
/// `min_girth`. The shortest cycle through the new edge is 1 + the
/// shortest alternative path between its endpoints.
fn partial_ok(adj: &[Vec<usize>], v: usize, w: usize, min_girth: usize) -> bool {
    let n = adj.len();
    let mut dist = vec![usize::MAX; n];
    dist[v] = 0;
    let mut queue = vec![v];
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &x in &adj[u] {
            if u == v && x == w {
                continue;
            }
            if dist[x] == usize::MAX {
                dist[x] = dist[u] + 1;
                queue.push(x);
            }
        }
    }
    if dist[w] != usize::MAX {
        let cycle = dist[w] + 1;
        if cycle < min_girth || cycle % 2 == 1 {
            return false;
        }
    }
    // Parity: any odd cycle through (v, w) needs an even alternative path;
    // shortest-path parity alone is not conclusive, so check colors.
    bipartite_check(adj)
}

fn bipartite_check(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    let mut color = vec![u8::MAX; n];
    for root in 0..n {
        if color[root] != u8::MAX || adj[root].is_empty() {
            continue;
        }
        color[root] = 0;
        let mut queue = vec![root];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &x in &adj[u] {
                if color[x] == u8::MAX {
                    color[x] = 1 - color[u];
                    queue.push(x);
                } else if color[x] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}
