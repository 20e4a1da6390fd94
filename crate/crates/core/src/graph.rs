//! Immutable simple undirected graphs with the structural queries the rest
//! of the crate builds on: girth, bipartition, regularity, connectivity.
//!
//! Vertices are dense `0..n`. Neighbor sets are kept both as sorted lists
//! and as bitsets; the bitset fast path assumes `n <= 64`, which covers the
//! whole desk-scale range this crate targets (the generators stop well
//! before that). Larger graphs are rejected at construction time.

use std::fmt;

/// Hard cap on the vertex count: one `u64` word per neighbor set.
pub const MAX_VERTICES: usize = 64;

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "loop edge");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            debug_assert_eq!(w, self.v);
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An edge endpoint is `>= n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An edge joins a vertex to itself.
    LoopEdge { vertex: usize },
    /// The same unordered pair appears twice in the edge list.
    DuplicateEdge { u: usize, v: usize },
    /// More vertices than the bitset representation supports.
    TooManyVertices { n: usize },
    /// `n == 0`.
    Empty,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {} out of range for n={}", vertex, n)
            }
            GraphError::LoopEdge { vertex } => write!(f, "loop at vertex {}", vertex),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {}-{}", u, v),
            GraphError::TooManyVertices { n } => {
                write!(f, "n={} exceeds the supported maximum of {}", n, MAX_VERTICES)
            }
            GraphError::Empty => write!(f, "graph must have at least one vertex"),
        }
    }
}

impl std::error::Error for GraphError {}

/// Girth of a graph: length of a shortest cycle, or `Infinite` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(&self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => *g >= k,
            Girth::Infinite => true,
        }
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(*g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{}", g),
            Girth::Infinite => write!(f, "infinite"),
        }
    }
}

/// Result of a two-coloring attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// The two color classes; the first one contains vertex 0.
    Parts(Vec<usize>, Vec<usize>),
    /// An odd cycle, as a closed vertex sequence witnessing non-bipartiteness.
    NotBipartite { odd_cycle: Vec<usize> },
}

impl Bipartition {
    pub fn parts(&self) -> Option<(&[usize], &[usize])> {
        match self {
            Bipartition::Parts(a, b) => Some((a, b)),
            Bipartition::NotBipartite { .. } => None,
        }
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    nbr_bits: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list, validating simplicity.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![Vec::new(); n];
        let mut nbr_bits = vec![0u64; n];
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(GraphError::LoopEdge { vertex: a });
            }
            let e = Edge::new(a, b);
            if nbr_bits[e.u] >> e.v & 1 == 1 {
                return Err(GraphError::DuplicateEdge { u: e.u, v: e.v });
            }
            nbr_bits[e.u] |= 1 << e.v;
            nbr_bits[e.v] |= 1 << e.u;
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, adj, nbr_bits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Neighbor set of `v` as a bitmask over `0..n`.
    pub fn neighbor_bits(&self, v: usize) -> u64 {
        self.nbr_bits[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.nbr_bits[u] >> v & 1 == 1
    }

    /// All edges, sorted by `(u, v)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    /// Applies a relabeling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let edges: Vec<(usize, usize)> = self
            .edges()
            .iter()
            .map(|e| (perm[e.u], perm[e.v]))
            .collect();
        Graph::build(self.n, &edges).expect("relabeling of a valid graph is valid")
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|l| l.len() == k)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Exact girth by truncated breadth-first search from every vertex.
    ///
    /// From each root the BFS tracks distances; a non-tree edge closing two
    /// branches at depths `d(u)`, `d(v)` witnesses a cycle through the root
    /// of length `d(u) + d(v) + 1`. The shortest cycle through each vertex
    /// is found this way, so the minimum over roots is the girth.
    pub fn girth(&self) -> Girth {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = Vec::with_capacity(self.n);
        for root in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            queue.clear();
            dist[root] = 0;
            queue.push(root);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                if let Some(b) = best {
                    // Any cycle found at this depth or deeper has length at
                    // least 2*dist[u], so it cannot improve on the bound.
                    if 2 * dist[u] >= b {
                        break;
                    }
                }
                for &v in &self.adj[u] {
                    if v == parent[u] {
                        continue;
                    }
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push(v);
                    } else {
                        // Non-tree edge: cycle through the root (or an
                        // ancestor); its length bounds the girth.
                        let len = dist[u] + dist[v] + 1;
                        if best.map_or(true, |b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        match best {
            Some(g) => Girth::Finite(g),
            None => Girth::Infinite,
        }
    }

    /// Length of a shortest cycle through the edge `(a, b)`, if any.
    pub fn shortest_cycle_through_edge(&self, a: usize, b: usize) -> Option<usize> {
        // BFS from a to b avoiding the edge itself.
        let mut dist = vec![usize::MAX; self.n];
        dist[a] = 0;
        let mut queue = vec![a];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if u == b {
                return Some(dist[b] + 1);
            }
            for &v in &self.adj[u] {
                if u == a && v == b {
                    continue;
                }
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push(v);
                }
            }
        }
        None
    }

    /// Two-colors the graph by BFS, or returns an odd-cycle witness.
    ///
    /// The part containing vertex 0 comes first. Isolated vertices and
    /// later components are colored starting from their smallest vertex.
    pub fn bipartition(&self) -> Bipartition {
        let mut color = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = vec![root];
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        parent[v] = u;
                        queue.push(v);
                    } else if color[v] == color[u] {
                        return Bipartition::NotBipartite {
                            odd_cycle: odd_cycle_witness(&parent, u, v),
                        };
                    }
                }
            }
        }
        let mut a = Vec::new();
        let mut b = Vec::new();
        for v in 0..self.n {
            if color[v] == 0 {
                a.push(v);
            } else {
                b.push(v);
            }
        }
        Bipartition::Parts(a, b)
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::Parts(..))
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }
}

/// Reconstructs an odd closed walk from the BFS tree when an intra-level
/// edge `(u, v)` is found. Walking both vertices up to their lowest common
/// ancestor yields a simple odd cycle.
fn odd_cycle_witness(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = path_to_root(u);
    let pv = path_to_root(v);
    // Trim the common tail above the LCA.
    let mut iu = pu.len();
    let mut iv = pv.len();
    while iu > 0 && iv > 0 && pu[iu - 1] == pv[iv - 1] {
        iu -= 1;
        iv -= 1;
    }
    // u .. lca .. v, then the closing edge v-u.
    let mut cycle: Vec<usize> = pu[..=iu.min(pu.len() - 1)].to_vec();
    for &x in pv[..iv].iter().rev() {
        cycle.push(x);
    }
    cycle
}
