//! Bit-exact graph6 encoding/decoding and the adjacency-list text format
//! used for shipping fixture graphs.
//!
//! graph6 layout: a size header (`n + 63` for `n <= 62`, otherwise `'~'`
//! followed by three bytes carrying 18 bits of `n`), then the upper
//! triangle of the adjacency matrix in column order `x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`, packed big-endian six bits per byte, zero padded,
//! every byte offset by 63 into the printable range.

use std::fmt;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    /// Empty input line.
    EmptyLine,
    /// Size header malformed or describing an unsupported size.
    InvalidSizeHeader,
    /// Header describes a graph larger than this crate supports.
    UnsupportedSize { n: usize },
    /// A payload byte outside the printable range 63..=126.
    ByteOutOfRange { position: usize, byte: u8 },
    /// Payload length does not match the size header.
    WrongLength { expected: usize, actual: usize },
    /// Padding bits after the last matrix bit are not all zero.
    NonzeroPadding,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::EmptyLine => write!(f, "empty graph6 line"),
            Graph6Error::InvalidSizeHeader => write!(f, "malformed graph6 size header"),
            Graph6Error::UnsupportedSize { n } => {
                write!(f, "graph6 size {} exceeds supported maximum {}", n, MAX_VERTICES)
            }
            Graph6Error::ByteOutOfRange { position, byte } => {
                write!(f, "byte {} at position {} outside 63..=126", byte, position)
            }
            Graph6Error::WrongLength { expected, actual } => {
                write!(f, "expected {} payload bytes, found {}", expected, actual)
            }
            Graph6Error::NonzeroPadding => write!(f, "nonzero padding bits"),
        }
    }
}

impl std::error::Error for Graph6Error {}

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2 + 5) / 6
}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let bytes = graph6_bytes_with(g.n(), |u, v| g.has_edge(u, v));
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// graph6 bytes for an n-vertex graph given by an edge predicate.
pub(crate) fn graph6_bytes_with(n: usize, has_edge: impl Fn(usize, usize) -> bool) -> Vec<u8> {
    let mut bytes = encode_graph6_header(n);
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(has_edge(u, v));
            nbits += 1;
            if nbits == 6 {
                bytes.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push((acc << (6 - nbits)) + 63);
    }
    bytes
}

fn encode_graph6_header(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else {
        // 63 <= n <= 258047: '~' then 18 bits in three sixes.
        vec![
            126,
            ((n >> 12) & 0x3f) as u8 + 63,
            ((n >> 6) & 0x3f) as u8 + 63,
            (n & 0x3f) as u8 + 63,
        ]
    }
}

/// Decodes one graph6 line. Left inverse of [`encode_graph6`].
pub fn decode_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::EmptyLine);
    }
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { position, byte });
        }
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // The eight-byte size form always exceeds our vertex cap.
            return Err(Graph6Error::InvalidSizeHeader);
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::InvalidSizeHeader);
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedSize { n });
    }
    let expected = payload_len(n);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            actual: body.len(),
        });
    }
    let mut edges = Vec::new();
    let mut it = body.iter().map(|&b| b - 63);
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            if nbits == 0 {
                acc = it.next().expect("length checked");
                nbits = 6;
            }
            if acc & 0x20 != 0 {
                edges.push((u, v));
            }
            acc = (acc << 1) & 0x3f;
            nbits -= 1;
        }
    }
    if nbits > 0 && acc != 0 {
        return Err(Graph6Error::NonzeroPadding);
    }
    Ok(Graph::build(n, &edges).expect("decoded edges are simple by construction"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdjListError {
    /// A line whose shape is not `v: n1 n2 ...`.
    Malformed { line_no: usize, text: String },
    /// The same vertex heads two lines.
    DuplicateVertexLine { vertex: usize },
    /// Vertices do not cover `0..n` exactly.
    MissingVertexLine { vertex: usize },
    /// `u` lists `v` but not vice versa.
    AsymmetricAdjacency { u: usize, v: usize },
    /// Invalid underlying graph (loops, duplicates, range).
    Graph(GraphError),
}

impl fmt::Display for AdjListError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdjListError::Malformed { line_no, text } => {
                write!(f, "line {}: cannot parse {:?}", line_no, text)
            }
            AdjListError::DuplicateVertexLine { vertex } => {
                write!(f, "duplicate line for vertex {}", vertex)
            }
            AdjListError::MissingVertexLine { vertex } => {
                write!(f, "no line for vertex {}", vertex)
            }
            AdjListError::AsymmetricAdjacency { u, v } => {
                write!(f, "{} lists {} but {} does not list {}", u, v, v, u)
            }
            AdjListError::Graph(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for AdjListError {}

impl From<GraphError> for AdjListError {
    fn from(e: GraphError) -> Self {
        AdjListError::Graph(e)
    }
}

/// Parses an adjacency-list document of `v: n1 n2 n3` lines.
///
/// Whitespace is free-form and blank lines are skipped; every undirected
/// edge must be listed from both endpoints.
pub fn read_adjlist(text: &str) -> Result<Graph, AdjListError> {
    let mut rows: Vec<Option<Vec<usize>>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let line_no = idx + 1;
        let malformed = || AdjListError::Malformed {
            line_no,
            text: raw.to_string(),
        };
        let (head, tail) = line.split_once(':').ok_or_else(malformed)?;
        let v: usize = head.trim().parse().map_err(|_| malformed())?;
        let mut nbrs = Vec::new();
        for tok in tail.split_whitespace() {
            nbrs.push(tok.parse().map_err(|_| malformed())?);
        }
        if rows.len() <= v {
            rows.resize(v + 1, None);
        }
        if rows[v].is_some() {
            return Err(AdjListError::DuplicateVertexLine { vertex: v });
        }
        rows[v] = Some(nbrs);
    }
    let n = rows.len();
    if n == 0 {
        return Err(AdjListError::Graph(GraphError::Empty));
    }
    let mut lists = Vec::with_capacity(n);
    for (v, row) in rows.into_iter().enumerate() {
        match row {
            Some(l) => lists.push(l),
            None => return Err(AdjListError::MissingVertexLine { vertex: v }),
        }
    }
    let mut edges = Vec::new();
    for (u, nbrs) in lists.iter().enumerate() {
        for &v in nbrs {
            if v < n && !lists[v].contains(&u) {
                return Err(AdjListError::AsymmetricAdjacency { u, v });
            }
            if u < v {
                edges.push((u, v));
            } else if u == v {
                return Err(AdjListError::Graph(GraphError::LoopEdge { vertex: u }));
            }
        }
    }
    Ok(Graph::build(n, &edges)?)
}

/// Writes the adjacency-list document: one `v: n1 n2 n3` line per vertex,
/// neighbors ascending, single spaces between tokens.
pub fn write_adjlist(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.n() {
        out.push_str(&v.to_string());
        out.push(':');
        for &w in g.neighbors(v) {
            out.push(' ');
            out.push_str(&w.to_string());
        }
        out.push('\n');
    }
    out
}
