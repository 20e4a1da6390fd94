//! Per-graph analysis records, rendered as tab-separated lines under a
//! `#`-prefixed header.
//!
//! Expensive fields (automorphism group, vertex transitivity, cyclic edge
//! connectivity) are computed by default only for graphs up to 32
//! vertices; above that they render as `-` unless the caller selected
//! fields explicitly.

use std::str::FromStr;

use cbg_core::connectivity;
use cbg_core::factors;
use cbg_core::graph::Graph;
use cbg_core::symmetry;

/// Largest order for which the expensive fields are computed by default.
pub const DEFAULT_FULL_ANALYSIS_MAX_N: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Certificate,
    N,
    Girth,
    Bipartite,
    TwoFactorCount,
    StructureSet,
    Pseudo2fi,
    Vacuous,
    TwoFactorHamiltonian,
    Essentially4ec,
    CyclicEc,
    AutGroupSize,
    VertexTransitive,
    Witnesses,
}

/// Documented column order; `witnesses` is opt-in and not part of it.
pub const FIELD_ORDER: [Field; 13] = [
    Field::Certificate,
    Field::N,
    Field::Girth,
    Field::Bipartite,
    Field::TwoFactorCount,
    Field::StructureSet,
    Field::Pseudo2fi,
    Field::Vacuous,
    Field::TwoFactorHamiltonian,
    Field::Essentially4ec,
    Field::CyclicEc,
    Field::AutGroupSize,
    Field::VertexTransitive,
];

impl Field {
    pub fn name(&self) -> &'static str {
        match self {
            Field::Certificate => "certificate",
            Field::N => "n",
            Field::Girth => "girth",
            Field::Bipartite => "bipartite",
            Field::TwoFactorCount => "two_factor_count",
            Field::StructureSet => "structure_set",
            Field::Pseudo2fi => "pseudo_2fi",
            Field::Vacuous => "vacuous",
            Field::TwoFactorHamiltonian => "two_factor_hamiltonian",
            Field::Essentially4ec => "essentially_4ec",
            Field::CyclicEc => "cyclic_ec",
            Field::AutGroupSize => "aut_group_size",
            Field::VertexTransitive => "vertex_transitive",
            Field::Witnesses => "witnesses",
        }
    }

}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Field, String> {
        let all = [
            Field::Certificate,
            Field::N,
            Field::Girth,
            Field::Bipartite,
            Field::TwoFactorCount,
            Field::StructureSet,
            Field::Pseudo2fi,
            Field::Vacuous,
            Field::TwoFactorHamiltonian,
            Field::Essentially4ec,
            Field::CyclicEc,
            Field::AutGroupSize,
            Field::VertexTransitive,
            Field::Witnesses,
        ];
        all.into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown field: {}", s))
    }
}

pub fn parse_fields(list: &str) -> Result<Vec<Field>, String> {
    list.split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<Vec<Field>, String>>()
}

pub fn header(selection: &[Field]) -> String {
    selection
        .iter()
        .map(|f| f.name())
        .collect::<Vec<_>>()
        .join("\t")
}

/// The computed record; fields not in the selection stay `None`.
#[derive(Debug, Clone, Default)]
pub struct AnalysisReport {
    pub certificate: Option<String>,
    pub n: usize,
    pub girth: Option<String>,
    pub bipartite: Option<bool>,
    pub two_factor_count: Option<u64>,
    pub structure_set: Option<String>,
    pub pseudo_2fi: Option<bool>,
    pub vacuous: Option<bool>,
    pub two_factor_hamiltonian: Option<bool>,
    pub essentially_4ec: Option<bool>,
    pub cyclic_ec: Option<String>,
    pub aut_group_size: Option<u128>,
    pub vertex_transitive: Option<bool>,
    pub witnesses: Option<String>,
}

impl AnalysisReport {
    /// Computes the selected fields. With `explicit` set, expensive fields
    /// are honored at any order; otherwise they are skipped above
    /// [`DEFAULT_FULL_ANALYSIS_MAX_N`].
    pub fn compute(g: &Graph, selection: &[Field], explicit: bool) -> AnalysisReport {
        let mut rep = AnalysisReport {
            n: g.n(),
            ..AnalysisReport::default()
        };
        let wants = |f: Field| selection.contains(&f);
        let economy = !explicit && g.n() > DEFAULT_FULL_ANALYSIS_MAX_N;

        if wants(Field::Certificate) {
            rep.certificate = Some(symmetry::canonical_form(g).certificate);
        }
        if wants(Field::Girth) {
            rep.girth = Some(g.girth().to_string());
        }
        if wants(Field::Bipartite) {
            rep.bipartite = Some(g.is_bipartite());
        }
        if wants(Field::TwoFactorCount) {
            rep.two_factor_count = Some(factors::count_two_factors(g));
        }
        if wants(Field::StructureSet) {
            let set = factors::two_factor_structure_set(g);
            rep.structure_set = Some(if set.is_empty() {
                "-".to_string()
            } else {
                set.iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join("|")
            });
        }

        let mut witness_parts: Vec<String> = Vec::new();
        if wants(Field::Pseudo2fi) || wants(Field::Vacuous) || wants(Field::Witnesses) {
            let parity = factors::pseudo_two_factor_isomorphic(g);
            rep.pseudo_2fi = Some(parity.pseudo_2fi);
            rep.vacuous = Some(parity.vacuous);
            if let Some((a, b)) = parity.witness {
                witness_parts.push(format!("parity={};{}", a, b));
            }
        }
        if wants(Field::TwoFactorHamiltonian) || wants(Field::Witnesses) {
            let ham = factors::two_factor_hamiltonian(g);
            rep.two_factor_hamiltonian = Some(ham.two_factor_hamiltonian);
            if let Some(w) = ham.witness {
                witness_parts.push(format!("multicycle={}", w));
            }
        }
        if wants(Field::Essentially4ec) || wants(Field::Witnesses) {
            let (ok, cut) = connectivity::is_essentially_4_edge_connected(g);
            rep.essentially_4ec = Some(ok);
            if let Some(cut) = cut {
                witness_parts.push(format!("cut={}", cut));
            }
        }
        if wants(Field::CyclicEc) && !economy {
            rep.cyclic_ec = Some(match connectivity::cyclic_edge_connectivity(g) {
                Some(v) => v.to_string(),
                None => "undefined".to_string(),
            });
        }
        if (wants(Field::AutGroupSize) || wants(Field::VertexTransitive)) && !economy {
            let info = symmetry::automorphisms(g);
            rep.aut_group_size = Some(info.group_size);
            rep.vertex_transitive = Some(info.vertex_orbits.len() == 1);
        }
        if wants(Field::Witnesses) {
            rep.witnesses = Some(if witness_parts.is_empty() {
                "-".to_string()
            } else {
                witness_parts.join(" ")
            });
        }

        rep.assert_consistent(g);
        rep
    }

    /// Internal consistency of the record: implication between the two
    /// predicates, structure sums, and even cycle lengths on bipartite
    /// graphs.
    fn assert_consistent(&self, g: &Graph) {
        if let (Some(true), Some(p)) = (self.two_factor_hamiltonian, self.pseudo_2fi) {
            assert!(p, "2-factor hamiltonian graph must be pseudo-2FI");
        }
        if let Some(set) = &self.structure_set {
            if set != "-" {
                for s in set.split('|') {
                    let total: usize = s
                        .trim_matches(|c| c == '(' || c == ')')
                        .split(',')
                        .map(|x| x.parse::<usize>().expect("structure entries are numeric"))
                        .sum();
                    assert_eq!(total, g.n(), "structure {} must sum to n", s);
                    if self.bipartite == Some(true) {
                        for len in s
                            .trim_matches(|c| c == '(' || c == ')')
                            .split(',')
                            .map(|x| x.parse::<usize>().expect("numeric"))
                        {
                            assert_eq!(len % 2, 0, "bipartite cycles are even");
                        }
                    }
                }
            }
        }
    }

    /// Tab-separated values in selection order; unset cells render `-`.
    pub fn render(&self, selection: &[Field]) -> String {
        let bool_str = |b: Option<bool>| match b {
            Some(true) => "true".to_string(),
            Some(false) => "false".to_string(),
            None => "-".to_string(),
        };
        let cells: Vec<String> = selection
            .iter()
            .map(|f| match f {
                Field::Certificate => self.certificate.clone().unwrap_or_else(|| "-".into()),
                Field::N => self.n.to_string(),
                Field::Girth => self.girth.clone().unwrap_or_else(|| "-".into()),
                Field::Bipartite => bool_str(self.bipartite),
                Field::TwoFactorCount => self
                    .two_factor_count
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "-".into()),
                Field::StructureSet => self.structure_set.clone().unwrap_or_else(|| "-".into()),
                Field::Pseudo2fi => bool_str(self.pseudo_2fi),
                Field::Vacuous => bool_str(self.vacuous),
                Field::TwoFactorHamiltonian => bool_str(self.two_factor_hamiltonian),
                Field::Essentially4ec => bool_str(self.essentially_4ec),
                Field::CyclicEc => self.cyclic_ec.clone().unwrap_or_else(|| "-".into()),
                Field::AutGroupSize => self
                    .aut_group_size
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "-".into()),
                Field::VertexTransitive => bool_str(self.vertex_transitive),
                Field::Witnesses => self.witnesses.clone().unwrap_or_else(|| "-".into()),
            })
            .collect();
        cells.join("\t")
    }

    /// Column lookup on a rendered line, for tests and downstream tools.
    pub fn cell<'a>(line: &'a str, selection: &[Field], field: Field) -> Option<&'a str> {
        let idx = selection.iter().position(|f| *f == field)?;
        line.split('\t').nth(idx)
    }
}
