//! Library behind the `cbg` binary: graph analysis reports, the census
//! scan, counterexample verification and the dual-enumerator crosscheck.
//!
//! Everything here is callable in-process so the integration and
//! acceptance suites can drive the exact code paths the binary uses.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use cbg_core::codec;
use cbg_core::connectivity;
use cbg_core::constructions::{self, Name};
use cbg_core::factors;
use cbg_core::generator::{self, GenSpec};
use cbg_core::graph::{Girth, Graph};
use cbg_core::symmetry;

pub mod report;

pub use report::{AnalysisReport, Field, FIELD_ORDER};

/// Exit statuses shared by all commands.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAIL: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

/// Splits `k/m` work-partition syntax.
pub fn parse_split(s: &str) -> Result<(usize, usize), String> {
    let (k, m) = s
        .split_once('/')
        .ok_or_else(|| format!("expected k/m, got {:?}", s))?;
    let k: usize = k.trim().parse().map_err(|_| format!("bad index in {:?}", s))?;
    let m: usize = m.trim().parse().map_err(|_| format!("bad count in {:?}", s))?;
    if m == 0 || k >= m {
        return Err(format!("need 0 <= k < m, got {}/{}", k, m));
    }
    Ok((k, m))
}

/// Work units for the `k`-th of `m` partitions, at a depth deep enough to
/// spread the load. Deterministic in the spec and `m` alone, so the union
/// over all `k` is exactly the unsplit output.
pub fn split_units(spec: GenSpec, k: usize, m: usize) -> Vec<generator::WorkUnit> {
    let max_depth = spec.n / 2;
    let mut depth = 0;
    let mut units = generator::split_work(spec, depth);
    while units.len() < 4 * m && depth < max_depth {
        depth += 1;
        units = generator::split_work(spec, depth);
    }
    units
        .into_iter()
        .enumerate()
        .filter(|(i, _)| i % m == k)
        .map(|(_, u)| u)
        .collect()
}

/// `cbg generate`: stream graph6 lines (or just the count).
pub fn cmd_generate(
    n: usize,
    min_girth: usize,
    split: Option<(usize, usize)>,
    count_only: bool,
    out: &mut impl Write,
) -> std::io::Result<i32> {
    let spec = match GenSpec::new(n, min_girth) {
        Ok(spec) => spec,
        Err(e) => {
            writeln!(out, "error: {}", e)?;
            return Ok(EXIT_INPUT_ERROR);
        }
    };
    let mut count = 0u64;
    let mut error = None;
    {
        let mut sink = |g: &Graph| {
            count += 1;
            if !count_only {
                if let Err(e) = writeln!(out, "{}", codec::encode_graph6(g)) {
                    error = Some(e);
                }
            }
        };
        match split {
            None => generator::generate(spec, &mut sink),
            Some((k, m)) => {
                for unit in split_units(spec, k, m) {
                    generator::generate_unit(&unit, &mut sink);
                }
            }
        }
    }
    if let Some(e) = error {
        return Err(e);
    }
    if count_only {
        writeln!(out, "{}", count)?;
    }
    Ok(EXIT_OK)
}

/// Input format for graph streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Graph6,
    AdjList,
}

/// Reads graphs from `input`: one graph6 line per graph, or a single
/// adjacency-list document. Returns `(line_number, parse result)` pairs.
pub fn read_graphs(
    input: &mut impl BufRead,
    format: InputFormat,
) -> std::io::Result<Vec<(usize, Result<Graph, String>)>> {
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    match format {
        InputFormat::AdjList => Ok(vec![(
            1,
            codec::read_adjlist(&text).map_err(|e| e.to_string()),
        )]),
        InputFormat::Graph6 => {
            let mut out = Vec::new();
            for (idx, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                out.push((
                    idx + 1,
                    codec::decode_graph6(line.trim()).map_err(|e| e.to_string()),
                ));
            }
            Ok(out)
        }
    }
}

/// `cbg analyze`: one tab-separated report per input graph.
pub fn cmd_analyze(
    input: &mut impl BufRead,
    format: InputFormat,
    fields: Option<&[Field]>,
    out: &mut impl Write,
) -> std::io::Result<i32> {
    let graphs = read_graphs(input, format)?;
    let selection: Vec<Field> = match fields {
        Some(list) => list.to_vec(),
        None => FIELD_ORDER.to_vec(),
    };
    writeln!(out, "#{}", report::header(&selection))?;
    let mut had_error = false;
    for (line_no, parsed) in graphs {
        match parsed {
            Ok(g) => {
                let rep = AnalysisReport::compute(&g, &selection, fields.is_some());
                writeln!(out, "{}", rep.render(&selection))?;
            }
            Err(msg) => {
                had_error = true;
                writeln!(out, "#error\t{}\t{}", line_no, msg)?;
            }
        }
    }
    Ok(if had_error { EXIT_INPUT_ERROR } else { EXIT_OK })
}

/// Per-order tallies of a scan plus the surviving graphs.
pub struct ScanOutcome {
    /// `(order, generated, pseudo_2fi, survivors)` per order scanned.
    pub tallies: Vec<(usize, u64, u64, u64)>,
    /// The essentially-4-edge-connected pseudo-2FI graphs found.
    pub survivors: Vec<Graph>,
}

/// Generates every order `14..=max_n` (step 2) at the girth bound and
/// filters for essentially 4-edge-connected pseudo-2FI graphs.
pub fn scan(max_n: usize, min_girth: usize) -> Result<ScanOutcome, String> {
    let mut tallies = Vec::new();
    let mut survivors = Vec::new();
    let mut order = 14;
    while order <= max_n {
        let spec = GenSpec::new(order, min_girth).map_err(|e| e.to_string())?;
        let mut generated = 0;
        let mut pseudo = 0;
        let mut surviving = 0;
        generator::generate(spec, &mut |g| {
            generated += 1;
            if !factors::pseudo_two_factor_isomorphic(g).pseudo_2fi {
                return;
            }
            pseudo += 1;
            if connectivity::is_essentially_4_edge_connected(g).0 {
                surviving += 1;
                survivors.push(g.clone());
            }
        });
        tallies.push((order, generated, pseudo, surviving));
        order += 2;
    }
    Ok(ScanOutcome { tallies, survivors })
}

/// `cbg scan`: tallies as comment lines, then a full report per survivor.
pub fn cmd_scan(max_n: usize, min_girth: usize, out: &mut impl Write) -> std::io::Result<i32> {
    let outcome = match scan(max_n, min_girth) {
        Ok(o) => o,
        Err(e) => {
            writeln!(out, "error: {}", e)?;
            return Ok(EXIT_INPUT_ERROR);
        }
    };
    out.write_all(format_tallies(&outcome.tallies).as_bytes())?;
    let selection = FIELD_ORDER.to_vec();
    writeln!(out, "#{}", report::header(&selection))?;
    for g in &outcome.survivors {
        let rep = AnalysisReport::compute(g, &selection, false);
        writeln!(out, "{}", rep.render(&selection))?;
    }
    Ok(EXIT_OK)
}

/// One verification check: name, outcome, detail on failure.
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, pass: bool, detail: String) -> Check {
    Check { name, pass, detail }
}

/// The golden checklist for the 30-vertex counterexample, in a fixed
/// order. Runs every check regardless of earlier failures.
pub fn verify_counterexample(g: &Graph) -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(check("order 30", g.n() == 30, format!("n = {}", g.n())));
    checks.push(check("cubic", g.is_regular(3), String::new()));
    checks.push(check("bipartite", g.is_bipartite(), String::new()));
    let girth = g.girth();
    checks.push(check(
        "girth 6",
        girth == Girth::Finite(6),
        format!("girth = {}", girth),
    ));
    let (e4, witness) = connectivity::is_essentially_4_edge_connected(g);
    checks.push(check(
        "essentially 4-edge-connected",
        e4,
        witness.map(|c| format!("essential cut: {}", c)).unwrap_or_default(),
    ));
    let cyc = connectivity::cyclic_edge_connectivity(g);
    checks.push(check(
        "cyclic edge-connectivity 6",
        cyc == Some(6),
        format!(
            "cyclic edge-connectivity = {}",
            cyc.map(|v| v.to_string()).unwrap_or_else(|| "undefined".into())
        ),
    ));
    let aut = symmetry::automorphisms(g);
    checks.push(check(
        "automorphism group order 144",
        aut.group_size == 144,
        format!("group order = {}", aut.group_size),
    ));
    checks.push(check(
        "not vertex-transitive",
        aut.vertex_orbits.len() > 1,
        format!("vertex orbits = {}", aut.vertex_orbits.len()),
    ));

    let direct = factors::two_factors_direct(g);
    let via = factors::two_factors_via_matchings(g);
    let both_312 = match &via {
        Ok(via) => {
            let mut a = direct.clone();
            let mut b = via.clone();
            a.sort();
            b.sort();
            direct.len() == 312 && via.len() == 312 && a == b
        }
        Err(_) => false,
    };
    checks.push(check(
        "312 2-factors by both enumerators",
        both_312,
        format!(
            "direct = {}, matching-complement = {}",
            direct.len(),
            via.as_ref()
                .map(|v| v.len().to_string())
                .unwrap_or_else(|e| e.to_string())
        ),
    ));

    let set: Vec<String> = factors::two_factor_structure_set(g)
        .iter()
        .map(|s| s.to_string())
        .collect();
    let expected = ["(6,6,18)", "(6,10,14)", "(10,10,10)", "(30)"];
    checks.push(check(
        "cycle structures {(6,6,18),(6,10,14),(10,10,10),(30)}",
        set == expected,
        format!("structures = {}", set.join(" ")),
    ));

    let parity = factors::pseudo_two_factor_isomorphic(g);
    checks.push(check(
        "pseudo 2-factor isomorphic",
        parity.pseudo_2fi && !parity.vacuous,
        parity
            .witness
            .map(|(a, b)| format!("parity conflict: {} vs {}", a, b))
            .unwrap_or_default(),
    ));
    let ham = factors::two_factor_hamiltonian(g);
    checks.push(check(
        "not 2-factor hamiltonian",
        !ham.two_factor_hamiltonian,
        String::new(),
    ));

    let family = if g.is_regular(3) && g.is_connected() {
        constructions::in_family(
            g,
            &[
                constructions::named(Name::K33),
                constructions::named(Name::Heawood),
                constructions::named(Name::Pappus),
            ],
        )
    } else {
        false
    };
    checks.push(check(
        "not in star-product family of {K3,3, Heawood, Pappus}",
        !family,
        String::new(),
    ));

    checks
}

/// `cbg verify-counterexample`.
pub fn cmd_verify_counterexample(g: &Graph, out: &mut impl Write) -> std::io::Result<i32> {
    let checks = verify_counterexample(g);
    let mut failures = 0;
    for c in &checks {
        if c.pass {
            writeln!(out, "ok    {}", c.name)?;
        } else {
            failures += 1;
            if c.detail.is_empty() {
                writeln!(out, "FAIL  {}", c.name)?;
            } else {
                writeln!(out, "FAIL  {} ({})", c.name, c.detail)?;
            }
        }
    }
    writeln!(out, "{} of {} checks passed", checks.len() - failures, checks.len())?;
    Ok(if failures == 0 { EXIT_OK } else { EXIT_VERIFY_FAIL })
}

/// `cbg crosscheck`: both 2-factor enumerators on each cubic input graph.
pub fn cmd_crosscheck(
    input: &mut impl BufRead,
    format: InputFormat,
    out: &mut impl Write,
) -> std::io::Result<i32> {
    let graphs = read_graphs(input, format)?;
    let mut agreed = 0u64;
    let mut skipped = 0u64;
    let mut had_error = false;
    for (line_no, parsed) in graphs {
        let g = match parsed {
            Ok(g) => g,
            Err(msg) => {
                had_error = true;
                writeln!(out, "#error\t{}\t{}", line_no, msg)?;
                continue;
            }
        };
        if !g.is_regular(3) {
            skipped += 1;
            writeln!(out, "line {}: skipped (not cubic)", line_no)?;
            continue;
        }
        let mut direct = factors::two_factors_direct(&g);
        let mut via = match factors::two_factors_via_matchings(&g) {
            Ok(v) => v,
            Err(e) => {
                writeln!(out, "line {}: DISAGREE ({})", line_no, e)?;
                return Ok(EXIT_VERIFY_FAIL);
            }
        };
        direct.sort();
        via.sort();
        if direct != via {
            writeln!(
                out,
                "line {}: DISAGREE (direct {} vs matchings {})",
                line_no,
                direct.len(),
                via.len()
            )?;
            return Ok(EXIT_VERIFY_FAIL);
        }
        agreed += 1;
        writeln!(out, "line {}: agree ({} 2-factors)", line_no, direct.len())?;
    }
    writeln!(out, "agreement {}/{} (skipped {})", agreed, agreed, skipped)?;
    Ok(if had_error { EXIT_INPUT_ERROR } else { EXIT_OK })
}

/// Writes every named graph to `dir` in graph6 and adjacency-list form.
pub fn seed_fixtures(dir: &std::path::Path) -> std::io::Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for name in Name::ALL {
        let g = constructions::named(name);
        let g6 = dir.join(format!("{}.g6", name.slug()));
        std::fs::write(&g6, format!("{}\n", codec::encode_graph6(&g)))?;
        written.push(g6);
        let adj = dir.join(format!("{}.adj", name.slug()));
        std::fs::write(&adj, codec::write_adjlist(&g))?;
        written.push(adj);
    }
    Ok(written)
}

/// Sniffs adjacency-list vs graph6 content for `--graph` file arguments.
pub fn load_graph_file(path: &std::path::Path) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    if first.contains(':') {
        codec::read_adjlist(&text).map_err(|e| e.to_string())
    } else {
        codec::decode_graph6(first).map_err(|e| e.to_string())
    }
}

/// Certificates of a graph set, sorted; convenient for set comparisons.
pub fn certificate_set(graphs: &[Graph]) -> BTreeSet<String> {
    graphs
        .iter()
        .map(|g| symmetry::canonical_form(g).certificate)
        .collect()
}

fn format_tallies(tallies: &[(usize, u64, u64, u64)]) -> String {
    let mut s = String::new();
    for (order, generated, pseudo, surviving) in tallies {
        let _ = writeln!(
            s,
            "# order {}: generated {} pseudo-2fi {} survivors {}",
            order, generated, pseudo, surviving
        );
    }
    s
}
