use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cbg_cli::{
    cmd_analyze, cmd_crosscheck, cmd_generate, cmd_scan, cmd_verify_counterexample,
    load_graph_file, parse_split, report, seed_fixtures, InputFormat, EXIT_INPUT_ERROR,
};
use cbg_core::constructions::{named, Name};

/// Census and analysis pipeline for cubic bipartite graphs.
#[derive(Parser)]
#[command(name = "cbg", version, about)]
struct Cli {
    /// Write all named graphs to a directory (graph6 and adjacency list),
    /// then exit.
    #[arg(long, value_name = "DIR", global = true)]
    seed_fixtures: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate all connected cubic bipartite graphs of a given order and
    /// minimum girth, one graph6 line each.
    Generate {
        /// Vertex count (even, 6..=64).
        #[arg(short = 'n', long = "vertices")]
        n: usize,
        /// Minimum girth: 4, 6 or 8.
        #[arg(short = 'g', long = "min-girth")]
        min_girth: usize,
        /// Print only the census count.
        #[arg(long)]
        count_only: bool,
        /// Run the k-th of m disjoint work partitions, as k/m.
        #[arg(long, value_name = "K/M")]
        split: Option<String>,
    },
    /// Analyze graphs from a file or stdin; one tab-separated report per
    /// graph.
    Analyze {
        /// Input file; defaults to stdin.
        input: Option<PathBuf>,
        /// Input format.
        #[arg(long, default_value = "graph6", value_parser = parse_format)]
        format: InputFormat,
        /// Comma-separated field list (forces expensive fields at any
        /// order).
        #[arg(long)]
        fields: Option<String>,
    },
    /// Generate all orders 14..=max-n and report the essentially
    /// 4-edge-connected pseudo-2FI survivors.
    Scan {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(short = 'g', long = "min-girth")]
        min_girth: usize,
    },
    /// Run the golden checklist against the embedded 30-vertex
    /// counterexample (or another graph via --graph).
    VerifyCounterexample {
        /// Alternative graph file (graph6 or adjacency list).
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Compare the two independent 2-factor enumerators on every cubic
    /// input graph.
    Crosscheck {
        /// Input file; defaults to stdin.
        input: Option<PathBuf>,
        #[arg(long, default_value = "graph6", value_parser = parse_format)]
        format: InputFormat,
    },
}

fn parse_format(s: &str) -> Result<InputFormat, String> {
    match s {
        "graph6" => Ok(InputFormat::Graph6),
        "adjlist" => Ok(InputFormat::AdjList),
        other => Err(format!("unknown format {:?}; use graph6 or adjlist", other)),
    }
}

fn open_input(path: &Option<PathBuf>) -> io::Result<Box<dyn BufRead>> {
    match path {
        Some(p) => Ok(Box::new(BufReader::new(std::fs::File::open(p)?))),
        None => Ok(Box::new(BufReader::new(io::stdin()))),
    }
}

fn run() -> io::Result<i32> {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();

    if let Some(dir) = &cli.seed_fixtures {
        let written = seed_fixtures(dir)?;
        for path in written {
            writeln!(out, "wrote {}", path.display())?;
        }
        return Ok(0);
    }

    let Some(command) = cli.command else {
        eprintln!("no command given; see --help");
        return Ok(EXIT_INPUT_ERROR);
    };

    match command {
        Command::Generate {
            n,
            min_girth,
            count_only,
            split,
        } => {
            let split = match split.as_deref().map(parse_split).transpose() {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {}", e);
                    return Ok(EXIT_INPUT_ERROR);
                }
            };
            cmd_generate(n, min_girth, split, count_only, &mut out)
        }
        Command::Analyze { input, format, fields } => {
            let fields = match fields.as_deref().map(report::parse_fields).transpose() {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {}", e);
                    return Ok(EXIT_INPUT_ERROR);
                }
            };
            let mut reader = open_input(&input)?;
            cmd_analyze(&mut reader, format, fields.as_deref(), &mut out)
        }
        Command::Scan { max_n, min_girth } => cmd_scan(max_n, min_girth, &mut out),
        Command::VerifyCounterexample { graph } => {
            let g = match graph {
                Some(path) => match load_graph_file(&path) {
                    Ok(g) => g,
                    Err(e) => {
                        eprintln!("error: {}", e);
                        return Ok(EXIT_INPUT_ERROR);
                    }
                },
                None => named(Name::CounterexampleG),
            };
            cmd_verify_counterexample(&g, &mut out)
        }
        Command::Crosscheck { input, format } => {
            let mut reader = open_input(&input)?;
            cmd_crosscheck(&mut reader, format, &mut out)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("io error: {}", e);
            ExitCode::from(EXIT_INPUT_ERROR as u8)
        }
    }
}
