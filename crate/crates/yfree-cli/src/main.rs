//! `yfree`: decide whether graphs contain the subdivided claw Y, and
//! exercise the rest of the library from the shell.
//!
//! Exit codes: 0 means success (for `check`: every component of every
//! input graph is Y-free), 1 means a negative verdict (a Y was found, a
//! certificate failed to verify, a lemma check failed), 2 means the
//! input itself was unusable.

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Read;
use std::process::ExitCode;

use yfree::cert::{verify_certificate_detailed, CertKind};
use yfree::enumerate::{
    enumerate_yfree, growth_point, labeled_yfree_count, oracle_census, solve_delta,
};
use yfree::generate::{random_certificate, thick_caterpillar, GenParams};
use yfree::graph::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use yfree::pathdecomp::{decompose, verify_decomposition};
use yfree::prooflab::check_structural_lemmas;
use yfree::recognize::parse_strand;
use yfree::{recognize, Certificate, CertificateBody, Graph, RecognitionResult};

#[derive(Parser)]
#[command(name = "yfree", version, about = "Subdivided-claw recognition and certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    /// One graph6 string per line.
    Graph6,
    /// Header "n m" followed by m lines "u v".
    Edges,
}

#[derive(Subcommand)]
enum Command {
    /// Decide Y-containment per connected component, one JSON line each.
    Check {
        /// Input file, or "-" for stdin.
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Check a structure certificate against a graph.
    CertVerify {
        /// Certificate JSON file, or "-" for stdin.
        cert: String,
        /// Graph file, or "-" for stdin (at most one of the two).
        graph: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Sample a random certificate and print its realization.
    #[command(group(ArgGroup::new("family").args(["strand", "necklace", "kernel"])))]
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exact vertex count of the generated graph.
        #[arg(long, required_unless_present = "thick_caterpillar")]
        n: Option<usize>,
        /// Restrict to spiked strands.
        #[arg(long)]
        strand: bool,
        /// Restrict to spiked necklaces.
        #[arg(long)]
        necklace: bool,
        /// Restrict to kernels with cloned leaves.
        #[arg(long)]
        kernel: bool,
        /// Forbid K4 beads (strand ends).
        #[arg(long)]
        no_k4: bool,
        /// Soft cap on t when drawing K_{1,1,t} and K_{2,t} beads.
        #[arg(long)]
        max_t: Option<usize>,
        /// Deterministic thick caterpillar: SPINE edges, MASK's bit i
        /// thickens spine edge i into a triangle (0b and 0x accepted).
        #[arg(long, num_args = 2, value_names = ["SPINE", "MASK"], conflicts_with_all = ["n", "seed", "strand", "necklace", "kernel", "no_k4", "max_t"])]
        thick_caterpillar: Option<Vec<String>>,
        /// Write the certificate JSON here.
        #[arg(long)]
        cert_out: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Tabulate the Y-free census by vertex count.
    Enum {
        #[arg(long)]
        max_n: usize,
        /// Cross-check against the brute-force labeled sweep (n <= 8).
        #[arg(long)]
        oracle_census: bool,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
        /// Worker threads for the census sweep.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print a verified path decomposition of a Y-free graph.
    Pathdecomp {
        /// Graph file, or "-" for stdin.
        graph: String,
        /// Use this certificate instead of running recognition.
        #[arg(long)]
        cert: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Print the growth constant of the Y-free class.
    Delta {
        #[arg(long)]
        json: bool,
    },
    /// Run the longest-path lemma checks on a connected Y-free graph.
    Prooflab {
        /// Graph file, or "-" for stdin.
        graph: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
        #[arg(long)]
        json: bool,
    },
}

fn fail(msg: impl std::fmt::Display) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn read_source(path: &str) -> String {
    if path == "-" {
        let mut buf = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
            fail(format_args!("reading stdin: {e}"));
        }
        buf
    } else {
        match std::fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => fail(format_args!("reading {path}: {e}")),
        }
    }
}

/// graph6 inputs may carry several graphs, one per line; edge lists are
/// always a single graph.
fn parse_graphs(text: &str, fmt: GraphFormat, origin: &str) -> Vec<Graph> {
    match fmt {
        GraphFormat::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| match parse_graph6(l) {
                Ok(g) => g,
                Err(e) => fail(format_args!("{origin}: {e}")),
            })
            .collect(),
        GraphFormat::Edges => match parse_edge_list(text) {
            Ok(g) => vec![g],
            Err(e) => fail(format_args!("{origin}: {e}")),
        },
    }
}

fn parse_one_graph(path: &str, fmt: GraphFormat) -> Graph {
    let graphs = parse_graphs(&read_source(path), fmt, path);
    match graphs.len() {
        1 => graphs.into_iter().next().unwrap(),
        0 => fail(format_args!("{path}: no graph in input")),
        k => fail(format_args!("{path}: expected one graph, found {k}")),
    }
}

fn write_graph(g: &Graph, fmt: GraphFormat) {
    match fmt {
        GraphFormat::Graph6 => println!("{}", to_graph6(g)),
        GraphFormat::Edges => print!("{}", to_edge_list(g)),
    }
}

/// Re-parse a certificate's JSON through `serde_json::Value` so embedded
/// objects come out with sorted keys, keeping `check` output byte-stable.
fn cert_value(cert: &Certificate) -> serde_json::Value {
    serde_json::from_str(&cert.to_json()).expect("certificate JSON round-trips")
}

#[derive(Serialize)]
struct ComponentReport {
    verdict: &'static str,
    /// Original vertex ids of the component, ascending; the witness or
    /// certificate below indexes into this list.
    vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<yfree::YWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<serde_json::Value>,
}

fn cmd_check(input: &str, fmt: GraphFormat) -> ExitCode {
    let graphs = parse_graphs(&read_source(input), fmt, input);
    if graphs.is_empty() {
        fail(format_args!("{input}: empty input"));
    }
    let mut any_y = false;
    for g in &graphs {
        for comp in g.connected_components() {
            let sub = g.induced(&comp);
            let report = match recognize(&sub) {
                Ok(RecognitionResult::ContainsY(w)) => {
                    any_y = true;
                    ComponentReport {
                        verdict: "contains-Y",
                        vertices: comp,
                        witness: Some(w),
                        certificate: None,
                    }
                }
                Ok(RecognitionResult::YFree(cert)) => ComponentReport {
                    verdict: "Y-free",
                    vertices: comp,
                    witness: None,
                    certificate: Some(cert_value(&cert)),
                },
                Err(e) => fail(format_args!("{input}: {e}")),
            };
            println!("{}", serde_json::to_string(&report).unwrap());
        }
    }
    if any_y {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_cert_verify(cert_path: &str, graph_path: &str, fmt: GraphFormat) -> ExitCode {
    if cert_path == "-" && graph_path == "-" {
        fail("certificate and graph cannot both come from stdin");
    }
    let cert = match Certificate::from_json(&read_source(cert_path)) {
        Ok(c) => c,
        Err(e) => fail(format_args!("{cert_path}: {e}")),
    };
    let g = parse_one_graph(graph_path, fmt);
    let violations = verify_certificate_detailed(&cert, &g);
    if violations.is_empty() {
        let kind = match cert.body {
            CertificateBody::KernelClones(_) => "kernel-clones",
            CertificateBody::Strand(_) => "strand",
            CertificateBody::Necklace(_) => "necklace",
        };
        println!("ok: {kind} certificate for n={}", cert.n);
        ExitCode::SUCCESS
    } else {
        for v in &violations {
            eprintln!("violation: {v}");
        }
        ExitCode::from(1)
    }
}

fn parse_mask(s: &str) -> Option<u64> {
    if let Some(b) = s.strip_prefix("0b") {
        u64::from_str_radix(b, 2).ok()
    } else if let Some(h) = s.strip_prefix("0x") {
        u64::from_str_radix(h, 16).ok()
    } else {
        s.parse().ok()
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    seed: u64,
    n: Option<usize>,
    strand: bool,
    necklace: bool,
    kernel: bool,
    no_k4: bool,
    max_t: Option<usize>,
    thick: Option<Vec<String>>,
    cert_out: Option<String>,
    fmt: GraphFormat,
) -> ExitCode {
    let (g, cert) = if let Some(args) = thick {
        let spine: usize = match args[0].parse() {
            Ok(s) if (1..=63).contains(&s) => s,
            _ => fail("SPINE must be an integer in 1..=63"),
        };
        let mask = match parse_mask(&args[1]) {
            Some(m) if spine == 63 || m < (1u64 << spine) => m,
            _ => fail(format_args!("MASK must be an integer below 2^{spine}")),
        };
        let g = thick_caterpillar(spine, mask);
        let cert = parse_strand(&g).expect("thick caterpillars are spiked strands");
        (g, cert)
    } else {
        let n = n.unwrap();
        let mut params = GenParams::new(n);
        if strand {
            params = params.kind(CertKind::Strand);
        } else if necklace {
            params = params.kind(CertKind::Necklace);
        } else if kernel {
            params = params.kind(CertKind::KernelClones);
        }
        if no_k4 {
            params = params.allow_k4(false);
        }
        if let Some(t) = max_t {
            params.max_t = t;
        }
        let cert = match random_certificate(seed, &params) {
            Ok(c) => c,
            Err(e) => fail(e),
        };
        let g = cert.realize().expect("generated certificates realize");
        (g, cert)
    };
    write_graph(&g, fmt);
    if let Some(path) = cert_out {
        if let Err(e) = std::fs::write(&path, cert.to_json() + "\n") {
            fail(format_args!("writing {path}: {e}"));
        }
    }
    ExitCode::SUCCESS
}

#[derive(Serialize)]
struct EnumRow {
    n: usize,
    classes: usize,
    labeled: String,
    growth: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    census_connected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    census_labeled: Option<String>,
}

fn cmd_enum(max_n: usize, census: bool, csv: bool, json: bool, jobs: Option<usize>) -> ExitCode {
    if max_n == 0 {
        fail("--max-n must be at least 1");
    }
    if census && max_n > 8 {
        fail("--oracle-census sweeps all labeled graphs and is capped at --max-n 8");
    }
    let run = || -> Vec<EnumRow> {
        (1..=max_n)
            .map(|n| {
                let classes = enumerate_yfree(n).len();
                let labeled = labeled_yfree_count(n);
                let (cc, cl) = if census {
                    let row = oracle_census(n);
                    (Some(row.connected.to_string()), Some(row.yfree.to_string()))
                } else {
                    (None, None)
                };
                EnumRow {
                    n,
                    classes,
                    labeled: labeled.to_string(),
                    growth: growth_point(n),
                    census_connected: cc,
                    census_labeled: cl,
                }
            })
            .collect()
    };
    let rows = match jobs {
        Some(j) if j > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .unwrap()
            .install(run),
        Some(_) => fail("--jobs must be positive"),
        None => run(),
    };
    let mut mismatch = false;
    if census {
        for r in &rows {
            if r.census_labeled.as_deref() != Some(r.labeled.as_str()) {
                eprintln!(
                    "mismatch at n={}: constructive {} vs census {}",
                    r.n,
                    r.labeled,
                    r.census_labeled.as_deref().unwrap()
                );
                mismatch = true;
            }
        }
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&rows).unwrap());
    } else if csv {
        if census {
            println!("n,classes,labeled,growth,census_connected,census_labeled");
        } else {
            println!("n,classes,labeled,growth");
        }
        for r in &rows {
            if census {
                println!(
                    "{},{},{},{:.6},{},{}",
                    r.n,
                    r.classes,
                    r.labeled,
                    r.growth,
                    r.census_connected.as_deref().unwrap(),
                    r.census_labeled.as_deref().unwrap()
                );
            } else {
                println!("{},{},{},{:.6}", r.n, r.classes, r.labeled, r.growth);
            }
        }
    } else {
        if census {
            println!("{:>3} {:>8} {:>14} {:>10} {:>16} {:>14}", "n", "classes", "labeled", "growth", "census_conn", "census_yfree");
        } else {
            println!("{:>3} {:>8} {:>14} {:>10}", "n", "classes", "labeled", "growth");
        }
        for r in &rows {
            if census {
                println!(
                    "{:>3} {:>8} {:>14} {:>10.6} {:>16} {:>14}",
                    r.n,
                    r.classes,
                    r.labeled,
                    r.growth,
                    r.census_connected.as_deref().unwrap(),
                    r.census_labeled.as_deref().unwrap()
                );
            } else {
                println!("{:>3} {:>8} {:>14} {:>10.6}", r.n, r.classes, r.labeled, r.growth);
            }
        }
    }
    if mismatch {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

#[derive(Serialize)]
struct DecompReport {
    width: usize,
    bags: Vec<Vec<usize>>,
}

fn cmd_pathdecomp(graph_path: &str, cert_path: Option<String>, fmt: GraphFormat) -> ExitCode {
    if cert_path.as_deref() == Some("-") && graph_path == "-" {
        fail("certificate and graph cannot both come from stdin");
    }
    let g = parse_one_graph(graph_path, fmt);
    let cert = match cert_path {
        Some(path) => match Certificate::from_json(&read_source(&path)) {
            Ok(c) => c,
            Err(e) => fail(format_args!("{path}: {e}")),
        },
        None => match recognize(&g) {
            Ok(RecognitionResult::YFree(cert)) => cert,
            Ok(RecognitionResult::ContainsY(w)) => {
                eprintln!(
                    "graph contains Y (center {}, mids {:?}, ends {:?}); no bounded-width decomposition is produced",
                    w.center, w.mids, w.ends
                );
                return ExitCode::from(1);
            }
            Err(e) => fail(format_args!("{graph_path}: {e}")),
        },
    };
    let pd = match decompose(&cert) {
        Ok(pd) => pd,
        Err(e) => fail(format_args!("certificate: {e}")),
    };
    match verify_decomposition(&g, &pd) {
        Ok(width) => {
            let report = DecompReport { width, bags: pd.bags };
            println!("{}", serde_json::to_string(&report).unwrap());
            ExitCode::SUCCESS
        }
        Err(violations) => {
            for v in &violations {
                eprintln!("violation: {v}");
            }
            ExitCode::from(1)
        }
    }
}

fn cmd_delta(json: bool) -> ExitCode {
    let sol = solve_delta();
    if json {
        println!(
            "{}",
            serde_json::json!({
                "delta": sol.delta,
                "z": sol.z,
                "residual": sol.residual,
            })
        );
    } else {
        println!("{:.10}", sol.delta);
    }
    ExitCode::SUCCESS
}

fn cmd_prooflab(graph_path: &str, fmt: GraphFormat, json: bool) -> ExitCode {
    let g = parse_one_graph(graph_path, fmt);
    let report = match check_structural_lemmas(&g) {
        Ok(r) => r,
        Err(e) => fail(format_args!("{graph_path}: {e}")),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!(
            "longest path length {} ({} degree-sum-minimal paths checked)",
            report.ell, report.paths_checked
        );
        for c in &report.checks {
            if c.pass {
                println!("pass  {:<24} {}", c.id, c.description);
            } else {
                println!(
                    "FAIL  {:<24} {} [{}]",
                    c.id,
                    c.description,
                    c.witness.as_deref().unwrap_or("no witness")
                );
            }
        }
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Check { input, format } => cmd_check(&input, format),
        Command::CertVerify { cert, graph, format } => cmd_cert_verify(&cert, &graph, format),
        Command::Gen {
            seed,
            n,
            strand,
            necklace,
            kernel,
            no_k4,
            max_t,
            thick_caterpillar,
            cert_out,
            format,
        } => cmd_gen(seed, n, strand, necklace, kernel, no_k4, max_t, thick_caterpillar, cert_out, format),
        Command::Enum { max_n, oracle_census, csv, json, jobs } => {
            cmd_enum(max_n, oracle_census, csv, json, jobs)
        }
        Command::Pathdecomp { graph, cert, format } => cmd_pathdecomp(&graph, cert, format),
        Command::Delta { json } => cmd_delta(json),
        Command::Prooflab { graph, format, json } => cmd_prooflab(&graph, format, json),
    }
}
