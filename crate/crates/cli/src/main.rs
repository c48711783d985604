//! `dfree`: count forbidden-orientation-free orientations, compute
//! decomposition families, run brute-force extremal searches, and verify the
//! registered finite claims.
//!
//! Exit codes: 0 success / all claims pass, 1 claim failure, 2 usage or
//! parse error, 3 exact envelope exceeded.

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;

use dfree_core::claims;
use dfree_core::decomp;
use dfree_core::error::{CapacityError, ParseError};
use dfree_core::extremal;
use dfree_core::graph::{Digraph, Graph};
use dfree_core::orient::{self, EngineConfig};
use dfree_core::text::{self, TextItem};

#[derive(Parser)]
#[command(name = "dfree", version, about = "forbidden-orientation counting toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Shared {
    /// Emit JSON instead of the table rendering.
    #[arg(long, global = true)]
    json: bool,
    /// Worker cap for parallel phases; never changes results.
    #[arg(long, global = true, default_value_t = default_threads())]
    threads: usize,
    /// Override the exact-computation envelopes (a cost estimate is printed
    /// to stderr first).
    #[arg(long, global = true)]
    force: bool,
    /// Stream per-level status lines to stderr.
    #[arg(long, global = true)]
    progress: bool,
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(8)
}

#[derive(Subcommand)]
enum Command {
    /// Parse or build a graph and print it in the text format.
    Graph {
        /// Named descriptor (complete:n, turan:n,p, star:t, fan:k,r, ...) or
        /// a file path.
        #[arg(long)]
        spec: String,
        #[command(flatten)]
        shared: Shared,
    },
    /// Count the forbidden-orientation-free orientations of a graph.
    Count {
        /// Host graph: named descriptor or file path.
        #[arg(long)]
        graph: String,
        /// Forbidden oriented pattern: named pattern (triangle:cyclic,
        /// bowtie:all-in, star:k:in, fan:k,r:antidirected-cyclic, ...) or a
        /// file of `a` lines.
        #[arg(long)]
        forbidden: String,
        /// Estimate by sampling instead of exact counting.
        #[arg(long, requires = "samples", requires = "seed")]
        mc: bool,
        /// Sample count for --mc.
        #[arg(long)]
        samples: Option<u64>,
        /// RNG seed for --mc; fixed seeds reproduce identical estimates.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        shared: Shared,
    },
    /// Decomposition family of a graph.
    Decomp {
        #[arg(long)]
        graph: String,
        /// Part size of the host (default: the vertex count of the graph).
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        shared: Shared,
    },
    /// Family members all of whose orientations admit an orientation witness.
    Mprime {
        #[arg(long)]
        forbidden: String,
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        shared: Shared,
    },
    /// Brute-force extremal number of a forbidden family.
    Extremal {
        #[arg(long)]
        n: usize,
        /// Comma-separated named graph descriptors.
        #[arg(long)]
        forbidden: Option<String>,
        /// Comma-separated graph file paths.
        #[arg(long)]
        forbidden_file: Option<String>,
        #[command(flatten)]
        shared: Shared,
    },
    /// Brute-force maximum of the count over all graphs on n vertices.
    Maxd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        forbidden: String,
        #[command(flatten)]
        shared: Shared,
    },
    /// Run registered verification claims.
    Verify {
        /// Claim id or "all".
        #[arg(long)]
        claim: String,
        /// Restrict "all" to one tag (appendixB, prop51, families, wheel, ...).
        #[arg(long)]
        tag: Option<String>,
        #[command(flatten)]
        shared: Shared,
    },
}

enum CliError {
    Usage(String),
    Capacity(CapacityError),
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<CapacityError> for CliError {
    fn from(e: CapacityError) -> Self {
        CliError::Capacity(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Capacity(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn load_graph(spec: &str) -> Result<Graph, CliError> {
    if Path::new(spec).exists() {
        let body = std::fs::read_to_string(spec)
            .map_err(|e| CliError::Usage(format!("reading {spec}: {e}")))?;
        match text::parse_text(&body)? {
            TextItem::Graph(g) => Ok(g),
            _ => Err(CliError::Usage(format!("{spec} does not hold an undirected graph"))),
        }
    } else {
        Ok(text::named_graph(spec)?)
    }
}

fn load_digraph(spec: &str) -> Result<Digraph, CliError> {
    if Path::new(spec).exists() {
        let body = std::fs::read_to_string(spec)
            .map_err(|e| CliError::Usage(format!("reading {spec}: {e}")))?;
        match text::parse_text(&body)? {
            TextItem::Digraph(d) => Ok(d),
            _ => Err(CliError::Usage(format!("{spec} does not hold a directed pattern"))),
        }
    } else {
        Ok(text::named_digraph(spec)?)
    }
}

fn edges_inline(g: &Graph) -> String {
    let mut s = String::new();
    for &(u, v) in g.edges() {
        let _ = write!(s, " {u}-{v}");
    }
    s
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Graph { spec, shared } => {
            let item = if Path::new(&spec).exists() {
                let body = std::fs::read_to_string(&spec)
                    .map_err(|e| CliError::Usage(format!("reading {spec}: {e}")))?;
                text::parse_text(&body)?
            } else if let Ok(g) = text::named_graph(&spec) {
                TextItem::Graph(g)
            } else {
                TextItem::Digraph(text::named_digraph(&spec)?)
            };
            match (&item, shared.json) {
                (TextItem::Graph(g), true) => {
                    println!("{}", serde_json::to_string(g).expect("graph serializes"));
                }
                (TextItem::Digraph(d), true) => {
                    println!("{}", serde_json::to_string(d).expect("digraph serializes"));
                }
                (TextItem::Partial(p), true) => {
                    let fixed: Vec<(usize, usize)> = p
                        .fixed_edges()
                        .iter()
                        .map(|&(i, bit)| {
                            let (u, v) = p.base().edges()[i];
                            if bit { (v, u) } else { (u, v) }
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "n": p.base().n(),
                            "edges": p.base().edges(),
                            "fixed_arcs": fixed,
                        })
                    );
                }
                (TextItem::Graph(g), false) => print!("{}", text::render_graph(g)),
                (TextItem::Digraph(d), false) => print!("{}", text::render_digraph(d)),
                (TextItem::Partial(p), false) => print!("{}", text::render_partial(p)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { graph, forbidden, mc, samples, seed, shared } => {
            let g = load_graph(&graph)?;
            let h = load_digraph(&forbidden)?;
            if mc {
                let samples = samples.expect("clap enforces --samples");
                if samples == 0 {
                    return Err(CliError::Usage("--samples must be at least 1".into()));
                }
                let seed = seed.expect("clap enforces --seed");
                let (estimate, stderr) = orient::mc_estimate(&g, &h, samples, seed);
                if shared.json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "estimate": format!("{}/{}", estimate.numer(), estimate.denom()),
                            "stderr": format!("{}/{}", stderr.numer(), stderr.denom()),
                            "samples": samples.to_string(),
                            "seed": seed.to_string(),
                        })
                    );
                } else {
                    let approx = estimate.numer().to_f64().unwrap_or(f64::NAN)
                        / estimate.denom().to_f64().unwrap_or(f64::NAN);
                    println!("estimate {}/{} ~= {approx:.6}", estimate.numer(), estimate.denom());
                    println!("stderr {}/{}", stderr.numer(), stderr.denom());
                }
                return Ok(ExitCode::SUCCESS);
            }
            let cfg = EngineConfig { workers: shared.threads, ..EngineConfig::default() };
            let result = if shared.force {
                if g.m() > 64 {
                    return Err(CliError::Capacity(CapacityError::new(
                        format!("exact counting over {} edges", g.m()),
                        "64 edges even with --force".to_string(),
                        "use --mc",
                    )));
                }
                eprintln!(
                    "forcing exact count: up to 2^{} = {:.3e} assignments",
                    g.m(),
                    2f64.powi(g.m() as i32)
                );
                orient::count_hfree_unchecked(&g, &h, &cfg)
            } else {
                orient::count_hfree_with(&g, &h, &cfg)?
            };
            if shared.json {
                println!("{}", serde_json::to_string(&result).expect("count serializes"));
            } else {
                println!("hfree {}", result.hfree);
                println!("total {}", result.total);
                println!(
                    "p_contains {}/{}",
                    result.p_contains.numer(),
                    result.p_contains.denom()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decomp { graph, t, shared } => {
            let g = load_graph(&graph)?;
            let fam = decomp::decomposition_family(&g, t).map_err(decomp_err)?;
            if shared.json {
                println!("{}", serde_json::to_string(&*fam).expect("family serializes"));
            } else {
                println!("p {}", fam.p);
                println!("t {}", fam.t_used);
                for m in &fam.members {
                    println!("member n={} m={}{}", m.n(), m.m(), edges_inline(m));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mprime { forbidden, t, shared } => {
            let h = load_digraph(&forbidden)?;
            let members = decomp::m_prime(&h, t).map_err(decomp_err)?;
            if shared.json {
                println!("{}", serde_json::to_string(&members).expect("members serialize"));
            } else {
                for m in &members {
                    println!("member n={} m={}{}", m.n(), m.m(), edges_inline(m));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Extremal { n, forbidden, forbidden_file, shared } => {
            let mut family = Vec::new();
            if let Some(list) = forbidden {
                for part in list.split(',') {
                    family.push(text::named_graph(part)?);
                }
            }
            if let Some(files) = forbidden_file {
                for path in files.split(',') {
                    family.push(load_graph(path)?);
                }
            }
            if family.is_empty() {
                return Err(CliError::Usage(
                    "extremal needs --forbidden or --forbidden-file".into(),
                ));
            }
            let progress = shared.progress;
            let mut on_level = |m: usize, scanned: u64| {
                if progress {
                    eprintln!("level {m}: scanned {scanned} labeled graphs");
                }
            };
            let result = if shared.force {
                if n > 10 {
                    return Err(CliError::Capacity(CapacityError::new(
                        format!("extremal search on {n} vertices"),
                        "10 vertices even with --force".to_string(),
                        "the canonical form is brute force",
                    )));
                }
                eprintln!(
                    "forcing extremal search: up to 2^{} labeled graphs",
                    n * (n - 1) / 2
                );
                extremal::extremal_number_unchecked(n, &family, &mut on_level)
            } else {
                if n > extremal::EXTREMAL_MAX_N {
                    return Err(extremal::extremal_number(n, &family).unwrap_err().into());
                }
                extremal::extremal_number_unchecked(n, &family, &mut on_level)
            };
            if shared.json {
                println!("{}", serde_json::to_string(&result).expect("result serializes"));
            } else {
                println!("max_edges {}", result.max_edges);
                for w in &result.witnesses {
                    println!("witness n={} m={}{}", w.n(), w.m(), edges_inline(w));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Maxd { n, forbidden, shared } => {
            let h = load_digraph(&forbidden)?;
            let cfg = EngineConfig { workers: shared.threads, ..EngineConfig::default() };
            let progress = shared.progress;
            let mut on_level = |m: usize, classes: usize| {
                if progress {
                    eprintln!("level {m}: {classes} isomorphism classes");
                }
            };
            let result = if shared.force {
                if n > 10 {
                    return Err(CliError::Capacity(CapacityError::new(
                        format!("maximization on {n} vertices"),
                        "10 vertices even with --force".to_string(),
                        "the class enumeration is brute force",
                    )));
                }
                eprintln!("forcing maximization over all classes on {n} vertices");
                extremal::max_d_unchecked(n, &h, &cfg, true, &mut on_level)
            } else {
                if n > extremal::MAXD_MAX_N {
                    return Err(extremal::max_d(n, &h, &cfg).unwrap_err().into());
                }
                extremal::max_d_unchecked(n, &h, &cfg, true, &mut on_level)
            };
            if shared.json {
                println!("{}", serde_json::to_string(&result).expect("result serializes"));
            } else {
                println!("max_count {}", result.max_count);
                for w in &result.witnesses {
                    println!("witness n={} m={}{}", w.n(), w.m(), edges_inline(w));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { claim, tag, shared } => {
            let reports = if claim == "all" {
                claims::run_all(tag.as_deref(), shared.threads)
            } else {
                vec![claims::run_claim(&claim).map_err(|e| CliError::Usage(e.to_string()))?]
            };
            let all_pass = reports.iter().all(|r| r.pass);
            if shared.json {
                println!("{}", serde_json::to_string(&reports).expect("reports serialize"));
            } else {
                for r in &reports {
                    println!(
                        "{:<22} {:<5} {:>6}ms  expected {}  computed {}",
                        r.id,
                        if r.pass { "pass" } else { "FAIL" },
                        r.runtime_ms,
                        r.expected,
                        r.computed
                    );
                    for note in &r.notes {
                        println!("{:<22}   {note}", "");
                    }
                }
                println!(
                    "{} of {} claims pass",
                    reports.iter().filter(|r| r.pass).count(),
                    reports.len()
                );
            }
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn decomp_err(e: dfree_core::error::DecompError) -> CliError {
    match e {
        dfree_core::error::DecompError::Capacity(c) => CliError::Capacity(c),
        other => CliError::Usage(other.to_string()),
    }
}
