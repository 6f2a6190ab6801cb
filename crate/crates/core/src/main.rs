//! Command-line front end for the exact coloring-invariant solvers.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad graph text, parameters
//! out of range, solver caps exceeded) with a diagnostic on stderr, 2 on
//! usage errors (unknown flags, missing or conflicting inputs). Output is
//! deterministic for fixed inputs, flags, and seeds.

use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use gammab::{
    b_number, chromatic_with_witness, clique_with_witness, domination_report, eliminate_classes,
    emit_report, first_fit, first_occurrence, grundy_number, grundy_oracle,
    is_b_coloring, is_b_monotone, is_free, is_grundy_coloring, is_proper, m_number, profile,
    sample_b_monotone, sweep_family, Coloring, Error, FamilyKind, FamilySpec, Graph,
    MonotonicityVerdict, ReportFormat, Result, SolverCaps,
};

/// Exact solvers for the two extremes of proper coloring — the first-fit
/// worst case and the b-chromatic number — with graph generators, structure
/// checks, and reproducible family sweeps.
#[derive(Parser)]
#[command(name = "gammab", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// One graph, from exactly one source.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Inline graph6 text, e.g. "C~" for the complete graph on 4 vertices
    #[arg(long, value_name = "TEXT")]
    g6: Option<String>,

    /// Path to an edge-list file: a line with the vertex count, then one
    /// "u v" line per edge
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,

    /// Generated family member, e.g. B:4, R:5, path:6, K:5, Kst:3,4,
    /// cat:10x3, tree:8:seed=42
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        if let Some(text) = &self.g6 {
            return Graph::from_graph6(text);
        }
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path).map_err(|err| Error::FileRead {
                path: path.display().to_string(),
                message: err.to_string(),
            })?;
            return Graph::from_edge_list(&text);
        }
        let spec: FamilySpec = self
            .family
            .as_deref()
            .expect("clap enforces exactly one input source")
            .parse()?;
        spec.build()
    }
}

/// How `monotone` searches for violating induced subgraphs.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct MonotoneMode {
    /// Exhaustively scan all vertex subsets (2^n exact b-computations)
    #[arg(long)]
    exact: bool,

    /// Sample this many uniform subsets instead; silence is not a proof
    #[arg(long, value_name = "TRIALS")]
    sample: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph as graph6 plus its edge list (also converts formats)
    Gen {
        #[command(flatten)]
        input: GraphInput,
    },

    /// Exact first-fit worst case with a witness ordering
    Gamma {
        #[command(flatten)]
        input: GraphInput,

        /// Cross-check by brute force over all orderings (n <= 9, no witness)
        #[arg(long)]
        oracle: bool,

        /// Exact-solver vertex cap (default: GAMMAB_CAP_N or 14)
        #[arg(long, value_name = "N")]
        cap_n: Option<usize>,
    },

    /// Exact b-chromatic number with a witness b-coloring
    Bnum {
        #[command(flatten)]
        input: GraphInput,

        /// Exact-solver vertex cap (default: GAMMAB_CAP_N or 14)
        #[arg(long, value_name = "N")]
        cap_n: Option<usize>,
    },

    /// Degree ceiling: the largest i such that the i-th largest degree is
    /// at least i − 1 (an upper bound for the b-chromatic number)
    M {
        #[command(flatten)]
        input: GraphInput,
    },

    /// Exact chromatic number with a witness coloring
    Chi {
        #[command(flatten)]
        input: GraphInput,
    },

    /// Exact clique number with a witness clique
    Omega {
        #[command(flatten)]
        input: GraphInput,
    },

    /// Repeatedly dissolve undominated color classes until a b-coloring
    /// remains, starting from a given proper coloring
    Eliminate {
        #[command(flatten)]
        input: GraphInput,

        /// Comma-separated colors, vertex 0 first, e.g. 1,2,3,1
        #[arg(long, value_name = "LIST")]
        colors: String,
    },

    /// Check whether a coloring could have been produced by first-fit
    /// (every vertex sees every smaller color in its neighborhood)
    CheckGrundy {
        #[command(flatten)]
        input: GraphInput,

        /// Comma-separated colors, vertex 0 first, e.g. 1,2,3,1
        #[arg(long, value_name = "LIST")]
        colors: String,
    },

    /// Check whether a coloring is a b-coloring; reports each class's
    /// least dominating vertex
    CheckBcoloring {
        #[command(flatten)]
        input: GraphInput,

        /// Comma-separated colors, vertex 0 first, e.g. 1,2,3,1
        #[arg(long, value_name = "LIST")]
        colors: String,
    },

    /// Search for induced copies of the given patterns
    Forb {
        #[command(flatten)]
        input: GraphInput,

        /// Pattern as a family spec or graph6; repeat the flag for several
        #[arg(long = "pattern", value_name = "PATTERN", required = true)]
        patterns: Vec<String>,
    },

    /// Decide whether deleting vertices can raise the b-chromatic number
    Monotone {
        #[command(flatten)]
        input: GraphInput,

        #[command(flatten)]
        mode: MonotoneMode,

        /// Seed for subset sampling
        #[arg(long, value_name = "SEED", default_value_t = 0)]
        seed: u64,

        /// Exact-solver vertex cap (default: GAMMAB_CAP_N or 14)
        #[arg(long, value_name = "N")]
        cap_n: Option<usize>,
    },

    /// Compute the full invariant profile of one graph with witnesses
    Profile {
        #[command(flatten)]
        input: GraphInput,

        /// Exact-solver vertex cap (default: GAMMAB_CAP_N or 14)
        #[arg(long, value_name = "N")]
        cap_n: Option<usize>,
    },

    /// Profile a family over a parameter range and emit a report
    Sweep {
        /// Family kind: path, K, Kst, B, R, cat, or tree
        #[arg(long, value_name = "KIND")]
        family: String,

        /// Inclusive parameter range, e.g. 2..6 for parameters 2,3,4,5,6
        #[arg(long, value_name = "RANGE")]
        range: String,

        /// Output format: json or csv
        #[arg(long, value_name = "FMT", default_value = "json")]
        format: String,

        /// Seed echoed in the metadata; seeded families derive per-member
        /// seeds from it
        #[arg(long, value_name = "SEED", default_value_t = 0)]
        seed: u64,

        /// Stamp the report metadata with the current unix time (reports
        /// are byte-identical across runs without it)
        #[arg(long)]
        stamp: bool,

        /// Exact-solver vertex cap (default: GAMMAB_CAP_N or 14)
        #[arg(long, value_name = "N")]
        cap_n: Option<usize>,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli.command) {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Gen { input } => {
            let g = input.load()?;
            emit(&json!({
                "n": g.n(),
                "graph6": g.to_graph6(),
                "edges": g.edges(),
            }));
        }
        Command::Gamma {
            input,
            oracle,
            cap_n,
        } => {
            let g = input.load()?;
            if oracle {
                let gamma = grundy_oracle(&g)?;
                emit(&json!({ "gamma": gamma, "witness": null }));
            } else {
                let caps = resolve_caps(cap_n)?;
                require_within_cap(&g, &caps, "the exact first-fit worst-case solver")?;
                let (gamma, ordering) = grundy_number(&g)?;
                debug_assert_eq!(first_fit(&g, &ordering)?.k(), gamma);
                emit(&json!({ "gamma": gamma, "witness": ordering.as_slice() }));
            }
        }
        Command::Bnum { input, cap_n } => {
            let g = input.load()?;
            let caps = resolve_caps(cap_n)?;
            require_within_cap(&g, &caps, "the exact b-chromatic solver")?;
            let (b, coloring) = b_number(&g)?;
            emit(&json!({ "b": b, "witness": coloring.as_slice() }));
        }
        Command::M { input } => {
            let g = input.load()?;
            emit(&json!({ "m": m_number(&g)? }));
        }
        Command::Chi { input } => {
            let g = input.load()?;
            let (chi, coloring) = chromatic_with_witness(&g)?;
            emit(&json!({ "chi": chi, "witness": coloring.as_slice() }));
        }
        Command::Omega { input } => {
            let g = input.load()?;
            let (omega, clique) = clique_with_witness(&g)?;
            emit(&json!({ "omega": omega, "witness": clique }));
        }
        Command::Eliminate { input, colors } => {
            let g = input.load()?;
            let coloring = parse_colors(&colors)?;
            let result = eliminate_classes(&g, &coloring)?;
            emit(&json!({ "value": result.k(), "witness": result.as_slice() }));
        }
        Command::CheckGrundy { input, colors } => {
            let g = input.load()?;
            let coloring = parse_colors(&colors)?;
            emit(&json!({ "value": is_grundy_coloring(&g, &coloring) }));
        }
        Command::CheckBcoloring { input, colors } => {
            let g = input.load()?;
            let coloring = parse_colors(&colors)?;
            let value = is_b_coloring(&g, &coloring);
            let dominators = if coloring.len() == g.n() && is_proper(&g, &coloring) {
                serde_json::to_value(domination_report(&g, &coloring)?.dominators)
                    .expect("vector of optional indices always serializes")
            } else {
                serde_json::Value::Null
            };
            emit(&json!({ "value": value, "dominators": dominators }));
        }
        Command::Forb { input, patterns } => {
            let g = input.load()?;
            let parsed: Vec<Graph> = patterns
                .iter()
                .map(|text| parse_pattern(text))
                .collect::<Result<_>>()?;
            let free = is_free(&g, &parsed);
            let hit = first_occurrence(&g, &parsed).map(|(index, embedding)| {
                json!({
                    "pattern_index": index,
                    "pattern": patterns[index],
                    "embedding": embedding.as_slice(),
                })
            });
            debug_assert_eq!(free, hit.is_none());
            emit(&json!({ "free": free, "first_occurrence": hit }));
        }
        Command::Monotone {
            input,
            mode,
            seed,
            cap_n,
        } => {
            let g = input.load()?;
            let caps = resolve_caps(cap_n)?;
            let verdict = match mode.sample {
                Some(trials) => sample_b_monotone(&g, trials, seed, caps.exact)?,
                None => is_b_monotone(&g, caps.exact)?,
            };
            emit(&monotone_json(&verdict));
        }
        Command::Profile { input, cap_n } => {
            let g = input.load()?;
            let caps = resolve_caps(cap_n)?;
            let record = profile(&g, &caps)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&record).expect("profile always serializes")
            );
        }
        Command::Sweep {
            family,
            range,
            format,
            seed,
            stamp,
            cap_n,
        } => {
            let kind: FamilyKind = family.parse()?;
            let range = parse_range(&range)?;
            let format: ReportFormat = format.parse()?;
            let caps = resolve_caps(cap_n)?;
            let mut report = sweep_family(kind, range, &caps, seed)?;
            if stamp {
                report.metadata.timestamp = Some(unix_now());
            }
            print!("{}", emit_report(&report, format));
        }
    }
    Ok(())
}

/// Prints one compact JSON document.
fn emit(value: &serde_json::Value) {
    println!("{value}");
}

/// Solver caps: the flag wins, then the GAMMAB_CAP_N environment variable,
/// then the default of 14.
fn resolve_caps(flag: Option<usize>) -> Result<SolverCaps> {
    if let Some(exact) = flag {
        return Ok(SolverCaps::with_exact(exact));
    }
    match std::env::var("GAMMAB_CAP_N") {
        Ok(text) => {
            let exact = text.trim().parse().map_err(|_| Error::BadRange {
                text: text.clone(),
                message: "the GAMMAB_CAP_N environment variable must be a non-negative integer"
                    .into(),
            })?;
            Ok(SolverCaps::with_exact(exact))
        }
        Err(_) => Ok(SolverCaps::default()),
    }
}

fn require_within_cap(g: &Graph, caps: &SolverCaps, what: &'static str) -> Result<()> {
    if g.n() > caps.exact {
        return Err(Error::OverCap {
            n: g.n(),
            cap: caps.exact,
            what,
            hint: "raise --cap-n or the GAMMAB_CAP_N environment variable",
        });
    }
    Ok(())
}

/// Parses "1,2,3,1" into a coloring; the error offset points into the list.
fn parse_colors(text: &str) -> Result<Coloring> {
    let mut colors = Vec::new();
    let mut offset = 0usize;
    for token in text.split(',') {
        let trimmed = token.trim();
        let color: usize = trimmed.parse().map_err(|_| Error::Parse {
            offset: offset + (token.len() - token.trim_start().len()),
            message: format!("expected a positive integer color, found `{trimmed}`"),
        })?;
        colors.push(color);
        offset += token.len() + 1; // the separating comma
    }
    Coloring::new(colors)
}

/// A pattern is a family spec when it contains `:` (graph6 text never does —
/// its bytes stay in 63..=126), and graph6 otherwise.
fn parse_pattern(text: &str) -> Result<Graph> {
    if text.contains(':') {
        text.parse::<FamilySpec>()?.build()
    } else {
        Graph::from_graph6(text)
    }
}

/// Parses the inclusive sweep range syntax "start..end".
fn parse_range(text: &str) -> Result<RangeInclusive<usize>> {
    let bad = |message: &str| Error::BadRange {
        text: text.to_string(),
        message: message.to_string(),
    };
    let (start, end) = text
        .split_once("..")
        .ok_or_else(|| bad("expected `start..end` (both ends included)"))?;
    let start: usize = start
        .trim()
        .parse()
        .map_err(|_| bad("start must be a non-negative integer"))?;
    let end: usize = end
        .trim()
        .parse()
        .map_err(|_| bad("end must be a non-negative integer (both ends included)"))?;
    if start > end {
        return Err(bad("start exceeds end"));
    }
    Ok(start..=end)
}

fn monotone_json(verdict: &MonotonicityVerdict) -> serde_json::Value {
    match verdict {
        MonotonicityVerdict::Monotone => json!({ "value": true, "witness": null }),
        MonotonicityVerdict::NoViolationFound { trials } => {
            json!({ "value": null, "witness": null, "trials": trials })
        }
        MonotonicityVerdict::Violated(w) => json!({
            "value": false,
            "witness": {
                "vertices": w.vertices,
                "b_subgraph": w.b_subgraph,
                "b_graph": w.b_graph,
            },
        }),
    }
}

/// Seconds since the unix epoch, as a decimal string.
fn unix_now() -> String {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs().to_string())
        .unwrap_or_else(|_| "0".to_string())
}
