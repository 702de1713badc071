use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use indsat_lab::constructions::{
    catalogue, claw_witness, construct_by_id, sis_paw_formula, CatalogueObject,
};
use indsat_lab::error::Error;
use indsat_lab::graph::pair_count;
use indsat_lab::io::{
    decode_graph6, decode_trigraph, encode_graph6, encode_trigraph, graph_to_dot, trigraph_to_dot,
};
use indsat_lab::patterns::{pattern, Pattern};
use indsat_lab::saturation::{
    verify_graph_family_saturated, verify_trigraph_family_saturated, Verdict,
};
use indsat_lab::search::{
    search_indsat, search_sis, IndsatOptions, SisOptions, INDSAT_GRAY_GUARD, INDSAT_ORD_GUARD,
    SIS_ORD_GUARD,
};
use indsat_lab::{Graph, Trigraph};

/// Workbench for induced saturation: builds the construction catalogue,
/// verifies saturation of graphs and trigraphs, and recomputes indsat/sis
/// values by exhaustive search.
#[derive(Parser)]
#[command(name = "indsat-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalogue object and write it to a file.
    Construct {
        /// Catalogue id, e.g. icosa_5_2, minimal_paw_21, claw_j,
        /// table1_paw_n5, or a pattern name like paw or C5.
        #[arg(long)]
        name: String,
        /// Output file; .g6 or .tg depending on the object (or .dot with
        /// --format dot).
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Native)]
        format: Format,
    },
    /// Verify that a graph is induced-saturated for a target pattern.
    Verify {
        /// Target pattern, or a comma-separated family like 2K2,P4,C4.
        #[arg(long)]
        target: String,
        /// Path to a graph6 file.
        #[arg(long)]
        graph: PathBuf,
    },
    /// Verify that a trigraph is induced-saturated for a target pattern.
    VerifyTrigraph {
        #[arg(long)]
        target: String,
        /// Path to a trigraph text file.
        #[arg(long)]
        trigraph: PathBuf,
    },
    /// Exhaustive searches for optimal values.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Print known formulas and bounds next to measured construction sizes.
    #[command(subcommand)]
    Tables(TablesCommand),
    /// Write every catalogue object to a directory with stable file names.
    Export {
        /// Export the whole catalogue.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = ExportFormat::Graph6)]
        format: ExportFormat,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum SearchCommand {
    /// Minimum gray edges over saturated trigraphs on n vertices.
    Indsat {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 3)]
        max_gray: usize,
        #[command(flatten)]
        common: SearchCommon,
    },
    /// Minimum edges over saturated graphs on n vertices.
    Sis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        target: String,
        #[arg(long)]
        max_edges: usize,
        /// Filter enumeration by the degree constraints of claw-saturated
        /// graphs (claw targets only).
        #[arg(long)]
        prune: bool,
        #[command(flatten)]
        common: SearchCommon,
    },
}

#[derive(Args)]
struct SearchCommon {
    /// Worker threads; defaults to INDSAT_LAB_JOBS or all cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// Also write the report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Lift the desk-scale guards after printing the projected state-space
    /// size.
    #[arg(long)]
    unsafe_override: bool,
}

#[derive(Subcommand)]
enum TablesCommand {
    /// sis(n, paw): closed formula vs the minimal construction.
    Paw {
        #[arg(long, default_value_t = 30)]
        n_max: usize,
    },
    /// sis(n, claw): 2n-2 and 2n+2 bounds vs the catalogue witnesses.
    Claw {
        #[arg(long, default_value_t = 30)]
        n_max: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// graph6 for graphs, trigraph text for trigraphs.
    Native,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Graph6,
    Dot,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Construct { name, out, format } => {
            let object = construct_by_id(&name)?;
            let text = match (&object, format) {
                (CatalogueObject::Graph(g), Format::Native) => format!("{}\n", encode_graph6(g)?),
                (CatalogueObject::Graph(g), Format::Dot) => graph_to_dot(g),
                (CatalogueObject::Trigraph(t), Format::Native) => encode_trigraph(t),
                (CatalogueObject::Trigraph(t), Format::Dot) => trigraph_to_dot(t),
            };
            std::fs::write(&out, text).map_err(|e| Error::BadParameter(format!("write {}: {e}", out.display())))?;
            println!("WROTE {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { target, graph } => {
            let family = parse_family(&target)?;
            let g = read_graph(&graph)?;
            if let Some(max) = family.iter().map(Graph::order).max() {
                if g.order() < max {
                    eprintln!(
                        "warning: graph order {} is below the pattern order {}; at this regime \
                         only all-gray trigraphs can be saturated",
                        g.order(),
                        max
                    );
                }
            }
            let verdict = verify_graph_family_saturated(&g, &family)?;
            println!("{verdict}");
            Ok(exit_for(&verdict))
        }
        Command::VerifyTrigraph { target, trigraph } => {
            let family = parse_family(&target)?;
            let t = read_trigraph(&trigraph)?;
            let verdict = verify_trigraph_family_saturated(&t, &family)?;
            println!("{verdict}");
            Ok(exit_for(&verdict))
        }
        Command::Search(cmd) => run_search(cmd),
        Command::Tables(cmd) => {
            run_tables(cmd);
            Ok(ExitCode::SUCCESS)
        }
        Command::Export { all, format, out } => {
            if !all {
                return Err(Error::BadParameter("export requires --all".into()));
            }
            std::fs::create_dir_all(&out)
                .map_err(|e| Error::BadParameter(format!("create {}: {e}", out.display())))?;
            let mut count = 0;
            for (name, object) in catalogue() {
                let (ext, text) = match (&object, format) {
                    (CatalogueObject::Graph(g), ExportFormat::Graph6) => ("g6", format!("{}\n", encode_graph6(g)?)),
                    (CatalogueObject::Graph(g), ExportFormat::Dot) => ("dot", graph_to_dot(g)),
                    (CatalogueObject::Trigraph(t), ExportFormat::Graph6) => ("tg", encode_trigraph(t)),
                    (CatalogueObject::Trigraph(t), ExportFormat::Dot) => ("dot", trigraph_to_dot(t)),
                };
                let path = out.join(format!("{name}.{ext}"));
                std::fs::write(&path, text)
                    .map_err(|e| Error::BadParameter(format!("write {}: {e}", path.display())))?;
                count += 1;
            }
            println!("WROTE {count} files to {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_search(cmd: SearchCommand) -> Result<ExitCode, Error> {
    let common = match &cmd {
        SearchCommand::Indsat { common, .. } => common,
        SearchCommand::Sis { common, .. } => common,
    };
    install_thread_pool(common.jobs)?;

    let report = match &cmd {
        SearchCommand::Indsat { n, target, max_gray, common } => {
            let h = parse_single(target)?;
            if common.unsafe_override && (*n > INDSAT_ORD_GUARD || *max_gray > INDSAT_GRAY_GUARD) {
                let p = pair_count(*n);
                let mut space = 0f64;
                for g in 0..=*max_gray.min(&p) {
                    space += choose(p, g) * 2f64.powi((p - g) as i32);
                }
                eprintln!("override: projected state space before isomorph rejection ≈ {space:.3e} trigraphs");
            }
            search_indsat(*n, &h, IndsatOptions { gray_max: *max_gray, override_guards: common.unsafe_override })?
        }
        SearchCommand::Sis { n, target, max_edges, prune, common } => {
            let h = parse_single(target)?;
            if common.unsafe_override && *n > SIS_ORD_GUARD {
                eprintln!(
                    "override: projected state space is {:.3e} labeled graphs",
                    2f64.powi(pair_count(*n) as i32)
                );
            }
            search_sis(*n, &h, SisOptions { edge_max: *max_edges, prune: *prune, override_guards: common.unsafe_override })?
        }
    };

    let text = report.render();
    print!("{text}");
    println!("NODES {}", report.nodes_explored);
    if let Some(path) = &common.out {
        std::fs::write(path, &text).map_err(|e| Error::BadParameter(format!("write {}: {e}", path.display())))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn run_tables(cmd: TablesCommand) {
    match cmd {
        TablesCommand::Paw { n_max } => {
            println!("{:>4} {:>10} {:>10}", "n", "formula", "measured");
            for n in 7..=n_max {
                let formula = sis_paw_formula(n);
                let measured = indsat_lab::constructions::minimal_paw(n)
                    .map(|g| g.edge_count().to_string())
                    .unwrap_or_else(|_| "-".into());
                println!("{n:>4} {formula:>10} {measured:>10}");
            }
        }
        TablesCommand::Claw { n_max } => {
            println!("{:>4} {:>8} {:>8} {:>10}", "n", "lower", "upper", "measured");
            for n in 9..=n_max {
                let lower = 2 * n - 2;
                let upper = 2 * n + 2;
                let measured = claw_witness(n)
                    .map(|g| g.edge_count().to_string())
                    .unwrap_or_else(|| "-".into());
                println!("{n:>4} {lower:>8} {upper:>8} {measured:>10}");
            }
        }
    }
}

fn choose(n: usize, k: usize) -> f64 {
    (0..k).map(|i| (n - i) as f64 / (i + 1) as f64).product()
}

fn install_thread_pool(jobs: Option<usize>) -> Result<(), Error> {
    let jobs = jobs.or_else(|| {
        std::env::var("INDSAT_LAB_JOBS")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
    });
    if let Some(jobs) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Error::BadParameter(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn parse_family(spec: &str) -> Result<Vec<Graph>, Error> {
    spec.split(',')
        .map(|s| pattern(&Pattern::parse(s)?))
        .collect()
}

fn parse_single(spec: &str) -> Result<Graph, Error> {
    pattern(&Pattern::parse(spec)?)
}

fn read_graph(path: &Path) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::BadParameter(format!("read {}: {e}", path.display())))?;
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| Error::Graph6("empty file".into()))?;
    decode_graph6(line)
}

fn read_trigraph(path: &Path) -> Result<Trigraph, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::BadParameter(format!("read {}: {e}", path.display())))?;
    decode_trigraph(&text)
}

fn exit_for(verdict: &Verdict) -> ExitCode {
    if verdict.is_saturated() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
