//! `gpforce`: forcing numbers and forcing polynomials of GP(n, k).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gp_forcing::report::{self, Format, PolyReport};
use gp_forcing::{
    enumerate_alternating_cycles, enumerate_perfect_matchings, max_disjoint_alternating_cycles,
    orbits, paper_table, verify_table, Analysis, Engine, Error, Graph, Matching, SymmetryGroup,
};

#[derive(Parser, Debug)]
#[command(
    name = "gpforce",
    version,
    about = "Forcing polynomials of generalized Petersen graphs"
)]
struct Cli {
    #[command(flatten)]
    common: Common,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Order of GP(n, k)
    #[arg(long, global = true)]
    n: Option<usize>,

    #[arg(long, global = true, default_value_t = 2)]
    k: usize,

    #[arg(long, global = true, value_enum, default_value_t = EngineArg::Cycles)]
    engine: EngineArg,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,

    #[arg(long, global = true, value_enum, default_value_t = GroupArg::Rotation)]
    group: GroupArg,

    /// Worker threads; defaults to the available parallelism
    #[arg(long, global = true, env = "FORCE_THREADS")]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the graph (edge list, JSON dump or DOT)
    Graph,
    /// List all perfect matchings
    Matchings,
    /// Forcing number, minimum forcing set and cycle packing of one matching
    Force {
        /// Matching as comma-separated edge names, e.g. u0-u2,u1-u3,u4-v4,v0-v1,v2-v3
        matching: String,
    },
    /// List the alternating cycles of one matching
    Cycles { matching: String },
    /// Maximum set of vertex-disjoint alternating cycles of one matching
    Packing { matching: String },
    /// Forcing polynomial and its statistics
    Poly {
        /// Append the orbit table
        #[arg(long)]
        orbits: bool,
    },
    /// Orbit table (NO, PMC, FN, representative) with the polynomial footer
    Orbits,
    /// Recompute the published tables and diff against them
    VerifyPaper {
        #[arg(long, default_value_t = 5)]
        from: usize,
        #[arg(long, default_value_t = 15)]
        to: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    Cycles,
    Subsets,
    Both,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Cycles => Engine::HittingSet,
            EngineArg::Subsets => Engine::SubsetSearch,
            EngineArg::Both => Engine::Both,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
    Dot,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Dot => Format::Dot,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GroupArg {
    Rotation,
    Dihedral,
}

impl From<GroupArg> for SymmetryGroup {
    fn from(g: GroupArg) -> SymmetryGroup {
        match g {
            GroupArg::Rotation => SymmetryGroup::Rotation,
            GroupArg::Dihedral => SymmetryGroup::Dihedral,
        }
    }
}

enum Failure {
    Mismatch(String),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

struct Config {
    k: usize,
    n: Option<usize>,
    engine: Engine,
    format: Format,
    group: SymmetryGroup,
    threads: Option<usize>,
}

impl Config {
    fn graph(&self) -> Result<Graph, Error> {
        let n = self
            .n
            .ok_or_else(|| Error::Domain("--n is required for this command".into()))?;
        Graph::generalized_petersen(n, self.k)
    }

    fn poly_report(&self, g: &Graph, with_orbits: bool) -> Result<PolyReport, Error> {
        let analysis = Analysis::run(g, self.engine, self.threads)?;
        let polynomial = analysis.polynomial();
        if with_orbits {
            let fns: Vec<usize> = analysis.results.iter().map(|r| r.forcing_number).collect();
            let orbits = orbits(g, &analysis.matchings, &fns, self.group)?;
            PolyReport::new(g, polynomial, Some((self.group, &orbits)))
        } else {
            PolyReport::new(g, polynomial, None)
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let c = cli.common;
    let config = Config {
        k: c.k,
        n: c.n,
        engine: c.engine.into(),
        format: c.format.into(),
        group: c.group.into(),
        threads: c.threads,
    };
    let format = config.format;
    Ok(match cli.command {
        Command::Graph => report::render_graph(&config.graph()?, format)?,
        Command::Matchings => {
            let g = config.graph()?;
            report::render_matchings(&g, &enumerate_perfect_matchings(&g), format)?
        }
        Command::Force { matching } => {
            let g = config.graph()?;
            let m = Matching::parse(&g, &matching)?;
            let record = report::analyze_matching(&g, m, config.engine)?;
            report::render_record(&g, &record, format)?
        }
        Command::Cycles { matching } => {
            let g = config.graph()?;
            let m = Matching::parse(&g, &matching)?;
            report::render_cycles(&g, &enumerate_alternating_cycles(&g, m)?, format)?
        }
        Command::Packing { matching } => {
            let g = config.graph()?;
            let m = Matching::parse(&g, &matching)?;
            report::render_packing(&g, &max_disjoint_alternating_cycles(&g, m)?, format)?
        }
        Command::Poly { orbits } => {
            let g = config.graph()?;
            report::render_poly(&config.poly_report(&g, orbits)?, format)?
        }
        Command::Orbits => {
            let g = config.graph()?;
            report::render_orbit_table(&config.poly_report(&g, true)?, format)?
        }
        Command::VerifyPaper { from, to } => verify_paper(&config, from, to)?,
    })
}

fn verify_paper(config: &Config, from: usize, to: usize) -> Result<String, Failure> {
    let (from, to) = match config.n {
        Some(n) => (n, n),
        None => (from, to),
    };
    if config.k != 2 {
        return Err(Error::Domain("published tables exist only for k = 2".into()).into());
    }
    if from < 5 || to > 15 || from > to {
        return Err(Error::Domain(format!(
            "published tables cover n = 5..=15, got {from}..={to}"
        ))
        .into());
    }
    let mut outcomes = Vec::new();
    for n in from..=to {
        let table = paper_table(n).expect("tables cover 5..=15");
        outcomes.push(verify_table(&table, config.engine, config.threads)?);
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    let total = outcomes.len();
    let text = match config.format {
        Format::Json => report::to_json(&serde_json::json!({
            "passed": passed,
            "total": total,
            "results": outcomes,
        })),
        Format::Table => {
            let mut out: String = outcomes
                .iter()
                .map(|o| format!("{}\n", o.to_string().trim_end()))
                .collect();
            out.push_str(&format!("{passed}/{total} PASS\n"));
            out
        }
        f => return Err(Error::Domain(format!("verify-paper cannot be rendered as {f:?}")).into()),
    };
    if passed == total {
        Ok(text)
    } else {
        Err(Failure::Mismatch(text))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { 3 } else { 2 })
        }
    }
}
