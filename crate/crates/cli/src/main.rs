mod census;
mod error;
mod input;
mod report;
mod ring_dump;
mod tables;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use polyzcl::canonical::build_canonical_ring;
use polyzcl::genetics::genetic_code;
use polyzcl::genus2::build_genus2_ring;
use polyzcl::rational::format_rational;
use polyzcl::ring::GradedRing;
use polyzcl::tensor::bar;
use polyzcl::zcl::{search_zcl, zcl_bounds_in, DEFAULT_SEARCH_BUDGET};
use serde::Serialize;

use crate::error::CliError;
use crate::input::SpaceArgs;

#[derive(Parser, Debug)]
#[command(
    name = "polyzcl",
    version,
    about = "Cohomology, zcl and TC bounds of planar polygon spaces"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the main output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads for enumeration.
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,
    /// Cap on stored partial products in zcl searches.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_SEARCH_BUDGET)]
    budget: usize,
    /// Neither read nor write the enumeration cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Cache directory (default: $POLYZCL_CACHE_DIR, else the user cache dir).
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Genetic code, Betti numbers, zcl and TC bounds of one space.
    Analyze(SpaceArgs),
    /// All genetic codes with n sides, as CSV.
    Enumerate {
        #[arg(long)]
        n: u32,
        /// Also print census counts by s and by zcl lower bound.
        #[arg(long)]
        classify: bool,
    },
    /// A length vector realizing a genetic code.
    Realize {
        #[arg(long)]
        code: String,
        #[arg(long)]
        n: u32,
    },
    /// The canonical cohomology ring as JSON.
    Ring(SpaceArgs),
    /// zcl bounds with their certificate, optionally checked by search.
    Zcl {
        #[command(flatten)]
        space: SpaceArgs,
        /// Search products of barred basis classes of positive degree.
        #[arg(long)]
        search: bool,
        /// Search the genus-2 ring (two 3-tori) instead of a canonical ring.
        #[arg(long, conflicts_with_all = ["lengths", "code", "n"])]
        genus2: bool,
        /// Longest product to try (default: twice the top degree).
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Recompute the published census counts and tables.
    VerifyTables,
}

struct Output {
    file: Option<PathBuf>,
    buf: Vec<u8>,
}

impl Output {
    fn json<T: Serialize>(&mut self, value: &T) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut self.buf, value)?;
        self.buf.push(b'\n');
        Ok(())
    }

    fn json_compact<T: Serialize>(&mut self, value: &T) -> Result<(), CliError> {
        serde_json::to_writer(&mut self.buf, value)?;
        self.buf.push(b'\n');
        Ok(())
    }

    fn text(&mut self, text: &str) {
        self.buf.extend_from_slice(text.as_bytes());
    }

    fn finish(self) -> Result<(), CliError> {
        match self.file {
            Some(path) => fs::write(path, &self.buf)?,
            None => io::stdout().write_all(&self.buf)?,
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct RealizeJson {
    code: String,
    n: u32,
    lengths: Vec<String>,
    round_trip: bool,
}

#[derive(Serialize)]
struct SearchJson {
    length: usize,
    witness: Vec<String>,
}

#[derive(Serialize)]
struct ZclJson {
    code: Option<String>,
    lower: Option<usize>,
    upper: Option<usize>,
    exact: Option<usize>,
    certificate: Option<String>,
    certificate_nonzero: Option<bool>,
    search: Option<SearchJson>,
}

fn run_search(
    ring: &GradedRing,
    max_len: Option<usize>,
    budget: usize,
    genus2: bool,
) -> Result<SearchJson, CliError> {
    let gens: Vec<usize> = (0..ring.len())
        .filter(|&u| {
            if genus2 {
                ring.degree(u) == 1
            } else {
                ring.degree(u) > 0
            }
        })
        .collect();
    let bars: Vec<_> = gens.iter().map(|&u| bar(ring, u)).collect();
    let found = search_zcl(
        ring,
        &bars,
        max_len.unwrap_or(2 * ring.top_degree()),
        budget,
    )?;
    Ok(SearchJson {
        length: found.length,
        witness: found
            .witness
            .iter()
            .map(|&i| format!("bar({})", ring.label(gens[i])))
            .collect(),
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    let threads = cli
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let cache_dir = if cli.no_cache {
        None
    } else {
        cli.cache_dir.clone().or_else(census::default_cache_dir)
    };
    let mut out = Output {
        file: cli.out.clone(),
        buf: Vec::new(),
    };

    match &cli.command {
        Command::Analyze(space) => {
            let report = report::build_report(&space.resolve()?, cli.budget)?;
            if cli.json {
                out.json(&report)?;
            } else {
                out.text(&report.to_text());
            }
        }
        Command::Enumerate { n, classify } => {
            let census = census::load_census(*n, threads, cache_dir.as_deref())?;
            census::write_csv(&census.rows(), &mut out.buf)?;
            if *classify {
                let sum = census.summary();
                let text = if cli.json {
                    serde_json::to_string_pretty(&census::summary_json(*n, &sum))? + "\n"
                } else {
                    census::summary_text(*n, &sum)
                };
                // Keep CSV on stdout clean.
                if out.file.is_some() {
                    io::stdout().write_all(text.as_bytes())?;
                } else {
                    io::stderr().write_all(text.as_bytes())?;
                }
            }
        }
        Command::Realize { code, n } => {
            let code = polyzcl::genetics::GeneticCode::parse(code, *n)?;
            let l = code.realize()?;
            let round_trip = genetic_code(&l).map(|c| c == code).unwrap_or(false);
            if cli.json {
                out.json(&RealizeJson {
                    code: code.to_string(),
                    n: *n,
                    lengths: l.lengths().iter().map(format_rational).collect(),
                    round_trip,
                })?;
            } else {
                out.text(&format!(
                    "<{code}>  {l}\nround trip  {}\n",
                    if round_trip { "ok" } else { "FAILED" }
                ));
            }
            if !round_trip {
                out.finish()?;
                return Err(CliError::Check(format!(
                    "witness {l} does not give <{code}> back"
                )));
            }
        }
        Command::Ring(space) => {
            let space = space.resolve()?;
            let cr = build_canonical_ring(&space.code)?;
            out.json_compact(&ring_dump::dump_ring(&cr.ring))?;
        }
        Command::Zcl {
            space,
            search,
            genus2,
            max_len,
        } => {
            let result = if *genus2 {
                let g = build_genus2_ring();
                let s = run_search(&g, *max_len, cli.budget, true)?;
                ZclJson {
                    code: None,
                    lower: None,
                    upper: None,
                    exact: None,
                    certificate: None,
                    certificate_nonzero: None,
                    search: Some(s),
                }
            } else {
                let space = space.resolve()?;
                let cr = build_canonical_ring(&space.code)?;
                let b = zcl_bounds_in(&cr, &space.code)?;
                let s = if *search {
                    Some(run_search(&cr.ring, *max_len, cli.budget, false)?)
                } else {
                    None
                };
                ZclJson {
                    code: Some(space.code.to_string()),
                    lower: Some(b.lower),
                    upper: Some(b.upper),
                    exact: b.exact,
                    certificate_nonzero: Some(b.verified()),
                    certificate: b.certificate.as_ref().map(|c| c.describe()),
                    search: s,
                }
            };
            if cli.json {
                out.json(&result)?;
            } else {
                let mut text = String::new();
                if let Some(code) = &result.code {
                    text.push_str(&format!("code         <{code}>\n"));
                }
                if let (Some(lo), Some(hi)) = (result.lower, result.upper) {
                    match result.exact {
                        Some(e) => text.push_str(&format!("zcl          {e}\n")),
                        None => text.push_str(&format!("zcl          [{lo}, {hi}]\n")),
                    }
                }
                if let Some(c) = &result.certificate {
                    let ok = if result.certificate_nonzero == Some(true) {
                        "nonzero"
                    } else {
                        "ZERO"
                    };
                    text.push_str(&format!("certificate  {c}  ({ok})\n"));
                }
                if let Some(s) = &result.search {
                    text.push_str(&format!(
                        "search       {}  {}\n",
                        s.length,
                        s.witness.join("·")
                    ));
                }
                out.text(&text);
            }
        }
        Command::VerifyTables => {
            let checks = tables::verify_tables(threads, cache_dir.as_deref(), cli.budget)?;
            if cli.json {
                out.json(&checks)?;
            } else {
                for c in &checks {
                    if c.pass {
                        out.text(&format!("PASS {}: {}\n", c.name, c.got));
                    } else {
                        out.text(&format!(
                            "FAIL {}: got {}, expected {}\n",
                            c.name, c.got, c.expected
                        ));
                    }
                }
            }
            let failed = checks.iter().filter(|c| !c.pass).count();
            out.finish()?;
            if failed > 0 {
                return Err(CliError::Check(format!(
                    "{failed} of {} checks failed",
                    checks.len()
                )));
            }
            return Ok(());
        }
    }
    out.finish()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
