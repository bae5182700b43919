// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use turan_reg::constructions::validate;
use turan_reg::enumeration::{enumerate_in_order, GenFilter, GenOptions};
use turan_reg::probe::{pentagon_with_pendant, probe_conjecture, Probe};
use turan_reg::search::{self, SearchOptions};
use turan_reg::{edgelist, graph6};

use turan_reg_cli::build::{construct, Params, NAMES};
use turan_reg_cli::manifest::{parse_manifest, BUILTIN};
use turan_reg_cli::suite::run_suite;
use turan_reg_cli::table::{compute_table, Format};
use turan_reg_cli::{parse, CliError};

#[derive(Parser)]
#[command(name = "turan-reg", version, about = "Regular Turán numbers, clique maxima and extremal constructions")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0x7572_616e)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    G6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct SearchFlags {
    /// Witnesses kept per result.
    #[arg(long, default_value_t = 16)]
    witness_cap: usize,
    /// Allow orders above the default cap.
    #[arg(long)]
    allow_large: bool,
}

impl SearchFlags {
    fn options(&self, all_witnesses: bool) -> SearchOptions {
        SearchOptions {
            witness_cap: self.witness_cap,
            all_witnesses,
            gen: GenOptions {
                allow_large: self.allow_large,
            },
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction.
    Construct {
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        x: Option<usize>,
        #[arg(long)]
        y: Option<usize>,
        /// Star sizes, comma separated.
        #[arg(long, value_delimiter = ',')]
        parts: Vec<usize>,
        #[arg(long, value_enum, default_value = "g6")]
        out: GraphFormat,
        /// Run the validator and fail if any check fails.
        #[arg(long)]
        certify: bool,
        /// Write recipe, certificate and validation report as JSON.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Stream one graph6 line per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        edges: Option<usize>,
        #[arg(long)]
        regular_k: Option<usize>,
        #[arg(long)]
        connected: bool,
        /// Forbidden subgraph, by name or graph6; repeatable.
        #[arg(long)]
        forbid: Vec<String>,
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest k with a k-regular H-free graph on n vertices.
    Exr {
        #[arg(long)]
        n: usize,
        /// K3, C<odd>, C3..C<odd>, a pattern name or graph6.
        #[arg(long, default_value = "K3")]
        h: String,
        /// Enumerate every class at the extremal degree.
        #[arg(long)]
        all_witnesses: bool,
        /// Report the closed form instead of searching.
        #[arg(long)]
        closed_form: bool,
        #[command(flatten)]
        flags: SearchFlags,
    },
    /// Minimum triangle count over k-regular graphs on n vertices.
    CensusTriangles {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        flags: SearchFlags,
    },
    /// Maximum clique count given order, size and maximum degree.
    MaxCliques {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        /// Clique order; omit together with --total.
        #[arg(long, required_unless_present = "total")]
        t: Option<usize>,
        /// Maximize the number of cliques on at least three vertices.
        #[arg(long, conflicts_with = "t")]
        total: bool,
        #[command(flatten)]
        flags: SearchFlags,
    },
    /// Maximum number of copies of a pattern under a maximum degree.
    MaxCopies {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        flags: SearchFlags,
    },
    /// Compare a conjectured value or structure with exhaustive search.
    Probe {
        #[arg(value_enum)]
        name: ProbeName,
        /// First order (first degree for cycle-question).
        #[arg(long)]
        from: usize,
        /// Last order (last degree for cycle-question).
        #[arg(long)]
        to: usize,
        #[arg(long, default_value_t = 4)]
        r: usize,
        /// Pattern for odd-girth-question; default a pentagon with a pendant edge.
        #[arg(long)]
        h: Option<String>,
        /// Cycle length for cycle-question.
        #[arg(long, default_value_t = 5)]
        len: usize,
        /// Largest order for cycle-question.
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        #[command(flatten)]
        flags: SearchFlags,
    },
    /// Run a verification suite.
    Suite {
        id: String,
        /// Manifest file instead of the built-in one.
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Maximum triangle counts in the critical regime.
    Table {
        #[arg(long, default_value_t = 4)]
        r: usize,
        #[arg(long, default_value_t = 6)]
        from: usize,
        #[arg(long, default_value_t = 8)]
        to: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProbeName {
    GlsCritical,
    Conj55,
    OddGirthQuestion,
    CycleQuestion,
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn print_json<T: serde::Serialize>(v: &T) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Parse(format!("--jobs: {e}")))?;
    }
    match cli.command {
        Command::Construct {
            name,
            n,
            k,
            ell,
            r,
            x,
            y,
            parts,
            out,
            certify,
            certificate,
        } => {
            if !NAMES.contains(&name.as_str()) {
                return Err(CliError::Parse(format!("unknown construction {name:?}; known: {}", NAMES.join(", "))));
            }
            let params = Params { n, k, ell, r, x, y, parts };
            let c = construct(&name, &params)?;
            let report = (certify || certificate.is_some()).then(|| validate(&c));
            let mut w = output(None)?;
            match out {
                GraphFormat::G6 => writeln!(w, "{}", graph6::encode(&c.graph))?,
                GraphFormat::Edges => write!(w, "{}", edgelist::write(&c.graph))?,
            }
            w.flush()?;
            if let Some(path) = certificate {
                let doc = serde_json::json!({
                    "graph6": graph6::encode(&c.graph),
                    "recipe": c.recipe,
                    "certificate": c.certificate,
                    "validation": report,
                });
                let mut f = BufWriter::new(File::create(path)?);
                serde_json::to_writer_pretty(&mut f, &doc).map_err(io::Error::from)?;
                writeln!(f)?;
            }
            if certify {
                let report = report.expect("validated above");
                for f in report.failures() {
                    eprintln!("FAIL {}: {}", f.property, f.detail);
                }
                if !report.passed() {
                    return Ok(ExitCode::FAILURE);
                }
                eprintln!("certified: {} checks passed", report.checks.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            n,
            max_degree,
            edges,
            regular_k,
            connected,
            forbid,
            allow_large,
            out,
        } => {
            let mut filter = GenFilter::order(n);
            if connected {
                filter = filter.with_connected();
            }
            if let Some(d) = max_degree {
                filter = filter.with_max_degree(d);
            }
            if let Some(m) = edges {
                filter = filter.with_edges(m);
            }
            if let Some(k) = regular_k {
                filter = filter.with_regular(k);
            }
            for f in &forbid {
                filter = filter.forbidding(parse::pattern(f)?);
            }
            let mut w = output(out.as_ref())?;
            let mut failure = None;
            let stats = enumerate_in_order(&filter, GenOptions { allow_large }, |g| {
                match writeln!(w, "{}", graph6::encode(g)) {
                    Ok(()) => ControlFlow::Continue(()),
                    Err(e) => {
                        failure = Some(e);
                        ControlFlow::Break(())
                    }
                }
            })?;
            if let Some(e) = failure {
                return Err(e.into());
            }
            w.flush()?;
            eprintln!(
                "{} classes, {} nodes, {:.2}s{}",
                stats.classes,
                stats.nodes,
                stats.wall_time,
                stats.infeasible.map(|s| format!(" (infeasible: {s})")).unwrap_or_default()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Exr {
            n,
            h,
            all_witnesses,
            closed_form,
            flags,
        } => {
            let spec = parse::forbidden(&h)?;
            if closed_form {
                let search::HSpec::Family(fam) = spec else {
                    return Err(CliError::Parse(format!("no closed form for {h:?}")));
                };
                let c = turan_reg::formulas::exr_closed_form(n, fam)?;
                print_json(&serde_json::json!({ "n": n, "h": fam.name(), "value": c.value, "exact": c.exact }))?;
            } else {
                print_json(&search::exr_exact(n, &spec, &flags.options(all_witnesses))?)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CensusTriangles { n, k, flags } => {
            print_json(&search::min_triangles_regular(n, k, &flags.options(false))?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::MaxCliques { n, m, r, t, total, flags } => {
            let opts = flags.options(false);
            let result = match (t, total) {
                (_, true) => search::max_k_total(n, m, r, &opts)?,
                (Some(t), false) => search::max_kt(n, m, r, t, &opts)?,
                (None, false) => unreachable!("clap requires --t or --total"),
            };
            print_json(&result)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::MaxCopies { n, pattern, r, flags } => {
            let p = parse::pattern(&pattern)?;
            print_json(&search::max_copies_free(n, &p, r, &flags.options(false))?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Probe {
            name,
            from,
            to,
            r,
            h,
            len,
            n_max,
            flags,
        } => {
            let probe = match name {
                ProbeName::GlsCritical => Probe::GlsCritical { r, n: from..=to },
                ProbeName::Conj55 => Probe::Conj55 { n: from..=to },
                ProbeName::OddGirthQuestion => Probe::OddGirthQuestion {
                    h: match h {
                        Some(h) => parse::pattern(&h)?,
                        None => pentagon_with_pendant(),
                    },
                    n: from..=to,
                },
                ProbeName::CycleQuestion => Probe::CycleQuestion { len, r: from..=to, n_max },
            };
            let report = probe_conjecture(&probe, &flags.options(false))?;
            for row in &report.rows {
                let mark = match row.consistent {
                    Some(true) => "consistent",
                    Some(false) => "DISCREPANCY",
                    None => "data",
                };
                eprintln!("{mark:>11} {}: predicted {}, observed {}", row.instance, row.predicted, row.observed);
            }
            print_json(&report)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Suite { id, manifest, report } => {
            let manifest = match manifest {
                Some(p) => parse_manifest(&std::fs::read_to_string(p)?)?,
                None => parse_manifest(BUILTIN)?,
            };
            let result = run_suite(&manifest, &id, cli.seed)?;
            for c in &result.checks {
                eprintln!("{}", c.log_line());
            }
            eprintln!(
                "suite {}: {}/{} checks passed (seed {})",
                result.suite,
                result.checks.iter().filter(|c| c.passed).count(),
                result.checks.len(),
                result.seed
            );
            match report {
                Some(path) => {
                    let mut f = BufWriter::new(File::create(path)?);
                    serde_json::to_writer_pretty(&mut f, &result).map_err(io::Error::from)?;
                    writeln!(f)?;
                }
                None => print_json(&result)?,
            }
            Ok(if result.passed { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Table { r, from, to, format, out } => {
            let table = compute_table(r, from..=to)?;
            if !table.has_reference {
                eprintln!("note: no paper reference for r={r}, n={from}..={to}");
            }
            let format = match format {
                TableFormat::Csv => Format::Csv,
                TableFormat::Json => Format::Json,
            };
            let mut w = output(out.as_ref())?;
            write!(w, "{}", table.render(format))?;
            if matches!(format, Format::Json) {
                writeln!(w)?;
            }
            w.flush()?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
