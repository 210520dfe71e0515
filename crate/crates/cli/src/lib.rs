//! Command-line front end for `genusforge`.
//!
//! Exit codes: 0 success, 1 failed expectation or optimality check, 2 usage
//! or input error.

pub mod export;
pub mod report;
pub mod rotfile;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use genusforge::construct::{chord_diagram, ConstructError};
use genusforge::interchange::{Interchange, OptimalityStatus};
use genusforge::search::{exhaustive_search, randomized_search, SearchError, SearchOptions};
use genusforge::{construct, CombinatorialMap};

use report::{census_report, interchange_report, matching_construction, search_report, to_json};
use rotfile::{serialize, RotationFile};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "genusforge", version, about = "Minimum-genus embeddings of K_{n,n} with a Hamiltonian face")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructFormat {
    Rot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    SvgChord,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the genus-L(n) embedding of K_{n,n} with face (0, 1, …, 2n−1).
    Construct {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ConstructFormat::Rot)]
        format: ConstructFormat,
    },
    /// Trace the faces of a rotation file and print a census.
    Verify {
        file: PathBuf,
        /// Require (0, 1, …, v−1) to be a face.
        #[arg(long)]
        expect_ham: bool,
        #[arg(long)]
        expect_genus: Option<usize>,
    },
    /// Search rotation systems of K_{n,n} in which (0, 1, …, 2n−1) is a face.
    Search {
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, env = "GENUSFORGE_JOBS", default_value_t = 1)]
        jobs: usize,
        /// Largest n accepted in exhaustive mode.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Write each representative as a rotation file here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Render a rotation file as DOT or as a chord diagram.
    Export {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: ExportFormat,
    },
    /// Treat a rotation file as an interchange, edit lanes and judge it.
    Interchange {
        file: PathBuf,
        /// Duplicate a white–black edge, e.g. `0,1`. Repeatable.
        #[arg(long, value_parser = parse_pair)]
        add_lane: Vec<(usize, usize)>,
        /// Remove parallel edges until the graph is simple.
        #[arg(long)]
        simplify: bool,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `U,V`, got `{s}`"))?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((p(a)?, p(b)?))
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn fail(&mut self, code: u8, msg: impl std::fmt::Display) -> u8 {
        let _ = writeln!(self.err, "error: {msg}");
        code
    }
}

fn load(path: &Path) -> Result<CombinatorialMap, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    RotationFile::parse(&text).and_then(|f| f.to_map()).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let mut io = Io { out, err };
    match cli.command {
        Command::Construct { n, out, format } => cmd_construct(&mut io, n, out.as_deref(), format),
        Command::Verify { file, expect_ham, expect_genus } => cmd_verify(&mut io, &file, expect_ham, expect_genus),
        Command::Search { n, mode, seed, budget, jobs, max_n, out_dir } => {
            cmd_search(&mut io, n, mode, seed, budget, jobs, max_n, out_dir.as_deref())
        }
        Command::Export { file, format } => cmd_export(&mut io, &file, format),
        Command::Interchange { file, add_lane, simplify } => cmd_interchange(&mut io, &file, &add_lane, simplify),
    }
}

fn cmd_construct(io: &mut Io, n: usize, out: Option<&Path>, format: ConstructFormat) -> u8 {
    let started = Instant::now();
    let result = match construct(n) {
        Ok(r) => r,
        Err(ConstructError::OddN(_)) => {
            return io.fail(
                EXIT_INPUT,
                format!("n = {n} is odd; genus L(n) with a Hamiltonian face is only conjectured for odd n, no construction is known"),
            )
        }
        Err(e) => return io.fail(EXIT_INPUT, e),
    };
    let body = match format {
        ConstructFormat::Rot => serialize(&result.map),
        ConstructFormat::Json => to_json(&census_report(&result.map)),
    };
    let h_present = result.census.contains_cycle(&result.map, result.hamiltonian_face());
    let summary = format!(
        "genus {}, faces {}, H {}",
        result.genus,
        result.census.face_count(),
        if h_present { "present" } else { "missing" }
    );
    let _ = writeln!(io.err, "constructed in {:.3} ms", started.elapsed().as_secs_f64() * 1e3);
    match out {
        Some(path) => {
            if let Err(e) = fs::write(path, body) {
                return io.fail(EXIT_INPUT, format!("{}: {e}", path.display()));
            }
            let _ = writeln!(io.out, "{summary}");
        }
        None => {
            let _ = io.out.write_all(body.as_bytes());
            let _ = writeln!(io.err, "{summary}");
        }
    }
    EXIT_OK
}

fn cmd_verify(io: &mut Io, file: &Path, expect_ham: bool, expect_genus: Option<usize>) -> u8 {
    let map = match load(file) {
        Ok(m) => m,
        Err(e) => return io.fail(EXIT_INPUT, e),
    };
    let started = Instant::now();
    let report = census_report(&map);
    let _ = writeln!(io.err, "traced in {:.3} ms", started.elapsed().as_secs_f64() * 1e3);
    let _ = io.out.write_all(to_json(&report).as_bytes());
    let mut code = EXIT_OK;
    if expect_ham && !report.hamiltonian_face {
        code = io.fail(EXIT_FAILED, "expected (0, 1, …, v−1) to bound a face");
    }
    if let Some(g) = expect_genus {
        if report.genus != g {
            code = io.fail(EXIT_FAILED, format!("expected genus {g}, found {}", report.genus));
        }
    }
    code
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    io: &mut Io,
    n: usize,
    mode: Mode,
    seed: u64,
    budget: u64,
    jobs: usize,
    max_n: usize,
    out_dir: Option<&Path>,
) -> u8 {
    let result = match mode {
        Mode::Exhaustive => exhaustive_search(n, &SearchOptions { jobs: jobs.max(1), max_n }),
        Mode::Random => randomized_search(n, seed, budget, jobs.max(1)),
    };
    let r = match result {
        Ok(r) => r,
        Err(e @ SearchError::BoundViolation { .. }) => return io.fail(EXIT_FAILED, e),
        Err(e) => return io.fail(EXIT_INPUT, e),
    };
    let _ = writeln!(io.err, "searched in {:.3} s", r.elapsed.as_secs_f64());
    let _ = io.out.write_all(to_json(&search_report(&r)).as_bytes());
    if let Some(dir) = out_dir {
        if let Err(e) = fs::create_dir_all(dir) {
            return io.fail(EXIT_INPUT, format!("{}: {e}", dir.display()));
        }
        for (i, rep) in r.representatives.iter().enumerate() {
            let map = CombinatorialMap::from_rotations(&rep.rotations).expect("representatives are valid");
            let path = dir.join(format!("rep_{i:03}.rot"));
            if let Err(e) = fs::write(&path, serialize(&map)) {
                return io.fail(EXIT_INPUT, format!("{}: {e}", path.display()));
            }
        }
    }
    EXIT_OK
}

fn cmd_export(io: &mut Io, file: &Path, format: ExportFormat) -> u8 {
    let map = match load(file) {
        Ok(m) => m,
        Err(e) => return io.fail(EXIT_INPUT, e),
    };
    let text = match format {
        ExportFormat::Dot => export::dot(&map),
        ExportFormat::SvgChord => {
            let Some(c) = matching_construction(&map) else {
                return io.fail(EXIT_INPUT, "svg-chord needs the output of `construct n`");
            };
            match chord_diagram(c.n) {
                Ok(d) => export::svg_chord(&d),
                Err(e) => return io.fail(EXIT_INPUT, e),
            }
        }
    };
    let _ = io.out.write_all(text.as_bytes());
    EXIT_OK
}

fn cmd_interchange(io: &mut Io, file: &Path, lanes: &[(usize, usize)], simplify: bool) -> u8 {
    let map = match load(file) {
        Ok(m) => m,
        Err(e) => return io.fail(EXIT_INPUT, e),
    };
    let mut ic = match Interchange::standard(map) {
        Ok(i) => i,
        Err(e) => return io.fail(EXIT_INPUT, e),
    };
    for &(u, v) in lanes {
        ic = match ic.add_lane(u, v) {
            Ok(i) => i,
            Err(e) => return io.fail(EXIT_INPUT, e),
        };
    }
    if simplify {
        ic = match ic.simplify_to_complete() {
            Ok(i) => i,
            Err(e) => return io.fail(EXIT_FAILED, e),
        };
    }
    let report = interchange_report(&ic, lanes.len(), simplify);
    let _ = io.out.write_all(to_json(&report).as_bytes());
    match ic.optimality_check() {
        Ok(v) if v.status == OptimalityStatus::Suboptimal => {
            io.fail(EXIT_FAILED, format!("{} bridges, the minimum for n = {} is lower", v.bridges, ic.n()))
        }
        _ => EXIT_OK,
    }
}
