//! Command-line front end: build, check, search and tabulate labeled spheres.
//!
//! Commands that produce a document write it to `--out` when given and print
//! a short report; otherwise the document goes to stdout and the report to
//! stderr. Exit status is 0 on success, 1 when a document or step fails
//! validation, and 2 on usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spheredeg::constructions::{
    construct, insertion_step, meets_vertex_bound, one_point_suspension, vertex_bound,
    ConstructionCertificate, ConstructionError,
};
use spheredeg::degree::degree;
use spheredeg::io::{parse_document, serialize, serialize_certificate, IoError};
use spheredeg::par::Execution;
use spheredeg::search::{lambda_table, lambda_with, SearchError, TableSpec};
use spheredeg::simplicial::{is_sphere, Vertex};

#[derive(Parser)]
#[command(
    name = "spheredeg",
    version,
    about = "Labeled sphere triangulations of prescribed degree"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a labeled n-sphere of degree d and report its size against the bound
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a document and print its degree report
    Verify { file: PathBuf },
    /// Smallest vertex count admitting degree d, by exhaustive search (n = 1, 2)
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long)]
        max_vertices: usize,
        /// Worker threads; 0 uses every core, 1 runs sequentially
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Where to write the witness document
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate exact values and constructed upper bounds from a JSON spec
    Table {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Where to write the JSON table
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One-point suspension of a document (defaults to its smallest vertex)
    Suspend {
        file: PathBuf,
        #[arg(long)]
        pivot: Option<Vertex>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Insertion step at a positive facet carrying every colour but the top one
    Insert {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        facet: Vec<Vertex>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Invalid(String),
    Usage(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::InvalidDimension(_)
            | ConstructionError::PivotNotFound(_)
            | ConstructionError::FacetNotFound(_) => Failure::Usage(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Orientation(_) | SearchError::Degree(_) | SearchError::Construction(_) => {
                Failure::Invalid(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Writes `document` to `out`, or to stdout with the report on stderr.
fn emit(document: &str, report: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, document)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            print!("{report}");
            println!("wrote {}", path.display());
        }
        None => {
            print!("{document}");
            eprint!("{report}");
        }
    }
    Ok(())
}

fn certificate_report(cert: &ConstructionCertificate) -> String {
    let n = cert.dimension();
    let d = cert.claimed_degree;
    let v = cert.labeled.vertex_count();
    let (num, den) = vertex_bound(n, d);
    format!(
        "dimension: {n}\ndegree: {d}\nvertices: {v}\nbound: {num}/{den} = {:.3}\nmeets bound: {}\n",
        num as f64 / den as f64,
        meets_vertex_bound(v, n, d)
    )
}

fn load_certificate(path: &Path) -> Result<ConstructionCertificate, Failure> {
    Ok(parse_document(&read(path)?)?.to_certificate()?)
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Construct { n, d, out } => {
            let cert = construct(n, d)?;
            cert.verify()
                .map_err(|e| Failure::Invalid(format!("construction failed its own check: {e}")))?;
            emit(
                &serialize_certificate(&cert),
                &certificate_report(&cert),
                out.as_deref(),
            )
        }
        Command::Verify { file } => verify(&file),
        Command::Search {
            n,
            d,
            max_vertices,
            jobs,
            out,
        } => {
            let result = lambda_with(n, d, max_vertices, Execution::from_jobs(jobs))?;
            let report = format!("{result}\n");
            match &result.witness {
                Some(w) => emit(&serialize(w), &report, out.as_deref()),
                None => {
                    print!("{report}");
                    Ok(())
                }
            }
        }
        Command::Table { spec, jobs, out } => {
            let spec: TableSpec = serde_json::from_str(&read(&spec)?)
                .map_err(|e| Failure::Usage(format!("table spec: {e}")))?;
            let table = lambda_table(&spec, Execution::from_jobs(jobs))?;
            let json = serde_json::to_string_pretty(&table).expect("table serializes") + "\n";
            print!("{}", table.to_text());
            match out {
                Some(path) => {
                    fs::write(&path, json)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    println!("wrote {}", path.display());
                }
                None => print!("{json}"),
            }
            Ok(())
        }
        Command::Suspend { file, pivot, out } => {
            let cert = load_certificate(&file)?;
            let pivot = pivot.unwrap_or(cert.labeled.complex().vertices()[0]);
            let next = one_point_suspension(&cert, pivot)?;
            emit(
                &serialize_certificate(&next),
                &certificate_report(&next),
                out.as_deref(),
            )
        }
        Command::Insert { file, facet, out } => {
            let cert = load_certificate(&file)?;
            let next = insertion_step(&cert, &facet)?;
            emit(
                &serialize_certificate(&next),
                &certificate_report(&next),
                out.as_deref(),
            )
        }
    }
}

fn verify(file: &Path) -> Result<(), Failure> {
    let doc = parse_document(&read(file)?)?;
    let sphere = doc.to_sphere()?;
    let verdict = is_sphere(sphere.complex());
    println!("sphere status: {:?}", verdict.status);
    for (name, ok) in &verdict.checks {
        println!("  {name}: {}", if *ok { "ok" } else { "FAILED" });
    }
    let report = degree(&sphere).map_err(|e| Failure::Invalid(e.to_string()))?;
    print!("{report}");
    if let Some(claimed) = doc.claimed_degree()? {
        println!("claimed degree: {claimed} (matches)");
    }
    if doc.metadata.contains_key("recipe") {
        doc.to_certificate()?;
        println!("recipe: replays to this document");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Invalid(msg) => eprintln!("error: {msg}"),
                Failure::Usage(msg) => eprintln!("usage error: {msg}"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
