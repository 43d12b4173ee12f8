//! `ctsing`: classify cluster-tilted quivers of Dynkin type and compute
//! their Cartan/singularity invariants.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ctsing::{
    classification_json, classification_text, fixtures, max_rank, relation_string,
    report_for, verify_fixture,
};
use ctsing_core::algebra::algebra_from_potential;
use ctsing_core::io::QuiverFile;
use ctsing_core::recognition::classify;
use ctsing_core::Quiver;

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "ctsing",
    about = "Singularity invariants of cluster-tilted algebras of Dynkin type",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Structural classification (type A, the four type-D families, or type E)
    Classify {
        file: PathBuf,
        /// Expand undirected edges into every orientation; all must agree
        #[arg(long)]
        all_orientations: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Full invariant report: polynomial, det, trace, table lookup, agreement
    Invariants {
        file: PathBuf,
        #[arg(long)]
        all_orientations: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Cartan matrix of the bound quiver algebra
    Cartan {
        file: PathBuf,
        /// Also print the defining relations
        #[arg(long)]
        show_relations: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Mutate at a vertex and print the resulting quiver
    Mutate {
        file: PathBuf,
        /// Vertex name to mutate at
        #[arg(long)]
        vertex: String,
    },
    /// Enumerate the mutation class up to isomorphism
    MutationClass {
        file: PathBuf,
        /// Stop (incomplete) after this many members
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        /// Print every member, not just the count
        #[arg(long)]
        members: bool,
    },
    /// Check every built-in fixture against its frozen polynomial
    VerifyTables,
    /// Print a built-in fixture as quiver JSON
    Fixture {
        /// Fixture label (e.g. "E6-1") or named-quiver alias (A_104, A_319, A_15)
        name: Option<String>,
        /// List available fixture labels
        #[arg(long)]
        list: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn input_err(message: impl ToString) -> Failure {
    Failure { code: EXIT_INPUT, message: message.to_string() }
}

fn mismatch(message: impl ToString) -> Failure {
    Failure { code: EXIT_MISMATCH, message: message.to_string() }
}

fn load(path: &PathBuf) -> Result<QuiverFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_err(format!("{}: {e}", path.display())))?;
    QuiverFile::parse(&text).map_err(input_err)
}

/// The quivers a command operates on: one, or every edge orientation.
fn quivers(file: &QuiverFile, all_orientations: bool) -> Result<Vec<Quiver>, Failure> {
    if all_orientations {
        let qs = file.orientations().map_err(input_err)?;
        if qs.is_empty() {
            return Err(input_err("every orientation produces a 2-cycle"));
        }
        Ok(qs)
    } else {
        Ok(vec![file.to_quiver().map_err(input_err)?])
    }
}

/// Map each quiver through `f` and insist every result is identical.
fn unanimous<T: PartialEq>(
    qs: &[Quiver],
    f: impl Fn(&Quiver) -> Result<T, Failure>,
) -> Result<T, Failure> {
    let mut out: Option<T> = None;
    for q in qs {
        let r = f(q)?;
        match &out {
            None => out = Some(r),
            Some(prev) if *prev == r => {}
            Some(_) => {
                return Err(mismatch(
                    "orientations of the undirected edges give different results",
                ))
            }
        }
    }
    Ok(out.expect("at least one quiver"))
}

fn cmd_classify(file: PathBuf, all: bool, format: Format) -> Result<String, Failure> {
    let f = load(&file)?;
    let qs = quivers(&f, all)?;
    let rank = max_rank();
    let value = unanimous(&qs, |q| {
        let c = classify(q, rank).map_err(mismatch)?;
        Ok(match format {
            Format::Text => classification_text(&c),
            Format::Json => classification_json(&c).to_string(),
        })
    })?;
    Ok(value)
}

fn cmd_invariants(file: PathBuf, all: bool, format: Format) -> Result<String, Failure> {
    let f = load(&file)?;
    let qs = quivers(&f, all)?;
    let report = unanimous(&qs, |q| {
        report_for(q).map(|r| r.to_json().to_string()).map_err(mismatch)
    })?;
    match format {
        Format::Json => Ok(report),
        Format::Text => {
            // Re-run on the first orientation for the text block; the
            // unanimity check above already compared the JSON forms.
            let r = report_for(&qs[0]).map_err(mismatch)?;
            Ok(r.to_text().trim_end().to_string())
        }
    }
}

fn cmd_cartan(file: PathBuf, show_relations: bool, format: Format) -> Result<String, Failure> {
    let f = load(&file)?;
    let q = f.to_quiver().map_err(input_err)?;
    let algebra = algebra_from_potential(&q).map_err(mismatch)?;
    let cartan = algebra.cartan_matrix().map_err(mismatch)?;
    match format {
        Format::Json => {
            let rows: Vec<Vec<String>> = cartan
                .rows()
                .iter()
                .map(|row| row.iter().map(|e| e.to_string()).collect())
                .collect();
            let mut value = serde_json::json!({
                "cartan": rows,
                "det": cartan.determinant().to_string(),
            });
            if show_relations {
                value["relations"] = serde_json::Value::Array(
                    algebra
                        .relations()
                        .iter()
                        .map(|r| serde_json::Value::String(relation_string(&algebra, r)))
                        .collect(),
                );
            }
            Ok(value.to_string())
        }
        Format::Text => {
            let mut out = String::new();
            for row in cartan.rows() {
                let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
            out.push_str(&format!("det = {}", cartan.determinant()));
            if show_relations {
                out.push_str("\nrelations:");
                for r in algebra.relations() {
                    out.push_str(&format!("\n  {} = 0", relation_string(&algebra, r)));
                }
            }
            Ok(out)
        }
    }
}

fn cmd_mutate(file: PathBuf, vertex: String) -> Result<String, Failure> {
    let f = load(&file)?;
    let q = f.to_quiver().map_err(input_err)?;
    let k = f
        .vertices
        .iter()
        .position(|v| *v == vertex)
        .ok_or_else(|| input_err(format!("unknown vertex {vertex:?}")))?;
    let mutated = q.mutate(k).map_err(mismatch)?;
    Ok(QuiverFile::from_quiver(&mutated, Some(&f.vertices)).to_json_string())
}

fn cmd_mutation_class(file: PathBuf, cap: usize, members: bool) -> Result<String, Failure> {
    let f = load(&file)?;
    let q = f.to_quiver().map_err(input_err)?;
    let class = q.mutation_class(cap).map_err(mismatch)?;
    let mut out = format!(
        "members: {}{}",
        class.len(),
        if class.complete { "" } else { " (cap reached, incomplete)" }
    );
    if members {
        for c in class.members.iter() {
            let arrows = c.quiver().arrows();
            let pieces: Vec<String> = arrows
                .iter()
                .map(|(s, t)| format!("{s}->{t}"))
                .collect();
            out.push_str(&format!("\n  [{}]", pieces.join(", ")));
        }
    }
    Ok(out)
}

fn cmd_verify_tables() -> Result<String, Failure> {
    let mut out = String::new();
    let mut failures = 0usize;
    for f in fixtures::all() {
        match verify_fixture(f) {
            Ok(k) => out.push_str(&format!(
                "ok       {:7} {} = {} ({} orientation{})\n",
                f.label,
                f.expected_polynomial().factored_string(),
                "verified",
                k,
                if k == 1 { "" } else { "s" }
            )),
            Err(e) => {
                failures += 1;
                out.push_str(&format!("MISMATCH {e}\n"));
            }
        }
    }
    out.push_str(&format!(
        "{} fixtures, {} mismatch(es)",
        fixtures::all().len(),
        failures
    ));
    if failures > 0 {
        Err(mismatch(out))
    } else {
        Ok(out)
    }
}

fn cmd_fixture(name: Option<String>, list: bool) -> Result<String, Failure> {
    if list || name.is_none() {
        let labels: Vec<&str> = fixtures::all().iter().map(|f| f.label).collect();
        return Ok(labels.join("\n"));
    }
    let name = name.unwrap();
    let f = fixtures::by_name(&name)
        .ok_or_else(|| input_err(format!("unknown fixture {name:?}")))?;
    Ok(f.quiver_file().to_json_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_output = matches!(
        cli.command,
        Command::Classify { format: Format::Json, .. }
            | Command::Invariants { format: Format::Json, .. }
            | Command::Cartan { format: Format::Json, .. }
    );
    let result = match cli.command {
        Command::Classify { file, all_orientations, format } => {
            cmd_classify(file, all_orientations, format)
        }
        Command::Invariants { file, all_orientations, format } => {
            cmd_invariants(file, all_orientations, format)
        }
        Command::Cartan { file, show_relations, format } => {
            cmd_cartan(file, show_relations, format)
        }
        Command::Mutate { file, vertex } => cmd_mutate(file, vertex),
        Command::MutationClass { file, cap, members } => {
            cmd_mutation_class(file, cap, members)
        }
        Command::VerifyTables => cmd_verify_tables(),
        Command::Fixture { name, list } => cmd_fixture(name, list),
    };
    match result {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if json_output {
                println!("{}", serde_json::json!({ "error": f.message }));
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
