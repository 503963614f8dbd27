use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use index2_core::doubling::catalogue;
use index2_core::enumerator::{analyze_family, enumerate_all, family_id, parse_family_id, scan, Family, FamilyRecord};
use index2_core::export::{read_json_table, render_table, verify_family, FaceMode, MeshDocument, TableFormat, TableRow};
use index2_core::solids::Alignment;
use index2_core::FieldElement;

const FAMILY_HELP: &str = "Family ids are <configuration>-<shape>: tetA and tetO (aligned and opposed \
tetrahedra), oct, cube<d>, dod<d> or ico<d> with d the edge length, followed by the face shape letters, \
e.g. tetO-rr, oct-rl, dod4-rr, ico1-hrsr, ico2-srsl.";

#[derive(Parser)]
#[command(name = "index2", version, about = "Regular polyhedra of index 2 with two vertex orbits", after_help = FAMILY_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the table of all 22 families.
    Enumerate {
        #[arg(long, default_value = "markdown", value_parser = parse_format)]
        format: TableFormat,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also list the orbit-swapped orientation [b,a] of each family.
        #[arg(long)]
        both_orientations: bool,
    },
    /// Write a mesh of one family member at a concrete ratio λ.
    Build {
        family: String,
        /// Exact (`1/2+1/2√5`, `tau`, `3/2`) or decimal ratio.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "fan", value_parser = parse_mode)]
        mode: FaceMode,
    },
    /// Run the invariant suite for one family or `all`.
    Verify {
        #[arg(default_value = "all")]
        family: String,
        /// Re-check every row of a JSON table written by `enumerate`.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Print full JSON reports.
        #[arg(long)]
        json: bool,
    },
    /// List every scanned configuration and shape that was rejected.
    RejectScan {
        #[arg(long)]
        json: bool,
    },
    /// List the 18 regular polyhedra of index 1 used as generators.
    Catalogue,
}

fn parse_format(s: &str) -> Result<TableFormat, String> {
    s.parse().map_err(|e: index2_core::Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<FaceMode, String> {
    s.parse().map_err(|e: index2_core::Error| e.to_string())
}

/// Failures mapped onto exit codes.
enum Failure {
    Usage(anyhow::Error),
    Verification(String),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(anyhow!("{msg}"))
}

fn records_with_orientations(families: &[Family]) -> Result<Vec<FamilyRecord>, Failure> {
    let mut out = Vec::new();
    for f in families {
        out.push(f.record.clone());
        let swapped = f.record.face_shape.swapped();
        if swapped != f.record.face_shape {
            let id = family_id(f.polyhedron.config(), swapped);
            out.push(analyze_family(&id).map_err(anyhow::Error::from)?.record);
        }
    }
    Ok(out)
}

fn enumerate(format: TableFormat, out: Option<PathBuf>, both: bool) -> Result<(), Failure> {
    let e = enumerate_all().map_err(|e| Failure::Verification(e.to_string()))?;
    let records = if both { records_with_orientations(&e.families)? } else { e.records() };
    let text = render_table(&records, format).map_err(anyhow::Error::from)?;
    match out {
        Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn build(id: &str, lambda: &str, out: PathBuf, mode: FaceMode) -> Result<(), Failure> {
    let (config, _) = parse_family_id(id).map_err(usage)?;
    let lambda: FieldElement = lambda.parse().map_err(usage)?;
    if !lambda.is_positive() {
        return Err(usage(format!("λ must be positive, got {lambda}")));
    }
    if lambda.is_one() {
        match config.alignment {
            Alignment::Aligned => {
                return Err(usage("λ = 1 makes the two vertex orbits coincide for an aligned configuration"))
            }
            Alignment::Opposed => eprintln!(
                "warning: at λ = 1 the opposed tetrahedra form a cube and the member has more symmetry than its family"
            ),
        }
    }
    let family = analyze_family(id).map_err(usage)?;
    let doc = MeshDocument::new(id, &family.polyhedron, &lambda);
    fs::write(&out, doc.to_obj(mode)).with_context(|| format!("writing {}", out.display()))?;
    println!(
        "{id} at λ = {lambda}: {} vertices, {} faces ({} planar) written to {}",
        doc.vertex_count(),
        doc.face_count(),
        doc.planar_faces(),
        out.display()
    );
    Ok(())
}

fn verify_table(path: &PathBuf) -> Result<(), Failure> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let rows = read_json_table(&text).map_err(usage)?;
    let mut bad = Vec::new();
    for row in &rows {
        let fresh = analyze_family(&row.family).map(|f| TableRow::from(&f.record));
        match fresh {
            Ok(fresh) if fresh == *row => println!("PASS {} {}", row.family, row.schlafli_type),
            Ok(fresh) => {
                println!("FAIL {}: recomputed {fresh:?}", row.family);
                bad.push(row.family.clone());
            }
            Err(e) => {
                println!("FAIL {}: {e}", row.family);
                bad.push(row.family.clone());
            }
        }
    }
    println!("{}/{} rows reproduced", rows.len() - bad.len(), rows.len());
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("rows not reproduced: {}", bad.join(", "))))
    }
}

fn verify(id: &str, table: Option<PathBuf>, json: bool) -> Result<(), Failure> {
    if let Some(path) = table {
        return verify_table(&path);
    }
    let families = if id == "all" {
        enumerate_all().map_err(|e| Failure::Verification(e.to_string()))?.families
    } else {
        vec![analyze_family(id).map_err(usage)?]
    };
    let reports: Vec<_> = families.iter().map(verify_family).collect();
    if json {
        println!("{}", serde_json::to_string_pretty(&reports).map_err(anyhow::Error::from)?);
    } else {
        for r in &reports {
            let status = if r.passed { "PASS" } else { "FAIL" };
            println!("{status} {} {}", r.family, r.schlafli_type);
            for c in r.checks.iter().filter(|c| !c.passed) {
                println!("  {} failed: {}", c.name, c.detail);
            }
        }
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    if !json {
        println!("{passed}/{} families pass", reports.len());
    }
    if passed == reports.len() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{} families failed", reports.len() - passed)))
    }
}

fn reject_scan(json: bool) -> Result<(), Failure> {
    let e = scan().map_err(anyhow::Error::from)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&e.rejections).map_err(anyhow::Error::from)?);
        return Ok(());
    }
    for r in &e.rejections {
        let shape = r.shape.map(|s| s.to_string()).unwrap_or_else(|| "-".into());
        println!("{:<6} {:<8} {:<16} {}", r.configuration, shape, r.reason, r.detail);
    }
    Ok(())
}

fn list_catalogue() {
    for q in catalogue() {
        let (f0, f1, f2) = q.complex().face_vector();
        println!(
            "{:<46} {:<10} ({f0},{f1},{f2})  {} d={}",
            q.name(),
            q.schlafli().type_symbol(),
            q.solid(),
            q.edge_length()
        );
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate { format, out, both_orientations } => enumerate(format, out, both_orientations),
        Command::Build { family, lambda, out, mode } => build(&family, &lambda, out, mode),
        Command::Verify { family, table, json } => verify(&family, table, json),
        Command::RejectScan { json } => reject_scan(json),
        Command::Catalogue => {
            list_catalogue();
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
