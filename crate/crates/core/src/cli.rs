//! Command-line front end. Exit status: 0 on success, 1 if a check failed,
//! 2 on usage or input errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{by_name, default_catalog, CatalogEntry};
use crate::error::{Error, Result};
use crate::graph::{diameter, export_dot, is_connected, reduced_graph, universal_vertices, DotLabels};
use crate::perm::parse_cycles;
use crate::solubilizer::{solubilizer, PairCache, SolubilizerAtlas};
use crate::structure::soluble_radical;
use crate::verify::{verify_catalog, Status};

#[derive(Parser, Debug)]
#[command(name = "solgraph", version, about = "Solubilizers and solubility graphs of permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the default catalog with group orders.
    Catalog {
        /// Include the larger entries.
        #[arg(long)]
        extended: bool,
    },
    /// Solubilizer of one element.
    Sol {
        #[arg(long)]
        group: String,
        /// Element in cycle notation, e.g. "(1 2 3)".
        #[arg(long)]
        element: String,
        #[arg(long)]
        json: bool,
        /// Also list the members.
        #[arg(long)]
        members: bool,
    },
    /// Solubility graph summary and DOT export.
    Graph {
        #[arg(long)]
        group: String,
        /// Universal vertices, and connectivity and diameter of the reduced graph.
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Labels::Cycles)]
        labels: Labels,
    },
    /// Run verification checks on one group or the whole catalog.
    Verify {
        /// Catalog name, or "all" for the default catalog.
        #[arg(long)]
        group: String,
        /// Comma-separated check ids; all checks when omitted.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        /// Write the full report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// With "all", include the larger entries.
        #[arg(long)]
        extended: bool,
    },
    /// Soluble radical and its certificate.
    Radical {
        #[arg(long)]
        group: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Labels {
    Cycles,
    Indices,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Catalog { extended } => catalog(extended, out),
        Command::Sol { group, element, json, members } => sol(&group, &element, json, members, out),
        Command::Graph { group, stats, dot, labels } => graph(&group, stats, dot, labels, out),
        Command::Verify { group, suite, json, extended } => verify(&group, &suite, json, extended, out),
        Command::Radical { group } => radical(&group, out),
    }
}

fn catalog(extended: bool, out: &mut dyn Write) -> Result<i32> {
    writeln!(out, "{:<10} {:>6} {:>6}  {:<9} notes", "name", "order", "degree", "soluble")?;
    for e in default_catalog(extended) {
        let soluble = e.is_soluble_expected.map_or("?", |s| if s { "yes" } else { "no" });
        writeln!(out, "{:<10} {:>6} {:>6}  {:<9} {}", e.name, e.group.order(), e.group.degree(), soluble, e.notes)?;
    }
    Ok(0)
}

#[derive(Serialize)]
struct SolReport {
    group: String,
    element: String,
    cardinality: usize,
    is_subgroup: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    nilpotency_class: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    members: Option<Vec<String>>,
}

fn sol(group: &str, element: &str, json: bool, members: bool, out: &mut dyn Write) -> Result<i32> {
    let entry = by_name(group)?;
    let x = parse_cycles(element, entry.group.degree())?;
    let result = solubilizer(&entry.group, &x, &PairCache::new())?;
    let report = SolReport {
        group: entry.name,
        element: result.x.to_string(),
        cardinality: result.cardinality,
        is_subgroup: result.is_subgroup,
        nilpotency_class: result.nilpotency_class_if_subgroup,
        members: members.then(|| result.members.iter().map(ToString::to_string).collect()),
    };
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report).map_err(|e| Error::Io(e.to_string()))?)?;
        return Ok(0);
    }
    writeln!(out, "group        {}", report.group)?;
    writeln!(out, "element      {}", report.element)?;
    writeln!(out, "cardinality  {}", report.cardinality)?;
    writeln!(out, "is_subgroup  {}", report.is_subgroup)?;
    if let Some(c) = report.nilpotency_class {
        writeln!(out, "nilpotency   {c}")?;
    }
    if let Some(list) = &report.members {
        for m in list {
            writeln!(out, "  {m}")?;
        }
    }
    Ok(0)
}

fn graph(group: &str, stats: bool, dot: Option<PathBuf>, labels: Labels, out: &mut dyn Write) -> Result<i32> {
    let entry = by_name(group)?;
    let atlas = SolubilizerAtlas::compute(&entry.group, &PairCache::new())?;
    let g = crate::graph::SolubilityGraph::from_atlas(&atlas);
    writeln!(out, "vertices  {}", g.vertex_count())?;
    writeln!(out, "edges     {}", g.edge_count())?;
    writeln!(out, "complete  {}", g.is_complete())?;
    if stats {
        let universal = universal_vertices(&g);
        writeln!(out, "universal {}", universal.len())?;
        let reduced = reduced_graph(&g, &universal)?;
        if reduced.is_empty() {
            writeln!(out, "reduced   empty (soluble group)")?;
        } else {
            writeln!(out, "reduced   {}", reduced.vertex_count())?;
            let connected = is_connected(&reduced)?;
            writeln!(out, "connected {connected}")?;
            if connected {
                writeln!(out, "diameter  {}", diameter(&reduced)?)?;
            }
        }
    }
    if let Some(path) = dot {
        let labels = match labels {
            Labels::Cycles => DotLabels::Cycles,
            Labels::Indices => DotLabels::Indices,
        };
        let mut file = BufWriter::new(File::create(&path)?);
        export_dot(&g, labels, &mut file)?;
        file.flush()?;
        writeln!(out, "wrote {}", path.display())?;
    }
    Ok(0)
}

fn verify(group: &str, suite: &[String], json: Option<PathBuf>, extended: bool, out: &mut dyn Write) -> Result<i32> {
    let entries: Vec<CatalogEntry> = if group == "all" { default_catalog(extended) } else { vec![by_name(group)?] };
    let ids: Vec<&str> = suite.iter().map(String::as_str).filter(|s| !s.is_empty()).collect();
    let report = verify_catalog(&entries, &ids)?;
    for r in &report.results {
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        let evidence: Vec<String> = r
            .evidence
            .iter()
            .map(|(k, v)| match v {
                crate::verify::Evidence::Bool(b) => format!("{k}={b}"),
                crate::verify::Evidence::Int(n) => format!("{k}={n}"),
            })
            .collect();
        write!(out, "{status} {:<10} {:<30} {}", r.group_name, r.check_id, evidence.join(" "))?;
        if let Some(x) = &r.element {
            write!(out, " x={x}")?;
        }
        if let Some(note) = &r.note {
            write!(out, " ({note})")?;
        }
        writeln!(out)?;
    }
    writeln!(
        out,
        "{} passed, {} failed, {} skipped",
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::Skipped)
    )?;
    if let Some(path) = json {
        std::fs::write(&path, report.to_json()?)?;
    }
    Ok(report.exit_code())
}

fn radical(group: &str, out: &mut dyn Write) -> Result<i32> {
    let entry = by_name(group)?;
    let r = soluble_radical(&entry.group)?;
    writeln!(out, "order                    {}", r.radical.len())?;
    writeln!(out, "normal                   {}", r.verified_normal)?;
    writeln!(out, "soluble                  {}", r.verified_soluble)?;
    writeln!(out, "quotient_radical_trivial {}", r.quotient_radical_trivial)?;
    for m in &r.radical {
        writeln!(out, "  {m}")?;
    }
    Ok(0)
}
