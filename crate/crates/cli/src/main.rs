//! `powerspec`: build groups and their power graphs, compute exact spectra,
//! export matrices and partitions, and run the closed-form verification
//! sweeps.

mod args;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use powerspec::graph::{matrix_csv_with_labels, to_dot};
use powerspec::linalg::char_poly_with_limit;
use powerspec::partition::proper_cyclic_divisor_partition;
use powerspec::theorem::verify_with_limit;
use powerspec::{
    coarsest_equitable_partition, distance_matrix, family_partition, make_group, verify_sweep, FiniteGroup, Graph,
    GraphKind, GroupFamilySpec, IntMatrix, MatrixKind, Partition, SweepFilter, TheoremCase, VerificationReport,
};

use args::{Cli, Command, ExportWhat, Format, GroupArgs, Range, VerifyArgs};

const MAX_BITS_VAR: &str = "POWERSPEC_MAX_BITS";

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn max_bits() -> Result<Option<u64>, Failure> {
    match std::env::var(MAX_BITS_VAR) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| usage(format!("{MAX_BITS_VAR} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn emit(output: Option<&std::path::Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn pretty(v: &impl serde::Serialize) -> Result<String, Failure> {
    Ok(with_newline(serde_json::to_string_pretty(v)?))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let limit = max_bits()?;
    let output = cli.output.as_deref();
    match cli.command {
        Command::Group { group, format } => {
            let spec = group.spec()?;
            let g = make_group(&spec)?;
            let text = match format.unwrap_or(Format::Json) {
                Format::Json => pretty(&g.to_json())?,
                Format::Text => group_text(&spec, &g),
                other => return Err(usage(format!("group output supports json and text, not {other}"))),
            };
            emit(output, &text)?;
        }
        Command::Graph { group, graph, format } => {
            let (g, graph_obj) = build(&group, graph)?;
            let labels = vertex_labels(&g, graph);
            let text = match format.unwrap_or(Format::Json) {
                Format::Json => pretty(&graph_obj.to_json())?,
                Format::Dot => to_dot(&graph_obj, &labels),
                Format::Csv => matrix_csv_with_labels(&graph_obj.adjacency_matrix(), &labels),
                other => return Err(usage(format!("graph output supports json, dot and csv, not {other}"))),
            };
            emit(output, &text)?;
        }
        Command::Spectrum { group, graph, matrix, format } => {
            let spec = group.spec()?;
            let (_, graph_obj) = build(&group, graph)?;
            let m = graph_matrix(&graph_obj, matrix)?;
            let poly = char_poly_with_limit(&m, limit)?;
            let text = match format.unwrap_or(Format::Json) {
                Format::Json => pretty(&poly)?,
                Format::Text => {
                    let closed = TheoremCase::matching(&spec, graph, matrix).and_then(|c| c.closed_form().ok());
                    match closed {
                        Some(cf) if cf.expand() == poly => format!("{cf}\n"),
                        Some(_) => {
                            eprintln!("warning: closed form disagrees with the computed polynomial");
                            format!("{poly}\n")
                        }
                        None => format!("{poly}\n"),
                    }
                }
                other => return Err(usage(format!("spectrum output supports json and text, not {other}"))),
            };
            emit(output, &text)?;
        }
        Command::Verify(args) => return verify_command(&args, limit, output),
        Command::Export { group, graph, what, partition, format } => {
            let (g, graph_obj) = build(&group, graph)?;
            let labels = vertex_labels(&g, graph);
            let text = match what {
                ExportWhat::Adjacency | ExportWhat::Distance => {
                    let kind = if what == ExportWhat::Adjacency { MatrixKind::Adjacency } else { MatrixKind::Distance };
                    let m = graph_matrix(&graph_obj, kind)?;
                    matrix_text(&m, format, Some(&labels))?
                }
                ExportWhat::Partition => {
                    pretty(&choose_partition(&g, &graph_obj, graph, partition.as_deref())?)?
                }
                ExportWhat::Quotient | ExportWhat::DistanceQuotient => {
                    let part = choose_partition(&g, &graph_obj, graph, partition.as_deref())?;
                    let q = if what == ExportWhat::Quotient {
                        powerspec::quotient_matrix(&graph_obj, &part)?
                    } else {
                        powerspec::distance_quotient_matrix(&graph_obj, &part)?
                    };
                    matrix_text(&q, format, None)?
                }
            };
            emit(output, &text)?;
        }
    }
    Ok(0)
}

fn group_text(spec: &GroupFamilySpec, g: &FiniteGroup) -> String {
    let census = g.order_census();
    let orders: Vec<String> = census
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(k, c)| format!("{c} of order {k}"))
        .collect();
    format!("group {spec}\norder {}\nelements: {}\n", g.order(), orders.join(", "))
}

fn build(group: &GroupArgs, kind: GraphKind) -> Result<(FiniteGroup, Graph), Failure> {
    let g = make_group(&group.spec()?)?;
    if kind == GraphKind::ProperPower && g.order() < 2 {
        return Err(usage("the proper power graph of the trivial group has no vertices"));
    }
    let graph = kind.build(&g);
    Ok((g, graph))
}

fn vertex_labels(g: &FiniteGroup, kind: GraphKind) -> Vec<String> {
    let labels = g.labels();
    if kind == GraphKind::ProperPower {
        labels[1..].to_vec()
    } else {
        labels
    }
}

fn graph_matrix(g: &Graph, kind: MatrixKind) -> Result<IntMatrix, Failure> {
    Ok(match kind {
        MatrixKind::Adjacency => g.adjacency_matrix(),
        MatrixKind::Distance => distance_matrix(g)?,
    })
}

fn matrix_text(m: &IntMatrix, format: Option<Format>, labels: Option<&[String]>) -> Result<String, Failure> {
    match (format.unwrap_or(Format::Csv), labels) {
        (Format::Csv, Some(labels)) => Ok(matrix_csv_with_labels(m, labels)),
        (Format::Csv, None) => Ok(m.to_csv()),
        (Format::Json, _) => pretty(m),
        (other, _) => Err(usage(format!("matrix export supports csv and json, not {other}"))),
    }
}

/// `coarsest`, a family partition name, or (default) the family partition
/// that fits the group and graph.
fn choose_partition(g: &FiniteGroup, graph: &Graph, kind: GraphKind, name: Option<&str>) -> Result<Partition, Failure> {
    use powerspec::FamilyPartition as F;
    match name {
        Some("coarsest") => return Ok(coarsest_equitable_partition(graph)),
        Some(n) => return Ok(family_partition(g, n.parse::<F>()?)?),
        None => {}
    }
    if kind == GraphKind::ProperPower {
        if let Some(GroupFamilySpec::Cyclic { n }) = g.family() {
            return Ok(proper_cyclic_divisor_partition(*n)?);
        }
    }
    let preferred: &[F] = match (g.family(), kind) {
        (Some(GroupFamilySpec::Dihedral { .. }), GraphKind::Power) => &[F::DihedralPower],
        (Some(GroupFamilySpec::DirectProduct { .. }), _) => &[F::ElabProductCoarse, F::ElabTimesCyclic],
        _ => &F::ALL,
    };
    for &which in preferred {
        if let Ok(p) = family_partition(g, which) {
            if powerspec::is_equitable(graph, &p)? {
                return Ok(p);
            }
        }
    }
    Ok(coarsest_equitable_partition(graph))
}

fn verify_command(args: &VerifyArgs, limit: Option<u64>, output: Option<&std::path::Path>) -> Result<u8, Failure> {
    if let Some(m) = args.max_order {
        if m < 6 {
            return Err(usage(format!("--max-order must be at least 6, got {m}")));
        }
    }
    let pool = match args.jobs {
        Some(0) => return Err(usage("--jobs must be at least 1")),
        Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j).build()?,
        None => rayon::ThreadPoolBuilder::new().build()?,
    };
    let reports: Vec<VerificationReport> = if args.all {
        let filter = SweepFilter { max_order: args.max_order.unwrap_or(64), theorems: Vec::new(), max_bits: limit };
        pool.install(|| verify_sweep(&filter))
    } else {
        let id = args.theorem.as_deref().ok_or_else(|| usage("verify needs --theorem ID or --all"))?;
        let cases = theorem_cases(id.parse()?, args)?;
        pool.install(|| {
            use rayon::prelude::*;
            cases.par_iter().map(|c| verify_with_limit(c, limit)).collect()
        })
    };
    let mut text = String::new();
    match args.format.unwrap_or(Format::Jsonl) {
        Format::Jsonl | Format::Json => {
            for r in &reports {
                text.push_str(&serde_json::to_string(&r.to_json(args.timings))?);
                text.push('\n');
            }
        }
        Format::Text => {
            for r in &reports {
                let status = if r.equal { "equal" } else { "DIFFERS" };
                text.push_str(&format!("{:<48} order {:>4}  {status}", r.case.to_string(), r.group_order));
                if args.timings {
                    text.push_str(&format!("  {} ms", r.elapsed.as_millis()));
                }
                if let Some(e) = &r.error {
                    text.push_str(&format!("  ({e})"));
                }
                text.push('\n');
            }
            let equal = reports.iter().filter(|r| r.equal).count();
            text.push_str(&format!("{equal} of {} cases equal\n", reports.len()));
        }
        other => return Err(usage(format!("verify output supports jsonl and text, not {other}"))),
    }
    emit(output, &text)?;
    Ok(if reports.iter().all(|r| r.equal) { 0 } else { 2 })
}

/// Cartesian product of the requested parameter ranges, keeping tuples
/// that satisfy the theorem's hypotheses.
fn theorem_cases(id: powerspec::TheoremId, args: &VerifyArgs) -> Result<Vec<TheoremCase>, Failure> {
    let ranges: Vec<Range> = id
        .param_names()
        .iter()
        .map(|&name| args.range_for(name).ok_or_else(|| usage(format!("{id} needs --{name} or --{name}-range"))))
        .collect::<Result<_, _>>()?;
    let mut tuples: Vec<Vec<u64>> = vec![Vec::new()];
    for r in &ranges {
        tuples = tuples
            .into_iter()
            .flat_map(|t| (r.start..=r.end).map(move |v| [t.clone(), vec![v]].concat()))
            .collect();
    }
    let mut cases = Vec::new();
    let mut first_error = None;
    for t in tuples {
        match TheoremCase::from_values(id, &t) {
            Ok(c) if args.max_order.is_none_or(|m| c.group_order() <= m) => cases.push(c),
            Ok(_) => {}
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
    }
    if cases.is_empty() {
        return Err(match first_error {
            Some(e) => e.into(),
            None => usage(format!("no {id} cases within --max-order")),
        });
    }
    cases.sort();
    Ok(cases)
}
