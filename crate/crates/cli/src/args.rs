use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use powerspec::{GraphKind, GroupFamilySpec, MatrixKind};

use crate::{usage, Failure};

#[derive(Parser, Debug)]
#[command(name = "powerspec", version, about = "Exact spectra of power graphs of finite groups")]
pub struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a group's Cayley table.
    Group {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Print a power graph, enhanced power graph, or proper power graph.
    Graph {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_parser = parse_graph_kind, default_value = "power")]
        graph: GraphKind,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Characteristic polynomial of the adjacency or distance matrix.
    Spectrum {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_parser = parse_graph_kind, default_value = "power")]
        graph: GraphKind,
        #[arg(long, value_parser = parse_matrix_kind, default_value = "distance")]
        matrix: MatrixKind,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Compare closed forms with brute-force characteristic polynomials.
    Verify(VerifyArgs),
    /// Write a matrix, partition, or quotient matrix.
    Export {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_parser = parse_graph_kind, default_value = "power")]
        graph: GraphKind,
        #[arg(long, value_enum)]
        what: ExportWhat,
        /// Family partition name, or `coarsest`. Defaults to the family
        /// partition that fits the group.
        #[arg(long)]
        partition: Option<String>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Jsonl,
    Csv,
    Dot,
    Text,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_possible_value().expect("no skipped variants");
        f.write_str(v.get_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportWhat {
    Adjacency,
    Distance,
    Partition,
    Quotient,
    DistanceQuotient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Cyclic,
    Elab,
    Dihedral,
    Dicyclic,
    Gpq,
    ElabProduct,
    ElabTimesCyclic,
}

fn parse_graph_kind(s: &str) -> Result<GraphKind, String> {
    match s {
        "power" => Ok(GraphKind::Power),
        "enhanced" => Ok(GraphKind::Enhanced),
        "proper-power" => Ok(GraphKind::ProperPower),
        _ => Err("expected power, enhanced or proper-power".into()),
    }
}

fn parse_matrix_kind(s: &str) -> Result<MatrixKind, String> {
    match s {
        "adjacency" => Ok(MatrixKind::Adjacency),
        "distance" => Ok(MatrixKind::Distance),
        _ => Err("expected adjacency or distance".into()),
    }
}

/// The group, either as `--family` with parameters or as a compact
/// `--group` string such as `elab:2:2*cyclic:3`.
#[derive(Args, Debug)]
pub struct GroupArgs {
    #[arg(long, value_enum, conflicts_with = "group", required_unless_present = "group")]
    pub family: Option<FamilyName>,
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
}

impl GroupArgs {
    pub fn spec(&self) -> Result<GroupFamilySpec, Failure> {
        if let Some(s) = &self.group {
            return Ok(GroupFamilySpec::from_str(s)?);
        }
        let family = self.family.expect("clap requires --family or --group");
        let need = |v: Option<u64>, name: &str| {
            v.ok_or_else(|| usage(format!("--family {} needs --{name}", family.to_possible_value().unwrap().get_name())))
        };
        let exp = |v: Option<u64>, name: &str| {
            let v = need(v, name)?;
            u32::try_from(v).map_err(|_| usage(format!("--{name} is too large")))
        };
        let spec = match family {
            FamilyName::Cyclic => GroupFamilySpec::Cyclic { n: need(self.n, "n")? },
            FamilyName::Elab => GroupFamilySpec::ElementaryAbelian { p: need(self.p, "p")?, n: exp(self.n, "n")? },
            FamilyName::Dihedral => GroupFamilySpec::Dihedral { n: need(self.n, "n")? },
            FamilyName::Dicyclic => GroupFamilySpec::Dicyclic { n: need(self.n, "n")? },
            FamilyName::Gpq => GroupFamilySpec::Gpq { p: need(self.p, "p")?, q: need(self.q, "q")? },
            FamilyName::ElabProduct => {
                GroupFamilySpec::elab_product(need(self.p, "p")?, exp(self.n, "n")?, need(self.q, "q")?, exp(self.m, "m")?)
            }
            FamilyName::ElabTimesCyclic => {
                GroupFamilySpec::elab_times_cyclic(need(self.p, "p")?, exp(self.n, "n")?, need(self.m, "m")?)
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Inclusive `a:b`, or a single value `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub start: u64,
    pub end: u64,
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("{t:?} is not a non-negative integer"));
        let (start, end) = match s.split_once(':') {
            Some((a, b)) => (num(a)?, num(b)?),
            None => (num(s)?, num(s)?),
        };
        if start > end {
            return Err(format!("empty range {s}"));
        }
        Ok(Range { start, end })
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Theorem id, e.g. epg-dihedral-distance.
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    pub theorem: Option<String>,
    /// Every theorem, every parameter tuple up to --max-order.
    #[arg(long)]
    pub all: bool,
    #[arg(long, conflicts_with = "p_range")]
    pub p: Option<u64>,
    #[arg(long, conflicts_with = "q_range")]
    pub q: Option<u64>,
    #[arg(long, conflicts_with = "n_range")]
    pub n: Option<u64>,
    #[arg(long, conflicts_with = "m_range")]
    pub m: Option<u64>,
    #[arg(long)]
    pub p_range: Option<Range>,
    #[arg(long)]
    pub q_range: Option<Range>,
    #[arg(long)]
    pub n_range: Option<Range>,
    #[arg(long)]
    pub m_range: Option<Range>,
    /// Largest group order to include (default 64 with --all).
    #[arg(long)]
    pub max_order: Option<u64>,
    /// Worker threads.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Include elapsed_ms in each report.
    #[arg(long)]
    pub timings: bool,
}

impl VerifyArgs {
    pub fn range_for(&self, name: &str) -> Option<Range> {
        let (single, range) = match name {
            "p" => (self.p, self.p_range),
            "q" => (self.q, self.q_range),
            "n" => (self.n, self.n_range),
            "m" => (self.m, self.m_range),
            _ => return None,
        };
        range.or(single.map(|v| Range { start: v, end: v }))
    }
}
