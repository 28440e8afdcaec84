//! `cactus`: decide and realize degree sequences by cactus graph families.
//!
//! Exit codes: 0 yes / valid / clean, 1 no / invalid / mismatches,
//! 2 bad input (unknown family, malformed sequence, unreadable graph).

mod render;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use cactus_core::graph::parse_edge_list;
use cactus_core::oracle::{
    bound_tightness_with, crosscheck_with, forcibly_crosscheck, Census, ScanOptions,
};
use cactus_core::{
    decide, decide_forcibly, degree_sequence_of, explain, is_member, parse_sequence, realize,
    DegreeSequence, Family, Forcibly, Rule, Verdict,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use render::{render, GraphFormat};

#[derive(Parser)]
#[command(name = "cactus", version, about = "Degree-sequence realization by cactus graph families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum ReportFormat {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, volume, m, multiplicities, beta and both edge bounds.
    Params {
        sequence: String,
        #[arg(long, value_enum, default_value_t)]
        format: ReportFormat,
    },
    /// Decide whether the sequence has a realization in the family.
    Decide {
        #[arg(long, value_parser = parse_target)]
        family: Target,
        sequence: String,
        #[arg(long, value_enum, default_value_t)]
        format: ReportFormat,
    },
    /// Build a witness graph; vertices are numbered by input position.
    Realize {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        sequence: String,
        #[arg(long, value_enum, default_value_t)]
        format: GraphFormat,
    },
    /// Check that an edge-list graph is a family member (with the given degrees).
    Verify {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// Edge-list file; `-` or omitted reads stdin.
        graph: Option<PathBuf>,
        /// Degrees the graph must have, position by position.
        #[arg(long)]
        sequence: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: ReportFormat,
    },
    /// Cross-check the family against exhaustive enumeration.
    Oracle {
        #[arg(long, value_parser = parse_target)]
        family: Target,
        #[arg(long)]
        n: usize,
        /// Worker threads (0 = all cores).
        #[arg(long, env = "CACTUS_JOBS", default_value_t = 0)]
        jobs: usize,
        /// Permit n = 8 (2^28 graphs).
        #[arg(long)]
        allow_n8: bool,
        #[arg(long, value_enum, default_value_t)]
        format: ReportFormat,
    },
}

#[derive(Debug, Clone, Copy)]
enum Target {
    Family(Family),
    Forcibly(Forcibly),
}

fn family_names() -> String {
    let mut names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
    names.extend(Forcibly::ALL.iter().map(|c| c.name()));
    names.join(", ")
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
        .map_err(|_| format!("known families: {}", Family::ALL.map(Family::name).join(", ")))
}

fn parse_target(s: &str) -> Result<Target, String> {
    let key: String = s
        .chars()
        .filter(|c| !matches!(c, '-' | '_' | ' '))
        .flat_map(char::to_lowercase)
        .collect();
    match key.as_str() {
        "forciblybicactus" => Ok(Target::Forcibly(Forcibly::Bicactus)),
        "forciblybipartiteunicyclic" | "forciblybiunicyclic" => {
            Ok(Target::Forcibly(Forcibly::BipartiteUnicyclic))
        }
        _ => s
            .parse()
            .map(Target::Family)
            .map_err(|_| format!("known families: {}", family_names())),
    }
}

/// Failure that maps to exit code 2.
struct BadInput(String);

fn sequence(text: &str) -> Result<DegreeSequence, BadInput> {
    parse_sequence(text).map_err(|e| BadInput(format!("malformed sequence: {e}")))
}

fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable") + "\n"
}

#[derive(Serialize)]
struct ParamsJson {
    n: u64,
    volume: u64,
    m: u64,
    mult1: u64,
    mult_odd: u64,
    beta: u64,
    cactus_bound: i64,
    bicactus_bound: i64,
}

#[derive(Serialize)]
struct VerdictJson<'a> {
    realizable: bool,
    rule: Rule,
    m: Option<u64>,
    beta: Option<u64>,
    bound: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
}

#[derive(Serialize)]
struct VerifyJson {
    valid: bool,
    family: Family,
    n: usize,
    m: usize,
    reason: Option<String>,
}

#[derive(Serialize)]
struct ForcedJson<'a> {
    class: &'a str,
    n: usize,
    graphic_multisets: usize,
    mismatches: Vec<cactus_core::oracle::ForcedMismatch>,
}

#[derive(Serialize)]
struct OracleJson<'a> {
    #[serde(flatten)]
    report: &'a cactus_core::oracle::CensusReport,
    tightness: Vec<cactus_core::oracle::TightnessRow>,
}

struct Output {
    code: u8,
    stdout: String,
}

fn params(text: &str, format: ReportFormat) -> Result<Output, BadInput> {
    let d = sequence(text)?;
    let p = d.params().map_err(|e| BadInput(e.to_string()))?;
    let j = ParamsJson {
        n: p.n,
        volume: p.volume,
        m: p.m,
        mult1: p.mult1,
        mult_odd: p.mult_odd,
        beta: p.beta,
        cactus_bound: p.cactus_bound(),
        bicactus_bound: p.bicactus_bound(),
    };
    let stdout = match format {
        ReportFormat::Json => json_line(&j),
        ReportFormat::Text => format!(
            "n: {}\nvolume: {}\nm: {}\nmult1: {}\nmult_odd: {}\nbeta: {}\ncactus bound: {}\nbicactus bound: {}\n",
            j.n, j.volume, j.m, j.mult1, j.mult_odd, j.beta, j.cactus_bound, j.bicactus_bound
        ),
    };
    Ok(Output { code: 0, stdout })
}

fn verdict_output(v: &Verdict, format: ReportFormat) -> Output {
    let stdout = match format {
        ReportFormat::Text => explain(v) + "\n",
        ReportFormat::Json => json_line(&VerdictJson {
            realizable: v.realizable,
            rule: v.rule,
            m: v.params.map(|p| p.m),
            beta: v.params.map(|p| p.beta),
            bound: v.bound,
            reason: (!v.realizable).then_some(v.reason.as_str()),
        }),
    };
    Output {
        code: if v.realizable { 0 } else { 1 },
        stdout,
    }
}

fn decide_cmd(target: Target, text: &str, format: ReportFormat) -> Result<Output, BadInput> {
    let d = sequence(text)?;
    let v = match target {
        Target::Family(f) => decide(f, &d),
        Target::Forcibly(c) => decide_forcibly(c, &d),
    };
    Ok(verdict_output(&v, format))
}

fn realize_cmd(family: Family, text: &str, format: GraphFormat) -> Result<Output, BadInput> {
    let d = sequence(text)?;
    match realize(family, &d) {
        Ok(g) => Ok(Output {
            code: 0,
            stdout: render(&g, format),
        }),
        Err(e) => {
            eprintln!("{e}");
            Ok(Output {
                code: 1,
                stdout: String::new(),
            })
        }
    }
}

fn read_graph_text(path: Option<&PathBuf>) -> Result<String, BadInput> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| BadInput(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| BadInput(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn verify_cmd(
    family: Family,
    path: Option<&PathBuf>,
    text: Option<&str>,
    format: ReportFormat,
) -> Result<Output, BadInput> {
    let expected = text.map(sequence).transpose()?;
    let g = parse_edge_list(&read_graph_text(path)?)
        .map_err(|e| BadInput(format!("malformed graph: {e}")))?;
    let reason = match (&expected, degree_sequence_of(&g)) {
        (_, Err(e)) => Some(e.to_string()),
        (Some(d), Ok(_)) if d.in_input_order() != g.degrees() => {
            Some("degrees differ from the requested sequence".to_string())
        }
        _ if !is_member(family, &g) => Some(format!("graph is not a {family}")),
        _ => None,
    };
    let valid = reason.is_none();
    let stdout = match format {
        ReportFormat::Text => match &reason {
            None => format!("valid {family} realization\n"),
            Some(r) => format!("invalid: {r}\n"),
        },
        ReportFormat::Json => json_line(&VerifyJson {
            valid,
            family,
            n: g.vertex_count(),
            m: g.edge_count(),
            reason,
        }),
    };
    Ok(Output {
        code: if valid { 0 } else { 1 },
        stdout,
    })
}

fn oracle_cmd(
    target: Target,
    n: usize,
    jobs: usize,
    allow_n8: bool,
    format: ReportFormat,
) -> Result<Output, BadInput> {
    let census =
        Census::build(n, ScanOptions { jobs, allow_n8 }).map_err(|e| BadInput(e.to_string()))?;
    match target {
        Target::Forcibly(class) => {
            let (graphic, all) = forcibly_crosscheck(&census);
            let mismatches: Vec<_> = all.into_iter().filter(|m| m.class == class.name()).collect();
            let code = if mismatches.is_empty() { 0 } else { 1 };
            let stdout = match format {
                ReportFormat::Json => json_line(&ForcedJson {
                    class: class.name(),
                    n,
                    graphic_multisets: graphic,
                    mismatches,
                }),
                ReportFormat::Text => {
                    let mut s = format!(
                        "family: {}\nn: {n}\ngraphic multisets: {graphic}\nmismatches: {}\n",
                        class.name(),
                        mismatches.len()
                    );
                    for m in &mismatches {
                        s += &format!("  {:?}: decide {}, oracle {}\n", m.multiset, m.decide, m.oracle);
                    }
                    s
                }
            };
            Ok(Output { code, stdout })
        }
        Target::Family(family) => {
            let report = crosscheck_with(&census, family);
            let tightness = bound_tightness_with(&census, family);
            let code = if report.is_clean() { 0 } else { 1 };
            let stdout = match format {
                ReportFormat::Json => json_line(&OracleJson {
                    report: &report,
                    tightness,
                }),
                ReportFormat::Text => {
                    let mut s = format!(
                        "family: {family}\nn: {n}\ncandidates: {}\nrealizable: {}\nmismatches: {}\nwitness failures: {}\nmax corrections: {}\n",
                        report.candidates,
                        report.realizable_multisets.len(),
                        report.mismatches.len(),
                        report.witness_failures.len(),
                        report.max_corrections,
                    );
                    for m in &report.mismatches {
                        s += &format!("  {:?}: decide {}, oracle {}\n", m.multiset, m.decide, m.oracle);
                    }
                    for w in &report.witness_failures {
                        s += &format!("  {:?}: {}\n", w.multiset, w.error);
                    }
                    s += "beta\tmax edges\tbound\tattained\n";
                    for r in &tightness {
                        s += &format!("{}\t{}\t{}\t{}\n", r.beta, r.max_edges, r.bound, r.attained);
                    }
                    s
                }
            };
            Ok(Output { code, stdout })
        }
    }
}

fn run(cli: Cli) -> Result<Output, BadInput> {
    match cli.command {
        Command::Params { sequence, format } => params(&sequence, format),
        Command::Decide {
            family,
            sequence,
            format,
        } => decide_cmd(family, &sequence, format),
        Command::Realize {
            family,
            sequence,
            format,
        } => realize_cmd(family, &sequence, format),
        Command::Verify {
            family,
            graph,
            sequence,
            format,
        } => verify_cmd(family, graph.as_ref(), sequence.as_deref(), format),
        Command::Oracle {
            family,
            n,
            jobs,
            allow_n8,
            format,
        } => oracle_cmd(family, n, jobs, allow_n8, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code)
        }
        Err(BadInput(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
