// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.
//! `curling`: sequence and graph curling numbers, graph powers, and formula
//! audits from the command line.
//!
//! Exit status is 0 on success, 1 when an audit finds a disagreement outside
//! the discrepancy ledger, and 2 for invalid arguments or input.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use curling_core::audit::{
    render, render_table, reproduce_table, run_audit, ReportFormat, SweepSpec, TableRanges,
};
use curling_core::graph::{
    parse_edge_list, power_with_advisory, write_edge_list, GeneratorSpec, Graph,
};
use curling_core::invariants::CurlingReport;
use curling_core::registry::{self, FormulaId};
use curling_core::sequence::{extend_by_curling, steps_until_one, strategy, StepsOutcome};

#[derive(Parser)]
#[command(
    name = "curling",
    version,
    about = "Curling numbers of sequences and graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Curling number of a sequence.
    SeqCn {
        /// Comma-separated integers, e.g. 1,2,1,2.
        seq: String,
        /// Strategy: zscan or naive.
        #[arg(long, default_value = "zscan")]
        algo: String,
    },
    /// Append the curling number repeatedly.
    SeqExtend {
        seq: String,
        #[arg(long)]
        steps: usize,
    },
    /// Check that every start string over an alphabet reaches a 1.
    Conjecture {
        #[arg(long, default_value = "2,3")]
        alphabet: String,
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Curling report of a graph as JSON.
    GraphCn(GraphSource),
    /// Build the r-th power of a graph.
    Power {
        #[command(flatten)]
        source: GraphSource,
        #[arg(short)]
        r: usize,
        /// Write the edge list here (`-` for standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce the standard-graph table up to size N.
    Table {
        #[arg(long)]
        max_n: i64,
    },
    /// Audit a formula against ground truth over a parameter sweep.
    Audit(AuditArgs),
    /// List the registered formulas as JSON.
    Formulas,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Generator spec such as path:7, tadpole:5,3 or caterpillar:1,0,2,1.
    #[arg(long)]
    gen: Option<String>,
    /// Edge-list file (`-` for standard input).
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Args)]
struct AuditArgs {
    /// Formula id, e.g. F8.
    #[arg(long)]
    formula: String,
    /// Parameter range name=a..b; repeatable. Without any, the default sweep
    /// for the formula is used. Caterpillar formulas take spine=a..b and
    /// leaf=0..c.
    #[arg(long = "range")]
    ranges: Vec<String>,
    #[arg(long, default_value = "json")]
    format: String,
    /// Seed for the random caterpillar spines.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of random caterpillar spines.
    #[arg(long)]
    random: Option<usize>,
    /// Maximum number of parameter points.
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_ints(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>()
                .with_context(|| format!("`{t}` is not an integer"))
        })
        .collect()
}

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn load_graph(source: &GraphSource) -> Result<Graph> {
    match (&source.gen, &source.edges) {
        (Some(spec), None) => Ok(spec.parse::<GeneratorSpec>()?.build()?),
        (None, Some(path)) => {
            let text = if path.as_os_str() == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            } else {
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
            };
            Ok(parse_edge_list(&text)?)
        }
        _ => bail!("give exactly one of --gen or --edges"),
    }
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) if path.as_os_str() != "-" => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        _ => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_range(text: &str) -> Result<(String, i64, i64)> {
    let (name, span) = text
        .split_once('=')
        .ok_or_else(|| anyhow!("range `{text}` should look like name=a..b"))?;
    let (lo, hi) = span
        .split_once("..")
        .ok_or_else(|| anyhow!("range `{text}` should look like name=a..b"))?;
    let lo = lo
        .trim()
        .parse()
        .with_context(|| format!("bad lower bound in `{text}`"))?;
    let hi = hi
        .trim()
        .parse()
        .with_context(|| format!("bad upper bound in `{text}`"))?;
    Ok((name.trim().to_string(), lo, hi))
}

fn sweep_spec(args: &AuditArgs) -> Result<SweepSpec> {
    let id: FormulaId = args.formula.parse()?;
    let mut spec = SweepSpec::default_for(id);
    if let Some(cat) = spec.caterpillar.as_mut() {
        for text in &args.ranges {
            let (name, lo, hi) = parse_range(text)?;
            let size =
                |v: i64| usize::try_from(v).map_err(|_| anyhow!("`{text}` must be nonnegative"));
            match name.as_str() {
                "spine" => (cat.min_spine, cat.max_spine) = (size(lo)?, size(hi)?),
                "leaf" if lo == 0 => cat.max_leaf = size(hi)?,
                "leaf" => bail!("leaf ranges start at 0"),
                other => bail!("caterpillar sweeps take spine and leaf ranges, not `{other}`"),
            }
        }
        if let Some(seed) = args.seed {
            cat.seed = seed;
        }
        if let Some(random) = args.random {
            cat.random = random;
        }
    } else {
        if args.seed.is_some() || args.random.is_some() {
            bail!("--seed and --random apply to caterpillar formulas only");
        }
        if !args.ranges.is_empty() {
            spec.ranges.clear();
            for text in &args.ranges {
                let (name, lo, hi) = parse_range(text)?;
                spec = spec.range(&name, lo, hi);
            }
        }
    }
    if let Some(cap) = args.cap {
        spec = spec.cap(cap);
    }
    Ok(spec)
}

fn conjecture(alphabet: &str, max_len: usize, cap: usize) -> Result<()> {
    let mut letters = parse_ints(alphabet)?;
    letters.sort_unstable();
    letters.dedup();
    if max_len == 0 {
        bail!("--max-len must be at least 1");
    }
    let mut count = 0u64;
    let mut max_steps = 0;
    let mut worst: Vec<i64> = Vec::new();
    let mut exhausted: Vec<Vec<i64>> = Vec::new();
    for len in 1..=max_len {
        let mut digits = vec![0usize; len];
        loop {
            let s: Vec<i64> = digits.iter().map(|&d| letters[d]).collect();
            count += 1;
            match steps_until_one(&s, cap)? {
                StepsOutcome::Reached(k) if k > max_steps || worst.is_empty() => {
                    max_steps = k;
                    worst = s;
                }
                StepsOutcome::Reached(_) => {}
                StepsOutcome::Exhausted => exhausted.push(s),
            }
            let Some(i) = digits.iter().rposition(|&d| d + 1 < letters.len()) else {
                break;
            };
            digits[i] += 1;
            digits[i + 1..].fill(0);
        }
    }
    println!("starts checked: {count}");
    println!("max steps: {max_steps} (start {})", join(&worst));
    if exhausted.is_empty() {
        println!("cap-exhausted starts: none");
    } else {
        println!("cap-exhausted starts: {}", exhausted.len());
        for s in &exhausted {
            println!("  {}", join(s));
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::SeqCn { seq, algo } => {
            let s = parse_ints(&seq)?;
            println!("{}", strategy(&algo)?.curling_number(&s)?);
        }
        Command::SeqExtend { seq, steps } => {
            let s = parse_ints(&seq)?;
            println!("{}", join(&extend_by_curling(&s, steps)?));
        }
        Command::Conjecture {
            alphabet,
            max_len,
            cap,
        } => conjecture(&alphabet, max_len, cap)?,
        Command::GraphCn(source) => {
            let g = load_graph(&source)?;
            println!("{}", serde_json::to_string(&CurlingReport::of(&g)?)?);
        }
        Command::Power { source, r, out } => {
            let g = load_graph(&source)?;
            let p = power_with_advisory(&g, r)?;
            if p.beyond_diameter {
                eprintln!(
                    "note: r = {r} exceeds the diameter ({}), so the power is complete",
                    serde_json::to_string(&p.diameter)?
                );
            }
            if let Some(out) = &out {
                write_output(Some(out), &write_edge_list(&p.graph))?;
            }
            let report = serde_json::to_string(&CurlingReport::of(&p.graph)?)?;
            if out.as_ref().is_some_and(|o| o.as_os_str() == "-") {
                eprintln!("{report}");
            } else {
                println!("{report}");
            }
        }
        Command::Table { max_n } => {
            let reports = reproduce_table(&TableRanges::up_to(max_n)?)?;
            print!("{}", render_table(&reports));
        }
        Command::Audit(args) => {
            let format: ReportFormat = args.format.parse()?;
            let report = run_audit(&sweep_spec(&args)?)?;
            write_output(args.out.as_ref(), &render(&report, format))?;
            if !report.passes() {
                eprintln!(
                    "{} disagreement(s) outside the discrepancy ledger",
                    report.summary.uncovered
                );
                return Ok(ExitCode::from(1));
            }
        }
        Command::Formulas => println!("{}", registry::builtin().catalog_json()),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
