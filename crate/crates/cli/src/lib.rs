//! Command-line front end. [`run`] parses an argument vector and returns the
//! payload, diagnostics and exit code without touching the process streams,
//! so tests can drive every subcommand in-process.
//!
//! Exit codes: `0` success, `1` domain error, `2` usage error.

use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use schubert::cohomology::{schubert_product, CohomologyClass};
use schubert::divisibility::{effective_good_divisibility, gd_upper_bound_witness};
use schubert::partitions::skew;
use schubert::tableaux::{count_lr_tableaux, enumerate_lr_tableaux, Weight};
use schubert::tango::{
    chern_system_search, ChernSeries, SearchReport, TangoError, TargetSpec, DEFAULT_NODE_BUDGET,
};
use schubert::witness::witness;
use schubert::{GrassContext, Partition};

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "SCHUBERT_THREADS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    /// JSON document (or help text) destined for standard output.
    pub payload: String,
    /// Lines destined for standard error.
    pub diagnostics: Vec<String>,
    /// Set by `--out FILE`; the payload goes there instead of stdout.
    pub out_file: Option<String>,
}

#[derive(Debug, Parser)]
#[command(
    name = "schubert",
    about = "Schubert calculus on Grassmannians G(k,n)",
    version
)]
struct Cli {
    /// Write the JSON payload to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

/// Comma-separated parts such as `3,2,1`; the empty string is `()`.
#[derive(Debug, Clone)]
struct Parts(Vec<usize>);

fn parse_parts(s: &str) -> Result<Parts, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Parts(Vec::new()));
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad part {t:?}: {e}"))
        })
        .collect::<Result<_, _>>()
        .map(Parts)
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate or count LR tableaux of shape OUTER/INNER with content WEIGHT.
    Lr {
        #[arg(long, value_parser = parse_parts)]
        outer: Parts,
        #[arg(long, value_parser = parse_parts, default_value = "")]
        inner: Parts,
        #[arg(long, value_parser = parse_parts, default_value = "")]
        weight: Parts,
        #[arg(long)]
        count_only: bool,
    },
    /// Expand sigma_a * sigma_b in the Schubert basis of G(k,n).
    Product {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        #[arg(long = "a", value_parser = parse_parts, default_value = "")]
        a: Parts,
        #[arg(long = "b", value_parser = parse_parts, default_value = "")]
        b: Parts,
    },
    /// Certificate that sigma_a * sigma_b is nonzero, for |a| + |b| <= n.
    Witness {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        #[arg(long = "a", value_parser = parse_parts, default_value = "")]
        a: Parts,
        #[arg(long = "b", value_parser = parse_parts, default_value = "")]
        b: Parts,
        /// Add the ASCII figure of the filling.
        #[arg(long)]
        render: bool,
    },
    /// Effective good divisibility of G(k,n) by exhaustive pair scan.
    Ed {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        /// Include wall-clock time; output is then no longer reproducible.
        #[arg(long)]
        timing: bool,
    },
    /// Bounded search for a zero divisor x * y = 0 of total degree S.
    GdWitness {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        #[arg(long)]
        degree_sum: usize,
        #[arg(long)]
        coeff_bound: i64,
        #[arg(long)]
        support: usize,
    },
    /// Search Chern systems of hypothetical morphisms G(k,n) -> G(l,m).
    TangoSearch {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        l: usize,
        #[arg(short)]
        m: usize,
        #[arg(long)]
        coeff_bound: u32,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Divisibility rows for P^n and G(1,n), and ed of every G(k,n), n <= N.
    Table {
        #[arg(long)]
        max_n: usize,
    },
}

/// A domain error: the owning module's error name and its message.
struct DomainError {
    name: &'static str,
    message: String,
    partial: Option<Value>,
}

macro_rules! domain_from {
    ($($t:ty),*) => {$(
        impl From<$t> for DomainError {
            fn from(e: $t) -> Self {
                DomainError { name: e.name(), message: e.to_string(), partial: None }
            }
        }
    )*};
}

domain_from!(
    schubert::PartitionError,
    schubert::CohomologyError,
    schubert::witness::WitnessError,
    schubert::tango::TangoError
);

fn partition(parts: &Parts) -> Result<Partition, DomainError> {
    Ok(Partition::new(parts.0.clone())?)
}

fn class_json(c: &CohomologyClass) -> Value {
    serde_json::to_value(c).expect("classes serialize")
}

fn series_json(s: &ChernSeries) -> Value {
    Value::Array(s.terms().iter().map(class_json).collect())
}

fn search_json(r: &SearchReport, complete: bool) -> Value {
    let systems: Vec<Value> = r
        .systems
        .iter()
        .map(|s| {
            json!({
                "lambda": series_json(&s.lambda),
                "mu": series_json(&s.mu),
                "mu_signs": s.mu_signs,
                "alternating": s.alternating,
                "trivial": s.is_trivial(),
            })
        })
        .collect();
    json!({
        "k": r.ctx.k(),
        "n": r.ctx.n(),
        "l": r.target.l(),
        "m": r.target.m(),
        "coeff_bound": r.coeff_bound,
        "budget": r.budget,
        "nodes_visited": r.nodes_visited,
        "complete": complete,
        "systems": systems,
    })
}

fn ed_json(ctx: GrassContext, timing: bool) -> Value {
    let start = Instant::now();
    let r = effective_good_divisibility(ctx);
    let (a, b) = &r.minimal_vanishing_pair;
    let mut v = json!({
        "k": ctx.k(),
        "n": ctx.n(),
        "ed": r.ed_value,
        "vanishing_pair": [a, b],
        "pairs_checked": r.pairs_checked,
    });
    if timing {
        v["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    v
}

fn execute(cmd: Command) -> Result<Value, DomainError> {
    match cmd {
        Command::Lr {
            outer,
            inner,
            weight,
            count_only,
        } => {
            let (outer, inner) = (partition(&outer)?, partition(&inner)?);
            let shape = skew(&outer, &inner)?;
            let w = Weight::new(weight.0);
            let mut v = json!({
                "outer": outer,
                "inner": inner,
                "weight": w.counts(),
            });
            if count_only {
                v["count"] = json!(count_lr_tableaux(&shape, &w));
            } else {
                let all = enumerate_lr_tableaux(&shape, &w);
                v["count"] = json!(all.len());
                v["tableaux"] = all
                    .iter()
                    .map(|f| json!({"rows": f.rows(), "figure": f.render_lines().join("/")}))
                    .collect();
            }
            Ok(v)
        }
        Command::Product { k, n, a, b } => {
            let ctx = GrassContext::new(k, n)?;
            let x = CohomologyClass::schubert(ctx, partition(&a)?)?;
            let y = CohomologyClass::schubert(ctx, partition(&b)?)?;
            let p = schubert::cohomology::product(&x, &y)?;
            Ok(class_json(&p))
        }
        Command::Witness { k, n, a, b, render } => {
            let ctx = GrassContext::new(k, n)?;
            let (a, b) = (partition(&a)?, partition(&b)?);
            let cert = witness(&a, &b, ctx)?;
            let mut v = serde_json::to_value(&cert).expect("certificates serialize");
            v["coefficient"] = json!(schubert_product(ctx, &a, &b).coeff(&cert.c));
            if render {
                v["figure"] = json!(cert.figure().join("/"));
                v["figure_rows"] = json!(cert.figure());
            }
            Ok(v)
        }
        Command::Ed { k, n, timing } => Ok(ed_json(GrassContext::new(k, n)?, timing)),
        Command::GdWitness {
            k,
            n,
            degree_sum,
            coeff_bound,
            support,
        } => {
            let ctx = GrassContext::new(k, n)?;
            let found = gd_upper_bound_witness(ctx, degree_sum, coeff_bound, support);
            Ok(json!({
                "k": k,
                "n": n,
                "degree_sum": degree_sum,
                "coeff_bound": coeff_bound,
                "support": support,
                "found": found.is_some(),
                "witness": found.map(|w| json!({
                    "x": class_json(&w.x),
                    "y": class_json(&w.y),
                    "degrees": [w.degrees.0, w.degrees.1],
                })),
            }))
        }
        Command::TangoSearch {
            k,
            n,
            l,
            m,
            coeff_bound,
            budget,
        } => {
            let ctx = GrassContext::new(k, n)?;
            let target = TargetSpec::new(l, m)?;
            match chern_system_search(ctx, target, coeff_bound, budget) {
                Ok(r) => Ok(search_json(&r, true)),
                Err(TangoError::SearchBudgetExceeded { partial }) => Err(DomainError {
                    name: "SearchBudgetExceeded",
                    message: format!(
                        "search visited more than {budget} nodes; partial results follow"
                    ),
                    partial: Some(search_json(&partial, false)),
                }),
                Err(e) => Err(e.into()),
            }
        }
        Command::Table { max_n } => Ok(table(max_n)?),
    }
}

fn table(max_n: usize) -> Result<Value, DomainError> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let ctx = GrassContext::projective(n)?;
        let ed = effective_good_divisibility(ctx).ed_value;
        let zero_divisor_at = (2..=n).find(|&s| gd_upper_bound_witness(ctx, s, 1, 2).is_some());
        rows.push(json!({
            "variety": format!("P^{n}"),
            "k": 0,
            "n": n,
            "ed": ed,
            "ed_expected": n,
            "gd_expected": n,
            "zero_divisor_degree_sum": zero_divisor_at,
        }));
    }
    for n in 2..=max_n {
        let ctx = GrassContext::new(1, n)?;
        let ed = effective_good_divisibility(ctx).ed_value;
        let zero_divisor_at = (2..=n).find(|&s| gd_upper_bound_witness(ctx, s, 1, 2).is_some());
        rows.push(json!({
            "variety": format!("G(1,{n})"),
            "k": 1,
            "n": n,
            "ed": ed,
            "ed_expected": n,
            "gd_expected": n - 1,
            "zero_divisor_degree_sum": zero_divisor_at,
        }));
    }
    let mut theorem = Vec::new();
    for n in 1..=max_n {
        for k in 0..n {
            let ctx = GrassContext::new(k, n)?;
            theorem.push(json!({
                "k": k,
                "n": n,
                "ed": effective_good_divisibility(ctx).ed_value,
            }));
        }
    }
    Ok(json!({
        "rows": rows,
        "theorem": theorem,
        "zero_divisor_search": {"coeff_bound": 1, "support": 2},
    }))
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult {
                    exit_code: 0,
                    payload: text,
                    diagnostics: Vec::new(),
                    out_file: None,
                },
                _ => CommandResult {
                    exit_code: 2,
                    payload: String::new(),
                    diagnostics: text.lines().map(str::to_owned).collect(),
                    out_file: None,
                },
            };
        }
    };
    match execute(cli.command) {
        Ok(v) => CommandResult {
            exit_code: 0,
            payload: render(&v),
            diagnostics: Vec::new(),
            out_file: cli.out,
        },
        Err(e) => CommandResult {
            exit_code: 1,
            payload: e.partial.as_ref().map(render).unwrap_or_default(),
            diagnostics: vec![format!("error[{}]: {}", e.name, e.message)],
            out_file: cli.out,
        },
    }
}
