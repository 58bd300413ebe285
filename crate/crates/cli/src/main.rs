//! `spbranch`: exhaustive verification of the GL(2n) → Sp(2n) branching
//! models and inspection of individual tableaux.
//!
//! Exit status: 0 on success, 1 when a verification check fails, 2 on a
//! usage error, 3 when a sweep would exceed the tableau budget.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use symplectic_branching::aii::{is_k_highest, is_k_lowest, lr_aii};
use symplectic_branching::crystal::{ghat_walk, string_data, wt_ghat, wt_k};
use symplectic_branching::promotion::{factors, inverse, trace, Bijection};
use symplectic_branching::verify::{sweep_shape, verify, CountRow, SweepOptions, VerificationReport, VerifyConfig};
use symplectic_branching::{Error, Partition, Rank, Tableau};

#[derive(Parser)]
#[command(name = "spbranch", version, about = "Branching from GL(2n) to Sp(2n) via type AII tableau models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose one GL(2n) irreducible and compare every model count.
    Branch {
        /// Half the GL rank.
        #[arg(long)]
        n: usize,
        /// Highest weight, e.g. `2,1,1`; `0` or an empty string for the trivial weight.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        json: bool,
    },
    /// Sweep every weight up to a size and run all model and property suites.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_size: u32,
        /// Refuse to run when the sweep would enumerate more tableaux than this.
        #[arg(long, default_value_t = 5_000_000)]
        budget: u64,
        /// Seed of the randomized property trials.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of randomized property trials.
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long)]
        json: bool,
        /// Include wall-clock durations in the report (otherwise only on stderr).
        #[arg(long)]
        timings: bool,
    },
    /// Render data attached to a single tableau.
    Show {
        /// Tableau rows separated by `;`, entries by `,`, e.g. `1,2;2,3;4`.
        tableau: String,
        #[arg(long, value_enum, default_value_t = What::P)]
        what: What,
        /// Half the GL rank; defaults to the smallest rank (at least 2) containing every entry.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List the promotion factors of the two bijections and apply them.
    Bijection {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Which::Phi)]
        which: Which,
        /// Apply the inverse composite instead.
        #[arg(long)]
        inverse: bool,
        /// Tableaux to map.
        tableaux: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    /// Insertion and recording tableaux of the type AII correspondence.
    #[value(alias = "q")]
    P,
    /// Step-by-step trace of the first bijection.
    Phi,
    /// Step-by-step trace of the second bijection.
    Psi,
    /// Dominance walk over the prefixes of the inverse column word.
    Walk,
    /// `(ε_i, φ_i)` for every crystal index.
    Strings,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Phi,
    Psi,
}

impl From<Which> for Bijection {
    fn from(w: Which) -> Self {
        match w {
            Which::Phi => Bijection::Phi,
            Which::Psi => Bijection::Psi,
        }
    }
}

enum Failure {
    Usage(String),
    Verification(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Verification(m) | Failure::Budget(m) => m,
        }
    }
}

/// Errors from validating user input.
fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

/// Errors from inside a computation on already-validated input.
fn internal(e: Error) -> Failure {
    match e {
        Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
        e => Failure::Verification(e.to_string()),
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Branch { n, lambda, json } => cmd_branch(n, &lambda, json),
        Command::Verify { n, max_size, budget, seed, trials, json, timings } => {
            cmd_verify(n, max_size, budget, seed, trials, json, timings)
        }
        Command::Show { tableau, what, n, json } => cmd_show(&tableau, what, n, json),
        Command::Bijection { n, which, inverse, tableaux, json } => cmd_bijection(n, which, inverse, &tableaux, json),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            if let Failure::Verification(report) = &failure {
                print!("{report}");
            } else {
                eprintln!("error: {}", failure.message());
            }
            ExitCode::from(failure.code())
        }
    }
}

fn rank(n: usize) -> Result<Rank, Failure> {
    Rank::new(n).map_err(usage)
}

fn parse_lambda(s: &str, rank: Rank) -> Result<Partition, Failure> {
    let lambda: Partition = s.parse().map_err(usage)?;
    if lambda.length() > rank.m() as usize {
        return Err(Failure::Usage(format!(
            "λ = {lambda} has {} parts, more than 2n = {}",
            lambda.length(),
            rank.m()
        )));
    }
    Ok(lambda)
}

fn parse_tableau(s: &str, rank: Option<Rank>) -> Result<(Tableau, Rank), Failure> {
    let t: Tableau = s.parse().map_err(usage)?;
    t.require_shape().map_err(usage)?;
    if !t.is_semistandard() {
        return Err(Failure::Usage(format!("{s:?} is not semistandard")));
    }
    let rank = match rank {
        Some(r) => r,
        None => Rank::new(t.max_entry().unwrap_or(0).div_ceil(2).max(2) as usize).map_err(usage)?,
    };
    rank.check_entries(&t).map_err(usage)?;
    Ok((t, rank))
}

/// Compact tableau syntax, `∅` for the empty tableau.
fn compact(t: &Tableau) -> String {
    if t.is_empty() {
        "∅".to_string()
    } else {
        t.to_string()
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn row_table(rows: &[CountRow], out: &mut String) {
    out.push_str("lambda\tmu\tmultiplicity\tghat_dominant\tk_highest\tk_lowest\trecording\tstatus\n");
    for r in rows {
        let status = if r.pass { "ok" } else { "MISMATCH" };
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{status}",
            r.lambda, r.mu, r.oracle, r.ghat_dominant, r.k_highest, r.k_lowest, r.recording
        );
    }
}

fn cmd_branch(n: usize, lambda: &str, json: bool) -> Outcome {
    let rank = rank(n)?;
    let lambda = parse_lambda(lambda, rank)?;
    let options = SweepOptions { bijections: false, promotion: false, crystal: false, rectification: false };
    let report = sweep_shape(&lambda, rank, options).map_err(internal)?;
    let rows: Vec<CountRow> = report.rows.into_iter().filter(|r| r.oracle > 0 || !r.pass).collect();
    let pass = rows.iter().all(|r| r.pass) && report.dimension.pass;
    let out = if json {
        to_json(&json!({
            "n": n,
            "lambda": lambda,
            "rows": rows,
            "dimension": report.dimension,
            "pass": pass,
        }))
    } else {
        let mut out = String::new();
        row_table(&rows, &mut out);
        let d = &report.dimension;
        let _ = writeln!(out, "dimension\t{}\t{}\t{}", d.sst_count, d.reassembled, if d.pass { "ok" } else { "MISMATCH" });
        out
    };
    if pass {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn render_report(report: &VerificationReport, durations: Option<f64>) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "n={} max_size={} shapes={} tableaux={} seed={} trials={}",
        report.n, report.max_size, report.shapes, report.tableaux, report.seed, report.random_trials
    );
    out.push('\n');
    row_table(&report.rows, &mut out);
    out.push('\n');
    out.push_str("lambda\tsst\treassembled\tstatus\n");
    for d in &report.dimension {
        let _ = writeln!(out, "{}\t{}\t{}\t{}", d.lambda, d.sst_count, d.reassembled, if d.pass { "ok" } else { "MISMATCH" });
    }
    out.push('\n');
    out.push_str("suite\tchecked\tfailures\tstatus\n");
    for s in report.suites.iter() {
        let status = match (s.pass(), s.informational) {
            (true, _) => "ok",
            (false, true) => "noted",
            (false, false) => "FAIL",
        };
        let _ = writeln!(out, "{}\t{}\t{}\t{status}", s.name, s.checked, s.failures);
        if let Some(first) = s.first_failure.as_ref().filter(|_| !s.pass()) {
            let _ = writeln!(out, "  first: {first}");
        }
    }
    out.push('\n');
    if let Some(secs) = durations {
        let _ = writeln!(out, "elapsed_seconds={secs:.3}");
    }
    let _ = writeln!(out, "verdict: {}", if report.pass { "PASS" } else { "FAIL" });
    out
}

fn cmd_verify(n: usize, max_size: u32, budget: u64, seed: u64, trials: usize, json: bool, timings: bool) -> Outcome {
    let rank = rank(n)?;
    let config = VerifyConfig { budget: Some(budget), seed, random_trials: trials, ..VerifyConfig::new(rank, max_size) };
    let start = Instant::now();
    let report = verify(&config).map_err(internal)?;
    let secs = start.elapsed().as_secs_f64();
    eprintln!("verify n={n} max_size={max_size}: {secs:.3}s");
    let durations = timings.then_some(secs);
    let out = if json {
        let mut value = serde_json::to_value(&report).expect("report serializes");
        if let Some(secs) = durations {
            value["elapsed_seconds"] = json!(secs);
        }
        to_json(&value)
    } else {
        render_report(&report, durations)
    };
    if report.pass {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn cmd_show(tableau: &str, what: What, n: Option<usize>, json: bool) -> Outcome {
    let rank = n.map(rank).transpose()?;
    let (t, rank) = parse_tableau(tableau, rank)?;
    let value = match what {
        What::P => {
            let (p, q) = lr_aii(&t).map_err(internal)?;
            json!({
                "tableau": compact(&t),
                "P": compact(&p),
                "Q": q,
                "k_highest": is_k_highest(&t, rank).map_err(internal)?,
                "k_lowest": is_k_lowest(&t, rank).map_err(internal)?,
                "wt_k": wt_k(&t, rank).coords(),
            })
        }
        What::Phi | What::Psi => {
            let which = if matches!(what, What::Phi) { Bijection::Phi } else { Bijection::Psi };
            let tr = trace(which, &t, rank).map_err(internal)?;
            let steps: Vec<_> =
                tr.steps.iter().map(|(f, s)| json!({"factor": f.to_string(), "tableau": compact(s)})).collect();
            json!({"tableau": compact(&t), "steps": steps, "output": compact(tr.output())})
        }
        What::Walk => {
            let walk = ghat_walk(&t, rank).map_err(internal)?;
            let prefixes: Vec<_> = walk.prefixes.iter().map(|w| w.coords().to_vec()).collect();
            json!({
                "tableau": compact(&t),
                "prefixes": prefixes,
                "failing_prefix": walk.failing_prefix,
                "dominant": walk.is_dominant(),
                "wt_ghat": wt_ghat(&t, rank).coords(),
            })
        }
        What::Strings => {
            let data: Vec<_> = string_data(&t, rank)
                .into_iter()
                .enumerate()
                .map(|(i, (eps, phi))| json!({"i": i + 1, "eps": eps, "phi": phi}))
                .collect();
            json!({"tableau": compact(&t), "strings": data})
        }
    };
    if json {
        return Ok(to_json(&value));
    }
    Ok(render_show(what, &value))
}

fn render_show(what: What, v: &serde_json::Value) -> String {
    let mut out = String::new();
    let s = |key: &str| v[key].as_str().unwrap_or_default().to_string();
    match what {
        What::P => {
            let _ = writeln!(out, "P\t{}", s("P"));
            let q: Vec<String> = v["Q"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|e| format!("({},{}):{}", e["box"][0], e["box"][1], e["step"]))
                .collect();
            let _ = writeln!(out, "Q\t{}", if q.is_empty() { "∅".to_string() } else { q.join(" ") });
            let _ = writeln!(out, "k_highest\t{}", v["k_highest"]);
            let _ = writeln!(out, "k_lowest\t{}", v["k_lowest"]);
            let _ = writeln!(out, "wt_k\t{}", v["wt_k"]);
        }
        What::Phi | What::Psi => {
            let _ = writeln!(out, "input\t{}", s("tableau"));
            for step in v["steps"].as_array().into_iter().flatten() {
                let _ = writeln!(out, "{}\t{}", step["factor"].as_str().unwrap_or_default(), step["tableau"].as_str().unwrap_or_default());
            }
            let _ = writeln!(out, "output\t{}", s("output"));
        }
        What::Walk => {
            for (k, w) in v["prefixes"].as_array().into_iter().flatten().enumerate() {
                let _ = writeln!(out, "{}\t{w}", k + 1);
            }
            let _ = writeln!(out, "dominant\t{}", v["dominant"]);
            let _ = writeln!(out, "wt_ghat\t{}", v["wt_ghat"]);
        }
        What::Strings => {
            out.push_str("i\teps\tphi\n");
            for e in v["strings"].as_array().into_iter().flatten() {
                let _ = writeln!(out, "{}\t{}\t{}", e["i"], e["eps"], e["phi"]);
            }
        }
    }
    out
}

fn cmd_bijection(n: usize, which: Which, invert: bool, tableaux: &[String], json: bool) -> Outcome {
    let rank = rank(n)?;
    let which = Bijection::from(which);
    let names: Vec<String> = factors(which, rank).iter().map(ToString::to_string).collect();
    let mut mapped = Vec::with_capacity(tableaux.len());
    for s in tableaux {
        let (t, _) = parse_tableau(s, Some(rank))?;
        let image = if invert { inverse(which, &t, rank) } else { trace(which, &t, rank).map(|tr| tr.output().clone()) };
        mapped.push((compact(&t), compact(&image.map_err(internal)?)));
    }
    if json {
        let images: Vec<_> = mapped.iter().map(|(t, u)| json!({"tableau": t, "image": u})).collect();
        return Ok(to_json(&json!({"n": n, "factors": names, "inverse": invert, "images": images})));
    }
    let mut out = String::new();
    let _ = writeln!(out, "factors\t{}", names.join(" "));
    for (t, u) in mapped {
        let _ = writeln!(out, "{t}\t{u}");
    }
    Ok(out)
}
