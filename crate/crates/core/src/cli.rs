//! Command-line surface.
//!
//! Exit codes: 0 when every checked identity holds, 1 when a counterexample
//! was found, 2 for usage and parse errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::enumeration::{b_count_oracle, parity_census, stirling_cycle};
use crate::error::Error;
use crate::involution::{toggle, toggle_traced, verify_involution};
use crate::lyndon::{cfl_factorization, lyndon_tuple, standard_factorization};
use crate::permutations::{all_permutations, cycle_index, cycles, inversions};
use crate::witt::{verify_witt, weighted_identity};
use crate::words::{MultisetSpec, Word};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lyndon",
    version,
    about = "Lyndon factorization and exhaustive checks of the even/odd word identity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print the JSON report instead of text.
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,

    /// Print a text summary (default).
    #[arg(long, global = true)]
    pub text: bool,

    /// Also write the JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Worker threads for enumeration suites (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lyndon factorization, tuple, index and parity of a word.
    Factorize { word: String },
    /// Apply the split/merge involution to a word.
    Involute { word: String },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Coin,
    Involution,
    Witt,
    Cauchy,
    Stirling,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    pub suite: Suite,

    /// Single multiset as rank:multiplicity pairs, e.g. 1:2,2:1,3:1.
    #[arg(long)]
    pub multiset: Option<String>,

    /// Largest cardinality swept (coin, involution) or permutation size
    /// (cauchy, stirling).
    #[arg(long)]
    pub n: Option<usize>,

    /// Largest alphabet size swept (coin, involution).
    #[arg(long)]
    pub k: Option<usize>,

    /// Number of variables (witt).
    #[arg(long)]
    pub vars: Option<usize>,

    /// Truncation degree (witt).
    #[arg(long)]
    pub degree: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Failed,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub status: Status,
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    fn new(command: &str, inputs: Value, result: Value, ok: bool, text: Vec<String>) -> Self {
        Report {
            command: command.into(),
            inputs,
            result,
            status: if ok { Status::Ok } else { Status::Failed },
            text,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Ok => EXIT_OK,
            Status::Failed => EXIT_FAILED,
        }
    }
}

/// Caps on the exhaustive sweeps; beyond these a run stops being interactive.
const MAX_SWEEP_CARDINALITY: usize = 12;
const MAX_PERMUTATION_SIZE: usize = 10;
const MAX_WITT_DEGREE: usize = 16;

fn usage(message: impl Into<String>) -> Error {
    Error::InvalidArgument(message.into())
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("reports serialize")
}

pub fn factorize(input: &str) -> Result<Report, Error> {
    let word: Word = input.parse()?;
    let factors = cfl_factorization(&word)?;
    let factor_text: Vec<String> = factors.iter().map(Word::to_string).collect();
    let mut text = vec![
        format!("word:    {word}"),
        format!("factors: [{}]", factor_text.join(",")),
    ];
    let result = match lyndon_tuple(&word) {
        Ok(tuple) => {
            text.push(format!("tuple:   {tuple}"));
            text.push(format!("index:   {}", tuple.index()));
            text.push(format!("parity:  {}", tuple.parity()));
            let standard = standard_factorization(&tuple.factors()[0])
                .map(|(r, s)| json!([r, s]))
                .unwrap_or(Value::Null);
            json!({
                "word": word,
                "factors": factors,
                "tuple": tuple,
                "index": tuple.index(),
                "parity": tuple.parity(),
                "standard_factorization_of_first": standard,
            })
        }
        Err(e @ Error::NonDistinctFactors { .. }) => {
            text.push("tuple:   none (NonDistinctFactors)".into());
            json!({
                "word": word,
                "factors": factors,
                "tuple": Value::Null,
                "error": "NonDistinctFactors",
                "message": e.to_string(),
            })
        }
        Err(e) => return Err(e),
    };
    Ok(Report::new(
        "factorize",
        json!({ "word": input }),
        result,
        true,
        text,
    ))
}

pub fn involute(input: &str) -> Result<Report, Error> {
    let word: Word = input.parse()?;
    let trace = toggle_traced(&word)?;
    let back = toggle(&trace.image)?;
    let round_trip = back == word;
    let flipped = trace.image_tuple.parity() != trace.tuple.parity();
    let text = vec![
        format!("word:       {} {}", trace.word, trace.tuple),
        format!(
            "case:       {}",
            to_json(&trace.case).as_str().unwrap_or_default()
        ),
        format!("image:      {} {}", trace.image, trace.image_tuple),
        format!(
            "parity:     {} -> {}",
            trace.tuple.parity(),
            trace.image_tuple.parity()
        ),
        format!(
            "round trip: {back} ({})",
            if round_trip { "ok" } else { "FAILED" }
        ),
    ];
    let mut result = to_json(&trace);
    result["round_trip"] = json!(back);
    result["round_trip_ok"] = json!(round_trip);
    result["parity_flipped"] = json!(flipped);
    Ok(Report::new(
        "involute",
        json!({ "word": input }),
        result,
        round_trip && flipped,
        text,
    ))
}

fn sweep(args: &VerifyArgs) -> Result<(Vec<MultisetSpec>, Value), Error> {
    if let Some(spec) = &args.multiset {
        let m: MultisetSpec = spec.parse()?;
        if m.cardinality() < 2 {
            return Err(usage("multiset needs cardinality at least 2"));
        }
        return Ok((vec![m.clone()], json!({ "multiset": m })));
    }
    let n = args.n.unwrap_or(8);
    let k = args.k.unwrap_or(3);
    if !(2..=MAX_SWEEP_CARDINALITY).contains(&n) {
        return Err(usage(format!(
            "--n must be between 2 and {MAX_SWEEP_CARDINALITY}"
        )));
    }
    if !(1..=9).contains(&k) {
        return Err(usage("--k must be between 1 and 9"));
    }
    Ok((MultisetSpec::all_with(k, 2..=n), json!({ "n": n, "k": k })))
}

fn verify_coin(args: &VerifyArgs) -> Result<Report, Error> {
    let (multisets, inputs) = sweep(args)?;
    let mut rows = Vec::new();
    let mut counterexamples = Vec::new();
    let mut text = Vec::new();
    for m in &multisets {
        let census = parity_census(m)?;
        let mismatches: Vec<Value> = (1..=m.cardinality())
            .filter_map(|k| {
                let oracle = b_count_oracle(m, k);
                let b = census.b(k);
                (b != oracle).then(
                    || json!({ "k": k, "b_count": b.to_string(), "oracle": oracle.to_string() }),
                )
            })
            .collect();
        let ok = census.balanced() && census.alternating_sum.is_zero() && mismatches.is_empty();
        if !ok {
            counterexamples.push(json!({
                "multiset": m,
                "even": census.even.to_string(),
                "odd": census.odd.to_string(),
                "alternating_sum": census.alternating_sum.to_string(),
                "oracle_mismatches": mismatches,
            }));
        }
        text.push(format!(
            "{:<22} N={:<2} even={:<6} odd={:<6} excluded={:<6} alt={} oracle={} {}",
            m.to_string(),
            census.cardinality,
            census.even,
            census.odd,
            census.excluded,
            census.alternating_sum,
            if mismatches.is_empty() {
                "agrees"
            } else {
                "DIFFERS"
            },
            if ok { "ok" } else { "FAILED" }
        ));
        let mut row = to_json(&census);
        row["oracle_agrees"] = json!(mismatches.is_empty());
        rows.push(row);
    }
    let ok = counterexamples.is_empty();
    text.push(format!(
        "{} multisets checked, {} failed",
        multisets.len(),
        counterexamples.len()
    ));
    Ok(Report::new(
        "verify coin",
        inputs,
        json!({ "multisets": rows, "counterexamples": counterexamples }),
        ok,
        text,
    ))
}

fn verify_involution_suite(args: &VerifyArgs) -> Result<Report, Error> {
    let (multisets, inputs) = sweep(args)?;
    let mut reports = Vec::new();
    let mut text = Vec::new();
    let mut failed = 0;
    for m in &multisets {
        let r = verify_involution(m)?;
        text.push(format!(
            "{:<22} checked={:<6} excluded={:<6} splits={:<6} merges={:<6} {}",
            m.to_string(),
            r.checked,
            r.excluded,
            r.splits,
            r.merges,
            if r.ok() { "ok" } else { "FAILED" }
        ));
        for f in &r.failures {
            text.push(format!(
                "  counterexample: word={} tuple={} image={} reason={}",
                f.word,
                f.tuple
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default(),
                f.image
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default(),
                f.reason
            ));
        }
        if !r.ok() {
            failed += 1;
        }
        reports.push(r);
    }
    text.push(format!(
        "{} multisets checked, {failed} failed",
        multisets.len()
    ));
    Ok(Report::new(
        "verify involution",
        inputs,
        json!({ "reports": reports }),
        failed == 0,
        text,
    ))
}

fn verify_witt_suite(args: &VerifyArgs) -> Result<Report, Error> {
    let vars = args.vars.unwrap_or(3);
    let degree = args.degree.unwrap_or(6);
    if !(1..=9).contains(&vars) {
        return Err(usage("--vars must be between 1 and 9"));
    }
    if !(1..=MAX_WITT_DEGREE).contains(&degree) {
        return Err(usage(format!(
            "--degree must be between 1 and {MAX_WITT_DEGREE}"
        )));
    }
    let report = verify_witt(vars, degree);
    let mut text = vec![
        format!("lhs:   {}", report.lhs),
        format!("rhs:   {}", report.rhs),
        format!("equal: {}", report.equal),
    ];
    // the weighted form enumerates all words, so keep it to small lengths
    let mut weighted = Vec::new();
    let mut weighted_ok = true;
    for n in 2..=degree.min(6) {
        let sums = weighted_identity(vars, n)?;
        weighted_ok &= sums.equal();
        text.push(format!(
            "weighted sums, length {n}: {}",
            if sums.equal() { "equal" } else { "DIFFER" }
        ));
        weighted.push(json!({ "N": n, "equal": sums.equal(), "sums": sums }));
    }
    let ok = report.equal && weighted_ok;
    Ok(Report::new(
        "verify witt",
        json!({ "vars": vars, "degree": degree }),
        json!({ "witt": report, "weighted": weighted }),
        ok,
        text,
    ))
}

fn permutation_size(args: &VerifyArgs) -> Result<usize, Error> {
    let n = args.n.unwrap_or(7);
    if !(1..=MAX_PERMUTATION_SIZE).contains(&n) {
        return Err(usage(format!(
            "--n must be between 1 and {MAX_PERMUTATION_SIZE}"
        )));
    }
    Ok(n)
}

fn verify_cauchy(args: &VerifyArgs) -> Result<Report, Error> {
    let n = permutation_size(args)?;
    let (mut checked, mut even, mut odd) = (0u64, 0u64, 0u64);
    let mut counterexamples = Vec::new();
    for t in all_permutations(n) {
        checked += 1;
        let (inv, ind) = (inversions(&t), cycle_index(&t));
        if ind % 2 == 0 {
            even += 1;
        } else {
            odd += 1;
        }
        if inv % 2 != ind % 2 {
            counterexamples.push(json!({
                "permutation": t,
                "cycles": cycles(&t),
                "inversions": inv,
                "cycle_index": ind,
            }));
        }
    }
    let balanced = n < 2 || even == odd;
    let ok = counterexamples.is_empty() && balanced;
    let text = vec![
        format!(
            "{checked} permutations of S_{n}, {} parity mismatches",
            counterexamples.len()
        ),
        format!("even={even} odd={odd}"),
    ];
    Ok(Report::new(
        "verify cauchy",
        json!({ "n": n }),
        json!({
            "checked": checked,
            "even": even.to_string(),
            "odd": odd.to_string(),
            "counterexamples": counterexamples,
        }),
        ok,
        text,
    ))
}

fn verify_stirling(args: &VerifyArgs) -> Result<Report, Error> {
    let n_max = permutation_size(args)?;
    let mut rows = Vec::new();
    let mut text = Vec::new();
    let mut ok = true;
    for n in 1..=n_max {
        let set = MultisetSpec::set(n)?;
        let census = parity_census(&set)?;
        let mut by_cycles = vec![0u64; n + 1];
        for t in all_permutations(n) {
            by_cycles[cycles(&t).k()] += 1;
        }
        for (k, &swept) in by_cycles.iter().enumerate().skip(1) {
            let recurrence = stirling_cycle(n, k);
            let words = census.b(k);
            let brute = BigUint::from(swept);
            let agree = recurrence == words && words == brute;
            ok &= agree;
            text.push(format!(
                "c({n},{k}) = {recurrence:<6} b_count={words:<6} S_n sweep={brute:<6} {}",
                if agree { "ok" } else { "FAILED" }
            ));
            rows.push(json!({
                "n": n,
                "k": k,
                "stirling": recurrence.to_string(),
                "b_count": words.to_string(),
                "brute_force": brute.to_string(),
                "agree": agree,
            }));
        }
    }
    Ok(Report::new(
        "verify stirling",
        json!({ "n": n_max }),
        json!({ "rows": rows }),
        ok,
        text,
    ))
}

pub fn verify(args: &VerifyArgs) -> Result<Report, Error> {
    match args.suite {
        Suite::Coin => verify_coin(args),
        Suite::Involution => verify_involution_suite(args),
        Suite::Witt => verify_witt_suite(args),
        Suite::Cauchy => verify_cauchy(args),
        Suite::Stirling => verify_stirling(args),
    }
}

pub fn execute(cli: &Cli) -> Result<Report, Error> {
    let work = || match &cli.command {
        Command::Factorize { word } => factorize(word),
        Command::Involute { word } => involute(word),
        Command::Verify(args) => verify(args),
    };
    match cli.threads {
        Some(0) => Err(usage("--threads must be positive")),
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| usage(e.to_string()))?
            .install(work),
        None => work(),
    }
}

/// Parses `args`, runs the command, prints the report and returns the exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let report = match execute(&cli) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let rendered = serde_json::to_string_pretty(&report).expect("reports serialize");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, format!("{rendered}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    if cli.json {
        println!("{rendered}");
    } else {
        for line in &report.text {
            println!("{line}");
        }
        println!(
            "status: {}",
            if report.status == Status::Ok {
                "ok"
            } else {
                "failed"
            }
        );
    }
    report.exit_code()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_drives_exit_code() {
        let ok = Report::new("x", Value::Null, Value::Null, true, vec![]);
        let failed = Report::new("x", Value::Null, Value::Null, false, vec![]);
        assert_eq!(ok.exit_code(), EXIT_OK);
        assert_eq!(failed.exit_code(), EXIT_FAILED);
        assert_eq!(to_json(&failed)["status"], "failed");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(
            run(["lyndon", "verify", "witt", "--degree", "0"]),
            EXIT_USAGE
        );
        assert_eq!(
            run(["lyndon", "verify", "coin", "--multiset", "1:1"]),
            EXIT_USAGE
        );
        assert_eq!(
            run(["lyndon", "factorize", "2113", "--json", "--text"]),
            EXIT_USAGE
        );
        assert_eq!(run(["lyndon", "--help"]), EXIT_OK);
    }
}
