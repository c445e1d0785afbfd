//! `permstat`: statistics, labelings, insertion maps and exhaustive checks
//! on permutations from the command line.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on invalid
//! input. Output is assembled in full before anything is printed, so an
//! error never leaves partial output behind.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use permstat::insertion::{self, TRACE_VERSION};
use permstat::labeling::{self, Scheme, SpaceLabeling};
use permstat::stats::StatVector;
use permstat::transfer::{self, InsertionCode};
use permstat::verify::{
    self, all_permutations, check_all, joint_distribution, Enumerator, Identity, StatPair,
};
use permstat::{Error, Permutation};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "permstat", version, about, long_about = None)]
#[command(
    after_help = "Permutations are read as space- or comma-separated letters \
(\"8 3 6 2 9 5 4 1 7\") or in the compact form with parenthesized multi-digit \
letters (\"93826(10)5417\").\nExit status: 0 success, 1 verification failure, 2 invalid input."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every statistic of a permutation as JSON.
    Stats {
        #[arg(long)]
        perm: Permutation,
        /// Level for rdes, rmaj, exc_r and den_r.
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Show the space labeling used to insert the next maximum.
    Label {
        #[arg(long, value_parser = parse_scheme)]
        scheme: Scheme,
        #[arg(long)]
        perm: Permutation,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Insert the next maximum at the space labeled `c`.
    Insert {
        #[arg(long, value_parser = parse_scheme)]
        scheme: Scheme,
        #[arg(long)]
        perm: Permutation,
        #[arg(long)]
        c: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Emit every intermediate word and substitution as versioned JSON.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Recover `(π, c)` from an image permutation, as JSON.
    Invert {
        #[arg(long, value_parser = parse_scheme)]
        scheme: Scheme,
        #[arg(long)]
        perm: Permutation,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Peel a permutation into its comma-separated insertion code.
    Encode {
        #[arg(long, value_parser = parse_scheme)]
        scheme: Scheme,
        #[arg(long)]
        perm: Permutation,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Rebuild a permutation from a comma-separated insertion code.
    Decode {
        #[arg(long, value_parser = parse_scheme)]
        scheme: Scheme,
        /// Labels c_2,…,c_n (empty for the singleton).
        #[arg(long, allow_hyphen_values = true)]
        code: String,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Apply the bijection taking (rdes, rmaj) to (exc_r, den_r).
    Transfer(TransferArgs),
    /// Exhaustively check identities over S_n.
    Verify {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Largest level checked; defaults to n-max + 1.
        #[arg(long)]
        r_max: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_parser = parse_identity, default_value = "all")]
        identity: Identity,
        #[arg(long)]
        json: bool,
    },
    /// Coefficient table of one statistic pair over S_n.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, value_parser = parse_pair, default_value = "rdes-rmaj")]
        pair: StatPair,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct TransferArgs {
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    perm: Option<Permutation>,
    #[arg(long)]
    r: usize,
    /// Apply the inverse map instead.
    #[arg(long)]
    inverse: bool,
    /// Stream `π  Ψ(π)  rdes  rmaj` for every π in S_n, tab-separated.
    #[arg(long, requires = "n")]
    all: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = verify::DEFAULT_MAX_N)]
    max_n: usize,
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads; defaults to the number of available cores.
    #[arg(long, env = "PERMSTAT_THREADS")]
    threads: Option<usize>,
    /// Largest n accepted before refusing to enumerate.
    #[arg(long, default_value_t = verify::DEFAULT_MAX_N)]
    max_n: usize,
}

impl RunArgs {
    fn enumerator(&self) -> Enumerator {
        let threads = self
            .threads
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        Enumerator::new(threads)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn parse_scheme(s: &str) -> Result<Scheme, Error> {
    s.parse()
}

fn parse_identity(s: &str) -> Result<Identity, Error> {
    s.parse()
}

fn parse_pair(s: &str) -> Result<StatPair, Error> {
    s.parse()
}

enum Failure {
    Invalid(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let status = run(cli.command, &mut out);
    if !matches!(status, Err(Failure::Invalid(_))) {
        print!("{out}");
    }
    match status {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut String) -> Outcome {
    match command {
        Command::Stats { perm, r } => stats(&perm, r, out),
        Command::Label {
            scheme,
            perm,
            r,
            json,
        } => label(scheme, &perm, r, json, out),
        Command::Insert {
            scheme,
            perm,
            c,
            r,
            trace,
            json,
        } => insert(scheme, &perm, c, r, trace, json, out),
        Command::Invert { scheme, perm, r } => {
            let res = insertion::invert(scheme, &perm, r)?;
            let v = json!({
                "schema_version": SCHEMA_VERSION,
                "pi": res.pi,
                "c": res.c,
                "case": res.case,
            });
            push_json(out, &v);
            Ok(())
        }
        Command::Encode {
            scheme,
            perm,
            r,
            json,
        } => {
            let code = transfer::encode(&perm, scheme, r)?;
            if json {
                let (t, q) = code.predicted_stats();
                let v = json!({
                    "schema_version": SCHEMA_VERSION,
                    "scheme": code.scheme,
                    "r": code.r,
                    "code": code.values,
                    "t": t,
                    "q": q,
                });
                push_json(out, &v);
            } else {
                writeln!(out, "{code}").unwrap();
            }
            Ok(())
        }
        Command::Decode { scheme, code, r } => {
            let values = InsertionCode::parse_values(&code)?;
            let code = InsertionCode::new(scheme, r, values)?;
            writeln!(out, "{}", transfer::decode(&code)?).unwrap();
            Ok(())
        }
        Command::Transfer(args) => transfer_cmd(args, out),
        Command::Verify {
            n_max,
            r_max,
            run,
            identity,
            json,
        } => {
            let r_max = r_max.unwrap_or(n_max + 1);
            let reports = check_all(identity, &run.enumerator(), n_max, r_max, run.max_n)?;
            let passed = reports.iter().all(|r| r.passed);
            if json {
                let v = json!({
                    "schema_version": SCHEMA_VERSION,
                    "n_max": n_max,
                    "r_max": r_max,
                    "threads": run.enumerator().threads(),
                    "passed": passed,
                    "reports": reports,
                });
                push_json(out, &v);
            } else {
                for r in &reports {
                    writeln!(out, "{}", r.line()).unwrap();
                }
                let failed = reports.iter().filter(|r| !r.passed).count();
                writeln!(out, "{} reports, {failed} failed", reports.len()).unwrap();
            }
            if passed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Table {
            n,
            r,
            pair,
            format,
            run,
        } => {
            let dist = joint_distribution(&run.enumerator(), n, r, pair, run.max_n)?;
            match format {
                Format::Csv => out.push_str(&dist.to_csv()),
                Format::Json => {
                    let mut v = serde_json::to_value(&dist).unwrap();
                    v["schema_version"] = json!(SCHEMA_VERSION);
                    push_json(out, &v);
                }
            }
            Ok(())
        }
    }
}

fn push_json(out: &mut String, v: &Value) {
    out.push_str(&serde_json::to_string_pretty(v).unwrap());
    out.push('\n');
}

fn stats(perm: &Permutation, r: usize, out: &mut String) -> Outcome {
    if r == 0 {
        return Err(Error::LevelOutOfRange {
            r,
            n: perm.n(),
            requirement: "r >= 1",
        }
        .into());
    }
    let s = StatVector::new(perm, r);
    let v = json!({
        "schema_version": SCHEMA_VERSION,
        "perm": perm,
        "r": r,
        "des": s.des,
        "maj": s.maj,
        "inv": s.inv,
        "exc": s.exc,
        "den": s.den,
        "rdes": s.rdes,
        "rmaj": s.rmaj,
        "exc_r": s.excr,
        "den_r": s.denr,
    });
    push_json(out, &v);
    Ok(())
}

fn labeling_for(scheme: Scheme, perm: &Permutation, r: usize) -> Result<SpaceLabeling, Error> {
    match scheme {
        Scheme::Rmaj => labeling::rmaj_labeling(perm, r),
        Scheme::Den => Ok(labeling::den_labeling(perm)),
        Scheme::Rden => labeling::rden_labeling(perm, r),
    }
}

fn label(scheme: Scheme, perm: &Permutation, r: usize, json: bool, out: &mut String) -> Outcome {
    let lab = labeling_for(scheme, perm, r)?;
    if json {
        let mut v = serde_json::to_value(&lab).unwrap();
        v["schema_version"] = json!(SCHEMA_VERSION);
        push_json(out, &v);
        return Ok(());
    }
    let end = "end".to_string();
    let top: Vec<String> = match scheme {
        Scheme::Rmaj => perm.iter().map(u32::to_string).collect(),
        _ => (1..=perm.n()).map(|i| i.to_string()).collect(),
    };
    let mut rows = vec![(
        if scheme == Scheme::Rmaj {
            "letter"
        } else {
            "index"
        },
        top.into_iter().chain([end]).collect::<Vec<_>>(),
    )];
    rows.push(("label", lab.labels.iter().map(usize::to_string).collect()));
    if let Some(letters) = &lab.insertion_letters {
        rows.push(("insert", letters.iter().map(u32::to_string).collect()));
    }
    let width = rows
        .iter()
        .flat_map(|(_, cells)| cells.iter().map(String::len))
        .max()
        .unwrap_or(1);
    for (name, cells) in rows {
        let line: Vec<String> = cells.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(out, "{name:<6} {}", line.join(" ")).unwrap();
    }
    Ok(())
}

fn insert(
    scheme: Scheme,
    perm: &Permutation,
    c: usize,
    r: usize,
    trace: bool,
    json: bool,
    out: &mut String,
) -> Outcome {
    if trace {
        let (tau, case, steps) = insertion::insert_traced(scheme, perm, c, r)?;
        let v = json!({
            "schema_version": SCHEMA_VERSION,
            "trace_version": TRACE_VERSION,
            "scheme": scheme,
            "pi": perm,
            "c": c,
            "r": r,
            "tau": tau,
            "case": case,
            "steps": steps,
        });
        push_json(out, &v);
        return Ok(());
    }
    let (tau, case) = insertion::insert(scheme, perm, c, r)?;
    if json {
        let v = json!({
            "schema_version": SCHEMA_VERSION,
            "tau": tau,
            "display": tau.compact(),
            "case": case,
        });
        push_json(out, &v);
        return Ok(());
    }
    writeln!(out, "{}", tau.compact()).unwrap();
    if let Some(case) = case {
        let detail = match case {
            insertion::InsertionCase::Append => String::new(),
            insertion::InsertionCase::Han { x, letter } => format!(" x={x} letter={letter}"),
            insertion::InsertionCase::Alpha { x } | insertion::InsertionCase::Beta { x } => {
                format!(" x={x}")
            }
        };
        writeln!(out, "case={}{detail}", case.name()).unwrap();
    }
    Ok(())
}

fn transfer_cmd(args: TransferArgs, out: &mut String) -> Outcome {
    let apply = |p: &Permutation| {
        if args.inverse {
            transfer::transfer_inverse(p, args.r)
        } else {
            transfer::transfer_bijection(p, args.r)
        }
    };
    if let Some(perm) = &args.perm {
        writeln!(out, "{}", apply(perm)?).unwrap();
        return Ok(());
    }
    let n = args.n.expect("clap enforces --n with --all");
    if n > args.max_n {
        return Err(Error::SizeGuard { n, max: args.max_n }.into());
    }
    if args.r == 0 {
        return Err(Error::LevelOutOfRange {
            r: 0,
            n,
            requirement: "r >= 1",
        }
        .into());
    }
    let pair = if args.inverse {
        StatPair::ExcrDenr
    } else {
        StatPair::RdesRmaj
    };
    for pi in all_permutations(n) {
        let (t, q) = pair.eval(&pi, args.r);
        writeln!(out, "{pi}\t{}\t{t}\t{q}", apply(&pi)?).unwrap();
    }
    Ok(())
}
