//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. All comparisons are exact integer equality.
//!
//! Run with `cargo test -p permstat --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use permstat::stats;
use permstat::verify::{
    self, check_boundary, check_denert, check_equidistribution, check_lemma_contracts,
    check_macmahon, check_transfer, check_worked_examples, Enumerator, VerificationReport,
};

const MAX_N: usize = verify::DEFAULT_MAX_N;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    passed: bool,
    detail: String,
}

fn summarize(reports: &[VerificationReport]) -> Outcome {
    match reports.iter().find(|r| !r.passed) {
        Some(bad) => Outcome {
            passed: false,
            detail: bad.line(),
        },
        None => Outcome {
            passed: !reports.is_empty(),
            detail: format!(
                "{} reports, {} cases",
                reports.len(),
                reports.iter().map(|r| r.examined).sum::<u64>()
            ),
        },
    }
}

fn worked_examples() -> Outcome {
    let start = Instant::now();
    let report = check_worked_examples();
    let elapsed = start.elapsed();
    Outcome {
        passed: report.passed && elapsed < Duration::from_secs(1),
        detail: format!(
            "{} examples in {} us; {}",
            report.examined,
            elapsed.as_micros(),
            report.line()
        ),
    }
}

fn equidistribution(enumr: &Enumerator) -> Outcome {
    let mut out = summarize(&check_equidistribution(enumr, 8, 9, MAX_N).unwrap());
    let start = Instant::now();
    let nine = check_equidistribution(enumr, 9, 10, MAX_N).unwrap();
    let elapsed = start.elapsed();
    let nine: Vec<_> = nine.into_iter().filter(|r| r.n == 9).collect();
    let ok = nine.iter().all(|r| r.passed) && elapsed < Duration::from_secs(120);
    out.detail = format!(
        "n<=8: {}; n=9, r=1..10 in {} ms",
        out.detail,
        elapsed.as_millis()
    );
    out.passed &= ok;
    out
}

fn lemma_contracts() -> Outcome {
    let reports = check_lemma_contracts(7);
    let mut out = summarize(&reports);
    let partitions = reports.iter().filter(|r| r.identity == "phi-den").count();
    out.detail = format!("{}; {partitions} branch partitions of S_n", out.detail);
    out
}

fn bijectivity() -> Outcome {
    let reports: Vec<_> = check_lemma_contracts(7)
        .into_iter()
        .filter(|r| r.identity == "rawlings-insertion" || r.identity == "phi-den")
        .collect();
    summarize(&reports)
}

fn transfer(enumr: &Enumerator) -> Outcome {
    let reports: Vec<_> = check_transfer(enumr, 8, 7, MAX_N)
        .unwrap()
        .into_iter()
        .filter(|r| r.r.is_some_and(|r0| r0 < r.n))
        .collect();
    summarize(&reports)
}

fn boundary(enumr: &Enumerator) -> Outcome {
    let reports = check_boundary(enumr, 8, MAX_N).unwrap();
    let mut out = summarize(&reports);
    let witness = reports
        .iter()
        .find(|r| r.n == 3 && r.r == Some(3))
        .and_then(|r| r.note.clone());
    let pinned = (stats::den_r(&[2, 3, 1], 3), stats::inv(&[2, 3, 1])) == (3, 2);
    out.passed &= witness.is_some() && pinned;
    out.detail = format!(
        "{}; n=3 witness: {}; 231 has den_3=3, inv=2: {pinned}",
        out.detail,
        witness.unwrap_or_else(|| "none".into())
    );
    out
}

fn speedup() -> Outcome {
    let time = |threads: usize| {
        let enumr = Enumerator::new(threads);
        let start = Instant::now();
        let reports = check_equidistribution(&enumr, 8, 9, MAX_N).unwrap();
        (
            start.elapsed().as_micros().max(1),
            reports.iter().all(|r| r.passed),
        )
    };
    // warm caches and the allocator before timing
    time(1);
    let (base, ok) = time(1);
    let mut passed = ok;
    let mut parts = vec![format!(
        "cores={} K=1 {base} us",
        std::thread::available_parallelism().map_or(1, |n| n.get())
    )];
    for k in [2u128, 4, 8] {
        let (t, ok) = time(k as usize);
        // speedup >= K/2 as 2 * base >= K * t, in integers
        passed &= ok && 2 * base >= k * t;
        parts.push(format!(
            "K={k} {t} us speedup x{}/100 (need x{}/100)",
            base * 100 / t,
            k * 50
        ));
    }
    Outcome {
        passed,
        detail: parts.join(", "),
    }
}

fn main() -> ExitCode {
    let enumr = Enumerator::new(std::thread::available_parallelism().map_or(1, |n| n.get()));
    let criteria: Vec<Criterion> = vec![
        ("worked examples", Box::new(worked_examples)),
        (
            "(rdes,rmaj) ~ (exc_r,den_r), n<=9",
            Box::new(|| equidistribution(&enumr)),
        ),
        (
            "inv ~ maj ~ [n]_q!, n<=8",
            Box::new(|| summarize(&check_macmahon(&enumr, 8, MAX_N).unwrap())),
        ),
        (
            "(des,maj) ~ (exc,den), n<=8",
            Box::new(|| summarize(&check_denert(&enumr, 8, MAX_N).unwrap())),
        ),
        ("insertion contracts, n<=7", Box::new(lemma_contracts)),
        ("phi_maj and phi_den bijective, n<=7", Box::new(bijectivity)),
        (
            "transfer bijection, n<=8, r<n",
            Box::new(|| transfer(&enumr)),
        ),
        ("den_r = inv boundary, n<=8", Box::new(|| boundary(&enumr))),
        ("parallel speedup >= 0.5K, K<=8", Box::new(speedup)),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        failures += usize::from(!outcome.passed);
        println!(
            "{} {} {name}: {}",
            if outcome.passed { "PASS" } else { "FAIL" },
            i + 1,
            outcome.detail
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
