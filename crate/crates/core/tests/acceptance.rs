//! Acceptance criteria: one PASS/FAIL line each, exact comparisons only.

use std::process::ExitCode;
use std::time::Instant;

use rankin_core::suites::{run_suite, SUITES};

const SEED: u64 = 20240611;

const TITLES: [&str; 10] = [
    "cuspidal pairs: L matches the twist-dual pole family",
    "degeneration: L = 1 mod l when l | q-1; oracle ideal is the full ring",
    "segments: mod-l L equals reduction of the l-adic lift",
    "gamma inductivity and Steinberg product",
    "L mod l equals the banal part",
    "compatibility: L divides r(L of lift), gamma agrees up to units",
    "GCD over integral lifts equals L mod l",
    "Tate oracle agrees with the engine in both worlds",
    "poles lie in the predicted set; distinct lines are disjoint",
    "linkage: interval test equals extraction; circle spot checks",
];

fn main() -> ExitCode {
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, title)) in SUITES.iter().zip(TITLES).enumerate() {
        let t = Instant::now();
        let line = match run_suite(name, SEED, None) {
            Ok(r) if r.passed() => format!("PASS  {:>2} {title} ({} cases, {:.1}s)", i + 1, r.cases, t.elapsed().as_secs_f64()),
            Ok(r) => {
                failed += 1;
                let first = r.failures.first().cloned().unwrap_or_else(|| "no cases ran".into());
                format!("FAIL  {:>2} {title}: {} failures of {}; first: {first}", i + 1, r.failures.len(), r.cases)
            }
            Err(e) => {
                failed += 1;
                format!("FAIL  {:>2} {title}: {e}", i + 1)
            }
        };
        println!("{line}");
    }
    println!(
        "{} of {} criteria passed in {:.1}s",
        SUITES.len() - failed,
        SUITES.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
