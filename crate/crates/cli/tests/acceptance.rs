//! One line per acceptance criterion. Exits nonzero when any check fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use splineqi_cli::reproduce::{self, Outcome};

fn report(o: &Outcome) {
    println!("{}", o.line());
    for d in &o.details {
        println!("       {d}");
    }
}

fn main() -> ExitCode {
    println!("acceptance criteria");
    let mut failed = 0;
    for check in reproduce::CHECKS {
        let o = check();
        failed += usize::from(!o.passed);
        report(&o);
    }

    let start = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_splineqi"))
        .arg("reproduce-paper")
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let code = status.status.code();
    let ok = code == Some(0) && elapsed < Duration::from_secs(60);
    failed += usize::from(!ok);
    println!(
        "[{}] 11 reproduce-paper: exit code {:?}, {:.2} s (needs 0 and < 60 s)",
        if ok { "PASS" } else { "FAIL" },
        code,
        elapsed.as_secs_f64()
    );

    let inv = reproduce::root_convergence();
    println!("invariant:");
    report(&inv);
    failed += usize::from(!inv.passed);

    println!("{failed} failing line(s)");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
