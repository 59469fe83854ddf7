//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Run with `cargo test -p qladder-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qladder_core::basis::Scheme;
use qladder_core::checks::{self, CheckResult};
use qladder_core::ladder::{EquivariantOp, LadderOp};
use qladder_core::numeric::GridSpec;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Vec<CheckResult>,
}

fn eigen_lambda() -> Vec<CheckResult> {
    checks::eigenvalues(LadderOp::Lambda, 1..=7)
}

fn eigen_tilde() -> Vec<CheckResult> {
    checks::eigenvalues(LadderOp::TildeL2, 1..=5)
}

fn eigen_l2() -> Vec<CheckResult> {
    let mut v = checks::eigenvalues(LadderOp::L2, 1..=6);
    v.extend(checks::l2_harmonic(30, 3, 7));
    v
}

fn z_power() -> Vec<CheckResult> {
    checks::z_power(5)
}

fn orthogonality() -> Vec<CheckResult> {
    let mut v = checks::orthogonality(3, 2);
    v.extend(checks::h_orthogonality(3));
    v
}

fn decomposition() -> Vec<CheckResult> {
    checks::decomposition(Scheme::Varpi2, 4, -6, 2)
}

fn quotient() -> Vec<CheckResult> {
    checks::quotient(3)
}

fn equivariance() -> Vec<CheckResult> {
    checks::equivariance(&EquivariantOp::ALL, 3)
}

fn symmetry() -> Vec<CheckResult> {
    checks::symmetry(20, 3, 11)
}

fn numeric() -> Vec<CheckResult> {
    let grid = GridSpec { seed: 3, ..GridSpec::uniform(24) };
    let mut v = checks::numeric_norm(&grid);
    v.extend(checks::numeric_s3(&grid));
    v.extend(checks::numeric_poisson(5, &GridSpec { seed: 3, ..GridSpec::uniform(32) }));
    v.extend(checks::numeric_expansion());
    v.extend(checks::numeric_conformal(&GridSpec { seed: 3, ..GridSpec::uniform(32) }));
    v
}

fn derivative() -> Vec<CheckResult> {
    checks::numeric_derivative(50, 5)
}

const CRITERIA: [Criterion; 11] = [
    Criterion { id: 1, title: "lambda eigenvalues n=1..7", budget: Duration::from_secs(60), run: eigen_lambda },
    Criterion { id: 2, title: "lambda^3 eigenvalues n=1..5", budget: Duration::from_secs(120), run: eigen_tilde },
    Criterion { id: 3, title: "two-loop eigenvalues n=1..6 and harmonic image", budget: Duration::from_secs(300), run: eigen_l2 },
    Criterion { id: 4, title: "embedding of z_ij^p, p=1..5", budget: Duration::from_secs(120), run: z_power },
    Criterion { id: 5, title: "orthogonality relations", budget: Duration::from_secs(120), run: orthogonality },
    Criterion { id: 6, title: "varpi2 decomposition scan 2l<=4, -6<=k<=2", budget: Duration::from_secs(300), run: decomposition },
    Criterion { id: 7, title: "quotient isomorphism round trip 2l<=3", budget: Duration::from_secs(120), run: quotient },
    Criterion { id: 8, title: "equivariance of M, I, lambda, L2 for n<=3", budget: Duration::from_secs(300), run: equivariance },
    Criterion { id: 9, title: "two-loop symmetry on 20 random pairs", budget: Duration::from_secs(300), run: symmetry },
    Criterion { id: 10, title: "numeric normalizations and conformal lemmas", budget: Duration::from_secs(600), run: numeric },
    Criterion { id: 11, title: "group action difference quotients, 50 samples", budget: Duration::from_secs(120), run: derivative },
];

fn main() -> ExitCode {
    let only: Option<u32> = std::env::var("QL_CRITERION").ok().and_then(|s| s.parse().ok());
    let mut failed = 0;
    for c in CRITERIA.iter().filter(|c| only.is_none_or(|o| o == c.id)) {
        let t = Instant::now();
        let results = (c.run)();
        let elapsed = t.elapsed();
        let bad: Vec<&CheckResult> = results.iter().filter(|r| !r.pass).collect();
        let in_time = elapsed <= c.budget;
        let ok = bad.is_empty() && !results.is_empty() && in_time;
        println!(
            "[{}] criterion {:>2}: {} ({} cases, {:.2}s of {}s)",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            results.len(),
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        for r in bad.iter().take(5) {
            println!("        {} {:?}: expected {}, got {}", r.check, r.params, r.expected, r.got);
        }
        if !in_time {
            println!("        over time budget");
        }
        if !ok {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
