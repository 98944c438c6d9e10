//! Acceptance gate: one test per criterion, each printing a PASS/FAIL
//! line. All comparisons are exact; every tolerance is zero by
//! construction since the whole pipeline is rational arithmetic.
//!
//! The CLI determinism criterion lives in the CLI crate's test suite
//! (it drives the compiled binary).

use std::time::Instant;

use rearrange_core::suites::{run_suite, SuiteConfig, SuiteOutcome};

fn report(index: u32, label: &str, outcome: &SuiteOutcome) {
    let status = if outcome.passed { "PASS" } else { "FAIL" };
    println!(
        "ACCEPTANCE {index} ({label}): {status} [{} cases]",
        outcome.cases_run
    );
    assert!(
        outcome.passed,
        "criterion {index} ({label}) failed: {:#?}",
        outcome.failures.iter().take(5).collect::<Vec<_>>()
    );
}

fn config(seed: u64) -> SuiteConfig {
    let mut cfg = SuiteConfig::new(seed);
    cfg.samples = 200;
    cfg.max_n = 4;
    cfg.max_k = 4;
    cfg.m = 3;
    cfg
}

#[test]
fn criterion_1_kperm_closed_forms() {
    let mut cfg = config(0xC1);
    cfg.samples = 50; // 50 random sequences per (n,k) shape
    let start = Instant::now();
    let outcome = run_suite("kperm-closed", &cfg).unwrap();
    let elapsed = start.elapsed();
    report(1, "k-perm closed forms vs brute, n,k <= 4", &outcome);
    println!("ACCEPTANCE 1 runtime: {:.1?} (target < 60 s)", elapsed);
    assert!(
        elapsed.as_secs() < 60,
        "criterion 1 exceeded its 60 s runtime target: {elapsed:?}"
    );
}

#[test]
fn criterion_2_ap_wmax() {
    let mut cfg = config(0xC2);
    cfg.max_k = 5;
    let outcome = run_suite("ap-wmax", &cfg).unwrap();
    report(2, "arithmetic-progression w_max vs brute", &outcome);
}

#[test]
fn criterion_3_constructions() {
    let outcome = run_suite("constructions", &config(0xC3)).unwrap();
    report(3, "construction column sums and brute certification", &outcome);
}

#[test]
fn criterion_4_pool_variation() {
    let outcome = run_suite("pool", &config(0xC4)).unwrap();
    report(4, "pool variation closed forms, constructions, AM-GM", &outcome);
}

#[test]
fn criterion_5_oeis_self_consistency() {
    let outcome = run_suite("oeis", &config(0xC5)).unwrap();
    report(5, "OEIS tables reproduced by brute oracle", &outcome);
}

#[test]
fn criterion_6_generalized_framework() {
    let mut cfg = config(0xC6);
    cfg.samples = 10_000; // order1 samples per entry
    let order1 = run_suite("order1", &cfg).unwrap();
    report(6, "table entries satisfy the exchange condition", &order1);

    cfg.samples = 100; // newri instances per entry
    let newri = run_suite("newri", &cfg).unwrap();
    report(6, "single-permutation sandwich on random instances", &newri);

    let circular = run_suite("circular", &cfg).unwrap();
    report(6, "circular extrema at the explicit arrangements", &circular);
}

#[test]
fn criterion_7_ordered_algebra() {
    let cfg = config(0xC7);
    for suite in [
        "cg-axioms",
        "ri-calc",
        "chebyshev-calc",
        "variation-calc",
        "kron-hadamard",
        "hermitian-multi",
    ] {
        let outcome = run_suite(suite, &cfg).unwrap();
        report(7, suite, &outcome);
    }
}
