//! Acceptance suite: ten numbered criteria, each with an exact expectation
//! and a runtime ceiling, printed one pass/fail line at a time. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use forcelab::forbidden::{enumerate_weighted_family, weighted_order_bound};
use forcelab::graph::{Graph, VertexSet};
use forcelab::propagation::{
    chains, enumerate_uniformly_fastest, min_propagation_time, uniformly_fastest,
};
use forcelab::rules::Rule;
use forcelab::throttling::Weight;
use forcelab::verify::{
    axiom_flag_audit, induced_path_chains, max_chain_census, omega_grid, product_family_exactness,
    product_sum_survey, proof_claims_at_scale, proof_claims_census, psd_product_part1,
    savings_all_schedules_consistency, savings_lemma, structured_corpus, synchronous_optimality,
    witness_lemma, CheckReport,
};
use num_rational::Rational64;
use std::time::{Duration, Instant};

fn conclude(criterion: &str, started: Instant, budget: Duration, failures: &[String]) {
    let elapsed = started.elapsed();
    let verdict = if failures.is_empty() && elapsed <= budget {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "acceptance {criterion}: {verdict} ({:.2?} of {:.0?} budget)",
        elapsed, budget
    );
    for f in failures.iter().take(10) {
        println!("  {f}");
    }
    assert!(
        failures.is_empty(),
        "{criterion}: {} failure(s), first: {}",
        failures.len(),
        failures[0]
    );
    assert!(elapsed <= budget, "{criterion}: exceeded runtime budget");
}

fn report_failures(report: &CheckReport) -> Vec<String> {
    report.counterexamples.clone()
}

/// Six vertices, two blue: propagation takes four steps while no forcing
/// chain exceeds three forces.
fn chain_gap_graph() -> Graph {
    Graph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (3, 4),
            (4, 5),
            (0, 4),
            (2, 4),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap()
}

#[test]
fn criterion_01_four_step_regression() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let g = chain_gap_graph();
    let b = VertexSet::from_iter([0, 3]);
    match min_propagation_time(Rule::Standard, &g, b) {
        Some((4, _)) => {}
        Some((t, _)) => failures.push(format!("propagation time {t}, expected exactly 4")),
        None => failures.push("blue set unexpectedly not forcing".into()),
    }
    let fastest = enumerate_uniformly_fastest(Rule::Standard, &g, b);
    if fastest.is_empty() {
        failures.push("no uniformly-fastest schedules enumerated".into());
    }
    let mut max_len = 0usize;
    for s in &fastest {
        let (_, len) = chains(s);
        max_len = max_len.max(len);
        if len >= 4 {
            failures.push(format!(
                "uniformly-fastest schedule has chain length {len}, expected < 4"
            ));
        }
    }
    if max_len != 3 {
        failures.push(format!(
            "longest chain over uniformly-fastest schedules is {max_len}, expected 3"
        ));
    }
    let canonical = uniformly_fastest(Rule::Standard, &g, b).expect("forcing");
    let (_, canonical_len) = chains(&canonical);
    if canonical_len != 3 {
        failures.push(format!(
            "engine schedule has chain length {canonical_len}, expected 3"
        ));
    }
    conclude("criterion 1", started, Duration::from_secs(1), &failures);
}

#[test]
fn criterion_02_product_throttling_survey() {
    let started = Instant::now();
    let report = product_sum_survey(7, 4);
    let mut failures = report_failures(&report);
    let expected = 1 + 2 + 4 + 11 + 34 + 156 + 1044;
    if report.records.len() != expected {
        failures.push(format!(
            "checked {} graphs, expected {expected}",
            report.records.len()
        ));
    }
    conclude("criterion 2", started, Duration::from_secs(900), &failures);
}

#[test]
fn criterion_03_savings_equivalence() {
    let started = Instant::now();
    let report = savings_lemma(6, &omega_grid(), &[0, 1, 2]);
    let mut failures = report_failures(&report);
    let consistency = savings_all_schedules_consistency(5, &omega_grid());
    failures.extend(report_failures(&consistency));
    conclude("criterion 3", started, Duration::from_secs(600), &failures);
}

#[test]
fn criterion_04_standard_witness_upgrades() {
    let started = Instant::now();
    let report = witness_lemma(6, &[Rule::Standard, Rule::Psd], &omega_grid(), &[0, 1, 2]);
    let failures = report_failures(&report);
    conclude("criterion 4", started, Duration::from_secs(600), &failures);
}

#[test]
fn criterion_05_weighted_characterization() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for rule in [Rule::Standard, Rule::Psd] {
        for k in [0u32, 1] {
            let report = forcelab::verify::characterization_sweep(rule, k, Weight::ONE, 6);
            failures.extend(report_failures(&report));
            // The unit-weight bound specializes to 4k + 4.
            let bound = weighted_order_bound(k, Weight::ONE);
            if bound != Rational64::from_integer(4 * k as i64 + 4) {
                failures.push(format!("unit-weight bound is {bound}, expected {}", 4 * k + 4));
            }
        }
    }
    // Members at other weights respect the general bound; enumeration is
    // capped at the internal census order, with truncation flagged.
    for (p, q) in [(1i64, 2i64), (2, 1)] {
        let w = Weight::from_ratio(p, q).unwrap();
        for k in [0u32, 1] {
            let fam = enumerate_weighted_family(Rule::Standard, k, w, 8).unwrap();
            let bound = weighted_order_bound(k, w);
            for m in &fam.members {
                if Rational64::from_integer(m.order() as i64) > bound {
                    failures.push(format!(
                        "omega={w} k={k}: member of order {} exceeds bound {bound}",
                        m.order()
                    ));
                }
            }
            let expects_truncation = bound > Rational64::from_integer(8);
            if fam.truncated != expects_truncation {
                failures.push(format!(
                    "omega={w} k={k}: truncation flag {} but bound is {bound}",
                    fam.truncated
                ));
            }
        }
    }
    conclude("criterion 5", started, Duration::from_secs(600), &failures);
}

#[test]
fn criterion_06_product_families() {
    let started = Instant::now();
    let mut failures = report_failures(&product_family_exactness());
    let part1 = psd_product_part1(
        6,
        &[
            (Rule::Psd, 1),
            (Rule::Psd, 2),
            (Rule::Standard, 1),
            (Rule::Standard, 2),
        ],
    );
    failures.extend(report_failures(&part1));
    conclude("criterion 6", started, Duration::from_secs(600), &failures);
}

#[test]
fn criterion_07_schedule_lemmas() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let sync = synchronous_optimality(
        5,
        &[
            Rule::Standard,
            Rule::Psd,
            Rule::Skew,
            Rule::KForcing(2),
            Rule::Bootstrap(2),
        ],
    );
    failures.extend(report_failures(&sync));
    let chains_report = induced_path_chains(5, &[Rule::Standard, Rule::KForcing(1)]);
    failures.extend(report_failures(&chains_report));
    let max_chain = max_chain_census(5, &[1, 2, 3]);
    failures.extend(report_failures(&max_chain));
    conclude("criterion 7", started, Duration::from_secs(1200), &failures);
}

/// The stated claim extends the induced-path property to skew forcing: every
/// uniformly-fastest skew chain induces a path. The engine refutes it, so
/// this test is expected to fail and is kept as stated. Smallest violation:
/// the paw (triangle 1-2-3 with pendant 0 on 3) from blue {1}, where the
/// assignment forcing 3 from 2 yields the chain 1,2,3,0 with the chord 1-3.
/// On the bowtie (two triangles sharing a vertex) from one blue outer vertex
/// even the existential version fails: the in-force assignment is unique and
/// its chain induces a triangle — pinned by the green regression test
/// `uniformly_fastest_skew_chains_can_induce_triangles` in the invariants
/// suite. Chains of non-infection rules can run backward in time (a white
/// source forces before being forced itself), which is exactly the case the
/// induced-path argument cannot see; skew passes the four well-behavedness
/// falsifiers on this same census, and the property does hold exhaustively
/// for the standard rule and 1-forcing.
#[test]
fn criterion_07c_skew_chains_as_stated() {
    let started = Instant::now();
    let report = induced_path_chains(5, &[Rule::Skew]);
    let failures = report_failures(&report);
    conclude("criterion 7c (skew)", started, Duration::from_secs(1200), &failures);
}

#[test]
fn criterion_08_axiom_flags() {
    let started = Instant::now();
    let report = axiom_flag_audit(5);
    let failures = report_failures(&report);
    conclude("criterion 8", started, Duration::from_secs(1200), &failures);
}

#[test]
fn criterion_09_proof_claims_at_scale() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let corpus = structured_corpus(20260810);
    if corpus.len() != 50 {
        failures.push(format!("structured corpus has {} graphs, expected 50", corpus.len()));
    }
    let scale = proof_claims_at_scale(20260810, 200, 4);
    failures.extend(report_failures(&scale));
    if scale.instances_checked == 0 {
        failures.push("no extractions were exercised at scale".into());
    }
    for rule in [Rule::Psd, Rule::Standard] {
        let census = proof_claims_census(6, rule, 2);
        failures.extend(report_failures(&census));
    }
    conclude("criterion 9", started, Duration::from_secs(1800), &failures);
}

#[test]
fn criterion_10_deterministic_output() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let serial = product_sum_survey(7, 1);
    let parallel = product_sum_survey(7, 8);
    if serial.records_text() != parallel.records_text() {
        failures.push("records differ between 1 and 8 workers".into());
    }
    if serial.records_text().is_empty() {
        failures.push("no records produced".into());
    }
    conclude("criterion 10", started, Duration::from_secs(1800), &failures);
}
