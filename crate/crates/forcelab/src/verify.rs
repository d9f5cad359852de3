//! Census-scale verification drivers. Each driver sweeps an exhaustive corpus
//! (or a seeded sample), emits one deterministic record per unit of work, and
//! collects counterexamples. The CLI `verify` subcommand and the acceptance
//! suite both run these.

use crate::axioms::{falsify_axiom, report_to_text, Axiom, SearchBudget, Verdict};
use crate::canon::isomorphic;
use crate::census::{census_through, enumerate_graphs};
use crate::forbidden::{
    check_big_step_yields_member, check_long_chain_yields_member, enumerate_product_family,
    family_contains_member, family_keys, family_to_text,
    make_standard_witness, minimalize, savings, verify_characterization, weighted_order_bound,
    Family, FamilyKind,
};
use crate::graph::{Graph, VertexSet};
use crate::graph6::to_graph6;
use crate::propagation::{
    chains, check_internally_independent, closure, enumerate_schedules,
    enumerate_uniformly_fastest, max_chain_equals_pt, min_propagation_time, uniformly_fastest,
    IndependenceCheck,
};
use crate::rules::{builtin_rules, Rule};
use crate::throttling::{size_at_pt, throttle_product, throttle_weighted, Weight};
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Outcome of one verification sweep.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub instances_checked: u64,
    pub records: Vec<String>,
    pub counterexamples: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn records_text(&self) -> String {
        let mut out = self.records.join("\n");
        if !out.is_empty() {
            out.push('\n');
        }
        out
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} instances checked, {} counterexamples",
            self.name,
            self.instances_checked,
            self.counterexamples.len()
        )
    }
}

fn pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
}

/// The standard omega grid used by the savings and witness sweeps.
pub fn omega_grid() -> Vec<Weight> {
    vec![
        Weight::ZERO,
        Weight::from_ratio(1, 2).expect("valid"),
        Weight::ONE,
        Weight::from_ratio(2, 1).expect("valid"),
    ]
}

// --- product throttling vs size-at-pt-1 ------------------------------------------

/// For every census graph: the standard product throttling number equals the
/// least size of a forcing set with propagation time one (both infinite when
/// no proper forcing subset exists), and finite values are at least
/// `ceil(n/2)`.
pub fn product_sum_survey(max_order: usize, workers: usize) -> CheckReport {
    let census = census_through(max_order).expect("census within limits");
    let results: Vec<(String, Option<String>)> = pool(workers).install(|| {
        census
            .par_iter()
            .map(|g| {
                let n = g.order();
                let code = to_graph6(g).expect("census encodes");
                let thstar = throttle_product(Rule::Standard, g).objective;
                let k1 = size_at_pt(Rule::Standard, g, 1).objective;
                let half = (n as i64 + 1) / 2;
                let consistent = thstar == k1;
                let half_ok = match k1.as_integer() {
                    Some(v) => v >= half,
                    None => true,
                };
                let record = format!(
                    "g6={code} n={n} thstar={thstar} k_pt1={k1} equal={consistent} halfbound={half_ok}"
                );
                let failure = if consistent && half_ok {
                    None
                } else {
                    Some(record.clone())
                };
                (record, failure)
            })
            .collect()
    });
    let mut records = Vec::with_capacity(results.len());
    let mut counterexamples = Vec::new();
    for (record, failure) in results {
        records.push(record);
        if let Some(f) = failure {
            counterexamples.push(f);
        }
    }
    CheckReport {
        name: format!("product-sum-z(max_order={max_order})"),
        instances_checked: records.len() as u64,
        records,
        counterexamples,
    }
}

// --- product families ----------------------------------------------------------

/// Containment of a product-family member forces `th* <= |V| - k` on the census.
pub fn psd_product_part1(census_max: usize, configs: &[(Rule, u32)]) -> CheckReport {
    let mut records = Vec::new();
    let mut counterexamples = Vec::new();
    let mut instances = 0u64;
    for &(rule, k) in configs {
        let family = enumerate_product_family(rule, k).expect("enumerable");
        let census = census_through(census_max).expect("census");
        let mut contained = 0usize;
        for g in &census {
            if (g.order() as i64) < k as i64 {
                continue;
            }
            instances += 1;
            if family_contains_member(&family, g).is_none() {
                continue;
            }
            contained += 1;
            let thp = throttle_product(rule, g).objective;
            let bound = Rational64::from_integer(g.order() as i64 - k as i64);
            let ok = thp.as_rational().map(|v| v <= bound).unwrap_or(false);
            if !ok {
                counterexamples.push(format!(
                    "rule={} k={k} g6={} thstar={thp} exceeds n-k",
                    rule.selector(),
                    to_graph6(g).expect("encodes")
                ));
            }
        }
        records.push(format!(
            "rule={} k={k} members={} census_contained={contained}",
            rule.selector(),
            family.members.len()
        ));
    }
    CheckReport {
        name: format!("psd-product-part1(max_order={census_max})"),
        instances_checked: instances,
        records,
        counterexamples,
    }
}

/// Exact membership facts for the small product families.
pub fn product_family_exactness() -> CheckReport {
    let mut counterexamples = Vec::new();
    let mut records = Vec::new();
    let psd1 = enumerate_product_family(Rule::Psd, 1).expect("enumerable");
    if psd1.members.len() != 1
        || !isomorphic(&psd1.members[0], &Graph::complete(2)).expect("small")
    {
        counterexamples.push(format!(
            "psd k=1 family should be exactly one edge, got {} members",
            psd1.members.len()
        ));
    }
    records.push(format!("psd k=1 members={}", psd1.members.len()));
    let psd2 = enumerate_product_family(Rule::Psd, 2).expect("enumerable");
    let z2 = enumerate_product_family(Rule::Standard, 2).expect("enumerable");
    let has = |fam: &Family, g: &Graph| -> bool {
        crate::forbidden::family_has_isomorph(fam, g)
    };
    if !has(&psd2, &Graph::matching(2)) {
        counterexamples.push("psd k=2 family lacks the two-edge matching".into());
    }
    if !has(&z2, &Graph::matching(2)) {
        counterexamples.push("standard k=2 family lacks the two-edge matching".into());
    }
    if !has(&psd2, &Graph::path(3)) {
        counterexamples.push("psd k=2 family lacks the 3-path".into());
    }
    if has(&z2, &Graph::path(3)) {
        counterexamples.push("standard k=2 family wrongly includes the 3-path".into());
    }
    records.push(format!(
        "psd k=2 members={} standard k=2 members={}",
        psd2.members.len(),
        z2.members.len()
    ));
    CheckReport {
        name: "product-family-exactness".into(),
        instances_checked: records.len() as u64,
        records,
        counterexamples,
    }
}

// --- savings ---------------------------------------------------------------------

/// Two-route comparison: `th^w(G) < n - k` (optimizer route) iff the best
/// per-step savings sum over forcing sets exceeds `k` (schedule route).
pub fn savings_lemma(census_max: usize, omegas: &[Weight], ks: &[i64]) -> CheckReport {
    let mut counterexamples = Vec::new();
    let mut records = Vec::new();
    let mut instances = 0u64;
    for n in 1..=census_max {
        for g in enumerate_graphs(n).expect("census").iter() {
            let code = to_graph6(g).expect("encodes");
            // Propagation times of every forcing set, computed once.
            let forcing: Vec<(VertexSet, u32)> = (0u128..(1u128 << n))
                .filter_map(|bits| {
                    let b = VertexSet::from_bits(bits);
                    min_propagation_time(Rule::Standard, g, b).map(|(pt, _)| (b, pt))
                })
                .collect();
            for &w in omegas {
                let th = throttle_weighted(Rule::Standard, g, w)
                    .objective
                    .as_rational()
                    .expect("finite");
                let best_savings = forcing
                    .iter()
                    .map(|&(b, _)| {
                        let (_, schedule) =
                            min_propagation_time(Rule::Standard, g, b).expect("forcing");
                        savings(&schedule, w)
                    })
                    .max()
                    .expect("full set is forcing");
                for &k in ks {
                    instances += 1;
                    let below = th < Rational64::from_integer(n as i64 - k);
                    let gain = best_savings > Rational64::from_integer(k);
                    if below != gain {
                        counterexamples.push(format!(
                            "g6={code} omega={w} k={k} th={th} best_savings={best_savings}"
                        ));
                    }
                }
            }
            records.push(format!("g6={code} n={n} forcing_sets={}", forcing.len()));
        }
    }
    CheckReport {
        name: format!("savings-lemma(max_order={census_max})"),
        instances_checked: instances,
        records,
        counterexamples,
    }
}

/// On small orders the maximum savings over all schedules must agree with the
/// maximum over minimum-pt schedules.
pub fn savings_all_schedules_consistency(census_max: usize, omegas: &[Weight]) -> CheckReport {
    let mut counterexamples = Vec::new();
    let mut instances = 0u64;
    for n in 1..=census_max {
        for g in enumerate_graphs(n).expect("census").iter() {
            for bits in 0u128..(1u128 << n) {
                let b = VertexSet::from_bits(bits);
                let all = enumerate_schedules(Rule::Standard, g, b);
                if all.is_empty() {
                    continue;
                }
                let Some((_, fastest)) = min_propagation_time(Rule::Standard, g, b) else {
                    counterexamples.push(format!(
                        "g6={} blue={b}: schedules exist but synchronous reports non-forcing",
                        to_graph6(g).expect("encodes")
                    ));
                    continue;
                };
                for &w in omegas {
                    instances += 1;
                    let via_min = savings(&fastest, w);
                    let via_all = all.iter().map(|s| savings(s, w)).max().expect("nonempty");
                    if via_all != via_min {
                        counterexamples.push(format!(
                            "g6={} blue={b} omega={w}: all-schedule max {via_all} != min-pt {via_min}",
                            to_graph6(g).expect("encodes")
                        ));
                    }
                }
            }
        }
    }
    CheckReport {
        name: format!("savings-all-schedules(max_order={census_max})"),
        instances_checked: instances,
        records: vec![],
        counterexamples,
    }
}

// --- standard witnesses ------------------------------------------------------------

/// Every census instance below the threshold upgrades to a standard witness.
pub fn witness_lemma(
    census_max: usize,
    rules: &[Rule],
    omegas: &[Weight],
    ks: &[i64],
) -> CheckReport {
    let mut counterexamples = Vec::new();
    let mut records = Vec::new();
    let mut instances = 0u64;
    for n in 1..=census_max {
        for g in enumerate_graphs(n).expect("census").iter() {
            let code = to_graph6(g).expect("encodes");
            for &rule in rules {
                let mut upgraded = 0u64;
                for bits in 0u128..(1u128 << n) {
                    let b = VertexSet::from_bits(bits);
                    let Some((pt, schedule)) = min_propagation_time(rule, g, b) else {
                        continue;
                    };
                    for &w in omegas {
                        let objective = Rational64::from_integer(b.len() as i64)
                            + w.value() * Rational64::from_integer(pt as i64);
                        for &k in ks {
                            if objective >= Rational64::from_integer(n as i64 - k) {
                                continue;
                            }
                            instances += 1;
                            upgraded += 1;
                            match make_standard_witness(rule, g, b, &schedule, w, k) {
                                Ok(wr) if wr.is_standard => {}
                                Ok(wr) => counterexamples.push(format!(
                                    "rule={} g6={code} blue={b} omega={w} k={k}: constructed {} is not standard",
                                    rule.selector(),
                                    wr.blue
                                )),
                                Err(e) => counterexamples.push(format!(
                                    "rule={} g6={code} blue={b} omega={w} k={k}: {e}",
                                    rule.selector()
                                )),
                            }
                        }
                    }
                }
                records.push(format!(
                    "rule={} g6={code} upgraded={upgraded}",
                    rule.selector()
                ));
            }
        }
    }
    CheckReport {
        name: format!("witness-lemma(max_order={census_max})"),
        instances_checked: instances,
        records,
        counterexamples,
    }
}

// --- weighted characterization ------------------------------------------------------

/// Full characterization sweep for one (rule, k, omega): enumerate the family,
/// minimalize, compare the containment predicate with the direct threshold on
/// the census, and check members against the order bound.
pub fn characterization_sweep(rule: Rule, k: u32, w: Weight, census_max: usize) -> CheckReport {
    let mut counterexamples = Vec::new();
    let mut records = Vec::new();
    let report = verify_characterization(rule, k, FamilyKind::Weighted(w), census_max)
        .expect("enumerable configuration");
    for f in &report.failures {
        counterexamples.push(format!("g6={} {}", f.graph6, f.detail));
    }
    let bound = weighted_order_bound(k, w);
    for m in &report.family.members {
        if Rational64::from_integer(m.order() as i64) > bound {
            counterexamples.push(format!(
                "member {} exceeds order bound {bound}",
                to_graph6(m).expect("encodes")
            ));
        }
    }
    let minimal_size = report.minimal_family.as_ref().map(|f| f.members.len());
    records.push(format!(
        "rule={} k={k} omega={w} members={} minimal={:?} bound={bound} truncated={} checked={}",
        rule.selector(),
        report.family.members.len(),
        minimal_size,
        report.family.truncated,
        report.graphs_checked
    ));
    CheckReport {
        name: format!("characterization(rule={}, k={k}, omega={w})", rule.selector()),
        instances_checked: report.graphs_checked as u64,
        records,
        counterexamples,
    }
}

/// Two enumerations of the same family must serialize identically, and the
/// minimal family must induce the same containment predicate as the full one.
pub fn family_determinism(rule: Rule, k: u32, w: Weight) -> CheckReport {
    let mut counterexamples = Vec::new();
    let fam1 = crate::forbidden::enumerate_weighted_family(rule, k, w, 8).expect("enumerable");
    let fam2 = crate::forbidden::enumerate_weighted_family(rule, k, w, 8).expect("enumerable");
    if family_to_text(&fam1) != family_to_text(&fam2) {
        counterexamples.push("re-enumeration produced different family text".into());
    }
    if !fam1.truncated {
        let min = minimalize(&fam1).expect("complete family");
        if family_keys(&min)
            .iter()
            .any(|k| !family_keys(&fam1).contains(k))
        {
            counterexamples.push("minimal family is not a subset of the full family".into());
        }
    }
    CheckReport {
        name: format!("family-determinism(rule={}, k={k})", rule.selector()),
        instances_checked: 1,
        records: vec![family_to_text(&fam1)],
        counterexamples,
    }
}

// --- schedule lemmas -----------------------------------------------------------------

/// (a) synchronous saturation attains the minimum propagation time over all
/// schedules, and (b) the constructed uniformly-fastest schedule colors every
/// vertex no later than any enumerated schedule.
pub fn synchronous_optimality(max_order: usize, rules: &[Rule]) -> CheckReport {
    let mut counterexamples = Vec::new();
    let mut instances = 0u64;
    for n in 1..=max_order {
        for g in enumerate_graphs(n).expect("census").iter() {
            let code = to_graph6(g).expect("encodes");
            for &rule in rules {
                for bits in 0u128..(1u128 << n) {
                    let b = VertexSet::from_bits(bits);
                    let all = enumerate_schedules(rule, g, b);
                    let sync = min_propagation_time(rule, g, b);
                    match (&sync, all.is_empty()) {
                        (None, true) => continue,
                        (None, false) => {
                            counterexamples.push(format!(
                                "rule={} g6={code} blue={b}: schedules exist but saturation stalls",
                                rule.selector()
                            ));
                            continue;
                        }
                        (Some(_), true) => {
                            counterexamples.push(format!(
                                "rule={} g6={code} blue={b}: saturation succeeds but no schedule enumerated",
                                rule.selector()
                            ));
                            continue;
                        }
                        (Some(_), false) => {}
                    }
                    instances += 1;
                    let (sync_pt, _) = sync.expect("checked");
                    let enumerated_min = all
                        .iter()
                        .map(|s| s.propagation_time())
                        .min()
                        .expect("nonempty");
                    if sync_pt != enumerated_min {
                        counterexamples.push(format!(
                            "rule={} g6={code} blue={b}: synchronous pt {sync_pt} != enumerated min {enumerated_min}",
                            rule.selector()
                        ));
                    }
                    let fastest = uniformly_fastest(rule, g, b).expect("forcing, simple rule");
                    for s in &all {
                        for v in (g.vertices() - b).iter() {
                            let fast_step = fastest.step_of(v).expect("colored");
                            let other_step = s.step_of(v).expect("colored");
                            if fast_step > other_step {
                                counterexamples.push(format!(
                                    "rule={} g6={code} blue={b}: vertex {v} later in the fastest schedule ({fast_step} > {other_step})",
                                    rule.selector()
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    CheckReport {
        name: format!("synchronous-optimality(max_order={max_order})"),
        instances_checked: instances,
        records: vec![],
        counterexamples,
    }
}

/// Every chain of every uniformly-fastest schedule induces a path, for the
/// local-symmetric-simple rules. All uniformly-fastest force sets are
/// enumerated, not just the engine's canonical assignment.
pub fn induced_path_chains(max_order: usize, rules: &[Rule]) -> CheckReport {
    let mut counterexamples = Vec::new();
    let mut instances = 0u64;
    for n in 1..=max_order {
        for g in enumerate_graphs(n).expect("census").iter() {
            let code = to_graph6(g).expect("encodes");
            for &rule in rules {
                for bits in 0u128..(1u128 << n) {
                    let b = VertexSet::from_bits(bits);
                    if uniformly_fastest(rule, g, b).is_err() {
                        continue;
                    }
                    for schedule in enumerate_uniformly_fastest(rule, g, b) {
                        instances += 1;
                        match check_internally_independent(rule, g, &schedule) {
                            Ok(IndependenceCheck::AllChainsInducePaths) => {}
                            Ok(IndependenceCheck::Violation(chain)) => {
                                counterexamples.push(format!(
                                    "rule={} g6={code} blue={b}: chain {chain:?} does not induce a path",
                                    rule.selector()
                                ));
                            }
                            Err(e) => counterexamples.push(format!(
                                "rule={} g6={code}: {e}",
                                rule.selector()
                            )),
                        }
                    }
                }
            }
        }
    }
    CheckReport {
        name: format!("induced-path-chains(max_order={max_order})"),
        instances_checked: instances,
        records: vec![],
        counterexamples,
    }
}

/// Propagation time equals the longest chain of the recency-assigned
/// uniformly-fastest schedule for bootstrap percolation.
pub fn max_chain_census(max_order: usize, radii: &[u32]) -> CheckReport {
    let mut counterexamples = Vec::new();
    let mut instances = 0u64;
    for n in 1..=max_order {
        for g in enumerate_graphs(n).expect("census").iter() {
            let code = to_graph6(g).expect("encodes");
            for &r in radii {
                let rule = Rule::Bootstrap(r);
                for bits in 0u128..(1u128 << n) {
                    let b = VertexSet::from_bits(bits);
                    if !crate::propagation::is_forcing_set(rule, g, b) {
                        continue;
                    }
                    instances += 1;
                    match max_chain_equals_pt(rule, g, b) {
                        Ok(true) => {}
                        Ok(false) => counterexamples.push(format!(
                            "r={r} g6={code} blue={b}: longest chain shorter than pt"
                        )),
                        Err(e) => counterexamples.push(format!("r={r} g6={code}: {e}")),
                    }
                }
            }
        }
    }
    CheckReport {
        name: format!("max-chain(max_order={max_order})"),
        instances_checked: instances,
        records: vec![],
        counterexamples,
    }
}

/// Chain lengths never exceed the propagation time for infection rules, on
/// every schedule of every forcing set.
pub fn chain_length_bound(max_order: usize, rules: &[Rule]) -> CheckReport {
    let mut counterexamples = Vec::new();
    let mut instances = 0u64;
    for n in 1..=max_order {
        for g in enumerate_graphs(n).expect("census").iter() {
            for &rule in rules {
                for bits in 0u128..(1u128 << n) {
                    let b = VertexSet::from_bits(bits);
                    for s in enumerate_schedules(rule, g, b) {
                        instances += 1;
                        let (_, longest) = chains(&s);
                        if longest as u32 > s.propagation_time() {
                            counterexamples.push(format!(
                                "rule={} g6={} blue={b}: chain length {longest} exceeds pt {}",
                                rule.selector(),
                                to_graph6(g).expect("encodes"),
                                s.propagation_time()
                            ));
                        }
                    }
                }
            }
        }
    }
    CheckReport {
        name: format!("chain-length-bound(max_order={max_order})"),
        instances_checked: instances,
        records: vec![],
        counterexamples,
    }
}

// --- axiom flags -------------------------------------------------------------------

/// Declared-positive flags must survive the falsifier; the two declared
/// negatives must be falsified on their known witnesses.
pub fn axiom_flag_audit(max_order: usize) -> CheckReport {
    let corpus = census_through(max_order).expect("census");
    let budget = SearchBudget::default();
    let mut counterexamples = Vec::new();
    let mut records = Vec::new();
    let mut instances = 0u64;
    for rule in builtin_rules() {
        for axiom in Axiom::declared_for(rule) {
            let report = falsify_axiom(rule, axiom, &corpus, budget).expect("applicable");
            instances += report.instances_checked;
            records.push(report_to_text(&report));
            if let Verdict::Falsified(w) = &report.verdict {
                counterexamples.push(format!(
                    "declared flag {axiom} of {} falsified on {}: {}",
                    rule.selector(),
                    to_graph6(&w.graph).expect("encodes"),
                    w.detail
                ));
            }
        }
    }
    for (rule, axiom) in Axiom::declared_negatives() {
        let report = falsify_axiom(rule, axiom, &corpus, budget).expect("applicable");
        instances += report.instances_checked;
        records.push(report_to_text(&report));
        match &report.verdict {
            Verdict::Falsified(w) => {
                if !crate::axioms::replay_witness(rule, w) {
                    counterexamples.push(format!(
                        "witness for negative ({}, {axiom}) does not replay",
                        rule.selector()
                    ));
                }
                let expected: Graph = match (rule, axiom) {
                    (Rule::Psd, Axiom::Local) => Graph::cycle(4),
                    (Rule::Hopping, Axiom::Simple) => Graph::empty_graph(3),
                    _ => w.graph.clone(),
                };
                if !isomorphic(&w.graph, &expected).expect("small") {
                    counterexamples.push(format!(
                        "negative ({}, {axiom}) falsified on unexpected graph {}",
                        rule.selector(),
                        to_graph6(&w.graph).expect("encodes")
                    ));
                }
            }
            Verdict::NoCounterexampleFound => counterexamples.push(format!(
                "declared negative ({}, {axiom}) was not falsified",
                rule.selector()
            )),
        }
    }
    CheckReport {
        name: format!("axiom-flags(max_order={max_order})"),
        instances_checked: instances,
        records,
        counterexamples,
    }
}

// --- proof-claim checks at scale ------------------------------------------------------

/// The structured-graph corpus: paths, cycles, 2 x m grids, and seeded random
/// trees with orders in (96, 120].
pub fn structured_corpus(seed: u64) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in (97..=120).step_by(2) {
        out.push((format!("path-{n}"), Graph::path(n)));
    }
    out.push(("path-120".into(), Graph::path(120)));
    for n in (98..=120).step_by(2) {
        out.push((format!("cycle-{n}"), Graph::cycle(n)));
    }
    for m in 49..=60 {
        out.push((format!("grid-2x{m}"), Graph::grid_2xm(m)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..13 {
        let n = rng.gen_range(97..=120);
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        out.push((format!("tree-{i}-{n}"), Graph::tree_from_pruefer(&seq)));
    }
    out
}

/// Samples a forcing set of density one half; falls back to completing the
/// closure when sampling keeps missing.
fn sample_forcing_set(rule: Rule, g: &Graph, rng: &mut ChaCha8Rng) -> VertexSet {
    for _ in 0..50 {
        let mut b = VertexSet::EMPTY;
        for v in 0..g.order() {
            if rng.gen_bool(0.5) {
                b.insert(v);
            }
        }
        if closure(rule, g, b) == g.vertices() {
            return b;
        }
    }
    let mut b = VertexSet::EMPTY;
    for v in 0..g.order() {
        if rng.gen_bool(0.5) {
            b.insert(v);
        }
    }
    b | (g.vertices() - closure(rule, g, b))
}

/// Sampled check of the two structural claims behind the product-throttling
/// characterization at `k = 2` for the positive-semidefinite rule: in a
/// uniformly-fastest schedule, every chain of `3k - 1` vertices and every
/// step with `k` or more forces must exhibit a member of the product family
/// (propagation time one, `k` forces, at most `2k` vertices) when extracted.
/// Graphs containing a family member are recorded as non-free; on a free
/// graph the direct bounds (chains at most `3k - 2` vertices, steps at most
/// `k - 1` forces) are asserted outright.
pub fn proof_claims_at_scale(seed: u64, samples_per_graph: usize, workers: usize) -> CheckReport {
    let k = 2u32;
    let rule = Rule::Psd;
    let family = enumerate_product_family(rule, k).expect("enumerable");
    let corpus = structured_corpus(seed);
    let results: Vec<(String, Vec<String>, u64)> = pool(workers).install(|| {
        corpus
            .par_iter()
            .enumerate()
            .map(|(idx, (name, g))| {
                let mut counterexamples = Vec::new();
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((idx as u64 + 1) << 32));
                let free = family_contains_member(&family, g).is_none();
                let mut max_chain_vertices = 0usize;
                let mut max_step_forces = 0usize;
                let mut extractions = 0u64;
                for _ in 0..samples_per_graph {
                    let b = sample_forcing_set(rule, g, &mut rng);
                    let schedule = uniformly_fastest(rule, g, b).expect("forcing by construction");
                    let (all_chains, _) = chains(&schedule);
                    for chain in &all_chains {
                        max_chain_vertices = max_chain_vertices.max(chain.len());
                        if chain.len() >= 3 * k as usize - 1 {
                            if free {
                                counterexamples.push(format!(
                                    "{name}: member-free graph has a chain of {} vertices",
                                    chain.len()
                                ));
                            }
                            extractions += 1;
                            if let Err(e) = check_long_chain_yields_member(rule, g, chain, k) {
                                counterexamples.push(format!(
                                    "{name}: chain extraction failed: {e}"
                                ));
                            }
                        }
                    }
                    for (i, step) in schedule.steps.iter().enumerate() {
                        max_step_forces = max_step_forces.max(step.forces.len());
                        if step.forces.len() >= k as usize {
                            if free {
                                counterexamples.push(format!(
                                    "{name}: member-free graph has a step with {} forces",
                                    step.forces.len()
                                ));
                            }
                            extractions += 1;
                            if let Err(e) =
                                check_big_step_yields_member(rule, g, &schedule, i, k)
                            {
                                counterexamples.push(format!(
                                    "{name}: step extraction failed: {e}"
                                ));
                            }
                        }
                    }
                }
                let record = format!(
                    "graph={name} n={} free={free} max_chain_vertices={max_chain_vertices} max_step_forces={max_step_forces} extractions={extractions}",
                    g.order()
                );
                (record, counterexamples, extractions)
            })
            .collect()
    });
    let mut records = Vec::new();
    let mut counterexamples = Vec::new();
    let mut instances = 0u64;
    for (record, fails, extractions) in results {
        records.push(record);
        counterexamples.extend(fails);
        instances += extractions;
    }
    CheckReport {
        name: format!("proof-claims-at-scale(seed={seed})"),
        instances_checked: instances,
        records,
        counterexamples,
    }
}

/// Census-scale direct form of the same claims: on member-free graphs, every
/// uniformly-fastest schedule of every forcing set keeps chains at or below
/// `3k - 2` vertices and steps at or below `k - 1` forces.
pub fn proof_claims_census(census_max: usize, rule: Rule, k: u32) -> CheckReport {
    let family = enumerate_product_family(rule, k).expect("enumerable");
    let mut counterexamples = Vec::new();
    let mut instances = 0u64;
    let mut free_graphs = 0usize;
    for n in 1..=census_max {
        for g in enumerate_graphs(n).expect("census").iter() {
            if family_contains_member(&family, g).is_some() {
                continue;
            }
            free_graphs += 1;
            for bits in 0u128..(1u128 << n) {
                let b = VertexSet::from_bits(bits);
                let Ok(schedule) = uniformly_fastest(rule, g, b) else {
                    continue;
                };
                instances += 1;
                let (all_chains, _) = chains(&schedule);
                if let Some(c) = all_chains.iter().find(|c| c.len() > 3 * k as usize - 2) {
                    counterexamples.push(format!(
                        "rule={} g6={} blue={b}: free graph has chain {c:?}",
                        rule.selector(),
                        to_graph6(g).expect("encodes")
                    ));
                }
                if let Some(step) = schedule
                    .steps
                    .iter()
                    .find(|s| s.forces.len() > k as usize - 1)
                {
                    counterexamples.push(format!(
                        "rule={} g6={} blue={b}: free graph step has {} forces",
                        rule.selector(),
                        to_graph6(g).expect("encodes"),
                        step.forces.len()
                    ));
                }
            }
        }
    }
    CheckReport {
        name: format!(
            "proof-claims-census(rule={}, k={k}, max_order={census_max}, free_graphs={free_graphs})",
            rule.selector()
        ),
        instances_checked: instances,
        records: vec![],
        counterexamples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn survey_clean_through_order_five() {
        let report = product_sum_survey(5, 2);
        assert!(report.passed(), "{:?}", report.counterexamples);
        assert_eq!(report.records.len(), 1 + 2 + 4 + 11 + 34);
    }

    #[test]
    fn survey_deterministic_across_worker_counts() {
        let a = product_sum_survey(4, 1);
        let b = product_sum_survey(4, 4);
        assert_eq!(a.records_text(), b.records_text());
    }

    #[test]
    fn savings_lemma_small() {
        let report = savings_lemma(4, &omega_grid(), &[0, 1, 2]);
        assert!(report.passed(), "{:?}", report.counterexamples);
    }

    #[test]
    fn witness_lemma_small() {
        let report = witness_lemma(4, &[Rule::Standard, Rule::Psd], &omega_grid(), &[0, 1, 2]);
        assert!(report.passed(), "{:?}", report.counterexamples);
    }

    #[test]
    fn proof_claim_sampling_exercises_extractions() {
        let report = proof_claims_at_scale(11, 3, 2);
        assert!(report.passed(), "{:?}", report.counterexamples);
        assert_eq!(report.records.len(), 50);
        // Dense random forcing sets on big structured graphs always produce
        // multi-force steps, so extractions must actually run.
        assert!(report.instances_checked > 0);
        for r in &report.records {
            println!("{r}");
            assert!(r.contains("free=false"), "{r}");
        }
    }

    #[test]
    fn structured_corpus_is_fifty_graphs_in_range() {
        let corpus = structured_corpus(7);
        assert_eq!(corpus.len(), 50);
        for (name, g) in &corpus {
            assert!(
                g.order() > 96 && g.order() <= 120,
                "{name} has order {}",
                g.order()
            );
            assert!(g.is_connected(), "{name} should be connected");
        }
        // Same seed, same corpus.
        let again = structured_corpus(7);
        for ((n1, g1), (n2, g2)) in corpus.iter().zip(again.iter()) {
            assert_eq!(n1, n2);
            assert_eq!(g1, g2);
        }
    }
}
