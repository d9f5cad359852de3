//! Forbidden-induced-subgraph machinery for high throttling numbers: savings,
//! standard witnesses, enumeration of the characterizing families (weighted
//! and product), minimalization, and census verification.

use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::census::{enumerate_graphs, CensusError, INTERNAL_ENUMERATION_MAX};
use crate::graph::{subsets_of_size, Graph, GraphError, VertexSet};
use crate::graph6::to_graph6;
use crate::propagation::{enumerate_schedules, min_propagation_time, ForceSchedule};
use crate::rules::Rule;
use crate::subgraph::contains_induced;
use crate::throttling::{throttle_weighted, Weight};
use num_rational::Rational64;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ForbiddenError {
    #[error("rule {0} is not declared well behaved; standard witnesses require it")]
    NotWellBehaved(Rule),
    #[error("instance does not satisfy th^w(G;B) < |V| - k (objective {objective}, threshold {threshold})")]
    ThresholdNotMet {
        objective: Rational64,
        threshold: Rational64,
    },
    #[error("{blue} is not a forcing set under {rule}")]
    NotForcing { rule: Rule, blue: VertexSet },
    #[error("family is truncated at order {cap} (bound {bound}); minimality would be unsound")]
    Truncated { cap: usize, bound: usize },
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Sum over time steps of `|F^(i)| - w`. Since the steps partition the
/// non-initial vertices, this equals `|V| - |B| - w * pt`, but it is computed
/// from the recorded step sizes so the two routes can be compared.
pub fn savings(schedule: &ForceSchedule, w: Weight) -> Rational64 {
    let mut total = Rational64::zero();
    for step in &schedule.steps {
        total += Rational64::from_integer(step.forced.len() as i64) - w.value();
    }
    total
}

/// A blue set together with a schedule and the standard-witness verdict for
/// the threshold `th^w(G;B) < |V| - k`.
#[derive(Clone, Debug)]
pub struct WitnessRecord {
    pub blue: VertexSet,
    pub schedule: ForceSchedule,
    pub omega: Weight,
    pub k: i64,
    pub is_standard: bool,
}

fn weighted_objective(blue: VertexSet, pt: u32, w: Weight) -> Rational64 {
    Rational64::from_integer(blue.len() as i64) + w.value() * Rational64::from_integer(pt as i64)
}

/// Decides whether `blue` is a standard witness for `th^w(G) < |V| - k`:
/// some schedule realizing `pt(G;blue)` gains strictly more than `w` vertices
/// every step, and the objective beats the threshold. The synchronous
/// schedule is tried first; if it has a deficient step, every minimum-pt
/// schedule is searched.
pub fn is_standard_witness(rule: Rule, g: &Graph, blue: VertexSet, w: Weight, k: i64) -> bool {
    let Some((pt, schedule)) = min_propagation_time(rule, g, blue) else {
        return false;
    };
    let threshold = Rational64::from_integer(g.order() as i64 - k);
    if weighted_objective(blue, pt, w) >= threshold {
        return false;
    }
    let all_steps_gain = |s: &ForceSchedule| {
        s.steps
            .iter()
            .all(|st| Rational64::from_integer(st.forced.len() as i64) - w.value() > Rational64::zero())
    };
    if all_steps_gain(&schedule) {
        return true;
    }
    enumerate_schedules(rule, g, blue)
        .iter()
        .any(|s| s.propagation_time() == pt && all_steps_gain(s))
}

/// Builds the standard witness `B' = B ∪ ⋃ { F^(i) : |F^(i)| - w <= 0 }`
/// from a schedule realizing `pt(G;B)`, and evaluates the witness predicate
/// on the result.
pub fn make_standard_witness(
    rule: Rule,
    g: &Graph,
    blue: VertexSet,
    schedule: &ForceSchedule,
    w: Weight,
    k: i64,
) -> Result<WitnessRecord, ForbiddenError> {
    if !rule.flags().well_behaved {
        return Err(ForbiddenError::NotWellBehaved(rule));
    }
    let threshold = Rational64::from_integer(g.order() as i64 - k);
    let objective = weighted_objective(blue, schedule.propagation_time(), w);
    if objective >= threshold {
        return Err(ForbiddenError::ThresholdNotMet {
            objective,
            threshold,
        });
    }
    let mut upgraded = blue;
    for step in &schedule.steps {
        if Rational64::from_integer(step.forced.len() as i64) - w.value() <= Rational64::zero() {
            upgraded |= step.forced;
        }
    }
    let (_, new_schedule) = min_propagation_time(rule, g, upgraded)
        .ok_or(ForbiddenError::NotForcing {
            rule,
            blue: upgraded,
        })?;
    let is_standard = is_standard_witness(rule, g, upgraded, w, k);
    Ok(WitnessRecord {
        blue: upgraded,
        schedule: new_schedule,
        omega: w,
        k,
        is_standard,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    Weighted(Weight),
    Product,
}

/// A deduplicated set of canonical graphs characterizing one throttling
/// threshold, with enumeration metadata.
#[derive(Clone, Debug)]
pub struct Family {
    pub rule: Rule,
    pub k: u32,
    pub kind: FamilyKind,
    /// Canonically labelled members, sorted by canonical key.
    pub members: Vec<Graph>,
    pub minimal: bool,
    /// Order bound actually enforced during enumeration.
    pub order_bound: usize,
    /// True when the mathematical bound exceeded the enumerable order.
    pub truncated: bool,
}

/// `2(k+1) + 2w(k+1)/(1 - w_frac)` — the order bound for the weighted family.
/// Specializes to `4k + 4` at `w = 1`.
pub fn weighted_order_bound(k: u32, w: Weight) -> Rational64 {
    let k1 = Rational64::from_integer(k as i64 + 1);
    let two = Rational64::from_integer(2);
    let denom = Rational64::from_integer(1) - w.fractional_part();
    two * k1 + two * w.value() * k1 / denom
}

/// All graphs up to the weighted order bound (capped at `order_cap`) whose
/// weighted throttling number is below `|V| - k`.
pub fn enumerate_weighted_family(
    rule: Rule,
    k: u32,
    w: Weight,
    order_cap: usize,
) -> Result<Family, ForbiddenError> {
    let bound_exact = weighted_order_bound(k, w);
    let bound = bound_exact.floor().to_integer().max(0) as usize;
    let cap = order_cap.min(INTERNAL_ENUMERATION_MAX);
    let effective = bound.min(cap);
    let truncated = bound > effective;
    let mut members = Vec::new();
    for n in 1..=effective {
        for g in enumerate_graphs(n)?.iter() {
            let cert = throttle_weighted(rule, g, w);
            let th = cert.objective.as_rational().expect("weighted th is finite");
            if th < Rational64::from_integer(n as i64 - k as i64) {
                members.push(g.clone());
            }
        }
    }
    Ok(Family {
        rule,
        k,
        kind: FamilyKind::Weighted(w),
        members,
        minimal: false,
        order_bound: effective,
        truncated,
    })
}

/// All graphs of order at most `2k` admitting a forcing set and schedule with
/// propagation time exactly one and `k` forces in that single step.
pub fn enumerate_product_family(rule: Rule, k: u32) -> Result<Family, ForbiddenError> {
    let bound = 2 * k as usize;
    let effective = bound.min(INTERNAL_ENUMERATION_MAX);
    let truncated = bound > effective;
    let mut members = Vec::new();
    for n in 1..=effective {
        if n < k as usize {
            continue;
        }
        let blue_size = n - k as usize;
        for g in enumerate_graphs(n)?.iter() {
            let is_member = subsets_of_size(n, blue_size).any(|b| {
                matches!(min_propagation_time(rule, g, b), Some((1, _)))
            });
            if is_member {
                members.push(g.clone());
            }
        }
    }
    Ok(Family {
        rule,
        k,
        kind: FamilyKind::Product,
        members,
        minimal: false,
        order_bound: effective,
        truncated,
    })
}

/// Keeps only members that properly contain no other member as an induced
/// subgraph. Refuses truncated families: a missing small member could make a
/// kept one non-minimal.
pub fn minimalize(family: &Family) -> Result<Family, ForbiddenError> {
    if family.truncated {
        return Err(ForbiddenError::Truncated {
            cap: family.order_bound,
            bound: usize::MAX,
        });
    }
    // Members are sorted by (order, key); scanning in order means each
    // candidate only needs testing against already-kept minimal members.
    let mut kept: Vec<Graph> = Vec::new();
    for g in &family.members {
        let dominated = kept
            .iter()
            .any(|m| m.order() < g.order() && contains_induced(m, g).is_some());
        if !dominated {
            kept.push(g.clone());
        }
    }
    Ok(Family {
        members: kept,
        minimal: true,
        ..family.clone()
    })
}

/// First member contained in `g` as an induced subgraph, with its embedding.
pub fn family_contains_member(family: &Family, g: &Graph) -> Option<(usize, Vec<usize>)> {
    family
        .members
        .iter()
        .enumerate()
        .find_map(|(i, m)| contains_induced(m, g).map(|phi| (i, phi)))
}

/// Serializes a family to its file form: a header line then one canonical
/// graph6 code per line, sorted.
pub fn family_to_text(family: &Family) -> String {
    let mut out = String::from("# ");
    out.push_str(&format!("rule={} ", family.rule.selector()));
    match family.kind {
        FamilyKind::Weighted(w) => {
            out.push_str(&format!("kind=weighted k={} omega={} ", family.k, w));
        }
        FamilyKind::Product => out.push_str(&format!("kind=product k={} ", family.k)),
    }
    out.push_str(&format!(
        "minimal={} order_bound={}",
        family.minimal, family.order_bound
    ));
    if family.truncated {
        out.push_str(" truncated=true");
    }
    out.push('\n');
    let mut keyed: Vec<(CanonicalForm, String)> = family
        .members
        .iter()
        .map(|g| {
            (
                canonical_form(g).expect("members within canon limit"),
                to_graph6(g).expect("members within graph6 limit"),
            )
        })
        .collect();
    keyed.sort();
    for (_, code) in keyed {
        out.push_str(&code);
        out.push('\n');
    }
    out
}

/// One counterexample from a characterization sweep.
#[derive(Clone, Debug)]
pub struct CharacterizationFailure {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CharacterizationReport {
    pub family: Family,
    pub minimal_family: Option<Family>,
    pub graphs_checked: usize,
    pub failures: Vec<CharacterizationFailure>,
}

/// Verifies the family characterization over the internal census up to
/// `census_max`. Weighted kind: `G` contains a member iff
/// `th^w(G) < |V| - k`, with the minimal and full families agreeing.
/// Product kind (one direction): containment implies
/// `th*(G) <= |V| - k`.
pub fn verify_characterization(
    rule: Rule,
    k: u32,
    kind: FamilyKind,
    census_max: usize,
) -> Result<CharacterizationReport, ForbiddenError> {
    let family = match kind {
        FamilyKind::Weighted(w) => enumerate_weighted_family(rule, k, w, INTERNAL_ENUMERATION_MAX)?,
        FamilyKind::Product => enumerate_product_family(rule, k)?,
    };
    let minimal_family = if family.truncated {
        None
    } else {
        Some(minimalize(&family)?)
    };
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for n in 1..=census_max {
        if n < k as usize {
            continue;
        }
        for g in enumerate_graphs(n)?.iter() {
            checked += 1;
            let code = to_graph6(g).expect("census graphs encode");
            let contains_full = family_contains_member(&family, g).is_some();
            if let Some(min_fam) = &minimal_family {
                let contains_min = family_contains_member(min_fam, g).is_some();
                if contains_min != contains_full {
                    failures.push(CharacterizationFailure {
                        graph6: code.clone(),
                        detail: format!(
                            "minimal/full containment disagree: minimal={contains_min} full={contains_full}"
                        ),
                    });
                    continue;
                }
            }
            match kind {
                FamilyKind::Weighted(w) => {
                    if family.truncated {
                        continue;
                    }
                    let th = throttle_weighted(rule, g, w)
                        .objective
                        .as_rational()
                        .expect("finite");
                    let below = th < Rational64::from_integer(n as i64 - k as i64);
                    if below != contains_full {
                        failures.push(CharacterizationFailure {
                            graph6: code,
                            detail: format!(
                                "th^w={th} threshold={} containment={contains_full}",
                                n as i64 - k as i64
                            ),
                        });
                    }
                }
                FamilyKind::Product => {
                    if contains_full {
                        let thp = crate::throttling::throttle_product(rule, g).objective;
                        let ok = thp
                            .as_rational()
                            .map(|v| v <= Rational64::from_integer(n as i64 - k as i64))
                            .unwrap_or(false);
                        if !ok {
                            failures.push(CharacterizationFailure {
                                graph6: code,
                                detail: format!("contains member but th*={thp} > n-k"),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(CharacterizationReport {
        family,
        minimal_family,
        graphs_checked: checked,
        failures,
    })
}

/// Membership evidence extracted from a long chain: the induced subgraph on
/// chain positions not divisible by three, forced in one step from positions
/// `1 mod 3`. Returns an error description when the extraction fails to
/// exhibit a family member.
pub fn check_long_chain_yields_member(
    rule: Rule,
    g: &Graph,
    chain: &[usize],
    k: u32,
) -> Result<(), String> {
    let need = 3 * k as usize - 1;
    if chain.len() < need {
        return Err(format!(
            "chain has {} vertices, need {need} for extraction",
            chain.len()
        ));
    }
    let prefix = &chain[..need];
    let mut keep = VertexSet::EMPTY;
    let mut blue_orig = VertexSet::EMPTY;
    for (idx0, &v) in prefix.iter().enumerate() {
        let pos = idx0 + 1;
        if pos % 3 != 0 {
            keep.insert(v);
        }
        if pos % 3 == 1 {
            blue_orig.insert(v);
        }
    }
    if keep.len() != 2 * k as usize {
        return Err(format!(
            "extracted vertex set has {} members, expected {}",
            keep.len(),
            2 * k
        ));
    }
    let (sub, map) = g.induced(keep);
    let blue_sub: VertexSet = map
        .iter()
        .enumerate()
        .filter(|(_, &orig)| blue_orig.contains(orig))
        .map(|(new, _)| new)
        .collect();
    match min_propagation_time(rule, &sub, blue_sub) {
        Some((1, _)) => Ok(()),
        Some((t, _)) => Err(format!("extracted subgraph has pt {t}, expected 1")),
        None => Err("extracted blue set is not forcing in the subgraph".into()),
    }
}

/// Membership evidence extracted from a step with at least `k` forces: the
/// first `k` forces' sources and targets induce a member forced in one step.
pub fn check_big_step_yields_member(
    rule: Rule,
    g: &Graph,
    schedule: &ForceSchedule,
    step_index: usize,
    k: u32,
) -> Result<(), String> {
    let step = schedule
        .steps
        .get(step_index)
        .ok_or_else(|| format!("no step {step_index}"))?;
    if step.forces.len() < k as usize {
        return Err(format!(
            "step has {} forces, need {k} for extraction",
            step.forces.len()
        ));
    }
    let picked = &step.forces[..k as usize];
    let mut keep = VertexSet::EMPTY;
    let mut blue_orig = VertexSet::EMPTY;
    for f in picked {
        keep.insert(f.source);
        keep.insert(f.target);
        blue_orig.insert(f.source);
    }
    if keep.len() > 2 * k as usize {
        return Err(format!(
            "extracted vertex set has {} members, bound {}",
            keep.len(),
            2 * k
        ));
    }
    let (sub, map) = g.induced(keep);
    let blue_sub: VertexSet = map
        .iter()
        .enumerate()
        .filter(|(_, &orig)| blue_orig.contains(orig))
        .map(|(new, _)| new)
        .collect();
    match min_propagation_time(rule, &sub, blue_sub) {
        Some((1, _)) => Ok(()),
        Some((t, _)) => Err(format!("extracted subgraph has pt {t}, expected 1")),
        None => Err("extracted sources do not force the extracted targets".into()),
    }
}

/// Canonical keys of a family's members, for equality tests.
pub fn family_keys(family: &Family) -> Vec<CanonicalForm> {
    let mut keys: Vec<CanonicalForm> = family
        .members
        .iter()
        .map(|g| canonical_form(g).expect("within canon limit"))
        .collect();
    keys.sort();
    keys
}

/// True when `g` is isomorphic to some member.
pub fn family_has_isomorph(family: &Family, g: &Graph) -> bool {
    let key = canonical_form(&canonical_graph(g).expect("within limit")).expect("within limit");
    family_keys(family).contains(&key)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::propagation::uniformly_fastest;

    #[test]
    fn savings_examples() {
        let p4 = Graph::path(4);
        let b = VertexSet::from_iter([0, 3]);
        let s = uniformly_fastest(Rule::Standard, &p4, b).unwrap();
        assert_eq!(savings(&s, Weight::ONE), Rational64::from_integer(1));
        // Full blue set: empty sum.
        let s = min_propagation_time(Rule::Standard, &p4, p4.vertices()).unwrap().1;
        assert_eq!(savings(&s, Weight::ONE), Rational64::zero());
        // Four one-force steps sum to zero at unit weight.
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 4), (2, 4), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let s = uniformly_fastest(Rule::Standard, &g, VertexSet::from_iter([0, 3])).unwrap();
        assert_eq!(s.propagation_time(), 4);
        assert_eq!(savings(&s, Weight::ONE), Rational64::zero());
    }

    #[test]
    fn savings_equals_closed_form() {
        for n in 1..=5usize {
            for g in enumerate_graphs(n).unwrap().iter() {
                for bits in 0..(1u128 << n) {
                    let b = VertexSet::from_bits(bits);
                    if let Some((pt, s)) = min_propagation_time(Rule::Standard, g, b) {
                        let w = Weight::from_ratio(1, 2).unwrap();
                        let expect = Rational64::from_integer((n - b.len()) as i64)
                            - w.value() * Rational64::from_integer(pt as i64);
                        assert_eq!(savings(&s, w), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn standard_witness_construction_absorbs_slow_steps() {
        // One-force steps are absorbed when w = 1.
        let p6 = Graph::path(6);
        let b = VertexSet::from_iter([0, 2, 5]);
        let (_, s) = min_propagation_time(Rule::Standard, &p6, b).unwrap();
        let wr =
            make_standard_witness(Rule::Standard, &p6, b, &s, Weight::ONE, 0).unwrap();
        assert!(wr.is_standard);
        assert_eq!(wr.blue, VertexSet::from_iter([0, 2, 3, 5]));
        // Degenerate absorption: every step of P5 from one end gains exactly
        // one vertex, so the witness grows to the whole vertex set. The
        // threshold precondition needs k = -1 to admit the instance.
        let p5 = Graph::path(5);
        let b = VertexSet::singleton(0);
        let (_, s) = min_propagation_time(Rule::Standard, &p5, b).unwrap();
        let wr = make_standard_witness(Rule::Standard, &p5, b, &s, Weight::ONE, -1).unwrap();
        assert_eq!(wr.blue, p5.vertices());
        assert!(wr.is_standard, "no steps remain, so the predicate is vacuous");
        // Threshold violations are rejected.
        assert!(make_standard_witness(Rule::Standard, &p5, b, &s, Weight::ONE, 0).is_err());
    }

    #[test]
    fn witness_with_no_deficient_steps_is_unchanged() {
        let p4 = Graph::path(4);
        let b = VertexSet::from_iter([0, 3]);
        let (_, s) = min_propagation_time(Rule::Standard, &p4, b).unwrap();
        let wr = make_standard_witness(
            Rule::Standard,
            &p4,
            b,
            &s,
            Weight::from_ratio(1, 2).unwrap(),
            0,
        )
        .unwrap();
        assert_eq!(wr.blue, b);
        assert!(wr.is_standard);
    }

    #[test]
    fn weighted_family_unit_weight_k0() {
        let fam =
            enumerate_weighted_family(Rule::Standard, 0, Weight::ONE, 8).unwrap();
        assert_eq!(fam.order_bound, 4, "bound 4k+4 = 4 at k=0");
        assert!(!fam.truncated);
        // Exactly the three graphs of order <= 4 that throttle below |V|.
        assert!(family_has_isomorph(&fam, &Graph::matching(2)));
        assert!(family_has_isomorph(&fam, &Graph::path(4)));
        assert!(family_has_isomorph(&fam, &Graph::cycle(4)));
        assert_eq!(fam.members.len(), 3);
        assert!(!family_has_isomorph(&fam, &Graph::complete(2)));
        // All three members have order 4, so the family is already minimal.
        let min = minimalize(&fam).unwrap();
        assert_eq!(min.members.len(), 3);
    }

    #[test]
    fn weighted_family_can_be_empty() {
        // 3-bootstrap needs a degree-3 target; within the order-4 bound only
        // K4 qualifies and it throttles to exactly |V|.
        let fam = enumerate_weighted_family(Rule::Bootstrap(3), 0, Weight::ONE, 8).unwrap();
        assert!(fam.members.is_empty());
        assert!(!fam.truncated);
    }

    #[test]
    fn minimalize_drops_contained_members() {
        let fam = Family {
            rule: Rule::Standard,
            k: 0,
            kind: FamilyKind::Weighted(Weight::ONE),
            members: vec![Graph::complete(2), Graph::path(3), Graph::path(4)],
            minimal: false,
            order_bound: 4,
            truncated: false,
        };
        let min = minimalize(&fam).unwrap();
        assert_eq!(min.members.len(), 1);
        assert_eq!(min.members[0], Graph::complete(2));
        // Singleton families are their own minimalization.
        let single = Family {
            members: vec![Graph::complete(2)],
            ..fam.clone()
        };
        assert_eq!(minimalize(&single).unwrap().members.len(), 1);
        // Truncated families are refused.
        let truncated = Family {
            truncated: true,
            ..fam
        };
        assert!(minimalize(&truncated).is_err());
    }

    #[test]
    fn product_family_memberships() {
        let psd1 = enumerate_product_family(Rule::Psd, 1).unwrap();
        assert_eq!(psd1.members.len(), 1);
        assert!(family_has_isomorph(&psd1, &Graph::complete(2)));

        let psd2 = enumerate_product_family(Rule::Psd, 2).unwrap();
        assert!(family_has_isomorph(&psd2, &Graph::matching(2)));
        assert!(family_has_isomorph(&psd2, &Graph::path(3)));

        let z2 = enumerate_product_family(Rule::Standard, 2).unwrap();
        assert!(family_has_isomorph(&z2, &Graph::matching(2)));
        assert!(family_has_isomorph(&z2, &Graph::path(4)));
        assert!(!family_has_isomorph(&z2, &Graph::path(3)));
    }

    #[test]
    fn family_text_is_deterministic() {
        let fam = enumerate_weighted_family(Rule::Standard, 0, Weight::ONE, 8).unwrap();
        let text = family_to_text(&fam);
        assert!(text.starts_with("# rule=z kind=weighted k=0 omega=1/1 minimal=false order_bound=4\n"));
        let again = family_to_text(
            &enumerate_weighted_family(Rule::Standard, 0, Weight::ONE, 8).unwrap(),
        );
        assert_eq!(text, again);
        assert_eq!(text.lines().count(), 4);
    }

    #[test]
    fn characterization_k0_unit_weight_is_exact() {
        let report = verify_characterization(
            Rule::Standard,
            0,
            FamilyKind::Weighted(Weight::ONE),
            5,
        )
        .unwrap();
        assert!(report.failures.is_empty(), "{:?}", report.failures);
        assert_eq!(report.graphs_checked, 1 + 2 + 4 + 11 + 34);
    }

    #[test]
    fn chain_extraction_on_a_long_psd_chain() {
        // P7 forced from one end yields a 7-vertex chain; its extraction at
        // k=2 exhibits a 2K2 member.
        let p7 = Graph::path(7);
        let s = uniformly_fastest(Rule::Psd, &p7, VertexSet::singleton(0)).unwrap();
        let (all, longest) = crate::propagation::chains(&s);
        assert_eq!(longest, 6);
        let chain = all.iter().find(|c| c.len() == 7).unwrap();
        assert!(check_long_chain_yields_member(Rule::Psd, &p7, chain, 2).is_ok());
        // Chains shorter than 3k-1 refuse extraction.
        assert!(check_long_chain_yields_member(Rule::Psd, &p7, &chain[..3], 2).is_err());
    }

    #[test]
    fn step_extraction_on_a_wide_step() {
        let star = Graph::star(3);
        let s = uniformly_fastest(Rule::Psd, &star, VertexSet::singleton(0)).unwrap();
        assert_eq!(s.steps[0].forces.len(), 3);
        assert!(check_big_step_yields_member(Rule::Psd, &star, &s, 0, 2).is_ok());
    }
}
