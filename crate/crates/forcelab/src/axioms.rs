//! Empirical falsifiers for rule properties: given a rule, a property, and a
//! graph corpus, hunt for a counterexample or report that none was found.
//! A falsifier never certifies a property — the properties quantify over all
//! graphs — so the positive verdict is always "no counterexample found".
//!
//! Operationalizations:
//! * local / co-local — validity of `v -> w` is invariant under every
//!   recoloring of the vertices outside `N[v]` (resp. `N[w]`).
//! * symmetric — if `v` can force some white neighbor it can force each of
//!   its white neighbors.
//! * simple — performing one valid force never invalidates another valid
//!   force with a different target.
//! * infectious — every valid force has a blue source.
//! * superset / force-count / spent-removable / terminus-sufficient — the
//!   four closure-and-counting properties of well-behaved rules, evaluated on
//!   schedules (all schedules up to order 4, minimum-pt schedules at order 5).

use crate::graph::{Graph, VertexSet};
use crate::propagation::{enumerate_schedules, is_forcing_set, ForceSchedule};
use crate::rules::{is_valid_force, valid_forces, Force, Rule, RuleState};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axiom {
    Superset,
    ForceCount,
    SpentRemovable,
    TerminusSufficient,
    Local,
    Symmetric,
    Simple,
    Infectious,
    CoLocal,
    CoSymmetric,
}

impl Axiom {
    pub const ALL: [Axiom; 10] = [
        Axiom::Superset,
        Axiom::ForceCount,
        Axiom::SpentRemovable,
        Axiom::TerminusSufficient,
        Axiom::Local,
        Axiom::Symmetric,
        Axiom::Simple,
        Axiom::Infectious,
        Axiom::CoLocal,
        Axiom::CoSymmetric,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Axiom::Superset => "superset",
            Axiom::ForceCount => "force-count",
            Axiom::SpentRemovable => "spent-removable",
            Axiom::TerminusSufficient => "terminus-sufficient",
            Axiom::Local => "local",
            Axiom::Symmetric => "symmetric",
            Axiom::Simple => "simple",
            Axiom::Infectious => "infectious",
            Axiom::CoLocal => "co-local",
            Axiom::CoSymmetric => "co-symmetric",
        }
    }

    pub fn parse(s: &str) -> Option<Axiom> {
        Axiom::ALL.iter().copied().find(|a| a.name() == s)
    }

    /// Axioms the rule declares as holding.
    pub fn declared_for(rule: Rule) -> Vec<Axiom> {
        let f = rule.flags();
        let mut out = Vec::new();
        if f.local {
            out.push(Axiom::Local);
        }
        if f.symmetric {
            out.push(Axiom::Symmetric);
        }
        if f.simple {
            out.push(Axiom::Simple);
        }
        if f.infectious {
            out.push(Axiom::Infectious);
        }
        if f.co_local {
            out.push(Axiom::CoLocal);
        }
        if f.co_symmetric {
            out.push(Axiom::CoSymmetric);
        }
        if f.nearly_well_behaved {
            out.push(Axiom::Superset);
            out.push(Axiom::ForceCount);
        }
        if f.well_behaved {
            out.push(Axiom::SpentRemovable);
            out.push(Axiom::TerminusSufficient);
        }
        out
    }

    /// Declared negative claims: properties a rule is known to violate.
    pub fn declared_negatives() -> Vec<(Rule, Axiom)> {
        vec![(Rule::Psd, Axiom::Local), (Rule::Hopping, Axiom::Simple)]
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AxiomError {
    #[error("axiom {0} cannot be evaluated for rule {1}")]
    Inapplicable(Axiom, Rule),
}

/// Per-instance evaluation of the four well-behavedness properties on one
/// schedule.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WellBehavedVerdicts {
    pub superset: bool,
    pub force_count: bool,
    pub spent_removable: bool,
    pub terminus_sufficient: bool,
}

impl WellBehavedVerdicts {
    pub fn all_hold(&self) -> bool {
        self.superset && self.force_count && self.spent_removable && self.terminus_sufficient
    }
}

/// Evaluates the four properties on a single (graph, schedule) instance:
/// every superset of the initial set forces; `|U^(i)| <= |F^(i)|` at every
/// step; `F^[i] \ U^[i]` forces `G - U^[i]` for every prefix; and `U^[t]`
/// forces `G - (B \ U^[t])` at the final time.
pub fn check_well_behaved(rule: Rule, g: &Graph, schedule: &ForceSchedule) -> WellBehavedVerdicts {
    let b = schedule.initial;
    let superset = superset_counterexample(rule, g, b).is_none();
    let force_count = (0..schedule.steps.len()).all(|i| {
        schedule.steps[i].forcers.len() <= schedule.steps[i].forced.len()
    });
    let spent_removable = (0..=schedule.steps.len()).all(|i| prefix_removal_forces(rule, g, schedule, i));
    let terminus_sufficient = terminus_sufficient(rule, g, schedule);
    WellBehavedVerdicts {
        superset,
        force_count,
        spent_removable,
        terminus_sufficient,
    }
}

fn superset_counterexample(rule: Rule, g: &Graph, b: VertexSet) -> Option<VertexSet> {
    if !is_forcing_set(rule, g, b) {
        return None;
    }
    let extra: Vec<usize> = (g.vertices() - b).iter().collect();
    for bits in 0u128..(1u128 << extra.len()) {
        let mut sup = b;
        for (i, &v) in extra.iter().enumerate() {
            if bits >> i & 1 == 1 {
                sup.insert(v);
            }
        }
        if !is_forcing_set(rule, g, sup) {
            return Some(sup);
        }
    }
    None
}

/// `F^[i] \ U^[i]` must force `G - U^[i]`.
fn prefix_removal_forces(rule: Rule, g: &Graph, schedule: &ForceSchedule, i: usize) -> bool {
    let mut colored = schedule.initial;
    let mut performed = VertexSet::EMPTY;
    for step in &schedule.steps[..i] {
        colored |= step.forced;
        performed |= step.forcers;
    }
    let (h, map) = g.delete_vertices(performed);
    let survivors: VertexSet = map
        .iter()
        .enumerate()
        .filter(|(_, &orig)| colored.contains(orig))
        .map(|(new, _)| new)
        .collect();
    is_forcing_set(rule, &h, survivors)
}

/// `U^[t]` must force `G - (B \ U^[t])`.
fn terminus_sufficient(rule: Rule, g: &Graph, schedule: &ForceSchedule) -> bool {
    let mut performed = VertexSet::EMPTY;
    for step in &schedule.steps {
        performed |= step.forcers;
    }
    let idle_initials = schedule.initial - performed;
    let (h, map) = g.delete_vertices(idle_initials);
    let forcers: VertexSet = map
        .iter()
        .enumerate()
        .filter(|(_, &orig)| performed.contains(orig))
        .map(|(new, _)| new)
        .collect();
    is_forcing_set(rule, &h, forcers)
}

/// A counterexample, with enough data to replay the violation.
#[derive(Clone, Debug)]
pub struct AxiomWitness {
    pub graph: Graph,
    pub detail: String,
    pub data: WitnessData,
}

#[derive(Clone, Debug)]
pub enum WitnessData {
    /// Validity of `force` differs between `blue` and `blue` with `recolored` flipped.
    Recoloring {
        blue: VertexSet,
        spent: VertexSet,
        force: Force,
        recolored: VertexSet,
    },
    /// Both forces valid, but performing `first` invalidates `second`.
    NotSimultaneous {
        blue: VertexSet,
        spent: VertexSet,
        first: Force,
        second: Force,
    },
    /// `source` can force `forceable` but not its white neighbor `blocked`.
    NotSymmetric {
        blue: VertexSet,
        spent: VertexSet,
        source: usize,
        forceable: usize,
        blocked: usize,
    },
    /// A valid force whose source is white.
    WhiteSource { blue: VertexSet, force: Force },
    /// A forcing set with a non-forcing superset.
    SupersetNotForcing { base: VertexSet, superset: VertexSet },
    /// A schedule step with more forcers than forced vertices.
    StepCount { schedule: ForceSchedule, step: usize },
    /// Deleting the forcers of a schedule prefix leaves a non-forcing remainder.
    PrefixRemoval { schedule: ForceSchedule, step: usize },
    /// The forcers alone do not force the graph without the idle initial vertices.
    TerminusInsufficient { schedule: ForceSchedule },
}

#[derive(Clone, Debug)]
pub enum Verdict {
    Falsified(Box<AxiomWitness>),
    NoCounterexampleFound,
}

impl Verdict {
    pub fn is_falsified(&self) -> bool {
        matches!(self, Verdict::Falsified(_))
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub rule: Rule,
    pub axiom: Axiom,
    pub verdict: Verdict,
    pub graphs_checked: usize,
    pub instances_checked: u64,
}

/// Search budget: orders up to which all schedules (resp. only minimum-pt
/// schedules) are enumerated for the schedule-quantified properties.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub all_schedules_max_order: usize,
    pub optimal_schedules_max_order: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            all_schedules_max_order: 4,
            optimal_schedules_max_order: 5,
        }
    }
}

/// Spent-set configurations to try for a blue set: the empty set always, and
/// every subset of blue for stateful rules.
fn spent_variants(rule: Rule, blue: VertexSet) -> Vec<VertexSet> {
    if !rule.is_stateful() {
        return vec![VertexSet::EMPTY];
    }
    let members: Vec<usize> = blue.iter().collect();
    (0u128..(1u128 << members.len()))
        .map(|bits| {
            members
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

/// Searches the corpus for a counterexample to `axiom` under `rule`.
pub fn falsify_axiom(
    rule: Rule,
    axiom: Axiom,
    corpus: &[Graph],
    budget: SearchBudget,
) -> Result<AxiomReport, AxiomError> {
    let mut instances = 0u64;
    let mut graphs_checked = 0usize;
    for g in corpus {
        graphs_checked += 1;
        let witness = match axiom {
            Axiom::Local => falsify_locality(rule, g, &mut instances, true),
            Axiom::CoLocal => falsify_locality(rule, g, &mut instances, false),
            Axiom::Symmetric => falsify_symmetry(rule, g, &mut instances, true),
            Axiom::CoSymmetric => falsify_symmetry(rule, g, &mut instances, false),
            Axiom::Simple => falsify_simplicity(rule, g, &mut instances),
            Axiom::Infectious => falsify_infection(rule, g, &mut instances),
            Axiom::Superset => falsify_superset(rule, g, &mut instances),
            Axiom::ForceCount | Axiom::SpentRemovable | Axiom::TerminusSufficient => {
                falsify_schedule_axiom(rule, axiom, g, budget, &mut instances)
            }
        };
        if let Some(w) = witness {
            return Ok(AxiomReport {
                rule,
                axiom,
                verdict: Verdict::Falsified(Box::new(w)),
                graphs_checked,
                instances_checked: instances,
            });
        }
    }
    Ok(AxiomReport {
        rule,
        axiom,
        verdict: Verdict::NoCounterexampleFound,
        graphs_checked,
        instances_checked: instances,
    })
}

fn all_blue_sets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u128..(1u128 << n)).map(VertexSet::from_bits)
}

fn falsify_locality(
    rule: Rule,
    g: &Graph,
    instances: &mut u64,
    source_side: bool,
) -> Option<AxiomWitness> {
    let n = g.order();
    for blue in all_blue_sets(n) {
        for spent in spent_variants(rule, blue) {
            let state = RuleState { blue, spent };
            for s in 0..n {
                for t in 0..n {
                    if s == t {
                        continue;
                    }
                    let force = Force::new(s, t);
                    let anchor = if source_side { s } else { t };
                    let outside: Vec<usize> =
                        (g.vertices() - g.closed_neighborhood(anchor)).iter().collect();
                    let before = is_valid_force(rule, g, state, force);
                    for bits in 1u128..(1u128 << outside.len()) {
                        *instances += 1;
                        let mut flipped = blue;
                        let mut recolored = VertexSet::EMPTY;
                        for (i, &v) in outside.iter().enumerate() {
                            if bits >> i & 1 == 1 {
                                recolored.insert(v);
                                if blue.contains(v) {
                                    flipped.remove(v);
                                } else {
                                    flipped.insert(v);
                                }
                            }
                        }
                        let after = is_valid_force(
                            rule,
                            g,
                            RuleState {
                                blue: flipped,
                                spent,
                            },
                            force,
                        );
                        if after != before {
                            let side = if source_side { "N[source]" } else { "N[target]" };
                            return Some(AxiomWitness {
                                graph: g.clone(),
                                detail: format!(
                                    "validity of {force} with blue {blue} depends on recoloring {recolored} outside {side}"
                                ),
                                data: WitnessData::Recoloring {
                                    blue,
                                    spent,
                                    force,
                                    recolored,
                                },
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

fn falsify_symmetry(
    rule: Rule,
    g: &Graph,
    instances: &mut u64,
    source_side: bool,
) -> Option<AxiomWitness> {
    let n = g.order();
    for blue in all_blue_sets(n) {
        for spent in spent_variants(rule, blue) {
            let state = RuleState { blue, spent };
            let white = g.vertices() - blue;
            if source_side {
                // v forces some white neighbor => v forces each white neighbor.
                for v in 0..n {
                    let whites = g.neighbors(v) & white;
                    let mut forceable = None;
                    let mut blocked = None;
                    for w in whites.iter() {
                        *instances += 1;
                        if is_valid_force(rule, g, state, Force::new(v, w)) {
                            forceable.get_or_insert(w);
                        } else {
                            blocked.get_or_insert(w);
                        }
                    }
                    if let (Some(fw), Some(bw)) = (forceable, blocked) {
                        return Some(AxiomWitness {
                            graph: g.clone(),
                            detail: format!(
                                "{v} forces {fw} but not its white neighbor {bw} (blue {blue})"
                            ),
                            data: WitnessData::NotSymmetric {
                                blue,
                                spent,
                                source: v,
                                forceable: fw,
                                blocked: bw,
                            },
                        });
                    }
                }
            } else {
                // some blue neighbor forces w => each blue neighbor forces w.
                for w in white.iter() {
                    let blues = g.neighbors(w) & blue;
                    let mut forcer = None;
                    let mut blocked = None;
                    for v in blues.iter() {
                        *instances += 1;
                        if is_valid_force(rule, g, state, Force::new(v, w)) {
                            forcer.get_or_insert(v);
                        } else {
                            blocked.get_or_insert(v);
                        }
                    }
                    if let (Some(fv), Some(bv)) = (forcer, blocked) {
                        return Some(AxiomWitness {
                            graph: g.clone(),
                            detail: format!(
                                "{fv} forces {w} but its blue neighbor {bv} cannot (blue {blue})"
                            ),
                            data: WitnessData::NotSymmetric {
                                blue,
                                spent,
                                source: w,
                                forceable: fv,
                                blocked: bv,
                            },
                        });
                    }
                }
            }
        }
    }
    None
}

fn perform(rule: Rule, state: RuleState, f: Force) -> RuleState {
    let mut next = state;
    next.blue.insert(f.target);
    if rule.is_stateful() {
        next.spent.insert(f.source);
    }
    next
}

fn falsify_simplicity(rule: Rule, g: &Graph, instances: &mut u64) -> Option<AxiomWitness> {
    for blue in all_blue_sets(g.order()) {
        for spent in spent_variants(rule, blue) {
            let state = RuleState { blue, spent };
            let valid = valid_forces(rule, g, state);
            for first in &valid {
                for second in &valid {
                    if first.target == second.target {
                        continue;
                    }
                    *instances += 1;
                    let after = perform(rule, state, *first);
                    if !is_valid_force(rule, g, after, *second) {
                        return Some(AxiomWitness {
                            graph: g.clone(),
                            detail: format!(
                                "{first} and {second} are both valid for blue {blue}, but performing {first} invalidates {second}"
                            ),
                            data: WitnessData::NotSimultaneous {
                                blue,
                                spent,
                                first: *first,
                                second: *second,
                            },
                        });
                    }
                }
            }
        }
    }
    None
}

fn falsify_infection(rule: Rule, g: &Graph, instances: &mut u64) -> Option<AxiomWitness> {
    for blue in all_blue_sets(g.order()) {
        for spent in spent_variants(rule, blue) {
            let state = RuleState { blue, spent };
            for f in valid_forces(rule, g, state) {
                *instances += 1;
                if !blue.contains(f.source) {
                    return Some(AxiomWitness {
                        graph: g.clone(),
                        detail: format!("{f} is valid with a white source (blue {blue})"),
                        data: WitnessData::WhiteSource { blue, force: f },
                    });
                }
            }
        }
    }
    None
}

fn falsify_superset(rule: Rule, g: &Graph, instances: &mut u64) -> Option<AxiomWitness> {
    for blue in all_blue_sets(g.order()) {
        *instances += 1;
        if let Some(sup) = superset_counterexample(rule, g, blue) {
            return Some(AxiomWitness {
                graph: g.clone(),
                detail: format!("{blue} forces but its superset {sup} does not"),
                data: WitnessData::SupersetNotForcing {
                    base: blue,
                    superset: sup,
                },
            });
        }
    }
    None
}

fn falsify_schedule_axiom(
    rule: Rule,
    axiom: Axiom,
    g: &Graph,
    budget: SearchBudget,
    instances: &mut u64,
) -> Option<AxiomWitness> {
    let n = g.order();
    if n > budget.optimal_schedules_max_order {
        return None;
    }
    let optimal_only = n > budget.all_schedules_max_order;
    for blue in all_blue_sets(n) {
        if !is_forcing_set(rule, g, blue) {
            continue;
        }
        let mut schedules = enumerate_schedules(rule, g, blue);
        if optimal_only {
            let best = schedules.iter().map(|s| s.propagation_time()).min();
            schedules.retain(|s| Some(s.propagation_time()) == best);
        }
        for s in schedules {
            *instances += 1;
            match axiom {
                Axiom::ForceCount => {
                    for i in 0..s.steps.len() {
                        if s.steps[i].forcers.len() > s.steps[i].forced.len() {
                            return Some(AxiomWitness {
                                graph: g.clone(),
                                detail: format!(
                                    "step {} has more forcers than forced vertices",
                                    i + 1
                                ),
                                data: WitnessData::StepCount {
                                    schedule: s.clone(),
                                    step: i,
                                },
                            });
                        }
                    }
                }
                Axiom::SpentRemovable => {
                    for i in 0..=s.steps.len() {
                        if !prefix_removal_forces(rule, g, &s, i) {
                            return Some(AxiomWitness {
                                graph: g.clone(),
                                detail: format!(
                                    "removing the forcers of the first {i} steps leaves a non-forcing remainder"
                                ),
                                data: WitnessData::PrefixRemoval {
                                    schedule: s.clone(),
                                    step: i,
                                },
                            });
                        }
                    }
                }
                Axiom::TerminusSufficient => {
                    if !terminus_sufficient(rule, g, &s) {
                        return Some(AxiomWitness {
                            graph: g.clone(),
                            detail: "the forcers alone do not force the graph without the idle initial vertices".into(),
                            data: WitnessData::TerminusInsufficient { schedule: s.clone() },
                        });
                    }
                }
                _ => unreachable!("schedule axioms only"),
            }
        }
    }
    None
}

/// Re-evaluates a witness; true when the violation reproduces.
pub fn replay_witness(rule: Rule, witness: &AxiomWitness) -> bool {
    let g = &witness.graph;
    match &witness.data {
        WitnessData::Recoloring {
            blue,
            spent,
            force,
            recolored,
        } => {
            let before = is_valid_force(rule, g, RuleState { blue: *blue, spent: *spent }, *force);
            let mut flipped = *blue;
            for v in recolored.iter() {
                if blue.contains(v) {
                    flipped.remove(v);
                } else {
                    flipped.insert(v);
                }
            }
            let after = is_valid_force(
                rule,
                g,
                RuleState {
                    blue: flipped,
                    spent: *spent,
                },
                *force,
            );
            before != after
        }
        WitnessData::NotSimultaneous {
            blue,
            spent,
            first,
            second,
        } => {
            let state = RuleState {
                blue: *blue,
                spent: *spent,
            };
            is_valid_force(rule, g, state, *first)
                && is_valid_force(rule, g, state, *second)
                && !is_valid_force(rule, g, perform(rule, state, *first), *second)
        }
        WitnessData::NotSymmetric {
            blue,
            spent,
            source,
            forceable,
            blocked,
        } => {
            let state = RuleState {
                blue: *blue,
                spent: *spent,
            };
            // For the co-symmetric mirror the stored `source` is the target.
            let (a, b) = if blue.contains(*forceable) {
                (
                    Force::new(*forceable, *source),
                    Force::new(*blocked, *source),
                )
            } else {
                (
                    Force::new(*source, *forceable),
                    Force::new(*source, *blocked),
                )
            };
            is_valid_force(rule, g, state, a) && !is_valid_force(rule, g, state, b)
        }
        WitnessData::WhiteSource { blue, force } => {
            let state = RuleState {
                blue: *blue,
                spent: VertexSet::EMPTY,
            };
            is_valid_force(rule, g, state, *force) && !blue.contains(force.source)
        }
        WitnessData::SupersetNotForcing { base, superset } => {
            is_forcing_set(rule, g, *base)
                && base.is_subset_of(*superset)
                && !is_forcing_set(rule, g, *superset)
        }
        WitnessData::StepCount { schedule, step } => {
            schedule.steps[*step].forcers.len() > schedule.steps[*step].forced.len()
        }
        WitnessData::PrefixRemoval { schedule, step } => {
            !prefix_removal_forces(rule, g, schedule, *step)
        }
        WitnessData::TerminusInsufficient { schedule } => !terminus_sufficient(rule, g, schedule),
    }
}

/// Text record for a report, witness in schedule text form where applicable
/// (newlines folded into ` | ` to keep records line-oriented).
pub fn report_to_text(report: &AxiomReport) -> String {
    let mut out = format!(
        "rule={} axiom={} graphs={} instances={}",
        report.rule.selector(),
        report.axiom,
        report.graphs_checked,
        report.instances_checked
    );
    match &report.verdict {
        Verdict::NoCounterexampleFound => out.push_str(" verdict=no-counterexample-found"),
        Verdict::Falsified(w) => {
            out.push_str(&format!(
                " verdict=falsified graph6={} detail={:?}",
                crate::graph6::to_graph6(&w.graph).unwrap_or_else(|_| "?".into()),
                w.detail
            ));
            let schedule = match &w.data {
                WitnessData::StepCount { schedule, .. }
                | WitnessData::PrefixRemoval { schedule, .. }
                | WitnessData::TerminusInsufficient { schedule } => Some(schedule),
                _ => None,
            };
            if let Some(s) = schedule {
                out.push_str(&format!(
                    " schedule={:?}",
                    s.to_text().replace('\n', " | ")
                ));
            }
        }
    }
    out
}
