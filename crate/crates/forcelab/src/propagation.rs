//! Time-step semantics of force sets: closures, propagation time, schedules
//! that are uniformly as fast as possible, forcing chains, and terminus /
//! reversal.
//!
//! A schedule assigns each non-initial vertex exactly one in-force. Its timing
//! is not free: replaying from the initial coloring, every force of the set
//! fires at the first step at which it is valid, and the step partition
//! `F^(1), ..., F^(t)` together with the forcer sets `U^(i)` falls out of that
//! replay. For the stateful hopping rule, validity at step `i` is judged
//! against the recorded (blue, spent) state after step `i-1`.

use crate::graph::{Graph, VertexSet};
use crate::rules::{valid_forces, Force, Rule, RuleState};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PropagationError {
    #[error("rule {rule} lacks the `{flag}` flag required here")]
    MissingFlag { rule: Rule, flag: &'static str },
    #[error("{blue} is not a forcing set of this graph under rule {rule}")]
    NotForcing { rule: Rule, blue: VertexSet },
}

/// One time step: the vertices forced, the vertices performing forces, and the
/// individual forces, sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScheduleStep {
    pub forced: VertexSet,
    pub forcers: VertexSet,
    pub forces: Vec<Force>,
}

/// A complete set of forces for an initial blue set, together with its induced
/// time-step partition. Constructed only through replay, so every instance is
/// self-certifying.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ForceSchedule {
    pub initial: VertexSet,
    pub forces: Vec<Force>,
    pub steps: Vec<ScheduleStep>,
}

impl ForceSchedule {
    pub fn propagation_time(&self) -> u32 {
        self.steps.len() as u32
    }

    pub fn final_blue(&self) -> VertexSet {
        let mut blue = self.initial;
        for s in &self.steps {
            blue |= s.forced;
        }
        blue
    }

    /// Step at which `v` became blue; 0 for initial vertices.
    pub fn step_of(&self, v: usize) -> Option<u32> {
        if self.initial.contains(v) {
            return Some(0);
        }
        self.steps
            .iter()
            .position(|s| s.forced.contains(v))
            .map(|i| (i + 1) as u32)
    }

    /// Line-oriented text form: `B: <vertices>` then one `t=<i>: ...` per step.
    pub fn to_text(&self) -> String {
        let mut out = format!("B: {}", self.initial.to_space_list());
        for (i, step) in self.steps.iter().enumerate() {
            let forces: Vec<String> = step.forces.iter().map(|f| f.to_string()).collect();
            out.push_str(&format!("\nt={}: {}", i + 1, forces.join(", ")));
        }
        out
    }

    /// Re-validates every force at its recorded step.
    pub fn validate(&self, rule: Rule, g: &Graph) -> bool {
        match replay(rule, g, self.initial, &self.forces) {
            ReplayOutcome::Complete(s) => s.steps == self.steps,
            _ => false,
        }
    }
}

impl fmt::Display for ForceSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[derive(Debug)]
pub enum ReplayOutcome {
    Complete(ForceSchedule),
    /// Replay ran out of valid forces before coloring everything.
    Stalled { final_blue: VertexSet },
    /// The force set is structurally unusable (duplicate targets, two hops
    /// from one source in the same step, out-of-range vertices).
    Invalid(String),
}

impl ReplayOutcome {
    pub fn complete(self) -> Option<ForceSchedule> {
        match self {
            ReplayOutcome::Complete(s) => Some(s),
            _ => None,
        }
    }
}

/// Replays a candidate force set from `initial`, firing each force at the
/// first step where it is valid. The outcome is `Complete` exactly when the
/// forces color the whole graph.
pub fn replay(rule: Rule, g: &Graph, initial: VertexSet, forces: &[Force]) -> ReplayOutcome {
    let mut seen_targets = VertexSet::EMPTY;
    for f in forces {
        if f.source >= g.order() || f.target >= g.order() || f.source == f.target {
            return ReplayOutcome::Invalid(format!("malformed force {f}"));
        }
        if initial.contains(f.target) {
            return ReplayOutcome::Invalid(format!("force {f} targets an initial vertex"));
        }
        if seen_targets.contains(f.target) {
            return ReplayOutcome::Invalid(format!("vertex {} has two in-forces", f.target));
        }
        seen_targets.insert(f.target);
    }
    let mut remaining: Vec<Force> = forces.to_vec();
    remaining.sort_unstable();
    let mut all_forces = remaining.clone();
    all_forces.sort_unstable();
    let mut blue = initial;
    let mut spent = VertexSet::EMPTY;
    let mut steps = Vec::new();
    loop {
        let state = RuleState { blue, spent };
        let valid_now = valid_forces(rule, g, state);
        let fire: Vec<Force> = remaining
            .iter()
            .copied()
            .filter(|f| valid_now.binary_search(f).is_ok())
            .collect();
        if fire.is_empty() {
            break;
        }
        if rule.is_stateful() {
            // Two hops from one source cannot be performed simultaneously.
            let mut hop_sources = VertexSet::EMPTY;
            for f in &fire {
                if !g.has_edge(f.source, f.target) {
                    if hop_sources.contains(f.source) {
                        return ReplayOutcome::Invalid(format!(
                            "two simultaneous hops from vertex {}",
                            f.source
                        ));
                    }
                    hop_sources.insert(f.source);
                }
            }
        }
        let forced: VertexSet = fire.iter().map(|f| f.target).collect();
        let forcers: VertexSet = fire.iter().map(|f| f.source).collect();
        blue |= forced;
        spent |= forcers;
        remaining.retain(|f| !forced.contains(f.target));
        steps.push(ScheduleStep {
            forced,
            forcers,
            forces: fire,
        });
    }
    if remaining.is_empty() && blue == g.vertices() {
        ReplayOutcome::Complete(ForceSchedule {
            initial,
            forces: all_forces,
            steps,
        })
    } else {
        ReplayOutcome::Stalled { final_blue: blue }
    }
}

// --- closures ----------------------------------------------------------------

/// Final coloring of `b`. Unique for the deterministic-closure rules; for
/// hopping, the maximum-cardinality final coloring over all play-outs.
pub fn closure(rule: Rule, g: &Graph, b: VertexSet) -> VertexSet {
    if rule.deterministic_closure() {
        let mut blue = b;
        loop {
            let valid = valid_forces(rule, g, RuleState::colored(blue));
            let forced: VertexSet = valid.iter().map(|f| f.target).collect();
            if forced.is_empty() {
                return blue;
            }
            blue |= forced;
        }
    } else {
        let mut memo = HashMap::new();
        hop_best_closure(g, RuleState::colored(b), &mut memo)
    }
}

fn hop_best_closure(
    g: &Graph,
    state: RuleState,
    memo: &mut HashMap<(u128, u128), VertexSet>,
) -> VertexSet {
    let key = (state.blue.bits(), state.spent.bits());
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let valid = valid_forces(Rule::Hopping, g, state);
    let mut best = state.blue;
    for f in valid {
        let next = RuleState {
            blue: state.blue.with(f.target),
            spent: state.spent.with(f.source),
        };
        let reached = hop_best_closure(g, next, memo);
        if reached.len() > best.len() || (reached.len() == best.len() && reached < best) {
            best = reached;
        }
    }
    memo.insert(key, best);
    best
}

pub fn is_forcing_set(rule: Rule, g: &Graph, b: VertexSet) -> bool {
    closure(rule, g, b) == g.vertices()
}

// --- synchronous schedules -----------------------------------------------------

/// Synchronous saturation from `b`: every valid force fires each step, and
/// each newly blue vertex receives one in-force from a most-recently-forced
/// source when one exists (initial and still-white sources count as step 0),
/// with remaining ties going to the lowest source index. The recency
/// preference is what makes bootstrap chains realize the propagation time and
/// keeps skew chains chord-free: a stale source can sit next to a vertex that
/// was forced before the source's own force became valid.
fn synchronous_schedule(rule: Rule, g: &Graph, b: VertexSet) -> Option<ForceSchedule> {
    debug_assert!(rule.deterministic_closure());
    let mut blue = b;
    let mut forced_step = vec![0u32; g.order()];
    let mut steps: Vec<ScheduleStep> = Vec::new();
    let mut all_forces: Vec<Force> = Vec::new();
    loop {
        let valid = valid_forces(rule, g, RuleState::colored(blue));
        if valid.is_empty() {
            break;
        }
        let step_no = steps.len() as u32 + 1;
        let targets: VertexSet = valid.iter().map(|f| f.target).collect();
        let mut fire = Vec::with_capacity(targets.len());
        for w in targets.iter() {
            let mut chosen: Option<Force> = None;
            let mut chosen_step = 0u32;
            for f in valid.iter().filter(|f| f.target == w) {
                match chosen {
                    None => {
                        chosen = Some(*f);
                        chosen_step = forced_step[f.source];
                    }
                    Some(_) if forced_step[f.source] > chosen_step => {
                        chosen = Some(*f);
                        chosen_step = forced_step[f.source];
                    }
                    _ => {}
                }
            }
            fire.push(chosen.expect("target has at least one valid in-force"));
        }
        for w in targets.iter() {
            forced_step[w] = step_no;
        }
        blue |= targets;
        fire.sort_unstable();
        let forcers: VertexSet = fire.iter().map(|f| f.source).collect();
        all_forces.extend_from_slice(&fire);
        steps.push(ScheduleStep {
            forced: targets,
            forcers,
            forces: fire,
        });
    }
    if blue == g.vertices() {
        all_forces.sort_unstable();
        Some(ForceSchedule {
            initial: b,
            forces: all_forces,
            steps,
        })
    } else {
        None
    }
}

/// Minimum propagation time of `b`, with a witnessing schedule; `None` when
/// `b` is not a forcing set. Simple rules use synchronous saturation; hopping
/// searches over simultaneous force batches, memoized on (blue, spent).
pub fn min_propagation_time(rule: Rule, g: &Graph, b: VertexSet) -> Option<(u32, ForceSchedule)> {
    if b == g.vertices() {
        return Some((
            0,
            ForceSchedule {
                initial: b,
                forces: vec![],
                steps: vec![],
            },
        ));
    }
    if rule.deterministic_closure() {
        let s = synchronous_schedule(rule, g, b)?;
        Some((s.propagation_time(), s))
    } else {
        hop_min_propagation(g, b)
    }
}

/// A schedule that is uniformly as fast as possible: every vertex turns blue
/// no later than in any other schedule. Requires a simple, nearly well behaved
/// rule and a forcing set.
pub fn uniformly_fastest(
    rule: Rule,
    g: &Graph,
    b: VertexSet,
) -> Result<ForceSchedule, PropagationError> {
    let flags = rule.flags();
    if !flags.simple || !flags.nearly_well_behaved {
        return Err(PropagationError::MissingFlag {
            rule,
            flag: "simple + nearly-well-behaved",
        });
    }
    if b == g.vertices() {
        return Ok(ForceSchedule {
            initial: b,
            forces: vec![],
            steps: vec![],
        });
    }
    synchronous_schedule(rule, g, b).ok_or(PropagationError::NotForcing { rule, blue: b })
}

// --- hopping search ------------------------------------------------------------

const HOP_SEARCH_MAX_ORDER: usize = 20;

fn apply_move(state: RuleState, batch: &[Force]) -> RuleState {
    let mut next = state;
    for f in batch {
        next.blue.insert(f.target);
        next.spent.insert(f.source);
    }
    next
}

/// All nonempty simultaneously-performable force batches at `state` under the
/// hopping rule: per white target one optional standard in-force, plus an
/// injective assignment of unspent isolated-from-white hoppers to leftover
/// white vertices.
fn hop_moves(g: &Graph, state: RuleState) -> Vec<Vec<Force>> {
    let valid = valid_forces(Rule::Hopping, g, state);
    let mut standard_targets: Vec<usize> = Vec::new();
    let mut options: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut hoppers: Vec<usize> = Vec::new();
    for f in &valid {
        if g.has_edge(f.source, f.target) {
            options.entry(f.target).or_insert_with(|| {
                standard_targets.push(f.target);
                Vec::new()
            });
            options.get_mut(&f.target).unwrap().push(f.source);
        } else if hoppers.last() != Some(&f.source) {
            hoppers.push(f.source);
        }
    }
    let white = g.vertices() - state.blue;
    let mut out = Vec::new();
    let mut batch = Vec::new();
    assign_targets(
        &standard_targets,
        &options,
        &hoppers,
        white,
        0,
        &mut batch,
        &mut out,
    );
    out
}

fn assign_targets(
    targets: &[usize],
    options: &HashMap<usize, Vec<usize>>,
    hoppers: &[usize],
    white: VertexSet,
    idx: usize,
    batch: &mut Vec<Force>,
    out: &mut Vec<Vec<Force>>,
) {
    if idx == targets.len() {
        let taken: VertexSet = batch.iter().map(|f| f.target).collect();
        assign_hops(hoppers, white - taken, 0, batch, out);
        return;
    }
    let t = targets[idx];
    // skip this target
    assign_targets(targets, options, hoppers, white, idx + 1, batch, out);
    for &s in &options[&t] {
        batch.push(Force::new(s, t));
        assign_targets(targets, options, hoppers, white, idx + 1, batch, out);
        batch.pop();
    }
}

fn assign_hops(
    hoppers: &[usize],
    free_whites: VertexSet,
    idx: usize,
    batch: &mut Vec<Force>,
    out: &mut Vec<Vec<Force>>,
) {
    if idx == hoppers.len() {
        if !batch.is_empty() {
            out.push(batch.clone());
        }
        return;
    }
    // this hopper abstains
    assign_hops(hoppers, free_whites, idx + 1, batch, out);
    for w in free_whites.iter() {
        batch.push(Force::new(hoppers[idx], w));
        assign_hops(hoppers, free_whites.without(w), idx + 1, batch, out);
        batch.pop();
    }
}

fn hop_min_propagation(g: &Graph, b: VertexSet) -> Option<(u32, ForceSchedule)> {
    assert!(
        g.order() <= HOP_SEARCH_MAX_ORDER,
        "hopping schedule search is exact and limited to order {HOP_SEARCH_MAX_ORDER}"
    );
    let mut memo: HashMap<(u128, u128), Option<u32>> = HashMap::new();
    let start = RuleState::colored(b);
    let t = hop_best_steps(g, start, &mut memo)?;
    // Rebuild one optimal play-out by following the memo downhill.
    let mut state = start;
    let mut steps = Vec::new();
    let mut all_forces = Vec::new();
    while state.blue != g.vertices() {
        let here = hop_best_steps(g, state, &mut memo).expect("on an optimal path");
        let mut advanced = false;
        for batch in hop_moves(g, state) {
            let next = apply_move(state, &batch);
            if hop_best_steps(g, next, &mut memo) == Some(here - 1) {
                let mut fire = batch.clone();
                fire.sort_unstable();
                steps.push(ScheduleStep {
                    forced: fire.iter().map(|f| f.target).collect(),
                    forcers: fire.iter().map(|f| f.source).collect(),
                    forces: fire.clone(),
                });
                all_forces.extend(fire);
                state = next;
                advanced = true;
                break;
            }
        }
        assert!(advanced, "memoized optimum must be realizable");
    }
    all_forces.sort_unstable();
    Some((
        t,
        ForceSchedule {
            initial: b,
            forces: all_forces,
            steps,
        },
    ))
}

fn hop_best_steps(
    g: &Graph,
    state: RuleState,
    memo: &mut HashMap<(u128, u128), Option<u32>>,
) -> Option<u32> {
    if state.blue == g.vertices() {
        return Some(0);
    }
    let key = (state.blue.bits(), state.spent.bits());
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    // Mark in-progress to cut cycles; states only grow, so none occur, but the
    // sentinel also caches dead ends.
    memo.insert(key, None);
    let mut best: Option<u32> = None;
    for batch in hop_moves(g, state) {
        let next = apply_move(state, &batch);
        if let Some(t) = hop_best_steps(g, next, memo) {
            best = Some(best.map_or(t + 1, |b: u32| b.min(t + 1)));
        }
    }
    memo.insert(key, best);
    best
}

// --- schedule enumeration --------------------------------------------------------

const ENUMERATION_MAX_ASSIGNMENTS: u128 = 5_000_000;

/// Every valid set of forces of `b`, as complete schedules. Candidates assign
/// each white vertex one in-force source (a neighbor, or any vertex for
/// hopping) and are validated by replay.
pub fn enumerate_schedules(rule: Rule, g: &Graph, b: VertexSet) -> Vec<ForceSchedule> {
    let whites: Vec<usize> = (g.vertices() - b).iter().collect();
    if whites.is_empty() {
        return vec![ForceSchedule {
            initial: b,
            forces: vec![],
            steps: vec![],
        }];
    }
    let candidates: Vec<Vec<usize>> = whites
        .iter()
        .map(|&w| {
            if rule.is_stateful() {
                (0..g.order()).filter(|&v| v != w).collect()
            } else {
                g.neighbors(w).iter().collect()
            }
        })
        .collect();
    let mut total: u128 = 1;
    for c in &candidates {
        if c.is_empty() {
            return vec![];
        }
        total = total.saturating_mul(c.len() as u128);
    }
    assert!(
        total <= ENUMERATION_MAX_ASSIGNMENTS,
        "schedule enumeration would visit {total} assignments"
    );
    let mut out = Vec::new();
    let mut pick = vec![0usize; whites.len()];
    'outer: loop {
        let forces: Vec<Force> = whites
            .iter()
            .enumerate()
            .map(|(slot, &w)| Force::new(candidates[slot][pick[slot]], w))
            .collect();
        if let ReplayOutcome::Complete(s) = replay(rule, g, b, &forces) {
            out.push(s);
        }
        for slot in (0..pick.len()).rev() {
            pick[slot] += 1;
            if pick[slot] < candidates[slot].len() {
                continue 'outer;
            }
            pick[slot] = 0;
            if slot == 0 {
                break 'outer;
            }
        }
    }
    out
}

/// Every uniformly-as-fast-as-possible schedule: assignments whose in-forces
/// are valid at each target's synchronous step.
pub fn enumerate_uniformly_fastest(rule: Rule, g: &Graph, b: VertexSet) -> Vec<ForceSchedule> {
    debug_assert!(rule.deterministic_closure());
    let mut per_step_valid: Vec<Vec<Force>> = Vec::new();
    let mut blue = b;
    loop {
        let valid = valid_forces(rule, g, RuleState::colored(blue));
        if valid.is_empty() {
            break;
        }
        let targets: VertexSet = valid.iter().map(|f| f.target).collect();
        per_step_valid.push(valid);
        blue |= targets;
    }
    if blue != g.vertices() {
        return vec![];
    }
    let whites: Vec<usize> = (g.vertices() - b).iter().collect();
    let candidates: Vec<Vec<usize>> = whites
        .iter()
        .map(|&w| {
            per_step_valid
                .iter()
                .find_map(|step| {
                    let sources: Vec<usize> = step
                        .iter()
                        .filter(|f| f.target == w)
                        .map(|f| f.source)
                        .collect();
                    if sources.is_empty() {
                        None
                    } else {
                        Some(sources)
                    }
                })
                .expect("forcing set colors every white vertex")
        })
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; whites.len()];
    if whites.is_empty() {
        return vec![ForceSchedule {
            initial: b,
            forces: vec![],
            steps: vec![],
        }];
    }
    'outer: loop {
        let forces: Vec<Force> = whites
            .iter()
            .enumerate()
            .map(|(i, &w)| Force::new(candidates[i][pick[i]], w))
            .collect();
        if let ReplayOutcome::Complete(s) = replay(rule, g, b, &forces) {
            out.push(s);
        }
        for slot in (0..pick.len()).rev() {
            pick[slot] += 1;
            if pick[slot] < candidates[slot].len() {
                continue 'outer;
            }
            pick[slot] = 0;
            if slot == 0 {
                break 'outer;
            }
        }
    }
    out
}

// --- chains ---------------------------------------------------------------------

/// All maximal forcing chains of a schedule, plus the length (force count) of
/// the longest. A chain may not reuse a force, which admits the degenerate
/// two-cycle `x0 -> x1 -> x0` and nothing longer.
pub fn chains(schedule: &ForceSchedule) -> (Vec<Vec<usize>>, usize) {
    let forces = &schedule.forces;
    let mut out_of: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut in_of: HashMap<usize, usize> = HashMap::new();
    for (i, f) in forces.iter().enumerate() {
        out_of.entry(f.source).or_default().push(i);
        in_of.insert(f.target, i);
    }
    let mut found = Vec::new();
    let mut starts: Vec<usize> = out_of.keys().copied().collect();
    starts.sort_unstable();
    for v in starts {
        let mut path = vec![v];
        let mut used = Vec::new();
        grow_chain(forces, &out_of, &in_of, &mut path, &mut used, &mut found);
    }
    let longest = found.iter().map(|c| c.len() - 1).max().unwrap_or(0);
    (found, longest)
}

fn grow_chain(
    forces: &[Force],
    out_of: &HashMap<usize, Vec<usize>>,
    in_of: &HashMap<usize, usize>,
    path: &mut Vec<usize>,
    used: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    let mut extended = false;
    if let Some(nexts) = out_of.get(&last) {
        for &fi in nexts {
            if used.contains(&fi) {
                continue;
            }
            extended = true;
            path.push(forces[fi].target);
            used.push(fi);
            grow_chain(forces, out_of, in_of, path, used, found);
            used.pop();
            path.pop();
        }
    }
    if !extended && path.len() > 1 {
        // Forward-maximal; record only if also backward-maximal.
        let backward = in_of
            .get(&path[0])
            .is_none_or(|fi| used.contains(fi));
        if backward {
            found.push(path.clone());
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IndependenceCheck {
    AllChainsInducePaths,
    Violation(Vec<usize>),
}

/// Checks that every maximal chain's vertex set induces a path, with the
/// degenerate `x2 = x0` revisit accepted. Requires a local, symmetric, simple
/// rule.
pub fn check_internally_independent(
    rule: Rule,
    g: &Graph,
    schedule: &ForceSchedule,
) -> Result<IndependenceCheck, PropagationError> {
    let flags = rule.flags();
    if !flags.local || !flags.symmetric || !flags.simple {
        return Err(PropagationError::MissingFlag {
            rule,
            flag: "local + symmetric + simple",
        });
    }
    let (all, _) = chains(schedule);
    for chain in all {
        let mut verts: Vec<usize> = Vec::new();
        for &v in &chain {
            if !verts.contains(&v) {
                verts.push(v);
            }
        }
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                let expected = j == i + 1;
                if g.has_edge(verts[i], verts[j]) != expected {
                    return Ok(IndependenceCheck::Violation(chain));
                }
            }
        }
    }
    Ok(IndependenceCheck::AllChainsInducePaths)
}

/// Vertices that perform no force in the schedule.
pub fn terminus(schedule: &ForceSchedule, g: &Graph) -> VertexSet {
    let sources: VertexSet = schedule.forces.iter().map(|f| f.source).collect();
    g.vertices() - sources
}

/// Terminus of the schedule found by `min_propagation_time`; for the standard
/// and positive-semidefinite rules this is again a forcing set.
pub fn reversal(rule: Rule, g: &Graph, b: VertexSet) -> Result<VertexSet, PropagationError> {
    let (_, schedule) =
        min_propagation_time(rule, g, b).ok_or(PropagationError::NotForcing { rule, blue: b })?;
    Ok(terminus(&schedule, g))
}

/// Whether the longest chain of the recency-assigned uniformly-fastest
/// schedule has exactly `pt` forces. Requires a nearly well behaved, co-local,
/// co-symmetric, simple infection rule.
pub fn max_chain_equals_pt(rule: Rule, g: &Graph, b: VertexSet) -> Result<bool, PropagationError> {
    let flags = rule.flags();
    if !(flags.nearly_well_behaved
        && flags.co_local
        && flags.co_symmetric
        && flags.simple
        && flags.infectious)
    {
        return Err(PropagationError::MissingFlag {
            rule,
            flag: "nearly-well-behaved + co-local + co-symmetric + simple + infectious",
        });
    }
    let schedule = uniformly_fastest(rule, g, b)?;
    let (_, longest) = chains(&schedule);
    Ok(longest as u32 == schedule.propagation_time())
}
