//! Color change rules: the force-validity semantics of the six built-in rules
//! and their declared structural properties.
//!
//! A force `v -> w` turns the white vertex `w` blue and is attributed to `v`.
//! Rule semantics:
//!
//! * `Standard` (selector `z`): a blue `v` with a unique white neighbor `w`
//!   forces `w`.
//! * `Psd` (`zplus`): with white components `W_1..W_k` of `G - B`, a blue `v`
//!   forces `w` when `w` is the unique white neighbor of `v` inside
//!   `G[B ∪ W_i]`; i.e. the standard rule applied per white component.
//! * `Skew` (`skew`): any vertex, blue or white, with a unique white neighbor
//!   forces it.
//! * `KForcing(k)` (`kforce:<k>`): a blue `v` with at most `k` white neighbors
//!   forces each of them; emitted as one binary force per neighbor.
//! * `Bootstrap(r)` (`boot:<r>`): a white `w` with at least `r` blue neighbors
//!   is forced, attributed to each blue neighbor separately.
//! * `Hopping` (`hop`): every standard force, plus: a blue `v` with no white
//!   neighbors that has not yet performed a force may force any white vertex.

use crate::graph::{Graph, VertexSet};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Rule {
    Standard,
    Psd,
    Skew,
    KForcing(u32),
    Bootstrap(u32),
    Hopping,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RuleParseError {
    #[error("unknown rule selector `{0}`")]
    Unknown(String),
    #[error("rule `{0}` requires a positive integer parameter, e.g. `{0}:2`")]
    MissingParameter(String),
    #[error("bad parameter in `{0}`: must be a positive integer")]
    BadParameter(String),
}

/// Structural property flags a rule declares about itself. `well_behaved`
/// covers the four closure-and-counting properties (superset, force count,
/// spent removability, terminus sufficiency); `nearly_well_behaved` covers the
/// first two.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
pub struct RuleFlags {
    pub local: bool,
    pub symmetric: bool,
    pub simple: bool,
    pub infectious: bool,
    pub co_local: bool,
    pub co_symmetric: bool,
    pub well_behaved: bool,
    pub nearly_well_behaved: bool,
}

impl Rule {
    /// Parses a CLI selector: `z`, `zplus`, `skew`, `kforce:<k>`, `boot:<r>`, `hop`.
    pub fn parse_selector(s: &str) -> Result<Rule, RuleParseError> {
        match s {
            "z" => return Ok(Rule::Standard),
            "zplus" => return Ok(Rule::Psd),
            "skew" => return Ok(Rule::Skew),
            "hop" => return Ok(Rule::Hopping),
            "kforce" | "boot" => return Err(RuleParseError::MissingParameter(s.into())),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("kforce:") {
            let k: u32 = rest
                .parse()
                .ok()
                .filter(|&k| k >= 1)
                .ok_or_else(|| RuleParseError::BadParameter(s.into()))?;
            return Ok(Rule::KForcing(k));
        }
        if let Some(rest) = s.strip_prefix("boot:") {
            let r: u32 = rest
                .parse()
                .ok()
                .filter(|&r| r >= 1)
                .ok_or_else(|| RuleParseError::BadParameter(s.into()))?;
            return Ok(Rule::Bootstrap(r));
        }
        Err(RuleParseError::Unknown(s.into()))
    }

    pub fn selector(&self) -> String {
        match self {
            Rule::Standard => "z".into(),
            Rule::Psd => "zplus".into(),
            Rule::Skew => "skew".into(),
            Rule::KForcing(k) => format!("kforce:{k}"),
            Rule::Bootstrap(r) => format!("boot:{r}"),
            Rule::Hopping => "hop".into(),
        }
    }

    pub fn parameter(&self) -> Option<u32> {
        match self {
            Rule::KForcing(k) => Some(*k),
            Rule::Bootstrap(r) => Some(*r),
            _ => None,
        }
    }

    /// Only hopping carries per-vertex state (the spent set).
    pub fn is_stateful(&self) -> bool {
        matches!(self, Rule::Hopping)
    }

    /// Whether repeated saturation yields a unique final coloring.
    pub fn deterministic_closure(&self) -> bool {
        !self.is_stateful()
    }

    /// The property flags this rule declares as holding.
    pub fn flags(&self) -> RuleFlags {
        match self {
            Rule::Standard => RuleFlags {
                local: true,
                symmetric: true,
                simple: true,
                infectious: true,
                well_behaved: true,
                nearly_well_behaved: true,
                ..Default::default()
            },
            Rule::Psd => RuleFlags {
                simple: true,
                infectious: true,
                well_behaved: true,
                nearly_well_behaved: true,
                ..Default::default()
            },
            Rule::Skew => RuleFlags {
                local: true,
                symmetric: true,
                simple: true,
                nearly_well_behaved: true,
                ..Default::default()
            },
            Rule::KForcing(_) => RuleFlags {
                local: true,
                symmetric: true,
                simple: true,
                infectious: true,
                nearly_well_behaved: true,
                ..Default::default()
            },
            Rule::Bootstrap(_) => RuleFlags {
                simple: true,
                infectious: true,
                co_local: true,
                co_symmetric: true,
                nearly_well_behaved: true,
                ..Default::default()
            },
            Rule::Hopping => RuleFlags {
                symmetric: true,
                ..Default::default()
            },
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.selector())
    }
}

/// A single force event. The target must be white when the force fires.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Force {
    pub source: usize,
    pub target: usize,
}

impl Force {
    pub fn new(source: usize, target: usize) -> Force {
        debug_assert_ne!(source, target);
        Force { source, target }
    }
}

impl fmt::Display for Force {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.source, self.target)
    }
}

/// Coloring plus per-vertex state. `spent` marks vertices that have performed
/// a force; only hopping consults it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RuleState {
    pub blue: VertexSet,
    pub spent: VertexSet,
}

impl RuleState {
    pub fn colored(blue: VertexSet) -> RuleState {
        RuleState {
            blue,
            spent: VertexSet::EMPTY,
        }
    }
}

/// Exactly the forces valid under `rule` for this configuration, sorted by
/// (source, target).
pub fn valid_forces(rule: Rule, g: &Graph, state: RuleState) -> Vec<Force> {
    debug_assert!(state.blue.is_subset_of(g.vertices()));
    let white = g.vertices() - state.blue;
    let mut out = Vec::new();
    match rule {
        Rule::Standard => {
            for v in state.blue.iter() {
                let wn = g.neighbors(v) & white;
                if wn.len() == 1 {
                    out.push(Force::new(v, wn.first().unwrap()));
                }
            }
        }
        Rule::Psd => {
            for comp in g.components_within(white) {
                for v in state.blue.iter() {
                    let wn = g.neighbors(v) & comp;
                    if wn.len() == 1 {
                        out.push(Force::new(v, wn.first().unwrap()));
                    }
                }
            }
        }
        Rule::Skew => {
            for v in g.vertices().iter() {
                let wn = g.neighbors(v) & white;
                if wn.len() == 1 {
                    out.push(Force::new(v, wn.first().unwrap()));
                }
            }
        }
        Rule::KForcing(k) => {
            for v in state.blue.iter() {
                let wn = g.neighbors(v) & white;
                if !wn.is_empty() && wn.len() <= k as usize {
                    for w in wn.iter() {
                        out.push(Force::new(v, w));
                    }
                }
            }
        }
        Rule::Bootstrap(r) => {
            for w in white.iter() {
                let bn = g.neighbors(w) & state.blue;
                if bn.len() >= r as usize {
                    for v in bn.iter() {
                        out.push(Force::new(v, w));
                    }
                }
            }
        }
        Rule::Hopping => {
            for v in state.blue.iter() {
                let wn = g.neighbors(v) & white;
                if wn.len() == 1 {
                    out.push(Force::new(v, wn.first().unwrap()));
                } else if wn.is_empty() && !state.spent.contains(v) {
                    for w in white.iter() {
                        out.push(Force::new(v, w));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Membership test equivalent to `valid_forces(..).contains(&f)` with the
/// per-rule predicate evaluated directly.
pub fn is_valid_force(rule: Rule, g: &Graph, state: RuleState, f: Force) -> bool {
    if f.source == f.target || f.source >= g.order() || f.target >= g.order() {
        return false;
    }
    let white = g.vertices() - state.blue;
    if !white.contains(f.target) {
        return false;
    }
    match rule {
        Rule::Standard => {
            state.blue.contains(f.source)
                && g.neighbors(f.source) & white == VertexSet::singleton(f.target)
        }
        Rule::Psd => {
            if !state.blue.contains(f.source) || !g.has_edge(f.source, f.target) {
                return false;
            }
            let comp = g
                .components_within(white)
                .into_iter()
                .find(|c| c.contains(f.target))
                .expect("target is white");
            g.neighbors(f.source) & comp == VertexSet::singleton(f.target)
        }
        Rule::Skew => g.neighbors(f.source) & white == VertexSet::singleton(f.target),
        Rule::KForcing(k) => {
            if !state.blue.contains(f.source) {
                return false;
            }
            let wn = g.neighbors(f.source) & white;
            wn.contains(f.target) && wn.len() <= k as usize
        }
        Rule::Bootstrap(r) => {
            state.blue.contains(f.source)
                && g.has_edge(f.source, f.target)
                && (g.neighbors(f.target) & state.blue).len() >= r as usize
        }
        Rule::Hopping => {
            if !state.blue.contains(f.source) {
                return false;
            }
            let wn = g.neighbors(f.source) & white;
            if wn == VertexSet::singleton(f.target) {
                true
            } else {
                wn.is_empty() && !state.spent.contains(f.source)
            }
        }
    }
}

/// The built-in rules exercised by censuses and falsifiers, with representative
/// parameters for the parametric families.
pub fn builtin_rules() -> Vec<Rule> {
    vec![
        Rule::Standard,
        Rule::Psd,
        Rule::Skew,
        Rule::KForcing(2),
        Rule::Bootstrap(1),
        Rule::Bootstrap(2),
        Rule::Hopping,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::cycle(4)
    }

    #[test]
    fn selector_round_trip() {
        for sel in ["z", "zplus", "skew", "kforce:2", "boot:3", "hop"] {
            assert_eq!(Rule::parse_selector(sel).unwrap().selector(), sel);
        }
        assert!(Rule::parse_selector("kforce").is_err());
        assert!(Rule::parse_selector("boot:0").is_err());
        assert!(Rule::parse_selector("nope").is_err());
    }

    #[test]
    fn standard_needs_unique_white_neighbor() {
        // On C4 a lone blue vertex has two white neighbors: no force at all.
        let forces = valid_forces(
            Rule::Standard,
            &c4(),
            RuleState::colored(VertexSet::singleton(0)),
        );
        assert!(forces.is_empty());
    }

    #[test]
    fn psd_forces_across_components_on_c4() {
        // Blue {0, 2}: vertices 1 and 3 are singleton white components, so all
        // four forces are valid.
        let forces = valid_forces(
            Rule::Psd,
            &c4(),
            RuleState::colored(VertexSet::from_iter([0, 2])),
        );
        assert_eq!(
            forces,
            vec![
                Force::new(0, 1),
                Force::new(0, 3),
                Force::new(2, 1),
                Force::new(2, 3),
            ]
        );
    }

    #[test]
    fn bootstrap_counts_blue_neighbors_of_the_target() {
        let forces = valid_forces(
            Rule::Bootstrap(2),
            &c4(),
            RuleState::colored(VertexSet::from_iter([0, 2])),
        );
        assert_eq!(
            forces,
            vec![
                Force::new(0, 1),
                Force::new(0, 3),
                Force::new(2, 1),
                Force::new(2, 3),
            ]
        );
        // r=3 exceeds every degree on C4.
        assert!(valid_forces(
            Rule::Bootstrap(3),
            &c4(),
            RuleState::colored(VertexSet::from_iter([0, 2]))
        )
        .is_empty());
    }

    #[test]
    fn skew_lets_white_vertices_force() {
        let k2 = Graph::complete(2);
        let forces = valid_forces(Rule::Skew, &k2, RuleState::colored(VertexSet::EMPTY));
        assert_eq!(forces, vec![Force::new(0, 1), Force::new(1, 0)]);
    }

    #[test]
    fn k_forcing_emits_one_force_per_white_neighbor() {
        let star = Graph::star(3);
        let forces = valid_forces(
            Rule::KForcing(3),
            &star,
            RuleState::colored(VertexSet::singleton(0)),
        );
        assert_eq!(forces.len(), 3);
        assert!(valid_forces(
            Rule::KForcing(2),
            &star,
            RuleState::colored(VertexSet::singleton(0))
        )
        .is_empty());
    }

    #[test]
    fn hopping_respects_spent() {
        let g = Graph::empty_graph(3);
        let fresh = RuleState::colored(VertexSet::singleton(0));
        assert_eq!(
            valid_forces(Rule::Hopping, &g, fresh),
            vec![Force::new(0, 1), Force::new(0, 2)]
        );
        let spent = RuleState {
            blue: VertexSet::singleton(0),
            spent: VertexSet::singleton(0),
        };
        assert!(valid_forces(Rule::Hopping, &g, spent).is_empty());
    }

    #[test]
    fn membership_predicate_matches_enumeration() {
        for rule in builtin_rules() {
            for n in 0..=4usize {
                for g in crate::census::enumerate_graphs(n).unwrap().iter() {
                    for blue_bits in 0..(1u128 << n) {
                        let state = RuleState::colored(VertexSet::from_bits(blue_bits));
                        let listed = valid_forces(rule, g, state);
                        for s in 0..n {
                            for t in 0..n {
                                if s == t {
                                    continue;
                                }
                                let f = Force::new(s, t);
                                assert_eq!(
                                    is_valid_force(rule, g, state, f),
                                    listed.contains(&f),
                                    "{rule} on {g:?} blue={:?} force={f}",
                                    state.blue
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn declared_flags_table() {
        assert!(Rule::Standard.flags().local);
        assert!(Rule::Standard.flags().well_behaved);
        assert!(!Rule::Psd.flags().local);
        assert!(Rule::Psd.flags().simple);
        assert!(!Rule::Skew.flags().infectious);
        assert!(Rule::Bootstrap(2).flags().co_local);
        assert!(Rule::Bootstrap(2).flags().nearly_well_behaved);
        assert!(!Rule::Bootstrap(2).flags().well_behaved);
        assert!(!Rule::Hopping.flags().simple);
        assert!(Rule::Hopping.flags().symmetric);
    }
}
