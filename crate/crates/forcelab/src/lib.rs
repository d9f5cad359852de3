//! Exact combinatorial engine for zero forcing under abstract color change
//! rules: propagation times, throttling parameters (sum, weighted, product),
//! forbidden-induced-subgraph families for high throttling numbers, and
//! empirical falsifiers for rule properties — all at exhaustive desk scale.

pub mod axioms;
pub mod canon;
pub mod census;
pub mod forbidden;
pub mod graph;
pub mod graph6;
pub mod propagation;
pub mod rules;
pub mod subgraph;
pub mod throttling;
pub mod verify;

pub use canon::{canonical_form, canonical_graph, isomorphic, CanonicalForm};
pub use census::{census_through, enumerate_graphs, load_census, read_graph6_file};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use propagation::{
    chains, check_internally_independent, closure, enumerate_schedules, is_forcing_set,
    max_chain_equals_pt, min_propagation_time, replay, reversal, terminus, uniformly_fastest,
    ForceSchedule, IndependenceCheck, PropagationError, ReplayOutcome, ScheduleStep,
};
pub use rules::{is_valid_force, valid_forces, Force, Rule, RuleFlags, RuleState};
pub use subgraph::{contains_induced, is_induced_embedding};
pub use throttling::{
    bootstrap_throttle, forcing_number, pt_at_size, size_at_pt, throttle_product,
    throttle_weighted, Certificate, CertificateKind, Objective, Weight,
};
