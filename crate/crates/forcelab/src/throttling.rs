//! Exact optimization over initial blue sets: forcing number, best
//! propagation time at a fixed size, smallest size at a fixed propagation
//! time, weighted throttling, and (no initial cost) product throttling.
//!
//! Weights are exact rationals so that strict-inequality thresholds are
//! decided without rounding. Searches sweep subsets in increasing size, and
//! within a size in increasing bitmask order; pruning uses only the bound
//! `objective >= |B|` (weighted, since pt >= 0) or `objective >= |B|` with
//! pt >= 1 (product, proper subsets), so results are exact for every rule.

use crate::graph::{subsets_of_size, Graph, VertexSet};
use crate::propagation::{min_propagation_time, ForceSchedule};
use crate::rules::Rule;
use num_rational::Rational64;
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightError {
    #[error("weight must be nonnegative, got {0}")]
    Negative(Rational64),
    #[error("weight denominator must be nonzero")]
    ZeroDenominator,
    #[error("cannot parse `{0}` as p/q")]
    Parse(String),
}

/// A nonnegative rational weight `w = w_nat + w_frac` with `0 <= w_frac < 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Weight(Rational64);

impl Weight {
    pub const ZERO: Weight = Weight(Rational64::new_raw(0, 1));
    pub const ONE: Weight = Weight(Rational64::new_raw(1, 1));

    pub fn new(value: Rational64) -> Result<Weight, WeightError> {
        if value < Rational64::zero() {
            return Err(WeightError::Negative(value));
        }
        Ok(Weight(value))
    }

    pub fn from_ratio(p: i64, q: i64) -> Result<Weight, WeightError> {
        if q == 0 {
            return Err(WeightError::ZeroDenominator);
        }
        Weight::new(Rational64::new(p, q))
    }

    /// Parses `p/q` or a bare integer.
    pub fn parse(s: &str) -> Result<Weight, WeightError> {
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (
                p.trim().parse().map_err(|_| WeightError::Parse(s.into()))?,
                q.trim().parse().map_err(|_| WeightError::Parse(s.into()))?,
            ),
            None => (
                s.trim().parse().map_err(|_| WeightError::Parse(s.into()))?,
                1,
            ),
        };
        Weight::from_ratio(p, q)
    }

    pub fn value(&self) -> Rational64 {
        self.0
    }

    /// Integer part `w_nat`.
    pub fn integer_part(&self) -> i64 {
        self.0.to_integer()
    }

    /// Fractional part `w_frac` in `[0, 1)`.
    pub fn fractional_part(&self) -> Rational64 {
        self.0.fract()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// An exact objective value; `Infinite` means no feasible blue set exists.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Objective {
    Finite(Rational64),
    Infinite,
}

impl Objective {
    pub fn finite(v: i64) -> Objective {
        Objective::Finite(Rational64::from_integer(v))
    }

    pub fn as_rational(&self) -> Option<Rational64> {
        match self {
            Objective::Finite(v) => Some(*v),
            Objective::Infinite => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Objective::Finite(_))
    }

    /// Integer value, when finite and integral.
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            Objective::Finite(v) if v.is_integer() => Some(v.to_integer()),
            _ => None,
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::Finite(v) if v.is_integer() => write!(f, "{}", v.to_integer()),
            Objective::Finite(v) => write!(f, "{}/{}", v.numer(), v.denom()),
            Objective::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CertificateKind {
    ForcingNumber,
    PtAtSize(usize),
    SizeAtPt(u32),
    Weighted(Weight),
    Product,
}

/// An optimal value plus the witnessing blue set and schedule; auditable by
/// replaying the schedule. `exhaustive` records that the search space was
/// swept completely (always true for these solvers).
#[derive(Clone, Debug)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub objective: Objective,
    pub blue: Option<VertexSet>,
    pub pt: Option<u32>,
    pub schedule: Option<ForceSchedule>,
    pub exhaustive: bool,
}

impl Certificate {
    fn infinite(kind: CertificateKind) -> Certificate {
        Certificate {
            kind,
            objective: Objective::Infinite,
            blue: None,
            pt: None,
            schedule: None,
            exhaustive: true,
        }
    }

    /// Recomputes the objective from the witness blue set and compares.
    pub fn replay_check(&self, rule: Rule, g: &Graph) -> bool {
        match (&self.objective, self.blue) {
            (Objective::Infinite, None) => true,
            (Objective::Finite(v), Some(blue)) => {
                let Some((pt, _)) = min_propagation_time(rule, g, blue) else {
                    return false;
                };
                if self.pt != Some(pt) {
                    return false;
                }
                let recomputed = match &self.kind {
                    CertificateKind::ForcingNumber => Rational64::from_integer(blue.len() as i64),
                    CertificateKind::PtAtSize(_) => Rational64::from_integer(pt as i64),
                    CertificateKind::SizeAtPt(_) => Rational64::from_integer(blue.len() as i64),
                    CertificateKind::Weighted(w) => {
                        Rational64::from_integer(blue.len() as i64)
                            + w.value() * Rational64::from_integer(pt as i64)
                    }
                    CertificateKind::Product => {
                        Rational64::from_integer(blue.len() as i64)
                            * Rational64::from_integer(pt as i64)
                    }
                };
                recomputed == *v
            }
            _ => false,
        }
    }
}

/// Size of a minimum forcing set, searched in ascending size.
pub fn forcing_number(rule: Rule, g: &Graph) -> Certificate {
    let n = g.order();
    for k in 0..=n {
        for b in subsets_of_size(n, k) {
            if let Some((pt, schedule)) = min_propagation_time(rule, g, b) {
                return Certificate {
                    kind: CertificateKind::ForcingNumber,
                    objective: Objective::finite(k as i64),
                    blue: Some(b),
                    pt: Some(pt),
                    schedule: Some(schedule),
                    exhaustive: true,
                };
            }
        }
    }
    unreachable!("the full vertex set is always a forcing set");
}

/// Minimum propagation time over forcing sets of size exactly `k`.
pub fn pt_at_size(rule: Rule, g: &Graph, k: usize) -> Certificate {
    let mut best: Option<(u32, VertexSet, ForceSchedule)> = None;
    for b in subsets_of_size(g.order(), k) {
        if let Some((pt, schedule)) = min_propagation_time(rule, g, b) {
            if best.as_ref().is_none_or(|(bp, _, _)| pt < *bp) {
                best = Some((pt, b, schedule));
            }
        }
    }
    match best {
        Some((pt, b, s)) => Certificate {
            kind: CertificateKind::PtAtSize(k),
            objective: Objective::finite(pt as i64),
            blue: Some(b),
            pt: Some(pt),
            schedule: Some(s),
            exhaustive: true,
        },
        None => Certificate::infinite(CertificateKind::PtAtSize(k)),
    }
}

/// Minimum cardinality of a forcing set with propagation time exactly `p`.
pub fn size_at_pt(rule: Rule, g: &Graph, p: u32) -> Certificate {
    let n = g.order();
    for k in 0..=n {
        for b in subsets_of_size(n, k) {
            if let Some((pt, schedule)) = min_propagation_time(rule, g, b) {
                if pt == p {
                    return Certificate {
                        kind: CertificateKind::SizeAtPt(p),
                        objective: Objective::finite(k as i64),
                        blue: Some(b),
                        pt: Some(pt),
                        schedule: Some(schedule),
                        exhaustive: true,
                    };
                }
            }
        }
    }
    Certificate::infinite(CertificateKind::SizeAtPt(p))
}

/// Exact minimum of `|B| + w * pt(G;B)` over all blue sets. With `w = 1` this
/// is the classic throttling number; with `w = 0` it degenerates to the
/// forcing number.
pub fn throttle_weighted(rule: Rule, g: &Graph, w: Weight) -> Certificate {
    let n = g.order();
    let mut best: Option<(Rational64, VertexSet, u32, ForceSchedule)> = None;
    'sizes: for k in 0..=n {
        if let Some((obj, _, _, _)) = &best {
            // pt >= 0, so any B of this size already costs at least |B|.
            if Rational64::from_integer(k as i64) >= *obj {
                break 'sizes;
            }
        }
        for b in subsets_of_size(n, k) {
            if let Some((pt, schedule)) = min_propagation_time(rule, g, b) {
                let obj = Rational64::from_integer(k as i64)
                    + w.value() * Rational64::from_integer(pt as i64);
                if best.as_ref().is_none_or(|(bo, _, _, _)| obj < *bo) {
                    best = Some((obj, b, pt, schedule));
                }
            }
        }
    }
    let (obj, b, pt, schedule) = best.expect("the full vertex set always yields |V|");
    Certificate {
        kind: CertificateKind::Weighted(w),
        objective: Objective::Finite(obj),
        blue: Some(b),
        pt: Some(pt),
        schedule: Some(schedule),
        exhaustive: true,
    }
}

/// Exact minimum of `|B| * pt(G;B)` over proper-subset forcing sets; infinite
/// when no proper subset forces the graph.
pub fn throttle_product(rule: Rule, g: &Graph) -> Certificate {
    let n = g.order();
    let mut best: Option<(i64, VertexSet, u32, ForceSchedule)> = None;
    'sizes: for k in 0..n {
        if let Some((obj, _, _, _)) = &best {
            // Proper subsets have pt >= 1, so the objective is at least |B|.
            if k as i64 >= *obj {
                break 'sizes;
            }
        }
        for b in subsets_of_size(n, k) {
            if let Some((pt, schedule)) = min_propagation_time(rule, g, b) {
                let obj = k as i64 * pt as i64;
                if best.as_ref().is_none_or(|(bo, _, _, _)| obj < *bo) {
                    best = Some((obj, b, pt, schedule));
                }
            }
        }
    }
    match best {
        Some((obj, b, pt, s)) => Certificate {
            kind: CertificateKind::Product,
            objective: Objective::finite(obj),
            blue: Some(b),
            pt: Some(pt),
            schedule: Some(s),
            exhaustive: true,
        },
        None => Certificate::infinite(CertificateKind::Product),
    }
}

/// Throttling for r-neighbor bootstrap percolation: `min |B| + perc_r(G;B)`.
pub fn bootstrap_throttle(g: &Graph, r: u32) -> Certificate {
    throttle_weighted(Rule::Bootstrap(r), g, Weight::ONE)
}
