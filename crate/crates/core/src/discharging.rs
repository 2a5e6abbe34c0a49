//! Charge redistribution certifying `γ_{2-SRD}(G) >= 2n/3` on cubic graphs.
//!
//! Every vertex starts with its label as charge (R0). Each zero vertex then
//! receives exactly 2/3 by the first rule that applies:
//!
//! - R1: 2/3 from its lowest-id neighbor labeled 3;
//! - R2: 2/3 from its only neighbor labeled 2;
//! - R3: 1/3 from each of its two lowest-id neighbors labeled 2.
//!
//! Charges are integer multiples of 1/3, so conservation is exact.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::DischargeError;
use crate::graph::{Graph, Vertex};
use crate::labeling::Labeling;
use crate::verifier::{is_proper, Limits};

/// Charge moved from one vertex to another, in third-units.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transfer {
    pub from: Vertex,
    pub to: Vertex,
    pub amount: i64,
    pub rule: Rule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    R1,
    R2,
    R3,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
        }
    }
}

/// Final charges `g` (third-units) and the transfers that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DischargeState {
    pub charges: Vec<i64>,
    pub transfers: Vec<Transfer>,
    /// `weight(f)`; conservation requires `Σ charges = 3 * weight`.
    pub weight: u64,
}

impl DischargeState {
    pub fn total(&self) -> i64 {
        self.charges.iter().sum()
    }

    pub fn min_charge(&self) -> Option<i64> {
        self.charges.iter().copied().min()
    }
}

/// Applies R0-R3 to a proper 2-SRD labeling of a cubic graph.
pub fn discharge_cubic_2srd(graph: &Graph, labeling: &Labeling) -> Result<DischargeState, DischargeError> {
    if !graph.is_cubic() {
        return Err(DischargeError::NotCubic);
    }
    if labeling.k() != 2 {
        return Err(DischargeError::WrongK(labeling.k()));
    }
    if !is_proper(graph, labeling, Limits::default())?.proper {
        return Err(DischargeError::Improper);
    }
    let mut charges: Vec<i64> = labeling.labels().iter().map(|&l| 3 * i64::from(l)).collect();
    let mut transfers = Vec::new();
    for u in labeling.level_set(0) {
        let nbrs = graph.neighbors(u);
        let threes = nbrs.iter().copied().filter(|&v| labeling.label(v) == 3);
        let twos: Vec<Vertex> = nbrs.iter().copied().filter(|&v| labeling.label(v) == 2).collect();
        let mut give = |from: Vertex, amount: i64, rule: Rule| {
            charges[from] -= amount;
            charges[u] += amount;
            transfers.push(Transfer { from, to: u, amount, rule });
        };
        if let Some(v) = threes.min() {
            give(v, 2, Rule::R1);
        } else if let [v] = twos[..] {
            give(v, 2, Rule::R2);
        } else if twos.len() >= 2 {
            give(twos[0], 1, Rule::R3);
            give(twos[1], 1, Rule::R3);
        } else {
            return Err(DischargeError::NoRule(u));
        }
    }
    Ok(DischargeState { charges, transfers, weight: labeling.weight() })
}

/// Outcome of [`check_discharge`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DischargeReport {
    pub ok: bool,
    pub conserved: bool,
    pub min_charge: Option<i64>,
    /// Vertices whose final charge is below 2 third-units.
    pub violations: Vec<Vertex>,
    /// One line per violating vertex listing its incident transfers.
    pub details: Vec<String>,
}

/// True iff every charge is at least 2/3 and the total equals
/// `3 * weight` third-units.
pub fn check_discharge(state: &DischargeState) -> DischargeReport {
    let conserved = state.total() == 3 * state.weight as i64;
    let violations: Vec<Vertex> = (0..state.charges.len()).filter(|&v| state.charges[v] < 2).collect();
    let details = violations
        .iter()
        .map(|&v| {
            let incident: Vec<String> = state
                .transfers
                .iter()
                .filter(|t| t.from == v || t.to == v)
                .map(|t| format!("{}->{} {}/3 ({})", t.from, t.to, t.amount, t.rule.as_str()))
                .collect();
            format!("vertex {v}: charge {}/3; transfers [{}]", state.charges[v], incident.join(", "))
        })
        .collect();
    DischargeReport {
        ok: conserved && violations.is_empty(),
        conserved,
        min_charge: state.min_charge(),
        violations,
        details,
    }
}
