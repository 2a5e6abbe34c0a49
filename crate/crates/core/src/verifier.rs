//! Properness of k-SRD labelings.
//!
//! A labeling is proper when every attack pattern of at most `k` vertices
//! can be answered: each attacked vertex labeled 0 is assigned a neighbor
//! `u` with `f(u) >= 2`, and no `u` takes more than `f(u) - 1` of them.
//! Attacked vertices with a positive label protect themselves.
//!
//! Defending a set of zeros also defends each of its subsets, so
//! [`is_proper`] only enumerates zero sets of the maximal size
//! `min(k, |V_0|)`. Two reductions keep that enumeration small; both follow
//! from Hall's condition for the capacitated assignment:
//!
//! * a zero whose own defenders have joint capacity `>= min(k, |V_0|)` can
//!   never belong to a violating set, so it is left out;
//! * zeros with identical defender sets are interchangeable, so only
//!   subsets that use the lowest ids of each such class are visited.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::VerifyError;
use crate::graph::{Graph, Vertex};
use crate::labeling::Labeling;
use crate::matching::{DefenseNetwork, Matcher};

/// Default cap on the number of enumerated subsets.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { budget: DEFAULT_BUDGET }
    }
}

/// A set of simultaneously attacked vertices, `1 <= size <= k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AttackPattern {
    vertices: Vec<Vertex>,
}

impl AttackPattern {
    pub fn new(mut vertices: Vec<Vertex>, k: usize, n: usize) -> Result<Self, VerifyError> {
        if vertices.is_empty() {
            return Err(VerifyError::EmptyPattern);
        }
        if vertices.len() > k {
            return Err(VerifyError::PatternTooLarge { size: vertices.len(), k });
        }
        if let Some(&vertex) = vertices.iter().find(|&&v| v >= n) {
            return Err(VerifyError::InvalidVertex { vertex, n });
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(VerifyError::RepeatedVertex(w[0]));
        }
        Ok(AttackPattern { vertices })
    }

    /// Sorted ascending.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }
}

/// Attacked zero vertex -> defender, sorted by attacked vertex.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DefenseAssignment {
    pub pairs: Vec<(Vertex, Vertex)>,
}

impl DefenseAssignment {
    /// Checks both assignment invariants against the graph directly.
    pub fn is_valid_for(&self, graph: &Graph, labeling: &Labeling, pattern: &AttackPattern) -> bool {
        let mut used = vec![0u32; graph.vertex_count()];
        for &(z, u) in &self.pairs {
            if labeling.label(u) < 2 || !graph.has_edge(z, u) {
                return false;
            }
            used[u] += 1;
            if used[u] > labeling.label(u) - 1 {
                return false;
            }
        }
        let mut covered: Vec<Vertex> = self.pairs.iter().map(|p| p.0).collect();
        covered.sort_unstable();
        let attacked_zeros: Vec<Vertex> =
            pattern.vertices().iter().copied().filter(|&v| labeling.label(v) == 0).collect();
        covered == attacked_zeros
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Defense {
    Feasible(DefenseAssignment),
    /// `hall_set` is a set `S` of attacked zeros whose joint defender
    /// capacity is smaller than `|S|`.
    Infeasible {
        hall_set: Vec<Vertex>,
    },
}

impl Defense {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Defense::Feasible(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub proper: bool,
    /// A failing attack pattern; present iff improper.
    pub witness: Option<AttackPattern>,
    /// Zeros of the witness with a capacity shortfall; present iff improper.
    pub deficiency_set: Option<Vec<Vertex>>,
    /// Number of enumeration nodes visited.
    pub subsets_checked: u64,
}

fn check_inputs(graph: &Graph, labeling: &Labeling) -> Result<(), VerifyError> {
    let n = graph.vertex_count();
    if labeling.len() != n {
        return Err(VerifyError::LabelingMismatch { got: labeling.len(), n });
    }
    if labeling.k() > n {
        return Err(VerifyError::KExceedsVertexCount { k: labeling.k(), n });
    }
    Ok(())
}

/// Decides whether a single attack pattern can be answered.
pub fn defendable(graph: &Graph, labeling: &Labeling, pattern: &AttackPattern) -> Result<Defense, VerifyError> {
    let n = graph.vertex_count();
    if labeling.len() != n {
        return Err(VerifyError::LabelingMismatch { got: labeling.len(), n });
    }
    let pattern = AttackPattern::new(pattern.vertices.clone(), labeling.k(), n)?;
    let net = DefenseNetwork::new(graph, labeling);
    let mut matcher = Matcher::new(&net);
    for &v in pattern.vertices() {
        if labeling.label(v) == 0 && !matcher.push(v) {
            return Ok(Defense::Infeasible { hall_set: matcher.hall_violator(v) });
        }
    }
    let mut pairs = matcher.assignment();
    pairs.sort_unstable();
    Ok(Defense::Feasible(DefenseAssignment { pairs }))
}

/// Zeros that can appear in a violating set, with the class structure used
/// to skip interchangeable subsets.
struct Candidates {
    zeros: Vec<Vertex>,
    /// Index into `zeros` of the previous member of the same class.
    class_prev: Vec<Option<usize>>,
}

impl Candidates {
    fn new(net: &DefenseNetwork, zeros: impl Iterator<Item = Vertex>) -> Self {
        let zeros: Vec<Vertex> = zeros.collect();
        let mut class_prev = vec![None; zeros.len()];
        for i in 0..zeros.len() {
            class_prev[i] = (0..i).rev().find(|&j| net.defenders(zeros[j]) == net.defenders(zeros[i]));
        }
        Candidates { zeros, class_prev }
    }
}

struct ProperSearch<'a> {
    cand: &'a Candidates,
    matcher: Matcher<'a>,
    chosen: Vec<bool>,
    target: usize,
    budget: u64,
    visited: u64,
}

enum Outcome {
    Pass,
    Fail(Vec<Vertex>, Vec<Vertex>),
    OutOfBudget,
}

impl ProperSearch<'_> {
    // Lexicographic DFS over canonical subsets of size `target`; `failed`
    // holds the first zero that could not be assigned on this branch.
    fn dfs(&mut self, start: usize, failed: Option<Vertex>) -> Outcome {
        self.visited += 1;
        if self.visited > self.budget {
            return Outcome::OutOfBudget;
        }
        let depth = self.matcher.len();
        if depth == self.target {
            return match failed {
                None => Outcome::Pass,
                Some(z) => {
                    let hall = self.matcher.hall_violator(z);
                    let mut set: Vec<Vertex> = self.matcher_clients();
                    set.sort_unstable();
                    Outcome::Fail(set, hall)
                }
            };
        }
        let need = self.target - depth;
        let zeros = &self.cand.zeros;
        let mut i = start;
        while i + need <= zeros.len() {
            if self.cand.class_prev[i].is_none_or(|p| self.chosen[p]) {
                let z = zeros[i];
                let ok = self.matcher.push(z);
                self.chosen[i] = true;
                let next_failed = failed.or(if ok { None } else { Some(z) });
                let out = self.dfs(i + 1, next_failed);
                self.chosen[i] = false;
                if !matches!(out, Outcome::Pass) {
                    return out;
                }
                self.matcher.pop();
            }
            i += 1;
        }
        Outcome::Pass
    }

    fn matcher_clients(&self) -> Vec<Vertex> {
        self.chosen.iter().enumerate().filter(|(_, &c)| c).map(|(i, _)| self.cand.zeros[i]).collect()
    }
}

/// Full properness check with witness extraction.
pub fn is_proper(graph: &Graph, labeling: &Labeling, limits: Limits) -> Result<Verdict, VerifyError> {
    check_inputs(graph, labeling)?;
    let k = labeling.k();
    let zero_count = labeling.labels().iter().filter(|&&l| l == 0).count();
    let target_full = k.min(zero_count);
    if target_full == 0 {
        return Ok(Verdict { proper: true, witness: None, deficiency_set: None, subsets_checked: 0 });
    }
    let net = DefenseNetwork::new(graph, labeling);
    let weak = (0..graph.vertex_count()).filter(|&v| labeling.label(v) == 0 && net.reach(v) < target_full as u64);
    let cand = Candidates::new(&net, weak);
    let target = target_full.min(cand.zeros.len());
    if target == 0 {
        return Ok(Verdict { proper: true, witness: None, deficiency_set: None, subsets_checked: 0 });
    }
    let mut search = ProperSearch {
        cand: &cand,
        matcher: Matcher::new(&net),
        chosen: vec![false; cand.zeros.len()],
        target,
        budget: limits.budget,
        visited: 0,
    };
    let outcome = search.dfs(0, None);
    let visited = search.visited;
    match outcome {
        Outcome::Pass => Ok(Verdict { proper: true, witness: None, deficiency_set: None, subsets_checked: visited }),
        Outcome::OutOfBudget => Err(VerifyError::BudgetExceeded { budget: limits.budget }),
        Outcome::Fail(set, hall) => {
            let witness = pad_pattern(set, k, graph.vertex_count());
            Ok(Verdict { proper: false, witness: Some(witness), deficiency_set: Some(hall), subsets_checked: visited })
        }
    }
}

/// Extends `set` to exactly `k` vertices with the lowest ids not in it.
fn pad_pattern(mut set: Vec<Vertex>, k: usize, n: usize) -> AttackPattern {
    let mut v = 0;
    while set.len() < k && v < n {
        if !set.contains(&v) {
            set.push(v);
        }
        v += 1;
    }
    set.sort_unstable();
    AttackPattern { vertices: set }
}

/// Minimum over nonempty zero sets `S`, `|S| <= k`, of
/// `sum_{u in N(S), f(u) >= 2} (f(u) - 1) - |S|`. `None` when there is no
/// zero vertex (the slack is unbounded). Non-negative iff proper.
pub fn min_capacity_slack(graph: &Graph, labeling: &Labeling, limits: Limits) -> Result<Option<i64>, VerifyError> {
    check_inputs(graph, labeling)?;
    let net = DefenseNetwork::new(graph, labeling);
    let cand = Candidates::new(&net, (0..graph.vertex_count()).filter(|&v| labeling.label(v) == 0));
    if cand.zeros.is_empty() {
        return Ok(None);
    }
    struct Slack<'a> {
        net: &'a DefenseNetwork,
        cand: &'a Candidates,
        chosen: Vec<bool>,
        covered: Vec<u32>,
        capacity: i64,
        max_size: usize,
        best: i64,
        budget: u64,
        visited: u64,
    }
    impl Slack<'_> {
        fn dfs(&mut self, start: usize, size: usize) -> bool {
            for i in start..self.cand.zeros.len() {
                if !self.cand.class_prev[i].is_none_or(|p| self.chosen[p]) {
                    continue;
                }
                self.visited += 1;
                if self.visited > self.budget {
                    return false;
                }
                let z = self.cand.zeros[i];
                for &u in self.net.defenders(z) {
                    if self.covered[u] == 0 {
                        self.capacity += i64::from(self.net.capacity(u));
                    }
                    self.covered[u] += 1;
                }
                self.chosen[i] = true;
                self.best = self.best.min(self.capacity - (size + 1) as i64);
                let ok = size + 1 == self.max_size || self.dfs(i + 1, size + 1);
                self.chosen[i] = false;
                for &u in self.net.defenders(z) {
                    self.covered[u] -= 1;
                    if self.covered[u] == 0 {
                        self.capacity -= i64::from(self.net.capacity(u));
                    }
                }
                if !ok {
                    return false;
                }
            }
            true
        }
    }
    let mut s = Slack {
        net: &net,
        cand: &cand,
        chosen: vec![false; cand.zeros.len()],
        covered: vec![0; graph.vertex_count()],
        capacity: 0,
        max_size: labeling.k(),
        best: i64::MAX,
        budget: limits.budget,
        visited: 0,
    };
    if !s.dfs(0, 0) {
        return Err(VerifyError::BudgetExceeded { budget: limits.budget });
    }
    Ok(Some(s.best))
}
