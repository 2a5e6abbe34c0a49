//! Exact k-SRD numbers on small graphs, plus exhaustive oracles for the
//! related domination numbers.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::SolveError;
use crate::graph::{Graph, Vertex};
use crate::labeling::{max_label, Labeling};
use crate::verifier::{is_proper, Limits};

/// Default cap on branch-and-bound nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;
/// Default cap on the size of an exhaustive search space.
pub const DEFAULT_SPACE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub node_budget: u64,
    pub verify: Limits,
    /// A proper labeling used as the starting incumbent (for instance a
    /// family construction). Ignored unless it is proper for this graph.
    pub seed: Option<Labeling>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { node_budget: DEFAULT_NODE_BUDGET, verify: Limits::default(), seed: None }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub weight_prunes: u64,
    pub defense_prunes: u64,
    pub leaves_checked: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub gamma: u64,
    pub optimal: Labeling,
    pub stats: SolveStats,
}

/// Lower bound on γ_{k-SRD} that holds for every graph: `n` when `k = n`,
/// `k + 1` when `k < n`, raised to `⌈2n/3⌉` for cubic graphs at `k = 2`.
pub fn global_lower_bound(graph: &Graph, k: usize) -> u64 {
    let n = graph.vertex_count() as u64;
    let k64 = k as u64;
    let mut lb = if k64 >= n { n } else { k64 + 1 };
    if k == 2 && graph.is_cubic() {
        lb = lb.max((2 * n).div_ceil(3));
    }
    lb
}

fn check_k(graph: &Graph, k: usize) -> Result<(), SolveError> {
    let n = graph.vertex_count();
    if k == 0 || k > n {
        return Err(SolveError::InvalidK { k, n });
    }
    Ok(())
}

struct Search<'a> {
    graph: &'a Graph,
    k: usize,
    order: Vec<Vertex>,
    alphabet: u32,
    labels: Vec<u32>,
    assigned: Vec<bool>,
    unassigned_nbrs: Vec<usize>,
    strong_nbrs: Vec<usize>,
    best: Labeling,
    best_weight: u64,
    lower_bound: u64,
    verify: Limits,
    node_budget: u64,
    stats: SolveStats,
}

enum Stop {
    Budget,
    Verify(crate::error::VerifyError),
}

impl Search<'_> {
    // A zero whose neighborhood is fully assigned must see a label >= 2.
    fn zero_is_dead(&self, v: Vertex) -> bool {
        self.assigned[v] && self.labels[v] == 0 && self.unassigned_nbrs[v] == 0 && self.strong_nbrs[v] == 0
    }

    fn assign(&mut self, v: Vertex, label: u32) -> bool {
        self.labels[v] = label;
        self.assigned[v] = true;
        let mut dead = self.zero_is_dead(v);
        for &w in self.graph.neighbors(v) {
            self.unassigned_nbrs[w] -= 1;
            if label >= 2 {
                self.strong_nbrs[w] += 1;
            }
            dead |= self.zero_is_dead(w);
        }
        !dead
    }

    fn unassign(&mut self, v: Vertex) {
        let label = self.labels[v];
        for &w in self.graph.neighbors(v) {
            self.unassigned_nbrs[w] += 1;
            if label >= 2 {
                self.strong_nbrs[w] -= 1;
            }
        }
        self.assigned[v] = false;
        self.labels[v] = 0;
    }

    fn done(&self) -> bool {
        self.best_weight <= self.lower_bound
    }

    fn dfs(&mut self, depth: usize, weight: u64) -> Result<(), Stop> {
        self.stats.nodes += 1;
        if self.stats.nodes > self.node_budget {
            return Err(Stop::Budget);
        }
        if depth == self.order.len() {
            self.stats.leaves_checked += 1;
            let candidate =
                Labeling::new(self.graph, self.k, self.labels.clone()).expect("search labels stay within the alphabet");
            let verdict = is_proper(self.graph, &candidate, self.verify).map_err(Stop::Verify)?;
            if verdict.proper {
                self.best_weight = weight;
                self.best = candidate;
            }
            return Ok(());
        }
        let v = self.order[depth];
        for label in 0..=self.alphabet {
            if weight + u64::from(label) >= self.best_weight {
                self.stats.weight_prunes += 1;
                break;
            }
            let alive = self.assign(v, label);
            if alive {
                self.dfs(depth + 1, weight + u64::from(label))?;
            } else {
                self.stats.defense_prunes += 1;
            }
            self.unassign(v);
            if self.done() {
                break;
            }
        }
        Ok(())
    }
}

/// Exact γ_{k-SRD}(G) by depth-first branch and bound.
///
/// Vertices are labeled in order of descending degree (ties by id). A
/// branch is cut when its partial weight reaches the incumbent, or when a
/// zero vertex with all neighbors labeled has no neighbor labeled `>= 2`.
/// Complete labelings are checked with [`is_proper`]. The search stops
/// early once the incumbent meets [`global_lower_bound`].
pub fn gamma_ksrd_exact(graph: &Graph, k: usize, options: &SolveOptions) -> Result<SolveResult, SolveError> {
    check_k(graph, k)?;
    let n = graph.vertex_count();
    let mut best = Labeling::ones(graph, k);
    if let Some(seed) = &options.seed {
        if seed.len() == n && seed.weight() < best.weight() {
            let seed = seed.with_k(graph, k).ok();
            if let Some(seed) = seed {
                if is_proper(graph, &seed, options.verify)?.proper {
                    best = seed;
                }
            }
        }
    }
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(graph.degree(v)), v));
    let best_weight = best.weight();
    let mut search = Search {
        graph,
        k,
        order,
        alphabet: max_label(graph, k),
        labels: vec![0; n],
        assigned: vec![false; n],
        unassigned_nbrs: (0..n).map(|v| graph.degree(v)).collect(),
        strong_nbrs: vec![0; n],
        best,
        best_weight,
        lower_bound: global_lower_bound(graph, k),
        verify: options.verify,
        node_budget: options.node_budget,
        stats: SolveStats::default(),
    };
    if !search.done() {
        match search.dfs(0, 0) {
            Ok(()) => {}
            Err(Stop::Budget) => {
                return Err(SolveError::BudgetExceeded { budget: options.node_budget, best: search.best })
            }
            Err(Stop::Verify(e)) => return Err(e.into()),
        }
    }
    Ok(SolveResult { gamma: search.best_weight, optimal: search.best, stats: search.stats })
}

/// `base^exp`, saturating.
fn space_size(base: u64, exp: usize) -> u64 {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

/// Reference oracle: enumerates labelings by increasing total weight and
/// returns the first proper one. Refuses when the full space
/// `(min(Δ, k) + 2)^n` exceeds `space_budget`.
pub fn gamma_ksrd_bruteforce(graph: &Graph, k: usize, space_budget: u64) -> Result<(u64, Labeling), SolveError> {
    check_k(graph, k)?;
    let n = graph.vertex_count();
    let top = max_label(graph, k);
    let space = space_size(u64::from(top) + 1, n);
    if space > space_budget {
        return Err(SolveError::TooLarge(format!("{space} labelings exceed the budget {space_budget}")));
    }
    let limits = Limits { budget: u64::MAX };
    let mut labels = vec![0u32; n];
    for w in 0..=(n as u64 * u64::from(top)) {
        let mut found = None;
        compositions(&mut labels, 0, w, top, &mut |labels| {
            let f = Labeling::new(graph, k, labels.to_vec()).expect("within alphabet");
            match is_proper(graph, &f, limits) {
                Ok(v) if v.proper => {
                    found = Some(Ok(f));
                    true
                }
                Ok(_) => false,
                Err(e) => {
                    found = Some(Err(e));
                    true
                }
            }
        });
        if let Some(f) = found {
            let f = f?;
            return Ok((w, f));
        }
    }
    unreachable!("the all-ones labeling is proper")
}

// Visits every vector with entries in 0..=top summing to `rest` (positions
// `i..`), in lexicographic order. Stops when `visit` returns true.
fn compositions(labels: &mut [u32], i: usize, rest: u64, top: u32, visit: &mut impl FnMut(&[u32]) -> bool) -> bool {
    let n = labels.len();
    if i == n {
        return rest == 0 && visit(labels);
    }
    if rest > (n - i) as u64 * u64::from(top) {
        return false;
    }
    let hi = u64::from(top).min(rest) as u32;
    for l in 0..=hi {
        labels[i] = l;
        if compositions(labels, i + 1, rest - u64::from(l), top, visit) {
            return true;
        }
    }
    labels[i] = 0;
    false
}

/// Which vertices a k-dominating set must k-dominate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum KDomConvention {
    /// Only vertices outside `D` need `k` neighbors in `D`.
    #[default]
    Standard,
    /// Every vertex, including members of `D`, needs `k` neighbors in `D`.
    Verbatim,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelatedNumbers {
    /// Domination number γ(G).
    pub gamma_dom: u64,
    /// k-domination number γ_k(G); `None` when no set qualifies (possible
    /// only under the verbatim convention).
    pub gamma_k_dom: Option<u64>,
    /// Roman k-domination number γ_{kR}(G).
    pub gamma_kr: u64,
}

/// γ, γ_k and γ_{kR} by exhaustive enumeration (`2^n` subsets, `3^n`
/// labelings, both bounded by `space_budget`).
pub fn related_numbers(
    graph: &Graph,
    k: usize,
    convention: KDomConvention,
    space_budget: u64,
) -> Result<RelatedNumbers, SolveError> {
    let n = graph.vertex_count();
    if space_size(3, n) > space_budget {
        return Err(SolveError::TooLarge(format!("3^{n} labelings exceed the budget {space_budget}")));
    }
    if n >= 64 {
        return Err(SolveError::TooLarge(format!("{n} vertices")));
    }
    let masks: Vec<u64> = (0..n).map(|v| graph.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w))).collect();
    let gamma_dom = min_k_dominating(&masks, 1, KDomConvention::Standard).expect("V dominates itself");
    let gamma_k_dom = min_k_dominating(&masks, k, convention);
    let gamma_kr = roman_k_domination(&masks, k);
    Ok(RelatedNumbers { gamma_dom, gamma_k_dom, gamma_kr })
}

fn min_k_dominating(masks: &[u64], k: usize, convention: KDomConvention) -> Option<u64> {
    let n = masks.len();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let ok = |set: u64| {
        (0..n).all(|v| {
            let inside = set >> v & 1 == 1;
            (inside && convention == KDomConvention::Standard) || (masks[v] & set).count_ones() as usize >= k
        })
    };
    (0..=full).filter(|&s| ok(s)).map(|s| u64::from(s.count_ones())).min()
}

fn roman_k_domination(masks: &[u64], k: usize) -> u64 {
    let n = masks.len();
    // digits: 0, 1, 2 per vertex; enumerate as (twos, ones) disjoint masks
    let mut best = n as u64;
    let mut digits = vec![0u8; n];
    loop {
        let mut twos = 0u64;
        let mut weight = 0u64;
        for (v, &d) in digits.iter().enumerate() {
            if d == 2 {
                twos |= 1 << v;
            }
            weight += u64::from(d);
        }
        if weight < best && (0..n).all(|v| digits[v] != 0 || (masks[v] & twos).count_ones() as usize >= k) {
            best = weight;
        }
        let mut i = 0;
        while i < n && digits[i] == 2 {
            digits[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        digits[i] += 1;
    }
    best
}
