//! Closed-form k-SRD values and the explicit labelings that attain them.
//!
//! [`formula`] returns the known value for a family member together with
//! whether it is exact or only a bound, and [`construct`] emits a labeling
//! of that weight. Every constructed labeling is checked with the verifier
//! before it is returned.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::ConstructionError;
use crate::family::{make_family, polytope_vertex, Family, FamilySpec};
use crate::graph::Graph;
use crate::labeling::Labeling;
use crate::solver::RelatedNumbers;
use crate::verifier::{is_proper, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Exact,
    LowerBound,
    UpperBound,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Exact => "exact",
            Kind::LowerBound => "lower_bound",
            Kind::UpperBound => "upper_bound",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A value for γ_{k-SRD} with its kind and the result it comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FormulaResult {
    pub value: u64,
    pub kind: Kind,
    pub source: &'static str,
}

impl FormulaResult {
    fn exact(value: u64, source: &'static str) -> Self {
        FormulaResult { value, kind: Kind::Exact, source }
    }
}

pub mod source {
    pub const COMPLETE: &str = "Lemma-Kn";
    pub const K_EQ_N: &str = "Thm-k-eq-n";
    pub const K_LT_N: &str = "Thm-k-lt-n";
    pub const UNIVERSAL_VERTEX: &str = "Cor-universal-vertex";
    pub const PATH: &str = "Thm-Pn";
    pub const CYCLE: &str = "Prop-Cn";
    pub const STAR: &str = "Prop-Sn";
    pub const WHEEL: &str = "Prop-Wn";
    pub const BIPARTITE: &str = "Thm-Knp";
    pub const GRID2: &str = "Thm-grid2";
    pub const POLYTOPE_D: &str = "Prop-Dn";
    pub const POLYTOPE_RPP: &str = "Prop-Rpp";
    pub const POLYTOPE_A: &str = "Prop-An";
    pub const CUBIC: &str = "Thm-cubic";
    pub const ALL_ONES: &str = "all-ones";
    pub const DOMINATION: &str = "Prop-domination";
    pub const ROMAN_K: &str = "Prop-roman-k";
    pub const K_DOMINATION: &str = "Cor-k-domination";
}

fn check_k(spec: &FamilySpec, k: usize) -> Result<usize, ConstructionError> {
    spec.validate()?;
    let n = spec.vertex_count();
    if k == 0 {
        return Err(ConstructionError::ZeroK);
    }
    if k > n {
        return Err(ConstructionError::KExceedsVertexCount { k, n });
    }
    Ok(n)
}

/// `⌈2kn/(2k+1)⌉`, the value for paths and cycles.
pub fn path_value(n: usize, k: usize) -> u64 {
    ((2 * k * n) as u64).div_ceil((2 * k + 1) as u64)
}

/// Value for the `2 x n` grid: `⌈2kn/(k+1)⌉`, plus one unless
/// `n mod (k+1)` lies strictly between 0 and `(k+1)/2`.
pub fn grid2_value(n: usize, k: usize) -> u64 {
    let base = ((2 * k * n) as u64).div_ceil((k + 1) as u64);
    let r = n % (k + 1);
    if r > 0 && 2 * r < k + 1 {
        base
    } else {
        base + 1
    }
}

/// Known value of γ_{k-SRD} for a family member. Outside the hypotheses of
/// the family-specific results only the general bounds are reported:
/// `n` (exact) when `k = n`, otherwise `k + 1` as a lower bound.
pub fn formula(spec: &FamilySpec, k: usize) -> Result<FormulaResult, ConstructionError> {
    let total = check_k(spec, k)?;
    let n = spec.a;
    let k64 = k as u64;
    let universal = |source| FormulaResult::exact(if k < total { k64 + 1 } else { total as u64 }, source);
    let result = match spec.family {
        Family::Complete => universal(source::COMPLETE),
        Family::Star if k >= 2 => universal(source::STAR),
        Family::Wheel if k >= 2 => universal(source::WHEEL),
        Family::Star | Family::Wheel => universal(source::UNIVERSAL_VERTEX),
        Family::Path if k >= 2 => FormulaResult::exact(path_value(n, k), source::PATH),
        Family::Cycle if k >= 2 => FormulaResult::exact(path_value(n, k), source::CYCLE),
        Family::CompleteBipartite if spec.b == 1 => universal(source::UNIVERSAL_VERTEX),
        Family::CompleteBipartite => {
            let p = spec.b;
            let value = if k + 1 < p { 2 * k64 + 2 } else { n.min(k) as u64 + p as u64 };
            FormulaResult::exact(value, source::BIPARTITE)
        }
        Family::Grid2 if k >= 2 => FormulaResult::exact(grid2_value(n, k), source::GRID2),
        Family::PolytopeD if k == 2 => FormulaResult::exact((8 * n as u64).div_ceil(3), source::POLYTOPE_D),
        Family::PolytopeRpp if k == 2 => FormulaResult::exact(4 * n as u64, source::POLYTOPE_RPP),
        Family::PolytopeA if k == 2 => {
            let value = if n.is_multiple_of(2) { 3 * n as u64 / 2 } else { 3 * n as u64 / 2 + 1 };
            FormulaResult { value, kind: Kind::UpperBound, source: source::POLYTOPE_A }
        }
        _ if k == total => FormulaResult::exact(total as u64, source::K_EQ_N),
        _ => FormulaResult { value: k64 + 1, kind: Kind::LowerBound, source: source::K_LT_N },
    };
    Ok(result)
}

/// A `2 x n` label matrix stored as `(top, bottom)` columns.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GridPattern {
    pub columns: Vec<[u32; 2]>,
}

impl GridPattern {
    /// `M_0` (`2 x k`): top row `0 2 0 2 ..`, bottom row `2 0 2 0 ..`.
    pub fn central(k: usize) -> Self {
        let columns = (0..k).map(|j| if j % 2 == 0 { [0, 2] } else { [2, 0] }).collect();
        GridPattern { columns }
    }

    /// `B_m` (`2 x m`): top row `1 0 2 0 2 ..`, bottom row `0 2 0 2 ..`.
    pub fn border(m: usize) -> Self {
        let columns = (0..m)
            .map(|j| match j {
                0 => [1, 0],
                _ if j % 2 == 1 => [0, 2],
                _ => [2, 0],
            })
            .collect();
        GridPattern { columns }
    }

    /// `P_0` (`2 x (k+1)`): alternating columns around the middle triple
    /// `(2,0) (0,0) (0,2)`, `⌈(k-2)/2⌉` columns on the left and
    /// `⌊(k-2)/2⌋` on the right.
    pub fn period(k: usize) -> Self {
        let left = (k - 2).div_ceil(2);
        let right = (k - 2) / 2;
        let mut columns: Vec<[u32; 2]> = (0..left).rev().map(|d| if d % 2 == 0 { [0, 2] } else { [2, 0] }).collect();
        columns.extend([[2, 0], [0, 0], [0, 2]]);
        columns.extend((0..right).map(|d| if d % 2 == 0 { [2, 0] } else { [0, 2] }));
        GridPattern { columns }
    }

    /// Upside-down reflection (row swap).
    pub fn flipped(&self) -> Self {
        GridPattern { columns: self.columns.iter().map(|&[t, b]| [b, t]).collect() }
    }

    /// Left-to-right reflection (column reversal).
    pub fn reversed(&self) -> Self {
        GridPattern { columns: self.columns.iter().rev().copied().collect() }
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn weight(&self) -> u64 {
        self.columns.iter().map(|c| u64::from(c[0] + c[1])).sum()
    }

    fn append(&mut self, other: &GridPattern) {
        self.columns.extend_from_slice(&other.columns);
    }

    /// Labels in grid id order: top row first, then bottom row.
    pub fn to_labels(&self) -> Vec<u32> {
        self.columns.iter().map(|c| c[0]).chain(self.columns.iter().map(|c| c[1])).collect()
    }
}

/// Candidate label matrices for `P_2 x P_n` (`n > k`), in the order they are
/// tried. Only the multi-period case has more than one candidate; the
/// variants differ in whether the inserted periods and the part of the
/// matrix to their right are reflected upside down.
pub fn grid2_candidates(n: usize, k: usize) -> Vec<GridPattern> {
    assert!(k >= 2 && n > k);
    let periods = n / (k + 1);
    let r = n % (k + 1);
    let base_width = k + 1 + r;
    let left_width = (base_width - k) / 2;
    let right_width = (base_width - k).div_ceil(2);

    let left = GridPattern::border(left_width).reversed();
    let central = GridPattern::central(k);
    let right =
        if k.is_multiple_of(2) { GridPattern::border(right_width).flipped() } else { GridPattern::border(right_width) };

    // split point inside M_0
    let cut = if k.is_multiple_of(2) { k / 2 } else { (k - 1) / 2 };
    let head = GridPattern { columns: central.columns[..cut].to_vec() };
    let tail = GridPattern { columns: central.columns[cut..].to_vec() };

    let mut inserted = GridPattern::default();
    let p0 = GridPattern::period(k);
    for i in 0..periods.saturating_sub(1) {
        if k % 2 == 1 && i % 2 == 0 {
            inserted.append(&p0.flipped());
        } else {
            inserted.append(&p0);
        }
    }

    let mut rest = tail;
    rest.append(&right);
    let variants: &[(bool, bool)] = if inserted.width() == 0 {
        &[(false, false)]
    } else {
        &[(false, false), (true, false), (false, true), (true, true)]
    };
    variants
        .iter()
        .map(|&(flip_inserted, flip_rest)| {
            let mut m = left.clone();
            m.append(&head);
            m.append(&if flip_inserted { inserted.flipped() } else { inserted.clone() });
            m.append(&if flip_rest { rest.flipped() } else { rest.clone() });
            m
        })
        .collect()
}

fn path_labels(n: usize, k: usize) -> Vec<u32> {
    if n <= 2 * k {
        return vec![1; n];
    }
    let mut block = vec![0, 2, 0, 2, 0];
    for _ in 0..k - 2 {
        block.extend([2, 0]);
    }
    let copies = n / (2 * k + 1);
    let mut labels: Vec<u32> = block.iter().copied().cycle().take(copies * block.len()).collect();
    labels.resize(n, 1);
    labels
}

fn polytope_d_labels(n: usize) -> Vec<u32> {
    let mut f = vec![0u32; 4 * n];
    let mut set = |block: usize, i: usize, value: u32| f[polytope_vertex(block, i, n)] = value;
    let (a, b, c, d) = (0, 1, 2, 3);
    match n % 3 {
        0 => {
            for i in 0..n {
                if i % 3 == 1 {
                    set(a, i, 2);
                    set(c, i, 2);
                }
                if i % 3 == 0 {
                    set(b, i, 2);
                    set(d, i, 2);
                }
            }
        }
        1 => {
            for i in 0..n - 1 {
                if i % 3 == 1 {
                    set(a, i, 2);
                    set(c, i, 2);
                }
                if i % 3 == 0 {
                    set(b, i, 2);
                }
                if i >= 1 && i % 3 == 2 {
                    set(d, i, 2);
                }
            }
            set(b, n - 1, 2);
            set(d, 0, 1);
        }
        _ => {
            for i in 3..n - 2 {
                if i % 3 == 1 {
                    set(a, i, 2);
                }
                if i % 3 == 2 {
                    set(b, i, 2);
                    set(d, i, 2);
                }
                if i % 3 == 0 {
                    set(c, i, 2);
                }
            }
            set(a, 1, 2);
            set(a, n - 1, 2);
            set(b, 0, 2);
            set(c, 1, 2);
            set(c, 2, 2);
            set(c, n - 2, 2);
            set(d, 0, 2);
        }
    }
    f
}

fn polytope_rpp_labels(n: usize) -> Vec<u32> {
    let mut f = vec![0u32; 6 * n];
    for i in 0..n {
        f[polytope_vertex(1, i, n)] = 2;
        f[polytope_vertex(4, i, n)] = 2;
    }
    f
}

fn polytope_a_labels(n: usize) -> Vec<u32> {
    let mut f = vec![0u32; 3 * n];
    for i in 1..=n / 2 {
        f[polytope_vertex(1, 2 * i, n)] = 3;
    }
    // for odd n, a_1 and c_0 are the only vertices with no neighbor in V_3
    if n % 2 == 1 {
        f[polytope_vertex(0, 1, n)] = 1;
        f[polytope_vertex(2, 0, n)] = 1;
    }
    f
}

fn hub_labels(total: usize, hub: usize, k: usize) -> Vec<u32> {
    if k >= total {
        return vec![1; total];
    }
    let mut f = vec![0; total];
    f[hub] = (k + 1) as u32;
    f
}

/// Candidate labelings for `(spec, k)`, best first. Empty when there is no
/// explicit construction.
fn candidates(spec: &FamilySpec, k: usize, total: usize) -> Vec<Vec<u32>> {
    let n = spec.a;
    match spec.family {
        _ if k == total => vec![vec![1; total]],
        Family::Complete | Family::Star | Family::Wheel => vec![hub_labels(total, 0, k)],
        Family::Path | Family::Cycle if k >= 2 => vec![path_labels(n, k)],
        Family::CompleteBipartite => {
            let p = spec.b;
            let mut f = vec![0; total];
            if k + 1 < p {
                f[0] = (k + 1) as u32;
                f[n] = (k + 1) as u32;
            } else {
                f[n] = (n.min(k) + 1) as u32;
                f[n + 1..].iter_mut().for_each(|l| *l = 1);
            }
            vec![f]
        }
        Family::Grid2 if k >= 2 => {
            if n <= k {
                vec![vec![1; total]]
            } else {
                grid2_candidates(n, k).iter().map(GridPattern::to_labels).collect()
            }
        }
        Family::PolytopeD if k == 2 => vec![polytope_d_labels(n)],
        Family::PolytopeRpp if k == 2 => vec![polytope_rpp_labels(n)],
        Family::PolytopeA if k == 2 => vec![polytope_a_labels(n)],
        _ => Vec::new(),
    }
}

/// The explicit labeling attaining [`formula`] for `(spec, k)`.
///
/// The result is verified proper and its weight equals the formula value;
/// a candidate failing either check is never returned.
pub fn construct(spec: &FamilySpec, k: usize) -> Result<Labeling, ConstructionError> {
    construct_with(spec, k, Limits::default())
}

pub fn construct_with(spec: &FamilySpec, k: usize, limits: Limits) -> Result<Labeling, ConstructionError> {
    let total = check_k(spec, k)?;
    let expected = formula(spec, k)?;
    let graph = make_family(spec)?;
    let list = candidates(spec, k, total);
    if list.is_empty() {
        return Err(ConstructionError::NoConstruction(spec.to_string()));
    }
    let mut witness = None;
    for labels in list {
        let Ok(f) = Labeling::new(&graph, k, labels) else { continue };
        if f.weight() != expected.value {
            continue;
        }
        let verdict = is_proper(&graph, &f, limits)?;
        if verdict.proper {
            return Ok(f);
        }
        witness = verdict.witness.map(|w| w.vertices().to_vec());
    }
    Err(ConstructionError::SelfCheckFailed { spec: spec.to_string(), k, witness })
}

/// A bound on γ_{k-SRD} together with its kind and origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: u64,
    pub kind: Kind,
    pub source: &'static str,
}

/// Every bound that applies to an arbitrary graph. Upper bounds derived
/// from the related domination numbers appear only when `related` is given.
pub fn general_bounds(graph: &Graph, k: usize, related: Option<&RelatedNumbers>) -> Vec<Bound> {
    let n = graph.vertex_count() as u64;
    let k64 = k as u64;
    let mut out = Vec::new();
    let mut push = |value, kind, source| out.push(Bound { value, kind, source });
    if k64 == n {
        push(n, Kind::Exact, source::K_EQ_N);
    } else if k64 < n {
        push(k64 + 1, Kind::LowerBound, source::K_LT_N);
        if (0..graph.vertex_count()).any(|v| graph.degree(v) as u64 == n - 1) {
            push(k64 + 1, Kind::Exact, source::UNIVERSAL_VERTEX);
        }
    }
    if k == 2 && graph.is_cubic() {
        push((2 * n).div_ceil(3), Kind::LowerBound, source::CUBIC);
    }
    push(n, Kind::UpperBound, source::ALL_ONES);
    if let Some(r) = related {
        push((k64 + 1) * r.gamma_dom, Kind::UpperBound, source::DOMINATION);
        push(r.gamma_kr, Kind::UpperBound, source::ROMAN_K);
        if let Some(gk) = r.gamma_k_dom {
            push(2 * gk, Kind::UpperBound, source::K_DOMINATION);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(formula(&spec("grid2:4"), 2).unwrap(), FormulaResult::exact(6, source::GRID2));
        assert_eq!(formula(&spec("grid2:3"), 2).unwrap().value, 5);
        let a7 = formula(&spec("an:7"), 2).unwrap();
        assert_eq!((a7.value, a7.kind), (11, Kind::UpperBound));
        assert_eq!(formula(&spec("dn:6"), 2).unwrap(), FormulaResult::exact(16, "Prop-Dn"));
        assert_eq!(formula(&spec("rpp:8"), 2).unwrap().value, 32);
        assert_eq!(formula(&spec("kn:5"), 2).unwrap().value, 3);
        assert_eq!(formula(&spec("kn:5"), 5).unwrap().value, 5);
        assert_eq!(formula(&spec("knp:5,4"), 2).unwrap().value, 6);
        assert_eq!(formula(&spec("knp:5,4"), 3).unwrap().value, 7);
        assert_eq!(formula(&spec("knp:3,2"), 2).unwrap().value, 4);
        assert_eq!(formula(&spec("path:11"), 2).unwrap().value, 9);
        assert_eq!(formula(&spec("path:5"), 1).unwrap().kind, Kind::LowerBound);
        assert_eq!(formula(&spec("grid:3,3"), 9).unwrap(), FormulaResult::exact(9, source::K_EQ_N));
        assert!(matches!(formula(&spec("path:3"), 4), Err(ConstructionError::KExceedsVertexCount { .. })));
    }

    #[test]
    fn block_shapes() {
        for k in 2..=6 {
            let m0 = GridPattern::central(k);
            let p0 = GridPattern::period(k);
            assert_eq!((m0.width(), m0.weight()), (k, 2 * k as u64));
            assert_eq!((p0.width(), p0.weight()), (k + 1, 2 * k as u64));
            let labels = path_labels(2 * k + 1, k);
            assert_eq!(labels.iter().filter(|&&l| l == 0).count(), k + 1);
            assert_eq!(labels.iter().filter(|&&l| l == 2).count(), k);
        }
        for m in 1..8 {
            assert_eq!(GridPattern::border(m).weight(), 2 * m as u64 - 1);
        }
        assert_eq!(GridPattern::period(2).columns, vec![[2, 0], [0, 0], [0, 2]]);
    }

    #[test]
    fn path_example() {
        let f = construct(&spec("path:11"), 2).unwrap();
        assert_eq!(f.labels(), &[0, 2, 0, 2, 0, 0, 2, 0, 2, 0, 1]);
        assert_eq!(f.weight(), 9);
    }

    #[test]
    fn rpp_example() {
        let f = construct(&spec("rpp:5"), 2).unwrap();
        assert_eq!(f.weight(), 20);
        let twos = f.level_set(2);
        assert_eq!(twos.len(), 10);
        assert!(twos.iter().all(|&v| (5..10).contains(&v) || (20..25).contains(&v)));
    }

    #[test]
    fn d6_weight() {
        assert_eq!(construct(&spec("dn:6"), 2).unwrap().weight(), 16);
    }

    #[test]
    fn complete_k_eq_n() {
        let f = construct(&spec("kn:4"), 4).unwrap();
        assert_eq!(f.labels(), &[1, 1, 1, 1]);
    }

    #[test]
    fn no_construction_for_generic_grid() {
        assert!(matches!(construct(&spec("grid:3,3"), 2), Err(ConstructionError::NoConstruction(_))));
    }

    #[test]
    fn general_bounds_examples() {
        let d5 = make_family(&spec("dn:5")).unwrap();
        let b = general_bounds(&d5, 2, None);
        assert!(b.contains(&Bound { value: 14, kind: Kind::LowerBound, source: source::CUBIC }));
        let p4 = make_family(&spec("path:4")).unwrap();
        assert_eq!(general_bounds(&p4, 4, None)[0], Bound { value: 4, kind: Kind::Exact, source: source::K_EQ_N });
        let related = RelatedNumbers { gamma_dom: 2, gamma_k_dom: Some(3), gamma_kr: 5 };
        let b = general_bounds(&make_family(&spec("path:6")).unwrap(), 3, Some(&related));
        assert!(b.contains(&Bound { value: 8, kind: Kind::UpperBound, source: source::DOMINATION }));
        assert!(b.contains(&Bound { value: 6, kind: Kind::UpperBound, source: source::K_DOMINATION }));
    }
}
