//! Generators for the named graph families.
//!
//! Vertex ids are assigned block by block in naming order: for the polytopes
//! the `a`-block occupies ids `0..n`, the `b`-block `n..2n` and so on, with
//! indices taken modulo `n`. Families whose members are named from 1
//! (`a_1..a_n`, `v_1..v_n`, `u_1..u_n` then `v_1..v_p`) are shifted to
//! 0-based ids. Grids are row-major: `a_{i,j}` has id `(i-1)*n + (j-1)`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::FamilyError;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Wheel,
    CompleteBipartite,
    Grid2,
    Grid,
    PolytopeD,
    PolytopeRpp,
    PolytopeA,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Star,
        Family::Wheel,
        Family::CompleteBipartite,
        Family::Grid2,
        Family::Grid,
        Family::PolytopeD,
        Family::PolytopeRpp,
        Family::PolytopeA,
    ];

    /// Short token used in spec strings such as `dn:7`.
    pub fn token(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "kn",
            Family::Star => "star",
            Family::Wheel => "wheel",
            Family::CompleteBipartite => "knp",
            Family::Grid2 => "grid2",
            Family::Grid => "grid",
            Family::PolytopeD => "dn",
            Family::PolytopeRpp => "rpp",
            Family::PolytopeA => "an",
        }
    }

    pub fn from_token(s: &str) -> Option<Family> {
        let f = match s.to_ascii_lowercase().as_str() {
            "path" | "pn" => Family::Path,
            "cycle" | "cn" => Family::Cycle,
            "complete" | "kn" => Family::Complete,
            "star" | "sn" => Family::Star,
            "wheel" | "wn" => Family::Wheel,
            "knp" | "complete_bipartite" | "bipartite" => Family::CompleteBipartite,
            "grid2" | "ladder" => Family::Grid2,
            "grid" => Family::Grid,
            "dn" | "polytope_d" | "d" => Family::PolytopeD,
            "rpp" | "polytope_rpp" | "rn" => Family::PolytopeRpp,
            "an" | "polytope_a" | "a" => Family::PolytopeA,
            _ => return None,
        };
        Some(f)
    }

    fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite | Family::Grid => 2,
            _ => 1,
        }
    }
}

/// A family identifier together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub family: Family,
    /// `(n)` families store `n` in `a` and 0 in `b`; `knp` stores `(n, p)`,
    /// `grid` stores `(m, n)`.
    pub a: usize,
    pub b: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Result<Self, FamilyError> {
        if family.arity() != 1 {
            return Err(FamilyError::BadParams {
                family: family.token(),
                expected: "two parameters",
                got: n.to_string(),
            });
        }
        let spec = FamilySpec { family, a: n, b: 0 };
        spec.validate()?;
        Ok(spec)
    }

    pub fn new2(family: Family, a: usize, b: usize) -> Result<Self, FamilyError> {
        if family.arity() != 2 {
            return Err(FamilyError::BadParams {
                family: family.token(),
                expected: "one parameter",
                got: format!("{a},{b}"),
            });
        }
        let spec = FamilySpec { family, a, b };
        spec.validate()?;
        Ok(spec)
    }

    pub fn path(n: usize) -> Self {
        FamilySpec::new(Family::Path, n).expect("path parameter")
    }
    pub fn cycle(n: usize) -> Self {
        FamilySpec::new(Family::Cycle, n).expect("cycle parameter")
    }
    pub fn complete(n: usize) -> Self {
        FamilySpec::new(Family::Complete, n).expect("complete parameter")
    }
    pub fn star(n: usize) -> Self {
        FamilySpec::new(Family::Star, n).expect("star parameter")
    }
    pub fn wheel(n: usize) -> Self {
        FamilySpec::new(Family::Wheel, n).expect("wheel parameter")
    }
    pub fn knp(n: usize, p: usize) -> Self {
        FamilySpec::new2(Family::CompleteBipartite, n, p).expect("knp parameters")
    }
    pub fn grid2(n: usize) -> Self {
        FamilySpec::new(Family::Grid2, n).expect("grid2 parameter")
    }
    pub fn grid(m: usize, n: usize) -> Self {
        FamilySpec::new2(Family::Grid, m, n).expect("grid parameters")
    }
    pub fn polytope_d(n: usize) -> Self {
        FamilySpec::new(Family::PolytopeD, n).expect("dn parameter")
    }
    pub fn polytope_rpp(n: usize) -> Self {
        FamilySpec::new(Family::PolytopeRpp, n).expect("rpp parameter")
    }
    pub fn polytope_a(n: usize) -> Self {
        FamilySpec::new(Family::PolytopeA, n).expect("an parameter")
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let (family, a, b) = (self.family.token(), self.a, self.b);
        let fail =
            |requirement: &'static str| Err(FamilyError::OutOfRange { family, requirement, got: self.params_string() });
        match self.family {
            Family::Path | Family::Complete | Family::Grid2 if a < 1 => fail("n >= 1"),
            Family::Cycle | Family::Star if a < 3 => fail("n >= 3"),
            Family::Wheel if a < 4 => fail("n >= 4"),
            Family::CompleteBipartite if !(a >= b && b >= 1) => fail("n >= p >= 1"),
            Family::Grid if a < 1 || b < 1 => fail("m >= 1 and n >= 1"),
            Family::PolytopeD | Family::PolytopeRpp | Family::PolytopeA if a < 5 => fail("n >= 5"),
            _ => Ok(()),
        }
    }

    pub fn params_string(&self) -> String {
        match self.family.arity() {
            2 => format!("{},{}", self.a, self.b),
            _ => self.a.to_string(),
        }
    }

    /// Number of vertices of the generated graph.
    pub fn vertex_count(&self) -> usize {
        let (a, b) = (self.a, self.b);
        match self.family {
            Family::Path | Family::Cycle | Family::Complete | Family::Star | Family::Wheel => a,
            Family::CompleteBipartite => a + b,
            Family::Grid2 => 2 * a,
            Family::Grid => a * b,
            Family::PolytopeD => 4 * a,
            Family::PolytopeRpp => 6 * a,
            Family::PolytopeA => 3 * a,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family.token(), self.params_string())
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, params) = s.split_once(':').ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))?;
        let family = Family::from_token(name.trim()).ok_or_else(|| FamilyError::UnknownFamily(name.to_string()))?;
        let values: Result<Vec<usize>, _> = params.split(',').map(|p| p.trim().parse::<usize>()).collect();
        let bad = || FamilyError::BadParams {
            family: family.token(),
            expected: if family.arity() == 2 { "two integers `a,b`" } else { "one integer" },
            got: params.to_string(),
        };
        let values = values.map_err(|_| bad())?;
        match (family.arity(), values.as_slice()) {
            (1, [n]) => FamilySpec::new(family, *n),
            (2, [a, b]) => FamilySpec::new2(family, *a, *b),
            _ => Err(bad()),
        }
    }
}

/// Builds the graph described by `spec`.
pub fn make_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let n = spec.a;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let names: Vec<String> = match spec.family {
        Family::Path | Family::Cycle => {
            edges.extend((0..n.saturating_sub(1)).map(|i| (i, i + 1)));
            if spec.family == Family::Cycle {
                edges.push((n - 1, 0));
            }
            (1..=n).map(|i| format!("a_{i}")).collect()
        }
        Family::Complete => {
            for u in 0..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
            (1..=n).map(|i| format!("v_{i}")).collect()
        }
        Family::Star | Family::Wheel => {
            edges.extend((1..n).map(|i| (0, i)));
            if spec.family == Family::Wheel {
                edges.extend((1..n - 1).map(|i| (i, i + 1)));
                edges.push((n - 1, 1));
            }
            (1..=n).map(|i| format!("a_{i}")).collect()
        }
        Family::CompleteBipartite => {
            let p = spec.b;
            for u in 0..n {
                edges.extend((0..p).map(|v| (u, n + v)));
            }
            (1..=n).map(|i| format!("u_{i}")).chain((1..=p).map(|j| format!("v_{j}"))).collect()
        }
        Family::Grid2 | Family::Grid => {
            let (rows, cols) = if spec.family == Family::Grid2 { (2, n) } else { (spec.a, spec.b) };
            let id = |i: usize, j: usize| i * cols + j;
            for i in 0..rows {
                for j in 0..cols {
                    if j + 1 < cols {
                        edges.push((id(i, j), id(i, j + 1)));
                    }
                    if i + 1 < rows {
                        edges.push((id(i, j), id(i + 1, j)));
                    }
                }
            }
            (0..rows).flat_map(|i| (0..cols).map(move |j| format!("a_{}_{}", i + 1, j + 1))).collect()
        }
        Family::PolytopeD => {
            // blocks a, b, c, d
            let v = |block: usize, i: usize| block * n + i % n;
            for i in 0..n {
                edges.push((v(0, i), v(0, i + 1)));
                edges.push((v(3, i), v(3, i + 1)));
                edges.push((v(0, i), v(1, i)));
                edges.push((v(1, i), v(2, i)));
                edges.push((v(1, i + 1), v(2, i)));
                edges.push((v(2, i), v(3, i)));
            }
            block_names("abcd", n)
        }
        Family::PolytopeRpp => {
            // blocks a, b, c, d, e, f
            let v = |block: usize, i: usize| block * n + i % n;
            for i in 0..n {
                edges.push((v(0, i), v(0, i + 1)));
                edges.push((v(5, i), v(5, i + 1)));
                edges.push((v(0, i), v(1, i)));
                edges.push((v(1, i), v(2, i)));
                edges.push((v(2, i), v(3, i)));
                edges.push((v(3, i), v(4, i)));
                edges.push((v(4, i), v(5, i)));
                edges.push((v(1, i + 1), v(2, i)));
                edges.push((v(3, i), v(4, i + 1)));
            }
            block_names("abcdef", n)
        }
        Family::PolytopeA => {
            // blocks a, b, c
            let v = |block: usize, i: usize| block * n + i % n;
            for i in 0..n {
                edges.push((v(0, i), v(0, i + 1)));
                edges.push((v(1, i), v(1, i + 1)));
                edges.push((v(2, i), v(2, i + 1)));
                edges.push((v(0, i), v(1, i)));
                edges.push((v(1, i), v(2, i)));
                edges.push((v(0, i + 1), v(1, i)));
                edges.push((v(1, i + 1), v(2, i)));
            }
            block_names("abc", n)
        }
    };
    let graph = Graph::from_edges(spec.vertex_count(), edges).expect("family generators emit simple graphs");
    Ok(graph.with_names(names))
}

fn block_names(blocks: &str, n: usize) -> Vec<String> {
    blocks.chars().flat_map(|c| (0..n).map(move |i| format!("{c}_{i}"))).collect()
}

/// Id of vertex `index` (0-based, taken modulo `n`) in block `block` of a
/// polytope with rotation order `n`.
pub fn polytope_vertex(block: usize, index: usize, n: usize) -> Vertex {
    block * n + index % n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polytope_d5_is_cubic() {
        let g = make_family(&FamilySpec::polytope_d(5)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (20, 30));
        assert!(g.is_cubic());
        assert_eq!(g.name(5), Some("b_0"));
    }

    #[test]
    fn polytope_rpp5_is_cubic() {
        let g = make_family(&FamilySpec::polytope_rpp(5)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (30, 45));
        assert!(g.is_cubic());
    }

    #[test]
    fn polytope_a_degrees() {
        let g = make_family(&FamilySpec::polytope_a(6)).unwrap();
        assert!(!g.is_cubic());
        assert_eq!(g.degree(polytope_vertex(0, 2, 6)), 4);
        assert_eq!(g.degree(polytope_vertex(1, 2, 6)), 6);
        assert_eq!(g.degree(polytope_vertex(2, 2, 6)), 4);
        assert_eq!(g.edge_count(), 7 * 6);
    }

    #[test]
    fn d7_cubic_p4_not() {
        assert!(make_family(&FamilySpec::polytope_d(7)).unwrap().is_cubic());
        assert!(!make_family(&FamilySpec::path(4)).unwrap().is_cubic());
    }

    #[test]
    fn degenerate_complete() {
        let g = make_family(&FamilySpec::complete(1)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn wheel_rim_is_closed() {
        let g = make_family(&FamilySpec::wheel(6)).unwrap();
        assert_eq!(g.degree(0), 5);
        assert!((1..6).all(|v| g.degree(v) == 3));
        assert_eq!(g.edge_count(), 10);
        // W_4 is K_4
        assert_eq!(make_family(&FamilySpec::wheel(4)).unwrap().edge_count(), 6);
    }

    #[test]
    fn knp_and_grid_layout() {
        let g = make_family(&FamilySpec::knp(3, 2)).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(g.has_edge(0, 3) && g.has_edge(2, 4) && !g.has_edge(0, 1));
        assert_eq!(g.name(3), Some("v_1"));
        let grid = make_family(&FamilySpec::grid2(3)).unwrap();
        assert_eq!(grid.edge_count(), 7);
        assert!(grid.has_edge(0, 3) && grid.has_edge(1, 2) && !grid.has_edge(2, 3));
        assert_eq!(make_family(&FamilySpec::grid(2, 3)).unwrap(), grid);
    }

    #[test]
    fn parse_spec_strings() {
        assert_eq!("dn:7".parse::<FamilySpec>().unwrap(), FamilySpec::polytope_d(7));
        assert_eq!("knp:5,4".parse::<FamilySpec>().unwrap(), FamilySpec::knp(5, 4));
        assert_eq!("grid2:9".parse::<FamilySpec>().unwrap().to_string(), "grid2:9");
        assert!(matches!("knp:3,4".parse::<FamilySpec>(), Err(FamilyError::OutOfRange { .. })));
        assert!(matches!("dn:4".parse::<FamilySpec>(), Err(FamilyError::OutOfRange { .. })));
        assert!(matches!("cycle:2".parse::<FamilySpec>(), Err(FamilyError::OutOfRange { .. })));
        assert!(matches!("foo:3".parse::<FamilySpec>(), Err(FamilyError::UnknownFamily(_))));
        assert!(matches!("path:x".parse::<FamilySpec>(), Err(FamilyError::BadParams { .. })));
        assert!(matches!("knp:3".parse::<FamilySpec>(), Err(FamilyError::BadParams { .. })));
    }

    #[test]
    fn degree_sum_and_determinism() {
        for family in Family::ALL {
            for a in 1..9 {
                for b in 1..=a {
                    let spec = match family {
                        Family::CompleteBipartite | Family::Grid => FamilySpec::new2(family, a, b),
                        _ => FamilySpec::new(family, a),
                    };
                    let Ok(spec) = spec else { continue };
                    let g = make_family(&spec).unwrap();
                    let degree_sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
                    assert_eq!(degree_sum, 2 * g.edge_count(), "{spec}");
                    assert_eq!(g, make_family(&spec).unwrap());
                    if matches!(family, Family::PolytopeD | Family::PolytopeRpp) {
                        assert!(g.is_cubic(), "{spec}");
                    }
                }
            }
        }
    }
}
