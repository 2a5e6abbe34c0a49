//! The reproduction sweep: every family instance with a closed-form
//! value is constructed, verified, and (when small enough) brute-forced.

use std::io;

use ksrd_core::constructions::{construct, formula, FormulaResult, Kind};
use ksrd_core::solver::{gamma_ksrd_bruteforce, DEFAULT_SPACE_BUDGET};
use ksrd_core::{make_family, FamilySpec};
use serde::Serialize;

/// Cap on `(k+2)^|V|` for brute-forcing a row.
pub const BRUTEFORCE_SPACE: u64 = DEFAULT_SPACE_BUDGET;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Mismatch,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReproRow {
    pub family: String,
    pub params: String,
    pub k: usize,
    pub formula_value: u64,
    pub kind: String,
    pub source: String,
    pub constructed_weight: Option<u64>,
    pub verified: bool,
    pub bruteforce_value: Option<u64>,
    pub status: Status,
    #[serde(skip)]
    pub detail: Option<String>,
}

/// Every `(spec, k)` in the sweep, in output order.
pub fn sweep_instances() -> Vec<(FamilySpec, usize)> {
    let mut out = Vec::new();
    for n in 2..=60 {
        for k in 2..=5.min(n) {
            out.push((FamilySpec::path(n), k));
        }
    }
    for n in 3..=60 {
        for k in 2..=5.min(n) {
            out.push((FamilySpec::cycle(n), k));
        }
    }
    for n in 1..=30 {
        out.extend((1..=n).map(|k| (FamilySpec::complete(n), k)));
    }
    for n in 3..=30 {
        out.extend((1..=n).map(|k| (FamilySpec::star(n), k)));
    }
    for n in 4..=30 {
        out.extend((1..=n).map(|k| (FamilySpec::wheel(n), k)));
    }
    for n in 1..=30 {
        for p in 1..=n {
            out.extend((1..=n + p).map(|k| (FamilySpec::knp(n, p), k)));
        }
    }
    for n in 1..=30 {
        for k in 2..=5.min(2 * n) {
            out.push((FamilySpec::grid2(n), k));
        }
    }
    for n in 5..=20 {
        out.push((FamilySpec::polytope_d(n), 2));
    }
    for n in 5..=20 {
        out.push((FamilySpec::polytope_rpp(n), 2));
    }
    for n in 5..=20 {
        out.push((FamilySpec::polytope_a(n), 2));
    }
    out
}

/// Whether `(spec, k)` belongs to the brute-force comparison set.
pub fn bruteforce_target(spec: &FamilySpec, k: usize) -> bool {
    use ksrd_core::Family::*;
    let (n, p) = (spec.a, spec.b);
    let in_range = match spec.family {
        Path => (2..=9).contains(&n) && (2..=3).contains(&k),
        Cycle => (3..=9).contains(&n) && (2..=3).contains(&k),
        Complete => (2..=7).contains(&n),
        Star | Wheel => (4..=8).contains(&n) && k >= 2,
        CompleteBipartite => n <= 5 && p <= 4 && k >= 2,
        Grid2 => n <= 5 && k == 2,
        // the A_5 row is exempt from the space cap; see `space_budget`
        PolytopeA => return n == 5 && k == 2,
        _ => false,
    };
    in_range && fits_bruteforce(spec.vertex_count(), k)
}

pub fn fits_bruteforce(vertices: usize, k: usize) -> bool {
    (k as u64 + 2).checked_pow(vertices as u32).is_some_and(|s| s <= BRUTEFORCE_SPACE)
}

/// Brute-force budget for a row. A_5 exceeds the generic cap on the full
/// labeling space, but weight-ordered enumeration stops at weight 8.
fn space_budget(spec: &FamilySpec) -> u64 {
    match spec.family {
        ksrd_core::Family::PolytopeA => u64::MAX,
        _ => BRUTEFORCE_SPACE,
    }
}

/// Whether a brute-force value is consistent with a formula of this kind.
pub fn agrees(result: &FormulaResult, gamma: u64) -> bool {
    match result.kind {
        Kind::Exact => gamma == result.value,
        Kind::UpperBound => gamma <= result.value,
        Kind::LowerBound => gamma >= result.value,
    }
}

pub fn run_row(spec: &FamilySpec, k: usize, bruteforce: bool) -> ReproRow {
    let mut row = ReproRow {
        family: spec.family.token().to_string(),
        params: spec.params_string(),
        k,
        formula_value: 0,
        kind: String::new(),
        source: String::new(),
        constructed_weight: None,
        verified: false,
        bruteforce_value: None,
        status: Status::Ok,
        detail: None,
    };
    let result = match formula(spec, k) {
        Ok(r) => r,
        Err(e) => {
            row.status = Status::Error;
            row.detail = Some(e.to_string());
            return row;
        }
    };
    row.formula_value = result.value;
    row.kind = result.kind.to_string();
    row.source = result.source.to_string();
    match construct(spec, k) {
        Ok(f) => {
            row.constructed_weight = Some(f.weight());
            row.verified = true;
        }
        Err(e) => {
            row.status = Status::Mismatch;
            row.detail = Some(e.to_string());
        }
    }
    if bruteforce && bruteforce_target(spec, k) {
        let graph = make_family(spec).expect("validated by formula");
        match gamma_ksrd_bruteforce(&graph, k, space_budget(spec)) {
            Ok((gamma, _)) => {
                row.bruteforce_value = Some(gamma);
                if !agrees(&result, gamma) {
                    row.status = Status::Mismatch;
                    row.detail = Some(format!("brute force gives {gamma}"));
                }
            }
            Err(e) => {
                row.status = Status::Error;
                row.detail = Some(e.to_string());
            }
        }
    }
    row
}

pub fn run_sweep(bruteforce: bool) -> Vec<ReproRow> {
    sweep_instances().iter().map(|(spec, k)| run_row(spec, *k, bruteforce)).collect()
}

pub fn write_csv<W: io::Write>(rows: &[ReproRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
