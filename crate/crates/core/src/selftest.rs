//! A battery of small known cases run by the `selftest` command.
//!
//! Graph cases come from a JSON list; the bundled list lives in
//! `data/battery.json`. The two hand-built chain complexes with free
//! involutions are always checked as well.

use serde::{Deserialize, Serialize};

use crate::bound::{homology_test, DEFAULT_MAX_CHECK_DIM};
use crate::error::{Error, Result};
use crate::graph::{chromatic_number_exact, parse_edge_list, test_graph_by_name, DEFAULT_EXACT_LIMIT};
use crate::homcomplex::{boundary_complex, build_hom, BuildOptions, DEFAULT_CELL_CAP};
use crate::z2algebra::{fixture_complexes, Fixture};

pub const BUNDLED_BATTERY: &str = include_str!("../data/battery.json");

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Case {
    pub name: String,
    /// Edge-list text.
    pub graph: String,
    #[serde(default)]
    pub test: Option<String>,
    #[serde(default)]
    pub max_dim: Option<usize>,
    /// Expected reduced Betti numbers, trailing zeros dropped.
    #[serde(default)]
    pub betti: Option<Vec<usize>>,
    #[serde(default)]
    pub bound: Option<usize>,
    #[serde(default)]
    pub chi: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ItemResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn trim(v: &[usize]) -> &[usize] {
    let end = v.iter().rposition(|&b| b != 0).map_or(0, |i| i + 1);
    &v[..end]
}

fn run_case(case: &Case) -> std::result::Result<String, String> {
    let g = parse_edge_list(&case.graph).map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    if let Some(chi) = case.chi {
        let got = chromatic_number_exact(&g, DEFAULT_EXACT_LIMIT).map_err(|e| e.to_string())?;
        if got != chi {
            return Err(format!("chromatic number {got}, expected {chi}"));
        }
        notes.push(format!("chi = {got}"));
    }
    if let Some(name) = &case.test {
        let t = test_graph_by_name(name).ok_or_else(|| format!("unknown test graph {name:?}"))?;
        let max_dim = case.max_dim.unwrap_or(DEFAULT_MAX_CHECK_DIM);
        let claim = homology_test(&t, &g, max_dim, DEFAULT_CELL_CAP).map_err(|e| e.to_string())?;
        if let Some(expected) = &case.betti {
            let h = build_hom(&t, &g, BuildOptions::up_to(max_dim + 1)).map_err(|e| e.to_string())?;
            let betti = boundary_complex(&h).map_err(|e| e.to_string())?.betti(true);
            let upto = betti.values.len().min(max_dim + 1);
            if trim(&betti.values[..upto]) != trim(expected) {
                return Err(format!("reduced Betti {:?}, expected {:?}", betti.values, expected));
            }
            notes.push(format!("reduced betti {:?}", &betti.values[..upto]));
        }
        if let Some(expected) = case.bound {
            if claim.lower_bound != Some(expected) {
                return Err(format!("bound {:?}, expected {expected}", claim.lower_bound));
            }
        }
        notes.push(format!("bound {:?}", claim.lower_bound));
    } else if case.chi.is_none() {
        return Err("case checks nothing".into());
    }
    Ok(notes.join("; "))
}

fn check_fixture(f: &Fixture, expected: &[usize]) -> std::result::Result<String, String> {
    let betti = f.complex.betti(true);
    if betti.values != expected {
        return Err(format!("reduced Betti {:?}, expected {expected:?}", betti.values));
    }
    if !f.complex.commutes_with(&f.involution) {
        return Err("involution is not a chain map".into());
    }
    let q = f.complex.quotient(&f.involution).map_err(|e| e.to_string())?;
    let (whole, half) = (
        f.complex.euler_characteristic().map_err(|e| e.to_string())?,
        q.euler_characteristic().map_err(|e| e.to_string())?,
    );
    if whole != 2 * half {
        return Err(format!("Euler characteristic {whole} vs quotient {half}"));
    }
    Ok(format!("betti {:?}, quotient Euler characteristic {half}", betti.values))
}

pub fn parse_battery(json: &str) -> Result<Vec<Case>> {
    serde_json::from_str(json).map_err(|e| Error::parse(e.line(), e.to_string()))
}

/// Runs every case plus the chain-complex fixtures.
pub fn run_battery(cases: &[Case]) -> Vec<ItemResult> {
    let mut out: Vec<ItemResult> = cases
        .iter()
        .map(|case| {
            let r = run_case(case);
            ItemResult {
                name: case.name.clone(),
                passed: r.is_ok(),
                detail: r.unwrap_or_else(|e| e),
            }
        })
        .collect();
    let expected: [&[usize]; 2] = [&[2, 1], &[0, 2, 1]];
    for (f, exp) in fixture_complexes().iter().zip(expected) {
        let r = check_fixture(f, exp);
        out.push(ItemResult {
            name: format!("fixture: {}", f.name),
            passed: r.is_ok(),
            detail: r.unwrap_or_else(|e| e),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_battery_passes() {
        let cases = parse_battery(BUNDLED_BATTERY).unwrap();
        let results = run_battery(&cases);
        for r in &results {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
        assert_eq!(results.len(), cases.len() + 2);
    }

    #[test]
    fn wrong_expectation_fails() {
        let cases = parse_battery(r#"[{"name": "bad", "graph": "0 1", "test": "k2", "bound": 3}]"#).unwrap();
        assert!(!run_battery(&cases)[0].passed);
        assert!(parse_battery("[{").is_err());
        assert!(parse_battery(r#"[{"name": "x", "graph": "", "oops": 1}]"#).is_err());
    }
}
