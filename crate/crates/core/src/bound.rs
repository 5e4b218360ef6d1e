//! Chromatic lower bounds from vanishing reduced homology of `Hom(T, G)`.
//!
//! If the reduced mod-2 homology of `Hom(T, G)` vanishes through dimension
//! `d` and `T` is a Stiefel-Whitney test graph, then `χ(G) ≥ d + 1 + χ(T)`.

#[cfg(not(target_arch = "wasm32"))]
use std::time::Instant;
#[cfg(target_arch = "wasm32")]
use web_time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{chromatic_number_exact, fold_reduce, Graph, TestGraph, DEFAULT_EXACT_LIMIT};
use crate::homcomplex::{boundary_complex, build_hom, BuildOptions, DEFAULT_CELL_CAP};
use crate::z2algebra::BettiVector;

pub const DEFAULT_MAX_CHECK_DIM: usize = 2;

/// Outcome of the homology test for one test graph.
///
/// Serializes to the per-test entry of the JSON report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundClaim {
    #[serde(rename = "name")]
    pub test_name: String,
    pub chi_t: usize,
    /// `Hom(T, G)` has no cells; the bound falls back to the trivial one.
    pub empty: bool,
    /// Largest `d` with vanishing reduced homology through dimension `d`;
    /// `None` for an empty complex or a failed test.
    pub d: Option<i64>,
    #[serde(rename = "bound")]
    pub lower_bound: Option<usize>,
    pub betti: Vec<usize>,
    pub f_vector: Vec<usize>,
    /// Every checked dimension vanished, so `d` is capped by the check depth.
    pub truncation_limited: bool,
    pub millis: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub evidence: Option<BettiVector>,
    #[serde(skip)]
    pub failure: Option<Error>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub folded_n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub graph: GraphSummary,
    pub trivial_bound: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_chi: Option<usize>,
    pub tests: Vec<BoundClaim>,
    pub best_bound: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub max_check_dim: usize,
    pub with_exact: bool,
    pub fold: bool,
    pub cell_cap: usize,
    pub exact_limit: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_check_dim: DEFAULT_MAX_CHECK_DIM,
            with_exact: false,
            fold: true,
            cell_cap: DEFAULT_CELL_CAP,
            exact_limit: DEFAULT_EXACT_LIMIT,
        }
    }
}

/// 0 without vertices, 1 without edges, 2 otherwise.
pub fn trivial_bound(g: &Graph) -> usize {
    match (g.n(), g.edge_count()) {
        (0, _) => 0,
        (_, 0) => 1,
        _ => 2,
    }
}

/// Runs the homology test for `t` on `g`, checking reduced homology
/// through `max_check_dim`.
///
/// Reduced Betti numbers are computed in increasing dimension, stopping at
/// the first nonzero one; `betti` in the claim lists the values computed.
/// The complex is extended one dimension at a time, so `Hom(T, G)` is only
/// built through `max_check_dim + 1` when all lower values vanish.
pub fn homology_test(t: &TestGraph, g: &Graph, max_check_dim: usize, cell_cap: usize) -> Result<BoundClaim> {
    let start = Instant::now();
    let build = |max_dim: usize| build_hom(t, g, BuildOptions { max_dim: Some(max_dim), cell_cap });
    let mut h = build(1)?;
    let mut claim = BoundClaim {
        test_name: t.name().to_string(),
        chi_t: t.chi(),
        empty: h.is_empty(),
        d: None,
        lower_bound: Some(trivial_bound(g)),
        betti: Vec::new(),
        f_vector: h.f_vector(),
        truncation_limited: false,
        millis: 0,
        error: None,
        evidence: None,
        failure: None,
    };
    if claim.empty {
        claim.evidence = Some(BettiVector {
            reduced: true,
            values: Vec::new(),
            complete_through: None,
            empty: true,
        });
        claim.millis = start.elapsed().as_millis() as u64;
        return Ok(claim);
    }

    let mut values = Vec::new();
    let mut lower_rank = 0;
    let mut d = None;
    for i in 0..=max_check_dim {
        // b_i needs every cell through dimension i + 1.
        if !h.is_complete() && h.max_dim_built().is_some_and(|m| m < i + 1) {
            h = build(i + 1)?;
        }
        let upper_rank = h.boundary_rank(i + 1)?;
        let b = h
            .count(i)
            .checked_sub(lower_rank + upper_rank + usize::from(i == 0))
            .ok_or_else(|| Error::Invariant(format!("negative Betti number in dimension {i}")))?;
        values.push(b);
        if b != 0 {
            d = Some(i as i64 - 1);
            break;
        }
        lower_rank = upper_rank;
    }
    let d = d.unwrap_or_else(|| {
        claim.truncation_limited = true;
        max_check_dim as i64
    });
    claim.d = Some(d);
    claim.lower_bound = Some((d + 1) as usize + t.chi());
    claim.f_vector = h.f_vector();
    claim.betti = values.clone();
    claim.evidence = Some(BettiVector {
        reduced: true,
        complete_through: Some(values.len() - 1),
        values,
        empty: false,
    });
    claim.millis = start.elapsed().as_millis() as u64;
    Ok(claim)
}

fn failed_claim(t: &TestGraph, err: &Error) -> BoundClaim {
    BoundClaim {
        test_name: t.name().to_string(),
        chi_t: t.chi(),
        empty: false,
        d: None,
        lower_bound: None,
        betti: Vec::new(),
        f_vector: Vec::new(),
        truncation_limited: false,
        millis: 0,
        error: Some(err.to_string()),
        evidence: None,
        failure: Some(err.clone()),
    }
}

/// Runs every test graph on `g` (fold-reduced first unless disabled) and
/// collects the bounds. Failures of individual tests are recorded, not
/// returned.
pub fn run_suite(g: &Graph, tests: &[TestGraph], opts: SuiteOptions) -> BoundReport {
    let target = if opts.fold { fold_reduce(g).0 } else { g.clone() };
    let one = |t: &TestGraph| match homology_test(t, &target, opts.max_check_dim, opts.cell_cap) {
        Ok(claim) => claim,
        Err(e) => failed_claim(t, &e),
    };
    #[cfg(feature = "parallel")]
    let claims: Vec<BoundClaim> = {
        use rayon::prelude::*;
        tests.par_iter().map(one).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let claims: Vec<BoundClaim> = tests.iter().map(one).collect();

    let trivial = trivial_bound(g);
    let exact_chi = if opts.with_exact {
        chromatic_number_exact(g, opts.exact_limit).ok()
    } else {
        None
    };
    let best_bound = claims.iter().filter_map(|c| c.lower_bound).fold(trivial, usize::max);
    BoundReport {
        graph: GraphSummary {
            n: g.n(),
            m: g.edge_count(),
            folded_n: target.n(),
        },
        trivial_bound: trivial,
        exact_chi,
        tests: claims,
        best_bound,
    }
}

impl BoundReport {
    /// Checks `best_bound ≤ exact_chi` when the exact value is known.
    pub fn check(&self) -> Result<()> {
        match self.exact_chi {
            Some(chi) if self.best_bound > chi => Err(Error::Invariant(format!(
                "lower bound {} exceeds chromatic number {chi}",
                self.best_bound
            ))),
            _ => Ok(()),
        }
    }

    /// The first resource-limit failure among the tests, if any.
    pub fn resource_failure(&self) -> Option<&Error> {
        self.tests
            .iter()
            .filter_map(|c| c.failure.as_ref())
            .find(|e| e.is_resource_limit())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with every timing field zeroed, for comparing runs.
    pub fn to_json_untimed(&self) -> String {
        let mut r = self.clone();
        r.tests.iter_mut().for_each(|c| c.millis = 0);
        r.to_json()
    }
}

/// Whether `Hom(t, g)` and `Hom(t, fold_reduce(g))` have the same reduced
/// Betti numbers in every dimension certified for both.
pub fn fold_equivalence_check(t: &TestGraph, g: &Graph, opts: BuildOptions) -> Result<bool> {
    let before = boundary_complex(&build_hom(t, g, opts)?)?.betti(true);
    let after = boundary_complex(&build_hom(t, &fold_reduce(g).0, opts)?)?.betti(true);
    if before.empty || after.empty {
        return Ok(before.empty == after.empty);
    }
    let common = before.values.len().min(after.values.len());
    Ok(before.values[..common] == after.values[..common])
}
