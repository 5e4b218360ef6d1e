//! Browser bindings: bound reports, Betti numbers and fold reduction for a
//! graph typed as an edge list. Every operation takes and returns strings
//! (edge-list text in, JSON out) so the page needs no extra glue.

use homtest::bound::{run_suite, SuiteOptions};
use homtest::graph::{fold_reduce, k4_with_path, parse_edge_list, registry_names, test_graph_by_name, to_edge_list, TestGraph};
use homtest::homcomplex::{build_hom, BuildOptions};
use serde::Serialize;

/// Cell limit per complex; kept well below the native default so a page
/// stays responsive.
pub const BROWSER_CELL_CAP: usize = 400_000;

fn tests_from(names: &str) -> Result<Vec<TestGraph>, String> {
    let tests: Vec<TestGraph> = names
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| {
            test_graph_by_name(name)
                .ok_or_else(|| format!("unknown test graph {name:?}; available: {}", registry_names().join(", ")))
        })
        .collect::<Result<_, _>>()?;
    if tests.is_empty() {
        return Err("no test graphs given".into());
    }
    Ok(tests)
}

/// JSON bound report for the graph, as printed by `homtest bound --json`.
pub fn bound_report(edge_list: &str, tests: &str, max_dim: usize) -> Result<String, String> {
    let g = parse_edge_list(edge_list).map_err(|e| e.to_string())?;
    let tests = tests_from(tests)?;
    let opts = SuiteOptions {
        max_check_dim: max_dim,
        with_exact: g.n() <= 12,
        cell_cap: BROWSER_CELL_CAP,
        ..SuiteOptions::default()
    };
    Ok(run_suite(&g, &tests, opts).to_json())
}

#[derive(Serialize)]
struct BettiOut {
    test: String,
    f_vector: Vec<usize>,
    complete: bool,
    empty: bool,
    reduced_betti: Vec<usize>,
}

/// f-vector and reduced Betti numbers of `Hom(T, G)` through `max_dim`.
pub fn hom_betti(edge_list: &str, test: &str, max_dim: usize) -> Result<String, String> {
    let g = parse_edge_list(edge_list).map_err(|e| e.to_string())?;
    let t = tests_from(test)?.remove(0);
    let opts = BuildOptions {
        max_dim: Some(max_dim + 1),
        cell_cap: BROWSER_CELL_CAP,
    };
    let h = build_hom(&t, &g, opts).map_err(|e| e.to_string())?;
    let b = h.betti(true).map_err(|e| e.to_string())?;
    let mut values = b.values;
    values.truncate(max_dim + 1);
    let out = BettiOut {
        test: t.name().to_string(),
        f_vector: h.f_vector(),
        complete: h.is_complete(),
        empty: b.empty,
        reduced_betti: values,
    };
    Ok(serde_json::to_string(&out).expect("serializable"))
}

#[derive(Serialize)]
struct FoldOut {
    n: usize,
    folded_n: usize,
    map: Vec<usize>,
    /// Original ids of the surviving vertices, in their new order.
    kept: Vec<usize>,
    folded: String,
}

/// Fold reduction: the vertex map and the reduced graph as edge-list text.
pub fn fold_graph(edge_list: &str) -> Result<String, String> {
    let g = parse_edge_list(edge_list).map_err(|e| e.to_string())?;
    let ids = (0..g.n()).map(|v| v.to_string()).collect();
    let g = g.with_labels(ids).map_err(|e| e.to_string())?;
    let (folded, map) = fold_reduce(&g);
    let kept = (0..folded.n()).map(|v| folded.label(v).parse().expect("numeric label")).collect();
    let out = FoldOut {
        n: g.n(),
        folded_n: folded.n(),
        map,
        kept,
        folded: to_edge_list(&folded),
    };
    Ok(serde_json::to_string(&out).expect("serializable"))
}

/// `K4` with a path of `l + 1` edges between two of its vertices.
pub fn example_graph(l: usize) -> Result<String, String> {
    k4_with_path(l).map(|g| to_edge_list(&g)).map_err(|e| e.to_string())
}

#[cfg(target_arch = "wasm32")]
mod bindings {
    use wasm_bindgen::prelude::*;

    fn js(r: Result<String, String>) -> Result<String, JsError> {
        r.map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen(js_name = boundReport)]
    pub fn bound_report(edge_list: &str, tests: &str, max_dim: usize) -> Result<String, JsError> {
        js(super::bound_report(edge_list, tests, max_dim))
    }

    #[wasm_bindgen(js_name = homBetti)]
    pub fn hom_betti(edge_list: &str, test: &str, max_dim: usize) -> Result<String, JsError> {
        js(super::hom_betti(edge_list, test, max_dim))
    }

    #[wasm_bindgen(js_name = foldGraph)]
    pub fn fold_graph(edge_list: &str) -> Result<String, JsError> {
        js(super::fold_graph(edge_list))
    }

    #[wasm_bindgen(js_name = exampleGraph)]
    pub fn example_graph(l: usize) -> Result<String, JsError> {
        js(super::example_graph(l))
    }
}
