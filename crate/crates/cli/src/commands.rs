use std::time::Instant;

use homtest::bound::{run_suite, BoundReport, SuiteOptions};
use homtest::graph::{chromatic_number_exact, fold_reduce, greedy_upper_bound, to_dimacs, to_edge_list};
use homtest::homcomplex::{build_hom, BuildOptions};
use homtest::selftest::{parse_battery, run_battery, BUNDLED_BATTERY};
use serde::Serialize;

use crate::{
    read_graph, read_text, resolve_tests, BettiArgs, BoundArgs, ChiArgs, CmdResult, Failure, FoldArgs, Format,
    HomStatsArgs, SelftestArgs,
};

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable output"));
}

fn list(values: &[usize]) -> String {
    let parts: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn bound(args: &BoundArgs) -> CmdResult {
    let g = read_graph(&args.graph)?;
    let tests = resolve_tests(&args.select.tests)?;
    let opts = SuiteOptions {
        max_check_dim: args.max_dim,
        with_exact: args.exact,
        fold: !args.no_fold,
        cell_cap: args.select.cell_cap,
        ..SuiteOptions::default()
    };
    let report = run_suite(&g, &tests, opts);
    if args.json {
        println!("{}", report.to_json());
    } else {
        print_report(&report);
    }
    report.check()?;
    if let Some(e) = report.resource_failure() {
        return Err(Failure::Resource(e.to_string()));
    }
    if let Some(e) = report.tests.iter().find_map(|c| c.failure.clone()) {
        return Err(e.into());
    }
    Ok(())
}

fn print_report(r: &BoundReport) {
    let gs = &r.graph;
    println!("graph: {} vertices, {} edges ({} after folding)", gs.n, gs.m, gs.folded_n);
    println!("trivial bound: {}", r.trivial_bound);
    println!("{:<6} {:>5} {:>4} {:>6}  {:<16} {:<28} {:>8}", "test", "chi_T", "d", "bound", "betti", "f-vector", "ms");
    for c in &r.tests {
        if let Some(err) = &c.error {
            println!("{:<6} {:>5}  failed: {err}", c.test_name, c.chi_t);
            continue;
        }
        let (d, betti) = if c.empty {
            ("-".to_string(), "empty".to_string())
        } else {
            let marker = if c.truncation_limited { "+" } else { "" };
            (format!("{}{marker}", c.d.unwrap_or(-1)), list(&c.betti))
        };
        let bound = c.lower_bound.map_or("-".into(), |b| b.to_string());
        println!(
            "{:<6} {:>5} {:>4} {:>6}  {:<16} {:<28} {:>8}",
            c.test_name,
            c.chi_t,
            d,
            bound,
            betti,
            list(&c.f_vector),
            c.millis
        );
    }
    if r.tests.iter().any(|c| c.truncation_limited) {
        println!("(+ all checked dimensions vanished; d is limited by --max-dim)");
    }
    if let Some(chi) = r.exact_chi {
        println!("exact chromatic number: {chi}");
    }
    println!("best bound: {}", r.best_bound);
}

#[derive(Serialize)]
struct BettiRow {
    name: String,
    f_vector: Vec<usize>,
    reduced: bool,
    empty: bool,
    betti: Vec<usize>,
    certified_through: Option<usize>,
}

pub fn betti(args: &BettiArgs) -> CmdResult {
    let mut g = read_graph(&args.graph)?;
    if args.fold {
        g = fold_reduce(&g).0;
    }
    let tests = resolve_tests(&args.select.tests)?;
    let opts = BuildOptions {
        max_dim: args.max_dim.map(|m| m + 1),
        cell_cap: args.select.cell_cap,
    };
    let mut rows = Vec::new();
    for t in &tests {
        let h = build_hom(t, &g, opts)?;
        let b = h.betti(!args.unreduced)?;
        let mut values = b.values.clone();
        if let Some(m) = args.max_dim {
            values.truncate(m + 1);
        }
        rows.push(BettiRow {
            name: t.name().to_string(),
            f_vector: h.f_vector(),
            reduced: !args.unreduced,
            empty: b.empty,
            certified_through: b.complete_through.map(|c| args.max_dim.map_or(c, |m| c.min(m))),
            betti: values,
        });
    }
    if args.json {
        print_json(&rows);
        return Ok(());
    }
    let kind = if args.unreduced { "unreduced" } else { "reduced" };
    for r in &rows {
        if r.empty {
            println!("{}: empty complex", r.name);
        } else {
            println!("{}: f-vector {}, {kind} Betti {}", r.name, list(&r.f_vector), list(&r.betti));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct StatsRow {
    name: String,
    nonempty: bool,
    complete: bool,
    f_vector: Vec<usize>,
    total_cells: usize,
    millis: u64,
}

pub fn hom_stats(args: &HomStatsArgs) -> CmdResult {
    let g = read_graph(&args.graph)?;
    let tests = resolve_tests(&args.select.tests)?;
    if args.export.is_some() && tests.len() != 1 {
        return Err(Failure::Input("--export needs exactly one test graph".into()));
    }
    let opts = BuildOptions {
        max_dim: args.max_dim,
        cell_cap: args.select.cell_cap,
    };
    let mut rows = Vec::new();
    for t in &tests {
        let start = Instant::now();
        let h = build_hom(t, &g, opts)?;
        rows.push(StatsRow {
            name: t.name().to_string(),
            nonempty: !h.is_empty(),
            complete: h.is_complete(),
            f_vector: h.f_vector(),
            total_cells: h.total_cells(),
            millis: start.elapsed().as_millis() as u64,
        });
        if let Some(path) = &args.export {
            std::fs::write(path, h.to_text())
                .map_err(|e| Failure::Input(format!("writing {}: {e}", path.display())))?;
        }
    }
    if args.json {
        print_json(&rows);
        return Ok(());
    }
    for r in &rows {
        let extent = if r.complete { "complete" } else { "truncated" };
        println!(
            "{}: {} cells {} ({extent}), {} ms",
            r.name,
            r.total_cells,
            list(&r.f_vector),
            r.millis
        );
    }
    Ok(())
}

#[derive(Serialize)]
struct ChiOutput {
    n: usize,
    m: usize,
    chi: usize,
    greedy: usize,
}

pub fn chi_exact(args: &ChiArgs) -> CmdResult {
    let g = read_graph(&args.graph)?;
    let out = ChiOutput {
        n: g.n(),
        m: g.edge_count(),
        chi: chromatic_number_exact(&g, args.limit)?,
        greedy: greedy_upper_bound(&g),
    };
    if args.json {
        print_json(&out);
    } else {
        println!("chromatic number: {} (greedy: {})", out.chi, out.greedy);
    }
    Ok(())
}

#[derive(Serialize)]
struct FoldOutput {
    n: usize,
    folded_n: usize,
    map: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

pub fn fold(args: &FoldArgs) -> CmdResult {
    let g = read_graph(&args.graph)?;
    let (folded, map) = fold_reduce(&g);
    if args.json {
        print_json(&FoldOutput {
            n: g.n(),
            folded_n: folded.n(),
            map,
            edges: folded.edges().collect(),
        });
        return Ok(());
    }
    let (comment, body) = match args.graph.format {
        Format::Edgelist => ("#", to_edge_list(&folded)),
        Format::Dimacs => ("c", to_dimacs(&folded)),
    };
    println!("{comment} folded {} vertices to {}", g.n(), folded.n());
    let pairs: Vec<String> = map.iter().enumerate().map(|(u, v)| format!("{u}->{v}")).collect();
    println!("{comment} map {}", pairs.join(" "));
    print!("{body}");
    Ok(())
}

pub fn selftest(args: &SelftestArgs) -> CmdResult {
    let text = match &args.fixtures {
        Some(path) => read_text(&path.to_string_lossy())?,
        None => BUNDLED_BATTERY.to_string(),
    };
    let cases = parse_battery(&text).map_err(|e| Failure::Input(format!("fixture file: {e}")))?;
    let results = run_battery(&cases);
    if args.json {
        print_json(&results);
    } else {
        for r in &results {
            let status = if r.passed { "PASS" } else { "FAIL" };
            println!("{status} {}: {}", r.name, r.detail);
        }
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    if failed > 0 {
        return Err(Failure::Internal(format!("{failed} of {} selftest items failed", results.len())));
    }
    if !args.json {
        println!("all {} items passed", results.len());
    }
    Ok(())
}
