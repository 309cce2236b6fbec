//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each exported function takes plain strings and numbers and returns a
//! JSON string. The same functions without the `wasm_bindgen` layer are
//! public here so they can be tested natively.

use netvuln::attack::summarize;
use netvuln::chart::{render_chart, svg_document, ChartSeries};
use netvuln::generators::extract_giant;
use netvuln::io::GraphFormat;
use netvuln::metrics::network_stats;
use netvuln::{AttackStrategy, AttackTrace, GeneratorSpec, Graph, Model, ModelKind};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest network the page will attack, to keep the tab responsive.
pub const MAX_NODES: usize = 3000;

#[derive(Serialize)]
struct StrategyResult {
    strategy: String,
    destruction_f: f64,
    robustness_index: f64,
    iterations: usize,
    /// `[f, lcc_prime]` per trace row.
    curve: Vec<[f64; 2]>,
}

#[derive(Serialize)]
struct AttackReport {
    network: String,
    node_count: usize,
    edge_count: usize,
    results: Vec<StrategyResult>,
    svg: String,
}

fn model_kind(name: &str) -> Result<ModelKind, String> {
    match name.to_ascii_lowercase().as_str() {
        "er" => Ok(ModelKind::ErdosRenyi),
        "ws" => Ok(ModelKind::WattsStrogatz),
        "ba" => Ok(ModelKind::BarabasiAlbert),
        other => Err(format!("unknown model {other:?}; use er, ws or ba")),
    }
}

fn check_size(n: usize) -> Result<(), String> {
    if n > MAX_NODES {
        return Err(format!("{n} nodes is more than the demo's limit of {MAX_NODES}"));
    }
    Ok(())
}

fn attack_report(g: &Graph, network: String, strategies: &str) -> Result<String, String> {
    let strategies = AttackStrategy::parse_list(strategies).map_err(|e| e.to_string())?;
    let traces: Vec<AttackTrace> = strategies
        .iter()
        .map(|s| s.run(g))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let mut svg = Vec::new();
    render_chart(&traces, &network, &mut svg).map_err(|e| e.to_string())?;
    let results = traces
        .iter()
        .map(|t| {
            let summary = summarize(t);
            StrategyResult {
                strategy: t.strategy.code(),
                destruction_f: summary.destruction_f,
                robustness_index: summary.robustness_index,
                iterations: summary.iterations,
                curve: t.rows.iter().map(|r| [r.f, r.lcc_prime]).collect(),
            }
        })
        .collect();
    let report = AttackReport {
        network,
        node_count: g.node_count(),
        edge_count: g.edge_count(),
        results,
        svg: String::from_utf8(svg).map_err(|e| e.to_string())?,
    };
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

/// Generates a network, keeps its giant component and attacks it with the
/// listed strategies (`"RM,RB"` or `"all"`).
pub fn simulate_json(model: &str, n: usize, avg_degree: f64, seed: u64, strategies: &str) -> Result<String, String> {
    check_size(n)?;
    let spec = GeneratorSpec::new(Model::with_average_degree(model_kind(model)?, n, avg_degree), n, seed);
    let g = spec
        .generate()
        .and_then(|g| extract_giant(&g))
        .map_err(|e| e.to_string())?;
    attack_report(&g, format!("{spec}, seed {seed}"), strategies)
}

fn parse_network(text: &str, format: &str) -> Result<Graph, String> {
    let format: GraphFormat = format.parse().map_err(|e: netvuln::Error| e.to_string())?;
    let parsed = format.read(text.as_bytes()).map_err(|e| e.to_string())?;
    let giant = extract_giant(&parsed.graph).map_err(|e| e.to_string())?;
    check_size(giant.node_count())?;
    Ok(giant)
}

/// Statistics of the giant component of a pasted network.
pub fn stats_json(text: &str, format: &str) -> Result<String, String> {
    let g = parse_network(text, format)?;
    let stats = network_stats(&g).map_err(|e| e.to_string())?;
    serde_json::to_string(&stats).map_err(|e| e.to_string())
}

/// Attacks the giant component of a pasted network.
pub fn attack_text_json(text: &str, format: &str, strategies: &str) -> Result<String, String> {
    let g = parse_network(text, format)?;
    attack_report(&g, "pasted network".into(), strategies)
}

/// Mean curves over `runs` seeds starting at `seed`, as an SVG chart.
pub fn mean_chart_svg(
    model: &str,
    n: usize,
    avg_degree: f64,
    seed: u64,
    runs: usize,
    strategies: &str,
) -> Result<String, String> {
    check_size(n)?;
    if runs == 0 || runs > 20 {
        return Err("runs must be between 1 and 20".into());
    }
    let spec = GeneratorSpec::new(Model::with_average_degree(model_kind(model)?, n, avg_degree), n, seed);
    let strategies = AttackStrategy::parse_list(strategies).map_err(|e| e.to_string())?;
    let giants: Vec<Graph> = (0..runs as u64)
        .map(|r| spec.with_seed(seed + r).generate().and_then(|g| extract_giant(&g)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let mut series = Vec::new();
    for s in strategies {
        let traces: Vec<AttackTrace> = giants
            .iter()
            .map(|g| s.run(g))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let refs: Vec<&AttackTrace> = traces.iter().collect();
        series.push(ChartSeries::mean_of(s, &refs));
    }
    Ok(svg_document(&series, &format!("{spec}, mean of {runs} seeds")))
}

#[wasm_bindgen]
pub fn simulate(model: &str, n: usize, avg_degree: f64, seed: u64, strategies: &str) -> Result<String, JsError> {
    simulate_json(model, n, avg_degree, seed, strategies).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn stats(text: &str, format: &str) -> Result<String, JsError> {
    stats_json(text, format).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn attack_text(text: &str, format: &str, strategies: &str) -> Result<String, JsError> {
    attack_text_json(text, format, strategies).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn mean_chart(
    model: &str,
    n: usize,
    avg_degree: f64,
    seed: u64,
    runs: usize,
    strategies: &str,
) -> Result<String, JsError> {
    mean_chart_svg(model, n, avg_degree, seed, runs, strategies).map_err(|e| JsError::new(&e))
}
