use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context};
use modex::dfa::{self, parse_abbadingo, to_dot, DfaError, DfaOptions, Objective};
use modex::encode::{FormulaSize, MinimizeOptions};
use modex::report::{RunRecord, RunReport};
use modex::shortest_path::{
    benchmark_graph, encode_variant, solve_shortest_path, DiGraph, PathError, Variant, DEFAULT_BENCH_SEED,
};
use modex::stemma::{self, parse_dot, parse_features, Consistency, StemmaError};
use modex::supergraph::{exact_mcs, greedy_mcs, parse_instance, McsError};
use rayon::prelude::*;
use serde_json::json;

use crate::{at, plot, read_input, Common, ObjectiveArg, Outcome};

fn deadline(budget: Option<f64>) -> anyhow::Result<Option<Instant>> {
    match budget {
        None => Ok(None),
        Some(s) if s.is_finite() && s >= 0.0 => Ok(Some(Instant::now() + Duration::from_secs_f64(s))),
        Some(s) => bail!("time budget must be a non-negative number of seconds, got {s}"),
    }
}

fn ms(c: &Common, d: Duration) -> f64 {
    if c.no_timings {
        0.0
    } else {
        d.as_secs_f64() * 1000.0
    }
}

fn pool(c: &Common) -> anyhow::Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(c.jobs as usize)
        .build()
        .context("cannot start worker threads")
}

fn record(kind: &str, instance: String, verdict: &str, objective: Option<usize>, size: FormulaSize) -> RunRecord {
    RunRecord {
        kind: kind.into(),
        instance,
        verdict: verdict.into(),
        objective: objective.map(|o| o as u64),
        vars: size.vars as u64,
        clauses: size.clauses as u64,
        encode_ms: 0.0,
        solve_ms: 0.0,
        detail: serde_json::Value::Null,
    }
}

pub fn shortest_path(c: &Common, path: &Path, variant: u8, budget: Option<f64>) -> Outcome {
    let g = DiGraph::parse(&read_input(path)?).map_err(|e| at(path, e))?;
    let v = Variant::from_id(variant).ok_or_else(|| anyhow!("no encoding variant {variant}"))?;
    let opts = MinimizeOptions {
        seed: c.seed.unwrap_or(0),
        deadline: deadline(budget)?,
    };
    let instance = path.display().to_string();
    let (from, to) = (g.name(g.from()), g.name(g.to()));
    match solve_shortest_path(&g, v, &opts) {
        Ok(r) => {
            let status = if r.optimal { "optimal" } else { "best found within budget" };
            println!("length {} ({status}), variant {v}", r.length);
            let mut nodes = vec![from.to_string()];
            nodes.extend(r.edges.iter().map(|&(_, y)| g.name(y).to_string()));
            println!("path {}", nodes.join(" -> "));
            let size = FormulaSize {
                vars: r.stats.vars,
                clauses: r.stats.clauses,
            };
            let verdict = if r.optimal { "optimal" } else { "suboptimal" };
            let mut rec = record("shortest-path", instance, verdict, Some(r.length), size);
            rec.encode_ms = if c.no_timings { 0.0 } else { r.stats.encode_ms };
            rec.solve_ms = if c.no_timings { 0.0 } else { r.stats.solve_ms };
            rec.detail = json!({ "variant": variant, "path": nodes });
            let summary = format!("shortest path from {from} to {to} has length {}", r.length);
            Ok((RunReport { records: vec![rec], summary }, true))
        }
        Err(e) => {
            let msg = match e {
                PathError::NoPath => format!("no path from {from} to {to}"),
                PathError::Timeout => format!("no path from {from} to {to} found within the budget"),
            };
            println!("{msg}");
            let stats = encode_variant(&g, v).stats;
            let size = FormulaSize {
                vars: stats.vars,
                clauses: stats.clauses,
            };
            let verdict = if e == PathError::NoPath { "unsat" } else { "timeout" };
            let rec = record("shortest-path", instance, verdict, None, size);
            Ok((RunReport { records: vec![rec], summary: msg }, false))
        }
    }
}

fn stemma_input(e: StemmaError, i: usize) -> anyhow::Error {
    anyhow!("feature {}: {e}", i + 1)
}

pub fn stemma(c: &Common, dot: &Path, features: &Path, minimize: bool) -> Outcome {
    let s = parse_dot(&read_input(dot)?).map_err(|e| at(dot, e))?;
    let fs = parse_features(&read_input(features)?, &s).map_err(|e| at(features, e))?;
    let tradition = dot.file_stem().map_or_else(|| dot.display().to_string(), |t| t.to_string_lossy().into_owned());
    println!("Processing {tradition}.");
    println!("Stemma has {} nodes and {} edges.", s.len(), s.edges().len());
    let seed = c.seed.unwrap_or(0);
    let start = Instant::now();
    let names = |xs: &[usize]| -> Vec<&str> { xs.iter().map(|&x| s.name(x)).collect() };
    let coloring_map = |f: &stemma::Feature, coloring: &[usize]| -> BTreeMap<String, String> {
        coloring
            .iter()
            .enumerate()
            .map(|(x, &v)| (s.name(x).to_string(), f.variants[v].clone()))
            .collect()
    };
    let run = |(i, f): (usize, &stemma::Feature)| -> anyhow::Result<(bool, RunRecord)> {
        let t = Instant::now();
        let instance = format!("{tradition}#{}", i + 1);
        let (positive, mut rec) = if minimize {
            let opts = MinimizeOptions {
                seed: seed.wrapping_add(i as u64),
                deadline: None,
            };
            let m = stemma::minimize_sources(&s, f, &opts).map_err(|e| stemma_input(e, i))?;
            let consistent = m.k_min == f.used_variants();
            let verdict = if consistent { "consistent" } else { "inconsistent" };
            let mut rec = record("stemma", instance, verdict, Some(m.k_min), m.size);
            rec.detail = json!({
                "k_min": m.k_min,
                "coloring": coloring_map(f, &m.coloring),
                "sources": names(&m.sources),
            });
            (consistent, rec)
        } else {
            let (verdict, size) =
                stemma::check_consistency_sized(&s, f, seed.wrapping_add(i as u64)).map_err(|e| stemma_input(e, i))?;
            match verdict {
                Consistency::Consistent(w) => {
                    let mut rec = record("stemma", instance, "consistent", None, size);
                    let sources: BTreeMap<&str, &str> = w
                        .sources
                        .iter()
                        .enumerate()
                        .filter(|&(v, _)| w.coloring.contains(&v))
                        .map(|(v, &x)| (f.variants[v].as_str(), s.name(x)))
                        .collect();
                    rec.detail = json!({ "coloring": coloring_map(f, &w.coloring), "sources": sources });
                    (true, rec)
                }
                Consistency::Inconsistent => (false, record("stemma", instance, "inconsistent", None, size)),
            }
        };
        rec.solve_ms = ms(c, t.elapsed());
        Ok((positive, rec))
    };
    let results: Vec<anyhow::Result<(bool, RunRecord)>> =
        pool(c)?.install(|| fs.par_iter().enumerate().map(run).collect());
    let mut records = Vec::with_capacity(results.len());
    let mut positive = 0;
    for r in results {
        let (p, rec) = r.with_context(|| features.display().to_string())?;
        positive += p as usize;
        records.push(rec);
    }
    let secs = if c.no_timings { 0 } else { start.elapsed().as_secs_f64().round() as u64 };
    let summary = format!("Found {positive} positive out of {} groupings in {secs} sec.", records.len());
    println!("{summary}");
    Ok((RunReport { records, summary }, true))
}

pub fn mcs(c: &Common, path: &Path, greedy: bool, budget: Option<f64>) -> Outcome {
    let inst = parse_instance(&read_input(path)?).map_err(|e| at(path, e))?;
    let opts = MinimizeOptions {
        seed: c.seed.unwrap_or(0),
        deadline: deadline(budget)?,
    };
    let kind = if greedy { "mcs-greedy" } else { "mcs-exact" };
    let instance = path.display().to_string();
    let t = Instant::now();
    let result = if greedy { greedy_mcs(&inst, &opts) } else { exact_mcs(&inst, &opts) };
    match result {
        Ok(r) => {
            let k = r.supergraph.len();
            let status = if r.optimal { "optimal" } else { "best found" };
            println!("supergraph has {k} arcs ({status})");
            let arcs: Vec<[&str; 2]> = r
                .supergraph
                .arcs
                .iter()
                .map(|&(a, b)| [inst.names[a].as_str(), inst.names[b].as_str()])
                .collect();
            for [a, b] in &arcs {
                println!("{a} -> {b}");
            }
            let verdict = if r.optimal { "optimal" } else { "suboptimal" };
            let mut rec = record(kind, instance, verdict, Some(k), r.size);
            rec.solve_ms = ms(c, t.elapsed());
            let family: Vec<Vec<&str>> = r
                .family
                .iter()
                .map(|f| f.iter().map(|&x| inst.names[x].as_str()).collect())
                .collect();
            rec.detail = json!({ "arcs": arcs, "labels": family });
            let summary = format!("supergraph has {k} arcs");
            Ok((RunReport { records: vec![rec], summary }, true))
        }
        Err(McsError::Timeout) => {
            let summary = "no supergraph found within the budget".to_string();
            println!("{summary}");
            let mut rec = record(kind, instance, "timeout", None, FormulaSize::default());
            rec.solve_ms = ms(c, t.elapsed());
            Ok((RunReport { records: vec![rec], summary }, false))
        }
        Err(e) => Err(anyhow!("{}: {e}", path.display())),
    }
}

pub fn dfa_learn(
    c: &Common,
    path: &Path,
    redundant: bool,
    objective: ObjectiveArg,
    emit_dot: Option<Option<PathBuf>>,
    budget: Option<f64>,
) -> Outcome {
    let file = parse_abbadingo(&read_input(path)?).map_err(|e| at(path, e))?;
    let fixed = file.fixed_states().map_err(|e| at(path, e))?;
    let opts = DfaOptions {
        redundant,
        objective: match objective {
            ObjectiveArg::States => Objective::States,
            ObjectiveArg::Transitions => Objective::Transitions,
        },
        seed: c.seed.unwrap_or(0),
        deadline: deadline(budget)?,
        fixed,
    };
    let instance = path.display().to_string();
    let t = Instant::now();
    match dfa::find_min_dfa(&file.sample, &opts) {
        Ok(learned) => {
            let d = &learned.dfa;
            if !dfa::consistent(d, &file.sample) {
                bail!("{}: learned automaton disagrees with the sample", path.display());
            }
            println!(
                "minimal DFA has {} states and {} transitions",
                d.num_states(),
                d.num_transitions()
            );
            if let Some(target) = emit_dot {
                let dot = to_dot(d);
                match target {
                    Some(p) => std::fs::write(&p, dot).with_context(|| p.display().to_string())?,
                    None => print!("{dot}"),
                }
            }
            let last = learned.attempts.last();
            let size = FormulaSize {
                vars: last.map_or(0, |a| a.vars),
                clauses: last.map_or(0, |a| a.clauses),
            };
            let objective_value = match opts.objective {
                Objective::States => d.num_states(),
                Objective::Transitions => d.num_transitions(),
            };
            let mut rec = record("dfa", instance, "sat", Some(objective_value), size);
            rec.solve_ms = ms(c, t.elapsed());
            rec.detail = json!({
                "states": d.num_states(),
                "transitions": d.num_transitions(),
                "clique": learned.clique,
                "attempts": learned.attempts,
                "dfa": d,
            });
            let summary = format!("{} states", d.num_states());
            Ok((RunReport { records: vec![rec], summary }, true))
        }
        Err(e @ (DfaError::Timeout | DfaError::Infeasible | DfaError::NotFoundWithin(_))) => {
            let summary = format!("no automaton found: {e}");
            println!("{summary}");
            let verdict = if matches!(e, DfaError::Timeout) { "timeout" } else { "unsat" };
            let mut rec = record("dfa", instance, verdict, None, FormulaSize::default());
            rec.solve_ms = ms(c, t.elapsed());
            Ok((RunReport { records: vec![rec], summary }, false))
        }
        Err(e) => Err(anyhow!("{}: {e}", path.display())),
    }
}

pub fn bench_shortest_path(c: &Common, sizes: &[usize], density: f64, plot_path: Option<&Path>) -> Outcome {
    if sizes.is_empty() || sizes.windows(2).any(|w| w[0] >= w[1]) {
        bail!("sizes must be non-empty and strictly ascending");
    }
    if sizes[0] < 2 {
        bail!("graphs need at least two nodes");
    }
    if !(density > 0.0 && density <= 1.0) {
        bail!("density must lie in (0, 1], got {density}");
    }
    let seed = c.seed.unwrap_or(DEFAULT_BENCH_SEED);
    let jobs: Vec<(usize, Variant)> = sizes
        .iter()
        .flat_map(|&n| Variant::ALL.into_iter().map(move |v| (n, v)))
        .collect();
    let run = |&(n, v): &(usize, Variant)| -> RunRecord {
        let g = benchmark_graph(n, density, seed);
        let opts = MinimizeOptions { seed, deadline: None };
        let (stats, length, verdict) = match solve_shortest_path(&g, v, &opts) {
            Ok(r) => (r.stats, Some(r.length), "optimal"),
            Err(_) => (encode_variant(&g, v).stats, None, "unsat"),
        };
        let size = FormulaSize {
            vars: stats.vars,
            clauses: stats.clauses,
        };
        let mut rec = record("shortest-path-bench", format!("n={n} variant={}", v.id()), verdict, length, size);
        if !c.no_timings {
            rec.encode_ms = stats.encode_ms;
            rec.solve_ms = stats.solve_ms;
        }
        rec.detail = json!({ "n": n, "variant": v.id(), "edges": g.edges().len() });
        rec
    };
    let records: Vec<RunRecord> = pool(c)?.install(|| jobs.par_iter().map(run).collect());
    let mut out = String::from("n,variant,vars,clauses,encode_ms,solve_ms,length\n");
    for (r, (n, v)) in records.iter().zip(&jobs) {
        out.push_str(&format!(
            "{n},{},{},{},{:.3},{:.3},{}\n",
            v.id(),
            r.vars,
            r.clauses,
            r.encode_ms,
            r.solve_ms,
            r.objective.map_or(String::new(), |l| l.to_string())
        ));
    }
    print!("{out}");
    if let Some(p) = plot_path {
        let series = |metric: fn(&RunRecord) -> f64| -> Vec<(String, Vec<(f64, f64)>)> {
            Variant::ALL
                .iter()
                .map(|&v| {
                    let pts = records
                        .iter()
                        .zip(&jobs)
                        .filter(|(_, &(_, w))| w == v)
                        .map(|(r, &(n, _))| (n as f64, metric(r)))
                        .collect();
                    (format!("variant {}", v.id()), pts)
                })
                .collect()
        };
        let svg = plot::two_panel(
            ("clauses", &series(|r| r.clauses as f64)),
            ("solve time (ms)", &series(|r| r.encode_ms + r.solve_ms)),
            "nodes",
        );
        std::fs::write(p, svg).with_context(|| p.display().to_string())?;
    }
    let summary = format!("{} sizes x {} variants, seed {seed}, density {density}", sizes.len(), Variant::ALL.len());
    Ok((RunReport { records, summary }, true))
}
