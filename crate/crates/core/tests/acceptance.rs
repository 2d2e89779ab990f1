//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use modex::dfa::{brute_force_min_dfa, consistent, find_min_dfa, DfaOptions, Sample};
use modex::encode::MinimizeOptions;
use modex::sat::{SolveResult, Solver};
use modex::shortest_path::{
    benchmark_graph, bfs_oracle, check_path_constraints, encode_variant, solve_shortest_path, DiGraph,
    PathError, Variant, DEFAULT_BENCH_SEED,
};
use modex::stemma::{check_consistency, minimize_sources, reduce_sat_to_color_connected, Feature, Stemma};
use modex::supergraph::{brute_force_mcs, exact_mcs, greedy_mcs, verify_supergraph, Instance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn opts(seed: u64) -> MinimizeOptions {
    MinimizeOptions { seed, deadline: None }
}

fn two_tree_supergraph() -> Outcome {
    let inst = Instance::example();
    let r = exact_mcs(&inst, &opts(0)).map_err(|e| e.to_string())?;
    ensure(r.optimal, || "not proven optimal".into())?;
    ensure(verify_supergraph(&inst.graphs, &r.family, &r.supergraph), || "supergraph does not verify".into())?;
    let brute = brute_force_mcs(&inst).map_err(|e| e.to_string())?;
    ensure(r.supergraph.len() == 7 && brute == 7, || {
        format!("exact {} brute force {brute}, want 7", r.supergraph.len())
    })?;
    Ok("exact 7 arcs, brute force 7".into())
}

fn small_sample_dfa() -> Outcome {
    let sample = Sample::example();
    let brute = brute_force_min_dfa(&sample, 4).map_err(|e| e.to_string())?;
    let mut counts = Vec::new();
    for redundant in [false, true] {
        let o = DfaOptions {
            redundant,
            ..DfaOptions::default()
        };
        let learned = find_min_dfa(&sample, &o).map_err(|e| e.to_string())?;
        ensure(consistent(&learned.dfa, &sample), || format!("redundant={redundant}: inconsistent DFA"))?;
        counts.push(learned.dfa.num_states());
    }
    ensure(counts.iter().all(|&c| c == brute), || format!("states {counts:?}, brute force {brute}"))?;
    Ok(format!("{brute} states with and without redundant clauses"))
}

fn shortest_path_suite() -> Outcome {
    let example = DiGraph::example();
    for v in Variant::ALL {
        let r = solve_shortest_path(&example, v, &opts(0)).map_err(|e| format!("variant {v}: {e}"))?;
        ensure(r.length == 1, || format!("variant {v}: length {}", r.length))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut reachable = 0;
    for i in 0..200 {
        let n = rng.gen_range(2..=25);
        let g = DiGraph::random(n, 0.2, &mut rng);
        let expected = bfs_oracle(&g);
        reachable += expected.is_some() as usize;
        for v in Variant::ALL {
            match solve_shortest_path(&g, v, &opts(i)) {
                Ok(r) => {
                    ensure(Some(r.length) == expected, || {
                        format!("instance {i} variant {v}: {} vs {expected:?}", r.length)
                    })?;
                    check_path_constraints(&g, &r.edges).map_err(|e| format!("instance {i} variant {v}: {e}"))?;
                }
                Err(PathError::NoPath) => {
                    ensure(expected.is_none(), || format!("instance {i} variant {v}: no path found"))?
                }
                Err(e) => return Err(format!("instance {i} variant {v}: {e}")),
            }
        }
    }
    Ok(format!("example length 1 in all variants; 200/200 match bfs ({reachable} reachable)"))
}

fn clause_trend() -> Outcome {
    let mut rows = Vec::new();
    for n in [12, 16, 20] {
        let g = benchmark_graph(n, 0.2, DEFAULT_BENCH_SEED);
        let c: Vec<usize> = Variant::ALL.iter().map(|&v| encode_variant(&g, v).stats.clauses).collect();
        ensure(c[2] < c[1] && c[1] < c[0] && c[3] <= c[2], || format!("n={n}: clauses {c:?}"))?;
        rows.push(format!("n={n} {c:?}"));
    }
    Ok(rows.join(", "))
}

fn reduction_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    let mut sat = 0;
    for i in 0..100 {
        let vars = rng.gen_range(1..=8);
        let clauses = rng.gen_range(1..=12);
        let cnf = random_cnf(&mut rng, vars, clauses);
        let r = reduce_sat_to_color_connected(&cnf);
        let expected = truth_table_sat(&cnf);
        let got = check_consistency(&r.stemma, &r.feature, i).map_err(|e| e.to_string())?.is_consistent();
        ensure(got == expected, || format!("cnf {i}: truth table {expected}, reduction {got}"))?;
        sat += expected as usize;
    }
    Ok(format!("100/100 agree ({sat} satisfiable)"))
}

fn stemma_oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    let mut positive = 0;
    for i in 0..500 {
        let n = rng.gen_range(1..=10);
        let s = Stemma::random(n, &mut rng);
        let k = rng.gen_range(1..=3);
        let f = Feature::random(&s, k, &mut rng);
        let expected = brute_force_consistent(&s, &f);
        let got = check_consistency(&s, &f, i).map_err(|e| e.to_string())?.is_consistent();
        ensure(got == expected, || format!("instance {i}: consistency {got}, enumeration {expected}"))?;
        let m = minimize_sources(&s, &f, &opts(i)).map_err(|e| format!("instance {i}: {e}"))?;
        let brute = brute_force_min_sources(&s, &f);
        ensure(m.k_min == brute, || format!("instance {i}: k_min {} vs {brute}", m.k_min))?;
        let used = f.used_variants();
        ensure(m.k_min >= used, || format!("instance {i}: k_min {} below {used} variants", m.k_min))?;
        ensure((m.k_min == used) == expected, || format!("instance {i}: equality does not track consistency"))?;
        positive += expected as usize;
    }
    Ok(format!("500/500 agree ({positive} consistent)"))
}

fn greedy_vs_exact() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    let mut worse = 0;
    for i in 0..100 {
        let n: usize = rng.gen_range(3..=7);
        let trees = rng.gen_range(2..=3);
        let labeled = rng.gen_range(n.saturating_sub(4)..=n);
        let inst = Instance::random_trees(trees, n, labeled, &mut rng);
        let lower = inst.graphs.iter().map(|g| g.edges.len()).max().unwrap_or(0);
        let e = exact_mcs(&inst, &opts(i)).map_err(|e| format!("instance {i}: {e}"))?;
        let g = greedy_mcs(&inst, &opts(i)).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(verify_supergraph(&inst.graphs, &e.family, &e.supergraph), || format!("instance {i}: exact fails"))?;
        ensure(verify_supergraph(&inst.graphs, &g.family, &g.supergraph), || format!("instance {i}: greedy fails"))?;
        let (ge, gg) = (e.supergraph.len(), g.supergraph.len());
        ensure(gg >= ge && ge >= lower && gg >= lower, || {
            format!("instance {i}: greedy {gg} exact {ge} lower bound {lower}")
        })?;
        worse += (gg > ge) as usize;
    }
    Ok(format!("100/100 hold (greedy strictly larger on {worse})"))
}

fn sat_core() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(81);
    let mut sat = 0;
    for i in 0..1000 {
        let vars = rng.gen_range(3..=20);
        let clauses = (vars as f64 * rng.gen_range(3.0..5.5)) as usize;
        let cnf = random_3cnf(&mut rng, vars, clauses);
        let expected = dpll(&cnf);
        let mut solver = Solver::with_seed(i);
        cnf.load_into(&mut solver);
        match solver.solve(&[]).map_err(|e| e.to_string())? {
            SolveResult::Sat(m) => {
                ensure(expected, || format!("instance {i}: SAT but oracle says UNSAT"))?;
                ensure(cnf.is_satisfied_by(&m), || format!("instance {i}: model violates a clause"))?;
                sat += 1;
            }
            SolveResult::Unsat => ensure(!expected, || format!("instance {i}: UNSAT but oracle says SAT"))?,
            SolveResult::Unknown => return Err(format!("instance {i}: unknown")),
        }
    }
    Ok(format!("1000/1000 agree ({sat} satisfiable)"))
}

fn main() -> ExitCode {
    let criteria: [(u32, Option<u64>, fn() -> Outcome); 8] = [
        (1, Some(5), two_tree_supergraph),
        (2, Some(5), small_sample_dfa),
        (3, Some(60), shortest_path_suite),
        (4, None, clause_trend),
        (5, Some(60), reduction_round_trip),
        (6, Some(120), stemma_oracles),
        (7, None, greedy_vs_exact),
        (8, None, sat_core),
    ];
    let mut failed = 0;
    for (n, limit, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(s)) if took > Duration::from_secs(s) => Err(format!("took {took:.2?}, limit {s} s")),
            (o, _) => o,
        };
        let limit = limit.map_or(String::new(), |s| format!(" limit {s} s"));
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS {detail} [{took:.2?}{limit}]"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n}: FAIL {detail} [{took:.2?}{limit}]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
