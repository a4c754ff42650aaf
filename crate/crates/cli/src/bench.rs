use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Result};
use hardhom_core::corpus::random_instances;
use hardhom_core::{min_vertex_cover, Mode};

use crate::solve::solve;
use crate::Strategy;

/// Parameters of the seeded random LIST-HOM family.
pub struct Corpus {
    pub count: usize,
    pub max_n: usize,
    pub max_h: usize,
    pub seed: u64,
}

fn name(s: Strategy) -> &'static str {
    match s {
        Strategy::Brute => "brute",
        Strategy::Backtrack => "backtrack",
        Strategy::Vc => "vc",
        Strategy::Auto => "auto",
    }
}

/// One row per instance and strategy. Fails when two strategies disagree on
/// an instance or a vc row tries more than `h^|C|` cover maps.
pub fn bench(
    corpus: &Corpus,
    strategies: &[Strategy],
    budget: u128,
    out: Option<&Path>,
) -> Result<bool> {
    let sink: Box<dyn std::io::Write> = match out {
        Some(path) => Box::new(std::fs::File::create(path)?),
        None => Box::new(std::io::stdout()),
    };
    let mut csv = csv::Writer::from_writer(sink);
    csv.write_record([
        "id",
        "strategy",
        "verdict",
        "nodes_explored",
        "assignments_tried",
        "wall_ms",
    ])?;
    let mut ok = true;
    for (id, inst) in random_instances(corpus.count, corpus.max_n, corpus.max_h, corpus.seed)
        .iter()
        .enumerate()
    {
        let mut verdicts = Vec::new();
        for &strategy in strategies {
            let start = Instant::now();
            let result = solve(inst, Mode::Plain, strategy, budget, 12);
            let wall = start.elapsed().as_secs_f64() * 1e3;
            let (verdict, stats) = match &result {
                Ok(r) => (if r.witness.is_some() { "sat" } else { "unsat" }, r.stats),
                Err(_) => ("error", Default::default()),
            };
            if let Ok(r) = &result {
                verdicts.push(r.witness.is_some());
                if r.used == "vc" {
                    let bound = (inst.h.n() as f64).powi(min_vertex_cover(&inst.g).len() as i32);
                    if stats.assignments_tried as f64 > bound {
                        eprintln!(
                            "instance {id}: {} cover maps tried, bound {bound}",
                            stats.assignments_tried
                        );
                        ok = false;
                    }
                }
            }
            csv.write_record([
                id.to_string(),
                name(strategy).to_string(),
                verdict.to_string(),
                stats.nodes_explored.to_string(),
                stats.assignments_tried.to_string(),
                format!("{wall:.3}"),
            ])?;
        }
        if verdicts.windows(2).any(|w| w[0] != w[1]) {
            eprintln!("instance {id}: strategies disagree");
            ok = false;
        }
    }
    csv.flush()?;
    if strategies.is_empty() {
        bail!("no strategy given");
    }
    Ok(ok)
}
