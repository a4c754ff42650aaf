use anyhow::Result;
use hardhom_core::solver::solve_brute_with_budget;
use hardhom_core::{
    bipartite_fast_path, min_vertex_cover, solve_backtrack, solve_vc, vertex_cover_at_most,
    FastPath, Homomorphism, ListHomInstance, Mode, SolveStats,
};

use crate::Strategy;

pub struct Report {
    pub witness: Option<Homomorphism>,
    pub stats: SolveStats,
    /// What actually ran; `auto` resolves to one of the others.
    pub used: &'static str,
}

/// `auto` tries the bipartite fast path, then the vertex-cover solver when
/// the minimum cover has at most `vc_threshold` vertices, then backtracking.
/// Only backtracking handles locally injective maps.
pub fn solve(
    inst: &ListHomInstance,
    mode: Mode,
    strategy: Strategy,
    budget: u128,
    vc_threshold: usize,
) -> Result<Report> {
    let plain = mode == Mode::Plain;
    match strategy {
        Strategy::Brute => Ok(Report {
            witness: solve_brute_with_budget(inst, mode, budget)?,
            stats: SolveStats::default(),
            used: "brute",
        }),
        Strategy::Backtrack => {
            let (witness, stats) = solve_backtrack(inst, mode);
            Ok(Report {
                witness,
                stats,
                used: "backtrack",
            })
        }
        Strategy::Vc => {
            anyhow::ensure!(
                plain,
                "the vc strategy does not support locally injective mode"
            );
            vc(inst, &min_vertex_cover(&inst.g))
        }
        Strategy::Auto => {
            if plain && inst.has_full_lists() {
                match bipartite_fast_path(inst)? {
                    FastPath::Sat(w) => return Ok(fast(Some(w))),
                    FastPath::Unsat => return Ok(fast(None)),
                    FastPath::NotApplicable => {}
                }
            }
            if plain {
                if let Some(cover) = vertex_cover_at_most(&inst.g, vc_threshold) {
                    return vc(inst, &cover);
                }
            }
            solve(inst, mode, Strategy::Backtrack, budget, vc_threshold)
        }
    }
}

fn fast(witness: Option<Homomorphism>) -> Report {
    Report {
        witness,
        stats: SolveStats::default(),
        used: "bipartite",
    }
}

fn vc(inst: &ListHomInstance, cover: &[usize]) -> Result<Report> {
    let (witness, stats) = solve_vc(inst, cover)?;
    Ok(Report {
        witness,
        stats,
        used: "vc",
    })
}
