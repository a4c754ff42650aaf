//! Exhaustive search over all list-respecting maps in lexicographic order.

use super::{Homomorphism, ListHomInstance, Mode};
use crate::error::SolveError;

pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Lexicographically first witness, or `None` if there is none.
///
/// Fails with `BudgetExceeded` when the number of candidate maps (the product
/// of the list sizes) is above [`DEFAULT_BUDGET`].
pub fn solve_brute(inst: &ListHomInstance, mode: Mode) -> Result<Option<Homomorphism>, SolveError> {
    solve_brute_with_budget(inst, mode, DEFAULT_BUDGET)
}

pub fn solve_brute_with_budget(
    inst: &ListHomInstance,
    mode: Mode,
    budget: u128,
) -> Result<Option<Homomorphism>, SolveError> {
    let n = inst.g.n();
    let lists: Vec<Vec<usize>> = (0..n).map(|v| inst.list(v).iter().collect()).collect();
    if lists.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let mut candidates: u128 = 1;
    for l in &lists {
        candidates = candidates.saturating_mul(l.len() as u128);
    }
    if candidates > budget {
        return Err(SolveError::BudgetExceeded { candidates, budget });
    }
    if n == 0 {
        return Ok(Some(Homomorphism(Vec::new())));
    }

    // Odometer over list positions; a digit only advances past a prefix that
    // already violates a constraint, so the first full map found is the
    // lexicographically smallest witness.
    let mut pos = vec![0usize; n];
    let mut img = vec![0usize; n];
    let mut v = 0;
    let mut fresh = true;
    loop {
        if !fresh {
            pos[v] += 1;
        }
        fresh = false;
        if pos[v] == lists[v].len() {
            pos[v] = 0;
            if v == 0 {
                return Ok(None);
            }
            v -= 1;
            continue;
        }
        img[v] = lists[v][pos[v]];
        if consistent(inst, mode, &img, v) {
            if v + 1 == n {
                return Ok(Some(Homomorphism(img)));
            }
            v += 1;
            fresh = true;
        }
    }
}

/// Checks every constraint between `v` and earlier vertices.
fn consistent(inst: &ListHomInstance, mode: Mode, img: &[usize], v: usize) -> bool {
    let g = &inst.g;
    let a = img[v];
    if g.neighbors(v)
        .iter()
        .any(|&u| u < v && !inst.h.has_edge(img[u], a))
    {
        return false;
    }
    if mode == Mode::LocallyInjective {
        for &w in g.neighbors(v) {
            if g.neighbors(w).iter().any(|&u| u < v && img[u] == a) {
                return false;
            }
        }
    }
    true
}
