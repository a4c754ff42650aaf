//! Backtracking search with arc consistency maintained at every node.
//!
//! Domains are bit sets over `V(h)`. A domain change of `x` revises every
//! neighbor `y` of `x` against `N_h(D(x))`, the union of the neighbor rows of
//! the values left for `x`. In locally injective mode a variable whose domain
//! shrinks to `{a}` removes `a` from every other vertex sharing a neighbor
//! with it. Branching is binary: `x = a`, then `x != a` with propagation.

use std::collections::HashMap;
use std::ops::ControlFlow;

use super::cliques::{capped_clique_numbers, greedy_clique_sizes};
use super::{verify, Homomorphism, ListHomInstance, Mode, SolveStats};
use crate::bitset::BitSet;
use crate::graph::Graph;

/// How the next branching variable is picked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VarOrder {
    /// Smallest domain first, ties to the lowest index.
    #[default]
    MinDomain,
    /// Lowest index first; solutions then come out in lexicographic order.
    Index,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchLimits {
    /// Stop after this many branching decisions.
    pub max_nodes: Option<u64>,
    pub order: VarOrder,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Sat(Homomorphism),
    Unsat,
    /// The node limit was hit before a verdict.
    Aborted,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Enumeration {
    pub witnesses: Vec<Homomorphism>,
    /// Set when the cap stopped the enumeration early.
    pub truncated: bool,
}

/// Complete backtracking solver. Returned witnesses are verified.
pub fn solve_backtrack(inst: &ListHomInstance, mode: Mode) -> (Option<Homomorphism>, SolveStats) {
    match solve_backtrack_with(inst, mode, SearchLimits::default()) {
        (SearchOutcome::Sat(w), stats) => (Some(w), stats),
        (SearchOutcome::Unsat, stats) => (None, stats),
        (SearchOutcome::Aborted, _) => unreachable!("no node limit was set"),
    }
}

/// With [`VarOrder::MinDomain`] the search also forces images to increase
/// along classes of true twins and solves independent parts of the remaining
/// variables one at a time, so a part that fails is not retried under every
/// solution of the others. [`VarOrder::Index`] is the plain search, whose
/// first witness is the lexicographically smallest.
pub fn solve_backtrack_with(
    inst: &ListHomInstance,
    mode: Mode,
    limits: SearchLimits,
) -> (SearchOutcome, SolveStats) {
    let mut found = None;
    let (complete, stats) = match limits.order {
        VarOrder::Index => run(inst, mode, limits, |img| {
            found = Some(Homomorphism(img.to_vec()));
            ControlFlow::Break(())
        }),
        VarOrder::MinDomain => {
            let (w, complete, stats) = solve_by_parts(inst, mode, limits);
            found = w;
            (complete, stats)
        }
    };
    let outcome = match found {
        Some(w) => {
            assert!(
                verify(inst, &w, mode).unwrap_or(false),
                "search produced an invalid witness"
            );
            SearchOutcome::Sat(w)
        }
        None if complete => SearchOutcome::Unsat,
        None => SearchOutcome::Aborted,
    };
    (outcome, stats)
}

/// Recursion depth grows with the number of nested decisions.
const PART_STACK: usize = 1 << 28;

fn solve_by_parts(
    inst: &ListHomInstance,
    mode: Mode,
    limits: SearchLimits,
) -> (Option<Homomorphism>, bool, SolveStats) {
    std::thread::scope(|scope| {
        std::thread::Builder::new()
            .stack_size(PART_STACK)
            .spawn_scoped(scope, || {
                let mut stats = SolveStats::default();
                let mut e = Engine::new(&inst.g, &inst.h, mode, inst.lists());
                e.chain(&true_twin_classes(inst));
                if !e.propagate_all() {
                    return (None, true, stats);
                }
                let all: Vec<usize> = (0..e.n).collect();
                match e.solve_part(&all, limits, &mut stats) {
                    Verdict::Sat => {
                        let img = e.dom.iter().map(|d| d.first().unwrap()).collect();
                        (Some(Homomorphism(img)), true, stats)
                    }
                    Verdict::Unsat => (None, true, stats),
                    Verdict::Aborted => (None, false, stats),
                }
            })
            .expect("search thread starts")
            .join()
            .expect("search thread does not panic")
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Sat,
    Unsat,
    Aborted,
}

/// All witnesses in lexicographic order, at most `cap` of them.
pub fn enumerate_all(inst: &ListHomInstance, mode: Mode, cap: usize) -> Enumeration {
    let mut out = Enumeration::default();
    if cap == 0 {
        out.truncated = has_solution(inst, mode);
        return out;
    }
    run(inst, mode, index_order(), |img| {
        if out.witnesses.len() == cap {
            out.truncated = true;
            return ControlFlow::Break(());
        }
        out.witnesses.push(Homomorphism(img.to_vec()));
        ControlFlow::Continue(())
    });
    debug_assert!(out.witnesses.windows(2).all(|w| w[0] < w[1]));
    out
}

fn has_solution(inst: &ListHomInstance, mode: Mode) -> bool {
    matches!(
        solve_backtrack_with(inst, mode, SearchLimits::default()).0,
        SearchOutcome::Sat(_)
    )
}

fn index_order() -> SearchLimits {
    SearchLimits {
        max_nodes: None,
        order: VarOrder::Index,
    }
}

/// Calls `visit` on every witness in lexicographic order until it breaks.
pub fn for_each_solution<F>(inst: &ListHomInstance, mode: Mode, visit: F) -> SolveStats
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    run(inst, mode, index_order(), visit).1
}

/// Calls `visit` on every witness, in no particular order, until it breaks.
///
/// Vertices with the same closed neighborhood and the same list are true
/// twins: their images are distinct and can be permuted freely. The search
/// only looks for witnesses whose images increase along each twin class and
/// hands `visit` every permutation of each one. This is much faster when `g`
/// has large cliques, as the clique chain gadgets do.
pub fn for_each_solution_by_twins<F>(inst: &ListHomInstance, mode: Mode, mut visit: F) -> SolveStats
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let classes = true_twin_classes(inst);
    let mut full = Vec::new();
    let mut e = Engine::new(&inst.g, &inst.h, mode, inst.lists());
    e.chain(&classes);
    run_engine(e, index_order(), |img| {
        full.clear();
        full.extend_from_slice(img);
        permute_classes(&classes, 0, &mut full, &mut visit)
    })
    .1
}

/// Classes of at least two true twins, each sorted.
fn true_twin_classes(inst: &ListHomInstance) -> Vec<Vec<usize>> {
    let g = &inst.g;
    let mut by_key: HashMap<(Vec<usize>, &BitSet), Vec<usize>> = HashMap::new();
    for v in 0..g.n() {
        let mut closed = g.neighbors(v).to_vec();
        closed.push(v);
        closed.sort_unstable();
        by_key.entry((closed, inst.list(v))).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = by_key.into_values().filter(|c| c.len() > 1).collect();
    classes.sort();
    classes
}

/// Visits every way of permuting the images inside the classes from `at` on.
fn permute_classes<F>(
    classes: &[Vec<usize>],
    at: usize,
    img: &mut [usize],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let Some(class) = classes.get(at) else {
        return visit(img);
    };
    let mut values: Vec<usize> = class.iter().map(|&v| img[v]).collect();
    values.sort_unstable();
    loop {
        for (&v, &a) in class.iter().zip(&values) {
            img[v] = a;
        }
        permute_classes(classes, at + 1, img, visit)?;
        if !next_permutation(&mut values) {
            break;
        }
    }
    ControlFlow::Continue(())
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).unwrap();
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Lists narrowed to arc consistency: every value of a vertex has a
/// supporting value at each neighbor. Stops at the first emptied list, so
/// other lists may then be only partly narrowed.
pub fn arc_consistent_domains(inst: &ListHomInstance, mode: Mode) -> Vec<BitSet> {
    let mut e = Engine::new(&inst.g, &inst.h, mode, inst.lists());
    e.propagate_all();
    e.dom
}

/// Domains after singleton arc consistency: a value stays only if assigning
/// it and restoring arc consistency empties no domain. At the fixpoint
/// `visit(x, a, domains)` sees the domains left by each surviving `x = a`. All
/// domains come back empty when the instance is found to have no witness.
pub fn singleton_consistent_domains<F>(
    inst: &ListHomInstance,
    mode: Mode,
    mut visit: F,
) -> Vec<BitSet>
where
    F: FnMut(usize, usize, &[BitSet]),
{
    let mut e = Engine::new(&inst.g, &inst.h, mode, inst.lists());
    let empty = || vec![BitSet::new(inst.h.n()); inst.g.n()];
    if !e.propagate_all() {
        return empty();
    }
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..e.n {
            if e.size[x] == 1 {
                continue;
            }
            for a in e.dom[x].clone().iter() {
                if !e.probe(x, a, |_| ()) {
                    if !e.exclude(x, a) {
                        return empty();
                    }
                    changed = true;
                }
            }
        }
    }
    for x in 0..e.n {
        for a in e.dom[x].clone().iter() {
            e.probe(x, a, |dom| visit(x, a, dom));
        }
    }
    e.dom
}

/// Number of witnesses.
pub fn count_all(inst: &ListHomInstance, mode: Mode) -> u64 {
    let mut count = 0u64;
    for_each_solution(inst, mode, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// Runs the search, reporting each solution to `visit`. Returns whether the
/// search space was exhausted (false if `visit` broke off or the node limit
/// was reached).
fn run<F>(inst: &ListHomInstance, mode: Mode, limits: SearchLimits, visit: F) -> (bool, SolveStats)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    run_engine(
        Engine::new(&inst.g, &inst.h, mode, inst.lists()),
        limits,
        visit,
    )
}

fn run_engine<F>(mut e: Engine<'_>, limits: SearchLimits, mut visit: F) -> (bool, SolveStats)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut stats = SolveStats::default();
    if e.n == 0 {
        let flow = visit(&[]);
        return (flow.is_continue(), stats);
    }
    if !e.propagate_all() {
        return (true, stats);
    }
    // (variable, value, trail mark) per open decision
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    let mut failed = false;
    let mut img = vec![0usize; e.n];
    loop {
        if !failed {
            match e.select(limits.order) {
                None => {
                    for (v, slot) in img.iter_mut().enumerate() {
                        *slot = e.dom[v].first().unwrap();
                    }
                    if visit(&img).is_break() {
                        return (false, stats);
                    }
                    failed = true;
                }
                Some(x) => {
                    if limits.max_nodes.is_some_and(|m| stats.nodes_explored >= m) {
                        return (false, stats);
                    }
                    stats.nodes_explored += 1;
                    let a = e.dom[x].first().unwrap();
                    let mark = e.push_level();
                    stack.push((x, a, mark));
                    failed = !e.assign(x, a);
                }
            }
            continue;
        }
        // undo the latest decision and refute its value
        let Some((x, a, mark)) = stack.pop() else {
            return (true, stats);
        };
        e.pop_level(mark);
        failed = !e.exclude(x, a);
    }
}

/// Drops values whose largest clique is smaller than one found around the
/// variable. Edges are left to arc consistency.
fn clique_filter(g: &Graph, h: &Graph, dom: &mut [BitSet]) {
    let need = greedy_clique_sizes(g);
    let cap = need.iter().copied().max().unwrap_or(0);
    if cap < 3 {
        return;
    }
    let have = capped_clique_numbers(h, cap);
    for (d, &k) in dom.iter_mut().zip(&need) {
        if k >= 3 {
            let drop: Vec<usize> = d.iter().filter(|&u| have[u] < k).collect();
            for u in drop {
                d.remove(u);
            }
        }
    }
}

/// A domain snapshot; its nonzero words live in `Engine::pool`.
struct Saved {
    var: usize,
    prev: u32,
    lo: usize,
    len: usize,
}

struct Engine<'a> {
    g: &'a Graph,
    h: &'a Graph,
    mode: Mode,
    n: usize,
    dom: Vec<BitSet>,
    size: Vec<usize>,
    trail: Vec<Saved>,
    pool: Vec<u64>,
    saved_at: Vec<u32>,
    level: u32,
    queue: Vec<usize>,
    queued: Vec<bool>,
    scratch: BitSet,
    cache: HashMap<BitSet, BitSet>,
    // `x < after[x]` and `before[x] < x` on images, for twin chains
    after: Vec<usize>,
    before: Vec<usize>,
    seen: Vec<u64>,
    stamp: u64,
    // wipeouts each variable took part in, plus one
    weight: Vec<u64>,
    doomed: Vec<usize>,
}

const NO_LEVEL: u32 = u32::MAX;
const NONE: usize = usize::MAX;
/// Domains at least this large have their neighbor unions cached.
const CACHE_FROM: usize = 24;
const CACHE_CAP: usize = 4096;
/// A neighbor with at most `1 / SMALL_SIDE` as many values is revised value by
/// value instead of against the union of neighbor rows.
const SMALL_SIDE: usize = 8;

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, h: &'a Graph, mode: Mode, lists: &[BitSet]) -> Self {
        let n = g.n();
        let mut dom: Vec<BitSet> = lists.to_vec();
        clique_filter(g, h, &mut dom);
        let size = dom.iter().map(BitSet::count).collect();
        Engine {
            g,
            h,
            mode,
            n,
            dom,
            size,
            trail: Vec::new(),
            pool: Vec::new(),
            saved_at: vec![NO_LEVEL; n],
            level: 0,
            queue: Vec::new(),
            queued: vec![false; n],
            scratch: BitSet::new(h.n()),
            cache: HashMap::new(),
            after: vec![NONE; n],
            before: vec![NONE; n],
            seen: vec![0; n],
            stamp: 0,
            weight: vec![1; n],
            doomed: Vec::new(),
        }
    }

    /// Forces images to increase along each class.
    fn chain(&mut self, classes: &[Vec<usize>]) {
        for c in classes {
            for w in c.windows(2) {
                self.after[w[0]] = w[1];
                self.before[w[1]] = w[0];
            }
        }
    }

    fn select(&self, order: VarOrder) -> Option<usize> {
        match order {
            VarOrder::Index => (0..self.n).find(|&v| self.size[v] > 1),
            VarOrder::MinDomain => {
                let mut best = None;
                let mut best_size = usize::MAX;
                for v in 0..self.n {
                    let s = self.size[v];
                    if s > 1 && s < best_size {
                        best = Some(v);
                        best_size = s;
                        if s == 2 {
                            break;
                        }
                    }
                }
                best
            }
        }
    }

    /// Solves the open variables of `vars` part by part. On success the
    /// domains hold the solution; on failure the caller undoes its decision.
    fn solve_part(
        &mut self,
        vars: &[usize],
        limits: SearchLimits,
        stats: &mut SolveStats,
    ) -> Verdict {
        for part in self.parts(vars) {
            match self.solve_connected(part, limits, stats) {
                Verdict::Sat => {}
                other => return other,
            }
        }
        Verdict::Sat
    }

    fn solve_connected(
        &mut self,
        mut part: Vec<usize>,
        limits: SearchLimits,
        stats: &mut SolveStats,
    ) -> Verdict {
        let mut first = true;
        loop {
            if !first {
                let mut parts = self.parts(&part);
                match parts.len() {
                    0 => return Verdict::Sat,
                    1 => part = parts.pop().unwrap(),
                    _ => return self.solve_part(&part, limits, stats),
                }
            }
            first = false;
            let Some(x) = self.select_weighted(&part) else {
                return Verdict::Sat;
            };
            if limits.max_nodes.is_some_and(|m| stats.nodes_explored >= m) {
                return Verdict::Aborted;
            }
            stats.nodes_explored += 1;
            let a = self.dom[x].first().unwrap();
            let (mark, level) = (self.trail.len(), self.level);
            self.level += 1;
            if self.assign(x, a) {
                match self.solve_part(&part, limits, stats) {
                    Verdict::Unsat => {}
                    other => return other,
                }
            }
            self.undo(mark, level);
            if !self.exclude(x, a) {
                return Verdict::Unsat;
            }
        }
    }

    /// Smallest domain per failure weight; ties go to the lowest index.
    fn select_weighted(&self, part: &[usize]) -> Option<usize> {
        let mut best: Option<usize> = None;
        for &v in part {
            if self.size[v] <= 1 {
                continue;
            }
            // size[v] / weight[v] < size[b] / weight[b]
            let better = best.is_none_or(|b| {
                let lhs = self.size[v] as u128 * self.weight[b] as u128;
                let rhs = self.size[b] as u128 * self.weight[v] as u128;
                lhs < rhs || (lhs == rhs && v < b)
            });
            if better {
                best = Some(v);
            }
        }
        best
    }

    /// Open variables of `vars` grouped into parts that share no constraint.
    fn parts(&mut self, vars: &[usize]) -> Vec<Vec<usize>> {
        self.stamp += 1;
        let stamp = self.stamp;
        let g = self.g;
        let mut out = Vec::new();
        for &s in vars {
            if self.size[s] <= 1 || self.seen[s] == stamp {
                continue;
            }
            self.seen[s] = stamp;
            let mut part = vec![s];
            let mut i = 0;
            while i < part.len() {
                let x = part[i];
                i += 1;
                for &w in g.neighbors(x) {
                    if self.size[w] > 1 && self.seen[w] != stamp {
                        self.seen[w] = stamp;
                        part.push(w);
                    }
                    if self.mode == Mode::LocallyInjective {
                        for &y in g.neighbors(w) {
                            if self.size[y] > 1 && self.seen[y] != stamp {
                                self.seen[y] = stamp;
                                part.push(y);
                            }
                        }
                    }
                }
            }
            out.push(part);
        }
        out
    }

    /// Whether `x = a` survives propagation; `look` sees the domains it leaves.
    fn probe(&mut self, x: usize, a: usize, look: impl FnOnce(&[BitSet])) -> bool {
        let (mark, level) = (self.trail.len(), self.level);
        self.level += 1;
        let ok = self.assign(x, a);
        if ok {
            look(&self.dom);
        }
        self.undo(mark, level);
        ok
    }

    /// Restores the trail to `mark` and the decision level to `level`.
    fn undo(&mut self, mark: usize, level: u32) {
        self.level += 1;
        self.pop_level(mark);
        self.level = level;
    }

    fn push_level(&mut self) -> usize {
        self.level += 1;
        self.trail.len()
    }

    fn pop_level(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let s = self.trail.pop().unwrap();
            let d = &mut self.dom[s.var];
            d.clear();
            let from = self.pool.len() - s.len;
            d.words_mut()[s.lo..s.lo + s.len].copy_from_slice(&self.pool[from..]);
            self.pool.truncate(from);
            self.size[s.var] = d.count();
            self.saved_at[s.var] = s.prev;
        }
        self.level -= 1;
    }

    fn save(&mut self, v: usize) {
        // root-level changes are never undone
        if self.level == 0 || self.saved_at[v] == self.level {
            return;
        }
        let words = self.dom[v].words();
        let lo = words.iter().position(|&w| w != 0).unwrap_or(0);
        let hi = words.iter().rposition(|&w| w != 0).map_or(lo, |i| i + 1);
        self.pool.extend_from_slice(&words[lo..hi]);
        self.trail.push(Saved {
            var: v,
            prev: self.saved_at[v],
            lo,
            len: hi - lo,
        });
        self.saved_at[v] = self.level;
    }

    fn enqueue(&mut self, v: usize) {
        if !self.queued[v] {
            self.queued[v] = true;
            self.queue.push(v);
        }
    }

    fn assign(&mut self, x: usize, a: usize) -> bool {
        self.save(x);
        let d = &mut self.dom[x];
        d.clear();
        d.insert(a);
        self.size[x] = 1;
        self.enqueue(x);
        self.propagate()
    }

    fn exclude(&mut self, x: usize, a: usize) -> bool {
        self.save(x);
        self.dom[x].remove(a);
        self.size[x] -= 1;
        if self.size[x] == 0 {
            return false;
        }
        self.enqueue(x);
        self.propagate()
    }

    fn propagate_all(&mut self) -> bool {
        if self.size.iter().any(|&s| s == 0) {
            return false;
        }
        for v in 0..self.n {
            self.enqueue(v);
        }
        self.propagate()
    }

    /// Loads `N_h(D(x))` into the scratch set.
    fn load_support(&mut self, x: usize) {
        let d = &self.dom[x];
        let s = self.size[x];
        if s >= CACHE_FROM {
            if let Some(hit) = self.cache.get(d) {
                self.scratch.copy_from(hit);
                return;
            }
        }
        self.scratch.clear();
        for b in d.iter() {
            self.scratch.union_with(self.h.neighbor_row(b));
        }
        if s >= CACHE_FROM {
            if self.cache.len() >= CACHE_CAP {
                self.cache.clear();
            }
            self.cache.insert(d.clone(), self.scratch.clone());
        }
    }

    fn propagate(&mut self) -> bool {
        let ok = self.drain();
        if !ok {
            for &v in &self.queue {
                self.queued[v] = false;
            }
            self.queue.clear();
        }
        ok
    }

    fn drain(&mut self) -> bool {
        while let Some(x) = self.queue.pop() {
            self.queued[x] = false;
            let g = self.g;
            let mut loaded = false;
            for &y in g.neighbors(x) {
                if self.size[y] * SMALL_SIDE <= self.size[x] {
                    // few values to check: look for a support of each directly
                    let (h, dx) = (self.h, &self.dom[x]);
                    self.doomed.clear();
                    self.doomed.extend(
                        self.dom[y]
                            .iter()
                            .filter(|&b| !h.neighbor_row(b).intersects(dx)),
                    );
                    if self.doomed.is_empty() {
                        continue;
                    }
                    self.save(y);
                    for &b in &self.doomed {
                        self.dom[y].remove(b);
                    }
                    self.size[y] -= self.doomed.len();
                    if self.size[y] == 0 {
                        self.weight[x] += 1;
                        self.weight[y] += 1;
                        return false;
                    }
                    self.enqueue(y);
                    continue;
                }
                if !loaded {
                    self.load_support(x);
                    loaded = true;
                }
                if self.dom[y].is_subset(&self.scratch) {
                    continue;
                }
                self.save(y);
                self.dom[y].intersect_with(&self.scratch);
                let s = self.dom[y].count();
                self.size[y] = s;
                if s == 0 {
                    self.weight[x] += 1;
                    self.weight[y] += 1;
                    return false;
                }
                self.enqueue(y);
            }
            if self.mode == Mode::LocallyInjective && self.size[x] == 1 {
                let a = self.dom[x].first().unwrap();
                for &w in g.neighbors(x) {
                    for &y in g.neighbors(w) {
                        if y == x || !self.dom[y].contains(a) {
                            continue;
                        }
                        self.save(y);
                        self.dom[y].remove(a);
                        self.size[y] -= 1;
                        if self.size[y] == 0 {
                            self.weight[x] += 1;
                            self.weight[y] += 1;
                            return false;
                        }
                        self.enqueue(y);
                    }
                }
            }
            let y = self.after[x];
            if y != NONE {
                let low = self.dom[x].first().unwrap();
                if self.dom[y].first().is_some_and(|b| b <= low)
                    && !self.shrink(y, |d| d.drop_through(low))
                {
                    return false;
                }
            }
            let w = self.before[x];
            if w != NONE {
                let high = self.dom[x].last().unwrap();
                if self.dom[w].last().is_some_and(|b| b >= high)
                    && !self.shrink(w, |d| d.truncate_from(high))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Applies a known-effective narrowing to `D(y)`; false on a wipeout.
    fn shrink(&mut self, y: usize, f: impl FnOnce(&mut BitSet)) -> bool {
        self.save(y);
        f(&mut self.dom[y]);
        let s = self.dom[y].count();
        self.size[y] = s;
        if s == 0 {
            return false;
        }
        self.enqueue(y);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::solve_brute;

    #[test]
    fn backtrack_examples() {
        let k4 = ListHomInstance::full(Graph::complete(4), Graph::complete(4));
        let (w, _) = solve_backtrack(&k4, Mode::Plain);
        let mut t = w.unwrap().0;
        t.sort_unstable();
        assert_eq!(t, vec![0, 1, 2, 3]);

        let k3 = ListHomInstance::full(Graph::complete(3), Graph::complete(2));
        assert_eq!(solve_backtrack(&k3, Mode::Plain).0, None);
    }

    #[test]
    fn enumeration_examples() {
        let k2 = ListHomInstance::full(Graph::complete(2), Graph::complete(2));
        let e = enumerate_all(&k2, Mode::Plain, 10);
        assert_eq!(
            e.witnesses,
            vec![Homomorphism(vec![0, 1]), Homomorphism(vec![1, 0])]
        );
        assert!(!e.truncated);

        let e = enumerate_all(&k2, Mode::Plain, 1);
        assert_eq!(e.witnesses.len(), 1);
        assert!(e.truncated);

        let k3 = ListHomInstance::full(Graph::complete(3), Graph::complete(2));
        assert!(enumerate_all(&k3, Mode::Plain, 10).witnesses.is_empty());
    }

    #[test]
    fn counts_proper_colorings() {
        // C5 has (k-1)^5 - (k-1) proper k-colorings
        let c5 = ListHomInstance::full(Graph::cycle(5), Graph::complete(4));
        assert_eq!(count_all(&c5, Mode::Plain), 3u64.pow(5) - 3);
    }

    #[test]
    fn first_witness_in_index_order_is_lexicographic() {
        let inst = ListHomInstance::full(Graph::cycle(5), Graph::complete(3));
        let e = enumerate_all(&inst, Mode::Plain, 1);
        assert_eq!(
            Some(e.witnesses[0].clone()),
            solve_brute(&inst, Mode::Plain).unwrap()
        );
    }

    #[test]
    fn node_limit_aborts() {
        let inst = ListHomInstance::full(Graph::wheel(5), Graph::complete(3));
        let (out, stats) = solve_backtrack_with(
            &inst,
            Mode::Plain,
            SearchLimits {
                max_nodes: Some(1),
                ..Default::default()
            },
        );
        assert_eq!(out, SearchOutcome::Aborted);
        assert_eq!(stats.nodes_explored, 1);
    }

    fn sorted_witnesses(inst: &ListHomInstance, mode: Mode) -> Vec<Vec<usize>> {
        let mut all = Vec::new();
        for_each_solution_by_twins(inst, mode, |img| {
            all.push(img.to_vec());
            ControlFlow::Continue(())
        });
        all.sort();
        all
    }

    #[test]
    fn twin_reduction_matches_plain_enumeration() {
        use crate::graph::random_graph_max_degree;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for seed in 0..120u64 {
            // a clique glued onto a random graph gives twin classes
            let base = random_graph_max_degree(3 + (seed % 3) as usize, 3, seed);
            let mut b = crate::graph::GraphBuilder::new(base.n());
            b.embed(&base, 0);
            let q = b.add_vertices(2 + (seed % 3) as usize);
            b.clique(&q);
            for &v in &q {
                b.edge(v, 0);
            }
            let g = b.build();
            let h = random_graph_max_degree(5, 4, seed + 1000);
            let lists: Vec<Vec<usize>> = if seed % 2 == 0 {
                vec![(0..5).collect(); g.n()]
            } else {
                (0..g.n())
                    .map(|_| (0..5).filter(|_| rng.gen_bool(0.8)).collect())
                    .collect()
            };
            let inst = ListHomInstance::new(g, h, lists).unwrap();
            for mode in [Mode::Plain, Mode::LocallyInjective] {
                let plain: Vec<Vec<usize>> = enumerate_all(&inst, mode, usize::MAX)
                    .witnesses
                    .into_iter()
                    .map(|w| w.0)
                    .collect();
                assert_eq!(sorted_witnesses(&inst, mode), plain, "seed {seed} {mode:?}");
            }
        }
    }

    #[test]
    fn twin_reduction_on_cliques() {
        let inst = ListHomInstance::full(Graph::complete(4), Graph::complete(6));
        assert_eq!(sorted_witnesses(&inst, Mode::Plain).len(), 6 * 5 * 4 * 3);
        assert!(!next_permutation(&mut [3, 2, 1]));
    }
}
