//! End-to-end chains from 3-coloring to HOM.
//!
//! Each chain ends with the gadget construction. Before it, the LIST-HOM
//! instance is pruned: unusable target vertices and edges only inflate the
//! gadgets, and pruning removes the cliques that configurations sharing a
//! label would otherwise form.

use super::{
    check_degree, check_r, prune_listhom, reduce_3col_to_listhom,
    reduce_3col_to_listhom_partitioned, reduce_3col_to_listhom_vc, reduce_bound_chi,
    reduce_listhom_to_hom, Certificates, ReductionRecord, Stage, Witness,
};
use crate::coloring::{greedy_coloring, VertexColoring};
use crate::error::ReductionError;
use crate::graph::Graph;
use crate::grouping::Partition;
use crate::solver::{verify, Homomorphism, ListHomInstance, Mode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PipelineKind {
    Main,
    Chi,
    Vc,
    Local,
}

#[derive(Debug, Clone)]
pub struct PipelineRecord {
    pub kind: PipelineKind,
    pub input: Graph,
    pub r: usize,
    /// Isolated vertices appended before the first stage (chromatic chain).
    pub padding: usize,
    pub stages: Vec<ReductionRecord>,
    /// Semantics under which the final instance is to be solved.
    pub mode: Mode,
}

impl PipelineRecord {
    pub fn out(&self) -> &ListHomInstance {
        &self.stages.last().expect("pipelines have stages").out
    }

    pub fn certificates(&self) -> &Certificates {
        &self
            .stages
            .last()
            .expect("pipelines have stages")
            .certificates
    }

    /// The LIST-HOM instance handed to the gadget stage.
    pub fn list_instance(&self) -> &ListHomInstance {
        &self.stages[self.stages.len() - 2].out
    }

    fn padded_coloring(&self, c: &VertexColoring) -> Result<VertexColoring, ReductionError> {
        if !(c.k() <= 3 && c.is_proper(&self.input)) {
            return Err(ReductionError::BadWitness(
                "input coloring is not a proper 3-coloring".into(),
            ));
        }
        let mut colors = c.colors().to_vec();
        colors.resize(c.len() + self.padding, 1);
        Ok(VertexColoring::new(colors, 3)?)
    }

    /// Witnesses of every stage's output, first stage first.
    pub fn encode_all(&self, c: &VertexColoring) -> Result<Vec<Homomorphism>, ReductionError> {
        let mut w = Witness::Coloring(self.padded_coloring(c)?);
        let mut out = Vec::with_capacity(self.stages.len());
        for s in &self.stages {
            let m = s.encode(&w)?;
            out.push(m.clone());
            w = Witness::Map(m);
        }
        Ok(out)
    }

    pub fn encode(&self, c: &VertexColoring) -> Result<Homomorphism, ReductionError> {
        Ok(self.encode_all(c)?.pop().expect("pipelines have stages"))
    }

    /// Input witnesses of every stage, last stage first, for a witness of the
    /// final instance.
    pub fn decode_all(&self, w: &Homomorphism) -> Result<Vec<Witness>, ReductionError> {
        if !verify(self.out(), w, self.mode)? {
            return Err(ReductionError::BadWitness(
                "final witness does not verify".into(),
            ));
        }
        let mut out = Vec::with_capacity(self.stages.len());
        let mut cur = w.clone();
        for s in self.stages.iter().rev() {
            let back = s.decode(&cur)?;
            if let Witness::Map(m) = &back {
                cur = m.clone();
            }
            out.push(back);
        }
        Ok(out)
    }

    /// A proper 3-coloring of the input.
    pub fn decode(&self, w: &Homomorphism) -> Result<VertexColoring, ReductionError> {
        match self.decode_all(w)?.pop() {
            Some(Witness::Coloring(c)) => {
                let colors = c.colors()[..self.input.n()].to_vec();
                Ok(VertexColoring::new(colors, 3)?)
            }
            _ => unreachable!("the first stage starts from a coloring"),
        }
    }
}

fn check_input(g: &Graph, r: usize) -> Result<(), ReductionError> {
    check_r(g, r)?;
    check_degree(g, 4)
}

fn gadgets_after_prune(
    stages: &mut Vec<ReductionRecord>,
    t: Option<usize>,
    h_coloring: Option<&VertexColoring>,
) -> Result<(), ReductionError> {
    let pruned = prune_listhom(&stages.last().unwrap().out, h_coloring)?;
    let last = reduce_listhom_to_hom(&pruned.out, t, pruned.certificates.h_coloring.as_ref())?;
    stages.push(pruned);
    stages.push(last);
    Ok(())
}

/// Configurations, pruning, gadgets with `t` from a greedy coloring.
pub fn pipeline_main(g: &Graph, r: usize) -> Result<PipelineRecord, ReductionError> {
    check_input(g, r)?;
    let mut stages = vec![reduce_3col_to_listhom(g, r, 4)?];
    gadgets_after_prune(&mut stages, None, None)?;
    Ok(PipelineRecord {
        kind: PipelineKind::Main,
        input: g.clone(),
        r,
        padding: 0,
        stages,
        mode: Mode::Plain,
    })
}

/// The main chain, to be solved under locally injective semantics.
pub fn pipeline_local(g: &Graph, r: usize) -> Result<PipelineRecord, ReductionError> {
    let mut p = pipeline_main(g, r)?;
    p.kind = PipelineKind::Local;
    p.mode = Mode::LocallyInjective;
    Ok(p)
}

/// Greedy 5-coloring, color classes padded to multiples of `r` and cut into
/// monochromatic buckets, configurations, color split with `k = 5`, pruning,
/// gadgets with `t = 5`. The final target carries a 15-coloring.
pub fn pipeline_chi(g: &Graph, r: usize) -> Result<PipelineRecord, ReductionError> {
    if r < 2 {
        return Err(ReductionError::Precondition(format!(
            "r must be at least 2, got {r}"
        )));
    }
    check_degree(g, 4)?;
    let five = greedy_coloring(g);
    debug_assert!(five.k() <= 5);
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); 5];
    for v in 0..g.n() {
        classes[five.color(v) as usize - 1].push(v);
    }
    let mut next = g.n();
    for class in &mut classes {
        while class.len() % r != 0 {
            class.push(next);
            next += 1;
        }
    }
    let padding = next - g.n();
    let padded = g.with_isolated(padding);
    let mut buckets = Vec::new();
    let mut bucket_colors = Vec::new();
    for (c, class) in classes.iter().enumerate() {
        for chunk in class.chunks(r) {
            buckets.push(chunk.to_vec());
            bucket_colors.push(c as u32 + 1);
        }
    }
    let partition = Partition::new(buckets, r)?;
    let first = reduce_3col_to_listhom_partitioned(&padded, &partition, 4)?;
    let bucket_coloring = VertexColoring::new(bucket_colors, 5)?;
    let split = reduce_bound_chi(&first.out, &bucket_coloring)?;
    let split_coloring = split.certificates.h_coloring.clone();
    let mut stages = vec![first, split];
    gadgets_after_prune(&mut stages, Some(5), split_coloring.as_ref())?;
    Ok(PipelineRecord {
        kind: PipelineKind::Chi,
        input: g.clone(),
        r,
        padding,
        stages,
        mode: Mode::Plain,
    })
}

/// Bucket pairs, pruning, gadgets with the 2-coloring of the bipartite
/// target. The final record carries a vertex cover of the output source.
pub fn pipeline_vc(g: &Graph, r: usize) -> Result<PipelineRecord, ReductionError> {
    check_input(g, r)?;
    let first = reduce_3col_to_listhom_vc(g, r)?;
    let sides = first.certificates.h_coloring.clone();
    let cover = first
        .certificates
        .cover
        .clone()
        .expect("bucket side is a cover");
    let mut stages = vec![first];
    gadgets_after_prune(&mut stages, Some(2), sides.as_ref())?;
    let last = stages.last_mut().unwrap();
    if let Stage::Gadgets(d) = &last.stage {
        last.certificates.cover = Some(d.lift_cover(&cover));
    }
    Ok(PipelineRecord {
        kind: PipelineKind::Vc,
        input: g.clone(),
        r,
        padding: 0,
        stages,
        mode: Mode::Plain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::three_coloring;
    use crate::cover::is_vertex_cover;
    use crate::solver::solve_backtrack;

    fn check(p: &PipelineRecord, g: &Graph) {
        let w = solve_backtrack(p.out(), p.mode).0;
        assert_eq!(w.is_some(), three_coloring(g).is_some(), "{:?}", p.kind);
        if let Some(w) = w {
            assert!(p.decode(&w).unwrap().is_proper(g));
            let fwd = p.encode(&three_coloring(g).unwrap()).unwrap();
            assert!(verify(p.out(), &fwd, Mode::Plain).unwrap());
        }
        let cert = p.certificates().h_coloring.as_ref().unwrap();
        assert!(cert.is_proper(&p.out().h));
    }

    #[test]
    fn small_graphs_through_every_chain() {
        for g in [
            Graph::complete(2),
            Graph::cycle(5),
            Graph::path(4),
            Graph::complete(4),
        ] {
            check(&pipeline_main(&g, 2).unwrap(), &g);
            check(&pipeline_local(&g, 2).unwrap(), &g);
            let chi = pipeline_chi(&g, 2).unwrap();
            check(&chi, &g);
            assert!(chi.padding <= 10);
            assert!(chi.certificates().h_coloring.as_ref().unwrap().k() <= 15);
            let vc = pipeline_vc(&g, 2).unwrap();
            check(&vc, &g);
            assert!(is_vertex_cover(
                &vc.out().g,
                vc.certificates().cover.as_ref().unwrap()
            ));
        }
    }
}
