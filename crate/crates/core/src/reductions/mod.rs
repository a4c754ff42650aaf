//! Reductions from 3-coloring to list homomorphism and on to homomorphism.
//!
//! Every construction returns a [`ReductionRecord`] holding its input, its
//! output instance and the data needed to carry witnesses across in both
//! directions. Pipelines chain records.

mod bounds;
mod chi;
mod configurations;
mod degree;
mod gadget_hom;
mod pairs;
mod pipelines;
mod plan;
mod prune;

pub use bounds::{
    bucket_pair_bound, bucket_pair_bound_holds, configuration_bound, configuration_bound_holds,
    configuration_bound_with_null, BoundCheck,
};
pub use chi::{reduce_bound_chi, ColorSplitData};
pub use configurations::{
    reduce_3col_to_listhom, reduce_3col_to_listhom_partitioned, Configuration, ConfigurationData,
    Slot,
};
pub use degree::{degree_reduce, DegreeMap};
pub use gadget_hom::{reduce_listhom_to_hom, GadgetData, MIN_MATCHING};
pub use pairs::{reduce_3col_to_listhom_vc, PairData, PairVertex};
pub use pipelines::{
    pipeline_chi, pipeline_local, pipeline_main, pipeline_vc, PipelineKind, PipelineRecord,
};
pub use plan::{DecodePlan, DecodeStep, Decoded, InputKind};
pub use prune::{prune_listhom, PruneData};

use crate::coloring::VertexColoring;
use crate::error::ReductionError;
use crate::graph::Graph;
use crate::solver::{verify, Homomorphism, ListHomInstance, Mode};

/// The input side of a reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    ThreeColoring(Graph),
    ListHom(ListHomInstance),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Colors `1..=3`.
    Coloring(VertexColoring),
    Map(Homomorphism),
}

impl Problem {
    pub fn accepts(&self, w: &Witness, mode: Mode) -> bool {
        match (self, w) {
            (Problem::ThreeColoring(g), Witness::Coloring(c)) => c.k() <= 3 && c.is_proper(g),
            (Problem::ListHom(inst), Witness::Map(m)) => verify(inst, m, mode).unwrap_or(false),
            _ => false,
        }
    }
}

/// Explicit objects a reduction claims exist, for checking without solving.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Certificates {
    /// A proper coloring of `out.h`.
    pub h_coloring: Option<VertexColoring>,
    /// A vertex cover of `out.g`.
    pub cover: Option<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub enum Stage {
    Configurations(ConfigurationData),
    BucketPairs(PairData),
    ColorSplit(ColorSplitData),
    Prune(PruneData),
    Gadgets(GadgetData),
}

#[derive(Debug, Clone)]
pub struct ReductionRecord {
    pub input: Problem,
    pub out: ListHomInstance,
    pub stage: Stage,
    pub certificates: Certificates,
}

impl ReductionRecord {
    pub fn kind(&self) -> &'static str {
        match self.stage {
            Stage::Configurations(_) => "configurations",
            Stage::BucketPairs(_) => "bucket-pairs",
            Stage::ColorSplit(_) => "color-split",
            Stage::Prune(_) => "prune",
            Stage::Gadgets(_) => "gadgets",
        }
    }

    /// Maps a witness of the input to a witness of `out`.
    pub fn encode(&self, w: &Witness) -> Result<Homomorphism, ReductionError> {
        if !self.input.accepts(w, Mode::Plain) {
            return Err(ReductionError::BadWitness(format!(
                "input witness does not verify ({})",
                self.kind()
            )));
        }
        let out = match (&self.stage, w) {
            (Stage::Configurations(d), Witness::Coloring(c)) => d.encode(c)?,
            (Stage::BucketPairs(d), Witness::Coloring(c)) => d.encode(c)?,
            (Stage::ColorSplit(d), Witness::Map(m)) => d.encode(m),
            (Stage::Prune(d), Witness::Map(m)) => d.encode(m)?,
            (Stage::Gadgets(d), Witness::Map(m)) => d.encode(m),
            _ => {
                return Err(ReductionError::BadWitness(
                    "witness of the wrong kind".into(),
                ))
            }
        };
        if !verify(&self.out, &out, Mode::Plain)? {
            return Err(ReductionError::BadWitness(format!(
                "encoded witness does not verify ({})",
                self.kind()
            )));
        }
        Ok(out)
    }

    /// Maps a witness of `out` back to a witness of the input.
    pub fn decode(&self, w: &Homomorphism) -> Result<Witness, ReductionError> {
        if !verify(&self.out, w, Mode::Plain)? {
            return Err(ReductionError::BadWitness(format!(
                "output witness does not verify ({})",
                self.kind()
            )));
        }
        let back = match &self.stage {
            Stage::Configurations(d) => Witness::Coloring(d.decode(w)?),
            Stage::BucketPairs(d) => Witness::Coloring(d.decode(w)?),
            Stage::ColorSplit(d) => Witness::Map(d.decode(w)),
            Stage::Prune(d) => Witness::Map(d.decode(w)),
            Stage::Gadgets(d) => Witness::Map(d.decode(w)?),
        };
        if !self.input.accepts(&back, Mode::Plain) {
            return Err(ReductionError::BadWitness(format!(
                "decoded witness does not verify ({})",
                self.kind()
            )));
        }
        Ok(back)
    }
}

pub fn encode_witness(rec: &ReductionRecord, w: &Witness) -> Result<Homomorphism, ReductionError> {
    rec.encode(w)
}

pub fn decode_witness(rec: &ReductionRecord, w: &Homomorphism) -> Result<Witness, ReductionError> {
    rec.decode(w)
}

fn check_r(g: &Graph, r: usize) -> Result<(), ReductionError> {
    if r < 2 {
        return Err(ReductionError::Precondition(format!(
            "r must be at least 2, got {r}"
        )));
    }
    if r > g.n() {
        return Err(ReductionError::Precondition(format!(
            "r = {r} exceeds the vertex count {}",
            g.n()
        )));
    }
    Ok(())
}

fn check_degree(g: &Graph, limit: usize) -> Result<(), ReductionError> {
    let found = g.max_degree();
    if found > limit {
        return Err(crate::error::GraphError::DegreeTooLarge { found, limit }.into());
    }
    Ok(())
}

/// Number of isolated vertices that bring `n` up to a multiple of `r`.
fn padding(n: usize, r: usize) -> usize {
    (r - n % r) % r
}

/// A 3-coloring extended by color 1 on `extra` appended vertices.
fn pad_coloring(c: &VertexColoring, extra: usize) -> Vec<u8> {
    c.colors()
        .iter()
        .map(|&x| x as u8)
        .chain(std::iter::repeat(1).take(extra))
        .collect()
}

fn three_coloring_from(colors: Vec<u8>, n: usize) -> Result<VertexColoring, ReductionError> {
    Ok(VertexColoring::new(
        colors.into_iter().take(n).map(u32::from).collect(),
        3,
    )?)
}
