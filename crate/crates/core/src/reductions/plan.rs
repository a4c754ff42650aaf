//! The part of a record needed to carry a witness of the output back to the
//! input, without the input itself. This is what record files store.

use super::{DegreeMap, PipelineRecord, Problem, ReductionRecord, Stage};
use crate::error::ReductionError;
use crate::solver::Mode;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeStep {
    /// Source vertex `b < buckets.len()` is bucket `b`; a target vertex with a
    /// coloring colors the bucket's (sorted) members in order.
    Buckets {
        original_n: usize,
        buckets: Vec<Vec<usize>>,
        colorings: Vec<Option<Vec<u8>>>,
    },
    /// Target vertex `x` of the output stands for `x / k` of the input.
    Split { k: usize },
    /// Output target vertex `i` is input target vertex `kept[i]`.
    Prune { kept: Vec<usize> },
    /// The input's source sits at `copy..` in the output source, its target
    /// at `copy..copy + input_h` in the output target.
    Gadgets { copy: usize, input_h: usize },
    /// A coloring of the output restricted to the first `original_n`
    /// vertices.
    Degree { original_n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputKind {
    Graph { n: usize },
    ListHom { g: usize, h: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodePlan {
    pub input: InputKind,
    /// Semantics the output is meant to be solved under.
    pub mode: Mode,
    /// First stage first.
    pub steps: Vec<DecodeStep>,
}

/// A decoded witness: a map into the input target, or colors `1..=3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decoded {
    Map(Vec<usize>),
    Coloring(Vec<u32>),
}

impl DecodeStep {
    fn of(rec: &ReductionRecord) -> DecodeStep {
        match &rec.stage {
            Stage::Configurations(d) => DecodeStep::Buckets {
                original_n: d.original_n,
                buckets: d.grouping.partition.buckets().to_vec(),
                colorings: d
                    .configurations
                    .iter()
                    .map(|c| Some(c.coloring.clone()))
                    .collect(),
            },
            Stage::BucketPairs(d) => DecodeStep::Buckets {
                original_n: d.original_n,
                buckets: d.partition.buckets().to_vec(),
                colorings: d
                    .vertices
                    .iter()
                    .map(|v| match v {
                        super::PairVertex::Single(_, c) => Some(c.clone()),
                        super::PairVertex::Double(..) => None,
                    })
                    .collect(),
            },
            Stage::ColorSplit(d) => DecodeStep::Split { k: d.k },
            Stage::Prune(d) => DecodeStep::Prune {
                kept: d.kept.clone(),
            },
            Stage::Gadgets(d) => DecodeStep::Gadgets {
                copy: d.copy,
                input_h: d.input_h,
            },
        }
    }
}

fn input_kind(p: &Problem) -> InputKind {
    match p {
        Problem::ThreeColoring(g) => InputKind::Graph { n: g.n() },
        Problem::ListHom(inst) => InputKind::ListHom {
            g: inst.g.n(),
            h: inst.h.n(),
        },
    }
}

impl ReductionRecord {
    pub fn plan(&self) -> DecodePlan {
        DecodePlan {
            input: input_kind(&self.input),
            mode: Mode::Plain,
            steps: vec![DecodeStep::of(self)],
        }
    }
}

impl PipelineRecord {
    pub fn plan(&self) -> DecodePlan {
        DecodePlan {
            input: InputKind::Graph { n: self.input.n() },
            mode: self.mode,
            steps: self.stages.iter().map(DecodeStep::of).collect(),
        }
    }
}

impl DegreeMap {
    pub fn plan(&self) -> DecodePlan {
        DecodePlan {
            input: InputKind::Graph { n: self.original_n },
            mode: Mode::Plain,
            steps: vec![DecodeStep::Degree {
                original_n: self.original_n,
            }],
        }
    }
}

fn bad(msg: String) -> ReductionError {
    ReductionError::BadWitness(msg)
}

impl DecodePlan {
    /// Walks the steps backwards. Only the shape of the witness is checked;
    /// whether the result solves the input is for the caller to verify.
    pub fn decode(&self, w: &[usize]) -> Result<Decoded, ReductionError> {
        let mut cur = Decoded::Map(w.to_vec());
        for step in self.steps.iter().rev() {
            let Decoded::Map(m) = &cur else {
                return Err(bad("a coloring cannot be decoded further".into()));
            };
            cur = match step {
                DecodeStep::Buckets {
                    original_n,
                    buckets,
                    colorings,
                } => {
                    let n = buckets.iter().map(Vec::len).sum();
                    let mut colors = vec![0u32; n];
                    for (b, bucket) in buckets.iter().enumerate() {
                        let image = *m.get(b).ok_or_else(|| bad("witness is too short".into()))?;
                        let Some(Some(c)) = colorings.get(image) else {
                            return Err(bad(format!(
                                "bucket {} maps to a vertex without a coloring",
                                b + 1
                            )));
                        };
                        for (&v, &x) in bucket.iter().zip(c) {
                            colors[v] = u32::from(x);
                        }
                    }
                    colors.truncate(*original_n);
                    Decoded::Coloring(colors)
                }
                DecodeStep::Split { k } => Decoded::Map(m.iter().map(|&x| x / k).collect()),
                DecodeStep::Prune { kept } => Decoded::Map(
                    m.iter()
                        .map(|&x| {
                            kept.get(x)
                                .copied()
                                .ok_or_else(|| bad(format!("target {} was pruned", x + 1)))
                        })
                        .collect::<Result<_, _>>()?,
                ),
                DecodeStep::Gadgets { copy, input_h } => Decoded::Map(
                    m.get(*copy..)
                        .ok_or_else(|| bad("witness is too short".into()))?
                        .iter()
                        .enumerate()
                        .map(|(v, &x)| match x.checked_sub(*copy) {
                            Some(u) if u < *input_h => Ok(u),
                            _ => Err(bad(format!(
                                "source vertex {} is not mapped into the target copy",
                                v + 1
                            ))),
                        })
                        .collect::<Result<_, _>>()?,
                ),
                DecodeStep::Degree { original_n } => {
                    if m.len() < *original_n {
                        return Err(bad("witness is too short".into()));
                    }
                    Decoded::Coloring(m[..*original_n].iter().map(|&c| c as u32 + 1).collect())
                }
            };
        }
        if let (InputKind::Graph { n }, Decoded::Coloring(c)) = (&self.input, &mut cur) {
            c.truncate(*n);
        }
        Ok(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::three_coloring;
    use crate::graph::Graph;
    use crate::reductions::{pipeline_chi, pipeline_vc, reduce_3col_to_listhom, Witness};
    use crate::solver::solve_backtrack;

    #[test]
    fn plans_agree_with_records() {
        let g = Graph::cycle(5);
        let rec = reduce_3col_to_listhom(&g, 2, 4).unwrap();
        let w = solve_backtrack(&rec.out, Mode::Plain).0.unwrap();
        let Witness::Coloring(c) = rec.decode(&w).unwrap() else {
            panic!()
        };
        assert_eq!(
            rec.plan().decode(w.targets()).unwrap(),
            Decoded::Coloring(c.colors().to_vec())
        );

        for p in [pipeline_chi(&g, 2).unwrap(), pipeline_vc(&g, 2).unwrap()] {
            let w = p.encode(&three_coloring(&g).unwrap()).unwrap();
            let c = p.decode(&w).unwrap();
            assert_eq!(
                p.plan().decode(w.targets()).unwrap(),
                Decoded::Coloring(c.colors().to_vec())
            );
        }
    }

    #[test]
    fn degree_plan_reads_colors_as_targets() {
        let plan = DecodePlan {
            input: InputKind::Graph { n: 2 },
            mode: Mode::Plain,
            steps: vec![DecodeStep::Degree { original_n: 2 }],
        };
        assert_eq!(
            plan.decode(&[2, 0, 1]).unwrap(),
            Decoded::Coloring(vec![3, 1])
        );
        assert!(plan.decode(&[0]).is_err());
    }
}
