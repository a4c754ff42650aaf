use std::path::Path;

use anyhow::{bail, Result};
use hardhom_core::format::{self, Instance, RecordFile};
use hardhom_core::reductions::{
    bucket_pair_bound_holds, configuration_bound_holds, reduce_3col_to_listhom,
    reduce_3col_to_listhom_vc, reduce_bound_chi, reduce_listhom_to_hom, BoundCheck, Certificates,
    Stage,
};
use hardhom_core::{
    degree_reduce, greedy_coloring, is_vertex_cover, pipeline_chi, pipeline_local, pipeline_main,
    pipeline_vc, Graph, ListHomInstance, ReductionRecord,
};

use crate::{emit, Lemma};

fn graph(input: &Instance) -> Result<&Graph> {
    match input {
        Instance::Graph(g) => Ok(g),
        Instance::Bundle(_) => bail!("this reduction takes a graph file"),
    }
}

fn bundle(input: &Instance) -> Result<&ListHomInstance> {
    match input {
        Instance::Bundle(b) => Ok(b),
        Instance::Graph(_) => bail!("this reduction takes a bundle file"),
    }
}

fn bound_line(name: &str, check: &BoundCheck) -> String {
    let verdict = if check.holds() { "ok" } else { "VIOLATED" };
    format!("{name}: {} <= {}: {verdict}", check.value, check.limit)
}

/// Size report lines that only depend on the last stage.
fn certificate_lines(out: &ListHomInstance, certs: &Certificates, report: &mut Vec<String>) {
    if let Some(c) = &certs.h_coloring {
        let verdict = if c.is_proper(&out.h) {
            "proper"
        } else {
            "NOT PROPER"
        };
        report.push(format!("target coloring: {} colors, {verdict}", c.k()));
    }
    if let Some(cover) = &certs.cover {
        let verdict = if is_vertex_cover(&out.g, cover) {
            "valid"
        } else {
            "INVALID"
        };
        report.push(format!("source cover: {} vertices, {verdict}", cover.len()));
    }
}

fn gadget_line(rec: &ReductionRecord, report: &mut Vec<String>) {
    if let Stage::Gadgets(d) = &rec.stage {
        let verdict = if rec.out.h.n() <= d.size_bound() {
            "ok"
        } else {
            "VIOLATED"
        };
        report.push(format!(
            "target bound (h+1)(t+11) with h={} t={}: {} <= {}: {verdict}",
            d.h,
            d.t,
            rec.out.h.n(),
            d.size_bound()
        ));
    }
}

/// Writes the output with its decode lines and prints a size report: to
/// standard output when the record goes to a file, to standard error
/// otherwise.
pub fn reduce(
    input: &Instance,
    lemma: Lemma,
    r: usize,
    t: Option<usize>,
    out: Option<&Path>,
) -> Result<bool> {
    let mut report = Vec::new();
    let bucket_r = u32::try_from(r)?;
    let record = match lemma {
        Lemma::Deg => {
            let g = graph(input)?;
            let (reduced, map) = degree_reduce(g);
            report.push(format!(
                "vertices: {} -> {} ({} added)",
                g.n(),
                reduced.n(),
                map.added()
            ));
            report.push(format!(
                "max degree: {} -> {}",
                g.max_degree(),
                reduced.max_degree()
            ));
            RecordFile {
                instance: Instance::Graph(reduced),
                plan: map.plan(),
                certificates: Certificates::default(),
            }
        }
        Lemma::L2 | Lemma::L3 | Lemma::L4 | Lemma::L5 => {
            let rec = match lemma {
                Lemma::L2 => {
                    let g = graph(input)?;
                    let dmax = if g.max_degree() <= 4 { 4 } else { 5 };
                    report.push(bound_line(
                        "configuration bound",
                        &configuration_bound_holds(bucket_r),
                    ));
                    reduce_3col_to_listhom(g, r, dmax)?
                }
                Lemma::L3 => {
                    report.push(bound_line(
                        "bucket pair bound",
                        &bucket_pair_bound_holds(bucket_r),
                    ));
                    reduce_3col_to_listhom_vc(graph(input)?, r)?
                }
                Lemma::L4 => {
                    let b = bundle(input)?;
                    reduce_bound_chi(b, &greedy_coloring(&b.g))?
                }
                _ => reduce_listhom_to_hom(bundle(input)?, t, None)?,
            };
            gadget_line(&rec, &mut report);
            certificate_lines(&rec.out, &rec.certificates, &mut report);
            RecordFile {
                instance: Instance::Bundle(rec.out.clone()),
                plan: rec.plan(),
                certificates: rec.certificates.clone(),
            }
        }
        Lemma::Main | Lemma::Chi | Lemma::Vc | Lemma::Local => {
            let g = graph(input)?;
            let p = match lemma {
                Lemma::Main => pipeline_main(g, r)?,
                Lemma::Chi => pipeline_chi(g, r)?,
                Lemma::Vc => pipeline_vc(g, r)?,
                _ => pipeline_local(g, r)?,
            };
            for stage in &p.stages {
                report.push(format!(
                    "{}: {} source, {} target vertices",
                    stage.kind(),
                    stage.out.g.n(),
                    stage.out.h.n()
                ));
            }
            if let Some(last) = p.stages.last() {
                gadget_line(last, &mut report);
            }
            certificate_lines(p.out(), p.certificates(), &mut report);
            RecordFile {
                instance: Instance::Bundle(p.out().clone()),
                plan: p.plan(),
                certificates: p.certificates().clone(),
            }
        }
    };
    let (g_size, h_size) = match &record.instance {
        Instance::Graph(g) => (g.n(), 3),
        Instance::Bundle(b) => (b.g.n(), b.h.n()),
    };
    report.insert(
        0,
        format!("output: {g_size} source, {h_size} target vertices"),
    );
    emit(out, &format::write_record(&record))?;
    for line in report {
        if out.is_some() {
            println!("c {line}");
        } else {
            eprintln!("c {line}");
        }
    }
    Ok(true)
}
