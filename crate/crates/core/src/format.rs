//! Text formats. Vertices are 1-based in files and 0-based in memory.
//!
//! ```text
//! c graph file                      c bundle file
//! p graph 3 2                       p listhom 2 1 3 3
//! e 1 2                             g e 1 2
//! e 2 3                             h e 1 2
//!                                   h e 2 3
//!                                   h e 1 3
//!                                   l 1 2 1 3
//! ```
//!
//! Gadget files add `c mark <role> <v>` lines, one per marked vertex, in
//! order. Certificates are `m <v> <u>` lines. Records are a graph or bundle
//! followed by `c decode ...` lines (see [`write_record`]).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::bitset::BitSet;
use crate::coloring::VertexColoring;
use crate::gadgets::{GadgetGraph, GadgetKind};
use crate::graph::Graph;
use crate::reductions::{Certificates, DecodePlan, DecodeStep, InputKind};
use crate::solver::{Homomorphism, ListHomInstance, Mode};

/// Files may not declare more vertices than this.
pub const MAX_VERTICES: usize = 1 << 24;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError {
        line,
        message: message.into(),
    })
}

/// Non-empty lines with their 1-based numbers, split into tokens.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, t)| !t.is_empty())
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

fn number(line: usize, tok: Option<&&str>, what: &str) -> Result<usize, FormatError> {
    match tok {
        Some(t) => t.parse().or_else(|_| {
            err(
                line,
                format!("{what} must be a non-negative integer, got '{t}'"),
            )
        }),
        None => err(line, format!("missing {what}")),
    }
}

/// A 1-based vertex token turned 0-based.
fn vertex(line: usize, tok: Option<&&str>, n: usize, what: &str) -> Result<usize, FormatError> {
    let v = number(line, tok, what)?;
    if v == 0 || v > n {
        return err(line, format!("{what} {v} is out of range 1..={n}"));
    }
    Ok(v - 1)
}

fn no_more(line: usize, toks: &[&str], used: usize) -> Result<(), FormatError> {
    if toks.len() > used {
        return err(line, format!("unexpected trailing token '{}'", toks[used]));
    }
    Ok(())
}

fn count(line: usize, tok: Option<&&str>, what: &str) -> Result<usize, FormatError> {
    let n = number(line, tok, what)?;
    if n > MAX_VERTICES {
        return err(line, format!("{what} {n} exceeds the limit {MAX_VERTICES}"));
    }
    Ok(n)
}

/// Collects edges and rejects loops and repeats.
struct EdgeSink {
    n: usize,
    declared: usize,
    edges: Vec<(usize, usize)>,
    seen: std::collections::HashSet<(usize, usize)>,
}

impl EdgeSink {
    fn new(n: usize, declared: usize) -> Self {
        EdgeSink {
            n,
            declared,
            edges: Vec::new(),
            seen: Default::default(),
        }
    }

    fn push(&mut self, line: usize, u: Option<&&str>, v: Option<&&str>) -> Result<(), FormatError> {
        let a = vertex(line, u, self.n, "endpoint")?;
        let b = vertex(line, v, self.n, "endpoint")?;
        if a == b {
            return err(line, format!("self-loop at vertex {}", a + 1));
        }
        if !self.seen.insert((a.min(b), a.max(b))) {
            return err(line, format!("duplicate edge {{{}, {}}}", a + 1, b + 1));
        }
        if self.edges.len() == self.declared {
            return err(
                line,
                format!("more edges than the {} declared", self.declared),
            );
        }
        self.edges.push((a, b));
        Ok(())
    }

    fn finish(self, line: usize, what: &str) -> Result<Graph, FormatError> {
        if self.edges.len() < self.declared {
            return err(
                line,
                format!(
                    "{what}: {} edges declared, {} found (truncated file?)",
                    self.declared,
                    self.edges.len()
                ),
            );
        }
        Ok(Graph::from_edges(self.n, self.edges).expect("edges were checked"))
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("p graph {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut sink: Option<EdgeSink> = None;
    for (ln, t) in lines(text) {
        match t[0] {
            "c" => {}
            "p" if sink.is_some() => return err(ln, "second problem line"),
            "p" => {
                if t.get(1) != Some(&"graph") {
                    return err(ln, "expected 'p graph <n> <m>'");
                }
                let n = count(ln, t.get(2), "vertex count")?;
                let m = number(ln, t.get(3), "edge count")?;
                no_more(ln, &t, 4)?;
                sink = Some(EdgeSink::new(n, m));
            }
            "e" => {
                let Some(s) = sink.as_mut() else {
                    return err(ln, "edge before the problem line");
                };
                s.push(ln, t.get(1), t.get(2))?;
                no_more(ln, &t, 3)?;
            }
            other => return err(ln, format!("unknown line type '{other}'")),
        }
    }
    match sink {
        Some(s) => s.finish(last_line(text), "graph"),
        None => err(last_line(text), "missing problem line 'p graph <n> <m>'"),
    }
}

pub fn write_gadget(gadget: &GadgetGraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "c gadget {}", kind_name(gadget.kind));
    for (role, vs) in &gadget.marks {
        for v in vs {
            let _ = writeln!(s, "c mark {role} {}", v + 1);
        }
    }
    s + &write_graph(&gadget.graph)
}

fn kind_name(kind: GadgetKind) -> String {
    match kind {
        GadgetKind::Wheel => "D".into(),
        GadgetKind::Chain { k } => format!("T {k}"),
        GadgetKind::CliqueChain { k, t } => format!("Tclique {k} {t}"),
        GadgetKind::Matching { h } => format!("A {h}"),
    }
}

/// The graph and its marks; mark order within a role follows the file.
pub fn parse_gadget(text: &str) -> Result<(Graph, BTreeMap<String, Vec<usize>>), FormatError> {
    let g = parse_graph(text)?;
    let mut marks: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (ln, t) in lines(text) {
        if t[0] == "c" && t.get(1) == Some(&"mark") {
            let Some(role) = t.get(2) else {
                return err(ln, "missing mark role");
            };
            let v = vertex(ln, t.get(3), g.n(), "marked vertex")?;
            no_more(ln, &t, 4)?;
            marks.entry(role.to_string()).or_default().push(v);
        }
    }
    Ok((g, marks))
}

pub fn write_bundle(inst: &ListHomInstance) -> String {
    let (g, h) = (&inst.g, &inst.h);
    let mut s = format!("p listhom {} {} {} {}\n", g.n(), g.m(), h.n(), h.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "g e {} {}", u + 1, v + 1);
    }
    for (u, v) in h.edges() {
        let _ = writeln!(s, "h e {} {}", u + 1, v + 1);
    }
    for v in 0..g.n() {
        if !inst.list_is_full(v) {
            let l = inst.list(v);
            let _ = write!(s, "l {} {}", v + 1, l.count());
            for u in l.iter() {
                let _ = write!(s, " {}", u + 1);
            }
            s.push('\n');
        }
    }
    s
}

pub fn parse_bundle(text: &str) -> Result<ListHomInstance, FormatError> {
    let mut sinks: Option<(EdgeSink, EdgeSink)> = None;
    let mut lists: Vec<Option<BitSet>> = Vec::new();
    for (ln, t) in lines(text) {
        match t[0] {
            "c" => {}
            "p" if sinks.is_some() => return err(ln, "second problem line"),
            "p" => {
                if t.get(1) != Some(&"listhom") {
                    return err(ln, "expected 'p listhom <nG> <mG> <nH> <mH>'");
                }
                let ng = count(ln, t.get(2), "source vertex count")?;
                let mg = number(ln, t.get(3), "source edge count")?;
                let nh = count(ln, t.get(4), "target vertex count")?;
                let mh = number(ln, t.get(5), "target edge count")?;
                no_more(ln, &t, 6)?;
                sinks = Some((EdgeSink::new(ng, mg), EdgeSink::new(nh, mh)));
                lists = vec![None; ng];
            }
            "g" | "h" => {
                let Some((gs, hs)) = sinks.as_mut() else {
                    return err(ln, "edge before the problem line");
                };
                if t.get(1) != Some(&"e") {
                    return err(ln, format!("expected '{} e <u> <v>'", t[0]));
                }
                let sink = if t[0] == "g" { gs } else { hs };
                sink.push(ln, t.get(2), t.get(3))?;
                no_more(ln, &t, 4)?;
            }
            "l" => {
                let Some((gs, hs)) = sinks.as_ref() else {
                    return err(ln, "list before the problem line");
                };
                let v = vertex(ln, t.get(1), gs.n, "list vertex")?;
                let k = number(ln, t.get(2), "list length")?;
                if t.len() != 3 + k {
                    return err(
                        ln,
                        format!(
                            "list declares {k} entries but has {}",
                            t.len().saturating_sub(3)
                        ),
                    );
                }
                if lists[v].is_some() {
                    return err(ln, format!("second list for vertex {}", v + 1));
                }
                let mut set = BitSet::new(hs.n);
                for tok in &t[3..] {
                    let u = vertex(ln, Some(tok), hs.n, "list entry")?;
                    if !set.insert(u) {
                        return err(ln, format!("target {} listed twice", u + 1));
                    }
                }
                lists[v] = Some(set);
            }
            other => return err(ln, format!("unknown line type '{other}'")),
        }
    }
    let end = last_line(text);
    let Some((gs, hs)) = sinks else {
        return err(end, "missing problem line 'p listhom <nG> <mG> <nH> <mH>'");
    };
    let g = gs.finish(end, "source graph")?;
    let h = hs.finish(end, "target graph")?;
    let lists = lists
        .into_iter()
        .map(|l| l.unwrap_or_else(|| BitSet::full(h.n())))
        .collect();
    Ok(ListHomInstance::from_sets(g, h, lists).expect("lists were checked"))
}

pub fn write_certificate(m: &Homomorphism) -> String {
    let mut s = String::new();
    for (v, &u) in m.targets().iter().enumerate() {
        let _ = writeln!(s, "m {} {}", v + 1, u + 1);
    }
    s
}

/// Every source vertex `1..=n` must appear exactly once; targets must lie in
/// `1..=targets`.
pub fn parse_certificate(
    text: &str,
    n: usize,
    targets: usize,
) -> Result<Homomorphism, FormatError> {
    let mut img: Vec<Option<usize>> = vec![None; n];
    for (ln, t) in lines(text) {
        match t[0] {
            "c" => {}
            "m" => {
                let v = vertex(ln, t.get(1), n, "source vertex")?;
                let u = vertex(ln, t.get(2), targets, "target vertex")?;
                no_more(ln, &t, 3)?;
                if img[v].replace(u).is_some() {
                    return err(ln, format!("second image for vertex {}", v + 1));
                }
            }
            other => return err(ln, format!("unknown line type '{other}'")),
        }
    }
    match img.iter().position(Option::is_none) {
        Some(v) => err(last_line(text), format!("vertex {} has no image", v + 1)),
        None => Ok(Homomorphism(img.into_iter().map(Option::unwrap).collect())),
    }
}

/// A graph or a bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    Bundle(ListHomInstance),
}

impl Instance {
    /// Graphs are read as 3-coloring instances, i.e. maps into `K3`.
    pub fn as_listhom(&self) -> ListHomInstance {
        match self {
            Instance::Graph(g) => ListHomInstance::full(g.clone(), Graph::complete(3)),
            Instance::Bundle(b) => b.clone(),
        }
    }
}

pub fn write_instance(inst: &Instance) -> String {
    match inst {
        Instance::Graph(g) => write_graph(g),
        Instance::Bundle(b) => write_bundle(b),
    }
}

/// Picks the parser by the problem line.
pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    let p = lines(text).find(|(_, t)| t[0] == "p");
    match p.as_ref().and_then(|(_, t)| t.get(1).copied()) {
        Some("graph") => parse_graph(text).map(Instance::Graph),
        Some("listhom") => parse_bundle(text).map(Instance::Bundle),
        Some(other) => err(p.unwrap().0, format!("unknown problem type '{other}'")),
        None => err(last_line(text), "missing problem line"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordFile {
    pub instance: Instance,
    pub plan: DecodePlan,
    pub certificates: Certificates,
}

fn decode_line(s: &mut String, key: &str, xs: impl IntoIterator<Item = usize>) {
    s.push_str("c decode ");
    s.push_str(key);
    for x in xs {
        let _ = write!(s, " {x}");
    }
    s.push('\n');
}

/// The instance followed by:
///
/// ```text
/// c decode input graph <n> | c decode input listhom <nG> <nH>
/// c decode mode plain|local
/// c decode buckets <original n> <buckets> <targets>
/// c decode bucket <v> ...                one line per bucket
/// c decode coloring <u> <c> ...          targets that color a bucket
/// c decode split <k>
/// c decode prune <u> ...                 kept targets
/// c decode gadgets <copy offset> <input targets>
/// c decode degree <original n>
/// c decode hcoloring <k> <c> ...
/// c decode cover <v> ...
/// ```
///
/// Steps are listed first stage first.
pub fn write_record(rec: &RecordFile) -> String {
    let mut s = write_instance(&rec.instance);
    let plan = &rec.plan;
    match plan.input {
        InputKind::Graph { n } => decode_line(&mut s, "input graph", [n]),
        InputKind::ListHom { g, h } => decode_line(&mut s, "input listhom", [g, h]),
    }
    let mode = match plan.mode {
        Mode::Plain => "plain",
        Mode::LocallyInjective => "local",
    };
    s += &format!("c decode mode {mode}\n");
    for step in &plan.steps {
        match step {
            DecodeStep::Buckets {
                original_n,
                buckets,
                colorings,
            } => {
                decode_line(
                    &mut s,
                    "buckets",
                    [*original_n, buckets.len(), colorings.len()],
                );
                for b in buckets {
                    decode_line(&mut s, "bucket", b.iter().map(|v| v + 1));
                }
                for (u, c) in colorings.iter().enumerate() {
                    if let Some(c) = c {
                        decode_line(
                            &mut s,
                            "coloring",
                            std::iter::once(u + 1).chain(c.iter().map(|&x| x as usize)),
                        );
                    }
                }
            }
            DecodeStep::Split { k } => decode_line(&mut s, "split", [*k]),
            DecodeStep::Prune { kept } => decode_line(&mut s, "prune", kept.iter().map(|u| u + 1)),
            DecodeStep::Gadgets { copy, input_h } => {
                decode_line(&mut s, "gadgets", [*copy, *input_h])
            }
            DecodeStep::Degree { original_n } => decode_line(&mut s, "degree", [*original_n]),
        }
    }
    if let Some(c) = &rec.certificates.h_coloring {
        let k = c.k() as usize;
        decode_line(
            &mut s,
            "hcoloring",
            std::iter::once(k).chain(c.colors().iter().map(|&x| x as usize)),
        );
    }
    if let Some(cover) = &rec.certificates.cover {
        decode_line(&mut s, "cover", cover.iter().map(|v| v + 1));
    }
    s
}

/// `None` when the file has no `c decode` lines.
pub fn parse_record(text: &str) -> Result<Option<RecordFile>, FormatError> {
    let instance = parse_instance(text)?;
    let (ng, nh) = match &instance {
        Instance::Graph(g) => (g.n(), 3),
        Instance::Bundle(b) => (b.g.n(), b.h.n()),
    };
    let mut input = None;
    let mut mode = Mode::Plain;
    let mut steps: Vec<DecodeStep> = Vec::new();
    let mut certificates = Certificates::default();
    let mut any = false;
    for (ln, t) in lines(text) {
        if t[0] != "c" || t.get(1) != Some(&"decode") {
            continue;
        }
        any = true;
        let rest = &t[2..];
        let nums = |from: usize| -> Result<Vec<usize>, FormatError> {
            rest[from..]
                .iter()
                .map(|tok| number(ln, Some(tok), "value"))
                .collect()
        };
        match rest.first().copied() {
            Some("input") => {
                input = Some(match rest.get(1).copied() {
                    Some("graph") => InputKind::Graph {
                        n: count(ln, rest.get(2), "input size")?,
                    },
                    Some("listhom") => InputKind::ListHom {
                        g: count(ln, rest.get(2), "input source size")?,
                        h: count(ln, rest.get(3), "input target size")?,
                    },
                    _ => {
                        return err(
                            ln,
                            "expected 'input graph <n>' or 'input listhom <nG> <nH>'",
                        )
                    }
                });
            }
            Some("mode") => {
                mode = match rest.get(1).copied() {
                    Some("plain") => Mode::Plain,
                    Some("local") => Mode::LocallyInjective,
                    _ => return err(ln, "mode must be 'plain' or 'local'"),
                }
            }
            Some("buckets") => {
                let original_n = count(ln, rest.get(1), "original vertex count")?;
                let _ = count(ln, rest.get(2), "bucket count")?;
                let targets = count(ln, rest.get(3), "target count")?;
                steps.push(DecodeStep::Buckets {
                    original_n,
                    buckets: Vec::new(),
                    colorings: vec![None; targets],
                });
            }
            Some("bucket") => {
                let Some(DecodeStep::Buckets { buckets, .. }) = steps.last_mut() else {
                    return err(ln, "bucket line outside a buckets step");
                };
                let vs = nums(1)?;
                if vs.contains(&0) {
                    return err(ln, "vertices are 1-based");
                }
                buckets.push(vs.into_iter().map(|v| v - 1).collect());
            }
            Some("coloring") => {
                let Some(DecodeStep::Buckets { colorings, .. }) = steps.last_mut() else {
                    return err(ln, "coloring line outside a buckets step");
                };
                let u = vertex(ln, rest.get(1), colorings.len(), "target")?;
                let cs = nums(2)?;
                if cs.iter().any(|&c| !(1..=3).contains(&c)) {
                    return err(ln, "colors must lie in 1..=3");
                }
                colorings[u] = Some(cs.into_iter().map(|c| c as u8).collect());
            }
            Some("split") => steps.push(DecodeStep::Split {
                k: number(ln, rest.get(1), "k")?.max(1),
            }),
            Some("prune") => {
                let kept = nums(1)?;
                if kept.contains(&0) {
                    return err(ln, "vertices are 1-based");
                }
                steps.push(DecodeStep::Prune {
                    kept: kept.into_iter().map(|u| u - 1).collect(),
                });
            }
            Some("gadgets") => steps.push(DecodeStep::Gadgets {
                copy: number(ln, rest.get(1), "copy offset")?,
                input_h: count(ln, rest.get(2), "input target count")?,
            }),
            Some("degree") => steps.push(DecodeStep::Degree {
                original_n: count(ln, rest.get(1), "original vertex count")?,
            }),
            Some("hcoloring") => {
                let k = number(ln, rest.get(1), "palette size")? as u32;
                let cs: Vec<u32> = nums(2)?.into_iter().map(|c| c as u32).collect();
                if cs.len() != nh {
                    return err(
                        ln,
                        format!("coloring has {} entries for {nh} targets", cs.len()),
                    );
                }
                let c = VertexColoring::new(cs, k).or_else(|e| err(ln, e.to_string()))?;
                certificates.h_coloring = Some(c);
            }
            Some("cover") => {
                let vs = nums(1)?;
                if let Some(&v) = vs.iter().find(|&&v| v == 0 || v > ng) {
                    return err(ln, format!("cover vertex {v} is out of range 1..={ng}"));
                }
                certificates.cover = Some(vs.into_iter().map(|v| v - 1).collect());
            }
            Some(other) => return err(ln, format!("unknown decode entry '{other}'")),
            None => return err(ln, "empty decode line"),
        }
    }
    if !any {
        return Ok(None);
    }
    let Some(input) = input else {
        return err(last_line(text), "record has no 'c decode input' line");
    };
    Ok(Some(RecordFile {
        instance,
        plan: DecodePlan { input, mode, steps },
        certificates,
    }))
}
