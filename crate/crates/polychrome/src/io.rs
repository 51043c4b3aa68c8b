//! Text formats for graphs, digraphs, matroids, labelings, broken-circuit
//! sets and weight assignments.
//!
//! All formats are line based. Blank lines are skipped and `#` starts a
//! comment that runs to the end of the line.
//!
//! ```text
//! # graph               # digraph             # matroid
//! vertices: a b c       vertices: a b c       ground: a b c
//! edge: a b             arc: a b              independent: a b
//! edge: b c             arc: b c              independent: c
//! ```
//!
//! A matroid file may instead consist of a single constructor line,
//! either `uniform: k n` or `graphic: <graph-file>` (resolved relative to
//! the matroid file). Labelings are `label: a b <integer>` lines covering
//! every edge exactly once; broken-circuit files list one circuit per line
//! as flattened vertex pairs (`a b b c` is the set `{a-b, b-c}`); weight
//! files are `<index>: <integer>` lines keyed by position in the
//! broken-circuit file.

use std::path::Path;

use crate::broken_circuits::Labeling;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::matroid::{graphical_matroid, uniform_matroid, Matroid};

/// Content lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn split_directive(line: &str) -> Option<(&str, &str)> {
    let (key, rest) = line.split_once(':')?;
    Some((key.trim(), rest.trim()))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut vertices: Option<Vec<String>> = None;
    let mut edges: Vec<(String, String)> = Vec::new();
    for (n, line) in content_lines(text) {
        match split_directive(line) {
            Some(("vertices", rest)) => {
                if vertices.is_some() {
                    return Err(Error::Parse(format!(
                        "line {n}: repeated vertices declaration"
                    )));
                }
                vertices = Some(rest.split_whitespace().map(String::from).collect());
            }
            Some(("edge", rest)) => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.len() != 2 {
                    return Err(Error::Parse(format!(
                        "line {n}: an edge needs exactly two endpoints"
                    )));
                }
                edges.push((toks[0].into(), toks[1].into()));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "line {n}: expected `vertices:` or `edge:`, got {line:?}"
                )))
            }
        }
    }
    let vertices =
        vertices.ok_or_else(|| Error::Parse("missing `vertices:` declaration".into()))?;
    Graph::new(&vertices, &edges)
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut vertices: Option<Vec<String>> = None;
    let mut arcs: Vec<(String, String)> = Vec::new();
    for (n, line) in content_lines(text) {
        match split_directive(line) {
            Some(("vertices", rest)) => {
                if vertices.is_some() {
                    return Err(Error::Parse(format!(
                        "line {n}: repeated vertices declaration"
                    )));
                }
                vertices = Some(rest.split_whitespace().map(String::from).collect());
            }
            Some(("arc", rest)) => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.len() != 2 {
                    return Err(Error::Parse(format!(
                        "line {n}: an arc needs exactly a source and a target"
                    )));
                }
                arcs.push((toks[0].into(), toks[1].into()));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "line {n}: expected `vertices:` or `arc:`, got {line:?}"
                )))
            }
        }
    }
    let vertices =
        vertices.ok_or_else(|| Error::Parse("missing `vertices:` declaration".into()))?;
    Digraph::new(&vertices, &arcs)
}

/// A parsed matroid file before constructor resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidSource {
    Explicit {
        ground: Vec<String>,
        independents: Vec<Vec<String>>,
    },
    Graphic(String),
    Uniform(usize, usize),
}

pub fn parse_matroid(text: &str) -> Result<MatroidSource> {
    let mut ground: Option<Vec<String>> = None;
    let mut independents: Vec<Vec<String>> = Vec::new();
    let mut constructor: Option<MatroidSource> = None;
    for (n, line) in content_lines(text) {
        match split_directive(line) {
            Some(("ground", rest)) => {
                if ground.is_some() {
                    return Err(Error::Parse(format!(
                        "line {n}: repeated ground declaration"
                    )));
                }
                ground = Some(rest.split_whitespace().map(String::from).collect());
            }
            Some(("independent", rest)) => {
                independents.push(rest.split_whitespace().map(String::from).collect());
            }
            Some(("graphic", rest)) => {
                if rest.is_empty() {
                    return Err(Error::Parse(format!(
                        "line {n}: `graphic:` needs a file name"
                    )));
                }
                constructor = Some(MatroidSource::Graphic(rest.to_string()));
            }
            Some(("uniform", rest)) => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                let parsed: Option<(usize, usize)> = match toks.as_slice() {
                    [k, n_] => k.parse().ok().zip(n_.parse().ok()),
                    _ => None,
                };
                let (k, size) = parsed.ok_or_else(|| {
                    Error::Parse(format!("line {n}: `uniform:` needs two integers k n"))
                })?;
                constructor = Some(MatroidSource::Uniform(k, size));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "line {n}: unknown matroid directive {line:?}"
                )))
            }
        }
    }
    match (constructor, ground) {
        (Some(c), None) if independents.is_empty() => Ok(c),
        (Some(_), _) => Err(Error::Parse(
            "constructor lines cannot be mixed with ground/independent lines".into(),
        )),
        (None, Some(ground)) => Ok(MatroidSource::Explicit {
            ground,
            independents,
        }),
        (None, None) => Err(Error::Parse(
            "matroid file needs a `ground:` declaration or a constructor line".into(),
        )),
    }
}

pub fn parse_labeling(text: &str, g: &Graph) -> Result<Labeling> {
    let mut labels: Vec<Option<i64>> = vec![None; g.edge_count()];
    for (n, line) in content_lines(text) {
        let Some(("label", rest)) = split_directive(line) else {
            return Err(Error::Parse(format!(
                "line {n}: expected `label: a b <integer>`, got {line:?}"
            )));
        };
        let toks: Vec<&str> = rest.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::Parse(format!(
                "line {n}: expected `label: a b <integer>`"
            )));
        }
        let edge = edge_from_names(g, toks[0], toks[1], n)?;
        let value: i64 = toks[2]
            .parse()
            .map_err(|_| Error::Parse(format!("line {n}: invalid label {:?}", toks[2])))?;
        if labels[edge].is_some() {
            return Err(Error::Parse(format!(
                "line {n}: edge {} {} labeled twice",
                toks[0], toks[1]
            )));
        }
        labels[edge] = Some(value);
    }
    let labels: Option<Vec<i64>> = labels.into_iter().collect();
    match labels {
        Some(labels) => Labeling::new(g, labels),
        None => Err(Error::Parse("labeling does not cover every edge".into())),
    }
}

fn edge_from_names(g: &Graph, a: &str, b: &str, line_no: usize) -> Result<usize> {
    let u = g
        .vertex_index(a)
        .ok_or_else(|| Error::Parse(format!("line {line_no}: unknown vertex {a:?}")))?;
    let v = g
        .vertex_index(b)
        .ok_or_else(|| Error::Parse(format!("line {line_no}: unknown vertex {b:?}")))?;
    g.edge_index(u, v)
        .ok_or_else(|| Error::Parse(format!("line {line_no}: no edge {a} {b} in the graph")))
}

/// One broken-circuit candidate per line, written as flattened vertex pairs.
/// The member order follows the file; weight files refer to it by index.
pub fn parse_kset(text: &str, g: &Graph) -> Result<Vec<EdgeSet>> {
    let mut members = Vec::new();
    for (n, line) in content_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.is_empty() || !toks.len().is_multiple_of(2) {
            return Err(Error::Parse(format!(
                "line {n}: a broken circuit is a list of vertex pairs"
            )));
        }
        let mut set = EdgeSet::EMPTY;
        for pair in toks.chunks(2) {
            set.insert(edge_from_names(g, pair[0], pair[1], n)?);
        }
        members.push(set);
    }
    Ok(members)
}

/// `<index>: <integer>` lines, one for each entry of the broken-circuit
/// file, in any order.
pub fn parse_weights(text: &str, kset_len: usize) -> Result<Vec<i64>> {
    let mut weights: Vec<Option<i64>> = vec![None; kset_len];
    for (n, line) in content_lines(text) {
        let Some((key, value)) = split_directive(line) else {
            return Err(Error::Parse(format!(
                "line {n}: expected `<index>: <integer>`"
            )));
        };
        let idx: usize = key
            .parse()
            .map_err(|_| Error::Parse(format!("line {n}: invalid index {key:?}")))?;
        if idx >= kset_len {
            return Err(Error::Parse(format!(
                "line {n}: index {idx} out of range for {kset_len} broken circuits"
            )));
        }
        let value: i64 = value
            .parse()
            .map_err(|_| Error::Parse(format!("line {n}: invalid weight {value:?}")))?;
        if weights[idx].is_some() {
            return Err(Error::Parse(format!("line {n}: index {idx} given twice")));
        }
        weights[idx] = Some(value);
    }
    let weights: Option<Vec<i64>> = weights.into_iter().collect();
    weights.ok_or_else(|| Error::Parse("weights do not cover every broken circuit".into()))
}

/// What kind of object a file describes, judged by its directives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Graph,
    Digraph,
    Matroid,
}

pub fn sniff_kind(text: &str) -> FileKind {
    for (_, line) in content_lines(text) {
        match split_directive(line) {
            Some(("arc", _)) => return FileKind::Digraph,
            Some(("ground" | "independent" | "uniform" | "graphic", _)) => {
                return FileKind::Matroid
            }
            Some(("edge", _)) => return FileKind::Graph,
            _ => {}
        }
    }
    FileKind::Graph
}

/// Ground labels for a matroid, `label: <element> <integer>` lines covering
/// every element exactly once.
pub fn parse_ground_labels(text: &str, m: &Matroid) -> Result<Vec<i64>> {
    let mut labels: Vec<Option<i64>> = vec![None; m.size()];
    for (n, line) in content_lines(text) {
        let Some(("label", rest)) = split_directive(line) else {
            return Err(Error::Parse(format!(
                "line {n}: expected `label: <element> <integer>`, got {line:?}"
            )));
        };
        let toks: Vec<&str> = rest.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse(format!(
                "line {n}: expected `label: <element> <integer>`"
            )));
        }
        let e = m
            .element_index(toks[0])
            .ok_or_else(|| Error::Parse(format!("line {n}: unknown element {:?}", toks[0])))?;
        let value: i64 = toks[1]
            .parse()
            .map_err(|_| Error::Parse(format!("line {n}: invalid label {:?}", toks[1])))?;
        if labels[e].is_some() {
            return Err(Error::Parse(format!(
                "line {n}: element {:?} labeled twice",
                toks[0]
            )));
        }
        labels[e] = Some(value);
    }
    let labels: Option<Vec<i64>> = labels.into_iter().collect();
    labels.ok_or_else(|| Error::Parse("labeling does not cover every element".into()))
}

/// One broken-circuit candidate per line as space-separated element names;
/// the single token `-` denotes the empty set (broken circuits of loops).
pub fn parse_ground_kset(text: &str, m: &Matroid) -> Result<Vec<u64>> {
    let mut members = Vec::new();
    for (n, line) in content_lines(text) {
        if line == "-" {
            members.push(0u64);
            continue;
        }
        let mut mask = 0u64;
        for tok in line.split_whitespace() {
            let e = m
                .element_index(tok)
                .ok_or_else(|| Error::Parse(format!("line {n}: unknown element {tok:?}")))?;
            mask |= 1 << e;
        }
        members.push(mask);
    }
    Ok(members)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

pub fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?)
}

pub fn load_digraph(path: &Path) -> Result<Digraph> {
    parse_digraph(&read(path)?)
}

/// Loads a matroid file, resolving `graphic:` references relative to the
/// matroid file's directory.
pub fn load_matroid(path: &Path) -> Result<Matroid> {
    match parse_matroid(&read(path)?)? {
        MatroidSource::Explicit {
            ground,
            independents,
        } => Matroid::from_named_sets(ground, &independents),
        MatroidSource::Uniform(k, n) => uniform_matroid(k, n),
        MatroidSource::Graphic(rel) => {
            let base = path.parent().unwrap_or_else(|| Path::new("."));
            let g = load_graph(&base.join(rel))?;
            graphical_matroid(&g)
        }
    }
}
