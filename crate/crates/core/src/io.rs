//! Graph and solution file formats.
//!
//! Three graph readers are supported: whitespace/comma separated edge lists,
//! Matrix Market coordinate files and DIMACS `p edge` files. Lines starting
//! with `%`, `#` or `c` are comments. Vertex ids are 1-based unless the
//! [`GraphFileSpec`] says otherwise; internally every graph is 0-based.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BuildStats, VertexId, WeightScheme, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    EdgeList,
    MatrixMarket,
    Dimacs,
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edge-list",
            GraphFormat::MatrixMarket => "matrix-market",
            GraphFormat::Dimacs => "dimacs",
        })
    }
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "edge-list" | "edges" => Ok(GraphFormat::EdgeList),
            "matrix-market" | "mtx" => Ok(GraphFormat::MatrixMarket),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Indexing {
    ZeroBased,
    OneBased,
}

impl Indexing {
    fn base(self) -> usize {
        match self {
            Indexing::ZeroBased => 0,
            Indexing::OneBased => 1,
        }
    }

    /// External id of an internal vertex.
    pub fn external(self, v: VertexId) -> usize {
        v.index() + self.base()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSource {
    /// In-file weights when the file has them, the 1-based i-mod-200 scheme otherwise.
    Auto,
    InFile,
    /// Sidecar file, one integer per line in vertex order.
    File(PathBuf),
    Scheme(WeightScheme),
}

impl fmt::Display for WeightSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightSource::Auto => f.write_str("auto"),
            WeightSource::InFile => f.write_str("in-file"),
            WeightSource::File(p) => write!(f, "file:{}", p.display()),
            WeightSource::Scheme(s) => write!(f, "{s}"),
        }
    }
}

impl FromStr for WeightSource {
    type Err = String;

    /// A scheme name, `auto`, `in-file`, or else a path to a weight file.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "auto" => Ok(WeightSource::Auto),
            "in-file" => Ok(WeightSource::InFile),
            _ if s.starts_with("i-mod-200") || s.starts_with("uniform:") => {
                s.parse().map(WeightSource::Scheme)
            }
            _ => Ok(WeightSource::File(PathBuf::from(s))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFileSpec {
    pub path: PathBuf,
    /// Detected from extension and content when `None`.
    pub format: Option<GraphFormat>,
    /// Defaults to 1-based.
    pub indexing: Option<Indexing>,
    pub weights: WeightSource,
    /// Lower bound on the vertex count for formats without a header.
    pub vertices: Option<usize>,
}

impl GraphFileSpec {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        GraphFileSpec {
            path: path.into(),
            format: None,
            indexing: None,
            weights: WeightSource::Auto,
            vertices: None,
        }
    }

    pub fn format(mut self, format: GraphFormat) -> Self {
        self.format = Some(format);
        self
    }

    pub fn indexing(mut self, indexing: Indexing) -> Self {
        self.indexing = Some(indexing);
        self
    }

    pub fn weights(mut self, weights: WeightSource) -> Self {
        self.weights = weights;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LoadStats {
    pub format: GraphFormat,
    pub indexing: Indexing,
    pub weights: String,
    #[serde(flatten)]
    pub build: BuildStats,
}

#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub name: String,
    pub graph: WeightedGraph,
    pub stats: LoadStats,
}

#[derive(Debug, Default)]
struct RawGraph {
    declared: Option<usize>,
    edges: Vec<(usize, usize)>,
    weights: Vec<(usize, i64, usize)>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn is_comment(line: &str) -> bool {
    line.is_empty() || line.starts_with('%') || line.starts_with('#') || line.starts_with('c')
}

fn fields(line: &str) -> impl Iterator<Item = &str> {
    line.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
}

fn detect(path: &Path, text: &str) -> GraphFormat {
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    match ext.as_deref() {
        Some("mtx") => return GraphFormat::MatrixMarket,
        Some("dimacs" | "clq" | "col" | "dim") => return GraphFormat::Dimacs,
        _ => {}
    }
    if text.trim_start().starts_with("%%MatrixMarket") {
        return GraphFormat::MatrixMarket;
    }
    let first = text.lines().map(str::trim).find(|l| !is_comment(l));
    match first {
        Some(l) if l.starts_with("p ") => GraphFormat::Dimacs,
        _ => GraphFormat::EdgeList,
    }
}

struct Ids<'a> {
    path: &'a Path,
    base: usize,
    declared: Option<usize>,
}

impl Ids<'_> {
    fn vertex(&self, token: Option<&str>, line: usize) -> Result<usize> {
        let token = token.ok_or_else(|| Error::parse(self.path, line, "missing vertex id"))?;
        let id: usize = token
            .parse()
            .map_err(|_| Error::parse(self.path, line, format!("bad vertex id `{token}`")))?;
        if id < self.base {
            return Err(Error::parse(
                self.path,
                line,
                format!("vertex id {id} in {}-based input", self.base),
            ));
        }
        let internal = id - self.base;
        if let Some(n) = self.declared {
            if internal >= n {
                return Err(Error::parse(
                    self.path,
                    line,
                    format!("vertex id {id} beyond declared count {n}"),
                ));
            }
        }
        Ok(internal)
    }
}

fn parse_weight(path: &Path, token: Option<&str>, line: usize) -> Result<i64> {
    let token = token.ok_or_else(|| Error::parse(path, line, "missing weight"))?;
    let w: i64 = token
        .parse()
        .map_err(|_| Error::parse(path, line, format!("bad weight `{token}`")))?;
    if w < 0 {
        return Err(Error::parse(path, line, format!("negative weight {w}")));
    }
    Ok(w)
}

fn parse_edge_list(path: &Path, text: &str, base: usize) -> Result<RawGraph> {
    let ids = Ids {
        path,
        base,
        declared: None,
    };
    let mut raw = RawGraph::default();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if is_comment(line) {
            continue;
        }
        let mut f = fields(line);
        let u = ids.vertex(f.next(), i + 1)?;
        let v = ids.vertex(f.next(), i + 1)?;
        raw.edges.push((u, v));
    }
    Ok(raw)
}

fn parse_matrix_market(path: &Path, text: &str, base: usize) -> Result<RawGraph> {
    let mut raw = RawGraph::default();
    let mut lines = text.lines().enumerate();
    if let Some((_, header)) = lines.clone().next() {
        let lower = header.to_ascii_lowercase();
        if lower.starts_with("%%matrixmarket") && lower.contains(" array") {
            return Err(Error::parse(
                path,
                1,
                "dense (array) Matrix Market files are not supported",
            ));
        }
    }
    let mut ids = Ids {
        path,
        base,
        declared: None,
    };
    for (i, line) in lines.by_ref() {
        let line = line.trim();
        if is_comment(line) {
            continue;
        }
        let size: Vec<usize> = fields(line)
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::parse(path, i + 1, "bad size line"))?;
        if size.len() < 2 {
            return Err(Error::parse(
                path,
                i + 1,
                "size line needs rows and columns",
            ));
        }
        let n = size[0].max(size[1]);
        raw.declared = Some(n);
        ids.declared = Some(n);
        break;
    }
    if raw.declared.is_none() {
        return Err(Error::Input {
            path: path.to_path_buf(),
            message: "missing Matrix Market size line".into(),
        });
    }
    for (i, line) in lines {
        let line = line.trim();
        if is_comment(line) {
            continue;
        }
        let mut f = fields(line);
        let u = ids.vertex(f.next(), i + 1)?;
        let v = ids.vertex(f.next(), i + 1)?;
        raw.edges.push((u, v));
    }
    Ok(raw)
}

fn parse_dimacs(path: &Path, text: &str, base: usize) -> Result<RawGraph> {
    let mut raw = RawGraph::default();
    let mut ids = Ids {
        path,
        base,
        declared: None,
    };
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        let lineno = i + 1;
        if is_comment(line) {
            continue;
        }
        let mut f = fields(line);
        match f.next() {
            Some("p") => {
                let _kind = f.next();
                let n: usize = f
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(path, lineno, "bad problem line"))?;
                raw.declared = Some(n);
                ids.declared = Some(n);
            }
            Some("e") => {
                if raw.declared.is_none() {
                    return Err(Error::parse(path, lineno, "edge before problem line"));
                }
                let u = ids.vertex(f.next(), lineno)?;
                let v = ids.vertex(f.next(), lineno)?;
                raw.edges.push((u, v));
            }
            Some("n") => {
                let v = ids.vertex(f.next(), lineno)?;
                let w = parse_weight(path, f.next(), lineno)?;
                raw.weights.push((v, w, lineno));
            }
            Some(other) => {
                return Err(Error::parse(
                    path,
                    lineno,
                    format!("unknown line type `{other}`"),
                ));
            }
            None => {}
        }
    }
    if raw.declared.is_none() {
        return Err(Error::Input {
            path: path.to_path_buf(),
            message: "missing DIMACS problem line".into(),
        });
    }
    Ok(raw)
}

/// Reads a weight file: one non-negative integer per line.
pub fn read_weights(path: &Path) -> Result<Vec<i64>> {
    let text = read(path)?;
    let mut weights = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if is_comment(line) {
            continue;
        }
        weights.push(parse_weight(path, fields(line).next(), i + 1)?);
    }
    Ok(weights)
}

pub fn parse_graph(spec: &GraphFileSpec) -> Result<LoadedGraph> {
    let text = read(&spec.path)?;
    parse_graph_text(spec, &text)
}

/// Like [`parse_graph`] with the file content supplied; `spec.path` is only
/// used for format detection and error messages. Sidecar weight files are
/// still read from disk.
pub fn parse_graph_text(spec: &GraphFileSpec, text: &str) -> Result<LoadedGraph> {
    let path = spec.path.as_path();
    let format = spec.format.unwrap_or_else(|| detect(path, text));
    let indexing = spec.indexing.unwrap_or(Indexing::OneBased);
    let base = indexing.base();
    let raw = match format {
        GraphFormat::EdgeList => parse_edge_list(path, text, base)?,
        GraphFormat::MatrixMarket => parse_matrix_market(path, text, base)?,
        GraphFormat::Dimacs => parse_dimacs(path, text, base)?,
    };

    let inferred = raw
        .edges
        .iter()
        .map(|&(u, v)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let mut n = raw
        .declared
        .unwrap_or(inferred)
        .max(spec.vertices.unwrap_or(0));

    let source = match &spec.weights {
        WeightSource::Auto if !raw.weights.is_empty() => WeightSource::InFile,
        WeightSource::Auto => WeightSource::Scheme(WeightScheme::IModTwoHundred),
        other => other.clone(),
    };
    let weights: Vec<i64> = match &source {
        WeightSource::InFile => {
            if raw.weights.is_empty() {
                return Err(Error::Input {
                    path: path.to_path_buf(),
                    message: format!("{format} input carries no vertex weights"),
                });
            }
            let mut w = vec![None; n];
            for &(v, weight, line) in &raw.weights {
                if v >= n {
                    w.resize(v + 1, None);
                    n = v + 1;
                }
                if w[v].replace(weight).is_some() {
                    return Err(Error::parse(
                        path,
                        line,
                        format!("vertex {} weighted twice", v + base),
                    ));
                }
            }
            w.into_iter()
                .enumerate()
                .map(|(v, x)| {
                    x.ok_or_else(|| Error::Input {
                        path: path.to_path_buf(),
                        message: format!("vertex {} has no weight", v + base),
                    })
                })
                .collect::<Result<_>>()?
        }
        WeightSource::File(wpath) => {
            let w = read_weights(wpath)?;
            if raw.declared.is_none() && spec.vertices.is_none() {
                n = n.max(w.len());
            }
            w
        }
        WeightSource::Scheme(scheme) => scheme.weights(n),
        WeightSource::Auto => unreachable!("resolved above"),
    };

    let (graph, build) = WeightedGraph::build(n, &raw.edges, &weights)?;
    let name = path
        .file_name()
        .map(|f| f.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    Ok(LoadedGraph {
        name,
        graph,
        stats: LoadStats {
            format,
            indexing,
            weights: source.to_string(),
            build,
        },
    })
}

/// One vertex id per line, ascending, in the given indexing.
pub fn write_solution(path: &Path, cover: &[VertexId], indexing: Indexing) -> Result<()> {
    let mut sorted = cover.to_vec();
    sorted.sort_unstable();
    let mut out = String::new();
    for v in sorted {
        out.push_str(&indexing.external(v).to_string());
        out.push('\n');
    }
    fs::write(path, out).map_err(|e| Error::io(path, e))
}

pub fn read_solution(path: &Path, indexing: Indexing, n: usize) -> Result<Vec<VertexId>> {
    let text = read(path)?;
    let ids = Ids {
        path,
        base: indexing.base(),
        declared: Some(n),
    };
    let mut cover = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if is_comment(line) {
            continue;
        }
        cover.push(VertexId::new(ids.vertex(fields(line).next(), i + 1)?));
    }
    Ok(cover)
}

/// Writes the live part of `g` as a weighted DIMACS file with compact 1-based
/// ids. `c map <new> <original>` comments record the renumbering, with the
/// original id in `indexing`.
pub fn write_reduced_dimacs(
    g: &WeightedGraph,
    indexing: Indexing,
    out: &mut impl Write,
) -> std::io::Result<()> {
    let live: Vec<VertexId> = g.live_vertices().collect();
    let mut local = vec![0usize; g.capacity()];
    for (i, v) in live.iter().enumerate() {
        local[v.index()] = i + 1;
    }
    writeln!(out, "c reduced graph")?;
    for (i, &v) in live.iter().enumerate() {
        writeln!(out, "c map {} {}", i + 1, indexing.external(v))?;
    }
    writeln!(out, "p edge {} {}", live.len(), g.num_edges())?;
    for (i, &v) in live.iter().enumerate() {
        writeln!(out, "n {} {}", i + 1, g.weight(v))?;
    }
    for (a, b) in g.edges() {
        writeln!(out, "e {} {}", local[a.index()], local[b.index()])?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(path: &str) -> GraphFileSpec {
        GraphFileSpec::new(path)
    }

    fn v(i: usize) -> VertexId {
        VertexId::new(i)
    }

    #[test]
    fn edge_list_with_i_mod_200() {
        let s = spec("sample.edges").weights(WeightSource::Scheme(WeightScheme::IModTwoHundred));
        let loaded = parse_graph_text(&s, "1 2\n3 5\n4 5\n3 6\n").unwrap();
        let g = &loaded.graph;
        assert_eq!(g.capacity(), 6);
        assert_eq!(g.num_edges(), 4);
        assert!(g.has_edge(v(2), v(4)) && g.has_edge(v(2), v(5)));
        let w: Vec<u64> = (0..6).map(|i| g.weight(v(i))).collect();
        assert_eq!(w, vec![2, 3, 4, 5, 6, 7]);
        assert_eq!(loaded.stats.format, GraphFormat::EdgeList);
    }

    #[test]
    fn dimacs_uniform() {
        let s = spec("k2.txt").weights(WeightSource::Scheme(WeightScheme::Constant(1)));
        let loaded = parse_graph_text(&s, "c tiny\np edge 2 1\ne 1 2\n").unwrap();
        assert_eq!(loaded.stats.format, GraphFormat::Dimacs);
        assert_eq!(loaded.graph.num_edges(), 1);
        assert_eq!(loaded.graph.weight(v(1)), 1);
    }

    #[test]
    fn dimacs_in_file_weights() {
        let text = "p edge 3 2\nn 1 4\nn 2 5\nn 3 6\ne 1 2\ne 2 3\n";
        let loaded = parse_graph_text(&spec("g.dimacs"), text).unwrap();
        assert_eq!(loaded.stats.weights, "in-file");
        assert_eq!(loaded.graph.weight(v(2)), 6);
    }

    #[test]
    fn duplicate_edge_is_counted() {
        let s = spec("d.edges");
        let with = parse_graph_text(&s, "1 2\n2 3\n2 1\n").unwrap();
        let without = parse_graph_text(&s, "1 2\n2 3\n").unwrap();
        assert!(with.graph.same_structure(&without.graph));
        assert_eq!(with.stats.build.duplicate_edges, 1);
    }

    #[test]
    fn matrix_market_pattern() {
        let text =
            "%%MatrixMarket matrix coordinate pattern symmetric\n% comment\n4 4 3\n2 1\n3 2\n4 4\n";
        let loaded = parse_graph_text(&spec("m.mtx"), text).unwrap();
        assert_eq!(loaded.graph.capacity(), 4);
        assert_eq!(loaded.graph.num_edges(), 2);
        assert_eq!(loaded.stats.build.self_loops, 1);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_graph_text(&spec("bad.edges"), "1 2\n3 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");

        let err = parse_graph_text(&spec("bad.edges"), "1 2\n0 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");

        let err = parse_graph_text(&spec("bad.dimacs"), "p edge 2 1\ne 1 3\n").unwrap_err();
        assert!(err.to_string().contains("beyond declared count"), "{err}");

        let err = parse_graph_text(&spec("bad.dimacs"), "p edge 2 1\nn 1 -4\n").unwrap_err();
        assert!(err.to_string().contains("negative weight"), "{err}");
    }

    #[test]
    fn zero_based_edge_list() {
        let s = spec("z.edges").indexing(Indexing::ZeroBased);
        let loaded = parse_graph_text(&s, "0 1\n1 2\n").unwrap();
        assert_eq!(loaded.graph.capacity(), 3);
    }

    #[test]
    fn weight_source_parsing() {
        assert_eq!(
            "i-mod-200".parse::<WeightSource>().unwrap(),
            WeightSource::Scheme(WeightScheme::IModTwoHundred)
        );
        assert_eq!(
            "w.txt".parse::<WeightSource>().unwrap(),
            WeightSource::File(PathBuf::from("w.txt"))
        );
        assert!("uniform:-1".parse::<WeightSource>().is_err());
    }
}
