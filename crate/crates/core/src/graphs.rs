//! The labeled tableau and web graphs, their reachability order, and the
//! structural facts about them.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::tableaux::{enumerate_tableaux, Tableau};
use crate::webaction::{SimpleImage, WebBasis};
use crate::webs::tableau_to_web;

/// A directed edge `src --s_label--> dst` between canonical vertex indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: usize,
}

/// Edge-labeled digraph on canonically indexed vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDigraph {
    n: usize,
    names: Vec<String>,
    edges: Vec<Edge>,
    /// Per vertex, `(label, dst)` sorted by label.
    out: Vec<Vec<(usize, usize)>>,
    /// Per vertex, `(label, src)` sorted by label.
    inc: Vec<Vec<(usize, usize)>>,
}

impl LabeledDigraph {
    /// Rejects duplicate edges and repeated labels at a source or target.
    pub fn new(
        n: usize,
        names: Vec<String>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let size = names.len();
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        let mut out = vec![Vec::new(); size];
        let mut inc = vec![Vec::new(); size];
        for e in &edges {
            if e.src >= size || e.dst >= size || e.label == 0 || e.label >= 2 * n {
                return Err(Error::Defect(format!("edge {e:?} out of range")));
            }
            out[e.src].push((e.label, e.dst));
            inc[e.dst].push((e.label, e.src));
        }
        for (v, list) in out.iter_mut().chain(inc.iter_mut()).enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|p| p[0].0 == p[1].0) {
                return Err(Error::Defect(format!(
                    "vertex {} has two edges with the same label",
                    v % size.max(1)
                )));
            }
        }
        Ok(Self {
            n,
            names,
            edges: edges.into_iter().collect(),
            out,
            inc,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Edges sorted by (src, dst, label).
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn out_edges(&self, v: usize) -> &[(usize, usize)] {
        &self.out[v]
    }

    pub fn in_edges(&self, v: usize) -> &[(usize, usize)] {
        &self.inc[v]
    }

    /// Target of the out-edge labeled `label` at `v`.
    pub fn follow(&self, v: usize, label: usize) -> Option<usize> {
        self.out[v]
            .iter()
            .find(|(l, _)| *l == label)
            .map(|&(_, d)| d)
    }

    /// Kahn order; `None` if there is a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg: Vec<usize> = self.inc.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..self.vertex_count())
            .filter(|&v| indeg[v] == 0)
            .collect();
        let mut order = Vec::with_capacity(self.vertex_count());
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(_, d) in &self.out[v] {
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    queue.push_back(d);
                }
            }
        }
        (order.len() == self.vertex_count()).then_some(order)
    }

    /// Graphviz text. Vertices and edges are emitted in canonical order.
    pub fn to_dot(&self, graph_name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "digraph {graph_name} {{").unwrap();
        for (v, name) in self.names.iter().enumerate() {
            writeln!(s, "  v{v} [label=\"{name}\"];").unwrap();
        }
        for e in &self.edges {
            writeln!(s, "  v{} -> v{} [label=\"s{}\"];", e.src, e.dst, e.label).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

/// Directed tableau graph: `T --s_i--> s_i T` when `i` is in the bottom row
/// and `i + 1` in the top row of `T`.
pub fn build_tableau_graph(n: usize) -> Result<LabeledDigraph> {
    tableau_graph_on(&enumerate_tableaux(n)?)
}

pub fn tableau_graph_on(tableaux: &[Tableau]) -> Result<LabeledDigraph> {
    let n = tableaux.first().map_or(0, Tableau::n);
    let index: std::collections::HashMap<&Tableau, usize> = tableaux.iter().zip(0..).collect();
    let mut edges = Vec::new();
    for (src, t) in tableaux.iter().enumerate() {
        let in_top = t.top_mask();
        for i in 1..2 * n {
            if !in_top[i] && in_top[i + 1] {
                let image = t
                    .as_filling()
                    .swap_values(i)?
                    .into_tableau()
                    .map_err(|e| Error::Defect(format!("s_{i} on {t}: {e}")))?;
                edges.push(Edge {
                    src,
                    dst: index[&image],
                    label: i,
                });
            }
        }
    }
    LabeledDigraph::new(n, tableaux.iter().map(ToString::to_string).collect(), edges)
}

/// Directed web graph: `w --s_i--> w'` when `w` has unnested arcs `(j,i)` and
/// `(i+1,k)`, and `w'` replaces them by `(i,i+1)` and `(j,k)`.
pub fn build_web_graph(n: usize) -> Result<LabeledDigraph> {
    web_graph_on(&WebBasis::new(n)?)
}

pub fn web_graph_on(basis: &WebBasis) -> Result<LabeledDigraph> {
    let n = basis.n();
    let mut edges = Vec::new();
    for (src, w) in basis.webs().iter().enumerate() {
        for i in 1..2 * n {
            if w.mate(i) < i && w.mate(i + 1) > i + 1 {
                match basis.image(src, i)? {
                    SimpleImage::AddWeb(dst) => edges.push(Edge { src, dst, label: i }),
                    SimpleImage::Negate => {
                        return Err(Error::Defect(format!(
                            "s_{i} negates {w} without arc (i,i+1)"
                        )))
                    }
                }
            }
        }
    }
    LabeledDigraph::new(
        n,
        basis.webs().iter().map(ToString::to_string).collect(),
        edges,
    )
}

/// Relabels the tableau graph through the tableau-to-web bijection and
/// compares edge sets, labels included.
pub fn check_isomorphism(n: usize) -> Result<Report> {
    let tableaux = enumerate_tableaux(n)?;
    let basis = WebBasis::new(n)?;
    let tg = tableau_graph_on(&tableaux)?;
    let wg = web_graph_on(&basis)?;
    let mut report = Report::new("isomorphism");
    let image: Vec<usize> = tableaux
        .iter()
        .map(|t| {
            basis
                .index_of(&tableau_to_web(t))
                .ok_or_else(|| Error::Defect(format!("no web for {t}")))
        })
        .collect::<Result<_>>()?;
    let mapped: BTreeSet<Edge> = tg
        .edges()
        .iter()
        .map(|e| Edge {
            src: image[e.src],
            dst: image[e.dst],
            label: e.label,
        })
        .collect();
    let target: BTreeSet<Edge> = wg.edges().iter().copied().collect();
    for e in mapped.difference(&target) {
        report.fail(
            "edge",
            [wg.name(e.src), wg.name(e.dst)],
            format!("s{} only in tableau graph", e.label),
        );
    }
    for e in target.difference(&mapped) {
        report.fail(
            "edge",
            [wg.name(e.src), wg.name(e.dst)],
            format!("s{} only in web graph", e.label),
        );
    }
    report.set_stat("vertices", basis.len() as u64);
    report.set_stat("edges", target.len() as u64);
    Ok(report)
}

/// Vertices with no incoming edges, and vertices with no outgoing edges.
pub fn sources_and_sinks(g: &LabeledDigraph) -> (Vec<usize>, Vec<usize>) {
    let sources = (0..g.vertex_count())
        .filter(|&v| g.in_edges(v).is_empty())
        .collect();
    let sinks = (0..g.vertex_count())
        .filter(|&v| g.out_edges(v).is_empty())
        .collect();
    (sources, sinks)
}

/// Directed distance from the unique source. Shortest and longest path
/// lengths must agree at every vertex; a disagreement is a defect.
pub fn distances_from_source(g: &LabeledDigraph) -> Result<Vec<usize>> {
    let (sources, _) = sources_and_sinks(g);
    let [source] = sources[..] else {
        return Err(Error::Defect(format!(
            "expected one source, found {}",
            sources.len()
        )));
    };
    let order = g
        .topological_order()
        .ok_or_else(|| Error::Defect("graph has a directed cycle".into()))?;
    let mut shortest = vec![usize::MAX; g.vertex_count()];
    let mut longest = vec![0usize; g.vertex_count()];
    shortest[source] = 0;
    for &v in &order {
        if shortest[v] == usize::MAX {
            return Err(Error::Defect(format!(
                "{} unreachable from the source",
                g.name(v)
            )));
        }
        for &(_, d) in g.out_edges(v) {
            shortest[d] = shortest[d].min(shortest[v] + 1);
            longest[d] = longest[d].max(longest[v] + 1);
        }
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| shortest[v] != longest[v]) {
        return Err(Error::Defect(format!(
            "paths to {} have lengths {} and {}",
            g.name(v),
            shortest[v],
            longest[v]
        )));
    }
    Ok(shortest)
}

/// A reflexive-transitive relation stored as a dense bit matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetRelation {
    size: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl PosetRelation {
    /// Reachability closure of the given edges. Fails on a directed cycle.
    pub fn closure_of(
        size: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut succ = vec![Vec::new(); size];
        let mut indeg = vec![0usize; size];
        for (u, v) in edges {
            succ[u].push(v);
            indeg[v] += 1;
        }
        let mut queue: VecDeque<usize> = (0..size).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(size);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &d in &succ[v] {
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    queue.push_back(d);
                }
            }
        }
        if order.len() != size {
            return Err(Error::Defect("relation has a directed cycle".into()));
        }
        let stride = size.div_ceil(64);
        let mut rel = Self {
            size,
            stride,
            bits: vec![0; size * stride],
        };
        for &u in order.iter().rev() {
            rel.set(u, u);
            for &d in &succ[u] {
                let (row_u, row_d) = (u * stride, d * stride);
                for k in 0..stride {
                    let word = rel.bits[row_d + k];
                    rel.bits[row_u + k] |= word;
                }
            }
        }
        Ok(rel)
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.stride + v / 64] |= 1 << (v % 64);
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `u ⪯ v`: there is a directed path from `u` to `v`.
    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    /// Number of related pairs, reflexive pairs included.
    pub fn pair_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Brute-force check of reflexivity, antisymmetry and transitivity.
    pub fn is_partial_order(&self) -> bool {
        let s = self.size;
        (0..s).all(|u| self.leq(u, u))
            && (0..s).all(|u| (0..s).all(|v| u == v || !(self.leq(u, v) && self.leq(v, u))))
            && (0..s).all(|u| {
                (0..s)
                    .filter(|&v| self.leq(u, v))
                    .all(|v| (0..s).all(|w| !self.leq(v, w) || self.leq(u, w)))
            })
    }
}

pub fn reachability_poset(g: &LabeledDigraph) -> Result<PosetRelation> {
    PosetRelation::closure_of(g.vertex_count(), g.edges().iter().map(|e| (e.src, e.dst)))
}

/// Consecutive labels differ, out-labels at one vertex are more than one
/// apart, and every pair of out-edges closes into a commuting diamond.
pub fn structural_checks(g: &LabeledDigraph) -> Report {
    let mut report = Report::new("structural");
    let mut diamonds = 0u64;
    let mut two_paths = 0u64;
    for u in 0..g.vertex_count() {
        for &(i, v) in g.out_edges(u) {
            for &(j, x) in g.out_edges(v) {
                two_paths += 1;
                if i == j {
                    report.fail(
                        "path",
                        [g.name(u), g.name(v), g.name(x)],
                        format!("repeated label s{i}"),
                    );
                }
            }
        }
        let outs = g.out_edges(u);
        for (a, &(i, vi)) in outs.iter().enumerate() {
            for &(j, vj) in &outs[a + 1..] {
                if j.abs_diff(i) <= 1 {
                    report.fail(
                        "vertex",
                        [g.name(u)],
                        format!("out-labels s{i} and s{j} adjacent"),
                    );
                    continue;
                }
                match (g.follow(vi, j), g.follow(vj, i)) {
                    (Some(p), Some(q)) if p == q => diamonds += 1,
                    _ => report.fail(
                        "vertex",
                        [g.name(u)],
                        format!("out-edges s{i}, s{j} do not close into a diamond"),
                    ),
                }
            }
        }
    }
    report.set_stat("two_paths", two_paths);
    report.set_stat("diamonds", diamonds);
    report
}

/// Edges of the single-nest-move relation on the canonical web list: every
/// side-by-side pair `(j,j')`, `(k,k')` with `j' < k` re-paired as `(j,k')`
/// and `(j',k)` whenever that stays noncrossing.
pub fn nest_move_edges(basis: &WebBasis) -> Result<Vec<(usize, usize)>> {
    let mut edges = Vec::new();
    for (src, w) in basis.webs().iter().enumerate() {
        let arcs = w.arcs();
        for a in &arcs {
            for b in arcs.iter().filter(|b| a.right < b.left) {
                if let Some(moved) = w.nest_move(*a, *b) {
                    let dst = basis.index_of(&moved).ok_or_else(|| {
                        Error::Defect(format!("nest move left the basis: {moved}"))
                    })?;
                    edges.push((src, dst));
                }
            }
        }
    }
    Ok(edges)
}

/// Compares the closure of single nest moves with web-graph reachability.
pub fn khovanov_order_check(n: usize) -> Result<Report> {
    let basis = WebBasis::new(n)?;
    let graph = web_graph_on(&basis)?;
    let reach = reachability_poset(&graph)?;
    let moves = nest_move_edges(&basis)?;
    let mut report = Report::new("khovanov_order");
    report.set_stat("nest_moves", moves.len() as u64);
    let closure = PosetRelation::closure_of(basis.len(), moves)?;
    for u in 0..basis.len() {
        for v in 0..basis.len() {
            if reach.leq(u, v) != closure.leq(u, v) {
                report.fail(
                    "pair",
                    [graph.name(u), graph.name(v)],
                    format!(
                        "graph order {} vs nest-move order {}",
                        reach.leq(u, v),
                        closure.leq(u, v)
                    ),
                );
            }
        }
    }
    report.set_stat("related_pairs", reach.pair_count() as u64);
    Ok(report)
}

/// The web with `name`'s canonical index in `g`, for tests and callers that
/// hold text forms.
pub fn vertex_named(g: &LabeledDigraph, name: &str) -> Option<usize> {
    g.names().iter().position(|s| s == name)
}

/// Every directed path from `start`, as label sequences, up to `limit` paths.
pub fn label_paths_from(
    g: &LabeledDigraph,
    start: usize,
    limit: usize,
) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    let mut stack = vec![(start, Vec::new())];
    while let Some((v, labels)) = stack.pop() {
        if out.len() >= limit {
            break;
        }
        for &(l, d) in g.out_edges(v).iter().rev() {
            let mut next = labels.clone();
            next.push(l);
            stack.push((d, next));
        }
        out.push((v, labels));
    }
    out
}
