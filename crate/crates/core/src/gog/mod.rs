//! Splitting models: labeled GBS graphs and annotated one-edge splittings.
//!
//! A [`GbsGraph`] edge `(u, v, m, n)` carries an infinite cyclic edge group
//! that includes as `<x_u^m>` at `u` and `<x_v^n>` at `v`. Edge orientation is
//! stored; flipping an edge swaps its labels.

mod splitting;

pub use splitting::{
    quotient_by_edge_word, AnnotatedSplitting, Annotations, Commensuration, EdgeIndex,
    FactorAnnotations, SplittingError, SplittingKind,
};

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::presentations::FinitePresentation;
use crate::words::{Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GogError {
    #[error("zero label on edge '{0}'")]
    ZeroLabel(String),
    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),
    #[error("duplicate vertex '{0}'")]
    DuplicateVertex(String),
    #[error("duplicate edge id '{0}'")]
    DuplicateEdge(String),
    #[error("invalid edge id '{0}'")]
    InvalidEdgeId(String),
    #[error("unknown edge '{0}'")]
    UnknownEdge(String),
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not reduced")]
    NotReduced,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GbsEdge {
    pub id: String,
    pub u: Generator,
    pub v: Generator,
    pub label_u: BigInt,
    pub label_v: BigInt,
}

impl GbsEdge {
    pub fn new(
        id: impl Into<String>,
        u: Generator,
        v: Generator,
        label_u: impl Into<BigInt>,
        label_v: impl Into<BigInt>,
    ) -> Self {
        GbsEdge {
            id: id.into(),
            u,
            v,
            label_u: label_u.into(),
            label_v: label_v.into(),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn flipped(&self) -> GbsEdge {
        GbsEdge {
            id: self.id.clone(),
            u: self.v.clone(),
            v: self.u.clone(),
            label_u: self.label_v.clone(),
            label_v: self.label_u.clone(),
        }
    }

    /// (start vertex, end vertex, label at start, label at end) for a traversal.
    pub fn oriented(&self, forward: bool) -> (&Generator, &Generator, &BigInt, &BigInt) {
        if forward {
            (&self.u, &self.v, &self.label_u, &self.label_v)
        } else {
            (&self.v, &self.u, &self.label_v, &self.label_u)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Good,
    Bad,
}

/// One traversal of an edge; `forward` goes from the `u` end to the `v` end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub edge: usize,
    pub forward: bool,
}

impl Step {
    pub fn reversed(self) -> Step {
        Step {
            edge: self.edge,
            forward: !self.forward,
        }
    }
}

/// A connected graph of infinite cyclic groups. Vertices are kept sorted by
/// name and edges sorted by id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbsGraph {
    vertices: Vec<Generator>,
    edges: Vec<GbsEdge>,
}

impl GbsGraph {
    pub fn new(vertices: Vec<Generator>, mut edges: Vec<GbsEdge>) -> Result<Self, GogError> {
        let mut vset = BTreeSet::new();
        for v in &vertices {
            if !vset.insert(v.clone()) {
                return Err(GogError::DuplicateVertex(v.name().to_string()));
            }
        }
        if vset.is_empty() {
            return Err(GogError::Empty);
        }
        let mut ids = BTreeSet::new();
        for e in &edges {
            if e.id.is_empty() || e.id.chars().any(|c| c.is_whitespace() || c == '#') {
                return Err(GogError::InvalidEdgeId(e.id.clone()));
            }
            if !ids.insert(e.id.clone()) {
                return Err(GogError::DuplicateEdge(e.id.clone()));
            }
            for end in [&e.u, &e.v] {
                if !vset.contains(end) {
                    return Err(GogError::UnknownVertex(end.name().to_string()));
                }
            }
            if e.label_u.is_zero() || e.label_v.is_zero() {
                return Err(GogError::ZeroLabel(e.id.clone()));
            }
        }
        edges.sort_by(|a, b| a.id.cmp(&b.id));
        let graph = GbsGraph {
            vertices: vset.into_iter().collect(),
            edges,
        };
        if !graph.is_connected() {
            return Err(GogError::Disconnected);
        }
        Ok(graph)
    }

    /// Baumslag–Solitar graph: one vertex `x` with a loop `(m, n)`.
    pub fn baumslag_solitar(m: i64, n: i64) -> Result<Self, GogError> {
        let x = Generator::new("x").expect("valid name");
        GbsGraph::new(vec![x.clone()], vec![GbsEdge::new("e1", x.clone(), x, m, n)])
    }

    pub fn vertices(&self) -> &[Generator] {
        &self.vertices
    }

    pub fn edges(&self) -> &[GbsEdge] {
        &self.edges
    }

    pub fn vertex_index(&self, v: &Generator) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn edge(&self, id: &str) -> Result<&GbsEdge, GogError> {
        self.edges
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| GogError::UnknownEdge(id.to_string()))
    }

    fn is_connected(&self) -> bool {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([self.vertices[0].clone()]);
        seen.insert(self.vertices[0].clone());
        while let Some(x) = queue.pop_front() {
            for e in &self.edges {
                let other = if e.u == x {
                    &e.v
                } else if e.v == x {
                    &e.u
                } else {
                    continue;
                };
                if seen.insert(other.clone()) {
                    queue.push_back(other.clone());
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    pub fn classify_edge(&self, id: &str) -> Result<EdgeKind, GogError> {
        Ok(edge_kind(self.edge(id)?))
    }

    pub fn is_reduced(&self) -> bool {
        !self.edges.iter().any(is_reducible)
    }

    /// Contracts reducible edges, smallest id first, until none remain.
    ///
    /// Contracting `(u, v, ±1, n)` substitutes `x_u = x_v^{±n}`: `u` merges
    /// into `v` and every other label `k` at `u` becomes `k·(±1)·n`.
    pub fn reduce(&self) -> GbsGraph {
        let mut g = self.clone();
        while let Some(pos) = g.edges.iter().position(is_reducible) {
            let e = g.edges.remove(pos);
            let (gone, survivor, factor) = if e.label_u.abs().is_one() {
                (e.u, e.v, &e.label_u * &e.label_v)
            } else {
                (e.v, e.u, &e.label_v * &e.label_u)
            };
            for other in &mut g.edges {
                if other.u == gone {
                    other.u = survivor.clone();
                    other.label_u *= &factor;
                }
                if other.v == gone {
                    other.v = survivor.clone();
                    other.label_v *= &factor;
                }
            }
            g.vertices.retain(|v| v != &gone);
        }
        g
    }

    pub fn is_trivial(&self) -> Result<bool, GogError> {
        if !self.is_reduced() {
            return Err(GogError::NotReduced);
        }
        Ok(self.vertices.len() == 1 && self.edges.is_empty())
    }

    /// `(1, n)` when the graph is one vertex with one loop having a label of
    /// absolute value 1. Orientation and the sign of the edge generator are
    /// normalized so the first label is exactly 1.
    pub fn is_single_bad_loop(&self) -> Result<Option<(BigInt, BigInt)>, GogError> {
        if !self.is_reduced() {
            return Err(GogError::NotReduced);
        }
        if self.vertices.len() != 1 || self.edges.len() != 1 {
            return Ok(None);
        }
        let e = &self.edges[0];
        let (m, n) = if e.label_u.abs().is_one() {
            (e.label_u.clone(), e.label_v.clone())
        } else if e.label_v.abs().is_one() {
            (e.label_v.clone(), e.label_u.clone())
        } else {
            return Ok(None);
        };
        Ok(Some((BigInt::one(), n * m)))
    }

    pub fn flip_edge(&self, id: &str) -> Result<GbsGraph, GogError> {
        let i = self
            .edge_index(id)
            .ok_or_else(|| GogError::UnknownEdge(id.to_string()))?;
        let mut g = self.clone();
        g.edges[i] = g.edges[i].flipped();
        Ok(g)
    }

    /// The graph with one edge removed, provided it stays connected.
    pub fn without_edge(&self, id: &str) -> Result<GbsGraph, GogError> {
        let i = self
            .edge_index(id)
            .ok_or_else(|| GogError::UnknownEdge(id.to_string()))?;
        let mut edges = self.edges.clone();
        edges.remove(i);
        GbsGraph::new(self.vertices.clone(), edges)
    }

    /// Removing a bridge leaves two components: the one containing the
    /// edge's `u` end and the one containing its `v` end.
    pub fn bridge_sides(&self, id: &str) -> Result<Option<(GbsGraph, GbsGraph)>, GogError> {
        let e = self.edge(id)?;
        if e.is_loop() {
            return Ok(None);
        }
        let rest: Vec<&GbsEdge> = self.edges.iter().filter(|x| x.id != id).collect();
        let component = |start: &Generator| {
            let mut seen = BTreeSet::from([start.clone()]);
            let mut queue = VecDeque::from([start.clone()]);
            while let Some(x) = queue.pop_front() {
                for f in &rest {
                    for (a, b) in [(&f.u, &f.v), (&f.v, &f.u)] {
                        if a == &x && seen.insert(b.clone()) {
                            queue.push_back(b.clone());
                        }
                    }
                }
            }
            seen
        };
        let side_u = component(&e.u);
        if side_u.contains(&e.v) {
            return Ok(None);
        }
        let side_v = component(&e.v);
        let build = |side: &BTreeSet<Generator>| {
            let edges = rest
                .iter()
                .filter(|f| side.contains(&f.u))
                .map(|f| (*f).clone())
                .collect();
            GbsGraph::new(side.iter().cloned().collect(), edges)
        };
        Ok(Some((build(&side_u)?, build(&side_v)?)))
    }

    /// Breadth-first spanning tree from the smallest vertex; at each vertex,
    /// incident edges are scanned by (neighbour name, edge id).
    pub fn layout(&self) -> GraphLayout {
        let n = self.vertices.len();
        let mut parent: Vec<Option<Step>> = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut tree_edge = vec![false; self.edges.len()];
        visited[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let mut incident: Vec<(usize, usize, bool)> = Vec::new();
            for (i, e) in self.edges.iter().enumerate() {
                if e.is_loop() {
                    continue;
                }
                let ui = self.vertex_index(&e.u).expect("validated");
                let vi = self.vertex_index(&e.v).expect("validated");
                if ui == x {
                    incident.push((vi, i, true));
                } else if vi == x {
                    incident.push((ui, i, false));
                }
            }
            incident.sort_by(|a, b| {
                self.vertices[a.0]
                    .cmp(&self.vertices[b.0])
                    .then(self.edges[a.1].id.cmp(&self.edges[b.1].id))
            });
            for (y, i, forward) in incident {
                if !visited[y] {
                    visited[y] = true;
                    tree_edge[i] = true;
                    parent[y] = Some(Step { edge: i, forward });
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                }
            }
        }

        let non_tree: Vec<usize> = (0..self.edges.len()).filter(|&i| !tree_edge[i]).collect();
        let taken: BTreeSet<&str> = self.vertices.iter().map(|v| v.name()).collect();
        let stable_letters = non_tree
            .iter()
            .enumerate()
            .map(|(k, &i)| {
                let mut name = if non_tree.len() == 1 {
                    "t".to_string()
                } else {
                    format!("t{}", k + 1)
                };
                while taken.contains(name.as_str()) {
                    name.push('_');
                }
                (i, Generator::new(name).expect("valid name"))
            })
            .collect();
        GraphLayout {
            parent,
            depth,
            tree_edge,
            stable_letters,
        }
    }

    pub fn to_presentation(&self) -> FinitePresentation {
        self.presentation_with_layout(&self.layout())
    }

    pub fn presentation_with_layout(&self, layout: &GraphLayout) -> FinitePresentation {
        let mut generators = self.vertices.clone();
        generators.extend(layout.stable_letters.iter().map(|(_, t)| t.clone()));
        let mut relators = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            let xu = Word::power(e.u.clone(), e.label_u.clone());
            let xv_inv = Word::power(e.v.clone(), -&e.label_v);
            let rel = match layout.stable_letter_of(i) {
                None => xu.concat(&xv_inv),
                Some(t) => {
                    let t_word = Word::power(t.clone(), 1);
                    t_word.concat(&xu).concat(&t_word.invert()).concat(&xv_inv)
                }
            };
            relators.push(rel);
        }
        FinitePresentation::new(generators, relators).expect("graph presentation is well formed")
    }

    /// DOT rendering: one node per vertex, one arrow labeled `m:n` per edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph gbs {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}:{}\", id=\"{}\"];",
                e.u, e.v, e.label_u, e.label_v, e.id
            );
        }
        out.push_str("}\n");
        out
    }
}

fn edge_kind(e: &GbsEdge) -> EdgeKind {
    if e.label_u.abs().is_one() || e.label_v.abs().is_one() {
        EdgeKind::Bad
    } else {
        EdgeKind::Good
    }
}

fn is_reducible(e: &GbsEdge) -> bool {
    !e.is_loop() && edge_kind(e) == EdgeKind::Bad
}

pub fn classify_edge(g: &GbsGraph, id: &str) -> Result<EdgeKind, GogError> {
    g.classify_edge(id)
}

pub fn reduce(g: &GbsGraph) -> GbsGraph {
    g.reduce()
}

pub fn to_presentation(g: &GbsGraph) -> FinitePresentation {
    g.to_presentation()
}

/// Spanning tree and stable-letter naming for a [`GbsGraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphLayout {
    parent: Vec<Option<Step>>,
    depth: Vec<usize>,
    tree_edge: Vec<bool>,
    stable_letters: Vec<(usize, Generator)>,
}

impl GraphLayout {
    pub fn root(&self) -> usize {
        0
    }

    pub fn is_tree_edge(&self, edge: usize) -> bool {
        self.tree_edge[edge]
    }

    pub fn stable_letters(&self) -> &[(usize, Generator)] {
        &self.stable_letters
    }

    pub fn stable_letter_of(&self, edge: usize) -> Option<&Generator> {
        self.stable_letters
            .iter()
            .find(|(i, _)| *i == edge)
            .map(|(_, t)| t)
    }

    pub fn edge_of_letter(&self, letter: &Generator) -> Option<usize> {
        self.stable_letters
            .iter()
            .find(|(_, t)| t == letter)
            .map(|(i, _)| *i)
    }

    /// Tree path between two vertices, as steps.
    pub fn tree_path(&self, graph: &GbsGraph, from: usize, to: usize) -> Vec<Step> {
        let (mut a, mut b) = (from, to);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while self.depth[a] > self.depth[b] {
            let s = self.parent[a].expect("non-root has a parent");
            up.push(s.reversed());
            a = self.parent_vertex(graph, a);
        }
        while self.depth[b] > self.depth[a] {
            let s = self.parent[b].expect("non-root has a parent");
            down.push(s);
            b = self.parent_vertex(graph, b);
        }
        while a != b {
            let sa = self.parent[a].expect("non-root has a parent");
            let sb = self.parent[b].expect("non-root has a parent");
            up.push(sa.reversed());
            down.push(sb);
            a = self.parent_vertex(graph, a);
            b = self.parent_vertex(graph, b);
        }
        down.reverse();
        up.extend(down);
        up
    }

    fn parent_vertex(&self, graph: &GbsGraph, v: usize) -> usize {
        let s = self.parent[v].expect("non-root has a parent");
        let (start, _, _, _) = graph.edges[s.edge].oriented(s.forward);
        graph.vertex_index(start).expect("validated")
    }
}

/// Vertex lookup by name over the sorted vertex list, for callers holding
/// names from a presentation.
pub fn vertex_map(g: &GbsGraph) -> BTreeMap<Generator, usize> {
    g.vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlinalg::AbelianInvariants;

    fn v(name: &str) -> Generator {
        Generator::new(name).unwrap()
    }

    fn graph(vs: &[&str], es: &[(&str, &str, &str, i64, i64)]) -> GbsGraph {
        GbsGraph::new(
            vs.iter().map(|n| v(n)).collect(),
            es.iter()
                .map(|&(id, a, b, m, n)| GbsEdge::new(id, v(a), v(b), m, n))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn edge_classification() {
        let g = graph(&["a", "b"], &[("e1", "a", "b", 2, 3)]);
        assert_eq!(g.classify_edge("e1").unwrap(), EdgeKind::Good);
        let g = graph(&["a", "b"], &[("e1", "a", "b", 1, 5)]);
        assert_eq!(g.classify_edge("e1").unwrap(), EdgeKind::Bad);
        let g = graph(&["x"], &[("e1", "x", "x", 1, -1)]);
        assert_eq!(g.classify_edge("e1").unwrap(), EdgeKind::Bad);
        assert!(g.is_reduced());
        assert_eq!(g.classify_edge("nope"), Err(GogError::UnknownEdge("nope".into())));
    }

    #[test]
    fn construction_errors() {
        let x = v("x");
        let y = v("y");
        assert_eq!(
            GbsGraph::new(vec![x.clone(), y.clone()], vec![GbsEdge::new("e1", x.clone(), y.clone(), 0, 3)]),
            Err(GogError::ZeroLabel("e1".into()))
        );
        assert_eq!(
            GbsGraph::new(vec![x.clone(), y.clone()], vec![]),
            Err(GogError::Disconnected)
        );
        assert_eq!(
            GbsGraph::new(vec![x.clone()], vec![GbsEdge::new("e1", x.clone(), y, 1, 1)]),
            Err(GogError::UnknownVertex("y".into()))
        );
        assert_eq!(GbsGraph::new(vec![], vec![]), Err(GogError::Empty));
    }

    #[test]
    fn reduce_examples() {
        let g = graph(&["u", "v"], &[("e1", "u", "v", 1, 1)]).reduce();
        assert!(g.is_trivial().unwrap());

        let g = graph(
            &["u", "v", "w"],
            &[("e1", "u", "v", 1, 2), ("e2", "v", "w", 3, 4)],
        );
        let r = g.reduce();
        assert_eq!(r.vertices(), &[v("v"), v("w")]);
        assert_eq!(r.edges(), &[GbsEdge::new("e2", v("v"), v("w"), 3, 4)]);
        assert_eq!(
            r.to_presentation().abelianization(),
            g.to_presentation().abelianization()
        );

        let g = graph(&["x"], &[("e1", "x", "x", 2, 3)]);
        assert_eq!(g.reduce(), g);
    }

    #[test]
    fn reduce_rescales_labels_at_the_removed_vertex() {
        // x_u = x_v^2, so the loop x_u^3 -> x_u^5 becomes x_v^6 -> x_v^10.
        let g = graph(
            &["u", "v"],
            &[("e1", "u", "v", 1, 2), ("e2", "u", "u", 3, 5)],
        );
        let r = g.reduce();
        assert_eq!(r.edges(), &[GbsEdge::new("e2", v("v"), v("v"), 6, 10)]);
        assert_eq!(
            r.to_presentation().abelianization(),
            g.to_presentation().abelianization()
        );
        let g = graph(
            &["u", "v"],
            &[("e1", "u", "v", -1, 2), ("e2", "u", "u", 3, 5)],
        );
        assert_eq!(
            g.reduce().edges(),
            &[GbsEdge::new("e2", v("v"), v("v"), -6, -10)]
        );
    }

    #[test]
    fn trivial_and_bad_loops() {
        let g = graph(&["x"], &[]);
        assert!(g.is_trivial().unwrap());
        let g = graph(&["x"], &[("e1", "x", "x", 1, 2)]);
        assert_eq!(g.is_single_bad_loop().unwrap(), Some((BigInt::from(1), BigInt::from(2))));
        let g = graph(&["x"], &[("e1", "x", "x", 2, 1)]);
        assert_eq!(g.is_single_bad_loop().unwrap(), Some((BigInt::from(1), BigInt::from(2))));
        let g = graph(&["x"], &[("e1", "x", "x", -1, 1)]);
        assert_eq!(g.is_single_bad_loop().unwrap(), Some((BigInt::from(1), BigInt::from(-1))));
        let g = graph(&["x"], &[("e1", "x", "x", 2, 3)]);
        assert_eq!(g.is_single_bad_loop().unwrap(), None);
        let g = graph(&["u", "v"], &[("e1", "u", "v", 1, 2)]);
        assert_eq!(g.is_single_bad_loop(), Err(GogError::NotReduced));
        assert_eq!(g.is_trivial(), Err(GogError::NotReduced));
    }

    #[test]
    fn presentations() {
        let g = graph(&["a", "b"], &[("e1", "a", "b", 2, 3)]);
        assert_eq!(g.to_presentation().to_string(), "< a, b | a^2 b^-3 >");
        let g = graph(&["x"], &[("e1", "x", "x", 2, 3)]);
        assert_eq!(g.to_presentation().to_string(), "< x, t | t x^2 t^-1 x^-3 >");
        let g = graph(&["x"], &[("e1", "x", "x", 1, 1), ("e2", "x", "x", 1, 1)]);
        let p = g.to_presentation();
        assert_eq!(p.to_string(), "< x, t1, t2 | t1 x t1^-1 x^-1, t2 x t2^-1 x^-1 >");
        assert_eq!(p.abelianization(), AbelianInvariants::from_i64(3, &[]).unwrap());
    }

    #[test]
    fn stable_letter_names_avoid_vertices() {
        let g = graph(&["t"], &[("e1", "t", "t", 2, 3)]);
        assert_eq!(g.to_presentation().to_string(), "< t, t_ | t_ t^2 t_^-1 t^-3 >");
    }

    #[test]
    fn flipping_preserves_abelianization() {
        let g = graph(
            &["a", "b"],
            &[("e1", "a", "b", 2, 4), ("e2", "a", "b", 3, -6), ("e3", "b", "b", 2, 2)],
        );
        let base = g.to_presentation().abelianization();
        for id in ["e1", "e2", "e3"] {
            assert_eq!(g.flip_edge(id).unwrap().to_presentation().abelianization(), base);
        }
    }

    #[test]
    fn tree_is_breadth_first_from_smallest() {
        let g = graph(
            &["a", "b", "c"],
            &[("e1", "b", "c", 2, 2), ("e2", "a", "c", 2, 3), ("e3", "a", "b", 3, 3)],
        );
        let layout = g.layout();
        // From a, neighbours by name: b (e3) then c (e2); e1 closes the cycle.
        assert!(layout.is_tree_edge(1));
        assert!(layout.is_tree_edge(2));
        assert!(!layout.is_tree_edge(0));
        assert_eq!(layout.stable_letter_of(0), Some(&v("t")));
        let path = layout.tree_path(&g, 1, 2);
        assert_eq!(
            path,
            vec![Step { edge: 2, forward: false }, Step { edge: 1, forward: true }]
        );
    }

    #[test]
    fn bridges() {
        let g = graph(
            &["a", "b", "c"],
            &[("e1", "a", "b", 2, 3), ("e2", "b", "c", 2, 2), ("e3", "c", "c", 1, 1)],
        );
        let (left, right) = g.bridge_sides("e1").unwrap().unwrap();
        assert_eq!(left.vertices(), &[v("a")]);
        assert_eq!(right.vertices(), &[v("b"), v("c")]);
        assert_eq!(right.edges().len(), 2);
        assert!(g.bridge_sides("e3").unwrap().is_none());
    }

    #[test]
    fn dot_output() {
        let g = graph(&["x"], &[("e1", "x", "x", 2, 3)]);
        assert_eq!(
            g.to_dot(),
            "digraph gbs {\n  \"x\";\n  \"x\" -> \"x\" [label=\"2:3\", id=\"e1\"];\n}\n"
        );
    }
}
