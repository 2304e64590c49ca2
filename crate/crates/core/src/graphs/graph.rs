use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

fn norm(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph. Edges are stored with the smaller endpoint
/// first, so iteration order is canonical.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<(Vertex, Vertex)>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// Builds a graph, adding edge endpoints as vertices. Loops are rejected.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Graph> {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (u, v) in edges {
            g.add_vertex(u);
            g.add_vertex(v);
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Path, cycle and complete graphs on `1..=n`, mostly for tests.
    pub fn path(n: usize) -> Graph {
        Graph::from_parts(1..=n, (1..n).map(|i| (i, i + 1))).expect("simple")
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n, 1).expect("simple");
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
        Graph::from_parts(1..=n, edges).expect("simple")
    }

    pub fn add_vertex(&mut self, v: Vertex) -> bool {
        self.vertices.insert(v)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        if u == v {
            return Err(Error::InvalidOperation(format!("loop at vertex {u}")));
        }
        self.require(u)?;
        self.require(v)?;
        Ok(self.edges.insert(norm(u, v)))
    }

    fn require(&self, v: Vertex) -> Result<()> {
        if self.vertices.contains(&v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(Vertex, Vertex)> {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// `|V| + |E|`.
    pub fn size(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&norm(u, v))
    }

    pub fn neighbors(&self, v: Vertex) -> BTreeSet<Vertex> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn adjacency(&self) -> BTreeMap<Vertex, BTreeSet<Vertex>> {
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> =
            self.vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
        for &(u, v) in &self.edges {
            adj.get_mut(&u).expect("endpoint").insert(v);
            adj.get_mut(&v).expect("endpoint").insert(u);
        }
        adj
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let adj = self.adjacency();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &root in &self.vertices {
            if !seen.insert(root) {
                continue;
            }
            let mut comp = BTreeSet::from([root]);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[&u] {
                    if seen.insert(w) {
                        comp.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// The vertexless graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Smallest non-negative id not in use.
    pub fn fresh_vertex(&self) -> Vertex {
        (0..).find(|v| !self.vertices.contains(v)).expect("unbounded")
    }

    /// Replaces `u` and `v` by one vertex adjacent to the union of their
    /// neighborhoods. The merged vertex keeps the id `min(u, v)`; an edge
    /// between `u` and `v` disappears.
    pub fn merge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.require(u)?;
        self.require(v)?;
        if u == v {
            return Err(Error::InvalidOperation(format!("cannot merge vertex {u} with itself")));
        }
        let (keep, gone) = norm(u, v);
        let mut g = Graph { vertices: self.vertices.clone(), edges: BTreeSet::new() };
        g.vertices.remove(&gone);
        for &(a, b) in &self.edges {
            let a = if a == gone { keep } else { a };
            let b = if b == gone { keep } else { b };
            if a != b {
                g.edges.insert(norm(a, b));
            }
        }
        Ok(g)
    }

    /// Renames `u` to `v`; when `v` already exists this is a merge that keeps
    /// the id `v`.
    pub fn rename(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.require(u)?;
        if u == v {
            return Ok(self.clone());
        }
        let mut g = Graph { vertices: self.vertices.clone(), edges: BTreeSet::new() };
        g.vertices.remove(&u);
        g.vertices.insert(v);
        for &(a, b) in &self.edges {
            let a = if a == u { v } else { a };
            let b = if b == u { v } else { b };
            if a != b {
                g.edges.insert(norm(a, b));
            }
        }
        Ok(g)
    }

    /// Adds a fresh vertex adjacent only to `v`; returns the graph and the
    /// new vertex.
    pub fn add_leaf(&self, v: Vertex) -> Result<(Graph, Vertex)> {
        self.require(v)?;
        let leaf = self.fresh_vertex();
        let mut g = self.clone();
        g.vertices.insert(leaf);
        g.edges.insert(norm(v, leaf));
        Ok((g, leaf))
    }

    /// Replaces the edge `{v, w}` by `{v, w'}` for a fresh vertex `w'`.
    pub fn separate(&self, v: Vertex, w: Vertex) -> Result<(Graph, Vertex)> {
        self.require(v)?;
        self.require(w)?;
        if !self.has_edge(v, w) {
            return Err(Error::MissingEdge(v, w));
        }
        let fresh = self.fresh_vertex();
        let mut g = self.clone();
        g.edges.remove(&norm(v, w));
        g.vertices.insert(fresh);
        g.edges.insert(norm(v, fresh));
        Ok((g, fresh))
    }

    /// Removes `v` and its incident edges; neighbors stay even if isolated.
    pub fn delete_vertex(&self, v: Vertex) -> Result<Graph> {
        self.require(v)?;
        let mut g = self.clone();
        g.vertices.remove(&v);
        g.edges.retain(|&(a, b)| a != v && b != v);
        Ok(g)
    }

    pub fn delete_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.edges.remove(&norm(u, v));
        Ok(g)
    }

    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Graph {
        Graph {
            vertices: self.vertices.intersection(keep).copied().collect(),
            edges: self.edges.iter().copied().filter(|(a, b)| keep.contains(a) && keep.contains(b)).collect(),
        }
    }

    /// Disjoint union; `other` is shifted past the largest id in `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertices.iter().next_back().map_or(0, |m| m + 1);
        let mut g = self.clone();
        g.vertices.extend(other.vertices.iter().map(|v| v + shift));
        g.edges.extend(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        g
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson { vertices: self.vertices.iter().copied().collect(), edges: self.edges.iter().copied().collect() }
    }

    pub fn from_json(json: &GraphJson) -> Result<Graph> {
        for &(u, v) in &json.edges {
            for x in [u, v] {
                if !json.vertices.contains(&x) {
                    return Err(Error::UnknownVertex(x));
                }
            }
        }
        Graph::from_parts(json.vertices.iter().copied(), json.edges.iter().copied())
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in &self.vertices {
            let _ = writeln!(s, "  v{v};");
        }
        for (a, b) in &self.edges {
            let _ = writeln!(s, "  v{a} -- v{b};");
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_examples() {
        let path = Graph::from_parts([1, 2, 3], [(1, 2), (2, 3)]).unwrap();
        let m = path.merge(1, 3).unwrap();
        assert_eq!(m, Graph::from_parts([1, 2], [(1, 2)]).unwrap());
        let k2 = Graph::complete(2);
        assert_eq!(k2.merge(1, 2).unwrap(), Graph::from_parts([1], []).unwrap());
        let tri = Graph::complete(3);
        assert_eq!(tri.merge(1, 2).unwrap(), Graph::from_parts([1, 3], [(1, 3)]).unwrap());
        assert!(matches!(tri.merge(1, 1), Err(Error::InvalidOperation(_))));
        assert!(matches!(tri.merge(1, 9), Err(Error::UnknownVertex(9))));
    }

    #[test]
    fn rename_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(k2.rename(1, 3).unwrap(), Graph::from_parts([2, 3], [(2, 3)]).unwrap());
        assert_eq!(k2.rename(1, 1).unwrap(), k2);
        let tri = Graph::complete(3);
        assert_eq!(tri.rename(1, 2).unwrap(), Graph::from_parts([2, 3], [(2, 3)]).unwrap());
    }

    #[test]
    fn leaf_separate_delete() {
        let k1 = Graph::from_parts([0], []).unwrap();
        let (g, leaf) = k1.add_leaf(0).unwrap();
        assert_eq!(leaf, 1);
        assert_eq!(g, Graph::from_parts([0, 1], [(0, 1)]).unwrap());
        assert!(g.has_edge(0, 1));

        let k2 = Graph::from_parts([1, 2], [(1, 2)]).unwrap();
        let (s, fresh) = k2.separate(1, 2).unwrap();
        assert_eq!(fresh, 0);
        assert_eq!(s, Graph::from_parts([0, 1, 2], [(0, 1)]).unwrap());
        assert!(matches!(s.separate(1, 2), Err(Error::MissingEdge(1, 2))));

        // A doubled edge v-w: add a leaf for the copy, then separate it.
        let (with_leaf, l) = k2.add_leaf(1).unwrap();
        let (sep, _) = with_leaf.separate(1, l).unwrap();
        assert_eq!(sep.num_edges(), 2);
        assert_eq!(sep.degree(1), 2);

        let p3 = Graph::path(3);
        let d = p3.delete_vertex(2).unwrap();
        assert_eq!(d, Graph::from_parts([1, 3], []).unwrap());
        assert_eq!(p3.delete_edge(2, 1).unwrap().num_edges(), 1);
        assert!(p3.delete_edge(1, 3).is_err());
    }

    #[test]
    fn components_and_connectivity() {
        assert!(Graph::new().is_connected());
        assert!(Graph::cycle(5).is_connected());
        let g = Graph::from_parts([1, 2, 3, 4], [(1, 2)]).unwrap();
        assert_eq!(g.components().len(), 3);
        assert!(!g.is_connected());
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::cycle(4);
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        let bad = GraphJson { vertices: vec![1], edges: vec![(1, 2)] };
        assert!(matches!(Graph::from_json(&bad), Err(Error::UnknownVertex(2))));
    }
}
