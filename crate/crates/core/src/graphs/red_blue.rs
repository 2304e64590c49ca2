use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::graph::Vertex;

/// A vertex of a red-blue graph. Red and blue ids live in separate spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RbVertex {
    Red(Vertex),
    Blue(Vertex),
}

/// Bipartite graph with fixed color classes; edges are `(red, blue)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RedBlueGraph {
    red: BTreeSet<Vertex>,
    blue: BTreeSet<Vertex>,
    edges: BTreeSet<(Vertex, Vertex)>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct RedBlueJson {
    pub red: Vec<Vertex>,
    pub blue: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl RedBlueGraph {
    pub fn new() -> Self {
        RedBlueGraph::default()
    }

    /// Builds a graph from colored vertices and `(red, blue)` edges;
    /// endpoints are added as needed.
    pub fn from_parts(
        red: impl IntoIterator<Item = Vertex>,
        blue: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> RedBlueGraph {
        let mut g = RedBlueGraph { red: red.into_iter().collect(), blue: blue.into_iter().collect(), edges: BTreeSet::new() };
        for (r, b) in edges {
            g.add_edge(r, b);
        }
        g
    }

    pub fn add_edge(&mut self, r: Vertex, b: Vertex) -> bool {
        self.red.insert(r);
        self.blue.insert(b);
        self.edges.insert((r, b))
    }

    pub fn red(&self) -> &BTreeSet<Vertex> {
        &self.red
    }

    pub fn blue(&self) -> &BTreeSet<Vertex> {
        &self.blue
    }

    pub fn edges(&self) -> &BTreeSet<(Vertex, Vertex)> {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.red.len() + self.blue.len()
    }

    pub fn size(&self) -> usize {
        self.num_vertices() + self.edges.len()
    }

    pub fn contains(&self, x: RbVertex) -> bool {
        match x {
            RbVertex::Red(r) => self.red.contains(&r),
            RbVertex::Blue(b) => self.blue.contains(&b),
        }
    }

    pub fn neighbors(&self, x: RbVertex) -> BTreeSet<RbVertex> {
        match x {
            RbVertex::Red(r) => self.edges.iter().filter(|e| e.0 == r).map(|e| RbVertex::Blue(e.1)).collect(),
            RbVertex::Blue(b) => self.edges.iter().filter(|e| e.1 == b).map(|e| RbVertex::Red(e.0)).collect(),
        }
    }

    pub fn has_isolated(&self) -> bool {
        self.red.iter().any(|&r| self.neighbors(RbVertex::Red(r)).is_empty())
            || self.blue.iter().any(|&b| self.neighbors(RbVertex::Blue(b)).is_empty())
    }

    /// Exchanges the color classes.
    pub fn swap_colors(&self) -> RedBlueGraph {
        RedBlueGraph {
            red: self.blue.clone(),
            blue: self.red.clone(),
            edges: self.edges.iter().map(|&(r, b)| (b, r)).collect(),
        }
    }

    /// Color-preserving merge; the merged vertex keeps `min(u, v)`.
    pub fn rb_merge(&self, u: RbVertex, v: RbVertex) -> Result<RedBlueGraph> {
        for x in [u, v] {
            if !self.contains(x) {
                return Err(Error::UnknownVertex(match x {
                    RbVertex::Red(i) | RbVertex::Blue(i) => i,
                }));
            }
        }
        let mut g = self.clone();
        match (u, v) {
            (RbVertex::Red(a), RbVertex::Red(b)) if a != b => {
                let (keep, gone) = (a.min(b), a.max(b));
                g.red.remove(&gone);
                g.edges = self.edges.iter().map(|&(r, x)| (if r == gone { keep } else { r }, x)).collect();
            }
            (RbVertex::Blue(a), RbVertex::Blue(b)) if a != b => {
                let (keep, gone) = (a.min(b), a.max(b));
                g.blue.remove(&gone);
                g.edges = self.edges.iter().map(|&(x, c)| (x, if c == gone { keep } else { c })).collect();
            }
            (RbVertex::Red(_), RbVertex::Red(_)) | (RbVertex::Blue(_), RbVertex::Blue(_)) => {
                return Err(Error::InvalidOperation("cannot merge a vertex with itself".into()));
            }
            _ => return Err(Error::InvalidOperation("merge must preserve colors".into())),
        }
        Ok(g)
    }

    /// Removes `x` with its edges and every vertex left isolated by it.
    pub fn rb_cleanup_delete(&self, x: RbVertex) -> Result<RedBlueGraph> {
        if !self.contains(x) {
            return Err(Error::UnknownVertex(match x {
                RbVertex::Red(i) | RbVertex::Blue(i) => i,
            }));
        }
        let nbrs = self.neighbors(x);
        let mut g = self.clone();
        match x {
            RbVertex::Red(r) => {
                g.red.remove(&r);
                g.edges.retain(|e| e.0 != r);
            }
            RbVertex::Blue(b) => {
                g.blue.remove(&b);
                g.edges.retain(|e| e.1 != b);
            }
        }
        for y in nbrs {
            if g.neighbors(y).is_empty() {
                match y {
                    RbVertex::Red(r) => g.red.remove(&r),
                    RbVertex::Blue(b) => g.blue.remove(&b),
                };
            }
        }
        Ok(g)
    }

    pub fn to_json(&self) -> RedBlueJson {
        RedBlueJson {
            red: self.red.iter().copied().collect(),
            blue: self.blue.iter().copied().collect(),
            edges: self.edges.iter().copied().collect(),
        }
    }

    pub fn from_json(json: &RedBlueJson) -> Result<RedBlueGraph> {
        for &(r, b) in &json.edges {
            if !json.red.contains(&r) {
                return Err(Error::UnknownVertex(r));
            }
            if !json.blue.contains(&b) {
                return Err(Error::UnknownVertex(b));
            }
        }
        Ok(RedBlueGraph::from_parts(json.red.iter().copied(), json.blue.iter().copied(), json.edges.iter().copied()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use RbVertex::{Blue, Red};

    #[test]
    fn merge_within_color() {
        let g = RedBlueGraph::from_parts([], [], [(1, 1), (2, 1)]);
        let m = g.rb_merge(Red(1), Red(2)).unwrap();
        assert_eq!(m, RedBlueGraph::from_parts([], [], [(1, 1)]));
        assert!(matches!(g.rb_merge(Red(1), Blue(1)), Err(Error::InvalidOperation(_))));
    }

    #[test]
    fn cleanup_delete_sweeps_isolated() {
        let g = RedBlueGraph::from_parts([], [], [(1, 1)]);
        assert_eq!(g.rb_cleanup_delete(Red(1)).unwrap(), RedBlueGraph::new());
        let h = RedBlueGraph::from_parts([], [], [(1, 1), (2, 1), (2, 2)]);
        let d = h.rb_cleanup_delete(Red(2)).unwrap();
        assert_eq!(d, RedBlueGraph::from_parts([], [], [(1, 1)]));
    }

    #[test]
    fn swap_is_involution() {
        let g = RedBlueGraph::from_parts([], [], [(1, 2), (3, 2)]);
        assert_eq!(g.swap_colors().swap_colors(), g);
        assert_eq!(g.swap_colors().red().len(), 1);
    }
}
