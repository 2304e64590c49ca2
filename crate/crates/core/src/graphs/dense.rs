use crate::error::{Error, Result};

use super::graph::{Graph, Vertex};

/// Bitmask adjacency over positions `0..n` for the exact solvers.
#[derive(Clone, Debug)]
pub struct DenseGraph {
    ids: Vec<Vertex>,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl DenseGraph {
    pub const MAX_VERTICES: usize = 64;

    pub fn new(g: &Graph) -> Result<DenseGraph> {
        if g.num_vertices() > Self::MAX_VERTICES {
            return Err(Error::InvalidOperation(format!(
                "graph has {} vertices, solvers accept at most {}",
                g.num_vertices(),
                Self::MAX_VERTICES
            )));
        }
        let ids: Vec<Vertex> = g.vertices().iter().copied().collect();
        let pos = |v: Vertex| ids.binary_search(&v).expect("endpoint is a vertex");
        let mut adj = vec![0u64; ids.len()];
        let mut edges = Vec::with_capacity(g.num_edges());
        for &(u, v) in g.edges() {
            let (i, j) = (pos(u), pos(v));
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
            edges.push((i, j));
        }
        Ok(DenseGraph { ids, adj, edges })
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn all(&self) -> u64 {
        if self.ids.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.ids.len()) - 1
        }
    }

    pub fn adj(&self, i: usize) -> u64 {
        self.adj[i]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn id(&self, i: usize) -> Vertex {
        self.ids[i]
    }

    pub fn ids_of(&self, mask: u64) -> Vec<Vertex> {
        (0..self.n()).filter(|i| mask >> i & 1 == 1).map(|i| self.ids[i]).collect()
    }

    pub fn mask_of(&self, vs: &[Vertex]) -> Option<u64> {
        vs.iter().try_fold(0u64, |m, v| self.ids.binary_search(v).ok().map(|i| m | 1 << i))
    }

    /// Whether the subgraph induced by `mask` is connected (empty counts).
    pub fn connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let i = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[i] & mask & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == mask
    }

    /// Whether the subgraph induced by `mask` contains no cycle.
    pub fn acyclic_within(&self, mask: u64) -> bool {
        let edges = self.edges.iter().filter(|(i, j)| mask >> i & 1 == 1 && mask >> j & 1 == 1).count();
        edges + self.components_within(mask) == mask.count_ones() as usize
    }

    pub fn components_within(&self, mask: u64) -> usize {
        let mut rest = mask;
        let mut count = 0;
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let i = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[i] & mask & !seen;
                seen |= new;
                frontier |= new;
            }
            rest &= !seen;
            count += 1;
        }
        count
    }
}
