//! Simple undirected graphs on dense vertex ids 0..n-1.

mod blocks;
mod canon;
mod format;

pub use blocks::{blocks_and_cutvertices, BlockDecomposition, BlocksError};
pub use canon::{automorphism_count, canonical_form, CANON_MAX_N};
pub use format::{parse_edge_list, parse_graph6, to_dot, to_edge_list, to_graph6, FormatError};

use std::collections::VecDeque;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

/// An undirected simple graph.  Adjacency lists are kept sorted, so two
/// values compare equal exactly when they are equal as labeled graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph { n, m: 0, adj: vec![Vec::new(); n] }
    }

    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        g.sort_adj();
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.adj[u].contains(&(v as u32)) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].push(v as u32);
        self.adj[v].push(u as u32);
        self.m += 1;
        Ok(())
    }

    fn sort_adj(&mut self) {
        for a in &mut self.adj {
            a.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges as (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                let v = v as usize;
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Induced subgraph on `verts` (strictly ascending ids); vertex i of the
    /// result corresponds to verts[i].
    pub fn induced(&self, verts: &[usize]) -> Graph {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for &v in &self.adj[u] {
                if let Ok(j) = verts.binary_search(&(v as usize)) {
                    if i < j {
                        g.adj[i].push(j as u32);
                        g.adj[j].push(i as u32);
                        g.m += 1;
                    }
                }
            }
        }
        g.sort_adj();
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    let v = v as usize;
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut count = 1;
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                let v = v as usize;
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.m == self.n - 1 && self.is_connected()
    }

    /// A caterpillar is a tree in which deleting every leaf yields a
    /// (possibly empty) path.
    pub fn is_caterpillar(&self) -> bool {
        if !self.is_tree() {
            return false;
        }
        let spine: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) >= 2).collect();
        if spine.is_empty() {
            return true;
        }
        let h = self.induced(&spine);
        // A path: connected, acyclic, max degree <= 2.
        h.is_connected() && h.m == h.n - 1 && (0..h.n).all(|v| h.degree(v) <= 2)
    }

    pub fn path(k: usize) -> Graph {
        let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Graph::new(k, &edges).unwrap()
    }

    pub fn cycle(k: usize) -> Graph {
        assert!(k >= 3);
        let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        edges.push((k - 1, 0));
        Graph::new(k, &edges).unwrap()
    }

    pub fn complete(k: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..k {
            for v in u + 1..k {
                edges.push((u, v));
            }
        }
        Graph::new(k, &edges).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::new(a + b, &edges).unwrap()
    }

    /// The subdivided claw: center 0, legs 0-1-2, 0-3-4, 0-5-6.
    pub fn subdivided_claw() -> Graph {
        Graph::new(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    /// Decode the lower-triangular mask used by the exhaustive sweeps: bit k
    /// of `mask` is edge (i, j), i < j, in colexicographic order (the graph6
    /// bit order).
    pub fn from_mask(n: usize, mask: u64) -> Graph {
        debug_assert!(n <= 11);
        let mut g = Graph::empty(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    g.adj[i].push(j as u32);
                    g.adj[j].push(i as u32);
                    g.m += 1;
                }
                k += 1;
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
