//! Biconnected components (blocks), cut vertices and the block-cut tree.

use super::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlocksError {
    #[error("graph is not connected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted vertex lists, ordered lexicographically.  Bridges appear as
    /// two-vertex blocks; a single-vertex connected graph is one block.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    /// Incidence (block index, cut vertex) of the block-cut tree.
    pub tree_edges: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    /// Blocks containing vertex v.
    pub fn blocks_of(&self, v: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.blocks[b].binary_search(&v).is_ok())
            .collect()
    }
}

/// Hopcroft-Tarjan block decomposition of a connected graph.
pub fn blocks_and_cutvertices(g: &Graph) -> Result<BlockDecomposition, BlocksError> {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return Err(BlocksError::Disconnected);
    }
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![vec![0]],
            cut_vertices: Vec::new(),
            tree_edges: Vec::new(),
        });
    }

    const UNSEEN: u32 = u32::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut parent = vec![UNSEEN; n];
    let mut next = vec![0usize; n];
    let mut timer: u32 = 1;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    let mut stack = vec![0usize];
    disc[0] = 0;
    low[0] = 0;
    while let Some(&v) = stack.last() {
        if next[v] < g.degree(v) {
            let w = g.neighbors(v)[next[v]] as usize;
            next[v] += 1;
            if disc[w] == UNSEEN {
                parent[w] = v as u32;
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                edge_stack.push((v, w));
                stack.push(w);
            } else if w as u32 != parent[v] && disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&p) = stack.last() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    // Pop the block rooted at edge (p, v).
                    let mut verts = Vec::new();
                    loop {
                        let (a, b) = edge_stack.pop().expect("edge stack underflow");
                        verts.push(a);
                        verts.push(b);
                        if (a, b) == (p, v) {
                            break;
                        }
                    }
                    verts.sort_unstable();
                    verts.dedup();
                    blocks.push(verts);
                }
            }
        }
    }

    blocks.sort();
    let mut mult = vec![0usize; n];
    for b in &blocks {
        for &v in b {
            mult[v] += 1;
        }
    }
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| mult[v] >= 2).collect();
    let mut tree_edges = Vec::new();
    for (bi, b) in blocks.iter().enumerate() {
        for &v in b {
            if mult[v] >= 2 {
                tree_edges.push((bi, v));
            }
        }
    }
    Ok(BlockDecomposition { blocks, cut_vertices, tree_edges })
}
