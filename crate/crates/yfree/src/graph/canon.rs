//! Canonical forms and automorphism counts via individualization-refinement.
//!
//! The canonical form of a graph on n <= 16 vertices is the lexicographically
//! smallest packed adjacency matrix over all labelings reachable in the
//! refinement search tree; two graphs get the same byte string exactly when
//! they are isomorphic.  The number of search leaves attaining the minimum
//! equals the automorphism group order, and cells that are uniformly joined
//! to the rest of the graph (clone classes, bead secondaries, complete
//! graphs) are collapsed wholesale instead of being branched over.

use super::Graph;

pub const CANON_MAX_N: usize = 16;

/// Canonical byte string; equal iff isomorphic.  First byte is n, the rest
/// packs the upper triangle of the canonically relabeled adjacency matrix.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    search(g).0
}

/// Order of the automorphism group.
pub fn automorphism_count(g: &Graph) -> u64 {
    search(g).1
}

fn search(g: &Graph) -> (Vec<u8>, u64) {
    let n = g.n();
    assert!(n <= CANON_MAX_N, "canonical form supports n <= {CANON_MAX_N}, got {n}");
    if n == 0 {
        return (vec![0], 1);
    }
    let mut adj = [0u16; CANON_MAX_N];
    for u in 0..n {
        for &v in g.neighbors(u) {
            adj[u] |= 1 << v;
        }
    }
    let mut ctx = Ctx { adj, n, best: None, count: 0 };
    let initial: Vec<Vec<u8>> = vec![(0..n as u8).collect()];
    ctx.walk(initial, 1);
    (ctx.best.unwrap(), ctx.count)
}

struct Ctx {
    adj: [u16; CANON_MAX_N],
    n: usize,
    best: Option<Vec<u8>>,
    count: u64,
}

impl Ctx {
    fn walk(&mut self, mut partition: Vec<Vec<u8>>, multiplier: u64) {
        self.refine(&mut partition);
        let multiplier = multiplier * self.collapse_uniform_cells(&mut partition);
        match partition.iter().position(|c| c.len() > 1) {
            None => {
                let key = self.leaf_key(&partition);
                match &self.best {
                    Some(b) if key > *b => {}
                    Some(b) if key == *b => self.count += multiplier,
                    _ => {
                        self.best = Some(key);
                        self.count = multiplier;
                    }
                }
            }
            Some(ti) => {
                let target = partition[ti].clone();
                for &v in &target {
                    let mut child = partition.clone();
                    let rest: Vec<u8> = target.iter().copied().filter(|&w| w != v).collect();
                    child[ti] = vec![v];
                    child.insert(ti + 1, rest);
                    self.walk(child, multiplier);
                }
            }
        }
    }

    /// Split cells by neighbor counts against every cell until equitable.
    fn refine(&self, partition: &mut Vec<Vec<u8>>) {
        loop {
            let masks: Vec<u16> = partition
                .iter()
                .map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v))
                .collect();
            let mut changed = false;
            let mut next: Vec<Vec<u8>> = Vec::with_capacity(partition.len());
            for cell in partition.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: Vec<(Vec<u8>, Vec<u8>)> = Vec::new();
                for &v in cell {
                    let sig: Vec<u8> = masks
                        .iter()
                        .map(|&m| (self.adj[v as usize] & m).count_ones() as u8)
                        .collect();
                    match groups.binary_search_by(|(s, _)| s.cmp(&sig)) {
                        Ok(i) => groups[i].1.push(v),
                        Err(i) => groups.insert(i, (sig, vec![v])),
                    }
                }
                if groups.len() > 1 {
                    changed = true;
                }
                for (_, members) in groups {
                    next.push(members);
                }
            }
            *partition = next;
            if !changed {
                return;
            }
        }
    }

    /// Cells whose vertices are all-adjacent or all-nonadjacent to every
    /// other cell and form a clique or independent set internally are
    /// interchangeable; fix them in ascending order and account |cell|!.
    fn collapse_uniform_cells(&self, partition: &mut Vec<Vec<u8>>) -> u64 {
        let masks: Vec<u16> = partition
            .iter()
            .map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v))
            .collect();
        let mut multiplier = 1u64;
        let mut next: Vec<Vec<u8>> = Vec::with_capacity(partition.len());
        for (i, cell) in partition.iter().enumerate() {
            let k = cell.len();
            if k > 1 && self.cell_uniform(cell, masks[i], &masks) {
                for j in 2..=k as u64 {
                    multiplier *= j;
                }
                next.extend(cell.iter().map(|&v| vec![v]));
            } else {
                next.push(cell.clone());
            }
        }
        *partition = next;
        multiplier
    }

    fn cell_uniform(&self, cell: &[u8], own_mask: u16, masks: &[u16]) -> bool {
        let internal = self.adj[cell[0] as usize] & own_mask;
        let clique_deg = internal.count_ones();
        if clique_deg != 0 && clique_deg != cell.len() as u32 - 1 {
            return false;
        }
        for &v in cell {
            if (self.adj[v as usize] & own_mask).count_ones() != clique_deg {
                return false;
            }
            for &m in masks {
                if m == own_mask {
                    continue;
                }
                let c = (self.adj[v as usize] & m).count_ones();
                if c != 0 && c != m.count_ones() {
                    return false;
                }
            }
        }
        true
    }

    fn leaf_key(&self, partition: &[Vec<u8>]) -> Vec<u8> {
        let perm: Vec<u8> = partition.iter().map(|c| c[0]).collect();
        let n = self.n;
        let mut key = Vec::with_capacity(1 + n * (n - 1) / 12 + 1);
        key.push(n as u8);
        let mut acc = 0u8;
        let mut bits = 0;
        for j in 1..n {
            for i in 0..j {
                let bit = self.adj[perm[i] as usize] >> perm[j] & 1;
                acc = acc << 1 | bit as u8;
                bits += 1;
                if bits == 8 {
                    key.push(acc);
                    acc = 0;
                    bits = 0;
                }
            }
        }
        if bits > 0 {
            key.push(acc << (8 - bits));
        }
        key
    }
}
