//! Exhaustive enumeration and counting of connected graphs with no
//! subdivided claw.
//!
//! Two independent instruments live here. [`oracle_census`] sweeps all
//! labeled graphs on `n <= 8` vertices and tests each one directly, so
//! it knows nothing about the structure theory. [`enumerate_yfree`]
//! instead constructs every graph the structure theorem predicts: small
//! kernels fattened by pendant cloning, plus spiked bead strands and
//! necklaces. The test suite checks that the two agree class for class.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::cert::{BeadKind, BeadProgram};
use crate::graph::{automorphism_count, canonical_form, Graph};
use crate::oracle::find_y_subgraph;

/// Labeled census of connected graphs on `n` vertices, from a direct
/// sweep over all `2^(n choose 2)` edge masks.
#[derive(Debug, Clone)]
pub struct CensusRow {
    pub n: usize,
    /// Labeled connected graphs.
    pub connected: u64,
    /// Labeled connected graphs with no subdivided claw.
    pub yfree: u64,
    /// Canonical forms of the distinct unlabeled graphs behind `yfree`.
    pub classes: BTreeSet<Vec<u8>>,
}

/// Brute-force sweep; feasible through `n = 8` (268 million masks).
pub fn oracle_census(n: usize) -> CensusRow {
    assert!((1..=8).contains(&n), "census sweep supports 1 <= n <= 8");
    let bits = n * (n - 1) / 2;
    let (connected, yfree, classes) = (0u64..1 << bits)
        .into_par_iter()
        .fold(
            || (0u64, 0u64, BTreeSet::new()),
            |(mut conn, mut yf, mut cls), mask| {
                let g = Graph::from_mask(n, mask);
                if g.is_connected() {
                    conn += 1;
                    if find_y_subgraph(&g).is_none() {
                        yf += 1;
                        cls.insert(canonical_form(&g));
                    }
                }
                (conn, yf, cls)
            },
        )
        .reduce(
            || (0u64, 0u64, BTreeSet::new()),
            |(c1, y1, mut s1), (c2, y2, s2)| {
                s1.extend(s2);
                (c1 + c2, y1 + y2, s1)
            },
        );
    CensusRow { n, connected, yfree, classes }
}

/// All connected graphs on exactly `k` labeled vertices, by mask sweep.
/// Intended for small `k` (kernels use `k <= 6`).
fn connected_graphs(k: usize) -> Vec<Graph> {
    let bits = k * (k - 1) / 2;
    (0u64..1 << bits)
        .map(|mask| Graph::from_mask(k, mask))
        .filter(|g| g.is_connected())
        .collect()
}

/// Pendant classes of `g`: degree-one vertices grouped by their
/// neighbor. Returns the attachment vertices, one per class.
fn pendant_attachments(g: &Graph) -> Vec<usize> {
    let mut at = BTreeSet::new();
    for v in 0..g.n() {
        if g.degree(v) == 1 {
            at.insert(g.neighbors(v)[0] as usize);
        }
    }
    at.into_iter().collect()
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative
/// integers.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut cur = vec![0usize; parts];
    fn rec(total: usize, idx: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if idx + 1 == cur.len() {
            cur[idx] = total;
            out.push(cur.clone());
            return;
        }
        for take in 0..=total {
            cur[idx] = take;
            rec(total - take, idx + 1, cur, out);
        }
    }
    rec(total, 0, &mut cur, &mut out);
    out
}

/// Kernels of at most six vertices fattened by extra pendant clones:
/// route one of the structure theorem.
fn kernel_route(n: usize, seen: &mut BTreeMap<Vec<u8>, Graph>) {
    for k in 1..=n.min(6) {
        for kernel in connected_graphs(k) {
            let extra = n - k;
            if extra == 0 {
                insert_rep(seen, kernel);
                continue;
            }
            let at = pendant_attachments(&kernel);
            if at.is_empty() {
                continue;
            }
            for split in compositions(extra, at.len()) {
                let mut edges = kernel.edges();
                let mut next = k;
                for (&w, &count) in at.iter().zip(&split) {
                    for _ in 0..count {
                        edges.push((w, next));
                        next += 1;
                    }
                }
                insert_rep(seen, Graph::new(n, &edges).unwrap());
            }
        }
    }
}

fn insert_rep(seen: &mut BTreeMap<Vec<u8>, Graph>, g: Graph) {
    seen.entry(canonical_form(&g)).or_insert(g);
}

/// Bead kind menu for a given leftover vertex budget.
fn kind_menu(budget: usize, end: bool, ring: bool) -> Vec<BeadKind> {
    let mut out = Vec::new();
    if end && !ring && budget >= 3 {
        out.push(BeadKind::K4);
    }
    if budget >= 2 {
        out.push(BeadKind::K211);
    }
    for t in 0..=budget {
        out.push(BeadKind::K11t(t));
    }
    for t in 2..=budget {
        out.push(BeadKind::K2t(t));
    }
    out
}

/// Every spiked strand and necklace program on exactly `n` vertices:
/// route two of the structure theorem. Distinct programs may realize
/// isomorphic graphs; the canon map deduplicates.
fn bead_route(n: usize, seen: &mut BTreeMap<Vec<u8>, Graph>) {
    for ring in [false, true] {
        let mut beads: Vec<BeadKind> = Vec::new();
        extend_programs(n, ring, &mut beads, seen);
    }
}

fn extend_programs(
    n: usize,
    ring: bool,
    beads: &mut Vec<BeadKind>,
    seen: &mut BTreeMap<Vec<u8>, Graph>,
) {
    let r = beads.len();
    let min_r = if ring { 2 } else { 1 };
    if r >= min_r {
        emit_with_spikes(n, ring, beads, seen);
    }
    // Grow the sequence while at least one more vertex fits. Each
    // additional bead consumes at least one fresh vertex.
    let floor = if r == 0 {
        0
    } else {
        BeadProgram {
            ring,
            beads: beads.clone(),
            spikes: vec![0; if ring { r } else { r - 1 }],
        }
        .vertex_count()
    };
    if floor >= n {
        return;
    }
    let budget = n - floor;
    // K4 beads are only offered as openers here; closers are handled
    // below so they stay terminal.
    for kind in kind_menu(budget, r == 0, ring) {
        beads.push(kind);
        extend_programs(n, ring, beads, seen);
        beads.pop();
    }
    if !ring && r >= 1 && budget >= 3 {
        beads.push(BeadKind::K4);
        emit_with_spikes(n, ring, beads, seen);
        beads.pop();
    }
}

/// Emit every spike distribution that brings the program to exactly `n`
/// vertices.
fn emit_with_spikes(
    n: usize,
    ring: bool,
    beads: &[BeadKind],
    seen: &mut BTreeMap<Vec<u8>, Graph>,
) {
    let glue = if ring { beads.len() } else { beads.len() - 1 };
    let base = BeadProgram { ring, beads: beads.to_vec(), spikes: vec![0; glue] };
    let used = base.vertex_count();
    if used > n {
        return;
    }
    for spikes in compositions(n - used, glue) {
        let prog = BeadProgram { ring, beads: beads.to_vec(), spikes };
        if let Ok(cert) = prog.allocate() {
            insert_rep(seen, cert.realize().unwrap());
        }
    }
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices with no subdivided claw, built constructively from the
/// structure theorem. Keyed and ordered by canonical form.
pub fn enumerate_yfree(n: usize) -> Vec<Graph> {
    assert!(n >= 1, "need at least one vertex");
    let mut seen: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    kernel_route(n, &mut seen);
    if n >= 2 {
        bead_route(n, &mut seen);
    }
    seen.into_values().collect()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of labeled connected graphs on `n` vertices with no
/// subdivided claw, via orbit counting over the unlabeled enumeration:
/// each class contributes `n! / |Aut|`.
pub fn labeled_yfree_count(n: usize) -> BigUint {
    let nf = factorial(n);
    enumerate_yfree(n)
        .iter()
        .map(|g| &nf / BigUint::from(automorphism_count(g)))
        .sum()
}

/// The point estimate `(g_n / n!)^(1/n)` for the exponential growth
/// rate of the labeled counting sequence.
pub fn growth_point(n: usize) -> f64 {
    let g = labeled_yfree_count(n).to_f64().expect("count fits in f64 range");
    let nf = factorial(n).to_f64().expect("factorial fits in f64 range");
    (g / nf).powf(1.0 / n as f64)
}

/// Growth-rate diagnostics for `n = 1..=max_n`.
pub fn growth_table(max_n: usize) -> Vec<(usize, BigUint, f64)> {
    (1..=max_n).map(|n| (n, labeled_yfree_count(n), growth_point(n))).collect()
}

/// Where the exponential growth rate lands in the limit: the reciprocal
/// of the unique root in `(0, 1)` of `(z + z^2) e^z = 1`.
#[derive(Debug, Clone, Copy)]
pub struct DeltaSolution {
    /// Root of `(z + z^2) e^z = 1`.
    pub z: f64,
    /// `1 / z`, the growth constant.
    pub delta: f64,
    /// `|(z + z^2) e^z - 1|` at the returned root.
    pub residual: f64,
}

pub fn solve_delta() -> DeltaSolution {
    let f = |z: f64| (z + z * z) * z.exp() - 1.0;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    debug_assert!(f(lo) < 0.0 && f(hi) > 0.0);
    while hi - lo > 1e-14 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let z = 0.5 * (lo + hi);
    DeltaSolution { z, delta: 1.0 / z, residual: f(z).abs() }
}

/// One representative per isomorphism class of trees on `n` vertices,
/// grown leaf by leaf.
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut level: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    let k1 = Graph::empty(1);
    level.insert(canonical_form(&k1), k1);
    for size in 2..=n {
        let mut next: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for tree in level.values() {
            for v in 0..tree.n() {
                let mut edges = tree.edges();
                edges.push((v, size - 1));
                insert_rep(&mut next, Graph::new(size, &edges).unwrap());
            }
        }
        level = next;
    }
    level.into_values().collect()
}
