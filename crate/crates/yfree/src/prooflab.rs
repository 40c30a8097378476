//! Mechanized spot checks of the structural facts that hold along
//! longest paths of connected graphs without a subdivided claw.
//!
//! Everything here is brute force on purpose: paths and cycles are
//! found by exhaustive search, and each fact is evaluated literally on
//! every qualifying longest path. On a graph that is free of subdivided
//! claws every check must pass; a failure would mean a bug in this
//! crate, not new mathematics.

use serde::Serialize;

use crate::graph::Graph;
use crate::oracle::find_y_subgraph;

/// Vertex-count ceiling for the exhaustive searches. Thin graphs well
/// beyond this size finish quickly; the work budget is what actually
/// protects against dense inputs.
pub const SEARCH_MAX_N: usize = 32;

const SEARCH_BUDGET: u64 = 20_000_000;

#[derive(Debug, thiserror::Error)]
pub enum ProoflabError {
    #[error("graph has {0} vertices; exhaustive search supports at most {SEARCH_MAX_N}")]
    TooLarge(usize),
    #[error("search budget exhausted; the graph is too dense for exhaustive path search")]
    Budget,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph contains a subdivided claw; the checked facts assume there is none")]
    ContainsY,
}

/// A longest path together with whether it minimizes the degree sum of
/// its two end vertices among all longest paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongestPath {
    pub vertices: Vec<usize>,
    pub minimal: bool,
}

struct Dfs<'a> {
    g: &'a Graph,
    budget: u64,
}

impl<'a> Dfs<'a> {
    fn spend(&mut self) -> Result<(), ProoflabError> {
        if self.budget == 0 {
            return Err(ProoflabError::Budget);
        }
        self.budget -= 1;
        Ok(())
    }
}

/// All maximum-length simple paths of `g`, as vertex sequences. Both
/// orientations of each path are listed. Among them, the ones whose end
/// degrees sum smallest carry `minimal = true`.
pub fn longest_paths_bruteforce(g: &Graph) -> Result<Vec<LongestPath>, ProoflabError> {
    let n = g.n();
    if n > SEARCH_MAX_N {
        return Err(ProoflabError::TooLarge(n));
    }
    let mut dfs = Dfs { g, budget: SEARCH_BUDGET };
    let mut best: Vec<Vec<usize>> = Vec::new();
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        path.push(s);
        extend_paths(&mut dfs, &mut path, 1u32 << s, &mut best)?;
        path.pop();
    }
    let sum = |p: &Vec<usize>| g.degree(p[0]) + g.degree(*p.last().unwrap());
    let min = best.iter().map(&sum).min().unwrap();
    Ok(best
        .into_iter()
        .map(|p| {
            let minimal = sum(&p) == min;
            LongestPath { vertices: p, minimal }
        })
        .collect())
}

fn extend_paths(
    dfs: &mut Dfs,
    path: &mut Vec<usize>,
    visited: u32,
    best: &mut Vec<Vec<usize>>,
) -> Result<(), ProoflabError> {
    dfs.spend()?;
    match best.first().map(|b| b.len()) {
        Some(len) if path.len() > len => {
            best.clear();
            best.push(path.clone());
        }
        Some(len) if path.len() == len => best.push(path.clone()),
        None => best.push(path.clone()),
        _ => {}
    }
    let v = *path.last().unwrap();
    for &u in dfs.g.neighbors(v) {
        let u = u as usize;
        if visited >> u & 1 == 0 {
            path.push(u);
            extend_paths(dfs, path, visited | 1 << u, best)?;
            path.pop();
        }
    }
    Ok(())
}

/// A maximum-length cycle whose vertex set touches every edge of `g`,
/// or `None` when no cycle dominates all edges. The cycle is returned
/// as a vertex sequence without repeating the starting vertex.
pub fn max_edge_dominating_cycle(g: &Graph) -> Result<Option<Vec<usize>>, ProoflabError> {
    let n = g.n();
    if n > SEARCH_MAX_N {
        return Err(ProoflabError::TooLarge(n));
    }
    let edges = g.edges();
    let mut dfs = Dfs { g, budget: SEARCH_BUDGET };
    let mut best: Option<Vec<usize>> = None;
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        path.push(s);
        extend_cycles(&mut dfs, s, &mut path, 1u32 << s, &edges, &mut best)?;
        path.pop();
    }
    Ok(best)
}

fn extend_cycles(
    dfs: &mut Dfs,
    s: usize,
    path: &mut Vec<usize>,
    visited: u32,
    edges: &[(usize, usize)],
    best: &mut Option<Vec<usize>>,
) -> Result<(), ProoflabError> {
    dfs.spend()?;
    let v = *path.last().unwrap();
    if path.len() >= 3 && path[1] < v && dfs.g.has_edge(s, v) {
        let longer = best.as_ref().is_none_or(|b| path.len() > b.len());
        if longer {
            let dominating = edges
                .iter()
                .all(|&(a, b)| visited >> a & 1 == 1 || visited >> b & 1 == 1);
            if dominating {
                *best = Some(path.clone());
            }
        }
    }
    for &u in dfs.g.neighbors(v) {
        let u = u as usize;
        // Canonical traversal: the start is the smallest vertex on the
        // cycle, so never descend below it.
        if u > s && visited >> u & 1 == 0 {
            path.push(u);
            extend_cycles(dfs, s, path, visited | 1 << u, edges, best)?;
            path.pop();
        }
    }
    Ok(())
}

/// Outcome of one structural check.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaCheck {
    pub id: &'static str,
    pub description: &'static str,
    pub pass: bool,
    /// For failures: the path and the concrete offending objects.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Report over all degree-sum-minimal longest paths.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    /// Common length (edge count) of the longest paths.
    pub ell: usize,
    /// Number of degree-sum-minimal longest paths checked.
    pub paths_checked: usize,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Per-path context: the attachment sets `L_i` (off-path neighbors of
/// the i-th path vertex), the chords, and the vees.
struct PathCtx<'a> {
    g: &'a Graph,
    path: &'a [usize],
    ell: usize,
    on_path: Vec<bool>,
    /// `l[i]` = off-path neighbors of `path[i]`, sorted.
    l: Vec<Vec<usize>>,
}

impl<'a> PathCtx<'a> {
    fn new(g: &'a Graph, path: &'a [usize]) -> Self {
        let mut on_path = vec![false; g.n()];
        for &v in path {
            on_path[v] = true;
        }
        let l: Vec<Vec<usize>> = path
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .map(|&u| u as usize)
                    .filter(|&u| !on_path[u])
                    .collect()
            })
            .collect();
        PathCtx { g, path, ell: path.len() - 1, on_path, l }
    }

    fn meet(&self, i: usize, j: usize) -> Vec<usize> {
        self.l[i].iter().copied().filter(|w| self.l[j].contains(w)).collect()
    }

    /// Chords as position pairs `(i, j)` with `j >= i + 2`.
    fn chords(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..=self.ell {
            for j in i + 2..=self.ell {
                if self.g.has_edge(self.path[i], self.path[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Vees as `(i, w)`: an off-path vertex `w` adjacent to both
    /// `path[i]` and `path[i + 2]`.
    fn vees(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.ell.saturating_sub(1) {
            for w in self.meet(i, i + 2) {
                out.push((i, w));
            }
        }
        out
    }
}

struct CheckState {
    id: &'static str,
    description: &'static str,
    witness: Option<String>,
}

impl CheckState {
    fn new(id: &'static str, description: &'static str) -> Self {
        CheckState { id, description, witness: None }
    }

    fn fail(&mut self, path: &[usize], detail: String) {
        if self.witness.is_none() {
            self.witness = Some(format!("path {path:?}: {detail}"));
        }
    }

    fn into_check(self) -> LemmaCheck {
        LemmaCheck {
            id: self.id,
            description: self.description,
            pass: self.witness.is_none(),
            witness: self.witness,
        }
    }
}

/// Evaluate the longest-path structure facts on every degree-sum-minimal
/// longest path of `g`. Errors out when a subdivided claw is present,
/// since every fact assumes there is none.
pub fn check_structural_lemmas(g: &Graph) -> Result<LemmaReport, ProoflabError> {
    if g.n() > SEARCH_MAX_N {
        return Err(ProoflabError::TooLarge(g.n()));
    }
    if !g.is_connected() {
        return Err(ProoflabError::NotConnected);
    }
    if find_y_subgraph(g).is_some() {
        return Err(ProoflabError::ContainsY);
    }
    let paths = longest_paths_bruteforce(g)?;
    let ell = paths[0].vertices.len() - 1;
    let minimal: Vec<&LongestPath> = paths.iter().filter(|p| p.minimal).collect();

    let mut bare_ends = CheckState::new(
        "bare-ends",
        "the two ends of a longest path have no neighbors off the path",
    );
    let mut consecutive = CheckState::new(
        "consecutive-disjoint",
        "attachment sets of consecutive path vertices are disjoint",
    );
    let mut independent = CheckState::new(
        "offpath-independent",
        "vertices off a longest path form an independent set",
    );
    let mut distance = CheckState::new(
        "attach-distance",
        "attachment sets meet only at positions two apart, or at positions 1 and ell-1",
    );
    let mut triple = CheckState::new(
        "no-triple-attach",
        "no off-path vertex attaches to three distinct path positions",
    );
    let mut chords = CheckState::new(
        "chord-catalog",
        "every chord skips exactly one vertex, or is one of the six end chords",
    );
    let mut vee_cross = CheckState::new(
        "vees-dont-cross",
        "no vee has an endpoint enclosed by another vee",
    );
    let mut vee_bare = CheckState::new(
        "enclosed-vertex-bare",
        "the vertex enclosed by a vee has all its neighbors on the path",
    );
    let mut cycle_bound = CheckState::new(
        "dominating-cycle-bound",
        "an end-to-end chord or shared end attachment forces an edge-dominating cycle of length at least ell-1 and at least 4",
    );

    let mut want_cycle = false;
    for lp in &minimal {
        let ctx = PathCtx::new(g, &lp.vertices);
        let p = ctx.path;

        if !ctx.l[0].is_empty() || !ctx.l[ctx.ell].is_empty() {
            bare_ends.fail(p, format!("L_0 = {:?}, L_ell = {:?}", ctx.l[0], ctx.l[ctx.ell]));
        }
        for i in 0..ctx.ell {
            let m = ctx.meet(i, i + 1);
            if !m.is_empty() {
                consecutive.fail(p, format!("L_{i} and L_{} share {m:?}", i + 1));
            }
        }
        for (a, b) in g.edges() {
            if !ctx.on_path[a] && !ctx.on_path[b] {
                independent.fail(p, format!("edge ({a}, {b}) lies off the path"));
            }
        }

        if ctx.ell >= 5 {
            for i in 0..=ctx.ell {
                for j in i + 1..=ctx.ell {
                    let m = ctx.meet(i, j);
                    if m.is_empty() {
                        continue;
                    }
                    if !(j == i + 2 || (i == 1 && j == ctx.ell - 1)) {
                        distance.fail(p, format!("L_{i} and L_{j} share {m:?}"));
                    }
                }
            }
            for w in 0..g.n() {
                if ctx.on_path[w] {
                    continue;
                }
                let hits: Vec<usize> =
                    (0..=ctx.ell).filter(|&i| ctx.l[i].contains(&w)).collect();
                if hits.len() >= 3 {
                    triple.fail(p, format!("vertex {w} attaches at positions {hits:?}"));
                }
            }
            for (i, j) in ctx.chords() {
                let allowed = j == i + 2
                    || (i, j) == (0, 3)
                    || (i, j) == (ctx.ell - 3, ctx.ell)
                    || (i <= 1 && j >= ctx.ell - 1);
                if !allowed {
                    chords.fail(p, format!("chord at positions ({i}, {j})"));
                }
            }
            let vees = ctx.vees();
            for &(i, w) in &vees {
                for &(i2, w2) in &vees {
                    // The vee at i2 has endpoints i2 and i2 + 2; it
                    // crosses the vee at i when one of those endpoints
                    // is the enclosed position i + 1.
                    if (i, w) != (i2, w2) && (i2 == i + 1 || i2 + 2 == i + 1) {
                        vee_cross.fail(
                            p,
                            format!("vees at positions {i} (via {w}) and {i2} (via {w2})"),
                        );
                    }
                }
            }
            for i in 1..ctx.ell {
                if !ctx.l[i].is_empty() {
                    let m = ctx.meet(i - 1, i + 1);
                    if !m.is_empty() {
                        vee_bare.fail(
                            p,
                            format!("L_{i} = {:?} while a vee via {m:?} encloses it", ctx.l[i]),
                        );
                    }
                }
            }
            let end_chord = ctx
                .chords()
                .iter()
                .any(|&(i, j)| i <= 1 && j >= ctx.ell - 1);
            if end_chord || !ctx.meet(1, ctx.ell - 1).is_empty() {
                want_cycle = true;
            }
        }
    }

    if want_cycle {
        match max_edge_dominating_cycle(g)? {
            Some(c) if c.len() >= (ell - 1).max(4) => {}
            Some(c) => cycle_bound.fail(
                &minimal[0].vertices,
                format!("longest edge-dominating cycle has only {} vertices", c.len()),
            ),
            None => cycle_bound
                .fail(&minimal[0].vertices, "no edge-dominating cycle found".into()),
        }
    }

    Ok(LemmaReport {
        ell,
        paths_checked: minimal.len(),
        checks: vec![
            bare_ends.into_check(),
            consecutive.into_check(),
            independent.into_check(),
            distance.into_check(),
            triple.into_check(),
            chords.into_check(),
            vee_cross.into_check(),
            vee_bare.into_check(),
            cycle_bound.into_check(),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_yfree;

    #[test]
    fn longest_paths_on_small_fixtures() {
        let p4 = longest_paths_bruteforce(&Graph::path(4)).unwrap();
        assert_eq!(p4.len(), 2);
        assert!(p4.iter().all(|p| p.minimal && p.vertices.len() == 4));

        let c5 = longest_paths_bruteforce(&Graph::cycle(5)).unwrap();
        assert_eq!(c5.len(), 10);
        assert!(c5.iter().all(|p| p.minimal && p.vertices.len() == 5));

        let k4 = longest_paths_bruteforce(&Graph::complete(4)).unwrap();
        assert_eq!(k4.len(), 24);
        assert!(k4.iter().all(|p| p.vertices.len() == 4));

        let k1 = longest_paths_bruteforce(&Graph::empty(1)).unwrap();
        assert_eq!(k1.len(), 1);
        assert_eq!(k1[0].vertices, vec![0]);
    }

    #[test]
    fn minimal_flag_separates_end_degrees() {
        // A four-cycle with pendants on two opposite vertices: the
        // pendant-to-pendant paths are minimal, the ones ending on the
        // cycle are not.
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]).unwrap();
        let paths = longest_paths_bruteforce(&g).unwrap();
        let minimal: Vec<_> = paths.iter().filter(|p| p.minimal).collect();
        assert!(minimal.len() < paths.len());
        for p in &minimal {
            let ends = [p.vertices[0], *p.vertices.last().unwrap()];
            assert_eq!(ends.iter().filter(|&&v| v == 4 || v == 5).count(), 2, "{p:?}");
        }
    }

    #[test]
    fn dominating_cycles_on_fixtures() {
        let c6 = max_edge_dominating_cycle(&Graph::cycle(6)).unwrap().unwrap();
        assert_eq!(c6.len(), 6);

        assert!(max_edge_dominating_cycle(&Graph::path(5)).unwrap().is_none());

        let spiked = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)]).unwrap();
        let c = max_edge_dominating_cycle(&spiked).unwrap().unwrap();
        assert_eq!(c.len(), 4);

        // Two four-cycles sharing one vertex: neither cycle's vertex
        // set touches the other's far edge.
        let two = Graph::new(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)],
        )
        .unwrap();
        assert!(max_edge_dominating_cycle(&two).unwrap().is_none());
    }

    #[test]
    fn checks_pass_on_simple_yfree_graphs() {
        let c8 = check_structural_lemmas(&Graph::cycle(8)).unwrap();
        assert!(c8.all_pass(), "{c8:?}");
        assert_eq!(c8.ell, 7);

        // P6 with a pendant in the middle.
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 1)).collect();
        edges.push((2, 6));
        let spiked = Graph::new(7, &edges).unwrap();
        let rep = check_structural_lemmas(&spiked).unwrap();
        assert!(rep.all_pass(), "{rep:?}");

        let k6 = check_structural_lemmas(&Graph::complete(6)).unwrap();
        assert!(k6.all_pass(), "{k6:?}");
    }

    #[test]
    fn checks_error_on_bad_inputs() {
        assert!(matches!(
            check_structural_lemmas(&Graph::subdivided_claw()),
            Err(ProoflabError::ContainsY)
        ));
        let two_parts = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            check_structural_lemmas(&two_parts),
            Err(ProoflabError::NotConnected)
        ));
        assert!(matches!(
            check_structural_lemmas(&Graph::path(40)),
            Err(ProoflabError::TooLarge(40))
        ));
        assert!(matches!(
            longest_paths_bruteforce(&Graph::complete(12)),
            Err(ProoflabError::Budget)
        ));
    }

    #[test]
    fn checks_pass_on_all_enumerated_seven_vertex_graphs() {
        for g in enumerate_yfree(7) {
            let rep = check_structural_lemmas(&g).unwrap();
            assert!(rep.all_pass(), "{g:?}: {rep:?}");
        }
    }
}
