//! Seeded random generators for certified claw-subdivision-free graphs.
//!
//! [`random_certificate`] draws a structure certificate of a requested
//! size and family; realizing it yields a graph that is free of
//! subdivided claws by construction. [`thick_caterpillar`] builds the
//! path-of-beads family where every spine edge is either plain or
//! thickened into a triangle.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::cert::{BeadKind, BeadProgram, CertKind, Certificate, CertificateBody, KernelClones};
use crate::graph::Graph;

#[derive(Debug, thiserror::Error)]
pub enum GenError {
    #[error("no {kind:?} certificate exists on {n} vertices")]
    Infeasible { kind: CertKind, n: usize },
    #[error("size repair did not converge for n = {0}")]
    NoConvergence(usize),
}

/// Knobs for [`random_certificate`].
#[derive(Debug, Clone)]
pub struct GenParams {
    /// Exact number of vertices the realized graph must have.
    pub n_target: usize,
    /// Fix the certificate family, or `None` to pick one at random.
    pub kind: Option<CertKind>,
    /// Allow `K4` beads at strand ends.
    pub allow_k4: bool,
    /// Soft cap on the `t` of freshly drawn `K_{1,1,t}` and `K_{2,t}`
    /// beads; size repair may exceed it.
    pub max_t: usize,
    /// Soft cap on spikes per glue vertex when drawing; size repair may
    /// exceed it.
    pub max_spikes: usize,
}

impl GenParams {
    pub fn new(n_target: usize) -> Self {
        GenParams { n_target, kind: None, allow_k4: true, max_t: 6, max_spikes: 3 }
    }

    pub fn kind(mut self, kind: CertKind) -> Self {
        self.kind = Some(kind);
        self
    }

    pub fn allow_k4(mut self, allow: bool) -> Self {
        self.allow_k4 = allow;
        self
    }
}

/// Draw a certificate whose realization has exactly `params.n_target`
/// vertices. The same seed and parameters always produce the same
/// certificate.
pub fn random_certificate(seed: u64, params: &GenParams) -> Result<Certificate, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = params.n_target;
    let kind = match params.kind {
        Some(k) => k,
        None => {
            let mut feasible = vec![CertKind::KernelClones];
            if n >= 2 {
                feasible.push(CertKind::Strand);
            }
            if n >= 3 {
                feasible.push(CertKind::Necklace);
            }
            *feasible.choose(&mut rng).unwrap()
        }
    };
    match kind {
        CertKind::KernelClones => random_kernel_clones(&mut rng, n),
        CertKind::Strand => random_beads(&mut rng, params, false),
        CertKind::Necklace => random_beads(&mut rng, params, true),
    }
}

fn random_connected(rng: &mut ChaCha8Rng, k: usize) -> Graph {
    loop {
        let mut edges = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if rng.gen_bool(0.5) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(k, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

fn random_kernel_clones(rng: &mut ChaCha8Rng, n: usize) -> Result<Certificate, GenError> {
    if n == 0 {
        return Err(GenError::Infeasible { kind: CertKind::KernelClones, n });
    }
    let kn = if n == 1 {
        1
    } else if n <= 6 && rng.gen_bool(0.4) {
        n
    } else {
        rng.gen_range(2..=n.min(6))
    };
    let kernel = if kn == n {
        random_connected(rng, kn)
    } else {
        // Need at least one pendant kernel vertex to hang clones on.
        let mut tries = 0;
        loop {
            let g = random_connected(rng, kn);
            if (0..kn).any(|v| g.degree(v) == 1) {
                break g;
            }
            tries += 1;
            if tries > 64 {
                break Graph::complete_bipartite(1, kn - 1);
            }
        }
    };
    let mut leaves: Vec<usize> = (0..kn).filter(|&v| kernel.degree(v) == 1).collect();
    if kn == 2 {
        // Both endpoints of a K2 kernel are pendant, but cloning both
        // would put two expanded classes on adjacent vertices.
        leaves.truncate(1);
    }
    let mut extra = vec![0usize; kn];
    for _ in 0..n - kn {
        extra[*leaves.choose(rng).unwrap()] += 1;
    }
    let mut next = kn;
    let mut clones = Vec::new();
    for v in 0..kn {
        if extra[v] > 0 {
            let mut members = vec![v];
            members.extend(next..next + extra[v]);
            next += extra[v];
            clones.push((v, members));
        }
    }
    let cert = Certificate {
        n,
        body: CertificateBody::KernelClones(KernelClones {
            kernel_n: kn,
            kernel_edges: kernel.edges(),
            map: (0..kn).collect(),
            clones,
        }),
    };
    debug_assert!(cert.validate().is_empty(), "{:?}", cert.validate());
    Ok(cert)
}

fn draw_kind(rng: &mut ChaCha8Rng, params: &GenParams, end: bool, ring: bool) -> BeadKind {
    let max_t = params.max_t.max(2);
    loop {
        match rng.gen_range(0..4) {
            0 if end && !ring && params.allow_k4 => return BeadKind::K4,
            1 => return BeadKind::K211,
            2 => return BeadKind::K11t(rng.gen_range(0..=max_t)),
            3 => return BeadKind::K2t(rng.gen_range(2..=max_t)),
            _ => continue,
        }
    }
}

fn random_beads(
    rng: &mut ChaCha8Rng,
    params: &GenParams,
    ring: bool,
) -> Result<Certificate, GenError> {
    let n = params.n_target;
    let kind = if ring { CertKind::Necklace } else { CertKind::Strand };
    if (ring && n < 3) || (!ring && n < 2) {
        return Err(GenError::Infeasible { kind, n });
    }
    let min_r = if ring { 2 } else { 1 };
    let r = rng.gen_range(min_r..=(n / 2).max(min_r).min(12));
    let beads: Vec<BeadKind> = (0..r)
        .map(|i| draw_kind(rng, params, i == 0 || i + 1 == r, ring))
        .collect();
    let glue = if ring { r } else { r - 1 };
    let spikes: Vec<usize> = (0..glue).map(|_| rng.gen_range(0..=params.max_spikes)).collect();
    let mut prog = BeadProgram { ring, beads, spikes };

    // Size repair: nudge the program until it has exactly n vertices.
    for _ in 0..4 * n + 64 {
        normalize(&mut prog);
        let count = prog.vertex_count();
        if count == n {
            break;
        }
        if count < n {
            grow(rng, &mut prog);
        } else {
            shrink(rng, &mut prog);
        }
    }
    normalize(&mut prog);
    if prog.vertex_count() != n {
        return Err(GenError::NoConvergence(n));
    }
    let cert = prog.allocate().map_err(|_| GenError::NoConvergence(n))?;
    Ok(cert)
}

/// Keep the program valid: a two-bead ring may contain at most one bead
/// that joins its primaries.
fn normalize(prog: &mut BeadProgram) {
    if prog.ring && prog.beads.len() == 2 && prog.beads[0].joins_primaries() {
        if let BeadKind::K11t(t) = prog.beads[1] {
            prog.beads[1] = BeadKind::K2t(t.max(2));
        }
    }
}

fn grow(rng: &mut ChaCha8Rng, prog: &mut BeadProgram) {
    let r = prog.beads.len();
    match rng.gen_range(0..3) {
        0 if prog.glue_count() > 0 => {
            let i = rng.gen_range(0..prog.spikes.len());
            prog.spikes[i] += 1;
        }
        1 => {
            let grows: Vec<usize> = (0..r)
                .filter(|&i| matches!(prog.beads[i], BeadKind::K11t(_) | BeadKind::K2t(_)))
                .collect();
            if let Some(&i) = grows.choose(rng) {
                prog.beads[i] = match prog.beads[i] {
                    BeadKind::K11t(t) => BeadKind::K11t(t + 1),
                    BeadKind::K2t(t) => BeadKind::K2t(t + 1),
                    other => other,
                };
            } else {
                insert_edge_bead(prog);
            }
        }
        _ => insert_edge_bead(prog),
    }
}

/// Add a `K_{1,1,0}` bead without disturbing the ends (strand `K4` beads
/// must stay terminal).
fn insert_edge_bead(prog: &mut BeadProgram) {
    let r = prog.beads.len();
    if prog.ring || r == 1 {
        // Ring: splice anywhere; one-bead strand: extend at the back.
        if prog.ring {
            prog.beads.insert(1, BeadKind::K11t(0));
            prog.spikes.insert(1, 0);
        } else {
            prog.beads.push(BeadKind::K11t(0));
            prog.spikes.push(0);
        }
    } else {
        prog.beads.insert(1, BeadKind::K11t(0));
        prog.spikes.insert(0, 0);
    }
}

fn shrink(rng: &mut ChaCha8Rng, prog: &mut BeadProgram) {
    // Spikes first, then bead sizes, then whole beads.
    let spiky: Vec<usize> = (0..prog.spikes.len()).filter(|&i| prog.spikes[i] > 0).collect();
    if let Some(&i) = spiky.choose(rng) {
        prog.spikes[i] -= 1;
        return;
    }
    let shrinkable: Vec<usize> = (0..prog.beads.len())
        .filter(|&i| {
            matches!(prog.beads[i], BeadKind::K11t(t) if t > 0)
                || matches!(prog.beads[i], BeadKind::K2t(t) if t > 2)
        })
        .collect();
    if let Some(&i) = shrinkable.choose(rng) {
        prog.beads[i] = match prog.beads[i] {
            BeadKind::K11t(t) => BeadKind::K11t(t - 1),
            BeadKind::K2t(t) => BeadKind::K2t(t - 1),
            other => other,
        };
        return;
    }
    let r = prog.beads.len();
    let min_r = if prog.ring { 2 } else { 1 };
    if r > min_r {
        prog.beads.pop();
        if prog.ring {
            let s = prog.spikes.pop().unwrap();
            let last = prog.spikes.len() - 1;
            prog.spikes[last] += s;
        } else if let Some(s) = prog.spikes.pop() {
            if let Some(last) = prog.spikes.last_mut() {
                *last += s;
            }
        }
        return;
    }
    // Last resort: swap the lone bead for something smaller, or split a
    // two-bead ring into the smallest ring of all, the triangle.
    if !prog.ring && prog.beads[0] != BeadKind::K11t(0) {
        prog.beads[0] = BeadKind::K11t(0);
    } else if prog.ring && r == 2 {
        prog.beads = vec![BeadKind::K11t(0); 3];
        prog.spikes = vec![0; 3];
    }
}

/// The caterpillar analogue over beads: a spine of `spine_edges` edges
/// where the `i`-th edge is thickened into a triangle when bit `i` of
/// `mask` is set. Spine vertices come first, then one extra vertex per
/// set bit in edge order.
pub fn thick_caterpillar(spine_edges: usize, mask: u64) -> Graph {
    assert!((1..=63).contains(&spine_edges), "spine must have 1..=63 edges");
    let mut edges = Vec::new();
    let mut next = spine_edges + 1;
    for i in 0..spine_edges {
        edges.push((i, i + 1));
        if mask >> i & 1 == 1 {
            edges.push((i, next));
            edges.push((i + 1, next));
            next += 1;
        }
    }
    Graph::new(next, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::verify_certificate;
    use crate::oracle::find_y_subgraph;
    use crate::recognize::parse_strand;

    #[test]
    fn deterministic_per_seed() {
        let params = GenParams::new(17);
        for seed in 0..20 {
            let a = random_certificate(seed, &params).unwrap();
            let b = random_certificate(seed, &params).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn hits_the_requested_size_for_every_family() {
        for seed in 0..40u64 {
            for n in 1..=40usize {
                let base = GenParams::new(n);
                let cases: Vec<GenParams> = vec![
                    base.clone(),
                    base.clone().kind(CertKind::KernelClones),
                    base.clone().kind(CertKind::Strand),
                    base.clone().kind(CertKind::Necklace),
                    base.clone().kind(CertKind::Strand).allow_k4(false),
                ];
                for params in cases {
                    match random_certificate(seed ^ (n as u64) << 8, &params) {
                        Ok(cert) => {
                            assert_eq!(cert.n, n);
                            let g = cert.realize().unwrap();
                            assert_eq!(g.n(), n);
                            assert!(verify_certificate(&cert, &g));
                        }
                        Err(GenError::Infeasible { kind, .. }) => {
                            let floor = match kind {
                                CertKind::KernelClones => 1,
                                CertKind::Strand => 2,
                                CertKind::Necklace => 3,
                            };
                            assert!(n < floor, "spurious infeasible for {kind:?} at n={n}");
                        }
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn realizations_have_no_claw_subdivision() {
        for seed in 100..300u64 {
            let n = 7 + (seed % 20) as usize;
            let cert = random_certificate(seed, &GenParams::new(n)).unwrap();
            let g = cert.realize().unwrap();
            assert!(g.is_connected());
            assert!(find_y_subgraph(&g).is_none(), "seed {seed}: {cert:?}");
        }
    }

    #[test]
    fn thick_caterpillars_are_strands() {
        // One plain spine edge is just an edge; all-thick is a chain of
        // triangles.
        assert_eq!(thick_caterpillar(1, 0), Graph::path(2));
        assert_eq!(thick_caterpillar(1, 1), Graph::complete(3));
        let g = thick_caterpillar(4, 0b1010);
        assert_eq!(g.n(), 5 + 2);
        assert_eq!(g.m(), 4 + 4);
        for spine in 1..=6 {
            for mask in 0..1u64 << spine {
                let g = thick_caterpillar(spine, mask);
                assert!(find_y_subgraph(&g).is_none());
                let cert = parse_strand(&g).expect("thick caterpillars are strands");
                assert!(verify_certificate(&cert, &g));
            }
        }
    }

    #[test]
    fn infeasible_sizes_error() {
        assert!(matches!(
            random_certificate(1, &GenParams::new(1).kind(CertKind::Strand)),
            Err(GenError::Infeasible { .. })
        ));
        assert!(matches!(
            random_certificate(1, &GenParams::new(2).kind(CertKind::Necklace)),
            Err(GenError::Infeasible { .. })
        ));
        assert!(matches!(
            random_certificate(1, &GenParams::new(0)),
            Err(GenError::Infeasible { .. })
        ));
    }
}
