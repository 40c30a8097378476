//! Decide whether a connected graph contains a subdivided claw, and when
//! it does not, produce a structure certificate.
//!
//! The decision goes through three stages. First a direct search for a
//! subdivided-claw subgraph. If none exists, the graph is certified:
//! graphs whose leaf-clone kernel has at most six vertices get a
//! kernel-clones certificate; otherwise the graph must decompose as a
//! spiked strand or a spiked necklace of beads, which the two parsers
//! below recover.

use std::collections::{BTreeMap, BTreeSet};

use crate::cert::{
    BeadInstance, BeadKind, Certificate, CertificateBody, KernelClones, SpikedBeads,
    verify_certificate,
};
use crate::graph::{blocks_and_cutvertices, to_graph6, Graph};
use crate::oracle::{find_y_subgraph, YWitness};

fn nbrs(g: &Graph, v: usize) -> impl Iterator<Item = usize> + '_ {
    g.neighbors(v).iter().map(|&w| w as usize)
}

/// Outcome of [`recognize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecognitionResult {
    /// The graph contains a subdivided claw; here is one.
    ContainsY(YWitness),
    /// The graph contains none; here is a certificate explaining why.
    YFree(Certificate),
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RecognizeError {
    #[error("recognition needs a nonempty graph")]
    Empty,
    #[error("recognition needs a connected graph")]
    NotConnected,
    /// A claw-subdivision-free connected graph that fits no certificate
    /// would contradict the structure theorem; kept as an error so a bug
    /// here surfaces loudly instead of panicking.
    #[error("no certificate found for {0}; this contradicts the structure theorem")]
    Unclassified(String),
}

/// Leaf clone classes: (kernel vertex, host members including the
/// representative), classes of size one omitted.
pub type LeafClasses = Vec<(usize, Vec<usize>)>;

/// Contract pendant clone classes: pendant vertices sharing a neighbour
/// are interchangeable, so keep the smallest one of each class. Returns
/// the kernel, the kernel-to-host vertex map, and the expanded classes.
pub fn contract_leaf_clones(g: &Graph) -> (Graph, Vec<usize>, LeafClasses) {
    let n = g.n();
    let mut class_of: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        if g.degree(v) == 1 {
            class_of.entry(g.neighbors(v)[0] as usize).or_default().push(v);
        }
    }
    let mut drop = vec![false; n];
    for leaves in class_of.values() {
        for &v in &leaves[1..] {
            drop[v] = true;
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| !drop[v]).collect();
    let kernel = g.induced(&kept);
    let host_to_kernel: BTreeMap<usize, usize> =
        kept.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let clones: Vec<(usize, Vec<usize>)> = class_of
        .values()
        .filter(|c| c.len() >= 2)
        .map(|c| (host_to_kernel[&c[0]], c.clone()))
        .collect();
    (kernel, kept, clones)
}

/// Decide and certify. Errors only on empty or disconnected input, or on
/// the (theoretically impossible) failure to certify a claw-free graph.
pub fn recognize(g: &Graph) -> Result<RecognitionResult, RecognizeError> {
    if g.n() == 0 {
        return Err(RecognizeError::Empty);
    }
    if !g.is_connected() {
        return Err(RecognizeError::NotConnected);
    }
    if let Some(w) = find_y_subgraph(g) {
        return Ok(RecognitionResult::ContainsY(w));
    }
    let (kernel, map, clones) = contract_leaf_clones(g);
    if kernel.n() <= 6 {
        let cert = Certificate {
            n: g.n(),
            body: CertificateBody::KernelClones(KernelClones {
                kernel_n: kernel.n(),
                kernel_edges: kernel.edges(),
                map,
                clones,
            }),
        };
        debug_assert!(verify_certificate(&cert, g));
        return Ok(RecognitionResult::YFree(cert));
    }
    if let Some(cert) = parse_strand(g) {
        return Ok(RecognitionResult::YFree(cert));
    }
    if let Some(cert) = parse_necklace(g) {
        return Ok(RecognitionResult::YFree(cert));
    }
    Err(RecognizeError::Unclassified(to_graph6(g)))
}

/// Pendant vertices grouped by their neighbour.
fn pendants(g: &Graph) -> BTreeMap<usize, Vec<usize>> {
    let mut pend: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        if g.degree(v) == 1 {
            pend.entry(g.neighbors(v)[0] as usize).or_default().push(v);
        }
    }
    pend
}

/// Try to read `g` as a spiked strand: a chain of beads glued at cut
/// vertices, pendant spikes allowed at glue vertices only. Pendants at a
/// free chain end extend the chain by an edge bead instead. Returns the
/// certificate on success.
pub fn parse_strand(g: &Graph) -> Option<Certificate> {
    let n = g.n();
    if n < 2 || !g.is_connected() {
        return None;
    }
    let pend = pendants(g);
    let core_vs: Vec<usize> = (0..n).filter(|&v| g.degree(v) != 1).collect();

    if core_vs.is_empty() {
        // Connected with every vertex pendant: a single edge.
        let bead = BeadInstance {
            kind: BeadKind::K11t(0),
            primaries: vec![0, 1],
            secondaries: vec![],
        };
        let cert = Certificate {
            n,
            body: CertificateBody::Strand(SpikedBeads {
                beads: vec![bead],
                spikes: BTreeMap::new(),
            }),
        };
        return verify_certificate(&cert, g).then_some(cert);
    }
    if core_vs.len() == 1 {
        // A star: two pendants become edge beads, the rest spike the hub.
        let c = core_vs[0];
        let ps = pend.get(&c)?.clone();
        if ps.len() < 2 {
            return None;
        }
        let beads = vec![
            BeadInstance {
                kind: BeadKind::K11t(0),
                primaries: vec![ps[0], c],
                secondaries: vec![],
            },
            BeadInstance {
                kind: BeadKind::K11t(0),
                primaries: vec![c, ps[1]],
                secondaries: vec![],
            },
        ];
        let mut spikes = BTreeMap::new();
        if ps.len() > 2 {
            spikes.insert(c, ps[2..].to_vec());
        }
        let cert = Certificate { n, body: CertificateBody::Strand(SpikedBeads { beads, spikes }) };
        return verify_certificate(&cert, g).then_some(cert);
    }

    let core = g.induced(&core_vs);
    if !core.is_connected() {
        return None;
    }
    let host_of = |v: usize| core_vs[v];
    let core_of: BTreeMap<usize, usize> =
        core_vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    // Spiked core vertices, with their host pendants.
    let spiked: BTreeMap<usize, Vec<usize>> =
        pend.iter().map(|(&u, ls)| (core_of[&u], ls.clone())).collect();

    let bd = blocks_and_cutvertices(&core).ok()?;
    let r = bd.blocks.len();
    let is_cut: BTreeSet<usize> = bd.cut_vertices.iter().copied().collect();
    let mut cut_blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut block_cuts: Vec<Vec<usize>> = vec![Vec::new(); r];
    for (bi, bl) in bd.blocks.iter().enumerate() {
        for &v in bl {
            if is_cut.contains(&v) {
                cut_blocks.entry(v).or_default().push(bi);
                block_cuts[bi].push(v);
            }
        }
    }
    if cut_blocks.values().any(|bs| bs.len() != 2) || block_cuts.iter().any(|cs| cs.len() > 2) {
        return None;
    }

    // Arrange the blocks along the chain.
    let (order, glue) = if r == 1 {
        (vec![0], Vec::new())
    } else {
        let ends: Vec<usize> = (0..r).filter(|&b| block_cuts[b].len() == 1).collect();
        if ends.len() != 2 {
            return None;
        }
        let mut order = vec![ends[0]];
        let mut glue = Vec::new();
        let mut prev_cut: Option<usize> = None;
        loop {
            let b = *order.last().unwrap();
            let next_cut = block_cuts[b].iter().copied().find(|&c| Some(c) != prev_cut);
            let Some(c) = next_cut else { break };
            let nb = cut_blocks[&c].iter().copied().find(|&x| x != b)?;
            glue.push(c);
            order.push(nb);
            prev_cut = Some(c);
        }
        if order.len() != r {
            return None;
        }
        (order, glue)
    };

    // Classify each block as a bead whose primaries cover its glue and
    // spiked vertices.
    let mut beads: Vec<BeadInstance> = Vec::with_capacity(r);
    let mut left_end: Option<usize> = None;
    let mut right_end: Option<usize> = None;
    for (i, &b) in order.iter().enumerate() {
        let verts = &bd.blocks[b];
        let mut attach: BTreeSet<usize> = block_cuts[b].iter().copied().collect();
        attach.extend(verts.iter().copied().filter(|v| spiked.contains_key(v)));
        let (kind, prim) = classify_block(&core, verts, &attach)?;
        let left = if i > 0 { Some(glue[i - 1]) } else { None };
        let right = if i + 1 < r { Some(glue[i]) } else { None };
        let primaries: Vec<usize> = if kind == BeadKind::K4 {
            vec![prim[0]]
        } else {
            let other = |not: usize| prim.iter().copied().find(|&p| p != not).unwrap();
            match (left, right) {
                (Some(l), Some(rr)) => vec![l, rr],
                (Some(l), None) => vec![l, other(l)],
                (None, Some(rr)) => vec![other(rr), rr],
                (None, None) => prim.clone(),
            }
        };
        if i == 0 {
            left_end = if kind == BeadKind::K4 { None } else { Some(primaries[0]) };
        }
        if i + 1 == r {
            right_end = if kind == BeadKind::K4 {
                if r == 1 {
                    Some(primaries[0])
                } else {
                    None
                }
            } else {
                Some(primaries[primaries.len() - 1])
            };
        }
        let pset: BTreeSet<usize> = primaries.iter().copied().collect();
        let secondaries: Vec<usize> =
            verts.iter().copied().filter(|v| !pset.contains(v)).collect();
        beads.push(BeadInstance {
            kind,
            primaries: primaries.iter().map(|&v| host_of(v)).collect(),
            secondaries: secondaries.iter().map(|&v| host_of(v)).collect(),
        });
    }
    let mut left_end = left_end.map(host_of);
    let mut right_end = right_end.map(host_of);

    // Reattach pendants: at an interior glue vertex they are spikes, at a
    // free chain end the first pendant extends the chain with an edge
    // bead and the rest spike the now-interior vertex.
    let glue_hosts: BTreeSet<usize> = glue.iter().map(|&c| host_of(c)).collect();
    let mut spikes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (cu, leaves) in &spiked {
        let u = host_of(*cu);
        let mut rest: &[usize] = leaves;
        if !glue_hosts.contains(&u) {
            let first = leaves[0];
            if left_end == Some(u) {
                beads.insert(
                    0,
                    BeadInstance {
                        kind: BeadKind::K11t(0),
                        primaries: vec![first, u],
                        secondaries: vec![],
                    },
                );
                left_end = Some(first);
            } else if right_end == Some(u) {
                beads.push(BeadInstance {
                    kind: BeadKind::K11t(0),
                    primaries: vec![u, first],
                    secondaries: vec![],
                });
                right_end = Some(first);
            } else {
                return None;
            }
            rest = &leaves[1..];
        }
        if !rest.is_empty() {
            spikes.insert(u, rest.to_vec());
        }
    }

    let cert = Certificate { n, body: CertificateBody::Strand(SpikedBeads { beads, spikes }) };
    verify_certificate(&cert, g).then_some(cert)
}

/// Classify a 2-connected block (or bridge) as a bead whose primary set
/// contains `attach`. Returns the kind and a primary pair (single vertex
/// for `K4`), favouring smallest vertices when there is a choice.
fn classify_block(
    core: &Graph,
    verts: &[usize],
    attach: &BTreeSet<usize>,
) -> Option<(BeadKind, Vec<usize>)> {
    let k = verts.len();
    let vset: BTreeSet<usize> = verts.iter().copied().collect();
    let bdeg = |v: usize| nbrs(core, v).filter(|w| vset.contains(w)).count();
    let m: usize = verts.iter().map(|&v| bdeg(v)).sum::<usize>() / 2;
    let fits = |prim: &[usize]| attach.iter().all(|a| prim.contains(a));

    match (k, m) {
        (2, 1) => Some((BeadKind::K11t(0), verts.to_vec())),
        (3, 3) => {
            // Triangle: any two vertices can be the primaries.
            let mut prim: Vec<usize> = attach.iter().copied().collect();
            if prim.len() > 2 {
                return None;
            }
            for &v in verts {
                if prim.len() < 2 && !prim.contains(&v) {
                    prim.push(v);
                }
            }
            prim.sort_unstable();
            Some((BeadKind::K11t(1), prim))
        }
        (4, 6) => {
            if attach.len() > 1 {
                return None;
            }
            let p = attach.iter().next().copied().unwrap_or(verts[0]);
            Some((BeadKind::K4, vec![p]))
        }
        (4, 5) => {
            // Diamond: primaries are either the degree-two pair (as a
            // K_{2,1,1}) or the adjacent degree-three pair (as K_{1,1,2}).
            let low: Vec<usize> = verts.iter().copied().filter(|&v| bdeg(v) == 2).collect();
            let high: Vec<usize> = verts.iter().copied().filter(|&v| bdeg(v) == 3).collect();
            if fits(&low) {
                Some((BeadKind::K211, low))
            } else if fits(&high) {
                Some((BeadKind::K11t(2), high))
            } else {
                None
            }
        }
        (4, 4) => {
            // Four-cycle: primaries are an opposite pair.
            let a = verts[0];
            let opp = verts.iter().copied().find(|&v| v != a && !core.has_edge(a, v))?;
            let pair1 = vec![a.min(opp), a.max(opp)];
            let pair2: Vec<usize> = verts.iter().copied().filter(|v| !pair1.contains(v)).collect();
            if fits(&pair1) {
                Some((BeadKind::K2t(2), pair1))
            } else if fits(&pair2) {
                Some((BeadKind::K2t(2), pair2))
            } else {
                None
            }
        }
        (k, m) if k >= 5 && m == 1 + 2 * (k - 2) => {
            let high: Vec<usize> = verts.iter().copied().filter(|&v| bdeg(v) == k - 1).collect();
            if high.len() == 2
                && core.has_edge(high[0], high[1])
                && verts.iter().all(|&v| high.contains(&v) || bdeg(v) == 2)
                && fits(&high)
            {
                Some((BeadKind::K11t(k - 2), high))
            } else {
                None
            }
        }
        (k, m) if k >= 5 && m == 2 * (k - 2) => {
            let high: Vec<usize> = verts.iter().copied().filter(|&v| bdeg(v) == k - 2).collect();
            let rest_ok = |a: usize, b: usize| {
                verts.iter().all(|&v| {
                    v == a
                        || v == b
                        || (bdeg(v) == 2 && core.has_edge(v, a) && core.has_edge(v, b))
                })
            };
            if high.len() == 2
                && !core.has_edge(high[0], high[1])
                && rest_ok(high[0], high[1])
                && fits(&high)
            {
                Some((BeadKind::K2t(k - 2), high))
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Try to read `g` as a spiked necklace: a ring of beads glued at
/// primaries, every primary in exactly two beads, spikes allowed at any
/// primary, no `K4` beads.
pub fn parse_necklace(g: &Graph) -> Option<Certificate> {
    let n = g.n();
    if n < 3 || !g.is_connected() {
        return None;
    }
    let pend = pendants(g);
    let core_vs: Vec<usize> = (0..n).filter(|&v| g.degree(v) != 1).collect();
    if core_vs.len() < 3 {
        return None;
    }
    let core = g.induced(&core_vs);
    if !core.is_connected() {
        return None;
    }
    let bd = blocks_and_cutvertices(&core).ok()?;
    if bd.blocks.len() != 1 {
        return None;
    }
    let cn = core.n();
    let host_of = |v: usize| core_vs[v];
    let core_of: BTreeMap<usize, usize> =
        core_vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let spiked: BTreeMap<usize, Vec<usize>> =
        pend.iter().map(|(&u, ls)| (core_of[&u], ls.clone())).collect();

    // Beads in core ids: (kind, [primary pair], secondaries).
    let mut beads: Vec<(BeadKind, [usize; 2], Vec<usize>)> = Vec::new();
    let mut secondary = vec![false; cn];
    let mut consumed: BTreeSet<(usize, usize)> = BTreeSet::new();
    let consume = |set: &mut BTreeSet<(usize, usize)>, a: usize, b: usize| -> bool {
        set.insert((a.min(b), a.max(b)))
    };

    if (0..cn).all(|v| core.degree(v) == 2) {
        // Pure ring of edge beads around the single cycle.
        let mut ring = vec![0usize];
        let mut prev = usize::MAX;
        loop {
            let v = *ring.last().unwrap();
            let w = nbrs(&core, v).find(|&w| w != prev)?;
            if w == 0 {
                break;
            }
            prev = v;
            ring.push(w);
        }
        if ring.len() != cn {
            return None;
        }
        for i in 0..cn {
            beads.push((BeadKind::K11t(0), [ring[i], ring[(i + 1) % cn]], vec![]));
        }
        return assemble_necklace(g, n, &beads, &spiked, host_of);
    }

    // Forced K_{2,1,1} beads: adjacent unspiked degree-three pairs with
    // the same two outside neighbours, both of degree at least three.
    for c in 0..cn {
        if core.degree(c) != 3 || spiked.contains_key(&c) || secondary[c] {
            continue;
        }
        for d in nbrs(&core, c).collect::<Vec<_>>() {
            if d <= c || core.degree(d) != 3 || spiked.contains_key(&d) || secondary[d] {
                continue;
            }
            let nc: BTreeSet<usize> = nbrs(&core, c).filter(|&x| x != d).collect();
            let nd: BTreeSet<usize> = nbrs(&core, d).filter(|&x| x != c).collect();
            if nc != nd || nc.len() != 2 {
                continue;
            }
            let uv: Vec<usize> = nc.into_iter().collect();
            if core.degree(uv[0]) < 3 || core.degree(uv[1]) < 3 {
                continue;
            }
            beads.push((BeadKind::K211, [uv[0], uv[1]], vec![c, d]));
            secondary[c] = true;
            secondary[d] = true;
            for &(x, y) in &[(c, d), (c, uv[0]), (c, uv[1]), (d, uv[0]), (d, uv[1])] {
                if !consume(&mut consumed, x, y) {
                    return None;
                }
            }
        }
    }

    // Group the remaining degree-two unspiked vertices whose both
    // neighbours have degree at least three: these are candidate bead
    // secondaries. Degree-two vertices next to another degree-two vertex
    // can only be glue and are left to the edge-bead sweep.
    let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for s in 0..cn {
        if core.degree(s) != 2 || spiked.contains_key(&s) || secondary[s] {
            continue;
        }
        let nb: Vec<usize> = nbrs(&core, s).collect();
        let (a, b) = (nb[0], nb[1]);
        if core.degree(a) >= 3 && core.degree(b) >= 3 {
            groups.entry((a.min(b), a.max(b))).or_default().push(s);
        }
    }
    for ((a, b), mut s) in groups {
        let adjacent = core.has_edge(a, b);
        let extra_a = core.degree(a) - s.len() - adjacent as usize;
        let extra_b = core.degree(b) - s.len() - adjacent as usize;
        if adjacent {
            match (extra_a, extra_b) {
                (0, 0) => {
                    // The core is exactly K_{1,1,t}: read it as an edge
                    // bead plus a K_{2,t} bead, a valid two-bead ring.
                    beads.push((BeadKind::K11t(0), [a, b], vec![]));
                    beads.push((BeadKind::K2t(s.len()), [a, b], s.clone()));
                    if !consume(&mut consumed, a, b) {
                        return None;
                    }
                    for &x in &s {
                        secondary[x] = true;
                        if !consume(&mut consumed, x, a) || !consume(&mut consumed, x, b) {
                            return None;
                        }
                    }
                }
                (x, y) if x >= 1 && y >= 1 => {
                    beads.push((BeadKind::K11t(s.len()), [a, b], s.clone()));
                    if !consume(&mut consumed, a, b) {
                        return None;
                    }
                    for &x in &s {
                        secondary[x] = true;
                        if !consume(&mut consumed, x, a) || !consume(&mut consumed, x, b) {
                            return None;
                        }
                    }
                }
                _ => return None,
            }
        } else {
            match (extra_a, extra_b) {
                (0, 0) => {
                    // The core is exactly K_{2,t}: one secondary becomes
                    // glue between two edge beads, the rest a K_{2,t-1}.
                    s.pop();
                    if s.len() < 2 {
                        return None;
                    }
                    beads.push((BeadKind::K2t(s.len()), [a, b], s.clone()));
                    for &x in &s {
                        secondary[x] = true;
                        if !consume(&mut consumed, x, a) || !consume(&mut consumed, x, b) {
                            return None;
                        }
                    }
                }
                (x, y) if x >= 1 && y >= 1 => {
                    if s.len() >= 2 {
                        beads.push((BeadKind::K2t(s.len()), [a, b], s.clone()));
                        for &x in &s {
                            secondary[x] = true;
                            if !consume(&mut consumed, x, a) || !consume(&mut consumed, x, b) {
                                return None;
                            }
                        }
                    }
                    // A single candidate is glue; leave its edges alone.
                }
                _ => return None,
            }
        }
    }

    // Every unconsumed edge becomes an edge bead between two glue
    // vertices.
    for (x, y) in core.edges() {
        if consumed.contains(&(x, y)) {
            continue;
        }
        if secondary[x] || secondary[y] {
            return None;
        }
        beads.push((BeadKind::K11t(0), [x, y], vec![]));
    }

    assemble_necklace(g, n, &beads, &spiked, host_of)
}

/// Order necklace beads around the ring, translate to host ids, attach
/// spikes and verify.
fn assemble_necklace(
    g: &Graph,
    n: usize,
    beads: &[(BeadKind, [usize; 2], Vec<usize>)],
    spiked: &BTreeMap<usize, Vec<usize>>,
    host_of: impl Fn(usize) -> usize,
) -> Option<Certificate> {
    let r = beads.len();
    if r < 2 {
        return None;
    }
    let mut at: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, (_, prim, _)) in beads.iter().enumerate() {
        at.entry(prim[0]).or_default().push(i);
        at.entry(prim[1]).or_default().push(i);
    }
    if at.values().any(|bs| bs.len() != 2) {
        return None;
    }
    // Spiked vertices must be glue vertices.
    if spiked.keys().any(|u| !at.contains_key(u)) {
        return None;
    }

    // Walk the ring: 2-regular and connected means a single cycle.
    let mut order: Vec<usize> = vec![0];
    let mut entry: Vec<usize> = vec![beads[0].1[0]];
    loop {
        let b = *order.last().unwrap();
        let came_in = *entry.last().unwrap();
        let prim = beads[b].1;
        let out = if prim[0] == came_in { prim[1] } else { prim[0] };
        let next = at[&out].iter().copied().find(|&x| x != b)?;
        if next == 0 && out == beads[0].1[0] {
            break;
        }
        if order.len() > r {
            return None;
        }
        order.push(next);
        entry.push(out);
    }
    if order.len() != r {
        return None;
    }

    let mut instances = Vec::with_capacity(r);
    for (step, &b) in order.iter().enumerate() {
        let came_in = entry[step];
        let prim = beads[b].1;
        let out = if prim[0] == came_in { prim[1] } else { prim[0] };
        instances.push(BeadInstance {
            kind: beads[b].0,
            primaries: vec![host_of(came_in), host_of(out)],
            secondaries: beads[b].2.iter().map(|&v| host_of(v)).collect(),
        });
    }
    let spikes: BTreeMap<usize, Vec<usize>> =
        spiked.iter().map(|(&u, ls)| (host_of(u), ls.clone())).collect();
    let cert = Certificate { n, body: CertificateBody::Necklace(SpikedBeads { beads: instances, spikes }) };
    verify_certificate(&cert, g).then_some(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::verify_certificate_detailed;
    use crate::oracle::has_y_minor_bruteforce;
    use rand::prelude::*;

    fn kind_of(cert: &Certificate) -> &'static str {
        match cert.body {
            CertificateBody::KernelClones(_) => "kernel-clones",
            CertificateBody::Strand(_) => "strand",
            CertificateBody::Necklace(_) => "necklace",
        }
    }

    fn expect_yfree(g: &Graph) -> Certificate {
        match recognize(g).unwrap() {
            RecognitionResult::YFree(c) => {
                assert!(verify_certificate(&c, g), "{:?}", verify_certificate_detailed(&c, g));
                c
            }
            RecognitionResult::ContainsY(w) => panic!("unexpected witness {w:?}"),
        }
    }

    #[test]
    fn contract_leaf_clones_examples() {
        // A star contracts to an edge.
        let (k, map, clones) = contract_leaf_clones(&Graph::complete_bipartite(1, 6));
        assert_eq!(k, Graph::path(2));
        assert_eq!(map, vec![0, 1]);
        assert_eq!(clones, vec![(1, (1..7).collect::<Vec<_>>())]);
        // Both pendants of a three-vertex path share the middle vertex,
        // so they form one class and the kernel is an edge.
        let (k, map, clones) = contract_leaf_clones(&Graph::path(3));
        assert_eq!(k, Graph::path(2));
        assert_eq!(map, vec![0, 1]);
        assert_eq!(clones, vec![(0, vec![0, 2])]);
        // A single edge: two pendants, each the other's neighbour.
        let (k, _, clones) = contract_leaf_clones(&Graph::path(2));
        assert_eq!(k, Graph::path(2));
        assert!(clones.is_empty());
        // The subdivided claw is its own kernel.
        let y = Graph::subdivided_claw();
        let (k, _, _) = contract_leaf_clones(&y);
        assert_eq!(k, y);
    }

    #[test]
    fn recognize_the_claw_subdivision_itself() {
        match recognize(&Graph::subdivided_claw()).unwrap() {
            RecognitionResult::ContainsY(w) => assert!(w.check(&Graph::subdivided_claw())),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn small_graphs_get_kernel_certificates() {
        for g in [
            Graph::path(5),
            Graph::complete(6),
            Graph::complete_bipartite(1, 9),
            Graph::cycle(6),
        ] {
            let c = expect_yfree(&g);
            assert_eq!(kind_of(&c), "kernel-clones");
        }
    }

    #[test]
    fn long_paths_and_caterpillars_are_strands() {
        let c = expect_yfree(&Graph::path(9));
        assert_eq!(kind_of(&c), "strand");

        // Caterpillar: spine of 6 with pendant legs at interior vertices.
        let g = Graph::new(
            9,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 6), (2, 7), (4, 8)],
        )
        .unwrap();
        assert!(g.is_caterpillar());
        let c = expect_yfree(&g);
        assert_eq!(kind_of(&c), "strand");
    }

    #[test]
    fn long_cycles_are_necklaces_of_edge_beads() {
        for n in 7..=12 {
            let c = expect_yfree(&Graph::cycle(n));
            assert_eq!(kind_of(&c), "necklace");
            let CertificateBody::Necklace(sb) = &c.body else { panic!() };
            assert_eq!(sb.beads.len(), n);
            assert!(sb.beads.iter().all(|b| b.kind == BeadKind::K11t(0)));
        }
    }

    #[test]
    fn complete_bipartite_two_row_is_a_strand() {
        // K_{2,7}: a single K_{2,t} bead.
        let g = Graph::complete_bipartite(2, 7);
        let c = expect_yfree(&g);
        assert_eq!(kind_of(&c), "strand");
        let CertificateBody::Strand(sb) = &c.body else { panic!() };
        assert_eq!(sb.beads.len(), 1);
        assert_eq!(sb.beads[0].kind, BeadKind::K2t(7));
    }

    #[test]
    fn pendant_at_bipartite_secondary_needs_the_necklace_reading() {
        // K_{2,5} plus a pendant at one degree-two vertex: the pendant
        // forces its neighbour to be a glue vertex, splitting the block
        // into an edge-edge-K_{2,4} ring.
        let mut edges = Vec::new();
        for s in 2..7 {
            edges.push((0, s));
            edges.push((1, s));
        }
        edges.push((2, 7));
        let g = Graph::new(8, &edges).unwrap();
        let c = expect_yfree(&g);
        assert_eq!(kind_of(&c), "necklace");
    }

    #[test]
    fn pendant_on_k11t_hub_extends_the_chain() {
        // K_{1,1,5} with pendants at one hub: the first pendant becomes
        // an edge bead so the hub turns into an interior glue vertex,
        // and the rest spike it.
        let mut edges = vec![(0, 1)];
        for s in 2..7 {
            edges.push((0, s));
            edges.push((1, s));
        }
        edges.push((0, 7));
        edges.push((0, 8));
        let g = Graph::new(9, &edges).unwrap();
        let c = expect_yfree(&g);
        assert_eq!(kind_of(&c), "strand");
        let CertificateBody::Strand(sb) = &c.body else { panic!() };
        assert_eq!(sb.beads.len(), 2);
        assert!(sb.beads.iter().any(|b| b.kind == BeadKind::K11t(5)));
        assert_eq!(sb.spikes[&0], vec![8]);

        // The two-bead ring reading also exists; check the parser finds
        // it when asked directly.
        let ring = parse_necklace(&g).unwrap();
        assert!(verify_certificate(&ring, &g));
        let CertificateBody::Necklace(nb) = &ring.body else { panic!() };
        assert_eq!(nb.beads.len(), 2);
    }

    #[test]
    fn four_cycle_with_tail_is_a_strand() {
        // C4 with a path of length three hanging off one corner.
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6)]).unwrap();
        let c = expect_yfree(&g);
        assert_eq!(kind_of(&c), "strand");
        let CertificateBody::Strand(sb) = &c.body else { panic!() };
        assert_eq!(sb.beads.len(), 4);
    }

    #[test]
    fn two_k4_blocks_glued_at_a_vertex() {
        let g = Graph::new(
            7,
            &[
                (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                (0, 4), (0, 5), (0, 6), (4, 5), (4, 6), (5, 6),
            ],
        )
        .unwrap();
        let c = expect_yfree(&g);
        assert_eq!(kind_of(&c), "strand");
        let CertificateBody::Strand(sb) = &c.body else { panic!() };
        assert_eq!(sb.beads.len(), 2);
        assert!(sb.beads.iter().all(|b| b.kind == BeadKind::K4));
    }

    #[test]
    fn disconnected_and_empty_inputs_error() {
        assert_eq!(recognize(&Graph::empty(0)), Err(RecognizeError::Empty));
        assert_eq!(recognize(&Graph::empty(2)), Err(RecognizeError::NotConnected));
    }

    #[test]
    fn exhaustive_cross_validation_up_to_six() {
        for n in 1..=6usize {
            let bits = n * n.saturating_sub(1) / 2;
            for mask in 0..1u64 << bits {
                let g = Graph::from_mask(n, mask);
                if !g.is_connected() {
                    continue;
                }
                let oracle = find_y_subgraph(&g);
                match recognize(&g).unwrap() {
                    RecognitionResult::ContainsY(w) => {
                        assert!(oracle.is_some());
                        assert!(w.check(&g));
                    }
                    RecognitionResult::YFree(c) => {
                        assert!(oracle.is_none());
                        assert!(
                            verify_certificate(&c, &g),
                            "n={n} mask={mask}: {:?}",
                            verify_certificate_detailed(&c, &g)
                        );
                    }
                }
            }
        }
    }

    #[test]
    #[ignore = "minutes of work; the acceptance suite covers it"]
    fn exhaustive_cross_validation_n7() {
        use rayon::prelude::*;
        let bad: Vec<String> = (0u64..1 << 21)
            .into_par_iter()
            .filter_map(|mask| {
                let g = Graph::from_mask(7, mask);
                if !g.is_connected() {
                    return None;
                }
                match recognize(&g) {
                    Ok(RecognitionResult::ContainsY(w)) => {
                        (find_y_subgraph(&g).is_none() || !w.check(&g))
                            .then(|| format!("mask {mask}: bad witness"))
                    }
                    Ok(RecognitionResult::YFree(c)) => {
                        (find_y_subgraph(&g).is_some() || !verify_certificate(&c, &g))
                            .then(|| format!("mask {mask}: bad certificate"))
                    }
                    Err(e) => Some(format!("mask {mask}: {e}")),
                }
            })
            .collect();
        assert!(bad.is_empty(), "{} failures, first: {}", bad.len(), bad[0]);
    }

    #[test]
    fn sampled_cross_validation_on_larger_graphs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1009);
        let mut yfree_seen = 0usize;
        for _ in 0..4000 {
            let n = rng.gen_range(7..=9);
            let p = rng.gen_range(0.12..0.5);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            match recognize(&g).unwrap() {
                RecognitionResult::ContainsY(w) => assert!(w.check(&g)),
                RecognitionResult::YFree(c) => {
                    yfree_seen += 1;
                    assert!(find_y_subgraph(&g).is_none());
                    assert!(verify_certificate(&c, &g));
                    assert!(!has_y_minor_bruteforce(&g));
                }
            }
        }
        assert!(yfree_seen > 30, "want a meaningful number of certified graphs, got {yfree_seen}");
    }
}
