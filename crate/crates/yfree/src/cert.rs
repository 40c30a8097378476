//! Structure certificates.
//!
//! A certificate is a machine-checkable description of a connected graph
//! that implies the graph has no subdivided claw. There are three kinds:
//!
//! * `kernel-clones`: the graph is obtained from a kernel on at most six
//!   vertices by cloning leaves (adding extra pendant vertices next to an
//!   existing pendant vertex).
//! * `strand`: a chain of beads glued at shared primary vertices, with
//!   optional pendant spikes at the interior glue points.
//! * `necklace`: a ring of beads glued the same way, with optional spikes
//!   at any glue point.
//!
//! Beads are the complete graph `K4`, the complete tripartite graphs
//! `K_{2,1,1}` (the diamond) and `K_{1,1,t}`, and the complete bipartite
//! graph `K_{2,t}`. Each bead designates one or two primary vertices where
//! it may be glued to its neighbours; the remaining vertices are
//! secondaries private to the bead.
//!
//! [`Certificate::realize`] rebuilds the labeled graph a certificate
//! describes, and [`verify_certificate`] checks a certificate against a
//! host graph from scratch, so a verifier needs no trust in the code that
//! produced the certificate.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};

/// The kinds of bead a strand or necklace may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BeadKind {
    /// Complete graph on four vertices; one primary, three secondaries.
    /// Only allowed at the ends of a strand.
    K4,
    /// The diamond `K_{2,1,1}`: the two nonadjacent degree-two vertices
    /// are the primaries, the two adjacent vertices the secondaries.
    K211,
    /// `K_{1,1,t}` for `t >= 0`: two adjacent primaries plus `t`
    /// independent secondaries joined to both. `t = 0` is a single edge,
    /// `t = 1` a triangle.
    K11t(usize),
    /// `K_{2,t}` for `t >= 2`: two nonadjacent primaries plus `t`
    /// independent secondaries joined to both. `t = 2` is a four-cycle.
    K2t(usize),
}

impl BeadKind {
    pub fn primary_count(self) -> usize {
        match self {
            BeadKind::K4 => 1,
            _ => 2,
        }
    }

    pub fn secondary_count(self) -> usize {
        match self {
            BeadKind::K4 => 3,
            BeadKind::K211 => 2,
            BeadKind::K11t(t) | BeadKind::K2t(t) => t,
        }
    }

    pub fn vertex_count(self) -> usize {
        self.primary_count() + self.secondary_count()
    }

    /// Whether the bead contains an edge joining its two primaries.
    pub fn joins_primaries(self) -> bool {
        matches!(self, BeadKind::K11t(_))
    }
}

impl fmt::Display for BeadKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BeadKind::K4 => write!(f, "K4"),
            BeadKind::K211 => write!(f, "K211"),
            BeadKind::K11t(t) => write!(f, "K11t({t})"),
            BeadKind::K2t(t) => write!(f, "K2t({t})"),
        }
    }
}

/// A bead placed on concrete vertices of the host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeadInstance {
    pub kind: BeadKind,
    pub primaries: Vec<usize>,
    pub secondaries: Vec<usize>,
}

impl BeadInstance {
    /// The edges this bead contributes, as unordered pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let p = &self.primaries;
        let s = &self.secondaries;
        let mut out = Vec::new();
        match self.kind {
            BeadKind::K4 => {
                let all = [p[0], s[0], s[1], s[2]];
                for i in 0..4 {
                    for j in i + 1..4 {
                        out.push((all[i], all[j]));
                    }
                }
            }
            BeadKind::K211 => {
                out.push((s[0], s[1]));
                for &a in p {
                    out.push((a, s[0]));
                    out.push((a, s[1]));
                }
            }
            BeadKind::K11t(_) => {
                out.push((p[0], p[1]));
                for &x in s {
                    out.push((p[0], x));
                    out.push((p[1], x));
                }
            }
            BeadKind::K2t(_) => {
                for &x in s {
                    out.push((p[0], x));
                    out.push((p[1], x));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.primaries.iter().chain(self.secondaries.iter()).copied()
    }
}

/// Kernel-with-clones description: a kernel graph on at most six
/// vertices, an embedding of the kernel into the host, and for some
/// degree-one kernel vertices the full set of host pendants they stand
/// for (the representative included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelClones {
    pub kernel_n: usize,
    pub kernel_edges: Vec<(usize, usize)>,
    /// Host vertex for each kernel vertex.
    pub map: Vec<usize>,
    /// `(kernel vertex, host members)` for each expanded pendant class.
    pub clones: Vec<(usize, Vec<usize>)>,
}

/// Beads plus spikes, shared by strands and necklaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpikedBeads {
    pub beads: Vec<BeadInstance>,
    /// Pendant leaves attached at a glue vertex.
    pub spikes: BTreeMap<usize, Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateBody {
    KernelClones(KernelClones),
    Strand(SpikedBeads),
    Necklace(SpikedBeads),
}

/// A structure certificate for a graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub n: usize,
    pub body: CertificateBody,
}

/// One reason a certificate is malformed or does not match its host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub tag: &'static str,
    pub detail: String,
}

impl Violation {
    pub fn new(tag: &'static str, detail: impl Into<String>) -> Self {
        Violation { tag, detail: detail.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.tag, self.detail)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CertError {
    #[error("invalid certificate: {0}")]
    Invalid(String),
    #[error("certificate does not describe a simple graph: {0}")]
    Graph(#[from] GraphError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Certificate {
    /// Structural checks that do not need the host graph. Returns every
    /// violation found; an empty list means well formed.
    pub fn validate(&self) -> Vec<Violation> {
        match &self.body {
            CertificateBody::KernelClones(k) => validate_kernel(self.n, k),
            CertificateBody::Strand(sb) => validate_beads(self.n, sb, false),
            CertificateBody::Necklace(sb) => validate_beads(self.n, sb, true),
        }
    }

    /// Build the labeled graph the certificate describes.
    pub fn realize(&self) -> Result<Graph, CertError> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(CertError::Invalid(join_violations(&violations)));
        }
        let mut edges = Vec::new();
        match &self.body {
            CertificateBody::KernelClones(k) => {
                let cloned: BTreeMap<usize, &Vec<usize>> =
                    k.clones.iter().map(|(v, c)| (*v, c)).collect();
                for &(i, j) in &k.kernel_edges {
                    match (cloned.get(&i), cloned.get(&j)) {
                        (None, None) => edges.push((k.map[i], k.map[j])),
                        (Some(ci), None) => edges.extend(ci.iter().map(|&a| (a, k.map[j]))),
                        (None, Some(cj)) => edges.extend(cj.iter().map(|&b| (k.map[i], b))),
                        (Some(_), Some(_)) => unreachable!("rejected by validate"),
                    }
                }
            }
            CertificateBody::Strand(sb) | CertificateBody::Necklace(sb) => {
                for bead in &sb.beads {
                    edges.extend(bead.edges());
                }
                for (&v, leaves) in &sb.spikes {
                    edges.extend(leaves.iter().map(|&l| (v, l)));
                }
            }
        }
        Ok(Graph::new(self.n, &edges)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&CertDto::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Certificate, CertError> {
        let dto: CertDto = serde_json::from_str(text)?;
        dto.into_certificate()
    }
}

/// Check a certificate against a host graph. Returns every violation;
/// empty means the certificate is well formed and describes exactly `g`
/// (same labels), and `g` is connected.
pub fn verify_certificate_detailed(cert: &Certificate, g: &Graph) -> Vec<Violation> {
    let mut out = cert.validate();
    if !out.is_empty() {
        return out;
    }
    if cert.n != g.n() {
        out.push(Violation::new(
            "size-mismatch",
            format!("certificate says {} vertices, graph has {}", cert.n, g.n()),
        ));
        return out;
    }
    match cert.realize() {
        Ok(h) => {
            if &h != g {
                out.push(Violation::new("graph-mismatch", "realized graph differs from host"));
            }
        }
        Err(e) => out.push(Violation::new("not-simple", e.to_string())),
    }
    if !g.is_connected() {
        out.push(Violation::new("disconnected", "host graph is not connected"));
    }
    out
}

/// Convenience wrapper: true when [`verify_certificate_detailed`] finds
/// nothing wrong.
pub fn verify_certificate(cert: &Certificate, g: &Graph) -> bool {
    verify_certificate_detailed(cert, g).is_empty()
}

fn validate_kernel(n: usize, k: &KernelClones) -> Vec<Violation> {
    let mut out = Vec::new();
    let kn = k.kernel_n;
    if kn == 0 || kn > 6 {
        out.push(Violation::new("kernel-size", format!("kernel has {kn} vertices, need 1..=6")));
        return out;
    }
    let kernel = match Graph::new(kn, &k.kernel_edges) {
        Ok(g) => g,
        Err(e) => {
            out.push(Violation::new("bad-kernel-edge", e.to_string()));
            return out;
        }
    };
    if !kernel.is_connected() {
        out.push(Violation::new("kernel-disconnected", "kernel must be connected"));
    }
    if k.map.len() != kn {
        out.push(Violation::new(
            "bad-map",
            format!("map has {} entries for a kernel on {kn} vertices", k.map.len()),
        ));
        return out;
    }
    // Host coverage: uncloned kernel vertices map one to one, cloned ones
    // contribute their whole pendant class (which contains the image).
    let mut seen = vec![0usize; n];
    let mut oob = false;
    let mut cover = |v: usize| {
        if v < n {
            seen[v] += 1;
        } else {
            oob = true;
        }
    };
    let mut cloned = vec![false; kn];
    for (v, class) in &k.clones {
        if *v >= kn {
            out.push(Violation::new("bad-clone", format!("kernel vertex {v} out of range")));
            return out;
        }
        if cloned[*v] {
            out.push(Violation::new("bad-clone", format!("kernel vertex {v} listed twice")));
        }
        cloned[*v] = true;
        if kernel.degree(*v) != 1 {
            out.push(Violation::new(
                "clone-of-nonleaf",
                format!("kernel vertex {v} has degree {}, clones need degree 1", kernel.degree(*v)),
            ));
        }
        if class.is_empty() {
            out.push(Violation::new("bad-clone", format!("class at {v} is empty")));
        }
        if !class.contains(&k.map[*v]) {
            out.push(Violation::new(
                "clone-missing-rep",
                format!("class at {v} omits the mapped host vertex {}", k.map[*v]),
            ));
        }
        for &c in class {
            cover(c);
        }
    }
    for &(i, j) in &k.kernel_edges {
        if cloned[i] && cloned[j] {
            out.push(Violation::new(
                "clone-class-adjacent",
                format!("kernel edge {i}-{j} joins two cloned vertices"),
            ));
        }
    }
    for v in 0..kn {
        if !cloned[v] {
            cover(k.map[v]);
        }
    }
    if oob {
        out.push(Violation::new("coverage", format!("host vertex id out of range 0..{n}")));
    }
    if let Some(v) = seen.iter().position(|&c| c != 1) {
        let c = seen[v];
        out.push(Violation::new(
            "coverage",
            format!("host vertex {v} covered {c} times, expected exactly once"),
        ));
    }
    out
}

fn validate_beads(n: usize, sb: &SpikedBeads, ring: bool) -> Vec<Violation> {
    let mut out = Vec::new();
    let r = sb.beads.len();
    if r == 0 {
        out.push(Violation::new("empty", "certificate has no beads"));
        return out;
    }
    if ring && r < 2 {
        out.push(Violation::new("bad-ring", "a necklace needs at least two beads"));
        return out;
    }
    for (i, b) in sb.beads.iter().enumerate() {
        if let BeadKind::K2t(t) = b.kind {
            if t < 2 {
                out.push(Violation::new("bad-t", format!("bead {i}: K2t needs t >= 2, got {t}")));
            }
        }
        if b.primaries.len() != b.kind.primary_count()
            || b.secondaries.len() != b.kind.secondary_count()
        {
            out.push(Violation::new(
                "bead-arity",
                format!(
                    "bead {i} ({}) has {} primaries and {} secondaries",
                    b.kind,
                    b.primaries.len(),
                    b.secondaries.len()
                ),
            ));
        }
        if b.kind == BeadKind::K4 {
            if ring {
                out.push(Violation::new("K4-in-necklace", format!("bead {i} is a K4")));
            } else if i != 0 && i != r - 1 {
                out.push(Violation::new("K4-interior", format!("bead {i} is an interior K4")));
            }
        }
    }
    if !out.is_empty() {
        return out;
    }

    // Occurrence bookkeeping over bead vertices.
    let mut primary_beads: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut secondary_seen: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, b) in sb.beads.iter().enumerate() {
        for &p in &b.primaries {
            primary_beads.entry(p).or_default().push(i);
        }
        for &s in &b.secondaries {
            *secondary_seen.entry(s).or_default() += 1;
        }
    }
    for (&s, &count) in &secondary_seen {
        if count > 1 || primary_beads.contains_key(&s) {
            out.push(Violation::new(
                "secondary-shared",
                format!("vertex {s} is a secondary of more than one role"),
            ));
        }
    }
    for (&p, beads) in &primary_beads {
        let limit = 2;
        if beads.len() > limit {
            out.push(Violation::new(
                "primary-overuse",
                format!("primary {p} appears in {} beads", beads.len()),
            ));
        }
        if ring && beads.len() != 2 {
            out.push(Violation::new(
                "bad-ring",
                format!("primary {p} must lie in exactly two beads of a necklace"),
            ));
        }
    }
    if !out.is_empty() {
        return out;
    }

    // Chain or ring shape: consecutive beads share exactly one primary
    // (for a two-bead necklace, both of them), others share nothing.
    let shared = |i: usize, j: usize| -> Vec<usize> {
        sb.beads[i]
            .primaries
            .iter()
            .filter(|p| sb.beads[j].primaries.contains(p))
            .copied()
            .collect()
    };
    let pairs: Vec<(usize, usize)> = if ring {
        (0..r).map(|i| (i, (i + 1) % r)).collect()
    } else {
        (0..r.saturating_sub(1)).map(|i| (i, i + 1)).collect()
    };
    if ring && r == 2 {
        if shared(0, 1).len() != 2 {
            out.push(Violation::new("bad-ring", "two-bead necklace must share both primaries"));
        }
        if sb.beads[0].kind.joins_primaries() && sb.beads[1].kind.joins_primaries() {
            out.push(Violation::new(
                "two-K11-necklace",
                "both beads of a two-bead necklace join the shared primaries",
            ));
        }
    } else {
        for (i, j) in pairs {
            let s = shared(i, j);
            if s.len() != 1 {
                out.push(Violation::new(
                    if ring { "bad-ring" } else { "bad-chain" },
                    format!("beads {i} and {j} share {} primaries, expected 1", s.len()),
                ));
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                let adjacent = j == i + 1 || (ring && i == 0 && j == r - 1);
                if !adjacent && !shared(i, j).is_empty() {
                    out.push(Violation::new(
                        if ring { "bad-ring" } else { "bad-chain" },
                        format!("non-adjacent beads {i} and {j} share a primary"),
                    ));
                }
            }
        }
    }
    if !ring {
        // A K4 end bead has one primary and it must be the glue vertex.
        for (i, b) in sb.beads.iter().enumerate() {
            if b.kind == BeadKind::K4 && r >= 2 {
                let neighbour = if i == 0 { 1 } else { r - 2 };
                if !shared(i, neighbour).contains(&b.primaries[0]) {
                    out.push(Violation::new(
                        "bad-chain",
                        format!("K4 bead {i} is not glued to its neighbour"),
                    ));
                }
            }
        }
    }
    if !out.is_empty() {
        return out;
    }

    // Spikes: only at glue vertices lying in exactly two beads.
    let mut spike_leaves: Vec<usize> = Vec::new();
    for (&v, leaves) in &sb.spikes {
        match primary_beads.get(&v) {
            Some(b) if b.len() == 2 => {}
            Some(_) => out.push(Violation::new(
                "spike-at-end-primary",
                format!("vertex {v} lies in only one bead"),
            )),
            None => out.push(Violation::new(
                "spike-at-nonprimary",
                format!("vertex {v} is not a primary"),
            )),
        }
        if leaves.is_empty() {
            out.push(Violation::new("empty-spike", format!("no leaves listed at {v}")));
        }
        spike_leaves.extend(leaves.iter().copied());
    }

    // Coverage: primaries, secondaries and spike leaves partition 0..n.
    let mut seen = vec![0usize; n];
    let mut oob = false;
    for v in primary_beads
        .keys()
        .copied()
        .chain(secondary_seen.keys().copied())
        .chain(spike_leaves.iter().copied())
    {
        if v < n {
            seen[v] += 1;
        } else {
            oob = true;
        }
    }
    if oob {
        out.push(Violation::new("coverage", format!("vertex id out of range 0..{n}")));
    }
    if let Some(v) = seen.iter().position(|&c| c != 1) {
        let c = seen[v];
        out.push(Violation::new(
            "coverage",
            format!("vertex {v} covered {c} times, expected exactly once"),
        ));
    }
    out
}

/// Which certificate family to target, for generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertKind {
    KernelClones,
    Strand,
    Necklace,
}

/// An abstract bead layout with no vertex ids yet: the bead kinds in
/// chain or ring order plus the number of spike leaves at each glue
/// vertex. [`BeadProgram::allocate`] assigns concrete ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeadProgram {
    pub ring: bool,
    pub beads: Vec<BeadKind>,
    /// Strand: one entry per interior glue vertex (`beads.len() - 1`).
    /// Necklace: one entry per glue vertex (`beads.len()`).
    pub spikes: Vec<usize>,
}

impl BeadProgram {
    pub fn glue_count(&self) -> usize {
        if self.ring {
            self.beads.len()
        } else {
            self.beads.len().saturating_sub(1)
        }
    }

    pub fn vertex_count(&self) -> usize {
        let r = self.beads.len();
        let secondaries: usize = self.beads.iter().map(|b| b.secondary_count()).sum();
        let spikes: usize = self.spikes.iter().sum();
        let primaries = if self.ring {
            r
        } else if r == 1 {
            self.beads[0].primary_count()
        } else {
            // interior glue vertices plus a free outer primary per
            // non-K4 end bead
            let mut p = r - 1;
            if self.beads[0] != BeadKind::K4 {
                p += 1;
            }
            if self.beads[r - 1] != BeadKind::K4 {
                p += 1;
            }
            p
        };
        primaries + secondaries + spikes
    }

    /// Assign vertex ids: glue chain first (including free outer
    /// primaries), then secondaries bead by bead, then spike leaves in
    /// glue order.
    pub fn allocate(&self) -> Result<Certificate, CertError> {
        let r = self.beads.len();
        if r == 0 {
            return Err(CertError::Invalid("no beads".into()));
        }
        if self.spikes.len() != self.glue_count() {
            return Err(CertError::Invalid(format!(
                "expected {} spike counts, got {}",
                self.glue_count(),
                self.spikes.len()
            )));
        }
        let mut next = 0usize;
        let mut fresh = |k: usize| {
            let ids: Vec<usize> = (next..next + k).collect();
            next += k;
            ids
        };

        let mut bead_primaries: Vec<Vec<usize>> = Vec::with_capacity(r);
        let glue: Vec<usize>;
        if self.ring {
            glue = fresh(r);
            for i in 0..r {
                bead_primaries.push(vec![glue[i], glue[(i + 1) % r]]);
            }
        } else if r == 1 {
            let ids = fresh(self.beads[0].primary_count());
            glue = Vec::new();
            bead_primaries.push(ids);
        } else {
            let left_free = self.beads[0] != BeadKind::K4;
            let right_free = self.beads[r - 1] != BeadKind::K4;
            let chain = fresh((r - 1) + left_free as usize + right_free as usize);
            let offset = left_free as usize;
            glue = chain[offset..offset + r - 1].to_vec();
            for i in 0..r {
                let mut p = Vec::new();
                if i == 0 {
                    if left_free {
                        p.push(chain[0]);
                    }
                    p.push(glue[0]);
                } else if i == r - 1 {
                    p.push(glue[r - 2]);
                    if right_free {
                        p.push(chain[chain.len() - 1]);
                    }
                } else {
                    p.push(glue[i - 1]);
                    p.push(glue[i]);
                }
                bead_primaries.push(p);
            }
        }

        let mut beads = Vec::with_capacity(r);
        for (i, &kind) in self.beads.iter().enumerate() {
            let secondaries = fresh(kind.secondary_count());
            beads.push(BeadInstance { kind, primaries: bead_primaries[i].clone(), secondaries });
        }
        let mut spikes = BTreeMap::new();
        for (i, &count) in self.spikes.iter().enumerate() {
            if count > 0 {
                spikes.insert(glue[i], fresh(count));
            }
        }
        let body = SpikedBeads { beads, spikes };
        let cert = Certificate {
            n: next,
            body: if self.ring {
                CertificateBody::Necklace(body)
            } else {
                CertificateBody::Strand(body)
            },
        };
        let violations = cert.validate();
        if !violations.is_empty() {
            return Err(CertError::Invalid(join_violations(&violations)));
        }
        Ok(cert)
    }
}

fn join_violations(violations: &[Violation]) -> String {
    violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

// JSON layer. The wire format keeps a `type` discriminator and spells
// bead kinds as `kind` plus an optional `t`.

#[derive(Serialize, Deserialize)]
struct BeadDto {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<usize>,
    primaries: Vec<usize>,
    secondaries: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct CloneDto {
    at: usize,
    members: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct KernelDto {
    n: usize,
    edges: Vec<(usize, usize)>,
    map: Vec<usize>,
    clones: Vec<CloneDto>,
}

#[derive(Serialize, Deserialize)]
struct CertDto {
    #[serde(rename = "type")]
    kind: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    beads: Option<Vec<BeadDto>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spikes: Option<BTreeMap<usize, Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kernel: Option<KernelDto>,
}

impl From<&Certificate> for CertDto {
    fn from(cert: &Certificate) -> Self {
        match &cert.body {
            CertificateBody::KernelClones(k) => CertDto {
                kind: "kernel-clones".into(),
                n: cert.n,
                beads: None,
                spikes: None,
                kernel: Some(KernelDto {
                    n: k.kernel_n,
                    edges: k.kernel_edges.clone(),
                    map: k.map.clone(),
                    clones: k
                        .clones
                        .iter()
                        .map(|(at, members)| CloneDto { at: *at, members: members.clone() })
                        .collect(),
                }),
            },
            CertificateBody::Strand(sb) | CertificateBody::Necklace(sb) => CertDto {
                kind: if matches!(cert.body, CertificateBody::Strand(_)) {
                    "strand".into()
                } else {
                    "necklace".into()
                },
                n: cert.n,
                beads: Some(
                    sb.beads
                        .iter()
                        .map(|b| BeadDto {
                            kind: match b.kind {
                                BeadKind::K4 => "K4".into(),
                                BeadKind::K211 => "K211".into(),
                                BeadKind::K11t(_) => "K11t".into(),
                                BeadKind::K2t(_) => "K2t".into(),
                            },
                            t: match b.kind {
                                BeadKind::K11t(t) | BeadKind::K2t(t) => Some(t),
                                _ => None,
                            },
                            primaries: b.primaries.clone(),
                            secondaries: b.secondaries.clone(),
                        })
                        .collect(),
                ),
                spikes: Some(sb.spikes.clone()),
                kernel: None,
            },
        }
    }
}

impl CertDto {
    fn into_certificate(self) -> Result<Certificate, CertError> {
        let body = match self.kind.as_str() {
            "kernel-clones" => {
                let k = self
                    .kernel
                    .ok_or_else(|| CertError::Invalid("kernel-clones without kernel".into()))?;
                CertificateBody::KernelClones(KernelClones {
                    kernel_n: k.n,
                    kernel_edges: k.edges,
                    map: k.map,
                    clones: k.clones.into_iter().map(|c| (c.at, c.members)).collect(),
                })
            }
            "strand" | "necklace" => {
                let beads = self
                    .beads
                    .ok_or_else(|| CertError::Invalid("bead certificate without beads".into()))?;
                let mut instances = Vec::with_capacity(beads.len());
                for b in beads {
                    let kind = match (b.kind.as_str(), b.t) {
                        ("K4", None) => BeadKind::K4,
                        ("K211", None) => BeadKind::K211,
                        ("K11t", Some(t)) => BeadKind::K11t(t),
                        ("K2t", Some(t)) => BeadKind::K2t(t),
                        (other, t) => {
                            return Err(CertError::Invalid(format!(
                                "unknown bead kind {other:?} with t {t:?}"
                            )))
                        }
                    };
                    instances.push(BeadInstance {
                        kind,
                        primaries: b.primaries,
                        secondaries: b.secondaries,
                    });
                }
                let sb = SpikedBeads { beads: instances, spikes: self.spikes.unwrap_or_default() };
                if self.kind == "strand" {
                    CertificateBody::Strand(sb)
                } else {
                    CertificateBody::Necklace(sb)
                }
            }
            other => return Err(CertError::Invalid(format!("unknown certificate type {other:?}"))),
        };
        Ok(Certificate { n: self.n, body })
    }
}
