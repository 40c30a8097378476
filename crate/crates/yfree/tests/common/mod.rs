//! Shared fixtures: two hand-sized certificates exercising every bead
//! kind, one strand and one necklace.

use yfree::cert::{BeadProgram, CertKind};
use yfree::{BeadKind, Certificate};

/// A 21-vertex spiked strand: K4 at one end, then a diamond, a fat
/// K_{1,1,4}, another diamond, and a bare edge, with five spikes spread
/// over three of the four glue vertices.
pub fn big_strand() -> Certificate {
    let prog = BeadProgram {
        ring: false,
        beads: vec![
            BeadKind::K4,
            BeadKind::K211,
            BeadKind::K11t(4),
            BeadKind::K211,
            BeadKind::K11t(0),
        ],
        spikes: vec![2, 1, 0, 2],
    };
    assert_eq!(prog.vertex_count(), 21);
    prog.allocate().expect("fixture allocates")
}

/// An 18-vertex spiked necklace of four beads with one spike per glue
/// vertex.
pub fn big_necklace() -> Certificate {
    let prog = BeadProgram {
        ring: true,
        beads: vec![
            BeadKind::K11t(2),
            BeadKind::K11t(3),
            BeadKind::K2t(3),
            BeadKind::K211,
        ],
        spikes: vec![1, 1, 1, 1],
    };
    assert_eq!(prog.vertex_count(), 18);
    prog.allocate().expect("fixture allocates")
}

pub fn kind_of(cert: &Certificate) -> CertKind {
    match cert.body {
        yfree::CertificateBody::KernelClones(_) => CertKind::KernelClones,
        yfree::CertificateBody::Strand(_) => CertKind::Strand,
        yfree::CertificateBody::Necklace(_) => CertKind::Necklace,
    }
}
