//! End-to-end checks on the two showcase structures: realize, verify,
//! re-recognize, decompose, and run the longest-path lemma suite.

mod common;

use common::{big_necklace, big_strand, kind_of};
use yfree::cert::{verify_certificate, CertKind};
use yfree::oracle::find_y_subgraph;
use yfree::pathdecomp::{decompose, verify_decomposition};
use yfree::prooflab::check_structural_lemmas;
use yfree::{recognize, Certificate, RecognitionResult};

fn roundtrip(cert: &Certificate, expect_kind: CertKind, expect_width_max: usize) {
    let g = cert.realize().expect("fixture realizes");
    assert_eq!(g.n(), cert.n);
    assert!(g.is_connected());
    assert!(verify_certificate(cert, &g));
    assert!(find_y_subgraph(&g).is_none(), "fixture must be Y-free");

    // Recognition returns a certificate for the same labeled graph.
    let back = match recognize(&g).expect("connected") {
        RecognitionResult::YFree(c) => c,
        RecognitionResult::ContainsY(w) => panic!("spurious witness {w:?}"),
    };
    assert_eq!(kind_of(&back), expect_kind);
    assert!(verify_certificate(&back, &g));
    assert_eq!(back.realize().unwrap(), g);

    // JSON round trip preserves the certificate exactly.
    assert_eq!(Certificate::from_json(&cert.to_json()).unwrap(), *cert);

    let pd = decompose(cert).expect("fixture decomposes");
    let width = verify_decomposition(&g, &pd).expect("decomposition verifies");
    assert!(width <= expect_width_max, "width {width} > {expect_width_max}");

    let report = check_structural_lemmas(&g).expect("lemma checks run");
    assert!(report.all_pass(), "failed checks: {:?}", report.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
}

#[test]
fn strand_fixture_roundtrips() {
    let cert = big_strand();
    assert_eq!(cert.n, 21);
    // The strand opens with a K4 bead, so its decomposition needs
    // width 3.
    roundtrip(&cert, CertKind::Strand, 3);
    let pd = decompose(&cert).unwrap();
    assert_eq!(pd.width(), 3);
}

#[test]
fn necklace_fixture_roundtrips() {
    let cert = big_necklace();
    assert_eq!(cert.n, 18);
    roundtrip(&cert, CertKind::Necklace, 3);
}

#[test]
fn fixtures_survive_vertex_relabeling() {
    // Reversing the vertex order must not change the verdict or the
    // certificate family.
    for (cert, kind) in [(big_strand(), CertKind::Strand), (big_necklace(), CertKind::Necklace)] {
        let g = cert.realize().unwrap();
        let n = g.n();
        let edges: Vec<(usize, usize)> =
            g.edges().iter().map(|&(u, v)| (n - 1 - u, n - 1 - v)).collect();
        let h = yfree::Graph::new(n, &edges).unwrap();
        assert!(find_y_subgraph(&h).is_none());
        match recognize(&h).unwrap() {
            RecognitionResult::YFree(c) => {
                assert_eq!(kind_of(&c), kind);
                assert!(verify_certificate(&c, &h));
            }
            RecognitionResult::ContainsY(w) => panic!("spurious witness {w:?}"),
        }
    }
}

#[test]
fn corrupting_a_fixture_is_detected() {
    let cert = big_strand();
    let g = cert.realize().unwrap();

    // Adding any edge between two spike leaves creates a graph the
    // certificate no longer describes.
    let mut edges = g.edges();
    let spikes: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
    assert!(spikes.len() >= 2);
    edges.push((spikes[0], spikes[1]));
    let h = yfree::Graph::new(g.n(), &edges).unwrap();
    assert!(!verify_certificate(&cert, &h));

    // Dropping a vertex breaks it too.
    let h = g.induced(&(0..g.n() - 1).collect::<Vec<_>>());
    assert!(!verify_certificate(&cert, &h));
}
