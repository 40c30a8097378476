// Vertex ids double as indices throughout; indexed loops are the
// clearer spelling here.
#![allow(clippy::needless_range_loop)]

//! Graphs with no subdivided claw.
//!
//! The subdivided claw Y is the seven-vertex tree obtained from K_{1,3} by
//! subdividing each edge once: a center of degree three with three legs of
//! length two.  For Y, containment as a subgraph, topological minor and minor
//! coincide, and the connected Y-free graphs admit a complete structural
//! description: either they arise from a graph on at most six vertices by
//! cloning leaves, or they are spiked strands / spiked necklaces built from
//! four kinds of beads (K4, K_{2,1,1}, K_{1,1,t}, K_{2,t}).
//!
//! This crate provides the Y oracle, a recognizer emitting witnesses or
//! machine-checkable structure certificates, generators, exhaustive
//! enumeration with census cross-checks, constructive path decompositions of
//! small width, and brute-force checks for the structural lemmas the
//! characterization rests on.

pub mod cert;
pub mod enumerate;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod pathdecomp;
pub mod prooflab;
pub mod recognize;

pub use cert::{BeadInstance, BeadKind, Certificate, CertificateBody, Violation};
pub use graph::Graph;
pub use oracle::YWitness;
pub use recognize::{recognize, RecognitionResult};
