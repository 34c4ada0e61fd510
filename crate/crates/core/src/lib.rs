//! Induced 2-regular subgraphs of graphs.
//!
//! The crate computes and certifies the induced cycle number `c_ind(G)`, the
//! largest order of an induced subgraph in which every vertex has degree two:
//!
//! * [`exact`]: branch-and-bound solver plus a brute-force oracle,
//! * [`greedy`]: the shortest-cycle greedy lower bound with exact rational
//!   bound arithmetic,
//! * [`clawfree`]: the constructive `> 13n/20` algorithm for claw-free cubic
//!   graphs,
//! * [`hardness`]: the independent-set gadget reduction,
//! * [`matching`]: blossom matching and forced/forbidden perfect matchings,
//! * [`families`]: generators for the graph families used throughout.
//!
//! Every answer is returned as a [`TwoRegularCertificate`] that can be
//! re-checked against the input with [`TwoRegularCertificate::verify`].

pub mod bench;
pub mod certificate;
pub mod clawfree;
pub mod exact;
pub mod families;
pub mod graph;
pub mod greedy;
pub mod hardness;
pub mod matching;

pub use certificate::{is_two_regular_induced, CertificateError, TwoRegularCertificate};
pub use graph::{Graph, Multigraph};
