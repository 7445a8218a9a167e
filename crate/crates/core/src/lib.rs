//! Combinatorics of k-Dirac complexes on isotropic Grassmannians of `so(2m)`.
//!
//! The crate works entirely in exact arithmetic. Weights are vectors of
//! rationals in the epsilon basis, Weyl group elements are signed
//! permutations, and every dimension is an arbitrary-precision integer.
//!
//! Module map:
//!
//! * [`weights`]: root data for `so(2m)`, simple reflections, the affine
//!   action and the three parabolic dominance predicates.
//! * [`weyl`]: signed permutations, lengths, group closure, minimal coset
//!   representatives and Bruhat covers.
//! * [`partitions`]: partitions in the `k x n` box and the map `a -> w_a`.
//! * [`relative_bgg`]: the weights `lambda_a` and the relative BGG graph.
//! * [`direct_images`]: closed-form direct images, a brute-force orbit
//!   search and the Levi dimension formulas.
//! * [`dirac_complex`]: the k-Dirac complex graph, graded jet dimensions and
//!   the first page of the column spectral sequence.
//! * [`cohomology_oracle`]: an independent Euler characteristic computed on
//!   the fiber from the Cauchy decomposition and Bott-Borel-Weil.
//! * [`verify`]: exhaustive check suites shared by the CLI and the tests.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod cohomology_oracle;
pub mod dirac_complex;
pub mod direct_images;
mod error;
pub mod partitions;
pub mod rational;
pub mod relative_bgg;
pub mod verify;
pub mod weights;
pub mod weyl;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use weights::{ParabolicFlavor, RankSplit, Weight};
pub use weyl::WeylElement;
