//! Quantum Bruhat graphs, tilted Bruhat orders and tilted Richardson varieties.
//!
//! The crate is organised bottom-up:
//!
//! * [`permcore`]: permutations, cyclic intervals, shifted Gale orders, Bruhat order.
//! * [`qbgraph`]: the quantum Bruhat graph, shortest paths, minimal degrees, tilted intervals.
//! * [`tiltorder`]: the `a`-tilted orders, covers, `a`-length, witnesses, `k`-tilted order.
//! * [`tiltwords`]: flattening, tilted reduced words and their distinguished subwords.
//! * [`rpolyhecke`]: polynomials, the Hecke algebra and the three tilted R-polynomial routes.
//! * [`varietylab`]: exact matrices, Plücker coordinates, variety membership, Deodhar points, point counts.
//! * [`quantumschub`]: Schubert and path Schubert polynomials, Gromov-Witten coefficients.

pub mod error;
pub mod permcore;
pub mod qbgraph;
pub mod tiltorder;
pub mod tiltwords;
pub mod rpolyhecke;
pub mod varietylab;
pub mod quantumschub;

pub use error::{Error, Result};
pub use permcore::{Perm, Subset};
pub use qbgraph::{DegreeVec, QbgEdge, TiltedInterval};
pub use tiltorder::SeqA;
pub use tiltwords::{Subword, TiltedWord};
pub use rpolyhecke::{HeckeElt, LaurentPoly, QPoly};
pub use varietylab::{ExactMatrix, Fp, Rational, RotheDiagram};
pub use quantumschub::{MultiPoly, SchubertExpansion};
