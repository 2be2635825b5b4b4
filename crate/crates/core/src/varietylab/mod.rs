//! Exact linear algebra on flags: Plücker coordinates, membership in tilted
//! Richardson varieties, tilted Schubert cells, Deodhar points and `F_p`
//! point counts.

pub mod count;
pub mod deodhar;
pub mod field;
pub mod matrix;
pub mod membership;
pub mod rothe;

pub use count::{all_flags_fq, count_points_fq};
pub use deodhar::{deodhar_point, deodhar_point_in, is_tnn, sample_deodhar, sample_tnn, tnn_signs, TnnSigns};
pub use field::{rat, Fp, Rational, Scalar};
pub use matrix::ExactMatrix;
pub use membership::{
    in_tilted_richardson, in_tilted_richardson_checked, in_tilted_richardson_plucker, multi_plucker,
    PluckerConditions, RankConditions,
};
pub use rothe::{canonical_cell_matrix, in_tilted_cell, tilted_rothe, tilted_rothe_op, CellKind, RotheDiagram};
