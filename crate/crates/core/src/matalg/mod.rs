//! Matrix algebras over `Q` and over quaternion algebras: subalgebras, centralizers,
//! embedded fields and conjugators.

mod embed;
mod matrix;
mod quaternion;
mod subalgebra;

pub use embed::{companion_embedding, descent_cocycle_check, skolem_noether_conjugator, FieldEmbedding};
pub use matrix::{Ambient, MatrixOverB};
pub use quaternion::QuaternionElement;
pub use subalgebra::{centralizer, is_maximal_subfield, verify_double_centralizer, SubalgebraSpec};
