//! Exact rational cohomology of complete toric surfaces.
//!
//! A complete fan in `Z²` is given by its primitive rays in counterclockwise
//! order. After normalization (ray `n+1` equal to `(1, 0)`), the first `n`
//! ray classes form a basis, and this crate computes two `n × n` matrices
//! exactly: the intersection product matrix of the rational Chow ring, and the
//! cup product matrix of the cellular cochain model. They are mutually
//! inverse.
//!
//! ```
//! use toric_cohomology::{Fan, intersection_matrix, cup_matrix, mat_mul};
//!
//! let fan = Fan::new([(-2, 1), (-2, -1), (1, -2), (1, 0), (0, 1)]).unwrap();
//! let m_int = intersection_matrix(&fan).unwrap();
//! let m_cup = cup_matrix(&fan).unwrap().matrix;
//! assert!(mat_mul(&m_int, &m_cup).unwrap().is_identity());
//! ```

pub mod cellular;
pub mod chow;
pub mod cli;
pub mod duality;
pub mod error;
pub mod fan;
pub mod io;
pub mod lattice;
pub mod matrix;
pub mod polygon;
pub mod random;

pub use cellular::{
    basis_change, cup_matrix, cup_matrix_smooth, cup_matrix_via_kappa, kappa_fan, phi_u, BasisChange, CupMatrix,
};
pub use chow::{
    express_dropped_divisors, intersection_matrix, intersection_number, intersection_table, presentation,
    reduce_quadratic, ChowPresentation, IntersectionTable, LinearForm,
};
pub use duality::{batch_verify, verify_duality, BatchSummary, DualityReport};
pub use error::{Error, Result};
pub use fan::{validate_fan, Fan, Normalized, WallRelation};
pub use lattice::{det2, primitivize, unimodular_to_e1, LatticeVector, UnimodularMap};
pub use matrix::{mat_inverse, mat_mul, Rational, RationalMatrix};
pub use polygon::{normal_fan, Polygon};
pub use random::random_complete_fan;
