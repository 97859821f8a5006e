//! Exact certification of centralizer indices in simple Lie algebras.

pub mod algebra;
pub mod appendix;
pub mod bolsinov;
pub mod classical;
pub mod index;
pub mod linalg;
pub mod orbits;
pub mod roots;

pub use algebra::{bracket, centralizer, chevalley_algebra, AlgElement, LieAlgebraTable, Subalgebra};
pub use appendix::{verify_rigid_case, CaseReport, RigidCaseSpec};
pub use bolsinov::{check_criterion, shift_space, CriterionOutcome, ShiftSpace};
pub use classical::{classical_matrix_algebra, MatrixRealization};
pub use index::{certify_elashvili, certify_index, IndexCertificate};
pub use linalg::{Rat, RatMatrix, SubspaceBasis};
pub use orbits::{nilpotent_from_partition, OrbitDescriptor, Partition};
pub use roots::{CartanType, Family, RootSystemInfo};
