//! Canonical orthogonal bases of the simple `H_n`-modules `V(p; 0)`: partitions, generating
//! sequences and tableaux, the `P(p' -> p)` operators, and the checks on the result.

mod basis;
pub mod checks;
mod pmorph;
mod shapes;

pub use basis::{
    all_unit, build_basis, check_evaluation_point, joint_rank, kernel_basis, kernel_dimension_oracle, norms,
    sequence_vector, spans_full_algebra, BasisVector, CanonicalBasis,
};
pub use pmorph::{p_coefficient, p_morphism_apply, p_step, phat_apply};
pub use shapes::{enumerate_sequences, seq_to_tableau, tableau_to_seq, GeneratingSequence, Partition, StandardTableau};
