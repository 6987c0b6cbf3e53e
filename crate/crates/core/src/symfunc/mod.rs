//! Partitions and symmetric-polynomial kernels.
//!
//! Schur polynomials are built two independent ways (Jacobi-Trudi determinant
//! and bialternant quotient) so that each can serve as the other's oracle.

mod lr;
mod partition;
mod poly;
mod schur;

pub use lr::{lr_expand, pieri_h};
pub use partition::{box_partitions, partitions_of, partitions_up_to, Partition};
pub use poly::SparsePoly;
pub use schur::{
    alternant, complete_h, elementary_e, monomials_of_degree, power_sum, power_sum_product,
    schur_alternant, schur_jacobi_trudi, schur_or_zero,
};
