//! Exact spectra of power graphs and enhanced power graphs of finite
//! groups.
//!
//! Groups are built as Cayley tables from named families, their graphs are
//! formed directly from the group operation, and characteristic polynomials
//! are computed over the integers. Closed forms for several families are
//! evaluated symbolically and compared against brute force.

pub mod graph;
pub mod group;
pub mod linalg;
pub mod partition;
pub mod theorem;

pub use graph::{
    diameter, distance_matrix, enhanced_power_graph, graph_join, power_graph, proper_power_graph, verify_join_form,
    Graph, GraphError, JoinSpec,
};
pub use group::{make_group, FiniteGroup, GroupError, GroupFamilySpec};
pub use linalg::{char_poly, determinant, FactoredPoly, IntMatrix, IntPolynomial, LinalgError};
pub use partition::{
    coarsest_equitable_partition, distance_quotient_matrix, family_partition, is_equitable, quotient_matrix,
    FamilyPartition, Partition, PartitionError,
};
pub use theorem::{verify, verify_sweep, GraphKind, MatrixKind, SweepFilter, TheoremCase, TheoremError, TheoremId, VerificationReport};
