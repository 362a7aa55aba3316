//! Closed-form spectra for each supported family and the harness that
//! checks them against brute-force characteristic polynomials.

mod closed;
mod elab;
mod joins;
mod verify;

pub use closed::{
    cf_elab_distance, cf_elab_product, cf_elab_times_cyclic_distance, cf_epg_dicyclic_distance,
    cf_epg_dihedral_distance, cf_epg_gpq_determinant, cf_epg_gpq_distance, cf_join_distance,
    cf_pg_dihedral_distance_rhs,
};
pub use elab::{build_t1, build_t1_t2, build_t2, check_structured_eigenvectors, middle_factor, EigenCheck, ElabParams};
pub use joins::{divisor_graph, join_form, proper_cyclic_join_form};
pub use verify::{
    brute_force_poly, enumerate_cases, verify, verify_sweep, verify_with_limit, SweepFilter, TheoremCase, TheoremId,
    VerificationReport,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{enhanced_power_graph, power_graph, proper_power_graph, Graph, GraphError};
use crate::group::{FiniteGroup, GroupError};
use crate::linalg::LinalgError;
use crate::partition::PartitionError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("HypothesisViolated: {0}")]
    HypothesisViolated(String),
    #[error("PartNotComplete: join part {0} is not a complete graph")]
    PartNotComplete(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    Power,
    Enhanced,
    ProperPower,
}

impl GraphKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Power => "power",
            GraphKind::Enhanced => "enhanced",
            GraphKind::ProperPower => "proper-power",
        }
    }

    pub fn build(self, g: &FiniteGroup) -> Graph {
        match self {
            GraphKind::Power => power_graph(g),
            GraphKind::Enhanced => enhanced_power_graph(g),
            GraphKind::ProperPower => proper_power_graph(g),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatrixKind {
    Adjacency,
    Distance,
}

impl MatrixKind {
    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Distance => "distance",
        }
    }
}
