//! Algebra of central chirality for tetrahedral stereocentres.
//!
//! * [`algebra`]: the 24 Fischer-projection operators as exact permutation
//!   matrices, their products, spectra and commutators.
//! * [`tetra`]: bonds in polar form, tetrahedral centres and linear chains.
//! * [`classifier`]: superimposition on the mirror image and the chirality
//!   index `χ = {n, p}`.
//! * [`aufbau`]: growing chains one centre at a time.
//! * [`quantum`]: Schrödinger residuals, chiral and parity states.

pub mod algebra;
pub mod aufbau;
pub mod classifier;
pub mod cyclotomic;
pub mod error;
pub mod quantum;
pub mod tables;
pub mod tetra;

pub use algebra::{
    commutator, group_dimension, CayleyTable, CharPoly, CommutatorDecomposition, EigenSet, Eigenpair,
    Eigenvalue, Kind, Operator, OperatorId, SpectralClass,
};
pub use aufbau::{add_centre, aufbau_sequence, verified_add_centre, AufbauStep, AufbauTrace, VerifiedAddition};
pub use classifier::{
    chirality_index, chirality_index_with_mirror, classify, enumerate_projections, mirror_tetra,
    rotationally_superimposable, ChiralityIndex, Classification, ProjectionSet,
};
pub use cyclotomic::Cyclotomic12;
pub use error::{ChiralError, Result};
pub use quantum::{
    azimuthal_residual, chiral_action, hamiltonian_commutes, hund_commutator, parity_eigenphase, parity_states,
    radial_residual, AzimuthalProblem, ChiralState, EnergyVector, Parity, RadialProblem,
};
pub use tetra::{bond_count, Bond, CentreId, ChainMolecule, Slot, Tetrahedron};
