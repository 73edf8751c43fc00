//! Graphoids, probabilistic independence oracles, belief-network construction
//! and d-separation, used to decide three notions of "unrelatedness" between
//! variables: total independence, total uncoupledness and total
//! disconnectedness.

pub mod distributions;
pub mod error;
pub mod experiment;
pub mod graphoid;
pub mod instantiated;
pub mod network;
pub mod simnet;
pub mod triplet;
pub mod unrelatedness;
pub mod varset;

pub use error::{Error, Result};
pub use graphoid::{DependencyModel, IndependenceOracle};
pub use network::BeliefNetwork;
pub use triplet::Triplet;
pub use varset::{Universe, VarSet, VariableId};
