//! Analysis of large acyclic citation networks.
//!
//! Arcs point from the cited work to the citing one. The crate reads and
//! writes Pajek networks, repairs cyclic inputs, computes search path
//! weights in linear time, extracts main paths, arc cuts and islands, and
//! ranks vertices by hubs and authorities.
//!
//! ```
//! use citenet::{acyclic, extract, weights, Network};
//!
//! let net = Network::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
//! let std = acyclic::standardize(&net).unwrap();
//! let spc = weights::spc(&std, weights::NumericMode::Exact).unwrap();
//! assert_eq!(spc.total_flow.as_ref().unwrap().linear(), 2.0);
//! let main = extract::main_path(&std, &spc.arc).unwrap();
//! assert_eq!(main.vertices, vec![0, 1, 2, 3]);
//! ```

pub mod acyclic;
pub mod error;
pub mod extract;
pub mod network;
pub mod rank;
mod union_find;
pub mod weights;

pub use acyclic::{standardize, topological_order, Partition, StandardizedNetwork};
pub use error::{Error, Result};
pub use network::{Arc, Network};
pub use weights::{ArcWeights, Method, NumericMode, WeightResult};
