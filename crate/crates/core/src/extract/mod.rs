//! Important substructures of a weighted network: the main path, the CPM
//! path, threshold arc cuts and (k, K)-islands.

mod cut;
mod islands;
mod path;

use std::fmt;

pub use cut::{arc_cut, ArcCut};
pub use islands::{check_island, island_size_csv, islands, Island, IslandSet};
pub use path::{cpm_path, main_path, main_path_single};

use crate::error::{Error, Result};
use crate::network::{pajek, Network};
use crate::weights::{ArcWeights, WeightValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubnetworkKind {
    MainPath,
    CpmPath,
    ArcCut,
    Island,
}

impl SubnetworkKind {
    pub fn name(self) -> &'static str {
        match self {
            SubnetworkKind::MainPath => "main path",
            SubnetworkKind::CpmPath => "cpm path",
            SubnetworkKind::ArcCut => "arc cut",
            SubnetworkKind::Island => "island",
        }
    }
}

impl fmt::Display for SubnetworkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A subset of the vertices and arcs of a parent network, by index. Both
/// lists are sorted and every arc has its endpoints in the vertex list.
#[derive(Debug, Clone, PartialEq)]
pub struct Subnetwork {
    pub vertices: Vec<usize>,
    pub arcs: Vec<usize>,
    pub kind: SubnetworkKind,
    /// Total weight of an optimal path, for CPM paths. Includes the arcs at
    /// the source and sink of the standard form.
    pub total_weight: Option<WeightValue>,
}

impl Subnetwork {
    pub(crate) fn from_arcs(parent: &Network, mut arcs: Vec<usize>, kind: SubnetworkKind) -> Self {
        arcs.sort_unstable();
        arcs.dedup();
        let mut vertices: Vec<usize> = arcs
            .iter()
            .flat_map(|&a| [parent.arc(a).tail, parent.arc(a).head])
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        Subnetwork {
            vertices,
            arcs,
            kind,
            total_weight: None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The subnetwork as a network of its own, vertices renumbered in
    /// increasing order of their parent index.
    pub fn network(&self, parent: &Network) -> Result<Network> {
        parent.restrict(&self.vertices, &self.arcs)
    }

    /// Pajek text of the subnetwork, labels preserved. `weights` are aligned
    /// with the parent arcs.
    pub fn to_pajek(&self, parent: &Network, weights: Option<&ArcWeights>) -> Result<String> {
        let net = self.network(parent)?;
        let selected = weights.map(|w| w.select(&self.arcs));
        pajek::write_pajek(&net, selected.as_ref())
    }
}

pub(crate) fn check_alignment(w: &ArcWeights, needed: usize, what: &str) -> Result<()> {
    if w.len() < needed {
        return Err(Error::Argument(format!(
            "{what} needs {needed} arc weights, got {}",
            w.len()
        )));
    }
    Ok(())
}
