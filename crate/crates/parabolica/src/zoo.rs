//! The versioned model zoo and its golden data.
//!
//! Thirteen desk-scale models cover every family and every tagged row of
//! the rigidity classification at minimal dimension. The zoo ships as
//! `data/zoo.json` (override with the `PARABOLICA_ZOO` environment
//! variable) and carries, per model, the standard-partner recipe — the
//! only hand-derived inputs in the system — which is validated against
//! the triple relations when loaded with [`Zoo::validate`].
//!
//! Golden data (`data/golden.json`) freezes the exact dimension and rank
//! profile of every model: component dimensions, the Killing pairing
//! matrix on component bases, W and Ŵ dimensions per homogeneity, and
//! the ranks of ∂ and ∂*. The zoo listing reports a SHA-256 hash of each
//! model's canonical golden entry.

use crate::curvature::CurvatureModule;
use crate::error::{Error, Result};
use crate::isotropy::enumerate_types;
use crate::model::{GradedModel, ModelSpec};
use crate::sl2::{standard_partner, PartnerRecipe};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

pub const ZOO_ENV: &str = "PARABOLICA_ZOO";

const DEFAULT_ZOO: &str = include_str!("../data/zoo.json");
const DEFAULT_GOLDEN: &str = include_str!("../data/golden.json");

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ZooEntry {
    #[serde(flatten)]
    pub spec: ModelSpec,
    pub partner: PartnerRecipe,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Zoo {
    pub version: u32,
    pub models: Vec<ZooEntry>,
}

impl Zoo {
    /// The default zoo, or the file named by `PARABOLICA_ZOO`.
    pub fn load() -> Result<Zoo> {
        match std::env::var_os(ZOO_ENV) {
            Some(path) => {
                let text = std::fs::read_to_string(&path).map_err(|e| {
                    Error::Zoo(format!("cannot read {}: {}", path.to_string_lossy(), e))
                })?;
                Ok(serde_json::from_str(&text)?)
            }
            None => Ok(serde_json::from_str(DEFAULT_ZOO)?),
        }
    }

    /// Build every model and validate the stored partner recipes against
    /// the triple relations for every geometric type.
    pub fn validate(&self) -> Result<Vec<GradedModel>> {
        let mut models = Vec::new();
        for entry in &self.models {
            let model = GradedModel::build(&entry.spec)?;
            for gt in enumerate_types(&model)? {
                standard_partner(&model, &gt, entry.partner).map_err(|e| {
                    Error::Zoo(format!(
                        "recipe {:?} invalid for {} type {}: {}",
                        entry.partner,
                        model.id(),
                        gt.invariant,
                        e
                    ))
                })?;
            }
            models.push(model);
        }
        Ok(models)
    }

    pub fn entry(&self, id: &str) -> Option<&ZooEntry> {
        self.models.iter().find(|e| e.spec.id() == id)
    }
}

/// Frozen exact profile of one model.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GoldenModel {
    pub dim: usize,
    pub component_dims: (usize, usize, usize),
    pub num_types: usize,
    /// Killing pairing of 𝔤₁ × 𝔤₋₁ on component bases, row-major,
    /// canonical rational strings.
    pub pairing: Vec<Vec<String>>,
    pub dim_w: usize,
    pub dim_w_blocks: [usize; 3],
    pub dim_hat_w: usize,
    pub dim_hat_w_blocks: [usize; 3],
    pub rank_boundary1: usize,
    pub rank_boundary2: usize,
    pub rank_boundary3: usize,
    pub rank_cochain12: usize,
    pub rank_cochain23: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Golden {
    pub version: u32,
    pub models: BTreeMap<String, GoldenModel>,
}

impl Golden {
    pub fn load() -> Result<Golden> {
        Ok(serde_json::from_str(DEFAULT_GOLDEN)?)
    }

    pub fn hash_of(&self, id: &str) -> Option<String> {
        self.models.get(id).map(|g| {
            let canonical = serde_json::to_string(g).expect("golden serializes");
            let mut h = Sha256::new();
            h.update(canonical.as_bytes());
            hex_prefix(&h.finalize())
        })
    }
}

fn hex_prefix(bytes: &[u8]) -> String {
    bytes.iter().take(8).map(|b| format!("{:02x}", b)).collect()
}

/// Compute the golden profile of a model from scratch.
pub fn compute_golden(model: &GradedModel) -> Result<GoldenModel> {
    let pairing_mat = model.duality_pairing_matrix();
    let pairing = (0..pairing_mat.rows())
        .map(|r| {
            (0..pairing_mat.cols())
                .map(|c| pairing_mat.get(r, c).expect_rat().to_string())
                .collect()
        })
        .collect();
    let w = CurvatureModule::build(model)?;
    let h = w.harmonic_module()?;
    Ok(GoldenModel {
        dim: model.dim(),
        component_dims: model.component_dims(),
        num_types: enumerate_types(model)?.len(),
        pairing,
        dim_w: h.dim_w,
        dim_w_blocks: h.dim_w_blocks,
        dim_hat_w: h.dim_hat_w,
        dim_hat_w_blocks: h.dim_hat_w_blocks,
        rank_boundary1: h.rank_boundary1,
        rank_boundary2: h.rank_boundary2,
        rank_boundary3: h.rank_boundary3,
        rank_cochain12: h.rank_cochain12,
        rank_cochain23: h.rank_cochain23,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_zoo_has_thirteen_models() {
        let zoo = Zoo::load().unwrap();
        assert_eq!(zoo.models.len(), 13);
        assert_eq!(zoo.version, 1);
        // ids are unique
        let mut ids: Vec<String> = zoo.models.iter().map(|e| e.spec.id()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 13);
        assert!(zoo.entry("o(5,5)spin").is_some());
        assert!(zoo.entry("sl(3,H)/p(1)").is_some());
    }

    #[test]
    fn golden_file_covers_the_zoo() {
        let zoo = Zoo::load().unwrap();
        let golden = Golden::load().unwrap();
        for entry in &zoo.models {
            let id = entry.spec.id();
            assert!(golden.models.contains_key(&id), "missing golden for {}", id);
            assert!(golden.hash_of(&id).is_some());
        }
    }
}
