//! The curvature module W, the homology boundary and cochain
//! differential, and the harmonic split ker ∂* = Ŵ ⊕ im ∂*.
//!
//! ```text
//! cargo run --release --example kostant_harmonic
//! ```

use parabolica::curvature::CurvatureModule;
use parabolica::model::{Family, GradedModel, ModelSpec};
use parabolica::scalar::Ring;
use std::time::Instant;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for spec in [
        ModelSpec::new(Family::ProjLike, Ring::Rat, &[1, 2]),
        ModelSpec::new(Family::Conformal, Ring::Rat, &[1, 3]),
        ModelSpec::new(Family::Lagrangean, Ring::Rat, &[3]),
        ModelSpec::new(Family::Spinorial, Ring::Rat, &[5]),
    ] {
        let model = GradedModel::build(&spec)?;
        let start = Instant::now();
        // building W checks ∂*∘∂* = 0 and ∂∘∂ = 0 exactly
        let w = CurvatureModule::build(&model)?;
        let h = w.harmonic_module()?;
        println!(
            "{}: dim W = {} = {:?} by homogeneity",
            model.id(),
            h.dim_w,
            h.dim_w_blocks
        );
        println!(
            "  dim Ŵ = {} = {:?}, ker ∂*₂ = {} = dim Ŵ + rank ∂*₃ = {} + {}",
            h.dim_hat_w,
            h.dim_hat_w_blocks,
            h.dim_ker_boundary2,
            h.dim_hat_w,
            h.rank_boundary3
        );
        println!(
            "  ranks: ∂*₁ = {}, ∂*₂ = {}, ∂*₃ = {}, ∂₁₂ = {}, ∂₂₃ = {}   ({:?})",
            h.rank_boundary1,
            h.rank_boundary2,
            h.rank_boundary3,
            h.rank_cochain12,
            h.rank_cochain23,
            start.elapsed()
        );
    }
    Ok(())
}
