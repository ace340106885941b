//! Build a |1|-graded model, inspect its grading data, and verify the
//! family block-bracket formulas exhaustively.
//!
//! ```text
//! cargo run --example build_model
//! ```

use parabolica::model::{Family, GradedModel, ModelSpec};
use parabolica::scalar::Ring;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // the (2,3) conformal model: o(3,4) in the anti-diagonal realization
    let spec = ModelSpec::new(Family::Conformal, Ring::Rat, &[2, 3]);
    let model = GradedModel::build(&spec)?;
    let (d, d0, d1) = model.component_dims();
    println!("{}: dim {} = {} + {} + {}", model.id(), model.dim(), d, d0, d1);

    // the grading decomposition is recomputed from ad(E) kernels and has
    // already been matched against the block construction during build
    let spaces = model.grading_decomposition()?;
    println!(
        "ad(E) eigenspace dims for -1, 0, +1: {:?}",
        spaces.iter().map(|s| s.len()).collect::<Vec<_>>()
    );

    // [Z, X] = (ZX, −XZ + 𝕀(XZ)ᵗ𝕀) on every basis pair
    let report = model.verify_block_brackets();
    println!(
        "block bracket formula verified on {} basis pairs: {}",
        report.pairs_checked,
        if report.passed() { "exact" } else { "FAILED" }
    );

    // Killing pairing between g_1 and g_-1 is a perfect pairing
    let pairing = model.duality_pairing_matrix();
    println!("duality pairing rank: {} (= dim g_-1)", pairing.rank());

    // same machinery over the quaternions
    let quat = GradedModel::build(&ModelSpec::new(Family::ProjLike, Ring::Quat, &[1, 2]))?;
    let (d, d0, d1) = quat.component_dims();
    println!("{}: dim {} = {} + {} + {}", quat.id(), quat.dim(), d, d0, d1);
    Ok(())
}
