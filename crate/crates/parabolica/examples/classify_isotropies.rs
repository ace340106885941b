//! Enumerate geometric types, classify ad-hoc isotropies, and normalize
//! them to standard representatives with explicit group elements.
//!
//! ```text
//! cargo run --example classify_isotropies
//! ```

use parabolica::isotropy::{commutant, enumerate_types, normal_form, orbit_invariant};
use parabolica::linalg::Mat;
use parabolica::model::{Family, GradedModel, ModelSpec};
use parabolica::scalar::Ring;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let model = GradedModel::build(&ModelSpec::new(Family::Grassmann, Ring::Rat, &[2, 3]))?;
    println!("{}: geometric types", model.id());
    for gt in enumerate_types(&model)? {
        let c = commutant(&model, &gt.representative)?;
        println!("  {:<8} dim C(Z) = {}", format!("{}", gt.invariant), c.len());
    }

    // an ad-hoc isotropy: rank-one 2×3 block in general position
    let z = model.g1_from_block(&Mat::from_int_rows(
        Ring::Rat,
        &[&[2, 4, 6], &[1, 2, 3]],
    ))?;
    let inv = orbit_invariant(&model, &z)?;
    println!("ad-hoc Z has invariant: {}", inv.invariant);

    // normalization produces g with Ad(g)·Z equal to the representative,
    // and the result is verified exactly before being returned
    let (gt, g) = normal_form(&model, &z)?;
    let moved = model.ad_group(&g, &z)?;
    assert_eq!(moved, gt.representative);
    println!("normalized to the standard representative; |g| = {}x{}", g.rows(), g.cols());

    // conformal causal classes
    let conf = GradedModel::build(&ModelSpec::new(Family::Conformal, Ring::Rat, &[2, 3]))?;
    println!("{}: geometric types", conf.id());
    for gt in enumerate_types(&conf)? {
        let c = commutant(&conf, &gt.representative)?;
        println!("  {:<10} dim C(Z) = {}", format!("{}", gt.invariant), c.len());
    }
    // a null covector away from the representative, normalized by exact
    // reflections (a rational Witt chain)
    let z = conf.g1_from_block(&Mat::from_int_rows(Ring::Rat, &[&[3, 4, 0, 0, 5]]))?;
    let (gt, g) = normal_form(&conf, &z)?;
    println!(
        "null covector (3,4,0,0,5) normalized to {} via a rational isometry",
        gt.invariant
    );
    assert_eq!(conf.ad_group(&g, &z)?, gt.representative);
    Ok(())
}
