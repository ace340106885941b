//! Eigenvalue windows on W and the insertion-kernel inclusions for the
//! stable and strongly stable parts, per geometric type.
//!
//! ```text
//! cargo run --release --example kernel_inclusions
//! ```

use parabolica::curvature::CurvatureModule;
use parabolica::isotropy::enumerate_types;
use parabolica::model::{Family, GradedModel, ModelSpec};
use parabolica::scalar::Ring;
use parabolica::sl2::{standard_partner, PartnerRecipe, TripleEigenData};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let model = GradedModel::build(&ModelSpec::new(Family::Conformal, Ring::Rat, &[2, 2]))?;
    let w = CurvatureModule::build(&model)?;
    let harmonic = w.harmonic_module()?;
    for gt in enumerate_types(&model)? {
        let t = standard_partner(&model, &gt, PartnerRecipe::ConformalDual)?;
        let eig = TripleEigenData::compute(&model, &t)?;
        let weigen = w.a_eigen_on_w(&t, &eig)?;
        println!(
            "{} [{}]: eigenvalues on W1 {:?}, W2 {:?}, W3 {:?}",
            model.id(),
            gt.invariant,
            weigen.block_dims(0),
            weigen.block_dims(1),
            weigen.block_dims(2)
        );
        let r = w.check_kernel_inclusions(&t, &eig, &weigen)?;
        println!(
            "  inclusions (a)/(b)/(c) hold; {} insertions against a Y-basis of dim {}",
            r.checked_a + r.checked_b + r.checked_c,
            r.dim_y_basis
        );
        let ss = w.ss_triviality_report(&eig, &weigen, &harmonic, &format!("{}", gt.invariant))?;
        println!(
            "  dim C(Z) = {}, dim W^[ss] = {}, dim Ŵ^[ss] = {}",
            ss.dim_commutant, ss.dim_w_ss, ss.dim_hat_w_ss
        );
    }
    Ok(())
}
