//! Adapted sl(2)-triples: standard partners, eigenvalue structure of
//! ad(A) on the grading components, and the torsor T(Z).
//!
//! ```text
//! cargo run --example sl2_triples
//! ```

use parabolica::isotropy::enumerate_types;
use parabolica::lie::coords_scale;
use parabolica::model::{Family, GradedModel, ModelSpec};
use parabolica::scalar::{rat, Ring};
use parabolica::sl2::{
    check_triple_structure, orbit_element, recover_orbit_parameter, span_of_s, standard_partner,
    PartnerRecipe, TripleEigenData,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let model = GradedModel::build(&ModelSpec::new(Family::Grassmann, Ring::Rat, &[2, 2]))?;
    for gt in enumerate_types(&model)? {
        let t = standard_partner(&model, &gt, PartnerRecipe::BlockTranspose)?;
        let eig = TripleEigenData::compute(&model, &t)?;
        let report = check_triple_structure(&model, &t, &eig, &format!("{}", gt.invariant))?;
        println!(
            "{} {}: eigen dims on g_-1 {:?}, on g_0 {:?}, on g_1 {:?}",
            model.id(),
            report.type_label,
            report.gm1_dims,
            report.g0_dims,
            report.g1_dims
        );
        println!(
            "  dim C(Z) = {}, dim g_-1^[-2] = {}",
            report.dim_commutant, report.dim_gm1_minus2
        );

        // T(Z) is a torsor under exp(g_0^[1]): move and recover exactly
        if let Some(u0) = eig.g0.space(1).first() {
            let u = coords_scale(u0, &rat(3));
            let x_new = orbit_element(&model, &t, &eig, &u)?;
            let back = recover_orbit_parameter(&model, &t, &eig, &x_new)?;
            assert_eq!(back, u);
            println!("  torsor round-trip through g_0^[1] recovered the parameter");
        }

        // the sampled set S spans all of g_-1 (simple g)
        let rank = span_of_s(&model, &t, &eig)?;
        println!("  span of S has full rank {}", rank);
    }
    Ok(())
}
