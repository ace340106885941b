//! The SL(2) product decomposition and the holonomy factorization
//! e^{tZ} e^{sX} = e^{s/(1+st)·X} a_t(s) u_t(s), all exact, including the
//! quaternionic reparametrization with right scalar multiplication.
//!
//! ```text
//! cargo run --example flow_identities
//! ```

use parabolica::flows::{
    check_holonomy_factorization, check_reparam_identity, check_sl2_identity, power_of_a,
};
use parabolica::isotropy::enumerate_types;
use parabolica::model::{Family, GradedModel, ModelSpec};
use parabolica::scalar::{rat, ratio, Ring, Scalar};
use parabolica::sl2::{standard_partner, PartnerRecipe};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // the 2×2 identity over the three scalar rings
    let j = Scalar::unit(Ring::Quat, 2);
    println!(
        "SL(2) identity at z=1, w=j over H(Q): {}",
        check_sl2_identity(Ring::Quat, &Scalar::one(Ring::Quat), &j)?
    );

    // holonomy factorization on a conformal triple
    let model = GradedModel::build(&ModelSpec::new(Family::Conformal, Ring::Rat, &[1, 2]))?;
    let gt = &enumerate_types(&model)?[2]; // the null class
    let t = standard_partner(&model, gt, PartnerRecipe::ConformalDual)?;
    for (s, tt) in [(rat(1), rat(1)), (ratio(1, 2), rat(2)), (rat(2), ratio(1, 2))] {
        let c = check_holonomy_factorization(&model, &t, &s, &tt)?;
        println!(
            "{} [null] s={}, t={}: exact = {}, residual = {}",
            model.id(),
            c.s,
            c.t,
            c.exact,
            c.max_residual
        );
    }
    // the dilation factor is a spectral power, so the group law is exact
    let p = power_of_a(&model, &t, &rat(2))?;
    let q = power_of_a(&model, &t, &ratio(1, 2))?;
    assert_eq!(&p * &q, parabolica::linalg::Mat::identity(Ring::Rat, p.rows()));
    println!("2^A · (1/2)^A = Id in the defining representation");

    // quaternionic reparametrization, scalars on the right
    let quat = GradedModel::build(&ModelSpec::new(Family::ProjLike, Ring::Quat, &[1, 2]))?;
    let gt = &enumerate_types(&quat)?[0];
    let t = standard_partner(&quat, gt, PartnerRecipe::BlockTranspose)?;
    for v in [j, &Scalar::one(Ring::Quat) + &Scalar::unit(Ring::Quat, 3)] {
        let c = check_reparam_identity(&quat, &t, &v, &rat(1), &rat(1))?;
        println!(
            "{} e^(tZ) e^(X·sv) with v = {}: exact = {}",
            quat.id(),
            v,
            c.exact
        );
    }
    Ok(())
}
