//! Cross-check between the two exact eigenspace routes: Lagrange spectral
//! projectors versus shifted-kernel computations, on random adapted
//! operators ad(A).

use parabolica::isotropy::enumerate_types;
use parabolica::linalg::{Mat, SpectralProjectors};
use parabolica::model::{Family, GradedModel, ModelSpec};
use parabolica::scalar::Ring;
use parabolica::sl2::{standard_partner, PartnerRecipe};
use parabolica::verify::sample_g0;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn projector_columns_span_shifted_kernels() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xad0a);
    let mut instances = 0;
    for spec in [
        ModelSpec::new(Family::ProjLike, Ring::Rat, &[1, 2]),
        ModelSpec::new(Family::Grassmann, Ring::Rat, &[2, 2]),
        ModelSpec::new(Family::Conformal, Ring::Rat, &[1, 2]),
        ModelSpec::new(Family::Lagrangean, Ring::Rat, &[2]),
    ] {
        let model = GradedModel::build(&spec).unwrap();
        for gt in enumerate_types(&model).unwrap() {
            let recipe = PartnerRecipe::default_for(model.spec.family);
            let t = standard_partner(&model, &gt, recipe).unwrap();
            // conjugate the triple around its orbit to vary ad(A)
            for _ in 0..3 {
                let g = sample_g0(&model, &mut rng).unwrap();
                let a = model.ad_group(&g, &t.a).unwrap();
                let ad_a = model.algebra.ad(&a);
                let sp = SpectralProjectors::new(&ad_a, &[-2, -1, 0, 1, 2]).unwrap();
                for lam in [-2i64, -1, 0, 1, 2] {
                    let p = sp.projector(lam).unwrap();
                    let shifted = &ad_a
                        - &Mat::identity(Ring::Rat, model.dim())
                            .scale_rat(&parabolica::scalar::rat(lam));
                    let kernel_dim = shifted.kernel_basis().len();
                    // columns of P_λ span ker(ad(A) − λ): the ranks agree
                    // and the shifted operator annihilates the projector
                    assert_eq!(p.rank(), kernel_dim);
                    assert!((&shifted * p).is_zero());
                }
                instances += 1;
            }
        }
    }
    assert!(instances >= 20, "sampled only {} instances", instances);
}
