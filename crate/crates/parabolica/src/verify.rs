//! Property suites over a model: grading, sl2, kostant, kernels, flows.
//!
//! Each suite runs a fixed list of exact checks and produces a
//! [`SuiteReport`] with per-check timings and dimension details,
//! serializable to JSON under a stable schema. A failed check never
//! aborts the suite; it is recorded with its counterexample message so
//! the report stays complete. Randomized checks (torsor round-trips,
//! orbit-invariance sampling) draw from a ChaCha generator seeded from
//! the model id, so reports are reproducible run to run.

use crate::curvature::CurvatureModule;
use crate::error::{Error, Result};
use crate::flows;
use crate::isotropy::{commutant, enumerate_types, orbit_invariant};
use crate::lie::{coords_add, coords_is_zero, coords_scale, Coords};
use crate::model::{GradedModel, ModelSpec};
use crate::scalar::{rat, ratio, Rat, Ring, Scalar};
use crate::sl2::{
    is_partner, orbit_element, recover_orbit_parameter, span_of_s, standard_partner,
    PartnerRecipe, Sl2Triple, TripleEigenData,
};
use crate::sparse::{svec_from_dense, SparseSpace};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Grading,
    Sl2,
    Kostant,
    Kernels,
    Flows,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        Some(match name {
            "grading" => Suite::Grading,
            "sl2" => Suite::Sl2,
            "kostant" => Suite::Kostant,
            "kernels" => Suite::Kernels,
            "flows" => Suite::Flows,
            "all" => Suite::All,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Grading => "grading",
            Suite::Sl2 => "sl2",
            Suite::Kostant => "kostant",
            Suite::Kernels => "kernels",
            Suite::Flows => "flows",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub millis: u128,
    pub details: String,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub model: String,
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    fn new(model: &str, suite: Suite) -> Self {
        SuiteReport {
            schema_version: SCHEMA_VERSION,
            model: model.to_string(),
            suite: suite.name().to_string(),
            passed: true,
            checks: Vec::new(),
        }
    }

    fn run<F: FnOnce() -> Result<String>>(&mut self, name: &str, f: F) {
        let start = Instant::now();
        let outcome = f();
        let millis = start.elapsed().as_millis();
        match outcome {
            Ok(details) => self.checks.push(CheckResult {
                name: name.to_string(),
                passed: true,
                millis,
                details,
            }),
            Err(e) => {
                self.passed = false;
                self.checks.push(CheckResult {
                    name: name.to_string(),
                    passed: false,
                    millis,
                    details: e.to_string(),
                });
            }
        }
    }

    /// The first failing check, serialized; `None` when everything passed.
    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn seed_for(model: &GradedModel, salt: u64) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in model.id().bytes() {
        h = (h ^ b as u64).wrapping_mul(0x100000001b3);
    }
    h ^ salt
}

/// Build the model and run one suite.
pub fn run_suite(spec: &ModelSpec, recipe: PartnerRecipe, suite: Suite) -> SuiteReport {
    let model = match GradedModel::build(spec) {
        Ok(m) => m,
        Err(e) => {
            let mut report = SuiteReport::new(&spec.id(), suite);
            report.passed = false;
            report.checks.push(CheckResult {
                name: "build".into(),
                passed: false,
                millis: 0,
                details: e.to_string(),
            });
            return report;
        }
    };
    let mut report = SuiteReport::new(&model.id(), suite);
    match suite {
        Suite::Grading => grading_suite(&model, &mut report),
        Suite::Sl2 => sl2_suite(&model, recipe, &mut report),
        Suite::Kostant => kostant_suite(&model, recipe, &mut report),
        Suite::Kernels => kernels_suite(&model, recipe, &mut report),
        Suite::Flows => flows_suite(&model, recipe, &mut report),
        Suite::All => {
            grading_suite(&model, &mut report);
            sl2_suite(&model, recipe, &mut report);
            kostant_suite(&model, recipe, &mut report);
            kernels_suite(&model, recipe, &mut report);
            flows_suite(&model, recipe, &mut report);
        }
    }
    report
}

fn grading_suite(model: &GradedModel, report: &mut SuiteReport) {
    report.run("grading/build_invariants", || {
        let (d, d0, d1) = model.component_dims();
        Ok(format!("dim {} = {} + {} + {}", model.dim(), d, d0, d1))
    });
    report.run("grading/eigenspace_match", || {
        let spaces = model.grading_decomposition()?;
        Ok(format!(
            "ad(E) eigenspace dims {:?}",
            spaces.iter().map(|s| s.len()).collect::<Vec<_>>()
        ))
    });
    report.run("grading/block_brackets", || {
        let r = model.verify_block_brackets();
        if r.passed() {
            Ok(format!("{} basis pairs verified", r.pairs_checked))
        } else {
            Err(Error::CheckFailed(r.deviations.join("; ")))
        }
    });
    report.run("grading/simplicity_proxy", || {
        model.check_simplicity_proxy()?;
        Ok("bracket closure reaches all of g from each component".into())
    });
    report.run("grading/killing_pairing", || {
        let p = model.duality_pairing_matrix();
        let rank = p.rank();
        if rank != p.rows() {
            return Err(Error::CheckFailed("degenerate duality pairing".into()));
        }
        Ok(format!("pairing rank {}", rank))
    });
}

struct TypeData {
    label: String,
    triple: Sl2Triple,
    eig: TripleEigenData,
}

fn type_data(model: &GradedModel, recipe: PartnerRecipe) -> Result<Vec<TypeData>> {
    enumerate_types(model)?
        .into_iter()
        .map(|gt| {
            let triple = standard_partner(model, &gt, recipe)?;
            let eig = TripleEigenData::compute(model, &triple)?;
            Ok(TypeData {
                label: format!("{}", gt.invariant),
                triple,
                eig,
            })
        })
        .collect()
}

fn random_g01_element(td: &TypeData, dim: usize, rng: &mut ChaCha8Rng) -> Coords {
    let mut acc = vec![Rat::zero(); dim];
    for b in td.eig.g0.space(1) {
        let c = ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4));
        acc = coords_add(&acc, &coords_scale(b, &c));
    }
    acc
}

fn sl2_suite(model: &GradedModel, recipe: PartnerRecipe, report: &mut SuiteReport) {
    let tds = match type_data(model, recipe) {
        Ok(t) => t,
        Err(e) => {
            report.run("sl2/types", || Err(e));
            return;
        }
    };
    for td in &tds {
        report.run(&format!("sl2/structure[{}]", td.label), || {
            let r = crate::sl2::check_triple_structure(model, &td.triple, &td.eig, &td.label)?;
            Ok(format!(
                "g-1 dims {:?}, g0 dims {:?}, g1 dims {:?}, dim C(Z) = {}",
                r.gm1_dims, r.g0_dims, r.g1_dims, r.dim_commutant
            ))
        });
        report.run(&format!("sl2/torsor[{}]", td.label), || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed_for(model, 0x517));
            let rounds = 100;
            for _ in 0..rounds {
                let u = random_g01_element(td, model.dim(), &mut rng);
                let x_new = orbit_element(model, &td.triple, &td.eig, &u)?;
                let back = recover_orbit_parameter(model, &td.triple, &td.eig, &x_new)?;
                if back != u {
                    return Err(Error::CheckFailed("torsor parameter not recovered".into()));
                }
                if !coords_is_zero(&u) && x_new == td.triple.x {
                    return Err(Error::CheckFailed("torsor action not free".into()));
                }
            }
            Ok(format!(
                "{} round-trips over g0^[1] of dim {}",
                rounds,
                td.eig.g0.dim(1)
            ))
        });
        report.run(&format!("sl2/span_of_s[{}]", td.label), || {
            let rank = span_of_s(model, &td.triple, &td.eig)?;
            Ok(format!("span rank {} = dim g_-1", rank))
        });
    }
    // partner transport along sampled conjugations, on the families whose
    // rational normalization is total (rank forms, skew congruence, and
    // isometry-preserved causal classes)
    let transport_total = matches!(
        model.spec.family,
        crate::model::Family::ProjLike
            | crate::model::Family::Grassmann
            | crate::model::Family::Spinorial
            | crate::model::Family::Conformal
    );
    if transport_total {
        report.run("sl2/partner_transport", || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed_for(model, 0x7a7));
            let mut checked = 0;
            for td in &tds {
                for _ in 0..3 {
                    let g = sample_g0(model, &mut rng)?;
                    let moved = model.ad_group(&g, &td.triple.z)?;
                    let t = crate::sl2::partner_for(model, &moved)?;
                    crate::sl2::check_triple(model, &t)?;
                    checked += 1;
                }
            }
            Ok(format!("{} transported partners verified", checked))
        });
    }

    report.run("sl2/orbit_invariance", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed_for(model, 0xa11));
        let mut checked = 0;
        for td in &tds {
            let cdim = commutant(model, &td.triple.z)?.len();
            for _ in 0..50 {
                let g = sample_g0(model, &mut rng)?;
                let moved = model.ad_group(&g, &td.triple.z)?;
                let inv = orbit_invariant(model, &moved)?;
                if format!("{}", inv.invariant) != td.label {
                    return Err(Error::CheckFailed(format!(
                        "invariant changed along the orbit of {}",
                        td.label
                    )));
                }
                if commutant(model, &moved)?.len() != cdim {
                    return Err(Error::CheckFailed(
                        "commutant dimension varies along an orbit".into(),
                    ));
                }
                checked += 1;
            }
        }
        Ok(format!("{} conjugations checked", checked))
    });
}

/// Rational G₀ sampling: products of unipotent one-parameter subgroup
/// elements at rational times, rational plane rotations/boosts, and
/// dilations, per family.
pub fn sample_g0(model: &GradedModel, rng: &mut ChaCha8Rng) -> Result<crate::linalg::Mat> {
    use crate::linalg::Mat;
    let amb = model.algebra.ambient_size();
    let mut g = Mat::identity(model.ring, amb);
    for _ in 0..3 {
        let f: Mat = match model.spec.family {
            crate::model::Family::ProjLike | crate::model::Family::Grassmann => {
                let p = model.spec.params[0];
                loop {
                    let cand = Mat::from_fn(model.ring, amb, amb, |r, c| {
                        let same_block = (r < p) == (c < p);
                        if !same_block {
                            Scalar::zero(model.ring)
                        } else if r == c {
                            Scalar::from_int(model.ring, rng.gen_range(1..=2))
                        } else {
                            let mut s = Scalar::zero(model.ring);
                            if rng.gen_bool(0.5) {
                                let comp = rng.gen_range(0..model.ring.degree());
                                s = Scalar::unit(model.ring, comp)
                                    .scale(&rat(rng.gen_range(-1..=1)));
                            }
                            s
                        }
                    });
                    if cand.inverse().is_some() {
                        break cand;
                    }
                }
            }
            crate::model::Family::Conformal => {
                let metric = model.conformal_metric();
                let m = metric.len();
                let mut f = Mat::identity(Ring::Rat, amb);
                let i = rng.gen_range(0..m);
                let j = (i + 1 + rng.gen_range(0..m - 1)) % m;
                let (i, j) = (i.min(j), i.max(j));
                let same = metric[i] == metric[j];
                let (a, b) = if same {
                    (ratio(3, 5), ratio(4, 5))
                } else {
                    (ratio(5, 4), ratio(3, 4))
                };
                f.set(1 + i, 1 + i, Scalar::from_rat(Ring::Rat, a.clone()));
                f.set(1 + j, 1 + j, Scalar::from_rat(Ring::Rat, a));
                f.set(
                    1 + i,
                    1 + j,
                    Scalar::from_rat(Ring::Rat, if same { -b.clone() } else { b.clone() }),
                );
                f.set(1 + j, 1 + i, Scalar::from_rat(Ring::Rat, b));
                let c = ratio(rng.gen_range(1..=3), rng.gen_range(1..=2));
                f.set(0, 0, Scalar::from_rat(Ring::Rat, c.clone()));
                f.set(m + 1, m + 1, Scalar::from_rat(Ring::Rat, Rat::one() / c));
                f
            }
            crate::model::Family::Lagrangean | crate::model::Family::Spinorial => {
                let n = model.spec.params[0];
                loop {
                    let c = Mat::from_fn(model.ring, n, n, |r, col| {
                        if r == col {
                            Scalar::from_int(model.ring, rng.gen_range(1..=2))
                        } else if rng.gen_bool(0.4) {
                            Scalar::from_int(model.ring, rng.gen_range(-1..=1))
                        } else {
                            Scalar::zero(model.ring)
                        }
                    });
                    if let Some(cinv) = c.inverse() {
                        let mut f = Mat::zeros(model.ring, amb, amb);
                        for r in 0..n {
                            for col in 0..n {
                                f.set(r, col, c.get(r, col).clone());
                                f.set(n + r, n + col, cinv.get(col, r).clone());
                            }
                        }
                        break f;
                    }
                }
            }
        };
        g = &g * &f;
    }
    Ok(g)
}

fn kostant_suite(model: &GradedModel, recipe: PartnerRecipe, report: &mut SuiteReport) {
    let w = match CurvatureModule::build(model) {
        Ok(w) => w,
        Err(e) => {
            report.run("kostant/complex", || Err(e));
            return;
        }
    };
    report.run("kostant/complex_squares_to_zero", || {
        Ok(format!(
            "dim W = {}, dim C1 = {}, dim C3 = {}",
            w.dim_w(),
            w.dim_c1(),
            w.dim_c3()
        ))
    });
    let harmonic = match w.harmonic_module() {
        Ok(h) => h,
        Err(e) => {
            report.run("kostant/split", || Err(e));
            return;
        }
    };
    report.run("kostant/split", || {
        Ok(format!(
            "dim ker ∂* = {} = dim Ŵ {} + rank ∂*₃ {}; Ŵ blocks {:?}",
            harmonic.dim_ker_boundary2,
            harmonic.dim_hat_w,
            harmonic.rank_boundary3,
            harmonic.dim_hat_w_blocks
        ))
    });
    report.run("kostant/euler", || {
        Ok(format!(
            "ranks ∂*₁={}, ∂*₂={}, ∂*₃={}, ∂₁₂={}, ∂₂₃={}",
            harmonic.rank_boundary1,
            harmonic.rank_boundary2,
            harmonic.rank_boundary3,
            harmonic.rank_cochain12,
            harmonic.rank_cochain23
        ))
    });
    report.run("kostant/hat_w_a_invariance", || {
        let tds = type_data(model, recipe)?;
        for td in &tds {
            w.check_hat_w_a_invariance(&td.triple, &harmonic)?;
        }
        Ok(format!("invariant under {} triples", tds.len()))
    });
    report.run("kostant/hat_w_g0_stability", || {
        let sampled = w.check_hat_w_g0_stability(&harmonic)?;
        Ok(format!("stable under {} sampled g_0 basis actions", sampled))
    });
    report.run("kostant/golden", || {
        let golden = crate::zoo::Golden::load()?;
        match golden.models.get(&model.id()) {
            None => Ok("no golden entry for this model".into()),
            Some(g) => {
                let computed = crate::zoo::compute_golden(model)?;
                if &computed == g {
                    Ok(format!(
                        "matches golden (dim Ŵ = {}, hash {})",
                        g.dim_hat_w,
                        golden.hash_of(&model.id()).unwrap_or_default()
                    ))
                } else {
                    Err(Error::CheckFailed(format!(
                        "golden mismatch: computed {:?}",
                        computed
                    )))
                }
            }
        }
    });
}

fn kernels_suite(model: &GradedModel, recipe: PartnerRecipe, report: &mut SuiteReport) {
    let w = match CurvatureModule::build(model) {
        Ok(w) => w,
        Err(e) => {
            report.run("kernels/build", || Err(e));
            return;
        }
    };
    let harmonic = match w.harmonic_module() {
        Ok(h) => h,
        Err(e) => {
            report.run("kernels/harmonic", || Err(e));
            return;
        }
    };
    let tds = match type_data(model, recipe) {
        Ok(t) => t,
        Err(e) => {
            report.run("kernels/types", || Err(e));
            return;
        }
    };
    for td in &tds {
        let weigen = match w.a_eigen_on_w(&td.triple, &td.eig) {
            Ok(we) => we,
            Err(e) => {
                report.run(&format!("kernels/eigen_w[{}]", td.label), || Err(e));
                continue;
            }
        };
        report.run(&format!("kernels/eigen_w[{}]", td.label), || {
            Ok(format!(
                "block dims (λ:d): W1 {:?} W2 {:?} W3 {:?}",
                weigen.block_dims(0),
                weigen.block_dims(1),
                weigen.block_dims(2)
            ))
        });
        report.run(&format!("kernels/inclusions[{}]", td.label), || {
            let r = w.check_kernel_inclusions(&td.triple, &td.eig, &weigen)?;
            Ok(format!(
                "Y basis {}, insertions checked a/b/c = {}/{}/{}",
                r.dim_y_basis, r.checked_a, r.checked_b, r.checked_c
            ))
        });
        report.run(&format!("kernels/ss_ladder[{}]", td.label), || {
            let r = w.ss_triviality_report(&td.eig, &weigen, &harmonic, &td.label)?;
            Ok(format!(
                "dim C(Z) = {}, dim W^[ss] = {}, dim Ŵ^[ss] = {}, dim g-1^[-2] = {}",
                r.dim_commutant, r.dim_w_ss, r.dim_hat_w_ss, r.dim_gm1_minus2
            ))
        });
        report.run(&format!("kernels/eigen_scaling[{}]", td.label), || {
            for k in [0i64, 1, 2] {
                if !flows::eigen_scaling_check(&w, &weigen, &td.triple, &rat(1), &rat(2), k)? {
                    return Err(Error::CheckFailed(format!(
                        "spectral scaling failed at k = {}",
                        k
                    )));
                }
            }
            Ok("spectral scaling verified for k = 0, 1, 2".into())
        });
    }
    if model.ring == Ring::Quat && model.spec.family == crate::model::Family::ProjLike {
        report.run("kernels/quaternionic_split", || {
            quaternionic_split_check(model, &tds[0])
        });
    }
}

/// 𝔤₋₁ = X·ℍ ⊕ ker(Z) for the quaternionic projective model: the right
/// ℍ-span of X is exactly the −2 eigenspace (dim_ℝ 4) and the kernel of
/// the block map Z is the −1 eigenspace.
fn quaternionic_split_check(model: &GradedModel, td: &TypeData) -> Result<String> {
    let dim = model.dim();
    let xb = model.gm1_block(&td.triple.x);
    let mut xh: Vec<Coords> = Vec::new();
    for u in 0..4 {
        let scaled = xb.scale_right(&Scalar::unit(Ring::Quat, u));
        xh.push(model.gm1_from_block(&scaled)?);
    }
    let xh_space = SparseSpace::from_vectors(
        dim,
        &xh.iter().map(|v| svec_from_dense(v)).collect::<Vec<_>>(),
    );
    if xh_space.dim() != 4 {
        return Err(Error::CheckFailed(format!(
            "dim_R X·H = {}, expected 4",
            xh_space.dim()
        )));
    }
    let minus2 = SparseSpace::from_vectors(
        dim,
        &td.eig
            .gm1
            .space(-2)
            .iter()
            .map(|v| svec_from_dense(v))
            .collect::<Vec<_>>(),
    );
    if minus2.dim() != 4 || !xh.iter().all(|v| minus2.contains(&svec_from_dense(v))) {
        return Err(Error::CheckFailed("X·H differs from g_-1^[-2]".into()));
    }
    // ker(Z) as a block map equals the −1 eigenspace
    let zb = model.g1_block(&td.triple.z);
    let kernel_cols = zb.kernel_basis();
    let mut kerz: Vec<Coords> = Vec::new();
    for col in kernel_cols {
        for u in 0..4 {
            let scaled = col.scale_right(&Scalar::unit(Ring::Quat, u));
            kerz.push(model.gm1_from_block(&scaled)?);
        }
    }
    let minus1 = SparseSpace::from_vectors(
        dim,
        &td.eig
            .gm1
            .space(-1)
            .iter()
            .map(|v| svec_from_dense(v))
            .collect::<Vec<_>>(),
    );
    let kerz_space = SparseSpace::from_vectors(
        dim,
        &kerz.iter().map(|v| svec_from_dense(v)).collect::<Vec<_>>(),
    );
    if kerz_space.dim() != minus1.dim()
        || !kerz.iter().all(|v| minus1.contains(&svec_from_dense(v)))
    {
        return Err(Error::CheckFailed("ker(Z) differs from g_-1^[-1]".into()));
    }
    Ok(format!(
        "g_-1 = X·H ⊕ ker(Z) with dims 4 + {}",
        kerz_space.dim()
    ))
}

fn flows_suite(model: &GradedModel, recipe: PartnerRecipe, report: &mut SuiteReport) {
    report.run("flows/sl2_identity_grid", || {
        let mut checked = 0;
        // 5×5 grids per scalar ring
        let zs = [rat(0), rat(1), rat(-1), ratio(1, 2), rat(2)];
        for ring in [Ring::Rat, Ring::Gauss, Ring::Quat] {
            let ws: Vec<Scalar> = match ring {
                Ring::Rat => zs.iter().map(|v| Scalar::from_rat(ring, v.clone())).collect(),
                Ring::Gauss => vec![
                    Scalar::unit(ring, 1),
                    Scalar::gauss(rat(1), rat(1)),
                    Scalar::gauss(rat(-1), rat(2)),
                    Scalar::gauss(ratio(1, 2), ratio(-1, 2)),
                    Scalar::gauss(rat(0), rat(-1)),
                ],
                Ring::Quat => vec![
                    Scalar::unit(ring, 2),
                    Scalar::unit(ring, 3),
                    &Scalar::one(ring) + &Scalar::unit(ring, 2),
                    &Scalar::unit(ring, 1) + &Scalar::unit(ring, 3),
                    Scalar::quat(rat(1), rat(1), rat(1), rat(1)),
                ],
            };
            for z in &zs {
                let zs_scalar = Scalar::from_rat(ring, z.clone());
                for w in &ws {
                    let f = &Scalar::one(ring) + &(w * &zs_scalar);
                    if f.is_zero() {
                        continue;
                    }
                    if !flows::check_sl2_identity(ring, &zs_scalar, w)? {
                        return Err(Error::CheckFailed(format!(
                            "SL(2) identity fails over {:?} at z={}, w={}",
                            ring, zs_scalar, w
                        )));
                    }
                    checked += 1;
                }
            }
        }
        Ok(format!("{} grid points over three rings", checked))
    });

    let tds = match type_data(model, recipe) {
        Ok(t) => t,
        Err(e) => {
            report.run("flows/types", || Err(e));
            return;
        }
    };
    let grid = [ratio(1, 2), ratio(-1, 2), rat(1), rat(-1), rat(2)];
    for td in &tds {
        report.run(&format!("flows/holonomy[{}]", td.label), || {
            let mut checked = 0;
            for s in &grid {
                for t in &grid {
                    if (Rat::one() + s * t).is_zero() {
                        continue;
                    }
                    let c = flows::check_holonomy_factorization(model, &td.triple, s, t)?;
                    if !c.exact {
                        return Err(Error::CheckFailed(format!(
                            "holonomy factorization inexact at s={}, t={}: residual {}",
                            s, t, c.max_residual
                        )));
                    }
                    checked += 1;
                }
            }
            Ok(format!("{} grid points exact", checked))
        });
        report.run(&format!("flows/power_group_law[{}]", td.label), || {
            let p2 = flows::power_of_a(model, &td.triple, &rat(2))?;
            let p3 = flows::power_of_a(model, &td.triple, &rat(3))?;
            let p6 = flows::power_of_a(model, &td.triple, &rat(6))?;
            let ph = flows::power_of_a(model, &td.triple, &ratio(1, 2))?;
            if &(&p2 * &p3) != &p6 {
                return Err(Error::CheckFailed("λ^A μ^A ≠ (λμ)^A".into()));
            }
            if &p2 * &ph != crate::linalg::Mat::identity(Ring::Rat, p2.rows()) {
                return Err(Error::CheckFailed("λ^A (1/λ)^A ≠ Id".into()));
            }
            Ok("spectral powers satisfy the group law".into())
        });
        report.run(&format!("flows/cocycle[{}]", td.label), || {
            for (s, t1, t2) in [
                (rat(1), rat(1), rat(1)),
                (ratio(1, 2), rat(2), rat(-1)),
                (rat(2), ratio(1, 2), ratio(1, 3)),
            ] {
                if !flows::check_cocycle(model, &td.triple, &s, &t1, &t2)? {
                    return Err(Error::CheckFailed("cocycle composition failed".into()));
                }
            }
            Ok("three sampled compositions".into())
        });
        if model.ring != Ring::Rat {
            report.run(&format!("flows/reparam[{}]", td.label), || {
                let vs: Vec<Scalar> = match model.ring {
                    Ring::Gauss => vec![
                        Scalar::unit(Ring::Gauss, 1),
                        Scalar::gauss(rat(1), rat(1)),
                    ],
                    Ring::Quat => vec![
                        Scalar::unit(Ring::Quat, 2),
                        &Scalar::one(Ring::Quat) + &Scalar::unit(Ring::Quat, 3),
                    ],
                    Ring::Rat => unreachable!(),
                };
                let mut checked = 0;
                for v in &vs {
                    for s in &grid {
                        for t in &grid {
                            let f = &Scalar::one(model.ring) + &v.scale(&(s * t));
                            if f.is_zero() {
                                continue;
                            }
                            let c = flows::check_reparam_identity(model, &td.triple, v, s, t)?;
                            if !c.exact {
                                return Err(Error::CheckFailed(format!(
                                    "reparametrization inexact at v={}, s={}, t={}",
                                    v, s, t
                                )));
                            }
                            checked += 1;
                        }
                    }
                }
                Ok(format!("{} grid points exact over {:?}", checked, model.ring))
            });
        }
    }
}

/// Check that flows and partners exist for an isotropy picked at random
/// from a type's orbit (used by the CLI's ad-hoc verification).
pub fn spot_check_partner(model: &GradedModel, z: &Coords) -> Result<()> {
    let t = crate::sl2::partner_for(model, z)?;
    if !is_partner(model, &t.z, &t.x) {
        return Err(Error::CheckFailed("partner_for returned a non-partner".into()));
    }
    Ok(())
}
