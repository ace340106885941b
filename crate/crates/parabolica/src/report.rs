//! Classification tables and rigidity verdicts.
//!
//! A [`Verdict`] row records, for one geometric type of one model, the
//! exact algebraic facts the rigidity results hinge on — dim C(Z),
//! dim 𝔤₋₁^\[−2], the strongly-stable dimensions on W and Ŵ — together
//! with citation tags naming which classification rows the (model, type)
//! pair instantiates. The tags assert that the algebraic hypotheses of
//! the corresponding results were verified here, nothing more: this
//! workbench has no manifolds, so it never claims flatness itself.
//!
//! Output is deterministic: types are enumerated in a fixed order and all
//! rationals print in canonical form, so the rendered table for the
//! default zoo is byte-identical across runs.

use crate::curvature::CurvatureModule;
use crate::error::Result;
use crate::isotropy::{enumerate_types, CausalClass, TypeInvariant};
use crate::model::{Family, GradedModel};
use crate::scalar::Ring;
use crate::sl2::{standard_partner, PartnerRecipe, TripleEigenData};
use serde::Serialize;

/// Citation tags: which classification row the verified hypotheses match.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, PartialOrd, Ord)]
pub enum Tag {
    #[serde(rename = "COR_4_2")]
    Cor42,
    #[serde(rename = "COR_4_8")]
    Cor48,
    #[serde(rename = "THM_CPROJ")]
    ThmCproj,
    #[serde(rename = "THM_QUAT")]
    ThmQuat,
    #[serde(rename = "THM_GRASS_2N")]
    ThmGrass2n,
}

impl Tag {
    pub fn label(self) -> &'static str {
        match self {
            Tag::Cor42 => "COR_4_2",
            Tag::Cor48 => "COR_4_8",
            Tag::ThmCproj => "THM_CPROJ",
            Tag::ThmQuat => "THM_QUAT",
            Tag::ThmGrass2n => "THM_GRASS_2N",
        }
    }
}

/// One row of the classification table.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub model: String,
    pub geometric_type: String,
    pub dim_commutant: usize,
    pub smoothly_isolated: bool,
    pub dim_gm1_minus2: usize,
    pub maximal_commutant: bool,
    pub applicable_results: Vec<Tag>,
    pub gm1_eigen_dims: Vec<(i64, usize)>,
    pub dim_w: usize,
    pub dim_hat_w: usize,
    pub dim_w_ss: usize,
    pub dim_hat_w_ss: usize,
}

/// The classification-row tags instantiated by (model, type), encoding
/// the exact side conditions of the tables (rank and dimension bounds,
/// ground field restrictions).
pub fn applicable_tags(model: &GradedModel, inv: &TypeInvariant) -> Vec<Tag> {
    let mut tags = Vec::new();
    match model.spec.family {
        Family::ProjLike => {
            tags.push(Tag::Cor42);
            match model.ring {
                Ring::Gauss => tags.push(Tag::ThmCproj),
                Ring::Quat => tags.push(Tag::ThmQuat),
                Ring::Rat => {}
            }
        }
        Family::Grassmann => {
            let p = model.spec.params[0];
            if let TypeInvariant::KRank(r) = inv {
                if *r == p {
                    tags.push(Tag::Cor42);
                }
                if *r == 1 && model.ring == Ring::Rat {
                    tags.push(Tag::Cor48);
                }
            }
            if p == 2 && model.ring == Ring::Rat {
                tags.push(Tag::ThmGrass2n);
            }
        }
        Family::Conformal => {
            let metric = model.conformal_metric();
            let p = metric.iter().filter(|d| num_traits::Signed::is_positive(*d)).count();
            let q = metric.len() - p;
            if p == 0 || q == 0 {
                tags.push(Tag::Cor42);
            } else if let TypeInvariant::Causal(class) = inv {
                match class {
                    CausalClass::Spacelike | CausalClass::Timelike => tags.push(Tag::Cor42),
                    CausalClass::Null => tags.push(Tag::Cor48),
                }
            }
        }
        Family::Lagrangean => {
            let n = model.spec.params[0];
            if n >= 3 {
                match inv {
                    TypeInvariant::Signature(p, q) => {
                        if p + q == n {
                            tags.push(Tag::Cor42);
                        }
                        if p + q == 1 {
                            tags.push(Tag::Cor48);
                        }
                    }
                    TypeInvariant::KRank(r) => {
                        // complex Lagrangean: only the isolated-zero row
                        if *r == n {
                            tags.push(Tag::Cor42);
                        }
                    }
                    _ => {}
                }
            }
        }
        Family::Spinorial => {
            let n = model.spec.params[0];
            if let TypeInvariant::SkewRank(r) = inv {
                let max_even = if n % 2 == 0 { n } else { n - 1 };
                if *r == max_even {
                    tags.push(Tag::Cor42);
                }
                if *r == 2 {
                    tags.push(Tag::Cor48);
                }
            }
        }
    }
    tags.sort();
    tags
}

/// The classification table's type count for a model.
pub fn expected_type_count(model: &GradedModel) -> usize {
    match model.spec.family {
        Family::ProjLike => 1,
        Family::Grassmann => model.spec.params[0],
        Family::Conformal => {
            let metric = model.conformal_metric();
            let p = metric.iter().filter(|d| num_traits::Signed::is_positive(*d)).count();
            if p == 0 || p == metric.len() {
                1
            } else {
                3
            }
        }
        Family::Lagrangean => {
            let n = model.spec.params[0];
            if model.ring == Ring::Gauss {
                n
            } else {
                // all signatures (p, q) with 1 ≤ p+q ≤ n
                n * (n + 3) / 2
            }
        }
        Family::Spinorial => model.spec.params[0] / 2,
    }
}

/// Full verdict table of a model: one row per geometric type, in the
/// canonical type order, with all exact dimensions computed.
pub fn verdicts(model: &GradedModel, recipe: PartnerRecipe) -> Result<Vec<Verdict>> {
    let types = enumerate_types(model)?;
    if types.len() != expected_type_count(model) {
        return Err(crate::error::Error::CheckFailed(format!(
            "{}: {} types enumerated, table expects {}",
            model.id(),
            types.len(),
            expected_type_count(model)
        )));
    }
    let w = CurvatureModule::build(model)?;
    let harmonic = w.harmonic_module()?;

    let mut rows = Vec::new();
    let mut commutant_dims = Vec::new();
    for gt in &types {
        let triple = standard_partner(model, gt, recipe)?;
        let eig = TripleEigenData::compute(model, &triple)?;
        let weigen = w.a_eigen_on_w(&triple, &eig)?;
        let label = format!("{}", gt.invariant);
        let ss = w.ss_triviality_report(&eig, &weigen, &harmonic, &label)?;
        commutant_dims.push(ss.dim_commutant);
        rows.push(Verdict {
            model: model.id(),
            geometric_type: label,
            dim_commutant: ss.dim_commutant,
            smoothly_isolated: ss.dim_commutant == 0,
            dim_gm1_minus2: ss.dim_gm1_minus2,
            maximal_commutant: false,
            applicable_results: applicable_tags(model, &gt.invariant),
            gm1_eigen_dims: eig.gm1.dims(),
            dim_w: harmonic.dim_w,
            dim_hat_w: harmonic.dim_hat_w,
            dim_w_ss: ss.dim_w_ss,
            dim_hat_w_ss: ss.dim_hat_w_ss,
        });
    }
    let max_c = commutant_dims.iter().copied().max().unwrap_or(0);
    for row in &mut rows {
        row.maximal_commutant = row.dim_commutant == max_c;
    }
    Ok(rows)
}

fn tags_str(tags: &[Tag]) -> String {
    if tags.is_empty() {
        "NONE".to_string()
    } else {
        tags.iter().map(|t| t.label()).collect::<Vec<_>>().join("+")
    }
}

fn eigen_dims_str(dims: &[(i64, usize)]) -> String {
    dims.iter()
        .map(|(l, d)| format!("{}:{}", l, d))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Markdown rendering of a verdict table.
pub fn render_markdown(rows: &[Verdict]) -> String {
    let mut out = String::new();
    if let Some(first) = rows.first() {
        out.push_str(&format!(
            "## {}  (dim W = {}, dim Ŵ = {})\n\n",
            first.model, first.dim_w, first.dim_hat_w
        ));
    }
    out.push_str(
        "| type | dim C(Z) | isolated | dim g-1^[-2] | max C | g-1 eigen dims | dim W^[ss] | dim Ŵ^[ss] | results |\n",
    );
    out.push_str("|---|---|---|---|---|---|---|---|---|\n");
    for r in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} |\n",
            r.geometric_type,
            r.dim_commutant,
            r.smoothly_isolated,
            r.dim_gm1_minus2,
            r.maximal_commutant,
            eigen_dims_str(&r.gm1_eigen_dims),
            r.dim_w_ss,
            r.dim_hat_w_ss,
            tags_str(&r.applicable_results),
        ));
    }
    out
}

/// CSV rendering (one header line, then one line per type).
pub fn render_csv(rows: &[Verdict]) -> String {
    let mut out = String::from(
        "model,type,dim_commutant,smoothly_isolated,dim_gm1_minus2,maximal_commutant,dim_w_ss,dim_hat_w_ss,results\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.model,
            r.geometric_type.replace(',', ";"),
            r.dim_commutant,
            r.smoothly_isolated,
            r.dim_gm1_minus2,
            r.maximal_commutant,
            r.dim_w_ss,
            r.dim_hat_w_ss,
            tags_str(&r.applicable_results),
        ));
    }
    out
}

pub fn render_json(rows: &[Verdict]) -> Result<String> {
    #[derive(Serialize)]
    struct Table<'a> {
        schema_version: u32,
        rows: &'a [Verdict],
    }
    Ok(serde_json::to_string_pretty(&Table {
        schema_version: 1,
        rows,
    })?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ModelSpec;

    fn build(family: Family, ring: Ring, params: &[usize]) -> GradedModel {
        GradedModel::build(&ModelSpec::new(family, ring, params)).unwrap()
    }

    #[test]
    fn grassmann_2_2_verdicts() {
        let m = build(Family::Grassmann, Ring::Rat, &[2, 2]);
        let rows = verdicts(&m, PartnerRecipe::BlockTranspose).unwrap();
        assert_eq!(rows.len(), 2);
        // rank 1: maximal commutant, tagged COR_4_8 (+ the (2,n) theorem)
        assert!(!rows[0].smoothly_isolated);
        assert!(rows[0].maximal_commutant);
        assert!(rows[0].applicable_results.contains(&Tag::Cor48));
        assert!(rows[0].applicable_results.contains(&Tag::ThmGrass2n));
        assert_eq!(rows[0].dim_gm1_minus2, 1);
        // rank 2: smoothly isolated, tagged COR_4_2
        assert!(rows[1].smoothly_isolated);
        assert!(rows[1].applicable_results.contains(&Tag::Cor42));
        assert!(!rows[1].applicable_results.contains(&Tag::Cor48));
    }

    #[test]
    fn quaternionic_projective_verdict() {
        let m = build(Family::ProjLike, Ring::Quat, &[1, 2]);
        let rows = verdicts(&m, PartnerRecipe::BlockTranspose).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows[0].smoothly_isolated);
        assert_eq!(
            rows[0].applicable_results,
            vec![Tag::Cor42, Tag::ThmQuat]
        );
    }

    #[test]
    fn conformal_verdicts() {
        let m = build(Family::Conformal, Ring::Rat, &[2, 3]);
        let rows = verdicts(&m, PartnerRecipe::ConformalDual).unwrap();
        assert_eq!(rows.len(), 3);
        for r in &rows {
            match r.geometric_type.as_str() {
                "null" => {
                    assert!(r.maximal_commutant);
                    assert_eq!(r.dim_gm1_minus2, 1);
                    assert_eq!(r.applicable_results, vec![Tag::Cor48]);
                }
                _ => {
                    assert!(r.smoothly_isolated);
                    assert_eq!(r.applicable_results, vec![Tag::Cor42]);
                }
            }
        }
    }

    #[test]
    fn small_symplectic_rank_one_is_untagged() {
        // sp(4,R): the classification rows require n ≥ 3, so nothing is
        // tagged even though the dimensions behave the same way
        let m = build(Family::Lagrangean, Ring::Rat, &[2]);
        let rows = verdicts(&m, PartnerRecipe::SameBlock).unwrap();
        assert_eq!(rows.len(), 5);
        for r in &rows {
            assert!(r.applicable_results.is_empty());
        }
        // while sp(6,R) tags full-rank signatures and rank-one signatures
        let m6 = build(Family::Lagrangean, Ring::Rat, &[3]);
        let rows6 = verdicts(&m6, PartnerRecipe::SameBlock).unwrap();
        assert_eq!(rows6.len(), 9);
        let tagged_42 = rows6
            .iter()
            .filter(|r| r.applicable_results.contains(&Tag::Cor42))
            .count();
        let tagged_48 = rows6
            .iter()
            .filter(|r| r.applicable_results.contains(&Tag::Cor48))
            .count();
        assert_eq!(tagged_42, 4); // signatures (3,0), (2,1), (1,2), (0,3)
        assert_eq!(tagged_48, 2); // signatures (1,0), (0,1)
    }

    #[test]
    fn default_zoo_table_is_byte_identical_across_runs() {
        let zoo = crate::zoo::Zoo::load().unwrap();
        let render_all = || -> String {
            let mut out = String::new();
            for entry in &zoo.models {
                let model = GradedModel::build(&entry.spec).unwrap();
                out.push_str(&render_markdown(&verdicts(&model, entry.partner).unwrap()));
            }
            out
        };
        assert_eq!(render_all(), render_all());
    }

    #[test]
    fn renders_are_deterministic() {
        let m = build(Family::ProjLike, Ring::Rat, &[1, 2]);
        let rows = verdicts(&m, PartnerRecipe::BlockTranspose).unwrap();
        let a = render_markdown(&rows);
        let b = render_markdown(&verdicts(&m, PartnerRecipe::BlockTranspose).unwrap());
        assert_eq!(a, b);
        assert!(render_csv(&rows).contains("sl(3,R)/p(1)"));
        assert!(render_json(&rows).unwrap().contains("\"COR_4_2\""));
    }
}
