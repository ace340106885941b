//! Geometric types of nonzero isotropies Z ∈ 𝔤₁.
//!
//! The G₀-orbit of Z is classified by a family-specific invariant: the
//! 𝕂-rank of the block matrix for the 𝔰𝔩 families, the causal class of
//! the covector for conformal models, the signature of the quadratic form
//! for real Lagrangean models (the rank over ℂ), and the (even) rank for
//! spinorial models. Each type carries a standard representative Z₀, and
//! [`normal_form`] produces an explicit grading-preserving group element g
//! with Ad(g)·Z = Z₀, exactly.
//!
//! All normalization is rational. Rank normal forms (𝔰𝔩 over all three
//! rings, spinorial) and null conformal covectors always normalize over
//! ℚ; non-null conformal and real Lagrangean types may require scaling a
//! value to ±1 whose absolute value is not a rational square, in which
//! case normalization stops with [`Error::RationalObstruction`] rather
//! than leave exact arithmetic. Orbit invariants are unaffected.

use crate::error::{Error, Result};
use crate::lie::{coords_is_zero, Coords};
use crate::linalg::Mat;
use crate::model::{Comp, Family, GradedModel};
use crate::scalar::{rat, Rat, Ring, Scalar};
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;
use std::fmt;

/// Causal class of a conformal isotropy.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, PartialOrd, Ord)]
#[serde(rename_all = "UPPERCASE")]
pub enum CausalClass {
    Spacelike,
    Timelike,
    Null,
}

/// The family-specific orbit invariant.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, PartialOrd, Ord)]
#[serde(rename_all = "snake_case")]
pub enum TypeInvariant {
    /// 𝕂-rank for the 𝔰𝔩 families and complex Lagrangean models.
    KRank(usize),
    /// Sylvester signature (p, q) of a real quadratic form; the radical
    /// has dimension n − p − q.
    Signature(usize, usize),
    /// Causal class of a conformal covector.
    Causal(CausalClass),
    /// Rank 2ℓ of a skew form.
    SkewRank(usize),
}

impl fmt::Display for TypeInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeInvariant::KRank(r) => write!(f, "rank {}", r),
            TypeInvariant::Signature(p, q) => write!(f, "sig ({},{})", p, q),
            TypeInvariant::Causal(CausalClass::Spacelike) => write!(f, "spacelike"),
            TypeInvariant::Causal(CausalClass::Timelike) => write!(f, "timelike"),
            TypeInvariant::Causal(CausalClass::Null) => write!(f, "null"),
            TypeInvariant::SkewRank(r) => write!(f, "rank {}", r),
        }
    }
}

/// Orbit invariant together with its standard representative.
#[derive(Clone, PartialEq, Debug)]
pub struct GeometricType {
    pub family: Family,
    pub field: String,
    pub invariant: TypeInvariant,
    pub representative: Coords,
}

impl Serialize for GeometricType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GeometricType", 4)?;
        st.serialize_field("family", &self.family)?;
        st.serialize_field("field", &self.field)?;
        st.serialize_field("invariant", &self.invariant)?;
        let rep: Vec<String> = self.representative.iter().map(|x| x.to_string()).collect();
        st.serialize_field("representative", &rep)?;
        st.end()
    }
}

/// The orbit invariant of a nonzero isotropy.
pub fn orbit_invariant(model: &GradedModel, z: &[Rat]) -> Result<GeometricType> {
    if coords_is_zero(z) {
        return Err(Error::ZeroIsotropy);
    }
    if !model.in_component(Comp::G1, z) {
        return Err(Error::WrongComponent("isotropy must lie in g_1".into()));
    }
    let invariant = match model.spec.family {
        Family::ProjLike | Family::Grassmann => TypeInvariant::KRank(model.g1_block(z).rank()),
        Family::Conformal => {
            let zb = model.g1_block(z);
            let q = dual_square(model.conformal_metric(), &zb);
            TypeInvariant::Causal(if q.is_zero() {
                CausalClass::Null
            } else if q.is_positive() {
                CausalClass::Spacelike
            } else {
                CausalClass::Timelike
            })
        }
        Family::Lagrangean => {
            if model.ring == Ring::Gauss {
                TypeInvariant::KRank(model.g1_block(z).rank())
            } else {
                let (_, diag) = sym_congruence_diagonalize(&model.g1_block(z));
                let pos = diag.iter().filter(|d| d.is_positive()).count();
                let neg = diag.iter().filter(|d| d.is_negative()).count();
                TypeInvariant::Signature(pos, neg)
            }
        }
        Family::Spinorial => TypeInvariant::SkewRank(model.g1_block(z).rank()),
    };
    geometric_type(model, invariant)
}

/// Assemble the type with its standard representative.
pub fn geometric_type(model: &GradedModel, invariant: TypeInvariant) -> Result<GeometricType> {
    let representative = standard_representative(model, &invariant)?;
    Ok(GeometricType {
        family: model.spec.family,
        field: model.spec.field.clone(),
        invariant,
        representative,
    })
}

/// The stored standard representative of a type, as 𝔤₁ coordinates.
pub fn standard_representative(model: &GradedModel, inv: &TypeInvariant) -> Result<Coords> {
    let blk = match (&model.spec.family, inv) {
        (Family::ProjLike | Family::Grassmann, TypeInvariant::KRank(r)) => {
            let [p, q] = [model.spec.params[0], model.spec.params[1]];
            if *r == 0 || *r > p {
                return Err(Error::BadParams(format!("rank {} out of range", r)));
            }
            Mat::from_fn(model.ring, p, q, |i, j| {
                if i == j && i < *r {
                    Scalar::one(model.ring)
                } else {
                    Scalar::zero(model.ring)
                }
            })
        }
        (Family::Conformal, TypeInvariant::Causal(class)) => {
            let metric = model.conformal_metric();
            let m = metric.len();
            let p = metric.iter().filter(|d| d.is_positive()).count();
            let mut row = vec![Rat::zero(); m];
            match class {
                CausalClass::Spacelike => {
                    if p == 0 {
                        return Err(Error::BadParams("no spacelike covectors when p = 0".into()));
                    }
                    row[0] = Rat::one();
                }
                CausalClass::Timelike => {
                    if p == m {
                        return Err(Error::BadParams("no timelike covectors when q = 0".into()));
                    }
                    row[p] = Rat::one();
                }
                CausalClass::Null => {
                    if p == 0 || p == m {
                        return Err(Error::BadParams("null covectors need pq != 0".into()));
                    }
                    row[0] = Rat::one();
                    row[p] = Rat::one();
                }
            }
            Mat::from_rat_rows(vec![row])
        }
        (Family::Lagrangean, TypeInvariant::Signature(p, q)) => {
            let n = model.spec.params[0];
            if p + q == 0 || p + q > n {
                return Err(Error::BadParams(format!("signature ({},{}) out of range", p, q)));
            }
            Mat::from_fn(model.ring, n, n, |i, j| {
                if i != j {
                    Scalar::zero(model.ring)
                } else if i < *p {
                    Scalar::one(model.ring)
                } else if i < p + q {
                    -&Scalar::one(model.ring)
                } else {
                    Scalar::zero(model.ring)
                }
            })
        }
        (Family::Lagrangean, TypeInvariant::KRank(r)) => {
            let n = model.spec.params[0];
            if *r == 0 || *r > n {
                return Err(Error::BadParams(format!("rank {} out of range", r)));
            }
            Mat::from_fn(model.ring, n, n, |i, j| {
                if i == j && i < *r {
                    Scalar::one(model.ring)
                } else {
                    Scalar::zero(model.ring)
                }
            })
        }
        (Family::Spinorial, TypeInvariant::SkewRank(r)) => {
            let n = model.spec.params[0];
            if *r == 0 || *r > n || r % 2 != 0 {
                return Err(Error::BadParams(format!("skew rank {} out of range", r)));
            }
            Mat::from_fn(model.ring, n, n, |i, j| {
                if j == i + 1 && i % 2 == 0 && j < *r {
                    Scalar::one(model.ring)
                } else if i == j + 1 && j % 2 == 0 && i < *r {
                    -&Scalar::one(model.ring)
                } else {
                    Scalar::zero(model.ring)
                }
            })
        }
        (fam, inv) => {
            return Err(Error::BadParams(format!(
                "invariant {:?} does not match family {:?}",
                inv, fam
            )))
        }
    };
    model.g1_from_block(&blk)
}

/// Complete, deterministically ordered list of geometric types.
pub fn enumerate_types(model: &GradedModel) -> Result<Vec<GeometricType>> {
    let mut invs = Vec::new();
    match model.spec.family {
        Family::ProjLike | Family::Grassmann => {
            for r in 1..=model.spec.params[0] {
                invs.push(TypeInvariant::KRank(r));
            }
        }
        Family::Conformal => {
            let metric = model.conformal_metric();
            let p = metric.iter().filter(|d| d.is_positive()).count();
            let q = metric.len() - p;
            if q == 0 {
                invs.push(TypeInvariant::Causal(CausalClass::Spacelike));
            } else if p == 0 {
                invs.push(TypeInvariant::Causal(CausalClass::Timelike));
            } else {
                invs.push(TypeInvariant::Causal(CausalClass::Spacelike));
                invs.push(TypeInvariant::Causal(CausalClass::Timelike));
                invs.push(TypeInvariant::Causal(CausalClass::Null));
            }
        }
        Family::Lagrangean => {
            let n = model.spec.params[0];
            if model.ring == Ring::Gauss {
                for r in 1..=n {
                    invs.push(TypeInvariant::KRank(r));
                }
            } else {
                for total in 1..=n {
                    for pos in (0..=total).rev() {
                        invs.push(TypeInvariant::Signature(pos, total - pos));
                    }
                }
            }
        }
        Family::Spinorial => {
            let n = model.spec.params[0];
            for l in 1..=(n / 2) {
                invs.push(TypeInvariant::SkewRank(2 * l));
            }
        }
    }
    invs.into_iter().map(|i| geometric_type(model, i)).collect()
}

/// Basis of the commutant C(Z) = {X ∈ 𝔤₋₁ : \[Z, X] = 0}.
pub fn commutant(model: &GradedModel, z: &[Rat]) -> Result<Vec<Coords>> {
    if coords_is_zero(z) {
        return Err(Error::ZeroIsotropy);
    }
    let dim = model.dim();
    let gm1 = model.range(Comp::Gm1);
    let d = gm1.len();
    // columns: [z, e_i] for e_i running over the g_-1 basis
    let mut m = Mat::zeros(Ring::Rat, dim, d);
    for (c, i) in gm1.clone().enumerate() {
        let img = model.algebra.bracket(z, &crate::lie::coords_unit(dim, i));
        for (r, v) in img.iter().enumerate() {
            if !v.is_zero() {
                m.set(r, c, Scalar::from_rat(Ring::Rat, v.clone()));
            }
        }
    }
    Ok(m
        .kernel_basis()
        .into_iter()
        .map(|k| {
            let mut full = vec![Rat::zero(); dim];
            for c in 0..d {
                full[gm1.start + c] = k.get(c, 0).expect_rat();
            }
            full
        })
        .collect())
}

/// Normalize Z to its standard representative: returns the type and a
/// grading-preserving defining-rep matrix g with Ad(g)·Z = Z₀, verified
/// exactly before returning.
pub fn normal_form(model: &GradedModel, z: &[Rat]) -> Result<(GeometricType, Mat)> {
    let gt = orbit_invariant(model, z)?;
    let ambient = model.algebra.ambient_size();
    if z == gt.representative.as_slice() {
        return Ok((gt, Mat::identity(model.ring, ambient)));
    }
    let g = match model.spec.family {
        Family::ProjLike | Family::Grassmann => {
            let [p, q] = [model.spec.params[0], model.spec.params[1]];
            let (a, b) = rank_normal_form(&model.g1_block(z))?;
            let mut g = Mat::zeros(model.ring, ambient, ambient);
            copy_block(&mut g, &a, 0, 0);
            copy_block(&mut g, &b, p, p);
            let _ = q;
            g
        }
        Family::Conformal => conformal_normal_form(model, z, &gt)?,
        Family::Lagrangean => {
            if model.ring == Ring::Gauss {
                // complex symmetric forms: congruence reaches the rank form
                let c = complex_sym_normal_form(&model.g1_block(z))?;
                sp_like_group_element(model, &c)
            } else {
                let c = real_sym_normal_form(&model.g1_block(z), &gt.invariant)?;
                sp_like_group_element(model, &c)
            }
        }
        Family::Spinorial => {
            let c = skew_normal_form(&model.g1_block(z));
            sp_like_group_element(model, &c)
        }
    };

    let moved = model.ad_group(&g, z)?;
    if moved != gt.representative {
        return Err(Error::CheckFailed(format!(
            "normalization of {:?} did not reach the representative",
            gt.invariant
        )));
    }
    Ok((gt, g))
}

fn copy_block(dst: &mut Mat, src: &Mat, r0: usize, c0: usize) {
    for r in 0..src.rows() {
        for c in 0..src.cols() {
            dst.set(r0 + r, c0 + c, src.get(r, c).clone());
        }
    }
}

/// diag(C, C⁻ᵗ), the Levi element of the sp/spin families acting by
/// congruence Z ↦ C Z Cᵗ on the upper block.
fn sp_like_group_element(model: &GradedModel, c: &Mat) -> Mat {
    let n = c.rows();
    let cinv_t = c.inverse().expect("congruence matrix invertible").transpose();
    let mut g = Mat::zeros(model.ring, 2 * n, 2 * n);
    copy_block(&mut g, c, 0, 0);
    copy_block(&mut g, &cinv_t, n, n);
    g
}

// ---- rank normal form over a division ring ------------------------------

/// Invertible (a, b) with a·Z·b⁻¹ = Σ_{i<r} E_ii, by left row operations
/// and right column operations. Works over ℚ, ℚ(i) and ℍ(ℚ) alike.
fn rank_normal_form(zb: &Mat) -> Result<(Mat, Mat)> {
    let ring = zb.ring();
    let (p, q) = (zb.rows(), zb.cols());
    let mut m = zb.clone();
    let mut a = Mat::identity(ring, p);
    let mut binv = Mat::identity(ring, q);

    let mut rank = 0;
    for col in 0..q {
        let Some(pr) = (rank..p).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        if pr != rank {
            swap_rows(&mut m, pr, rank);
            swap_rows(&mut a, pr, rank);
        }
        let inv = m.get(rank, col).inv().expect("nonzero pivot");
        scale_row(&mut m, rank, &inv);
        scale_row(&mut a, rank, &inv);
        for r in 0..p {
            if r != rank && !m.get(r, col).is_zero() {
                let f = m.get(r, col).clone();
                row_axpy(&mut m, r, rank, &f);
                row_axpy(&mut a, r, rank, &f);
            }
        }
        // move the pivot column into position `rank`
        if col != rank {
            swap_cols(&mut m, col, rank);
            swap_cols(&mut binv, col, rank);
        }
        rank += 1;
    }
    // clear the non-pivot columns on pivot rows by right column operations
    for f in rank..q {
        for k in 0..rank {
            let lam = m.get(k, f).clone();
            if lam.is_zero() {
                continue;
            }
            col_axpy(&mut m, f, k, &lam);
            col_axpy(&mut binv, f, k, &lam);
        }
    }
    for r in 0..p {
        for c in 0..q {
            let expected_one = r == c && r < rank;
            let v = m.get(r, c);
            if expected_one != (v == &Scalar::one(ring)) && !(v.is_zero() && !expected_one) {
                return Err(Error::CheckFailed("rank normal form did not converge".into()));
            }
        }
    }
    let b = binv
        .inverse()
        .ok_or_else(|| Error::CheckFailed("column transform not invertible".into()))?;
    Ok((a, b))
}

fn swap_rows(m: &mut Mat, r1: usize, r2: usize) {
    for c in 0..m.cols() {
        let x = m.get(r1, c).clone();
        let y = m.get(r2, c).clone();
        m.set(r1, c, y);
        m.set(r2, c, x);
    }
}

fn swap_cols(m: &mut Mat, c1: usize, c2: usize) {
    for r in 0..m.rows() {
        let x = m.get(r, c1).clone();
        let y = m.get(r, c2).clone();
        m.set(r, c1, y);
        m.set(r, c2, x);
    }
}

fn scale_row(m: &mut Mat, r: usize, s: &Scalar) {
    for c in 0..m.cols() {
        let v = s * m.get(r, c);
        m.set(r, c, v);
    }
}

/// row r -= f · row src
fn row_axpy(m: &mut Mat, r: usize, src: usize, f: &Scalar) {
    for c in 0..m.cols() {
        let v = m.get(r, c) - &(f * m.get(src, c));
        m.set(r, c, v);
    }
}

/// col f -= col src · lam
fn col_axpy(m: &mut Mat, f: usize, src: usize, lam: &Scalar) {
    for r in 0..m.rows() {
        let v = m.get(r, f) - &(m.get(r, src) * lam);
        m.set(r, f, v);
    }
}

// ---- symmetric and skew congruence ---------------------------------------

/// C with C·M·Cᵗ diagonal, for symmetric rational M; returns (C, diagonal).
fn sym_congruence_diagonalize(m: &Mat) -> (Mat, Vec<Rat>) {
    let n = m.rows();
    let mut w = m.clone();
    let mut c = Mat::identity(Ring::Rat, n);
    for i in 0..n {
        if w.get(i, i).is_zero() {
            // bring a nonzero diagonal entry into place, or manufacture one
            if let Some(j) = ((i + 1)..n).find(|&j| !w.get(j, j).is_zero()) {
                congruence_swap(&mut w, &mut c, i, j);
            } else if let Some(j) = ((i + 1)..n).find(|&j| !w.get(i, j).is_zero()) {
                // row_i += row_j (and col_i += col_j): diagonal becomes 2·w_ij
                congruence_add(&mut w, &mut c, i, j, &Rat::one());
            } else {
                continue;
            }
        }
        let d = w.get(i, i).expect_rat();
        for r in (i + 1)..n {
            let v = w.get(r, i).expect_rat();
            if !v.is_zero() {
                congruence_add(&mut w, &mut c, r, i, &(-(v / &d)));
            }
        }
    }
    let diag = (0..n).map(|i| w.get(i, i).expect_rat()).collect();
    (c, diag)
}

/// Simultaneous row/col swap, tracking the congruence matrix.
fn congruence_swap(w: &mut Mat, c: &mut Mat, i: usize, j: usize) {
    swap_rows(w, i, j);
    swap_cols(w, i, j);
    swap_rows(c, i, j);
}

/// row_i += f·row_j and col_i += f·col_j, tracking the congruence matrix.
fn congruence_add(w: &mut Mat, c: &mut Mat, i: usize, j: usize, f: &Rat) {
    let s = Scalar::from_rat(Ring::Rat, f.clone());
    for col in 0..w.cols() {
        let v = w.get(i, col) + &(&s * w.get(j, col));
        w.set(i, col, v);
    }
    for row in 0..w.rows() {
        let v = w.get(row, i) + &(&s * w.get(row, j));
        w.set(row, i, v);
    }
    for col in 0..c.cols() {
        let v = c.get(i, col) + &(&s * c.get(j, col));
        c.set(i, col, v);
    }
}

/// Is |x| the square of a rational? Returns its exact square root.
fn rational_sqrt_abs(x: &Rat) -> Option<Rat> {
    let a = x.abs();
    let (n, d) = (a.numer().clone(), a.denom().clone());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    if &sn * &sn == n && &sd * &sd == d {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// Congruence to diag(1…1, −1…−1, 0…0) over ℚ. Entries whose absolute
/// value is not a rational square are retried pairwise (a two-dimensional
/// subform of one sign class may represent ±1 even when neither diagonal
/// entry does); remaining obstructions are reported.
fn real_sym_normal_form(zb: &Mat, inv: &TypeInvariant) -> Result<Mat> {
    let n = zb.rows();
    let (c0, _) = sym_congruence_diagonalize(zb);
    let mut c = c0;
    let mut w = &(&c * zb) * &c.transpose();

    // scale squares to ±1
    for i in 0..n {
        let d = w.get(i, i).expect_rat();
        if d.is_zero() {
            continue;
        }
        if let Some(s) = rational_sqrt_abs(&d) {
            let f = Rat::one() / s;
            scale_row(&mut c, i, &Scalar::from_rat(Ring::Rat, f.clone()));
            scale_row(&mut w, i, &Scalar::from_rat(Ring::Rat, f.clone()));
            for r in 0..n {
                let v = w.get(r, i).expect_rat() * &f;
                w.set(r, i, Scalar::from_rat(Ring::Rat, v));
            }
        }
    }

    // pairwise improvement within a sign class: find x, y with
    // d_i x² + d_j y² = ±1
    for i in 0..n {
        let di = w.get(i, i).expect_rat();
        if di.is_zero() || di.abs().is_one() {
            continue;
        }
        for j in (i + 1)..n {
            let dj = w.get(j, j).expect_rat();
            if dj.is_zero() || dj.abs().is_one() || di.is_positive() != dj.is_positive() {
                continue;
            }
            let target = if di.is_positive() { rat(1) } else { rat(-1) };
            if let Some((x, y)) = represent_target(&di, &dj, &target) {
                // new basis vectors in the (i,j) plane: v = x e_i + y e_j of
                // square ±1 and the orthogonal w' = −d_j y e_i + d_i x e_j
                let mut t = Mat::identity(Ring::Rat, n);
                t.set(i, i, Scalar::from_rat(Ring::Rat, x.clone()));
                t.set(i, j, Scalar::from_rat(Ring::Rat, y.clone()));
                t.set(j, i, Scalar::from_rat(Ring::Rat, -(&dj * &y)));
                t.set(j, j, Scalar::from_rat(Ring::Rat, &di * &x));
                c = &t * &c;
                w = &(&c * zb) * &c.transpose();
                // the j-th entry is now d_i d_j of square value; rescale it
                let djj = w.get(j, j).expect_rat();
                if let Some(s) = rational_sqrt_abs(&djj) {
                    let f = Rat::one() / s;
                    let mut t2 = Mat::identity(Ring::Rat, n);
                    t2.set(j, j, Scalar::from_rat(Ring::Rat, f));
                    c = &t2 * &c;
                    w = &(&c * zb) * &c.transpose();
                }
                break;
            }
        }
    }

    for i in 0..n {
        let d = w.get(i, i).expect_rat();
        if !d.is_zero() && !d.abs().is_one() {
            return Err(Error::RationalObstruction(format!(
                "diagonal value {} is not a rational square times ±1; \
                 the {:?} orbit has no rational point at the representative",
                d, inv
            )));
        }
    }

    // reorder to +1 block, −1 block, zeros
    let order_key = |d: &Rat| {
        if d.is_positive() {
            0
        } else if d.is_negative() {
            1
        } else {
            2
        }
    };
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| (order_key(&w.get(i, i).expect_rat()), i));
    let perm = Mat::from_fn(Ring::Rat, n, n, |r, col| {
        if idx[r] == col {
            Scalar::one(Ring::Rat)
        } else {
            Scalar::zero(Ring::Rat)
        }
    });
    Ok(&perm * &c)
}

/// Bounded search for d_i x² + d_j y² = target over small rationals.
fn represent_target(di: &Rat, dj: &Rat, target: &Rat) -> Option<(Rat, Rat)> {
    for den in 1i64..=24 {
        for an in 0i64..=24 {
            for bn in 0i64..=24 {
                let x = crate::scalar::ratio(an, den);
                let y = crate::scalar::ratio(bn, den);
                if &(di * &x * &x) + &(dj * &y * &y) == *target {
                    return Some((x, y));
                }
            }
        }
    }
    None
}

/// Complex symmetric congruence to the rank form diag(1…1, 0…0); over
/// ℚ(i) every nonzero value is a square, but only square scalings are
/// attempted, so inputs needing irrational square roots are reported.
fn complex_sym_normal_form(zb: &Mat) -> Result<Mat> {
    let n = zb.rows();
    // reuse the rational-style sweep; pivots are complex now
    let mut w = zb.clone();
    let mut c = Mat::identity(Ring::Gauss, n);
    for i in 0..n {
        if w.get(i, i).is_zero() {
            if let Some(j) = ((i + 1)..n).find(|&j| !w.get(j, j).is_zero()) {
                swap_rows(&mut w, i, j);
                swap_cols(&mut w, i, j);
                swap_rows(&mut c, i, j);
            } else if let Some(j) = ((i + 1)..n).find(|&j| !w.get(i, j).is_zero()) {
                gauss_congruence_add(&mut w, &mut c, i, j, &Scalar::one(Ring::Gauss));
            } else {
                continue;
            }
        }
        let d = w.get(i, i).clone();
        let dinv = d.inv().unwrap();
        for r in (i + 1)..n {
            let v = w.get(r, i).clone();
            if !v.is_zero() {
                let f = -&(&v * &dinv);
                gauss_congruence_add(&mut w, &mut c, r, i, &f);
            }
        }
    }
    // scale diagonal entries to 1 when a Gaussian square root exists
    for i in 0..n {
        let d = w.get(i, i).clone();
        if d.is_zero() {
            continue;
        }
        let s = gauss_sqrt(&d).ok_or_else(|| {
            Error::RationalObstruction(format!(
                "complex diagonal value {} has no rational Gaussian square root",
                d
            ))
        })?;
        let f = s.inv().unwrap();
        scale_row(&mut c, i, &f);
        scale_row(&mut w, i, &f);
        for r in 0..n {
            let v = w.get(r, i).clone();
            w.set(r, i, &v * &f);
        }
    }
    // move the rank block to the front
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| (w.get(i, i).is_zero() as usize, i));
    let perm = Mat::from_fn(Ring::Gauss, n, n, |r, col| {
        if idx[r] == col {
            Scalar::one(Ring::Gauss)
        } else {
            Scalar::zero(Ring::Gauss)
        }
    });
    Ok(&perm * &c)
}

fn gauss_congruence_add(w: &mut Mat, c: &mut Mat, i: usize, j: usize, f: &Scalar) {
    for col in 0..w.cols() {
        let v = w.get(i, col) + &(f * w.get(j, col));
        w.set(i, col, v);
    }
    for row in 0..w.rows() {
        let v = w.get(row, i) + &(w.get(row, j) * f);
        w.set(row, i, v);
    }
    for col in 0..c.cols() {
        let v = c.get(i, col) + &(f * c.get(j, col));
        c.set(i, col, v);
    }
}

/// Gaussian-rational square root of a + bi, if one exists in ℚ(i).
fn gauss_sqrt(z: &Scalar) -> Option<Scalar> {
    let comps = z.components();
    let (a, b) = (comps[0].clone(), comps[1].clone());
    // (x + yi)² = x² − y² + 2xyi; the norm forces x² + y² = √(a² + b²)
    let norm = &a * &a + &b * &b;
    let r = rational_sqrt_abs(&norm)?;
    // x² = (a + r)/2
    let x2 = (&a + &r) / rat(2);
    if x2.is_negative() {
        return None;
    }
    let x = rational_sqrt_abs(&x2)?;
    if b.is_zero() {
        if a.is_negative() {
            // square root is purely imaginary: (yi)² = −y²
            let y = rational_sqrt_abs(&a)?;
            return Some(Scalar::gauss(Rat::zero(), y));
        }
        return Some(Scalar::gauss(x, Rat::zero()));
    }
    if x.is_zero() {
        return None;
    }
    let y = &b / &(rat(2) * &x);
    let cand = Scalar::gauss(x, y);
    if &(&cand * &cand) == z {
        Some(cand)
    } else {
        None
    }
}

/// Rational congruence of a skew matrix to Σ (E_{2i,2i+1} − E_{2i+1,2i});
/// always succeeds.
fn skew_normal_form(zb: &Mat) -> Mat {
    let n = zb.rows();
    let mut w = zb.clone();
    let mut c = Mat::identity(Ring::Rat, n);
    let mut i = 0;
    while i + 1 < n {
        // find a nonzero entry in the remaining block
        let mut found = None;
        'search: for r in i..n {
            for col in (r + 1)..n {
                if !w.get(r, col).is_zero() {
                    found = Some((r, col));
                    break 'search;
                }
            }
        }
        let Some((r, col)) = found else { break };
        if r != i {
            congruence_swap(&mut w, &mut c, r, i);
        }
        let col = if col == i { r } else { col };
        if col != i + 1 {
            congruence_swap(&mut w, &mut c, col, i + 1);
        }
        // normalize the pivot to 1
        let d = w.get(i, i + 1).expect_rat();
        let f = Rat::one() / d;
        let fs = Scalar::from_rat(Ring::Rat, f);
        scale_row(&mut w, i, &fs);
        for rr in 0..n {
            let v = w.get(rr, i) * &fs;
            w.set(rr, i, v);
        }
        scale_row(&mut c, i, &fs);
        // clear the rest of rows/cols i and i+1
        for j in (i + 2)..n {
            let lam = -w.get(i, j).expect_rat();
            if !lam.is_zero() {
                // row_j += lam·row_{i+1}, col_j += lam·col_{i+1}
                congruence_add(&mut w, &mut c, j, i + 1, &lam);
            }
            let mu = w.get(i + 1, j).expect_rat();
            if !mu.is_zero() {
                congruence_add(&mut w, &mut c, j, i, &mu);
            }
        }
        i += 2;
    }
    c
}

// ---- conformal normalization ---------------------------------------------

fn dual_square(metric: &[Rat], z_row: &Mat) -> Rat {
    (0..metric.len())
        .map(|i| {
            let zi = z_row.get(0, i).expect_rat();
            &zi * &zi * &metric[i]
        })
        .sum()
}

fn form_q(metric: &[Rat], v: &[Rat]) -> Rat {
    v.iter().zip(metric).map(|(x, m)| x * x * m).sum()
}

fn form_b(metric: &[Rat], u: &[Rat], v: &[Rat]) -> Rat {
    u.iter()
        .zip(v)
        .zip(metric)
        .map(|((x, y), m)| x * y * m)
        .sum()
}

/// Reflection in the hyperplane orthogonal to w (Q(w) ≠ 0).
fn reflection(metric: &[Rat], w: &[Rat]) -> Mat {
    let m = metric.len();
    let q = form_q(metric, w);
    Mat::from_fn(Ring::Rat, m, m, |r, c| {
        let mut v = if r == c { Rat::one() } else { Rat::zero() };
        v = v - rat(2) * &w[r] * &metric[c] * &w[c] / &q;
        Scalar::from_rat(Ring::Rat, v)
    })
}

/// An isometry of the rational quadratic space (ℚ^m, diag metric) taking
/// u to v; requires Q(u) = Q(v) and u, v ≠ 0.
fn witt_isometry(metric: &[Rat], u: &[Rat], v: &[Rat]) -> Result<Mat> {
    let m = metric.len();
    if u == v {
        return Ok(Mat::identity(Ring::Rat, m));
    }
    let q = form_q(metric, u);
    assert_eq!(q, form_q(metric, v), "witt_isometry needs equal squares");
    if !q.is_zero() {
        let diff: Vec<Rat> = u.iter().zip(v).map(|(a, b)| a - b).collect();
        if !form_q(metric, &diff).is_zero() {
            return Ok(reflection(metric, &diff));
        }
        // Q(u−v) + Q(u+v) = 4Q ≠ 0, so the sum works; τ_{u+v} sends u to −v
        let sum: Vec<Rat> = u.iter().zip(v).map(|(a, b)| a + b).collect();
        let t1 = reflection(metric, &sum);
        let t2 = reflection(metric, v);
        return Ok(&t2 * &t1);
    }
    witt_isometry_null(metric, u, v, 0)
}

/// The null case: chain reflections through intermediate null vectors.
fn witt_isometry_null(metric: &[Rat], u: &[Rat], v: &[Rat], depth: usize) -> Result<Mat> {
    if depth > 2 {
        return Err(Error::RationalObstruction(
            "null Witt chain exceeded expected depth".into(),
        ));
    }
    let b_uv = form_b(metric, u, v);
    if !b_uv.is_zero() {
        let diff: Vec<Rat> = u.iter().zip(v).map(|(a, b)| a - b).collect();
        // Q(u−v) = −2B(u,v) ≠ 0
        return Ok(reflection(metric, &diff));
    }
    // collinear null vectors, v = λu: scale along the hyperbolic plane
    // spanned with any non-orthogonal null partner; the scaling sends
    // u ↦ u/μ, so pass μ = 1/λ
    if let Some(lambda) = collinear_factor(u, v) {
        let w = candidate_nulls(metric)
            .into_iter()
            .find(|w| !form_b(metric, u, w).is_zero())
            .ok_or_else(|| {
                Error::RationalObstruction("no hyperbolic partner for null vector".into())
            })?;
        return Ok(hyperbolic_scaling(metric, u, &w, &(Rat::one() / &lambda)));
    }
    // orthogonal, non-collinear nulls: route through an intermediate
    for x in candidate_nulls(metric) {
        if !form_b(metric, u, &x).is_zero() && !form_b(metric, &x, v).is_zero() {
            let first = witt_isometry_null(metric, u, &x, depth + 1)?;
            let second = witt_isometry_null(metric, &x, v, depth + 1)?;
            return Ok(&second * &first);
        }
    }
    // one more level of indirection through a pair of candidates
    let cands = candidate_nulls(metric);
    for x1 in &cands {
        if form_b(metric, u, x1).is_zero() {
            continue;
        }
        for x2 in &cands {
            if form_b(metric, x1, x2).is_zero() || form_b(metric, x2, v).is_zero() {
                continue;
            }
            let a = witt_isometry_null(metric, u, x1, depth + 1)?;
            let b = witt_isometry_null(metric, x1, x2, depth + 1)?;
            let c = witt_isometry_null(metric, x2, v, depth + 1)?;
            return Ok(&(&c * &b) * &a);
        }
    }
    Err(Error::RationalObstruction(
        "no null chain found between covectors".into(),
    ))
}

/// v = λ·u when collinear.
fn collinear_factor(u: &[Rat], v: &[Rat]) -> Option<Rat> {
    let i = u.iter().position(|x| !x.is_zero())?;
    let lambda = &v[i] / &u[i];
    for (a, b) in u.iter().zip(v) {
        if &(a * &lambda) != b {
            return None;
        }
    }
    Some(lambda)
}

/// Null basis vectors e_i ± e_j over mixed-sign index pairs.
fn candidate_nulls(metric: &[Rat]) -> Vec<Vec<Rat>> {
    let m = metric.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i == j || !metric[i].is_positive() || !metric[j].is_negative() {
                continue;
            }
            for sign in [1i64, -1] {
                let mut v = vec![Rat::zero(); m];
                v[i] = Rat::one();
                v[j] = rat(sign);
                out.push(v);
            }
        }
    }
    out
}

/// Isometry scaling the null vector u by 1/λ (so λu ↦ u), acting on the
/// hyperbolic plane spanned by u and a partner w with B(u,w) ≠ 0.
fn hyperbolic_scaling(metric: &[Rat], u: &[Rat], w: &[Rat], lambda: &Rat) -> Mat {
    let m = metric.len();
    let b = form_b(metric, u, w);
    // x ↦ x + (1/λ − 1)·B(x,w)/B(u,w)·u + (λ − 1)·B(x,u)/B(u,w)·w
    let qw = form_q(metric, w);
    // replace w by a null partner w' = w − Q(w)/(2B) u
    let wp: Vec<Rat> = w
        .iter()
        .zip(u)
        .map(|(wi, ui)| wi - &(&qw / (rat(2) * &b)) * ui)
        .collect();
    let bp = form_b(metric, u, &wp);
    let inv_l = Rat::one() / lambda;
    Mat::from_fn(Ring::Rat, m, m, |r, c| {
        let mut v = if r == c { Rat::one() } else { Rat::zero() };
        let bw = &metric[c] * &wp[c];
        let bu = &metric[c] * &u[c];
        v = v + (&inv_l - &Rat::one()) * &bw / &bp * &u[r];
        v = v + (lambda - &Rat::one()) * &bu / &bp * &wp[r];
        Scalar::from_rat(Ring::Rat, v)
    })
}

fn conformal_normal_form(model: &GradedModel, z: &[Rat], gt: &GeometricType) -> Result<Mat> {
    let metric = model.conformal_metric().to_vec();
    let m = metric.len();
    let zb = model.g1_block(z);
    let zeta: Vec<Rat> = (0..m)
        .map(|i| zb.get(0, i).expect_rat() * &metric[i])
        .collect();
    let rep_b = model.g1_block(&gt.representative);
    let zeta0: Vec<Rat> = (0..m)
        .map(|i| rep_b.get(0, i).expect_rat() * &metric[i])
        .collect();

    let q = form_q(&metric, &zeta);
    let q0 = form_q(&metric, &zeta0);
    let c = if q.is_zero() {
        Rat::one()
    } else {
        let ratio = &q0 / &q;
        rational_sqrt_abs(&ratio).ok_or_else(|| {
            Error::RationalObstruction(format!(
                "covector square {} is not a rational square multiple of {}",
                q, q0
            ))
        })?
    };
    let scaled: Vec<Rat> = zeta.iter().map(|x| x * &c).collect();
    let o = witt_isometry(&metric, &scaled, &zeta0)?;

    // g = diag(c, O, 1/c): Ad(g) acts on dual columns by c·O
    let amb = model.algebra.ambient_size();
    let mut g = Mat::zeros(Ring::Rat, amb, amb);
    g.set(0, 0, Scalar::from_rat(Ring::Rat, c.clone()));
    g.set(m + 1, m + 1, Scalar::from_rat(Ring::Rat, Rat::one() / &c));
    for r in 0..m {
        for cc in 0..m {
            g.set(1 + r, 1 + cc, o.get(r, cc).clone());
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ModelSpec;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn build(family: Family, ring: Ring, params: &[usize]) -> GradedModel {
        GradedModel::build(&ModelSpec::new(family, ring, params)).unwrap()
    }

    fn g1_elem(model: &GradedModel, blk: &Mat) -> Coords {
        model.g1_from_block(blk).unwrap()
    }

    #[test]
    fn grassmann_rank_invariant() {
        let m = build(Family::Grassmann, Ring::Rat, &[2, 3]);
        let z = g1_elem(&m, &Mat::from_int_rows(Ring::Rat, &[&[1, 0, 0], &[0, 0, 0]]));
        let t = orbit_invariant(&m, &z).unwrap();
        assert_eq!(t.invariant, TypeInvariant::KRank(1));
        assert!(orbit_invariant(&m, &vec![Rat::zero(); m.dim()]).is_err());
    }

    #[test]
    fn conformal_causal_classes() {
        let m = build(Family::Conformal, Ring::Rat, &[2, 3]);
        // e1* + e3* is null for signature (2,3): 1 + I_33 = 1 - 1
        let z = g1_elem(&m, &Mat::from_int_rows(Ring::Rat, &[&[1, 0, 1, 0, 0]]));
        assert_eq!(
            orbit_invariant(&m, &z).unwrap().invariant,
            TypeInvariant::Causal(CausalClass::Null)
        );
        let s = g1_elem(&m, &Mat::from_int_rows(Ring::Rat, &[&[1, 1, 0, 0, 0]]));
        assert_eq!(
            orbit_invariant(&m, &s).unwrap().invariant,
            TypeInvariant::Causal(CausalClass::Spacelike)
        );
    }

    #[test]
    fn type_counts_match_the_tables() {
        assert_eq!(enumerate_types(&build(Family::ProjLike, Ring::Rat, &[1, 2])).unwrap().len(), 1);
        assert_eq!(enumerate_types(&build(Family::Grassmann, Ring::Rat, &[2, 2])).unwrap().len(), 2);
        assert_eq!(enumerate_types(&build(Family::Conformal, Ring::Rat, &[2, 3])).unwrap().len(), 3);
        // Lagrangean n = 2 over R: signatures with 1 ≤ p+q ≤ 2
        assert_eq!(enumerate_types(&build(Family::Lagrangean, Ring::Rat, &[2])).unwrap().len(), 5);
        // spinorial n = 5: ⌊5/2⌋ types
        assert_eq!(enumerate_types(&build(Family::Spinorial, Ring::Rat, &[5])).unwrap().len(), 2);
    }

    #[test]
    fn representatives_realize_their_invariants() {
        for model in [
            build(Family::Grassmann, Ring::Rat, &[2, 3]),
            build(Family::Conformal, Ring::Rat, &[2, 3]),
            build(Family::Lagrangean, Ring::Rat, &[3]),
            build(Family::Spinorial, Ring::Rat, &[5]),
            build(Family::ProjLike, Ring::Quat, &[1, 2]),
        ] {
            for t in enumerate_types(&model).unwrap() {
                let back = orbit_invariant(&model, &t.representative).unwrap();
                assert_eq!(back.invariant, t.invariant, "{}", model.id());
            }
        }
    }

    #[test]
    fn normal_form_identity_on_standard_representative() {
        let m = build(Family::Grassmann, Ring::Rat, &[2, 2]);
        let t = &enumerate_types(&m).unwrap()[0];
        let (_, g) = normal_form(&m, &t.representative).unwrap();
        assert_eq!(g, Mat::identity(Ring::Rat, 4));
    }

    #[test]
    fn grassmann_normal_form_by_permutation() {
        let m = build(Family::Grassmann, Ring::Rat, &[2, 2]);
        let z = g1_elem(&m, &Mat::from_int_rows(Ring::Rat, &[&[0, 1], &[0, 0]]));
        let (t, g) = normal_form(&m, &z).unwrap();
        assert_eq!(t.invariant, TypeInvariant::KRank(1));
        assert_eq!(m.ad_group(&g, &z).unwrap(), t.representative);
    }

    #[test]
    fn lagrangean_congruence_scaling() {
        let m = build(Family::Lagrangean, Ring::Rat, &[2]);
        let z = g1_elem(&m, &Mat::from_int_rows(Ring::Rat, &[&[1, 0], &[0, -4]]));
        let (t, g) = normal_form(&m, &z).unwrap();
        assert_eq!(t.invariant, TypeInvariant::Signature(1, 1));
        assert_eq!(m.ad_group(&g, &z).unwrap(), t.representative);
        // a non-square multiple obstructs rational normalization
        let bad = g1_elem(&m, &Mat::from_int_rows(Ring::Rat, &[&[1, 0], &[0, -5]]));
        assert!(matches!(
            normal_form(&m, &bad),
            Err(Error::RationalObstruction(_))
        ));
        // same sign class, neither entry a square, but the pair represents 1
        let pair = g1_elem(&m, &Mat::from_int_rows(Ring::Rat, &[&[2, 0], &[0, 2]]));
        let (t2, g2) = normal_form(&m, &pair).unwrap();
        assert_eq!(t2.invariant, TypeInvariant::Signature(2, 0));
        assert_eq!(m.ad_group(&g2, &pair).unwrap(), t2.representative);
    }

    #[test]
    fn spinorial_normal_form_total() {
        let m = build(Family::Spinorial, Ring::Rat, &[5]);
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..10 {
            let blk = Mat::from_fn(Ring::Rat, 5, 5, |r, c| {
                use std::cmp::Ordering::*;
                match r.cmp(&c) {
                    Less => Scalar::from_int(Ring::Rat, rng.gen_range(-3..=3)),
                    Equal => Scalar::zero(Ring::Rat),
                    Greater => Scalar::zero(Ring::Rat),
                }
            });
            let blk = &blk - &blk.transpose();
            if blk.is_zero() {
                continue;
            }
            let z = g1_elem(&m, &blk);
            let (t, g) = normal_form(&m, &z).unwrap();
            assert_eq!(m.ad_group(&g, &z).unwrap(), t.representative);
        }
    }

    #[test]
    fn conformal_normal_form_proportional_null() {
        // a rational multiple of the standard null covector normalizes by
        // a hyperbolic scaling in the plane it spans with a null partner
        let m = build(Family::Conformal, Ring::Rat, &[2, 3]);
        let types = enumerate_types(&m).unwrap();
        let null = types
            .iter()
            .find(|t| t.invariant == TypeInvariant::Causal(CausalClass::Null))
            .unwrap();
        for scale in [crate::scalar::ratio(3, 4), rat(2), rat(-5)] {
            let z: Coords = null.representative.iter().map(|x| x * &scale).collect();
            let (gt, g) = normal_form(&m, &z).unwrap();
            assert_eq!(m.ad_group(&g, &z).unwrap(), gt.representative);
        }
    }

    #[test]
    fn conformal_normal_form_null_and_scaled() {
        let m = build(Family::Conformal, Ring::Rat, &[2, 3]);
        // a skew null covector away from the standard one
        let z = g1_elem(&m, &Mat::from_int_rows(Ring::Rat, &[&[3, 4, 0, 0, 5]]));
        let (t, g) = normal_form(&m, &z).unwrap();
        assert_eq!(t.invariant, TypeInvariant::Causal(CausalClass::Null));
        assert_eq!(m.ad_group(&g, &z).unwrap(), t.representative);
        // spacelike with square norm 4 normalizes by dilation
        let s = g1_elem(&m, &Mat::from_int_rows(Ring::Rat, &[&[2, 0, 0, 0, 0]]));
        let (t2, g2) = normal_form(&m, &s).unwrap();
        assert_eq!(m.ad_group(&g2, &s).unwrap(), t2.representative);
        // spacelike of square 5: rationally obstructed
        let bad = g1_elem(&m, &Mat::from_int_rows(Ring::Rat, &[&[2, 1, 0, 0, 0]]));
        assert!(matches!(
            normal_form(&m, &bad),
            Err(Error::RationalObstruction(_))
        ));
    }

    #[test]
    fn quaternionic_normal_form() {
        let m = build(Family::ProjLike, Ring::Quat, &[1, 2]);
        // z = (j, 1 + k) has rank 1; normalization stays in H(Q)
        let blk = Mat::from_fn(Ring::Quat, 1, 2, |_, c| {
            if c == 0 {
                Scalar::unit(Ring::Quat, 2)
            } else {
                &Scalar::one(Ring::Quat) + &Scalar::unit(Ring::Quat, 3)
            }
        });
        let z = g1_elem(&m, &blk);
        let (t, g) = normal_form(&m, &z).unwrap();
        assert_eq!(t.invariant, TypeInvariant::KRank(1));
        assert_eq!(m.ad_group(&g, &z).unwrap(), t.representative);
    }

    #[test]
    fn commutant_dimensions() {
        // projective: commutant always vanishes
        for ring in [Ring::Rat, Ring::Gauss, Ring::Quat] {
            let m = build(Family::ProjLike, ring, &[1, 2]);
            for t in enumerate_types(&m).unwrap() {
                assert_eq!(commutant(&m, &t.representative).unwrap().len(), 0);
            }
        }
        // Grassmann (2,2), rank 1: spanned by E_22
        let m = build(Family::Grassmann, Ring::Rat, &[2, 2]);
        let z = g1_elem(&m, &Mat::from_int_rows(Ring::Rat, &[&[1, 0], &[0, 0]]));
        let c = commutant(&m, &z).unwrap();
        assert_eq!(c.len(), 1);
        let blk = m.gm1_block(&c[0]);
        assert!(blk.get(0, 0).is_zero() && blk.get(0, 1).is_zero() && blk.get(1, 0).is_zero());
        assert!(!blk.get(1, 1).is_zero());
        // conformal null: dimension 1; non-null: 0
        let cm = build(Family::Conformal, Ring::Rat, &[2, 3]);
        let types = enumerate_types(&cm).unwrap();
        for t in &types {
            let dim = commutant(&cm, &t.representative).unwrap().len();
            match t.invariant {
                TypeInvariant::Causal(CausalClass::Null) => assert_eq!(dim, 1),
                _ => assert_eq!(dim, 0),
            }
        }
    }

    #[test]
    fn invariants_constant_on_sampled_orbits() {
        let mut rng = StdRng::seed_from_u64(41);
        for model in [
            build(Family::Grassmann, Ring::Rat, &[2, 2]),
            build(Family::Conformal, Ring::Rat, &[1, 2]),
            build(Family::Lagrangean, Ring::Rat, &[2]),
        ] {
            for t in enumerate_types(&model).unwrap() {
                let cdim = commutant(&model, &t.representative).unwrap().len();
                for _ in 0..12 {
                    let g = random_g0(&model, &mut rng);
                    let moved = model.ad_group(&g, &t.representative).unwrap();
                    let back = orbit_invariant(&model, &moved).unwrap();
                    assert_eq!(back.invariant, t.invariant);
                    assert_eq!(commutant(&model, &moved).unwrap().len(), cdim);
                }
            }
        }
    }

    /// Rational sampling of G₀: products of unipotent one-parameter
    /// subgroups at rational times and rational torus/rotation elements.
    pub(crate) fn random_g0(model: &GradedModel, rng: &mut StdRng) -> Mat {
        let amb = model.algebra.ambient_size();
        let mut g = Mat::identity(model.ring, amb);
        for _ in 0..3 {
            let f = random_g0_factor(model, rng);
            g = &g * &f;
        }
        g
    }

    fn random_g0_factor(model: &GradedModel, rng: &mut StdRng) -> Mat {
        let amb = model.algebra.ambient_size();
        match model.spec.family {
            Family::ProjLike | Family::Grassmann => {
                let [p, _q] = [model.spec.params[0], model.spec.params[1]];
                // random invertible block-diagonal integer matrix
                loop {
                    let g = Mat::from_fn(model.ring, amb, amb, |r, c| {
                        let same_block = (r < p) == (c < p);
                        if !same_block {
                            Scalar::zero(model.ring)
                        } else if r == c {
                            Scalar::from_int(model.ring, rng.gen_range(1..=2))
                        } else {
                            Scalar::from_int(model.ring, rng.gen_range(-1..=1))
                        }
                    });
                    if g.inverse().is_some() {
                        return g;
                    }
                }
            }
            Family::Conformal => {
                let metric = model.conformal_metric();
                let m = metric.len();
                let mut g = Mat::identity(Ring::Rat, amb);
                // a rational plane rotation/boost in the middle block
                let i = rng.gen_range(0..m);
                let j = (i + 1 + rng.gen_range(0..m - 1)) % m;
                let (i, j) = (i.min(j), i.max(j));
                let (a, b) = if metric[i] == metric[j] {
                    (crate::scalar::ratio(3, 5), crate::scalar::ratio(4, 5))
                } else {
                    (crate::scalar::ratio(5, 4), crate::scalar::ratio(3, 4))
                };
                let s = if metric[i] == metric[j] {
                    -b.clone()
                } else {
                    b.clone()
                };
                g.set(1 + i, 1 + i, Scalar::from_rat(Ring::Rat, a.clone()));
                g.set(1 + j, 1 + j, Scalar::from_rat(Ring::Rat, a));
                g.set(1 + i, 1 + j, Scalar::from_rat(Ring::Rat, s));
                g.set(1 + j, 1 + i, Scalar::from_rat(Ring::Rat, b));
                // and a dilation
                let c = crate::scalar::ratio(rng.gen_range(1..=3), rng.gen_range(1..=2));
                g.set(0, 0, Scalar::from_rat(Ring::Rat, c.clone()));
                g.set(m + 1, m + 1, Scalar::from_rat(Ring::Rat, Rat::one() / c));
                g
            }
            Family::Lagrangean | Family::Spinorial => {
                let n = model.spec.params[0];
                loop {
                    let c = Mat::from_fn(model.ring, n, n, |r, col| {
                        if r == col {
                            Scalar::from_int(model.ring, rng.gen_range(1..=2))
                        } else {
                            Scalar::from_int(model.ring, rng.gen_range(-1..=1))
                        }
                    });
                    if c.inverse().is_some() {
                        return sp_like_group_element(model, &c);
                    }
                }
            }
        }
    }

    #[test]
    fn geometric_type_serializes_cleanly() {
        let m = build(Family::Conformal, Ring::Rat, &[1, 2]);
        let t = &enumerate_types(&m).unwrap()[2];
        let json = serde_json::to_string(t).unwrap();
        assert!(json.contains("\"family\":\"conformal\""));
        assert!(json.contains("\"invariant\""));
        assert!(json.contains("\"representative\""));
    }
}
