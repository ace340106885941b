//! The four families of |1|-graded simple model pairs in matrix form.
//!
//! Every model is a [`LieAlgebra`] whose basis is ordered by grading
//! component, 𝔤₋₁ | 𝔤₀ | 𝔤₁, so components are index ranges:
//!
//! * `ProjLike`/`Grassmann` — 𝔰𝔩(p+q, 𝕂) with 𝔭(p) the stabilizer of
//!   𝕂^p: 𝔤₋₁ = L(𝕂^p, 𝕂^q) sits in the lower-left block, 𝔤₁ in the
//!   upper-right, 𝔤₀ = 𝔰(𝔤𝔩(p) × 𝔤𝔩(q)) on the diagonal.
//! * `Conformal` — 𝔬(p+1, q+1) with the bilinear form antidiag(1, 𝕀, 1),
//!   𝕀 = I_{p,q}, which makes 𝔭 block upper triangular and the grading
//!   element diag(1, 0, …, 0, −1).
//! * `Lagrangean` — 𝔰𝔭(2n, 𝕂) for the symplectic form \[\[0, I], \[−I, 0]]:
//!   symmetric lower-left and upper-right blocks, 𝔤₀ ≅ 𝔤𝔩(n, 𝕂).
//! * `Spinorial` — 𝔬(n, n) for the form \[\[0, I], \[I, 0]]: skew blocks,
//!   𝔤₀ ≅ 𝔤𝔩(n, ℝ).
//!
//! The matrix realization is authoritative. The block bracket formulas of
//! the four families are *verified* against it on all basis pairs by
//! [`GradedModel::verify_block_brackets`], under the identification maps
//! [`GradedModel::gm1_block`] / [`GradedModel::g1_block`]; they are never
//! hard-coded into the structure constants.
//!
//! Building a model runs every structural invariant exactly: direct-sum
//! decomposition, bracket grading, the ad(E) eigenspace decomposition
//! recomputed independently of the block construction, nondegeneracy of
//! the Killing form, and the duality pairing between 𝔤₁ and 𝔤₋₁.

use crate::error::{Error, Result};
use crate::lie::{coords_unit, Coords, LieAlgebra};
use crate::linalg::Mat;
use crate::scalar::{rat, ratio, Rat, Ring, Scalar};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Range;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    ProjLike,
    Grassmann,
    Conformal,
    Lagrangean,
    Spinorial,
}

/// Grading component selector.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Comp {
    Gm1,
    G0,
    G1,
}

impl Comp {
    pub fn grade(self) -> i64 {
        match self {
            Comp::Gm1 => -1,
            Comp::G0 => 0,
            Comp::G1 => 1,
        }
    }

    pub const ALL: [Comp; 3] = [Comp::Gm1, Comp::G0, Comp::G1];
}

/// A zoo entry / build request: family, ground field, and parameters.
///
/// Parameter meaning: `\[p, q]` for the 𝔰𝔩 and conformal families
/// (conformal signature for the latter, so the algebra is 𝔬(p+1, q+1)),
/// `\[n]` for the Lagrangean and spinorial families.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ModelSpec {
    pub family: Family,
    pub field: String,
    pub params: Vec<usize>,
}

impl ModelSpec {
    pub fn new(family: Family, ring: Ring, params: &[usize]) -> Self {
        ModelSpec {
            family,
            field: ring.label().to_string(),
            params: params.to_vec(),
        }
    }

    pub fn ring(&self) -> Result<Ring> {
        match self.field.as_str() {
            "R" => Ok(Ring::Rat),
            "C" => Ok(Ring::Gauss),
            "H" => Ok(Ring::Quat),
            other => Err(Error::BadParams(format!("unknown field tag {:?}", other))),
        }
    }

    /// Canonical short id, used in reports and golden files.
    pub fn id(&self) -> String {
        match self.family {
            Family::ProjLike | Family::Grassmann => format!(
                "sl({},{})/p({})",
                self.params[0] + self.params[1],
                self.field,
                self.params[0]
            ),
            Family::Conformal => format!("o({},{})", self.params[0] + 1, self.params[1] + 1),
            Family::Lagrangean => format!("sp({},{})", 2 * self.params[0], self.field),
            Family::Spinorial => format!("o({},{})spin", self.params[0], self.params[0]),
        }
    }

    /// Parse CLI tokens such as `sl 4 R p2`, `o 3 4`, `o 5 5 spin`,
    /// `sp 6 R`.
    pub fn parse_tokens(tokens: &[String]) -> Result<Self> {
        let usage = || Error::UnknownModel(format!("cannot parse model spec {:?}", tokens));
        let uint = |s: &String| s.parse::<usize>().map_err(|_| usage());
        match tokens {
            [head, n, field, pspec] if head == "sl" => {
                let n = uint(n)?;
                let p: usize = pspec
                    .strip_prefix('p')
                    .ok_or_else(usage)?
                    .parse()
                    .map_err(|_| usage())?;
                if p == 0 || p >= n {
                    return Err(usage());
                }
                let family = if p == 1 {
                    Family::ProjLike
                } else {
                    Family::Grassmann
                };
                Ok(ModelSpec {
                    family,
                    field: field.clone(),
                    params: vec![p, n - p],
                })
            }
            [head, a, b] if head == "o" => {
                let (a, b) = (uint(a)?, uint(b)?);
                if a < 1 || b < 1 {
                    return Err(usage());
                }
                Ok(ModelSpec::new(Family::Conformal, Ring::Rat, &[a - 1, b - 1]))
            }
            [head, a, b, tag] if head == "o" && tag == "spin" => {
                let (a, b) = (uint(a)?, uint(b)?);
                if a != b {
                    return Err(usage());
                }
                Ok(ModelSpec::new(Family::Spinorial, Ring::Rat, &[a]))
            }
            [head, m, field] if head == "sp" => {
                let m = uint(m)?;
                if m % 2 != 0 {
                    return Err(usage());
                }
                Ok(ModelSpec {
                    family: Family::Lagrangean,
                    field: field.clone(),
                    params: vec![m / 2],
                })
            }
            _ => Err(usage()),
        }
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// A matrix-realized |1|-graded simple Lie algebra with grading data.
pub struct GradedModel {
    pub spec: ModelSpec,
    pub ring: Ring,
    pub algebra: LieAlgebra,
    /// Coordinates of the grading element E.
    pub e: Coords,
    ranges: [Range<usize>; 3],
    /// Exact Killing form matrix on the basis.
    pub killing: Mat,
    /// For the conformal family, the diagonal of I_{p,q}; empty otherwise.
    metric_diag: Vec<Rat>,
}

impl GradedModel {
    pub fn build(spec: &ModelSpec) -> Result<Self> {
        let ring = spec.ring()?;
        let (basis, d, d0, e_ambient, metric_diag) = match spec.family {
            Family::ProjLike | Family::Grassmann => {
                let [p, q] = params2(spec)?;
                if p + q < 3 {
                    return Err(Error::BadParams(format!(
                        "sl family needs p+q >= 3, got p={}, q={}",
                        p, q
                    )));
                }
                if p > q || p == 0 {
                    return Err(Error::BadParams(format!(
                        "sl family needs 1 <= p <= q, got p={}, q={}",
                        p, q
                    )));
                }
                if spec.family == Family::ProjLike && p != 1 {
                    return Err(Error::BadParams("proj_like requires p = 1".into()));
                }
                if spec.family == Family::Grassmann && p < 2 {
                    return Err(Error::BadParams("grassmann requires p >= 2".into()));
                }
                build_sl(ring, p, q)
            }
            Family::Conformal => {
                let [p, q] = params2(spec)?;
                if ring != Ring::Rat {
                    return Err(Error::BadParams("conformal models are real".into()));
                }
                if p + q < 3 {
                    return Err(Error::BadParams(format!(
                        "conformal needs p+q >= 3, got ({},{})",
                        p, q
                    )));
                }
                build_conformal(p, q)
            }
            Family::Lagrangean => {
                let [n] = params1(spec)?;
                if ring == Ring::Quat {
                    return Err(Error::BadParams(
                        "lagrangean models exist over R and C only".into(),
                    ));
                }
                if n < 2 {
                    return Err(Error::BadParams(format!("lagrangean needs n >= 2, got {}", n)));
                }
                build_sp(ring, n)
            }
            Family::Spinorial => {
                let [n] = params1(spec)?;
                if ring != Ring::Rat {
                    return Err(Error::BadParams("spinorial models are real".into()));
                }
                if n < 5 {
                    return Err(Error::BadParams(format!("spinorial needs n >= 5, got {}", n)));
                }
                build_spin(n)
            }
        };

        let dim = basis.len();
        let algebra = LieAlgebra::from_basis(basis)?;
        let e = algebra.coords_of(&e_ambient)?;
        let ranges = [0..d, d..d + d0, d + d0..dim];
        let killing = algebra.killing()?;

        let model = GradedModel {
            spec: spec.clone(),
            ring,
            algebra,
            e,
            ranges,
            killing,
            metric_diag,
        };
        model.verify_invariants()?;
        Ok(model)
    }

    pub fn id(&self) -> String {
        self.spec.id()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn range(&self, c: Comp) -> Range<usize> {
        match c {
            Comp::Gm1 => self.ranges[0].clone(),
            Comp::G0 => self.ranges[1].clone(),
            Comp::G1 => self.ranges[2].clone(),
        }
    }

    pub fn component_dims(&self) -> (usize, usize, usize) {
        (
            self.ranges[0].len(),
            self.ranges[1].len(),
            self.ranges[2].len(),
        )
    }

    /// Basis coordinate vectors of a grading component.
    pub fn component_basis(&self, c: Comp) -> Vec<Coords> {
        self.range(c)
            .map(|i| coords_unit(self.dim(), i))
            .collect()
    }

    /// Is the support of `x` inside component `c`?
    pub fn in_component(&self, c: Comp, x: &[Rat]) -> bool {
        let r = self.range(c);
        x.iter()
            .enumerate()
            .all(|(i, v)| v.is_zero() || r.contains(&i))
    }

    /// Project coordinates onto a component (by basis support).
    pub fn project(&self, c: Comp, x: &[Rat]) -> Coords {
        let r = self.range(c);
        x.iter()
            .enumerate()
            .map(|(i, v)| if r.contains(&i) { v.clone() } else { Rat::zero() })
            .collect()
    }

    pub fn killing_pair(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let mut t = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                t = t + xi * yj * self.killing.get(i, j).expect_rat();
            }
        }
        t
    }

    /// Killing pairing 𝔤₁ × 𝔤₋₁ → ℚ restricted to component bases.
    pub fn duality_pairing_matrix(&self) -> Mat {
        let (d, _, _) = self.component_dims();
        let g1 = self.range(Comp::G1);
        let gm1 = self.range(Comp::Gm1);
        Mat::from_fn(Ring::Rat, d, d, |r, c| {
            self.killing.get(g1.start + r, gm1.start + c).clone()
        })
    }

    /// The metric diagonal I_{p,q} of a conformal model.
    pub fn conformal_metric(&self) -> &[Rat] {
        &self.metric_diag
    }

    // ---- block identification maps -------------------------------------

    /// The 𝔤₋₁ block of an element: a q×p matrix (sl family), an m×1
    /// column (conformal), or an n×n symmetric/skew matrix (sp / spin).
    pub fn gm1_block(&self, x: &[Rat]) -> Mat {
        let m = self.algebra.matrix_of(x);
        match self.spec.family {
            Family::ProjLike | Family::Grassmann => {
                let [p, q] = params2(&self.spec).unwrap();
                submat(&m, p..p + q, 0..p)
            }
            Family::Conformal => {
                let md = self.metric_diag.len();
                submat(&m, 1..1 + md, 0..1)
            }
            Family::Lagrangean | Family::Spinorial => {
                let [n] = params1(&self.spec).unwrap();
                submat(&m, n..2 * n, 0..n)
            }
        }
    }

    /// The 𝔤₁ block: p×q (sl), the row covector Z = −wᵗ𝕀 (1×m,
    /// conformal), or n×n symmetric/skew (sp / spin).
    pub fn g1_block(&self, z: &[Rat]) -> Mat {
        let m = self.algebra.matrix_of(z);
        match self.spec.family {
            Family::ProjLike | Family::Grassmann => {
                let [p, q] = params2(&self.spec).unwrap();
                submat(&m, 0..p, p..p + q)
            }
            Family::Conformal => {
                let md = self.metric_diag.len();
                // upper-right column w; Z = −wᵗ𝕀
                Mat::from_fn(Ring::Rat, 1, md, |_, c| {
                    let w = m.get(1 + c, md + 1).expect_rat();
                    Scalar::from_rat(Ring::Rat, -(w * &self.metric_diag[c]))
                })
            }
            Family::Lagrangean | Family::Spinorial => {
                let [n] = params1(&self.spec).unwrap();
                submat(&m, 0..n, n..2 * n)
            }
        }
    }

    pub fn gm1_from_block(&self, blk: &Mat) -> Result<Coords> {
        let amb = self.algebra.ambient_size();
        let m = match self.spec.family {
            Family::ProjLike | Family::Grassmann => {
                let [p, _] = params2(&self.spec).unwrap();
                inject(self.ring, amb, blk, p, 0)
            }
            Family::Conformal => {
                let md = self.metric_diag.len();
                let mut m = Mat::zeros(Ring::Rat, amb, amb);
                for i in 0..md {
                    let v = blk.get(i, 0).expect_rat();
                    m.set(1 + i, 0, Scalar::from_rat(Ring::Rat, v.clone()));
                    m.set(
                        md + 1,
                        1 + i,
                        Scalar::from_rat(Ring::Rat, -(v * &self.metric_diag[i])),
                    );
                }
                m
            }
            Family::Lagrangean | Family::Spinorial => {
                let [n] = params1(&self.spec).unwrap();
                inject(self.ring, amb, blk, n, 0)
            }
        };
        self.algebra.coords_of(&m)
    }

    pub fn g1_from_block(&self, blk: &Mat) -> Result<Coords> {
        let amb = self.algebra.ambient_size();
        let m = match self.spec.family {
            Family::ProjLike | Family::Grassmann => {
                let [p, _] = params2(&self.spec).unwrap();
                inject(self.ring, amb, blk, 0, p)
            }
            Family::Conformal => {
                let md = self.metric_diag.len();
                // blk is the covector row Z; w = −𝕀 Zᵗ, so the dual row −wᵗ𝕀
                // carries the entries of Z itself
                let mut m = Mat::zeros(Ring::Rat, amb, amb);
                for i in 0..md {
                    let z = blk.get(0, i).expect_rat();
                    let w = -(&z * &self.metric_diag[i]);
                    m.set(1 + i, md + 1, Scalar::from_rat(Ring::Rat, w));
                    m.set(0, 1 + i, Scalar::from_rat(Ring::Rat, z));
                }
                m
            }
            Family::Lagrangean | Family::Spinorial => {
                let [n] = params1(&self.spec).unwrap();
                inject(self.ring, amb, blk, 0, n)
            }
        };
        self.algebra.coords_of(&m)
    }

    /// Conjugate an element by an invertible grading-preserving defining-rep
    /// matrix: coords of g · m(x) · g⁻¹.
    pub fn ad_group(&self, g: &Mat, x: &[Rat]) -> Result<Coords> {
        let gi = g
            .inverse()
            .ok_or_else(|| Error::CheckFailed("singular group element".into()))?;
        let m = &(g * &self.algebra.matrix_of(x)) * &gi;
        self.algebra.coords_of(&m)
    }

    // ---- structural verification ---------------------------------------

    fn verify_invariants(&self) -> Result<()> {
        let dim = self.dim();
        let (d, _, d1) = self.component_dims();
        if d != d1 {
            return Err(Error::CheckFailed(format!(
                "dim g_-1 = {} differs from dim g_1 = {}",
                d, d1
            )));
        }

        // ad(E) = grade·Id on each component, checked on basis vectors
        for c in Comp::ALL {
            let lam = rat(c.grade());
            for i in self.range(c) {
                let e_i = coords_unit(dim, i);
                let br = self.algebra.bracket(&self.e, &e_i);
                let expected: Coords = e_i.iter().map(|v| v * &lam).collect();
                if br != expected {
                    return Err(Error::CheckFailed(format!(
                        "ad(E) is not {} on basis vector {}",
                        lam, i
                    )));
                }
            }
        }

        // bracket grading on basis pairs; g_{±2} = 0 makes g_{∓1} abelian
        for ci in Comp::ALL {
            for cj in Comp::ALL {
                let target = ci.grade() + cj.grade();
                for i in self.range(ci) {
                    for j in self.range(cj) {
                        let br = self.algebra.bracket_basis(i, j);
                        if target.abs() > 1 {
                            if !br.is_empty() {
                                return Err(Error::CheckFailed(format!(
                                    "[g_{}, g_{}] not zero at basis pair ({}, {})",
                                    ci.grade(),
                                    cj.grade(),
                                    i,
                                    j
                                )));
                            }
                        } else {
                            let tc = match target {
                                -1 => Comp::Gm1,
                                0 => Comp::G0,
                                1 => Comp::G1,
                                _ => unreachable!(),
                            };
                            let r = self.range(tc);
                            if br.iter().any(|(k, _)| !r.contains(k)) {
                                return Err(Error::CheckFailed(format!(
                                    "[g_{}, g_{}] leaks outside g_{} at ({}, {})",
                                    ci.grade(),
                                    cj.grade(),
                                    target,
                                    i,
                                    j
                                )));
                            }
                        }
                    }
                }
            }
        }

        // eigenspaces of ad(E), recomputed independently of the blocks
        self.grading_decomposition()?;

        // Killing orthogonality between components of non-opposite grade,
        // and nondegeneracy of the g_1 × g_-1 pairing
        for ci in Comp::ALL {
            for cj in Comp::ALL {
                if ci.grade() + cj.grade() == 0 {
                    continue;
                }
                for i in self.range(ci) {
                    for j in self.range(cj) {
                        if !self.killing.get(i, j).is_zero() {
                            return Err(Error::CheckFailed(format!(
                                "Killing form pairs g_{} with g_{} at ({}, {})",
                                ci.grade(),
                                cj.grade(),
                                i,
                                j
                            )));
                        }
                    }
                }
            }
        }
        let pairing = self.duality_pairing_matrix();
        if pairing.rank() != d {
            return Err(Error::CheckFailed(
                "degenerate Killing pairing between g_1 and g_-1".into(),
            ));
        }
        Ok(())
    }

    /// Eigenspace bases of ad(E) for eigenvalues −1, 0, 1, recomputed from
    /// kernels and required to match the block construction exactly.
    pub fn grading_decomposition(&self) -> Result<[Vec<Coords>; 3]> {
        let dim = self.dim();
        let ad_e = self.algebra.ad(&self.e);
        let mut out: [Vec<Coords>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        let mut total = 0;
        for (slot, c) in Comp::ALL.iter().enumerate() {
            let shifted = &ad_e - &Mat::identity(Ring::Rat, dim).scale_rat(&rat(c.grade()));
            let ker = shifted.kernel_basis();
            if ker.len() != self.range(*c).len() {
                return Err(Error::CheckFailed(format!(
                    "ad(E) eigenspace for {} has dim {}, block has dim {}",
                    c.grade(),
                    ker.len(),
                    self.range(*c).len()
                )));
            }
            total += ker.len();
            out[slot] = ker
                .into_iter()
                .map(|v| (0..dim).map(|i| v.get(i, 0).expect_rat()).collect())
                .collect();
        }
        if total != dim {
            return Err(Error::CheckFailed(format!(
                "ad(E) eigenvalue multiset is not {{-1^d, 0^d0, 1^d}}: {} of {} accounted",
                total, dim
            )));
        }
        Ok(out)
    }

    /// Simplicity proxy: the ideal generated by one nonzero basis vector of
    /// each component reaches all of 𝔤 under iterated bracketing.
    pub fn check_simplicity_proxy(&self) -> Result<()> {
        for c in Comp::ALL {
            let start = self.range(c).start;
            let mut space = crate::sparse::SparseSpace::from_vectors(
                self.dim(),
                &[crate::sparse::svec_unit(start)],
            );
            loop {
                let before = space.dim();
                let current = space.basis();
                for v in &current {
                    for j in 0..self.dim() {
                        let mut img: crate::sparse::SVec = Vec::new();
                        for (i, x) in v {
                            img = crate::sparse::svec_axpy(
                                &img,
                                x,
                                self.algebra.bracket_basis(*i, j),
                            );
                        }
                        space.add_vector(img);
                    }
                }
                if space.dim() == before {
                    break;
                }
            }
            if space.dim() != self.dim() {
                return Err(Error::CheckFailed(format!(
                    "ideal generated from component {} basis vector has dim {} < {}",
                    c.grade(),
                    space.dim(),
                    self.dim()
                )));
            }
        }
        Ok(())
    }

    /// Exhaustively compare matrix-commutator brackets 𝔤₁ × 𝔤₋₁ → 𝔤₀
    /// against the block formulas of the four families, pushed through the
    /// documented identification maps. Report-valued: deviations are
    /// listed, not raised.
    pub fn verify_block_brackets(&self) -> BlockBracketReport {
        let mut report = BlockBracketReport {
            model: self.id(),
            pairs_checked: 0,
            deviations: Vec::new(),
        };
        let dim = self.dim();
        for zi in self.range(Comp::G1) {
            for xi in self.range(Comp::Gm1) {
                let z = coords_unit(dim, zi);
                let x = coords_unit(dim, xi);
                let got = self.algebra.bracket(&z, &x);
                let expected = self.expected_block_bracket(&z, &x);
                report.pairs_checked += 1;
                match expected {
                    Ok(exp) => {
                        if got != exp {
                            report.deviations.push(format!(
                                "basis pair (z={}, x={}): block formula disagrees",
                                zi, xi
                            ));
                        }
                    }
                    Err(e) => report
                        .deviations
                        .push(format!("basis pair ({}, {}): {}", zi, xi, e)),
                }
            }
        }
        report
    }

    /// The family block formula for \[Z, X], assembled in the ambient
    /// representation from the extracted blocks:
    /// sl family: (ZX, −XZ); conformal: (ZX, −XZ + 𝕀(XZ)ᵗ𝕀);
    /// Lagrangean/spinorial: the product −XZ in 𝔤𝔩(n).
    fn expected_block_bracket(&self, z: &[Rat], x: &[Rat]) -> Result<Coords> {
        let zb = self.g1_block(z);
        let xb = self.gm1_block(x);
        let amb = self.algebra.ambient_size();
        let m = match self.spec.family {
            Family::ProjLike | Family::Grassmann => {
                let [p, q] = params2(&self.spec).unwrap();
                let zx = &zb * &xb; // p×p
                let xz = &xb * &zb; // q×q
                let mut m = Mat::zeros(self.ring, amb, amb);
                copy_into(&mut m, &zx, 0, 0);
                copy_into(&mut m, &(-&xz), p, p);
                let _ = q;
                m
            }
            Family::Conformal => {
                let md = self.metric_diag.len();
                let a = (&zb * &xb).get(0, 0).expect_rat(); // scalar ZX
                let xz = &xb * &zb; // m×m
                let mut middle = -&xz;
                // + 𝕀 (XZ)ᵗ 𝕀
                let t = xz.transpose();
                let twisted = Mat::from_fn(Ring::Rat, md, md, |r, c| {
                    let v = t.get(r, c).expect_rat() * &self.metric_diag[r] * &self.metric_diag[c];
                    Scalar::from_rat(Ring::Rat, v)
                });
                middle = &middle + &twisted;
                let mut m = Mat::zeros(Ring::Rat, amb, amb);
                m.set(0, 0, Scalar::from_rat(Ring::Rat, a.clone()));
                m.set(md + 1, md + 1, Scalar::from_rat(Ring::Rat, -a));
                copy_into(&mut m, &middle, 1, 1);
                m
            }
            Family::Lagrangean | Family::Spinorial => {
                let [n] = params1(&self.spec).unwrap();
                // 𝔤₀ ∋ A acts on the lower-left block as X ↦ AX + XAᵗ,
                // realized as diag(−Aᵗ, A); here A = −XZ
                let a = -&(&xb * &zb);
                let mut m = Mat::zeros(self.ring, amb, amb);
                copy_into(&mut m, &(-&a.transpose()), 0, 0);
                copy_into(&mut m, &a, n, n);
                m
            }
        };
        self.algebra.coords_of(&m)
    }
}

/// Outcome of the exhaustive block-bracket comparison.
#[derive(Debug, Serialize)]
pub struct BlockBracketReport {
    pub model: String,
    pub pairs_checked: usize,
    pub deviations: Vec<String>,
}

impl BlockBracketReport {
    pub fn passed(&self) -> bool {
        self.deviations.is_empty()
    }
}

fn params2(spec: &ModelSpec) -> Result<[usize; 2]> {
    match spec.params[..] {
        [p, q] => Ok([p, q]),
        _ => Err(Error::BadParams(format!(
            "{:?} expects two parameters, got {:?}",
            spec.family, spec.params
        ))),
    }
}

fn params1(spec: &ModelSpec) -> Result<[usize; 1]> {
    match spec.params[..] {
        [n] => Ok([n]),
        _ => Err(Error::BadParams(format!(
            "{:?} expects one parameter, got {:?}",
            spec.family, spec.params
        ))),
    }
}

fn submat(m: &Mat, rows: Range<usize>, cols: Range<usize>) -> Mat {
    Mat::from_fn(m.ring(), rows.len(), cols.len(), |r, c| {
        m.get(rows.start + r, cols.start + c).clone()
    })
}

fn inject(ring: Ring, ambient: usize, blk: &Mat, row0: usize, col0: usize) -> Mat {
    let mut m = Mat::zeros(ring, ambient, ambient);
    copy_into(&mut m, blk, row0, col0);
    m
}

fn copy_into(dst: &mut Mat, src: &Mat, row0: usize, col0: usize) {
    for r in 0..src.rows() {
        for c in 0..src.cols() {
            dst.set(row0 + r, col0 + c, src.get(r, c).clone());
        }
    }
}

fn unit_entry(ring: Ring, n: usize, r: usize, c: usize, u: &Scalar) -> Mat {
    let mut m = Mat::zeros(ring, n, n);
    m.set(r, c, u.clone());
    m
}

/// 𝔰𝔩(p+q, 𝕂) with the 𝔭(p) block grading.
fn build_sl(ring: Ring, p: usize, q: usize) -> (Vec<Mat>, usize, usize, Mat, Vec<Rat>) {
    let n = p + q;
    let units = ring.units();
    let deg = ring.degree();
    let mut basis = Vec::new();

    // g_-1: lower-left q×p block
    for r in 0..q {
        for c in 0..p {
            for u in &units {
                basis.push(unit_entry(ring, n, p + r, c, u));
            }
        }
    }
    let d = q * p * deg;

    // g_0: block-diagonal, traceless over the reals
    let g0_start = basis.len();
    for (lo, hi) in [(0, p), (p, n)] {
        for i in lo..hi {
            for j in lo..hi {
                if i == j {
                    continue;
                }
                for u in &units {
                    basis.push(unit_entry(ring, n, i, j, u));
                }
            }
        }
    }
    // diagonal part
    for k in 0..n - 1 {
        let mut m = Mat::zeros(ring, n, n);
        m.set(k, k, Scalar::one(ring));
        m.set(k + 1, k + 1, -&Scalar::one(ring));
        basis.push(m);
    }
    match ring {
        Ring::Rat => {}
        Ring::Gauss => {
            // i·H_k keeps the complex trace zero
            let i_unit = Scalar::unit(ring, 1);
            for k in 0..n - 1 {
                let mut m = Mat::zeros(ring, n, n);
                m.set(k, k, i_unit.clone());
                m.set(k + 1, k + 1, -&i_unit);
                basis.push(m);
            }
        }
        Ring::Quat => {
            // imaginary diagonal entries are real-traceless individually
            for k in 0..n {
                for u in 1..4 {
                    basis.push(unit_entry(ring, n, k, k, &Scalar::unit(ring, u)));
                }
            }
        }
    }
    let d0 = basis.len() - g0_start;

    // g_1: upper-right p×q block
    for r in 0..p {
        for c in 0..q {
            for u in &units {
                basis.push(unit_entry(ring, n, r, p + c, u));
            }
        }
    }

    // grading element diag(q/(p+q)·I_p, −p/(p+q)·I_q)
    let mut e = Mat::zeros(ring, n, n);
    for i in 0..p {
        e.set(i, i, Scalar::from_rat(ring, ratio(q as i64, n as i64)));
    }
    for i in p..n {
        e.set(i, i, Scalar::from_rat(ring, ratio(-(p as i64), n as i64)));
    }
    (basis, d, d0, e, Vec::new())
}

/// 𝔬(p+1, q+1) for the form antidiag(1, I_{p,q}, 1).
fn build_conformal(p: usize, q: usize) -> (Vec<Mat>, usize, usize, Mat, Vec<Rat>) {
    let m = p + q;
    let amb = m + 2;
    let ring = Ring::Rat;
    let metric: Vec<Rat> = (0..m)
        .map(|i| if i < p { rat(1) } else { rat(-1) })
        .collect();
    let mut basis = Vec::new();

    // g_-1: v-columns
    for i in 0..m {
        let mut mat = Mat::zeros(ring, amb, amb);
        mat.set(1 + i, 0, Scalar::one(ring));
        mat.set(m + 1, 1 + i, Scalar::from_rat(ring, -metric[i].clone()));
        basis.push(mat);
    }
    let d = m;

    // g_0: dilation + o(p,q)
    let g0_start = basis.len();
    let mut dil = Mat::zeros(ring, amb, amb);
    dil.set(0, 0, Scalar::one(ring));
    dil.set(m + 1, m + 1, -&Scalar::one(ring));
    basis.push(dil.clone());
    for i in 0..m {
        for j in (i + 1)..m {
            // A_ij = 𝕀_jj E_ij − 𝕀_ii E_ji
            let mut mat = Mat::zeros(ring, amb, amb);
            mat.set(1 + i, 1 + j, Scalar::from_rat(ring, metric[j].clone()));
            mat.set(1 + j, 1 + i, Scalar::from_rat(ring, -metric[i].clone()));
            basis.push(mat);
        }
    }
    let d0 = basis.len() - g0_start;

    // g_1: w-columns
    for i in 0..m {
        let mut mat = Mat::zeros(ring, amb, amb);
        mat.set(1 + i, m + 1, Scalar::one(ring));
        mat.set(0, 1 + i, Scalar::from_rat(ring, -metric[i].clone()));
        basis.push(mat);
    }

    (basis, d, d0, dil, metric)
}

/// Symmetric (Lagrangean) or skew (spinorial) basis of an n×n block.
fn two_tensor_basis(ring: Ring, n: usize, skew: bool) -> Vec<Mat> {
    let units = ring.units();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            if skew && i == j {
                continue;
            }
            for u in &units {
                let mut m = Mat::zeros(ring, n, n);
                m.set(i, j, u.clone());
                if i != j {
                    m.set(j, i, if skew { -u } else { u.clone() });
                }
                out.push(m);
            }
        }
    }
    out
}

/// 𝔰𝔭(2n, 𝕂) / 𝔬(n, n): block form \[\[A, B], \[C, −Aᵗ]] with B, C
/// symmetric (sp) or skew (spin).
fn build_sp_like(ring: Ring, n: usize, skew: bool) -> (Vec<Mat>, usize, usize, Mat, Vec<Rat>) {
    let amb = 2 * n;
    let units = ring.units();
    let mut basis = Vec::new();

    let blocks = two_tensor_basis(ring, n, skew);
    let d = blocks.len();
    for b in &blocks {
        let mut m = Mat::zeros(ring, amb, amb);
        copy_into(&mut m, b, n, 0);
        basis.push(m);
    }
    let g0_start = basis.len();
    for i in 0..n {
        for j in 0..n {
            for u in &units {
                let mut m = Mat::zeros(ring, amb, amb);
                m.set(i, j, u.clone());
                m.set(n + j, n + i, -u);
                basis.push(m);
            }
        }
    }
    let d0 = basis.len() - g0_start;
    for b in &blocks {
        let mut m = Mat::zeros(ring, amb, amb);
        copy_into(&mut m, b, 0, n);
        basis.push(m);
    }

    let mut e = Mat::zeros(ring, amb, amb);
    for i in 0..n {
        e.set(i, i, Scalar::from_rat(ring, ratio(1, 2)));
        e.set(n + i, n + i, Scalar::from_rat(ring, ratio(-1, 2)));
    }
    (basis, d, d0, e, Vec::new())
}

fn build_sp(ring: Ring, n: usize) -> (Vec<Mat>, usize, usize, Mat, Vec<Rat>) {
    build_sp_like(ring, n, false)
}

fn build_spin(n: usize) -> (Vec<Mat>, usize, usize, Mat, Vec<Rat>) {
    build_sp_like(Ring::Rat, n, true)
}
