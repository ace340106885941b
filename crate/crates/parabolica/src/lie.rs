//! Matrix Lie algebras with exact structure constants.
//!
//! A [`LieAlgebra`] is a list of ambient matrices over one of the scalar
//! rings, *real*-linearly independent and closed under the commutator.
//! Coordinates are always rational vectors relative to this basis: the
//! algebra is stored realified, with the ring structure of the defining
//! representation kept only as metadata on the ambient matrices. One
//! rational engine therefore serves the real, complex, and quaternionic
//! models alike.
//!
//! Construction verifies, exactly: linear independence, closure under the
//! bracket, antisymmetry, and the Jacobi identity on all basis triples.

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::scalar::{Rat, Ring};
use crate::sparse::{svec_from_dense, LinSolver, SVec};
use num_traits::{One, Zero};

/// Rational coordinate vector relative to a [`LieAlgebra`] basis.
pub type Coords = Vec<Rat>;

pub fn coords_zero(dim: usize) -> Coords {
    vec![Rat::zero(); dim]
}

pub fn coords_unit(dim: usize, i: usize) -> Coords {
    let mut v = coords_zero(dim);
    v[i] = Rat::one();
    v
}

pub fn coords_add(a: &[Rat], b: &[Rat]) -> Coords {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn coords_sub(a: &[Rat], b: &[Rat]) -> Coords {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn coords_scale(a: &[Rat], c: &Rat) -> Coords {
    a.iter().map(|x| x * c).collect()
}

pub fn coords_is_zero(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// A matrix Lie algebra over ℚ, ℚ(i) or ℍ(ℚ), realified.
pub struct LieAlgebra {
    ring: Ring,
    ambient: usize,
    basis: Vec<Mat>,
    dim: usize,
    /// Sparse structure constants: `brackets\[i]\[j]` holds the coordinates
    /// of `\[e_i, e_j]`.
    brackets: Vec<Vec<SVec>>,
    solver: LinSolver,
    real_len: usize,
}

impl LieAlgebra {
    /// Build from ambient matrices; fails on dependent bases or spans that
    /// are not bracket-closed, and checks the Jacobi identity exactly.
    pub fn from_basis(basis: Vec<Mat>) -> Result<Self> {
        let first = basis
            .first()
            .ok_or_else(|| Error::DependentBasis { rank: 0, count: 0 })?;
        let ring = first.ring();
        let ambient = first.rows();
        for m in &basis {
            assert_eq!(m.ring(), ring, "mixed rings in basis");
            assert_eq!((m.rows(), m.cols()), (ambient, ambient), "non-square basis");
        }

        let real_len = ambient * ambient * ring.degree();
        let columns: Vec<SVec> = basis
            .iter()
            .map(|m| svec_from_dense(&m.real_coords()))
            .collect();
        let solver = LinSolver::new(real_len, &columns);
        let dim = basis.len();
        if solver.rank() < dim {
            return Err(Error::DependentBasis {
                rank: solver.rank(),
                count: dim,
            });
        }

        let mut alg = LieAlgebra {
            ring,
            ambient,
            basis,
            dim,
            brackets: vec![vec![Vec::new(); dim]; dim],
            solver,
            real_len,
        };

        for i in 0..dim {
            for j in (i + 1)..dim {
                let comm = alg.basis[i].commutator(&alg.basis[j]);
                let coords = alg
                    .solver
                    .solve(&svec_from_dense(&comm.real_coords()))
                    .ok_or_else(|| {
                        Error::NotClosed(format!(
                            "[e_{}, e_{}] falls outside the span of the basis",
                            i, j
                        ))
                    })?;
                alg.brackets[j][i] = coords
                    .iter()
                    .map(|(k, v)| (*k, -v.clone()))
                    .collect();
                alg.brackets[i][j] = coords;
            }
        }

        alg.check_jacobi()?;
        Ok(alg)
    }

    fn check_jacobi(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let mut acc = coords_zero(self.dim);
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = self.bracket_basis(b, c).clone();
                        for (m, v) in &inner {
                            for (t, w) in self.bracket_basis(a, *m) {
                                acc[*t] = &acc[*t] + &(v * w);
                            }
                        }
                    }
                    if !coords_is_zero(&acc) {
                        return Err(Error::CheckFailed(format!(
                            "Jacobi identity fails on basis triple ({}, {}, {})",
                            i, j, k
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn ambient_size(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    /// Sparse coordinates of `\[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &SVec {
        &self.brackets[i][j]
    }

    /// `\[x, y]` in coordinates.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Coords {
        let mut out = coords_zero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi * yj;
                for (k, c) in &self.brackets[i][j] {
                    out[*k] = &out[*k] + &(c * &f);
                }
            }
        }
        out
    }

    /// The matrix of `ad(x): y ↦ \[x,y]` in the basis.
    pub fn ad(&self, x: &[Rat]) -> Mat {
        let mut m = Mat::zeros(Ring::Rat, self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in &self.brackets[i][j] {
                    let v = m.get(*k, j).expect_rat() + c * xi;
                    m.set(*k, j, crate::scalar::Scalar::from_rat(Ring::Rat, v));
                }
            }
        }
        m
    }

    /// Exact Killing form matrix `B(e_i, e_j) = tr(ad e_i ∘ ad e_j)`;
    /// degeneracy is a construction bug and is reported as an error.
    pub fn killing(&self) -> Result<Mat> {
        let mut k = Mat::zeros(Ring::Rat, self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let mut t = Rat::zero();
                for a in 0..self.dim {
                    for (m, c) in &self.brackets[i][a] {
                        // (ad e_j)_{a m} — coefficient of e_a in [e_j, e_m]
                        for (mm, cc) in &self.brackets[j][*m] {
                            if mm == &a {
                                t = t + c * cc;
                            }
                        }
                    }
                }
                k.set(i, j, crate::scalar::Scalar::from_rat(Ring::Rat, t.clone()));
                k.set(j, i, crate::scalar::Scalar::from_rat(Ring::Rat, t));
            }
        }
        let rank = k.rank();
        if rank < self.dim {
            return Err(Error::DegenerateKilling {
                rank,
                dim: self.dim,
            });
        }
        Ok(k)
    }

    /// Basis of the centralizer `ker(ad x)` in coordinates.
    pub fn centralizer(&self, x: &[Rat]) -> Vec<Coords> {
        self.ad(x)
            .kernel_basis()
            .into_iter()
            .map(|v| (0..self.dim).map(|i| v.get(i, 0).expect_rat()).collect())
            .collect()
    }

    /// Ambient matrix Σ xᵢ·eᵢ of a coordinate vector.
    pub fn matrix_of(&self, x: &[Rat]) -> Mat {
        let mut m = Mat::zeros(self.ring, self.ambient, self.ambient);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = &m + &self.basis[i].scale_rat(xi);
            }
        }
        m
    }

    /// Coordinates of an ambient matrix, if it lies in the span.
    pub fn coords_of(&self, m: &Mat) -> Result<Coords> {
        assert_eq!(m.ring(), self.ring);
        let v = svec_from_dense(&m.real_coords());
        debug_assert_eq!(m.real_coords().len(), self.real_len);
        let sparse = self.solver.solve(&v).ok_or_else(|| {
            Error::NotClosed("matrix does not lie in the span of the basis".into())
        })?;
        let mut out = coords_zero(self.dim);
        for (i, c) in sparse {
            out[i] = c;
        }
        Ok(out)
    }
}

/// Exact exponential of a nilpotent matrix: the finite sum Σ mʲ/j!.
///
/// Fails with [`Error::NotNilpotent`] when no power up to the ambient size
/// vanishes.
pub fn exp_nilpotent(m: &Mat) -> Result<Mat> {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    let mut sum = Mat::identity(m.ring(), n);
    let mut power = m.clone();
    let mut factorial = Rat::one();
    let mut k: u64 = 1;
    while !power.is_zero() {
        if k as usize > n {
            return Err(Error::NotNilpotent);
        }
        sum = &sum + &power.scale_rat(&(Rat::one() / &factorial));
        power = &power * m;
        k += 1;
        factorial = factorial * Rat::from_integer(k.into());
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SpectralProjectors;
    use crate::scalar::rat;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// The standard generators of sl(2): X lower, Z upper, A = \[Z,X].
    fn sl2_rat() -> LieAlgebra {
        let x = Mat::from_int_rows(Ring::Rat, &[&[0, 0], &[1, 0]]);
        let z = Mat::from_int_rows(Ring::Rat, &[&[0, 1], &[0, 0]]);
        let a = Mat::from_int_rows(Ring::Rat, &[&[1, 0], &[0, -1]]);
        LieAlgebra::from_basis(vec![x, a, z]).unwrap()
    }

    fn rand_coords(rng: &mut StdRng, dim: usize) -> Coords {
        (0..dim).map(|_| rat(rng.gen_range(-4..=4))).collect()
    }

    #[test]
    fn sl2_structure_constants() {
        let g = sl2_rat();
        assert_eq!(g.dim(), 3);
        let x = coords_unit(3, 0);
        let a = coords_unit(3, 1);
        let z = coords_unit(3, 2);
        // [Z, X] = A, [A, Z] = 2Z, [A, X] = -2X
        assert_eq!(g.bracket(&z, &x), a);
        assert_eq!(g.bracket(&a, &z), coords_scale(&z, &rat(2)));
        assert_eq!(g.bracket(&a, &x), coords_scale(&x, &rat(-2)));
        // [x, x] = 0
        assert!(coords_is_zero(&g.bracket(&x, &x)));
    }

    #[test]
    fn dependent_basis_rejected() {
        let zero = Mat::zeros(Ring::Rat, 1, 1);
        assert!(matches!(
            LieAlgebra::from_basis(vec![zero]),
            Err(Error::DependentBasis { .. })
        ));
    }

    #[test]
    fn abelian_diagonal_algebra() {
        let h1 = Mat::from_int_rows(Ring::Rat, &[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]);
        let h2 = Mat::from_int_rows(Ring::Rat, &[&[0, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
        let g = LieAlgebra::from_basis(vec![h1, h2]).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!(g.bracket_basis(i, j).is_empty());
            }
        }
    }

    #[test]
    fn ad_of_a_has_spectrum_two_zero_minus_two() {
        let g = sl2_rat();
        let ad_a = g.ad(&coords_unit(3, 1));
        let sp = SpectralProjectors::new(&ad_a, &[2, 0, -2]).unwrap();
        for lam in [2, 0, -2] {
            assert_eq!(sp.projector(lam).unwrap().rank(), 1);
        }
        assert!(g.ad(&coords_zero(3)).is_zero());
    }

    #[test]
    fn killing_form_of_sl2() {
        let g = sl2_rat();
        let k = g.killing().unwrap();
        // B(A, A) = tr(ad A ∘ ad A) = 4 + 0 + 4 = 8
        assert_eq!(k.get(1, 1).expect_rat(), rat(8));
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..25 {
            let x = rand_coords(&mut rng, 3);
            let y = rand_coords(&mut rng, 3);
            let z = rand_coords(&mut rng, 3);
            let b = |u: &[Rat], v: &[Rat]| -> Rat {
                let mut t = Rat::zero();
                for i in 0..3 {
                    for j in 0..3 {
                        t = t + &u[i] * &v[j] * k.get(i, j).expect_rat();
                    }
                }
                t
            };
            assert_eq!(b(&x, &y), b(&y, &x));
            // invariance B([x,y],z) + B(y,[x,z]) = 0
            let lhs = b(&g.bracket(&x, &y), &z);
            let rhs = b(&y, &g.bracket(&x, &z));
            assert!((lhs + rhs).is_zero());
        }
    }

    #[test]
    fn ad_is_a_homomorphism_on_samples() {
        let g = sl2_rat();
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..20 {
            let x = rand_coords(&mut rng, 3);
            let y = rand_coords(&mut rng, 3);
            let lhs = g.ad(&g.bracket(&x, &y));
            let rhs = &(&g.ad(&x) * &g.ad(&y)) - &(&g.ad(&y) * &g.ad(&x));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exp_nilpotent_basics() {
        assert_eq!(
            exp_nilpotent(&Mat::zeros(Ring::Rat, 3, 3)).unwrap(),
            Mat::identity(Ring::Rat, 3)
        );
        // exp(tZ) in the defining rep is [[1, t], [0, 1]]
        let z = Mat::from_int_rows(Ring::Rat, &[&[0, 5], &[0, 0]]);
        assert_eq!(
            exp_nilpotent(&z).unwrap(),
            Mat::from_int_rows(Ring::Rat, &[&[1, 5], &[0, 1]])
        );
        assert!(matches!(
            exp_nilpotent(&Mat::identity(Ring::Rat, 2)),
            Err(Error::NotNilpotent)
        ));
        // exp(m)·exp(−m) = Id on random strictly upper-triangular matrices
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..10 {
            let m = Mat::from_fn(Ring::Rat, 4, 4, |r, c| {
                if c > r {
                    crate::scalar::Scalar::from_int(Ring::Rat, rng.gen_range(-3..=3))
                } else {
                    crate::scalar::Scalar::zero(Ring::Rat)
                }
            });
            let e = exp_nilpotent(&m).unwrap();
            let einv = exp_nilpotent(&(-&m)).unwrap();
            assert_eq!(&e * &einv, Mat::identity(Ring::Rat, 4));
        }
    }

    #[test]
    fn centralizer_of_a_in_sl2() {
        let g = sl2_rat();
        // centralizer of 0 is everything
        assert_eq!(g.centralizer(&coords_zero(3)).len(), 3);
        let c = g.centralizer(&coords_unit(3, 1));
        assert_eq!(c.len(), 1);
        // spanned by A itself
        assert!(c[0][0].is_zero() && c[0][2].is_zero() && !c[0][1].is_zero());
    }

    #[test]
    fn coords_roundtrip_through_matrices() {
        let g = sl2_rat();
        let mut rng = StdRng::seed_from_u64(21);
        for _ in 0..10 {
            let x = rand_coords(&mut rng, 3);
            let m = g.matrix_of(&x);
            assert_eq!(g.coords_of(&m).unwrap(), x);
        }
        // a matrix with nonzero trace is not in sl(2)
        let bad = Mat::identity(Ring::Rat, 2);
        assert!(g.coords_of(&bad).is_err());
    }
}
