//! Exact scalars over the three ground rings ℚ, ℚ(i) and the rational
//! quaternions ℍ(ℚ).
//!
//! Every scalar is stored as up to four arbitrary-precision rationals
//! (the coefficients of `1, i, j, k`) together with a [`Ring`] tag. One
//! multiplication routine (the quaternion product) serves all three rings,
//! since ℚ ⊂ ℚ(i) ⊂ ℍ(ℚ) as subrings. ℚ and ℚ(i) are fields; ℍ(ℚ) is a
//! division ring, so multiplication is noncommutative and code that
//! multiplies scalars must keep track of sides.
//!
//! No floating point appears anywhere: `num_rational::BigRational` keeps
//! every value gcd-reduced with a positive denominator, which is also the
//! canonical form used when printing.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Arbitrary-precision rational, the ground field of every computation.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for a rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Convenience constructor for a rational fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Ground ring tag. The real dimension of the ring is [`Ring::degree`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash, Serialize)]
pub enum Ring {
    /// ℚ, tagging models over ℝ.
    Rat,
    /// ℚ(i), tagging models over ℂ.
    Gauss,
    /// ℍ(ℚ), tagging models over ℍ.
    Quat,
}

impl Ring {
    /// Real dimension: 1, 2 or 4.
    pub fn degree(self) -> usize {
        match self {
            Ring::Rat => 1,
            Ring::Gauss => 2,
            Ring::Quat => 4,
        }
    }

    pub fn is_commutative(self) -> bool {
        !matches!(self, Ring::Quat)
    }

    /// The standard real basis units of the ring: `1`, `1,i`, or `1,i,j,k`.
    pub fn units(self) -> Vec<Scalar> {
        let mut us = vec![Scalar::one(self)];
        if self.degree() >= 2 {
            us.push(Scalar::unit(self, 1));
        }
        if self.degree() == 4 {
            us.push(Scalar::unit(self, 2));
            us.push(Scalar::unit(self, 3));
        }
        us
    }

    pub fn label(self) -> &'static str {
        match self {
            Ring::Rat => "R",
            Ring::Gauss => "C",
            Ring::Quat => "H",
        }
    }
}

/// An element of ℚ, ℚ(i) or ℍ(ℚ): coefficients of `1, i, j, k`.
///
/// Components beyond the ring's degree are invariantly zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    ring: Ring,
    c: [Rat; 4],
}

impl Scalar {
    pub fn zero(ring: Ring) -> Self {
        Scalar {
            ring,
            c: [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()],
        }
    }

    pub fn one(ring: Ring) -> Self {
        let mut s = Scalar::zero(ring);
        s.c[0] = Rat::one();
        s
    }

    /// The basis unit with index `k` (0 ↦ 1, 1 ↦ i, 2 ↦ j, 3 ↦ k).
    pub fn unit(ring: Ring, k: usize) -> Self {
        assert!(k < ring.degree(), "unit index {} exceeds ring degree", k);
        let mut s = Scalar::zero(ring);
        s.c[k] = Rat::one();
        s
    }

    pub fn from_rat(ring: Ring, r: Rat) -> Self {
        let mut s = Scalar::zero(ring);
        s.c[0] = r;
        s
    }

    pub fn from_int(ring: Ring, n: i64) -> Self {
        Scalar::from_rat(ring, rat(n))
    }

    pub fn gauss(re: Rat, im: Rat) -> Self {
        let mut s = Scalar::zero(Ring::Gauss);
        s.c[0] = re;
        s.c[1] = im;
        s
    }

    pub fn quat(r: Rat, i: Rat, j: Rat, k: Rat) -> Self {
        Scalar {
            ring: Ring::Quat,
            c: [r, i, j, k],
        }
    }

    /// Rebuild from real components; `comps.len()` must equal the degree.
    pub fn from_components(ring: Ring, comps: &[Rat]) -> Self {
        assert_eq!(comps.len(), ring.degree());
        let mut s = Scalar::zero(ring);
        for (k, v) in comps.iter().enumerate() {
            s.c[k] = v.clone();
        }
        s
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// The real components, one per ring degree.
    pub fn components(&self) -> &[Rat] {
        &self.c[..self.ring.degree()]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// The rational part; panics unless the element is purely rational.
    pub fn expect_rat(&self) -> Rat {
        assert!(
            self.c[1..].iter().all(|x| x.is_zero()),
            "scalar {} is not rational",
            self
        );
        self.c[0].clone()
    }

    /// Conjugation, the involutive anti-automorphism fixing ℚ.
    pub fn conj(&self) -> Self {
        Scalar {
            ring: self.ring,
            c: [
                self.c[0].clone(),
                -self.c[1].clone(),
                -self.c[2].clone(),
                -self.c[3].clone(),
            ],
        }
    }

    /// The reduced norm `x · conj(x)`, a nonnegative rational.
    pub fn norm_sqr(&self) -> Rat {
        self.c.iter().map(|x| x * x).sum()
    }

    /// Two-sided inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        let conj = self.conj();
        Some(Scalar {
            ring: self.ring,
            c: conj.c.map(|x| x / &n),
        })
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Scalar {
            ring: self.ring,
            c: [
                &self.c[0] * r,
                &self.c[1] * r,
                &self.c[2] * r,
                &self.c[3] * r,
            ],
        }
    }

    /// The matrix of left multiplication by `self` on the ring viewed as a
    /// real vector space with basis `1, i, j, k` (columns are the images of
    /// the basis units). This is the realification functor on entries.
    pub fn left_mul_matrix(&self) -> Vec<Vec<Rat>> {
        let (a, b, c, d) = (&self.c[0], &self.c[1], &self.c[2], &self.c[3]);
        match self.ring.degree() {
            1 => vec![vec![a.clone()]],
            2 => vec![vec![a.clone(), -b.clone()], vec![b.clone(), a.clone()]],
            4 => vec![
                vec![a.clone(), -b.clone(), -c.clone(), -d.clone()],
                vec![b.clone(), a.clone(), -d.clone(), c.clone()],
                vec![c.clone(), d.clone(), a.clone(), -b.clone()],
                vec![d.clone(), -c.clone(), b.clone(), a.clone()],
            ],
            _ => unreachable!(),
        }
    }

    fn assert_same_ring(&self, other: &Scalar) {
        assert_eq!(
            self.ring, other.ring,
            "ring mismatch: {:?} vs {:?}",
            self.ring, other.ring
        );
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.assert_same_ring(rhs);
        Scalar {
            ring: self.ring,
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.assert_same_ring(rhs);
        Scalar {
            ring: self.ring,
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
                &self.c[3] - &rhs.c[3],
            ],
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            ring: self.ring,
            c: [
                -self.c[0].clone(),
                -self.c[1].clone(),
                -self.c[2].clone(),
                -self.c[3].clone(),
            ],
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;

    /// The quaternion product; restricts to the complex and rational
    /// products on the lower rings.
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.assert_same_ring(rhs);
        let (a1, b1, c1, d1) = (&self.c[0], &self.c[1], &self.c[2], &self.c[3]);
        let (a2, b2, c2, d2) = (&rhs.c[0], &rhs.c[1], &rhs.c[2], &rhs.c[3]);
        match self.ring {
            Ring::Rat => Scalar::from_rat(Ring::Rat, a1 * a2),
            Ring::Gauss => Scalar::gauss(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2),
            Ring::Quat => Scalar::quat(
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            ),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["", "i", "j", "k"];
        let mut first = true;
        for (k, v) in self.components().iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if !first {
                write!(f, "{}", if v.is_negative() { "-" } else { "+" })?;
            } else if v.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = v.abs();
            if k == 0 || !a.is_one() {
                write!(f, "{}", a)?;
            }
            write!(f, "{}", names[k])?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Canonical short form of a rational for reports and golden files.
pub fn rat_str(r: &Rat) -> String {
    r.to_string()
}
