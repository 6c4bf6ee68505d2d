//! Linear fractional action of `SL_2(Q_p)` on `Q_p` and the matrices `k(y)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::scalar::{PAdicScalar, Prime};
use crate::error::{Error, Result};

/// `[[a, b], [c, d]]` with rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl Mat2 {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new(BigRational::one(), BigRational::zero(), BigRational::zero(), BigRational::one())
    }

    pub fn det(&self) -> BigRational {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse_sl2(&self) -> Self {
        Self::new(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }

    /// Member of `SL_2(Z_p)`: determinant one and all entries p-integral.
    pub fn in_sl2_zp(&self, p: Prime) -> bool {
        self.det().is_one()
            && [&self.a, &self.b, &self.c, &self.d].into_iter().all(|x| PAdicScalar::new(x.clone()).is_integral(p))
    }

    /// `c z + d`
    pub fn denominator_at(&self, z: &PAdicScalar) -> BigRational {
        &self.c * z.value() + &self.d
    }
}

/// `g·z = (a z + b) / (c z + d)`.
pub fn moebius_act(g: &Mat2, z: &PAdicScalar) -> Result<PAdicScalar> {
    let den = g.denominator_at(z);
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(PAdicScalar::new((&g.a * z.value() + &g.b) / den))
}

/// `k(y) ∈ SL_2(Z_p)` with `k(y)·y = 0`: `[[1, -y], [0, 1]]` for `y ∈ Z_p`,
/// `[[1/y, -1], [1, 0]]` otherwise.
pub fn k_matrix(y: &PAdicScalar, p: Prime) -> Mat2 {
    let one = BigRational::one;
    let zero = BigRational::zero;
    if y.is_integral(p) {
        Mat2::new(one(), -y.value().clone(), zero(), one())
    } else {
        Mat2::new(y.value().recip(), -one(), one(), zero())
    }
}

/// Random rational with valuation at least `min_v` (numerator and denominator
/// drawn from a small box, the denominator prime to `p`).
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R, p: Prime, min_v: i64, max_v: i64) -> PAdicScalar {
    let pu = p.get() as i64;
    let num = loop {
        let n = rng.gen_range(-999i64..=999);
        if n != 0 && n % pu != 0 {
            break n;
        }
    };
    let den = loop {
        let d = rng.gen_range(1i64..=999);
        if d % pu != 0 {
            break d;
        }
    };
    let v = rng.gen_range(min_v..=max_v);
    PAdicScalar::new(BigRational::new(BigInt::from(num), BigInt::from(den)) * p.pow(v))
}

fn random_integral<R: Rng + ?Sized>(rng: &mut R, p: Prime) -> BigRational {
    if rng.gen_bool(0.1) {
        BigRational::zero()
    } else {
        random_scalar(rng, p, 0, 3).value().clone()
    }
}

/// Random element of `SL_2(Z_p)`.
///
/// Draws a unit `a` and integral `b, c`, sets `d = (1 + bc)/a`, then multiplies
/// by the Weyl element half of the time so that `a` need not be a unit.
pub fn random_sl2_zp<R: Rng + ?Sized>(rng: &mut R, p: Prime) -> Mat2 {
    let a = random_scalar(rng, p, 0, 0).value().clone();
    let b = random_integral(rng, p);
    let c = random_integral(rng, p);
    let d = (BigRational::one() + &b * &c) / &a;
    let g = Mat2::new(a, b, c, d);
    if rng.gen_bool(0.5) {
        let w = Mat2::new(BigRational::zero(), -BigRational::one(), BigRational::one(), BigRational::zero());
        g.mul(&w)
    } else {
        g
    }
}

/// Random element of `SL_2(Q_p)` with entries of valuation in `[-3, 3]`.
pub fn random_sl2_qp<R: Rng + ?Sized>(rng: &mut R, p: Prime) -> Mat2 {
    let a = random_scalar(rng, p, -3, 3).value().clone();
    let b = random_scalar(rng, p, -3, 3).value().clone();
    let c = random_scalar(rng, p, -3, 3).value().clone();
    let d = (BigRational::one() + &b * &c) / &a;
    Mat2::new(a, b, c, d)
}

/// `ψ_p(g·x) == ψ_p(x) / |cx + d|_p`; `None` when `cx + d = 0`.
pub fn psi_identity_holds(g: &Mat2, x: &PAdicScalar, p: Prime) -> Option<bool> {
    let gx = moebius_act(g, x).ok()?;
    let den = PAdicScalar::new(g.denominator_at(x)).norm(p);
    Some(gx.psi(p) == x.psi(p) / den)
}

/// `g·x - g·y == (x - y) / ((cx + d)(cy + d))`; `None` on a pole.
pub fn difference_identity_holds(g: &Mat2, x: &PAdicScalar, y: &PAdicScalar) -> Option<bool> {
    let gx = moebius_act(g, x).ok()?;
    let gy = moebius_act(g, y).ok()?;
    let rhs = (x.value() - y.value()) / (g.denominator_at(x) * g.denominator_at(y));
    Some(gx.value() - gy.value() == rhs)
}
