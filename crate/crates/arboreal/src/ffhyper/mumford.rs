//! Mumford representation and Cantor's algorithm on odd-degree models.
//!
//! A reduced divisor class on the Jacobian of `y^2 = f(x)` (deg f odd)
//! is a pair `[a(x), b(x)]` with `a` monic, `deg b < deg a <= g`, and
//! `a | b^2 - f`. Composition takes gcds, reduction repeatedly replaces
//! `a` by `(f - b^2)/a` until the degree drops to at most g.

use super::FfError;
use crate::arith::{BigInt, RatPoly};
use crate::curves::HyperCurve;
use crate::modp::{Fp, FpPoly};
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A reduced divisor in Mumford form over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MumfordDivisor {
    pub a: FpPoly,
    pub b: FpPoly,
}

/// A divisor over Q in Mumford form, as written in kernel-divisor tables.
#[derive(Debug, Clone, PartialEq)]
pub struct MumfordQ {
    pub a: RatPoly,
    pub b: RatPoly,
}

impl MumfordQ {
    pub fn from_i64(a: &[i64], b: &[i64]) -> MumfordQ {
        use crate::arith::IntPoly;
        MumfordQ {
            a: RatPoly::from(IntPoly::from_i64s(a)),
            b: RatPoly::from(IntPoly::from_i64s(b)),
        }
    }
}

/// The Jacobian of an odd-degree model over F_p.
#[derive(Debug, Clone)]
pub struct JacobianFp {
    pub fp: Fp,
    pub f: FpPoly,
    pub genus: usize,
}

impl JacobianFp {
    pub fn new(curve: &HyperCurve, p: u64) -> Result<JacobianFp, FfError> {
        if curve.degree() % 2 == 0 {
            return Err(FfError::EvenDegreeJacobian);
        }
        super::count::check_good_reduction(curve, p)?;
        let fp = Fp::new(p);
        Ok(JacobianFp {
            fp,
            f: FpPoly::from_int_poly(&curve.f, fp),
            genus: curve.genus,
        })
    }

    pub fn identity(&self) -> MumfordDivisor {
        MumfordDivisor {
            a: FpPoly::one(),
            b: FpPoly::zero(),
        }
    }

    /// Validity: `a` monic nonzero, `deg b < deg a`, and `a | b^2 - f`.
    pub fn is_valid(&self, d: &MumfordDivisor) -> bool {
        let fp = self.fp;
        if d.a.is_zero() || d.a.lc() != 1 {
            return false;
        }
        if !d.b.is_zero() && d.b.deg() >= d.a.deg() {
            return false;
        }
        let expr = d.b.mul(&d.b, fp).sub(&self.f, fp);
        expr.rem(&d.a, fp).is_zero()
    }

    pub fn check(&self, d: &MumfordDivisor) -> Result<(), FfError> {
        if self.is_valid(d) {
            Ok(())
        } else {
            Err(FfError::InvalidMumford)
        }
    }

    pub fn neg(&self, d: &MumfordDivisor) -> MumfordDivisor {
        MumfordDivisor {
            a: d.a.clone(),
            b: d.b.neg(self.fp).rem(&d.a, self.fp),
        }
    }

    /// Cantor composition followed by reduction.
    pub fn add(&self, d1: &MumfordDivisor, d2: &MumfordDivisor) -> MumfordDivisor {
        let fp = self.fp;
        // d = gcd(a1, a2, b1 + b2) = s1 a1 + s2 a2 + s3 (b1 + b2)
        let (d0, e1, e2) = d1.a.xgcd(&d2.a, fp);
        let bsum = d1.b.add(&d2.b, fp);
        let (d, c1, c2) = d0.xgcd(&bsum, fp);
        let s1 = c1.mul(&e1, fp);
        let s2 = c1.mul(&e2, fp);
        let s3 = c2;
        // a = a1 a2 / d^2
        let a1a2 = d1.a.mul(&d2.a, fp);
        let dd = d.mul(&d, fp);
        let (a, rem) = a1a2.divrem(&dd, fp);
        debug_assert!(rem.is_zero());
        // b = (s1 a1 b2 + s2 a2 b1 + s3 (b1 b2 + f)) / d mod a
        let t1 = s1.mul(&d1.a, fp).mul(&d2.b, fp);
        let t2 = s2.mul(&d2.a, fp).mul(&d1.b, fp);
        let t3 = s3.mul(&d1.b.mul(&d2.b, fp).add(&self.f, fp), fp);
        let num = t1.add(&t2, fp).add(&t3, fp);
        let (bq, brem) = num.divrem(&d, fp);
        debug_assert!(brem.is_zero());
        let b = bq.rem(&a, fp);
        self.reduce(a.make_monic(fp), b)
    }

    fn reduce(&self, mut a: FpPoly, mut b: FpPoly) -> MumfordDivisor {
        let fp = self.fp;
        while a.deg().unwrap_or(0) > self.genus {
            // a' = (f - b^2)/a, b' = -b mod a'
            let num = self.f.sub(&b.mul(&b, fp), fp);
            let (anew, rem) = num.divrem(&a, fp);
            debug_assert!(rem.is_zero());
            let anew = anew.make_monic(fp);
            b = b.neg(fp).rem(&anew, fp);
            a = anew;
        }
        if a.deg() == Some(0) {
            return self.identity();
        }
        MumfordDivisor { a, b }
    }

    /// Scalar multiple by double-and-add; negative scalars invert.
    pub fn mul_scalar(&self, d: &MumfordDivisor, m: &BigInt) -> MumfordDivisor {
        if m.is_zero() {
            return self.identity();
        }
        let (base, mag) = if m.is_negative() {
            (self.neg(d), m.abs())
        } else {
            (d.clone(), m.clone())
        };
        let mut acc = self.identity();
        let bits = mag.bits();
        for i in (0..bits).rev() {
            acc = self.add(&acc, &acc);
            if mag.bit(i) {
                acc = self.add(&acc, &base);
            }
        }
        acc
    }

    /// Reduce a divisor over Q modulo p: coefficientwise, with `b` reduced
    /// modulo `a` and validity re-verified.
    pub fn reduce_mod_p(&self, d: &MumfordQ) -> Result<MumfordDivisor, FfError> {
        let a = self.reduce_ratpoly(&d.a)?;
        let b0 = self.reduce_ratpoly(&d.b)?;
        if a.is_zero() || a.lc() != 1 {
            return Err(FfError::InvalidMumford);
        }
        let b = b0.rem(&a, self.fp);
        let out = MumfordDivisor { a, b };
        self.check(&out)?;
        Ok(out)
    }

    fn reduce_ratpoly(&self, f: &RatPoly) -> Result<FpPoly, FfError> {
        let p = BigInt::from(self.fp.p);
        let mut coeffs = Vec::with_capacity(f.coeffs().len());
        for c in f.coeffs() {
            if (c.denom() % &p).is_zero() {
                return Err(FfError::DenominatorDivisibleByP { p: self.fp.p });
            }
            let num = self.fp.reduce_bigint(c.numer());
            let den = self.fp.reduce_bigint(c.denom());
            coeffs.push(self.fp.mul(num, self.fp.inv(den)));
        }
        Ok(FpPoly::from_coeffs(coeffs))
    }

    /// The divisor class of an affine point `(x0, y0)` on the curve.
    pub fn point_divisor(&self, x0: u64, y0: u64) -> Result<MumfordDivisor, FfError> {
        let fp = self.fp;
        let a = FpPoly::from_coeffs(vec![fp.neg(x0 % fp.p), 1]);
        let b = FpPoly::from_coeffs(vec![y0 % fp.p]);
        let d = MumfordDivisor { a, b };
        self.check(&d)?;
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::IntPoly;
    use crate::curves::HyperCurve;

    fn deg15_plus() -> HyperCurve {
        HyperCurve::new(IntPoly::from_i64s(&[
            1, 1, 2, 5, 14, 26, 44, 69, 94, 114, 116, 94, 60, 28, 8, 1,
        ]))
        .unwrap()
    }

    fn deg15_minus() -> HyperCurve {
        HyperCurve::new(deg15_plus().f.neg()).unwrap()
    }

    #[test]
    fn identity_and_inverse() {
        let jac = JacobianFp::new(&deg15_plus(), 3).unwrap();
        let d = jac.reduce_mod_p(&MumfordQ::from_i64(&[1, 1], &[-1])).unwrap();
        assert!(jac.is_valid(&d));
        assert_eq!(jac.add(&d, &jac.identity()), d);
        assert_eq!(jac.add(&d, &jac.neg(&d)), jac.identity());
    }

    #[test]
    fn generator_reductions_mod_three() {
        let jac = JacobianFp::new(&deg15_plus(), 3).unwrap();
        // [x+1, -1] reduces to [x+1, 2]
        let p1 = jac.reduce_mod_p(&MumfordQ::from_i64(&[1, 1], &[-1])).unwrap();
        assert_eq!(p1.a, FpPoly::from_coeffs(vec![1, 1]));
        assert_eq!(p1.b, FpPoly::from_coeffs(vec![2]));

        let jac2 = JacobianFp::new(&deg15_minus(), 3).unwrap();
        // [x^3+x^2-x+1, x^4+2x^3+x^2+x]: b reduces mod a and stays valid
        let r2 = jac2
            .reduce_mod_p(&MumfordQ::from_i64(&[1, -1, 1, 1], &[0, 1, 1, 2, 1]))
            .unwrap();
        assert!(jac2.is_valid(&r2));
        assert!(r2.b.deg().unwrap() < r2.a.deg().unwrap());
        // frozen reduced b over Q is x^2 + x - 1, i.e. x^2 + x + 2 mod 3
        assert_eq!(r2.b, FpPoly::from_coeffs(vec![2, 1, 1]));
    }

    #[test]
    fn denominator_divisible_by_p_rejected() {
        let jac = JacobianFp::new(&deg15_plus(), 3).unwrap();
        let d = MumfordQ {
            a: RatPoly::from_coeffs(vec![
                crate::arith::Rat::new(BigInt::from(1), BigInt::from(3)),
                crate::arith::Rat::from_integer(BigInt::from(1)),
            ]),
            b: RatPoly::zero(),
        };
        assert!(matches!(
            jac.reduce_mod_p(&d),
            Err(FfError::DenominatorDivisibleByP { p: 3 })
        ));
    }

    #[test]
    fn invalid_pair_rejected() {
        let jac = JacobianFp::new(&deg15_plus(), 3).unwrap();
        // b^2 - f not divisible by a
        let bad = MumfordQ::from_i64(&[1, 1], &[1]);
        assert!(matches!(
            jac.reduce_mod_p(&bad),
            Err(FfError::InvalidMumford)
        ));
    }

    #[test]
    fn even_degree_rejected() {
        let octic =
            HyperCurve::new(IntPoly::from_i64s(&[25, 131, 299, 398, 335, 182, 62, 12, 1]))
                .unwrap();
        assert!(matches!(
            JacobianFp::new(&octic, 3),
            Err(FfError::EvenDegreeJacobian)
        ));
    }

    fn random_divisor(jac: &JacobianFp, seed: &mut u64) -> MumfordDivisor {
        // random points summed into the Jacobian
        let fp = jac.fp;
        let mut acc = jac.identity();
        loop {
            *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let x = (*seed >> 33) % fp.p;
            let v = jac.f.eval(x, fp);
            if fp.chi(v) == fp.p - 1 {
                continue;
            }
            // find a square root by brute force (p is tiny in tests)
            let y = (0..fp.p).find(|&y| fp.mul(y, y) == v).unwrap();
            let d = jac.point_divisor(x, y).unwrap();
            acc = jac.add(&acc, &d);
            *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(97);
            if *seed % 3 == 0 {
                return acc;
            }
        }
    }

    #[test]
    fn group_laws_on_random_divisors() {
        for curve in [deg15_plus(), deg15_minus()] {
            let jac = JacobianFp::new(&curve, 7).unwrap();
            let mut seed = 0x2468_ace0u64;
            for _ in 0..100 {
                let d1 = random_divisor(&jac, &mut seed);
                let d2 = random_divisor(&jac, &mut seed);
                let d3 = random_divisor(&jac, &mut seed);
                assert!(jac.is_valid(&d1) || d1 == jac.identity());
                // commutativity and associativity
                assert_eq!(jac.add(&d1, &d2), jac.add(&d2, &d1));
                assert_eq!(
                    jac.add(&jac.add(&d1, &d2), &d3),
                    jac.add(&d1, &jac.add(&d2, &d3))
                );
                // inverse
                assert_eq!(jac.add(&d1, &jac.neg(&d1)), jac.identity());
            }
        }
    }

    #[test]
    fn scalar_multiples() {
        let jac = JacobianFp::new(&deg15_plus(), 3).unwrap();
        let d = jac.reduce_mod_p(&MumfordQ::from_i64(&[0, 1], &[1])).unwrap();
        let two = jac.add(&d, &d);
        assert_eq!(jac.mul_scalar(&d, &BigInt::from(2)), two);
        let five = jac.add(&jac.add(&two, &two), &d);
        assert_eq!(jac.mul_scalar(&d, &BigInt::from(5)), five);
        assert_eq!(jac.mul_scalar(&d, &BigInt::from(0)), jac.identity());
        let minus3 = jac.mul_scalar(&d, &BigInt::from(-3));
        let plus3 = jac.mul_scalar(&d, &BigInt::from(3));
        assert_eq!(jac.add(&minus3, &plus3), jac.identity());
    }
}
