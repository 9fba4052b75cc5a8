//! L-polynomials of hyperelliptic curves over F_p and Jacobian orders.
//!
//! With N_k = #C(F_{p^k}) and power sums s_k = p^k + 1 - N_k, Newton's
//! identities give the low half a_1..a_g of L(T); the functional equation
//! a_{2g-i} = p^{g-i} a_i fills in the rest, and #J(F_p) = L(1).

use super::count::{count_points_with, DEFAULT_COUNT_BUDGET};
use super::FfError;
use crate::arith::{BigInt, Rat};
use crate::curves::HyperCurve;
use crate::par::Parallelism;
use num_traits::{One, Signed, Zero};

/// Numerator of the zeta function: coefficients a_0..a_{2g} over Z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LPolynomial {
    pub p: u64,
    pub genus: usize,
    pub coeffs: Vec<BigInt>,
    /// The counts N_1..N_g the polynomial was built from.
    pub counts: Vec<u64>,
}

impl LPolynomial {
    /// Build from the counts N_1..N_g, validating integrality, the
    /// functional equation, positivity of L(1), and the Weil bound on N_1.
    pub fn from_counts(p: u64, genus: usize, counts: &[u64]) -> Result<LPolynomial, FfError> {
        assert_eq!(counts.len(), genus);
        let pb = BigInt::from(p);
        // s_k = p^k + 1 - N_k
        let s: Vec<Rat> = (1..=genus)
            .map(|k| {
                Rat::from_integer(pb.pow(k as u32) + 1 - BigInt::from(counts[k - 1]))
            })
            .collect();
        // Weil bound: (N_1 - p - 1)^2 <= 4 g^2 p
        let dev = &s[0] * &s[0];
        let bound = Rat::from_integer(BigInt::from(4 * (genus * genus) as u64) * &pb);
        if dev > bound {
            return Err(FfError::WeilBoundViolated { p });
        }
        // Newton: k*e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} s_i
        let mut e: Vec<Rat> = vec![Rat::one()];
        for k in 1..=genus {
            let mut acc = Rat::zero();
            for i in 1..=k {
                let term = &e[k - i] * &s[i - 1];
                if i % 2 == 1 {
                    acc = acc + term;
                } else {
                    acc = acc - term;
                }
            }
            e.push(acc / Rat::from_integer(BigInt::from(k as u64)));
        }
        let mut coeffs: Vec<BigInt> = Vec::with_capacity(2 * genus + 1);
        for (k, ek) in e.iter().enumerate() {
            if !ek.is_integer() {
                return Err(FfError::NonIntegralLCoefficient { k });
            }
            let a = if k % 2 == 1 {
                -ek.to_integer()
            } else {
                ek.to_integer()
            };
            coeffs.push(a);
        }
        for i in (0..genus).rev() {
            let a = pb.pow((genus - i) as u32) * &coeffs[i];
            coeffs.push(a);
        }
        let l = LPolynomial {
            p,
            genus,
            coeffs,
            counts: counts.to_vec(),
        };
        if !l.order().is_positive() {
            return Err(FfError::NonPositiveJacobianOrder { p });
        }
        Ok(l)
    }

    /// #J(F_p) = L(1).
    pub fn order(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Predicted #C(F_{p^k}) for any k, recovered from the full
    /// coefficient list via the power-sum recurrence.
    pub fn predicted_count(&self, k: usize) -> BigInt {
        // s_k + sum_{i<k} e_i * s_{k-i} * (-1)^... : use Newton in reverse
        // e_i = (-1)^i a_i
        let n = 2 * self.genus;
        let e: Vec<BigInt> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| if i % 2 == 1 { -a } else { a.clone() })
            .collect();
        let mut s: Vec<BigInt> = vec![BigInt::zero(); k + 1];
        for m in 1..=k {
            // m*e_m = sum_{i=1..m} (-1)^(i-1) e_{m-i} s_i, solve for s_m
            let mut acc = if m <= n {
                BigInt::from(m as u64) * &e[m]
            } else {
                BigInt::zero()
            };
            for i in 1..m {
                let ei = if m - i <= n { e[m - i].clone() } else { BigInt::zero() };
                let term = ei * &s[i];
                if i % 2 == 1 {
                    acc -= term;
                } else {
                    acc += term;
                }
            }
            // remaining term is i = m: (-1)^(m-1) e_0 s_m = +-s_m
            s[m] = if m % 2 == 1 { acc } else { -acc };
        }
        BigInt::from(self.p).pow(k as u32) + 1 - &s[k]
    }

    /// Functional-equation check (holds by construction; exposed for the
    /// property suite).
    pub fn functional_equation_holds(&self) -> bool {
        let g = self.genus;
        let pb = BigInt::from(self.p);
        (0..=g).all(|i| self.coeffs[2 * g - i] == pb.pow((g - i) as u32) * &self.coeffs[i])
    }
}

/// Count N_1..N_g and assemble the L-polynomial.
pub fn lpoly(curve: &HyperCurve, p: u64) -> Result<LPolynomial, FfError> {
    lpoly_with(curve, p, DEFAULT_COUNT_BUDGET, Parallelism::default())
}

pub fn lpoly_with(
    curve: &HyperCurve,
    p: u64,
    budget: u64,
    mode: Parallelism,
) -> Result<LPolynomial, FfError> {
    let g = curve.genus;
    let mut counts = Vec::with_capacity(g);
    for k in 1..=g {
        counts.push(count_points_with(curve, p, k, budget, mode)?);
    }
    LPolynomial::from_counts(p, g, &counts)
}

/// #J(F_p) = L(1).
pub fn jacobian_order(curve: &HyperCurve, p: u64) -> Result<BigInt, FfError> {
    Ok(lpoly(curve, p)?.order())
}

/// gcd of two Jacobian orders; 1 certifies trivial rational torsion.
pub fn torsion_gcd(curve: &HyperCurve, p: u64, q: u64) -> Result<BigInt, FfError> {
    torsion_gcd_with(curve, p, q, DEFAULT_COUNT_BUDGET, Parallelism::default())
}

pub fn torsion_gcd_with(
    curve: &HyperCurve,
    p: u64,
    q: u64,
    budget: u64,
    mode: Parallelism,
) -> Result<BigInt, FfError> {
    if p == q {
        return Err(FfError::EqualPrimes { p });
    }
    let a = lpoly_with(curve, p, budget, mode)?.order();
    let b = lpoly_with(curve, q, budget, mode)?.order();
    Ok(crate::arith::gcd(&a, &b))
}
