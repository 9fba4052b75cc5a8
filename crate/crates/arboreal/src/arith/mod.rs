//! Exact integer and rational arithmetic: square roots, perfect powers,
//! primality, integer factorization, and dense univariate polynomials.
//!
//! `BigInt` and `Rat` are arbitrary precision; `Rat` is always in lowest
//! terms with a positive denominator and zero is uniquely `0/1` (both
//! invariants are maintained by the backing types).

mod factor_int;
mod factor_poly;
mod poly;

pub use factor_int::{factor_int, factor_int_with_budget, IntFactorization};
pub use factor_poly::{factor_poly, PolyFactorization};
pub use poly::{parse_rat, IntPoly, RatPoly};

pub type BigInt = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("square root of negative integer {0}")]
    NegativeSqrt(BigInt),
    #[error("perfect-power decomposition needs |n| >= 2, got {0}")]
    PerfectPowerRange(BigInt),
    #[error("zero input not allowed")]
    ZeroInput,
    #[error("zero polynomial not allowed")]
    ZeroPolynomial,
    #[error("polynomial degree {0} exceeds supported bound {1}")]
    DegreeTooLarge(usize, usize),
    #[error("factorization incomplete: {0}")]
    Incomplete(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Floor square root together with an exactness flag.
///
/// Returns `(r, exact)` with `r = floor(sqrt(n))` and `exact` iff `r^2 = n`.
pub fn int_sqrt(n: &BigInt) -> Result<(BigInt, bool), ArithError> {
    if n.is_negative() {
        return Err(ArithError::NegativeSqrt(n.clone()));
    }
    let r = n.sqrt();
    let exact = &r * &r == *n;
    Ok((r, exact))
}

/// Quick rejection for perfect-square tests: a square is 0, 1, 4, 9, 16 or
/// 25 mod 32. Always err on the side of "maybe".
pub fn maybe_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    // low 5 bits of the magnitude
    let low = (n & BigInt::from(31u32)).to_u32().unwrap();
    matches!(low, 0 | 1 | 4 | 9 | 16 | 17 | 25)
}

/// Exact perfect-square test with the mod-32 fast rejection in front.
pub fn is_square(n: &BigInt) -> bool {
    if !maybe_square(n) {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Write `n = r^e` with `e` maximal and `r` not itself a perfect power.
///
/// For negative `n` only odd exponents qualify.
pub fn perfect_power(n: &BigInt) -> Result<(BigInt, u32), ArithError> {
    if n.magnitude() <= &num_bigint::BigUint::one() {
        return Err(ArithError::PerfectPowerRange(n.clone()));
    }
    let (r0, e0) = perfect_power_positive(&n.abs());
    if n.is_positive() {
        return Ok((r0, e0));
    }
    // strip the even part of the exponent into the base
    let twos = e0.trailing_zeros();
    let odd = e0 >> twos;
    let base = -r0.pow(1 << twos);
    Ok((base, odd))
}

fn perfect_power_positive(n: &BigInt) -> (BigInt, u32) {
    debug_assert!(n >= &BigInt::from(2));
    let maxe = n.bits() as u32; // e <= log2(n)
    let mut p = 2u32;
    while p <= maxe {
        if small_prime(p) {
            let r = n.nth_root(p);
            if r.pow(p) == *n {
                let (rr, ee) = perfect_power_positive(&r);
                return (rr, ee * p);
            }
        }
        p += 1;
    }
    (n.clone(), 1)
}

fn small_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest input for which the fixed Miller-Rabin witness set is a proof.
/// The first 13 primes are a deterministic witness set below this bound.
pub fn primality_proof_bound() -> BigInt {
    "3317044064679887385961981".parse().unwrap()
}

const MR_WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Deterministic primality test, valid for `n` below
/// [`primality_proof_bound`] (about 3.3e24). Larger inputs are refused
/// rather than answered probabilistically.
pub fn is_prime(n: &BigInt) -> Result<bool, ArithError> {
    if n >= &primality_proof_bound() {
        return Err(ArithError::Incomplete(format!(
            "primality of {n} exceeds the deterministic witness bound"
        )));
    }
    Ok(is_prime_unchecked(n))
}

fn is_prime_unchecked(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for &w in &MR_WITNESSES {
        let wb = BigInt::from(w);
        if *n == wb {
            return true;
        }
        if (n % &wb).is_zero() {
            return false;
        }
    }
    // n - 1 = d * 2^s
    let n1: BigInt = n - 1;
    let s = n1.trailing_zeros().unwrap();
    let d = &n1 >> s;
    'next: for &w in &MR_WITNESSES {
        let mut x = BigInt::from(w).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2), n);
            if x == n1 {
                continue 'next;
            }
        }
        return false;
    }
    true
}

/// gcd of two integers, nonnegative.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Parse a signed decimal integer.
pub fn parse_int(s: &str) -> Result<BigInt, ArithError> {
    s.trim()
        .parse()
        .map_err(|_| ArithError::Parse(format!("bad integer {s:?}")))
}
