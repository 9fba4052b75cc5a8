//! Quadratic-map iteration and the Galois maximality decision.
//!
//! A quadratic polynomial over Q is kept in completed-square form
//! `phi(x) = (x - gamma)^2 + c`. The Galois group of the n-th iterate is
//! the full automorphism group of the binary preimage tree exactly when
//! the adjusted post-critical values `c_1 = -phi(gamma)`,
//! `c_k = phi^k(gamma)` are 2-independent, so the maximality decision
//! reduces to square-class linear algebra level by level.

use crate::arith::{ArithError, Rat, RatPoly};
use crate::squareclass::{two_independent, Verdict, Witness};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynamicsError {
    #[error("iterate degree 2^{0} exceeds the factorization range (n <= {1})")]
    IterateTooDeep(u32, u32),
    #[error("post-critical entry at level {level} exceeds {max_digits} digits")]
    EntryTooLarge { level: usize, max_digits: u64 },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Guard on the decimal size of post-critical entries; they double in
/// digit count per level, so runaway levels are refused up front.
pub const MAX_ENTRY_DIGITS: u64 = 100_000;

/// Iterates are factored exactly only up to degree 2^4 = 16.
pub const MAX_IRREDUCIBILITY_LEVEL: u32 = 4;

/// `phi(x) = (x - gamma)^2 + c`, optionally remembering the standard-form
/// origin `x^2 + c0` at basepoint `b` it was conjugated from.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadMap {
    pub gamma: Rat,
    pub c: Rat,
    pub provenance: Option<Basepoint>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Basepoint {
    pub c0: Rat,
    pub b: Rat,
}

impl QuadMap {
    pub fn new(gamma: Rat, c: Rat) -> Self {
        QuadMap { gamma, c, provenance: None }
    }

    /// The map `x^2 + c` (gamma = 0).
    pub fn standard(c: Rat) -> Self {
        QuadMap::new(Rat::zero(), c)
    }

    /// Conjugate `x^2 + c0` at basepoint `b` to completed-square form:
    /// gamma = -b, c = c0 - b. The returned map `rho` satisfies
    /// `rho^n(x - b) = phi_{c0}^n(x) - b` for all n.
    pub fn from_basepoint(c0: Rat, b: Rat) -> Self {
        QuadMap {
            gamma: -b.clone(),
            c: &c0 - &b,
            provenance: Some(Basepoint { c0, b }),
        }
    }

    pub fn apply(&self, v: &Rat) -> Rat {
        let d = v - &self.gamma;
        &d * &d + &self.c
    }

    /// `phi^n(v)` by n-fold evaluation.
    pub fn iterate_value(&self, v: &Rat, n: u32) -> Rat {
        let mut acc = v.clone();
        for _ in 0..n {
            acc = self.apply(&acc);
        }
        acc
    }

    /// The degree-2^n polynomial `phi^n(x)`, exact. `1 <= n <= 4`.
    pub fn iterate_poly(&self, n: u32) -> Result<RatPoly, DynamicsError> {
        if n < 1 || n > MAX_IRREDUCIBILITY_LEVEL {
            return Err(DynamicsError::IterateTooDeep(n, MAX_IRREDUCIBILITY_LEVEL));
        }
        let mut acc = RatPoly::x();
        for _ in 0..n {
            let shifted = acc.sub(&RatPoly::constant(self.gamma.clone()));
            acc = shifted.mul(&shifted).add(&RatPoly::constant(self.c.clone()));
        }
        Ok(acc)
    }
}

/// Adjusted post-critical sequence `c_1 = -phi(gamma)`, `c_n = phi^n(gamma)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PostCriticalSequence {
    pub entries: Vec<Rat>,
}

pub fn post_critical(map: &QuadMap, n: u32) -> Result<PostCriticalSequence, DynamicsError> {
    assert!(n >= 1);
    let digit_cap = |v: &Rat, level: usize| -> Result<(), DynamicsError> {
        let bits = v.numer().bits().max(v.denom().bits());
        let digits = bits * 30103 / 100000; // bits * log10(2)
        if digits > MAX_ENTRY_DIGITS {
            return Err(DynamicsError::EntryTooLarge {
                level,
                max_digits: MAX_ENTRY_DIGITS,
            });
        }
        Ok(())
    };
    let mut entries = Vec::with_capacity(n as usize);
    let first = map.apply(&map.gamma); // phi(gamma) = c
    entries.push(-first.clone());
    digit_cap(&entries[0], 1)?;
    let mut orbit = first;
    for level in 2..=n as usize {
        orbit = map.apply(&orbit);
        digit_cap(&orbit, level)?;
        entries.push(orbit.clone());
    }
    Ok(PostCriticalSequence { entries })
}

/// Per-level maximality verdicts for the Galois groups of iterates.
#[derive(Debug, Clone, PartialEq)]
pub struct GaloisReport {
    /// `levels[k]` is the verdict for level k+1: true = the group is the
    /// full tree automorphism group at that level.
    pub levels: Vec<bool>,
    /// Least non-maximal level (1-based), if any.
    pub first_failure: Option<usize>,
    /// Dependency at the failing level. For a square-product witness the
    /// subset holds 1-based levels and always contains the failing level
    /// with exponent 1.
    pub witness: Option<Witness>,
    /// log2 of the full group order per level: 2^n - 1 at level n.
    pub group_order_log2: Vec<u64>,
}

impl GaloisReport {
    pub fn maximal_through(&self, n: usize) -> bool {
        n <= self.levels.len() && self.levels[..n].iter().all(|&b| b)
    }
}

/// Decide maximality level by level up to `n`.
pub fn galois_report(map: &QuadMap, n: u32) -> Result<GaloisReport, DynamicsError> {
    assert!(n >= 1);
    let seq = post_critical(map, n)?;
    let mut levels = Vec::with_capacity(n as usize);
    let mut first_failure = None;
    let mut witness = None;
    for level in 1..=n as usize {
        if first_failure.is_some() {
            levels.push(false);
            continue;
        }
        match two_independent(&seq.entries[..level]) {
            Verdict::Independent => levels.push(true),
            Verdict::Dependent(w) => {
                levels.push(false);
                first_failure = Some(level);
                witness = Some(match w {
                    Witness::ZeroElement { index } => Witness::ZeroElement { index: index + 1 },
                    Witness::SquareProduct { subset, y } => Witness::SquareProduct {
                        subset: subset.into_iter().map(|i| i + 1).collect(),
                        y,
                    },
                });
            }
        }
    }
    let group_order_log2 = (1..=n as u64).map(|k| (1u64 << k) - 1).collect();
    Ok(GaloisReport {
        levels,
        first_failure,
        witness,
        group_order_log2,
    })
}

/// Is `phi^n` irreducible over Q? 2-independence of the post-critical
/// prefix certifies irreducibility outright; otherwise the iterate is
/// factored exactly.
pub fn iterate_irreducible(map: &QuadMap, n: u32) -> Result<bool, DynamicsError> {
    if n < 1 || n > MAX_IRREDUCIBILITY_LEVEL {
        return Err(DynamicsError::IterateTooDeep(n, MAX_IRREDUCIBILITY_LEVEL));
    }
    let seq = post_critical(map, n)?;
    if two_independent(&seq.entries).is_independent() {
        return Ok(true);
    }
    let poly = map.iterate_poly(n)?;
    let (cleared, _) = poly.clear_denominators();
    let fac = crate::arith::factor_poly(&cleared)?;
    Ok(fac.is_irreducible())
}
