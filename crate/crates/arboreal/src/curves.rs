//! Hyperelliptic obstruction curves attached to iterated quadratic maps:
//! one-parameter family products, prime-level models, twist sets from
//! resultant primes, and the shift-then-invert model transformation.
//!
//! The container is `y^2 = f(x)` with integer `f`; a twist by `d` is
//! stored as `y^2 = d*f(x)`, which is the reading every known point list
//! satisfies (e.g. the quartic twist by 2 has the point (-4, 8) with
//! f(-4) = 32 and 2*32 = 64 = 8^2).

use crate::arith::{factor_int, ArithError, BigInt, IntPoly, Rat, RatPoly};
use crate::pointsearch::CurvePoint;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurveError {
    #[error("defining polynomial must be nonzero and squarefree")]
    NotSquarefree,
    #[error("identically zero product")]
    ZeroProduct,
    #[error("{0} is not an odd prime")]
    NotAnOddPrime(u64),
    #[error("polynomials share a factor: zero resultant")]
    ZeroResultant,
    #[error("even degree required, got {0}")]
    OddDegree(usize),
    #[error("level must be at least 2")]
    LevelTooSmall,
    #[error("epsilon length {0} does not match level {1} (want level-1 bits)")]
    EpsilonLength(usize, u32),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Exponent bits for the obstruction product, index 1 leftmost.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentVector {
    pub bits: Vec<bool>,
}

impl ExponentVector {
    pub fn parse(s: &str) -> Result<Self, CurveError> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => {
                    return Err(CurveError::Arith(ArithError::Parse(format!(
                        "epsilon must be a 0/1 string, got {s:?}"
                    ))))
                }
            }
        }
        Ok(ExponentVector { bits })
    }

    pub fn to_bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

/// Construction metadata carried by a curve.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct CurveProvenance {
    pub family: Option<String>,
    pub level: Option<u32>,
    pub epsilon: Option<ExponentVector>,
    pub twist: Option<String>,
    pub shift: Option<String>,
}

/// `y^2 = f(x)` with squarefree integer `f`.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperCurve {
    pub f: IntPoly,
    pub genus: usize,
    pub squarefree: bool,
    pub provenance: Option<CurveProvenance>,
}

impl HyperCurve {
    /// Build a smooth-model container; rejects non-squarefree input.
    pub fn new(f: IntPoly) -> Result<Self, CurveError> {
        if f.is_zero() || !f.is_squarefree() {
            return Err(CurveError::NotSquarefree);
        }
        let deg = f.deg().unwrap();
        let genus = if deg >= 1 { (deg - 1) / 2 } else { 0 };
        Ok(HyperCurve {
            f,
            genus,
            squarefree: true,
            provenance: None,
        })
    }

    pub fn with_provenance(mut self, p: CurveProvenance) -> Self {
        self.provenance = Some(p);
        self
    }

    /// The twist `y^2 = d*f(x)`, `d` squarefree and nonzero.
    pub fn twist(&self, d: &BigInt) -> Result<HyperCurve, CurveError> {
        let mut c = HyperCurve::new(self.f.mul_scalar(d))?;
        let mut prov = self.provenance.clone().unwrap_or_default();
        prov.twist = Some(d.to_string());
        c.provenance = Some(prov);
        Ok(c)
    }

    /// Degree of the defining polynomial.
    pub fn degree(&self) -> usize {
        self.f.deg().unwrap()
    }

    /// Does a given affine point satisfy the equation exactly?
    pub fn contains_affine(&self, x: &Rat, y: &Rat) -> bool {
        self.f.eval_rat(x) == y * y
    }

    /// Points at infinity on the smooth model over Q. Odd degree has one;
    /// even degree has two exactly when lc(f) is a positive perfect
    /// square.
    pub fn infinity_points(&self) -> Vec<CurvePoint> {
        if self.degree() % 2 == 1 {
            vec![CurvePoint::InfinityOdd]
        } else {
            let lc = self.f.lc();
            if lc.is_positive() && crate::arith::is_square(&lc) {
                vec![CurvePoint::InfinityPlus, CurvePoint::InfinityMinus]
            } else {
                vec![]
            }
        }
    }
}

/// The adjusted post-critical values of `phi(x) = (x - gamma(t))^2 + c(t)`
/// as polynomials in `t`: `[-phi(gamma), phi^2(gamma), ..., phi^n(gamma)]`.
pub fn family_iterates(gamma: &IntPoly, c: &IntPoly, n: u32) -> Vec<IntPoly> {
    assert!(n >= 1);
    let mut out = Vec::with_capacity(n as usize);
    out.push(c.neg()); // -phi(gamma) = -c
    let mut orbit = c.clone();
    for _ in 2..=n {
        let d = orbit.sub(gamma);
        orbit = d.mul(&d).add(c);
        out.push(orbit.clone());
    }
    out
}

/// The obstruction curve for exponent vector `eps` at level `n`: the
/// product `prod_{i<n} entry_i^{eps_i} * entry_n` with its square part
/// split off, so `f * cofactor^2` is the product and `f` is squarefree.
pub fn family_curve(
    gamma: &IntPoly,
    c: &IntPoly,
    n: u32,
    eps: &ExponentVector,
) -> Result<(HyperCurve, IntPoly), CurveError> {
    if n < 2 {
        return Err(CurveError::LevelTooSmall);
    }
    if eps.bits.len() != (n - 1) as usize {
        return Err(CurveError::EpsilonLength(eps.bits.len(), n));
    }
    let entries = family_iterates(gamma, c, n);
    let mut prod = entries[(n - 1) as usize].clone();
    for (i, &bit) in eps.bits.iter().enumerate() {
        if bit {
            prod = prod.mul(&entries[i]);
        }
    }
    if prod.is_zero() {
        return Err(CurveError::ZeroProduct);
    }
    let (kernel, cofactor) = prod.squarefree_split()?;
    let curve = HyperCurve::new(kernel)?.with_provenance(CurveProvenance {
        family: Some(family_label(gamma, c)),
        level: Some(n),
        epsilon: Some(eps.clone()),
        twist: None,
        shift: None,
    });
    Ok((curve, cofactor))
}

fn family_label(gamma: &IntPoly, c: &IntPoly) -> String {
    format!("(x - ({}))^2 + ({})", gamma.display("t"), c.display("t"))
}

/// The prime-level curve `y^2 = sign * phi_t^p(0) / t` for odd prime `p`.
pub fn prime_level_curve(p: u64, sign: i8) -> Result<HyperCurve, CurveError> {
    let is_odd_prime =
        p >= 3 && p % 2 == 1 && crate::arith::factor_int(&BigInt::from(p)).map_or(false, |f| {
            f.factors.len() == 1 && f.factors[0].1 == 1
        });
    if !is_odd_prime {
        return Err(CurveError::NotAnOddPrime(p));
    }
    // phi_t^p(0) where phi_t(z) = z^2 + t, as a polynomial in t
    let t = IntPoly::x();
    let mut orbit = t.clone();
    for _ in 1..p {
        orbit = orbit.mul(&orbit).add(&t);
    }
    // the orbit value is always divisible by t
    assert!(orbit.coeff(0).is_zero());
    let shifted = IntPoly::from_coeffs(orbit.coeffs()[1..].to_vec());
    let f = if sign < 0 { shifted.neg() } else { shifted };
    Ok(HyperCurve::new(f)?.with_provenance(CurveProvenance {
        family: Some(format!(
            "y^2 = {}orbit_{p}(t)/t",
            if sign < 0 { "-" } else { "" }
        )),
        level: Some(p as u32),
        epsilon: None,
        twist: None,
        shift: None,
    }))
}

/// The finite set of twists supported on the primes of a resultant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistSet {
    pub primes: Vec<BigInt>,
    pub twists: Vec<BigInt>,
}

impl TwistSet {
    fn from_primes(mut primes: Vec<BigInt>) -> TwistSet {
        primes.sort();
        primes.dedup();
        let mut twists = vec![BigInt::one(), -BigInt::one()];
        for p in &primes {
            let mut next = Vec::with_capacity(twists.len() * 2);
            for t in &twists {
                next.push(t.clone());
                next.push(t * p);
            }
            twists = next;
        }
        twists.sort();
        TwistSet { primes, twists }
    }

    /// Union of resultant prime supports.
    pub fn union(&self, other: &TwistSet) -> TwistSet {
        let mut primes = self.primes.clone();
        primes.extend(other.primes.iter().cloned());
        TwistSet::from_primes(primes)
    }
}

/// Twists to consider when splitting `y^2 = f*g`: squarefree integers
/// supported on the primes dividing `Res(f, g)`.
pub fn twist_set(f: &IntPoly, g: &IntPoly) -> Result<TwistSet, CurveError> {
    let r = f.resultant(g)?;
    if r.is_zero() {
        return Err(CurveError::ZeroResultant);
    }
    let primes = factor_int(&r)?.primes();
    Ok(TwistSet::from_primes(primes))
}

/// The transformed even-degree model `f'(x) = x^(2k) * f(1/x + a)` with
/// its point correspondence `(x, y) -> (1/(x - a), y/(x - a)^k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftInvertModel {
    pub f: RatPoly,
    pub a: Rat,
    pub half_deg: usize,
}

pub fn shift_invert_model(f: &IntPoly, a: &Rat) -> Result<ShiftInvertModel, CurveError> {
    let deg = f.deg().ok_or(CurveError::NotSquarefree)?;
    if deg % 2 != 0 {
        return Err(CurveError::OddDegree(deg));
    }
    let shifted = RatPoly::from(f.clone()).shift(a);
    Ok(ShiftInvertModel {
        f: shifted.reverse(deg),
        a: a.clone(),
        half_deg: deg / 2,
    })
}

impl ShiftInvertModel {
    /// Undo the transformation exactly: recover the original `f` from the
    /// model, using the same shift `a`.
    pub fn invert(&self) -> RatPoly {
        // the inverse substitution is x -> 1/(x-a): reverse, then
        // substitute x - a
        self.f.reverse(2 * self.half_deg).shift(&-self.a.clone())
    }

    /// Integer-coefficient curve when the model clears.
    pub fn to_curve(&self) -> Result<HyperCurve, CurveError> {
        let ip = self.f.to_int_poly().ok_or(CurveError::NotSquarefree)?;
        let mut c = HyperCurve::new(ip)?;
        c.provenance = Some(CurveProvenance {
            family: None,
            level: None,
            epsilon: None,
            twist: None,
            shift: Some(self.a.to_string()),
        });
        Ok(c)
    }

    /// Transport an affine point `(x, y)` with `y^2 = f_orig(x)` onto the
    /// model. `x = a` maps to a point at infinity, with the branch picked
    /// by the sign of `y`.
    pub fn transport(&self, x: &Rat, y: &Rat) -> CurvePoint {
        if x == &self.a {
            return if y.is_negative() {
                CurvePoint::InfinityMinus
            } else {
                CurvePoint::InfinityPlus
            };
        }
        let u = Rat::one() / (x - &self.a);
        let mut scale = Rat::one();
        for _ in 0..self.half_deg {
            scale = scale * &u;
        }
        CurvePoint::Finite { x: u, y: y * scale }
    }

    /// Transport a model point back to the original curve.
    pub fn transport_back(&self, x: &Rat, y: &Rat) -> Option<(Rat, Rat)> {
        if x.is_zero() {
            return None; // corresponds to infinity on the original model
        }
        let xo = Rat::one() / x + &self.a;
        let mut scale = Rat::one();
        for _ in 0..self.half_deg {
            scale = scale * x;
        }
        Some((xo, y / scale))
    }
}
