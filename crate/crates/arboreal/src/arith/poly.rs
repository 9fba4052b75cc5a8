//! Dense univariate polynomials over Z and over Q.
//!
//! Coefficients are stored in ascending degree order with no trailing
//! zeros; the empty vector is the zero polynomial. The text format used
//! across the CLI is the ascending comma list, e.g. `"4,13,13,6,1"` for
//! `t^4 + 6t^3 + 13t^2 + 13t + 4`.

use super::{gcd, ArithError, BigInt, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

/// Parse a rational written as `a` or `a/b`.
pub fn parse_rat(s: &str) -> Result<Rat, ArithError> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = super::parse_int(n)?;
        let den: BigInt = super::parse_int(d)?;
        if den.is_zero() {
            return Err(ArithError::Parse("zero denominator".into()));
        }
        Ok(Rat::new(num, den))
    } else {
        Ok(Rat::from_integer(super::parse_int(s)?))
    }
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn x() -> Self {
        IntPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = IntPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn monomial(c: BigInt, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Parse the ascending comma list format.
    pub fn parse(s: &str) -> Result<Self, ArithError> {
        let coeffs = s
            .split(',')
            .map(super::parse_int)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::from_coeffs(coeffs))
    }

    /// Ascending comma list.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial yields `None`.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> Self {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Divide every coefficient by `s`, which must divide exactly.
    pub fn div_scalar_exact(&self, s: &BigInt) -> Self {
        assert!(!s.is_zero());
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| {
                    debug_assert!((c % s).is_zero());
                    c / s
                })
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    /// Homogeneous evaluation `b^max(deg, e) * f(a/b)` is not what we want;
    /// this returns `b^e * f(a/b)` for `e >= deg f`, exactly.
    pub fn eval_homogeneous(&self, a: &BigInt, b: &BigInt, e: usize) -> BigInt {
        let d = match self.deg() {
            None => return BigInt::zero(),
            Some(d) => d,
        };
        assert!(e >= d);
        let mut acc = self.coeffs[d].clone();
        let mut bp = BigInt::one();
        for i in (0..d).rev() {
            bp *= b;
            acc = acc * a + &self.coeffs[i] * &bp;
        }
        // multiply by b^(e-d)
        for _ in d..e {
            acc *= b;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Substitute another polynomial: `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&IntPoly::constant(c.clone()));
        }
        acc
    }

    /// Content: gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient, together with the
    /// signed content: `f = content * primitive`.
    pub fn primitive(&self) -> (BigInt, IntPoly) {
        if self.is_zero() {
            return (BigInt::zero(), IntPoly::zero());
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        (c.clone(), self.div_scalar_exact(&c))
    }

    /// Pseudo-remainder: `lc(g)^(deg f - deg g + 1) * f mod g`.
    pub fn pseudo_rem(&self, g: &Self) -> Self {
        let dg = g.deg().expect("division by zero polynomial");
        let df = match self.deg() {
            None => return IntPoly::zero(),
            Some(d) => d,
        };
        if df < dg {
            return self.clone();
        }
        let lg = g.lc();
        let mut r = self.clone();
        let mut remaining = df - dg + 1;
        while let Some(dr) = r.deg() {
            if dr < dg {
                break;
            }
            let shift = dr - dg;
            let top = r.lc();
            // r = lg*r - top * x^shift * g; the leading term cancels
            let mut coeffs = vec![BigInt::zero(); dr + 1];
            for (i, c) in r.coeffs.iter().enumerate() {
                coeffs[i] = c * &lg;
            }
            for (i, c) in g.coeffs.iter().enumerate() {
                coeffs[i + shift] -= c * &top;
            }
            r = IntPoly::from_coeffs(coeffs);
            remaining -= 1;
        }
        // degree can drop by more than one per step; keep the invariant
        // multiplier at exactly lg^(df-dg+1)
        for _ in 0..remaining {
            r = r.mul_scalar(&lg);
        }
        r
    }

    /// Exact division; panics if `g` does not divide `self` over Q or the
    /// quotient is not integral. Use only where divisibility is guaranteed.
    pub fn div_exact(&self, g: &Self) -> Self {
        let (q, r) = RatPoly::from(self.clone()).divrem(&RatPoly::from(g.clone()));
        assert!(r.is_zero(), "div_exact: non-divisible");
        q.to_int_poly().expect("div_exact: non-integral quotient")
    }

    /// Test divisibility over Q with integral quotient.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        let (q, r) = RatPoly::from(other.clone()).divrem(&RatPoly::from(self.clone()));
        r.is_zero() && q.is_integral()
    }

    /// Primitive gcd via the subresultant PRS, positive leading coefficient.
    pub fn gcd_poly(&self, other: &Self) -> Self {
        if self.is_zero() {
            let (_, p) = other.primitive();
            return p;
        }
        if other.is_zero() {
            let (_, p) = self.primitive();
            return p;
        }
        let (_, mut a) = self.primitive();
        let (_, mut b) = other.primitive();
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() && b.deg().unwrap_or(0) > 0 {
            let r = a.pseudo_rem(&b);
            a = b;
            b = match r.primitive() {
                (_, p) => p,
            };
            if a.deg() < b.deg() {
                std::mem::swap(&mut a, &mut b);
            }
        }
        if b.is_zero() {
            let (_, p) = a.primitive();
            p
        } else {
            IntPoly::one()
        }
    }

    /// Resultant via the subresultant polynomial remainder sequence.
    pub fn resultant(&self, other: &Self) -> Result<BigInt, ArithError> {
        if self.is_zero() || other.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        Ok(subresultant_resultant(self, other))
    }

    /// Squarefree decomposition by Yun's algorithm on the primitive part.
    /// Returns `(signed content, parts)` with `parts[i] = (g, m)` squarefree
    /// and pairwise coprime, such that
    /// `f = content * prod g^m`.
    pub fn squarefree_decomposition(&self) -> (BigInt, Vec<(IntPoly, u32)>) {
        if self.is_zero() {
            return (BigInt::zero(), vec![]);
        }
        let (content, f) = self.primitive();
        if f.deg() == Some(0) {
            return (content, vec![]);
        }
        let fp = f.derivative();
        let a0 = f.gcd_poly(&fp);
        if a0.deg() == Some(0) {
            return (content, vec![(f, 1)]);
        }
        let mut parts = Vec::new();
        let mut b = f.div_exact(&a0);
        let mut c = fp.div_exact(&a0);
        let mut d = c.sub(&b.derivative());
        let mut i = 1u32;
        loop {
            let a = b.gcd_poly(&d);
            if a.deg().unwrap_or(0) > 0 {
                parts.push((a.clone(), i));
            }
            b = b.div_exact(&a);
            if b.deg() == Some(0) {
                break;
            }
            c = d.div_exact(&a);
            d = c.sub(&b.derivative());
            i += 1;
        }
        // normalize: b ends as a constant +-1; fold its sign into content
        let mut content = content;
        if b.lc().is_negative() {
            content = -content;
        }
        (content, parts)
    }

    /// Split `f = kernel * cofactor^2` with `kernel` squarefree. The sign
    /// and the squarefree part of the content stay on the kernel.
    pub fn squarefree_split(&self) -> Result<(IntPoly, IntPoly), ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        let (content, parts) = self.squarefree_decomposition();
        let cf = super::factor_int(&content).expect("nonzero content");
        let ck = cf.squarefree_kernel();
        let cs = cf.square_part();
        let mut kernel = IntPoly::constant(ck);
        let mut cof = IntPoly::constant(cs);
        for (g, m) in &parts {
            if m % 2 == 1 {
                kernel = kernel.mul(g);
            }
            for _ in 0..(m / 2) {
                cof = cof.mul(g);
            }
        }
        debug_assert_eq!(kernel.mul(&cof).mul(&cof), *self);
        Ok((kernel, cof))
    }

    /// Whether gcd(f, f') is constant.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.deg() == Some(0) {
            return true;
        }
        self.gcd_poly(&self.derivative()).deg() == Some(0)
    }

    /// Taylor shift: `f(x + a)`.
    pub fn shift(&self, a: &BigInt) -> Self {
        let lin = IntPoly::from_coeffs(vec![a.clone(), BigInt::one()]);
        self.compose(&lin)
    }

    /// Reversal against degree `n >= deg f`: `x^n * f(1/x)`.
    pub fn reverse(&self, n: usize) -> Self {
        let d = self.deg().unwrap_or(0);
        assert!(n >= d);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[n - i] = c.clone();
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Pretty form with the given variable name.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let body = match i {
                0 => abs.to_string(),
                _ => {
                    let xp = if i == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{i}")
                    };
                    if abs.is_one() {
                        xp
                    } else {
                        format!("{abs}{xp}")
                    }
                }
            };
            if terms.is_empty() {
                terms.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                terms.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        terms.join(" ")
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.display("x"))
    }
}

/// Resultant of two nonzero integer polynomials by the subresultant PRS
/// (Collins / Brown-Traub; cf. Cohen, Algorithm 3.3.7).
fn subresultant_resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let df = f.deg().unwrap();
    let dg = g.deg().unwrap();
    if df == 0 && dg == 0 {
        return BigInt::one();
    }
    if df == 0 {
        return f.lc().pow(dg as u32);
    }
    if dg == 0 {
        return g.lc().pow(df as u32);
    }
    let mut s = 1i8;
    let (mut a, mut b) = (f.clone(), g.clone());
    if df < dg {
        if df % 2 == 1 && dg % 2 == 1 {
            s = -s;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let (ca, pa) = a.primitive();
    let (cb, pb) = b.primitive();
    // primitive() folds the sign into the content
    let t = ca.pow(pb.deg().unwrap() as u32) * cb.pow(pa.deg().unwrap() as u32);
    a = pa;
    b = pb;
    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.deg().unwrap();
        let db = b.deg().unwrap();
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let delta = (da - db) as u32;
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return BigInt::zero();
        }
        a = b;
        let denom = &gg * h.pow(delta);
        b = r.div_scalar_exact(&denom);
        gg = a.lc();
        // h = g^delta * h^(1-delta), exact division when delta > 1
        h = if delta == 0 {
            h
        } else {
            let num = gg.pow(delta);
            if delta == 1 {
                num
            } else {
                let den = h.pow(delta - 1);
                debug_assert!((&num % &den).is_zero());
                num / den
            }
        };
        if b.deg() == Some(0) {
            break;
        }
    }
    let da = a.deg().unwrap() as u32;
    let c = b.lc();
    // res(a, c) = c^da / h^(da - 1)
    let num = c.pow(da);
    let den = if da == 0 { BigInt::one() } else { h.pow(da - 1) };
    let res = num / den;
    let signed = if s < 0 { -res } else { res };
    signed * t
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rat::one())
    }

    pub fn x() -> Self {
        RatPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = RatPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = RatPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn neg(&self) -> Self {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, s: &Rat) -> Self {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&RatPoly::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i + 1)))
                .collect(),
        )
    }

    /// Euclidean division: `self = q*g + r` with `deg r < deg g`.
    pub fn divrem(&self, g: &Self) -> (RatPoly, RatPoly) {
        let dg = g.deg().expect("division by zero polynomial");
        let inv_lg = Rat::one() / g.lc();
        let mut r = self.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dg)];
        while let Some(dr) = r.deg() {
            if dr < dg {
                break;
            }
            let c = r.lc() * &inv_lg;
            let shift = dr - dg;
            q[shift] = c.clone();
            let mut coeffs = r.coeffs.clone();
            for (i, gc) in g.coeffs.iter().enumerate() {
                coeffs[i + shift] -= &c * gc;
            }
            r = RatPoly::from_coeffs(coeffs);
        }
        (RatPoly::from_coeffs(q), r)
    }

    pub fn shift(&self, a: &Rat) -> Self {
        let lin = RatPoly::from_coeffs(vec![a.clone(), Rat::one()]);
        self.compose(&lin)
    }

    pub fn reverse(&self, n: usize) -> Self {
        let d = self.deg().unwrap_or(0);
        assert!(n >= d);
        let mut coeffs = vec![Rat::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[n - i] = c.clone();
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_int_poly(&self) -> Option<IntPoly> {
        if !self.is_integral() {
            return None;
        }
        Some(IntPoly::from_coeffs(
            self.coeffs.iter().map(|c| c.to_integer()).collect(),
        ))
    }

    /// Clear denominators: returns `(g, d)` with `g` integral primitive-ish
    /// (just cleared, not content-stripped) and `d > 0` minimal such that
    /// `d * self = g`.
    pub fn clear_denominators(&self) -> (IntPoly, BigInt) {
        let mut d = BigInt::one();
        for c in &self.coeffs {
            d = &d / gcd(&d, c.denom()) * c.denom();
        }
        let g = IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| (c * Rat::from_integer(d.clone())).to_integer())
                .collect(),
        );
        (g, d)
    }

    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let body = match i {
                0 => abs.to_string(),
                _ => {
                    let xp = if i == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{i}")
                    };
                    if abs.is_one() {
                        xp
                    } else {
                        format!("{abs}*{xp}")
                    }
                }
            };
            if terms.is_empty() {
                terms.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                terms.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        terms.join(" ")
    }
}

impl From<IntPoly> for RatPoly {
    fn from(p: IntPoly) -> Self {
        RatPoly::from_coeffs(p.coeffs.into_iter().map(Rat::from_integer).collect())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({})", self.display("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn parse_and_print() {
        let f = IntPoly::parse("4,13,13,6,1").unwrap();
        assert_eq!(f.deg(), Some(4));
        assert_eq!(f.to_coeff_string(), "4,13,13,6,1");
        assert_eq!(f.display("t"), "t^4 + 6t^3 + 13t^2 + 13t + 4");
    }

    #[test]
    fn eval_and_compose() {
        let f = ip(&[4, 13, 13, 6, 1]);
        assert_eq!(f.eval(&BigInt::from(-3)), BigInt::from(1));
        assert_eq!(f.eval(&BigInt::from(0)), BigInt::from(4));
        let g = ip(&[1, 1]); // x + 1
        let fg = f.compose(&g);
        assert_eq!(fg.eval(&BigInt::from(-4)), BigInt::from(1));
    }

    #[test]
    fn homogeneous_eval() {
        let f = ip(&[25, 131, 299, 398, 335, 182, 62, 12, 1]);
        // 3^8 * f(-7/3) = 185^2 / 5 times -5 ... check against direct rational evaluation
        let a = BigInt::from(-7);
        let b = BigInt::from(3);
        let n = f.eval_homogeneous(&a, &b, 8);
        let direct = f.eval_rat(&Rat::new(a.clone(), b.clone())) * Rat::from_integer(b.pow(8));
        assert_eq!(Rat::from_integer(n), direct);
    }

    #[test]
    fn resultant_known_values() {
        // iterates of the shifted family, frozen independently
        let r2 = ip(&[1, 3, 1]);
        let r3 = ip(&[4, 13, 13, 6, 1]);
        let r4 = ip(&[25, 131, 299, 398, 335, 182, 62, 12, 1]);
        let mt = ip(&[0, -1]); // -t
        assert_eq!(mt.resultant(&r3).unwrap(), BigInt::from(4));
        assert_eq!(r2.resultant(&r3).unwrap(), BigInt::from(-1));
        assert_eq!(mt.resultant(&r4).unwrap(), BigInt::from(25));
        assert_eq!(r2.resultant(&r4).unwrap(), BigInt::from(-5));
        assert_eq!(r3.resultant(&r4).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn resultant_common_root_is_zero() {
        let f = ip(&[4, 13, 13, 6, 1]);
        assert_eq!(f.resultant(&f).unwrap(), BigInt::from(0));
        let g = f.mul(&ip(&[1, 1]));
        assert_eq!(f.resultant(&g).unwrap(), BigInt::from(0));
    }

    #[test]
    fn resultant_zero_rejected() {
        assert!(ip(&[1]).resultant(&IntPoly::zero()).is_err());
    }

    #[test]
    fn resultant_antisymmetry_and_multiplicativity() {
        let mut state = 7u64;
        let mut rnd = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(11);
            ((state >> 33) as i64 % 7) - 3
        };
        for _ in 0..60 {
            let f = IntPoly::from_i64s(&[rnd(), rnd(), rnd(), 1 + rnd().abs()]);
            let g = IntPoly::from_i64s(&[rnd(), rnd(), 1 + rnd().abs()]);
            let h = IntPoly::from_i64s(&[rnd(), 1 + rnd().abs()]);
            let df = f.deg().unwrap() as u32;
            let dg = g.deg().unwrap() as u32;
            let rfg = f.resultant(&g).unwrap();
            let rgf = g.resultant(&f).unwrap();
            let sign = if (df * dg) % 2 == 1 { -1 } else { 1 };
            assert_eq!(rfg, BigInt::from(sign) * rgf);
            let rgh = f.resultant(&h).unwrap();
            let rprod = f.resultant(&g.mul(&h)).unwrap();
            assert_eq!(rprod, &rfg * &rgh);
        }
    }

    #[test]
    fn resultant_vs_root_product() {
        // f = (x-1)(x-2) = x^2-3x+2, g = x^2+1:
        // Res(f,g) = g(1)*g(2) = 2*5 = 10
        let f = ip(&[2, -3, 1]);
        let g = ip(&[1, 0, 1]);
        assert_eq!(f.resultant(&g).unwrap(), BigInt::from(10));
        // non-monic f = 2x - 4: Res(f, g) = lc(f)^deg(g) * g(2) = 4*5 = 20
        let f = ip(&[-4, 2]);
        assert_eq!(f.resultant(&g).unwrap(), BigInt::from(20));
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = ip(&[1, 1]).pow(2).mul(&ip(&[2, 0, 1]));
        let (content, parts) = f.squarefree_decomposition().clone();
        assert_eq!(content, BigInt::from(1));
        assert_eq!(parts.len(), 2);
        let rebuilt = parts
            .iter()
            .fold(IntPoly::one(), |acc, (g, m)| acc.mul(&g.pow(*m)));
        assert_eq!(rebuilt, f);
        assert!(!f.is_squarefree());
        assert!(ip(&[2, 0, 1]).is_squarefree());
    }

    #[test]
    fn squarefree_split_with_sign_and_content() {
        // -t^2 (t+1): kernel -(t+1), cofactor t
        let f = ip(&[0, 0, -1, -1]);
        let (kernel, cof) = f.squarefree_split().unwrap();
        assert_eq!(kernel, ip(&[-1, -1]));
        assert_eq!(cof, ip(&[0, 1]));
        // content with square: 12*(x+1)^2 = 3*(2(x+1))^2
        let f = ip(&[1, 1]).pow(2).mul_scalar(&BigInt::from(12));
        let (kernel, cof) = f.squarefree_split().unwrap();
        assert_eq!(kernel.mul(&cof).mul(&cof), f);
        assert!(kernel.is_squarefree());
    }

    #[test]
    fn shift_and_reverse() {
        let f = ip(&[1, 0, 1]); // x^2+1
        let s = f.shift(&BigInt::from(1));
        assert_eq!(s, ip(&[2, 2, 1]));
        assert_eq!(f.reverse(2), ip(&[1, 0, 1]));
        assert_eq!(ip(&[1, 2]).reverse(3), ip(&[0, 0, 2, 1]));
    }

    #[test]
    fn ratpoly_divrem() {
        let f = RatPoly::from(ip(&[2, -3, 1]));
        let g = RatPoly::from(ip(&[-1, 1]));
        let (q, r) = f.divrem(&g);
        assert!(r.is_zero());
        assert_eq!(q.to_int_poly().unwrap(), ip(&[-2, 1]));
    }

    #[test]
    fn clear_denominators() {
        let f = RatPoly::from_coeffs(vec![Rat::new(1.into(), 2.into()), Rat::new(1.into(), 3.into())]);
        let (g, d) = f.clear_denominators();
        assert_eq!(d, BigInt::from(6));
        assert_eq!(g, ip(&[3, 2]));
    }
}
