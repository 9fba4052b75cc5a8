//! Prime-field scalar arithmetic and dense univariate polynomials over F_p
//! for odd primes p < 2^61, including distinct-degree and equal-degree
//! factorization. Shared by the integer polynomial factorizer and the
//! finite-field curve machinery.

use crate::arith::{BigInt, IntPoly};
use num_integer::Integer;
use num_traits::ToPrimitive;

/// The prime field F_p. Elements are canonical `u64` residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p >= 2 && p < (1 << 61));
        Fp { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    /// Quadratic character: 0 for zero, 1 for squares, p-1 for non-squares.
    pub fn chi(&self, a: u64) -> u64 {
        self.pow(a, (self.p - 1) / 2)
    }

    /// Reduce a signed big integer.
    pub fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = n.mod_floor(&p);
        r.to_u64().unwrap()
    }

    /// Canonical representative of `a` in `(-p/2, p/2]`.
    pub fn symmetric(&self, a: u64) -> i64 {
        if a * 2 > self.p {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

/// Dense polynomial over F_p, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpPoly {
    pub coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn zero() -> Self {
        FpPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        FpPoly { coeffs: vec![1] }
    }

    pub fn x() -> Self {
        FpPoly { coeffs: vec![0, 1] }
    }

    pub fn constant(c: u64, fp: Fp) -> Self {
        FpPoly::from_coeffs(vec![c % fp.p])
    }

    pub fn from_coeffs(coeffs: Vec<u64>) -> Self {
        let mut p = FpPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_int_poly(f: &IntPoly, fp: Fp) -> Self {
        FpPoly::from_coeffs(f.coeffs().iter().map(|c| fp.reduce_bigint(c)).collect())
    }

    /// Lift with symmetric (centered) representatives.
    pub fn to_int_poly_symmetric(&self, fp: Fp) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|&c| BigInt::from(fp.symmetric(c)))
                .collect(),
        )
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64, fp: Fp) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = fp.add(fp.mul(acc, x), c);
        }
        acc
    }

    pub fn add(&self, other: &Self, fp: Fp) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(fp.add(self.coeff(i), other.coeff(i)));
        }
        FpPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self, fp: Fp) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(fp.sub(self.coeff(i), other.coeff(i)));
        }
        FpPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self, fp: Fp) -> Self {
        FpPoly::from_coeffs(self.coeffs.iter().map(|&c| fp.neg(c)).collect())
    }

    pub fn mul(&self, other: &Self, fp: Fp) -> Self {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero();
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = fp.add(coeffs[i + j], fp.mul(a, b));
            }
        }
        FpPoly::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, s: u64, fp: Fp) -> Self {
        FpPoly::from_coeffs(self.coeffs.iter().map(|&c| fp.mul(c, s)).collect())
    }

    pub fn make_monic(&self, fp: Fp) -> Self {
        if self.is_zero() {
            return FpPoly::zero();
        }
        self.mul_scalar(fp.inv(self.lc()), fp)
    }

    /// Euclidean division; divisor need not be monic.
    pub fn divrem(&self, g: &Self, fp: Fp) -> (FpPoly, FpPoly) {
        let dg = g.deg().expect("division by zero polynomial");
        let ilg = fp.inv(g.lc());
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; self.coeffs.len().saturating_sub(dg)];
        let mut dr = self.coeffs.len();
        while dr > dg {
            let top = r[dr - 1];
            if top != 0 {
                let c = fp.mul(top, ilg);
                let shift = dr - 1 - dg;
                q[shift] = c;
                for (i, &gc) in g.coeffs.iter().enumerate() {
                    r[i + shift] = fp.sub(r[i + shift], fp.mul(c, gc));
                }
            }
            dr -= 1;
        }
        (FpPoly::from_coeffs(q), FpPoly::from_coeffs(r))
    }

    pub fn rem(&self, g: &Self, fp: Fp) -> FpPoly {
        self.divrem(g, fp).1
    }

    pub fn gcd(&self, other: &Self, fp: Fp) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, fp);
            a = b;
            b = r;
        }
        a.make_monic(fp)
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, g monic.
    pub fn xgcd(&self, other: &Self, fp: Fp) -> (FpPoly, FpPoly, FpPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = FpPoly::one();
        let mut s1 = FpPoly::zero();
        let mut t0 = FpPoly::zero();
        let mut t1 = FpPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1, fp);
            let s = s0.sub(&q.mul(&s1, fp), fp);
            let t = t0.sub(&q.mul(&t1, fp), fp);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (FpPoly::zero(), FpPoly::zero(), FpPoly::zero());
        }
        let ilc = fp.inv(r0.lc());
        (
            r0.mul_scalar(ilc, fp),
            s0.mul_scalar(ilc, fp),
            t0.mul_scalar(ilc, fp),
        )
    }

    pub fn derivative(&self, fp: Fp) -> FpPoly {
        if self.coeffs.len() <= 1 {
            return FpPoly::zero();
        }
        FpPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| fp.mul(c, (i as u64 + 1) % fp.p))
                .collect(),
        )
    }

    /// `base^e mod self` by square-and-multiply; `self` must be nonconstant.
    pub fn pow_mod(&self, base: &FpPoly, e: &BigInt, fp: Fp) -> FpPoly {
        debug_assert!(self.deg().unwrap_or(0) >= 1);
        let mut acc = FpPoly::one();
        let mut b = base.rem(self, fp);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&b, fp).rem(self, fp);
            }
            if i + 1 < bits {
                b = b.mul(&b, fp).rem(self, fp);
            }
        }
        acc
    }

    pub fn is_squarefree(&self, fp: Fp) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.deg() == Some(0) {
            return true;
        }
        let d = self.derivative(fp);
        if d.is_zero() {
            return false;
        }
        self.gcd(&d, fp).deg() == Some(0)
    }
}

/// Distinct-degree decomposition of a monic squarefree polynomial:
/// returns pairs `(product of irreducible factors of degree d, d)`.
pub fn distinct_degree(f: &FpPoly, fp: Fp) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    let mut fstar = f.make_monic(fp);
    let mut h = FpPoly::x();
    let mut d = 0usize;
    while fstar.deg().unwrap_or(0) >= 1 {
        d += 1;
        if 2 * d > fstar.deg().unwrap() {
            out.push((fstar.clone(), fstar.deg().unwrap()));
            break;
        }
        h = fstar.pow_mod(&h, &BigInt::from(fp.p), fp);
        let diff = h.sub(&FpPoly::x(), fp);
        let g = fstar.gcd(&diff, fp);
        if g.deg().unwrap_or(0) >= 1 {
            out.push((g.clone(), d));
            fstar = fstar.divrem(&g, fp).0;
            h = h.rem(&fstar, fp);
        }
    }
    out
}

/// Multiset of irreducible factor degrees of a monic squarefree polynomial.
pub fn factor_degrees(f: &FpPoly, fp: Fp) -> Vec<usize> {
    let mut degs = Vec::new();
    for (g, d) in distinct_degree(f, fp) {
        let count = g.deg().unwrap() / d;
        for _ in 0..count {
            degs.push(d);
        }
    }
    degs.sort_unstable();
    degs
}

/// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree
/// product of degree-d irreducibles. Deterministically seeded.
fn equal_degree(f: &FpPoly, d: usize, fp: Fp, seed: &mut u64) -> Vec<FpPoly> {
    let n = f.deg().unwrap();
    if n == d {
        return vec![f.make_monic(fp)];
    }
    // (p^d - 1)/2
    let e = (BigInt::from(fp.p).pow(d as u32) - 1) / 2;
    loop {
        // deterministic xorshift random polynomial of degree < n
        let mut coeffs = Vec::with_capacity(n);
        for _ in 0..n {
            *seed ^= *seed << 13;
            *seed ^= *seed >> 7;
            *seed ^= *seed << 17;
            coeffs.push(*seed % fp.p);
        }
        let r = FpPoly::from_coeffs(coeffs);
        if r.deg().unwrap_or(0) < 1 {
            continue;
        }
        let g = f.gcd(&r, fp);
        let split = if g.deg().unwrap_or(0) >= 1 {
            g
        } else {
            let h = f.pow_mod(&r, &e, fp);
            let h1 = h.sub(&FpPoly::one(), fp);
            f.gcd(&h1, fp)
        };
        let ds = split.deg().unwrap_or(0);
        if ds >= 1 && ds < n {
            let rest = f.divrem(&split, fp).0;
            let mut out = equal_degree(&split, d, fp, seed);
            out.extend(equal_degree(&rest, d, fp, seed));
            return out;
        }
    }
}

/// Complete factorization of a nonzero polynomial over F_p into monic
/// irreducibles with multiplicity, plus the leading unit.
pub fn factor_fp(f: &FpPoly, fp: Fp) -> (u64, Vec<(FpPoly, u32)>) {
    assert!(!f.is_zero());
    let unit = f.lc();
    let mut work = f.make_monic(fp);
    let mut out: Vec<(FpPoly, u32)> = Vec::new();
    let push = |g: FpPoly, m: u32, out: &mut Vec<(FpPoly, u32)>| {
        if let Some(e) = out.iter_mut().find(|(h, _)| *h == g) {
            e.1 += m;
        } else {
            out.push((g, m));
        }
    };
    let mut seed = 0x5eed_1234_abcd_7777u64 ^ fp.p;
    let mut mult = 1u32;
    while work.deg().unwrap_or(0) >= 1 {
        let d = work.derivative(fp);
        if d.is_zero() {
            // work = v(x^p); over F_p this is v(x)^p
            let mut coeffs = Vec::new();
            let step = fp.p as usize;
            let mut i = 0;
            while i < work.coeffs.len() {
                coeffs.push(work.coeffs[i]);
                i += step;
            }
            work = FpPoly::from_coeffs(coeffs);
            mult *= fp.p as u32;
            continue;
        }
        let g = work.gcd(&d, fp);
        let sqf = work.divrem(&g, fp).0; // squarefree part
        for (prod, dd) in distinct_degree(&sqf, fp) {
            for irr in equal_degree(&prod, dd, fp, &mut seed) {
                // multiplicity of irr in work
                let mut m = 0u32;
                while work.rem(&irr, fp).is_zero() {
                    work = work.divrem(&irr, fp).0;
                    m += 1;
                }
                push(irr, m * mult, &mut out);
            }
        }
    }
    out.sort_by(|a, b| {
        a.0.deg()
            .cmp(&b.0.deg())
            .then_with(|| a.0.coeffs.cmp(&b.0.coeffs))
    });
    (unit, out)
}

/// Irreducibility over F_p of a monic polynomial of degree >= 1.
pub fn is_irreducible_fp(f: &FpPoly, fp: Fp) -> bool {
    let n = match f.deg() {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    if n == 1 {
        return true;
    }
    // x^(p^n) == x mod f, and gcd(x^(p^(n/q)) - x, f) == 1 for primes q | n
    let p = BigInt::from(fp.p);
    let xq = f.pow_mod(&FpPoly::x(), &p.pow(n as u32), fp);
    if xq != FpPoly::x().rem(f, fp) {
        return false;
    }
    let mut m = n;
    let mut qs = Vec::new();
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            qs.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        qs.push(m);
    }
    for q in qs {
        let xe = f.pow_mod(&FpPoly::x(), &p.pow((n / q) as u32), fp);
        let diff = xe.sub(&FpPoly::x(), fp);
        if diff.is_zero() || f.gcd(&diff, fp).deg() != Some(0) {
            return false;
        }
    }
    true
}
