//! Factorization of integer polynomials of degree <= 16.
//!
//! Pipeline: content and squarefree (Yun) decomposition, an irreducibility
//! fast path that intersects factor-degree multisets modulo several good
//! primes, then for genuine splits a factorization modulo one good prime,
//! quadratic Hensel lifting past the coefficient bound, and exhaustive
//! subset recombination. Degree is small here, so the classical subset
//! method is fine.

use super::poly::IntPoly;
use super::{ArithError, BigInt};
use crate::modp::{factor_degrees, factor_fp, Fp, FpPoly};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub const MAX_FACTOR_DEGREE: usize = 16;

/// `constant * prod factors[i].0 ^ factors[i].1` reconstructs the input.
/// Factors are primitive irreducible with positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFactorization {
    pub constant: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl PolyFactorization {
    pub fn product(&self) -> IntPoly {
        let mut acc = IntPoly::constant(self.constant.clone());
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Total number of irreducible factors counted with multiplicity.
    pub fn count_with_multiplicity(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }
}

/// Factor a nonzero integer polynomial of degree <= 16 into certified
/// irreducibles.
pub fn factor_poly(f: &IntPoly) -> Result<PolyFactorization, ArithError> {
    if f.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    let deg = f.deg().unwrap();
    if deg > MAX_FACTOR_DEGREE {
        return Err(ArithError::DegreeTooLarge(deg, MAX_FACTOR_DEGREE));
    }
    let (content, parts) = f.squarefree_decomposition();
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();
    for (g, m) in parts {
        for irr in factor_squarefree(&g) {
            if let Some(e) = factors.iter_mut().find(|(h, _)| *h == irr) {
                e.1 += m;
            } else {
                factors.push((irr, m));
            }
        }
    }
    factors.sort_by(|a, b| {
        a.0.deg()
            .cmp(&b.0.deg())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    let result = PolyFactorization { constant: content, factors };
    debug_assert_eq!(result.product(), *f);
    Ok(result)
}

/// Good primes: odd, not dividing lc, reduction squarefree of full degree.
fn good_primes(f: &IntPoly, want: usize) -> Vec<u64> {
    let deg = f.deg().unwrap();
    let mut out = Vec::new();
    let mut p = 3u64;
    while out.len() < want {
        if crate::arith::is_prime(&BigInt::from(p)).unwrap_or(false) {
            let fp = Fp::new(p);
            let fbar = FpPoly::from_int_poly(f, fp);
            if fbar.deg() == Some(deg) && fbar.is_squarefree(fp) {
                out.push(p);
            }
        }
        p += 2;
    }
    out
}

/// All achievable proper factor degrees given a multiset of irreducible
/// factor degrees: subset sums excluding 0 and the full degree.
fn proper_degree_sums(degs: &[usize]) -> Vec<usize> {
    let total: usize = degs.iter().sum();
    let mut reachable = vec![false; total + 1];
    reachable[0] = true;
    for &d in degs {
        for s in (0..=total.saturating_sub(d)).rev() {
            if reachable[s] {
                reachable[s + d] = true;
            }
        }
    }
    (1..total).filter(|&s| reachable[s]).collect()
}

fn factor_squarefree(g: &IntPoly) -> Vec<IntPoly> {
    let (_, g) = g.primitive();
    let deg = g.deg().unwrap();
    if deg == 0 {
        return vec![];
    }
    if deg == 1 {
        return vec![g];
    }

    // fast path: intersect proper-degree sets over several good primes
    let primes = good_primes(&g, 4);
    let mut possible: Option<Vec<usize>> = None;
    let mut best: Option<(u64, Vec<usize>)> = None;
    for &p in &primes {
        let fp = Fp::new(p);
        let fbar = FpPoly::from_int_poly(&g, fp).make_monic(fp);
        let degs = factor_degrees(&fbar, fp);
        let sums = proper_degree_sums(&degs);
        possible = Some(match possible {
            None => sums,
            Some(prev) => prev.into_iter().filter(|d| sums.contains(d)).collect(),
        });
        if best.as_ref().map_or(true, |(_, d)| degs.len() < d.len()) {
            best = Some((p, degs));
        }
        if possible.as_ref().unwrap().is_empty() {
            return vec![g];
        }
    }

    let (p, modular_degrees) = best.unwrap();
    let possible = possible.unwrap();
    zassenhaus(&g, p, &modular_degrees, &possible)
}

fn zassenhaus(
    g: &IntPoly,
    p: u64,
    modular_degrees: &[usize],
    possible_degrees: &[usize],
) -> Vec<IntPoly> {
    let n = g.deg().unwrap();
    let lc = g.lc();

    // monicize: ghat(x) = lc^(n-1) * g(x/lc) is monic over Z
    let ghat = monicize(g);

    // coefficient bound for factors of the monic ghat (Landau-Mignotte)
    let height = ghat
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let bound: BigInt = (BigInt::one() << n) * BigInt::from(n as u64 + 1) * height;
    let target = 2 * &bound + 1;
    let mut k = 1u32;
    let mut pk = BigInt::from(p);
    while pk < target {
        pk = &pk * &pk;
        k *= 2;
    }

    let fp = Fp::new(p);
    let gbar = FpPoly::from_int_poly(&ghat, fp).make_monic(fp);
    let (_, modular) = factor_fp(&gbar, fp);
    debug_assert!(modular.iter().all(|(_, m)| *m == 1));
    let modular: Vec<FpPoly> = modular.into_iter().map(|(f, _)| f).collect();
    debug_assert_eq!(
        {
            let mut d: Vec<usize> = modular.iter().map(|f| f.deg().unwrap()).collect();
            d.sort_unstable();
            d
        },
        modular_degrees.to_vec()
    );

    let lifted = hensel_lift_multi(&ghat, &modular, p, k, &pk);

    // subset recombination
    let mut remaining: Vec<ModularFactor> = lifted
        .into_iter()
        .map(|c| ModularFactor { coeffs: c })
        .collect();
    let mut current = ghat;
    let mut monic_factors: Vec<IntPoly> = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&idxs, size) {
            let degsum: usize = combo
                .iter()
                .map(|&i| remaining[i].coeffs.len() - 1)
                .sum();
            if !possible_degrees.contains(&degsum) && degsum != current.deg().unwrap() {
                continue;
            }
            let candidate = product_mod(&remaining[combo[0]].coeffs, &combo[1..], &remaining, &pk);
            let cand_poly = symmetric_poly(&candidate, &pk);
            if !trailing_divides(&cand_poly, &current) {
                continue;
            }
            if cand_poly.divides(&current) {
                current = current.div_exact(&cand_poly);
                monic_factors.push(cand_poly);
                let mut keep = Vec::new();
                for (i, f) in remaining.into_iter().enumerate() {
                    if !combo.contains(&i) {
                        keep.push(f);
                    }
                }
                remaining = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if current.deg().unwrap_or(0) >= 1 {
        monic_factors.push(current);
    }

    // map factors of ghat back to factors of g
    let mut out = Vec::new();
    for h in monic_factors {
        let scaled = h.compose(&IntPoly::from_coeffs(vec![BigInt::zero(), lc.clone()]));
        let (_, prim) = scaled.primitive();
        out.push(prim);
    }
    debug_assert_eq!(
        out.iter().fold(IntPoly::one(), |a, b| a.mul(b)),
        g.primitive().1
    );
    out
}

struct ModularFactor {
    coeffs: Vec<BigInt>,
}

/// `ghat(x) = lc^(n-1) g(x/lc)`: monic with integer coefficients.
fn monicize(g: &IntPoly) -> IntPoly {
    let n = g.deg().unwrap();
    let lc = g.lc();
    let mut coeffs = Vec::with_capacity(n + 1);
    for (i, c) in g.coeffs().iter().enumerate() {
        // coefficient of x^i is c * lc^(n-1-i)
        if i == n {
            coeffs.push(BigInt::one());
        } else {
            coeffs.push(c * lc.pow((n - 1 - i) as u32));
        }
    }
    IntPoly::from_coeffs(coeffs)
}

fn trailing_divides(cand: &IntPoly, target: &IntPoly) -> bool {
    let c0 = cand.coeff(0);
    let t0 = target.coeff(0);
    if c0.is_zero() {
        return t0.is_zero();
    }
    (t0 % c0).is_zero()
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    if k > items.len() {
        return out;
    }
    loop {
        out.push(combo.iter().map(|&i| items[i]).collect());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] != i + items.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

fn product_mod(
    first: &[BigInt],
    rest: &[usize],
    all: &[ModularFactor],
    m: &BigInt,
) -> Vec<BigInt> {
    let mut acc = first.to_vec();
    for &i in rest {
        acc = mul_mod(&acc, &all[i].coeffs, m);
    }
    acc
}

fn symmetric_poly(coeffs: &[BigInt], m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::from_coeffs(
        coeffs
            .iter()
            .map(|c| if c > &half { c - m } else { c.clone() })
            .collect(),
    )
}

// ---- arithmetic on dense coefficient vectors mod m ----

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    for c in &mut out {
        *c = c.mod_floor(m);
    }
    trim(&mut out);
    out
}

fn add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let s = a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero);
        out.push(s.mod_floor(m));
    }
    trim(&mut out);
    out
}

fn sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let s = a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero);
        out.push(s.mod_floor(m));
    }
    trim(&mut out);
    out
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

/// Division with remainder by a monic divisor, coefficients mod m.
fn divrem_monic_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    debug_assert!(b.last().map_or(false, |c| c.is_one()));
    let db = b.len() - 1;
    let mut r: Vec<BigInt> = a.to_vec();
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for top in (db..r.len()).rev() {
        let c = r[top].clone();
        if c.is_zero() {
            continue;
        }
        let shift = top - db;
        q[shift] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let t = &r[shift + i] - &c * bc;
            r[shift + i] = t.mod_floor(m);
        }
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

/// Quadratic Hensel lifting of a multi-factor factorization of a monic
/// polynomial from mod p to mod p^k (k a power of two), divide and conquer
/// over the factor list. Returns each lifted factor's coefficients mod
/// `pk = p^k`, monic.
fn hensel_lift_multi(
    f: &IntPoly,
    factors: &[FpPoly],
    p: u64,
    k: u32,
    pk: &BigInt,
) -> Vec<Vec<BigInt>> {
    let fp = Fp::new(p);
    let fmod: Vec<BigInt> = f.coeffs().iter().map(|c| c.mod_floor(pk)).collect();
    if factors.len() == 1 {
        return vec![fmod];
    }
    let mid = factors.len() / 2;
    let (lo, hi) = factors.split_at(mid);
    let u0 = lo.iter().fold(FpPoly::one(), |a, b| a.mul(b, fp));
    let v0 = hi.iter().fold(FpPoly::one(), |a, b| a.mul(b, fp));
    let (gcd1, s, t) = u0.xgcd(&v0, fp);
    debug_assert_eq!(gcd1.deg(), Some(0));
    let (u, v) = hensel_lift_pair(&fmod, &u0, &v0, &s, &t, p, k, pk);
    let fu = IntPoly::from_coeffs(u.clone());
    let fv = IntPoly::from_coeffs(v.clone());
    let mut out = hensel_lift_multi(&fu, lo, p, k, pk);
    out.extend(hensel_lift_multi(&fv, hi, p, k, pk));
    out
}

/// Lift `f = u*v (mod p)` with Bezout data `s*u + t*v = 1 (mod p)` to
/// `mod p^k`; all of f, u, v monic.
#[allow(clippy::too_many_arguments)]
fn hensel_lift_pair(
    f: &[BigInt],
    u0: &FpPoly,
    v0: &FpPoly,
    s0: &FpPoly,
    t0: &FpPoly,
    p: u64,
    k: u32,
    pk: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let to_big = |g: &FpPoly| -> Vec<BigInt> { g.coeffs.iter().map(|&c| BigInt::from(c)).collect() };
    let mut u = to_big(u0);
    let mut v = to_big(v0);
    let mut s = to_big(s0);
    let mut t = to_big(t0);
    let mut m = BigInt::from(p);
    let mut cur = 1u32;
    while cur < k {
        let mnew = &m * &m;
        // e = f - u*v mod mnew
        let uv = mul_mod(&u, &v, &mnew);
        let fm: Vec<BigInt> = f.iter().map(|c| c.mod_floor(&mnew)).collect();
        let e = sub_mod(&fm, &uv, &mnew);
        // s*u + t*v = 1: the coefficient paired with v reduces mod u.
        // u' = u + (t*e mod u), v' = v + s*e + q*v with q = (t*e) div u;
        // then u'v' = uv + e*(su+tv) = f (mod mnew).
        let te = mul_mod(&t, &e, &mnew);
        let (q, r) = divrem_monic_mod(&te, &u, &mnew);
        let unew = add_mod(&u, &r, &mnew);
        let se = mul_mod(&s, &e, &mnew);
        let qv = mul_mod(&q, &v, &mnew);
        let vnew = add_mod(&v, &add_mod(&se, &qv, &mnew), &mnew);
        // lift Bezout the same way: e2 = s*u' + t*v' - 1,
        // t' = t - (t*e2 mod u'), s' = s - (s*e2 + q2*v')
        let su = mul_mod(&s, &unew, &mnew);
        let tv = mul_mod(&t, &vnew, &mnew);
        let mut e2 = add_mod(&su, &tv, &mnew);
        e2 = sub_mod(&e2, &[BigInt::one()], &mnew);
        let te2 = mul_mod(&t, &e2, &mnew);
        let (q2, r2) = divrem_monic_mod(&te2, &unew, &mnew);
        let tnew = sub_mod(&t, &r2, &mnew);
        let se2 = mul_mod(&s, &e2, &mnew);
        let q2v = mul_mod(&q2, &vnew, &mnew);
        let snew = sub_mod(&s, &add_mod(&se2, &q2v, &mnew), &mnew);
        u = unew;
        v = vnew;
        s = snew;
        t = tnew;
        m = mnew;
        cur *= 2;
    }
    let u: Vec<BigInt> = u.iter().map(|c| c.mod_floor(pk)).collect();
    let v: Vec<BigInt> = v.iter().map(|c| c.mod_floor(pk)).collect();
    (u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn irreducibles() {
        let f = ip(&[1, 0, 1]);
        let r = factor_poly(&f).unwrap();
        assert!(r.is_irreducible());
        assert_eq!(r.factors[0].0, f);

        let quartic = ip(&[4, 13, 13, 6, 1]);
        let r = factor_poly(&quartic).unwrap();
        assert!(r.is_irreducible());
    }

    #[test]
    fn simple_splits() {
        let f = ip(&[-4, 0, 1]); // (x-2)(x+2)
        let r = factor_poly(&f).unwrap();
        assert_eq!(r.factors.len(), 2);
        assert_eq!(r.product(), f);
    }

    #[test]
    fn third_iterate_of_shifted_map_splits() {
        // iterate x -> (x-5)^2 + 4 three times; frozen independent
        // factorization into two quartics
        let mut it = IntPoly::x();
        for _ in 0..3 {
            let shifted = it.sub(&IntPoly::constant(BigInt::from(5)));
            it = shifted.mul(&shifted).add(&IntPoly::constant(BigInt::from(4)));
        }
        assert_eq!(
            it,
            ip(&[330629, -552000, 400600, -165080, 42254, -6880, 696, -40, 1])
        );
        let r = factor_poly(&it).unwrap();
        assert_eq!(r.constant, BigInt::one());
        assert_eq!(r.factors.len(), 2);
        let expected1 = ip(&[877, -650, 180, -22, 1]);
        let expected2 = ip(&[377, -350, 120, -18, 1]);
        let got: Vec<&IntPoly> = r.factors.iter().map(|(f, _)| f).collect();
        assert!(got.contains(&&expected1));
        assert!(got.contains(&&expected2));
    }

    #[test]
    fn multiplicities_and_content() {
        let f = ip(&[1, 1]).pow(2).mul(&ip(&[2, 0, 1])).mul_scalar(&BigInt::from(-6));
        let r = factor_poly(&f).unwrap();
        assert_eq!(r.constant, BigInt::from(-6));
        assert_eq!(r.product(), f);
        assert_eq!(r.count_with_multiplicity(), 3);
    }

    #[test]
    fn non_monic() {
        let f = ip(&[3, 2]).mul(&ip(&[-1, 5])).mul(&ip(&[7, 0, 2]));
        let r = factor_poly(&f).unwrap();
        assert_eq!(r.product(), f);
        assert_eq!(r.factors.len(), 3);
    }

    #[test]
    fn degree_cap() {
        let f = IntPoly::monomial(BigInt::one(), 17).add(&IntPoly::one());
        assert!(matches!(
            factor_poly(&f),
            Err(ArithError::DegreeTooLarge(17, 16))
        ));
    }

    #[test]
    fn random_products_roundtrip() {
        let mut state = 0x1234_5678u64;
        let mut rnd = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(97);
            ((state >> 34) as i64 % 9) - 4
        };
        for _ in 0..30 {
            let f1 = IntPoly::from_i64s(&[rnd(), rnd(), 1]);
            let f2 = IntPoly::from_i64s(&[rnd(), rnd(), rnd(), 1]);
            let f3 = IntPoly::from_i64s(&[2 * rnd() + 1, 1]);
            let f = f1.mul(&f2).mul(&f3);
            if f.is_zero() || f.deg().unwrap() > 16 {
                continue;
            }
            let r = factor_poly(&f).unwrap();
            assert_eq!(r.product(), f);
            // every reported factor must be irreducible under the modular
            // degree test over a few primes
            for (fac, _) in &r.factors {
                let rr = factor_poly(fac).unwrap();
                assert!(rr.is_irreducible());
            }
        }
    }
}
