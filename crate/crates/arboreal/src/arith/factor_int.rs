//! Integer factorization: trial division below a fixed bound, then Brent's
//! cycle-finding variant of the rho method with deterministic parameters.
//! Primality of every reported factor is certified by the deterministic
//! Miller-Rabin witness set, so either the result is a proof or the call
//! fails with `Incomplete` - never a silently wrong answer.

use super::{gcd, is_prime, ArithError, BigInt};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A certified factorization `n = unit * prod p_i^{e_i}` with the primes
/// strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntFactorization {
    pub unit: i8,
    pub factors: Vec<(BigInt, u32)>,
}

impl IntFactorization {
    /// Multiply the factorization back together.
    pub fn product(&self) -> BigInt {
        let mut acc = BigInt::from(self.unit);
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        acc
    }

    /// The distinct primes.
    pub fn primes(&self) -> Vec<BigInt> {
        self.factors.iter().map(|(p, _)| p.clone()).collect()
    }

    /// The squarefree kernel `unit * prod_{e_i odd} p_i`.
    pub fn squarefree_kernel(&self) -> BigInt {
        let mut acc = BigInt::from(self.unit);
        for (p, e) in &self.factors {
            if e % 2 == 1 {
                acc *= p;
            }
        }
        acc
    }

    /// The largest `s` with `s^2 | n`, i.e. `prod p_i^{floor(e_i/2)}`.
    pub fn square_part(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (p, e) in &self.factors {
            acc *= p.pow(e / 2);
        }
        acc
    }
}

const TRIAL_BOUND: u64 = 100_000;
const DEFAULT_RHO_BUDGET: u64 = 40_000_000;

/// Factor a nonzero integer completely. See [`factor_int_with_budget`].
pub fn factor_int(n: &BigInt) -> Result<IntFactorization, ArithError> {
    factor_int_with_budget(n, DEFAULT_RHO_BUDGET)
}

/// Factor a nonzero integer completely, spending at most `budget` rho
/// iterations. Exceeding the budget, or meeting a cofactor too large for
/// the deterministic primality proof, surfaces `Incomplete`.
pub fn factor_int_with_budget(n: &BigInt, budget: u64) -> Result<IntFactorization, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    let unit = if n.is_negative() { -1 } else { 1 };
    use num_traits::ToPrimitive;
    if let Some(small) = n.abs().to_u64() {
        let mut factors: Vec<(BigInt, u32)> = factor_u64(small)
            .into_iter()
            .map(|(p, e)| (BigInt::from(p), e))
            .collect();
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        return Ok(IntFactorization { unit, factors });
    }
    let mut m = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, e: u32, factors: &mut Vec<(BigInt, u32)>| {
        if let Some(last) = factors.iter_mut().find(|(q, _)| *q == p) {
            last.1 += e;
        } else {
            factors.push((p, e));
        }
    };

    // trial division
    let mut d = 2u64;
    while d < TRIAL_BOUND {
        let db = BigInt::from(d);
        if &db * &db > m {
            break;
        }
        let mut e = 0u32;
        while (&m % &db).is_zero() {
            m /= &db;
            e += 1;
        }
        if e > 0 {
            push(db, e, &mut factors);
        }
        d = if d == 2 { 3 } else { d + 2 };
    }

    if !m.is_one() {
        let mut budget = budget;
        let mut stack = vec![m];
        while let Some(c) = stack.pop() {
            if c.is_one() {
                continue;
            }
            if is_prime(&c)? {
                push(c, 1, &mut factors);
                continue;
            }
            // composite: perfect power first (rho stalls on them), then rho
            if let Ok((r, e)) = super::perfect_power(&c) {
                if e > 1 {
                    for _ in 0..e {
                        stack.push(r.clone());
                    }
                    continue;
                }
            }
            let f = brent_rho(&c, &mut budget).ok_or_else(|| {
                ArithError::Incomplete(format!("rho budget exhausted splitting {c}"))
            })?;
            stack.push(&c / &f);
            stack.push(f);
        }
    }

    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(IntFactorization { unit, factors })
}

fn mulmod64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod64(acc, a, m);
        }
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin on u64 (the witness set proves far beyond
/// 2^64).
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &w in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == w {
            return true;
        }
        if n % w == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'next: for &w in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod64(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod64(x, x, n);
            if x == n - 1 {
                continue 'next;
            }
        }
        return false;
    }
    true
}

fn brent_rho_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    for c in 1u64.. {
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let (mut g, mut x, mut ys) = (1u64, 0u64, 0u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = mulmod64(y, y, n).wrapping_add(c) % n;
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..128.min(r - k) {
                    y = (mulmod64(y, y, n) + c) % n;
                    q = mulmod64(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = (mulmod64(ys, ys, n) + c) % n;
                g = gcd_u64(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g > 1 && g < n {
            return g;
        }
    }
    unreachable!()
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    if n <= 1 {
        return out;
    }
    let push = |p: u64, out: &mut Vec<(u64, u32)>| {
        if let Some(e) = out.iter_mut().find(|(q, _)| *q == p) {
            e.1 += 1;
        } else {
            out.push((p, 1));
        }
    };
    let mut m = n;
    for d in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        while m % d == 0 {
            m /= d;
            push(d, &mut out);
        }
    }
    let mut d = 37u64;
    while d < 100_000 && d * d <= m {
        while m % d == 0 {
            m /= d;
            push(d, &mut out);
        }
        d += 2;
    }
    let mut stack = vec![m];
    while let Some(c) = stack.pop() {
        if c == 1 {
            continue;
        }
        if is_prime_u64(c) {
            push(c, &mut out);
            continue;
        }
        let f = brent_rho_u64(c);
        stack.push(f);
        stack.push(c / f);
    }
    out.sort_unstable();
    out
}

/// Brent's rho. Deterministic: the polynomial offset walks 1, 2, 3, ...
fn brent_rho(n: &BigInt, budget: &mut u64) -> Option<BigInt> {
    debug_assert!(!n.is_one() && n.is_positive());
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    for c in 1u64.. {
        if *budget == 0 {
            return None;
        }
        let cb = BigInt::from(c);
        let mut y = BigInt::from(2);
        let mut r: u64 = 1;
        let mut q = BigInt::one();
        let (mut g, mut x, mut ys) = (BigInt::one(), BigInt::zero(), BigInt::zero());
        'outer: while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &cb) % n;
            }
            let mut k: u64 = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let chunk = 128.min(r - k);
                if *budget < chunk {
                    *budget = 0;
                    return None;
                }
                *budget -= chunk;
                for _ in 0..chunk {
                    y = (&y * &y + &cb) % n;
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = &q * &diff % n;
                }
                g = gcd(&q, n);
                k += chunk;
            }
            r *= 2;
            if r > 1 << 22 {
                break 'outer; // restart with a new offset
            }
        }
        if g == *n {
            // backtrack one step at a time
            loop {
                ys = (&ys * &ys + &cb) % n;
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = gcd(&diff, n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
    }
    None
}
