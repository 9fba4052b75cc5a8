//! Extension fields F_{p^k} with a deterministic modulus.
//!
//! Elements are coordinate vectors over F_p modulo the monic irreducible
//! of degree k whose coefficient vector, read as a base-p integer
//! (constant digit least significant), is smallest. That pins every count
//! and golden test to one bit-reproducible field.

use crate::ffhyper::FfError;
use crate::modp::{is_irreducible_fp, Fp, FpPoly};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fq {
    pub fp: Fp,
    pub k: usize,
    pub q: u64,
    /// Monic modulus, ascending, length k+1. For k = 1 this is just x.
    pub modulus: Vec<u64>,
}

/// An element of F_{p^k}: coordinates ascending in the power basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqElement {
    pub coords: Vec<u64>,
}

impl Fq {
    /// Construct F_{p^k}, checking q fits comfortably in u64.
    pub fn new(p: u64, k: usize) -> Result<Fq, FfError> {
        assert!(k >= 1);
        let fp = Fp::new(p);
        let mut q: u64 = 1;
        for _ in 0..k {
            q = q.checked_mul(p).ok_or(FfError::FieldTooLarge { p, k })?;
        }
        if q >= (1 << 62) {
            return Err(FfError::FieldTooLarge { p, k });
        }
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            find_modulus(fp, k)
        };
        Ok(Fq { fp, k, q, modulus })
    }

    pub fn zero(&self) -> FqElement {
        FqElement {
            coords: vec![0; self.k],
        }
    }

    pub fn one(&self) -> FqElement {
        self.scalar(1)
    }

    pub fn scalar(&self, c: u64) -> FqElement {
        let mut coords = vec![0; self.k];
        coords[0] = c % self.fp.p;
        FqElement { coords }
    }

    /// Decode the base-p digits of an index in `0..q`.
    pub fn from_index(&self, mut m: u64) -> FqElement {
        let mut coords = vec![0; self.k];
        for c in coords.iter_mut() {
            *c = m % self.fp.p;
            m /= self.fp.p;
        }
        FqElement { coords }
    }

    pub fn to_index(&self, e: &FqElement) -> u64 {
        let mut v = 0u64;
        for &c in e.coords.iter().rev() {
            v = v * self.fp.p + c;
        }
        v
    }

    pub fn is_zero(&self, a: &FqElement) -> bool {
        a.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FqElement, b: &FqElement) -> FqElement {
        FqElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(&x, &y)| self.fp.add(x, y))
                .collect(),
        }
    }

    pub fn sub(&self, a: &FqElement, b: &FqElement) -> FqElement {
        FqElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(&x, &y)| self.fp.sub(x, y))
                .collect(),
        }
    }

    pub fn mul(&self, a: &FqElement, b: &FqElement) -> FqElement {
        let fp = self.fp;
        let k = self.k;
        if k == 1 {
            return FqElement {
                coords: vec![fp.mul(a.coords[0], b.coords[0])],
            };
        }
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in a.coords.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coords.iter().enumerate() {
                prod[i + j] = fp.add(prod[i + j], fp.mul(x, y));
            }
        }
        // reduce by the monic modulus
        for d in (k..2 * k - 1).rev() {
            let top = prod[d];
            if top != 0 {
                prod[d] = 0;
                for i in 0..k {
                    let sub = fp.mul(top, self.modulus[i]);
                    prod[d - k + i] = fp.sub(prod[d - k + i], sub);
                }
            }
        }
        prod.truncate(k);
        FqElement { coords: prod }
    }

    pub fn square(&self, a: &FqElement) -> FqElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: &FqElement, mut e: u64) -> FqElement {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.square(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FqElement) -> FqElement {
        debug_assert!(!self.is_zero(a));
        self.pow(a, self.q - 2)
    }

    /// Quadratic character by exponentiation to (q-1)/2: returns 1, 0,
    /// or -1 as +1/0/-1.
    pub fn chi(&self, a: &FqElement) -> i8 {
        if self.is_zero(a) {
            return 0;
        }
        let r = self.pow(a, (self.q - 1) / 2);
        if r == self.one() {
            1
        } else {
            -1
        }
    }

    /// Evaluate an integer polynomial (coefficients already reduced into
    /// F_p scalars) at an element.
    pub fn eval_poly(&self, coeffs: &[u64], x: &FqElement) -> FqElement {
        let mut acc = self.zero();
        for &c in coeffs.iter().rev() {
            acc = self.mul(&acc, x);
            acc.coords[0] = self.fp.add(acc.coords[0], c);
        }
        acc
    }
}

/// Smallest-encoding monic irreducible of degree k over F_p.
fn find_modulus(fp: Fp, k: usize) -> Vec<u64> {
    let p = fp.p;
    let mut m = 0u64;
    loop {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut mm = m;
        for _ in 0..k {
            coeffs.push(mm % p);
            mm /= p;
        }
        coeffs.push(1);
        let cand = FpPoly::from_coeffs(coeffs.clone());
        if is_irreducible_fp(&cand, fp) {
            return coeffs;
        }
        m += 1;
    }
}

/// Convert curve coefficients to reduced F_p scalars once per field.
pub fn reduce_coeffs(coeffs: &[BigInt], fp: Fp) -> Vec<u64> {
    coeffs.iter().map(|c| fp.reduce_bigint(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_is_deterministic() {
        // x^2 + 1 is the least irreducible quadratic mod 3
        let f9 = Fq::new(3, 2).unwrap();
        assert_eq!(f9.modulus, vec![1, 0, 1]);
        // and the least quadratic mod 5 is x^2 + 2
        let f25 = Fq::new(5, 2).unwrap();
        assert_eq!(f25.modulus, vec![2, 0, 1]);
    }

    #[test]
    fn field_axioms_random_sample() {
        for (p, k) in [(3u64, 3usize), (5, 2), (7, 4), (11, 1)] {
            let fq = Fq::new(p, k).unwrap();
            let mut state = 0x1357_9bdfu64 ^ (p << 8) ^ k as u64;
            let mut rnd = move || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(17);
                state >> 11
            };
            for _ in 0..200 {
                let a = fq.from_index(rnd() % fq.q);
                let b = fq.from_index(rnd() % fq.q);
                let c = fq.from_index(rnd() % fq.q);
                // commutativity, associativity, distributivity
                assert_eq!(fq.mul(&a, &b), fq.mul(&b, &a));
                assert_eq!(fq.mul(&fq.mul(&a, &b), &c), fq.mul(&a, &fq.mul(&b, &c)));
                assert_eq!(
                    fq.mul(&a, &fq.add(&b, &c)),
                    fq.add(&fq.mul(&a, &b), &fq.mul(&a, &c))
                );
                // Frobenius: x^q = x
                assert_eq!(fq.pow(&a, fq.q), a);
                // inverses
                if !fq.is_zero(&a) {
                    assert_eq!(fq.mul(&a, &fq.inv(&a)), fq.one());
                }
            }
        }
    }

    #[test]
    fn chi_counts_squares() {
        let fq = Fq::new(3, 2).unwrap();
        // q = 9: 4 nonzero squares, 4 non-squares
        let squares = (0..fq.q)
            .filter(|&m| fq.chi(&fq.from_index(m)) == 1)
            .count();
        assert_eq!(squares, 4);
        // chi matches brute-force squaring
        for m in 0..fq.q {
            let e = fq.from_index(m);
            let is_sq = (0..fq.q).any(|n| fq.square(&fq.from_index(n)) == e);
            let c = fq.chi(&e);
            if fq.is_zero(&e) {
                assert_eq!(c, 0);
            } else {
                assert_eq!(c == 1, is_sq);
            }
        }
    }

    #[test]
    fn index_roundtrip() {
        let fq = Fq::new(7, 3).unwrap();
        for m in (0..fq.q).step_by(13) {
            assert_eq!(fq.to_index(&fq.from_index(m)), m);
        }
    }

    #[test]
    fn oversized_field_rejected() {
        assert!(Fq::new(1 << 40, 2).is_err());
    }
}
