//! 2-independence of finite lists of nonzero rationals in Q*/(Q*)^2,
//! decided without factoring.
//!
//! A list is 2-independent when its classes modulo squares are linearly
//! independent over F_2. We refine the inputs into a pairwise-coprime basis
//! (repeatedly replacing a pair sharing a factor by gcd and cofactors),
//! strip perfect powers off the basis, and row-reduce the resulting parity
//! matrix; the sign lives in a dedicated F_2 coordinate since -1 is an
//! independent class over Q. Full exponents are kept alongside the
//! parities so a dependency witness's square root comes straight out of
//! the bookkeeping, with no factorization anywhere on the main path.

use crate::arith::{gcd, perfect_power, ArithError, BigInt, Rat};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SquareClassError {
    #[error("zero value at index {0}; zero forces dependence")]
    ZeroValue(usize),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// A finite list of nonzero rationals presented over a coprime basis.
#[derive(Debug, Clone)]
pub struct SquareClassSystem {
    pub values: Vec<Rat>,
    /// Pairwise coprime, each >= 2 and not a perfect power.
    pub basis: Vec<BigInt>,
    /// `negative[i]` is the sign bit of value i.
    pub negative: Vec<bool>,
    /// Full exponent of `basis[j]` in `|num_i * den_i|`.
    pub exponents: Vec<Vec<u64>>,
}

impl SquareClassSystem {
    /// Parity row of value `i`: sign bit first, then one bit per basis
    /// element.
    pub fn row(&self, i: usize) -> Vec<bool> {
        let mut r = Vec::with_capacity(1 + self.basis.len());
        r.push(self.negative[i]);
        for e in &self.exponents[i] {
            r.push(e % 2 == 1);
        }
        r
    }

    /// A value is a rational square iff its whole row is zero.
    pub fn is_square(&self, i: usize) -> bool {
        self.row(i).iter().all(|b| !b)
    }
}

/// Verdict of a 2-independence test.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Independent,
    Dependent(Witness),
}

impl Verdict {
    pub fn is_independent(&self) -> bool {
        matches!(self, Verdict::Independent)
    }
}

/// Why a list is dependent.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// Some value is zero (zero is never 2-independent by convention).
    ZeroElement { index: usize },
    /// `prod_{i in subset} values[i] = y^2` exactly. Indices are 0-based
    /// and sorted.
    SquareProduct { subset: Vec<usize>, y: Rat },
}

/// Coprime-basis refinement of a list of nonzero integers.
pub fn factor_refine(values: &[BigInt]) -> Result<SquareClassSystem, SquareClassError> {
    for (i, v) in values.iter().enumerate() {
        if v.is_zero() {
            return Err(SquareClassError::ZeroValue(i));
        }
    }
    let rats: Vec<Rat> = values.iter().map(|v| Rat::from_integer(v.clone())).collect();
    Ok(refine_internal(&rats, values))
}

fn refine_internal(original: &[Rat], ints: &[BigInt]) -> SquareClassSystem {
    let one = BigInt::one();
    // seed with the distinct absolute values >= 2
    let mut basis: Vec<BigInt> = Vec::new();
    for v in ints {
        let a = v.abs();
        if a > one && !basis.contains(&a) {
            basis.push(a);
        }
    }
    // pairwise refinement: replace (a, b) with gcd > 1 by (a/g, b/g, g)
    'refine: loop {
        let n = basis.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let g = gcd(&basis[i], &basis[j]);
                if g > one {
                    let a = &basis[i] / &g;
                    let b = &basis[j] / &g;
                    // remove j first (j > i)
                    basis.remove(j);
                    basis.remove(i);
                    for m in [g, a, b] {
                        if m > one && !basis.contains(&m) {
                            basis.push(m);
                        }
                    }
                    continue 'refine;
                }
            }
        }
        break;
    }
    // strip perfect powers: replace m = r^e by r, scaling exponents by e
    let mut scaled: Vec<(BigInt, u64)> = Vec::new();
    for m in basis {
        let (r, e) = perfect_power(&m).expect("basis element >= 2");
        scaled.push((r, e as u64));
    }
    let basis: Vec<BigInt> = scaled.iter().map(|(r, _)| r.clone()).collect();

    // full-exponent extraction; pairwise coprimality makes this unambiguous
    let mut exponents = Vec::with_capacity(ints.len());
    let mut negative = Vec::with_capacity(ints.len());
    for v in ints {
        negative.push(v.is_negative());
        let mut m = v.abs();
        let mut row = Vec::with_capacity(basis.len());
        for (r, _) in &scaled {
            let mut e = 0u64;
            loop {
                let (q, rem) = num_integer::Integer::div_rem(&m, r);
                if rem.is_zero() {
                    m = q;
                    e += 1;
                } else {
                    break;
                }
            }
            row.push(e);
        }
        debug_assert!(m.is_one(), "refinement must exhaust every value");
        exponents.push(row);
    }
    SquareClassSystem {
        values: original.to_vec(),
        basis,
        negative,
        exponents,
    }
}

/// Decide 2-independence. Zeros are allowed and force dependence.
pub fn two_independent(values: &[Rat]) -> Verdict {
    for (i, v) in values.iter().enumerate() {
        if v.is_zero() {
            return Verdict::Dependent(Witness::ZeroElement { index: i });
        }
    }
    if values.is_empty() {
        return Verdict::Independent;
    }
    // numerator*denominator is in the same square class and integral
    let ints: Vec<BigInt> = values.iter().map(|v| v.numer() * v.denom()).collect();
    let system = refine_internal(values, &ints);
    match left_kernel_vector(&system) {
        None => Verdict::Independent,
        Some(subset) => {
            let y = witness_root(&system, &subset);
            debug_assert_eq!(
                &y * &y,
                subset
                    .iter()
                    .fold(Rat::one(), |acc, &i| acc * &system.values[i])
            );
            Verdict::Dependent(Witness::SquareProduct { subset, y })
        }
    }
}

/// Forward elimination over F_2 with combination tracking. Returns the
/// support of the first row that reduces to zero, i.e. a minimal-index
/// dependency, or `None` if the rows are independent.
fn left_kernel_vector(system: &SquareClassSystem) -> Option<Vec<usize>> {
    let cols = 1 + system.basis.len();
    let words = cols.div_ceil(64);
    let n = system.values.len();
    let track_words = n.div_ceil(64);
    // pivots: column -> (row bits, tracking bits)
    let mut pivots: Vec<Option<(Vec<u64>, Vec<u64>)>> = vec![None; cols];
    for i in 0..n {
        let mut row = vec![0u64; words];
        for (c, bit) in system.row(i).into_iter().enumerate() {
            if bit {
                row[c / 64] |= 1 << (c % 64);
            }
        }
        let mut track = vec![0u64; track_words];
        track[i / 64] |= 1 << (i % 64);
        loop {
            let lead = match leading_bit(&row) {
                None => {
                    // dependent: collect tracked indices
                    let mut subset = Vec::new();
                    for j in 0..n {
                        if track[j / 64] >> (j % 64) & 1 == 1 {
                            subset.push(j);
                        }
                    }
                    return Some(subset);
                }
                Some(c) => c,
            };
            match &pivots[lead] {
                Some((prow, ptrack)) => {
                    for w in 0..words {
                        row[w] ^= prow[w];
                    }
                    for w in 0..track_words {
                        track[w] ^= ptrack[w];
                    }
                }
                None => {
                    pivots[lead] = Some((row, track));
                    break;
                }
            }
        }
    }
    None
}

fn leading_bit(row: &[u64]) -> Option<usize> {
    for (w, &word) in row.iter().enumerate() {
        if word != 0 {
            return Some(w * 64 + word.trailing_zeros() as usize);
        }
    }
    None
}

/// Exact square root of `prod_{i in subset} values[i]` from the retained
/// full exponents: the integer part is `prod basis[j]^(total_j / 2)` and
/// the denominators contribute `1 / prod den_i`.
fn witness_root(system: &SquareClassSystem, subset: &[usize]) -> Rat {
    let mut root = BigInt::one();
    for (j, b) in system.basis.iter().enumerate() {
        let total: u64 = subset.iter().map(|&i| system.exponents[i][j]).sum();
        debug_assert!(total % 2 == 0);
        root *= b.pow((total / 2) as u32);
    }
    let mut den = BigInt::one();
    for &i in subset {
        den *= system.values[i].denom();
    }
    Rat::new(root, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn r(n: i64) -> Rat {
        Rat::from_integer(b(n))
    }
    fn rq(n: i64, d: i64) -> Rat {
        Rat::new(b(n), b(d))
    }

    #[test]
    fn refine_example_negative() {
        let sys = factor_refine(&[b(-3), b(12), b(147)]).unwrap();
        let mut basis = sys.basis.clone();
        basis.sort();
        assert_eq!(basis, vec![b(2), b(3), b(7)]);
        // rows: (sign, parities): -3 -> sign + one odd prime; 12 and 147
        // land in the class of 3
        assert_eq!(sys.row(0).iter().filter(|&&x| x).count(), 2);
        assert!(sys.row(0)[0]);
        assert_eq!(sys.row(1), sys.row(2));
        assert!(!sys.is_square(0));
    }

    #[test]
    fn refine_square_is_empty_row() {
        let sys = factor_refine(&[b(4)]).unwrap();
        assert!(sys.is_square(0));
    }

    #[test]
    fn refine_pairwise_shared() {
        let sys = factor_refine(&[b(6), b(10), b(15)]).unwrap();
        let mut basis = sys.basis.clone();
        basis.sort();
        assert_eq!(basis, vec![b(2), b(3), b(5)]);
        for i in 0..3 {
            assert_eq!(sys.row(i).iter().filter(|&&x| x).count(), 2);
        }
    }

    #[test]
    fn refine_rejects_zero() {
        assert!(matches!(
            factor_refine(&[b(3), b(0)]),
            Err(SquareClassError::ZeroValue(1))
        ));
    }

    #[test]
    fn dependence_with_witness() {
        match two_independent(&[r(-3), r(12), r(147)]) {
            Verdict::Dependent(Witness::SquareProduct { subset, y }) => {
                assert_eq!(subset, vec![1, 2]);
                assert_eq!(y, r(42));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn independent_pair() {
        assert!(two_independent(&[r(2), r(-1)]).is_independent());
    }

    #[test]
    fn rational_dependence() {
        // the -4/3 basepoint-1 sequence at level 4
        let vals = [rq(7, 3), rq(-5, 9), rq(-173, 81), rq(-6845, 6561)];
        match two_independent(&vals) {
            Verdict::Dependent(Witness::SquareProduct { subset, y }) => {
                assert_eq!(subset, vec![1, 3]);
                assert_eq!(&y * &y, &vals[1] * &vals[3]);
                assert_eq!(y, rq(185, 243));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_forces_dependence() {
        assert_eq!(
            two_independent(&[r(3), r(0)]),
            Verdict::Dependent(Witness::ZeroElement { index: 1 })
        );
    }

    #[test]
    fn empty_list_is_independent() {
        assert!(two_independent(&[]).is_independent());
    }

    #[test]
    fn one_is_dependent_alone() {
        // 1 is a square: single zero row
        match two_independent(&[r(1)]) {
            Verdict::Dependent(Witness::SquareProduct { subset, y }) => {
                assert_eq!(subset, vec![0]);
                assert_eq!(y, r(1));
            }
            other => panic!("{other:?}"),
        }
    }

    /// Brute-force oracle: full prime factorization parity matrix.
    pub(crate) fn oracle_two_independent(values: &[Rat]) -> bool {
        use crate::arith::factor_int;
        use std::collections::BTreeMap;
        if values.iter().any(|v| v.is_zero()) {
            return false;
        }
        let mut rows: Vec<BTreeMap<BigInt, u64>> = Vec::new();
        let mut signs = Vec::new();
        for v in values {
            let m = v.numer() * v.denom();
            let f = factor_int(&m).unwrap();
            signs.push(f.unit < 0);
            rows.push(f.factors.into_iter().map(|(p, e)| (p, e as u64)).collect());
        }
        let mut primes: Vec<BigInt> = rows
            .iter()
            .flat_map(|r| r.keys().cloned())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        primes.sort();
        let mut mat: Vec<Vec<bool>> = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            let mut r = vec![signs[i]];
            for p in &primes {
                r.push(row.get(p).copied().unwrap_or(0) % 2 == 1);
            }
            mat.push(r);
        }
        // rank == number of rows?
        let cols = primes.len() + 1;
        let mut pivots: Vec<Option<Vec<bool>>> = vec![None; cols];
        for mut row in mat {
            loop {
                let lead = row.iter().position(|&x| x);
                match lead {
                    None => return false,
                    Some(c) => match &pivots[c] {
                        Some(p) => {
                            for (a, b) in row.iter_mut().zip(p.iter()) {
                                *a ^= *b;
                            }
                        }
                        None => {
                            pivots[c] = Some(row);
                            break;
                        }
                    },
                }
            }
        }
        true
    }

    #[test]
    fn matches_factorization_oracle() {
        let mut state = 0xfeed_beefu64;
        let mut rnd = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as i64
        };
        for _ in 0..300 {
            let len = 1 + (rnd() as usize) % 6;
            let vals: Vec<Rat> = (0..len)
                .map(|_| {
                    let v = rnd() % 1_000_000;
                    r(if v == 0 { 1 } else { v })
                })
                .collect();
            let fast = two_independent(&vals).is_independent();
            let slow = oracle_two_independent(&vals);
            assert_eq!(fast, slow, "{vals:?}");
        }
    }

    #[test]
    fn witness_squares_exactly() {
        let mut state = 0x51ce_5eedu64;
        let mut rnd = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(7);
            (state >> 33) as i64
        };
        for _ in 0..200 {
            let len = 2 + (rnd() as usize) % 5;
            let vals: Vec<Rat> = (0..len)
                .map(|_| {
                    let v = rnd() % 400;
                    r(if v == 0 { 3 } else { v })
                })
                .collect();
            if let Verdict::Dependent(Witness::SquareProduct { subset, y }) =
                two_independent(&vals)
            {
                assert!(!subset.is_empty());
                let prod = subset.iter().fold(Rat::one(), |acc, &i| acc * &vals[i]);
                assert_eq!(&y * &y, prod);
            }
        }
    }

    #[test]
    fn permutation_invariance() {
        let vals = [r(6), r(10), r(-15), r(7)];
        let base = two_independent(&vals).is_independent();
        let perms: [[usize; 4]; 3] = [[3, 2, 1, 0], [1, 3, 0, 2], [2, 0, 3, 1]];
        for perm in perms {
            let permuted: Vec<Rat> = perm.iter().map(|&i| vals[i].clone()).collect();
            assert_eq!(two_independent(&permuted).is_independent(), base);
        }
    }

    #[test]
    fn square_scaling_invariance() {
        let vals = [r(-3), r(12), r(147)];
        for k in 1..=100i64 {
            let scaled: Vec<Rat> = vals
                .iter()
                .enumerate()
                .map(|(i, v)| if i == 1 { v * r(k * k) } else { v.clone() })
                .collect();
            assert_eq!(
                two_independent(&scaled).is_independent(),
                two_independent(&vals).is_independent()
            );
        }
    }
}
