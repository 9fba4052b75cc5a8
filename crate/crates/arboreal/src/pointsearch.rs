//! Bounded integral and rational point searches on `y^2 = f(x)` with
//! modular presieving.
//!
//! The presieve keeps, for each good odd prime p, the set of residues
//! (or residue pairs for rational search) where f can be a square mod p;
//! a candidate reaches the exact perfect-square test only if it survives
//! every prime. Each prime kills about half the candidates, so the
//! default eight primes let roughly 1/256 through. Searches verify the
//! paper-scale claims only up to the stated bound; nothing here proves a
//! list complete.

use crate::arith::{int_sqrt, maybe_square, parse_rat, BigInt, Rat};
use crate::curves::HyperCurve;
use crate::modp::Fp;
use crate::par::{chunk_ranges, map_ordered, Parallelism};
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A point on (the smooth model of) a hyperelliptic curve over Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurvePoint {
    Finite { x: Rat, y: Rat },
    /// On even-degree models with square leading coefficient: the branch
    /// where y/x^(g+1) tends to +sqrt(lc).
    InfinityPlus,
    InfinityMinus,
    /// The single point at infinity on odd-degree models.
    InfinityOdd,
}

impl Serialize for CurvePoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            kind: &'a str,
            #[serde(skip_serializing_if = "Option::is_none")]
            x: Option<String>,
            #[serde(skip_serializing_if = "Option::is_none")]
            y: Option<String>,
        }
        let repr = match self {
            CurvePoint::Finite { x, y } => Repr {
                kind: "finite",
                x: Some(x.to_string()),
                y: Some(y.to_string()),
            },
            CurvePoint::InfinityPlus => Repr { kind: "inf+", x: None, y: None },
            CurvePoint::InfinityMinus => Repr { kind: "inf-", x: None, y: None },
            CurvePoint::InfinityOdd => Repr { kind: "inf", x: None, y: None },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CurvePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            kind: String,
            x: Option<String>,
            y: Option<String>,
        }
        let r = Repr::deserialize(d)?;
        match r.kind.as_str() {
            "inf" => Ok(CurvePoint::InfinityOdd),
            "inf+" => Ok(CurvePoint::InfinityPlus),
            "inf-" => Ok(CurvePoint::InfinityMinus),
            "finite" => {
                let x = parse_rat(&r.x.ok_or_else(|| D::Error::custom("missing x"))?)
                    .map_err(D::Error::custom)?;
                let y = parse_rat(&r.y.ok_or_else(|| D::Error::custom("missing y"))?)
                    .map_err(D::Error::custom)?;
                Ok(CurvePoint::Finite { x, y })
            }
            k => Err(D::Error::custom(format!("unknown point kind {k:?}"))),
        }
    }
}

impl CurvePoint {
    pub fn finite_i64(x: i64, y: i64) -> CurvePoint {
        CurvePoint::Finite {
            x: Rat::from_integer(BigInt::from(x)),
            y: Rat::from_integer(BigInt::from(y)),
        }
    }

    pub fn finite_rat(xn: i64, xd: i64, yn: i64, yd: i64) -> CurvePoint {
        CurvePoint::Finite {
            x: Rat::new(BigInt::from(xn), BigInt::from(xd)),
            y: Rat::new(BigInt::from(yn), BigInt::from(yd)),
        }
    }

    fn sort_key(&self) -> (u8, Rat, Rat) {
        match self {
            CurvePoint::InfinityOdd => (0, Rat::zero(), Rat::zero()),
            CurvePoint::InfinityPlus => (0, Rat::zero(), Rat::from_integer(BigInt::from(1))),
            CurvePoint::InfinityMinus => (0, Rat::zero(), Rat::from_integer(BigInt::from(-1))),
            CurvePoint::Finite { x, y } => (1, x.clone(), -y.clone()),
        }
    }

    pub fn render(&self) -> String {
        match self {
            CurvePoint::InfinityOdd => "inf".into(),
            CurvePoint::InfinityPlus => "inf+".into(),
            CurvePoint::InfinityMinus => "inf-".into(),
            CurvePoint::Finite { x, y } => format!("({x}, {y})"),
        }
    }
}

fn sort_points(points: &mut Vec<CurvePoint>) {
    points.sort_by(|a, b| {
        let (ka, xa, ya) = a.sort_key();
        let (kb, xb, yb) = b.sort_key();
        ka.cmp(&kb)
            .then_with(|| xa.cmp(&xb))
            .then_with(|| ya.cmp(&yb))
    });
    points.dedup();
}

/// The smallest `count` odd primes of good reduction: p not dividing
/// disc(f) * lc(f).
pub fn default_presieve_primes(curve: &HyperCurve, count: usize) -> Vec<u64> {
    let disc_res = curve
        .f
        .resultant(&curve.f.derivative())
        .expect("squarefree curve");
    let lc = curve.f.lc();
    let mut out = Vec::new();
    let mut p = 3u64;
    while out.len() < count {
        if crate::arith::factor_int::<>(&BigInt::from(p))
            .map_or(false, |f| f.factors.len() == 1 && f.factors[0].1 == 1)
        {
            let pb = BigInt::from(p);
            if !(&disc_res % &pb).is_zero() && !(&lc % &pb).is_zero() {
                out.push(p);
            }
        }
        p += 2;
    }
    out
}

/// Residues x mod p where f(x) can be a square (chi != -1).
fn residue_filter(curve: &HyperCurve, p: u64) -> Vec<bool> {
    let fp = Fp::new(p);
    let fbar = crate::modp::FpPoly::from_int_poly(&curve.f, fp);
    (0..p)
        .map(|r| {
            let v = fbar.eval(r, fp);
            fp.chi(v) != fp.p - 1
        })
        .collect()
}

/// All integral points `(x, y)` with `|x| <= bound`, exact.
pub fn integral_points(curve: &HyperCurve, bound: i64, presieve: &[u64]) -> Vec<CurvePoint> {
    integral_points_with(curve, bound, presieve, Parallelism::default())
}

pub fn integral_points_with(
    curve: &HyperCurve,
    bound: i64,
    presieve: &[u64],
    mode: Parallelism,
) -> Vec<CurvePoint> {
    assert!(bound >= 1);
    let filters: Vec<(u64, Vec<bool>)> = presieve
        .iter()
        .map(|&p| (p, residue_filter(curve, p)))
        .collect();
    let ranges = chunk_ranges(-bound, bound + 1, 1 << 16);
    let chunks = map_ordered(mode, ranges, |(lo, hi)| {
        let mut found = Vec::new();
        'next: for x in lo..hi {
            for (p, allowed) in &filters {
                let r = (x.rem_euclid(*p as i64)) as usize;
                if !allowed[r] {
                    continue 'next;
                }
            }
            let v = curve.f.eval(&BigInt::from(x));
            if v.is_negative() || !maybe_square(&v) {
                continue;
            }
            let (root, exact) = int_sqrt(&v).expect("nonnegative");
            if exact {
                let xr = Rat::from_integer(BigInt::from(x));
                if root.is_zero() {
                    found.push(CurvePoint::Finite {
                        x: xr,
                        y: Rat::zero(),
                    });
                } else {
                    found.push(CurvePoint::Finite {
                        x: xr.clone(),
                        y: Rat::from_integer(root.clone()),
                    });
                    found.push(CurvePoint::Finite {
                        x: xr,
                        y: Rat::from_integer(-root),
                    });
                }
            }
        }
        found
    });
    let mut points: Vec<CurvePoint> = chunks.into_iter().flatten().collect();
    // soundness: re-verify every point on the exact equation
    for pt in &points {
        if let CurvePoint::Finite { x, y } = pt {
            assert!(curve.contains_affine(x, y));
        }
    }
    sort_points(&mut points);
    points
}

/// Pair filter table for the rational search: entry `a*p + b` says whether
/// the homogenized value N(a, b) can be a square mod p.
fn pair_filter(curve: &HyperCurve, p: u64, e: usize) -> Vec<bool> {
    let fp = Fp::new(p);
    let coeffs: Vec<u64> = curve
        .f
        .coeffs()
        .iter()
        .map(|c| fp.reduce_bigint(c))
        .collect();
    let d = coeffs.len() - 1;
    let mut table = vec![false; (p * p) as usize];
    for a in 0..p {
        for b in 0..p {
            // N = sum c_i a^i b^(2e-i)
            let mut acc = coeffs[d];
            let mut bp = 1u64;
            for i in (0..d).rev() {
                bp = fp.mul(bp, b);
                acc = fp.add(fp.mul(acc, a), fp.mul(coeffs[i], bp));
            }
            for _ in d..(2 * e) {
                acc = fp.mul(acc, b);
            }
            table[(a * p + b) as usize] = fp.chi(acc) != fp.p - 1;
        }
    }
    table
}

/// All rational points `x = a/b` in lowest terms with `|a|, b <= height`,
/// plus the points at infinity the model carries.
pub fn rational_points(curve: &HyperCurve, height: i64) -> Vec<CurvePoint> {
    rational_points_with(curve, height, true, Parallelism::default())
}

pub fn rational_points_with(
    curve: &HyperCurve,
    height: i64,
    presieve: bool,
    mode: Parallelism,
) -> Vec<CurvePoint> {
    assert!(height >= 1);
    let deg = curve.degree();
    let e = deg.div_ceil(2);
    let filters: Vec<(u64, Vec<bool>)> = if presieve {
        default_presieve_primes(curve, 8)
            .into_iter()
            .map(|p| (p, pair_filter(curve, p, e)))
            .collect()
    } else {
        Vec::new()
    };
    // denominator-first strata so partial results stream in height order
    let strata = chunk_ranges(1, height + 1, 8);
    let chunks = map_ordered(mode, strata, |(blo, bhi)| {
        let mut found = Vec::new();
        for b in blo..bhi {
            let bb = BigInt::from(b);
            'next_a: for a in -height..=height {
                if gcd_i64(a.unsigned_abs(), b as u64) != 1 {
                    continue;
                }
                for (p, table) in &filters {
                    let pa = a.rem_euclid(*p as i64) as u64;
                    let pb = (b as u64) % p;
                    if !table[(pa * p + pb) as usize] {
                        continue 'next_a;
                    }
                }
                let ab = BigInt::from(a);
                let n = curve.f.eval_homogeneous(&ab, &bb, 2 * e);
                if n.is_negative() || !maybe_square(&n) {
                    continue;
                }
                let (root, exact) = int_sqrt(&n).expect("nonnegative");
                if !exact {
                    continue;
                }
                let x = Rat::new(ab, bb.clone());
                let be = bb.pow(e as u32);
                if root.is_zero() {
                    found.push(CurvePoint::Finite {
                        x,
                        y: Rat::zero(),
                    });
                } else {
                    let y = Rat::new(root, be);
                    found.push(CurvePoint::Finite {
                        x: x.clone(),
                        y: -y.clone(),
                    });
                    found.push(CurvePoint::Finite { x, y });
                }
            }
        }
        found
    });
    let mut points: Vec<CurvePoint> = chunks.into_iter().flatten().collect();
    for pt in &points {
        if let CurvePoint::Finite { x, y } = pt {
            assert!(curve.contains_affine(x, y));
        }
    }
    points.extend(curve.infinity_points());
    sort_points(&mut points);
    points
}

fn gcd_i64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::IntPoly;

    fn curve(cs: &[i64]) -> HyperCurve {
        HyperCurve::new(IntPoly::from_i64s(cs)).unwrap()
    }

    #[test]
    fn consecutive_squares() {
        let c = curve(&[1, 0, 1]); // y^2 = x^2 + 1
        let pts = integral_points(&c, 10, &default_presieve_primes(&c, 4));
        assert_eq!(
            pts,
            vec![CurvePoint::finite_i64(0, 1), CurvePoint::finite_i64(0, -1)]
        );
    }

    #[test]
    fn quartic_twists_small_bound() {
        let f = IntPoly::from_i64s(&[4, 13, 13, 6, 1]);
        let base = HyperCurve::new(f).unwrap();
        let primes = |c: &HyperCurve| default_presieve_primes(c, 8);

        let e1 = base.clone();
        let pts = integral_points(&e1, 1000, &primes(&e1));
        assert_eq!(
            pts,
            vec![
                CurvePoint::finite_i64(-3, 1),
                CurvePoint::finite_i64(-3, -1),
                CurvePoint::finite_i64(0, 2),
                CurvePoint::finite_i64(0, -2),
            ]
        );

        let em2 = base.twist(&BigInt::from(-2)).unwrap();
        let pts = integral_points(&em2, 1000, &primes(&em2));
        assert_eq!(
            pts,
            vec![
                CurvePoint::finite_i64(-2, 2),
                CurvePoint::finite_i64(-2, -2),
            ]
        );
    }

    #[test]
    fn weierstrass_y_zero() {
        // y^2 = x^3 - x has (0,0), (1,0), (-1,0)
        let c = curve(&[0, -1, 0, 1]);
        let pts = integral_points(&c, 5, &default_presieve_primes(&c, 4));
        let zeros = pts
            .iter()
            .filter(|p| matches!(p, CurvePoint::Finite { y, .. } if y.is_zero()))
            .count();
        assert_eq!(zeros, 3);
    }

    #[test]
    fn rational_small() {
        // y^2 = x^2 + 1 over heights <= 5: (0, +-1), (3/4, +-5/4), (4/3, +-5/3), inf+-
        let c = curve(&[1, 0, 1]);
        let pts = rational_points(&c, 5);
        assert!(pts.contains(&CurvePoint::InfinityPlus));
        assert!(pts.contains(&CurvePoint::InfinityMinus));
        assert!(pts.contains(&CurvePoint::finite_rat(3, 4, 5, 4)));
        assert!(pts.contains(&CurvePoint::finite_rat(4, 3, -5, 3)));
        assert!(pts.contains(&CurvePoint::finite_i64(0, 1)));
    }

    #[test]
    fn presieve_equality_on_random_curves() {
        let mut state = 0xc0ffeeu64;
        let mut rnd = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(29);
            ((state >> 33) as i64 % 15) - 7
        };
        let mut done = 0;
        while done < 10 {
            let coeffs: Vec<i64> = (0..5).map(|_| rnd()).collect();
            let f = IntPoly::from_i64s(&coeffs);
            if f.is_zero() || f.deg().unwrap() < 2 || !f.is_squarefree() {
                continue;
            }
            done += 1;
            let c = HyperCurve::new(f).unwrap();
            let primes = default_presieve_primes(&c, 8);
            let sieved = integral_points_with(&c, 10_000, &primes, Parallelism::Sequential);
            let plain = integral_points_with(&c, 10_000, &[], Parallelism::Sequential);
            assert_eq!(sieved, plain);
        }
    }

    #[test]
    fn monotone_in_bound() {
        let c = curve(&[4, 13, 13, 6, 1]);
        let primes = default_presieve_primes(&c, 8);
        let small = integral_points(&c, 10, &primes);
        let large = integral_points(&c, 100, &primes);
        for p in &small {
            assert!(large.contains(p));
        }
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        let c = curve(&[4, 13, 13, 6, 1]);
        let primes = default_presieve_primes(&c, 8);
        let seq = integral_points_with(&c, 50_000, &primes, Parallelism::Sequential);
        let par = integral_points_with(&c, 50_000, &primes, Parallelism::Rayon);
        assert_eq!(seq, par);
        let seqr = rational_points_with(&c, 60, true, Parallelism::Sequential);
        let parr = rational_points_with(&c, 60, true, Parallelism::Rayon);
        assert_eq!(seqr, parr);
    }
}
