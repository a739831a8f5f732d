//! Univariate polynomials over ℚ with exact Sturm sequences, and integer
//! root isolation for integer polynomials.
//!
//! Coefficients are stored in ascending order of degree.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type QPoly = Vec<BigRational>;

pub fn from_ints(c: &[BigInt]) -> QPoly {
    trim(c.iter().map(|v| BigRational::from_integer(v.clone())).collect())
}

pub fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn degree(p: &QPoly) -> Option<usize> {
    (!p.is_empty()).then(|| p.len() - 1)
}

pub fn derivative(p: &QPoly) -> QPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

/// Remainder of `a` divided by nonzero `b`.
pub fn rem(a: &QPoly, b: &QPoly) -> QPoly {
    let db = degree(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut r = a.clone();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let q = &r[dr] / &lead;
        for i in 0..=db {
            let v = &q * &b[i];
            r[dr - db + i] -= v;
        }
        r = trim(r);
    }
    r
}

/// Quotient of `a` by `b`, assuming exact division.
pub fn div_exact(a: &QPoly, b: &QPoly) -> QPoly {
    let db = degree(b).expect("division by zero polynomial");
    let mut r = a.clone();
    let da = match degree(&r) {
        Some(d) if d >= db => d,
        _ => return Vec::new(),
    };
    let mut q = vec![BigRational::zero(); da - db + 1];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &b[db];
        for i in 0..=db {
            let v = &c * &b[i];
            r[dr - db + i] -= v;
        }
        q[dr - db] = c;
        r = trim(r);
    }
    debug_assert!(r.is_empty(), "inexact polynomial division");
    trim(q)
}

pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

pub fn eval(p: &QPoly, x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Squarefree part `p / gcd(p, p')`.
pub fn squarefree_part(p: &QPoly) -> QPoly {
    let g = gcd(p, &derivative(p));
    if degree(&g).unwrap_or(0) == 0 {
        p.clone()
    } else {
        div_exact(p, &g)
    }
}

/// Sturm sequence of the squarefree part of `p`.
pub struct Sturm {
    seq: Vec<QPoly>,
}

impl Sturm {
    pub fn new(p: &QPoly) -> Self {
        let p0 = squarefree_part(p);
        let mut seq = vec![p0.clone()];
        let mut p1 = derivative(&p0);
        let mut prev = p0;
        while !p1.is_empty() {
            let r = rem(&prev, &p1);
            seq.push(p1.clone());
            prev = p1;
            p1 = r.into_iter().map(|c| -c).collect();
        }
        Sturm { seq }
    }

    fn changes(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0;
        let mut n = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
        n
    }

    fn sign(v: &BigRational) -> i32 {
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    }

    fn changes_at(&self, x: &BigRational) -> usize {
        Self::changes(self.seq.iter().map(|p| Self::sign(&eval(p, x))))
    }

    fn changes_at_infinity(&self, positive: bool) -> usize {
        Self::changes(self.seq.iter().map(|p| {
            let d = p.len() - 1;
            let s = Self::sign(&p[d]);
            if positive || d % 2 == 0 {
                s
            } else {
                -s
            }
        }))
    }

    /// Number of distinct real roots.
    pub fn count_all(&self) -> usize {
        if self.seq[0].len() <= 1 {
            return 0;
        }
        self.changes_at_infinity(false) - self.changes_at_infinity(true)
    }

    /// Distinct roots in the open interval `(a, b)`; neither endpoint may be a root.
    pub fn count_between(&self, a: &BigRational, b: &BigRational) -> usize {
        self.changes_at(a).saturating_sub(self.changes_at(b))
    }
}

/// Number of distinct real roots of an integer polynomial.
pub fn count_real_roots(coeffs: &[BigInt]) -> usize {
    let p = from_ints(coeffs);
    if p.len() <= 1 {
        return 0;
    }
    Sturm::new(&p).count_all()
}

fn eval_int(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn sign_at(p: &[BigInt], x: &BigInt) -> i32 {
    let v = eval_int(p, x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Integers `u` such that every real root of `p` lies in some `[u, u + 1]`.
/// Built recursively from the critical points, so `p` is monotone between
/// consecutive reported brackets.
fn root_brackets(p: &[BigInt]) -> Vec<BigInt> {
    let mut p = p.to_vec();
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    if p.len() <= 1 {
        return Vec::new();
    }
    let d = p.len() - 1;
    let lead = p[d].abs();
    let bound = p[..d].iter().map(|c| c.abs()).max().unwrap() / &lead + BigInt::from(2);
    let deriv: Vec<BigInt> = (1..=d).map(|i| &p[i] * BigInt::from(i)).collect();
    let mut marks: Vec<BigInt> = vec![-bound.clone(), bound];
    for u in root_brackets(&deriv) {
        marks.push(&u + BigInt::one());
        marks.push(u);
    }
    marks.sort();
    marks.dedup();
    let mut out = Vec::new();
    for w in marks.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        if hi - lo == BigInt::one() {
            out.push(lo.clone());
            continue;
        }
        let (slo, shi) = (sign_at(&p, lo), sign_at(&p, hi));
        if slo == 0 {
            out.push(lo.clone());
        }
        if shi == 0 {
            out.push(hi.clone());
        }
        if slo * shi >= 0 {
            continue;
        }
        // monotone with a sign change: bisect to a unit bracket
        let (mut a, mut b) = (lo.clone(), hi.clone());
        while &b - &a > BigInt::one() {
            let m: BigInt = (&a + &b) >> 1;
            let sm = sign_at(&p, &m);
            if sm == 0 {
                a = m;
                break;
            }
            if sm == slo {
                a = m;
            } else {
                b = m;
            }
        }
        out.push(a);
    }
    out.sort();
    out.dedup();
    out
}

/// Integer roots of a nonzero integer polynomial (ascending coefficients),
/// sorted and without repetition.
pub fn integer_roots(coeffs: &[BigInt]) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = Vec::new();
    for u in root_brackets(coeffs) {
        for x in [u.clone(), u + BigInt::one()] {
            if eval_int(coeffs, &x).is_zero() {
                out.push(x);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn real_root_counts() {
        // t^4 - 6t^2 + 1: four real roots.
        assert_eq!(count_real_roots(&ints(&[1, 0, -6, 0, 1])), 4);
        // t^4 + 1: none.
        assert_eq!(count_real_roots(&ints(&[1, 0, 0, 0, 1])), 0);
        // t^4 - 1: two.
        assert_eq!(count_real_roots(&ints(&[-1, 0, 0, 0, 1])), 2);
        // (t-1)^2 (t+2): two distinct.
        assert_eq!(count_real_roots(&ints(&[2, -3, 0, 1])), 2);
    }

    #[test]
    fn integer_root_examples() {
        // (x-3)(x+5)(x^2+7)
        let p = ints(&[-105, 14, -8, 2, 1]);
        assert_eq!(integer_roots(&p), ints(&[-5, 3]));
        assert!(integer_roots(&ints(&[-2, 0, 1])).is_empty());
        assert_eq!(integer_roots(&ints(&[0, 0, 1])), ints(&[0]));
        // large roots
        let r = BigInt::from(10i64.pow(15));
        let p = vec![-&r * &r, BigInt::zero(), BigInt::one()];
        assert_eq!(integer_roots(&p), vec![-r.clone(), r]);
    }

    #[test]
    fn integer_roots_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..3000 {
            let d = rng.gen_range(1..=4);
            // product of random linear and quadratic factors
            let mut p = ints(&[1]);
            let mut deg = 0;
            while deg < d {
                let f = if rng.gen_bool(0.5) || d - deg == 1 {
                    deg += 1;
                    ints(&[rng.gen_range(-12..=12), rng.gen_range(1..=3)])
                } else {
                    deg += 2;
                    ints(&[rng.gen_range(-12..=12), rng.gen_range(-12..=12), rng.gen_range(1..=3)])
                };
                let mut q = vec![BigInt::zero(); p.len() + f.len() - 1];
                for (i, a) in p.iter().enumerate() {
                    for (j, b) in f.iter().enumerate() {
                        q[i + j] += a * b;
                    }
                }
                p = q;
            }
            if p.iter().all(|c| c.is_zero()) {
                continue;
            }
            let brute: Vec<BigInt> = (-200..=200)
                .map(BigInt::from)
                .filter(|x| eval_int(&p, x).is_zero())
                .collect();
            assert_eq!(integer_roots(&p), brute, "{p:?}");
        }
    }
}
