//! Binary quadratic and quartic forms, the substitution action of 2×2
//! integer matrices, and the classical invariants of a quartic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::ck::Ck;
use crate::error::{pre, Error, Result};
use crate::factor;
use crate::numth::gcd;
use crate::poly;

/// `a·x² + b·xy + c·y²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadraticForm {
    pub a: i128,
    pub b: i128,
    pub c: i128,
}

impl QuadraticForm {
    pub const fn new(a: i128, b: i128, c: i128) -> Self {
        QuadraticForm { a, b, c }
    }

    pub fn coeffs(&self) -> [i128; 3] {
        [self.a, self.b, self.c]
    }

    /// `b² − 4ac`.
    pub fn disc(&self) -> i128 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn content(&self) -> i128 {
        gcd(gcd(self.a, self.b), self.c)
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    pub fn is_positive_definite(&self) -> bool {
        self.disc() < 0 && self.a > 0
    }

    pub fn eval(&self, x: i128, y: i128) -> i128 {
        self.a * x * x + self.b * x * y + self.c * y * y
    }

    pub fn neg(&self) -> Self {
        QuadraticForm::new(-self.a, -self.b, -self.c)
    }

    /// Divides out the content; the zero form is returned unchanged.
    pub fn primitive_part(&self) -> Self {
        match self.content() {
            0 => *self,
            g => QuadraticForm::new(self.a / g, self.b / g, self.c / g),
        }
    }

    /// Gauss-reduced: `|b| ≤ a ≤ c`, with `b ≥ 0` if `|b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        self.b.abs() <= self.a
            && self.a <= self.c
            && (self.b >= 0 || (self.b.abs() != self.a && self.a != self.c))
    }

    /// `f(m1·x + m2·y, m3·x + m4·y)` for an arbitrary integer matrix.
    pub fn subst(&self, m: &Mat2) -> Result<Self> {
        let (a, b, c) = (Ck::new(self.a), Ck::new(self.b), Ck::new(self.c));
        let [t1, t2, t3, t4] = m.entries();
        let na = a * t1 * t1 + b * t1 * t3 + c * t3 * t3;
        let nb = a * 2 * t1 * t2 + b * (Ck::new(t1) * t4 + Ck::new(t2) * t3) + c * 2 * t3 * t4;
        let nc = a * t2 * t2 + b * t2 * t4 + c * t4 * t4;
        Ok(QuadraticForm::new(
            na.get("quadratic substitution")?,
            nb.get("quadratic substitution")?,
            nc.get("quadratic substitution")?,
        ))
    }

    /// The substitution action `f_T(x, y) = f(t1·x + t2·y, t3·x + t4·y)`.
    pub fn act(&self, t: &Unimodular) -> Result<Self> {
        self.subst(&t.0)
    }

    /// Whether `other` is a rational multiple of `self` (both nonzero).
    pub fn proportional(&self, other: &QuadraticForm) -> bool {
        !self.is_zero()
            && !other.is_zero()
            && self.a * other.b == self.b * other.a
            && self.a * other.c == self.c * other.a
            && self.b * other.c == self.c * other.b
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(&[self.a, self.b, self.c]))
    }
}

/// `a4·x⁴ + a3·x³y + a2·x²y² + a1·xy³ + a0·y⁴`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuarticForm {
    pub a4: i128,
    pub a3: i128,
    pub a2: i128,
    pub a1: i128,
    pub a0: i128,
}

impl QuarticForm {
    pub const fn new(a4: i128, a3: i128, a2: i128, a1: i128, a0: i128) -> Self {
        QuarticForm { a4, a3, a2, a1, a0 }
    }

    pub const fn from_coeffs(c: [i128; 5]) -> Self {
        QuarticForm::new(c[0], c[1], c[2], c[3], c[4])
    }

    /// Coefficients from `x⁴` down to `y⁴`.
    pub fn coeffs(&self) -> [i128; 5] {
        [self.a4, self.a3, self.a2, self.a1, self.a0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|&c| c == 0)
    }

    pub fn content(&self) -> i128 {
        self.coeffs().iter().fold(0, |g, &c| gcd(g, c))
    }

    pub fn height(&self) -> i128 {
        self.coeffs().iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        QuarticForm::from_coeffs(self.coeffs().map(|c| -c))
    }

    pub fn eval(&self, x: i128, y: i128) -> i128 {
        let [a4, a3, a2, a1, a0] = self.coeffs();
        let (x2, y2) = (x * x, y * y);
        a4 * x2 * x2 + a3 * x2 * x * y + a2 * x2 * y2 + a1 * x * y2 * y + a0 * y2 * y2
    }

    /// `F(m1·x + m2·y, m3·x + m4·y)` for an arbitrary integer matrix.
    pub fn subst(&self, m: &Mat2) -> Result<Self> {
        let [t1, t2, t3, t4] = m.entries().map(BigInt::from);
        let l1 = [t1, t2];
        let l2 = [t3, t4];
        let mut out = vec![BigInt::zero(); 5];
        for (i, &ai) in self.coeffs().iter().enumerate() {
            if ai == 0 {
                continue;
            }
            // a_i multiplies x^(4-i) y^i, i.e. L1^(4-i) L2^i.
            let mut term = vec![BigInt::from(ai)];
            for _ in 0..(4 - i) {
                term = mul_binary(&term, &l1);
            }
            for _ in 0..i {
                term = mul_binary(&term, &l2);
            }
            for (o, t) in out.iter_mut().zip(term) {
                *o += t;
            }
        }
        let mut c = [0i128; 5];
        for (ci, o) in c.iter_mut().zip(out) {
            *ci = o.to_i128().ok_or(Error::Overflow("quartic substitution"))?;
        }
        Ok(QuarticForm::from_coeffs(c))
    }

    /// The substitution action `F_T(x, y) = F(t1·x + t2·y, t3·x + t4·y)`.
    pub fn act(&self, t: &Unimodular) -> Result<Self> {
        self.subst(&t.0)
    }

    /// Coefficients as an integer polynomial in `t = x/y`, ascending.
    pub fn dehomogenized(&self) -> Vec<BigInt> {
        vec![
            BigInt::from(self.a0),
            BigInt::from(self.a1),
            BigInt::from(self.a2),
            BigInt::from(self.a3),
            BigInt::from(self.a4),
        ]
    }
}

impl fmt::Display for QuarticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(&self.coeffs()))
    }
}

/// Multiplies a binary form (coefficients from `x^d` down) by `l0·x + l1·y`.
fn mul_binary(p: &[BigInt], l: &[BigInt; 2]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i] += c * &l[0];
        out[i + 1] += c * &l[1];
    }
    out
}

/// Renders a binary form given by its coefficients from `x^d` down to `y^d`.
pub fn render(coeffs: &[i128]) -> String {
    let d = coeffs.len() - 1;
    let mut s = String::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mono = monomial(d - i, i);
        let mag = c.unsigned_abs();
        let body = if mono.is_empty() {
            mag.to_string()
        } else if mag == 1 {
            mono
        } else {
            format!("{mag}{mono}")
        };
        if s.is_empty() {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(if c < 0 { " - " } else { " + " });
        }
        s.push_str(&body);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn monomial(px: usize, py: usize) -> String {
    let part = |v: &str, e: usize| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    format!("{}{}", part("x", px), part("y", py))
}

/// A 2×2 integer matrix `[[t1, t2], [t3, t4]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mat2 {
    pub t1: i128,
    pub t2: i128,
    pub t3: i128,
    pub t4: i128,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::new(1, 0, 0, 1);

    pub const fn new(t1: i128, t2: i128, t3: i128, t4: i128) -> Self {
        Mat2 { t1, t2, t3, t4 }
    }

    pub fn entries(&self) -> [i128; 4] {
        [self.t1, self.t2, self.t3, self.t4]
    }

    pub fn det(&self) -> i128 {
        self.t1 * self.t4 - self.t2 * self.t3
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            self.t1 * o.t1 + self.t2 * o.t3,
            self.t1 * o.t2 + self.t2 * o.t4,
            self.t3 * o.t1 + self.t4 * o.t3,
            self.t3 * o.t2 + self.t4 * o.t4,
        )
    }

    /// Matrix times the column vector `(x, y)`.
    pub fn apply(&self, x: i128, y: i128) -> (i128, i128) {
        (self.t1 * x + self.t2 * y, self.t3 * x + self.t4 * y)
    }

    /// The adjugate, equal to `det · inverse`.
    pub fn adjugate(&self) -> Mat2 {
        Mat2::new(self.t4, -self.t2, -self.t3, self.t1)
    }

    pub fn max_abs(&self) -> i128 {
        self.entries().iter().map(|v| v.abs()).max().unwrap_or(0)
    }
}

/// An element of GL₂(ℤ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Unimodular(Mat2);

impl Unimodular {
    pub const IDENTITY: Unimodular = Unimodular(Mat2::IDENTITY);

    pub fn new(t1: i128, t2: i128, t3: i128, t4: i128) -> Result<Self> {
        Self::from_mat(Mat2::new(t1, t2, t3, t4))
    }

    pub fn from_mat(m: Mat2) -> Result<Self> {
        match m.det() {
            1 | -1 => Ok(Unimodular(m)),
            d => Err(Error::NotUnimodular(d)),
        }
    }

    pub fn mat(&self) -> &Mat2 {
        &self.0
    }

    pub fn entries(&self) -> [i128; 4] {
        self.0.entries()
    }

    pub fn det(&self) -> i128 {
        self.0.det()
    }

    /// Matrix product `self · other`; acting by it equals acting by `self` then `other`.
    pub fn compose(&self, other: &Unimodular) -> Unimodular {
        Unimodular(self.0.mul(&other.0))
    }

    pub fn inverse(&self) -> Unimodular {
        let adj = self.0.adjugate();
        let d = self.det();
        Unimodular(Mat2::new(adj.t1 * d, adj.t2 * d, adj.t3 * d, adj.t4 * d))
    }

    pub fn neg(&self) -> Unimodular {
        let [a, b, c, d] = self.entries();
        Unimodular(Mat2::new(-a, -b, -c, -d))
    }
}

/// `I`, `J` and `Δ = (4I³ − J²)/27`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantTriple {
    pub i: i128,
    pub j: i128,
    pub disc: i128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SplittingType {
    /// Four real linear factors.
    S1111,
    /// Two real linear factors and a definite quadratic.
    S112,
    /// No real linear factor.
    S22,
    /// Vanishing discriminant.
    Degenerate,
}

fn big_invariants(f: &QuarticForm) -> (BigInt, BigInt, BigInt) {
    let [a4, a3, a2, a1, a0] = f.coeffs().map(BigInt::from);
    let i = BigInt::from(12) * &a4 * &a0 - BigInt::from(3) * &a3 * &a1 + &a2 * &a2;
    let j = BigInt::from(72) * &a4 * &a2 * &a0 + BigInt::from(9) * &a3 * &a2 * &a1
        - BigInt::from(27) * &a4 * &a1 * &a1
        - BigInt::from(27) * &a0 * &a3 * &a3
        - BigInt::from(2) * &a2 * &a2 * &a2;
    let num = BigInt::from(4) * &i * &i * &i - &j * &j;
    let disc = &num / BigInt::from(27);
    assert!(
        (&disc * BigInt::from(27)) == num,
        "27 does not divide 4I^3 - J^2 for {f}"
    );
    (i, j, disc)
}

/// The invariants `I`, `J` and the discriminant.
pub fn invariants(f: &QuarticForm) -> Result<InvariantTriple> {
    let (i, j, d) = big_invariants(f);
    let conv = |v: BigInt| v.to_i128().ok_or(Error::Overflow("quartic invariants"));
    Ok(InvariantTriple {
        i: conv(i)?,
        j: conv(j)?,
        disc: conv(d)?,
    })
}

/// Sign of the discriminant, computed without overflow.
pub fn disc_sign(f: &QuarticForm) -> i32 {
    let (_, _, d) = big_invariants(f);
    match d.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// The Hessian covariant.
pub fn hessian(f: &QuarticForm) -> Result<QuarticForm> {
    let [a4, a3, a2, a1, a0] = f.coeffs().map(Ck::new);
    let h4 = a3 * a3 * 3 - a4 * a2 * 8;
    let h3 = (a3 * a2 - a4 * a1 * 6) * 4;
    let h2 = (a2 * a2 * 2 - a4 * a0 * 24 - a3 * a1 * 3) * 2;
    let h1 = (a2 * a1 - a3 * a0 * 6) * 4;
    let h0 = a1 * a1 * 3 - a2 * a0 * 8;
    let ctx = "hessian";
    Ok(QuarticForm::new(
        h4.get(ctx)?,
        h3.get(ctx)?,
        h2.get(ctx)?,
        h1.get(ctx)?,
        h0.get(ctx)?,
    ))
}

/// Square of a quadratic form, as a quartic.
pub fn square(q: &QuadraticForm) -> Result<QuarticForm> {
    let (a, b, c) = (Ck::new(q.a), Ck::new(q.b), Ck::new(q.c));
    let ctx = "square of quadratic";
    Ok(QuarticForm::new(
        (a * a).get(ctx)?,
        (a * b * 2).get(ctx)?,
        (b * b + a * c * 2).get(ctx)?,
        (b * c * 2).get(ctx)?,
        (c * c).get(ctx)?,
    ))
}

/// Product of two quadratic forms.
pub fn product(g: &QuadraticForm, h: &QuadraticForm) -> Result<QuarticForm> {
    let ctx = "product of quadratics";
    let (g2, g1, g0) = (Ck::new(g.a), Ck::new(g.b), Ck::new(g.c));
    Ok(QuarticForm::new(
        (g2 * h.a).get(ctx)?,
        (g2 * h.b + g1 * h.a).get(ctx)?,
        (g2 * h.c + g1 * h.b + g0 * h.a).get(ctx)?,
        (g1 * h.c + g0 * h.b).get(ctx)?,
        (g0 * h.c).get(ctx)?,
    ))
}

/// Integer square root of a quartic that is `±` a perfect square of a
/// quadratic with integer coefficients.
fn quartic_sqrt(p: &QuarticForm) -> Option<QuadraticForm> {
    let [p4, p3, p2, p1, p0] = p.coeffs();
    let root = |v: i128| -> Option<i128> {
        (v >= 0 && crate::numth::is_square(v)).then(|| crate::numth::isqrt(v))
    };
    let exact = |n: i128, d: i128| -> Option<i128> { (d != 0 && n % d == 0).then(|| n / d) };
    let q = if p4 != 0 {
        let a = root(p4)?;
        let b = exact(p3, 2 * a)?;
        let c = exact(p2 - b * b, 2 * a)?;
        QuadraticForm::new(a, b, c)
    } else if p2 != 0 {
        let b = root(p2)?;
        let c = exact(p1, 2 * b)?;
        QuadraticForm::new(0, b, c)
    } else {
        QuadraticForm::new(0, 0, root(p0)?)
    };
    (square(&q).ok()? == *p).then_some(q)
}

/// Normalizes the sign so that the first nonzero coefficient is positive.
fn orient(q: QuadraticForm) -> (QuadraticForm, i128) {
    let lead = [q.a, q.b, q.c].into_iter().find(|&v| v != 0).unwrap_or(1);
    if lead < 0 {
        (q.neg(), -1)
    } else {
        (q, 1)
    }
}

/// The Hessian divisor: primitive `f` and integer `c` with `H_F = c·f²`.
///
/// `f` has its first nonzero coefficient positive (so positive definite
/// divisors come out positive definite); the sign lives in `c`. Returns
/// `None` when the Hessian is not a constant times a square, or when
/// `Δ(F) = 0`.
pub fn hessian_sqrt(f: &QuarticForm) -> Option<(QuadraticForm, Ratio<i128>)> {
    if disc_sign(f) == 0 {
        return None;
    }
    let h = hessian(f).ok()?;
    let g = h.content();
    if g == 0 {
        return None;
    }
    let hp = QuarticForm::from_coeffs(h.coeffs().map(|c| c / g));
    for s in [1i128, -1] {
        let cand = QuarticForm::from_coeffs(hp.coeffs().map(|c| s * c));
        if let Some(q) = quartic_sqrt(&cand) {
            let (q, _) = orient(q);
            return Some((q, Ratio::from_integer(s * g)));
        }
    }
    None
}

/// Coefficients `(c1, c0)` of the resolvent `x³ + c1·x + c0 = x³ − 3I·x + J`.
pub fn cubic_resolvent(f: &QuarticForm) -> Result<(i128, i128)> {
    let inv = invariants(f)?;
    Ok(((Ck::new(inv.i) * -3).get("cubic resolvent")?, inv.j))
}

pub fn splitting_type(f: &QuarticForm) -> SplittingType {
    if disc_sign(f) == 0 {
        return SplittingType::Degenerate;
    }
    let finite = poly::count_real_roots(&f.dehomogenized());
    let at_infinity = usize::from(f.a4 == 0);
    match finite + at_infinity {
        4 => SplittingType::S1111,
        2 => SplittingType::S112,
        0 => SplittingType::S22,
        n => unreachable!("{n} real roots for a squarefree quartic {f}"),
    }
}

/// Whether `F` has no factor of degree 1 or 2 over ℚ.
pub fn is_irreducible_q(f: &QuarticForm) -> Result<bool> {
    if f.is_zero() {
        return Err(pre("zero form has no factorization"));
    }
    let c = f.coeffs();
    if c[0] == 0 || c[4] == 0 {
        return Ok(false);
    }
    factor::is_irreducible(&c)
}

#[cfg(test)]
mod tests {
    use super::*;

    const X4_6_1: QuarticForm = QuarticForm::new(1, 0, -6, 0, 1);
    const X4_Y4: QuarticForm = QuarticForm::new(1, 0, 0, 0, 1);

    #[test]
    fn invariant_examples() {
        let t = invariants(&X4_Y4).unwrap();
        assert_eq!((t.i, t.j, t.disc), (12, 0, 256));
        let t = invariants(&X4_6_1).unwrap();
        assert_eq!((t.i, t.j, t.disc), (48, 0, 16384));
        let t = invariants(&QuarticForm::new(0, 1, 0, 0, 0)).unwrap();
        assert_eq!((t.i, t.j, t.disc), (0, 0, 0));
    }

    #[test]
    fn hessian_examples() {
        assert_eq!(hessian(&X4_Y4).unwrap(), QuarticForm::new(0, 0, -48, 0, 0));
        assert_eq!(hessian(&X4_6_1).unwrap(), QuarticForm::new(48, 0, 96, 0, 48));
        assert_eq!(
            hessian(&QuarticForm::new(0, 0, 1, 0, 0)).unwrap(),
            QuarticForm::new(0, 0, 4, 0, 0)
        );
    }

    #[test]
    fn hessian_sqrt_examples() {
        let (f, c) = hessian_sqrt(&X4_6_1).unwrap();
        assert_eq!((f, c), (QuadraticForm::new(1, 0, 1), Ratio::from_integer(48)));
        let (f, c) = hessian_sqrt(&X4_Y4).unwrap();
        assert_eq!((f, c), (QuadraticForm::new(0, 1, 0), Ratio::from_integer(-48)));
        assert_eq!(hessian_sqrt(&QuarticForm::new(1, 1, 0, 0, 1)), None);
    }

    #[test]
    fn action_examples() {
        let t = Unimodular::new(1, 1, 0, 1).unwrap();
        let g = X4_Y4.act(&t).unwrap();
        assert_eq!(g, QuarticForm::new(1, 4, 6, 4, 2));
        assert_eq!(invariants(&g).unwrap().i, 12);
        assert_eq!(X4_Y4.act(&Unimodular::IDENTITY).unwrap(), X4_Y4);
        let swap = Unimodular::new(0, 1, 1, 0).unwrap();
        let f = QuadraticForm::new(1, 0, 1);
        assert_eq!(f.act(&swap).unwrap(), f);
        assert!(Unimodular::new(2, 0, 0, 1).is_err());
    }

    #[test]
    fn resolvent_examples() {
        assert_eq!(cubic_resolvent(&X4_6_1).unwrap(), (-144, 0));
        assert_eq!(cubic_resolvent(&X4_Y4).unwrap(), (-36, 0));
        assert_eq!(cubic_resolvent(&QuarticForm::new(0, 1, 0, 0, 0)).unwrap(), (0, 0));
    }

    #[test]
    fn splitting_examples() {
        assert_eq!(splitting_type(&X4_6_1), SplittingType::S1111);
        assert_eq!(splitting_type(&X4_Y4), SplittingType::S22);
        assert_eq!(splitting_type(&QuarticForm::new(1, 0, 0, 0, -1)), SplittingType::S112);
        assert_eq!(splitting_type(&QuarticForm::new(0, 1, 0, -1, 0)), SplittingType::S1111);
        assert_eq!(splitting_type(&QuarticForm::new(0, 1, 0, 0, 0)), SplittingType::Degenerate);
    }

    #[test]
    fn irreducibility_examples() {
        // (x^2 + 2xy - y^2)(x^2 - 2xy - y^2): no rational root, but it splits.
        assert!(!is_irreducible_q(&X4_6_1).unwrap());
        assert!(is_irreducible_q(&QuarticForm::new(1, 0, 0, 0, -2)).unwrap());
        assert!(!is_irreducible_q(&QuarticForm::new(1, 4, 0, -4, -1)).unwrap());
        assert!(!is_irreducible_q(&QuarticForm::new(1, 0, 0, 0, -1)).unwrap());
        assert!(is_irreducible_q(&X4_Y4).unwrap());
        // x^4 + 4y^4 = (x^2 + 2xy + 2y^2)(x^2 - 2xy + 2y^2)
        assert!(!is_irreducible_q(&QuarticForm::new(1, 0, 0, 0, 4)).unwrap());
        assert!(!is_irreducible_q(&QuarticForm::new(0, 1, 0, 0, 1)).unwrap());
        assert!(is_irreducible_q(&QuarticForm::new(0, 0, 0, 0, 0)).is_err());
    }

    #[test]
    fn reduced_predicate() {
        assert!(QuadraticForm::new(2, 1, 3).is_reduced());
        assert!(QuadraticForm::new(2, -1, 3).is_reduced());
        assert!(!QuadraticForm::new(2, -2, 3).is_reduced());
        assert!(!QuadraticForm::new(3, -1, 3).is_reduced());
        assert!(QuadraticForm::new(1, 1, 1).is_reduced());
    }

    #[test]
    fn rendering() {
        assert_eq!(X4_6_1.to_string(), "x^4 - 6x^2y^2 + y^4");
        assert_eq!(QuadraticForm::new(-2, 1, 0).to_string(), "-2x^2 + xy");
        assert_eq!(QuarticForm::new(0, 0, 0, 0, 0).to_string(), "0");
    }
}
