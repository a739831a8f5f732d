//! Reduction theory and class-group arithmetic of binary quadratic forms.
//!
//! Positive definite forms are handled by Gauss reduction. Reducible forms
//! of square discriminant `n²` get their own canonical shape `x·(a·x + n·y)`.

use serde::{Deserialize, Serialize};

use crate::error::{pre, Error, Result};
use crate::factor::factor_form;
use crate::forms::{Mat2, QuadraticForm, Unimodular};
use crate::numth::{egcd, euler_phi, gcd, gcd3, iroot4, is_square, isqrt, mod_inv, ZETA3};

/// Reduces a positive definite form, returning `(g, T)` with `f_T = g`.
pub fn reduce(f: &QuadraticForm) -> Result<(QuadraticForm, Unimodular)> {
    if !f.is_positive_definite() {
        return Err(Error::NotPositiveDefinite(f.to_string()));
    }
    let swap = Unimodular::new(0, -1, 1, 0)?;
    let mut g = *f;
    let mut t = Unimodular::IDENTITY;
    loop {
        if !(-g.a < g.b && g.b <= g.a) {
            let k = (g.a - g.b).div_euclid(2 * g.a);
            let step = Unimodular::new(1, k, 0, 1)?;
            g = g.act(&step)?;
            t = t.compose(&step);
        }
        if g.a > g.c || (g.a == g.c && g.b < 0) {
            g = g.act(&swap)?;
            t = t.compose(&swap);
            continue;
        }
        return Ok((g, t));
    }
}

/// Primitive reduced forms of discriminant `−d`, ordered by `a`, then `|b|`,
/// positive `b` first.
pub fn enumerate_reduced(d: i128) -> Vec<QuadraticForm> {
    if d <= 0 || !matches!(d % 4, 0 | 3) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut a = 1;
    while 3 * a * a <= d {
        let start = d % 2;
        let mut b = start;
        while b <= a {
            let num = b * b + d;
            if num % (4 * a) == 0 {
                let c = num / (4 * a);
                if c >= a {
                    let signs: &[i128] = if b == 0 || b == a || a == c { &[1] } else { &[1, -1] };
                    for &sg in signs {
                        let bb = sg * b;
                        if gcd3(a, bb, c) == 1 {
                            out.push(QuadraticForm::new(a, bb, c));
                        }
                    }
                }
            }
            b += 2;
        }
        a += 1;
    }
    out
}

pub fn class_number(d: i128) -> usize {
    enumerate_reduced(d).len()
}

/// Reduced primitive forms with `a ≤ D^{1/4}`.
pub fn h2_star(d: i128) -> usize {
    let bound = iroot4(d);
    enumerate_reduced(d).iter().filter(|f| f.a <= bound).count()
}

/// The principal form of discriminant `−d`.
pub fn principal_form(d: i128) -> QuadraticForm {
    let b = d % 2;
    QuadraticForm::new(1, b, (b + d) / 4)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group {
    Sl2,
    Gl2,
}

/// An equivalence class of positive definite forms, stored by its reduced
/// representative. For `Gl2` classes the representative has `b ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FormClass {
    pub rep: QuadraticForm,
    pub disc: i128,
    pub group: Group,
}

impl FormClass {
    pub fn new(f: &QuadraticForm, group: Group) -> Result<Self> {
        let (mut rep, _) = reduce(f)?;
        if group == Group::Gl2 {
            rep.b = rep.b.abs();
        }
        Ok(FormClass { rep, disc: rep.disc(), group })
    }

    pub fn sl2(f: &QuadraticForm) -> Result<Self> {
        Self::new(f, Group::Sl2)
    }

    pub fn principal(d: i128) -> Self {
        let rep = principal_form(d);
        FormClass { rep, disc: -d, group: Group::Sl2 }
    }

    pub fn is_principal(&self) -> bool {
        self.rep.a == 1
    }

    pub fn to_gl2(&self) -> Self {
        let mut rep = self.rep;
        rep.b = rep.b.abs();
        FormClass { rep, disc: self.disc, group: Group::Gl2 }
    }
}

fn check_composable(c1: &FormClass, c2: &FormClass) -> Result<()> {
    if c1.disc != c2.disc {
        return Err(Error::DiscriminantMismatch(c1.disc, c2.disc));
    }
    for c in [c1, c2] {
        if !c.rep.is_primitive() {
            return Err(Error::NotPrimitive(c.rep.to_string()));
        }
        if c.group != Group::Sl2 {
            return Err(pre("composition needs SL2 classes"));
        }
    }
    Ok(())
}

/// Gauss composition of two primitive forms of the same discriminant, before
/// reduction (Shanks' arrangement of Dirichlet composition).
pub fn compose_forms(f1: &QuadraticForm, f2: &QuadraticForm) -> Result<QuadraticForm> {
    let (f1, f2) = if f1.a > f2.a { (f2, f1) } else { (f1, f2) };
    let disc = f1.disc();
    let s = (f1.b + f2.b) / 2;
    let n = f2.b - s;
    let (y1, d) = if f2.a % f1.a == 0 {
        (0, f1.a)
    } else {
        let (d, u, _) = egcd(f2.a, f1.a);
        (u, d)
    };
    let (x2, y2, d1) = if s % d == 0 {
        (0, -1, d)
    } else {
        let (d1, u, v) = egcd(s, d);
        (u, -v, d1)
    };
    let v1 = f1.a / d1;
    let v2 = f2.a / d1;
    let r = (y1 * y2 * n - x2 * f2.c).rem_euclid(v1);
    let b3 = f2.b + 2 * v2 * r;
    let a3 = v1 * v2;
    let num = b3 * b3 - disc;
    if num % (4 * a3) != 0 {
        return Err(Error::Invariant(format!("composition of {f1} and {f2} is not integral")));
    }
    Ok(QuadraticForm::new(a3, b3, num / (4 * a3)))
}

pub fn compose(c1: &FormClass, c2: &FormClass) -> Result<FormClass> {
    check_composable(c1, c2)?;
    FormClass::sl2(&compose_forms(&c1.rep, &c2.rep)?)
}

pub fn inverse(c: &FormClass) -> FormClass {
    let f = QuadraticForm::new(c.rep.a, -c.rep.b, c.rep.c);
    FormClass::new(&f, c.group).expect("inverse of a reduced form is positive definite")
}

pub fn pow(c: &FormClass, k: i64) -> Result<FormClass> {
    let mut base = if k < 0 { inverse(c) } else { *c };
    let mut e = k.unsigned_abs();
    let mut acc = FormClass::principal(-c.disc);
    while e > 0 {
        if e & 1 == 1 {
            acc = compose(&acc, &base)?;
        }
        base = compose(&base, &base)?;
        e >>= 1;
    }
    Ok(acc)
}

pub fn order(c: &FormClass) -> Result<u64> {
    let mut acc = *c;
    let mut k = 1;
    while !acc.is_principal() {
        acc = compose(&acc, c)?;
        k += 1;
    }
    Ok(k)
}

/// The primitive SL₂ classes of one discriminant.
#[derive(Debug, Clone)]
pub struct ClassGroup {
    pub disc: i128,
    pub elements: Vec<FormClass>,
}

impl ClassGroup {
    pub fn new(d: i128) -> Result<Self> {
        if d <= 0 || !matches!(d % 4, 0 | 3) {
            return Err(pre(format!("{d} is not a positive discriminant magnitude ≡ 0,3 mod 4")));
        }
        let elements = enumerate_reduced(d)
            .into_iter()
            .map(|rep| FormClass { rep, disc: -d, group: Group::Sl2 })
            .collect();
        Ok(ClassGroup { disc: -d, elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, c: &FormClass) -> Option<usize> {
        self.elements.iter().position(|e| e.rep == c.rep)
    }

    /// `table[i][j]` is the index of `elements[i] ∘ elements[j]`.
    pub fn composition_table(&self) -> Result<Vec<Vec<usize>>> {
        self.elements
            .iter()
            .map(|a| {
                self.elements
                    .iter()
                    .map(|b| {
                        let c = compose(a, b)?;
                        self.index_of(&c)
                            .ok_or_else(|| Error::Invariant(format!("{} not in group", c.rep)))
                    })
                    .collect()
            })
            .collect()
    }
}

/// Ambiguity of a positive definite class, read off the reduced representative.
pub fn is_ambiguous(c: &FormClass) -> bool {
    let f = c.rep;
    f.b == 0 || f.a == f.b || f.a == f.c
}

/// No positive definite form is opaque: an opaque translate `g₂x² + g₁xy − g₂y²`
/// has discriminant `g₁² + 4g₂² ≥ 0`.
pub fn is_opaque(_c: &FormClass) -> bool {
    false
}

/// Number of family points per GL₂ orbit for a positive definite class.
pub fn cover_multiplicity(c: &FormClass) -> u32 {
    let f = c.rep;
    if f == QuadraticForm::new(1, 1, 1) {
        6
    } else if is_ambiguous(c) {
        2
    } else {
        1
    }
}

/// Canonical representatives `a·x² + n·xy`, `1 ≤ a ≤ n`, `gcd(a, n) = 1`, of
/// the SL₂ classes of discriminant `n²`. For `n = 1` this is the single form
/// `x² + xy`.
pub fn reducible_class_reps(n: i128) -> Vec<QuadraticForm> {
    (1..=n.max(1))
        .filter(|&a| gcd(a, n) == 1 && (a < n || n == 1))
        .map(|a| QuadraticForm::new(a, n, 0))
        .collect()
}

/// A reducible form brought to `sign · x·(a·x + n·y)` by `T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducibleCanon {
    pub n: i128,
    pub a: i128,
    pub sign: i128,
    pub transform: Unimodular,
}

impl ReducibleCanon {
    pub fn form(&self) -> QuadraticForm {
        QuadraticForm::new(self.a, self.n, 0)
    }
}

fn residue_1n(u: i128, n: i128) -> i128 {
    (u - 1).rem_euclid(n) + 1
}

/// All ways to write `f_T = sign · x(a·x + n·y)` with `1 ≤ a ≤ n`, one per
/// choice of leading linear factor and orientation.
fn reducible_shapes(f: &QuadraticForm) -> Result<Vec<ReducibleCanon>> {
    let d = f.disc();
    if d <= 0 || !is_square(d) || !f.is_primitive() {
        return Err(pre(format!("{f} is not a primitive form of nonzero square discriminant")));
    }
    let n = isqrt(d);
    let fac = factor_form(&f.coeffs())?;
    let mut linear: Vec<(i128, i128)> = Vec::new();
    for (l, m) in &fac.factors {
        for _ in 0..*m {
            linear.push((l[0], l[1]));
        }
    }
    if linear.len() != 2 {
        return Err(Error::Invariant(format!("{f} did not split into linear factors")));
    }
    let flip = Unimodular::new(1, 0, 0, -1)?;
    let mut out = Vec::new();
    for &(p, q) in &linear {
        let (g, s1, s3) = egcd(p, q);
        debug_assert_eq!(g, 1);
        let s = Unimodular::new(s1, -q, s3, p)?;
        let mut t = s;
        let mut g = f.act(&t)?;
        // g = sign·x·(u x + v y): g.c = 0.
        if g.b < 0 {
            t = t.compose(&flip);
            g = f.act(&t)?;
        }
        for variant in 0..2 {
            let (mut tt, mut gg) = (t, g);
            if variant == 1 {
                tt = tt.compose(&flip);
                gg = f.act(&tt)?;
                // gg = sign·x(u x − n y) = −sign·x(−u x + n y)
            }
            let sign = if gg.b > 0 { 1 } else { -1 };
            let u = gg.a * sign;
            let a = residue_1n(u, n);
            let k = (a - u) / n;
            let tr = Unimodular::new(1, 0, k, 1)?;
            tt = tt.compose(&tr);
            let fin = f.act(&tt)?;
            debug_assert_eq!(fin, QuadraticForm::new(sign * a, sign * n, 0));
            out.push(ReducibleCanon { n, a, sign, transform: tt });
        }
    }
    Ok(out)
}

/// Canonical shape of a reducible primitive form up to GL₂ action and sign:
/// the least `a` among the four shapes.
pub fn reducible_canonical(f: &QuadraticForm) -> Result<ReducibleCanon> {
    let shapes = reducible_shapes(f)?;
    Ok(*shapes.iter().min_by_key(|c| (c.a, -c.sign)).unwrap())
}

/// GL₂ class of a reducible form (sign-sensitive), as `(n, sign, a)` minimized.
pub fn reducible_gl2_key(f: &QuadraticForm) -> Result<(i128, i128, i128)> {
    let shapes = reducible_shapes(f)?;
    Ok(shapes.iter().map(|c| (c.n, -c.sign, c.a)).min().unwrap())
}

/// Definition search: a GL₂ translate `g₂x² + g₁xy + g₀y²` with `g₂ | g₁`.
/// Up to translation `x ↦ x + ky` such a translate has `g₁ ∈ {0, g₂}`, so the
/// candidates are finite.
pub fn reducible_is_ambiguous(f: &QuadraticForm) -> Result<bool> {
    let key = reducible_gl2_key(f)?;
    let n = key.0;
    let n2 = n * n;
    let mut cands = Vec::new();
    for g2 in divisors_signed(n2) {
        if n % 2 == 0 && (n2 / 4) % g2 == 0 {
            cands.push(QuadraticForm::new(g2, 0, -(n2 / 4) / g2));
        }
        let num = g2 - n2 / g2;
        if num % 4 == 0 {
            cands.push(QuadraticForm::new(g2, g2, num / 4));
        }
    }
    Ok(cands
        .into_iter()
        .filter(|g| g.is_primitive() && g.disc() == n2)
        .any(|g| reducible_gl2_key(&g).ok() == Some(key)))
}

/// Definition search: a GL₂ translate `g₂x² + g₁xy − g₂y²`; these have
/// discriminant `g₁² + 4g₂² = n²`, a finite set.
pub fn reducible_is_opaque(f: &QuadraticForm) -> Result<bool> {
    let key = reducible_gl2_key(f)?;
    let n = key.0;
    let mut found = false;
    for g2 in -n..=n {
        let rest = n * n - 4 * g2 * g2;
        if rest < 0 || !is_square(rest) {
            continue;
        }
        let r = isqrt(rest);
        for g1 in [r, -r] {
            let g = QuadraticForm::new(g2, g1, -g2);
            if g.is_primitive() && reducible_gl2_key(&g).ok() == Some(key) {
                found = true;
            }
        }
    }
    Ok(found)
}

pub fn reducible_cover_multiplicity(f: &QuadraticForm) -> Result<u32> {
    let amb = reducible_is_ambiguous(f)?;
    let opq = reducible_is_opaque(f)?;
    Ok(match (amb, opq) {
        (true, true) => 4,
        (false, false) => 1,
        _ => 2,
    })
}

fn divisors_signed(m: i128) -> Vec<i128> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            out.extend([d, -d]);
            if d * d != m {
                out.extend([m / d, -(m / d)]);
            }
        }
        d += 1;
    }
    out
}

/// Orbit representatives of `a ↦ {±a, ±a⁻¹}` on `(ℤ/n)^*`, i.e. one
/// representative per class of reducible Hessian divisor up to GL₂ and sign.
pub fn reducible_divisor_reps(n: i128) -> Vec<QuadraticForm> {
    reducible_class_reps(n)
        .into_iter()
        .filter(|f| {
            let a = f.a;
            if n == 1 {
                return true;
            }
            let inv = mod_inv(a, n).expect("unit");
            let orbit = [a, inv, n - a, n - inv].map(|v| residue_1n(v, n));
            orbit.iter().all(|&v| v >= a)
        })
        .collect()
}

/// Class numbers `h₂(−D)` for every `D ≤ x`, indexed by `D`.
pub fn class_numbers_up_to(x: i128) -> Vec<u64> {
    let mut h = vec![0u64; (x + 1) as usize];
    for_each_reduced_up_to(x, |f| h[(-f.disc()) as usize] += 1);
    h
}

/// Visits every primitive reduced form with `D ≤ x`.
pub fn for_each_reduced_up_to(x: i128, mut visit: impl FnMut(QuadraticForm)) {
    let mut a = 1;
    while 3 * a * a <= x {
        for b in (1 - a)..=a {
            // 4ac − b² ≤ x, c ≥ a
            let mut c = a;
            while 4 * a * c - b * b <= x {
                let boundary_ok = b >= 0 || (b != -a && a != c);
                if boundary_ok && gcd3(a, b, c) == 1 {
                    visit(QuadraticForm::new(a, b, c));
                }
                c += 1;
            }
        }
        a += 1;
    }
}

/// Exact class-number sums against the asymptotic main terms.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassNumberSumReport {
    pub x: i128,
    pub full_sum: u64,
    pub four_divides_sum: u64,
    pub full_main_term: f64,
    pub four_divides_main_term: f64,
    pub full_ratio: f64,
    pub four_divides_ratio: f64,
    /// Whether the 4|D ratio falls outside `[0.8, 1.2]`.
    pub four_divides_flagged: bool,
}

pub fn class_number_sum_report(x: i128) -> Result<ClassNumberSumReport> {
    if x < 100 {
        return Err(pre("class_number_sum_report needs X ≥ 100"));
    }
    let h = class_numbers_up_to(x);
    let full_sum: u64 = h.iter().sum();
    let four_divides_sum: u64 = h.iter().step_by(4).sum();
    let x32 = (x as f64).powf(1.5);
    let pi = std::f64::consts::PI;
    let full_main_term = pi / (18.0 * ZETA3) * x32;
    let four_divides_main_term = pi / (42.0 * ZETA3) * x32;
    let four_divides_ratio = four_divides_sum as f64 / four_divides_main_term;
    Ok(ClassNumberSumReport {
        x,
        full_sum,
        four_divides_sum,
        full_main_term,
        four_divides_main_term,
        full_ratio: full_sum as f64 / full_main_term,
        four_divides_ratio,
        four_divides_flagged: !(0.8..=1.2).contains(&four_divides_ratio),
    })
}

/// `φ(n)` via factorization, exposed for reporting next to the class count.
pub fn reducible_class_count(n: i128) -> i128 {
    euler_phi(n)
}

/// Automorphisms `T ∈ GL₂(ℤ)` with `f_T = ±f`, for a reduced positive definite
/// or canonical reducible form. Entries are searched in `[-bound, bound]`.
pub fn sign_automorphisms(f: &QuadraticForm, bound: i128) -> Vec<Unimodular> {
    let mut out = Vec::new();
    for t1 in -bound..=bound {
        for t2 in -bound..=bound {
            for t3 in -bound..=bound {
                for t4 in -bound..=bound {
                    let m = Mat2::new(t1, t2, t3, t4);
                    let Ok(t) = Unimodular::from_mat(m) else { continue };
                    if let Ok(g) = f.act(&t) {
                        if g == *f || g == f.neg() {
                            out.push(t);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Exact automorphism group `{T : f_T = ±f}` of `x·(a·x + n·y)`.
pub fn reducible_sign_automorphisms(f: &QuadraticForm) -> Vec<Unimodular> {
    let (a, n) = (f.a, f.b);
    let mut out = Vec::new();
    for lam in [1i128, -1] {
        for mu in [1i128, -1] {
            // Both linear factors fixed up to sign.
            if (a * (mu - lam)) % n == 0 {
                out.push(Unimodular::new(lam, 0, a * (mu - lam) / n, mu));
            }
            // Linear factors exchanged.
            if (mu - lam * a * a) % n == 0 {
                out.push(Unimodular::new(lam * a, lam * n, (mu - lam * a * a) / n, -lam * a));
            }
        }
    }
    let mut v: Vec<Unimodular> = out
        .into_iter()
        .filter_map(|t| t.ok())
        .filter(|t| f.act(t).is_ok_and(|g| g == *f || g == f.neg()))
        .collect();
    v.sort();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i128, b: i128, c: i128) -> QuadraticForm {
        QuadraticForm::new(a, b, c)
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&q(1, 1, 1)).unwrap(), (q(1, 1, 1), Unimodular::IDENTITY));
        // The boundary convention sends 2x² − 2xy + 3y² on to 2x² + 2xy + 3y².
        assert_eq!(reduce(&q(3, 2, 2)).unwrap().0, q(2, 2, 3));
        assert_eq!(reduce(&q(5, 7, 3)).unwrap().0, q(1, 1, 3));
        assert!(reduce(&q(1, 3, 1)).is_err());
        let f = q(123, 457, 429);
        let (g, t) = reduce(&f).unwrap();
        assert_eq!(f.act(&t).unwrap(), g);
        assert!(g.is_reduced());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_reduced(3), vec![q(1, 1, 1)]);
        assert_eq!(enumerate_reduced(23), vec![q(1, 1, 6), q(2, 1, 3), q(2, -1, 3)]);
        assert_eq!(enumerate_reduced(20), vec![q(1, 0, 5), q(2, 2, 3)]);
        assert!(enumerate_reduced(21).is_empty());
        assert_eq!(class_number(23), 3);
        assert_eq!(h2_star(23), 3);
        assert_eq!(class_number(4), 1);
        // Classical values.
        for (d, h) in [(47, 5), (71, 7), (163, 1), (56, 4), (84, 4), (12, 1), (108, 3)] {
            assert_eq!(class_number(d), h, "h(-{d})");
        }
    }

    #[test]
    fn composition_examples() {
        let g = ClassGroup::new(23).unwrap();
        let p = FormClass::principal(23);
        let c = FormClass::sl2(&q(2, 1, 3)).unwrap();
        assert_eq!(compose(&p, &c).unwrap(), c);
        assert_eq!(compose(&c, &c).unwrap().rep, q(2, -1, 3));
        assert_eq!(inverse(&c).rep, q(2, -1, 3));
        assert_eq!(order(&c).unwrap(), 3);
        assert_eq!(pow(&c, 3).unwrap(), p);
        assert_eq!(pow(&c, -1).unwrap(), inverse(&c));
        assert_eq!(g.composition_table().unwrap()[1][1], 2);
    }

    #[test]
    fn ambiguity_examples() {
        let c = FormClass::sl2(&q(1, 1, 1)).unwrap();
        assert!(is_ambiguous(&c));
        assert_eq!(cover_multiplicity(&c), 6);
        let c = FormClass::sl2(&q(1, 0, 1)).unwrap();
        assert!(is_ambiguous(&c) && !is_opaque(&c));
        assert_eq!(cover_multiplicity(&c), 2);
        let c = FormClass::sl2(&q(2, 1, 3)).unwrap();
        assert!(!is_ambiguous(&c));
        assert_eq!(cover_multiplicity(&c), 1);
    }

    #[test]
    fn reducible_examples() {
        assert_eq!(reducible_class_reps(6), vec![q(1, 6, 0), q(5, 6, 0)]);
        assert_eq!(reducible_class_reps(2), vec![q(1, 2, 0)]);
        assert_eq!(
            reducible_class_reps(12).iter().map(|f| f.a).collect::<Vec<_>>(),
            vec![1, 5, 7, 11]
        );
        assert_eq!(reducible_class_reps(1), vec![q(1, 1, 0)]);
        for n in 1..200 {
            assert_eq!(reducible_class_reps(n).len() as i128, euler_phi(n));
        }
    }

    #[test]
    fn reducible_canonical_shapes() {
        // (2x + 3y)(5x + 7y): discriminant 1.
        let f = q(10, 29, 21);
        let c = reducible_canonical(&f).unwrap();
        assert_eq!((c.n, c.a), (1, 1));
        assert_eq!(f.act(&c.transform).unwrap(), QuadraticForm::new(c.sign, c.sign, 0));
        // 3x² + 7xy: n = 7, a ∈ {3, 5, 4, 2} → 2.
        let c = reducible_canonical(&q(3, 7, 0)).unwrap();
        assert_eq!((c.n, c.a), (7, 2));
        assert_eq!(
            q(3, 7, 0).act(&c.transform).unwrap(),
            QuadraticForm::new(2 * c.sign, 7 * c.sign, 0)
        );
    }

    #[test]
    fn reducible_multiplicities() {
        // x² + xy is ambiguous and opaque (xy is a translate).
        assert_eq!(reducible_cover_multiplicity(&q(1, 1, 0)).unwrap(), 4);
        assert!(reducible_is_ambiguous(&q(1, 5, 0)).unwrap());
        // 2x² + 5xy = (2x − y)... equivalent to 2x² + 3xy − 2y².
        assert!(reducible_is_opaque(&q(2, 5, 0)).unwrap());
        assert!(!reducible_is_ambiguous(&q(3, 7, 0)).unwrap());
        assert!(!reducible_is_opaque(&q(3, 7, 0)).unwrap());
    }

    #[test]
    fn class_number_sums() {
        let r = class_number_sum_report(1000).unwrap();
        let direct: usize = (1..=1000).map(class_number).sum();
        assert_eq!(r.full_sum as usize, direct);
        let four: usize = (1..=250).map(|k| class_number(4 * k)).sum();
        assert_eq!(r.four_divides_sum as usize, four);
    }
}
