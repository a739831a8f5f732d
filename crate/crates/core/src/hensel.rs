//! Split primes, their congruence lattices and Hensel lifts, and the
//! auxiliary forms `w(f)`, `ν(f)`, `ξ(f)` obtained by transporting a form to
//! a sublattice.

use serde::{Deserialize, Serialize};

use crate::classes::{compose, inverse, order, pow, reduce, FormClass, Group};
use crate::error::{pre, Error, Result};
use crate::forms::{Mat2, QuadraticForm, Unimodular};
use crate::lattice::SubLattice;
use crate::numth::{factorize, is_prime, legendre, mod_inv, primes_up_to, sqrt_mod_prime};

/// `f_T = p·x² + m·xy + n·y²` with `p` the least odd prime represented by `f`
/// and coprime to its discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalFp {
    pub p: i128,
    pub m: i128,
    pub n: i128,
    pub transform: Unimodular,
}

impl CanonicalFp {
    pub fn form(&self) -> QuadraticForm {
        QuadraticForm::new(self.p, self.m, self.n)
    }
}

fn check_definite(f: &QuadraticForm) -> Result<()> {
    if !f.is_positive_definite() {
        return Err(Error::NotPositiveDefinite(f.to_string()));
    }
    if !f.is_primitive() {
        return Err(Error::NotPrimitive(f.to_string()));
    }
    Ok(())
}

/// The form `p·x² + m·xy + n·y²` of discriminant `−d` with `0 ≤ m < p`, if
/// `p` is an odd prime splitting in discriminant `−d`.
pub fn prime_form(d: i128, p: i128) -> Option<QuadraticForm> {
    if p == 2 || !is_prime(p) || legendre(-d, p) != 1 {
        return None;
    }
    let r = sqrt_mod_prime(-d, p)?;
    let m = if (r - d).rem_euclid(2) == 0 { r } else { r - p };
    let m = m.abs();
    let n = (m * m + d) / (4 * p);
    Some(QuadraticForm::new(p, m, n))
}

/// Searches odd primes up to `prime_bound`.
pub fn canonical_fp_bounded(f: &QuadraticForm, prime_bound: usize) -> Result<CanonicalFp> {
    check_definite(f)?;
    let d = -f.disc();
    let target = FormClass::sl2(f)?;
    let (_, tf) = reduce(f)?;
    for p in primes_up_to(prime_bound) {
        let Some(g) = prime_form(d, p) else { continue };
        for (sign, cand) in [(1, g), (-1, QuadraticForm::new(g.a, -g.b, g.c))] {
            if FormClass::sl2(&cand)? != target {
                continue;
            }
            let (_, tg) = reduce(&cand)?;
            let mut t = tf.compose(&tg.inverse());
            if sign < 0 {
                t = t.compose(&Unimodular::new(1, 0, 0, -1)?);
            }
            debug_assert_eq!(f.act(&t)?, g);
            return Ok(CanonicalFp { p, m: g.b, n: g.c, transform: t });
        }
    }
    Err(Error::SearchExhausted { what: "odd split prime represented by the form".into(), bound: prime_bound as i128 })
}

/// [`canonical_fp_bounded`] with a growing prime bound.
pub fn canonical_fp(f: &QuadraticForm) -> Result<CanonicalFp> {
    let mut bound = 1 << 10;
    loop {
        match canonical_fp_bounded(f, bound) {
            Err(Error::SearchExhausted { .. }) if bound < 1 << 26 => bound <<= 2,
            r => return r,
        }
    }
}

/// One step of Newton's iteration for a root of `c2·t² + c1·t + c0` modulo `q`.
fn newton_lift(c: [i128; 3], mut r: i128, p: i128, k: u32) -> Result<i128> {
    let mut q = p;
    for _ in 1..k {
        q *= p;
        let val = ((c[0] * r).rem_euclid(q) * r + c[1] * r + c[2]).rem_euclid(q);
        let der = (2 * c[0] * r + c[1]).rem_euclid(q);
        let inv = mod_inv(der, q).ok_or_else(|| pre("root is not simple"))?;
        r = (r - val * inv % q).rem_euclid(q);
    }
    Ok(r)
}

/// Roots of `c2·t² + c1·t + c0` modulo the odd prime `p`.
fn roots_mod_p(c: [i128; 3], p: i128) -> Vec<i128> {
    let [a, b, cc] = c.map(|v| v.rem_euclid(p));
    if a == 0 {
        if b == 0 {
            return Vec::new();
        }
        return vec![(-cc * mod_inv(b, p).unwrap()).rem_euclid(p)];
    }
    let disc = (b * b - 4 * a * cc).rem_euclid(p);
    let Some(s) = sqrt_mod_prime(disc, p) else { return Vec::new() };
    let inv = mod_inv(2 * a, p).unwrap();
    let mut roots = vec![((-b + s) * inv).rem_euclid(p), ((-b - s) * inv).rem_euclid(p)];
    roots.sort_unstable();
    roots.dedup();
    roots
}

fn check_split(f: &QuadraticForm, p: i128) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(pre(format!("{p} is not an odd prime")));
    }
    if f.content() % p == 0 {
        return Err(pre(format!("{p} divides the content of {f}")));
    }
    match legendre(f.disc(), p) {
        1 => Ok(()),
        0 => Err(pre(format!("{p} ramifies in discriminant {}", f.disc()))),
        _ => Err(pre(format!("{p} is inert in discriminant {}", f.disc()))),
    }
}

/// The two index-`pᵏ` lattices on which `f ≡ 0 (mod pᵏ)`.
///
/// `Λ₁` is the lift of `y ≡ 0` when `p | a`; otherwise the two lattices
/// `x ≡ t·y` come in increasing order of `t mod p`.
pub fn split_lattices(f: &QuadraticForm, p: i128, k: u32) -> Result<(SubLattice, SubLattice)> {
    check_split(f, p)?;
    if k == 0 {
        return Err(pre("k must be positive"));
    }
    let q = p.checked_pow(k).filter(|q| *q < 1 << 60).ok_or(Error::Overflow("p^k"))?;
    let mut out = Vec::with_capacity(2);
    if f.a % p == 0 {
        // y ≡ s·x with f(1, s) = a + b·s + c·s² ≡ 0.
        let s = newton_lift([f.c, f.b, f.a], 0, p, k)?;
        out.push(SubLattice::from_congruences(&[(-s, 1, q)]));
    }
    for r in roots_mod_p([f.a, f.b, f.c], p) {
        let t = newton_lift([f.a, f.b, f.c], r, p, k)?;
        out.push(SubLattice::from_congruences(&[(1, -t, q)]));
    }
    match out.as_slice() {
        [l1, l2] => Ok((*l1, *l2)),
        _ => Err(Error::Invariant(format!("{f} has {} roots mod {p}", out.len()))),
    }
}

/// Transports `f` to `L`: returns `(g, M)` with `f(M·(x, y)) = index(L)·g(x, y)`.
/// Definite results come back reduced.
pub fn lattice_form(f: &QuadraticForm, l: &SubLattice) -> Result<(QuadraticForm, Mat2)> {
    lattice_form_scaled(f, l, l.index())
}

/// As [`lattice_form`] but dividing by an arbitrary `scale`.
pub fn lattice_form_scaled(
    f: &QuadraticForm,
    l: &SubLattice,
    scale: i128,
) -> Result<(QuadraticForm, Mat2)> {
    if l.is_imprimitive() {
        return Err(pre(format!("lattice {l:?} lies in p·ℤ²")));
    }
    let u = l.basis();
    let h = f.subst(&u)?;
    if h.coeffs().iter().any(|c| c % scale != 0) {
        return Err(pre(format!("{f} does not vanish mod {scale} on {l:?}")));
    }
    let g = QuadraticForm::new(h.a / scale, h.b / scale, h.c / scale);
    if g.is_positive_definite() {
        let (r, t) = reduce(&g)?;
        Ok((r, u.mul(t.mat())))
    } else {
        Ok((g, u))
    }
}

/// `w(f)`, built from the canonical translate `p·x² + m·xy + n·y²`.
pub fn w_of(f: &QuadraticForm) -> Result<QuadraticForm> {
    let c = canonical_fp(f)?;
    Ok(w_from(&c))
}

fn w_from(c: &CanonicalFp) -> QuadraticForm {
    if c.m % 2 != 0 {
        QuadraticForm::new(c.p, -c.m, c.n)
    } else {
        QuadraticForm::new(c.p, -4 * c.m, 16 * c.n)
    }
}

/// `L₂(w(f))`: `m·x ≡ n·y` for odd `m`, `m·x ≡ 4n·y` for even `m`, modulo `p`.
pub fn l2_of_w(c: &CanonicalFp) -> SubLattice {
    let rhs = if c.m % 2 != 0 { c.n } else { 4 * c.n };
    SubLattice::from_congruences(&[(c.m, -rhs, c.p)])
}

/// The class of `w(f)` transported to the third Hensel lift of `L₂(w(f))`.
pub fn nu_of(f: &QuadraticForm) -> Result<FormClass> {
    let c = canonical_fp(f)?;
    let w = w_from(&c);
    let (_, l2) = split_lattices(&w, c.p, 3)?;
    let (g, _) = lattice_form(&w, &l2)?;
    FormClass::sl2(&g)
}

/// `η(f) = αx² − 2βxy + 4γy²` for the canonical translate `(α, β, γ)`.
pub fn eta_of(f: &QuadraticForm) -> Result<QuadraticForm> {
    let c = canonical_fp(f)?;
    Ok(QuadraticForm::new(c.p, -2 * c.m, 4 * c.n))
}

/// `ξ(f)`: `η(f)/α` transported to `Λ'(f) = {βx ≡ 2γy (mod 2α)}`. The form
/// need not be primitive.
pub fn xi_form(f: &QuadraticForm) -> Result<QuadraticForm> {
    let c = canonical_fp(f)?;
    let eta = QuadraticForm::new(c.p, -2 * c.m, 4 * c.n);
    let lam = SubLattice::from_congruences(&[(c.m, -2 * c.n, 2 * c.p)]);
    Ok(lattice_form_scaled(&eta, &lam, c.p)?.0)
}

/// The class of the primitive part of `ξ(f)`.
pub fn xi_of(f: &QuadraticForm) -> Result<FormClass> {
    FormClass::sl2(&xi_form(f)?.primitive_part())
}

/// The unique lattice on which `g ≡ 0 (mod m)` for squarefree `m`, each prime
/// of which is singular for `g`.
pub fn singular_lattice(g: &QuadraticForm, m: i128) -> Result<SubLattice> {
    let mut l = SubLattice::FULL;
    for (p, e) in factorize(m) {
        if e > 1 {
            return Err(pre(format!("{m} is not squarefree")));
        }
        if g.disc() % p != 0 {
            return Err(pre(format!("{g} is not singular mod {p}")));
        }
        let [a, b, c] = g.coeffs().map(|v| v.rem_euclid(p));
        if a == 0 && b == 0 && c == 0 {
            return Err(pre(format!("{g} vanishes identically mod {p}")));
        }
        // Mod p, g is a unit times the square of the line through its zero.
        let line = if a == 0 {
            (0, 1)
        } else if p == 2 {
            if c == 0 { (1, 0) } else { (1, 1) }
        } else {
            (1, (b * mod_inv(2 * a, p).unwrap()).rem_euclid(p))
        };
        l = l.with_congruence(line.0, line.1, p);
    }
    Ok(l)
}

/// `ξ_m(f)`: `ξ(f)` restricted to its mod-`m` singular lattice, divided by `m`.
pub fn xi_m_form(f: &QuadraticForm, m: i128) -> Result<QuadraticForm> {
    let xi = xi_form(f)?.primitive_part();
    let l = singular_lattice(&xi, m)?;
    Ok(lattice_form_scaled(&xi, &l, m)?.0)
}

pub fn xi_m_of(f: &QuadraticForm, m: i128) -> Result<FormClass> {
    FormClass::sl2(&xi_m_form(f, m)?.primitive_part())
}

/// Outcome of comparing the Hensel-lift classes with the prime-ideal
/// prediction `[g₁,ₖ] = [𝔭₁]^{s−k}`, `[g₂,ₖ] = [𝔭₁]^{s+k}`.
#[derive(Debug, Clone, Serialize)]
pub struct HenselReport {
    pub f: QuadraticForm,
    pub p: i128,
    pub k_max: u32,
    /// `[𝔭₁]`, the class of `p·x² + m·xy + n·y²` with `0 ≤ m < p`.
    pub prime_class: QuadraticForm,
    /// Discrete log of `[f]` in base `[𝔭₁]`, if it exists.
    pub s: Option<u64>,
    /// Reduced `g₁,ₖ`, `g₂,ₖ` for `k = 1..=k_max`.
    pub lifts: Vec<(QuadraticForm, QuadraticForm)>,
    /// Orientation `[g₁,ₖ] = [𝔭₁]^{s−k}` holds for every k.
    pub direct: bool,
    /// The swapped orientation holds for every k.
    pub swapped: bool,
    /// `[gᵢ,ₖ] = [f]·[𝔭ⱼ]^{k}` for some assignment, regardless of `s`.
    pub coset_law: bool,
    /// `[g₁,ₖ] ~ [f]^{k−1}`, `[g₂,ₖ] ~ [f]^{k+1}` up to GL₂, when `f` has
    /// `(fp)` shape for `p`.
    pub class_lemma: Option<bool>,
    pub vacuous: bool,
    pub pass: bool,
}

fn discrete_log(target: &FormClass, base: &FormClass) -> Result<Option<u64>> {
    let ord = order(base)?;
    let mut acc = FormClass::principal(-base.disc);
    for s in 0..ord {
        if acc == *target {
            return Ok(Some(s));
        }
        acc = compose(&acc, base)?;
    }
    Ok(None)
}

fn gl2_eq(a: &FormClass, b: &FormClass) -> bool {
    a.to_gl2() == b.to_gl2()
}

/// Checks the lift classes for `k = 1..=k_max`.
pub fn hensel_class_check(f: &QuadraticForm, p: i128, k_max: u32) -> Result<HenselReport> {
    check_definite(f)?;
    check_split(f, p)?;
    let d = -f.disc();
    let prime = prime_form(d, p).ok_or_else(|| pre(format!("{p} does not split")))?;
    let pc = FormClass::sl2(&prime)?;
    let fc = FormClass::sl2(f)?;
    let s = discrete_log(&fc, &pc)?;
    let mut lifts = Vec::new();
    let (mut direct, mut swapped, mut coset_law) = (true, true, true);
    let fp_shape = f.a == p && f.b >= 0 && f.b < p;
    let mut lemma = true;
    for k in 1..=k_max {
        let (l1, l2) = split_lattices(f, p, k)?;
        let g1 = FormClass::sl2(&lattice_form(f, &l1)?.0)?;
        let g2 = FormClass::sl2(&lattice_form(f, &l2)?.0)?;
        lifts.push((g1.rep, g2.rep));
        let up = pow(&pc, k as i64)?;
        let f_up = compose(&fc, &up)?;
        let f_down = compose(&fc, &inverse(&up))?;
        coset_law &= (g1 == f_down && g2 == f_up) || (g1 == f_up && g2 == f_down);
        if let Some(s) = s {
            let lo = pow(&pc, s as i64 - k as i64)?;
            let hi = pow(&pc, s as i64 + k as i64)?;
            direct &= g1 == lo && g2 == hi;
            swapped &= g1 == hi && g2 == lo;
        }
        if fp_shape {
            lemma &= gl2_eq(&g1, &pow(&fc, k as i64 - 1)?) && gl2_eq(&g2, &pow(&fc, k as i64 + 1)?);
        }
    }
    let vacuous = s.is_none();
    let pass = vacuous || direct || swapped;
    Ok(HenselReport {
        f: *f,
        p,
        k_max,
        prime_class: pc.rep,
        s,
        lifts,
        direct: direct && !vacuous,
        swapped: swapped && !vacuous,
        coset_law,
        class_lemma: fp_shape.then_some(lemma),
        vacuous,
        pass,
    })
}

/// Whether `f` vanishes mod `pᵏ` exactly on the union of the two lifts,
/// among residues not both divisible by `p`. Exhaustive over `(ℤ/pᵏ)²`.
pub fn verify_split_exhaustive(f: &QuadraticForm, p: i128, k: u32) -> Result<bool> {
    let q = p.pow(k);
    if q > 10_000 {
        return Err(pre(format!("p^k = {q} exceeds the exhaustive limit")));
    }
    let (l1, l2) = split_lattices(f, p, k)?;
    if l1.index() != q || l2.index() != q {
        return Ok(false);
    }
    for x in 0..q {
        for y in 0..q {
            if x % p == 0 && y % p == 0 {
                continue;
            }
            let zero = f.eval(x, y).rem_euclid(q) == 0;
            let count = l1.contains(x, y) as u8 + l2.contains(x, y) as u8;
            if (zero && count != 1) || (!zero && count != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `𝓘(F) ∈ ℤ` for every `(A, B) ∈ L_{f,α}` in a box, `f` in `(fp)`
/// shape. Returns the first failing point.
pub fn cal_i_integral(f: &QuadraticForm, box_bound: i128) -> Result<Option<(i128, i128)>> {
    let l = crate::family::lattice_lfa(f)?;
    for a in -box_bound..=box_bound {
        for b in -box_bound..=box_bound {
            if !l.contains(a, b) {
                continue;
            }
            let v = crate::family::height_form_value(f, a, b)?;
            if v % (4 * f.a.pow(3)) != 0 {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// GL₂-equivalence of two positive definite forms.
pub fn gl2_equivalent(f: &QuadraticForm, g: &QuadraticForm) -> Result<bool> {
    Ok(FormClass::new(f, Group::Gl2)? == FormClass::new(g, Group::Gl2)?)
}
