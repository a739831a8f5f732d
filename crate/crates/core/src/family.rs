//! The family `V_f` of quartics with `J = 0` and Hessian divisor `f`, its
//! congruence lattice, and the parametrization by pairs of quadratics.
//!
//! For `f = αx² + βxy + γy²` with `α ≠ 0` the family is
//!
//! ```text
//! F = A x⁴ + B x³y − 3(4γA − βB)/(2α) x²y² − (4βγA − (β² − αγ)B)/α² xy³
//!       − (4γ(β² − αγ)A − β(β² − 2αγ)B)/(4α³) y⁴
//! ```
//!
//! and `I(F) = −3(αB² − 4βAB + 16γA²)Δ(f)/(4α³)`.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::ck::Ck;
use crate::error::{pre, Error, Result};
use crate::forms::{hessian, invariants, square, QuadraticForm, QuarticForm, Unimodular};
use crate::lattice::SubLattice;

/// A point `(A, B)` of the family of `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyPoint {
    pub f: QuadraticForm,
    pub a: i128,
    pub b: i128,
}

impl FamilyPoint {
    pub fn new(f: QuadraticForm, a: i128, b: i128) -> Self {
        FamilyPoint { f, a, b }
    }
}

fn check_f(f: &QuadraticForm) -> Result<()> {
    if f.a == 0 {
        return Err(pre(format!("{f} has α = 0; translate it first")));
    }
    if f.disc() == 0 {
        return Err(pre(format!("{f} is degenerate")));
    }
    Ok(())
}

/// The three numerators `𝓐₁, 𝓐₂, 𝓐₃` as linear forms `(coef_A, coef_B)`.
fn numerators(f: &QuadraticForm) -> [(i128, i128); 3] {
    let (al, be, ga) = (f.a, f.b, f.c);
    [
        (4 * ga, -be),
        (4 * be * ga, -(be * be - al * ga)),
        (4 * ga * (be * be - al * ga), -be * (be * be - 2 * al * ga)),
    ]
}

/// `L_{f,α} = {(A,B) : 𝓐₁ ≡ 0 (2α), 𝓐₂ ≡ 0 (α²), 𝓐₃ ≡ 0 (4α³)}`.
pub fn lattice_lfa(f: &QuadraticForm) -> Result<SubLattice> {
    check_f(f)?;
    let al = f.a.abs();
    let [n1, n2, n3] = numerators(f);
    Ok(SubLattice::from_congruences(&[
        (n1.0, n1.1, 2 * al),
        (n2.0, n2.1, al * al),
        (n3.0, n3.1, 4 * al * al * al),
    ]))
}

/// The exact set of `(A, B)` giving integral coefficients; the `x²y²`
/// coefficient only needs `2α | 3𝓐₁`.
pub fn integrality_lattice(f: &QuadraticForm) -> Result<SubLattice> {
    check_f(f)?;
    let al = f.a.abs();
    let [n1, n2, n3] = numerators(f);
    Ok(SubLattice::from_congruences(&[
        (3 * n1.0, 3 * n1.1, 2 * al),
        (n2.0, n2.1, al * al),
        (n3.0, n3.1, 4 * al * al * al),
    ]))
}

/// Index of `L_{f,α}` in ℤ².
pub fn lattice_det(f: &QuadraticForm) -> Result<i128> {
    Ok(lattice_lfa(f)?.index())
}

/// The closed form `4|α|³` for odd `β`, `|α|³` for even `β`.
pub fn expected_det(f: &QuadraticForm) -> i128 {
    let a3 = f.a.abs().pow(3);
    if f.b % 2 != 0 {
        4 * a3
    } else {
        a3
    }
}

/// Rational coefficients of the family member at `(A, B)`, as numerators over
/// the common denominator `4α³`.
fn member_numerators(pt: &FamilyPoint) -> Result<[Ck; 5]> {
    let f = pt.f;
    let (al, be, ga) = (Ck::new(f.a), Ck::new(f.b), Ck::new(f.c));
    let (a, b) = (Ck::new(pt.a), Ck::new(pt.b));
    let den = al * al * al * 4;
    let disc_like = be * be - al * ga;
    Ok([
        a * den,
        b * den,
        (b * be * 3 - a * ga * 12) * al * al * 2,
        (b * disc_like - a * be * ga * 4) * al * 4,
        b * be * (be * be - al * ga * 2) - a * ga * disc_like * 4,
    ])
}

/// The family member at `pt`; errors when the point is off the integrality lattice.
pub fn family_member(pt: &FamilyPoint) -> Result<QuarticForm> {
    check_f(&pt.f)?;
    let den = (Ck::new(pt.f.a).pow(3) * 4).get("family denominator")?;
    let nums = member_numerators(pt)?;
    let mut c = [0i128; 5];
    for (slot, n) in c.iter_mut().zip(nums) {
        let v = n.get("family member")?;
        if v % den != 0 {
            return Err(Error::Invariant(format!(
                "({}, {}) is not on the integrality lattice of {}",
                pt.a, pt.b, pt.f
            )));
        }
        *slot = v / den;
    }
    Ok(QuarticForm::from_coeffs(c))
}

/// `αB² − 4βAB + 16γA²`.
pub fn height_form_value(f: &QuadraticForm, a: i128, b: i128) -> Result<i128> {
    let (al, be, ga) = (Ck::new(f.a), Ck::new(f.b), Ck::new(f.c));
    let (ca, cb) = (Ck::new(a), Ck::new(b));
    (al * cb * cb - be * ca * cb * 4 + ga * ca * ca * 16).get("height form")
}

/// `I(F)` from the closed form and the scaled height `𝓘 = (αB² − 4βAB + 16γA²)/(4α³)`.
pub fn family_invariant(pt: &FamilyPoint) -> Result<(i128, Ratio<i128>)> {
    check_f(&pt.f)?;
    let q = height_form_value(&pt.f, pt.a, pt.b)?;
    let den = (Ck::new(pt.f.a).pow(3) * 4).get("family denominator")?;
    let num = (Ck::new(q) * pt.f.disc() * -3).get("family invariant")?;
    if num % den != 0 {
        return Err(Error::Invariant(format!(
            "closed-form I is not integral at ({}, {})",
            pt.a, pt.b
        )));
    }
    let i = num / den;
    let direct = invariants(&family_member(pt)?)?.i;
    if direct != i {
        return Err(Error::Invariant(format!("closed-form I = {i} but direct I = {direct}")));
    }
    Ok((i, Ratio::new(q, den)))
}

/// `⌊4α³·I_bound/(3D)⌋`: the bound on `αB² − 4βAB + 16γA²` for definite `f`
/// of discriminant `−D`.
pub fn height_form_bound(f: &QuadraticForm, i_bound: i128) -> Result<i128> {
    let d = -f.disc();
    if d <= 0 || f.a <= 0 {
        return Err(Error::NotPositiveDefinite(f.to_string()));
    }
    if i_bound <= 0 {
        return Ok(0);
    }
    Ok((Ck::new(f.a).pow(3) * 4 * i_bound).get("height bound")? / (3 * d))
}

/// One row `A` of lattice points in the ellipse: `B = lo, lo + step, …, ≤ hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EllipseRow {
    pub a: i128,
    pub lo: i128,
    pub hi: i128,
    pub step: i128,
}

impl EllipseRow {
    pub fn len(&self) -> i128 {
        if self.hi < self.lo {
            0
        } else {
            (self.hi - self.lo) / self.step + 1
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn bs(&self) -> impl Iterator<Item = i128> {
        let (lo, hi, step) = (self.lo, self.hi, self.step);
        (0..).map(move |k| lo + k * step).take_while(move |b| *b <= hi)
    }
}

/// Rows of `L_{f,α}` inside `αB² − 4βAB + 16γA² ≤ 4α³·I_bound/(3D)`, i.e. the
/// family members with `0 ≤ I ≤ I_bound`, including the origin.
pub fn ellipse_rows(f: &QuadraticForm, i_bound: i128) -> Result<Vec<EllipseRow>> {
    let r = height_form_bound(f, i_bound)?;
    let l = lattice_lfa(f)?;
    let d = -f.disc();
    let (al, be) = (f.a, f.b);
    let q = |a: i128, b: i128| al * b * b - 4 * be * a * b + 16 * f.c * a * a;
    // 16·D·A² ≤ 4αR
    let a_max = crate::numth::isqrt(al * r / (4 * d));
    let mut rows = Vec::new();
    let k_max = a_max / l.h11;
    for k in -k_max..=k_max {
        let a = k * l.h11;
        let disc = 4 * al * r - 16 * d * a * a;
        if disc < 0 {
            continue;
        }
        let s = crate::numth::isqrt(disc);
        // the real interval lies within one step of [lo, hi]
        let mut lo = (4 * be * a - s).div_euclid(2 * al);
        let mut hi = (4 * be * a + s).div_euclid(2 * al) + 1;
        while lo <= hi && q(a, lo) > r {
            lo += 1;
        }
        while lo <= hi && q(a, hi) > r {
            hi -= 1;
        }
        if hi < lo {
            continue;
        }
        while q(a, lo - 1) <= r {
            lo -= 1;
        }
        while q(a, hi + 1) <= r {
            hi += 1;
        }
        let res = (l.h21 * k).rem_euclid(l.h22);
        let first = lo + (res - lo).rem_euclid(l.h22);
        if first > hi {
            continue;
        }
        let last = hi - (hi - res).rem_euclid(l.h22);
        rows.push(EllipseRow { a, lo: first, hi: last, step: l.h22 });
    }
    Ok(rows)
}

/// Calls `visit(A, B)` for every nonzero point of [`ellipse_rows`].
pub fn for_each_ellipse_point(
    f: &QuadraticForm,
    i_bound: i128,
    mut visit: impl FnMut(i128, i128) -> Result<()>,
) -> Result<()> {
    for row in ellipse_rows(f, i_bound)? {
        for b in row.bs() {
            if row.a != 0 || b != 0 {
                visit(row.a, b)?;
            }
        }
    }
    Ok(())
}

/// `Some((A, B))` when `F` is exactly the family member at `(a₄, a₃)`.
pub fn member_of(f: &QuadraticForm, big_f: &QuarticForm) -> Option<FamilyPoint> {
    if big_f.is_zero() || f.a == 0 || f.disc() == 0 {
        return None;
    }
    let pt = FamilyPoint::new(*f, big_f.a4, big_f.a3);
    match family_member(&pt) {
        Ok(g) if g == *big_f => Some(pt),
        _ => None,
    }
}

/// A translate `f_T` with nonzero leading coefficient, `T = [[1, 0], [k, 1]]`
/// with the least `k ≥ 0`.
pub fn translate_alpha(f: &QuadraticForm) -> Result<(QuadraticForm, Unimodular)> {
    for k in 0..=2 {
        let t = Unimodular::new(1, 0, k, 1)?;
        let g = f.act(&t)?;
        if g.a != 0 {
            return Ok((g, t));
        }
    }
    Err(pre(format!("{f} vanishes at (1,0), (1,1), (1,2)")))
}

/// `M_f = |Δ(f)|^{-1/2}·[[β, 2γ], [−2α, −β]]`.
pub fn mf_matrix(f: &QuadraticForm) -> [[f64; 2]; 2] {
    let s = (f.disc().abs() as f64).sqrt();
    let (al, be, ga) = (f.a as f64, f.b as f64, f.c as f64);
    [[be / s, 2.0 * ga / s], [-2.0 * al / s, -be / s]]
}

/// `12γ·a₄ − 3β·a₃ + 2α·a₂`, which vanishes on the real span of the family.
pub fn plane_residual(f: &QuadraticForm, big_f: &QuarticForm) -> i128 {
    12 * f.c * big_f.a4 - 3 * f.b * big_f.a3 + 2 * f.a * big_f.a2
}

/// Whether `f²` divides the Hessian of `F` (exactly, as a rational multiple).
pub fn hessian_divisible(f: &QuadraticForm, big_f: &QuarticForm) -> Result<bool> {
    let h = hessian(big_f)?;
    let f2 = square(f)?;
    // H = c·f² for a rational c: all 2×2 minors of (H, f²) vanish.
    let (hc, fc) = (h.coeffs(), f2.coeffs());
    for i in 0..5 {
        for j in (i + 1)..5 {
            let lhs = Ck::new(hc[i]) * fc[j];
            let rhs = Ck::new(hc[j]) * fc[i];
            if (lhs - rhs).get("hessian divisibility")? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A pair of quadratic forms `(u, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadPair {
    pub u: QuadraticForm,
    pub v: QuadraticForm,
}

/// Jacobian determinant `𝓙(u, v)` (with the factor 1/2 removed from the middle term).
pub fn jacobian(u: &QuadraticForm, v: &QuadraticForm) -> QuadraticForm {
    let (u2, u1, u0) = (u.a, u.b, u.c);
    let (v2, v1, v0) = (v.a, v.b, v.c);
    QuadraticForm::new(u2 * v1 - u1 * v2, 2 * (u2 * v0 - u0 * v2), u1 * v0 - u0 * v1)
}

/// Joint discriminant `Δ(u, v) = 2u₂v₀ − u₁v₁ + 2u₀v₂`; note `Δ(u, u) = −Δ(u)`.
pub fn joint_disc(u: &QuadraticForm, v: &QuadraticForm) -> i128 {
    2 * u.a * v.c - u.b * v.b + 2 * u.c * v.a
}

/// `𝓕 = Δ(u)x² + 2Δ(u,v)xy + Δ(v)y²`.
pub fn invariant_form(u: &QuadraticForm, v: &QuadraticForm) -> QuadraticForm {
    QuadraticForm::new(u.disc(), 2 * joint_disc(u, v), v.disc())
}

/// `h₂u² + h₁uv + h₀v²`.
pub fn outer_value(h2: i128, h1: i128, h0: i128, pair: &QuadPair) -> Result<QuarticForm> {
    let (u, v) = (pair.u, pair.v);
    let uu = crate::forms::product(&u, &u)?;
    let uv = crate::forms::product(&u, &v)?;
    let vv = crate::forms::product(&v, &v)?;
    let mut c = [0i128; 5];
    for (k, slot) in c.iter_mut().enumerate() {
        *slot = (Ck::new(h2) * uu.coeffs()[k] + Ck::new(h1) * uv.coeffs()[k] + Ck::new(h0) * vv.coeffs()[k])
            .get("outer value")?;
    }
    Ok(QuarticForm::from_coeffs(c))
}

/// `h₀` from the linear constraint `Δ(v)h₀ − Δ(u,v)h₁ + Δ(u)h₂ = 0`.
pub fn outer_h0(h2: i128, h1: i128, pair: &QuadPair) -> Result<i128> {
    let dv = pair.v.disc();
    if dv == 0 {
        return Err(pre("Δ(v) = 0"));
    }
    let num = joint_disc(&pair.u, &pair.v) * h1 - pair.u.disc() * h2;
    if num % dv != 0 {
        return Err(Error::Precondition(format!(
            "h₀ = {num}/{dv} is not an integer"
        )));
    }
    Ok(num / dv)
}

/// `I` of `h(u, v)` under the constraint, in closed form:
/// `−3Δ(𝓙)(Δ(v)h₁² − 4Δ(u,v)h₁h₂ + 4Δ(u)h₂²)/(4Δ(v))`.
pub fn outer_i(h2: i128, h1: i128, pair: &QuadPair) -> Result<Ratio<i128>> {
    let dv = pair.v.disc();
    if dv == 0 {
        return Err(pre("Δ(v) = 0"));
    }
    let dj = jacobian(&pair.u, &pair.v).disc();
    let duv = joint_disc(&pair.u, &pair.v);
    let du = pair.u.disc();
    let inner = Ck::new(dv) * h1 * h1 - Ck::new(duv) * h1 * h2 * 4 + Ck::new(du) * h2 * h2 * 4;
    let num = (inner * dj * -3).get("outer I")?;
    Ok(Ratio::new(num, 4 * dv))
}

/// One representation `F = h(u, v)` found by [`outer_search`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OuterRep {
    pub h: (i128, i128, i128),
    pub pair: QuadPair,
}

/// Solves `F = h₂u² + h₁uv + h₀v²` for integral `h`, if possible.
fn solve_h(big_f: &QuarticForm, pair: &QuadPair) -> Option<(i128, i128, i128)> {
    let uu = crate::forms::product(&pair.u, &pair.u).ok()?.coeffs();
    let uv = crate::forms::product(&pair.u, &pair.v).ok()?.coeffs();
    let vv = crate::forms::product(&pair.v, &pair.v).ok()?.coeffs();
    let fc = big_f.coeffs();
    // Pick three rows with a nonzero 3×3 determinant and solve by Cramer.
    for rows in [[0, 1, 2], [0, 1, 3], [0, 1, 4], [0, 2, 3], [0, 2, 4], [0, 3, 4], [1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]] {
        let m = rows.map(|r| [uu[r], uv[r], vv[r]]);
        let rhs = rows.map(|r| fc[r]);
        let det3 = |m: &[[i128; 3]; 3]| {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        };
        let d = det3(&m);
        if d == 0 {
            continue;
        }
        let mut sol = [0i128; 3];
        for (k, s) in sol.iter_mut().enumerate() {
            let mut mk = m;
            for r in 0..3 {
                mk[r][k] = rhs[r];
            }
            let n = det3(&mk);
            if n % d != 0 {
                return None;
            }
            *s = n / d;
        }
        let (h2, h1, h0) = (sol[0], sol[1], sol[2]);
        let ok = (0..5).all(|k| h2 * uu[k] + h1 * uv[k] + h0 * vv[k] == fc[k]);
        return ok.then_some((h2, h1, h0));
    }
    None
}

/// All `F = h(u, v)` with `u, v` in the coefficient box `[-bound, bound]`,
/// `𝓙(u, v)` a positive multiple of the Hessian divisor of `F` and `𝓕`
/// with positive leading coefficient (reduced when definite).
pub fn outer_search(big_f: &QuarticForm, bound: i128) -> Result<Vec<OuterRep>> {
    let inv = invariants(big_f)?;
    if inv.j != 0 || inv.disc == 0 {
        return Err(pre(format!("{big_f} needs J = 0 and Δ ≠ 0")));
    }
    let (f, _) = crate::forms::hessian_sqrt(big_f)
        .ok_or_else(|| Error::Invariant(format!("{big_f} has J = 0 but no Hessian divisor")))?;
    let range: Vec<i128> = (-bound..=bound).collect();
    let mut quads = Vec::new();
    for &a in &range {
        for &b in &range {
            for &c in &range {
                let q = QuadraticForm::new(a, b, c);
                if !q.is_zero() {
                    quads.push(q);
                }
            }
        }
    }
    let mut out = Vec::new();
    for u in &quads {
        for v in &quads {
            let j = jacobian(u, v);
            if j.is_zero() || !j.proportional(&f) || j.a * f.a < 0 || j.b * f.b < 0 || j.c * f.c < 0 {
                continue;
            }
            let ff = invariant_form(u, v);
            let lead_ok = [ff.a, ff.b, ff.c].into_iter().find(|&x| x != 0).is_some_and(|x| x > 0);
            if !lead_ok || (ff.disc() < 0 && !ff.is_reduced()) {
                continue;
            }
            let pair = QuadPair { u: *u, v: *v };
            if let Some(h) = solve_h(big_f, &pair) {
                out.push(OuterRep { h, pair });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i128, b: i128, c: i128) -> QuadraticForm {
        QuadraticForm::new(a, b, c)
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(lattice_lfa(&q(1, 0, 1)).unwrap(), SubLattice::FULL);
        let l = lattice_lfa(&q(1, 1, 1)).unwrap();
        assert_eq!(l.index(), 4);
        assert!(l.contains(1, 4) && !l.contains(0, 2));
        assert_eq!(lattice_det(&q(5, 4, 1)).unwrap(), 125);
        assert_eq!(lattice_det(&q(3, 1, 2)).unwrap(), 108);
        assert_eq!(lattice_det(&q(1, 0, 1)).unwrap(), 1);
        assert!(lattice_lfa(&q(0, 1, 1)).is_err());
    }

    #[test]
    fn determinant_closed_form() {
        let mut mismatches = Vec::new();
        for al in 1..=20 {
            for be in -20..=20 {
                for ga in -40..=40 {
                    let f = q(al, be, ga);
                    if !f.is_primitive() || f.disc() == 0 {
                        continue;
                    }
                    let l = lattice_lfa(&f).unwrap();
                    if l.index() != expected_det(&f) || l != integrality_lattice(&f).unwrap() {
                        mismatches.push(f);
                    }
                }
            }
        }
        assert!(mismatches.is_empty(), "{:?}", &mismatches[..mismatches.len().min(10)]);
    }

    #[test]
    fn member_examples() {
        let f = q(1, 0, 1);
        assert_eq!(
            family_member(&FamilyPoint::new(f, 1, 0)).unwrap(),
            QuarticForm::new(1, 0, -6, 0, 1)
        );
        assert_eq!(
            family_member(&FamilyPoint::new(f, 0, 1)).unwrap(),
            QuarticForm::new(0, 1, 0, -1, 0)
        );
        let g = q(1, 1, 1);
        assert_eq!(
            family_member(&FamilyPoint::new(g, 1, 4)).unwrap(),
            QuarticForm::new(1, 4, 0, -4, -1)
        );
        assert!(family_member(&FamilyPoint::new(g, 1, 1)).is_err());
    }

    #[test]
    fn invariant_examples() {
        let f = q(1, 0, 1);
        let (i, s) = family_invariant(&FamilyPoint::new(f, 1, 0)).unwrap();
        assert_eq!((i, s), (48, Ratio::new(16, 4)));
        assert_eq!(family_invariant(&FamilyPoint::new(f, 0, 1)).unwrap().0, 3);
        assert_eq!(family_invariant(&FamilyPoint::new(q(1, 1, 1), 1, 4)).unwrap().0, 36);
    }

    #[test]
    fn membership_examples() {
        let f = q(1, 0, 1);
        assert_eq!(
            member_of(&f, &QuarticForm::new(1, 0, -6, 0, 1)),
            Some(FamilyPoint::new(f, 1, 0))
        );
        assert_eq!(member_of(&f, &QuarticForm::new(1, 0, 0, 0, 1)), None);
        assert_eq!(member_of(&f, &QuarticForm::new(0, 0, 0, 0, 0)), None);
    }

    #[test]
    fn plane_examples() {
        assert_eq!(plane_residual(&q(1, 0, 1), &QuarticForm::new(1, 0, -6, 0, 1)), 0);
        assert_eq!(plane_residual(&q(1, 1, 1), &QuarticForm::new(1, 4, 0, -4, -1)), 0);
        assert_eq!(plane_residual(&q(1, 0, 1), &QuarticForm::new(1, 0, 0, 0, 1)), 12);
        let m = mf_matrix(&q(1, 0, 1));
        assert_eq!(m, [[0.0, 1.0], [-1.0, 0.0]]);
    }

    #[test]
    fn outer_examples() {
        let (u, v) = (q(1, 0, 0), q(0, 0, 1));
        assert_eq!(jacobian(&u, &v), q(0, 2, 0));
        assert_eq!(joint_disc(&u, &v), 2);
        let ff = invariant_form(&u, &v);
        assert_eq!(ff, q(0, 4, 0));
        assert_eq!(ff.disc(), 4 * jacobian(&u, &v).disc());
        assert!(jacobian(&u, &u).is_zero());
        let pair = QuadPair { u, v };
        assert_eq!(outer_value(1, 0, 0, &pair).unwrap(), QuarticForm::new(1, 0, 0, 0, 0));
        let (u, v) = (q(1, 0, 1), q(0, 1, 0));
        assert_eq!(jacobian(&u, &v), q(1, 0, -1));
        assert_eq!(invariant_form(&u, &v).disc(), 4 * jacobian(&u, &v).disc());
    }

    #[test]
    fn outer_search_examples() {
        let reps = outer_search(&QuarticForm::new(1, 0, -6, 0, 1), 3).unwrap();
        assert!(!reps.is_empty());
        for r in &reps {
            assert_eq!(
                outer_value(r.h.0, r.h.1, r.h.2, &r.pair).unwrap(),
                QuarticForm::new(1, 0, -6, 0, 1)
            );
        }
        assert!(!outer_search(&QuarticForm::new(0, 1, 0, -1, 0), 3).unwrap().is_empty());
        assert!(outer_search(&QuarticForm::new(1, 1, 0, 0, 1), 2).is_err());
    }

    fn naive_count(f: &QuadraticForm, i_bound: i128) -> usize {
        let l = lattice_lfa(f).unwrap();
        let r = height_form_bound(f, i_bound).unwrap();
        let mut n = 0;
        for a in -150..=150 {
            for b in -1000..=1000 {
                if (a, b) != (0, 0) && l.contains(a, b) && height_form_value(f, a, b).unwrap() <= r {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn ellipse_examples() {
        let mut n = 0;
        for_each_ellipse_point(&q(1, 0, 1), 100, |_, _| {
            n += 1;
            Ok(())
        })
        .unwrap();
        assert_eq!(n, 28);
        assert!(ellipse_rows(&q(1, 1, 1), 0).unwrap().iter().all(|r| r.a == 0));
    }

    #[test]
    fn ellipse_matches_naive_scan() {
        for (f, ib) in [(q(1, 0, 1), 700), (q(1, 1, 1), 500), (q(2, 1, 3), 900), (q(3, 2, 5), 1500), (q(5, 4, 1), 300)] {
            let mut n = 0;
            for_each_ellipse_point(&f, ib, |a, b| {
                let (i, _) = family_invariant(&FamilyPoint::new(f, a, b))?;
                assert!(i > 0 && i <= ib);
                n += 1;
                Ok(())
            })
            .unwrap();
            assert_eq!(n, naive_count(&f, ib), "{f}");
        }
    }
}
