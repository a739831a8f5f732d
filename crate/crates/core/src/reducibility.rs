//! Reducible members of `V_f`: factorization into quadratics, the Type 1 /
//! Type 2 split, the lattice `Λ(f)` of `M_f`-stable quadratics, and the
//! square-discriminant points of a family.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{pre, Error, Result};
use crate::factor::factor_form;
use crate::family::{for_each_ellipse_point, jacobian, member_of, FamilyPoint};
use crate::forms::{invariants, product, Mat2, QuadraticForm, QuarticForm};
use crate::lattice::SubLattice;
use crate::numth::{gcd3, is_square, isqrt, square_part_root, squarefree_kernel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReducibleKind {
    /// `F = m·g·(g∘M_f)`.
    Type1,
    /// `F = m·g·h` with `g`, `h` both `M_f`-stable and not proportional.
    Type2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibleWitness {
    pub kind: ReducibleKind,
    pub g: QuadraticForm,
    pub h: QuadraticForm,
    pub scale: Ratio<i128>,
    /// All four linear factors are rational.
    pub linear: bool,
    /// A Type 1 form that also admits a Type 2 splitting.
    pub also_type2: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    Irreducible,
    Reducible(ReducibleWitness),
}

impl Classification {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Classification::Irreducible)
    }

    pub fn kind(&self) -> Option<ReducibleKind> {
        match self {
            Classification::Irreducible => None,
            Classification::Reducible(w) => Some(w.kind),
        }
    }
}

/// `M_f = [[β, 2γ], [−2α, −β]]` (unnormalized).
pub fn mf_integral(f: &QuadraticForm) -> Mat2 {
    Mat2::new(f.b, 2 * f.c, -2 * f.a, -f.b)
}

/// `g(βx + 2γy, −2αx − βy)`.
pub fn mf_translate(f: &QuadraticForm, g: &QuadraticForm) -> Result<QuadraticForm> {
    g.subst(&mf_integral(f))
}

/// `c` with `F = c·P`, if `P` divides `F` up to a rational scalar.
fn ratio_of(big_f: &QuarticForm, p: &QuarticForm) -> Option<Ratio<i128>> {
    let (fc, pc) = (big_f.coeffs(), p.coeffs());
    let k = pc.iter().position(|&c| c != 0)?;
    let r = Ratio::new(fc[k], pc[k]);
    fc.iter()
        .zip(pc.iter())
        .all(|(&a, &b)| Ratio::from_integer(a) == r * b)
        .then_some(r)
}

fn quad_from(v: &[i128]) -> QuadraticForm {
    QuadraticForm::new(v[0], v[1], v[2])
}

fn mul_linear(l1: &[i128], l2: &[i128]) -> QuadraticForm {
    QuadraticForm::new(l1[0] * l2[0], l1[0] * l2[1] + l1[1] * l2[0], l1[1] * l2[1])
}

/// All splittings of a reducible quartic into two primitive integral
/// quadratics `(g, h)` with `g ≤ h`, lexicographically ordered; the flag
/// records four rational linear factors.
pub fn quadratic_pairings(big_f: &QuarticForm) -> Result<(Vec<(QuadraticForm, QuadraticForm)>, bool)> {
    let fac = factor_form(&big_f.coeffs())?;
    let mut parts: Vec<Vec<i128>> = Vec::new();
    for (p, m) in &fac.factors {
        for _ in 0..*m {
            parts.push(p.clone());
        }
    }
    let linear: Vec<&Vec<i128>> = parts.iter().filter(|p| p.len() == 2).collect();
    let quads: Vec<QuadraticForm> = parts.iter().filter(|p| p.len() == 3).map(|p| quad_from(p)).collect();
    let mut out = Vec::new();
    match (linear.len(), quads.len()) {
        (0, 2) => out.push((quads[0], quads[1])),
        (2, 1) => out.push((mul_linear(linear[0], linear[1]), quads[0])),
        (4, 0) => {
            for (i, j, k) in [(1, 2, 3), (2, 1, 3), (3, 1, 2)] {
                out.push((mul_linear(linear[0], linear[i]), mul_linear(linear[j], linear[k])));
            }
        }
        _ => {}
    }
    let mut out: Vec<(QuadraticForm, QuadraticForm)> = out
        .into_iter()
        .map(|(g, h)| {
            let (g, h) = (orient(&g), orient(&h));
            if g.coeffs() <= h.coeffs() {
                (g, h)
            } else {
                (h, g)
            }
        })
        .collect();
    // Sparsest pairing first, then lexicographic.
    let zeros = |g: &QuadraticForm, h: &QuadraticForm| {
        g.coeffs().iter().chain(h.coeffs().iter()).filter(|c| **c == 0).count()
    };
    out.sort_by_key(|(g, h)| (std::cmp::Reverse(zeros(g, h)), g.coeffs(), h.coeffs()));
    out.dedup();
    Ok((out, linear.len() == 4))
}

/// Primitive part with positive first nonzero coefficient.
fn orient(g: &QuadraticForm) -> QuadraticForm {
    let p = g.primitive_part();
    let first = p.coeffs().into_iter().find(|c| *c != 0).unwrap_or(1);
    if first < 0 {
        p.neg()
    } else {
        p
    }
}

/// `Some((g, h, c))` with `F = c·g·h`, `g`, `h` primitive integral, when `F`
/// is reducible over ℚ; the lexicographically least pairing is returned.
pub fn quadratic_factorization(
    big_f: &QuarticForm,
) -> Result<Option<(QuadraticForm, QuadraticForm, Ratio<i128>)>> {
    if invariants(big_f)?.disc == 0 {
        return Err(pre(format!("{big_f} has zero discriminant")));
    }
    let (pairs, _) = quadratic_pairings(big_f)?;
    match pairs.first() {
        None => Ok(None),
        Some((g, h)) => {
            let c = ratio_of(big_f, &product(g, h)?)
                .ok_or_else(|| Error::Invariant(format!("{g}·{h} does not divide {big_f}")))?;
            Ok(Some((*g, *h, c)))
        }
    }
}

/// `Λ(f)` in coordinates `(g₂, g₁)`: `β·g₁ ≡ 2γ·g₂ (mod 2α)`.
pub fn lambda_f(f: &QuadraticForm) -> Result<SubLattice> {
    if f.a == 0 || f.disc() == 0 {
        return Err(pre(format!("{f} needs α ≠ 0 and Δ ≠ 0")));
    }
    Ok(SubLattice::from_congruences(&[(-2 * f.c, f.b, 2 * f.a.abs())]))
}

/// The element of `Λ(f)` at `(g₂, g₁)`, with `g₀ = (βg₁ − 2γg₂)/(2α)`.
pub fn lambda_form(f: &QuadraticForm, g2: i128, g1: i128) -> Option<QuadraticForm> {
    let num = f.b * g1 - 2 * f.c * g2;
    (f.a != 0 && num % (2 * f.a) == 0).then(|| QuadraticForm::new(g2, g1, num / (2 * f.a)))
}

/// `g ∘ M_f ∝ g`, tested directly. Besides `Λ(f)` this holds for multiples
/// of `f` itself, on which `M_f` acts by `−Δ(f)` rather than `Δ(f)`.
pub fn is_mf_stable(f: &QuadraticForm, g: &QuadraticForm) -> Result<bool> {
    Ok(g.is_zero() || mf_translate(f, g)?.proportional(g))
}

/// `g ∘ M_f = Δ(f)·g`, the eigenspace described by [`lambda_form`].
pub fn in_lambda_eigenspace(f: &QuadraticForm, g: &QuadraticForm) -> Result<bool> {
    let t = mf_translate(f, g)?;
    let d = f.disc();
    Ok(t.a == d * g.a && t.b == d * g.b && t.c == d * g.c)
}

/// Membership in `Λ(f)` via the closed form for `g₀`.
pub fn contains_form(f: &QuadraticForm, g: &QuadraticForm) -> bool {
    lambda_form(f, g.a, g.b) == Some(*g)
}

/// Classifies a member of `V_f(ℤ)`. Type 1 is tested before Type 2.
pub fn classify(big_f: &QuarticForm, f: &QuadraticForm) -> Result<Classification> {
    if member_of(f, big_f).is_none() {
        return Err(pre(format!("{big_f} is not in the family of {f}")));
    }
    classify_unchecked(big_f, f)
}

/// [`classify`] without the membership test.
pub fn classify_unchecked(big_f: &QuarticForm, f: &QuadraticForm) -> Result<Classification> {
    let (pairs, linear) = quadratic_pairings(big_f)?;
    if pairs.is_empty() {
        return Ok(Classification::Irreducible);
    }
    let type2 = |g: &QuadraticForm, h: &QuadraticForm| -> Result<bool> {
        Ok(!g.proportional(h) && is_mf_stable(f, g)? && is_mf_stable(f, h)?)
    };
    let mut also_type2 = false;
    for (g, h) in &pairs {
        also_type2 |= type2(g, h)?;
    }
    for (g, h) in &pairs {
        for (a, b) in [(g, h), (h, g)] {
            let am = mf_translate(f, a)?;
            if am.proportional(b) {
                let scale = ratio_of(big_f, &product(a, &am)?)
                    .ok_or_else(|| Error::Invariant(format!("Type 1 witness fails for {big_f}")))?;
                return Ok(Classification::Reducible(ReducibleWitness {
                    kind: ReducibleKind::Type1,
                    g: *a,
                    h: am,
                    scale,
                    linear,
                    also_type2,
                }));
            }
        }
    }
    for (g, h) in &pairs {
        if type2(g, h)? {
            let scale = ratio_of(big_f, &product(g, h)?)
                .ok_or_else(|| Error::Invariant(format!("Type 2 witness fails for {big_f}")))?;
            return Ok(Classification::Reducible(ReducibleWitness {
                kind: ReducibleKind::Type2,
                g: *g,
                h: *h,
                scale,
                linear,
                also_type2: false,
            }));
        }
    }
    Err(Error::Invariant(format!("{big_f} is reducible but neither Type 1 nor Type 2 for {f}")))
}

/// `𝓙(f, u)`.
pub fn jacobian_cofactor(f: &QuadraticForm, u: &QuadraticForm) -> QuadraticForm {
    jacobian(f, u)
}

/// `Ξ(f, u)`, the content of `𝓙(f, u)`.
pub fn xi_content(f: &QuadraticForm, u: &QuadraticForm) -> i128 {
    let j = jacobian(f, u);
    gcd3(j.a, j.b, j.c)
}

/// Whether `Δ(F)` is a nonzero square; under `J = 0` this is `I = 3k²`, `k > 0`.
pub fn has_square_disc(big_f: &QuarticForm) -> Result<bool> {
    let inv = invariants(big_f)?;
    Ok(inv.i > 0 && inv.i % 3 == 0 && is_square(inv.i / 3))
}

/// A family point with square discriminant: `I(F) = 3k²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareDiscPoint {
    pub a: i128,
    pub b: i128,
    pub i: i128,
    pub k: i128,
}

impl SquareDiscPoint {
    /// The point `z` on `s(D)·4𝓘 = z²`, where `4𝓘 = 4I/(3D)` and
    /// `z = 2k/t(D)`; `None` when `4𝓘` or `z` is not integral.
    pub fn curve_z(&self, d: i128) -> Option<i128> {
        let t = square_part_root(d);
        let s = squarefree_kernel(d);
        let four_i = 4 * self.i;
        if four_i % (3 * d) != 0 || (2 * self.k) % t != 0 {
            return None;
        }
        let z = 2 * self.k / t;
        (s * (four_i / (3 * d)) == z * z).then_some(z)
    }
}

/// Family points of positive definite `f` with `0 < I ≤ i_bound` and square
/// discriminant.
pub fn square_disc_points(f: &QuadraticForm, i_bound: i128) -> Result<Vec<SquareDiscPoint>> {
    if !f.is_positive_definite() || !f.is_primitive() {
        return Err(pre(format!("{f} must be primitive positive definite")));
    }
    let d = -f.disc();
    let den = 4 * f.a.pow(3);
    let mut out = Vec::new();
    for_each_ellipse_point(f, i_bound, |a, b| {
        let q = crate::family::height_form_value(f, a, b)?;
        // I = 3Dq/(4α³); I/3 = Dq/(4α³)
        let num = d * q;
        if num % den == 0 {
            let third = num / den;
            if is_square(third) {
                out.push(SquareDiscPoint { a, b, i: 3 * third, k: isqrt(third) });
            }
        }
        Ok(())
    })?;
    Ok(out)
}

/// Brute-force counterpart of [`square_disc_points`] via the family map.
pub fn square_disc_points_naive(f: &QuadraticForm, i_bound: i128) -> Result<Vec<SquareDiscPoint>> {
    let mut out = Vec::new();
    for_each_ellipse_point(f, i_bound, |a, b| {
        let big_f = crate::family::family_member(&FamilyPoint::new(*f, a, b))?;
        if has_square_disc(&big_f)? {
            let i = invariants(&big_f)?.i;
            out.push(SquareDiscPoint { a, b, i, k: isqrt(i / 3) });
        }
        Ok(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::family_member;

    fn q(a: i128, b: i128, c: i128) -> QuadraticForm {
        QuadraticForm::new(a, b, c)
    }

    #[test]
    fn factorization_examples() {
        let (g, h, c) = quadratic_factorization(&QuarticForm::new(0, 1, 0, -1, 0)).unwrap().unwrap();
        assert_eq!((g, h, c), (q(0, 1, 0), q(1, 0, -1), Ratio::from_integer(1)));
        let f = QuarticForm::new(1, 4, 0, -4, -1);
        let (pairs, linear) = quadratic_pairings(&f).unwrap();
        assert!(!pairs.is_empty() && !linear);
        assert_eq!(f.eval(1, 1), 0);
        assert!(quadratic_factorization(&QuarticForm::new(1, 0, 0, 0, -2)).unwrap().is_none());
        // x⁴ − 6x²y² + y⁴ = (x² + 2xy − y²)(x² − 2xy − y²)
        let (g, h, _) = quadratic_factorization(&QuarticForm::new(1, 0, -6, 0, 1)).unwrap().unwrap();
        assert_eq!((g, h), (q(1, -2, -1), q(1, 2, -1)));
    }

    #[test]
    fn classify_examples() {
        let f = q(1, 0, 1);
        let big_f = QuarticForm::new(0, 1, 0, -1, 0);
        // x³y − xy³ = −¼·(x² + xy)·(x² + xy)∘M_f, and also xy·(x² − y²).
        match classify(&big_f, &f).unwrap() {
            Classification::Reducible(w) => {
                assert_eq!(w.kind, ReducibleKind::Type1);
                assert!(w.linear && w.also_type2);
                assert_eq!(w.h, mf_translate(&f, &w.g).unwrap());
            }
            c => panic!("{c:?}"),
        }
        let (g, h, _) = quadratic_factorization(&big_f).unwrap().unwrap();
        assert!(contains_form(&f, &g) && contains_form(&f, &h));
        let irr = family_member(&FamilyPoint::new(f, 1, 0)).unwrap();
        assert_eq!(irr, QuarticForm::new(1, 0, -6, 0, 1));
        assert_eq!(classify(&irr, &f).unwrap().kind(), Some(ReducibleKind::Type2));
        let irr = family_member(&FamilyPoint::new(f, 1, 1)).unwrap();
        assert!(classify(&irr, &f).unwrap().is_irreducible());
        assert!(classify(&QuarticForm::new(1, 0, 0, 0, 1), &q(1, 1, 1)).is_err());
    }

    #[test]
    fn jacobian_example() {
        let j = jacobian_cofactor(&q(1, 0, 1), &q(0, 1, 0));
        assert!(j.proportional(&q(1, 0, -1)));
    }

    #[test]
    fn lambda_closed_form_matches_stability() {
        for f in [q(1, 0, 1), q(1, 1, 1), q(2, 1, 3), q(3, 2, 5), q(1, 3, -2)] {
            for g2 in -12..=12 {
                for g1 in -12..=12 {
                    for g0 in -12..=12 {
                        let g = q(g2, g1, g0);
                        if g.is_zero() {
                            continue;
                        }
                        let lam = contains_form(&f, &g);
                        assert_eq!(lam, in_lambda_eigenspace(&f, &g).unwrap(), "{f} {g}");
                        if !g.proportional(&f) {
                            assert_eq!(lam, is_mf_stable(&f, &g).unwrap(), "{f} {g}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn square_disc_helpers() {
        assert_eq!((squarefree_kernel(23), square_part_root(23)), (23, 1));
        assert_eq!((squarefree_kernel(4), square_part_root(4)), (1, 2));
        for f in [q(1, 0, 1), q(1, 1, 1), q(2, 1, 3), q(5, 4, 1), q(3, 1, 2)] {
            let fast = square_disc_points(&f, 3000).unwrap();
            assert_eq!(fast, square_disc_points_naive(&f, 3000).unwrap(), "{f}");
        }
    }
}
