//! Exact counts of irreducible GL₂(ℤ)-orbits of `J = 0` quartics by height,
//! split by the shape of the Hessian divisor, and their comparison with the
//! asymptotic main terms.
//!
//! Orbits with a fixed divisor class `[f]` correspond to orbits of the finite
//! group `{T : f_T = ±f}` on the lattice points of `V_f`. Counts here are exact
//! orbit counts under that action; the quotient `points / n_f` is reported
//! next to them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{
    cover_multiplicity, enumerate_reduced, reduce, reducible_cover_multiplicity,
    reducible_divisor_reps, reducible_sign_automorphisms, sign_automorphisms, FormClass, Group,
};
use crate::error::{pre, Error, Result};
use crate::family::{ellipse_rows, family_member, height_form_bound, integrality_lattice, FamilyPoint};
use crate::forms::{invariants, is_irreducible_q, Mat2, QuadraticForm, QuarticForm, Unimodular};
use crate::lattice::SubLattice;
use crate::numth::{icbrt, isqrt, ZETA3};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `π²/(27·∛32·ζ(3))`.
pub fn c1() -> f64 {
    std::f64::consts::PI.powi(2) / (27.0 * 32f64.cbrt() * ZETA3)
}

/// `π²/(18·∛32·ζ(3))`.
pub fn c2() -> f64 {
    std::f64::consts::PI.powi(2) / (18.0 * 32f64.cbrt() * ZETA3)
}

/// How a height bound `X` restricts `I(F)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HeightPolicy {
    /// `|Δ(F)| ≤ X`, i.e. `4|I|³ ≤ 27X` since `J = 0`.
    DiscriminantLeq,
    /// `|I(F)| ≤ X`.
    AbsILeq,
}

impl HeightPolicy {
    pub fn i_bound(self, x: i128) -> i128 {
        match self {
            HeightPolicy::DiscriminantLeq => {
                if x <= 0 {
                    0
                } else {
                    icbrt(27 * x / 4)
                }
            }
            HeightPolicy::AbsILeq => x.max(0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            HeightPolicy::DiscriminantLeq => "discriminant-leq",
            HeightPolicy::AbsILeq => "abs-i-leq",
        }
    }
}

impl fmt::Display for HeightPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HeightPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "discriminant-leq" | "disc" => Ok(HeightPolicy::DiscriminantLeq),
            "abs-i-leq" | "abs-i" => Ok(HeightPolicy::AbsILeq),
            _ => Err(pre(format!("unknown height policy {s:?}"))),
        }
    }
}

/// The action of `{T : f_T = ±f}` on the lattice of `V_f`, stored as the
/// distinct images of the two HNF basis vectors.
#[derive(Debug, Clone)]
pub struct FiberAction {
    pub f: QuadraticForm,
    pub lattice: SubLattice,
    maps: Vec<[(i128, i128); 2]>,
}

impl FiberAction {
    pub fn new(f: &QuadraticForm, lattice: SubLattice, transforms: &[Unimodular]) -> Result<Self> {
        let basis = [(lattice.h11, lattice.h21), (0, lattice.h22)];
        let mut maps = vec![basis];
        for t in transforms {
            let g = f.act(t)?;
            if g != *f && g != f.neg() {
                return Err(pre(format!("{t:?} does not fix {f} up to sign")));
            }
            let mut img = [(0, 0); 2];
            for (slot, &(a, b)) in img.iter_mut().zip(&basis) {
                let moved = family_member(&FamilyPoint::new(*f, a, b))?.act(t)?;
                let back = family_member(&FamilyPoint::new(*f, moved.a4, moved.a3))?;
                if back != moved {
                    return Err(Error::Invariant(format!("{t:?} moves V_{f} off itself")));
                }
                *slot = (moved.a4, moved.a3);
            }
            if !maps.contains(&img) {
                maps.push(img);
            }
        }
        Ok(FiberAction { f: *f, lattice, maps })
    }

    /// For positive definite `f`; automorphisms are found on the reduced form
    /// and conjugated back.
    pub fn definite(f: &QuadraticForm) -> Result<Self> {
        let (g, s) = reduce(f)?;
        let special = g.b == 0 || g.a == g.b || g.a == g.c;
        let auts = if special { sign_automorphisms(&g, 1) } else { vec![Unimodular::IDENTITY] };
        let s_inv = s.inverse();
        let conj: Vec<Unimodular> = auts.iter().map(|t| s.compose(t).compose(&s_inv)).collect();
        Self::new(f, integrality_lattice(f)?, &conj)
    }

    /// For a canonical reducible divisor `a·x² + n·xy`.
    pub fn reducible(f: &QuadraticForm) -> Result<Self> {
        if f.c != 0 || f.a <= 0 || f.b <= 0 {
            return Err(pre(format!("{f} is not of the shape a·x² + n·xy")));
        }
        Self::new(f, integrality_lattice(f)?, &reducible_sign_automorphisms(f))
    }

    /// Number of distinct maps, i.e. the number of family points over a
    /// generic orbit.
    pub fn size(&self) -> usize {
        self.maps.len()
    }

    fn image(&self, map: &[(i128, i128); 2], a: i128, b: i128) -> (i128, i128) {
        let l = &self.lattice;
        let k1 = a / l.h11;
        let k2 = (b - k1 * l.h21) / l.h22;
        (k1 * map[0].0 + k2 * map[1].0, k1 * map[0].1 + k2 * map[1].1)
    }

    /// Sorted distinct images of `(a, b)`.
    pub fn orbit(&self, a: i128, b: i128) -> Vec<(i128, i128)> {
        let mut v: Vec<(i128, i128)> = self.maps.iter().map(|m| self.image(m, a, b)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Whether `(a, b)` is the least point of its orbit, and the orbit size.
    pub fn orbit_min(&self, a: i128, b: i128) -> (bool, usize) {
        let o = self.orbit(a, b);
        (o[0] == (a, b), o.len())
    }
}

/// Tallies over the nonzero family points of one divisor class.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NfCount {
    /// Family points with `0 < |I| ≤ I_bound`.
    pub points: u64,
    pub irreducible: u64,
    /// Points whose quartic has coprime coefficients.
    pub primitive: u64,
    /// Irreducible GL₂ orbits.
    pub orbits: u64,
    /// Irreducible orbits with fewer than `n_f` family points.
    pub fiber_defects: u64,
}

/// Feeds family points into an [`NfCount`], building the fiber action on the
/// first irreducible point.
struct Tally<'a> {
    f: QuadraticForm,
    action: Option<FiberAction>,
    make: &'a dyn Fn(&QuadraticForm) -> Result<FiberAction>,
    count: NfCount,
}

impl<'a> Tally<'a> {
    fn new(f: &QuadraticForm, make: &'a dyn Fn(&QuadraticForm) -> Result<FiberAction>) -> Self {
        Tally { f: *f, action: None, make, count: NfCount::default() }
    }

    fn visit(&mut self, a: i128, b: i128) -> Result<()> {
        let big_f = family_member(&FamilyPoint::new(self.f, a, b))?;
        self.count.points += 1;
        if big_f.content() == 1 {
            self.count.primitive += 1;
        }
        if !is_irreducible_q(&big_f)? {
            return Ok(());
        }
        self.count.irreducible += 1;
        if self.action.is_none() {
            self.action = Some((self.make)(&self.f)?);
        }
        let action = self.action.as_ref().unwrap();
        let (least, size) = action.orbit_min(a, b);
        if least {
            self.count.orbits += 1;
            if size < action.size() {
                self.count.fiber_defects += 1;
            }
        }
        Ok(())
    }
}

/// Exact `N_f` data for a primitive positive definite `f`: all nonzero
/// lattice points with `I ≤ I_bound`, enumerated row by row.
pub fn count_nf(f: &QuadraticForm, i_bound: i128) -> Result<NfCount> {
    if !f.is_positive_definite() || !f.is_primitive() {
        return Err(pre(format!("{f} must be primitive positive definite")));
    }
    let make = |g: &QuadraticForm| FiberAction::definite(g);
    let mut tally = Tally::new(f, &make);
    for row in ellipse_rows(f, i_bound)? {
        for b in row.bs() {
            if row.a != 0 || b != 0 {
                tally.visit(row.a, b)?;
            }
        }
    }
    Ok(tally.count)
}

/// Point count of [`count_nf`] from a scan of the whole bounding box.
pub fn count_nf_naive(f: &QuadraticForm, i_bound: i128) -> Result<u64> {
    let r = height_form_bound(f, i_bound)?;
    let l = integrality_lattice(f)?;
    let d = -f.disc();
    // |A| ≤ √(αR/(4D)), |B| ≤ √(16γR/D) bound the ellipse
    let a_max = isqrt(f.a * r / (4 * d)) + 1;
    let b_max = isqrt(16 * f.c * r / d) + 1;
    let mut n = 0;
    for a in -a_max..=a_max {
        for b in -b_max..=b_max {
            if (a, b) != (0, 0)
                && l.contains(a, b)
                && f.a * b * b - 4 * f.b * a * b + 16 * f.c * a * a <= r
            {
                n += 1;
            }
        }
    }
    Ok(n)
}

/// Calls `visit(A, B)` for every lattice point of `V_f`, `f = α·x² + β·xy`,
/// with `0 < |I| ≤ i_bound`. Here `I = −3β²·u·v/(4α³)` with `u = B`,
/// `v = αB − 4βA`, and the hyperbolic region `|uv| ≤ R` is covered by the
/// two strips `|u| ≤ √R` and `|v| ≤ √R`.
pub fn for_each_hyperbola_point(
    f: &QuadraticForm,
    i_bound: i128,
    mut visit: impl FnMut(i128, i128) -> Result<()>,
) -> Result<()> {
    let (al, be) = (f.a, f.b);
    if f.c != 0 || al == 0 || be == 0 {
        return Err(pre(format!("{f} is not of the shape α·x² + β·xy")));
    }
    if i_bound <= 0 {
        return Ok(());
    }
    let l = integrality_lattice(f)?;
    let r = crate::ck::Ck::new(al.abs()).pow(3) * 4 * i_bound;
    let r = r.get("hyperbola bound")? / (3 * be * be);
    let s = isqrt(r);
    // columns: images of the HNF basis vectors in (u, v)
    let (u1, v1) = (l.h21, al * l.h21 - 4 * be * l.h11);
    let (u2, v2) = (l.h22, al * l.h22);
    let uv = SubLattice::from_basis(&Mat2::new(u1, u2, v1, v2));
    let vu = SubLattice::from_basis(&Mat2::new(v1, v2, u1, u2));
    let to_ab = |u: i128, v: i128| -> (i128, i128) { ((al * u - v) / (4 * be), u) };
    let mut run = |lat: &SubLattice, first_max: i128, second: &dyn Fn(i128) -> (i128, i128), swap: bool| -> Result<()> {
        let jmax = first_max / lat.h11;
        for j in -jmax..=jmax {
            let x = j * lat.h11;
            if x == 0 {
                continue;
            }
            let (lo_abs, hi_abs) = second(x.abs());
            let res = (j * lat.h21).rem_euclid(lat.h22);
            for (lo, hi) in [(-hi_abs, -lo_abs), (lo_abs, hi_abs)] {
                if lo > hi {
                    continue;
                }
                let mut y = lo + (res - lo).rem_euclid(lat.h22);
                while y <= hi {
                    let (u, v) = if swap { (y, x) } else { (x, y) };
                    let (a, b) = to_ab(u, v);
                    visit(a, b)?;
                    y += lat.h22;
                }
            }
        }
        Ok(())
    };
    run(&uv, s, &|ux| (1, r / ux), false)?;
    run(&vu, s, &|vx| (s + 1, r / vx), true)?;
    Ok(())
}

/// Exact data for one reducible divisor class `a·x² + n·xy`.
pub fn count_reducible_class(f: &QuadraticForm, i_bound: i128) -> Result<NfCount> {
    let make = |g: &QuadraticForm| FiberAction::reducible(g);
    let mut tally = Tally::new(f, &make);
    for_each_hyperbola_point(f, i_bound, |a, b| tally.visit(a, b))?;
    Ok(tally.count)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DCount {
    pub points: u64,
    pub orbits: u64,
}

/// Counts at one height bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountReport {
    pub x: i128,
    pub policy: HeightPolicy,
    pub i_bound: i128,
    /// Divisor classes visited.
    pub classes: u64,
    pub raw_points: u64,
    pub irreducible_points: u64,
    pub irreducible_orbits: u64,
    /// `Σ irreducible points / n_f` with the cover multiplicities `n_f`.
    pub cover_estimate: f64,
    pub fiber_defects: u64,
    /// Divisor discriminant magnitude → totals; only nonempty entries.
    pub per_d: BTreeMap<i128, DCount>,
    /// `(a, b)` in `count ≈ a·X^{1/3}·log X + b·X^{1/3}` over a ladder.
    pub fitted: Option<(f64, f64)>,
    pub predicted_constant: f64,
    /// `irreducible_orbits / (predicted_constant·X^{1/3}·log X)`.
    pub ratio: f64,
}

impl CountReport {
    fn new(x: i128, policy: HeightPolicy, predicted_constant: f64) -> Self {
        CountReport {
            x,
            policy,
            i_bound: policy.i_bound(x),
            classes: 0,
            raw_points: 0,
            irreducible_points: 0,
            irreducible_orbits: 0,
            cover_estimate: 0.0,
            fiber_defects: 0,
            per_d: BTreeMap::new(),
            fitted: None,
            predicted_constant,
            ratio: 0.0,
        }
    }

    fn absorb(&mut self, d: i128, c: &NfCount, n_f: u32) {
        self.classes += 1;
        self.raw_points += c.points;
        self.irreducible_points += c.irreducible;
        self.irreducible_orbits += c.orbits;
        self.cover_estimate += c.irreducible as f64 / n_f as f64;
        self.fiber_defects += c.fiber_defects;
        if c.points > 0 {
            let e = self.per_d.entry(d).or_default();
            e.points += c.points;
            e.orbits += c.orbits;
        }
    }

    fn finish(mut self) -> Self {
        let x = self.x as f64;
        self.ratio = self.irreducible_orbits as f64 / (self.predicted_constant * x.cbrt() * x.ln());
        self
    }

    /// Rows `(X, D, points, orbits)`.
    pub fn csv_rows(&self) -> Vec<[i128; 4]> {
        self.per_d
            .iter()
            .map(|(&d, c)| [self.x, d, c.points as i128, c.orbits as i128])
            .collect()
    }
}

/// Upper bound on `|Δ(f)|` for a nonempty family: `H_F = c·f²` with `c ∈ ℤ`
/// (Gauss's lemma) and `c·Δ(f) = −4I`, so `|Δ(f)| ≤ 4|I|`.
pub fn divisor_disc_bound(i_bound: i128) -> i128 {
    4 * i_bound
}

/// `N(X)`: irreducible orbits with positive definite Hessian divisor.
pub fn count_n(x: i128, policy: HeightPolicy) -> Result<CountReport> {
    let mut report = CountReport::new(x, policy, c1());
    let ib = report.i_bound;
    let dmax = divisor_disc_bound(ib);
    let per: Vec<Vec<(i128, NfCount, u32)>> = (3..=dmax)
        .into_par_iter()
        .filter(|d| matches!(d % 4, 0 | 3))
        .map(|d| -> Result<Vec<(i128, NfCount, u32)>> {
            let mut out = Vec::new();
            for f in enumerate_reduced(d).into_iter().filter(|f| f.b >= 0) {
                let c = count_nf(&f, ib)?;
                let n_f = cover_multiplicity(&FormClass::new(&f, Group::Gl2)?);
                out.push((d, c, n_f));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    for (d, c, n_f) in per.iter().flatten() {
        report.absorb(*d, c, *n_f);
    }
    Ok(report.finish())
}

/// `M(X)`: irreducible orbits whose Hessian divisor is reducible over ℚ.
pub fn count_m(x: i128, policy: HeightPolicy) -> Result<CountReport> {
    let mut report = CountReport::new(x, policy, c2());
    let ib = report.i_bound;
    // n² = Δ(f) ≤ 4|I|
    let nmax = isqrt(divisor_disc_bound(ib));
    let per: Vec<Vec<(i128, NfCount, u32)>> = (1..=nmax)
        .into_par_iter()
        .map(|n| -> Result<Vec<(i128, NfCount, u32)>> {
            let mut out = Vec::new();
            for f in reducible_divisor_reps(n) {
                let c = count_reducible_class(&f, ib)?;
                let n_f = reducible_cover_multiplicity(&f)?;
                out.push((n * n, c, n_f));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    for (d, c, n_f) in per.iter().flatten() {
        report.absorb(*d, c, *n_f);
    }
    Ok(report.finish())
}

/// Least-squares `(a, b)` for `count ≈ a·X^{1/3}·log X + b·X^{1/3}`.
pub fn fit_ladder(data: &[(i128, u64)]) -> Option<(f64, f64)> {
    if data.len() < 2 {
        return None;
    }
    let (mut s11, mut s12, mut s22, mut t1, mut t2) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for &(x, c) in data {
        let x = x as f64;
        let (p1, p2) = (x.cbrt() * x.ln(), x.cbrt());
        s11 += p1 * p1;
        s12 += p1 * p2;
        s22 += p2 * p2;
        t1 += p1 * c as f64;
        t2 += p2 * c as f64;
    }
    let det = s11 * s22 - s12 * s12;
    if det.abs() < 1e-12 * s11 * s22 {
        return None;
    }
    Some(((t1 * s22 - t2 * s12) / det, (s11 * t2 - s12 * t1) / det))
}

/// Runs `count` over an increasing ladder and fills in the fit.
pub fn count_ladder(
    ladder: &[i128],
    policy: HeightPolicy,
    count: fn(i128, HeightPolicy) -> Result<CountReport>,
) -> Result<Vec<CountReport>> {
    if ladder.windows(2).any(|w| w[0] >= w[1]) {
        return Err(pre("ladder must be strictly increasing"));
    }
    let mut reports = ladder.iter().map(|&x| count(x, policy)).collect::<Result<Vec<_>>>()?;
    let data: Vec<(i128, u64)> = reports.iter().map(|r| (r.x, r.irreducible_orbits)).collect();
    let fit = fit_ladder(&data);
    for r in &mut reports {
        r.fitted = fit;
    }
    Ok(reports)
}

/// `#{1 ≤ n ≤ hi : n ≡ res (mod m)}`.
fn count_progression(hi: i128, res: i128, m: i128) -> i128 {
    if hi < 1 {
        return 0;
    }
    let first = 1 + (res - 1).rem_euclid(m);
    if first > hi {
        0
    } else {
        (hi - first) / m + 1
    }
}

/// The hyperbola decomposition behind the count for `α·x² + β·xy`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RedNfReport {
    pub alpha: i128,
    pub beta: i128,
    pub x: i128,
    /// `⌊X^{1/3}/(12β²)⌋`.
    pub y: i128,
    /// `4α⁷ mod β`.
    pub residue: i128,
    pub s1: i128,
    pub s2: i128,
    pub s3: i128,
    pub raw: i128,
    pub agree: bool,
    /// The displayed main term `X^{1/3}/(3β³)·log(X^{1/3}/(3β²)) + (2γ − 1)·X^{1/3}/(3β³)`.
    pub main_term: f64,
    /// `4·(Y log Y + (2γ − 1)Y)/β`, the last line of the derivation.
    pub derived_main_term: f64,
    pub ratio: f64,
    pub derived_ratio: f64,
}

/// Counts pairs `m, n ≥ 1`, `mn ≤ Y`, `n ≡ 4α⁷m (mod β)` directly and as
/// `S₁ + S₂ − S₃`.
pub fn red_nf_compare(alpha: i128, beta: i128, x: i128) -> Result<RedNfReport> {
    if beta < 1 || crate::numth::gcd(alpha, beta) != 1 {
        return Err(pre(format!("need β ≥ 1 and gcd(α, β) = 1, got ({alpha}, {beta})")));
    }
    let y = icbrt(x.max(0)) / (12 * beta * beta);
    let residue = (crate::numth::mod_pow(alpha.rem_euclid(beta), 7, beta) * 4).rem_euclid(beta);
    let sy = isqrt(y.max(0));
    let (mut s1, mut s2, mut s3) = (0, 0, 0);
    let g = crate::numth::gcd(residue, beta);
    let step = beta / g;
    for m in 1..=sy {
        s1 += count_progression(y / m, residue * m, beta);
        s3 += count_progression(sy, residue * m, beta);
        // n with residue·n ≡ m (mod β)
        if m % g == 0 {
            let inv = crate::numth::mod_inv(residue / g, step).unwrap_or(0);
            s2 += count_progression(y / m, (m / g) * inv, step);
        }
    }
    let mut raw = 0;
    for m in 1..=y {
        for n in 1..=y / m {
            if (n - residue * m).rem_euclid(beta) == 0 {
                raw += 1;
            }
        }
    }
    let xr = x as f64;
    let b3 = (beta * beta * beta) as f64;
    let main_term = xr.cbrt() / (3.0 * b3) * (xr.cbrt() / (3.0 * (beta * beta) as f64)).ln()
        + (2.0 * EULER_GAMMA - 1.0) * xr.cbrt() / (3.0 * b3);
    let yr = xr.cbrt() / (12.0 * (beta * beta) as f64);
    let derived_main_term = 4.0 * (yr * yr.ln() + (2.0 * EULER_GAMMA - 1.0) * yr) / beta as f64;
    Ok(RedNfReport {
        alpha,
        beta,
        x,
        y,
        residue,
        s1,
        s2,
        s3,
        raw,
        agree: s1 + s2 - s3 == raw,
        main_term,
        derived_main_term,
        ratio: 4.0 * raw as f64 / main_term,
        derived_ratio: 4.0 * raw as f64 / derived_main_term,
    })
}

/// Which closed form for `𝓘` matches direct invariants on the reducible family
/// `A·x⁴ + 4α³B·x³y + 6α²βB·x²y² + 4αβ²B·xy³ + β³B·y⁴`, with `I = 3β²𝓘` up to sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibleICheck {
    pub samples: u64,
    /// `𝓘 = 4B(4α⁷B − βA)` matched.
    pub alpha7_matches: u64,
    /// `𝓘 = 4B(α⁴B − βA)` matched.
    pub alpha4_matches: u64,
}

pub fn reducible_family_member(alpha: i128, beta: i128, a: i128, b: i128) -> QuarticForm {
    QuarticForm::new(
        a,
        4 * alpha.pow(3) * b,
        6 * alpha * alpha * beta * b,
        4 * alpha * beta * beta * b,
        beta.pow(3) * b,
    )
}

pub fn reducible_i_check(alpha: i128, beta: i128, range: i128) -> Result<ReducibleICheck> {
    let mut out = ReducibleICheck { samples: 0, alpha7_matches: 0, alpha4_matches: 0 };
    for a in -range..=range {
        for b in -range..=range {
            if b == 0 {
                continue;
            }
            let i = invariants(&reducible_family_member(alpha, beta, a, b))?.i;
            if i == 0 {
                continue;
            }
            out.samples += 1;
            let d = 3 * beta * beta;
            let c7 = d * 4 * b * (4 * alpha.pow(7) * b - beta * a);
            let c4 = d * 4 * b * (alpha.pow(4) * b - beta * a);
            if i.abs() == c7.abs() {
                out.alpha7_matches += 1;
            }
            if i.abs() == c4.abs() {
                out.alpha4_matches += 1;
            }
        }
    }
    Ok(out)
}

/// A divisor with more than one primitive quartic (up to sign) under the bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrimitiveViolation {
    pub f: QuadraticForm,
    pub primitive_points: u64,
    /// Area of the ellipse measured in lattice units.
    pub area: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrimitiveReport {
    pub x: i128,
    pub i_bound: i128,
    /// `X^{2/9}`.
    pub d_threshold: f64,
    pub forms_checked: u64,
    /// Forms that have at least one primitive point.
    pub forms_with_primitive: u64,
    pub max_area: f64,
    pub violations: Vec<PrimitiveViolation>,
}

/// Area of `{I ≤ i_bound}` in units of the lattice determinant.
pub fn lattice_area(f: &QuadraticForm, i_bound: i128) -> Result<f64> {
    let d = (-f.disc()) as f64;
    let det = integrality_lattice(f)?.index() as f64;
    let r = 4.0 * (f.a as f64).powi(3) * i_bound as f64 / (3.0 * d);
    // area of {αB² − 4βAB + 16γA² ≤ r} is 2πr/√(64αγ − 16β²) = πr/(2√D)
    Ok(std::f64::consts::PI * r / (2.0 * d.sqrt()) / det)
}

/// Checks that every `f` with `D > X^{2/9}` has at most one primitive quartic
/// up to sign under the height bound.
pub fn primitive_uniqueness_check(x: i128, policy: HeightPolicy) -> Result<PrimitiveReport> {
    let i_bound = policy.i_bound(x);
    let d_threshold = (x as f64).powf(2.0 / 9.0);
    let dmax = divisor_disc_bound(i_bound);
    // D > X^{2/9} ⟺ D⁹ > X²
    let above = |d: i128| -> bool {
        let mut p: i128 = 1;
        for _ in 0..9 {
            match p.checked_mul(d) {
                Some(v) => p = v,
                None => return true,
            }
        }
        x.checked_mul(x).is_some_and(|x2| p > x2)
    };
    let rows: Vec<(u64, u64, f64, Vec<PrimitiveViolation>)> = (3..=dmax)
        .into_par_iter()
        .filter(|&d| matches!(d % 4, 0 | 3) && above(d))
        .map(|d| -> Result<(u64, u64, f64, Vec<PrimitiveViolation>)> {
            let (mut n, mut with, mut amax, mut bad) = (0, 0, 0f64, Vec::new());
            for f in enumerate_reduced(d) {
                n += 1;
                let area = lattice_area(&f, i_bound)?;
                amax = amax.max(area);
                let mut prim = 0;
                crate::family::for_each_ellipse_point(&f, i_bound, |a, b| {
                    if family_member(&FamilyPoint::new(f, a, b))?.content() == 1 {
                        prim += 1;
                    }
                    Ok(())
                })?;
                if prim > 0 {
                    with += 1;
                }
                if prim > 2 {
                    bad.push(PrimitiveViolation { f, primitive_points: prim, area });
                }
            }
            Ok((n, with, amax, bad))
        })
        .collect::<Result<_>>()?;
    let mut report = PrimitiveReport {
        x,
        i_bound,
        d_threshold,
        forms_checked: 0,
        forms_with_primitive: 0,
        max_area: 0.0,
        violations: Vec::new(),
    };
    for (n, with, amax, bad) in rows {
        report.forms_checked += n;
        report.forms_with_primitive += with;
        report.max_area = report.max_area.max(amax);
        report.violations.extend(bad);
    }
    Ok(report)
}

/// One `(f, X)` cell of the per-class audit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditRow {
    pub f: QuadraticForm,
    pub x: i128,
    pub i_bound: i128,
    pub points: u64,
    /// `π·I_bound/(3D^{3/2})` for odd `β`, four times that for even `β`.
    pub predicted_main: f64,
    /// Ellipse area over lattice determinant.
    pub area_main: f64,
    pub predicted_ratio: f64,
    pub area_ratio: f64,
}

/// Which main term the largest height supports for each form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditVerdict {
    pub f: QuadraticForm,
    pub predicted_ratio: f64,
    pub area_ratio: f64,
    pub supports_area: bool,
}

pub fn default_audit_forms() -> Vec<QuadraticForm> {
    [(1, 0, 1), (1, 1, 1), (1, 1, 2), (2, 1, 3), (1, 0, 5), (2, 2, 3), (3, 1, 5), (4, 3, 7)]
        .iter()
        .map(|&(a, b, c)| QuadraticForm::new(a, b, c))
        .collect()
}

pub fn per_class_error_audit(
    ladder: &[i128],
    forms: &[QuadraticForm],
    policy: HeightPolicy,
) -> Result<(Vec<AuditRow>, Vec<AuditVerdict>)> {
    let mut rows = Vec::new();
    for f in forms {
        if !f.is_reduced() || !f.is_primitive() {
            return Err(pre(format!("{f} must be primitive and reduced")));
        }
        for &x in ladder {
            let ib = policy.i_bound(x);
            let points: u64 = ellipse_rows(f, ib)?.iter().map(|r| r.len() as u64).sum::<u64>() - 1;
            let d = (-f.disc()) as f64;
            let base = std::f64::consts::PI * ib as f64 / (3.0 * d.powf(1.5));
            let predicted_main = if f.b % 2 != 0 { base } else { 4.0 * base };
            let area_main = lattice_area(f, ib)?;
            rows.push(AuditRow {
                f: *f,
                x,
                i_bound: ib,
                points,
                predicted_main,
                area_main,
                predicted_ratio: points as f64 / predicted_main,
                area_ratio: points as f64 / area_main,
            });
        }
    }
    let verdicts = forms
        .iter()
        .filter_map(|f| rows.iter().rev().find(|r| r.f == *f))
        .map(|r| AuditVerdict {
            f: r.f,
            predicted_ratio: r.predicted_ratio,
            area_ratio: r.area_ratio,
            supports_area: r.area_ratio.ln().abs() < r.predicted_ratio.ln().abs(),
        })
        .collect();
    Ok((rows, verdicts))
}
