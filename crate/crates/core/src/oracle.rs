//! Brute-force ground truth: exhaustive enumeration of small quartics,
//! orbit labels through the Hessian divisor, explicit equivalence search,
//! and composition of classes through represented values.
//!
//! Nothing here relies on the cover multiplicities or on the automorphism
//! lists of the `classes` module. The finite group acting on a family is
//! rediscovered by a bounded matrix search.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{reduce, reducible_canonical, FormClass, Group};
use crate::counting::{for_each_hyperbola_point, FiberAction, HeightPolicy};
use crate::error::{pre, Error, Result};
use crate::family::{family_member, for_each_ellipse_point, integrality_lattice, member_of, FamilyPoint};
use crate::forms::{
    hessian_sqrt, invariants, is_irreducible_q, splitting_type, InvariantTriple, QuadraticForm,
    QuarticForm, SplittingType, Unimodular,
};
use crate::numth::{egcd, gcd, is_square, mod_inv};

pub const DEFAULT_MAX_HEIGHT: i128 = 60;
pub const DEFAULT_BMAT: i128 = 12;
/// Largest box height scanned without the `J = 0` restriction.
pub const MAX_UNRESTRICTED_HEIGHT: i128 = 8;

/// Which quartics [`Oracle::brute_quartics`] keeps.
#[derive(Debug, Clone, Copy, Default)]
pub struct Filter {
    pub j_zero: bool,
    pub nonsingular: bool,
    pub irreducible: bool,
    pub max_abs_i: Option<i128>,
    pub pred: Option<fn(&QuarticForm) -> bool>,
}

impl Filter {
    /// `J = 0`, `Δ ≠ 0`.
    pub fn j_zero() -> Self {
        Filter { j_zero: true, nonsingular: true, ..Filter::default() }
    }

    fn accepts(&self, f: &QuarticForm) -> Result<bool> {
        let inv = invariants(f)?;
        if (self.j_zero && inv.j != 0) || (self.nonsingular && inv.disc == 0) {
            return Ok(false);
        }
        if self.max_abs_i.is_some_and(|b| inv.i.abs() > b) {
            return Ok(false);
        }
        if self.pred.is_some_and(|p| !p(f)) {
            return Ok(false);
        }
        if self.irreducible && !is_irreducible_q(f)? {
            return Ok(false);
        }
        Ok(true)
    }
}

/// Shape of the Hessian divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DivisorKind {
    Definite,
    /// Square discriminant.
    Reducible,
    /// Positive non-square discriminant.
    Indefinite,
}

pub fn divisor_kind(f: &QuadraticForm) -> DivisorKind {
    let d = f.disc();
    if d < 0 {
        DivisorKind::Definite
    } else if is_square(d) {
        DivisorKind::Reducible
    } else {
        DivisorKind::Indefinite
    }
}

/// GL₂(ℤ) orbit label of a `J = 0` quartic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitKey {
    pub kind: DivisorKind,
    /// Reduced divisor: reduced with `b ≥ 0`, or `x·(a·x + n·y)` with `a` minimal.
    pub divisor: QuadraticForm,
    /// Least point of the orbit in the family of `divisor`.
    pub point: (i128, i128),
    pub invariants: InvariantTriple,
}

impl OrbitKey {
    pub fn class(&self) -> Option<FormClass> {
        match self.kind {
            DivisorKind::Definite => FormClass::new(&self.divisor, Group::Gl2).ok(),
            _ => None,
        }
    }
}

/// A quartic moved into the family of its reduced divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placement {
    pub kind: DivisorKind,
    pub divisor: QuadraticForm,
    /// `F_T` lies in the family of `divisor`.
    pub transform: Unimodular,
    pub point: FamilyPoint,
}

/// Orbit totals at one height.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleCount {
    pub x: i128,
    pub policy: HeightPolicy,
    pub i_bound: i128,
    pub box_height: i128,
    /// Least box height that contains a representative of every orbit.
    pub required_height: i128,
    pub scanned: u64,
    pub definite: u64,
    pub reducible: u64,
    /// Orbits with indefinite non-square divisor; not part of either count.
    pub indefinite_forms: u64,
    pub by_type: Vec<(DivisorKind, SplittingType, u64)>,
}

/// `{T : g_T = ±g}` with the first column of `T` in `[−bound, bound]²`.
/// The second column is solved for, so the search is quadratic in `bound`.
pub fn discover_automorphisms(g: &QuadraticForm, bound: i128) -> Result<Vec<Unimodular>> {
    if g.a == 0 {
        return Err(pre(format!("{g} has vanishing leading coefficient")));
    }
    let mut out = Vec::new();
    for p in -bound..=bound {
        for r in -bound..=bound {
            if gcd(p, r) != 1 {
                continue;
            }
            let v = g.eval(p, r);
            if v != g.a && v != -g.a {
                continue;
            }
            let s = v / g.a;
            let (_, x, y) = egcd(p, r);
            // p·x + r·y = 1, so (−y, x) completes (p, r) to determinant 1
            for eps in [1i128, -1] {
                let (s0, u0) = (-y * eps, x * eps);
                let b0 = 2 * g.a * p * s0 + g.b * (p * u0 + r * s0) + 2 * g.c * r * u0;
                let num = s * g.b - b0;
                if num % (2 * v) != 0 {
                    continue;
                }
                let k = num / (2 * v);
                let t = Unimodular::new(p, s0 + k * p, r, u0 + k * r)?;
                let h = g.act(&t)?;
                if h == *g || h == g.neg() {
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Some `T` with entries bounded by `bmat` and `F_T = G`.
pub fn find_equivalence(f: &QuarticForm, g: &QuarticForm, bmat: i128) -> Result<Option<Unimodular>> {
    let columns = |target: i128| -> Vec<(i128, i128)> {
        let mut v = Vec::new();
        for p in -bmat..=bmat {
            for r in -bmat..=bmat {
                if gcd(p, r) == 1 && f.eval(p, r) == target {
                    v.push((p, r));
                }
            }
        }
        v
    };
    let (first, second) = (columns(g.a4), columns(g.a0));
    for &(p, r) in &first {
        for &(q, s) in &second {
            if (p * s - q * r).abs() != 1 {
                continue;
            }
            let t = Unimodular::new(p, q, r, s)?;
            if f.act(&t)? == *g {
                return Ok(Some(t));
            }
        }
    }
    Ok(None)
}

/// Enumeration, orbit labelling and composition checks.
pub struct Oracle {
    pub max_height: i128,
    pub bmat: i128,
    actions: Mutex<HashMap<QuadraticForm, Arc<FiberAction>>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(DEFAULT_MAX_HEIGHT, DEFAULT_BMAT)
    }
}

impl Oracle {
    pub fn new(max_height: i128, bmat: i128) -> Self {
        Oracle { max_height, bmat, actions: Mutex::new(HashMap::new()) }
    }

    /// All quartics with `max |aᵢ| ≤ height` passing `filter`, ordered by
    /// `(a₄, a₃, a₂, a₁, a₀)`.
    pub fn brute_quartics(&self, height: i128, filter: &Filter) -> Result<Vec<QuarticForm>> {
        if height > self.max_height {
            return Err(pre(format!("height {height} exceeds the maximum {}", self.max_height)));
        }
        if height <= 0 {
            return Ok(Vec::new());
        }
        if !filter.j_zero && height > MAX_UNRESTRICTED_HEIGHT {
            return Err(pre(format!(
                "unrestricted scans are limited to height {MAX_UNRESTRICTED_HEIGHT}"
            )));
        }
        let h = height;
        let slabs: Vec<Vec<QuarticForm>> = (-h..=h)
            .into_par_iter()
            .map(|a4| -> Result<Vec<QuarticForm>> {
                let mut out = Vec::new();
                for a3 in -h..=h {
                    for a2 in -h..=h {
                        for a1 in -h..=h {
                            for a0 in a0_candidates(a4, a3, a2, a1, h, filter.j_zero) {
                                if filter.nonsingular || filter.max_abs_i.is_some() {
                                    let i = 12 * a4 * a0 - 3 * a3 * a1 + a2 * a2;
                                    if filter.max_abs_i.is_some_and(|b| i.abs() > b) {
                                        continue;
                                    }
                                    if filter.j_zero && filter.nonsingular && i == 0 {
                                        continue;
                                    }
                                }
                                let f = QuarticForm::new(a4, a3, a2, a1, a0);
                                if filter.accepts(&f)? {
                                    out.push(f);
                                }
                            }
                        }
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        Ok(slabs.into_iter().flatten().collect())
    }

    /// Moves `F` into the family of its reduced divisor.
    pub fn place(&self, f: &QuarticForm) -> Result<Placement> {
        let (q, _) = hessian_sqrt(f).ok_or_else(|| pre(format!("{f} has no square Hessian")))?;
        let kind = divisor_kind(&q);
        let (divisor, transform) = match kind {
            DivisorKind::Definite => {
                let (mut g, mut s) = reduce(&q)?;
                if g.b < 0 {
                    s = s.compose(&Unimodular::new(1, 0, 0, -1)?);
                    g = q.act(&s)?;
                }
                (g, s)
            }
            DivisorKind::Reducible => {
                let c = reducible_canonical(&q)?;
                (c.form(), c.transform)
            }
            DivisorKind::Indefinite => {
                let (g, s) = crate::family::translate_alpha(&q)?;
                (g, s)
            }
        };
        let moved = f.act(&transform)?;
        let point = member_of(&divisor, &moved)
            .ok_or_else(|| Error::Invariant(format!("{moved} is not in the family of {divisor}")))?;
        Ok(Placement { kind, divisor, transform, point })
    }

    /// The discovered action on the family of a reduced divisor.
    pub fn action(&self, g: &QuadraticForm) -> Result<Arc<FiberAction>> {
        if let Some(a) = self.actions.lock().unwrap().get(g) {
            return Ok(a.clone());
        }
        let bound = self.bmat.max(g.a.abs()).max(g.b.abs()).max(g.c.abs());
        let auts = discover_automorphisms(g, bound)?;
        let action = Arc::new(FiberAction::new(g, integrality_lattice(g)?, &auts)?);
        self.actions.lock().unwrap().insert(*g, action.clone());
        Ok(action)
    }

    /// Orbit label. Indefinite non-square divisors are rejected: their
    /// automorphism groups are infinite.
    pub fn orbit_key(&self, f: &QuarticForm) -> Result<OrbitKey> {
        let inv = invariants(f)?;
        if inv.j != 0 || inv.disc == 0 {
            return Err(pre(format!("{f} needs J = 0 and Δ ≠ 0")));
        }
        let p = self.place(f)?;
        if p.kind == DivisorKind::Indefinite {
            return Err(pre(format!("{f} has an indefinite non-square Hessian divisor")));
        }
        let orbit = self.action(&p.divisor)?.orbit(p.point.a, p.point.b);
        Ok(OrbitKey { kind: p.kind, divisor: p.divisor, point: orbit[0], invariants: inv })
    }

    /// Number of family points over the orbit of `F`.
    pub fn fiber_size(&self, f: &QuarticForm) -> Result<usize> {
        let p = self.place(f)?;
        Ok(self.action(&p.divisor)?.orbit(p.point.a, p.point.b).len())
    }

    /// Distinct orbits among irreducible `J = 0` quartics in the box with
    /// `0 < |I| ≤ I_bound`, after certifying that the box meets every orbit.
    pub fn orbit_count_bruteforce(&self, x: i128, policy: HeightPolicy, height: i128) -> Result<OracleCount> {
        Ok(self.orbit_counts_bruteforce(&[x], policy, height)?.remove(0))
    }

    /// [`Oracle::orbit_count_bruteforce`] for several heights from one scan.
    pub fn orbit_counts_bruteforce(
        &self,
        xs: &[i128],
        policy: HeightPolicy,
        height: i128,
    ) -> Result<Vec<OracleCount>> {
        let bounds: Vec<i128> = xs.iter().map(|&x| policy.i_bound(x)).collect();
        let mut required = Vec::new();
        for (&x, &ib) in xs.iter().zip(&bounds) {
            let r = cover_height(ib)?;
            if r > height {
                return Err(Error::SearchExhausted {
                    what: format!("box does not cover every orbit at X = {x} (needs {r})"),
                    bound: height,
                });
            }
            required.push(r);
        }
        let top = bounds.iter().copied().max().unwrap_or(0);
        let filter = Filter { irreducible: true, max_abs_i: Some(top), ..Filter::j_zero() };
        let forms = self.brute_quartics(height, &filter)?;
        let keyed: Vec<Option<OrbitKey>> = forms
            .par_iter()
            .map(|f| -> Result<Option<OrbitKey>> {
                match self.place(f)?.kind {
                    DivisorKind::Indefinite => Ok(None),
                    _ => self.orbit_key(f).map(Some),
                }
            })
            .collect::<Result<_>>()?;
        let mut out = Vec::new();
        for ((&x, &i_bound), &required_height) in xs.iter().zip(&bounds).zip(&required) {
            let mut keys: HashSet<OrbitKey> = HashSet::new();
            let mut types: HashMap<(DivisorKind, SplittingType), u64> = HashMap::new();
            let (mut scanned, mut indefinite_forms) = (0, 0);
            for (f, k) in forms.iter().zip(&keyed) {
                if invariants(f)?.i.abs() > i_bound {
                    continue;
                }
                scanned += 1;
                match k {
                    None => indefinite_forms += 1,
                    Some(k) => {
                        if keys.insert(*k) {
                            *types.entry((k.kind, splitting_type(f))).or_default() += 1;
                        }
                    }
                }
            }
            let count = |kind| keys.iter().filter(|k| k.kind == kind).count() as u64;
            let mut by_type: Vec<(DivisorKind, SplittingType, u64)> =
                types.into_iter().map(|((k, s), n)| (k, s, n)).collect();
            by_type.sort_by_key(|&(k, s, _)| (k, s as u8));
            out.push(OracleCount {
                x,
                policy,
                i_bound,
                box_height: height,
                required_height,
                scanned,
                definite: count(DivisorKind::Definite),
                reducible: count(DivisorKind::Reducible),
                indefinite_forms,
                by_type,
            });
        }
        Ok(out)
    }
}

fn a0_candidates(a4: i128, a3: i128, a2: i128, a1: i128, h: i128, j_zero: bool) -> Vec<i128> {
    if !j_zero {
        return (-h..=h).collect();
    }
    // J = 0 is linear in a₀
    let k = 72 * a4 * a2 - 27 * a3 * a3;
    let num = 27 * a4 * a1 * a1 + 2 * a2 * a2 * a2 - 9 * a3 * a2 * a1;
    if k == 0 {
        if num == 0 {
            (-h..=h).collect()
        } else {
            Vec::new()
        }
    } else if num % k == 0 && (num / k).abs() <= h {
        vec![num / k]
    } else {
        Vec::new()
    }
}

/// Least box height that meets every irreducible orbit with
/// `0 < |I| ≤ i_bound` and definite or reducible divisor: for each orbit, the
/// smallest height among its family points, maximized over orbits.
pub fn cover_height(i_bound: i128) -> Result<i128> {
    let mut worst = 0;
    let mut visit = |action: &FiberAction, a: i128, b: i128| -> Result<()> {
        let f = action.f;
        let q = family_member(&FamilyPoint::new(f, a, b))?;
        if !is_irreducible_q(&q)? {
            return Ok(());
        }
        let orbit = action.orbit(a, b);
        if orbit[0] != (a, b) {
            return Ok(());
        }
        let mut h = i128::MAX;
        for &(x, y) in &orbit {
            h = h.min(family_member(&FamilyPoint::new(f, x, y))?.height());
        }
        worst = worst.max(h);
        Ok(())
    };
    for d in 3..=crate::counting::divisor_disc_bound(i_bound) {
        for f in crate::classes::enumerate_reduced(d).into_iter().filter(|f| f.b >= 0) {
            let mut action = None;
            for_each_ellipse_point(&f, i_bound, |a, b| {
                let act = match &action {
                    Some(x) => x,
                    None => action.insert(FiberAction::definite(&f)?),
                };
                visit(act, a, b)
            })?;
        }
    }
    let nmax = crate::numth::isqrt(crate::counting::divisor_disc_bound(i_bound));
    for n in 1..=nmax {
        for f in crate::classes::reducible_divisor_reps(n) {
            let action = FiberAction::reducible(&f)?;
            for_each_hyperbola_point(&f, i_bound, |a, b| visit(&action, a, b))?;
        }
    }
    Ok(worst)
}

/// A form `(m, b, ·)` in the SL₂ class of `f` with `m > 0` coprime to `avoid`,
/// skipping the first `skip` such values.
fn leading_rep(f: &QuadraticForm, avoid: i128, skip: usize, bound: i128) -> Result<Option<QuadraticForm>> {
    let mut seen = Vec::new();
    for r in 1..=bound {
        for x in -r..=r {
            for y in -r..=r {
                if x.abs().max(y.abs()) != r || gcd(x, y) != 1 {
                    continue;
                }
                let m = f.eval(x, y);
                if m <= 0 || gcd(m, avoid) != 1 || seen.contains(&m) {
                    continue;
                }
                seen.push(m);
                if seen.len() <= skip {
                    continue;
                }
                let (_, s, t) = egcd(x, y);
                let g = f.act(&Unimodular::new(x, -t, y, s)?)?;
                debug_assert_eq!(g.a, m);
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

/// Dirichlet composition of `(m₁, b₁, ·)` and `(m₂, b₂, ·)` with coprime
/// leading coefficients.
fn dirichlet(f1: &QuadraticForm, f2: &QuadraticForm) -> Result<QuadraticForm> {
    let (m1, m2) = (f1.a, f2.a);
    let inv = mod_inv(m1.rem_euclid(m2), m2).ok_or_else(|| pre("leading coefficients not coprime"))?;
    let t = ((f2.b - f1.b) / 2 * inv).rem_euclid(m2);
    let b = f1.b + 2 * m1 * t;
    let num = b * b - f1.disc();
    if num % (4 * m1 * m2) != 0 {
        return Err(Error::Invariant(format!("{f1} ∘ {f2} is not integral")));
    }
    Ok(QuadraticForm::new(m1 * m2, b, num / (4 * m1 * m2)))
}

/// Composition through represented values: take coprime values `m₁`, `m₂`
/// of `c₁`, `c₂` and the class representing `m₁m₂` with matching roots.
/// Two independent pairs must agree.
pub fn compose_oracle(c1: &FormClass, c2: &FormClass) -> Result<FormClass> {
    if c1.disc != c2.disc {
        return Err(Error::DiscriminantMismatch(c1.disc, c2.disc));
    }
    let d = c1.disc;
    let mut results = Vec::new();
    for round in 0..2 {
        let mut found = None;
        for bound in [8, 32, 128] {
            let Some(g1) = leading_rep(&c1.rep, d, round, bound)? else { continue };
            let Some(g2) = leading_rep(&c2.rep, d * g1.a, round, bound)? else { continue };
            found = Some((g1, g2));
            break;
        }
        let (g1, g2) = found.ok_or_else(|| Error::SearchExhausted {
            what: format!("coprime values of {} and {}", c1.rep, c2.rep),
            bound: 128,
        })?;
        results.push(FormClass::sl2(&dirichlet(&g1, &g2)?)?);
    }
    if results[0] != results[1] {
        return Err(Error::Invariant(format!(
            "composition through values disagrees: {} vs {}",
            results[0].rep, results[1].rep
        )));
    }
    Ok(results[0])
}

/// Irreducibility over ℚ by exhaustive search for a linear or quadratic
/// factor. The middle coefficient of a quadratic factor is bounded by
/// Mignotte's bound `2·‖F‖₂`, which is returned alongside.
pub fn mignotte_irreducible(f: &QuarticForm) -> Result<(bool, i128)> {
    if f.is_zero() {
        return Err(pre("zero form"));
    }
    let c = f.content();
    let g = QuarticForm::from_coeffs(f.coeffs().map(|x| x / c));
    let norm2: i128 = g.coeffs().iter().map(|x| x * x).sum();
    let bound = 2 * crate::numth::isqrt(norm2) + 2;
    if g.a4 == 0 || g.a0 == 0 {
        return Ok((false, bound));
    }
    let div = |n: i128| -> Vec<i128> { (1..=n.abs()).filter(|d| n % d == 0).collect() };
    let (lead, tail) = (div(g.a4), div(g.a0));
    // linear factors s·x − r·y with F(r, s) = 0
    for &s in &lead {
        for &r0 in &tail {
            for r in [r0, -r0] {
                if gcd(r, s) == 1 && g.eval(r, s) == 0 {
                    return Ok((false, bound));
                }
            }
        }
    }
    let coeffs = g.coeffs();
    for &g2 in &lead {
        for &t in &tail {
            for g0 in [t, -t] {
                for g1 in -bound..=bound {
                    if crate::numth::gcd3(g2, g1, g0) == 1 && divides_quadratic(&coeffs, [g2, g1, g0]) {
                        return Ok((false, bound));
                    }
                }
            }
        }
    }
    Ok((true, bound))
}

/// Exact division of `a₄x⁴ + … + a₀` by a primitive `g₂x² + g₁x + g₀`.
fn divides_quadratic(a: &[i128; 5], g: [i128; 3]) -> bool {
    let mut r = *a;
    for i in 0..3 {
        if r[i] % g[0] != 0 {
            return false;
        }
        let q = r[i] / g[0];
        r[i] = 0;
        r[i + 1] -= q * g[1];
        r[i + 2] -= q * g[2];
    }
    r[3] == 0 && r[4] == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::compose;

    fn q4(c: [i128; 5]) -> QuarticForm {
        QuarticForm::from_coeffs(c)
    }

    #[test]
    fn small_boxes() {
        let o = Oracle::default();
        let h1 = o.brute_quartics(1, &Filter::j_zero()).unwrap();
        assert!(h1.contains(&q4([0, 1, 0, -1, 0])));
        assert!(h1.iter().all(|f| invariants(f).unwrap().j == 0));
        assert!(o.brute_quartics(0, &Filter::j_zero()).unwrap().is_empty());
        let never = Filter { pred: Some(|_| false), ..Filter::j_zero() };
        assert!(o.brute_quartics(3, &never).unwrap().is_empty());
        assert!(o.brute_quartics(61, &Filter::j_zero()).is_err());
    }

    #[test]
    fn j_zero_scan_matches_full_scan() {
        let o = Oracle::default();
        let fast = o.brute_quartics(3, &Filter::j_zero()).unwrap();
        let slow = o
            .brute_quartics(3, &Filter { pred: Some(|f| invariants(f).unwrap().j == 0), nonsingular: true, ..Filter::default() })
            .unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn keys_of_translates_agree() {
        let o = Oracle::default();
        let f = q4([0, 1, 0, -1, 0]);
        let g = f.act(&Unimodular::new(1, 1, 0, 1).unwrap()).unwrap();
        assert_eq!(o.orbit_key(&f).unwrap(), o.orbit_key(&g).unwrap());
    }

    #[test]
    fn discovered_groups() {
        let n = |a, b, c| discover_automorphisms(&QuadraticForm::new(a, b, c), 12).unwrap().len();
        assert_eq!(n(1, 0, 1), 8);
        assert_eq!(n(1, 1, 1), 12);
        assert_eq!(n(2, 1, 3), 2);
        assert_eq!(n(1, 1, 0), 8);
    }

    #[test]
    fn mignotte_examples() {
        assert!(mignotte_irreducible(&q4([1, 0, 0, 0, -2])).unwrap().0);
        assert!(mignotte_irreducible(&q4([1, 0, 0, 0, 1])).unwrap().0);
        assert!(!mignotte_irreducible(&q4([1, 0, -6, 0, 1])).unwrap().0);
        assert!(!mignotte_irreducible(&q4([0, 1, 0, -1, 0])).unwrap().0);
        assert!(!mignotte_irreducible(&q4([2, 0, 0, 0, -32])).unwrap().0);
    }

    #[test]
    fn equivalence_search() {
        let f = q4([1, 0, -6, 0, 1]);
        let t = Unimodular::new(2, 1, 1, 1).unwrap();
        let g = f.act(&t).unwrap();
        let found = find_equivalence(&f, &g, 4).unwrap().unwrap();
        assert_eq!(f.act(&found).unwrap(), g);
    }

    #[test]
    fn composition_by_values() {
        for d in [23, 47, 56, 71, 84, 135] {
            let reps = crate::classes::enumerate_reduced(d);
            for a in &reps {
                for b in &reps {
                    let (ca, cb) = (FormClass::sl2(a).unwrap(), FormClass::sl2(b).unwrap());
                    assert_eq!(compose_oracle(&ca, &cb).unwrap(), compose(&ca, &cb).unwrap(), "{a} {b}");
                }
            }
        }
    }
}
