//! Verification suites shared by the command-line runner and the acceptance
//! tests. Each suite returns a [`SuiteReport`] with pass/fail counts and the
//! first few failing cases.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{
    class_number_sum_report, compose, cover_multiplicity, enumerate_reduced, inverse, pow,
    reducible_class_reps, reducible_cover_multiplicity, ClassGroup, FormClass, Group,
};
use crate::counting::{
    count_m, count_n, per_class_error_audit, primitive_uniqueness_check, red_nf_compare,
    default_audit_forms, CountReport, HeightPolicy,
};
use crate::error::{Error, Result};
use crate::family::{
    family_invariant, family_member, hessian_divisible, integrality_lattice, invariant_form,
    jacobian, lattice_det, lattice_lfa, member_of, outer_h0, outer_i, outer_value, expected_det,
    FamilyPoint, QuadPair,
};
use crate::forms::{hessian, invariants, is_irreducible_q, QuadraticForm, QuarticForm, Unimodular};
use crate::hensel::{canonical_fp, gl2_equivalent, hensel_class_check, nu_of, w_of};
use crate::numth::{euler_phi, gcd, gcd3, is_prime, legendre};
use crate::oracle::{compose_oracle, mignotte_irreducible, DivisorKind, Filter, Oracle};
use crate::reducibility::classify;

/// Failing cases kept per suite.
pub const MAX_WITNESSES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    OracleEquivalence,
    Parametrization,
    Completeness,
    Determinants,
    Classgroup,
    Hensel,
    Mertens,
    Reducible,
    OnlyPrimitive,
    Constants,
    Identities,
    Reducibility,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::OracleEquivalence,
        Suite::Parametrization,
        Suite::Completeness,
        Suite::Determinants,
        Suite::Classgroup,
        Suite::Hensel,
        Suite::Mertens,
        Suite::Reducible,
        Suite::OnlyPrimitive,
        Suite::Constants,
        Suite::Identities,
        Suite::Reducibility,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OracleEquivalence => "oracle-equivalence",
            Suite::Parametrization => "parametrization",
            Suite::Completeness => "completeness",
            Suite::Determinants => "determinants",
            Suite::Classgroup => "classgroup",
            Suite::Hensel => "hensel",
            Suite::Mertens => "mertens",
            Suite::Reducible => "reducible",
            Suite::OnlyPrimitive => "only-primitive",
            Suite::Constants => "constants",
            Suite::Identities => "identities",
            Suite::Reducibility => "reducibility",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub checks: u64,
    pub failures: u64,
    pub witnesses: Vec<String>,
    /// Summary lines, including reported-only findings.
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite: suite.name().to_string(),
            pass: true,
            checks: 0,
            failures: 0,
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            self.pass = false;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures += other.failures;
        self.pass &= other.failures == 0;
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

/// Per-work-unit accumulator, merged in a fixed order.
#[derive(Debug, Default)]
struct Tally {
    checks: u64,
    failures: u64,
    witnesses: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }
}

/// Parameters for every suite; the defaults are the acceptance settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub oracle_xs: Vec<i128>,
    pub oracle_height: i128,
    pub bmat: i128,
    pub param_dmax: i128,
    pub param_box: i128,
    pub completeness_height: i128,
    pub classgroup_dmax: i128,
    pub w_dmax: i128,
    pub hensel_dmax: i128,
    pub hensel_pmax: i128,
    pub hensel_kmax: u32,
    pub mertens_x: i128,
    /// Allowed relative deviation of the class-number sum.
    pub mertens_tol: f64,
    pub phi_nmax: i128,
    pub red_nf_samples: usize,
    pub primitive_x: i128,
    pub ladder: Vec<i128>,
    /// The last trend ratio must lie in `[1/factor, factor]`.
    pub trend_factor: f64,
    pub identity_trials: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 20240601,
            oracle_xs: vec![2_000, 10_000, 20_000],
            oracle_height: 30,
            bmat: crate::oracle::DEFAULT_BMAT,
            param_dmax: 300,
            param_box: 40,
            completeness_height: 25,
            classgroup_dmax: 2000,
            w_dmax: 500,
            hensel_dmax: 500,
            hensel_pmax: 50,
            hensel_kmax: 3,
            mertens_x: 100_000,
            mertens_tol: 0.06,
            phi_nmax: 1000,
            red_nf_samples: 20,
            primitive_x: 1_000_000,
            ladder: vec![1_000_000, 100_000_000, 10_000_000_000, 1_000_000_000_000],
            trend_factor: 2.0,
            identity_trials: 10_000,
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    match suite {
        Suite::OracleEquivalence => {
            oracle_equivalence(&cfg.oracle_xs, HeightPolicy::DiscriminantLeq, cfg.oracle_height, cfg.bmat)
        }
        Suite::Parametrization => parametrization(cfg.param_dmax, cfg.param_box),
        Suite::Completeness => Ok(completeness(cfg.completeness_height, cfg.bmat)?.report),
        Suite::Determinants => determinants(20, 20, 40),
        Suite::Classgroup => classgroup(cfg.classgroup_dmax, cfg.w_dmax),
        Suite::Hensel => hensel(cfg.hensel_dmax, cfg.hensel_pmax, cfg.hensel_kmax),
        Suite::Mertens => mertens(cfg.mertens_x, cfg.mertens_tol),
        Suite::Reducible => reducible(cfg.phi_nmax, cfg.red_nf_samples, cfg.seed),
        Suite::OnlyPrimitive => only_primitive(cfg.primitive_x),
        Suite::Constants => Ok(constants(&cfg.ladder, cfg.trend_factor)?.report),
        Suite::Identities => identities(cfg.identity_trials, cfg.seed),
        Suite::Reducibility => reducibility(60, 15, cfg.identity_trials, cfg.seed),
    }
}

/// Exact agreement of `count_N`, `count_M` with the brute-force orbit counts.
pub fn oracle_equivalence(xs: &[i128], policy: HeightPolicy, height: i128, bmat: i128) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::OracleEquivalence);
    let oracle = Oracle::new(crate::oracle::DEFAULT_MAX_HEIGHT, bmat);
    let brute = oracle.orbit_counts_bruteforce(xs, policy, height)?;
    r.note(format!("policy {policy}; X, I_bound, N, oracle N, M, oracle M, required height"));
    for b in &brute {
        let n = count_n(b.x, policy)?.irreducible_orbits;
        let m = count_m(b.x, policy)?.irreducible_orbits;
        r.check(n == b.definite, || format!("X = {}: count_N = {n}, oracle = {}", b.x, b.definite));
        r.check(m == b.reducible, || format!("X = {}: count_M = {m}, oracle = {}", b.x, b.reducible));
        r.note(format!(
            "{}, {}, {n}, {}, {m}, {}, {}",
            b.x, b.i_bound, b.definite, b.reducible, b.required_height
        ));
    }
    Ok(r)
}

/// Every lattice point of every primitive positive definite `f` in a box:
/// integral coefficients, `J = 0`, `f² | H_F`, the closed form for `I`, and
/// recovery of the point from the quartic.
pub fn parametrization(dmax: i128, bound: i128) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Parametrization);
    let forms: Vec<QuadraticForm> = (3..=dmax).flat_map(enumerate_reduced).collect();
    let tallies: Vec<Tally> = forms
        .par_iter()
        .map(|f| -> Result<Tally> {
            let mut t = Tally::default();
            let l = lattice_lfa(f)?;
            t.check(l == integrality_lattice(f)?, || format!("{f}: L_f,α differs from the integrality lattice"));
            for a in -bound..=bound {
                for b in -bound..=bound {
                    if (a, b) == (0, 0) || !l.contains(a, b) {
                        continue;
                    }
                    let pt = FamilyPoint::new(*f, a, b);
                    let big_f = match family_member(&pt) {
                        Ok(q) => q,
                        Err(e) => {
                            t.check(false, || format!("{f} ({a}, {b}): {e}"));
                            continue;
                        }
                    };
                    let inv = invariants(&big_f)?;
                    t.check(inv.j == 0, || format!("{f} ({a}, {b}): J = {}", inv.j));
                    t.check(hessian_divisible(f, &big_f)?, || format!("{f} ({a}, {b}): f² ∤ H"));
                    let closed = family_invariant(&pt);
                    t.check(closed.is_ok(), || format!("{f} ({a}, {b}): {}", closed.unwrap_err()));
                    t.check(member_of(f, &big_f) == Some(pt), || format!("{f} ({a}, {b}): round trip"));
                }
            }
            Ok(t)
        })
        .collect::<Result<_>>()?;
    let n = forms.len();
    for t in tallies {
        r.merge(t);
    }
    r.note(format!("{n} forms with D ≤ {dmax}, box {bound}"));
    Ok(r)
}

/// Counts behind the completeness suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompletenessReport {
    pub report: SuiteReport,
    pub forms: u64,
    pub landed: u64,
    pub definite_or_reducible: u64,
    pub fiber_matches: u64,
    /// Discovered generic fiber differs from `n_f`.
    pub generic_mismatches: u64,
    /// Generic fiber equals `n_f` but the point has a nontrivial stabiliser.
    pub stabiliser_defects: u64,
}

/// Every `J = 0`, `Δ ≠ 0` quartic in the box lands in one family; fiber
/// sizes are compared with `n_f`. The landing part is binding; fiber
/// mismatches are reported with witnesses.
pub fn completeness(height: i128, bmat: i128) -> Result<CompletenessReport> {
    let mut r = SuiteReport::new(Suite::Completeness);
    let oracle = Oracle::new(crate::oracle::DEFAULT_MAX_HEIGHT, bmat);
    let forms = oracle.brute_quartics(height, &Filter::j_zero())?;
    let mut out = CompletenessReport {
        report: SuiteReport::new(Suite::Completeness),
        forms: forms.len() as u64,
        landed: 0,
        definite_or_reducible: 0,
        fiber_matches: 0,
        generic_mismatches: 0,
        stabiliser_defects: 0,
    };
    let mut fiber_witnesses = Vec::new();
    for big_f in &forms {
        let placed = oracle.place(big_f);
        r.check(placed.is_ok(), || format!("{big_f}: orphan ({})", placed.as_ref().unwrap_err()));
        let Ok(p) = placed else { continue };
        out.landed += 1;
        let n_f = match p.kind {
            DivisorKind::Definite => cover_multiplicity(&FormClass::new(&p.divisor, Group::Gl2)?),
            DivisorKind::Reducible => reducible_cover_multiplicity(&p.divisor)?,
            DivisorKind::Indefinite => continue,
        } as usize;
        out.definite_or_reducible += 1;
        let action = oracle.action(&p.divisor)?;
        let fiber = action.orbit(p.point.a, p.point.b).len();
        if fiber == n_f {
            out.fiber_matches += 1;
        } else {
            let generic = action.size() != n_f;
            let seen = if generic { &mut out.generic_mismatches } else { &mut out.stabiliser_defects };
            *seen += 1;
            // keep witnesses of both kinds
            if *seen <= (MAX_WITNESSES / 2) as u64 {
                fiber_witnesses.push(format!(
                    "{big_f}: divisor {}, fiber {fiber}, generic fiber {}, n_f {n_f}",
                    p.divisor,
                    action.size()
                ));
            }
        }
    }
    let mismatches = out.generic_mismatches + out.stabiliser_defects;
    r.note(format!(
        "{} forms, {} landed, {} with definite or reducible divisor",
        out.forms, out.landed, out.definite_or_reducible
    ));
    r.note(format!(
        "fiber = n_f for {} of {}; {} generic-fiber mismatches, {} stabiliser defects",
        out.fiber_matches, out.definite_or_reducible, out.generic_mismatches, out.stabiliser_defects
    ));
    r.checks += out.definite_or_reducible;
    r.failures += mismatches;
    r.pass &= mismatches == 0;
    for w in fiber_witnesses {
        if r.witnesses.len() < MAX_WITNESSES {
            r.witnesses.push(w);
        }
    }
    out.report = r;
    Ok(out)
}

/// `[ℤ² : L_{f,α}] = 4|α|³` for odd `β`, `|α|³` for even `β`.
pub fn determinants(amax: i128, bmax: i128, cmax: i128) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Determinants);
    for al in (-amax..=amax).filter(|&a| a != 0) {
        for be in -bmax..=bmax {
            for ga in -cmax..=cmax {
                let f = QuadraticForm::new(al, be, ga);
                if gcd3(al, be, ga) != 1 || f.disc() == 0 {
                    continue;
                }
                let got = lattice_det(&f)?;
                r.check(got == expected_det(&f), || format!("{f}: det {got}, expected {}", expected_det(&f)));
                r.check(lattice_lfa(&f)? == integrality_lattice(&f)?, || {
                    format!("{f}: L_f,α differs from the integrality lattice")
                });
            }
        }
    }
    Ok(r)
}

/// Group laws, value-based composition for all pairs, and the `w(f)` results.
pub fn classgroup(dmax: i128, w_dmax: i128) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Classgroup);
    let ds: Vec<i128> = (3..=dmax).filter(|d| matches!(d % 4, 0 | 3)).collect();
    let tallies: Vec<(Tally, u64)> = ds
        .par_iter()
        .map(|&d| -> Result<(Tally, u64)> {
            let mut t = Tally::default();
            let mut exact = 0;
            let g = ClassGroup::new(d)?;
            let e = FormClass::principal(d);
            let h = g.order();
            let table = g.composition_table()?;
            for (i, a) in g.elements.iter().enumerate() {
                t.check(compose(&e, a)? == *a, || format!("D = {d}: 1 ∘ {} ≠ itself", a.rep));
                let ai = inverse(a);
                t.check(compose(a, &ai)? == e, || format!("D = {d}: {} ∘ inverse ≠ 1", a.rep));
                for (j, b) in g.elements.iter().enumerate() {
                    t.check(table[i][j] == table[j][i], || format!("D = {d}: {} ∘ {} not commutative", a.rep, b.rep));
                    let k = (i * 7 + j * 3 + 1) % h;
                    let lhs = table[table[i][j]][k];
                    let rhs = table[i][table[j][k]];
                    t.check(lhs == rhs, || format!("D = {d}: associativity fails at ({i}, {j}, {k})"));
                    let c = g.elements[table[i][j]];
                    let o = compose_oracle(a, b)?;
                    exact += (o == c) as u64;
                    t.check(o.to_gl2() == c.to_gl2(), || {
                        format!("D = {d}: {} ∘ {} = {} but values give {}", a.rep, b.rep, c.rep, o.rep)
                    });
                }
            }
            Ok((t, exact))
        })
        .collect::<Result<_>>()?;
    let mut exact = 0;
    for (t, x) in tallies {
        exact += x;
        r.merge(t);
    }
    r.note(format!("compose_oracle equal to compose in SL₂ for {exact} pairs"));

    let mut wt = Tally::default();
    let mut forms = 0;
    for d in (3..=w_dmax).filter(|d| matches!(d % 4, 0 | 3)) {
        let reps = enumerate_reduced(d);
        let ws = reps.iter().map(w_of).collect::<Result<Vec<_>>>()?;
        for (f, w) in reps.iter().zip(&ws) {
            forms += 1;
            let wc = FormClass::sl2(w)?;
            let nu = nu_of(f)?;
            wt.check(nu == pow(&wc, 4)?, || format!("{f}: [ν] = {} ≠ [w]⁴", nu.rep));
        }
        for i in 0..reps.len() {
            for j in 0..reps.len() {
                let same_f = gl2_equivalent(&reps[i], &reps[j])?;
                let same_w = FormClass::new(&ws[i], Group::Gl2)? == FormClass::new(&ws[j], Group::Gl2)?;
                wt.check(same_f == same_w, || {
                    format!("{} vs {}: f equivalent {same_f}, w equivalent {same_w}", reps[i], reps[j])
                });
            }
        }
    }
    r.merge(wt);
    r.note(format!("[ν] = [w]⁴ and w-distinctness over {forms} forms with D ≤ {w_dmax}"));
    Ok(r)
}

/// Lift classes against `[f]·[𝔭]^{±k}` for every split odd prime.
pub fn hensel(dmax: i128, pmax: i128, kmax: u32) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Hensel);
    let (mut direct, mut swapped, mut vacuous, mut lemma) = (0, 0, 0, 0);
    for d in (3..=dmax).filter(|d| matches!(d % 4, 0 | 3)) {
        for f in enumerate_reduced(d) {
            for p in (3..=pmax).filter(|&p| is_prime(p) && legendre(-d, p) == 1) {
                let h = hensel_class_check(&f, p, kmax)?;
                r.check(h.pass, || format!("{f}, p = {p}: neither orientation"));
                r.check(h.coset_law, || format!("{f}, p = {p}: lifts outside [f][𝔭]^±k"));
                if let Some(ok) = h.class_lemma {
                    lemma += 1;
                    r.check(ok, || format!("{f}, p = {p}: class lemma fails"));
                }
                direct += h.direct as u64;
                swapped += h.swapped as u64;
                vacuous += h.vacuous as u64;
            }
            let c = canonical_fp(&f)?;
            let h = hensel_class_check(&c.form(), c.p, kmax)?;
            lemma += 1;
            r.check(h.class_lemma == Some(true), || format!("{f} as {}: class lemma fails", c.form()));
        }
    }
    r.note(format!(
        "orientation: {direct} direct, {swapped} swapped (both when the lifts coincide), {vacuous} with [f] outside ⟨[𝔭]⟩; class lemma cases {lemma}"
    ));
    Ok(r)
}

/// `Σ_{D ≤ X} h(−D)` against `π/(18ζ(3))·X^{3/2}` within `tol`.
pub fn mertens(x: i128, tol: f64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Mertens);
    let s = class_number_sum_report(x)?;
    r.check((s.full_ratio - 1.0).abs() <= tol, || format!("full ratio {:.4}", s.full_ratio));
    r.note(format!("full sum {} vs {:.1}: ratio {:.4}", s.full_sum, s.full_main_term, s.full_ratio));
    r.note(format!(
        "4 | D sum {} vs {:.1}: ratio {:.4}{}",
        s.four_divides_sum,
        s.four_divides_main_term,
        s.four_divides_ratio,
        if s.four_divides_flagged { " (flagged: outside [0.8, 1.2])" } else { "" }
    ));
    Ok(r)
}

/// `|reducible_class_reps(n)| = φ(n)` and the hyperbola decomposition.
pub fn reducible(nmax: i128, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Reducible);
    for n in 1..=nmax {
        let k = reducible_class_reps(n).len() as i128;
        r.check(k == euler_phi(n), || format!("n = {n}: {k} classes, φ = {}", euler_phi(n)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < samples {
        let alpha = rng.gen_range(-12..=12);
        let beta = rng.gen_range(1..=6);
        if alpha == 0 || gcd(alpha, beta) != 1 {
            continue;
        }
        let x = 10f64.powf(rng.gen_range(10.0..16.0)) as i128;
        let rep = red_nf_compare(alpha, beta, x)?;
        r.check(rep.agree, || {
            format!("(α, β, X) = ({alpha}, {beta}, {x}): S₁ + S₂ − S₃ = {}, raw {}", rep.s1 + rep.s2 - rep.s3, rep.raw)
        });
        r.note(format!(
            "(α, β, X) = ({alpha}, {beta}, {x}): Y = {}, count {}, ratios {:.3} (displayed), {:.3} (derived)",
            rep.y, rep.raw, rep.ratio, rep.derived_ratio
        ));
        done += 1;
    }
    Ok(r)
}

/// No `f` with `D > X^{2/9}` carries two primitive quartics up to sign.
pub fn only_primitive(x: i128) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::OnlyPrimitive);
    let p = primitive_uniqueness_check(x, HeightPolicy::DiscriminantLeq)?;
    for v in &p.violations {
        r.check(false, || format!("{}: {} primitive points, area {:.3}", v.f, v.primitive_points, v.area));
    }
    r.checks = p.forms_checked;
    r.note(format!(
        "{} forms with D > {:.2}, {} carrying a primitive point, max lattice area {:.3}",
        p.forms_checked, p.d_threshold, p.forms_with_primitive, p.max_area
    ));
    Ok(r)
}

/// The trend ratios and the per-class audit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantsReport {
    pub report: SuiteReport,
    pub n: Vec<CountReport>,
    pub m: Vec<CountReport>,
    pub n_pass: bool,
    pub m_pass: bool,
}

/// Positive ratios, the last within `factor` of the constant.
fn trend_ok(reports: &[CountReport], factor: f64) -> bool {
    reports.iter().all(|r| r.ratio > 0.0)
        && reports.last().is_some_and(|r| (1.0 / factor..=factor).contains(&r.ratio))
}

pub fn constants(ladder: &[i128], factor: f64) -> Result<ConstantsReport> {
    let mut r = SuiteReport::new(Suite::Constants);
    let policy = HeightPolicy::DiscriminantLeq;
    let n = crate::counting::count_ladder(ladder, policy, count_n)?;
    let m = crate::counting::count_ladder(ladder, policy, count_m)?;
    let (n_pass, m_pass) = (trend_ok(&n, factor), trend_ok(&m, factor));
    let show = |v: &[CountReport]| {
        v.iter().map(|c| format!("{:.3}", c.ratio)).collect::<Vec<_>>().join(", ")
    };
    r.check(n_pass, || format!("N ratios {}", show(&n)));
    r.check(m_pass, || format!("M ratios {}", show(&m)));
    r.note(format!("N/(c₁X^(1/3)log X): {}", show(&n)));
    r.note(format!("M/(c₂X^(1/3)log X): {}", show(&m)));
    let (_, verdicts) = per_class_error_audit(ladder, &default_audit_forms(), policy)?;
    for v in verdicts {
        r.note(format!(
            "{}: count/predicted term {:.3}, count/area term {:.3}, supports {}",
            v.f,
            v.predicted_ratio,
            v.area_ratio,
            if v.supports_area { "area/det" } else { "predicted" }
        ));
    }
    Ok(ConstantsReport { report: r, n, m, n_pass, m_pass })
}

fn random_quadratic(rng: &mut ChaCha8Rng, b: i128) -> QuadraticForm {
    QuadraticForm::new(rng.gen_range(-b..=b), rng.gen_range(-b..=b), rng.gen_range(-b..=b))
}

fn random_quartic(rng: &mut ChaCha8Rng, b: i128) -> QuarticForm {
    QuarticForm::from_coeffs([0; 5].map(|_| rng.gen_range(-b..=b)))
}

/// A product of a few elementary matrices, with a random determinant sign.
pub fn random_unimodular(rng: &mut ChaCha8Rng) -> Unimodular {
    let mut t = if rng.gen_bool(0.5) {
        Unimodular::new(1, 0, 0, 1).unwrap()
    } else {
        Unimodular::new(0, 1, 1, 0).unwrap()
    };
    for _ in 0..3 {
        let k = rng.gen_range(-3..=3);
        let e = if rng.gen_bool(0.5) { Unimodular::new(1, k, 0, 1) } else { Unimodular::new(1, 0, k, 1) };
        t = t.compose(&e.unwrap());
    }
    t
}

/// Randomized algebraic identities, seeded.
pub fn identities(trials: usize, seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Identities);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let (u, v) = (random_quadratic(&mut rng, 50), random_quadratic(&mut rng, 50));
        let lhs = invariant_form(&u, &v).disc();
        let rhs = 4 * jacobian(&u, &v).disc();
        r.check(lhs == rhs, || format!("u = {u}, v = {v}: Δ(𝓕) = {lhs}, 4Δ(𝓙) = {rhs}"));
    }
    for _ in 0..trials {
        let f = random_quartic(&mut rng, 30);
        let t = random_unimodular(&mut rng);
        let moved = f.act(&t)?;
        let ok = hessian(&moved)? == hessian(&f)?.act(&t)?;
        r.check(ok, || format!("F = {f}, T = {:?}: H(F_T) ≠ H(F)_T", t.entries()));
        let (a, b) = (invariants(&f)?, invariants(&moved)?);
        r.check(a == b, || format!("F = {f}, T = {:?}: invariants change", t.entries()));
    }
    let mut done = 0;
    while done < trials {
        let (u, v) = (random_quadratic(&mut rng, 12), random_quadratic(&mut rng, 12));
        let dv = v.disc();
        if dv == 0 {
            continue;
        }
        let pair = QuadPair { u, v };
        // scaling (h₂, h₁) by Δ(v) makes h₀ integral
        let (h2, h1) = (dv * rng.gen_range(-6..=6), dv * rng.gen_range(-6..=6));
        let h0 = outer_h0(h2, h1, &pair)?;
        let direct = invariants(&outer_value(h2, h1, h0, &pair)?)?.i;
        let closed = outer_i(h2, h1, &pair)?;
        r.check(closed == direct.into(), || format!("u = {u}, v = {v}, h = ({h2}, {h1}, {h0}): {closed} vs {direct}"));
        done += 1;
    }
    r.note(format!("{trials} trials per identity, seed {seed}"));
    Ok(r)
}

/// Largest family member height handed to the (slow) Mignotte search.
const MIGNOTTE_HEIGHT: i128 = 60;

/// Family classification against factorization, and the Mignotte search
/// against factorization on family members and random quartics.
pub fn reducibility(dmax: i128, bound: i128, random: usize, seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Reducibility);
    let forms: Vec<QuadraticForm> = (3..=dmax).flat_map(enumerate_reduced).collect();
    let tallies: Vec<(Tally, u64)> = forms
        .par_iter()
        .map(|f| -> Result<(Tally, u64)> {
            let mut t = Tally::default();
            let mut red = 0;
            let l = lattice_lfa(f)?;
            for a in -bound..=bound {
                for b in -bound..=bound {
                    if (a, b) == (0, 0) || !l.contains(a, b) {
                        continue;
                    }
                    let q = family_member(&FamilyPoint::new(*f, a, b))?;
                    let irr = is_irreducible_q(&q)?;
                    red += !irr as u64;
                    let c = classify(&q, f)?;
                    t.check(c.is_irreducible() == irr, || format!("{q} in the family of {f}: classify disagrees"));
                    if q.height() <= MIGNOTTE_HEIGHT {
                        let (m, _) = mignotte_irreducible(&q)?;
                        t.check(m == irr, || format!("{q}: Mignotte search says {m}"));
                    }
                }
            }
            Ok((t, red))
        })
        .collect::<Result<_>>()?;
    let mut red = 0;
    for (t, k) in tallies {
        red += k;
        r.merge(t);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        let q = random_quartic(&mut rng, 20);
        if q.a4 == 0 || q.a0 == 0 {
            continue;
        }
        let irr = is_irreducible_q(&q)?;
        let (m, _) = mignotte_irreducible(&q)?;
        r.check(m == irr, || format!("{q}: Mignotte search says {m}"));
    }
    r.note(format!("{} family forms with D ≤ {dmax}, box {bound}: {red} reducible members", forms.len()));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        assert!(parametrization(40, 10).unwrap().pass);
        assert!(determinants(4, 4, 6).unwrap().pass);
        assert!(classgroup(150, 60).unwrap().pass);
        assert!(hensel(60, 20, 2).unwrap().pass);
        assert!(identities(200, 1).unwrap().pass);
        assert!(reducibility(12, 6, 200, 1).unwrap().pass);
    }

    #[test]
    fn failures_keep_witnesses() {
        let mut r = SuiteReport::new(Suite::Mertens);
        for i in 0..20 {
            r.check(i % 2 == 0, || format!("case {i}"));
        }
        assert!(!r.pass);
        assert_eq!((r.checks, r.failures, r.witnesses.len()), (20, 10, MAX_WITNESSES));
        assert_eq!(r.witnesses[0], "case 1");
    }
}
