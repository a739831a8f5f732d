//! Frozen reference values: hand-derived examples and published constants.

use jquartic::classes::{
    class_number, compose, cover_multiplicity, enumerate_reduced, h2_star, inverse, is_ambiguous,
    is_opaque, reduce, reducible_class_reps, FormClass, Group,
};
use jquartic::counting::{c1, c2, count_nf, count_nf_naive, reducible_family_member};
use jquartic::family::{
    family_invariant, family_member, integrality_lattice, invariant_form, jacobian, joint_disc,
    lattice_det, lattice_lfa, member_of, outer_search, plane_residual, FamilyPoint,
};
use jquartic::hensel::{canonical_fp, hensel_class_check, nu_of, split_lattices, w_of};
use jquartic::lattice::SubLattice;
use jquartic::oracle::{compose_oracle, Filter, Oracle};
use jquartic::reducibility::{classify, quadratic_factorization, ReducibleKind};
use jquartic::{
    cubic_resolvent, hessian, hessian_sqrt, invariants, is_irreducible_q, splitting_type,
    QuadraticForm, QuarticForm, SplittingType, Unimodular,
};
use num_rational::Ratio;

fn q(a: i128, b: i128, c: i128) -> QuadraticForm {
    QuadraticForm::new(a, b, c)
}

fn q4(a4: i128, a3: i128, a2: i128, a1: i128, a0: i128) -> QuarticForm {
    QuarticForm::new(a4, a3, a2, a1, a0)
}

const F48: QuarticForm = QuarticForm::new(1, 0, -6, 0, 1);
const X4Y4: QuarticForm = QuarticForm::new(1, 0, 0, 0, 1);

#[test]
fn quartic_invariants() {
    let inv = invariants(&F48).unwrap();
    assert_eq!((inv.i, inv.j, inv.disc), (48, 0, 16384));
    assert_eq!(invariants(&X4Y4).unwrap().i, 12);
    assert_eq!(invariants(&q4(1, 1, 0, 0, 1)).unwrap().j, -27);
}

#[test]
fn hessians() {
    assert_eq!(hessian(&X4Y4).unwrap(), q4(0, 0, -48, 0, 0));
    assert_eq!(hessian(&F48).unwrap(), q4(48, 0, 96, 0, 48));
    assert_eq!(hessian(&q4(0, 0, 1, 0, 0)).unwrap(), q4(0, 0, 4, 0, 0));
    assert_eq!(hessian_sqrt(&F48), Some((q(1, 0, 1), Ratio::from_integer(48))));
    assert_eq!(hessian_sqrt(&X4Y4), Some((q(0, 1, 0), Ratio::from_integer(-48))));
    assert_eq!(hessian_sqrt(&q4(1, 1, 0, 0, 1)), None);
}

#[test]
fn action_and_resolvent() {
    let t = Unimodular::new(1, 1, 0, 1).unwrap();
    let g = X4Y4.act(&t).unwrap();
    assert_eq!(g, q4(1, 4, 6, 4, 2));
    assert_eq!(invariants(&g).unwrap().i, 12);
    assert_eq!(cubic_resolvent(&F48).unwrap(), (-144, 0));
    assert_eq!(cubic_resolvent(&X4Y4).unwrap(), (-36, 0));
    assert_eq!(splitting_type(&F48), SplittingType::S1111);
}

#[test]
fn irreducibility() {
    // x⁴ − 6x²y² + y⁴ = (x² + 2xy − y²)(x² − 2xy − y²)
    assert!(!is_irreducible_q(&F48).unwrap());
    let (g, h, c) = quadratic_factorization(&F48).unwrap().unwrap();
    assert_eq!(jquartic::forms::product(&g, &h).unwrap().coeffs().map(|x| c * x), F48.coeffs().map(Ratio::from));
    assert!(!is_irreducible_q(&q4(1, 4, 0, -4, -1)).unwrap());
    assert!(quadratic_factorization(&q4(1, 4, 0, -4, -1)).unwrap().is_some());
    assert!(is_irreducible_q(&q4(1, 0, 0, 0, -2)).unwrap());
    assert!(is_irreducible_q(&X4Y4).unwrap());
}

#[test]
fn reduction_and_enumeration() {
    // boundary case |b| = a takes b ≥ 0
    assert_eq!(reduce(&q(3, 2, 2)).unwrap().0, q(2, 2, 3));
    assert_eq!(reduce(&q(5, 7, 3)).unwrap().0, q(1, 1, 3));
    assert_eq!(enumerate_reduced(3), vec![q(1, 1, 1)]);
    assert_eq!(enumerate_reduced(23), vec![q(1, 1, 6), q(2, 1, 3), q(2, -1, 3)]);
    assert_eq!(enumerate_reduced(20), vec![q(1, 0, 5), q(2, 2, 3)]);
    assert_eq!(class_number(23), 3);
    assert_eq!(h2_star(23), 3);
    assert_eq!(class_number(4), 1);
}

#[test]
fn composition_d23() {
    let c = FormClass::sl2(&q(2, 1, 3)).unwrap();
    assert_eq!(compose(&c, &c).unwrap().rep, q(2, -1, 3));
    assert_eq!(inverse(&c).rep, q(2, -1, 3));
    assert_eq!(compose_oracle(&c, &c).unwrap().rep, q(2, -1, 3));
}

#[test]
fn cover_multiplicities() {
    let gl = |f| FormClass::new(&f, Group::Gl2).unwrap();
    assert!(is_ambiguous(&gl(q(1, 1, 1))));
    assert_eq!(cover_multiplicity(&gl(q(1, 1, 1))), 6);
    assert!(is_ambiguous(&gl(q(1, 0, 1))) && !is_opaque(&gl(q(1, 0, 1))));
    assert_eq!(cover_multiplicity(&gl(q(1, 0, 1))), 2);
    assert!(!is_ambiguous(&gl(q(2, 1, 3))));
    assert_eq!(cover_multiplicity(&gl(q(2, 1, 3))), 1);
}

#[test]
fn reducible_classes() {
    assert_eq!(reducible_class_reps(6), vec![q(1, 6, 0), q(5, 6, 0)]);
    assert_eq!(reducible_class_reps(2), vec![q(1, 2, 0)]);
    let a: Vec<i128> = reducible_class_reps(12).iter().map(|f| f.a).collect();
    assert_eq!(a, vec![1, 5, 7, 11]);
}

#[test]
fn published_constants() {
    assert!((c1() - 0.0958).abs() < 5e-5);
    assert!((c2() - 0.1437).abs() < 5e-5);
}

#[test]
fn canonical_prime_translates() {
    let c = canonical_fp(&q(1, 0, 1)).unwrap();
    assert_eq!(c.form(), q(5, 4, 1));
    assert_eq!(canonical_fp(&q(2, 1, 3)).unwrap().form(), q(3, 1, 2));
    assert_eq!(canonical_fp(&q(1, 1, 1)).unwrap().p, 7);
}

#[test]
fn split_lattices_examples() {
    let (l1, l2) = split_lattices(&q(1, 1, 6), 3, 1).unwrap();
    assert_eq!((l1, l2), (SubLattice::from_congruences(&[(1, 0, 3)]), SubLattice::from_congruences(&[(1, -2, 3)])));
    let (l1, l2) = split_lattices(&q(5, 4, 1), 5, 1).unwrap();
    assert_eq!(l1, SubLattice::from_congruences(&[(0, 1, 5)]));
    assert_eq!(l2, SubLattice::from_congruences(&[(4, 1, 5)]));
}

#[test]
fn auxiliary_forms() {
    assert_eq!(w_of(&q(3, 1, 2)).unwrap(), q(3, -1, 2));
    let w = w_of(&q(5, 4, 1)).unwrap();
    assert_eq!((w, w.disc()), (q(5, -16, 16), -64));
    let f = q(2, 1, 3);
    let wc = FormClass::sl2(&w_of(&f).unwrap()).unwrap();
    assert_eq!(nu_of(&f).unwrap(), jquartic::classes::pow(&wc, 4).unwrap());
    assert_eq!(nu_of(&f).unwrap(), wc);
}

#[test]
fn hensel_d23() {
    let r = hensel_class_check(&q(1, 1, 6), 3, 1).unwrap();
    assert_eq!(r.s, Some(0));
    let p = FormClass::sl2(&r.prime_class).unwrap();
    let got = (FormClass::sl2(&r.lifts[0].0).unwrap(), FormClass::sl2(&r.lifts[0].1).unwrap());
    assert!(got == (inverse(&p), p) || got == (p, inverse(&p)));
    let r = hensel_class_check(&q(2, 1, 3), 3, 2).unwrap();
    assert!(r.pass && r.coset_law);
}

#[test]
fn family_lattices() {
    assert_eq!(lattice_lfa(&q(1, 0, 1)).unwrap().index(), 1);
    assert_eq!(lattice_lfa(&q(1, 1, 1)).unwrap(), SubLattice::from_congruences(&[(0, 1, 4)]));
    assert_eq!(lattice_det(&q(5, 4, 1)).unwrap(), 125);
    assert_eq!(lattice_det(&q(1, 1, 1)).unwrap(), 4);
    assert_eq!(lattice_det(&q(1, 0, 1)).unwrap(), 1);
    assert_eq!(lattice_det(&q(3, 1, 2)).unwrap(), 108);
    assert_eq!(integrality_lattice(&q(3, 1, 2)).unwrap().index(), 108);
}

#[test]
fn family_members_and_heights() {
    let m = |f, a, b| family_member(&FamilyPoint::new(f, a, b)).unwrap();
    assert_eq!(m(q(1, 0, 1), 1, 0), F48);
    assert_eq!(m(q(1, 0, 1), 0, 1), q4(0, 1, 0, -1, 0));
    assert_eq!(m(q(1, 1, 1), 1, 4), q4(1, 4, 0, -4, -1));
    let i = |f, a, b| family_invariant(&FamilyPoint::new(f, a, b)).unwrap().0;
    assert_eq!(i(q(1, 0, 1), 1, 0), 48);
    assert_eq!(i(q(1, 0, 1), 0, 1), 3);
    assert_eq!(i(q(1, 1, 1), 1, 4), 36);
    assert_eq!(member_of(&q(1, 0, 1), &F48), Some(FamilyPoint::new(q(1, 0, 1), 1, 0)));
    assert_eq!(member_of(&q(1, 0, 1), &X4Y4), None);
    assert_eq!(plane_residual(&q(1, 0, 1), &F48), 0);
    assert_eq!(plane_residual(&q(1, 1, 1), &q4(1, 4, 0, -4, -1)), 0);
    assert_eq!(plane_residual(&q(1, 0, 1), &X4Y4), 12);
}

#[test]
fn quadratic_pairs() {
    let (u, v) = (q(1, 0, 0), q(0, 0, 1));
    assert_eq!(jacobian(&u, &v), q(0, 2, 0));
    assert_eq!(joint_disc(&u, &v), 2);
    assert_eq!(invariant_form(&u, &v), q(0, 4, 0));
    assert_eq!(invariant_form(&u, &v).disc(), 16);
    let (u, v) = (q(1, 0, 1), q(0, 1, 0));
    assert_eq!(jacobian(&u, &v), q(1, 0, -1));
    assert_eq!(invariant_form(&u, &v).disc(), 4 * jacobian(&u, &v).disc());
    assert!(!outer_search(&F48, 10).unwrap().is_empty());
    assert!(!outer_search(&q4(0, 1, 0, -1, 0), 10).unwrap().is_empty());
}

#[test]
fn classification() {
    let c = classify(&q4(0, 1, 0, -1, 0), &q(1, 0, 1)).unwrap();
    let jquartic::reducibility::Classification::Reducible(w) = c else { panic!("reducible") };
    // Type 1 is tested first; the Type 2 splitting (xy)(x² − y²) is recorded
    assert_eq!(w.kind, ReducibleKind::Type1);
    assert!(w.also_type2);
    assert_eq!(classify(&F48, &q(1, 0, 1)).unwrap().kind(), Some(ReducibleKind::Type2));
    let irr = family_member(&FamilyPoint::new(q(1, 0, 1), 1, 1)).unwrap();
    assert!(classify(&irr, &q(1, 0, 1)).unwrap().is_irreducible());
}

#[test]
fn counting_examples() {
    assert_eq!(count_nf_naive(&q(1, 0, 1), 100).unwrap(), 28);
    assert_eq!(count_nf(&q(1, 0, 1), 100).unwrap().points, 28);
    let g = reducible_family_member(1, 1, 2, 1);
    assert_eq!(g, q4(2, 4, 6, 4, 1));
    let inv = invariants(&g).unwrap();
    assert_eq!((inv.i, inv.j), (12, 0));
    assert_eq!(invariants(&reducible_family_member(1, 1, 1, 1)).unwrap().disc, 0);
}

#[test]
fn oracle_examples() {
    let o = Oracle::default();
    let forms = o.brute_quartics(1, &Filter::j_zero()).unwrap();
    assert!(forms.contains(&q4(0, 1, 0, -1, 0)));
    assert!(forms.iter().all(|f| f.height() <= 1));
    let f = q4(0, 1, 0, -1, 0);
    let g = f.act(&Unimodular::new(1, 1, 0, 1).unwrap()).unwrap();
    assert_eq!(o.orbit_key(&f).unwrap(), o.orbit_key(&g).unwrap());
}

#[test]
fn equal_invariants_different_divisors() {
    let o = Oracle::default();
    let mut seen: std::collections::HashMap<(i128, i128), jquartic::oracle::OrbitKey> = Default::default();
    let mut found = None;
    for f in o.brute_quartics(4, &Filter::j_zero()).unwrap() {
        let Ok(k) = o.orbit_key(&f) else { continue };
        let inv = (k.invariants.i, k.invariants.j);
        match seen.get(&inv) {
            Some(prev) if prev.divisor != k.divisor && prev.kind == k.kind => {
                assert_ne!(*prev, k);
                found = Some((prev.divisor, k.divisor));
                break;
            }
            _ => {
                seen.insert(inv, k);
            }
        }
    }
    assert!(found.is_some());
}
