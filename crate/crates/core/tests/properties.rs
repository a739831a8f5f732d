use std::sync::OnceLock;

use jquartic::classes::enumerate_reduced;
use jquartic::counting::{count_n, count_nf, count_nf_naive, HeightPolicy};
use jquartic::family::{family_member, for_each_ellipse_point, lattice_lfa, member_of, FamilyPoint};
use jquartic::oracle::{mignotte_irreducible, Oracle};
use jquartic::{hessian, invariants, is_irreducible_q, QuadraticForm, QuarticForm, Unimodular};
use proptest::prelude::*;

fn oracle() -> &'static Oracle {
    static O: OnceLock<Oracle> = OnceLock::new();
    O.get_or_init(Oracle::default)
}

fn reduced_forms(dmax: i128) -> &'static [QuadraticForm] {
    static F: OnceLock<Vec<QuadraticForm>> = OnceLock::new();
    F.get_or_init(|| (3..=dmax).flat_map(enumerate_reduced).collect())
}

fn quartic(b: i128) -> impl Strategy<Value = QuarticForm> {
    prop::array::uniform5(-b..=b).prop_map(QuarticForm::from_coeffs)
}

/// Products of elementary matrices, possibly with determinant −1.
fn unimodular() -> impl Strategy<Value = Unimodular> {
    (any::<bool>(), prop::collection::vec((any::<bool>(), -3i128..=3), 1..5)).prop_map(|(flip, steps)| {
        let mut t = if flip { Unimodular::new(0, 1, 1, 0).unwrap() } else { Unimodular::IDENTITY };
        for (upper, k) in steps {
            let e = if upper { Unimodular::new(1, k, 0, 1) } else { Unimodular::new(1, 0, k, 1) };
            t = t.compose(&e.unwrap());
        }
        t
    })
}

/// A family member `(f, A, B)` with `f` reduced, `D ≤ 100`, and the point a
/// small combination of the lattice basis.
fn family_point() -> impl Strategy<Value = FamilyPoint> {
    (0..reduced_forms(100).len(), -4i128..=4, -4i128..=4)
        .prop_filter("nonzero point", |&(_, x, y)| (x, y) != (0, 0))
        .prop_map(|(i, x, y)| {
            let f = reduced_forms(100)[i];
            let m = lattice_lfa(&f).unwrap().basis();
            let (a, b) = m.apply(x, y);
            FamilyPoint::new(f, a, b)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn invariants_survive_unimodular_action(f in quartic(40), t in unimodular()) {
        prop_assert_eq!(invariants(&f).unwrap(), invariants(&f.act(&t).unwrap()).unwrap());
    }

    #[test]
    fn hessian_is_covariant(f in quartic(40), t in unimodular()) {
        let lhs = hessian(&f.act(&t).unwrap()).unwrap();
        prop_assert_eq!(lhs, hessian(&f).unwrap().act(&t).unwrap());
    }

    #[test]
    fn j_zero_forces_middle_coefficient_divisible_by_three(pt in family_point()) {
        let f = family_member(&pt).unwrap();
        prop_assert_eq!(invariants(&f).unwrap().j, 0);
        prop_assert_eq!(f.a2 % 3, 0);
    }

    #[test]
    fn orbit_keys_are_invariant(pt in family_point(), ts in prop::collection::vec(unimodular(), 3)) {
        let f = family_member(&pt).unwrap();
        prop_assume!(invariants(&f).unwrap().disc != 0);
        let key = oracle().orbit_key(&f).unwrap();
        for t in ts {
            prop_assert_eq!(oracle().orbit_key(&f.act(&t).unwrap()).unwrap(), key);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn row_count_matches_box_scan(i in 0..reduced_forms(200).len(), ib in 10i128..600) {
        let f = reduced_forms(200)[i];
        prop_assert_eq!(count_nf(&f, ib).unwrap().points, count_nf_naive(&f, ib).unwrap());
    }

    #[test]
    fn scaled_points_follow_the_height(i in 0..reduced_forms(120).len(), ib in 50i128..2000) {
        let f = reduced_forms(120)[i];
        let mut pts = std::collections::HashSet::new();
        for_each_ellipse_point(&f, ib, |a, b| { pts.insert((a, b)); Ok(()) }).unwrap();
        for &(a, b) in &pts {
            let big_f = family_member(&FamilyPoint::new(f, a, b)).unwrap();
            let inv = invariants(&big_f).unwrap();
            prop_assert!(inv.disc != 0 && inv.i.abs() <= ib);
            let r = big_f.content();
            let base = QuarticForm::from_coeffs(big_f.coeffs().map(|c| c / r));
            prop_assert_eq!(member_of(&f, &base), Some(FamilyPoint::new(f, a / r, b / r)));
            let i0 = invariants(&base).unwrap().i.abs();
            prop_assert_eq!(i0 * r * r, inv.i.abs());
            for s in 2..=4 {
                prop_assert_eq!(pts.contains(&(s * a, s * b)), i0 * (r * s) * (r * s) <= ib);
            }
        }
    }

    #[test]
    fn mignotte_search_agrees(f in quartic(12)) {
        prop_assume!(f.a4 != 0 && f.a0 != 0);
        prop_assert_eq!(mignotte_irreducible(&f).unwrap().0, is_irreducible_q(&f).unwrap());
    }
}

#[test]
fn per_discriminant_totals_add_up() {
    for x in [10_000, 300_000, 5_000_000] {
        let r = count_n(x, HeightPolicy::DiscriminantLeq).unwrap();
        let s: u64 = r.per_d.values().map(|c| c.orbits).sum();
        let p: u64 = r.per_d.values().map(|c| c.points).sum();
        assert_eq!((s, p), (r.irreducible_orbits, r.raw_points));
    }
}
