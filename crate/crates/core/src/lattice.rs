//! Full-rank sublattices of ℤ² in column Hermite normal form.

use serde::{Deserialize, Serialize};

use crate::forms::Mat2;
use crate::numth::{gcd, mod_inv};

/// The lattice spanned by the columns `(h11, h21)` and `(0, h22)`, with
/// `h11, h22 > 0` and `0 ≤ h21 < h22`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubLattice {
    pub h11: i128,
    pub h21: i128,
    pub h22: i128,
}

/// HNF of `{(k, l) : c1·k + c2·l ≡ 0 (mod m)}`.
fn single_congruence(c1: i128, c2: i128, m: i128) -> (i128, i128, i128) {
    assert!(m >= 1, "modulus must be positive");
    let (c1, c2) = (c1.rem_euclid(m), c2.rem_euclid(m));
    let g = gcd(c2, m);
    let k22 = m / g;
    let k11 = g / gcd(c1, g);
    let k21 = if k22 == 1 {
        0
    } else {
        let rhs = -(c1 * k11 / g);
        let inv = mod_inv(c2 / g, k22).expect("c2/g is a unit mod m/g");
        (rhs.rem_euclid(k22) * inv).rem_euclid(k22)
    };
    (k11, k21, k22)
}

impl SubLattice {
    pub const FULL: SubLattice = SubLattice { h11: 1, h21: 0, h22: 1 };

    /// Normalizes an arbitrary lower-triangular basis.
    pub fn new(h11: i128, h21: i128, h22: i128) -> Self {
        assert!(h11 > 0 && h22 > 0, "diagonal must be positive");
        SubLattice { h11, h21: h21.rem_euclid(h22), h22 }
    }

    /// The lattice spanned by the columns of a nonsingular integer matrix.
    pub fn from_basis(m: &Mat2) -> Self {
        let (g, x, y) = crate::numth::egcd(m.t1, m.t2);
        assert!(g != 0, "singular basis");
        let det = m.det();
        assert!(det != 0, "singular basis");
        let h22 = (det / g).abs();
        SubLattice::new(g, x * m.t3 + y * m.t4, h22)
    }

    /// `{(x, y) : a·x + b·y ≡ 0 (mod m)}` for every `(a, b, m)`.
    pub fn from_congruences(congruences: &[(i128, i128, i128)]) -> Self {
        congruences
            .iter()
            .fold(Self::FULL, |l, &(a, b, m)| l.with_congruence(a, b, m))
    }

    /// Intersection with `{a·x + b·y ≡ 0 (mod m)}`.
    pub fn with_congruence(&self, a: i128, b: i128, m: i128) -> Self {
        let c1 = (a.rem_euclid(m) * self.h11 + b.rem_euclid(m) * self.h21).rem_euclid(m);
        let c2 = (b.rem_euclid(m) * self.h22).rem_euclid(m);
        let (k11, k21, k22) = single_congruence(c1, c2, m);
        SubLattice::new(self.h11 * k11, self.h21 * k11 + self.h22 * k21, self.h22 * k22)
    }

    /// The two congruences cutting out this lattice.
    pub fn congruences(&self) -> [(i128, i128, i128); 2] {
        [(1, 0, self.h11), (-self.h21, self.h11, self.h11 * self.h22)]
    }

    pub fn intersect(&self, other: &SubLattice) -> Self {
        other
            .congruences()
            .iter()
            .fold(*self, |l, &(a, b, m)| l.with_congruence(a, b, m))
    }

    pub fn index(&self) -> i128 {
        self.h11 * self.h22
    }

    pub fn contains(&self, x: i128, y: i128) -> bool {
        x % self.h11 == 0 && (y - (x / self.h11) * self.h21) % self.h22 == 0
    }

    pub fn is_sublattice_of(&self, other: &SubLattice) -> bool {
        other.contains(self.h11, self.h21) && other.contains(0, self.h22)
    }

    /// Basis matrix `U` with `L = U·ℤ²`; `det U = index > 0`.
    pub fn basis(&self) -> Mat2 {
        Mat2::new(self.h11, 0, self.h21, self.h22)
    }

    /// Whether `L ⊆ p·ℤ²` for some prime `p`.
    pub fn is_imprimitive(&self) -> bool {
        gcd(gcd(self.h11, self.h21), self.h22) > 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(cong: &[(i128, i128, i128)], m: i128) -> Vec<(i128, i128)> {
        let mut v = Vec::new();
        for x in 0..m {
            for y in 0..m {
                if cong.iter().all(|&(a, b, q)| (a * x + b * y) % q == 0) {
                    v.push((x, y));
                }
            }
        }
        v
    }

    #[test]
    fn from_basis_spans() {
        for m in [Mat2::new(2, 3, 5, 7), Mat2::new(-4, 6, 10, 1), Mat2::new(0, 3, 2, 5), Mat2::new(6, 0, 4, 3)] {
            let l = SubLattice::from_basis(&m);
            assert_eq!(l.index(), m.det().abs());
            for (i, j) in [(1, 0), (0, 1), (3, -2)] {
                let (x, y) = m.apply(i, j);
                assert!(l.contains(x, y), "{m:?}");
            }
        }
    }

    #[test]
    fn matches_residue_enumeration() {
        let systems: Vec<Vec<(i128, i128, i128)>> = vec![
            vec![(1, 0, 3)],
            vec![(2, 3, 12)],
            vec![(4, -1, 8), (3, 3, 6)],
            vec![(0, 5, 10), (7, 1, 4), (2, 2, 9)],
            vec![(6, 4, 8)],
            vec![(0, 0, 5)],
        ];
        for sys in systems {
            let m = sys.iter().fold(1, |acc, &(_, _, q)| crate::numth::lcm(acc, q));
            let l = SubLattice::from_congruences(&sys);
            let pts = brute(&sys, m);
            assert_eq!(m * m / pts.len() as i128, l.index(), "{sys:?}");
            for x in 0..m {
                for y in 0..m {
                    assert_eq!(l.contains(x, y), pts.contains(&(x, y)), "{sys:?} at {x},{y}");
                }
            }
        }
    }

    #[test]
    fn intersection_and_nesting() {
        let a = SubLattice::from_congruences(&[(1, 2, 5)]);
        let b = SubLattice::from_congruences(&[(1, 2, 25)]);
        assert!(b.is_sublattice_of(&a));
        assert!(!a.is_sublattice_of(&b));
        assert_eq!(a.intersect(&b), b);
        let c = SubLattice::from_congruences(&[(0, 1, 3)]);
        assert_eq!(a.intersect(&c).index(), 15);
        assert!(SubLattice::from_congruences(&[(1, 0, 2), (0, 1, 2)]).is_imprimitive());
        assert_eq!(a.basis().det(), a.index());
    }
}
