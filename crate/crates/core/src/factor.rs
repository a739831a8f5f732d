//! Complete factorization of binary forms of degree ≤ 4 over ℚ.
//!
//! A form with nonzero leading coefficient `a` is made monic by
//! `P(X) = a^(d-1)·F(X/a, 1)`. Linear factors of `P` are its integer roots;
//! a monic quartic without roots splits into integral quadratics exactly when
//! its resolvent cubic has an integer root `y = p + q` for which the two
//! candidate quadratics have integer coefficients.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::integer_roots;

/// `F = unit · ∏ factor^multiplicity`, factors primitive with a positive
/// first nonzero coefficient, coefficients listed from `x^k` down to `y^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: i128,
    pub factors: Vec<(Vec<i128>, u32)>,
}

impl Factorization {
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat(f.len() - 1).take(*m as usize))
            .collect();
        d.sort_unstable();
        d
    }
}

fn big(v: &[i128]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

/// Multiplies binary forms given from `x^d` down.
pub fn mul_forms(p: &[BigInt], q: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn primitive_oriented(p: Vec<BigInt>) -> Vec<BigInt> {
    let g = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let lead_neg = p.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
    p.into_iter()
        .map(|c| {
            let v = &c / &g;
            if lead_neg {
                -v
            } else {
                v
            }
        })
        .collect()
}

/// Monic univariate polynomial (ascending) divided by `X - r`.
fn deflate(p: &[BigInt], r: &BigInt) -> Option<Vec<BigInt>> {
    let n = p.len() - 1;
    let mut q = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (1..=n).rev() {
        carry = &p[i] + &carry * r;
        q[i - 1] = carry.clone();
    }
    let remainder = &p[0] + &carry * r;
    remainder.is_zero().then_some(q)
}

/// Splits a monic quartic `X⁴ + bX³ + cX² + dX + e` (ascending input) into two
/// monic integral quadratics, if possible.
fn split_monic_quartic(p: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let (e, d, c, b) = (&p[0], &p[1], &p[2], &p[3]);
    let four = BigInt::from(4);
    let resolvent = vec![
        -(b * b * e - &four * c * e + d * d),
        b * d - &four * e,
        -c.clone(),
        BigInt::one(),
    ];
    let sqrt_exact = |v: BigInt| -> Option<BigInt> {
        if v.is_negative() {
            return None;
        }
        let r = v.sqrt();
        (&r * &r == v).then_some(r)
    };
    for y in integer_roots(&resolvent) {
        let Some(r1) = sqrt_exact(&y * &y - &four * e) else { continue };
        let Some(r2) = sqrt_exact(b * b - &four * (c - &y)) else { continue };
        let two = BigInt::from(2);
        let (pp, qq) = ((&y + &r1) / &two, (&y - &r1) / &two);
        let (s, t) = ((b + &r2) / &two, (b - &r2) / &two);
        for (s, t) in [(s.clone(), t.clone()), (t, s)] {
            if &s * &qq + &t * &pp == *d {
                let g = vec![pp.clone(), s, BigInt::one()];
                let h = vec![qq.clone(), t, BigInt::one()];
                return Some((g, h));
            }
        }
    }
    None
}

/// Monic factor `Q(X)` (ascending, degree k) back to the primitive binary form
/// `Q(a·x/y)·y^k`, listed from `x^k` down.
fn unmonic(q: &[BigInt], lead: &BigInt) -> Vec<BigInt> {
    let mut pw = BigInt::one();
    let mut asc = Vec::with_capacity(q.len());
    for c in q {
        asc.push(c * &pw);
        pw *= lead;
    }
    asc.reverse();
    primitive_oriented(asc)
}

/// Factors a nonzero binary form of degree ≤ 4 into irreducibles over ℚ.
pub fn factor_binary(coeffs: &[i128]) -> Result<Factorization> {
    assert!(coeffs.len() >= 2 && coeffs.len() <= 5, "degree 1..=4 expected");
    let full = big(coeffs);
    assert!(full.iter().any(|c| !c.is_zero()), "zero form");
    let mut factors: Vec<Vec<BigInt>> = Vec::new();

    // Factors of y correspond to vanishing leading coefficients.
    let mut rest: Vec<BigInt> = full.clone();
    while rest[0].is_zero() {
        factors.push(vec![BigInt::zero(), BigInt::one()]);
        rest.remove(0);
    }
    let d = rest.len() - 1;
    if d > 0 {
        let lead = rest[0].clone();
        // Ascending monic transform.
        let mut p: Vec<BigInt> = Vec::with_capacity(d + 1);
        let mut pw = BigInt::one();
        let mut powers = vec![BigInt::one(); d];
        for slot in powers.iter_mut() {
            *slot = pw.clone();
            pw *= &lead;
        }
        for j in 0..d {
            // coefficient of t^j in F(t, 1) is rest[d - j]
            p.push(&rest[d - j] * &powers[d - 1 - j]);
        }
        p.push(BigInt::one());

        for r in integer_roots(&p) {
            while let Some(q) = deflate(&p, &r) {
                factors.push(unmonic(&[-r.clone(), BigInt::one()], &lead));
                p = q;
                if p.len() == 1 {
                    break;
                }
            }
        }
        match p.len() - 1 {
            0 => {}
            4 => match split_monic_quartic(&p) {
                Some((g, h)) => {
                    factors.push(unmonic(&g, &lead));
                    factors.push(unmonic(&h, &lead));
                }
                None => factors.push(unmonic(&p, &lead)),
            },
            _ => factors.push(unmonic(&p, &lead)),
        }
    }

    assemble(&full, factors, coeffs)
}

/// Groups primitive factors and recovers the unit, checking the product.
fn assemble(full: &[BigInt], mut factors: Vec<Vec<BigInt>>, coeffs: &[i128]) -> Result<Factorization> {
    factors.sort();
    let mut grouped: Vec<(Vec<BigInt>, u32)> = Vec::new();
    for f in factors {
        match grouped.last_mut() {
            Some((g, m)) if *g == f => *m += 1,
            _ => grouped.push((f, 1)),
        }
    }

    let product = grouped.iter().fold(vec![BigInt::one()], |acc, (f, m)| {
        (0..*m).fold(acc, |a, _| mul_forms(&a, f))
    });
    let k = full.iter().position(|c| !c.is_zero()).unwrap();
    let unit = &full[k] / &product[k];
    let check: Vec<BigInt> = product.iter().map(|c| c * &unit).collect();
    if check != full {
        return Err(Error::Invariant(format!(
            "factorization does not multiply back for {coeffs:?}"
        )));
    }
    let conv = |v: &BigInt| v.to_i128().ok_or(Error::Overflow("factor coefficients"));
    Ok(Factorization {
        unit: conv(&unit)?,
        factors: grouped
            .iter()
            .map(|(f, m)| Ok((f.iter().map(conv).collect::<Result<Vec<_>>>()?, *m)))
            .collect::<Result<Vec<_>>>()?,
    })
}

const SMALL_PRIMES: [u64; 30] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127,
];

/// Polynomials over 𝔽_p, ascending, trimmed.
mod fp {
    pub type P = Vec<u64>;

    pub fn trim(mut a: P) -> P {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv(a: u64, p: u64) -> u64 {
        let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> P {
        let mut a = trim(a.to_vec());
        let dm = m.len() - 1;
        let li = inv(m[dm], p);
        while a.len() > dm {
            let k = a.len() - 1;
            let c = a[k] * li % p;
            for (i, &mi) in m.iter().enumerate() {
                let j = k - dm + i;
                a[j] = (a[j] + p - c * mi % p) % p;
            }
            a = trim(a);
        }
        a
    }

    pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> P {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        rem(&out, m, p)
    }

    pub fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> P {
        let mut r = rem(&[1], m, p);
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(&r, &b, m, p);
            }
            b = mulmod(&b, &b, m, p);
            e >>= 1;
        }
        r
    }

    pub fn gcd_degree(a: &[u64], b: &[u64], p: u64) -> usize {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a.len().saturating_sub(1)
    }

    /// `x^(p^k) - x` reduced modulo `m`.
    pub fn frobenius_minus_x(m: &[u64], k: u32, p: u64) -> P {
        let mut h = rem(&[0, 1], m, p);
        for _ in 0..k {
            h = powmod(&h, p, m, p);
        }
        h.resize(h.len().max(2), 0);
        h[1] = (h[1] + p - 1) % p;
        trim(h)
    }
}

/// Proves irreducibility over ℚ of a form with nonzero first and last
/// coefficients from its factorization patterns modulo small primes. `false`
/// means no certificate was found, not that the form is reducible.
pub fn certify_irreducible(coeffs: &[i128]) -> bool {
    let d = coeffs.len() - 1;
    if d <= 1 {
        return d == 1;
    }
    if coeffs[0] == 0 || coeffs[d] == 0 {
        return false;
    }
    if d == 2 {
        let disc = BigInt::from(coeffs[1]).pow(2) - BigInt::from(4) * coeffs[0] * coeffs[2];
        return disc.is_negative() || disc.sqrt().pow(2) != disc;
    }
    let mut no_linear = false;
    let mut no_quadratic = d == 3;
    for &p in &SMALL_PRIMES {
        let pi = p as i128;
        let asc: Vec<u64> = coeffs.iter().rev().map(|c| c.rem_euclid(pi) as u64).collect();
        if asc[d] == 0 {
            continue;
        }
        let deriv: Vec<u64> = (1..=d).map(|i| asc[i] * i as u64 % p).collect();
        if fp::gcd_degree(&asc, &deriv, p) != 0 {
            continue;
        }
        let roots = fp::gcd_degree(&asc, &fp::frobenius_minus_x(&asc, 1, p), p);
        if roots == 0 {
            no_linear = true;
        }
        if d == 4 && !no_quadratic {
            let small = fp::gcd_degree(&asc, &fp::frobenius_minus_x(&asc, 2, p), p);
            // an irreducible quartic or a cubic factor modulo p
            if small == 0 || (roots == 1 && small == 1) {
                no_quadratic = true;
            }
        }
        if no_linear && no_quadratic {
            return true;
        }
    }
    false
}

fn roots_numeric(asc: &[f64]) -> Vec<Complex64> {
    let d = asc.len() - 1;
    let lead = asc[d];
    let monic: Vec<f64> = asc.iter().map(|c| c / lead).collect();
    let radius = 1.0 + monic[..d].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(radius, 0.4 + k as f64 * std::f64::consts::TAU / d as f64))
        .collect();
    let eval = |x: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c);
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..d {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                den = Complex64::new(1e-12, 0.0);
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            moved = moved.max(step.norm() / (1.0 + z[i].norm()));
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn positive_divisors(n: i128) -> Option<Vec<i128>> {
    let mut n = n.unsigned_abs();
    if n > 1 << 40 {
        return None;
    }
    let mut divs = vec![1u128];
    let mut q = 2u128;
    while q * q <= n {
        let mut e = 0;
        while n % q == 0 {
            n /= q;
            e += 1;
        }
        if e > 0 {
            let prev = divs.clone();
            let mut pw = 1;
            for _ in 0..e {
                pw *= q;
                divs.extend(prev.iter().map(|v| v * pw));
            }
        }
        q += 1;
    }
    if n > 1 {
        let prev = divs.clone();
        divs.extend(prev.iter().map(|v| v * n));
    }
    Some(divs.into_iter().map(|v| v as i128).collect())
}

/// Exact quotient of binary forms (descending), if `g` divides `f`.
fn divide_form(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let (n, m) = (f.len() - 1, g.len() - 1);
    let mut r = f.to_vec();
    let mut q = vec![BigInt::zero(); n - m + 1];
    for i in 0..=n - m {
        let (quo, rem) = r[i].div_rem(&g[0]);
        if !rem.is_zero() {
            return None;
        }
        for (j, gj) in g.iter().enumerate() {
            r[i + j] -= &quo * gj;
        }
        q[i] = quo;
    }
    r.iter().all(|c| c.is_zero()).then_some(q)
}

fn near_integer(x: f64) -> Option<i128> {
    let r = x.round();
    ((x - r).abs() <= 1e-6 * (1.0 + x.abs()) && r.abs() < 1e30).then_some(r as i128)
}

/// Looks for a rational factor of degree 1 or 2 guided by numerical roots.
fn numeric_factor(f: &[i128]) -> Option<Vec<i128>> {
    let d = f.len() - 1;
    let divs = positive_divisors(f[0])?;
    let asc: Vec<f64> = f.iter().rev().map(|&c| c as f64).collect();
    let roots = roots_numeric(&asc);
    let full = big(f);
    let divides = |g: Vec<i128>| divide_form(&full, &big(&g)).map(|_| g);
    let is_real = |z: &Complex64| z.im.abs() <= 1e-7 * (1.0 + z.re.abs());
    for z in roots.iter().filter(|z| is_real(z)) {
        for &v in &divs {
            if let Some(u) = near_integer(v as f64 * z.re) {
                if let Some(g) = divides(vec![v, -u]) {
                    return Some(g);
                }
            }
        }
    }
    if d < 4 {
        return None;
    }
    for i in 0..d {
        for j in i + 1..d {
            let (s, p) = (roots[i] + roots[j], roots[i] * roots[j]);
            if !is_real(&s) || !is_real(&p) {
                continue;
            }
            for &v in &divs {
                let (Some(g1), Some(g0)) = (near_integer(-(v as f64) * s.re), near_integer(v as f64 * p.re))
                else {
                    continue;
                };
                if let Some(g) = divides(vec![v, g1, g0]) {
                    return Some(g);
                }
            }
        }
    }
    None
}

fn to_i128(v: &[BigInt]) -> Option<Vec<i128>> {
    v.iter().map(|c| c.to_i128()).collect()
}

/// Splits `f` (nonzero end coefficients) into irreducible factors, each
/// returned up to a constant; `None` defers to the exact algorithm.
fn split_fast(f: &[i128], out: &mut Vec<Vec<BigInt>>) -> Option<()> {
    if f.len() <= 2 || certify_irreducible(f) {
        out.push(primitive_oriented(big(f)));
        return Some(());
    }
    let g = numeric_factor(f)?;
    let q = to_i128(&divide_form(&big(f), &big(&g))?)?;
    out.push(primitive_oriented(big(&g)));
    split_fast(&q, out)
}

/// Same result as [`factor_binary`]. Most irreducible forms are certified by
/// reduction modulo small primes and most factors are located from
/// floating-point roots and then checked exactly.
pub fn factor_form(coeffs: &[i128]) -> Result<Factorization> {
    assert!(coeffs.len() >= 2 && coeffs.len() <= 5, "degree 1..=4 expected");
    assert!(coeffs.iter().any(|&c| c != 0), "zero form");
    let lo = coeffs.iter().position(|&c| c != 0).unwrap();
    let hi = coeffs.iter().rposition(|&c| c != 0).unwrap();
    let mut factors: Vec<Vec<BigInt>> = Vec::new();
    for _ in 0..lo {
        factors.push(big(&[0, 1]));
    }
    for _ in hi + 1..coeffs.len() {
        factors.push(big(&[1, 0]));
    }
    if hi > lo {
        let core = &coeffs[lo..=hi];
        let mut found = Vec::new();
        if split_fast(core, &mut found).is_none() {
            return factor_binary(coeffs);
        }
        factors.extend(found);
    }
    assemble(&big(coeffs), factors, coeffs)
}

/// Irreducibility over ℚ, fast path first.
pub fn is_irreducible(coeffs: &[i128]) -> Result<bool> {
    let d = coeffs.len() - 1;
    if coeffs[0] != 0 && coeffs[d] != 0 && certify_irreducible(coeffs) {
        return Ok(true);
    }
    Ok(factor_form(coeffs)?.degrees() == vec![d])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        // (x - y)(x + y)(x^2 + y^2)
        let f = factor_binary(&[1, 0, 0, 0, -1]).unwrap();
        assert_eq!(f.degrees(), vec![1, 1, 2]);
        assert_eq!(f.unit, 1);
        // x^4 + 4y^4
        let f = factor_binary(&[1, 0, 0, 0, 4]).unwrap();
        assert_eq!(f.factors, vec![(vec![1, -2, 2], 1), (vec![1, 2, 2], 1)]);
        let f = factor_binary(&[1, 0, -6, 0, 1]).unwrap();
        assert_eq!(f.factors, vec![(vec![1, -2, -1], 1), (vec![1, 2, -1], 1)]);
        let f = factor_binary(&[1, 0, 0, 0, -2]).unwrap();
        assert_eq!(f.degrees(), vec![4]);
        // x^3 y - x y^3 = x y (x - y)(x + y)
        let f = factor_binary(&[0, 1, 0, -1, 0]).unwrap();
        assert_eq!(f.degrees(), vec![1, 1, 1, 1]);
        // 6 (2x + 3y)^2 (x^2 + y^2)
        let g: Vec<i128> = vec![24, 72, 78, 72, 54];
        let f = factor_binary(&g).unwrap();
        assert_eq!(f.unit, 6);
        assert_eq!(f.factors, vec![(vec![1, 0, 1], 1), (vec![2, 3], 2)]);
        // non-monic quadratic split: (2x^2 + 3xy + 5y^2)(3x^2 - xy + 7y^2)
        let p = mul_forms(&big(&[2, 3, 5]), &big(&[3, -1, 7]));
        let c: Vec<i128> = p.iter().map(|v| v.to_i128().unwrap()).collect();
        let f = factor_binary(&c).unwrap();
        assert_eq!(f.degrees(), vec![2, 2]);
        // -y^2 (x^2 + y^2)... degree-4 with two y factors
        let f = factor_binary(&[0, 0, -1, 0, -1]).unwrap();
        assert_eq!(f.unit, -1);
        assert_eq!(f.degrees(), vec![1, 1, 2]);
    }

    #[test]
    fn fast_path_agrees() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let pick = |rng: &mut rand_chacha::ChaCha8Rng, r: i128| rng.gen_range(-r..=r);
        for n in 0..600 {
            let c: Vec<i128> = match n % 3 {
                0 => (0..5).map(|_| pick(&mut rng, 40)).collect(),
                1 => {
                    let g = [pick(&mut rng, 20), pick(&mut rng, 20), pick(&mut rng, 20)];
                    let h = [pick(&mut rng, 20), pick(&mut rng, 20), pick(&mut rng, 20)];
                    to_i128(&mul_forms(&big(&g), &big(&h))).unwrap()
                }
                _ => {
                    let l = [pick(&mut rng, 9), pick(&mut rng, 9)];
                    let k = [pick(&mut rng, 200), pick(&mut rng, 200), pick(&mut rng, 200), pick(&mut rng, 200)];
                    to_i128(&mul_forms(&big(&l), &big(&k))).unwrap()
                }
            };
            if c.iter().all(|&v| v == 0) {
                continue;
            }
            assert_eq!(factor_form(&c).unwrap(), factor_binary(&c).unwrap(), "{c:?}");
            let exact = factor_binary(&c).unwrap().degrees() == vec![4];
            assert_eq!(is_irreducible(&c).unwrap(), exact, "{c:?}");
        }
        // Galois group V4: never irreducible modulo any prime
        assert!(!certify_irreducible(&[1, 0, -10, 0, 1]));
        assert!(is_irreducible(&[1, 0, -10, 0, 1]).unwrap());
        assert!(factor_form(&[1, 0, 0, 0, 4]).unwrap().degrees() == vec![2, 2]);
    }
}
