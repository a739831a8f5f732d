//! Elementary number theory on `i128`.

/// Apéry's constant ζ(3).
pub const ZETA3: f64 = 1.202_056_903_159_594_2;

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i128
}

pub fn gcd3(a: i128, b: i128, c: i128) -> i128 {
    gcd(gcd(a, b), c)
}

pub fn lcm(a: i128, b: i128) -> i128 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b) * b).abs()
}

/// Returns `(g, x, y)` with `a·x + b·y = g = gcd(a, b) ≥ 0`.
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Inverse of `a` modulo `m > 0`, if it exists.
pub fn mod_inv(a: i128, m: i128) -> Option<i128> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = egcd(a.rem_euclid(m), m);
    (g == 1).then(|| x.rem_euclid(m))
}

pub fn mod_pow(base: i128, mut exp: u128, m: i128) -> i128 {
    let mut result = 1i128.rem_euclid(m);
    let mut b = base.rem_euclid(m);
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result
}

pub fn is_prime(n: i128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2i128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    if n < 1 << 62 {
        // Deterministic Miller-Rabin for 64-bit inputs.
        let mut d = n - 1;
        let mut s = 0;
        while d % 2 == 0 {
            d /= 2;
            s += 1;
        }
        'witness: for a in [2i128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            let mut x = mod_pow(a, d as u128, n);
            if x == 1 || x == n - 1 {
                continue;
            }
            for _ in 1..s {
                x = x * x % n;
                if x == n - 1 {
                    continue 'witness;
                }
            }
            return false;
        }
        return true;
    }
    let mut p = 41;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 2;
    }
    true
}

pub fn primes_up_to(n: usize) -> Vec<i128> {
    if n < 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (0..=n).filter(|&k| sieve[k]).map(|k| k as i128).collect()
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn factorize(n: i128) -> Vec<(i128, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2i128;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: i128) -> i128 {
    factorize(n)
        .into_iter()
        .fold(n.abs(), |acc, (p, _)| acc / p * (p - 1))
}

/// Number of distinct prime factors.
pub fn omega(n: i128) -> u32 {
    factorize(n).len() as u32
}

/// Legendre symbol (a/p) for an odd prime p.
pub fn legendre(a: i128, p: i128) -> i32 {
    let a = a.rem_euclid(p);
    if a == 0 {
        return 0;
    }
    if mod_pow(a, ((p - 1) / 2) as u128, p) == 1 {
        1
    } else {
        -1
    }
}

/// A square root of `a` modulo the odd prime `p` (Tonelli-Shanks).
pub fn sqrt_mod_prime(a: i128, p: i128) -> Option<i128> {
    let a = a.rem_euclid(p);
    if a == 0 {
        return Some(0);
    }
    if legendre(a, p) != 1 {
        return None;
    }
    let (mut q, mut s) = (p - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while legendre(z, p) != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = mod_pow(z, q as u128, p);
    let mut t = mod_pow(a, q as u128, p);
    let mut r = mod_pow(a, ((q + 1) / 2) as u128, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = t2 * t2 % p;
            i += 1;
        }
        let b = mod_pow(c, 1u128 << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    Some(r)
}

/// Floor of the square root of `n ≥ 0`.
pub fn isqrt(n: i128) -> i128 {
    assert!(n >= 0, "isqrt of negative");
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as i128;
    while x > 0 && x.checked_mul(x).map_or(true, |v| v > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|v| v <= n) {
        x += 1;
    }
    x
}

pub fn is_square(n: i128) -> bool {
    n >= 0 && {
        let r = isqrt(n);
        r * r == n
    }
}

/// Floor of the cube root of `n ≥ 0`.
pub fn icbrt(n: i128) -> i128 {
    assert!(n >= 0, "icbrt of negative");
    let mut x = (n as f64).cbrt() as i128;
    let cube = |v: i128| v.checked_mul(v).and_then(|s| s.checked_mul(v));
    while x > 0 && cube(x).map_or(true, |v| v > n) {
        x -= 1;
    }
    while cube(x + 1).is_some_and(|v| v <= n) {
        x += 1;
    }
    x
}

/// Floor of the fourth root of `n ≥ 0`.
pub fn iroot4(n: i128) -> i128 {
    isqrt(isqrt(n))
}

/// `s(D)`: product of the primes dividing `D` to an odd power.
pub fn squarefree_kernel(d: i128) -> i128 {
    factorize(d)
        .into_iter()
        .filter(|&(_, e)| e % 2 == 1)
        .map(|(p, _)| p)
        .product()
}

/// `t(D) = sqrt(D / s(D))`.
pub fn square_part_root(d: i128) -> i128 {
    factorize(d)
        .into_iter()
        .map(|(p, e)| p.pow(e / 2))
        .product()
}

pub fn is_squarefree(n: i128) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

/// Ceiling division for `b > 0`.
pub fn div_ceil(a: i128, b: i128) -> i128 {
    -((-a).div_euclid(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let ps = primes_up_to(50);
        assert_eq!(ps.len(), 15);
        for n in 0..2000 {
            assert_eq!(is_prime(n), ps.contains(&n) || (n > 50 && factorize(n) == vec![(n, 1)]));
        }
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
    }

    #[test]
    fn roots() {
        for n in 0..5000i128 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n);
            let c = icbrt(n);
            assert!(c * c * c <= n && (c + 1).pow(3) > n);
        }
        assert_eq!(icbrt(27 * 1_000_000_000_000 / 4), 18898);
        assert_eq!(isqrt(i128::from(u64::MAX)), i128::from(u32::MAX));
    }

    #[test]
    fn sqrt_mod() {
        for p in primes_up_to(200).into_iter().skip(1) {
            for a in 0..p {
                match sqrt_mod_prime(a, p) {
                    Some(r) => assert_eq!(r * r % p, a),
                    None => assert_eq!(legendre(a, p), -1),
                }
            }
        }
    }

    #[test]
    fn phi_and_kernels() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(97), 96);
        assert_eq!((squarefree_kernel(4), square_part_root(4)), (1, 2));
        assert_eq!((squarefree_kernel(23), square_part_root(23)), (23, 1));
        assert_eq!((squarefree_kernel(72), square_part_root(72)), (2, 6));
        assert_eq!(egcd(240, 46).0, 2);
        assert_eq!(mod_inv(3, 7), Some(5));
        assert_eq!(mod_inv(2, 4), None);
    }
}
