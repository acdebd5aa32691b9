//! Elementary number theory: gcd/Bezout, primality, factorization by trial
//! division, divisor counts, totients, and Kronecker symbols.

use super::ArithError;

/// Greatest common divisor of two i64 values (always nonnegative).
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended gcd: returns (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0.
pub fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            return (-a, -1, 0);
        }
        return (a, 1, 0);
    }
    let (g, x, y) = egcd(b, a % b);
    (g, y, x - (a / b) * y)
}

/// Inverse of a modulo m (m > 0), if gcd(a, m) = 1.
pub fn inv_mod(a: i64, m: i64) -> Option<i64> {
    let (g, x, _) = egcd(a.rem_euclid(m), m);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m))
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, b, m);
        }
        b = mul_mod_u64(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for u64 (the 12 smallest prime bases suffice
/// for all 64-bit inputs).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than n.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    loop {
        if is_prime_u64(c) {
            return c;
        }
        c += 1;
    }
}

/// Iterator over primes 2, 3, 5, ...
pub fn primes() -> impl Iterator<Item = u64> {
    let mut last = 1u64;
    std::iter::from_fn(move || {
        last = next_prime(last);
        Some(last)
    })
}

/// Factorization of n >= 1 by trial division, as (prime, exponent) pairs in
/// ascending prime order. The empty list for n = 1.
pub fn factorize_int(n: u64) -> Result<Vec<(u64, u32)>, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroInput);
    }
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    Ok(out)
}

/// Number of positive divisors d(n) = prod (e_i + 1).
pub fn divisor_count(n: u64) -> Result<u64, ArithError> {
    Ok(factorize_int(n)?
        .iter()
        .map(|&(_, e)| (e + 1) as u64)
        .product())
}

/// All positive divisors of n, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize_int(n).expect("divisors of 0") {
        let prev = out.clone();
        let mut pe = 1u64;
        for _ in 0..e {
            pe *= p;
            out.extend(prev.iter().map(|d| d * pe));
        }
    }
    out.sort_unstable();
    out
}

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut r = n;
    for (p, _) in factorize_int(n).expect("phi of 0") {
        r -= r / p;
    }
    r
}

/// Kronecker symbol (a | n), extending the Jacobi symbol to all integers.
pub fn kronecker(a: i64, n: i64) -> i32 {
    const TAB2: [i32; 8] = [0, 1, 0, -1, 0, -1, 0, 1];
    if n == 0 {
        return if a.abs() == 1 { 1 } else { 0 };
    }
    let mut a = a;
    let mut n = n;
    let mut v = 1i32;
    if n < 0 {
        n = -n;
        if a < 0 {
            v = -v;
        }
    }
    if n % 2 == 0 {
        if a % 2 == 0 {
            return 0;
        }
        while n % 2 == 0 {
            n /= 2;
            v *= TAB2[a.rem_euclid(8) as usize];
        }
    }
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            v *= TAB2[(n % 8) as usize];
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            v = -v;
        }
        a = a.rem_euclid(n);
    }
    if n == 1 {
        v
    } else {
        0
    }
}

/// True for negative fundamental discriminants: D ≡ 1 mod 4 squarefree, or
/// D = 4m with m ≡ 2, 3 mod 4 squarefree.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d >= 0 {
        return false;
    }
    let is_squarefree = |m: u64| -> bool {
        factorize_int(m).map(|f| f.iter().all(|&(_, e)| e == 1)).unwrap_or(false)
    };
    if d.rem_euclid(4) == 1 {
        return is_squarefree(d.unsigned_abs());
    }
    if d % 4 == 0 {
        let m = d / 4;
        let r = m.rem_euclid(4);
        return (r == 2 || r == 3) && is_squarefree(m.unsigned_abs());
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_basics() {
        assert_eq!(factorize_int(1).unwrap(), vec![]);
        assert_eq!(factorize_int(12).unwrap(), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize_int(97).unwrap(), vec![(97, 1)]);
        assert_eq!(factorize_int(0), Err(ArithError::ZeroInput));
    }

    #[test]
    fn divisor_counts() {
        assert_eq!(divisor_count(1).unwrap(), 1);
        assert_eq!(divisor_count(12).unwrap(), 6);
        assert_eq!(divisor_count(97).unwrap(), 2);
        // reconstruct n from its factorization
        for n in 1..500u64 {
            let prod: u64 = factorize_int(n)
                .unwrap()
                .iter()
                .map(|&(p, e)| p.pow(e))
                .product();
            assert_eq!(prod, n);
            let naive = (1..=n).filter(|d| n % d == 0).count() as u64;
            assert_eq!(divisor_count(n).unwrap(), naive);
        }
    }

    #[test]
    fn primality_small() {
        let small: Vec<u64> = (0..100).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
        );
    }

    #[test]
    fn kronecker_values() {
        // -3 is inert at 2; -4 is inert at 3
        assert_eq!(kronecker(-3, 2), -1);
        assert_eq!(kronecker(-4, 3), -1);
        assert_eq!(kronecker(-3, 7), 1); // 7 = 1 mod 3 splits
        assert_eq!(kronecker(-3, 3), 0);
        // multiplicativity in the top argument mod an odd prime
        for p in [5i64, 7, 11, 13] {
            for a in -10..10i64 {
                for b in -10..10i64 {
                    assert_eq!(kronecker(a * b, p), kronecker(a, p) * kronecker(b, p));
                }
            }
        }
    }

    #[test]
    fn fundamental_discriminants() {
        let fund: Vec<i64> = (-30..0).filter(|&d| is_fundamental_discriminant(d)).collect();
        assert_eq!(fund, vec![-24, -23, -20, -19, -15, -11, -8, -7, -4, -3]);
    }

    #[test]
    fn egcd_identity() {
        for a in -20..20i64 {
            for b in -20..20i64 {
                let (g, x, y) = egcd(a, b);
                assert_eq!(a * x + b * y, g);
                assert_eq!(g, gcd_i64(a, b));
            }
        }
    }
}
