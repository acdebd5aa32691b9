//! Local-type counts.
//!
//! `lo_prime_power` transcribes the closed-form count of pairs (Galois orbit
//! of an inertial local type of conductor p^n, compatible Atkin-Lehner
//! eigenvalue); `lo` extends it multiplicatively to all levels. The pairs are
//! never materialized, only counted. `character_orbit_count` is a brute-force
//! oracle for the divisor-count ingredients d(p-1), d(p+1) in the n = 2 rows.

use crate::arith::primes::{divisor_count, factorize_int, gcd_i64, is_prime_u64};
use crate::arith::ArithError;

/// LO(N) together with its prime-power breakdown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalOrbitCount {
    pub level: u64,
    pub value: u64,
    /// (prime, exponent, LO(prime^exponent)) for each prime power in N.
    pub breakdown: Vec<(u64, u32, u64)>,
}

/// LO(p^n) by the closed-form case tables.
///
/// For p > 2: 1 (n = 0); 2 (n = 1); d(p-1) + d(p+1) - 1 (n = 2);
/// d(p-1) + d(p+1) (n = 2m, m > 1); 4 (n = 3, or p > 3 and n odd >= 5);
/// 8 (p = 3 and n odd > 3).
///
/// For p = 2: 1 (n = 0, 2); 2 (n = 1, 3); 6 (n = 4); 4 (n = 5); 16 (n = 6);
/// 8 (n >= 7 odd); 12 (n >= 8 even).
pub fn lo_prime_power(p: u64, n: u32) -> Result<u64, ArithError> {
    if !is_prime_u64(p) {
        return Err(ArithError::NotPrime(p));
    }
    if p == 2 {
        return Ok(match n {
            0 | 2 => 1,
            1 | 3 => 2,
            4 => 6,
            5 => 4,
            6 => 16,
            _ if n % 2 == 1 => 8,  // n >= 7 odd
            _ => 12,               // n >= 8 even
        });
    }
    Ok(match n {
        0 => 1,
        1 => 2,
        2 => divisor_count(p - 1)? + divisor_count(p + 1)? - 1,
        3 => 4,
        _ if n % 2 == 0 => divisor_count(p - 1)? + divisor_count(p + 1)?, // n = 2m, m > 1
        _ if p == 3 => 8,                                                // p = 3, n odd > 3
        _ => 4,                                                          // p > 3, n odd >= 5
    })
}

/// LO(N) = prod LO(p_i^{e_i}) over the factorization of N >= 1.
pub fn lo(level: u64) -> Result<LocalOrbitCount, ArithError> {
    let factors = factorize_int(level)?;
    let mut breakdown = Vec::with_capacity(factors.len());
    let mut value = 1u64;
    for (p, e) in factors {
        let v = lo_prime_power(p, e)?;
        value *= v;
        breakdown.push((p, e, v));
    }
    Ok(LocalOrbitCount {
        level,
        value,
        breakdown,
    })
}

/// Number of orbits of residues mod m under multiplication by the units of
/// Z/m (equivalently: Galois orbits of characters of a cyclic group of order
/// m). Computed by explicit orbit enumeration; equals d(m).
pub fn character_orbit_count(m: u64) -> Result<u64, ArithError> {
    if m == 0 {
        return Err(ArithError::ZeroInput);
    }
    let m = m as usize;
    let units: Vec<usize> = (1..m.max(2))
        .filter(|&u| gcd_i64(u as i64, m as i64) == 1)
        .collect();
    let mut seen = vec![false; m];
    let mut orbits = 0u64;
    for a in 0..m {
        if seen[a] {
            continue;
        }
        orbits += 1;
        if m == 1 {
            break;
        }
        for &u in &units {
            seen[(a * u) % m] = true;
        }
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lo_prime_power_examples() {
        for p in [2u64, 3, 5, 7, 97] {
            assert_eq!(lo_prime_power(p, 0).unwrap(), 1);
        }
        // d(6) + d(8) - 1 = 4 + 4 - 1
        assert_eq!(lo_prime_power(7, 2).unwrap(), 7);
        assert_eq!(lo_prime_power(3, 5).unwrap(), 8);
        assert_eq!(lo_prime_power(2, 6).unwrap(), 16);
        assert_eq!(lo_prime_power(2, 10).unwrap(), 12);
        assert_eq!(lo_prime_power(4, 1), Err(ArithError::NotPrime(4)));
    }

    #[test]
    fn lo_multiplicative_examples() {
        assert_eq!(lo(1).unwrap().value, 1);
        for p in [2u64, 3, 5, 7, 11, 13] {
            assert_eq!(lo(p).unwrap().value, 2);
        }
        assert_eq!(lo(12).unwrap().value, 2); // lo(4) * lo(3) = 1 * 2
        assert_eq!(lo(15).unwrap().value, 4);
        assert_eq!(lo(27).unwrap().value, 4); // n = 3 row
        let r = lo(12).unwrap();
        assert_eq!(r.breakdown, vec![(2, 2, 1), (3, 1, 2)]);
        assert_eq!(r.value, r.breakdown.iter().map(|&(_, _, v)| v).product());
        assert!(lo(0).is_err());
    }

    #[test]
    fn lo_is_multiplicative_on_coprime_pairs() {
        for a in 1..120u64 {
            for b in 1..40u64 {
                if gcd_i64(a as i64, b as i64) == 1 {
                    assert_eq!(
                        lo(a * b).unwrap().value,
                        lo(a).unwrap().value * lo(b).unwrap().value
                    );
                }
            }
        }
    }

    #[test]
    fn character_orbits_match_divisor_count() {
        assert_eq!(character_orbit_count(1).unwrap(), 1);
        // residues mod 4 under multiplication by {1, 3}: {0}, {1,3}, {2}
        assert_eq!(character_orbit_count(4).unwrap(), 3);
        assert_eq!(character_orbit_count(12).unwrap(), 6);
        for m in 1..=300u64 {
            assert_eq!(character_orbit_count(m).unwrap(), divisor_count(m).unwrap());
        }
        assert!(character_orbit_count(0).is_err());
    }

    #[test]
    fn formula_ingredients_are_consistent() {
        // lo(p, 2) = orbits(p-1) + orbits(p+1) - 1 for odd primes
        for p in (3..=100u64).filter(|&p| is_prime_u64(p)) {
            assert_eq!(
                lo_prime_power(p, 2).unwrap(),
                character_orbit_count(p - 1).unwrap() + character_orbit_count(p + 1).unwrap() - 1
            );
        }
    }
}
