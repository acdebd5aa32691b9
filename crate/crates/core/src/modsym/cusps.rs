//! Cusps of Gamma_0(N): normalization, the classical equivalence criterion
//! on pairs (p : q), and on-the-fly class enumeration. For the +1 sign
//! quotient the classes are additionally glued under negation p/q ~ -p/q.

use crate::arith::primes::{euler_phi, gcd_i64, inv_mod};

/// A cusp as a primitive pair (p, q) with q >= 0; infinity is (1, 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cusp {
    pub p: i64,
    pub q: i64,
}

impl Cusp {
    pub fn new(num: i64, den: i64) -> Self {
        if den == 0 {
            return Cusp { p: 1, q: 0 };
        }
        let g = gcd_i64(num, den);
        let (mut p, mut q) = (num / g, den / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        Cusp { p, q }
    }

    pub fn infinity() -> Self {
        Cusp { p: 1, q: 0 }
    }

    pub fn negate(&self) -> Self {
        Cusp::new(-self.p, self.q)
    }
}

/// Gamma_0(N)-equivalence of cusps: p1/q1 ~ p2/q2 iff
/// s1*q2 = s2*q1 (mod gcd(q1*q2, N)) where p_i s_i = 1 (mod q_i).
pub fn gamma0_equivalent(a: Cusp, b: Cusp, n: i64) -> bool {
    let s1 = inverse_for(a);
    let s2 = inverse_for(b);
    let g = gcd_i64(a.q * b.q, n);
    if g == 0 {
        // both cusps are infinity
        return true;
    }
    (s1 * b.q - s2 * a.q).rem_euclid(g) == 0
}

fn inverse_for(c: Cusp) -> i64 {
    if c.q == 0 {
        // p = +-1 and s solves p*s = 1 exactly
        c.p
    } else if c.q == 1 {
        0
    } else {
        inv_mod(c.p, c.q).expect("cusp pair is primitive")
    }
}

/// Number of cusps of Gamma_0(N): sum over d | N of phi(gcd(d, N/d)).
pub fn cusp_count(n: u64) -> u64 {
    crate::arith::primes::divisors(n)
        .into_iter()
        .map(|d| euler_phi(gcd_i64(d as i64, (n / d) as i64) as u64))
        .sum()
}

/// Incremental cusp classifier. `signed` controls the extra negation gluing
/// used by the +1 quotient boundary.
#[derive(Clone, Debug)]
pub struct CuspClasses {
    pub level: i64,
    signed: bool,
    reps: Vec<Cusp>,
}

impl CuspClasses {
    pub fn new(level: u64, signed: bool) -> Self {
        CuspClasses {
            level: level as i64,
            signed,
            reps: Vec::new(),
        }
    }

    pub fn class_of(&mut self, c: Cusp) -> usize {
        for (i, &r) in self.reps.iter().enumerate() {
            if gamma0_equivalent(c, r, self.level)
                || (self.signed && gamma0_equivalent(c.negate(), r, self.level))
            {
                return i;
            }
        }
        self.reps.push(c);
        self.reps.len() - 1
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[Cusp] {
        &self.reps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(Cusp::new(2, 4), Cusp { p: 1, q: 2 });
        assert_eq!(Cusp::new(3, -6), Cusp { p: -1, q: 2 });
        assert_eq!(Cusp::new(5, 0), Cusp::infinity());
        assert_eq!(Cusp::new(0, 7), Cusp { p: 0, q: 1 });
    }

    #[test]
    fn cusp_counts_small_levels() {
        let expected = [
            (1u64, 1u64),
            (2, 2),
            (3, 2),
            (4, 3),
            (6, 4),
            (11, 2),
            (12, 6),
            (16, 6),
            (27, 6),
            (30, 8),
        ];
        for (n, c) in expected {
            assert_eq!(cusp_count(n), c, "level {n}");
        }
    }

    #[test]
    fn equivalence_matches_count_by_enumeration() {
        // classify every cusp d/c for c | N, 0 <= d < c + the cusp at
        // infinity; the class count must equal the formula value
        for n in 1..=30u64 {
            let mut classes = CuspClasses::new(n, false);
            classes.class_of(Cusp::infinity());
            for c in 1..=n as i64 {
                if (n as i64) % c != 0 {
                    continue;
                }
                for d in 0..c.max(1) {
                    if gcd_i64(d, c) == 1 || (c == 1 && d == 0) {
                        classes.class_of(Cusp::new(d, c));
                    }
                }
            }
            assert_eq!(classes.len() as u64, cusp_count(n), "level {n}");
        }
    }

    #[test]
    fn level_four_examples() {
        assert!(gamma0_equivalent(Cusp::new(1, 4), Cusp::infinity(), 4));
        assert!(!gamma0_equivalent(Cusp::new(0, 1), Cusp::infinity(), 4));
        assert!(!gamma0_equivalent(Cusp::new(1, 2), Cusp::new(0, 1), 4));
    }
}
