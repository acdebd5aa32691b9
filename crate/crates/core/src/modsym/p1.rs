//! The projective line P^1(Z/N): canonical representatives, a dense lookup
//! table from arbitrary coprime pairs, and SL_2(Z) lifts of representatives.

use crate::arith::primes::{egcd, gcd_i64};

/// Enumeration of P^1(Z/N) with O(1) lookup.
///
/// The representative of a class is the lexicographically least pair
/// (lambda*u mod N, lambda*v mod N) over units lambda. The number of classes
/// is N * prod_{p | N} (1 + 1/p), the index of Gamma_0(N) in SL_2(Z).
#[derive(Clone, Debug)]
pub struct P1Index {
    pub level: u64,
    reps: Vec<(i64, i64)>,
    table: Vec<u32>,
    lifts: Vec<[i64; 4]>,
}

impl P1Index {
    pub fn new(level: u64) -> Self {
        let n = level as i64;
        assert!(n >= 1);
        if n == 1 {
            return P1Index {
                level,
                reps: vec![(0, 0)],
                table: vec![0],
                lifts: vec![[1, 0, 0, 1]],
            };
        }
        let un = n as usize;
        let units: Vec<i64> = (1..n).filter(|&l| gcd_i64(l, n) == 1).collect();
        let mut table = vec![u32::MAX; un * un];
        let mut reps: Vec<(i64, i64)> = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if table[(u * n + v) as usize] != u32::MAX {
                    continue;
                }
                if gcd_i64(gcd_i64(u, v), n) != 1 {
                    continue;
                }
                // orbit of (u, v) under unit scaling
                let mut orbit: Vec<(i64, i64)> = units
                    .iter()
                    .map(|&l| ((l * u).rem_euclid(n), (l * v).rem_euclid(n)))
                    .collect();
                orbit.sort_unstable();
                orbit.dedup();
                let canonical = orbit[0];
                let idx = reps.len() as u32;
                reps.push(canonical);
                for (a, b) in orbit {
                    table[(a * n + b) as usize] = idx;
                }
            }
        }
        let lifts = reps.iter().map(|&(u, v)| lift_to_sl2(u, v, n)).collect();
        P1Index {
            level,
            reps,
            table,
            lifts,
        }
    }

    pub fn size(&self) -> usize {
        self.reps.len()
    }

    /// Index of the class of (u : v); None when gcd(u, v, N) > 1.
    pub fn lookup(&self, u: i64, v: i64) -> Option<usize> {
        let n = self.level as i64;
        if n == 1 {
            return Some(0);
        }
        let a = u.rem_euclid(n);
        let b = v.rem_euclid(n);
        let e = self.table[(a * n + b) as usize];
        if e == u32::MAX {
            None
        } else {
            Some(e as usize)
        }
    }

    pub fn rep(&self, t: usize) -> (i64, i64) {
        self.reps[t]
    }

    /// An SL_2(Z) matrix [[a, b], [c, d]] whose bottom row is congruent to
    /// the representative of class t mod N.
    pub fn lift(&self, t: usize) -> [i64; 4] {
        self.lifts[t]
    }
}

/// Lift (u, v) with gcd(u, v, N) = 1 to [[a, b], [c, d]] in SL_2(Z) with
/// (c, d) = (u, v) mod N.
pub fn lift_to_sl2(u: i64, v: i64, n: i64) -> [i64; 4] {
    if n == 1 {
        return [1, 0, 0, 1];
    }
    let mut c = u.rem_euclid(n);
    let mut d = v.rem_euclid(n);
    if c == 0 && d == 0 {
        panic!("({u}, {v}) is not a point of P1(Z/{n})");
    }
    if c == 0 {
        c = n;
    }
    let mut j = 0i64;
    while gcd_i64(c, d + j * n) != 1 {
        j += 1;
    }
    d += j * n;
    // a*d - b*c = 1
    let (g, x, y) = egcd(d, c);
    assert_eq!(g, 1);
    [x, -y, c, d]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes::factorize_int;

    fn mu(n: u64) -> u64 {
        factorize_int(n)
            .unwrap()
            .iter()
            .fold(n, |acc, &(p, _)| acc / p * (p + 1))
    }

    #[test]
    fn sizes_match_index_formula() {
        assert_eq!(P1Index::new(1).size(), 1);
        assert_eq!(P1Index::new(11).size(), 12);
        assert_eq!(P1Index::new(12).size(), 24);
        for n in 1..=60u64 {
            assert_eq!(P1Index::new(n).size() as u64, mu(n), "level {n}");
        }
    }

    #[test]
    fn size_12_matches_brute_force_orbit_count() {
        // independent oracle: count unit-scaling orbits of coprime pairs
        let n = 12i64;
        let mut seen = vec![false; (n * n) as usize];
        let mut orbits = 0;
        for u in 0..n {
            for v in 0..n {
                if seen[(u * n + v) as usize] || gcd_i64(gcd_i64(u, v), n) != 1 {
                    continue;
                }
                orbits += 1;
                for l in (1..n).filter(|&l| gcd_i64(l, n) == 1) {
                    seen[(((l * u).rem_euclid(n)) * n + (l * v).rem_euclid(n)) as usize] = true;
                }
            }
        }
        assert_eq!(orbits, 24);
    }

    #[test]
    fn lookup_respects_scaling_and_canonical_reps() {
        for n in [7u64, 12, 24, 30] {
            let p1 = P1Index::new(n);
            let ni = n as i64;
            for t in 0..p1.size() {
                let (u, v) = p1.rep(t);
                assert_eq!(p1.lookup(u, v), Some(t));
                for l in (1..ni).filter(|&l| gcd_i64(l, ni) == 1) {
                    assert_eq!(p1.lookup(l * u, l * v), Some(t));
                }
            }
            assert_eq!(p1.lookup(0, 0), None);
        }
    }

    #[test]
    fn lifts_are_unimodular_with_correct_bottom_row() {
        for n in [1u64, 2, 11, 12, 27, 30] {
            let p1 = P1Index::new(n);
            let ni = n as i64;
            for t in 0..p1.size() {
                let [a, b, c, d] = p1.lift(t);
                assert_eq!(a * d - b * c, 1, "det at level {n}, class {t}");
                let (u, v) = p1.rep(t);
                assert_eq!(
                    (c.rem_euclid(ni), d.rem_euclid(ni)),
                    (u.rem_euclid(ni), v.rem_euclid(ni))
                );
            }
        }
    }
}
