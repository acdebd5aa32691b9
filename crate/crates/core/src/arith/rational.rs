//! Arbitrary-precision rationals.
//!
//! `Rational` is `num_rational::BigRational`, which already guarantees the
//! invariants required here: values are kept in lowest terms with a positive
//! denominator, and all arithmetic is exact.

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub type Rational = num_rational::BigRational;

/// Rational from an i64.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational n/d in lowest terms; d must be nonzero.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact integer value, if the rational is integral.
pub fn to_bigint(r: &Rational) -> Option<BigInt> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

/// Serialize as `num/den` with den > 0, in lowest terms. Used by the cache
/// format, which always writes the slash.
pub fn format_slashed(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse the `num/den` form written by [`format_slashed`]. Rejects anything
/// not in lowest terms with positive denominator, so that a cache round-trip
/// is byte-exact.
pub fn parse_slashed(s: &str) -> Option<Rational> {
    let (n, d) = s.split_once('/')?;
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if !d.is_positive() {
        return None;
    }
    let r = Rational::new(n.clone(), d.clone());
    if r.numer() != &n || r.denom() != &d {
        return None; // not in lowest terms
    }
    Some(r)
}

/// Least common multiple of denominators; 1 for an empty slice.
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a Rational>>(items: I) -> BigInt {
    use num_integer::Integer;
    let mut l = BigInt::one();
    for r in items {
        l = l.lcm(r.denom());
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn lowest_terms_and_sign() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn slashed_round_trip() {
        for (n, d) in [(0, 1), (5, 1), (-3, 2), (22, 7)] {
            let r = rat(n, d);
            assert_eq!(parse_slashed(&format_slashed(&r)).unwrap(), r);
        }
        assert!(parse_slashed("4/2").is_none());
        assert!(parse_slashed("1/-2").is_none());
        assert!(parse_slashed("1/0").is_none());
        assert!(parse_slashed("7").is_none());
    }

    #[test]
    fn lcm_of_denominators() {
        let v = [rat(1, 2), rat(1, 3), rat(5, 1)];
        assert_eq!(denominator_lcm(v.iter()), BigInt::from(6));
        assert!(rat_int(0).is_zero());
    }
}
