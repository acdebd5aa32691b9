//! Exact characteristic polynomials of integer matrices.
//!
//! The polynomial is computed modulo a deterministic sequence of 62-bit
//! primes via Hessenberg reduction and recombined by CRT against a rigorous
//! Hadamard-style coefficient bound, then lifted to the symmetric range.
//! This keeps every arithmetic step integral and the result exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::matrix::ExactMatrix;
use super::modp::{charpoly_mod_p, Fp};
use super::poly::IntPolynomial;
use super::primes::is_prime_u64;
use super::ArithError;

/// Characteristic polynomial det(xI - M) of a square matrix with integral
/// entries. Monic of degree dim(M); satisfies Cayley-Hamilton.
pub fn charpoly(m: &ExactMatrix) -> Result<IntPolynomial, ArithError> {
    m.require_square()?;
    if !m.is_integral() {
        return Err(ArithError::NonIntegral);
    }
    let n = m.rows();
    let ints: Vec<BigInt> = m.entries().iter().map(|e| e.numer().clone()).collect();
    Ok(charpoly_bigint(&ints, n))
}

/// Characteristic polynomial of an n x n row-major BigInt matrix.
pub fn charpoly_bigint(entries: &[BigInt], n: usize) -> IntPolynomial {
    assert_eq!(entries.len(), n * n);
    if n == 0 {
        return IntPolynomial::one();
    }
    // |c_{n-k}| <= C(n,k) (sqrt(k) maxabs)^k <= (1 + ceil(sqrt(n)) maxabs)^n
    let maxabs = ExactMatrix::max_abs(entries).max(BigInt::one());
    let s = isqrt_ceil(n);
    let bound: BigInt = (BigInt::one() + BigInt::from(s) * &maxabs).pow(n as u32);
    let target: BigInt = &bound * 2 + 1;

    let mut primes_used: Vec<u64> = Vec::new();
    let mut modulus = BigInt::one();
    let mut residues: Vec<Vec<u64>> = Vec::new();
    let mut candidate = (1u64 << 62) - 1;
    while modulus < target {
        while !is_prime_u64(candidate) {
            candidate -= 1;
        }
        let p = candidate;
        candidate -= 1;
        let fp = Fp::new(p);
        let pm = BigInt::from(p);
        let mat_p: Vec<u64> = entries
            .iter()
            .map(|e| {
                let m = e.mod_floor(&pm);
                m.to_u64().expect("residue fits u64")
            })
            .collect();
        residues.push(charpoly_mod_p(&mat_p, n, fp));
        primes_used.push(p);
        modulus *= pm;
    }

    let coeffs = (0..=n)
        .map(|k| {
            let rs: Vec<(u64, u64)> = primes_used
                .iter()
                .zip(&residues)
                .map(|(&p, cp)| (p, cp[k]))
                .collect();
            crt_symmetric(&rs, &modulus)
        })
        .collect();
    IntPolynomial::from_bigints(coeffs)
}

fn isqrt_ceil(n: usize) -> u64 {
    let mut s = 0u64;
    while s * s < n as u64 {
        s += 1;
    }
    s.max(1)
}

/// Combine residues r_i mod p_i into the symmetric representative modulo
/// the product (which must equal `modulus`).
fn crt_symmetric(residues: &[(u64, u64)], modulus: &BigInt) -> BigInt {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for &(p, r) in residues {
        let fp = Fp::new(p);
        let m_mod_p = m.mod_floor(&BigInt::from(p)).to_u64().unwrap();
        let x_mod_p = x.mod_floor(&BigInt::from(p)).to_u64().unwrap();
        let t = fp.mul(fp.sub(r % p, x_mod_p), fp.inv(m_mod_p));
        x += &m * BigInt::from(t);
        m *= BigInt::from(p);
    }
    debug_assert_eq!(&m, modulus);
    let half = modulus / 2;
    if x > half {
        x -= modulus;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat_int;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn charpoly_examples() {
        // 1x1 [c] -> x - c
        assert_eq!(
            charpoly(&m(&[&[5]])).unwrap(),
            IntPolynomial::from_i64s(&[-5, 1])
        );
        // identity 2x2 -> (x-1)^2
        assert_eq!(
            charpoly(&ExactMatrix::identity(2)).unwrap(),
            IntPolynomial::from_i64s(&[1, -2, 1])
        );
        // swap involution -> x^2 - 1
        assert_eq!(
            charpoly(&m(&[&[0, 1], &[1, 0]])).unwrap(),
            IntPolynomial::from_i64s(&[-1, 0, 1])
        );
    }

    #[test]
    fn charpoly_rejects_bad_input() {
        assert_eq!(charpoly(&ExactMatrix::zero(2, 3)), Err(ArithError::NonSquare));
        let mut bad = ExactMatrix::identity(1);
        *bad.at_mut(0, 0) = crate::arith::rational::rat(1, 2);
        assert_eq!(charpoly(&bad), Err(ArithError::NonIntegral));
    }

    /// Faddeev-LeVerrier over exact integers, used as an independent oracle:
    /// M_1 = A, c_{n-1} = -tr(M_1); M_{k+1} = A (M_k + c_{n-k} I),
    /// c_{n-k-1} = -tr(M_{k+1}) / (k+1). All divisions are exact.
    fn charpoly_oracle(a: &ExactMatrix) -> IntPolynomial {
        let n = a.rows();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut mk = a.clone();
        for k in 1..=n {
            let tr: Rational = (0..n).map(|i| mk.at(i, i).clone()).sum();
            let c = -tr / rat_int(k as i64);
            let ci = c.to_integer();
            assert!(c.is_integer());
            coeffs[n - k] = ci.clone();
            if k < n {
                let mut shifted = mk.clone();
                for i in 0..n {
                    *shifted.at_mut(i, i) += Rational::from_integer(ci.clone());
                }
                mk = a.mul(&shifted);
            }
        }
        IntPolynomial::from_bigints(coeffs)
    }

    use crate::arith::rational::Rational;

    #[test]
    fn agrees_with_leverrier_oracle_on_random_matrices() {
        let mut seed = 42u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 21) as i64 - 10
        };
        for n in 1..=6usize {
            for _ in 0..4 {
                let a = ExactMatrix::from_fn(n, n, |_, _| rat_int(next()));
                assert_eq!(charpoly(&a).unwrap(), charpoly_oracle(&a));
            }
        }
    }

    #[test]
    fn cayley_hamilton() {
        let mut seed = 7u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 11) as i64 - 5
        };
        for n in 1..=6usize {
            let a = ExactMatrix::from_fn(n, n, |_, _| rat_int(next()));
            let cp = charpoly(&a).unwrap();
            assert_eq!(cp.deg(), n);
            assert!(cp.is_monic());
            assert!(cp.eval_matrix(&a).is_zero());
        }
    }
}
