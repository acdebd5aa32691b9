//! Right action of 2x2 integer matrices on homogeneous polynomials in X, Y.
//!
//! A polynomial of degree m is a coefficient vector over the monomial basis
//! X^j Y^(m-j), j = 0..=m. Acting by h = [[a, b], [c, d]] substitutes
//! X -> aX + bY, Y -> cX + dY. Generic over the coefficient type so the hot
//! Hecke path can run in i128 and everything else in BigInt.

use num_bigint::BigInt;
use num_traits::Zero;

pub trait Coeff:
    Clone + Zero + From<i64> + std::ops::AddAssign + std::ops::Mul<Output = Self>
{
}
impl<T> Coeff for T where
    T: Clone + Zero + From<i64> + std::ops::AddAssign + std::ops::Mul<Output = T>
{
}

/// Coefficients of (aX + bY)^e over X^r Y^(e-r), r = 0..=e.
fn linear_power<T: Coeff>(a: i64, b: i64, e: usize) -> Vec<T> {
    let mut cur = vec![T::from(1)];
    let (a, b) = (T::from(a), T::from(b));
    for _ in 0..e {
        let mut next = vec![T::zero(); cur.len() + 1];
        for (r, v) in cur.iter().enumerate() {
            next[r + 1] += v.clone() * a.clone();
            next[r] += v.clone() * b.clone();
        }
        cur = next;
    }
    cur
}

/// (X^i Y^(m-i)) | h: the expansion of (aX+bY)^i (cX+dY)^(m-i).
pub fn apply_monomial<T: Coeff>(i: usize, m: usize, h: [i64; 4]) -> Vec<T> {
    let [a, b, c, d] = h;
    let first = linear_power::<T>(a, b, i);
    let second = linear_power::<T>(c, d, m - i);
    let mut out = vec![T::zero(); m + 1];
    for (r, fr) in first.iter().enumerate() {
        for (s, sc) in second.iter().enumerate() {
            out[r + s] += fr.clone() * sc.clone();
        }
    }
    out
}

/// R | h for a full degree-m polynomial R.
pub fn apply_poly(r: &[BigInt], h: [i64; 4]) -> Vec<BigInt> {
    let m = r.len() - 1;
    let [a, b, c, d] = h;
    let firsts: Vec<Vec<BigInt>> = (0..=m).map(|i| linear_power(a, b, i)).collect();
    let seconds: Vec<Vec<BigInt>> = (0..=m).map(|i| linear_power(c, d, i)).collect();
    let mut out = vec![BigInt::zero(); m + 1];
    for (i, ri) in r.iter().enumerate() {
        if ri.is_zero() {
            continue;
        }
        for (x, fx) in firsts[i].iter().enumerate() {
            for (y, sy) in seconds[m - i].iter().enumerate() {
                out[x + y] += ri * fx * sy;
            }
        }
    }
    out
}

/// 2x2 integer matrix product.
pub fn mat_mul(a: [i64; 4], b: [i64; 4]) -> [i64; 4] {
    [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ]
}

/// Adjugate [[d, -b], [-c, a]]; equals det(h) * h^(-1).
pub fn mat_adj(h: [i64; 4]) -> [i64; 4] {
    [h[3], -h[1], -h[2], h[0]]
}

/// Inverse of a determinant-one matrix.
pub fn mat_inv_unimodular(h: [i64; 4]) -> [i64; 4] {
    debug_assert_eq!(h[0] * h[3] - h[1] * h[2], 1);
    mat_adj(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_under_identity() {
        for m in 0..5usize {
            for i in 0..=m {
                let v = apply_monomial::<i64>(i, m, [1, 0, 0, 1]);
                let mut expected = vec![0i64; m + 1];
                expected[i] = 1;
                assert_eq!(v, expected);
            }
        }
    }

    #[test]
    fn action_composes() {
        let g = [2, 1, 3, 2];
        let h = [1, -1, 0, 1];
        let m = 4usize;
        for i in 0..=m {
            // (P|g)|h == P|(gh)
            let pg = apply_monomial::<BigInt>(i, m, g);
            let lhs = apply_poly(&pg, h);
            let rhs = apply_monomial::<BigInt>(i, m, mat_mul(g, h));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn sigma_and_eta_send_monomials_to_monomials() {
        let sigma = [0, -1, 1, 0];
        let eta = [-1, 0, 0, 1];
        let m = 6usize;
        for i in 0..=m {
            let s = apply_monomial::<i64>(i, m, sigma);
            assert_eq!(s.iter().filter(|&&c| c != 0).count(), 1);
            assert_eq!(s[m - i].abs(), 1);
            let e = apply_monomial::<i64>(i, m, eta);
            assert_eq!(e.iter().filter(|&&c| c != 0).count(), 1);
            assert_eq!(e[i], if i % 2 == 0 { 1 } else { -1 });
        }
    }
}
