//! Factorization of integer polynomials into irreducibles over Q:
//! squarefree (Yun) decomposition, factorization modulo the smallest good
//! prime (Berlekamp), quadratic-free linear Hensel lifting to a Mignotte
//! height bound, and Zassenhaus subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::modp::{
    berlekamp_factor, p_divrem, p_is_squarefree, p_mul, p_rem, p_sub, p_trim, Fp, PolyP,
};
use super::poly::IntPolynomial;
use super::primes::primes;
use super::ArithError;

/// Factor a nonzero integer polynomial into primitive irreducible factors
/// with positive leading coefficients and their multiplicities, so that
/// content(f) * prod factor^multiplicity = f. Factors are ordered by degree,
/// then by coefficients compared from the leading term down.
pub fn factor_int_poly(f: &IntPolynomial) -> Result<Vec<(IntPolynomial, u32)>, ArithError> {
    if f.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(vec![]);
    }
    let mut out: Vec<(IntPolynomial, u32)> = Vec::new();
    for (g, mult) in f.squarefree_decomposition() {
        for irr in factor_squarefree_primitive(&g) {
            out.push((irr, mult));
        }
    }
    out.sort_by(|a, b| IntPolynomial::factor_order(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// Irreducible factors of a primitive squarefree polynomial with positive
/// leading coefficient.
fn factor_squarefree_primitive(g: &IntPolynomial) -> Vec<IntPolynomial> {
    let n = g.deg();
    if n == 1 {
        return vec![g.clone()];
    }
    let lc = g.leading().unwrap().clone();
    if lc.is_one() {
        return factor_monic_squarefree(g);
    }
    // Monicize: ghat(x) = lc^(n-1) g(x/lc), factor, substitute back.
    let ghat = IntPolynomial::from_bigints(
        (0..=n)
            .map(|i| {
                if i == n {
                    BigInt::one()
                } else {
                    g.coeff(i) * lc.pow((n - 1 - i) as u32)
                }
            })
            .collect(),
    );
    debug_assert!(ghat.is_monic());
    factor_monic_squarefree(&ghat)
        .into_iter()
        .map(|h| h.compose_scale_x(&lc).primitive_part())
        .collect()
}

/// Irreducible factors of a monic squarefree integer polynomial.
fn factor_monic_squarefree(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let n = f.deg();
    if n == 1 {
        return vec![f.clone()];
    }
    // Smallest prime where the image stays squarefree; equivalently the
    // smallest prime dividing neither the leading coefficient (here 1) nor
    // the discriminant.
    let (p, fbar) = primes()
        .map(|p| (p, f.to_mod_p(Fp::new(p))))
        .find(|(p, fbar)| fbar.len() == n + 1 && p_is_squarefree(fbar, Fp::new(*p)))
        .expect("a good prime exists");
    let fp = Fp::new(p);
    let modular = berlekamp_factor(&fbar, fp);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    // Mignotte-style bound: any monic divisor h of f has
    // |h|_inf <= 2^n * |f|_2.
    let bound: BigInt = (BigInt::one() << n) * (f.norm_l2_ceil() + 1);
    let mut pa = BigInt::from(p);
    let two_bound: BigInt = &bound * 2;
    while pa <= two_bound {
        pa *= p;
    }
    let lifted = hensel_multifactor(f, &modular, fp, &pa);
    recombine(f.clone(), lifted, &pa)
}

/// Reduce all coefficients into [0, m).
fn reduce_mod(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::from_bigints(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Symmetric representative: coefficients in (-m/2, m/2].
fn symmetric_mod(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    let half = m / 2;
    IntPolynomial::from_bigints(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn polyp_to_int(f: &PolyP) -> IntPolynomial {
    IntPolynomial::from_bigints(f.iter().map(|&c| BigInt::from(c)).collect())
}

/// Lift the factorization f = prod(facs) (mod p) to modulus pa = p^a by a
/// balanced product tree; f must be monic and squarefree mod p.
fn hensel_multifactor(
    f: &IntPolynomial,
    facs: &[PolyP],
    fp: Fp,
    pa: &BigInt,
) -> Vec<IntPolynomial> {
    if facs.len() == 1 {
        return vec![reduce_mod(f, pa)];
    }
    let mid = facs.len() / 2;
    let mut g0 = vec![1u64];
    for fac in &facs[..mid] {
        g0 = p_mul(&g0, fac, fp);
    }
    let mut h0 = vec![1u64];
    for fac in &facs[mid..] {
        h0 = p_mul(&h0, fac, fp);
    }
    let (g, h) = hensel_lift_pair(f, &g0, &h0, fp, pa);
    let mut out = hensel_multifactor(&g, &facs[..mid], fp, pa);
    out.extend(hensel_multifactor(&h, &facs[mid..], fp, pa));
    out
}

/// Lift f = g0 * h0 (mod p), all monic, to f = G * H (mod pa) by linear
/// Hensel steps. Returns (G, H) monic with coefficients in [0, pa).
fn hensel_lift_pair(
    f: &IntPolynomial,
    g0: &PolyP,
    h0: &PolyP,
    fp: Fp,
    pa: &BigInt,
) -> (IntPolynomial, IntPolynomial) {
    // Bezout: s*g0 + t*h0 = 1 mod p (coprime since f is squarefree mod p).
    let (s, t) = p_bezout(g0, h0, fp);
    debug_assert!(!s.is_empty() || !t.is_empty());
    let p_big = BigInt::from(fp.p);
    let mut modulus = p_big.clone();
    let mut g = polyp_to_int(g0);
    let mut h = polyp_to_int(h0);
    while &modulus < pa {
        // c = (f - g*h) / modulus, then correct modulo p.
        let diff = f.sub(&g.mul(&h));
        let c = IntPolynomial::from_bigints(
            diff.coeffs()
                .iter()
                .map(|v| {
                    let (q, r) = v.div_rem(&modulus);
                    debug_assert!(r.is_zero(), "hensel invariant violated");
                    q
                })
                .collect(),
        );
        let cbar = c.to_mod_p(fp);
        // delta_g = (t*c) mod g0; delta_h = (c - delta_g*h0) / g0 over F_p.
        let dg = p_rem(&p_mul(&t, &cbar, fp), g0, fp);
        let num = p_sub(&cbar, &p_mul(&dg, h0, fp), fp);
        let (dh, rem) = p_divrem(&num, g0, fp);
        debug_assert!(rem.is_empty(), "hensel correction not divisible");
        let _ = &s;
        g = g.add(&polyp_to_int(&dg).scale(&modulus));
        h = h.add(&polyp_to_int(&dh).scale(&modulus));
        modulus *= fp.p;
        g = reduce_mod(&g, &modulus);
        h = reduce_mod(&h, &modulus);
    }
    (g, h)
}

/// Extended gcd over F_p[x]: returns (s, t) with s*a + t*b = 1 for coprime
/// monic a, b.
fn p_bezout(a: &PolyP, b: &PolyP, fp: Fp) -> (PolyP, PolyP) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0: PolyP = vec![1];
    let mut s1: PolyP = vec![];
    let mut t0: PolyP = vec![];
    let mut t1: PolyP = vec![1];
    while !r1.is_empty() {
        let (q, r) = p_divrem(&r0, &r1, fp);
        let s = p_sub(&s0, &p_mul(&q, &s1, fp), fp);
        let t = p_sub(&t0, &p_mul(&q, &t1, fp), fp);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    assert_eq!(r0.len(), 1, "inputs must be coprime");
    let inv = fp.inv(r0[0]);
    (
        p_trim(s0.iter().map(|&c| fp.mul(c, inv)).collect()),
        p_trim(t0.iter().map(|&c| fp.mul(c, inv)).collect()),
    )
}

/// Zassenhaus recombination: find true factors as symmetric lifts of subset
/// products of the modular factors. Subsets are scanned by ascending size
/// and then lexicographically, so the outcome is deterministic.
fn recombine(f: IntPolynomial, lifted: Vec<IntPolynomial>, pa: &BigInt) -> Vec<IntPolynomial> {
    let mut f = f;
    let mut rem = lifted;
    let mut out = Vec::new();
    let mut size = 1usize;
    while 2 * size <= rem.len() {
        match find_factor_of_size(&f, &rem, size, pa) {
            Some((subset, factor, quotient)) => {
                out.push(factor);
                f = quotient;
                for &i in subset.iter().rev() {
                    rem.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if !f.is_zero() && f.deg() > 0 {
        out.push(f);
    }
    out.sort_by(IntPolynomial::factor_order);
    out
}

fn find_factor_of_size(
    f: &IntPolynomial,
    rem: &[IntPolynomial],
    size: usize,
    pa: &BigInt,
) -> Option<(Vec<usize>, IntPolynomial, IntPolynomial)> {
    let n = rem.len();
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        // candidate for this subset
        let mut prod = IntPolynomial::one();
        for &i in &idx {
            prod = reduce_mod(&prod.mul(&rem[i]), pa);
        }
        let cand = symmetric_mod(&prod, pa);
        let ok_quick = match (cand.coeff(0).is_zero(), f.coeff(0).is_zero()) {
            (true, false) => false,
            (true, true) => true,
            (false, _) => f.coeff(0).is_multiple_of(&cand.coeff(0)),
        };
        if ok_quick {
            if let Some(q) = f.div_exact(&cand) {
                return Some((idx, cand, q));
            }
        }
        // next combination in lexicographic order
        let mut i = size;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] != i + n - size {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn factor_difference_of_squares() {
        let f = p(&[-1, 0, 1]);
        let factors = factor_int_poly(&f).unwrap();
        assert_eq!(factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
    }

    #[test]
    fn irreducible_quadratic_stays_whole() {
        let f = p(&[1, 0, 1]); // x^2 + 1
        let factors = factor_int_poly(&f).unwrap();
        assert_eq!(factors, vec![(p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn factor_with_multiplicity() {
        // (x-2)^2 (x^2+x+1), expanded through polynomial arithmetic
        let f = p(&[-2, 1]).pow(2).mul(&p(&[1, 1, 1]));
        let factors = factor_int_poly(&f).unwrap();
        assert_eq!(factors, vec![(p(&[-2, 1]), 2), (p(&[1, 1, 1]), 1)]);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(
            factor_int_poly(&IntPolynomial::zero()),
            Err(ArithError::ZeroPolynomial)
        );
    }

    #[test]
    fn reconstructs_input_with_content() {
        let f = p(&[6, -6]).mul(&p(&[1, 0, 2])).mul(&p(&[3, 1])); // content 6... times factors
        let factors = factor_int_poly(&f).unwrap();
        let mut back = IntPolynomial::constant(f.content());
        for (g, m) in &factors {
            back = back.mul(&g.pow(*m));
        }
        assert_eq!(back, f);
    }

    #[test]
    fn deterministic_order() {
        let f = p(&[-1, 0, 1]).mul(&p(&[-4, 0, 1])).mul(&p(&[1, 1, 1]));
        let a = factor_int_poly(&f).unwrap();
        let b = factor_int_poly(&f).unwrap();
        assert_eq!(a, b);
        // degree-1 factors first, sorted by coefficients from leading down
        let degs: Vec<usize> = a.iter().map(|(g, _)| g.deg()).collect();
        assert_eq!(degs, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn non_monic_primitive() {
        // (2x+1)(3x-5)
        let f = p(&[1, 2]).mul(&p(&[-5, 3]));
        let factors = factor_int_poly(&f).unwrap();
        assert_eq!(factors, vec![(p(&[1, 2]), 1), (p(&[-5, 3]), 1)]);
    }

    #[test]
    fn cyclotomic_like_products() {
        // x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
        let f = p(&[-1, 0, 0, 0, 0, 0, 1]);
        let factors = factor_int_poly(&f).unwrap();
        assert_eq!(
            factors,
            vec![
                (p(&[-1, 1]), 1),
                (p(&[1, 1]), 1),
                (p(&[1, -1, 1]), 1),
                (p(&[1, 1, 1]), 1),
            ]
        );
    }
}
