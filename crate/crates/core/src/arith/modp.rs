//! Arithmetic in F_p (u64 primes, u128 intermediates) and dense polynomial
//! algebra over F_p: division, gcd, Frobenius powers, deterministic Berlekamp
//! factorization, and the Hessenberg characteristic polynomial mod p.

/// The field F_p for a u64 prime p < 2^63.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64 % self.p;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0, "inverse of zero mod {}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
}

/// Polynomial over F_p, coefficients ascending, no trailing zeros.
pub type PolyP = Vec<u64>;

pub fn p_trim(mut v: PolyP) -> PolyP {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn p_deg(f: &PolyP) -> isize {
    f.len() as isize - 1
}

pub fn p_add(f: &PolyP, g: &PolyP, fp: Fp) -> PolyP {
    let n = f.len().max(g.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let a = f.get(i).copied().unwrap_or(0);
        let b = g.get(i).copied().unwrap_or(0);
        *o = fp.add(a, b);
    }
    p_trim(out)
}

pub fn p_sub(f: &PolyP, g: &PolyP, fp: Fp) -> PolyP {
    let n = f.len().max(g.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let a = f.get(i).copied().unwrap_or(0);
        let b = g.get(i).copied().unwrap_or(0);
        *o = fp.sub(a, b);
    }
    p_trim(out)
}

pub fn p_mul(f: &PolyP, g: &PolyP, fp: Fp) -> PolyP {
    if f.is_empty() || g.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            if b == 0 {
                continue;
            }
            out[i + j] = fp.add(out[i + j], fp.mul(a, b));
        }
    }
    p_trim(out)
}

pub fn p_scale(f: &PolyP, s: u64, fp: Fp) -> PolyP {
    p_trim(f.iter().map(|&c| fp.mul(c, s)).collect())
}

/// Division with remainder; g must be nonzero.
pub fn p_divrem(f: &PolyP, g: &PolyP, fp: Fp) -> (PolyP, PolyP) {
    assert!(!g.is_empty(), "division by zero polynomial");
    if f.len() < g.len() {
        return (vec![], f.clone());
    }
    let mut rem = f.clone();
    let mut quo = vec![0u64; f.len() - g.len() + 1];
    let lg_inv = fp.inv(*g.last().unwrap());
    for k in (0..quo.len()).rev() {
        let idx = k + g.len() - 1;
        if idx >= rem.len() {
            continue;
        }
        let c = fp.mul(rem[idx], lg_inv);
        if c == 0 {
            continue;
        }
        quo[k] = c;
        for (j, &gj) in g.iter().enumerate() {
            rem[k + j] = fp.sub(rem[k + j], fp.mul(c, gj));
        }
    }
    (p_trim(quo), p_trim(rem))
}

pub fn p_rem(f: &PolyP, g: &PolyP, fp: Fp) -> PolyP {
    p_divrem(f, g, fp).1
}

pub fn p_monic(f: &PolyP, fp: Fp) -> PolyP {
    match f.last() {
        None => vec![],
        Some(&l) if l == 1 => f.clone(),
        Some(&l) => p_scale(f, fp.inv(l), fp),
    }
}

pub fn p_gcd(f: &PolyP, g: &PolyP, fp: Fp) -> PolyP {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_empty() {
        let r = p_rem(&a, &b, fp);
        a = b;
        b = r;
    }
    p_monic(&a, fp)
}

pub fn p_derivative(f: &PolyP, fp: Fp) -> PolyP {
    if f.len() <= 1 {
        return vec![];
    }
    p_trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| fp.mul(c, (i as u64) % fp.p))
            .collect(),
    )
}

/// x^e mod f by square-and-multiply.
pub fn p_xpow_mod(e: u64, f: &PolyP, fp: Fp) -> PolyP {
    let x = vec![0, 1];
    let mut acc = vec![1u64];
    let mut base = p_rem(&x, f, fp);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = p_rem(&p_mul(&acc, &base, fp), f, fp);
        }
        base = p_rem(&p_mul(&base, &base, fp), f, fp);
        e >>= 1;
    }
    acc
}

/// Monic squarefree over F_p?
pub fn p_is_squarefree(f: &PolyP, fp: Fp) -> bool {
    let d = p_derivative(f, fp);
    if d.is_empty() {
        return p_deg(f) <= 0;
    }
    p_deg(&p_gcd(f, &d, fp)) == 0
}

/// Kernel basis of an n x n matrix over F_p (row-major), as vectors.
fn p_kernel(mat: &[u64], n: usize, fp: Fp) -> Vec<Vec<u64>> {
    let mut m = mat.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..n {
        let Some(pr) = (r..n).find(|&i| m[i * n + c] != 0) else {
            continue;
        };
        for j in 0..n {
            m.swap(pr * n + j, r * n + j);
        }
        let inv = fp.inv(m[r * n + c]);
        for j in 0..n {
            m[r * n + j] = fp.mul(m[r * n + j], inv);
        }
        for i in 0..n {
            if i != r && m[i * n + c] != 0 {
                let t = m[i * n + c];
                for j in 0..n {
                    let v = fp.sub(m[i * n + j], fp.mul(t, m[r * n + j]));
                    m[i * n + j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for freec in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; n];
        v[freec] = 1;
        for (pr, &pc) in pivots.iter().enumerate() {
            v[pc] = fp.neg(m[pr * n + freec]);
        }
        basis.push(v);
    }
    basis
}

/// Deterministic Berlekamp factorization of a monic squarefree polynomial
/// over F_p. Returns monic irreducible factors sorted by degree then by
/// coefficient vector.
pub fn berlekamp_factor(f: &PolyP, fp: Fp) -> Vec<PolyP> {
    let n = p_deg(f);
    assert!(n >= 1, "factor a nonconstant polynomial");
    let n = n as usize;
    if n == 1 {
        return vec![p_monic(f, fp)];
    }
    let f = p_monic(f, fp);
    // Frobenius matrix: row i = coefficients of x^{p*i} mod f.
    let xp = p_xpow_mod(fp.p, &f, fp);
    let mut rows: Vec<PolyP> = Vec::with_capacity(n);
    let mut cur = vec![1u64];
    for _ in 0..n {
        rows.push(cur.clone());
        cur = p_rem(&p_mul(&cur, &xp, fp), &f, fp);
    }
    // v (as a row vector of coefficients) is in the Berlekamp subalgebra iff
    // v Q = v, i.e. (Q^T - I) v^T = 0.
    let mut m = vec![0u64; n * n];
    for (i, row) in rows.iter().enumerate() {
        for j in 0..n {
            let q_ij = row.get(j).copied().unwrap_or(0);
            m[j * n + i] = q_ij; // transpose
        }
    }
    for i in 0..n {
        m[i * n + i] = fp.sub(m[i * n + i], 1);
    }
    let kernel = p_kernel(&m, n, fp);
    let r = kernel.len();
    let mut factors: Vec<PolyP> = vec![f.clone()];
    'outer: for v in &kernel {
        if factors.len() == r {
            break;
        }
        let vp = p_trim(v.clone());
        if p_deg(&vp) <= 0 {
            continue; // the constants never split anything
        }
        let mut next: Vec<PolyP> = Vec::new();
        for u in factors.into_iter() {
            if p_deg(&u) <= 1 {
                next.push(u);
                continue;
            }
            let mut rem_u = u;
            for s in 0..fp.p {
                if p_deg(&rem_u) <= 1 {
                    break;
                }
                let shifted = p_sub(&vp, &vec![s], fp);
                let g = p_gcd(&rem_u, &shifted, fp);
                let dg = p_deg(&g);
                if dg > 0 && dg < p_deg(&rem_u) {
                    let (q, rr) = p_divrem(&rem_u, &g, fp);
                    debug_assert!(rr.is_empty());
                    next.push(g);
                    rem_u = p_monic(&q, fp);
                }
            }
            next.push(rem_u);
        }
        factors = next;
        if factors.len() == r {
            break 'outer;
        }
    }
    factors.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
    factors
}

/// Characteristic polynomial det(xI - A) of an n x n matrix over F_p,
/// via Hessenberg reduction. Coefficients ascending, monic, length n + 1.
pub fn charpoly_mod_p(mat: &[u64], n: usize, fp: Fp) -> Vec<u64> {
    if n == 0 {
        return vec![1];
    }
    let mut h = mat.to_vec();
    let at = |h: &Vec<u64>, i: usize, j: usize| h[i * n + j];
    // Hessenberg form by similarity transformations.
    for c in 0..n.saturating_sub(2) {
        let Some(piv) = (c + 1..n).find(|&i| at(&h, i, c) != 0) else {
            continue;
        };
        if piv != c + 1 {
            for j in 0..n {
                h.swap(piv * n + j, (c + 1) * n + j);
            }
            for i in 0..n {
                h.swap(i * n + piv, i * n + c + 1);
            }
        }
        let tinv = fp.inv(at(&h, c + 1, c));
        for i in c + 2..n {
            let u = fp.mul(at(&h, i, c), tinv);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let v = fp.sub(at(&h, i, j), fp.mul(u, at(&h, c + 1, j)));
                h[i * n + j] = v;
            }
            for r in 0..n {
                let v = fp.add(at(&h, r, c + 1), fp.mul(u, at(&h, r, i)));
                h[r * n + c + 1] = v;
            }
        }
    }
    // det(xI - H) for Hessenberg H by the standard recurrence.
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for m in 1..=n {
        // (x - h[m-1][m-1]) * p_{m-1}
        let prev = &polys[m - 1];
        let mut pm = vec![0u64; prev.len() + 1];
        for (i, &c) in prev.iter().enumerate() {
            pm[i + 1] = fp.add(pm[i + 1], c);
            pm[i] = fp.sub(pm[i], fp.mul(at(&h, m - 1, m - 1), c));
        }
        // subtract h[i-1][m-1] * prod * p_{i-1}, prod over subdiagonal
        let mut prod = 1u64;
        for i in (1..m).rev() {
            prod = fp.mul(prod, at(&h, i, i - 1));
            if prod == 0 {
                break;
            }
            let coef = fp.mul(at(&h, i - 1, m - 1), prod);
            if coef == 0 {
                continue;
            }
            for (j, &c) in polys[i - 1].iter().enumerate() {
                pm[j] = fp.sub(pm[j], fp.mul(coef, c));
            }
        }
        polys.push(pm);
    }
    polys.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_divrem_mod_p() {
        let fp = Fp::new(7);
        let f = vec![1, 0, 3, 1]; // x^3 + 3x^2 + 1... ascending: 1 + 3x^2 + x^3
        let g = vec![2, 1]; // x + 2
        let (q, r) = p_divrem(&f, &g, fp);
        let back = p_add(&p_mul(&q, &g, fp), &r, fp);
        assert_eq!(back, f);
    }

    #[test]
    fn berlekamp_splits_product_of_linears() {
        let fp = Fp::new(5);
        // (x-1)(x-2)(x-3) mod 5
        let f = p_mul(&p_mul(&vec![4, 1], &vec![3, 1], fp), &vec![2, 1], fp);
        let factors = berlekamp_factor(&f, fp);
        assert_eq!(factors, vec![vec![2, 1], vec![3, 1], vec![4, 1]]);
    }

    #[test]
    fn berlekamp_keeps_irreducible() {
        let fp = Fp::new(7);
        // x^2 + 1 is irreducible mod 7 (since -1 is not a QR mod 7)
        let f = vec![1, 0, 1];
        let factors = berlekamp_factor(&f, fp);
        assert_eq!(factors, vec![vec![1, 0, 1]]);
    }

    #[test]
    fn charpoly_mod_p_small() {
        let fp = Fp::new(101);
        // [[0,1],[1,0]] -> x^2 - 1
        let cp = charpoly_mod_p(&[0, 1, 1, 0], 2, fp);
        assert_eq!(cp, vec![100, 0, 1]);
        // [[1,0],[0,1]] -> (x-1)^2 = x^2 - 2x + 1
        let cp = charpoly_mod_p(&[1, 0, 0, 1], 2, fp);
        assert_eq!(cp, vec![1, 99, 1]);
        // companion matrix of x^3 - 2x - 5
        let a = [0u64, 0, 5, 1, 0, 2, 0, 1, 0];
        let cp = charpoly_mod_p(&a, 3, fp);
        assert_eq!(cp, vec![fp.neg(5), fp.neg(2), 0, 1]);
    }
}
