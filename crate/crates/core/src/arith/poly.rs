//! Univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored ascending (coeffs[i] is the coefficient of x^i)
//! with no trailing zeros; the zero polynomial is the empty vector. Content
//! carries the sign of the leading coefficient, so that
//! content * primitive_part reconstructs the polynomial exactly and primitive
//! parts always have a positive leading coefficient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::ExactMatrix;
use super::modp::{p_trim, Fp, PolyP};
use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn from_bigints(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_bigints(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_bigints(vec![c])
    }

    /// x^k
    pub fn x_power(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree of a nonzero polynomial; panics on zero.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |l| l.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Evaluate on a square rational matrix by Horner's rule.
    pub fn eval_matrix(&self, a: &ExactMatrix) -> ExactMatrix {
        assert!(a.is_square());
        let n = a.rows();
        let mut acc = ExactMatrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a);
            for i in 0..n {
                *acc.at_mut(i, i) += Rational::from_integer(c.clone());
            }
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_bigints((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_bigints((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Self::from_bigints(out)
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_bigints(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Signed content: gcd of the coefficients carrying the sign of the
    /// leading coefficient (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.leading().map_or(false, |l| l.is_negative()) {
            -g
        } else {
            g
        }
    }

    /// self / content: primitive with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|v| v / &c).collect(),
        }
    }

    /// Exact division over Z; None when other does not divide self exactly.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < other.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let qlen = self.coeffs.len() - other.coeffs.len() + 1;
        let mut quo = vec![BigInt::zero(); qlen];
        let lc = other.leading().unwrap();
        for k in (0..qlen).rev() {
            let idx = k + other.coeffs.len() - 1;
            let (q, r) = rem[idx].div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            if q.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let v = &rem[k + j] - &q * b;
                rem[k + j] = v;
            }
            quo[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_bigints(quo))
    }

    /// Pseudo-remainder up to a positive lc(g)-power factor; the caller
    /// re-primitivizes, so only proportionality matters.
    fn pseudo_rem(&self, g: &Self) -> Self {
        let dg = g.deg();
        let lc = g.leading().unwrap().clone();
        let mut r = self.clone();
        while !r.is_zero() && r.deg() >= dg {
            let k = r.deg() - dg;
            let top = r.leading().unwrap().clone();
            // r <- lc*r - top * x^k * g, killing the leading term
            r = r.scale(&lc).sub(&g.mul(&Self::x_power(k)).scale(&top));
        }
        r
    }

    /// Gcd over Z: gcd of contents times the primitive gcd; positive leading
    /// coefficient. Subresultant-free primitive PRS (fine at these degrees).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content().abs());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content().abs());
        }
        let cont = self.content().abs().gcd(&other.content().abs());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part().scale(&cont)
    }

    /// Squarefree part: product of the distinct irreducible factors,
    /// primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        let f = self.primitive_part();
        if f.degree().unwrap_or(0) == 0 {
            return Self::one();
        }
        let g = f.gcd(&f.derivative());
        if g.degree() == Some(0) {
            return f;
        }
        f.div_exact(&g)
            .expect("gcd divides")
            .primitive_part()
    }

    /// Yun's squarefree decomposition of the primitive part: returns
    /// (squarefree primitive factor, multiplicity) pairs, multiplicities
    /// ascending; the product of factor^multiplicity recovers the primitive
    /// part.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPolynomial, u32)> {
        let f = self.primitive_part();
        assert!(!f.is_zero());
        if f.deg() == 0 {
            return vec![];
        }
        let fd = f.derivative();
        let g = f.gcd(&fd);
        if g.degree() == Some(0) {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut c = f.div_exact(&g).expect("gcd divides").primitive_part();
        let mut d = fd
            .div_exact(&g)
            .expect("gcd divides derivative")
            .sub(&c.derivative());
        let mut i = 1u32;
        while c.degree() != Some(0) {
            let a = c.gcd(&d);
            if a.degree().map_or(false, |dd| dd > 0) {
                out.push((a.clone(), i));
            }
            c = c.div_exact(&a).expect("squarefree step").primitive_part();
            d = d.div_exact(&a).expect("squarefree step").sub(&c.derivative());
            i += 1;
        }
        out
    }

    /// Reduce mod p into an F_p polynomial.
    pub fn to_mod_p(&self, fp: Fp) -> PolyP {
        let p = BigInt::from(fp.p);
        p_trim(
            self.coeffs
                .iter()
                .map(|c| {
                    let m = c.mod_floor(&p);
                    let digits = m.to_u64_digits().1;
                    digits.first().copied().unwrap_or(0)
                })
                .collect(),
        )
    }

    /// f(s*x): coefficient i is multiplied by s^i.
    pub fn compose_scale_x(&self, s: &BigInt) -> Self {
        let mut pow = BigInt::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let v = c * &pow;
                pow = &pow * s;
                v
            })
            .collect();
        Self::from_bigints(coeffs)
    }

    /// Ceiling of the l2 norm of the coefficient vector.
    pub fn norm_l2_ceil(&self) -> BigInt {
        let s: BigInt = self.coeffs.iter().map(|c| c * c).sum();
        let r = s.sqrt();
        if &r * &r == s {
            r
        } else {
            r + 1
        }
    }

    /// Ordering used everywhere factors are listed: by degree, then by
    /// coefficients compared from the leading term down.
    pub fn factor_order(a: &Self, b: &Self) -> std::cmp::Ordering {
        a.coeffs
            .len()
            .cmp(&b.coeffs.len())
            .then_with(|| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()))
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 || !mag.is_one() {
                write!(f, "{}", mag)?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            if i == 1 {
                write!(f, "x")?;
            } else if i > 1 {
                write!(f, "x^{}", i)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn content_and_primitive() {
        let f = p(&[-6, 0, -9]); // -9x^2 - 6
        assert_eq!(f.content(), BigInt::from(-3));
        assert_eq!(f.primitive_part(), p(&[2, 0, 3]));
        assert_eq!(f.primitive_part().scale(&f.content()), f);
    }

    #[test]
    fn exact_division() {
        let f = p(&[-1, 0, 1]); // x^2 - 1
        let g = p(&[1, 1]);
        assert_eq!(f.div_exact(&g).unwrap(), p(&[-1, 1]));
        assert!(f.div_exact(&p(&[1, 2])).is_none());
    }

    #[test]
    fn gcd_of_products() {
        let a = p(&[-2, 1]); // x - 2
        let b = p(&[1, 1, 1]); // x^2 + x + 1
        let f = a.mul(&b);
        let g = a.mul(&p(&[5, 1]));
        assert_eq!(f.gcd(&g), a);
    }

    #[test]
    fn yun_on_known_shape() {
        // (x-2)^2 (x^2+x+1)
        let f = p(&[-2, 1]).pow(2).mul(&p(&[1, 1, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(p(&[1, 1, 1]), 1), (p(&[-2, 1]), 2)]);
        // reconstruct
        let mut back = IntPolynomial::one();
        for (g, m) in &dec {
            back = back.mul(&g.pow(*m));
        }
        assert_eq!(back, f.primitive_part());
    }

    #[test]
    fn eval_and_display() {
        let f = p(&[-24, 1]);
        assert_eq!(f.eval(&BigInt::from(24)), BigInt::zero());
        assert_eq!(format!("{}", f), "x - 24");
        assert_eq!(format!("{}", p(&[1, 0, -2, 1])), "x^3 - 2*x^2 + 1");
    }
}
