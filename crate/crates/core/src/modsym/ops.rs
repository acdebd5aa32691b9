//! Operators on modular symbol spaces.
//!
//! Everything funnels through two code paths:
//!
//! - the right action of Heilbronn matrices on Manin symbols (T_p at primes
//!   not dividing the level), and
//! - the symbol-level left action of an integer matrix W of positive
//!   determinant D: the generator with lift g corresponds to the symbol
//!   (P o g^{-1}) tensor {g0, g.inf}; applying W gives
//!   (P o (g^{-1} adj W)) tensor {W g0, W g.inf}, which is converted back to
//!   Manin generators along continued-fraction paths. Using adj(W) instead
//!   of W^{-1} scales the genuine action by D^(k-2), which drops out in the
//!   Atkin-Lehner normalization and is the standard Hecke normalization for
//!   coset sums.
//!
//! Hecke operators at good primes use the Heilbronn route; U_p, T_{p^e},
//! degeneracy maps and Atkin-Lehner involutions use the coset route. A test
//! pins the two routes against each other.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::matrix::ExactMatrix;
use crate::arith::primes::{egcd, is_prime_u64};
use crate::arith::rational::Rational;
use super::SpaceError;

use super::cusps::Cusp;
use super::heilbronn::heilbronn_cremona;
use super::polyact::{apply_monomial, apply_poly, mat_adj, mat_inv_unimodular, mat_mul};
use super::space::SymbolSpace;

/// What an operator matrix is the matrix of.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OpName {
    /// T_p at p not dividing the level.
    HeckeT(u64),
    /// U_p at p dividing the level.
    HeckeU(u64),
    /// Normalized Atkin-Lehner involution W_Q.
    AtkinLehner(u64),
    /// Level-lowering degeneracy map with parameter t.
    Degeneracy { target: u64, t: u64 },
}

/// An operator together with the subspace basis its matrix is written in.
#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    pub name: OpName,
    pub matrix: ExactMatrix,
}

/// Accumulate sign * (R tensor {alpha -> beta}) into a raw generator vector,
/// by splitting through infinity and walking continued-fraction convergents.
fn accumulate_symbol(
    space: &SymbolSpace,
    raw: &mut [BigInt],
    r_poly: &[BigInt],
    alpha: Cusp,
    beta: Cusp,
    sign: i64,
) {
    accumulate_inf_path(space, raw, r_poly, beta, sign);
    accumulate_inf_path(space, raw, r_poly, alpha, -sign);
}

/// sign * (R tensor {infinity -> c}).
fn accumulate_inf_path(space: &SymbolSpace, raw: &mut [BigInt], r_poly: &[BigInt], c: Cusp, sign: i64) {
    if c.q == 0 {
        return;
    }
    // convergents h_j / k_j of p/q: h_{-2}/k_{-2} = 0/1, h_{-1}/k_{-1} = 1/0
    let (mut num, mut den) = (c.p, c.q);
    let (mut h2, mut k2) = (0i64, 1i64);
    let (mut h1, mut k1) = (1i64, 0i64);
    let mut j: u32 = 0;
    while den != 0 {
        let a = num.div_euclid(den);
        let r = num - a * den;
        num = den;
        den = r;
        let h = a * h1 + h2;
        let k = a * k1 + k2;
        // segment {h1/k1 -> h/k} = g_j {0, inf} with det(g_j) = 1
        let x = if j % 2 == 0 { -1 } else { 1 }; // (-1)^(j-1)
        let g = [x * h, h1, x * k, k1];
        debug_assert_eq!(g[0] * g[3] - g[1] * g[2], 1);
        let coeffs = apply_poly(r_poly, g);
        if let Some(t) = space.p1.lookup(g[2], g[3]) {
            for (mono, v) in coeffs.iter().enumerate() {
                if !v.is_zero() {
                    let slot = space.gen_index(mono, t);
                    if sign > 0 {
                        raw[slot] += v;
                    } else {
                        raw[slot] -= v;
                    }
                }
            }
        }
        h2 = h1;
        k2 = k1;
        h1 = h;
        k1 = k;
        j += 1;
    }
    debug_assert_eq!((h1, k1), (c.p, c.q), "path must end at the cusp");
}

/// Matrix (on the ambient quotient bases) of x -> sum_W W . x, the left
/// action of a list of integer matrices with positive determinant, mapping
/// `src` into `dst` (the two may be the same space).
pub fn apply_left_matrices(
    src: &SymbolSpace,
    dst: &SymbolSpace,
    mats: &[[i64; 4]],
) -> ExactMatrix {
    let m = src.m;
    assert_eq!(m, dst.m, "weights must agree");
    let ngen_dst = (dst.m + 1) * dst.p1.size();
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(src.dim());
    for bsrc in 0..src.dim() {
        let (i, t) = src.basis_gen(bsrc);
        let g = src.p1.lift(t);
        let ginv = mat_inv_unimodular(g);
        let g0 = (g[1], g[3]); // g . 0
        let ginf = (g[0], g[2]); // g . infinity
        let mut raw = vec![BigInt::zero(); ngen_dst];
        for &w in mats {
            debug_assert!(w[0] * w[3] - w[1] * w[2] > 0);
            let sub = mat_mul(ginv, mat_adj(w));
            let r_poly: Vec<BigInt> = apply_monomial(i, m, sub);
            let alpha = Cusp::new(w[0] * g0.0 + w[1] * g0.1, w[2] * g0.0 + w[3] * g0.1);
            let beta = Cusp::new(w[0] * ginf.0 + w[1] * ginf.1, w[2] * ginf.0 + w[3] * ginf.1);
            accumulate_symbol(dst, &mut raw, &r_poly, alpha, beta, 1);
        }
        cols.push(dst.project_raw(&raw));
    }
    ExactMatrix::from_fn(dst.dim(), cols.len(), |i, j| cols[j][i].clone())
}

/// T_p on the ambient quotient via Heilbronn matrices (p not dividing N).
fn hecke_ambient_heilbronn(space: &SymbolSpace, p: u64) -> ExactMatrix {
    let m = space.m;
    let hs = heilbronn_cremona(p);
    let ngen = (m + 1) * space.p1.size();
    // coefficient magnitude bound: |H| * (2p)^m * (m+1), run in i128 if safe
    let log2_bound = (hs.len() as f64).log2() + (m as f64) * (2.0 * p as f64).log2() + 8.0;
    let use_i128 = log2_bound < 120.0;
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(space.dim());
    for b in 0..space.dim() {
        let (i, t) = space.basis_gen(b);
        let (u, v) = space.p1.rep(t);
        if use_i128 {
            let mut raw = vec![0i128; ngen];
            for h in &hs {
                let (u2, v2) = (h[0] * u + h[2] * v, h[1] * u + h[3] * v);
                let Some(t2) = space.p1.lookup(u2, v2) else {
                    continue;
                };
                let coeffs: Vec<i128> = apply_monomial(i, m, *h);
                for (mono, c) in coeffs.iter().enumerate() {
                    if *c != 0 {
                        raw[space.gen_index(mono, t2)] += c;
                    }
                }
            }
            let raw: Vec<BigInt> = raw.into_iter().map(BigInt::from).collect();
            cols.push(space.project_raw(&raw));
        } else {
            let mut raw = vec![BigInt::zero(); ngen];
            for h in &hs {
                let (u2, v2) = (h[0] * u + h[2] * v, h[1] * u + h[3] * v);
                let Some(t2) = space.p1.lookup(u2, v2) else {
                    continue;
                };
                let coeffs: Vec<BigInt> = apply_monomial(i, m, *h);
                for (mono, c) in coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        raw[space.gen_index(mono, t2)] += c;
                    }
                }
            }
            cols.push(space.project_raw(&raw));
        }
    }
    ExactMatrix::from_fn(space.dim(), cols.len(), |i, j| cols[j][i].clone())
}

/// Upper-triangular coset representatives for T_{p^e} (all a*d = p^e,
/// 0 <= b < d, gcd(a, N) = 1). For p | N this keeps only a = 1, which is
/// U_{p^e}.
fn hecke_cosets(level: u64, p: u64, e: u32) -> Vec<[i64; 4]> {
    let n = p.pow(e);
    let mut out = Vec::new();
    let mut a = 1u64;
    while a <= n {
        if n % a == 0 {
            let d = n / a;
            if level % p != 0 || a == 1 {
                for b in 0..d {
                    out.push([a as i64, b as i64, 0, d as i64]);
                }
            }
        }
        a *= p;
    }
    out
}

/// T_p (p coprime to the level) or U_p (p dividing it) on the ambient basis.
pub fn hecke_ambient(space: &SymbolSpace, p: u64) -> Result<ExactMatrix, SpaceError> {
    if !is_prime_u64(p) {
        return Err(SpaceError::NotPrime(p));
    }
    if space.level % p == 0 || p == 2 {
        // U_p; and T_2, where the odd-prime Heilbronn family does not apply
        Ok(apply_left_matrices(space, space, &hecke_cosets(space.level, p, 1)))
    } else {
        Ok(hecke_ambient_heilbronn(space, p))
    }
}

/// T_{p^e} / U_{p^e} on the ambient basis, by the coset route.
pub fn hecke_power_ambient(space: &SymbolSpace, p: u64, e: u32) -> Result<ExactMatrix, SpaceError> {
    if !is_prime_u64(p) {
        return Err(SpaceError::NotPrime(p));
    }
    Ok(apply_left_matrices(
        space,
        space,
        &hecke_cosets(space.level, p, e),
    ))
}

/// Coset-route T_p, kept alongside the Heilbronn route as a cross-check.
pub fn hecke_ambient_coset(space: &SymbolSpace, p: u64) -> Result<ExactMatrix, SpaceError> {
    hecke_power_ambient(space, p, 1)
}

/// Restrict an ambient operator to the column span of `basis`; errors mean
/// the subspace is not invariant, which is a bug in the caller.
pub fn restrict_to(op_ambient: &ExactMatrix, basis: &ExactMatrix) -> Option<ExactMatrix> {
    basis.solve(&op_ambient.mul(basis))
}

/// Matrix of T_p or U_p on the cuspidal subspace basis.
pub fn hecke_matrix(space: &SymbolSpace, p: u64) -> Result<OperatorMatrix, SpaceError> {
    let amb = hecke_ambient(space, p)?;
    let matrix = restrict_to(&amb, &space.cuspidal)
        .expect("Hecke operators preserve the cuspidal subspace");
    let name = if space.level % p == 0 {
        OpName::HeckeU(p)
    } else {
        OpName::HeckeT(p)
    };
    Ok(OperatorMatrix { name, matrix })
}

/// Degeneracy lowering map from level N to level M = N / (something), with
/// parameter t | N/M, as a matrix from the cuspidal basis at N to the
/// cuspidal basis at M. Uses the left action of [[t, 0], [0, 1]].
pub fn degeneracy_lower(
    space_n: &SymbolSpace,
    space_m: &SymbolSpace,
    t: u64,
) -> Result<OperatorMatrix, SpaceError> {
    let n = space_n.level;
    let m = space_m.level;
    if m == 0 || n % m != 0 || t == 0 || (n / m) % t != 0 {
        return Err(SpaceError::BadDegeneracy { level: n, target: m, t });
    }
    let amb = apply_left_matrices(space_n, space_m, &[[t as i64, 0, 0, 1]]);
    // cuspidal columns of N map into the cuspidal subspace of M
    let image = amb.mul(&space_n.cuspidal);
    let matrix = space_m
        .cuspidal
        .solve(&image)
        .expect("degeneracy maps preserve cuspidal subspaces");
    Ok(OperatorMatrix {
        name: OpName::Degeneracy { target: m, t },
        matrix,
    })
}

/// The new cuspidal subspace: joint kernel of both degeneracy maps to N/p
/// for every prime p | N, as columns in the cuspidal basis.
#[derive(Clone, Debug)]
pub struct NewSubspace {
    /// d_c x d_new columns in cuspidal coordinates.
    pub basis: ExactMatrix,
}

impl NewSubspace {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

pub fn new_subspace(space: &SymbolSpace) -> NewSubspace {
    let dc = space.cuspidal_dim();
    if dc == 0 {
        return NewSubspace {
            basis: ExactMatrix::zero(0, 0),
        };
    }
    let primes: Vec<u64> = crate::arith::primes::factorize_int(space.level)
        .unwrap()
        .into_iter()
        .map(|(p, _)| p)
        .collect();
    let mut stacked: Option<ExactMatrix> = None;
    for p in primes {
        let target = super::space::build_space(space.level / p, space.weight);
        if target.cuspidal_dim() == 0 {
            continue;
        }
        for t in [1u64, p] {
            let dmap = degeneracy_lower(space, &target, t)
                .expect("divisor levels are valid")
                .matrix;
            stacked = Some(match stacked {
                None => dmap,
                Some(s) => s.vstack(&dmap),
            });
        }
    }
    let basis = match stacked {
        None => ExactMatrix::identity(dc),
        Some(s) => s.kernel_basis(),
    };
    NewSubspace { basis }
}

/// Normalized Atkin-Lehner involution W_Q on the new cuspidal subspace.
/// Q must be an exact prime-power divisor of the level. The raw action of
/// the integer matrix [[Q a, -b], [N, Q]] (det Q) is divided by Q^((k-2)/2),
/// after which the operator squares to the identity.
pub fn atkin_lehner(
    space: &SymbolSpace,
    new: &NewSubspace,
    q: u64,
) -> Result<OperatorMatrix, SpaceError> {
    let n = space.level;
    let is_prime_power = q > 1
        && crate::arith::primes::factorize_int(q.max(1)).map(|f| f.len() == 1).unwrap_or(false);
    if !is_prime_power
        || n % q != 0
        || crate::arith::primes::gcd_i64(q as i64, (n / q) as i64) != 1
    {
        return Err(SpaceError::BadAtkinLehnerQ { q, level: n });
    }
    // alpha*Q + beta*(N/Q) = 1  ->  W = [[Q*alpha, -beta], [N, Q]]
    let (g, alpha, beta) = egcd(q as i64, (n / q) as i64);
    assert_eq!(g, 1);
    let w = [q as i64 * alpha, -beta, n as i64, q as i64];
    debug_assert_eq!(w[0] * w[3] - w[1] * w[2], q as i64);
    let amb = apply_left_matrices(space, space, &[w]);
    let cusp_basis = space.cuspidal.mul(&new.basis);
    let raw = restrict_to(&amb, &cusp_basis)
        .expect("Atkin-Lehner preserves the new cuspidal subspace");
    // divide by Q^((k-2)/2)
    let half = (space.weight - 2) / 2;
    let scale = Rational::new(BigInt::one(), BigInt::from(q).pow(half));
    Ok(OperatorMatrix {
        name: OpName::AtkinLehner(q),
        matrix: raw.scale(&scale),
    })
}

/// Matrix of an ambient operator on the new cuspidal subspace.
pub fn restrict_to_new(
    space: &SymbolSpace,
    new: &NewSubspace,
    op_ambient: &ExactMatrix,
) -> ExactMatrix {
    let cusp_basis = space.cuspidal.mul(&new.basis);
    restrict_to(op_ambient, &cusp_basis).expect("operator preserves the new cuspidal subspace")
}
