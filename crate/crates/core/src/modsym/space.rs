//! Construction of the weight-k modular symbol space for Gamma_0(N) in the
//! +1 sign quotient.
//!
//! Generators are pairs (monomial X^i Y^(m-i), P^1(Z/N) class) with
//! m = k - 2. The space is the quotient by
//!
//!   x + x|sigma = 0,  x + x|tau + x|tau^2 = 0,  x - x|eta = 0,
//!
//! with sigma = [[0,-1],[1,0]], tau = [[0,-1],[1,-1]], eta = [[-1,0],[0,1]],
//! acting on the right by (P, (u:v)) |h = (P|h, (u:v)h). The sigma and eta
//! relations are two-term with unit coefficients and are folded by a signed
//! union-find; the tau relations are solved by sparse integer elimination.
//!
//! The cuspidal subspace is the kernel of the boundary map sending the
//! generator with lift g = [[a,b],[c,d]] to [a/c] (monomial X^m), -[b/d]
//! (monomial Y^m), on cusp classes glued under negation (the +1 quotient
//! boundary).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

use crate::arith::matrix::ExactMatrix;
use crate::arith::rational::Rational;

use super::cusps::{Cusp, CuspClasses};
use super::p1::P1Index;
use super::polyact::apply_monomial;

pub(crate) const SIGMA: [i64; 4] = [0, -1, 1, 0];
pub(crate) const TAU: [i64; 4] = [0, -1, 1, -1];
pub(crate) const TAU2: [i64; 4] = [-1, 1, -1, 0];
pub(crate) const ETA: [i64; 4] = [-1, 0, 0, 1];

/// Image of a raw generator in the quotient basis.
#[derive(Clone, Debug)]
pub(crate) enum GenImage {
    Zero,
    Basis { idx: usize, sign: i8 },
    Dense { den: BigInt, nums: Vec<BigInt> },
}

/// A weight-k modular symbol space for Gamma_0(N), +1 quotient, with its
/// cuspidal subspace.
#[derive(Clone, Debug)]
pub struct SymbolSpace {
    pub level: u64,
    pub weight: u32,
    /// Always +1: the engine works in the plus quotient only.
    pub sign: i8,
    pub p1: P1Index,
    pub(crate) m: usize,
    dim: usize,
    basis_gens: Vec<usize>,
    gen_images: Vec<GenImage>,
    /// Columns span the cuspidal subspace in the quotient basis (dim x d_c).
    pub cuspidal: ExactMatrix,
    /// Boundary map to glued cusp classes (classes x dim); kept for tests.
    pub(crate) boundary: ExactMatrix,
    supported: bool,
}

impl SymbolSpace {
    /// Ambient quotient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cuspidal_dim(&self) -> usize {
        self.cuspidal.cols()
    }

    /// False only for the odd-weight empty marker.
    pub fn is_supported(&self) -> bool {
        self.supported
    }

    pub(crate) fn gen_index(&self, i: usize, t: usize) -> usize {
        t * (self.m + 1) + i
    }

    pub(crate) fn basis_gen(&self, b: usize) -> (usize, usize) {
        let g = self.basis_gens[b];
        (g % (self.m + 1), g / (self.m + 1))
    }

    pub(crate) fn image(&self, gen: usize) -> &GenImage {
        &self.gen_images[gen]
    }

    /// Project an accumulation vector over raw generators into quotient
    /// coordinates.
    pub(crate) fn project_raw(&self, raw: &[BigInt]) -> Vec<Rational> {
        let mut num = vec![BigInt::zero(); self.dim];
        let mut den = BigInt::one();
        for (g, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match &self.gen_images[g] {
                GenImage::Zero => {}
                GenImage::Basis { idx, sign } => {
                    let add = if *sign < 0 { -c } else { c.clone() };
                    num[*idx] += add * &den;
                }
                GenImage::Dense { den: d, nums } => {
                    // rescale the accumulator to lcm(den, d)
                    let l = den.lcm(d);
                    if l != den {
                        let f = &l / &den;
                        for v in num.iter_mut() {
                            *v *= &f;
                        }
                        den = l;
                    }
                    let f = &den / d;
                    let cf = c * f;
                    for (idx, nv) in nums.iter().enumerate() {
                        if !nv.is_zero() {
                            num[idx] += nv * &cf;
                        }
                    }
                }
            }
        }
        num.into_iter()
            .map(|n| Rational::new(n, den.clone()))
            .collect()
    }
}

/// Build the space. Odd weights yield an empty marker space (scans must
/// skip them gracefully), even weights >= 2 the genuine quotient.
pub fn build_space(level: u64, weight: u32) -> SymbolSpace {
    assert!(level >= 1, "level must be positive");
    assert!(weight >= 2, "weight must be at least 2");
    let p1 = P1Index::new(level);
    if weight % 2 == 1 {
        return SymbolSpace {
            level,
            weight,
            sign: 1,
            p1,
            m: 0,
            dim: 0,
            basis_gens: vec![],
            gen_images: vec![],
            cuspidal: ExactMatrix::zero(0, 0),
            boundary: ExactMatrix::zero(0, 0),
            supported: false,
        };
    }
    let m = (weight - 2) as usize;
    let np = p1.size();
    let ngen = (m + 1) * np;
    let gen = |i: usize, t: usize| t * (m + 1) + i;

    // --- two-term relations: sigma and eta glue generators pairwise ---
    let mut uf = SignedUf::new(ngen);
    let sigma_coeffs: Vec<Vec<i64>> = (0..=m).map(|i| apply_monomial(i, m, SIGMA)).collect();
    let eta_coeffs: Vec<Vec<i64>> = (0..=m).map(|i| apply_monomial(i, m, ETA)).collect();
    for t in 0..np {
        let (u, v) = p1.rep(t);
        let t_sigma = p1.lookup(v, -u).expect("sigma preserves P1");
        let t_eta = p1.lookup(-u, v).expect("eta preserves P1");
        for i in 0..=m {
            // x + c * y = 0 with y = (m - i, t*sigma)
            let c = sigma_coeffs[i][m - i];
            debug_assert_eq!(c.abs(), 1);
            uf.relate(gen(i, t), gen(m - i, t_sigma), -c);
            // x - c * y = 0 with y = (i, t*eta)
            let c = eta_coeffs[i][i];
            debug_assert_eq!(c.abs(), 1);
            uf.relate(gen(i, t), gen(i, t_eta), c);
        }
    }

    // classes = surviving union-find roots, in ascending root order
    let mut class_of_root: HashMap<usize, u32> = HashMap::new();
    for g in 0..ngen {
        let (r, _) = uf.find(g);
        if r == g && !uf.zero[r] {
            let next = class_of_root.len() as u32;
            class_of_root.insert(r, next);
        }
    }
    let nclasses = class_of_root.len();
    let gen_class = |uf: &mut SignedUf, g: usize| -> Option<(u32, i64)> {
        let (r, s) = uf.find(g);
        if uf.zero[r] {
            None
        } else {
            Some((class_of_root[&r], s as i64))
        }
    };

    // --- three-term tau relations over the classes ---
    let tau_coeffs: Vec<Vec<i64>> = (0..=m).map(|i| apply_monomial(i, m, TAU)).collect();
    let tau2_coeffs: Vec<Vec<i64>> = (0..=m).map(|i| apply_monomial(i, m, TAU2)).collect();
    let mut rows: Vec<Vec<(u32, BigInt)>> = Vec::new();
    let mut seen_rows: std::collections::HashSet<Vec<(u32, i64)>> = std::collections::HashSet::new();
    for t in 0..np {
        let (u, v) = p1.rep(t);
        let t_tau = p1.lookup(v, -u - v).expect("tau preserves P1");
        let t_tau2 = p1.lookup(-u - v, u).expect("tau^2 preserves P1");
        for i in 0..=m {
            let mut acc: HashMap<u32, i64> = HashMap::new();
            let mut add = |cls: Option<(u32, i64)>, coeff: i64| {
                if coeff == 0 {
                    return;
                }
                if let Some((c, s)) = cls {
                    *acc.entry(c).or_insert(0) += coeff * s;
                }
            };
            add(gen_class(&mut uf, gen(i, t)), 1);
            for (j, &cj) in tau_coeffs[i].iter().enumerate() {
                add(gen_class(&mut uf, gen(j, t_tau)), cj);
            }
            for (j, &cj) in tau2_coeffs[i].iter().enumerate() {
                add(gen_class(&mut uf, gen(j, t_tau2)), cj);
            }
            let mut row: Vec<(u32, i64)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
            if row.is_empty() {
                continue;
            }
            row.sort_unstable_by_key(|&(c, _)| c);
            // primitive, first coefficient positive
            let g = row.iter().fold(0i64, |g, &(_, c)| num_integer::gcd(g, c));
            for e in row.iter_mut() {
                e.1 /= g;
            }
            if row[0].1 < 0 {
                for e in row.iter_mut() {
                    e.1 = -e.1;
                }
            }
            if seen_rows.insert(row.clone()) {
                rows.push(row.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect());
            }
        }
    }

    let images = solve_relations(rows, nclasses);

    // basis = free classes
    let mut basis_gens = Vec::new();
    let mut class_image: Vec<GenImage> = Vec::with_capacity(nclasses);
    for (cls, img) in images.iter().enumerate() {
        match img {
            ClassImage::Free(b) => {
                class_image.push(GenImage::Basis { idx: *b, sign: 1 });
                debug_assert_eq!(basis_gens.len(), *b);
                // the root generator of this class projects to e_b
                basis_gens.push(usize::MAX); // fixed below
                let _ = cls;
            }
            ClassImage::Zero => class_image.push(GenImage::Zero),
            ClassImage::Combo { den, nums } => class_image.push(GenImage::Dense {
                den: den.clone(),
                nums: nums.clone(),
            }),
        }
    }
    // root generator per class (ascending root = ascending class id)
    for g in 0..ngen {
        let (r, _) = uf.find(g);
        if r == g && !uf.zero[r] {
            let cls = class_of_root[&r] as usize;
            if let ClassImage::Free(b) = &images[cls] {
                basis_gens[*b] = g;
            }
        }
    }
    let dim = basis_gens.len();
    debug_assert!(basis_gens.iter().all(|&g| g != usize::MAX));

    // per-generator images
    let mut gen_images = Vec::with_capacity(ngen);
    for g in 0..ngen {
        let (r, s) = uf.find(g);
        if uf.zero[r] {
            gen_images.push(GenImage::Zero);
            continue;
        }
        let cls = class_of_root[&r] as usize;
        let img = match &class_image[cls] {
            GenImage::Zero => GenImage::Zero,
            GenImage::Basis { idx, sign } => GenImage::Basis {
                idx: *idx,
                sign: sign * s,
            },
            GenImage::Dense { den, nums } => {
                if s > 0 {
                    GenImage::Dense {
                        den: den.clone(),
                        nums: nums.clone(),
                    }
                } else {
                    GenImage::Dense {
                        den: den.clone(),
                        nums: nums.iter().map(|v| -v).collect(),
                    }
                }
            }
        };
        gen_images.push(img);
    }

    // --- boundary map and cuspidal subspace ---
    let mut classes = CuspClasses::new(level, true);
    let mut entries: Vec<(usize, usize, i64)> = Vec::new(); // (cusp class, basis, coeff)
    for (b, &graw) in basis_gens.iter().enumerate() {
        let i = graw % (m + 1);
        let t = graw / (m + 1);
        let [a, bb, c, d] = p1.lift(t);
        if i == m {
            let cls = classes.class_of(Cusp::new(a, c));
            entries.push((cls, b, 1));
        }
        if i == 0 {
            let cls = classes.class_of(Cusp::new(bb, d));
            entries.push((cls, b, -1));
        }
    }
    let mut boundary = ExactMatrix::zero(classes.len(), dim);
    for (r, c, v) in entries {
        *boundary.at_mut(r, c) += Rational::from_integer(BigInt::from(v));
    }
    let cuspidal = boundary.kernel_basis();

    SymbolSpace {
        level,
        weight,
        sign: 1,
        p1,
        m,
        dim,
        basis_gens,
        gen_images,
        cuspidal,
        boundary,
        supported: true,
    }
}

/// Union-find with signs: each generator equals +-1 times its root, and a
/// root can be forced to zero by an inconsistent relation.
struct SignedUf {
    parent: Vec<usize>,
    sign: Vec<i8>,
    zero: Vec<bool>,
}

impl SignedUf {
    fn new(n: usize) -> Self {
        SignedUf {
            parent: (0..n).collect(),
            sign: vec![1; n],
            zero: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, i8) {
        if self.parent[x] == x {
            return (x, self.sign[x]);
        }
        let p = self.parent[x];
        let (r, sp) = self.find(p);
        // value(x) = sign[x] * value(p) = sign[x] * sp * value(r)
        self.parent[x] = r;
        self.sign[x] *= sp;
        (r, self.sign[x])
    }

    /// Impose gen_a = s * gen_b (s = +-1).
    fn relate(&mut self, a: usize, b: usize, s: i64) {
        debug_assert!(s == 1 || s == -1);
        let (ra, sa) = self.find(a);
        let (rb, sb) = self.find(b);
        let s = s as i8;
        if ra == rb {
            if sa != s * sb {
                self.zero[ra] = true;
            }
            return;
        }
        // value(root_b) = (s * sa * sb) * value(root_a)
        self.parent[rb] = ra;
        self.sign[rb] = s * sa * sb;
        if self.zero[rb] {
            self.zero[ra] = true;
        }
    }
}

#[derive(Clone, Debug)]
enum ClassImage {
    Free(usize),
    Zero,
    Combo { den: BigInt, nums: Vec<BigInt> },
}

/// Sparse integer Gaussian elimination of homogeneous relation rows over
/// class indices; returns the image of each class in the free-class basis.
fn solve_relations(rows: Vec<Vec<(u32, BigInt)>>, ncols: usize) -> Vec<ClassImage> {
    let mut rows: Vec<Option<Vec<(u32, BigInt)>>> = rows.into_iter().map(Some).collect();
    let mut bucket: Vec<Vec<usize>> = vec![Vec::new(); ncols];
    for (idx, row) in rows.iter().enumerate() {
        let lead = row.as_ref().unwrap()[0].0 as usize;
        bucket[lead].push(idx);
    }
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    for c in 0..ncols {
        let cands = std::mem::take(&mut bucket[c]);
        if cands.is_empty() {
            continue;
        }
        // shortest row as pivot; ties by index for determinism
        let &piv = cands
            .iter()
            .min_by_key(|&&i| (rows[i].as_ref().unwrap().len(), i))
            .unwrap();
        pivot_of_col[c] = Some(piv);
        let pivot_row = rows[piv].clone().unwrap();
        for &other in &cands {
            if other == piv {
                continue;
            }
            let row = rows[other].take().unwrap();
            let reduced = eliminate(&row, &pivot_row, c as u32);
            if let Some(r) = reduced {
                let lead = r[0].0 as usize;
                rows[other] = Some(r);
                bucket[lead].push(other);
            }
        }
    }
    // back-substitution: clear later pivot columns out of each pivot row
    for c in (0..ncols).rev() {
        let Some(piv) = pivot_of_col[c] else { continue };
        let mut row = rows[piv].take().unwrap();
        loop {
            let Some(&(tc, _)) = row
                .iter()
                .find(|&&(tc, _)| tc as usize != c && pivot_of_col[tc as usize].is_some())
            else {
                break;
            };
            let other = rows[pivot_of_col[tc as usize].unwrap()].as_ref().unwrap();
            row = eliminate(&row, other, tc).expect("pivot row cannot vanish");
        }
        rows[piv] = Some(row);
    }
    // assemble images
    let mut images: Vec<ClassImage> = Vec::with_capacity(ncols);
    let mut free_count = 0usize;
    let free_index: Vec<Option<usize>> = (0..ncols)
        .map(|c| {
            if pivot_of_col[c].is_none() {
                free_count += 1;
                Some(free_count - 1)
            } else {
                None
            }
        })
        .collect();
    for c in 0..ncols {
        match pivot_of_col[c] {
            None => images.push(ClassImage::Free(free_index[c].unwrap())),
            Some(pr) => {
                let row = rows[pr].as_ref().unwrap();
                let lead = row
                    .iter()
                    .find(|&&(tc, _)| tc as usize == c)
                    .expect("pivot entry present")
                    .1
                    .clone();
                if row.len() == 1 {
                    images.push(ClassImage::Zero);
                    continue;
                }
                // class c = -(1/lead) * sum coeff * free class
                let mut nums = vec![BigInt::zero(); free_count];
                for (tc, v) in row {
                    if *tc as usize == c {
                        continue;
                    }
                    let fi = free_index[*tc as usize].expect("only free columns remain");
                    nums[fi] = -v;
                }
                let (den, nums) = if lead.is_negative() {
                    (-&lead, nums.into_iter().map(|v| -v).collect())
                } else {
                    (lead.clone(), nums)
                };
                images.push(ClassImage::Combo { den, nums });
            }
        }
    }
    images
}

/// lead(pivot)*row - row[c]*pivot, then primitive with positive first entry;
/// None if the row vanishes.
fn eliminate(
    row: &[(u32, BigInt)],
    pivot: &[(u32, BigInt)],
    c: u32,
) -> Option<Vec<(u32, BigInt)>> {
    let rc = &row.iter().find(|&&(tc, _)| tc == c)?.1;
    let pc = &pivot.iter().find(|&&(tc, _)| tc == c).expect("pivot has c").1;
    let mut out: Vec<(u32, BigInt)> = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < row.len() || j < pivot.len() {
        let (col, val) = match (row.get(i), pivot.get(j)) {
            (Some(&(ca, _)), Some(&(cb, _))) if ca == cb => {
                let v = &row[i].1 * pc - &pivot[j].1 * rc;
                i += 1;
                j += 1;
                (ca, v)
            }
            (Some(&(ca, _)), Some(&(cb, _))) if ca < cb => {
                let v = &row[i].1 * pc;
                i += 1;
                (ca, v)
            }
            (Some(_), None) => {
                let v = &row[i].1 * pc;
                let ca = row[i].0;
                i += 1;
                (ca, v)
            }
            (_, Some(&(cb, _))) => {
                let v = -(&pivot[j].1 * rc);
                j += 1;
                (cb, v)
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    if out.is_empty() {
        return None;
    }
    // primitivize
    let mut g = BigInt::zero();
    for (_, v) in &out {
        g = g.gcd(v);
    }
    if out[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in out.iter_mut() {
            *v = &*v / &g;
        }
    }
    Some(out)
}
