//! Sparse multivariate polynomials and rational functions over F_{p^n},
//! plus the exact linear-algebra routines built on them: subfield
//! membership witnesses and derivation annihilators.
//!
//! Rational functions are kept as unreduced numerator/denominator pairs;
//! equality and constancy tests go through cross-multiplication, so no
//! multivariate gcd is ever needed.

use crate::error::{KernelError, Result};
use crate::fq::{FqCtx, FqElem};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse polynomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, FqElem>,
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("{c:?}*{e:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl MPoly {
    pub fn zero(nvars: usize) -> MPoly {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &FqCtx, nvars: usize, c: FqElem) -> MPoly {
        let mut p = MPoly::zero(nvars);
        if !ctx.is_zero(&c) {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(ctx: &FqCtx, nvars: usize) -> MPoly {
        MPoly::constant(ctx, nvars, ctx.one())
    }

    pub fn var(ctx: &FqCtx, nvars: usize, idx: usize) -> MPoly {
        assert!(idx < nvars);
        let mut e = vec![0; nvars];
        e[idx] = 1;
        let mut p = MPoly::zero(nvars);
        p.terms.insert(e, ctx.one());
        p
    }

    pub fn monomial(ctx: &FqCtx, exps: Vec<u32>, c: FqElem) -> MPoly {
        let mut p = MPoly::zero(exps.len());
        if !ctx.is_zero(&c) {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &FqElem)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn involves_var(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    pub fn add_term(&mut self, ctx: &FqCtx, exps: Vec<u32>, c: FqElem) {
        assert_eq!(exps.len(), self.nvars);
        let entry = self.terms.entry(exps.clone());
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = ctx.add(o.get(), &c);
                if ctx.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                if !ctx.is_zero(&c) {
                    v.insert(c);
                }
            }
        }
    }

    pub fn add(&self, ctx: &FqCtx, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(ctx, e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, ctx: &FqCtx) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), ctx.neg(c));
        }
        out
    }

    pub fn sub(&self, ctx: &FqCtx, other: &MPoly) -> MPoly {
        self.add(ctx, &other.neg(ctx))
    }

    pub fn mul(&self, ctx: &FqCtx, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(ctx, exps, ctx.mul(ca, cb));
            }
        }
        out
    }

    pub fn scale(&self, ctx: &FqCtx, k: &FqElem) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        if ctx.is_zero(k) {
            return out;
        }
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), ctx.mul(c, k));
        }
        out
    }

    pub fn pow(&self, ctx: &FqCtx, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one(ctx, self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(ctx, &base);
            }
            base = base.mul(ctx, &base);
            e >>= 1;
        }
        acc
    }

    pub fn partial(&self, ctx: &FqCtx, var: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let k = ctx.from_u64(e[var] as u64);
            let coef = ctx.mul(c, &k);
            if ctx.is_zero(&coef) {
                continue;
            }
            let mut ne = e.clone();
            ne[var] -= 1;
            out.add_term(ctx, ne, coef);
        }
        out
    }

    /// Exact p-th root; requires every exponent divisible by p.
    pub fn pth_root(&self, ctx: &FqCtx) -> Result<MPoly> {
        let p = ctx.p() as u32;
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.iter().any(|&x| x % p != 0) {
                return Err(KernelError::NonDivisibleExponent(
                    *e.iter().find(|&&x| x % p != 0).unwrap() as i64,
                    p as u64,
                ));
            }
            let ne: Vec<u32> = e.iter().map(|&x| x / p).collect();
            out.terms.insert(ne, ctx.pth_root(c));
        }
        Ok(out)
    }

    /// Substitute rational functions for the variables.
    pub fn eval_rat(&self, ctx: &FqCtx, args: &[RatFunc]) -> RatFunc {
        assert_eq!(args.len(), self.nvars);
        let nv = if args.is_empty() {
            0
        } else {
            args[0].num.nvars
        };
        let mut acc = RatFunc::zero(ctx, nv);
        for (e, c) in &self.terms {
            let mut term = RatFunc::constant(ctx, nv, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(ctx, &args[i].pow(ctx, exp));
                }
            }
            acc = acc.add(ctx, &term);
        }
        acc
    }

    pub fn leading(&self) -> Option<(&Vec<u32>, &FqElem)> {
        self.terms.iter().next_back()
    }

    /// Extend the variable list by appending fresh variables.
    pub fn extend_vars(&self, new_nvars: usize) -> MPoly {
        assert!(new_nvars >= self.nvars);
        let mut out = MPoly::zero(new_nvars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.resize(new_nvars, 0);
            out.terms.insert(ne, c.clone());
        }
        out
    }
}

/// Rational function as an unreduced fraction of sparse polynomials.
#[derive(Clone)]
pub struct RatFunc {
    pub num: MPoly,
    pub den: MPoly,
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

impl RatFunc {
    pub fn zero(ctx: &FqCtx, nvars: usize) -> RatFunc {
        RatFunc {
            num: MPoly::zero(nvars),
            den: MPoly::one(ctx, nvars),
        }
    }

    pub fn constant(ctx: &FqCtx, nvars: usize, c: FqElem) -> RatFunc {
        RatFunc {
            num: MPoly::constant(ctx, nvars, c),
            den: MPoly::one(ctx, nvars),
        }
    }

    pub fn one(ctx: &FqCtx, nvars: usize) -> RatFunc {
        RatFunc::constant(ctx, nvars, ctx.one())
    }

    pub fn var(ctx: &FqCtx, nvars: usize, idx: usize) -> RatFunc {
        RatFunc {
            num: MPoly::var(ctx, nvars, idx),
            den: MPoly::one(ctx, nvars),
        }
    }

    pub fn from_poly(ctx: &FqCtx, num: MPoly) -> RatFunc {
        let nv = num.nvars();
        RatFunc {
            num,
            den: MPoly::one(ctx, nv),
        }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, ctx: &FqCtx, other: &RatFunc) -> RatFunc {
        RatFunc {
            num: self
                .num
                .mul(ctx, &other.den)
                .add(ctx, &other.num.mul(ctx, &self.den)),
            den: self.den.mul(ctx, &other.den),
        }
    }

    pub fn neg(&self, ctx: &FqCtx) -> RatFunc {
        RatFunc {
            num: self.num.neg(ctx),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, ctx: &FqCtx, other: &RatFunc) -> RatFunc {
        self.add(ctx, &other.neg(ctx))
    }

    pub fn mul(&self, ctx: &FqCtx, other: &RatFunc) -> RatFunc {
        RatFunc {
            num: self.num.mul(ctx, &other.num),
            den: self.den.mul(ctx, &other.den),
        }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        Ok(RatFunc {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    pub fn div(&self, ctx: &FqCtx, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(ctx, &other.inv()?))
    }

    pub fn pow(&self, ctx: &FqCtx, e: u32) -> RatFunc {
        RatFunc {
            num: self.num.pow(ctx, e),
            den: self.den.pow(ctx, e),
        }
    }

    pub fn pow_i(&self, ctx: &FqCtx, e: i64) -> Result<RatFunc> {
        if e >= 0 {
            Ok(self.pow(ctx, e as u32))
        } else {
            Ok(self.inv()?.pow(ctx, (-e) as u32))
        }
    }

    pub fn eq(&self, ctx: &FqCtx, other: &RatFunc) -> bool {
        self.num.mul(ctx, &other.den) == other.num.mul(ctx, &self.den)
    }

    /// If the function is a constant, return it.
    pub fn as_constant(&self, ctx: &FqCtx) -> Option<FqElem> {
        if self.num.is_zero() {
            return Some(ctx.zero());
        }
        let (le, lc) = self.num.leading()?;
        let (de, dc) = self.den.leading()?;
        if le != de {
            return None;
        }
        let lambda = ctx.mul(lc, &ctx.inv(dc).ok()?);
        let cand = RatFunc::constant(ctx, self.nvars(), lambda.clone());
        if self.eq(ctx, &cand) {
            Some(lambda)
        } else {
            None
        }
    }

    pub fn partial(&self, ctx: &FqCtx, var: usize) -> RatFunc {
        // (n/d)' = (n'd - nd')/d^2
        RatFunc {
            num: self
                .num
                .partial(ctx, var)
                .mul(ctx, &self.den)
                .sub(ctx, &self.num.mul(ctx, &self.den.partial(ctx, var))),
            den: self.den.mul(ctx, &self.den),
        }
    }

    /// Exact p-th root when the fraction is a p-th power; rewrites as
    /// (num * den^{p-1}) / den^p so only the numerator needs root-taking.
    pub fn pth_root(&self, ctx: &FqCtx) -> Result<RatFunc> {
        let p = ctx.p() as u32;
        let lifted = self.num.mul(ctx, &self.den.pow(ctx, p - 1));
        let root = lifted.pth_root(ctx)?;
        Ok(RatFunc {
            num: root,
            den: self.den.clone(),
        })
    }

    pub fn frobenius(&self, ctx: &FqCtx) -> RatFunc {
        self.pow(ctx, ctx.p() as u32)
    }

    pub fn extend_vars(&self, new_nvars: usize) -> RatFunc {
        RatFunc {
            num: self.num.extend_vars(new_nvars),
            den: self.den.extend_vars(new_nvars),
        }
    }
}

/// Dense Gaussian elimination over F_q. Returns a basis of the nullspace of
/// the matrix (rows x cols), as vectors of length cols.
pub fn nullspace_fq(ctx: &FqCtx, rows: &[Vec<FqElem>], cols: usize) -> Vec<Vec<FqElem>> {
    let mut mat: Vec<Vec<FqElem>> = rows.to_vec();
    let nrows = mat.len();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let mut piv = None;
        for i in r..nrows {
            if !ctx.is_zero(&mat[i][c]) {
                piv = Some(i);
                break;
            }
        }
        let Some(pi) = piv else { continue };
        mat.swap(r, pi);
        let inv = ctx.inv(&mat[r][c]).expect("nonzero pivot");
        for x in mat[r].iter_mut() {
            *x = ctx.mul(x, &inv);
        }
        for i in 0..nrows {
            if i != r && !ctx.is_zero(&mat[i][c]) {
                let f = mat[i][c].clone();
                for j in 0..cols {
                    let t = ctx.mul(&mat[r][j], &f);
                    mat[i][j] = ctx.sub(&mat[i][j], &t);
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![ctx.zero(); cols];
        v[free] = ctx.one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = ctx.neg(&mat[row][free]);
        }
        basis.push(v);
    }
    basis
}

/// Monomial exponent tuples in `k` variables of total degree <= `bound`.
fn monomials_up_to(k: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; k]];
    for _ in 0..bound {
        let mut next = Vec::new();
        for m in &out {
            for i in 0..k {
                let mut n = m.clone();
                n[i] += 1;
                next.push(n);
            }
        }
        out.extend(next);
        out.sort();
        out.dedup();
    }
    out
}

/// Search for polynomials P, Q of total degree <= `bound` in the generators
/// with Q(g) != 0 and target * Q(g) = P(g). Succeeding certifies that the
/// target lies in the subfield generated by `gens`. The search is a linear
/// system over F_q, hence exact; failure at a given bound is not a proof of
/// non-membership.
pub fn subfield_membership(
    ctx: &FqCtx,
    target: &RatFunc,
    gens: &[RatFunc],
    bound: u32,
) -> Option<(MPoly, MPoly)> {
    let nv = target.nvars();
    for b in 0..=bound {
        // Clear denominators: monomial alpha maps to
        //   prod num_i^{a_i} * den_i^{b - a_i},
        // a polynomial of the ambient variables.
        let monos = monomials_up_to(gens.len(), b);
        let cleared: Vec<MPoly> = monos
            .iter()
            .map(|alpha| {
                let mut acc = MPoly::one(ctx, nv);
                for (i, &a) in alpha.iter().enumerate() {
                    acc = acc.mul(ctx, &gens[i].num.pow(ctx, a));
                    acc = acc.mul(ctx, &gens[i].den.pow(ctx, b - a));
                }
                acc
            })
            .collect();
        // Equation: num_t * Q~ - den_t * P~ = 0 with
        //   Q~ = sum q_a cleared_a,  P~ = sum p_a cleared_a.
        let q_cols: Vec<MPoly> = cleared.iter().map(|m| m.mul(ctx, &target.num)).collect();
        let p_cols: Vec<MPoly> = cleared
            .iter()
            .map(|m| m.mul(ctx, &target.den).neg(ctx))
            .collect();
        let mut all_exps: Vec<Vec<u32>> = Vec::new();
        for col in q_cols.iter().chain(p_cols.iter()) {
            for (e, _) in col.terms() {
                all_exps.push(e.clone());
            }
        }
        all_exps.sort();
        all_exps.dedup();
        let cols = q_cols.len() + p_cols.len();
        let mut rows = Vec::with_capacity(all_exps.len());
        for e in &all_exps {
            let mut row = Vec::with_capacity(cols);
            for col in q_cols.iter().chain(p_cols.iter()) {
                let c = col
                    .terms()
                    .find(|(te, _)| te == &e)
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(|| ctx.zero());
                row.push(c);
            }
            rows.push(row);
        }
        for v in nullspace_fq(ctx, &rows, cols) {
            let qpart = &v[..monos.len()];
            let mut qtilde = MPoly::zero(nv);
            for (qc, cm) in qpart.iter().zip(&cleared) {
                qtilde = qtilde.add(ctx, &cm.scale(ctx, qc));
            }
            if qtilde.is_zero() {
                continue;
            }
            let mut qpoly = MPoly::zero(gens.len());
            let mut ppoly = MPoly::zero(gens.len());
            for (i, alpha) in monos.iter().enumerate() {
                qpoly.add_term(ctx, alpha.clone(), v[i].clone());
                ppoly.add_term(ctx, alpha.clone(), v[monos.len() + i].clone());
            }
            return Some((ppoly, qpoly));
        }
    }
    None
}

/// Find rational-function coefficients (a_0..a_{n-1}), not all zero, with
/// sum_j a_j * partial_j(g_i) = 0 for every generator g_i. Returns one such
/// derivation (as the coefficient vector) if the generators do not span all
/// partials.
pub fn derivation_annihilator(ctx: &FqCtx, gens: &[RatFunc], nvars: usize) -> Option<Vec<RatFunc>> {
    // Rows: one per generator. Columns: one per ambient variable.
    let rows: Vec<Vec<RatFunc>> = gens
        .iter()
        .map(|g| (0..nvars).map(|j| g.partial(ctx, j)).collect())
        .collect();
    nullspace_ratfunc(ctx, &rows, nvars).into_iter().next()
}

/// Nullspace over the rational function field; dimensions here are tiny
/// (generators x ambient variables).
fn nullspace_ratfunc(ctx: &FqCtx, rows: &[Vec<RatFunc>], cols: usize) -> Vec<Vec<RatFunc>> {
    let nv = if cols == 0 {
        0
    } else if let Some(r) = rows.first() {
        r[0].nvars()
    } else {
        0
    };
    let mut mat: Vec<Vec<RatFunc>> = rows.to_vec();
    let nrows = mat.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let mut piv = None;
        for i in r..nrows {
            if !mat[i][c].is_zero() {
                piv = Some(i);
                break;
            }
        }
        let Some(pi) = piv else { continue };
        mat.swap(r, pi);
        let inv = mat[r][c].inv().expect("nonzero pivot");
        for x in mat[r].iter_mut() {
            *x = x.mul(ctx, &inv);
        }
        for i in 0..nrows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in 0..cols {
                    let t = mat[r][j].mul(ctx, &f);
                    mat[i][j] = mat[i][j].sub(ctx, &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![RatFunc::zero(ctx, nv); cols];
        v[free] = RatFunc::one(ctx, nv);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = mat[row][free].neg(ctx);
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fq::FqCtx;

    fn fq(p: u64) -> std::sync::Arc<FqCtx> {
        FqCtx::new(p, 1).unwrap()
    }

    #[test]
    fn ratfunc_field_ops() {
        let ctx = fq(5);
        let t = RatFunc::var(&ctx, 2, 0);
        let s = RatFunc::var(&ctx, 2, 1);
        let a = t.add(&ctx, &s);
        let b = a.mul(&ctx, &a);
        let expect = t
            .pow(&ctx, 2)
            .add(&ctx, &t.mul(&ctx, &s).pow(&ctx, 1).mul(&ctx, &RatFunc::constant(&ctx, 2, ctx.from_u64(2))))
            .add(&ctx, &s.pow(&ctx, 2));
        assert!(b.eq(&ctx, &expect));
        let inv = a.inv().unwrap();
        assert!(a.mul(&ctx, &inv).eq(&ctx, &RatFunc::one(&ctx, 2)));
    }

    #[test]
    fn pth_root_undoes_frobenius() {
        let ctx = fq(3);
        let t = RatFunc::var(&ctx, 2, 0);
        let s = RatFunc::var(&ctx, 2, 1);
        let e = t.add(&ctx, &s.mul(&ctx, &t)).div(&ctx, &s.add(&ctx, &RatFunc::one(&ctx, 2))).unwrap();
        let cubed = e.frobenius(&ctx);
        let back = cubed.pth_root(&ctx).unwrap();
        assert!(back.eq(&ctx, &e));
    }

    #[test]
    fn membership_detects_pth_powers() {
        // K = F_5(T, S^5): S^5 is a member, S is not (at any small bound).
        let ctx = fq(5);
        let t = RatFunc::var(&ctx, 2, 0);
        let s = RatFunc::var(&ctx, 2, 1);
        let s5 = s.pow(&ctx, 5);
        let gens = vec![t.clone(), s5.clone()];
        assert!(subfield_membership(&ctx, &s5, &gens, 2).is_some());
        assert!(subfield_membership(&ctx, &s, &gens, 3).is_none());
        // (T + S)^5 = T^5 + S^5 lies in F_5(T, S^5).
        let ts5 = t.add(&ctx, &s).pow(&ctx, 5);
        assert!(subfield_membership(&ctx, &ts5, &gens, 5).is_some());
    }

    #[test]
    fn derivation_certifies_non_membership() {
        // d/dS kills F_3(T, S^3) but not S.
        let ctx = fq(3);
        let t = RatFunc::var(&ctx, 2, 0);
        let s = RatFunc::var(&ctx, 2, 1);
        let gens = vec![t.clone(), s.pow(&ctx, 3)];
        let ann = derivation_annihilator(&ctx, &gens, 2).expect("annihilator exists");
        // The derivation must kill every generator ...
        for g in &gens {
            let mut acc = RatFunc::zero(&ctx, 2);
            for (j, a) in ann.iter().enumerate() {
                acc = acc.add(&ctx, &a.mul(&ctx, &g.partial(&ctx, j)));
            }
            assert!(acc.is_zero() || acc.eq(&ctx, &RatFunc::zero(&ctx, 2)));
        }
        // ... but not s.
        let mut acc = RatFunc::zero(&ctx, 2);
        for (j, a) in ann.iter().enumerate() {
            acc = acc.add(&ctx, &a.mul(&ctx, &s.partial(&ctx, j)));
        }
        assert!(!acc.eq(&ctx, &RatFunc::zero(&ctx, 2)));
    }

    #[test]
    fn constant_detection() {
        let ctx = fq(3);
        let y = RatFunc::var(&ctx, 1, 0);
        let one = RatFunc::one(&ctx, 1);
        // (Y + Y^2) / (Y + Y^2) = 1 even though both involve Y.
        let r = y.add(&ctx, &y.pow(&ctx, 2));
        let c = r.div(&ctx, &r).unwrap();
        assert_eq!(c.as_constant(&ctx), Some(ctx.one()));
        assert!(y.as_constant(&ctx).is_none());
        assert!(one.as_constant(&ctx).is_some());
    }
}
