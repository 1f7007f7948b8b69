//! Exact arithmetic in small finite fields F_{p^n} and dense univariate
//! polynomials over them.
//!
//! Elements are coefficient vectors over F_p modulo a stored monic
//! irreducible. Supported configurations default to p in {2,3,5,7} and
//! n <= 3, which keeps every check (irreducibility, Frobenius, roots)
//! exhaustive and exact.

use crate::error::{KernelError, Result};
use std::fmt;
use std::sync::Arc;

pub const DEFAULT_PRIMES: &[u64] = &[2, 3, 5, 7];
pub const DEFAULT_MAX_EXTENSION: usize = 3;

/// Field context: F_{p^n} = F_p[X]/(modulus).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqCtx {
    p: u64,
    n: usize,
    /// Coefficients of the monic modulus below the leading term, little-endian,
    /// length n. Empty for n = 1.
    modulus: Vec<u64>,
}

impl fmt::Debug for FqCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.order())
    }
}

impl FqCtx {
    pub fn new(p: u64, n: usize) -> Result<Arc<FqCtx>> {
        Self::new_with_limits(p, n, DEFAULT_PRIMES, DEFAULT_MAX_EXTENSION)
    }

    pub fn new_with_limits(p: u64, n: usize, primes: &[u64], max_n: usize) -> Result<Arc<FqCtx>> {
        if !primes.contains(&p) {
            return Err(KernelError::UnsupportedConfiguration(format!(
                "characteristic {p} not in the supported set {primes:?}"
            )));
        }
        if n == 0 || n > max_n {
            return Err(KernelError::UnsupportedConfiguration(format!(
                "extension degree {n} outside 1..={max_n}"
            )));
        }
        let modulus = if n == 1 {
            Vec::new()
        } else {
            find_irreducible_modulus(p, n)
        };
        Ok(Arc::new(FqCtx { p, n, modulus }))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.n as u32)
    }

    pub fn zero(&self) -> FqElem {
        FqElem {
            c: vec![0; self.n],
        }
    }

    pub fn one(&self) -> FqElem {
        self.from_u64(1)
    }

    pub fn from_u64(&self, v: u64) -> FqElem {
        let mut c = vec![0; self.n];
        c[0] = v % self.p;
        FqElem { c }
    }

    pub fn from_i64(&self, v: i64) -> FqElem {
        let m = v.rem_euclid(self.p as i64) as u64;
        self.from_u64(m)
    }

    /// Element with the given index in the lexicographic enumeration of
    /// coefficient vectors; indices run over 0..order().
    pub fn element_by_index(&self, mut idx: u64) -> FqElem {
        let mut c = vec![0; self.n];
        for slot in c.iter_mut() {
            *slot = idx % self.p;
            idx /= self.p;
        }
        FqElem { c }
    }

    pub fn all_elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.order()).map(move |i| self.element_by_index(i))
    }

    pub fn is_zero(&self, a: &FqElem) -> bool {
        a.c.iter().all(|&x| x == 0)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let c = a
            .c
            .iter()
            .zip(&b.c)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FqElem { c }
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        let c = a.c.iter().map(|&x| (self.p - x) % self.p).collect();
        FqElem { c }
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        // Schoolbook product followed by reduction by the monic modulus.
        let mut prod = vec![0u64; 2 * self.n - 1];
        for (i, &x) in a.c.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.c.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for k in (self.n..prod.len()).rev() {
            let coef = prod[k];
            if coef == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &m) in self.modulus.iter().enumerate() {
                let idx = k - self.n + j;
                prod[idx] = (prod[idx] + coef * (self.p - m)) % self.p;
            }
        }
        prod.truncate(self.n);
        FqElem { c: prod }
    }

    pub fn pow(&self, a: &FqElem, mut e: u128) -> FqElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FqElem) -> Result<FqElem> {
        if self.is_zero(a) {
            return Err(KernelError::DivisionByZero);
        }
        Ok(self.pow(a, (self.order() - 2) as u128))
    }

    pub fn frobenius(&self, a: &FqElem) -> FqElem {
        self.pow(a, self.p as u128)
    }

    /// Unique p-th root; Frobenius is an automorphism of F_{p^n}.
    pub fn pth_root(&self, a: &FqElem) -> FqElem {
        self.pow(a, (self.p as u128).pow(self.n as u32 - 1).max(1))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqElem {
    c: Vec<u64>,
}

impl FqElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    /// Representative in 0..p for prime-field elements.
    pub fn as_prime_u64(&self) -> Option<u64> {
        if self.c.iter().skip(1).all(|&x| x == 0) {
            Some(self.c[0])
        } else {
            None
        }
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.len() == 1 {
            write!(f, "{}", self.c[0])
        } else {
            write!(f, "{:?}", self.c)
        }
    }
}

fn find_irreducible_modulus(p: u64, n: usize) -> Vec<u64> {
    // Deterministic scan over monic polynomials of degree n; checked with the
    // x^{p^k} criterion, so this is exact.
    let fp = FqCtx {
        p,
        n: 1,
        modulus: Vec::new(),
    };
    let count = p.pow(n as u32);
    for idx in 0..count {
        let mut coeffs: Vec<FqElem> = Vec::with_capacity(n + 1);
        let mut rem = idx;
        for _ in 0..n {
            coeffs.push(FqElem {
                c: vec![rem % p],
            });
            rem /= p;
        }
        coeffs.push(FqElem { c: vec![1] });
        let poly = FqPoly::new(&fp, coeffs);
        if poly.is_irreducible(&fp) {
            return poly.coeffs()[..n].iter().map(|e| e.c[0]).collect();
        }
    }
    unreachable!("an irreducible polynomial of degree {n} over F_{p} exists");
}

/// Dense univariate polynomial over F_{p^n}, little-endian coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct FqPoly {
    coeffs: Vec<FqElem>,
}

impl fmt::Debug for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FqPoly{:?}", self.coeffs)
    }
}

impl FqPoly {
    pub fn new(ctx: &FqCtx, mut coeffs: Vec<FqElem>) -> FqPoly {
        while coeffs.last().is_some_and(|c| ctx.is_zero(c)) {
            coeffs.pop();
        }
        FqPoly { coeffs }
    }

    pub fn zero() -> FqPoly {
        FqPoly { coeffs: Vec::new() }
    }

    pub fn x(ctx: &FqCtx) -> FqPoly {
        FqPoly {
            coeffs: vec![ctx.zero(), ctx.one()],
        }
    }

    pub fn constant(ctx: &FqCtx, c: FqElem) -> FqPoly {
        FqPoly::new(ctx, vec![c])
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

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn coeff(&self, ctx: &FqCtx, i: usize) -> FqElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| ctx.zero())
    }

    pub fn add(&self, ctx: &FqCtx, other: &FqPoly) -> FqPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(ctx.add(&self.coeff(ctx, i), &other.coeff(ctx, i)));
        }
        FqPoly::new(ctx, out)
    }

    pub fn neg(&self, ctx: &FqCtx) -> FqPoly {
        FqPoly::new(ctx, self.coeffs.iter().map(|c| ctx.neg(c)).collect())
    }

    pub fn sub(&self, ctx: &FqCtx, other: &FqPoly) -> FqPoly {
        self.add(ctx, &other.neg(ctx))
    }

    pub fn mul(&self, ctx: &FqCtx, other: &FqPoly) -> FqPoly {
        if self.is_zero() || other.is_zero() {
            return FqPoly::zero();
        }
        let mut out = vec![ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if ctx.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(&out[i + j], &ctx.mul(a, b));
            }
        }
        FqPoly::new(ctx, out)
    }

    pub fn scale(&self, ctx: &FqCtx, k: &FqElem) -> FqPoly {
        FqPoly::new(ctx, self.coeffs.iter().map(|c| ctx.mul(c, k)).collect())
    }

    /// Euclidean division; the divisor need not be monic.
    pub fn divmod(&self, ctx: &FqCtx, divisor: &FqPoly) -> Result<(FqPoly, FqPoly)> {
        let dd = divisor
            .degree()
            .ok_or(KernelError::DivisionByZero)?;
        let lead_inv = ctx.inv(&divisor.coeffs[dd])?;
        let mut rem = self.clone();
        let mut quot = vec![ctx.zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = ctx.mul(&rem.coeffs[rd], &lead_inv);
            quot[rd - dd] = factor.clone();
            let mut shifted = vec![ctx.zero(); rd - dd];
            shifted.extend(divisor.coeffs.iter().map(|c| ctx.mul(c, &factor)));
            rem = rem.sub(ctx, &FqPoly::new(ctx, shifted));
        }
        Ok((FqPoly::new(ctx, quot), rem))
    }

    pub fn rem(&self, ctx: &FqCtx, divisor: &FqPoly) -> Result<FqPoly> {
        Ok(self.divmod(ctx, divisor)?.1)
    }

    pub fn gcd(&self, ctx: &FqCtx, other: &FqPoly) -> Result<FqPoly> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(ctx, &b)?;
            a = b;
            b = r;
        }
        if let Some(d) = a.degree() {
            let inv = ctx.inv(&a.coeffs[d])?;
            a = a.scale(ctx, &inv);
        }
        Ok(a)
    }

    pub fn derivative(&self, ctx: &FqCtx) -> FqPoly {
        let mut out = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(ctx.mul(c, &ctx.from_u64(i as u64)));
        }
        FqPoly::new(ctx, out)
    }

    pub fn eval(&self, ctx: &FqCtx, at: &FqElem) -> FqElem {
        let mut acc = ctx.zero();
        for c in self.coeffs.iter().rev() {
            acc = ctx.add(&ctx.mul(&acc, at), c);
        }
        acc
    }

    fn pow_mod(&self, ctx: &FqCtx, mut e: u128, modulus: &FqPoly) -> Result<FqPoly> {
        let mut base = self.rem(ctx, modulus)?;
        let mut acc = FqPoly::constant(ctx, ctx.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(ctx, &base).rem(ctx, modulus)?;
            }
            base = base.mul(ctx, &base).rem(ctx, modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Irreducibility over F_q by the x^{q^k} criterion: f of degree d is
    /// irreducible iff x^{q^d} = x mod f and gcd(x^{q^{d/r}} - x, f) = 1 for
    /// every prime r dividing d.
    pub fn is_irreducible(&self, ctx: &FqCtx) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let q = ctx.order() as u128;
        let x = FqPoly::x(ctx);
        let xqd = match x.pow_mod(ctx, q.pow(d as u32), self) {
            Ok(v) => v,
            Err(_) => return false,
        };
        if xqd != x.rem(ctx, self).unwrap_or_else(|_| FqPoly::zero()) {
            return false;
        }
        for r in prime_divisors(d) {
            let e = q.pow((d / r) as u32);
            let xq = match x.pow_mod(ctx, e, self) {
                Ok(v) => v,
                Err(_) => return false,
            };
            let diff = xq.sub(ctx, &x);
            match diff.gcd(ctx, self) {
                Ok(g) => {
                    if g.degree() != Some(0) {
                        return false;
                    }
                }
                Err(_) => return false,
            }
        }
        true
    }

    pub fn is_separable(&self, ctx: &FqCtx) -> bool {
        !self.derivative(ctx).is_zero()
    }
}

fn prime_divisors(mut d: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= d {
        if d % f == 0 {
            out.push(f);
            while d % f == 0 {
                d /= f;
            }
        }
        f += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for &(p, n) in &[(2u64, 1usize), (3, 2), (5, 1), (7, 3), (2, 3)] {
            let ctx = FqCtx::new(p, n).unwrap();
            for a in ctx.all_elements() {
                // additive inverse
                assert!(ctx.is_zero(&ctx.add(&a, &ctx.neg(&a))));
                if !ctx.is_zero(&a) {
                    let inv = ctx.inv(&a).unwrap();
                    assert_eq!(ctx.mul(&a, &inv), ctx.one());
                }
            }
        }
    }

    #[test]
    fn frobenius_is_automorphism_up_to_343() {
        // Pointwise check of additivity and multiplicativity on every element
        // pair for all supported fields with p^n <= 343.
        for &p in DEFAULT_PRIMES {
            for n in 1..=DEFAULT_MAX_EXTENSION {
                if p.pow(n as u32) > 343 {
                    continue;
                }
                let ctx = FqCtx::new(p, n).unwrap();
                let elems: Vec<_> = ctx.all_elements().collect();
                for a in &elems {
                    for b in &elems {
                        let fa = ctx.frobenius(a);
                        let fb = ctx.frobenius(b);
                        assert_eq!(ctx.frobenius(&ctx.add(a, b)), ctx.add(&fa, &fb));
                        assert_eq!(ctx.frobenius(&ctx.mul(a, b)), ctx.mul(&fa, &fb));
                    }
                    // bijective with p-th root as inverse
                    assert_eq!(ctx.pth_root(&ctx.frobenius(a)), *a);
                }
            }
        }
    }

    #[test]
    fn irreducibility_matches_root_search_for_quadratics() {
        let ctx = FqCtx::new(3, 1).unwrap();
        // X^2 + 1 over F_3 has no roots, hence irreducible.
        let f = FqPoly::new(
            &ctx,
            vec![ctx.one(), ctx.zero(), ctx.one()],
        );
        assert!(ctx.all_elements().all(|a| !ctx.is_zero(&f.eval(&ctx, &a))));
        assert!(f.is_irreducible(&ctx));
        // X^2 - 1 factors.
        let g = FqPoly::new(
            &ctx,
            vec![ctx.neg(&ctx.one()), ctx.zero(), ctx.one()],
        );
        assert!(!g.is_irreducible(&ctx));
    }

    #[test]
    fn moduli_are_irreducible() {
        for &p in DEFAULT_PRIMES {
            for n in 2..=DEFAULT_MAX_EXTENSION {
                let ctx = FqCtx::new(p, n).unwrap();
                assert_eq!(ctx.order(), p.pow(n as u32));
                // x^{p^n} = x must hold for every element.
                for a in ctx.all_elements() {
                    assert_eq!(ctx.pow(&a, ctx.order() as u128), a);
                }
            }
        }
    }

    #[test]
    fn gcd_and_divmod() {
        let ctx = FqCtx::new(5, 1).unwrap();
        let f = FqPoly::new(
            &ctx,
            vec![ctx.from_u64(4), ctx.zero(), ctx.one()],
        ); // X^2 + 4 = (X-1)(X+1) mod 5... X^2 - 1
        let g = FqPoly::new(&ctx, vec![ctx.from_u64(4), ctx.one()]); // X + 4 = X - 1
        let (q, r) = f.divmod(&ctx, &g).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.degree(), Some(1));
    }
}
