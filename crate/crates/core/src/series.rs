//! Truncated sparse Laurent series over F_{p^n}.
//!
//! An element stores only its nonzero known coefficients plus a precision
//! bound: coefficients at exponents >= N are unknown. Elements built from
//! finitely many monomials are exact (no bound) and stay exact under ring
//! operations; precision enters through deliberately truncated generators
//! and is propagated pessimistically. Any query that cannot be answered
//! from the known part fails with a precision error instead of guessing.

use crate::error::{KernelError, Result};
use crate::fq::{FqCtx, FqElem};
use std::collections::BTreeMap;
use std::fmt;

/// None = exact (every coefficient known); Some(n) = unknown from t^n on.
pub type Prec = Option<i64>;

fn prec_min(a: Prec, b: Prec) -> Prec {
    match (a, b) {
        (None, x) => x,
        (x, None) => x,
        (Some(x), Some(y)) => Some(x.min(y)),
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SeriesElement {
    coeffs: BTreeMap<i64, FqElem>,
    prec: Prec,
}

impl fmt::Debug for SeriesElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        } else {
            let parts: Vec<String> = self
                .coeffs
                .iter()
                .map(|(e, c)| format!("{c:?}*t^{e}"))
                .collect();
            write!(f, "{}", parts.join(" + "))?;
        }
        if let Some(n) = self.prec {
            write!(f, " + O(t^{n})")?;
        }
        Ok(())
    }
}

impl SeriesElement {
    pub fn zero() -> SeriesElement {
        SeriesElement {
            coeffs: BTreeMap::new(),
            prec: None,
        }
    }

    pub fn monomial(ctx: &FqCtx, exp: i64, coeff: FqElem) -> SeriesElement {
        let mut coeffs = BTreeMap::new();
        if !ctx.is_zero(&coeff) {
            coeffs.insert(exp, coeff);
        }
        SeriesElement { coeffs, prec: None }
    }

    pub fn one(ctx: &FqCtx) -> SeriesElement {
        SeriesElement::monomial(ctx, 0, ctx.one())
    }

    pub fn var(ctx: &FqCtx) -> SeriesElement {
        SeriesElement::monomial(ctx, 1, ctx.one())
    }

    pub fn from_terms(ctx: &FqCtx, terms: &[(i64, FqElem)], prec: Prec) -> SeriesElement {
        let mut out = SeriesElement {
            coeffs: BTreeMap::new(),
            prec,
        };
        for (e, c) in terms {
            out.insert(ctx, *e, c.clone());
        }
        out.truncate_to_prec();
        out
    }

    fn insert(&mut self, ctx: &FqCtx, exp: i64, c: FqElem) {
        if let Some(n) = self.prec {
            if exp >= n {
                return;
            }
        }
        match self.coeffs.entry(exp) {
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

    fn truncate_to_prec(&mut self) {
        if let Some(n) = self.prec {
            self.coeffs.retain(|&e, _| e < n);
        }
    }

    pub fn prec(&self) -> Prec {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    pub fn known_support(&self) -> impl Iterator<Item = (&i64, &FqElem)> {
        self.coeffs.iter()
    }

    pub fn coeff_at(&self, exp: i64) -> Option<&FqElem> {
        self.coeffs.get(&exp)
    }

    pub fn is_known_zero(&self) -> bool {
        self.coeffs.is_empty() && self.prec.is_none()
    }

    /// Least exponent with a nonzero known coefficient.
    pub fn value(&self) -> Result<i64> {
        match self.coeffs.keys().next() {
            Some(&e) => Ok(e),
            None => match self.prec {
                Some(n) => Err(KernelError::PrecisionExhausted { prec: n }),
                None => Err(KernelError::ZeroInput),
            },
        }
    }

    /// Lower bound on the value usable even with empty known support.
    fn value_lower_bound(&self) -> Option<i64> {
        match self.coeffs.keys().next() {
            Some(&e) => Some(e),
            None => self.prec,
        }
    }

    pub fn add(&self, ctx: &FqCtx, other: &SeriesElement) -> SeriesElement {
        let mut out = SeriesElement {
            coeffs: BTreeMap::new(),
            prec: prec_min(self.prec, other.prec),
        };
        for (e, c) in &self.coeffs {
            out.insert(ctx, *e, c.clone());
        }
        for (e, c) in &other.coeffs {
            out.insert(ctx, *e, c.clone());
        }
        out.truncate_to_prec();
        out
    }

    pub fn neg(&self, ctx: &FqCtx) -> SeriesElement {
        SeriesElement {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (*e, ctx.neg(c)))
                .collect(),
            prec: self.prec,
        }
    }

    pub fn sub(&self, ctx: &FqCtx, other: &SeriesElement) -> SeriesElement {
        self.add(ctx, &other.neg(ctx))
    }

    pub fn scale(&self, ctx: &FqCtx, k: &FqElem) -> SeriesElement {
        if ctx.is_zero(k) {
            return SeriesElement {
                coeffs: BTreeMap::new(),
                prec: self.prec,
            };
        }
        SeriesElement {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (*e, ctx.mul(c, k)))
                .collect(),
            prec: self.prec,
        }
    }

    pub fn mul(&self, ctx: &FqCtx, other: &SeriesElement) -> SeriesElement {
        // Value-shifted precision: the product is known strictly below
        // min(v(a) + prec(b), v(b) + prec(a)).
        let prec = match (self.prec, other.prec) {
            (None, None) => None,
            _ => {
                let mut bound: Option<i64> = None;
                if let (Some(nb), Some(va)) = (other.prec, self.value_lower_bound()) {
                    bound = prec_min(bound, Some(va + nb));
                }
                if let (Some(na), Some(vb)) = (self.prec, other.value_lower_bound()) {
                    bound = prec_min(bound, Some(vb + na));
                }
                // A truncated factor with empty known part leaves nothing known.
                if bound.is_none() {
                    Some(i64::MIN / 4)
                } else {
                    bound
                }
            }
        };
        let mut out = SeriesElement {
            coeffs: BTreeMap::new(),
            prec,
        };
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                out.insert(ctx, ea + eb, ctx.mul(ca, cb));
            }
        }
        out.truncate_to_prec();
        out
    }

    /// Multiplicative inverse. An exact monomial inverts exactly; any other
    /// input yields a truncated result: precision N - 2v for a truncated
    /// input of value v and precision N, and `limit` terms of the geometric
    /// expansion for an exact multi-term input.
    pub fn invert(&self, ctx: &FqCtx, limit: i64) -> Result<SeriesElement> {
        let v = self.value()?;
        let lead = self.coeffs[&v].clone();
        let lead_inv = ctx.inv(&lead)?;
        if self.coeffs.len() == 1 && self.is_exact() {
            return Ok(SeriesElement::monomial(ctx, -v, lead_inv));
        }
        let out_prec = match self.prec {
            Some(n) => n - 2 * v,
            None => limit.max(1) - v,
        };
        // unit part u = self / (lead * t^v), with u = 1 + w, val(w) > 0
        let mut unit = SeriesElement {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e - v, ctx.mul(c, &lead_inv)))
                .collect(),
            prec: self.prec.map(|n| n - v),
        };
        unit.prec = Some(out_prec + v);
        unit.truncate_to_prec();
        let one = SeriesElement::one(ctx);
        let w = unit.sub(ctx, &one);
        // geometric series: sum (-w)^k
        let mut acc = one.clone();
        let mut pw = one.clone();
        let neg_w = w.neg(ctx);
        let wv = match neg_w.value() {
            Ok(x) => x,
            Err(KernelError::PrecisionExhausted { .. }) | Err(KernelError::ZeroInput) => {
                // unit part is exactly 1 at this precision
                let mut r = SeriesElement::monomial(ctx, -v, lead_inv);
                r.prec = Some(out_prec);
                r.truncate_to_prec();
                return Ok(r);
            }
            Err(e) => return Err(e),
        };
        debug_assert!(wv > 0);
        let mut k = wv;
        while k < out_prec + v {
            pw = pw.mul(ctx, &neg_w);
            acc = acc.add(ctx, &pw);
            k += wv;
        }
        let mut res = SeriesElement {
            coeffs: acc
                .coeffs
                .iter()
                .map(|(e, c)| (e - v, ctx.mul(c, &lead_inv)))
                .collect(),
            prec: Some(out_prec),
        };
        res.truncate_to_prec();
        Ok(res)
    }

    /// Frobenius x -> x^p: exponents multiply by p, precision multiplies
    /// by p, coefficients are raised to the p-th power.
    pub fn frobenius(&self, ctx: &FqCtx) -> SeriesElement {
        let p = ctx.p() as i64;
        SeriesElement {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e * p, ctx.frobenius(c)))
                .collect(),
            prec: self.prec.map(|n| n * p),
        }
    }

    /// Inverse of Frobenius on stored support; every known exponent must be
    /// divisible by p.
    pub fn pth_root(&self, ctx: &FqCtx) -> Result<SeriesElement> {
        let p = ctx.p() as i64;
        for &e in self.coeffs.keys() {
            if e.rem_euclid(p) != 0 {
                return Err(KernelError::NonDivisibleExponent(e, ctx.p()));
            }
        }
        Ok(SeriesElement {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e / p, ctx.pth_root(c)))
                .collect(),
            prec: self.prec.map(|n| n.div_euclid(p) + i64::from(n.rem_euclid(p) != 0)),
        })
    }

    pub fn pow(&self, ctx: &FqCtx, e: u32) -> SeriesElement {
        let mut acc = SeriesElement::one(ctx);
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(ctx, &base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(ctx, &base);
            }
        }
        acc
    }

    pub fn pow_i(&self, ctx: &FqCtx, e: i64, limit: i64) -> Result<SeriesElement> {
        if e >= 0 {
            Ok(self.pow(ctx, e as u32))
        } else {
            Ok(self.invert(ctx, limit)?.pow(ctx, (-e) as u32))
        }
    }

    /// Residue of a value-0 element: its constant coefficient.
    pub fn residue(&self, _ctx: &FqCtx) -> Result<FqElem> {
        let v = self.value()?;
        if v != 0 {
            return Err(KernelError::NonzeroValue);
        }
        Ok(self.coeffs[&0].clone())
    }

    /// All known exponents divisible by m?
    pub fn exponents_divisible_by(&self, m: i64) -> bool {
        debug_assert!(m > 0);
        self.coeffs.keys().all(|e| e.rem_euclid(m) == 0)
    }
}

/// Gap rules for sparse transcendental-looking generators. The exponent
/// sequence must be strictly increasing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GapRule {
    /// e -> e^2 + 1 (the default: super-geometric gaps)
    SquarePlusOne,
    /// e -> 2e
    Double,
}

impl GapRule {
    pub fn next(&self, e: i64) -> i64 {
        match self {
            GapRule::SquarePlusOne => e.saturating_mul(e).saturating_add(1),
            GapRule::Double => e.saturating_mul(2),
        }
    }

    pub fn parse(s: &str) -> Option<GapRule> {
        match s {
            "sq1" => Some(GapRule::SquarePlusOne),
            "double" => Some(GapRule::Double),
            _ => None,
        }
    }
}

impl fmt::Display for GapRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GapRule::SquarePlusOne => write!(f, "sq1"),
            GapRule::Double => write!(f, "double"),
        }
    }
}

/// s = sum t^{e_i} with e_1 = start and e_{i+1} = rule(e_i), truncated at
/// `prec`. All coefficients are 1.
pub fn sparse_generator(ctx: &FqCtx, start: i64, rule: GapRule, prec: i64) -> SeriesElement {
    assert!(start >= 1, "generator exponents start at 1 or above");
    let mut terms = Vec::new();
    let mut e = start;
    while e < prec {
        terms.push((e, ctx.one()));
        let n = rule.next(e);
        assert!(n > e, "gap rule must be strictly increasing");
        e = n;
    }
    SeriesElement::from_terms(ctx, &terms, Some(prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ctx2() -> std::sync::Arc<FqCtx> {
        FqCtx::new(2, 1).unwrap()
    }

    #[test]
    fn value_examples() {
        let ctx = ctx2();
        let x = SeriesElement::from_terms(&ctx, &[(3, ctx.one()), (7, ctx.one())], None);
        assert_eq!(x.value().unwrap(), 3);

        let zero_truncated = SeriesElement::from_terms(&ctx, &[], Some(64));
        assert_eq!(
            zero_truncated.value(),
            Err(KernelError::PrecisionExhausted { prec: 64 })
        );

        // (t + t^2) * t^{-1} has value 0
        let t = SeriesElement::var(&ctx);
        let y = t.add(&ctx, &t.pow(&ctx, 2));
        let tinv = t.invert(&ctx, 64).unwrap();
        assert_eq!(y.mul(&ctx, &tinv).value().unwrap(), 0);
    }

    #[test]
    fn frobenius_and_pth_root_examples() {
        let ctx = ctx2();
        let t = SeriesElement::var(&ctx);
        let x = t.add(&ctx, &t.pow(&ctx, 2)); // t + t^2
        let fx = x.frobenius(&ctx); // t^2 + t^4
        assert_eq!(fx.coeff_at(2), Some(&ctx.one()));
        assert_eq!(fx.coeff_at(4), Some(&ctx.one()));
        assert_eq!(fx.pth_root(&ctx).unwrap(), x);

        let bad = SeriesElement::from_terms(&ctx, &[(3, ctx.one())], None);
        assert!(bad.pth_root(&ctx).is_err());
    }

    #[test]
    fn invert_monomial_is_exact() {
        let ctx = ctx2();
        let t = SeriesElement::var(&ctx);
        let inv = t.invert(&ctx, 64).unwrap();
        assert!(inv.is_exact());
        assert_eq!(inv.value().unwrap(), -1);
        assert_eq!(t.mul(&ctx, &inv), SeriesElement::one(&ctx));
    }

    #[test]
    fn invert_truncated_precision() {
        let ctx = FqCtx::new(3, 1).unwrap();
        let s = sparse_generator(&ctx, 2, GapRule::SquarePlusOne, 64);
        let inv = s.invert(&ctx, 64).unwrap();
        // N - 2v = 64 - 4
        assert_eq!(inv.prec(), Some(60));
        let prod = s.mul(&ctx, &inv);
        assert_eq!(prod.value().unwrap(), 0);
        assert_eq!(prod.coeff_at(0), Some(&ctx.one()));
        // everything else known must cancel
        assert_eq!(prod.known_support().count(), 1);
    }

    #[test]
    fn sparse_generator_examples() {
        let ctx = ctx2();
        let s = sparse_generator(&ctx, 2, GapRule::SquarePlusOne, 64);
        let exps: Vec<i64> = s.known_support().map(|(e, _)| *e).collect();
        assert_eq!(exps, vec![2, 5, 26]);

        let s1 = sparse_generator(&ctx, 1, GapRule::SquarePlusOne, 64);
        assert_eq!(s1.value().unwrap(), 1);

        let degenerate = sparse_generator(&ctx, 2, GapRule::SquarePlusOne, 2);
        assert!(matches!(
            degenerate.value(),
            Err(KernelError::PrecisionExhausted { .. })
        ));
    }

    fn random_series(ctx: &FqCtx, rng: &mut ChaCha8Rng) -> SeriesElement {
        let nterms = rng.gen_range(1..=5);
        let mut terms = Vec::new();
        for _ in 0..nterms {
            let e = rng.gen_range(-6i64..24);
            let c = ctx.element_by_index(rng.gen_range(1..ctx.order()));
            terms.push((e, c));
        }
        let prec = if rng.gen_bool(0.5) {
            None
        } else {
            Some(rng.gen_range(30i64..80))
        };
        SeriesElement::from_terms(ctx, &terms, prec)
    }

    #[test]
    fn valuation_axioms_on_random_pairs() {
        // v(xy) = v(x) + v(y), v(x+y) >= min(v(x), v(y)); 500 random pairs.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for &p in &[2u64, 3, 5] {
            let ctx = FqCtx::new(p, 1).unwrap();
            let mut done = 0;
            while done < 500 {
                let x = random_series(&ctx, &mut rng);
                let y = random_series(&ctx, &mut rng);
                let (Ok(vx), Ok(vy)) = (x.value(), y.value()) else {
                    continue;
                };
                let prod = x.mul(&ctx, &y);
                assert_eq!(prod.value().unwrap(), vx + vy);
                let sum = x.add(&ctx, &y);
                match sum.value() {
                    Ok(vs) => assert!(vs >= vx.min(vy)),
                    // full cancellation of the known part is consistent with >=
                    Err(_) => {}
                }
                done += 1;
            }
        }
    }

    #[test]
    fn pth_root_after_frobenius_roundtrip_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let ctx = FqCtx::new(3, 2).unwrap();
        for _ in 0..100 {
            let x = random_series(&ctx, &mut rng);
            let y = x.frobenius(&ctx).pth_root(&ctx).unwrap();
            // identical on stored support
            for ((e1, c1), (e2, c2)) in x.known_support().zip(y.known_support()) {
                assert_eq!(e1, e2);
                assert_eq!(c1, c2);
            }
        }
    }
}
