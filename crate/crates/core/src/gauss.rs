//! Monomial (Gauss) valuations on K(T) for standard valuation
//! transcendence bases T = {x_i, y_j}: the value of a polynomial is the
//! least of the values of its monomials. This module evaluates values and
//! residues of polynomial ratios, classifies elements as value- or
//! residue-transcendental, constructs valuation-transcendental witnesses
//! c'(b - c), and validates transformed bases against the monomial rule.

use crate::descriptor::{
    base_element_with_value, lift_residue_constant, BaseElem, BaseField, Tower,
};
use crate::error::{KernelError, Result};
use crate::fq::FqCtx;
use crate::mpoly::RatFunc;
use crate::value_groups::GroupElement;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Polynomial in the x- and y-generators over the base field. Exponents are
/// signed so Laurent monomials in the x-generators are representable.
#[derive(Clone)]
pub struct TPoly {
    terms: BTreeMap<(Vec<i64>, Vec<i64>), BaseElem>,
    nx: usize,
    ny: usize,
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((xe, ye), c)| format!("[{c:?}]x{xe:?}y{ye:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Ratio of T-polynomials.
#[derive(Clone, Debug)]
pub struct TRatio {
    pub num: TPoly,
    pub den: TPoly,
}

/// Outcome of classifying a nonzero element of K(T).
#[derive(Clone, Debug)]
pub enum Classification {
    /// value has a nonzero x-component, hence is not torsion modulo vK
    ValueTranscendental,
    /// value 0 and residue genuinely involves a label
    ResidueTranscendental(RatFunc),
    Neither,
}

impl Classification {
    pub fn is_valuation_transcendental(&self) -> bool {
        !matches!(self, Classification::Neither)
    }
}

/// Coefficient arithmetic dispatched over the tower's base field.
pub struct CoeffOps<'a> {
    pub tower: &'a Tower,
}

impl<'a> CoeffOps<'a> {
    pub fn new(tower: &'a Tower) -> CoeffOps<'a> {
        CoeffOps { tower }
    }

    fn fq(&self) -> Arc<FqCtx> {
        match &self.tower.base {
            BaseField::Laurent { ctx, .. } => ctx.fq().clone(),
            BaseField::Span(s) => s.ctx().fq().clone(),
            BaseField::Trivial(r) => r.ctx().clone(),
        }
    }

    fn res_nvars(&self) -> usize {
        self.tower.residue_labels().len()
    }

    pub fn zero(&self) -> BaseElem {
        match &self.tower.base {
            BaseField::Trivial(_) => BaseElem::Res(RatFunc::zero(&self.fq(), self.res_nvars())),
            BaseField::Span(s) => BaseElem::Ambient(s.ctx().from_i64(0)),
            BaseField::Laurent { ctx, .. } => BaseElem::Ambient(ctx.from_i64(0)),
        }
    }

    pub fn one(&self) -> BaseElem {
        match &self.tower.base {
            BaseField::Trivial(_) => BaseElem::Res(RatFunc::one(&self.fq(), self.res_nvars())),
            BaseField::Span(s) => BaseElem::Ambient(s.ctx().from_i64(1)),
            BaseField::Laurent { ctx, .. } => BaseElem::Ambient(ctx.from_i64(1)),
        }
    }

    pub fn is_zero(&self, a: &BaseElem) -> bool {
        match a {
            BaseElem::Ambient(x) => x.is_zero(),
            BaseElem::Res(r) => r.is_zero(),
        }
    }

    pub fn add(&self, a: &BaseElem, b: &BaseElem) -> BaseElem {
        match (a, b) {
            (BaseElem::Ambient(x), BaseElem::Ambient(y)) => BaseElem::Ambient(x.add(y)),
            (BaseElem::Res(x), BaseElem::Res(y)) => BaseElem::Res(x.add(&self.fq(), y)),
            _ => panic!("mixed coefficient kinds"),
        }
    }

    pub fn neg(&self, a: &BaseElem) -> BaseElem {
        match a {
            BaseElem::Ambient(x) => BaseElem::Ambient(x.neg()),
            BaseElem::Res(r) => BaseElem::Res(r.neg(&self.fq())),
        }
    }

    pub fn mul(&self, a: &BaseElem, b: &BaseElem) -> BaseElem {
        match (a, b) {
            (BaseElem::Ambient(x), BaseElem::Ambient(y)) => BaseElem::Ambient(x.mul(y)),
            (BaseElem::Res(x), BaseElem::Res(y)) => BaseElem::Res(x.mul(&self.fq(), y)),
            _ => panic!("mixed coefficient kinds"),
        }
    }

    pub fn inv(&self, a: &BaseElem) -> Result<BaseElem> {
        match a {
            BaseElem::Ambient(x) => {
                let one = x.ctx().from_i64(1);
                Ok(BaseElem::Ambient(one.div(x)?))
            }
            BaseElem::Res(r) => Ok(BaseElem::Res(r.inv()?)),
        }
    }

    pub fn eq(&self, a: &BaseElem, b: &BaseElem) -> bool {
        match (a, b) {
            (BaseElem::Ambient(x), BaseElem::Ambient(y)) => x == y,
            (BaseElem::Res(x), BaseElem::Res(y)) => x.eq(&self.fq(), y),
            _ => false,
        }
    }

    /// Value of a nonzero coefficient, as a prefix-coordinate element.
    pub fn value(&self, a: &BaseElem) -> Result<GroupElement> {
        match a {
            BaseElem::Ambient(x) => Ok(GroupElement::from_i64(&[x.value()?])),
            BaseElem::Res(r) => {
                if r.is_zero() {
                    Err(KernelError::ZeroInput)
                } else {
                    Ok(GroupElement::zero(0))
                }
            }
        }
    }

    /// Residue of a value-0 coefficient as a rational function over the
    /// tower's residue labels.
    pub fn residue(&self, a: &BaseElem) -> Result<RatFunc> {
        let nv = self.res_nvars();
        match a {
            BaseElem::Ambient(x) => {
                let c = x.residue()?;
                Ok(RatFunc::constant(&self.fq(), nv, c))
            }
            BaseElem::Res(r) => Ok(r.clone()),
        }
    }

    pub fn from_int(&self, v: i64) -> BaseElem {
        match &self.tower.base {
            BaseField::Trivial(_) => BaseElem::Res(RatFunc::constant(
                &self.fq(),
                self.res_nvars(),
                self.fq().from_i64(v),
            )),
            BaseField::Span(s) => BaseElem::Ambient(s.ctx().from_i64(v)),
            BaseField::Laurent { ctx, .. } => BaseElem::Ambient(ctx.from_i64(v)),
        }
    }

    pub fn pow_i(&self, a: &BaseElem, e: i64) -> Result<BaseElem> {
        if e == 0 {
            return Ok(self.one());
        }
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut acc = self.one();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        Ok(acc)
    }
}

impl TPoly {
    pub fn zero(nx: usize, ny: usize) -> TPoly {
        TPoly {
            terms: BTreeMap::new(),
            nx,
            ny,
        }
    }

    pub fn for_tower(tower: &Tower) -> TPoly {
        let g = tower.gauss.as_ref();
        TPoly::zero(
            g.map(|g| g.x_gens.len()).unwrap_or(0),
            g.map(|g| g.y_gens.len()).unwrap_or(0),
        )
    }

    pub fn constant(tower: &Tower, c: BaseElem) -> TPoly {
        let ops = CoeffOps::new(tower);
        let mut p = TPoly::for_tower(tower);
        p.insert(&ops, vec![0; p.nx], vec![0; p.ny], c);
        p
    }

    pub fn x_gen(tower: &Tower, i: usize) -> TPoly {
        let ops = CoeffOps::new(tower);
        let mut p = TPoly::for_tower(tower);
        let mut xe = vec![0; p.nx];
        xe[i] = 1;
        p.insert(&ops, xe, vec![0; p.ny], ops.one());
        p
    }

    pub fn y_gen(tower: &Tower, j: usize) -> TPoly {
        let ops = CoeffOps::new(tower);
        let mut p = TPoly::for_tower(tower);
        let mut ye = vec![0; p.ny];
        ye[j] = 1;
        p.insert(&ops, vec![0; p.nx], ye, ops.one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<i64>, Vec<i64>), &BaseElem)> {
        self.terms.iter()
    }

    pub fn insert(&mut self, ops: &CoeffOps, xe: Vec<i64>, ye: Vec<i64>, c: BaseElem) {
        assert_eq!(xe.len(), self.nx);
        assert_eq!(ye.len(), self.ny);
        if ops.is_zero(&c) {
            return;
        }
        match self.terms.entry((xe, ye)) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = ops.add(o.get(), &c);
                if ops.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, ops: &CoeffOps, other: &TPoly) -> TPoly {
        let mut out = self.clone();
        for ((xe, ye), c) in &other.terms {
            out.insert(ops, xe.clone(), ye.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, ops: &CoeffOps) -> TPoly {
        let mut out = TPoly::zero(self.nx, self.ny);
        for ((xe, ye), c) in &self.terms {
            out.terms.insert((xe.clone(), ye.clone()), ops.neg(c));
        }
        out
    }

    pub fn sub(&self, ops: &CoeffOps, other: &TPoly) -> TPoly {
        self.add(ops, &other.neg(ops))
    }

    pub fn mul(&self, ops: &CoeffOps, other: &TPoly) -> TPoly {
        let mut out = TPoly::zero(self.nx, self.ny);
        for ((xa, ya), ca) in &self.terms {
            for ((xb, yb), cb) in &other.terms {
                let xe: Vec<i64> = xa.iter().zip(xb).map(|(u, v)| u + v).collect();
                let ye: Vec<i64> = ya.iter().zip(yb).map(|(u, v)| u + v).collect();
                out.insert(ops, xe, ye, ops.mul(ca, cb));
            }
        }
        out
    }

    pub fn scale(&self, ops: &CoeffOps, k: &BaseElem) -> TPoly {
        let mut out = TPoly::zero(self.nx, self.ny);
        if ops.is_zero(k) {
            return out;
        }
        for ((xe, ye), c) in &self.terms {
            out.insert(ops, xe.clone(), ye.clone(), ops.mul(c, k));
        }
        out
    }

    pub fn pow(&self, ops: &CoeffOps, e: u32) -> TPoly {
        let mut acc = TPoly::zero(self.nx, self.ny);
        // build one = constant 1
        acc.insert(
            ops,
            vec![0; self.nx],
            vec![0; self.ny],
            ops.one(),
        );
        for _ in 0..e {
            acc = acc.mul(ops, self);
        }
        acc
    }

    /// True iff every monomial has zero x- and y-exponents.
    pub fn is_base_constant(&self) -> bool {
        self.terms
            .keys()
            .all(|(xe, ye)| xe.iter().all(|&e| e == 0) && ye.iter().all(|&e| e == 0))
    }
}

/// Value of a single monomial.
fn term_value(tower: &Tower, xe: &[i64], coeff_value: &GroupElement) -> GroupElement {
    let rank = tower.ambient_rank();
    let mut acc = coeff_value.extend_rank(rank);
    if let Some(g) = &tower.gauss {
        for (i, &e) in xe.iter().enumerate() {
            if e != 0 {
                acc = acc.add(&g.x_gens[i].value.scale_i(e));
            }
        }
    }
    acc
}

/// v(f) = min over monomials of v(c) + sum mu_i v(x_i), under lex order.
pub fn value_of(tower: &Tower, f: &TPoly) -> Result<GroupElement> {
    if f.is_zero() {
        return Err(KernelError::ZeroPolynomial);
    }
    let ops = CoeffOps::new(tower);
    let mut best: Option<GroupElement> = None;
    for ((xe, _ye), c) in f.terms() {
        let cv = ops.value(c)?;
        let tv = term_value(tower, xe, &cv);
        best = Some(match best {
            None => tv,
            Some(b) => {
                if tv < b {
                    tv
                } else {
                    b
                }
            }
        });
    }
    Ok(best.unwrap())
}

pub fn value_of_ratio(tower: &Tower, b: &TRatio) -> Result<GroupElement> {
    Ok(value_of(tower, &b.num)?.sub(&value_of(tower, &b.den)?))
}

/// The sum of all monomials of minimal value (ties are grouped).
fn minimal_part(tower: &Tower, f: &TPoly) -> Result<(TPoly, GroupElement)> {
    let v = value_of(tower, f)?;
    let ops = CoeffOps::new(tower);
    let mut out = TPoly::zero(f.nx, f.ny);
    for ((xe, ye), c) in f.terms() {
        let cv = ops.value(c)?;
        if term_value(tower, xe, &cv) == v {
            out.insert(&ops, xe.clone(), ye.clone(), c.clone());
        }
    }
    Ok((out, v))
}

/// Residue of a value-0 ratio f/g, as a rational function in the residue
/// labels over the base residue field.
pub fn residue_of(tower: &Tower, b: &TRatio) -> Result<RatFunc> {
    let v = value_of_ratio(tower, b)?;
    if !v.is_zero() {
        return Err(KernelError::NonzeroValue);
    }
    residue_of_value0(tower, b)
}

fn residue_of_value0(tower: &Tower, b: &TRatio) -> Result<RatFunc> {
    let ops = CoeffOps::new(tower);
    let fq = match &tower.base {
        BaseField::Laurent { ctx, .. } => ctx.fq().clone(),
        BaseField::Span(s) => s.ctx().fq().clone(),
        BaseField::Trivial(r) => r.ctx().clone(),
    };
    let nv = tower.residue_labels().len();
    let (f0, vf) = minimal_part(tower, &b.num)?;
    let (g0, vg) = minimal_part(tower, &b.den)?;
    // Minimal parts of a value-0 ratio share one x-monomial and one
    // coefficient value; peel both off with a base normalizer.
    let br = tower.base.rank();
    let (w_pref, _) = vf.split_at(br);
    let n = base_element_with_value(tower, &w_pref)?;
    let n_inv = ops.inv(&n)?;
    let render = |part: &TPoly, v_all: &GroupElement| -> Result<crate::mpoly::RatFunc> {
        let mut acc = RatFunc::zero(&fq, nv);
        let x_mu: Vec<i64> = {
            // x-exponents are pinned by the x-part of the value
            let mut mu = None;
            for ((xe, _), _) in part.terms() {
                match &mu {
                    None => mu = Some(xe.clone()),
                    Some(m) => {
                        if m != xe {
                            return Err(KernelError::UnverifiableStep(
                                "minimal part mixes x-monomials".into(),
                            ));
                        }
                    }
                }
            }
            mu.unwrap()
        };
        let _ = (&x_mu, v_all);
        for ((_xe, ye), c) in part.terms() {
            let scaled = ops.mul(c, &n_inv);
            let r = ops.residue(&scaled)?;
            let mut mono = RatFunc::one(&fq, nv);
            let label_offset = nv - part.ny;
            for (j, &e) in ye.iter().enumerate() {
                if e < 0 {
                    return Err(KernelError::UnverifiableStep(
                        "negative y-exponent in a residue computation".into(),
                    ));
                }
                let y = RatFunc::var(&fq, nv, label_offset + j);
                mono = mono.mul(&fq, &y.pow(&fq, e as u32));
            }
            acc = acc.add(&fq, &r.mul(&fq, &mono));
        }
        Ok(acc)
    };
    let num = render(&f0, &vf)?;
    let den = render(&g0, &vg)?;
    num.div(&fq, &den)
}

/// Is the rational function constant over the base residue field? Only
/// label-free base residues are supported, where constancy is exactly
/// "equal to an element of F_q".
fn residue_is_constant(tower: &Tower, r: &RatFunc) -> Result<bool> {
    let base_labels = match &tower.base {
        BaseField::Trivial(res) => res.labels().len(),
        _ => 0,
    };
    if base_labels > 0 {
        return Err(KernelError::UnsupportedConfiguration(
            "residue transcendence test over a base with labels".into(),
        ));
    }
    let fq = match &tower.base {
        BaseField::Laurent { ctx, .. } => ctx.fq().clone(),
        BaseField::Span(s) => s.ctx().fq().clone(),
        BaseField::Trivial(res) => res.ctx().clone(),
    };
    Ok(r.as_constant(&fq).is_some())
}

/// Classify a nonzero ratio: value transcendental iff its value has a
/// nonzero x-component; residue transcendental iff its value is zero and
/// its residue involves a label; Neither otherwise.
pub fn classify(tower: &Tower, b: &TRatio) -> Result<Classification> {
    if b.num.is_zero() {
        return Err(KernelError::ZeroInput);
    }
    let v = value_of_ratio(tower, b)?;
    let br = tower.base.rank();
    let (_, x_part) = v.split_at(br);
    if !x_part.is_zero() {
        return Ok(Classification::ValueTranscendental);
    }
    if !v.is_zero() {
        return Ok(Classification::Neither);
    }
    let r = residue_of_value0(tower, b)?;
    if residue_is_constant(tower, &r)? {
        Ok(Classification::Neither)
    } else {
        Ok(Classification::ResidueTranscendental(r))
    }
}

/// Is b = f/g an element of the base field? Exact: f and g must have equal
/// supports with all coefficient cross-ratios equal.
pub fn ratio_in_base(tower: &Tower, b: &TRatio) -> bool {
    let ops = CoeffOps::new(tower);
    if b.num.is_zero() {
        return true;
    }
    let fkeys: Vec<_> = b.num.terms().map(|(k, _)| k.clone()).collect();
    let gkeys: Vec<_> = b.den.terms().map(|(k, _)| k.clone()).collect();
    if fkeys != gkeys {
        return false;
    }
    // f_mu * g_nu = f_nu * g_mu for all pairs
    let fc: Vec<&BaseElem> = b.num.terms().map(|(_, c)| c).collect();
    let gc: Vec<&BaseElem> = b.den.terms().map(|(_, c)| c).collect();
    for i in 0..fc.len() {
        for j in i + 1..fc.len() {
            let lhs = ops.mul(fc[i], gc[j]);
            let rhs = ops.mul(fc[j], gc[i]);
            if !ops.eq(&lhs, &rhs) {
                return false;
            }
        }
    }
    true
}

const WITNESS_REDUCTION_CAP: usize = 256;

/// For b in K(T) outside K, find c', c in K with c'(b - c) valuation
/// transcendental. Minimal parts are grouped sums of tied monomials;
/// proportional minimal parts trigger a reduction step, and a constant
/// residue triggers a recentering. The result is self-checked with
/// `classify` before returning.
pub fn vt_witness(tower: &Tower, b: &TRatio) -> Result<(BaseElem, BaseElem)> {
    let ops = CoeffOps::new(tower);
    if b.num.is_zero() {
        return Err(KernelError::ZeroInput);
    }
    if ratio_in_base(tower, b) {
        return Err(KernelError::ElementInBaseField);
    }
    let br = tower.base.rank();
    let mut c_acc = ops.zero();
    for _ in 0..WITNESS_REDUCTION_CAP {
        // h = f - c_acc * g
        let h = b.num.sub(&ops, &b.den.scale(&ops, &c_acc));
        if h.is_zero() {
            return Err(KernelError::ElementInBaseField);
        }
        // One proportionality reduction: if min(h) = c * min(g) exactly,
        // fold c into the recentering constant.
        let (h0, _) = minimal_part(tower, &h)?;
        let (g0, _) = minimal_part(tower, &b.den)?;
        if let Some(c) = proportionality_constant(&ops, &h0, &g0) {
            c_acc = ops.add(&c_acc, &c);
            continue;
        }
        let shifted = TRatio {
            num: h.clone(),
            den: b.den.clone(),
        };
        let v = value_of_ratio(tower, &shifted)?;
        let (v_pref, v_x) = v.split_at(br);
        if !v_x.is_zero() {
            let witness = (ops.one(), c_acc.clone());
            return self_checked(tower, b, witness);
        }
        // normalize to value 0 and inspect the residue
        let n = base_element_with_value(tower, &v_pref)?;
        let n_inv = ops.inv(&n)?;
        let normalized = TRatio {
            num: h.scale(&ops, &n_inv),
            den: b.den.clone(),
        };
        let r = residue_of_value0(tower, &normalized)?;
        if !residue_is_constant(tower, &r)? {
            let witness = (n_inv, c_acc.clone());
            return self_checked(tower, b, witness);
        }
        // constant residue: recenter by its lift times the normalizer
        let fq = match &tower.base {
            BaseField::Laurent { ctx, .. } => ctx.fq().clone(),
            BaseField::Span(s) => s.ctx().fq().clone(),
            BaseField::Trivial(res) => res.ctx().clone(),
        };
        let lambda = r
            .as_constant(&fq)
            .expect("checked constant");
        let lift = lift_residue_constant(tower, &lambda)?;
        c_acc = ops.add(&c_acc, &ops.mul(&lift, &n));
    }
    Err(KernelError::WitnessSearchOverflow(WITNESS_REDUCTION_CAP))
}

fn self_checked(
    tower: &Tower,
    b: &TRatio,
    witness: (BaseElem, BaseElem),
) -> Result<(BaseElem, BaseElem)> {
    let ops = CoeffOps::new(tower);
    let (cp, c) = &witness;
    let adjusted = TRatio {
        num: b.num.sub(&ops, &b.den.scale(&ops, c)).scale(&ops, cp),
        den: b.den.clone(),
    };
    match classify(tower, &adjusted)? {
        Classification::Neither => Err(KernelError::UnverifiableStep(
            "witness failed its classification self-check".into(),
        )),
        _ => Ok(witness),
    }
}

/// If part = c * other coefficient-wise (same supports, one constant c in
/// the base field), return c.
fn proportionality_constant(ops: &CoeffOps, part: &TPoly, other: &TPoly) -> Option<BaseElem> {
    let pk: Vec<_> = part.terms().map(|(k, _)| k.clone()).collect();
    let ok: Vec<_> = other.terms().map(|(k, _)| k.clone()).collect();
    if pk != ok {
        return None;
    }
    let pc: Vec<&BaseElem> = part.terms().map(|(_, c)| c).collect();
    let oc: Vec<&BaseElem> = other.terms().map(|(_, c)| c).collect();
    let c = ops.mul(pc[0], &ops.inv(oc[0]).ok()?);
    for i in 1..pc.len() {
        let lhs = ops.mul(pc[i], oc[0]);
        let rhs = ops.mul(pc[0], oc[i]);
        if !ops.eq(&lhs, &rhs) {
            return None;
        }
    }
    Some(c)
}

/// One generator's rewrite in a transformed transcendence basis.
#[derive(Clone)]
pub enum GenTransform {
    Identity,
    /// g' = c * g^e with e in {1, -1}
    Scale { c: BaseElem, exponent: i64 },
    /// g' = g + c
    Shift { c: BaseElem },
}

#[derive(Clone)]
pub struct BasisTransform {
    pub x: Vec<GenTransform>,
    pub y: Vec<GenTransform>,
}

impl BasisTransform {
    pub fn identity(tower: &Tower) -> BasisTransform {
        let g = tower.gauss.as_ref();
        BasisTransform {
            x: vec![GenTransform::Identity; g.map(|g| g.x_gens.len()).unwrap_or(0)],
            y: vec![GenTransform::Identity; g.map(|g| g.y_gens.len()).unwrap_or(0)],
        }
    }

    /// The claimed value of the i-th transformed x-generator.
    fn claimed_x_value(&self, tower: &Tower, i: usize) -> Result<GroupElement> {
        let ops = CoeffOps::new(tower);
        let rank = tower.ambient_rank();
        let g = tower.gauss.as_ref().expect("gauss layer");
        let base_v = &g.x_gens[i].value;
        match &self.x[i] {
            GenTransform::Identity => Ok(base_v.clone()),
            GenTransform::Scale { c, exponent } => {
                let cv = ops.value(c)?.extend_rank(rank);
                Ok(base_v.scale_i(*exponent).add(&cv))
            }
            GenTransform::Shift { c } => {
                let cv = ops.value(c)?.extend_rank(rank);
                Ok(if cv < *base_v { cv } else { base_v.clone() })
            }
        }
    }

    /// Substitute the transformed generators by their expressions in the
    /// original ones, expanding shifts binomially.
    pub fn expand_to_original(&self, tower: &Tower, sample: &TPoly) -> Result<TPoly> {
        let ops = CoeffOps::new(tower);
        let mut out = TPoly::zero(sample.nx, sample.ny);
        for ((xe, ye), coeff) in sample.terms() {
            let mut acc = TPoly::constant(tower, coeff.clone());
            for (i, &e) in xe.iter().enumerate() {
                acc = acc.mul(&ops, &expand_gen_power(tower, &self.x[i], true, i, e)?);
            }
            for (j, &e) in ye.iter().enumerate() {
                acc = acc.mul(&ops, &expand_gen_power(tower, &self.y[j], false, j, e)?);
            }
            out = out.add(&ops, &acc);
        }
        Ok(out)
    }
}

fn expand_gen_power(
    tower: &Tower,
    t: &GenTransform,
    is_x: bool,
    idx: usize,
    e: i64,
) -> Result<TPoly> {
    let ops = CoeffOps::new(tower);
    let plain = |k: i64| -> TPoly {
        let mut p = TPoly::for_tower(tower);
        let mut xe = vec![0; p.nx];
        let mut ye = vec![0; p.ny];
        if is_x {
            xe[idx] = k;
        } else {
            ye[idx] = k;
        }
        p.insert(&ops, xe, ye, ops.one());
        p
    };
    match t {
        GenTransform::Identity => Ok(plain(e)),
        GenTransform::Scale { c, exponent } => {
            // (c * g^s)^e = c^e * g^(s e)
            let ce = ops.pow_i(c, e)?;
            Ok(plain(exponent * e).scale(&ops, &ce))
        }
        GenTransform::Shift { c } => {
            if e < 0 {
                return Err(KernelError::UnsupportedConfiguration(
                    "negative power of a shifted generator".into(),
                ));
            }
            if e > 30 {
                return Err(KernelError::UnsupportedConfiguration(
                    "shift expansion exponent exceeds 30".into(),
                ));
            }
            // (g + c)^e = sum binom(e, a) c^(e-a) g^a
            let mut acc = TPoly::for_tower(tower);
            for a in 0..=e {
                let b = binomial(e as u64, a as u64);
                let bc = ops.from_int((b % tower.char_p() as u128) as i64);
                let ce = ops.pow_i(c, e - a)?;
                let term = plain(a).scale(&ops, &ops.mul(&bc, &ce));
                acc = acc.add(&ops, &term);
            }
            Ok(acc)
        }
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k.min(n));
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    num / den
}

/// Validate a (possibly transformed) generating set against the monomial
/// value rule: for each sample polynomial written in the transformed
/// generators, the claimed minimum-over-monomials value must equal the true
/// value of its expansion. Returns false when some sample violates the
/// rule, which certifies that the transformed set is not a valuation
/// transcendence basis.
pub fn check_vtb(tower: &Tower, transform: &BasisTransform, samples: &[TPoly]) -> Result<bool> {
    let ops = CoeffOps::new(tower);
    for sample in samples {
        if sample.is_zero() {
            continue;
        }
        // claimed value: monomial rule with claimed generator values
        let mut claimed: Option<GroupElement> = None;
        let rank = tower.ambient_rank();
        for ((xe, _ye), c) in sample.terms() {
            let mut tv = ops.value(c)?.extend_rank(rank);
            for (i, &e) in xe.iter().enumerate() {
                if e != 0 {
                    tv = tv.add(&transform.claimed_x_value(tower, i)?.scale_i(e));
                }
            }
            claimed = Some(match claimed {
                None => tv,
                Some(b) => {
                    if tv < b {
                        tv
                    } else {
                        b
                    }
                }
            });
        }
        let claimed = claimed.unwrap();
        let expanded = transform.expand_to_original(tower, sample)?;
        if expanded.is_zero() {
            // claimed finite value vs an actual zero: violation
            return Ok(false);
        }
        let actual = value_of(tower, &expanded)?;
        if actual != claimed {
            return Ok(false);
        }
    }
    Ok(true)
}
