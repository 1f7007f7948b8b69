//! Valued-field descriptors: construction trees that pin down one valued
//! field each. A tower is a base field (Laurent, span, or trivially valued
//! residue data), an optional monomial-valuation layer adjoining value- and
//! residue-transcendental generators, and a list of certified algebraic
//! steps.
//!
//! Lex coordinates of the value group: base coordinates first (most
//! significant), then one coordinate per x-generator in order.

use crate::ambient::{AmbientCtx, AmbientElement, SpanField, MEMBERSHIP_BOUND};
use crate::error::{KernelError, Result};
use crate::fq::FqElem;
use crate::mpoly::{subfield_membership, RatFunc};
use crate::residue_fields::{ResPoly, ResidueField};
use crate::value_groups::{GroupElement, ValueGroup};
use num::BigRational;
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub enum BaseField {
    /// The complete field F_q((t^m)) itself.
    Laurent { ctx: Arc<AmbientCtx>, unif_exp: i64 },
    /// A span subfield F_q(u, g_1, ..., g_k) of the ambient.
    Span(SpanField),
    /// Residue data carrying the trivial valuation.
    Trivial(ResidueField),
}

impl fmt::Debug for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Laurent { ctx, unif_exp } => {
                write!(f, "F_{}((t^{}))", ctx.fq().order(), unif_exp)
            }
            BaseField::Span(s) => write!(f, "{s:?}"),
            BaseField::Trivial(r) => write!(f, "triv {r:?}"),
        }
    }
}

impl BaseField {
    pub fn rank(&self) -> usize {
        match self {
            BaseField::Laurent { .. } | BaseField::Span(_) => 1,
            BaseField::Trivial(_) => 0,
        }
    }

    pub fn residue_field(&self) -> ResidueField {
        match self {
            BaseField::Laurent { ctx, .. } => ResidueField::finite(ctx.fq().clone()),
            BaseField::Span(s) => s.residue_field(),
            BaseField::Trivial(r) => r.clone(),
        }
    }

    pub fn char_p(&self) -> u64 {
        match self {
            BaseField::Laurent { ctx, .. } => ctx.fq().p(),
            BaseField::Span(s) => s.ctx().fq().p(),
            BaseField::Trivial(r) => r.ctx().p(),
        }
    }

    fn struct_eq(&self, other: &BaseField) -> bool {
        match (self, other) {
            (
                BaseField::Laurent { ctx: a, unif_exp: m },
                BaseField::Laurent { ctx: b, unif_exp: n },
            ) => a.fq().order() == b.fq().order() && m == n,
            (BaseField::Span(a), BaseField::Span(b)) => {
                a.unif_exp() == b.unif_exp()
                    && a.gens().len() == b.gens().len()
                    && a.gens()
                        .iter()
                        .zip(b.gens())
                        .all(|(x, y)| x.name == y.name && x.elem == y.elem)
            }
            (BaseField::Trivial(a), BaseField::Trivial(b)) => a == b,
            _ => false,
        }
    }
}

/// A value-transcendental generator with its assigned value.
#[derive(Clone, Debug)]
pub struct XGen {
    pub name: String,
    pub value: GroupElement,
}

/// A residue-transcendental generator (its residue is a fresh label).
#[derive(Clone, Debug)]
pub struct YGen {
    pub name: String,
}

#[derive(Clone, Debug, Default)]
pub struct GaussLayer {
    pub x_gens: Vec<XGen>,
    pub y_gens: Vec<YGen>,
}

impl GaussLayer {
    fn struct_eq(&self, other: &GaussLayer) -> bool {
        self.x_gens.len() == other.x_gens.len()
            && self.y_gens.len() == other.y_gens.len()
            && self
                .x_gens
                .iter()
                .zip(&other.x_gens)
                .all(|(a, b)| a.name == b.name && a.value == b.value)
            && self
                .y_gens
                .iter()
                .zip(&other.y_gens)
                .all(|(a, b)| a.name == b.name)
    }
}

/// How the valuation extends along one algebraic step; certifications force
/// a unique valuation extension and pin the local data exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certification {
    /// e = degree saturates the fundamental inequality.
    DefectlessE,
    /// f = degree saturates the fundamental inequality.
    DefectlessF,
    /// purely inseparable: one extension of the valuation, always.
    UniqueByInsep,
    /// field sits between F_q(u) and F_q((u)); structural data pinned.
    UniqueBySandwich,
}

#[derive(Clone)]
pub enum StepKind {
    /// z with z^p in the field below, certified by an explicit membership
    /// witness for z^p and a derivation witness for z itself. Degree p.
    PurelyInsep {
        z: AmbientElement,
        span_after: SpanField,
    },
    /// z^n = u^j * prod x_i^{k_i}, with the value index verified to be
    /// exactly n. Degree n, e-contribution n.
    Radical {
        n: u64,
        unif_pow: i64,
        x_pows: Vec<i64>,
        z_value: GroupElement,
    },
    /// z a root of a monic irreducible lift of a residue polynomial.
    /// Degree = deg, f-contribution = deg.
    ResidueLift { poly: ResPoly, separable: bool },
    /// Uncertified span enlargement; downstream reports become Unknown.
    SpanEnlarge {
        z: AmbientElement,
        span_after: SpanField,
    },
}

#[derive(Clone)]
pub struct Step {
    pub name: String,
    pub kind: StepKind,
    /// Field degree of the step; None when uncertified.
    pub degree: Option<u64>,
    /// Field-theoretic inseparable degree of the step (valuation-free).
    pub insep_degree: Option<u64>,
    pub cert: Option<Certification>,
}

impl fmt::Debug for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.kind {
            StepKind::PurelyInsep { .. } => "pinsep",
            StepKind::Radical { .. } => "radical",
            StepKind::ResidueLift { .. } => "reslift",
            StepKind::SpanEnlarge { .. } => "enlarge",
        };
        write!(f, "{}:{}", kind, self.name)
    }
}

impl Step {
    fn struct_eq(&self, other: &Step) -> bool {
        if self.name != other.name || self.degree != other.degree {
            return false;
        }
        match (&self.kind, &other.kind) {
            (
                StepKind::PurelyInsep { z: a, .. },
                StepKind::PurelyInsep { z: b, .. },
            ) => a == b,
            (
                StepKind::Radical {
                    n: n1,
                    z_value: v1,
                    ..
                },
                StepKind::Radical {
                    n: n2,
                    z_value: v2,
                    ..
                },
            ) => n1 == n2 && v1 == v2,
            (
                StepKind::ResidueLift { poly: p1, .. },
                StepKind::ResidueLift { poly: p2, .. },
            ) => p1.degree() == p2.degree(),
            (
                StepKind::SpanEnlarge { z: a, .. },
                StepKind::SpanEnlarge { z: b, .. },
            ) => a == b,
            _ => false,
        }
    }
}

/// One valued field, fixed by its construction tree.
#[derive(Clone)]
pub struct Tower {
    pub base: BaseField,
    pub gauss: Option<GaussLayer>,
    pub steps: Vec<Step>,
}

impl fmt::Debug for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.base)?;
        if let Some(g) = &self.gauss {
            let xs: Vec<&str> = g.x_gens.iter().map(|x| x.name.as_str()).collect();
            let ys: Vec<&str> = g.y_gens.iter().map(|y| y.name.as_str()).collect();
            write!(f, "(x:{} y:{})", xs.join(","), ys.join(","))?;
        }
        for s in &self.steps {
            write!(f, " + {s:?}")?;
        }
        Ok(())
    }
}

impl PartialEq for Tower {
    fn eq(&self, other: &Self) -> bool {
        self.base.struct_eq(&other.base)
            && match (&self.gauss, &other.gauss) {
                (None, None) => true,
                (Some(a), Some(b)) => a.struct_eq(b),
                _ => false,
            }
            && self.steps.len() == other.steps.len()
            && self
                .steps
                .iter()
                .zip(&other.steps)
                .all(|(a, b)| a.struct_eq(b))
    }
}

impl Tower {
    pub fn over_base(base: BaseField) -> Tower {
        Tower {
            base,
            gauss: None,
            steps: Vec::new(),
        }
    }

    pub fn over_span(span: SpanField) -> Tower {
        Tower::over_base(BaseField::Span(span))
    }

    /// Add the standard monomial-valuation layer: x-generator values are
    /// fresh lex coordinates appended on the less significant side, y
    /// residues are fresh labels.
    pub fn with_standard_gauss(mut self, x_names: &[&str], y_names: &[&str]) -> Result<Tower> {
        if self.gauss.is_some() || !self.steps.is_empty() {
            return Err(KernelError::OutsideCatalog(
                "gauss layer must sit directly on the base".into(),
            ));
        }
        let br = self.base.rank();
        let rank = br + x_names.len();
        let x_gens = x_names
            .iter()
            .enumerate()
            .map(|(i, n)| XGen {
                name: n.to_string(),
                value: GroupElement::unit(rank, br + i),
            })
            .collect();
        let y_gens = y_names
            .iter()
            .map(|n| YGen {
                name: n.to_string(),
            })
            .collect();
        self.gauss = Some(GaussLayer { x_gens, y_gens });
        Ok(self)
    }

    /// Same layer shape but with explicit x-generator values (used by
    /// transformed transcendence bases; values must stay rationally
    /// independent, which is verified via the value-group rank).
    pub fn with_gauss_values(
        mut self,
        x_gens: Vec<XGen>,
        y_names: &[&str],
    ) -> Result<Tower> {
        if self.gauss.is_some() || !self.steps.is_empty() {
            return Err(KernelError::OutsideCatalog(
                "gauss layer must sit directly on the base".into(),
            ));
        }
        let br = self.base.rank();
        let rank = br + x_gens.len();
        for x in &x_gens {
            if x.value.rank() != rank {
                return Err(KernelError::MismatchedAmbientRank(x.value.rank(), rank));
            }
        }
        // rational independence over the base group
        let mut gens: Vec<GroupElement> = self
            .base_value_group_at_rank(rank)
            .basis()
            .to_vec();
        let base_rr = gens.len();
        gens.extend(x_gens.iter().map(|x| x.value.clone()));
        let g = ValueGroup::normalize(rank, &gens)?;
        if g.rational_rank() != base_rr + x_gens.len() {
            return Err(KernelError::OutsideCatalog(
                "x-generator values are not rationally independent over the base".into(),
            ));
        }
        let y_gens = y_names
            .iter()
            .map(|n| YGen {
                name: n.to_string(),
            })
            .collect();
        self.gauss = Some(GaussLayer { x_gens, y_gens });
        Ok(self)
    }

    pub fn ambient_rank(&self) -> usize {
        self.base.rank() + self.gauss.as_ref().map(|g| g.x_gens.len()).unwrap_or(0)
    }

    pub fn char_p(&self) -> u64 {
        self.base.char_p()
    }

    /// The span field after all span-level steps (base span plus
    /// enlargements), when the tower is ambient-backed.
    pub fn current_span(&self) -> Option<&SpanField> {
        let mut cur = match &self.base {
            BaseField::Span(s) => Some(s),
            _ => None,
        };
        for st in &self.steps {
            match &st.kind {
                StepKind::PurelyInsep { span_after, .. }
                | StepKind::SpanEnlarge { span_after, .. } => cur = Some(span_after),
                _ => {}
            }
        }
        cur
    }

    fn base_value_group_at_rank(&self, rank: usize) -> ValueGroup {
        let g = match &self.base {
            BaseField::Laurent { unif_exp, .. } => ValueGroup::from_i64_gens(1, &[&[*unif_exp]]),
            BaseField::Span(s) => s.value_group(),
            BaseField::Trivial(_) => ValueGroup::trivial(0),
        };
        g.extend_rank(rank)
    }

    /// Exact value group of the tower: the current span lattice in the base
    /// coordinate, the x-generator values, and the radical-step refinements.
    pub fn value_group(&self) -> ValueGroup {
        let rank = self.ambient_rank();
        let mut gens: Vec<GroupElement> = Vec::new();
        match (&self.base, self.current_span()) {
            (BaseField::Trivial(_), _) => {}
            (_, Some(span)) => {
                gens.push(
                    GroupElement::from_i64(&[span.unif_exp()]).extend_rank(rank),
                );
            }
            (BaseField::Laurent { unif_exp, .. }, None) => {
                gens.push(GroupElement::from_i64(&[*unif_exp]).extend_rank(rank));
            }
            (BaseField::Span(_), None) => unreachable!(),
        }
        if let Some(g) = &self.gauss {
            gens.extend(g.x_gens.iter().map(|x| x.value.clone()));
        }
        for st in &self.steps {
            if let StepKind::Radical { z_value, .. } = &st.kind {
                gens.push(z_value.clone());
            }
        }
        ValueGroup::normalize(rank, &gens).expect("uniform rank by construction")
    }

    /// Exact residue field: base residue, y-labels, then residue lifts.
    pub fn residue_field(&self) -> Result<ResidueField> {
        let mut r = self.base.residue_field();
        if let Some(g) = &self.gauss {
            for y in &g.y_gens {
                r = r.adjoin_transcendental(&y.name)?;
            }
        }
        for st in &self.steps {
            if let StepKind::ResidueLift { poly, separable } = &st.kind {
                let nv = r.labels().len();
                let poly = ResPoly {
                    coeffs: poly.coeffs.iter().map(|c| c.extend_vars(nv)).collect(),
                };
                r = if *separable {
                    r.adjoin_separable_root(&st.name, poly)?
                } else {
                    r.adjoin_root(&st.name, poly)?
                };
            }
        }
        Ok(r)
    }

    /// All labels visible to residue computations: base labels then y-names.
    pub fn residue_labels(&self) -> Vec<String> {
        let mut labels: Vec<String> = match &self.base {
            BaseField::Trivial(r) => r.labels().to_vec(),
            _ => Vec::new(),
        };
        if let Some(g) = &self.gauss {
            labels.extend(g.y_gens.iter().map(|y| y.name.clone()));
        }
        labels
    }

    pub fn is_certified(&self) -> bool {
        self.steps.iter().all(|s| s.cert.is_some())
    }

    /// Field degree over the sub-tower with `prefix_len` steps.
    pub fn degree_over_prefix(&self, prefix_len: usize) -> Option<u64> {
        self.steps[prefix_len..]
            .iter()
            .map(|s| s.degree)
            .product::<Option<u64>>()
    }

    pub fn insep_degree_over_prefix(&self, prefix_len: usize) -> Option<u64> {
        self.steps[prefix_len..]
            .iter()
            .map(|s| s.insep_degree)
            .product::<Option<u64>>()
    }

    /// Rebind every ambient-backed component to a context at a new
    /// precision; the formal views re-realize on demand.
    pub fn at_precision(&self, prec: i64) -> Tower {
        let retag = |span: &SpanField| -> SpanField {
            let ctx = span.ctx().at_precision(prec);
            span.at_precision(&ctx)
        };
        let base = match &self.base {
            BaseField::Laurent { ctx, unif_exp } => BaseField::Laurent {
                ctx: ctx.at_precision(prec),
                unif_exp: *unif_exp,
            },
            BaseField::Span(s) => BaseField::Span(retag(s)),
            BaseField::Trivial(r) => BaseField::Trivial(r.clone()),
        };
        let steps = self
            .steps
            .iter()
            .map(|s| {
                let kind = match &s.kind {
                    StepKind::PurelyInsep { z, span_after } => StepKind::PurelyInsep {
                        z: AmbientElement::from_formal(
                            z.ctx().at_precision(prec),
                            z.formal().clone(),
                        ),
                        span_after: retag(span_after),
                    },
                    StepKind::SpanEnlarge { z, span_after } => StepKind::SpanEnlarge {
                        z: AmbientElement::from_formal(
                            z.ctx().at_precision(prec),
                            z.formal().clone(),
                        ),
                        span_after: retag(span_after),
                    },
                    other => other.clone(),
                };
                Step {
                    name: s.name.clone(),
                    kind,
                    degree: s.degree,
                    insep_degree: s.insep_degree,
                    cert: s.cert,
                }
            })
            .collect();
        Tower {
            base,
            gauss: self.gauss.clone(),
            steps,
        }
    }
}

/// Base-field elements as they appear in polynomial coefficients.
#[derive(Clone)]
pub enum BaseElem {
    Ambient(AmbientElement),
    /// Rational function in the residue labels of a trivially valued base.
    Res(RatFunc),
}

impl fmt::Debug for BaseElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseElem::Ambient(a) => write!(f, "{a:?}"),
            BaseElem::Res(r) => write!(f, "{r:?}"),
        }
    }
}

/// p-part of a positive rational: p^(v_p(num) - v_p(den)).
pub fn p_part_of_ratio(x: &BigRational, p: u64) -> Result<u64> {
    fn vp(mut n: num::BigInt, p: u64) -> i64 {
        use num::Zero;
        let bp = num::BigInt::from(p);
        let mut v = 0i64;
        while !n.is_zero() && (&n % &bp).is_zero() {
            n /= &bp;
            v += 1;
        }
        v
    }
    let v = vp(x.numer().clone(), p) - vp(x.denom().clone(), p);
    if v < 0 {
        return Err(KernelError::UnverifiableStep(format!(
            "negative p-part exponent {v}"
        )));
    }
    Ok(p.pow(v as u32))
}

pub fn p_part_of_u64(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n % p == 0 && n > 0 {
        out *= p;
        n /= p;
    }
    out
}

/// Infer the certified purely inseparable chain between two span fields
/// with the same ambient: every lower generator must be a certified member
/// of the upper span, and each extra upper generator must be certified
/// outside the running span with its p-th power certified inside.
pub fn infer_span_steps(lower: &SpanField, upper: &SpanField) -> Result<Vec<Step>> {
    let fq = lower.ctx().fq().clone();
    for g in lower.gens() {
        if !upper.certify_member(&g.elem) {
            return Err(KernelError::NotASubgroup(format!(
                "generator {} of the lower field has no membership certificate in the upper field",
                g.name
            )));
        }
    }
    let mut current = lower.clone();
    let mut steps = Vec::new();
    for g in upper.gens() {
        if subfield_membership(&fq, g.elem.formal(), &current.gen_elems(), MEMBERSHIP_BOUND)
            .is_some()
        {
            continue;
        }
        if !current.certify_non_member(&g.elem) {
            return Err(KernelError::UnverifiableStep(format!(
                "generator {} is neither certified inside nor outside the running span",
                g.name
            )));
        }
        let p = fq.p() as i64;
        let zp = g.elem.pow_i(p)?;
        if !current.certify_member(&zp) {
            return Err(KernelError::UnverifiableStep(format!(
                "p-th power of {} has no membership certificate",
                g.name
            )));
        }
        let span_after = enlarge_span_choosing_uniformizer(&current, &g.name, &g.elem)?;
        steps.push(Step {
            name: g.name.clone(),
            kind: StepKind::PurelyInsep {
                z: g.elem.clone(),
                span_after: span_after.clone(),
            },
            degree: Some(fq.p()),
            insep_degree: Some(fq.p()),
            cert: Some(Certification::UniqueByInsep),
        });
        current = span_after;
    }
    // The chain must reach the upper field exactly: every upper generator is
    // now a member, and conversely (checked above for the lower field).
    for g in upper.gens() {
        if !current.certify_member(&g.elem) {
            return Err(KernelError::UnverifiableStep(format!(
                "generator {} unreachable by the inferred chain",
                g.name
            )));
        }
    }
    Ok(steps)
}

/// Enlarge a span by one generator and re-select the uniformizer: the
/// monomial generator of least exponent. Every generator must lie in the
/// new F_q((u')), which the span constructor re-verifies.
pub fn enlarge_span_choosing_uniformizer(
    span: &SpanField,
    name: &str,
    z: &AmbientElement,
) -> Result<SpanField> {
    let mut gens: Vec<(String, AmbientElement)> = span
        .gens()
        .iter()
        .map(|g| (g.name.clone(), g.elem.clone()))
        .collect();
    if gens.iter().any(|(n, _)| n == name) {
        return Err(KernelError::DuplicateLabel(name.to_string()));
    }
    gens.push((name.to_string(), z.clone()));
    // candidate uniformizers: exact monomial generators
    let mut best: Option<(i64, String)> = None;
    for (n, e) in &gens {
        if let Some(exp) = exact_monomial_exponent(e) {
            if exp >= 1 && best.as_ref().map(|(b, _)| exp < *b).unwrap_or(true) {
                best = Some((exp, n.clone()));
            }
        }
    }
    let Some((_, unif)) = best else {
        return Err(KernelError::OutsideCatalog(
            "no monomial generator available as uniformizer".into(),
        ));
    };
    SpanField::new(span.ctx().clone(), gens, &unif)
}

fn exact_monomial_exponent(e: &AmbientElement) -> Option<i64> {
    let fq = e.ctx().fq();
    let den_one = e.formal().den.terms().count() == 1
        && e.formal()
            .den
            .terms()
            .all(|(ex, c)| ex.iter().all(|&x| x == 0) && *c == fq.one());
    if !den_one {
        return None;
    }
    let mut terms = e.formal().num.terms();
    let (exps, c) = terms.next()?;
    if terms.next().is_some() || *c != fq.one() || exps.iter().skip(1).any(|&x| x > 0) {
        return None;
    }
    Some(exps[0] as i64)
}

/// Make an element of the base field with the given value (in the prefix
/// coordinates) and return it with its value; used to normalize ratios.
pub fn base_element_with_value(tower: &Tower, prefix_value: &GroupElement) -> Result<BaseElem> {
    match (&tower.base, tower.current_span()) {
        (BaseField::Trivial(r), _) => {
            if prefix_value.rank() != 0 {
                return Err(KernelError::MismatchedAmbientRank(prefix_value.rank(), 0));
            }
            let nv = r.labels().len() + tower
                .gauss
                .as_ref()
                .map(|g| g.y_gens.len())
                .unwrap_or(0);
            Ok(BaseElem::Res(RatFunc::one(r.ctx(), nv)))
        }
        (_, Some(span)) => {
            let v = prefix_value.coord(0);
            if !v.is_integer() {
                return Err(KernelError::OutsideCatalog(format!(
                    "no base element of fractional value {v}"
                )));
            }
            let vi = i64::try_from(v.to_integer()).map_err(|_| {
                KernelError::UnsupportedConfiguration("value exceeds i64".into())
            })?;
            Ok(BaseElem::Ambient(span.element_with_value(vi)?))
        }
        (BaseField::Laurent { ctx, unif_exp }, None) => {
            let v = prefix_value.coord(0);
            let vi = i64::try_from(v.to_integer()).map_err(|_| {
                KernelError::UnsupportedConfiguration("value exceeds i64".into())
            })?;
            if vi % *unif_exp != 0 {
                return Err(KernelError::OutsideCatalog(format!(
                    "value {vi} outside {}Z",
                    unif_exp
                )));
            }
            Ok(BaseElem::Ambient(ctx.t().pow_i(vi)?))
        }
        (BaseField::Span(_), None) => unreachable!(),
    }
}

/// Lift a residue constant back into the base field.
pub fn lift_residue_constant(tower: &Tower, c: &FqElem) -> Result<BaseElem> {
    match (&tower.base, tower.current_span()) {
        (BaseField::Trivial(r), _) => {
            let nv = r.labels().len()
                + tower.gauss.as_ref().map(|g| g.y_gens.len()).unwrap_or(0);
            Ok(BaseElem::Res(RatFunc::constant(r.ctx(), nv, c.clone())))
        }
        (_, Some(span)) => Ok(BaseElem::Ambient(span.ctx().constant(c.clone()))),
        (BaseField::Laurent { ctx, .. }, None) => Ok(BaseElem::Ambient(ctx.constant(c.clone()))),
        (BaseField::Span(_), None) => unreachable!(),
    }
}
