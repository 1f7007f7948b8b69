//! Finitely generated ordered abelian groups realized as subgroups of Q^r
//! with lexicographic order (coordinate 0 most significant).
//!
//! Canonical bases come from the Hermite normal form of the generator
//! matrix after clearing denominators, so two generating sets spanning the
//! same subgroup normalize identically. All arithmetic is exact.

use crate::error::{KernelError, Result};
use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Element of Q^r compared lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    coords: Vec<BigRational>,
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl GroupElement {
    pub fn new(coords: Vec<BigRational>) -> GroupElement {
        GroupElement { coords }
    }

    pub fn from_i64(coords: &[i64]) -> GroupElement {
        GroupElement {
            coords: coords.iter().map(|&c| rat_int(c)).collect(),
        }
    }

    pub fn zero(rank: usize) -> GroupElement {
        GroupElement {
            coords: vec![BigRational::zero(); rank],
        }
    }

    pub fn unit(rank: usize, idx: usize) -> GroupElement {
        let mut coords = vec![BigRational::zero(); rank];
        coords[idx] = BigRational::one();
        GroupElement { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &BigRational {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &GroupElement) -> GroupElement {
        assert_eq!(self.rank(), other.rank());
        GroupElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> GroupElement {
        GroupElement {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn sub(&self, other: &GroupElement) -> GroupElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigRational) -> GroupElement {
        GroupElement {
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }

    pub fn scale_i(&self, k: i64) -> GroupElement {
        self.scale(&rat_int(k))
    }

    /// Index of the most significant nonzero coordinate.
    pub fn leading_coord(&self) -> Option<usize> {
        self.coords.iter().position(|c| !c.is_zero())
    }

    /// Pad with zeros on the right (less significant side).
    pub fn extend_rank(&self, rank: usize) -> GroupElement {
        assert!(rank >= self.rank());
        let mut coords = self.coords.clone();
        coords.resize(rank, BigRational::zero());
        GroupElement { coords }
    }

    /// Split into the prefix (coordinates < k) and suffix (coordinates >= k).
    pub fn split_at(&self, k: usize) -> (GroupElement, GroupElement) {
        (
            GroupElement {
                coords: self.coords[..k].to_vec(),
            },
            GroupElement {
                coords: self.coords[k..].to_vec(),
            },
        )
    }

    pub fn concat(&self, other: &GroupElement) -> GroupElement {
        let mut coords = self.coords.clone();
        coords.extend(other.coords.iter().cloned());
        GroupElement { coords }
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.rank(), other.rank(), "lex comparison needs equal rank");
        for (a, b) in self.coords.iter().zip(&other.coords) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// Finitely generated subgroup of Q^r with canonical (Hermite) basis.
#[derive(Clone, PartialEq, Eq)]
pub struct ValueGroup {
    ambient_rank: usize,
    basis: Vec<GroupElement>,
}

impl fmt::Debug for ValueGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{:?}>", self.basis)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Index {
    Finite(u64),
    Infinite,
}

impl Index {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Index::Finite(n) => Some(*n),
            Index::Infinite => None,
        }
    }
}

impl ValueGroup {
    pub fn trivial(ambient_rank: usize) -> ValueGroup {
        ValueGroup {
            ambient_rank,
            basis: Vec::new(),
        }
    }

    /// Canonicalize a generator list.
    pub fn normalize(ambient_rank: usize, gens: &[GroupElement]) -> Result<ValueGroup> {
        for g in gens {
            if g.rank() != ambient_rank {
                return Err(KernelError::MismatchedAmbientRank(ambient_rank, g.rank()));
            }
        }
        let nonzero: Vec<&GroupElement> = gens.iter().filter(|g| !g.is_zero()).collect();
        if nonzero.is_empty() {
            return Ok(ValueGroup::trivial(ambient_rank));
        }
        // Clear denominators globally, run integer HNF, divide back.
        let mut d = BigInt::one();
        for g in &nonzero {
            for c in g.coords() {
                d = d.lcm(c.denom());
            }
        }
        let rows: Vec<Vec<BigInt>> = nonzero
            .iter()
            .map(|g| {
                g.coords()
                    .iter()
                    .map(|c| (c * BigRational::from_integer(d.clone())).to_integer())
                    .collect()
            })
            .collect();
        let hnf = hermite_normal_form(rows, ambient_rank);
        let dr = BigRational::from_integer(d);
        let basis = hnf
            .into_iter()
            .map(|row| {
                GroupElement::new(
                    row.into_iter()
                        .map(|x| BigRational::from_integer(x) / dr.clone())
                        .collect(),
                )
            })
            .collect();
        Ok(ValueGroup {
            ambient_rank,
            basis,
        })
    }

    pub fn from_i64_gens(ambient_rank: usize, gens: &[&[i64]]) -> ValueGroup {
        let elems: Vec<GroupElement> = gens.iter().map(|g| GroupElement::from_i64(g)).collect();
        ValueGroup::normalize(ambient_rank, &elems).expect("consistent ranks")
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn basis(&self) -> &[GroupElement] {
        &self.basis
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn rational_rank(&self) -> usize {
        self.basis.len()
    }

    /// Solve gamma = sum c_i b_i over Q by forward substitution along the
    /// echelon pivots. Returns None when gamma is outside the Q-span.
    fn express(&self, gamma: &GroupElement) -> Option<Vec<BigRational>> {
        if gamma.rank() != self.ambient_rank {
            return None;
        }
        let mut residual = gamma.clone();
        let mut coeffs = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let p = row.leading_coord().expect("basis rows nonzero");
            let c = residual.coord(p) / row.coord(p);
            residual = residual.sub(&row.scale(&c));
            coeffs.push(c);
        }
        if residual.is_zero() {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn contains(&self, gamma: &GroupElement) -> bool {
        match self.express(gamma) {
            Some(coeffs) => coeffs.iter().all(|c| c.is_integer()),
            None => false,
        }
    }

    pub fn is_subgroup_of(&self, other: &ValueGroup) -> bool {
        self.ambient_rank == other.ambient_rank
            && self.basis.iter().all(|b| other.contains(b))
    }

    /// Group index [self : small], Infinite when the rational ranks differ.
    pub fn index_over(&self, small: &ValueGroup) -> Result<Index> {
        if !small.is_subgroup_of(self) {
            return Err(KernelError::NotASubgroup(
                "index requires small to be contained in big".into(),
            ));
        }
        if small.rational_rank() < self.rational_rank() {
            return Ok(Index::Infinite);
        }
        let k = self.rational_rank();
        if k == 0 {
            return Ok(Index::Finite(1));
        }
        // Integer change-of-basis matrix M with small_i = sum_j M_ij big_j.
        let mut m: Vec<Vec<BigRational>> = Vec::with_capacity(k);
        for s in &small.basis {
            let coeffs = self.express(s).expect("subgroup already verified");
            m.push(coeffs);
        }
        let det = determinant(&m);
        let det = det.abs();
        debug_assert!(det.is_integer());
        let n = det.to_integer();
        Ok(Index::Finite(u64::try_from(n).map_err(|_| {
            KernelError::UnsupportedConfiguration("index exceeds u64".into())
        })?))
    }

    /// True iff every element of `self` lies below some element of `sub`.
    /// For finitely generated subgroups under lex order this reduces to the
    /// leading-coordinate comparison.
    pub fn cofinal_in(sub: &ValueGroup, sup: &ValueGroup) -> Result<bool> {
        if !sub.is_subgroup_of(sup) {
            return Err(KernelError::NotASubgroup(
                "cofinality requires sub to be contained in sup".into(),
            ));
        }
        if sup.is_trivial() {
            return Ok(true);
        }
        if sub.is_trivial() {
            return Ok(false);
        }
        let lead_sub = sub
            .basis
            .iter()
            .filter_map(|b| b.leading_coord())
            .min()
            .unwrap();
        let lead_sup = sup
            .basis
            .iter()
            .filter_map(|b| b.leading_coord())
            .min()
            .unwrap();
        Ok(lead_sub == lead_sup)
    }

    /// Image of the projection to coordinates < k; realizes the quotient by
    /// the convex subgroup of suffix coordinates.
    pub fn project_prefix(&self, k: usize) -> ValueGroup {
        let gens: Vec<GroupElement> = self
            .basis
            .iter()
            .map(|b| GroupElement::new(b.coords()[..k].to_vec()))
            .collect();
        ValueGroup::normalize(k, &gens).expect("uniform rank by construction")
    }

    /// The subgroup of elements supported on coordinates >= k, re-coordinated
    /// to ambient rank r - k.
    pub fn suffix_part(&self, k: usize) -> ValueGroup {
        let gens: Vec<GroupElement> = self
            .basis
            .iter()
            .filter(|b| b.leading_coord().map(|p| p >= k).unwrap_or(false))
            .map(|b| GroupElement::new(b.coords()[k..].to_vec()))
            .collect();
        ValueGroup::normalize(self.ambient_rank - k, &gens).expect("uniform rank")
    }

    /// G + Z*e_new in ambient rank r+1; the fresh coordinate is appended on
    /// the less significant side, so the new element is rationally
    /// independent from G and infinitesimal against it.
    pub fn extend_with_independent(&self) -> (ValueGroup, GroupElement) {
        let r = self.ambient_rank;
        let mut gens: Vec<GroupElement> = self.basis.iter().map(|b| b.extend_rank(r + 1)).collect();
        let new_elem = GroupElement::unit(r + 1, r);
        gens.push(new_elem.clone());
        (
            ValueGroup::normalize(r + 1, &gens).expect("uniform rank"),
            new_elem,
        )
    }

    /// Adjoin additional elements (e.g. values gained by algebraic steps).
    pub fn adjoin(&self, extra: &[GroupElement]) -> Result<ValueGroup> {
        let mut gens = self.basis.clone();
        gens.extend(extra.iter().cloned());
        ValueGroup::normalize(self.ambient_rank, &gens)
    }

    pub fn extend_rank(&self, rank: usize) -> ValueGroup {
        let gens: Vec<GroupElement> = self.basis.iter().map(|b| b.extend_rank(rank)).collect();
        ValueGroup::normalize(rank, &gens).expect("uniform rank")
    }
}

/// Convex subgroup of `parent` of the form G intersect ({0}^k x Q^{r-k}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexSubgroup {
    parent: ValueGroup,
    cut_index: usize,
}

impl ConvexSubgroup {
    pub fn new(parent: &ValueGroup, cut_index: usize) -> Result<ConvexSubgroup> {
        if cut_index > parent.ambient_rank() {
            return Err(KernelError::DetachedConvexSubgroup);
        }
        Ok(ConvexSubgroup {
            parent: parent.clone(),
            cut_index,
        })
    }

    pub fn parent(&self) -> &ValueGroup {
        &self.parent
    }

    pub fn cut_index(&self) -> usize {
        self.cut_index
    }

    pub fn is_trivial(&self) -> bool {
        self.subgroup().is_trivial()
    }

    pub fn is_whole(&self) -> bool {
        self.subgroup_in_parent_coords().rational_rank() == self.parent.rational_rank()
    }

    /// The subgroup H itself, re-coordinated to the suffix coordinates.
    pub fn subgroup(&self) -> ValueGroup {
        self.parent.suffix_part(self.cut_index)
    }

    /// H in the parent's coordinates.
    pub fn subgroup_in_parent_coords(&self) -> ValueGroup {
        let k = self.cut_index;
        let gens: Vec<GroupElement> = self
            .parent
            .basis()
            .iter()
            .filter(|b| b.leading_coord().map(|p| p >= k).unwrap_or(false))
            .cloned()
            .collect();
        ValueGroup::normalize(self.parent.ambient_rank(), &gens).expect("uniform rank")
    }

    /// vK / H realized as the projection to the prefix coordinates.
    pub fn quotient(&self) -> Result<ValueGroup> {
        Ok(self.parent.project_prefix(self.cut_index))
    }

    /// Split a value into its (w-part, wbar-part).
    pub fn decompose_value(&self, gamma: &GroupElement) -> Result<(GroupElement, GroupElement)> {
        if gamma.rank() != self.parent.ambient_rank() {
            return Err(KernelError::MismatchedAmbientRank(
                gamma.rank(),
                self.parent.ambient_rank(),
            ));
        }
        Ok(gamma.split_at(self.cut_index))
    }

    pub fn recompose_value(&self, w_part: &GroupElement, h_part: &GroupElement) -> GroupElement {
        w_part.concat(h_part)
    }
}

/// Row Hermite normal form over the integers: echelon with positive pivots,
/// entries above a pivot reduced into [0, pivot), zero rows dropped. Unique
/// for a given row lattice.
fn hermite_normal_form(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let mut r = 0usize;
    for c in 0..cols {
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows.len() {
                if !rows[i][c].is_zero() {
                    best = match best {
                        None => Some(i),
                        Some(j) => {
                            if rows[i][c].abs() < rows[j][c].abs() {
                                Some(i)
                            } else {
                                Some(j)
                            }
                        }
                    };
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            let mut any_left = false;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                for j in 0..cols {
                    let t = &rows[r][j] * &q;
                    rows[i][j] -= t;
                }
                if !rows[i][c].is_zero() {
                    any_left = true;
                }
            }
            if !any_left {
                if rows[r][c].is_negative() {
                    for j in 0..cols {
                        rows[r][j] = -rows[r][j].clone();
                    }
                }
                // Reduce entries above the pivot into [0, pivot).
                for i in 0..r {
                    let q = rows[i][c].div_floor(&rows[r][c]);
                    if !q.is_zero() {
                        for j in 0..cols {
                            let t = &rows[r][j] * &q;
                            rows[i][j] -= t;
                        }
                    }
                }
                r += 1;
                break;
            }
        }
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    rows
}

fn determinant(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    // Fraction-preserving Gaussian elimination; sizes here are tiny.
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut det = BigRational::one();
    for c in 0..n {
        let piv = (c..n).find(|&i| !a[i][c].is_zero());
        let Some(p) = piv else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c].clone();
        let inv = a[c][c].clone();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() / inv.clone();
            for j in c..n {
                let t = a[c][j].clone() * f.clone();
                a[i][j] -= t;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vg(rank: usize, gens: &[&[i64]]) -> ValueGroup {
        ValueGroup::from_i64_gens(rank, gens)
    }

    #[test]
    fn normalize_examples() {
        // gcd collapse
        let g = vg(2, &[&[2, 0], &[3, 0]]);
        assert_eq!(g.basis().len(), 1);
        assert_eq!(g.basis()[0], GroupElement::from_i64(&[1, 0]));
        // empty span
        let t = ValueGroup::normalize(2, &[]).unwrap();
        assert!(t.is_trivial());
        // dependent generator
        let h = vg(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(h.rational_rank(), 2);
    }

    #[test]
    fn normalize_is_generator_invariant() {
        let a = vg(2, &[&[2, 0], &[0, 3]]);
        let b = vg(2, &[&[2, 3], &[2, -3], &[4, 3]]);
        // Same subgroup, different generators: <(2,0),(0,3)>.
        assert_eq!(a, b);
    }

    #[test]
    fn index_examples() {
        let big = vg(1, &[&[1]]);
        let small = vg(1, &[&[5]]);
        assert_eq!(big.index_over(&small).unwrap(), Index::Finite(5));

        let big2 = vg(2, &[&[1, 0], &[0, 1]]);
        let small2 = vg(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(big2.index_over(&small2).unwrap(), Index::Finite(6));

        let trivial = ValueGroup::trivial(1);
        assert_eq!(big.index_over(&trivial).unwrap(), Index::Infinite);

        // not a subgroup
        let g5 = vg(1, &[&[5]]);
        let g3 = vg(1, &[&[3]]);
        assert!(g5.index_over(&g3).is_err());
    }

    #[test]
    fn rational_rank_examples() {
        assert_eq!(ValueGroup::trivial(1).rational_rank(), 0);
        assert_eq!(vg(1, &[&[1]]).rational_rank(), 1);
        assert_eq!(vg(2, &[&[1, 0], &[0, 1], &[1, 1]]).rational_rank(), 2);
    }

    #[test]
    fn quotient_by_convex_examples() {
        let g = vg(2, &[&[1, 0], &[0, 1]]);
        let h1 = ConvexSubgroup::new(&g, 1).unwrap();
        let q1 = h1.quotient().unwrap();
        assert_eq!(q1, vg(1, &[&[1]]));

        let h0 = ConvexSubgroup::new(&g, 0).unwrap();
        assert!(h0.quotient().unwrap().is_trivial());
        assert!(h0.is_whole());

        let hr = ConvexSubgroup::new(&g, 2).unwrap();
        assert!(hr.is_trivial());
        assert_eq!(hr.quotient().unwrap(), g);
    }

    #[test]
    fn convex_suffix_subgroup_is_convex_under_lex() {
        // gamma > 0 iff (prefix > 0) or (prefix = 0 and suffix > 0)
        let g = vg(2, &[&[1, 0], &[0, 1]]);
        let h = ConvexSubgroup::new(&g, 1).unwrap();
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                let gamma = GroupElement::from_i64(&[a, b]);
                let (w, hpart) = h.decompose_value(&gamma).unwrap();
                let positive = gamma > GroupElement::zero(2);
                let recomposed = w.coords()[0] > BigRational::zero()
                    || (w.coords()[0].is_zero() && hpart.coords()[0] > BigRational::zero());
                assert_eq!(positive, recomposed);
                assert_eq!(h.recompose_value(&w, &hpart), gamma);
            }
        }
    }

    #[test]
    fn cofinality_examples() {
        let z = vg(1, &[&[1]]);
        let half = ValueGroup::normalize(1, &[GroupElement::new(vec![rat(1, 2)])]).unwrap();
        assert!(ValueGroup::cofinal_in(&z, &half).unwrap());

        let sub = vg(2, &[&[0, 1]]);
        let sup = vg(2, &[&[1, 0], &[0, 1]]);
        assert!(!ValueGroup::cofinal_in(&sub, &sup).unwrap());

        assert!(ValueGroup::cofinal_in(&sup, &sup).unwrap());
    }

    #[test]
    fn extend_with_independent_examples() {
        let z = vg(1, &[&[1]]);
        let (ext, new_elem) = z.extend_with_independent();
        assert_eq!(ext, vg(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(new_elem, GroupElement::from_i64(&[0, 1]));
        assert_eq!(ext.rational_rank(), z.rational_rank() + 1);

        let (t1, _) = ValueGroup::trivial(0).extend_with_independent();
        assert_eq!(t1, vg(1, &[&[1]]));

        let (ext2, _) = ext.extend_with_independent();
        assert_eq!(ext2.rational_rank(), 3);
    }

    /// Brute-force coset count: reduce every lattice point of a box to a
    /// canonical representative modulo `small` and count distinct ones.
    fn coset_count_oracle(big: &ValueGroup, small: &ValueGroup, box_size: i64) -> usize {
        use std::collections::BTreeSet;
        let k = big.rational_rank();
        let mut reps = BTreeSet::new();
        let mut counters = vec![0i64; k];
        loop {
            let mut elem = GroupElement::zero(big.ambient_rank());
            for (i, &c) in counters.iter().enumerate() {
                elem = elem.add(&big.basis()[i].scale_i(c));
            }
            // canonical representative modulo small along its echelon basis
            let mut residual = elem;
            for row in small.basis() {
                let p = row.leading_coord().unwrap();
                let q = (residual.coord(p) / row.coord(p)).floor();
                residual = residual.sub(&row.scale(&q));
            }
            reps.insert(format!("{residual:?}"));
            // odometer
            let mut i = 0;
            loop {
                if i == k {
                    return reps.len();
                }
                counters[i] += 1;
                if counters[i] < box_size {
                    break;
                }
                counters[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn index_matches_coset_enumeration() {
        // All instances with ambient rank <= 2 and small index.
        let cases: Vec<(ValueGroup, ValueGroup)> = vec![
            (vg(1, &[&[1]]), vg(1, &[&[5]])),
            (vg(1, &[&[1]]), vg(1, &[&[12]])),
            (vg(2, &[&[1, 0], &[0, 1]]), vg(2, &[&[2, 0], &[0, 3]])),
            (vg(2, &[&[1, 0], &[0, 1]]), vg(2, &[&[2, 1], &[0, 5]])),
            (vg(2, &[&[1, 0], &[0, 1]]), vg(2, &[&[1, 0], &[0, 1]])),
            (vg(2, &[&[1, 2], &[0, 7]]), vg(2, &[&[2, 4], &[0, 21]])),
            (
                ValueGroup::normalize(
                    2,
                    &[
                        GroupElement::new(vec![rat(1, 2), rat_int(0)]),
                        GroupElement::new(vec![rat_int(0), rat(1, 3)]),
                    ],
                )
                .unwrap(),
                vg(2, &[&[1, 0], &[0, 1]]),
            ),
        ];
        for (big, small) in cases {
            let idx = big.index_over(&small).unwrap().finite().unwrap();
            assert!(idx <= 50);
            let count = coset_count_oracle(&big, &small, idx as i64 + 1);
            assert_eq!(count as u64, idx, "mismatch for {big:?} over {small:?}");
        }
    }

    #[test]
    fn index_is_multiplicative_in_towers() {
        let g3 = vg(2, &[&[1, 0], &[0, 1]]);
        let g2 = vg(2, &[&[2, 0], &[0, 1]]);
        let g1 = vg(2, &[&[2, 0], &[0, 3]]);
        let i31 = g3.index_over(&g1).unwrap().finite().unwrap();
        let i32 = g3.index_over(&g2).unwrap().finite().unwrap();
        let i21 = g2.index_over(&g1).unwrap().finite().unwrap();
        assert_eq!(i31, i32 * i21);
    }
}
