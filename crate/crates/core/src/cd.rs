//! Chermak-Delgado measure `m_G(H) = |H| |C_G(H)|`, the lattice of subgroups
//! attaining the maximum, and its centrally large members.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::mask::Mask;
use crate::subgroup::{all_subgroups, centralizer_mask, is_normal, subnormal_defect, Limits, Subgroup, SubgroupSet};

/// An exact measure value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Measure(BigUint);

impl Measure {
    pub fn from_orders(subgroup: usize, centralizer: usize) -> Self {
        Measure(BigUint::from(subgroup) * BigUint::from(centralizer))
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

impl From<u128> for Measure {
    fn from(v: u128) -> Self {
        Measure(BigUint::from(v))
    }
}

impl From<BigUint> for Measure {
    fn from(v: BigUint) -> Self {
        Measure(v)
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Measure({})", self.0)
    }
}

/// `m_G(H)`
pub fn measure(g: &Group, h: &Subgroup) -> Measure {
    Measure::from_orders(h.order(), centralizer_mask(g, h.generators()).count())
}

/// Every subgroup of a group together with its centralizer.
#[derive(Clone, Debug)]
pub struct SubgroupCensus {
    group: Group,
    set: SubgroupSet,
    centralizers: Vec<Mask>,
    measures: Vec<u128>,
}

impl SubgroupCensus {
    pub fn enumerate(g: &Group, limits: &Limits) -> Result<Self> {
        Ok(Self::new(g, all_subgroups(g, limits)?))
    }

    pub fn new(g: &Group, set: SubgroupSet) -> Self {
        let centralizers: Vec<Mask> = set.as_slice().par_iter().map(|h| centralizer_mask(g, h.generators())).collect();
        let measures = set.iter().zip(&centralizers).map(|(h, c)| h.order() as u128 * c.count() as u128).collect();
        SubgroupCensus { group: g.clone(), set, centralizers, measures }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn subgroups(&self) -> &SubgroupSet {
        &self.set
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn centralizer(&self, i: usize) -> &Mask {
        &self.centralizers[i]
    }

    /// Index of `C_G(H_i)` in the census.
    pub fn centralizer_index(&self, i: usize) -> usize {
        self.set.position(&self.centralizers[i]).expect("centralizers are subgroups")
    }

    pub fn measure(&self, i: usize) -> u128 {
        self.measures[i]
    }

    pub fn max_measure(&self) -> u128 {
        self.measures.iter().copied().max().unwrap_or(0)
    }

    /// Indices of the subgroups of maximal measure.
    pub fn cd_indices(&self) -> Vec<usize> {
        let max = self.max_measure();
        (0..self.len()).filter(|&i| self.measures[i] == max).collect()
    }

    /// Maximal measure and CD lattice of a subgroup `S`, computed from this
    /// census: the subgroups of `S` are the census entries inside `S`, and
    /// `C_S(V) = C_G(V) ∩ S`.
    pub fn relative_cd(&self, s: &Mask) -> (u128, Vec<usize>) {
        let inside: Vec<(usize, u128)> = (0..self.len())
            .filter(|&i| self.set.get(i).mask().is_subset(s))
            .map(|i| (i, self.set.get(i).order() as u128 * self.centralizers[i].intersection(s).count() as u128))
            .collect();
        let max = inside.iter().map(|&(_, m)| m).max().unwrap_or(0);
        (max, inside.into_iter().filter(|&(_, m)| m == max).map(|(i, _)| i).collect())
    }

    /// `m_S(V)` for census entry `v` inside `S`.
    pub fn relative_measure(&self, v: usize, s: &Mask) -> u128 {
        self.set.get(v).order() as u128 * self.centralizers[v].intersection(s).count() as u128
    }
}

/// One member of a Chermak-Delgado lattice.
#[derive(Clone, Debug)]
pub struct CdMember {
    pub subgroup: Subgroup,
    pub is_normal: bool,
    /// `None` if the member is not subnormal (never expected).
    pub defect: Option<usize>,
    pub centrally_large: bool,
    /// Position of `C_G(H)` among the members.
    pub centralizer: Option<usize>,
}

/// The Chermak-Delgado lattice of a group with its annotations.
#[derive(Clone, Debug)]
pub struct CdResult {
    pub ambient: Group,
    pub max_measure: Measure,
    pub members: Vec<CdMember>,
    /// Cover relations `(lower, upper)` as member positions.
    pub hasse_edges: Vec<(usize, usize)>,
    pub subgroups_enumerated: usize,
}

impl CdResult {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, mask: &Mask) -> bool {
        self.members.iter().any(|m| m.subgroup.mask() == mask)
    }

    pub fn position(&self, mask: &Mask) -> Option<usize> {
        self.members.iter().position(|m| m.subgroup.mask() == mask)
    }

    pub fn subgroups(&self) -> impl Iterator<Item = &Subgroup> {
        self.members.iter().map(|m| &m.subgroup)
    }

    pub fn centrally_large(&self) -> impl Iterator<Item = &Subgroup> {
        self.members.iter().filter(|m| m.centrally_large).map(|m| &m.subgroup)
    }

    /// `leq[i][j]` iff member `i` is contained in member `j`.
    pub fn containment(&self) -> Vec<Vec<bool>> {
        let masks: Vec<&Mask> = self.subgroups().map(|s| s.mask()).collect();
        masks.iter().map(|a| masks.iter().map(|b| a.is_subset(b)).collect()).collect()
    }
}

pub fn max_measure(g: &Group, limits: &Limits) -> Result<Measure> {
    Ok(Measure::from(SubgroupCensus::enumerate(g, limits)?.max_measure()))
}

pub fn cd_lattice(g: &Group, limits: &Limits) -> Result<CdResult> {
    Ok(cd_from_census(&SubgroupCensus::enumerate(g, limits)?))
}

pub fn cd_from_census(census: &SubgroupCensus) -> CdResult {
    let g = census.group();
    let idx = census.cd_indices();
    let members: Vec<CdMember> = idx
        .par_iter()
        .map(|&i| {
            let h = census.subgroups().get(i).clone();
            let cent = census.centralizer(i);
            CdMember {
                is_normal: is_normal(g, &h),
                defect: subnormal_defect(g, &h),
                centrally_large: cent.is_subset(h.mask()),
                centralizer: idx.iter().position(|&j| census.subgroups().get(j).mask() == cent),
                subgroup: h,
            }
        })
        .collect();
    let masks: Vec<&Mask> = members.iter().map(|m| m.subgroup.mask()).collect();
    let hasse_edges = hasse_edges(&masks);
    CdResult {
        ambient: g.clone(),
        max_measure: Measure::from(census.max_measure()),
        members,
        hasse_edges,
        subgroups_enumerated: census.len(),
    }
}

/// Centrally large subgroups: CD members `U` with `Z(U) = C_G(U)`.
pub fn cl_subgroups(g: &Group, limits: &Limits) -> Result<Vec<Subgroup>> {
    Ok(cd_lattice(g, limits)?.centrally_large().cloned().collect())
}

/// Cover relations of containment among `masks`: pairwise containment, then
/// transitive reduction.
pub fn hasse_edges(masks: &[&Mask]) -> Vec<(usize, usize)> {
    let n = masks.len();
    let lt: Vec<Vec<bool>> =
        (0..n).map(|i| (0..n).map(|j| i != j && masks[i] != masks[j] && masks[i].is_subset(masks[j])).collect()).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt[i][j] && !(0..n).any(|k| lt[i][k] && lt[k][j]) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Largest lattice accepted by [`lattice_isomorphic`].
pub const ISO_MEMBER_CAP: usize = 12;

/// Whether two CD lattices are isomorphic as posets under containment.
pub fn lattice_isomorphic(a: &CdResult, b: &CdResult) -> Result<bool> {
    posets_isomorphic(&a.containment(), &b.containment())
}

/// Order-isomorphism test for small posets given as `leq` matrices.
pub fn posets_isomorphic(a: &[Vec<bool>], b: &[Vec<bool>]) -> Result<bool> {
    for p in [a, b] {
        if p.len() > ISO_MEMBER_CAP {
            return Err(Error::TooLargeForIso(p.len()));
        }
    }
    if a.len() != b.len() {
        return Ok(false);
    }
    let n = a.len();
    let signature = |p: &[Vec<bool>], i: usize| {
        let below = (0..n).filter(|&k| p[k][i]).count();
        let above = (0..n).filter(|&k| p[i][k]).count();
        (below, above)
    };
    let sa: Vec<_> = (0..n).map(|i| signature(a, i)).collect();
    let sb: Vec<_> = (0..n).map(|i| signature(b, i)).collect();
    let (mut ka, mut kb) = (sa.clone(), sb.clone());
    ka.sort();
    kb.sort();
    if ka != kb {
        return Ok(false);
    }
    fn search(a: &[Vec<bool>], b: &[Vec<bool>], sa: &[(usize, usize)], sb: &[(usize, usize)], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] || sa[i] != sb[j] {
                continue;
            }
            if map.iter().enumerate().any(|(k, &mk)| a[i][k] != b[j][mk] || a[k][i] != b[mk][j]) {
                continue;
            }
            used[j] = true;
            map.push(j);
            if search(a, b, sa, sb, map, used) {
                return true;
            }
            map.pop();
            used[j] = false;
        }
        false
    }
    Ok(search(a, b, &sa, &sb, &mut Vec::with_capacity(n), &mut vec![false; n]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Family, DEFAULT_ORDER_CAP};
    use crate::named::named_group;
    use crate::subgroup::closure;

    fn named(f: Family, n: usize) -> Group {
        named_group(f, n, DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn measures_from_examples() {
        let s3 = named(Family::Symmetric, 3);
        let three = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        assert_eq!(measure(&s3, &closure(&s3, &[three])), Measure::from(9));
        let d12 = named(Family::Dihedral, 12);
        // r = index 1 has order 6
        assert_eq!(measure(&d12, &closure(&d12, &[1])), Measure::from(36));
        let c5 = named(Family::Cyclic, 5);
        assert_eq!(measure(&c5, &Subgroup::trivial(&c5)), Measure::from(5));
    }

    #[test]
    fn abelian_groups_have_single_member() {
        let c6 = named(Family::Cyclic, 6);
        let cd = cd_lattice(&c6, &Limits::default()).unwrap();
        assert_eq!(cd.len(), 1);
        assert_eq!(cd.max_measure, Measure::from(36));
        assert!(cd.members[0].centrally_large);
    }

    #[test]
    fn s4_lattice() {
        let s4 = named(Family::Symmetric, 4);
        let cd = cd_lattice(&s4, &Limits::default()).unwrap();
        assert_eq!(cd.max_measure, Measure::from(24));
        let orders: Vec<usize> = cd.subgroups().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 24]);
        assert_eq!(cd.hasse_edges, vec![(0, 1)]);
        assert_eq!(cd.members[0].centralizer, Some(1));
        let cl: Vec<usize> = cd.centrally_large().map(|s| s.order()).collect();
        assert_eq!(cl, vec![24]);
    }

    #[test]
    fn d8_and_q8_lattices_are_isomorphic() {
        let d8 = cd_lattice(&named(Family::Dihedral, 8), &Limits::default()).unwrap();
        let q8 = cd_lattice(&named(Family::Quaternion, 8), &Limits::default()).unwrap();
        assert_eq!(d8.len(), 5);
        assert_eq!(q8.len(), 5);
        assert_eq!(d8.max_measure, Measure::from(16));
        assert!(lattice_isomorphic(&d8, &q8).unwrap());
        assert!(lattice_isomorphic(&d8, &d8).unwrap());
        assert_eq!(d8.centrally_large().count(), 4);
    }

    #[test]
    fn differently_sized_lattices_are_not_isomorphic() {
        let s4 = cd_lattice(&named(Family::Symmetric, 4), &Limits::default()).unwrap();
        let s3 = cd_lattice(&named(Family::Symmetric, 3), &Limits::default()).unwrap();
        assert!(!lattice_isomorphic(&s4, &s3).unwrap());
    }

    #[test]
    fn poset_iso_distinguishes_shapes() {
        // chain of three vs. a V shape
        let chain = vec![vec![true, true, true], vec![false, true, true], vec![false, false, true]];
        let vee = vec![vec![true, true, true], vec![false, true, false], vec![false, false, true]];
        assert!(!posets_isomorphic(&chain, &vee).unwrap());
        let big = vec![vec![true; 13]; 13];
        assert!(matches!(posets_isomorphic(&big, &big), Err(Error::TooLargeForIso(13))));
    }
}
