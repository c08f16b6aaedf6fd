//! Subgroups as membership masks, and the computations over them: closure,
//! exhaustive enumeration, centralizers, normalizers, normal closures and
//! subnormal defect.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::hash::{Hash, Hasher};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{Group, DEFAULT_ORDER_CAP};
use crate::mask::Mask;

/// Caps on construction and enumeration work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group any constructor will build.
    pub order_cap: usize,
    /// Largest group whose subgroups will be enumerated.
    pub enumeration_limit: usize,
    /// Largest number of subgroups an enumeration may produce.
    pub subgroup_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { order_cap: DEFAULT_ORDER_CAP, enumeration_limit: 512, subgroup_cap: 250_000 }
    }
}

/// A subgroup of some ambient group, held as a mask with a generating set.
///
/// Equality, hashing and ordering consider only the members. The canonical
/// order is by order, then by the sorted member list.
#[derive(Clone, Debug)]
pub struct Subgroup {
    mask: Mask,
    order: usize,
    gens: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mask.hash(state)
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&other.order).then_with(|| self.mask.cmp(&other.mask))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    pub fn trivial(g: &Group) -> Subgroup {
        Subgroup { mask: Mask::from_indices(g.order(), [0]), order: 1, gens: Vec::new() }
    }

    pub fn whole(g: &Group) -> Subgroup {
        Subgroup { mask: g.full_mask(), order: g.order(), gens: g.generators().to_vec() }
    }

    /// Wraps a mask already known to be closed, deriving generators greedily.
    pub fn from_mask(g: &Group, mask: Mask) -> Subgroup {
        let gens = greedy_generators(g, &mask);
        let order = mask.count();
        Subgroup { mask, order, gens }
    }

    /// Like [`Subgroup::from_mask`] but returns `None` unless the mask holds
    /// the identity and is closed under multiplication.
    pub fn try_from_mask(g: &Group, mask: Mask) -> Option<Subgroup> {
        if !mask.contains(0) {
            return None;
        }
        let sub = Self::from_mask(g, mask);
        (closure(g, &sub.gens).mask == sub.mask).then_some(sub)
    }

    pub fn mask(&self) -> &Mask {
        &self.mask
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask.contains(x)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.mask.to_vec()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn is_abelian(&self, g: &Group) -> bool {
        self.gens.iter().enumerate().all(|(i, &a)| self.gens[i + 1..].iter().all(|&b| g.commutes(a, b)))
    }
}

/// Incrementally grows a subgroup one generator at a time. The current
/// members always form a subgroup; adjoining `s` adds whole right cosets of
/// the previous subgroup until the set is closed under all generators.
struct Builder<'g> {
    g: &'g Group,
    mask: Mask,
    elems: Vec<usize>,
    gens: Vec<usize>,
}

impl<'g> Builder<'g> {
    fn trivial(g: &'g Group) -> Self {
        Builder { g, mask: Mask::from_indices(g.order(), [0]), elems: vec![0], gens: Vec::new() }
    }

    fn from_subgroup(g: &'g Group, h: &Subgroup) -> Self {
        Builder { g, mask: h.mask.clone(), elems: h.mask.to_vec(), gens: h.gens.clone() }
    }

    fn adjoin(&mut self, s: usize) {
        if self.mask.contains(s) {
            return;
        }
        self.gens.push(s);
        let old_len = self.elems.len();
        let mut reps = vec![0usize];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            for gi in 0..self.gens.len() {
                let x = self.g.mul(r, self.gens[gi]);
                if !self.mask.contains(x) {
                    for hi in 0..old_len {
                        let y = self.g.mul(self.elems[hi], x);
                        self.mask.insert(y);
                        self.elems.push(y);
                    }
                    reps.push(x);
                }
            }
            i += 1;
        }
    }

    fn finish(self) -> Subgroup {
        Subgroup { order: self.elems.len(), mask: self.mask, gens: self.gens }
    }
}

/// Smallest subgroup containing `seed`.
pub fn closure(g: &Group, seed: &[usize]) -> Subgroup {
    let mut b = Builder::trivial(g);
    for &s in seed {
        b.adjoin(s);
    }
    b.finish()
}

/// `<H, x>`
pub fn adjoin(g: &Group, h: &Subgroup, x: usize) -> Subgroup {
    if h.contains(x) {
        return h.clone();
    }
    let mut b = Builder::from_subgroup(g, h);
    b.adjoin(x);
    b.finish()
}

/// `<H, K>`
pub fn join(g: &Group, h: &Subgroup, k: &Subgroup) -> Subgroup {
    let (big, small) = if h.order >= k.order { (h, k) } else { (k, h) };
    if small.is_subgroup_of(big) {
        return big.clone();
    }
    let mut b = Builder::from_subgroup(g, big);
    for &s in &small.gens {
        b.adjoin(s);
    }
    b.finish()
}

/// `H ∩ K`
pub fn meet(g: &Group, h: &Subgroup, k: &Subgroup) -> Subgroup {
    Subgroup::from_mask(g, h.mask.intersection(&k.mask))
}

/// The product set `HK = {hk}` as a mask (not necessarily a subgroup).
pub fn product_set(g: &Group, h: &Subgroup, k: &Subgroup) -> Mask {
    let mut m = Mask::empty(g.order());
    let ks = k.elements();
    for a in h.mask.iter() {
        for &b in &ks {
            m.insert(g.mul(a, b));
        }
    }
    m
}

/// A generating set of the subgroup with the given members, chosen by
/// adjoining the least element not yet generated.
pub fn greedy_generators(g: &Group, mask: &Mask) -> Vec<usize> {
    let mut b = Builder::trivial(g);
    for x in mask.iter() {
        b.adjoin(x);
    }
    b.gens
}

/// Elements commuting with every element of `gens`.
pub fn centralizer_mask(g: &Group, gens: &[usize]) -> Mask {
    let mut m = Mask::empty(g.order());
    for x in g.elements() {
        if gens.iter().all(|&s| g.commutes(x, s)) {
            m.insert(x);
        }
    }
    m
}

/// `C_G(H)`, filtering against the generators of `H`.
pub fn centralizer(g: &Group, h: &Subgroup) -> Subgroup {
    Subgroup::from_mask(g, centralizer_mask(g, &h.gens))
}

/// `Z(G)`
pub fn center(g: &Group) -> Subgroup {
    Subgroup::from_mask(g, centralizer_mask(g, g.generators()))
}

/// `Z(H) = H ∩ C_G(H)`
pub fn center_of(g: &Group, h: &Subgroup) -> Subgroup {
    Subgroup::from_mask(g, h.mask.intersection(&centralizer_mask(g, &h.gens)))
}

/// `N_G(H) = {x : H^x = H}`
pub fn normalizer(g: &Group, h: &Subgroup) -> Subgroup {
    let mut m = Mask::empty(g.order());
    for x in g.elements() {
        if h.gens.iter().all(|&s| h.contains(g.conj(s, x))) {
            m.insert(x);
        }
    }
    Subgroup::from_mask(g, m)
}

/// Whether `H` is normalized by every element of `K`.
pub fn normalized_by(g: &Group, h: &Subgroup, k: &Subgroup) -> bool {
    h.gens.iter().all(|&s| k.gens.iter().all(|&t| h.contains(g.conj(s, t))))
}

pub fn is_normal(g: &Group, h: &Subgroup) -> bool {
    h.gens.iter().all(|&s| g.generators().iter().all(|&t| h.contains(g.conj(s, t))))
}

/// Smallest normal subgroup of `K` containing `H` (`H ≤ K`).
pub fn normal_closure(g: &Group, k: &Subgroup, h: &Subgroup) -> Subgroup {
    let mut b = Builder::trivial(g);
    for &s in &h.gens {
        b.adjoin(s);
    }
    let mut i = 0;
    while i < b.gens.len() {
        let s = b.gens[i];
        for &t in &k.gens {
            let c = g.conj(s, t);
            b.adjoin(c);
        }
        i += 1;
    }
    b.finish()
}

/// Length of the descending chain `K_0 = G`, `K_{i+1} = normal closure of H
/// in K_i`, or `None` when the chain stalls above `H`.
pub fn subnormal_defect(g: &Group, h: &Subgroup) -> Option<usize> {
    let mut k = Subgroup::whole(g);
    let mut depth = 0;
    loop {
        if k.order == h.order {
            return Some(depth);
        }
        let next = normal_closure(g, &k, h);
        if next.order == k.order {
            return None;
        }
        k = next;
        depth += 1;
    }
}

/// Every subgroup of a group, in canonical order.
#[derive(Clone, Debug)]
pub struct SubgroupSet {
    subgroups: Vec<Subgroup>,
    index: HashMap<Mask, usize>,
}

impl SubgroupSet {
    pub fn from_subgroups(mut subgroups: Vec<Subgroup>) -> Self {
        subgroups.sort();
        subgroups.dedup();
        let index = subgroups.iter().enumerate().map(|(i, s)| (s.mask.clone(), i)).collect();
        SubgroupSet { subgroups, index }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subgroup> {
        self.subgroups.iter()
    }

    pub fn as_slice(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn position(&self, mask: &Mask) -> Option<usize> {
        self.index.get(mask).copied()
    }

    pub fn contains(&self, mask: &Mask) -> bool {
        self.index.contains_key(mask)
    }
}

impl<'a> IntoIterator for &'a SubgroupSet {
    type Item = &'a Subgroup;
    type IntoIter = std::slice::Iter<'a, Subgroup>;

    fn into_iter(self) -> Self::IntoIter {
        self.subgroups.iter()
    }
}

/// Distinct cyclic subgroups, each with its least generator.
pub fn cyclic_subgroups(g: &Group) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in g.elements() {
        let c = closure(g, &[x]);
        if seen.insert(c.mask.clone()) {
            out.push(c);
        }
    }
    out
}

/// Enumerates every subgroup: seed with the cyclic subgroups, then join each
/// newly found subgroup with every cyclic subgroup until nothing new appears.
pub fn all_subgroups(g: &Group, limits: &Limits) -> Result<SubgroupSet> {
    if g.order() > limits.enumeration_limit {
        return Err(Error::EnumerationLimitExceeded { order: g.order(), limit: limits.enumeration_limit });
    }
    let cyclics = cyclic_subgroups(g);
    if cyclics.len() > limits.subgroup_cap {
        return Err(Error::SubgroupCapExceeded(limits.subgroup_cap));
    }
    let mut known: HashSet<Mask> = cyclics.iter().map(|c| c.mask.clone()).collect();
    let mut all = cyclics.clone();
    let mut frontier: Vec<usize> = (0..all.len()).collect();
    while !frontier.is_empty() {
        let found: Vec<Subgroup> = frontier
            .par_iter()
            .flat_map_iter(|&hi| {
                let h = &all[hi];
                let mut local = HashSet::new();
                let mut out = Vec::new();
                for c in &cyclics {
                    let x = c.gens.first().copied().unwrap_or(0);
                    if h.contains(x) {
                        continue;
                    }
                    let j = adjoin(g, h, x);
                    if !known.contains(&j.mask) && local.insert(j.mask.clone()) {
                        out.push(j);
                    }
                }
                out
            })
            .collect();
        frontier.clear();
        for j in found {
            if known.insert(j.mask.clone()) {
                frontier.push(all.len());
                all.push(j);
                if all.len() > limits.subgroup_cap {
                    return Err(Error::SubgroupCapExceeded(limits.subgroup_cap));
                }
            }
        }
    }
    Ok(SubgroupSet::from_subgroups(all))
}
