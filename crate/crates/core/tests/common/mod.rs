//! Brute-force reference computations. These only use `Group::mul` and
//! plain vectors, never the engine's subgroup or lattice code.

#![allow(dead_code)]

use cdlat::subgroup::Limits;
use cdlat::{Group, GroupSpec};

pub fn build(spec: &str) -> Group {
    GroupSpec::parse(spec).unwrap().build(&Limits::default()).unwrap()
}

pub fn members(set: &[bool]) -> Vec<usize> {
    set.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

/// Smallest multiplicatively closed set containing `seed` and the identity.
pub fn naive_closure(g: &Group, seed: &[usize]) -> Vec<bool> {
    let mut set = vec![false; g.order()];
    set[0] = true;
    let mut list = vec![0];
    for &s in seed {
        if !set[s] {
            set[s] = true;
            list.push(s);
        }
    }
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        for &s in seed {
            let y = g.mul(x, s);
            if !set[y] {
                set[y] = true;
                list.push(y);
            }
        }
        i += 1;
    }
    set
}

pub fn naive_centralizer(g: &Group, h: &[usize]) -> Vec<usize> {
    (0..g.order()).filter(|&x| h.iter().all(|&y| g.mul(x, y) == g.mul(y, x))).collect()
}

pub fn naive_measure(g: &Group, h: &[usize]) -> u128 {
    (h.len() * naive_centralizer(g, h).len()) as u128
}

/// All subgroups by testing every subset that contains the identity for
/// closure under multiplication. Only for tiny groups.
pub fn subgroups_by_subsets(g: &Group) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= 20, "subset filtration is exponential");
    let mut out = Vec::new();
    for bits in 0u32..(1u32 << (n - 1)) {
        let set: Vec<usize> = std::iter::once(0).chain((1..n).filter(|&i| bits >> (i - 1) & 1 == 1)).collect();
        let mut inside = vec![false; n];
        for &x in &set {
            inside[x] = true;
        }
        if set.iter().all(|&a| set.iter().all(|&b| inside[g.mul(a, b)])) {
            out.push(set);
        }
    }
    out.sort();
    out
}

/// All subgroups generated by at most `k` elements, by naive closure.
pub fn subgroups_by_generators(g: &Group, k: usize) -> Vec<Vec<usize>> {
    let mut found = std::collections::BTreeSet::new();
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for gens in &frontier {
            for x in 0..g.order() {
                let mut t = gens.clone();
                t.push(x);
                let s = members(&naive_closure(g, &t));
                if found.insert(s.clone()) {
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    found.insert(vec![0]);
    found.into_iter().collect()
}

/// `(max measure, members)` over an explicit subgroup list.
pub fn naive_cd(g: &Group, subgroups: &[Vec<usize>]) -> (u128, Vec<Vec<usize>>) {
    let measures: Vec<u128> = subgroups.iter().map(|h| naive_measure(g, h)).collect();
    let max = *measures.iter().max().unwrap();
    let mut cd: Vec<Vec<usize>> =
        subgroups.iter().zip(&measures).filter(|(_, &m)| m == max).map(|(h, _)| h.clone()).collect();
    cd.sort();
    (max, cd)
}

pub fn is_abelian_naive(g: &Group) -> bool {
    (0..g.order()).all(|a| (0..g.order()).all(|b| g.mul(a, b) == g.mul(b, a)))
}

/// Specs of the small-group corpus, with duplicates by isomorphism allowed.
pub const SMALL: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14", "C15", "C16", "D4", "D6",
    "D8", "D10", "D12", "D14", "D16", "Q8", "Q16", "S2", "S3", "A4", "UT(3,2)", "C2 x C2", "C2 x C4", "C2 x C2 x C2",
    "C2 x C6", "C3 x C3", "C2 x C8", "C4 x C4", "C2 x C2 x C4", "C2 x C2 x C2 x C2", "C2 x D8", "C2 x Q8", "C2 wr C2",
];
