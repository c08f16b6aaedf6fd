mod common;

use cdlat::subgroup::{all_subgroups, Limits};
use cdlat::{cd_lattice, measure};
use common::*;

fn engine_subgroups(spec: &str) -> Vec<Vec<usize>> {
    let g = build(spec);
    let mut v: Vec<Vec<usize>> = all_subgroups(&g, &Limits::default()).unwrap().iter().map(|s| s.elements()).collect();
    v.sort();
    v
}

#[test]
fn enumeration_matches_subset_filtration() {
    for spec in SMALL {
        let g = build(spec);
        assert_eq!(engine_subgroups(spec), subgroups_by_subsets(&g), "{spec}");
    }
}

#[test]
fn enumeration_matches_generator_closures() {
    // every subgroup of these groups needs at most 3 generators
    for spec in ["S4", "A4 x C2", "D24", "C3 x Q8", "C2 x C2 x C6", "corpus:g32", "S3 x S3"] {
        let g = build(spec);
        assert_eq!(engine_subgroups(spec), subgroups_by_generators(&g, 3), "{spec}");
    }
}

#[test]
fn lattices_match_naive_measures() {
    let limits = Limits::default();
    for spec in SMALL.iter().chain(&["S4", "A4 x C2", "D24", "corpus:g32", "C4 x S3"]) {
        let g = build(spec);
        let subs = if g.order() <= 16 { subgroups_by_subsets(&g) } else { subgroups_by_generators(&g, 3) };
        let (max, cd) = naive_cd(&g, &subs);
        let res = cd_lattice(&g, &limits).unwrap();
        let mut got: Vec<Vec<usize>> = res.subgroups().map(|s| s.elements()).collect();
        got.sort();
        assert_eq!(res.max_measure.to_string(), max.to_string(), "{spec}");
        assert_eq!(got, cd, "{spec}");
        for m in &res.members {
            assert_eq!(measure(&g, &m.subgroup).to_string(), naive_measure(&g, &m.subgroup.elements()).to_string());
            let c = naive_centralizer(&g, &m.subgroup.elements());
            let inside = c.iter().all(|x| m.subgroup.contains(*x));
            assert_eq!(m.centrally_large, inside, "{spec}");
        }
    }
}

#[test]
fn group_axioms_hold_for_products() {
    for spec in ["S3 x D8", "C2 wr C3", "Q8 wr C2", "UT(4,2)", "perm:[(1,2,3,4,5,6,7),(2,3,5)(4,7,6)]"] {
        let g = build(spec);
        let n = g.order();
        for a in (0..n).step_by(3) {
            assert_eq!(g.mul(a, 0), a);
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in (0..n).step_by(5) {
                for c in (0..n).step_by(7) {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)), "{spec}");
                }
            }
        }
    }
}
