mod common;

use cdlat::subgroup::{closure, join, Limits};
use cdlat::{Family, GroupSpec};
use proptest::prelude::*;

fn atom() -> impl Strategy<Value = GroupSpec> {
    let family = prop_oneof![
        Just(Family::Cyclic),
        Just(Family::Dihedral),
        Just(Family::Quaternion),
        Just(Family::Symmetric),
        Just(Family::Alternating),
        Just(Family::Unitriangular),
    ];
    let cycle = Just((1..=9usize).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_flat_map(|pts| (2..=pts.len()).prop_map(move |k| pts[..k].to_vec()));
    let generator = prop::collection::vec(cycle, 1..3);
    prop_oneof![
        (family, 1..40usize).prop_map(|(f, n)| GroupSpec::Named(f, n)),
        prop_oneof![Just("g32"), Just("ut52")].prop_map(|s| GroupSpec::Corpus(s.to_string())),
        prop::collection::vec(generator, 1..3).prop_map(GroupSpec::Perm),
        "[a-z0-9_./]{1,12}".prop_map(GroupSpec::Cayley),
    ]
}

fn spec() -> impl Strategy<Value = GroupSpec> {
    atom().prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| GroupSpec::product(a, b)),
            (inner, 1..6usize).prop_map(|(a, n)| GroupSpec::wreath(a, n)),
        ]
    })
}

fn small_group() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["S4", "D16", "Q16", "C2 x Q8", "S3 x C4", "C2 wr C3", "corpus:g32", "A4", "C3 x C3"])
}

proptest! {
    #[test]
    fn spec_text_round_trips(s in spec()) {
        let text = s.to_string();
        prop_assert_eq!(GroupSpec::parse(&text).unwrap(), s);
    }

    #[test]
    fn spec_parsing_ignores_operator_spacing(s in spec()) {
        let text = s.to_string();
        let squeezed = text.replace(" x ", "x").replace(" wr ", "wr");
        // fixture names and paths may themselves contain `x` or `wr`
        if !text.contains("cayley:") && !text.contains("corpus:") {
            prop_assert_eq!(GroupSpec::parse(&squeezed).unwrap(), s);
        }
    }

    #[test]
    fn closure_is_idempotent(spec in small_group(), seed in prop::collection::vec(0usize..1000, 0..4)) {
        let g = common::build(spec);
        let seed: Vec<usize> = seed.into_iter().map(|x| x % g.order()).collect();
        let h = closure(&g, &seed);
        let again = closure(&g, h.generators());
        prop_assert_eq!(h.mask(), again.mask());
        prop_assert_eq!(h.elements(), common::members(&common::naive_closure(&g, &seed)));
        prop_assert_eq!(g.order() % h.order(), 0);
    }

    #[test]
    fn join_is_least_upper_bound(spec in small_group(), a in 0usize..1000, b in 0usize..1000) {
        let g = common::build(spec);
        let (a, b) = (a % g.order(), b % g.order());
        let (x, y) = (closure(&g, &[a]), closure(&g, &[b]));
        let j = join(&g, &x, &y);
        prop_assert!(x.is_subgroup_of(&j) && y.is_subgroup_of(&j));
        let direct = closure(&g, &[a, b]);
        prop_assert_eq!(j.mask(), direct.mask());
    }
}

#[test]
fn parse_errors_carry_positions() {
    let e = GroupSpec::parse("S3 x").unwrap_err();
    assert_eq!(e.position, 4);
    assert!(e.expected.iter().any(|t| t.contains("UT(")));
    let e = GroupSpec::parse("D8 wr S3").unwrap_err();
    assert_eq!(e.position, 6);
}

#[test]
fn perm_spec_builds_s4() {
    let g = GroupSpec::parse("perm:[(1,2),(1,2,3,4)]").unwrap().build(&Limits::default()).unwrap();
    assert_eq!(g.order(), 24);
}
