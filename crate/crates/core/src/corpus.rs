//! Built-in fixture groups.

use crate::error::{Error, Result};
use crate::group::{Group, GroupParts, Provenance};
use crate::named::Unitriangular;
use crate::subgroup::{closure, Subgroup};

/// Registered fixture names.
pub const FIXTURES: &[(&str, &str)] = &[
    ("g32", "order 32: <a,b,c,d | a^4=b^2=c^2=d^2=[a,b]=[b,c]=[b,d]=[c,d]=[a,c]b=[a,d]c=1>"),
    ("ut52", "UT(5,2), upper unitriangular 5x5 matrices over GF(2), order 1024"),
];

pub fn corpus_group(name: &str, order_cap: usize) -> Result<Group> {
    match name {
        "g32" => Ok(g32()),
        "ut52" => {
            if 1024 > order_cap {
                return Err(Error::OrderCapExceeded { order: 1024, cap: order_cap });
            }
            let rule = Unitriangular::new(5);
            let rule2 = rule.clone();
            let parts = GroupParts::new("corpus:ut52", Provenance::CorpusFixture("ut52".into()));
            Ok(Group::from_rule(parts, 1024, move |a, b| rule.mul(a, b), move |a| rule2.inv(a)))
        }
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

/// Index of `a` in [`g32`]; `b`, `c`, `d` follow.
pub const G32_A: usize = 1;
pub const G32_B: usize = 4;
pub const G32_C: usize = 8;
pub const G32_D: usize = 16;

/// The order-32 group `N ⋊ <a>` with `N = <b, c, d>` elementary abelian and
/// `a` acting by `b^a = b`, `c^a = bc`, `d^a = cd`, which is what the
/// relations `[a,c] = b` and `[a,d] = c` force (with `[x,y] = x^-1 y^-1 x y`).
///
/// The element `a^i b^j c^k d^l` has index `i + 4 (j + 2k + 4l)`.
pub fn g32() -> Group {
    // a^-1 n a on the bit vector (b, c, d)
    fn act(v: usize) -> usize {
        v ^ ((v >> 1) & 3)
    }
    fn act_pow(mut v: usize, j: usize) -> usize {
        for _ in 0..j {
            v = act(v);
        }
        v
    }
    let mul = |x: usize, y: usize| {
        let (i, n) = (x % 4, x / 4);
        let (j, m) = (y % 4, y / 4);
        (i + j) % 4 + 4 * (act_pow(n, j) ^ m)
    };
    // (a^i n)^-1 = n a^-i = a^-i (n)^(a^-i)
    let inv = |x: usize| {
        let (i, n) = (x % 4, x / 4);
        let back = (4 - i) % 4;
        back + 4 * act_pow(n, back)
    };
    Group::from_rule(GroupParts::new("corpus:g32", Provenance::CorpusFixture("g32".into())), 32, mul, inv)
}

/// The abelian subgroup of `UT(n,2)` of matrices `I + E` with `E` supported
/// on the top-right `x` by `y` block, `x = floor(n/2)`, `y = ceil(n/2)`.
pub fn unitriangular_corner(g: &Group, n: usize) -> Subgroup {
    let ut = Unitriangular::new(n);
    let x = n / 2;
    let gens: Vec<usize> = (0..x).flat_map(|i| (x..n).map(move |j| (i, j))).map(|(i, j)| 1usize << ut.bit(i, j)).collect();
    closure(g, &gens)
}
