//! Direct products and wreath products with a cyclic top group.
//!
//! A direct product `G x H` packs `(g, h)` as `g + |G| * h`. A wreath product
//! `G wr C_n` packs `(f(1), ..., f(n); sigma^k)` in mixed radix with `f(1)`
//! least significant and `k` most significant, so the base group occupies the
//! first `|G|^n` indices and the identity is 0.
//!
//! Slots are 0-based in this API: slot 0 is the first coordinate.

use crate::error::{Error, Result};
use crate::group::{Group, GroupParts, Provenance};
use crate::mask::Mask;
use crate::subgroup::{closure, Subgroup};

#[derive(Clone, Debug)]
pub enum ProductMeta {
    Direct(DirectProductMeta),
    Wreath(WreathMeta),
}

/// Coordinates of a two-factor direct product.
#[derive(Clone, Debug)]
pub struct DirectProductMeta {
    factors: Vec<Group>,
}

impl DirectProductMeta {
    pub fn factors(&self) -> &[Group] {
        &self.factors
    }

    pub fn coords(&self, x: usize) -> Vec<usize> {
        let n0 = self.factors[0].order();
        vec![x % n0, x / n0]
    }

    pub fn pack(&self, coords: &[usize]) -> usize {
        coords[0] + self.factors[0].order() * coords[1]
    }

    /// Injection of factor `i` into the product.
    pub fn embed(&self, i: usize, x: usize) -> usize {
        let mut c = vec![0, 0];
        c[i] = x;
        self.pack(&c)
    }

    /// Image of `u` in factor `i`.
    pub fn projection(&self, u: &Subgroup, i: usize) -> Subgroup {
        let gens: Vec<usize> = u.generators().iter().map(|&x| self.coords(x)[i]).collect();
        closure(&self.factors[i], &gens)
    }

    /// `X x Y` as a subgroup of the product.
    pub fn product_subgroup(&self, product: &Group, x: &Subgroup, y: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = x
            .generators()
            .iter()
            .map(|&a| self.embed(0, a))
            .chain(y.generators().iter().map(|&b| self.embed(1, b)))
            .collect();
        closure(product, &gens)
    }
}

/// Structure of `G wr C_n`.
#[derive(Clone, Debug)]
pub struct WreathMeta {
    bottom: Group,
    n: usize,
    base_order: usize,
}

impl WreathMeta {
    pub fn bottom(&self) -> &Group {
        &self.bottom
    }

    /// Degree of the cyclic top group.
    pub fn top_order(&self) -> usize {
        self.n
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    /// The generator `sigma` of the top group, acting as `slot -> slot + 1`.
    pub fn sigma(&self) -> usize {
        self.base_order
    }

    pub fn is_base(&self, x: usize) -> bool {
        x < self.base_order
    }

    /// `(f, k)` for the element `f sigma^k`.
    pub fn coords(&self, x: usize) -> (Vec<usize>, usize) {
        decode(x, self.bottom.order(), self.n)
    }

    pub fn pack(&self, f: &[usize], k: usize) -> usize {
        encode(f, k, self.bottom.order(), self.n)
    }

    pub fn base_mask(&self) -> Mask {
        Mask::from_indices(self.base_order * self.n, 0..self.base_order)
    }

    /// The base group `B = G^n`.
    pub fn base_subgroup(&self, w: &Group) -> Subgroup {
        let mut gens = Vec::new();
        for slot in 0..self.n {
            for &g in self.bottom.generators() {
                let mut f = vec![0; self.n];
                f[slot] = g;
                gens.push(self.pack(&f, 0));
            }
        }
        closure(w, &gens)
    }

    /// Elements of `B` with every coordinate equal and lying in `h`.
    pub fn diagonal_subgroup(&self, w: &Group, h: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = h.generators().iter().map(|&g| self.pack(&vec![g; self.n], 0)).collect();
        closure(w, &gens)
    }

    /// Image of `U ∩ B` under the coordinate map of `slot`.
    pub fn base_projection(&self, u: &Subgroup, slot: usize) -> Subgroup {
        let mut m = Mask::empty(self.bottom.order());
        for x in u.mask().iter().filter(|&x| self.is_base(x)) {
            m.insert(self.coords(x).0[slot]);
        }
        Subgroup::from_mask(&self.bottom, m)
    }

    /// `U ∩ B`
    pub fn base_part(&self, w: &Group, u: &Subgroup) -> Subgroup {
        Subgroup::from_mask(w, u.mask().intersection(&self.base_mask()))
    }

    pub fn within_base(&self, u: &Subgroup) -> bool {
        u.mask().iter().all(|x| self.is_base(x))
    }
}

fn decode(mut x: usize, m: usize, n: usize) -> (Vec<usize>, usize) {
    let mut f = Vec::with_capacity(n);
    for _ in 0..n {
        f.push(x % m);
        x /= m;
    }
    (f, x)
}

fn encode(f: &[usize], k: usize, m: usize, n: usize) -> usize {
    let mut x = k;
    for i in (0..n).rev() {
        x = x * m + f[i];
    }
    x
}

fn bracket(name: &str) -> String {
    if name.contains(' ') {
        format!("({name})")
    } else {
        name.to_string()
    }
}

/// `G x H`
pub fn direct_product(g: &Group, h: &Group, order_cap: usize) -> Result<Group> {
    let order = g.order().saturating_mul(h.order());
    if order > order_cap {
        return Err(Error::OrderCapExceeded { order, cap: order_cap });
    }
    let meta = DirectProductMeta { factors: vec![g.clone(), h.clone()] };
    let mut parts = GroupParts::new(format!("{} x {}", g.name(), bracket(h.name())), Provenance::DirectProduct);
    parts.product = Some(ProductMeta::Direct(meta));
    let (a, b) = (g.clone(), h.clone());
    let (ia, ib) = (g.clone(), h.clone());
    let n0 = g.order();
    Ok(Group::from_rule(
        parts,
        order,
        move |x, y| a.mul(x % n0, y % n0) + n0 * b.mul(x / n0, y / n0),
        move |x| ia.inv(x % n0) + n0 * ib.inv(x / n0),
    ))
}

/// `G wr C_n`, with `f^(sigma^k)(i) = f(i - k)`, so that
/// `(f sigma^k)(f' sigma^l) = (i -> f(i) f'(i + k)) sigma^(k + l)`.
pub fn wreath_cyclic(g: &Group, n: usize, order_cap: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::bad_parameter("wr", "top degree must be positive"));
    }
    let too_big = || Error::OrderCapExceeded { order: usize::MAX, cap: order_cap };
    let base_order = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(g.order())).ok_or_else(too_big)?;
    let order = base_order.checked_mul(n).ok_or_else(too_big)?;
    if order > order_cap {
        return Err(Error::OrderCapExceeded { order, cap: order_cap });
    }
    let meta = WreathMeta { bottom: g.clone(), n, base_order };
    let mut parts = GroupParts::new(format!("{} wr C{n}", bracket(g.name())), Provenance::WreathProduct);
    parts.product = Some(ProductMeta::Wreath(meta));
    let m = g.order();
    let (gm, gi) = (g.clone(), g.clone());
    let mul = move |x: usize, y: usize| {
        let (f, k) = decode(x, m, n);
        let (f2, l) = decode(y, m, n);
        let prod: Vec<usize> = (0..n).map(|i| gm.mul(f[i], f2[(i + k) % n])).collect();
        encode(&prod, (k + l) % n, m, n)
    };
    let inv = move |x: usize| {
        let (f, k) = decode(x, m, n);
        let g: Vec<usize> = (0..n).map(|i| gi.inv(f[(i + n - k) % n])).collect();
        encode(&g, (n - k) % n, m, n)
    };
    Ok(Group::from_rule(parts, order, mul, inv))
}
