//! Finite groups as index-based multiplication structures.
//!
//! Every group has elements `0..order` with the identity at index 0. Groups up
//! to [`TABLE_LIMIT`] elements keep a full multiplication table; larger ones
//! multiply through a rule supplied by their constructor.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::perm::{Perm, PermutationGenSet};
use crate::products::{DirectProductMeta, ProductMeta, WreathMeta};

/// Groups at or below this order store a full multiplication table.
pub const TABLE_LIMIT: usize = 4096;

/// Default upper bound on the order of any constructed group.
pub const DEFAULT_ORDER_CAP: usize = 20000;

/// Associativity is checked on every triple up to this order.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 256;

const ASSOC_SEED: u64 = 0x5eed_cd1a;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Cyclic,
    Dihedral,
    Quaternion,
    Symmetric,
    Alternating,
    Unitriangular,
}

impl Family {
    pub fn symbol(self) -> &'static str {
        match self {
            Family::Cyclic => "C",
            Family::Dihedral => "D",
            Family::Quaternion => "Q",
            Family::Symmetric => "S",
            Family::Alternating => "A",
            Family::Unitriangular => "UT",
        }
    }
}

/// How a group came to exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    CayleyFile,
    PermutationGens,
    NamedFamily(Family, usize),
    DirectProduct,
    WreathProduct,
    CorpusFixture(String),
}

type MulRule = Arc<dyn Fn(usize, usize) -> usize + Send + Sync>;

enum Law {
    Table(Vec<u32>),
    Rule(MulRule),
}

struct Inner {
    name: String,
    order: usize,
    law: Law,
    inv: Vec<u32>,
    provenance: Provenance,
    perms: Option<Vec<Perm>>,
    product: Option<ProductMeta>,
    generators: OnceLock<Vec<usize>>,
}

/// An immutable finite group. Cloning is cheap.
#[derive(Clone)]
pub struct Group(Arc<Inner>);

pub(crate) struct GroupParts {
    pub name: String,
    pub provenance: Provenance,
    pub perms: Option<Vec<Perm>>,
    pub product: Option<ProductMeta>,
}

impl GroupParts {
    pub fn new(name: impl Into<String>, provenance: Provenance) -> Self {
        GroupParts { name: name.into(), provenance, perms: None, product: None }
    }
}

impl Group {
    /// Assembles a group from a multiplication rule and an inverse rule. The
    /// rule is tabulated when `order <= TABLE_LIMIT`.
    pub(crate) fn from_rule<M, I>(parts: GroupParts, order: usize, mul: M, inv: I) -> Group
    where
        M: Fn(usize, usize) -> usize + Send + Sync + 'static,
        I: Fn(usize) -> usize + Sync,
    {
        let inv: Vec<u32> = (0..order).into_par_iter().map(|x| inv(x) as u32).collect();
        let law = if order <= TABLE_LIMIT {
            let mut table = vec![0u32; order * order];
            table.par_chunks_mut(order.max(1)).enumerate().for_each(|(a, row)| {
                for (b, slot) in row.iter_mut().enumerate() {
                    *slot = mul(a, b) as u32;
                }
            });
            Law::Table(table)
        } else {
            Law::Rule(Arc::new(mul))
        };
        Self::assemble(parts, order, law, inv)
    }

    /// Assembles a group from a complete table (row-major, `order * order`)
    /// already known to be a group with identity 0.
    pub(crate) fn from_valid_table(parts: GroupParts, order: usize, table: Vec<u32>) -> Group {
        debug_assert_eq!(table.len(), order * order);
        let mut inv = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inv[a] = row.iter().position(|&v| v == 0).expect("latin row contains identity") as u32;
        }
        Self::assemble(parts, order, Law::Table(table), inv)
    }

    fn assemble(parts: GroupParts, order: usize, law: Law, inv: Vec<u32>) -> Group {
        Group(Arc::new(Inner {
            name: parts.name,
            order,
            law,
            inv,
            provenance: parts.provenance,
            perms: parts.perms,
            product: parts.product,
            generators: OnceLock::new(),
        }))
    }

    /// Ingests a square Cayley table, validating the group axioms.
    ///
    /// If the identity is not at index 0 the labels of the identity and of
    /// element 0 are swapped.
    pub fn from_cayley(table: &[Vec<usize>]) -> Result<Group> {
        Self::from_cayley_named(table, "cayley")
    }

    pub fn from_cayley_named(table: &[Vec<usize>], name: &str) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(Error::NotAGroup(format!("row {i} holds out-of-range index {v}")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut flat = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[relabel(a) * n + relabel(b)] = relabel(table[a][b]) as u32;
            }
        }
        check_latin(&flat, n)?;
        check_associative(&flat, n)?;
        Ok(Self::from_valid_table(GroupParts::new(name, Provenance::CayleyFile), n, flat))
    }

    /// Enumerates the group generated by a set of permutations.
    ///
    /// Elements are indexed in breadth-first discovery order: identity first,
    /// then each dequeued element multiplied on the right by each generator in
    /// the given order.
    pub fn from_permutations(gens: &PermutationGenSet, order_cap: usize) -> Result<Group> {
        Self::from_permutations_named(gens, order_cap, GroupParts::new(perm_name(gens), Provenance::PermutationGens))
    }

    pub(crate) fn from_permutations_named(gens: &PermutationGenSet, order_cap: usize, mut parts: GroupParts) -> Result<Group> {
        let id = Perm::identity(gens.degree);
        let mut elements = vec![id.clone()];
        let mut index: HashMap<Perm, u32> = HashMap::from([(id, 0)]);
        // right_gen[x * k + j] = index of x * gen_j
        let k = gens.generators.len();
        let mut right_gen: Vec<u32> = Vec::new();
        let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (j, g) in gens.generators.iter().enumerate() {
                let y = elements[x].then(g);
                let next = index.len() as u32;
                let idx = *index.entry(y.clone()).or_insert_with(|| {
                    elements.push(y);
                    parent.push((x as u32, j as u32));
                    queue.push_back(next as usize);
                    next
                });
                if elements.len() > order_cap {
                    return Err(Error::OrderCapExceeded { order: elements.len(), cap: order_cap });
                }
                debug_assert_eq!(right_gen.len(), x * k + j);
                right_gen.push(idx);
            }
        }
        let n = elements.len();
        let inv: Vec<u32> = elements.iter().map(|p| index[&p.inverse()]).collect();
        let law = if n <= TABLE_LIMIT {
            // Row x: x * y = (x * parent(y)) * gen(y), filled in discovery order.
            let mut table = vec![0u32; n * n];
            table.par_chunks_mut(n).enumerate().for_each(|(x, row)| {
                row[0] = x as u32;
                for y in 1..n {
                    let (p, j) = parent[y];
                    row[y] = right_gen[row[p as usize] as usize * k + j as usize];
                }
            });
            Law::Table(table)
        } else {
            let elems = Arc::new(elements.clone());
            let index = Arc::new(index);
            Law::Rule(Arc::new(move |a, b| index[&elems[a].then(&elems[b])] as usize))
        };
        parts.perms = Some(elements);
        Ok(Self::assemble(parts, n, law, inv))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn provenance(&self) -> &Provenance {
        &self.0.provenance
    }

    /// Permutation images of each element, for groups built from permutations.
    pub fn permutations(&self) -> Option<&[Perm]> {
        self.0.perms.as_deref()
    }

    pub fn product_meta(&self) -> Option<&ProductMeta> {
        self.0.product.as_ref()
    }

    pub fn direct_meta(&self) -> Option<&DirectProductMeta> {
        match &self.0.product {
            Some(ProductMeta::Direct(m)) => Some(m),
            _ => None,
        }
    }

    pub fn wreath_meta(&self) -> Option<&WreathMeta> {
        match &self.0.product {
            Some(ProductMeta::Wreath(m)) => Some(m),
            _ => None,
        }
    }

    pub fn has_table(&self) -> bool {
        matches!(self.0.law, Law::Table(_))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.0.law {
            Law::Table(t) => t[a * self.0.order + b] as usize,
            Law::Rule(f) => f(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inv[a] as usize
    }

    /// `g^-1 x g`
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    #[inline]
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let (mut acc, mut base) = (0, a);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let (mut x, mut k) = (a, 1);
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.0.order
    }

    pub fn full_mask(&self) -> Mask {
        Mask::full(self.0.order)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commutes(a, b)))
    }

    /// A generating set found by greedy descent over the element indices.
    /// Computed once and cached.
    pub fn generators(&self) -> &[usize] {
        self.0.generators.get_or_init(|| crate::subgroup::greedy_generators(self, &self.full_mask()))
    }

    /// Multiplication table as rows of indices.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order()).map(|a| (0..self.order()).map(|b| self.mul(a, b)).collect()).collect()
    }

    /// Renders the table in the Cayley file format.
    pub fn to_cayley_string(&self) -> String {
        let mut out = format!("# {}\n{}\n", self.name(), self.order());
        for a in self.elements() {
            let row: Vec<String> = self.elements().map(|b| self.mul(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Checks identity, inverse, Latin square and associativity. Exhaustive
    /// up to order 256, sampled (10 * order^2 triples, fixed seed) above.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        for x in self.elements() {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::NotAGroup(format!("index 0 is not an identity for {x}")));
            }
            if self.mul(x, self.inv(x)) != 0 {
                return Err(Error::NotAGroup(format!("inverse of {x} is wrong")));
            }
        }
        let flat: Vec<u32> = match &self.0.law {
            Law::Table(t) => t.clone(),
            Law::Rule(_) => {
                let table = self.table();
                table.into_iter().flatten().map(|v| v as u32).collect()
            }
        };
        check_latin(&flat, n)?;
        check_associative(&flat, n)
    }
}

fn perm_name(gens: &PermutationGenSet) -> String {
    let gs: Vec<String> = gens.generators.iter().map(|g| g.to_string()).collect();
    format!("perm:[{}]", gs.join(","))
}

fn check_latin(flat: &[u32], n: usize) -> Result<()> {
    let mut seen = vec![0u32; n];
    for a in 0..n {
        let stamp = a as u32 + 1;
        for b in 0..n {
            let v = flat[a * n + b] as usize;
            if seen[v] == stamp {
                return Err(Error::NotAGroup(format!("row {a} repeats {v}")));
            }
            seen[v] = stamp;
        }
    }
    seen.iter_mut().for_each(|s| *s = 0);
    for b in 0..n {
        let stamp = b as u32 + 1;
        for a in 0..n {
            let v = flat[a * n + b] as usize;
            if seen[v] == stamp {
                return Err(Error::NotAGroup(format!("column {b} repeats {v}")));
            }
            seen[v] = stamp;
        }
    }
    Ok(())
}

fn check_associative(flat: &[u32], n: usize) -> Result<()> {
    let m = |a: usize, b: usize| flat[a * n + b] as usize;
    let bad = |a, b, c| Error::NotAGroup(format!("associativity fails on ({a}, {b}, {c})"));
    if n <= EXHAUSTIVE_ASSOC_LIMIT {
        let found = (0..n).into_par_iter().find_first(|&a| {
            (0..n).any(|b| {
                let ab = m(a, b);
                (0..n).any(|c| m(ab, c) != m(a, m(b, c)))
            })
        });
        if let Some(a) = found {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(bad(a, b, c));
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SEED);
        for _ in 0..10 * n * n {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if m(m(a, b), c) != m(a, m(b, c)) {
                return Err(bad(a, b, c));
            }
        }
    }
    Ok(())
}

/// Parses the Cayley file format: the order on the first line, then one row
/// per line; `#` starts a comment.
pub fn parse_cayley(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, head) = lines.next().ok_or(Error::CayleyFormat { line: None, message: "empty file".into() })?;
    let n: usize = head
        .parse()
        .map_err(|_| Error::CayleyFormat { line: Some(first), message: format!("expected order, found `{head}`") })?;
    let mut rows = Vec::with_capacity(n);
    for (lineno, line) in lines {
        if rows.len() == n {
            return Err(Error::CayleyFormat { line: Some(lineno), message: "trailing data after table".into() });
        }
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::CayleyFormat { line: Some(lineno), message: e.to_string() })?;
        if row.len() != n {
            return Err(Error::CayleyFormat { line: Some(lineno), message: format!("expected {n} entries, found {}", row.len()) });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::CayleyFormat { line: None, message: format!("expected {n} rows, found {}", rows.len()) });
    }
    Ok(rows)
}

pub fn read_cayley_file(path: &std::path::Path) -> Result<Group> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Group::from_cayley_named(&parse_cayley(&text)?, &format!("cayley:{}", path.display()))
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group").field("name", &self.0.name).field("order", &self.0.order).finish()
    }
}

/// Finds an isomorphism `a -> b` as an image vector, by mapping a generating
/// set of `a` onto elements of matching order and extending. Both groups
/// must have order at most `ISO_ORDER_CAP`.
pub fn find_isomorphism(a: &Group, b: &Group) -> Result<Option<Vec<usize>>> {
    const ISO_ORDER_CAP: usize = 16;
    let n = a.order();
    if n > ISO_ORDER_CAP || b.order() > ISO_ORDER_CAP {
        return Err(Error::OrderCapExceeded { order: n.max(b.order()), cap: ISO_ORDER_CAP });
    }
    if n != b.order() || order_profile(a) != order_profile(b) {
        return Ok(None);
    }
    let gens = a.generators().to_vec();
    let candidates: Vec<Vec<usize>> =
        gens.iter().map(|&g| b.elements().filter(|&y| b.element_order(y) == a.element_order(g)).collect()).collect();
    let mut choice = vec![0usize; gens.len()];
    fn extend(a: &Group, b: &Group, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
        let n = a.order();
        let mut map = vec![usize::MAX; n];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (&g, &h) in gens.iter().zip(imgs) {
                let y = a.mul(x, g);
                let fy = b.mul(map[x], h);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        let mut hit = vec![false; n];
        for &v in &map {
            if std::mem::replace(&mut hit[v], true) {
                return None;
            }
        }
        Some(map)
    }
    loop {
        let imgs: Vec<usize> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Some(map) = extend(a, b, &gens, &imgs) {
            return Ok(Some(map));
        }
        // odometer over candidate choices
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Ok(None);
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Sorted multiset of element orders.
pub fn order_profile(g: &Group) -> Vec<usize> {
    let mut v: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    v.sort_unstable();
    v
}
