//! Registry of executable checks, one per structural claim about measures
//! and Chermak-Delgado lattices, each run against a built-in corpus.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cd::SubgroupCensus;
use crate::corpus::{unitriangular_corner, G32_A, G32_B, G32_D};
use crate::error::{Error, Result};
use crate::group::{Family, Group, Provenance};
use crate::mask::Mask;
use crate::products::WreathMeta;
use crate::spec::GroupSpec;
use crate::subgroup::{
    center, centralizer, centralizer_mask, closure, is_normal, join, normal_closure, normalizer, subnormal_defect, Limits, Subgroup,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Passed,
    Failed,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSubgroup {
    pub label: String,
    pub order: usize,
    pub elements: Vec<usize>,
    pub measure: String,
}

/// Subgroups explaining a failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub description: String,
    pub subgroups: Vec<WitnessSubgroup>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub subgroups_enumerated: usize,
    /// Named quantities computed along the way (measures, member counts).
    pub values: BTreeMap<String, String>,
    /// Wall time; not serialized so that reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub check_id: String,
    pub group_spec: String,
    pub outcome: Outcome,
    pub passed: bool,
    /// Why a check was skipped.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    pub stats: Stats,
}

pub struct CheckInfo {
    pub id: &'static str,
    pub claim: &'static str,
    pub corpus: &'static [&'static str],
    run: fn(&mut Ctx) -> Result<Finding>,
}

const UNIVERSAL: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14", "C15", "C16", "C17", "C18", "C19",
    "C20", "C21", "C22", "C23", "C24", "D4", "D6", "D8", "D10", "D12", "D14", "D16", "D18", "D20", "D22", "D24", "Q8", "Q16",
    "S2", "S3", "S4", "A4", "UT(3,2)", "C2 x C2", "C2 x C4", "C2 x C2 x C2", "C2 x C6", "C3 x C3", "C2 x C8", "C4 x C4",
    "C2 x C2 x C4", "C2 x C2 x C2 x C2", "C2 x D8", "C2 x Q8", "C3 x C6", "C3 x S3", "C2 x C10", "C2 x C12", "C2 x C2 x C6",
    "C2 x A4", "C2 x D12", "C3 x D8", "C3 x Q8", "C4 x S3", "perm:[(1,2,3,4,5,6,7),(2,3,5)(4,7,6)]", "corpus:g32", "D8 wr C2",
    "C4 wr C2", "C2 wr C3", "C6 wr C2",
];

const SIMPLE: &[&str] = &["C2", "C3", "C5", "C7", "C11", "C13", "A5", "S3", "A4", "D10"];

const PRODUCTS: &[&str] = &[
    "S3 x D8", "C2 x S3", "D8 x C2", "Q8 x S3", "A4 x C2", "S4 x C2", "D12 x C2", "D8 x Q8", "C2 x C2", "C3 x S3", "S3 x S3",
];

const WREATHS: &[&str] = &[
    "C2 wr C2", "C2 wr C3", "C3 wr C2", "C4 wr C2", "C6 wr C2", "S3 wr C2", "D8 wr C2", "Q8 wr C2", "D12 wr C2", "C2 wr C5",
];

const PRIME_WREATHS: &[&str] = &["C2 wr C2", "C2 wr C3", "C3 wr C2", "C4 wr C2", "C6 wr C2", "S3 wr C2", "D8 wr C2", "C2 wr C5"];

/// Every registered check, in report order.
pub const CHECKS: &[CheckInfo] = &[
    CheckInfo {
        id: "cd-sublattice",
        claim: "CD(G) is closed under intersection and join, HK = <H,K> for members, and C(H) is a member with C(C(H)) = H",
        corpus: UNIVERSAL,
        run: cd_sublattice,
    },
    CheckInfo { id: "cd-subnormal", claim: "every member of CD(G) is subnormal in G", corpus: UNIVERSAL, run: cd_subnormal },
    CheckInfo {
        id: "useful-prop",
        claim: "U in CD(G) and U C_G(U) <= S < G imply U, C_G(U) and U C_G(U) lie in CD(S)",
        corpus: UNIVERSAL,
        run: useful_prop,
    },
    CheckInfo { id: "direct-cd", claim: "CD(G x H) = CD(G) x CD(H)", corpus: PRODUCTS, run: direct_cd },
    CheckInfo { id: "direct-cl", claim: "CL(G x H) = CL(G) x CL(H)", corpus: PRODUCTS, run: direct_cl },
    CheckInfo {
        id: "wreath-base-centralizer",
        claim: "C_W(B) = Z(B) and m_W(B) = |G|^n |Z(G)|^n",
        corpus: WREATHS,
        run: wreath_base_centralizer,
    },
    CheckInfo {
        id: "wreath-center",
        claim: "Z(W) is the diagonal of Z(B) and m_W(W) = n |G|^n |Z(G)|",
        corpus: WREATHS,
        run: wreath_center,
    },
    CheckInfo {
        id: "wreath-not-self",
        claim: "|Z(G)|^(n-1) > n implies m_W(B) > m_W(W), so W is not in CD(W)",
        corpus: &["C4 wr C2", "C2 wr C3", "C3 wr C2", "C6 wr C2", "C2 wr C5", "D8 wr C2", "S3 wr C2", "D12 wr C2"],
        run: wreath_not_self,
    },
    CheckInfo {
        id: "wreath-self-c2",
        claim: "G in CD(G) and |Z(G)| = 2 imply W = G wr C2 lies in CD(W) and CD(B) <= CD(W)",
        corpus: &["C2 wr C2", "D8 wr C2", "Q8 wr C2", "D12 wr C2"],
        run: wreath_self_c2,
    },
    CheckInfo {
        id: "wreath-cd-collapse",
        claim: "Z(G) > 1 and (|Z(G)| > 2 or p > 2) imply CD(W) = CD(B) and CL(W) = CL(B)",
        corpus: &["C4 wr C2", "C2 wr C3", "C3 wr C2", "C6 wr C2", "C2 wr C5", "D8 wr C2"],
        run: wreath_cd_collapse,
    },
    CheckInfo {
        id: "wreath-mmm",
        claim: "Z(G) > 1 and W not D8 imply every U in CD(W) has U <= B or C_W(U) <= B",
        corpus: &["C4 wr C2", "C2 wr C3", "C3 wr C2", "C6 wr C2", "D8 wr C2", "Q8 wr C2", "C2 wr C2"],
        run: wreath_mmm,
    },
    CheckInfo {
        id: "d12-counterexample",
        claim: "m(D12) = 24 < 36 = m(<r>); in D12 wr C2, m(<r> x <r>) >= 6^4 > 576 = m(W)",
        corpus: &["D12"],
        run: d12_counterexample,
    },
    CheckInfo {
        id: "g32-nonnormal",
        claim: "in g32, <a,b>, <b,da> and <b,da^3> are non-normal members of CD, <a,b> with defect 2",
        corpus: &["corpus:g32"],
        run: g32_nonnormal,
    },
    CheckInfo {
        id: "ut52-not-self",
        claim: "the corner abelian subgroup A of UT(n,2) has m(A) >= 2^(2xy) > m(G), so G is not in CD(G)",
        corpus: &["corpus:ut52", "UT(4,2)"],
        run: ut_not_self,
    },
    CheckInfo {
        id: "embed-2group",
        claim: "iterated wreath products of C2 by C2 lie in their own CD lattice",
        corpus: &["C2 wr C2", "(C2 wr C2) wr C2"],
        run: embed_2group,
    },
    CheckInfo {
        id: "simple-cd",
        claim: "a simple group S has CD(S) = {Z(S), S}",
        corpus: SIMPLE,
        run: simple_cd,
    },
    CheckInfo { id: "sym-cd", claim: "CD(S_n) = {1, S_n} for n >= 4", corpus: &["S3", "S4", "S5"], run: sym_cd },
    CheckInfo {
        id: "measure-lemmas",
        claim: "m(H) <= m(C(H)) with equality only if H = C(C(H)); m(H)m(K) <= m(<H,K>)m(H^K) with equality iff <H,K> = HK and C(H^K) = C(H)C(K)",
        corpus: UNIVERSAL,
        run: measure_lemmas,
    },
    CheckInfo {
        id: "centralizer-identities",
        claim: "H <= C(C(H)), C(H) <= N(H), Z(G) <= C(H), and defect <= 1 iff H is normal",
        corpus: UNIVERSAL,
        run: centralizer_identities,
    },
    CheckInfo {
        id: "direct-centralizer",
        claim: "C(U) = C(pi_1 U) x C(pi_2 U) and m(U) <= m(pi_1 U) m(pi_2 U) with equality iff U = pi_1 U x pi_2 U",
        corpus: PRODUCTS,
        run: direct_centralizer,
    },
    CheckInfo {
        id: "wreath-commuting",
        claim: "if f sigma commutes with b in B then b(i) = b(1)^(f(1)...f(i-1)) and pi_1(C_B(f sigma)) = C_G(f(1)...f(n))",
        corpus: WREATHS,
        run: wreath_commuting,
    },
    CheckInfo { id: "wreath-index", claim: "[U : U ^ B] is 1 if U <= B and p otherwise", corpus: PRIME_WREATHS, run: wreath_index },
    CheckInfo {
        id: "wreath-orders",
        claim: "U <= B, C_W(U) !<= B: |U| = |pi_1 U|, |C_W(U)| = p |C_G(pi_1 U)|^p; U, C_W(U) !<= B: |U| = p |pi_1(U ^ B)|, |C_W(U)| = p |pi_1 C_B(U)|",
        corpus: PRIME_WREATHS,
        run: wreath_orders,
    },
];

pub fn check_info(id: &str) -> Result<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs one check on one group.
pub fn run_check(check_id: &str, spec: &GroupSpec, limits: &Limits) -> Result<Verdict> {
    let info = check_info(check_id)?;
    let start = Instant::now();
    let group = spec.build(limits)?;
    let mut ctx = Ctx { group, limits: *limits, census: None, values: BTreeMap::new() };
    let finding = (info.run)(&mut ctx)?;
    let subgroups_enumerated = ctx.census.as_ref().map_or(0, |c| c.len());
    let (outcome, note, witness) = match finding {
        Finding::Pass => (Outcome::Passed, None, None),
        Finding::Fail(w) => (Outcome::Failed, None, Some(w)),
        Finding::Skip(why) => (Outcome::Skipped, Some(why), None),
    };
    Ok(Verdict {
        check_id: info.id.to_string(),
        group_spec: spec.to_string(),
        outcome,
        passed: outcome == Outcome::Passed,
        note,
        witness,
        stats: Stats { subgroups_enumerated, values: ctx.values, elapsed: start.elapsed() },
    })
}

/// Runs a check over its default corpus.
pub fn run_on_corpus(check_id: &str, limits: &Limits) -> Result<Vec<Verdict>> {
    let info = check_info(check_id)?;
    let specs = info.corpus.iter().map(|s| GroupSpec::parse(s)).collect::<std::result::Result<Vec<_>, _>>()?;
    specs.par_iter().map(|s| run_check(info.id, s, limits)).collect()
}

/// Runs every check over its default corpus, in registry order.
pub fn verify_all(limits: &Limits) -> Result<Vec<Verdict>> {
    let jobs: Vec<(&str, GroupSpec)> = CHECKS
        .iter()
        .flat_map(|c| c.corpus.iter().map(move |s| (c.id, s)))
        .map(|(id, s)| Ok((id, GroupSpec::parse(s)?)))
        .collect::<Result<_>>()?;
    jobs.par_iter().map(|(id, s)| run_check(id, s, limits)).collect()
}

/// Runs every check on one group.
pub fn verify_group(spec: &GroupSpec, limits: &Limits) -> Result<Vec<Verdict>> {
    CHECKS.par_iter().map(|c| run_check(c.id, spec, limits)).collect()
}

enum Finding {
    Pass,
    Fail(Witness),
    Skip(String),
}

struct Ctx {
    group: Group,
    limits: Limits,
    census: Option<SubgroupCensus>,
    values: BTreeMap<String, String>,
}

impl Ctx {
    fn census(&mut self) -> Result<&SubgroupCensus> {
        if self.census.is_none() {
            self.census = Some(SubgroupCensus::enumerate(&self.group, &self.limits)?);
        }
        Ok(self.census.as_ref().expect("just filled"))
    }

    fn note(&mut self, key: &str, value: impl ToString) {
        self.values.insert(key.to_string(), value.to_string());
    }

    fn fail(&self, description: impl Into<String>, subs: &[(&str, &Subgroup)]) -> Finding {
        Finding::Fail(witness(&self.group, description, subs))
    }
}

fn witness(g: &Group, description: impl Into<String>, subs: &[(&str, &Subgroup)]) -> Witness {
    Witness {
        description: description.into(),
        subgroups: subs
            .iter()
            .map(|(label, s)| WitnessSubgroup {
                label: label.to_string(),
                order: s.order(),
                elements: s.elements(),
                measure: crate::cd::measure(g, s).to_string(),
            })
            .collect(),
    }
}

fn big(x: usize) -> BigUint {
    BigUint::from(x)
}

fn mask_set(census: &SubgroupCensus, idx: &[usize]) -> Vec<Mask> {
    let mut v: Vec<Mask> = idx.iter().map(|&i| census.subgroups().get(i).mask().clone()).collect();
    v.sort();
    v
}

fn cd_sublattice(ctx: &mut Ctx) -> Result<Finding> {
    let g = ctx.group.clone();
    let census = ctx.census()?;
    let cd = census.cd_indices();
    let in_cd = |m: &Mask| census.subgroups().position(m).is_some_and(|i| cd.contains(&i));
    for &i in &cd {
        let h = census.subgroups().get(i);
        let c = census.centralizer_index(i);
        if !cd.contains(&c) {
            return Ok(Finding::Fail(witness(&g, "centralizer of a member is not a member", &[("H", h)])));
        }
        if census.centralizer(c) != h.mask() {
            return Ok(Finding::Fail(witness(&g, "C(C(H)) differs from H", &[("H", h)])));
        }
        for &j in &cd {
            let k = census.subgroups().get(j);
            let meet = h.mask().intersection(k.mask());
            let joined = join(&g, h, k);
            let hk = h.order() * k.order() / meet.count();
            if !in_cd(&meet) || !in_cd(joined.mask()) {
                return Ok(Finding::Fail(witness(&g, "meet or join of members falls outside CD(G)", &[("H", h), ("K", k)])));
            }
            if hk != joined.order() {
                return Ok(Finding::Fail(witness(&g, "HK is not the subgroup <H,K>", &[("H", h), ("K", k)])));
            }
        }
    }
    let n = cd.len();
    ctx.note("members", n);
    Ok(Finding::Pass)
}

fn cd_subnormal(ctx: &mut Ctx) -> Result<Finding> {
    let g = ctx.group.clone();
    let census = ctx.census()?;
    let mut max_defect = 0;
    let mut non_normal = 0;
    for i in census.cd_indices() {
        let h = census.subgroups().get(i);
        match subnormal_defect(&g, h) {
            Some(d) => {
                max_defect = max_defect.max(d);
                if d > 1 {
                    non_normal += 1;
                }
            }
            None => return Ok(Finding::Fail(witness(&g, "member of CD(G) is not subnormal", &[("U", h)]))),
        }
    }
    ctx.note("max_defect", max_defect);
    ctx.note("non_normal_members", non_normal);
    Ok(Finding::Pass)
}

fn useful_prop(ctx: &mut Ctx) -> Result<Finding> {
    let g = ctx.group.clone();
    let census = ctx.census()?;
    let whole = g.full_mask();
    let mut relative: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut pairs = 0usize;
    for u in census.cd_indices() {
        let us = census.subgroups().get(u);
        let cu = census.centralizer_index(u);
        let v = join(&g, us, census.subgroups().get(cu));
        let vi = census.subgroups().position(v.mask()).expect("joins are subgroups");
        for s in 0..census.len() {
            let sm = census.subgroups().get(s).mask();
            if sm == &whole || !v.mask().is_subset(sm) {
                continue;
            }
            pairs += 1;
            let cd_s = relative.entry(s).or_insert_with(|| census.relative_cd(sm).1);
            for (label, x) in [("U", u), ("C_G(U)", cu), ("U C_G(U)", vi)] {
                if !cd_s.contains(&x) {
                    let sg = census.subgroups().get(s).clone();
                    return Ok(Finding::Fail(witness(
                        &g,
                        format!("{label} is not in CD(S)"),
                        &[("U", us), ("S", &sg)],
                    )));
                }
            }
        }
    }
    ctx.note("pairs_checked", pairs);
    Ok(Finding::Pass)
}

fn direct_factors(ctx: &Ctx) -> Option<(Group, Group)> {
    ctx.group.direct_meta().map(|m| (m.factors()[0].clone(), m.factors()[1].clone()))
}

fn direct_compare(ctx: &mut Ctx, centrally_large: bool) -> Result<Finding> {
    let Some((a, b)) = direct_factors(ctx) else {
        return Ok(Finding::Skip("not a direct product".into()));
    };
    let limits = ctx.limits;
    let g = ctx.group.clone();
    let ca = SubgroupCensus::enumerate(&a, &limits)?;
    let cb = SubgroupCensus::enumerate(&b, &limits)?;
    let pick = |c: &SubgroupCensus| -> Vec<Subgroup> {
        c.cd_indices()
            .into_iter()
            .filter(|&i| !centrally_large || c.centralizer(i).is_subset(c.subgroups().get(i).mask()))
            .map(|i| c.subgroups().get(i).clone())
            .collect()
    };
    let (la, lb) = (pick(&ca), pick(&cb));
    let meta = g.direct_meta().expect("checked above").clone();
    let mut expected: Vec<Mask> = la
        .iter()
        .flat_map(|x| lb.iter().map(|y| meta.product_subgroup(&g, x, y).mask().clone()).collect::<Vec<_>>())
        .collect();
    expected.sort();
    let census = ctx.census()?;
    let mut got: Vec<usize> = census.cd_indices();
    if centrally_large {
        got.retain(|&i| census.centralizer(i).is_subset(census.subgroups().get(i).mask()));
    }
    let got_masks = mask_set(census, &got);
    let product_max = ca.max_measure() * cb.max_measure();
    let max = census.max_measure();
    let members = got_masks.len();
    if got_masks != expected || max != product_max {
        let stray = got
            .iter()
            .map(|&i| census.subgroups().get(i).clone())
            .find(|s| !expected.contains(s.mask()))
            .unwrap_or_else(|| Subgroup::trivial(&g));
        return Ok(Finding::Fail(witness(&g, "lattice of the product differs from the product of lattices", &[("U", &stray)])));
    }
    ctx.note("members", members);
    ctx.note("max_measure", max);
    ctx.note("factor_members", format!("{} x {}", la.len(), lb.len()));
    Ok(Finding::Pass)
}

fn direct_cd(ctx: &mut Ctx) -> Result<Finding> {
    direct_compare(ctx, false)
}

fn direct_cl(ctx: &mut Ctx) -> Result<Finding> {
    direct_compare(ctx, true)
}

fn wreath_meta(ctx: &Ctx) -> Option<WreathMeta> {
    ctx.group.wreath_meta().cloned()
}

fn wreath_or_skip(ctx: &Ctx, nontrivial: bool) -> std::result::Result<WreathMeta, Finding> {
    match wreath_meta(ctx) {
        None => Err(Finding::Skip("not a wreath product".into())),
        Some(m) if nontrivial && m.bottom().order() < 2 => Err(Finding::Skip("bottom group is trivial".into())),
        Some(m) => Ok(m),
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Elements of `B` with every coordinate in `Z(G)`.
fn base_center_mask(w: &Group, meta: &WreathMeta) -> Mask {
    let z = center(meta.bottom());
    let mut m = Mask::empty(w.order());
    for x in 0..meta.base_order() {
        if meta.coords(x).0.iter().all(|&c| z.contains(c)) {
            m.insert(x);
        }
    }
    m
}

fn wreath_base_centralizer(ctx: &mut Ctx) -> Result<Finding> {
    let meta = match wreath_or_skip(ctx, true) {
        Ok(m) => m,
        Err(f) => return Ok(f),
    };
    let w = ctx.group.clone();
    let b = meta.base_subgroup(&w);
    let cb = centralizer(&w, &b);
    let zb = base_center_mask(&w, &meta);
    if cb.mask() != &zb {
        return Ok(ctx.fail("C_W(B) differs from Z(B)", &[("B", &b), ("C_W(B)", &cb)]));
    }
    let (order, z, n) = (meta.bottom().order(), center(meta.bottom()).order(), meta.top_order() as u32);
    let formula = big(order).pow(n) * big(z).pow(n);
    let m = crate::cd::measure(&w, &b);
    ctx.note("m_W(B)", &m);
    if m.value() != &formula {
        return Ok(ctx.fail(format!("m_W(B) = {m}, formula gives {formula}"), &[("B", &b)]));
    }
    Ok(Finding::Pass)
}

fn wreath_center(ctx: &mut Ctx) -> Result<Finding> {
    let meta = match wreath_or_skip(ctx, true) {
        Ok(m) => m,
        Err(f) => return Ok(f),
    };
    let w = ctx.group.clone();
    let zw = center(&w);
    let diag = meta.diagonal_subgroup(&w, &center(meta.bottom()));
    if zw != diag {
        return Ok(ctx.fail("Z(W) is not the diagonal of Z(B)", &[("Z(W)", &zw), ("diag Z(B)", &diag)]));
    }
    let (order, z, n) = (meta.bottom().order(), center(meta.bottom()).order(), meta.top_order());
    let formula = big(n) * big(order).pow(n as u32) * big(z);
    let m = crate::cd::measure(&w, &Subgroup::whole(&w));
    ctx.note("m_W(W)", &m);
    if m.value() != &formula {
        return Ok(ctx.fail(format!("m_W(W) = {m}, formula gives {formula}"), &[("W", &Subgroup::whole(&w))]));
    }
    Ok(Finding::Pass)
}

fn wreath_not_self(ctx: &mut Ctx) -> Result<Finding> {
    let meta = match wreath_or_skip(ctx, true) {
        Ok(m) => m,
        Err(f) => return Ok(f),
    };
    let (z, n) = (center(meta.bottom()).order(), meta.top_order());
    if n < 2 || big(z).pow(n as u32 - 1) <= big(n) {
        return Ok(Finding::Skip(format!("|Z(G)|^(n-1) = {z}^{} does not exceed n = {n}", n.saturating_sub(1))));
    }
    let w = ctx.group.clone();
    let b = meta.base_subgroup(&w);
    let whole = Subgroup::whole(&w);
    let (mb, mw) = (crate::cd::measure(&w, &b), crate::cd::measure(&w, &whole));
    ctx.note("m_W(B)", &mb);
    ctx.note("m_W(W)", &mw);
    if mb <= mw {
        return Ok(ctx.fail("m_W(B) does not exceed m_W(W)", &[("B", &b), ("W", &whole)]));
    }
    if w.order() <= ctx.limits.enumeration_limit {
        let census = ctx.census()?;
        let wi = census.subgroups().position(whole.mask()).expect("whole group");
        let in_cd = census.cd_indices().contains(&wi);
        let max = census.max_measure();
        ctx.note("max_measure", max);
        if in_cd {
            return Ok(ctx.fail("W is in CD(W)", &[("W", &whole)]));
        }
    }
    Ok(Finding::Pass)
}

/// `CD(B)` and `CL(B)` as census indices, computed inside the census of `W`.
fn base_lattices(census: &SubgroupCensus, base: &Mask) -> (u128, Vec<usize>, Vec<usize>) {
    let (max, cd) = census.relative_cd(base);
    let cl = cd
        .iter()
        .copied()
        .filter(|&i| census.centralizer(i).intersection(base).is_subset(census.subgroups().get(i).mask()))
        .collect();
    (max, cd, cl)
}

fn wreath_self_c2(ctx: &mut Ctx) -> Result<Finding> {
    let meta = match wreath_or_skip(ctx, true) {
        Ok(m) => m,
        Err(f) => return Ok(f),
    };
    if meta.top_order() != 2 {
        return Ok(Finding::Skip("top group is not C2".into()));
    }
    let bottom = meta.bottom().clone();
    if center(&bottom).order() != 2 {
        return Ok(Finding::Skip("|Z(G)| is not 2".into()));
    }
    let gc = SubgroupCensus::enumerate(&bottom, &ctx.limits)?;
    let gi = gc.subgroups().position(&bottom.full_mask()).expect("whole group");
    if !gc.cd_indices().contains(&gi) {
        return Ok(Finding::Skip("G is not in CD(G)".into()));
    }
    let w = ctx.group.clone();
    let base = meta.base_mask();
    let census = ctx.census()?;
    let cd = census.cd_indices();
    let wi = census.subgroups().position(&w.full_mask()).expect("whole group");
    let (max_b, cd_b, _) = base_lattices(census, &base);
    let max = census.max_measure();
    let (n_cd, n_cdb) = (cd.len(), cd_b.len());
    let missing = cd_b.iter().copied().find(|i| !cd.contains(i));
    let in_cd = cd.contains(&wi);
    let missing = missing.map(|i| census.subgroups().get(i).clone());
    ctx.note("max_measure", max);
    ctx.note("max_measure_base", max_b);
    ctx.note("members", n_cd);
    ctx.note("base_members", n_cdb);
    if !in_cd {
        return Ok(ctx.fail("W is not in CD(W)", &[("W", &Subgroup::whole(&w))]));
    }
    if let Some(u) = missing {
        return Ok(ctx.fail("member of CD(B) is not in CD(W)", &[("U", &u)]));
    }
    Ok(Finding::Pass)
}

fn wreath_cd_collapse(ctx: &mut Ctx) -> Result<Finding> {
    let meta = match wreath_or_skip(ctx, true) {
        Ok(m) => m,
        Err(f) => return Ok(f),
    };
    let (z, p) = (center(meta.bottom()).order(), meta.top_order());
    if !is_prime(p) {
        return Ok(Finding::Skip(format!("top degree {p} is not prime")));
    }
    if z < 2 {
        return Ok(Finding::Skip("Z(G) is trivial".into()));
    }
    if z <= 2 && p <= 2 {
        return Ok(Finding::Skip("|Z(G)| = p = 2".into()));
    }
    let w = ctx.group.clone();
    let base = meta.base_mask();
    let census = ctx.census()?;
    let cd = census.cd_indices();
    let cl: Vec<usize> = cd.iter().copied().filter(|&i| census.centralizer(i).is_subset(census.subgroups().get(i).mask())).collect();
    let (_, cd_b, cl_b) = base_lattices(census, &base);
    let same_cd = mask_set(census, &cd) == mask_set(census, &cd_b);
    let same_cl = mask_set(census, &cl) == mask_set(census, &cl_b);
    let stray = cd.iter().chain(&cd_b).copied().find(|i| !(cd.contains(i) && cd_b.contains(i)));
    let stray = stray.map(|i| census.subgroups().get(i).clone());
    let (n_cd, n_cl) = (cd.len(), cl.len());
    ctx.note("members", n_cd);
    ctx.note("centrally_large", n_cl);
    if !same_cd {
        let u = stray.unwrap_or_else(|| Subgroup::trivial(&w));
        return Ok(ctx.fail("CD(W) differs from CD(B)", &[("U", &u)]));
    }
    if !same_cl {
        return Ok(ctx.fail("CL(W) differs from CL(B)", &[]));
    }
    Ok(Finding::Pass)
}

fn wreath_mmm(ctx: &mut Ctx) -> Result<Finding> {
    let meta = match wreath_or_skip(ctx, true) {
        Ok(m) => m,
        Err(f) => return Ok(f),
    };
    let (z, p) = (center(meta.bottom()).order(), meta.top_order());
    if !is_prime(p) {
        return Ok(Finding::Skip(format!("top degree {p} is not prime")));
    }
    if z < 2 {
        return Ok(Finding::Skip("Z(G) is trivial".into()));
    }
    if meta.bottom().order() == 2 && p == 2 {
        return Ok(Finding::Skip("W is D8".into()));
    }
    let base = meta.base_mask();
    let census = ctx.census()?;
    for i in census.cd_indices() {
        let u = census.subgroups().get(i);
        if !u.mask().is_subset(&base) && !census.centralizer(i).is_subset(&base) {
            let u = u.clone();
            return Ok(ctx.fail("member U with U and C_W(U) both outside B", &[("U", &u)]));
        }
    }
    Ok(Finding::Pass)
}

fn d12_counterexample(ctx: &mut Ctx) -> Result<Finding> {
    if ctx.group.provenance() != &Provenance::NamedFamily(Family::Dihedral, 12) {
        return Ok(Finding::Skip("group is not D12".into()));
    }
    let g = ctx.group.clone();
    let r = g.elements().find(|&x| g.element_order(x) == 6).expect("D12 has an element of order 6");
    let rr = closure(&g, &[r]);
    let whole = Subgroup::whole(&g);
    let (mg, mr) = (crate::cd::measure(&g, &whole), crate::cd::measure(&g, &rr));
    ctx.note("m_G(G)", &mg);
    ctx.note("m_G(<r>)", &mr);
    if mg.value() != &big(24) || mr.value() != &big(36) {
        return Ok(ctx.fail("measures of D12 or <r> are not 24 and 36", &[("G", &whole), ("<r>", &rr)]));
    }
    let w = crate::products::wreath_cyclic(&g, 2, ctx.limits.order_cap)?;
    let meta = w.wreath_meta().expect("wreath").clone();
    let u = closure(&w, &[meta.pack(&[r, 0], 0), meta.pack(&[0, r], 0)]);
    let ww = Subgroup::whole(&w);
    let (mw, mu) = (crate::cd::measure(&w, &ww), crate::cd::measure(&w, &u));
    ctx.note("m_W(W)", &mw);
    ctx.note("m_W(<r> x <r>)", &mu);
    let self_centralizing = u.is_subgroup_of(&centralizer(&w, &u));
    if mw.value() != &big(576) || mu.value() < &big(1296) || !self_centralizing || mu <= mw {
        return Ok(Finding::Fail(witness(&w, "wreath measures do not separate U from W", &[("U", &u), ("W", &ww)])));
    }
    Ok(Finding::Pass)
}

fn g32_nonnormal(ctx: &mut Ctx) -> Result<Finding> {
    if ctx.group.provenance() != &Provenance::CorpusFixture("g32".into()) {
        return Ok(Finding::Skip("group is not the g32 fixture".into()));
    }
    let g = ctx.group.clone();
    let (a, b, d) = (G32_A, G32_B, G32_D);
    let x = closure(&g, &[a, b]);
    let da = g.mul(d, a);
    let da3 = g.mul(d, g.pow(a, 3));
    let others = [closure(&g, &[b, da]), closure(&g, &[b, da3])];
    let census = ctx.census()?;
    let cd = census.cd_indices();
    let in_cd = |s: &Subgroup| census.subgroups().position(s.mask()).is_some_and(|i| cd.contains(&i));
    let all_subnormal = cd.iter().all(|&i| subnormal_defect(&g, census.subgroups().get(i)).is_some());
    let max = census.max_measure();
    let n = cd.len();
    let x_in = in_cd(&x);
    let others_in = others.iter().all(in_cd);
    ctx.note("max_measure", max);
    ctx.note("members", n);
    if !x_in {
        return Ok(ctx.fail("<a,b> is not in CD(G)", &[("X", &x)]));
    }
    if normalizer(&g, &x).contains(d) || is_normal(&g, &x) {
        return Ok(ctx.fail("d normalizes <a,b>", &[("X", &x)]));
    }
    let defect = subnormal_defect(&g, &x);
    ctx.note("defect(<a,b>)", defect.map_or("none".to_string(), |d| d.to_string()));
    if defect != Some(2) {
        return Ok(ctx.fail("defect of <a,b> is not 2", &[("X", &x)]));
    }
    if !others_in {
        return Ok(ctx.fail("<b,da> or <b,da^3> is not in CD(G)", &[("<b,da>", &others[0]), ("<b,da^3>", &others[1])]));
    }
    if let Some(s) = others.iter().find(|s| is_normal(&g, s)) {
        return Ok(ctx.fail("expected a non-normal member", &[("U", s)]));
    }
    if !all_subnormal {
        return Ok(ctx.fail("a member of CD(G) is not subnormal", &[]));
    }
    Ok(Finding::Pass)
}

fn ut_not_self(ctx: &mut Ctx) -> Result<Finding> {
    let n = match ctx.group.provenance() {
        Provenance::NamedFamily(Family::Unitriangular, n) => *n,
        Provenance::CorpusFixture(name) if name == "ut52" => 5,
        _ => return Ok(Finding::Skip("group is not UT(n,2)".into())),
    };
    if n < 4 {
        return Ok(Finding::Skip("the corner subgroup only beats G for n >= 4".into()));
    }
    let g = ctx.group.clone();
    let (x, y) = (n / 2, n - n / 2);
    let a = unitriangular_corner(&g, n);
    let whole = Subgroup::whole(&g);
    let (ma, mg) = (crate::cd::measure(&g, &a), crate::cd::measure(&g, &whole));
    ctx.note("|A|", a.order());
    ctx.note("m(A)", &ma);
    ctx.note("m(G)", &mg);
    let expected_g = BigUint::from(2u32).pow((n * (n - 1) / 2 + 1) as u32);
    let bound_a = BigUint::from(2u32).pow((2 * x * y) as u32);
    if !a.is_abelian(&g) || a.order() != 1 << (x * y) {
        return Ok(ctx.fail("corner subgroup is not abelian of order 2^(xy)", &[("A", &a)]));
    }
    if mg.value() != &expected_g || ma.value() < &bound_a || ma <= mg {
        return Ok(ctx.fail("m(A) does not exceed m(G)", &[("A", &a), ("G", &whole)]));
    }
    Ok(Finding::Pass)
}

fn iterated_c2_wreath(g: &Group) -> bool {
    match g.wreath_meta() {
        Some(m) => m.top_order() == 2 && (m.bottom().order() == 2 || iterated_c2_wreath(m.bottom())),
        None => false,
    }
}

fn embed_2group(ctx: &mut Ctx) -> Result<Finding> {
    if !iterated_c2_wreath(&ctx.group) {
        return Ok(Finding::Skip("not an iterated wreath product of C2 by C2".into()));
    }
    let meta = wreath_meta(ctx).expect("checked");
    let bottom = meta.bottom().clone();
    let bc = SubgroupCensus::enumerate(&bottom, &ctx.limits)?;
    let bottom_in = bc.cd_indices().contains(&bc.subgroups().position(&bottom.full_mask()).expect("whole"));
    let z = center(&bottom).order();
    let g = ctx.group.clone();
    let census = ctx.census()?;
    let wi = census.subgroups().position(&g.full_mask()).expect("whole");
    let in_cd = census.cd_indices().contains(&wi);
    let max = census.max_measure();
    ctx.note("max_measure", max);
    ctx.note("bottom_in_own_cd", bottom_in);
    if !bottom_in || z != 2 {
        return Ok(ctx.fail("bottom group does not satisfy G in CD(G) with |Z(G)| = 2", &[]));
    }
    if !in_cd {
        return Ok(ctx.fail("E is not in CD(E)", &[("E", &Subgroup::whole(&g))]));
    }
    Ok(Finding::Pass)
}

fn is_simple(g: &Group) -> bool {
    if g.order() < 2 {
        return false;
    }
    let whole = Subgroup::whole(g);
    g.elements().skip(1).all(|x| normal_closure(g, &whole, &closure(g, &[x])).order() == g.order())
}

fn simple_cd(ctx: &mut Ctx) -> Result<Finding> {
    let g = ctx.group.clone();
    if !is_simple(&g) {
        return Ok(Finding::Skip("group is not simple".into()));
    }
    let z = center(&g);
    let mut expected = vec![z.mask().clone(), g.full_mask()];
    expected.sort();
    expected.dedup();
    let census = ctx.census()?;
    let got = mask_set(census, &census.cd_indices());
    let n = got.len();
    ctx.note("members", n);
    if got != expected {
        return Ok(ctx.fail("CD(S) is not {Z(S), S}", &[("Z(S)", &z)]));
    }
    Ok(Finding::Pass)
}

fn sym_cd(ctx: &mut Ctx) -> Result<Finding> {
    match ctx.group.provenance() {
        Provenance::NamedFamily(Family::Symmetric, n) if *n >= 4 => {}
        _ => return Ok(Finding::Skip("group is not S_n with n >= 4".into())),
    }
    let g = ctx.group.clone();
    let mut expected = vec![Subgroup::trivial(&g).mask().clone(), g.full_mask()];
    expected.sort();
    let census = ctx.census()?;
    let got = mask_set(census, &census.cd_indices());
    let max = census.max_measure();
    ctx.note("max_measure", max);
    if got != expected {
        return Ok(ctx.fail("CD(S_n) is not {1, S_n}", &[]));
    }
    Ok(Finding::Pass)
}

fn measure_lemmas(ctx: &mut Ctx) -> Result<Finding> {
    let g = ctx.group.clone();
    let census = ctx.census()?;
    let subs = census.subgroups();
    let n = subs.len();
    for i in 0..n {
        let c = census.centralizer_index(i);
        let (mh, mc) = (census.measure(i), census.measure(c));
        if mh > mc || (mh == mc && census.centralizer(c) != subs.get(i).mask()) {
            let h = subs.get(i).clone();
            return Ok(Finding::Fail(witness(&g, "m(H) <= m(C(H)) or its equality case fails", &[("H", &h)])));
        }
    }
    let failure = (0..n).into_par_iter().find_map_first(|i| {
        let h = subs.get(i);
        for j in i + 1..n {
            let k = subs.get(j);
            let meet = h.mask().intersection(k.mask());
            let mi = subs.position(&meet).expect("intersections are subgroups");
            let joined = join(&g, h, k);
            let ji = subs.position(joined.mask()).expect("joins are subgroups");
            let lhs = census.measure(i) * census.measure(j);
            let rhs = census.measure(ji) * census.measure(mi);
            if lhs > rhs {
                return Some((i, j, "m(H)m(K) exceeds m(<H,K>)m(H^K)"));
            }
            let hk_is_join = h.order() * k.order() / meet.count() == joined.order();
            let (ch, ck) = (census.centralizer(i), census.centralizer(j));
            let chk = ch.count() * ck.count() / ch.intersection(ck).count();
            let cent_product = chk == census.centralizer(mi).count();
            if (lhs == rhs) != (hk_is_join && cent_product) {
                return Some((i, j, "equality case of the product inequality fails"));
            }
        }
        None
    });
    if let Some((i, j, why)) = failure {
        let (h, k) = (subs.get(i).clone(), subs.get(j).clone());
        return Ok(Finding::Fail(witness(&g, why, &[("H", &h), ("K", &k)])));
    }
    ctx.note("pairs_checked", n * (n - 1) / 2);
    Ok(Finding::Pass)
}

fn centralizer_identities(ctx: &mut Ctx) -> Result<Finding> {
    let g = ctx.group.clone();
    let z = center(&g);
    let census = ctx.census()?;
    for i in 0..census.len() {
        let h = census.subgroups().get(i);
        let c = census.centralizer(i);
        let cc = census.centralizer(census.centralizer_index(i));
        let nh = normalizer(&g, h);
        let normal = nh.order() == g.order();
        let defect = subnormal_defect(&g, h);
        let bad = if !h.mask().is_subset(cc) {
            Some("H is not inside C(C(H))")
        } else if !c.is_subset(nh.mask()) {
            Some("C(H) is not inside N(H)")
        } else if !z.mask().is_subset(c) {
            Some("Z(G) is not inside C(H)")
        } else if defect.is_some_and(|d| d <= 1) != normal {
            Some("defect <= 1 disagrees with normality")
        } else {
            None
        };
        if let Some(why) = bad {
            let h = h.clone();
            return Ok(Finding::Fail(witness(&g, why, &[("H", &h)])));
        }
    }
    Ok(Finding::Pass)
}

fn direct_centralizer(ctx: &mut Ctx) -> Result<Finding> {
    let Some((a, b)) = direct_factors(ctx) else {
        return Ok(Finding::Skip("not a direct product".into()));
    };
    let g = ctx.group.clone();
    let meta = g.direct_meta().expect("checked").clone();
    let census = ctx.census()?;
    for i in 0..census.len() {
        let u = census.subgroups().get(i);
        let (pa, pb) = (meta.projection(u, 0), meta.projection(u, 1));
        let (ca, cb) = (centralizer(&a, &pa), centralizer(&b, &pb));
        let expected = meta.product_subgroup(&g, &ca, &cb);
        if census.centralizer(i) != expected.mask() {
            let u = u.clone();
            return Ok(Finding::Fail(witness(&g, "C(U) is not C(pi_1 U) x C(pi_2 U)", &[("U", &u)])));
        }
        let mu = census.measure(i);
        let bound = (pa.order() * ca.order()) as u128 * (pb.order() * cb.order()) as u128;
        let is_product = u.order() == pa.order() * pb.order();
        if mu > bound || (mu == bound) != is_product {
            let u = u.clone();
            return Ok(Finding::Fail(witness(&g, "m(U) versus m(pi_1 U) m(pi_2 U) fails", &[("U", &u)])));
        }
    }
    Ok(Finding::Pass)
}

fn wreath_commuting(ctx: &mut Ctx) -> Result<Finding> {
    let meta = match wreath_or_skip(ctx, true) {
        Ok(m) => m,
        Err(f) => return Ok(f),
    };
    let w = ctx.group.clone();
    let gb = meta.bottom().clone();
    let n = meta.top_order();
    let sigma = meta.sigma();
    let mut commuting_pairs = 0usize;
    for fx in 0..meta.base_order() {
        let fs = w.mul(fx, sigma);
        let (f, _) = meta.coords(fx);
        let total = f.iter().fold(0, |acc, &x| gb.mul(acc, x));
        let mut first_coords = Mask::empty(gb.order());
        for bx in 0..meta.base_order() {
            if !w.commutes(fs, bx) {
                continue;
            }
            commuting_pairs += 1;
            let (b, _) = meta.coords(bx);
            let mut prefix = 0;
            for i in 1..n {
                prefix = gb.mul(prefix, f[i - 1]);
                if b[i] != gb.conj(b[0], prefix) {
                    return Ok(Finding::Fail(witness(&w, format!("b({}) is not b(1)^(f(1)...f({i}))", i + 1), &[])));
                }
            }
            if !gb.commutes(b[0], total) {
                return Ok(Finding::Fail(witness(&w, "b(1) does not commute with f(1)...f(n)", &[])));
            }
            first_coords.insert(b[0]);
        }
        if first_coords != centralizer_mask(&gb, &[total]) {
            return Ok(Finding::Fail(witness(&w, "pi_1(C_B(f sigma)) differs from C_G(f(1)...f(n))", &[])));
        }
    }
    ctx.note("commuting_pairs", commuting_pairs);
    Ok(Finding::Pass)
}

fn prime_wreath(ctx: &Ctx) -> std::result::Result<WreathMeta, Finding> {
    let meta = wreath_or_skip(ctx, true)?;
    if !is_prime(meta.top_order()) {
        return Err(Finding::Skip(format!("top degree {} is not prime", meta.top_order())));
    }
    Ok(meta)
}

fn wreath_index(ctx: &mut Ctx) -> Result<Finding> {
    let meta = match prime_wreath(ctx) {
        Ok(m) => m,
        Err(f) => return Ok(f),
    };
    let p = meta.top_order();
    let base = meta.base_mask();
    let g = ctx.group.clone();
    let census = ctx.census()?;
    for u in census.subgroups() {
        let inside = u.mask().intersection(&base).count();
        let expected = if u.mask().is_subset(&base) { 1 } else { p };
        if u.order() != expected * inside {
            let u = u.clone();
            return Ok(Finding::Fail(witness(&g, "[U : U ^ B] is neither 1 nor p as predicted", &[("U", &u)])));
        }
    }
    Ok(Finding::Pass)
}

fn wreath_orders(ctx: &mut Ctx) -> Result<Finding> {
    let meta = match prime_wreath(ctx) {
        Ok(m) => m,
        Err(f) => return Ok(f),
    };
    let p = meta.top_order();
    let base = meta.base_mask();
    let w = ctx.group.clone();
    let gb = meta.bottom().clone();
    let census = ctx.census()?;
    let (mut case1, mut case2) = (0usize, 0usize);
    for i in 0..census.len() {
        let u = census.subgroups().get(i);
        let c = census.centralizer(i);
        let u_in = u.mask().is_subset(&base);
        let c_in = c.is_subset(&base);
        if c_in {
            continue;
        }
        let ok = if u_in {
            case1 += 1;
            let pi = meta.base_projection(u, 0);
            let cg = centralizer(&gb, &pi);
            u.order() == pi.order() && BigUint::from(c.count()) == big(p) * big(cg.order()).pow(p as u32)
        } else {
            case2 += 1;
            let ub = Subgroup::from_mask(&w, u.mask().intersection(&base));
            let cb = Subgroup::from_mask(&w, c.intersection(&base));
            u.order() == p * meta.base_projection(&ub, 0).order() && c.count() == p * meta.base_projection(&cb, 0).order()
        };
        if !ok {
            let u = u.clone();
            return Ok(Finding::Fail(witness(&w, "orders of U or C_W(U) disagree with the projection formulas", &[("U", &u)])));
        }
    }
    ctx.note("case_base", case1);
    ctx.note("case_outside", case2);
    Ok(Finding::Pass)
}
