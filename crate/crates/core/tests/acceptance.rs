//! One line per acceptance criterion. Built with `harness = false` so the
//! lines are printed even when everything passes.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use cdlat::corpus::unitriangular_corner;
use cdlat::subgroup::{all_subgroups, center, closure, Limits, Subgroup};
use cdlat::theorems::{check_info, run_check};
use cdlat::{cd_lattice, lattice_isomorphic, measure, Group, GroupSpec, Outcome};
use common::*;

#[derive(Default)]
struct Ck {
    failures: Vec<String>,
    /// Literal expectations that the engine and the oracle both contradict.
    disputed: Vec<String>,
    notes: Vec<String>,
}

impl Ck {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn ok(&mut self, what: &str, cond: bool) {
        if !cond {
            self.failures.push(what.to_string());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn passed(&mut self, id: &str, spec: &str) {
        let v = run_check(id, &GroupSpec::parse(spec).unwrap(), &Limits::default()).unwrap();
        if v.outcome != Outcome::Passed {
            self.failures.push(format!("{id} on {spec}: {:?} {:?} {:?}", v.outcome, v.note, v.witness));
        }
    }
}

fn limits() -> Limits {
    Limits::default()
}

fn cd_elements(g: &Group) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = cd_lattice(g, &limits()).unwrap().subgroups().map(|s| s.elements()).collect();
    v.sort();
    v
}

fn whole(g: &Group) -> Vec<usize> {
    (0..g.order()).collect()
}

fn c1(ck: &mut Ck) {
    let g = build("S4");
    let res = cd_lattice(&g, &limits()).unwrap();
    ck.eq("CD(S4)", cd_elements(&g), vec![vec![0], whole(&g)]);
    ck.eq("M*(S4)", res.max_measure.to_string(), "24".into());
    let (max, cd) = naive_cd(&g, &subgroups_by_generators(&g, 3));
    ck.eq("oracle M*(S4)", max, 24);
    ck.eq("oracle CD(S4)", cd, vec![vec![0], whole(&g)]);

    let three_cycles: Vec<usize> = (0..24).filter(|&x| g.element_order(x) == 3).collect();
    let a4 = closure(&g, &three_cycles);
    ck.eq("|A4|", a4.order(), 12);
    let engine = measure(&g, &a4).to_string();
    let oracle = naive_measure(&g, &a4.elements());
    ck.eq("m(A4) engine vs oracle", engine.clone(), oracle.to_string());
    if engine != "16" {
        ck.disputed.push(format!("m(A4) = {engine} (C_S4(A4) = 1), stated value 16"));
    }
    let v4 = closure(&g, &(0..24).filter(|&x| g.element_order(x) == 2 && a4.contains(x)).collect::<Vec<_>>());
    ck.note(format!("m(A4) = {engine}, m(V4) = {}", measure(&g, &v4)));
}

fn c2(ck: &mut Ck) {
    let g = build("S3");
    let a3: Vec<usize> = (0..6).filter(|&x| g.element_order(x) != 2).collect();
    ck.eq("CD(S3)", cd_elements(&g), vec![a3]);
    ck.eq("M*(S3)", cd_lattice(&g, &limits()).unwrap().max_measure.to_string(), "9".into());
    for x in (0..6).filter(|&x| g.element_order(x) == 2) {
        ck.eq("m(order 2)", measure(&g, &closure(&g, &[x])).to_string(), "4".into());
        ck.eq("oracle m(order 2)", naive_measure(&g, &[0, x]), 4);
    }
    ck.eq("oracle M*(S3)", naive_cd(&g, &subgroups_by_subsets(&g)).0, 9);
}

fn c3(ck: &mut Ck) {
    let mut results = Vec::new();
    for spec in ["D8", "Q8"] {
        let g = build(spec);
        let res = cd_lattice(&g, &limits()).unwrap();
        let mut orders: Vec<usize> = res.subgroups().map(|s| s.order()).collect();
        orders.sort();
        ck.eq(&format!("CD({spec}) orders"), orders, vec![2, 4, 4, 4, 8]);
        ck.eq(&format!("M*({spec})"), res.max_measure.to_string(), "16".into());
        let z = center(&g);
        ck.ok(&format!("Z({spec}) in CD"), res.contains(z.mask()));
        let (max, cd) = naive_cd(&g, &subgroups_by_subsets(&g));
        ck.eq(&format!("oracle CD({spec})"), (max, cd), (16, cd_elements(&g)));
        results.push(res);
    }
    ck.eq("lattice_isomorphic(D8, Q8)", lattice_isomorphic(&results[0], &results[1]).unwrap(), true);
}

fn c4(ck: &mut Ck) {
    let mut specs: BTreeSet<&str> = BTreeSet::new();
    for id in ["cd-sublattice", "direct-cd", "wreath-base-centralizer", "simple-cd"] {
        specs.extend(check_info(id).unwrap().corpus.iter().copied());
    }
    let mut count = 0;
    for spec in specs {
        let g = build(spec);
        if g.order() > limits().enumeration_limit || !is_abelian_naive(&g) {
            continue;
        }
        count += 1;
        let res = cd_lattice(&g, &limits()).unwrap();
        ck.eq(&format!("CD({spec})"), cd_elements(&g), vec![whole(&g)]);
        ck.eq(&format!("M*({spec})"), res.max_measure.to_string(), (g.order() * g.order()).to_string());
    }
    ck.note(format!("{count} abelian groups"));
}

fn c5(ck: &mut Ck) {
    ck.passed("direct-cd", "S3 x D8");
    ck.passed("direct-cl", "S3 x D8");
    let g = build("S3 x D8");
    let meta = g.direct_meta().unwrap().clone();
    let (a, b) = (meta.factors()[0].clone(), meta.factors()[1].clone());
    let (ra, rb, rg) = (cd_lattice(&a, &limits()).unwrap(), cd_lattice(&b, &limits()).unwrap(), cd_lattice(&g, &limits()).unwrap());
    let mut by_product: Vec<Vec<usize>> =
        ra.subgroups().flat_map(|x| rb.subgroups().map(|y| meta.product_subgroup(&g, x, y).elements()).collect::<Vec<_>>()).collect();
    by_product.sort();
    ck.eq("CD via factors vs enumeration", by_product.clone(), cd_elements(&g));
    let cl = |r: &cdlat::CdResult| r.centrally_large().cloned().collect::<Vec<Subgroup>>();
    let mut cl_product: Vec<Vec<usize>> =
        cl(&ra).iter().flat_map(|x| cl(&rb).iter().map(|y| meta.product_subgroup(&g, x, y).elements()).collect::<Vec<_>>()).collect();
    cl_product.sort();
    let mut cl_direct: Vec<Vec<usize>> = cl(&rg).iter().map(|s| s.elements()).collect();
    cl_direct.sort();
    ck.eq("CL via factors vs enumeration", cl_product, cl_direct);
    let (max, cd) = naive_cd(&g, &subgroups_by_generators(&g, 3));
    ck.eq("oracle CD(S3 x D8)", (max, cd), (144, by_product));
    ck.note(format!("{} members, {} subgroups", rg.len(), rg.subgroups_enumerated));
}

fn c6(ck: &mut Ck) {
    ck.passed("g32-nonnormal", "corpus:g32");
    let g = build("corpus:g32");
    let res = cd_lattice(&g, &limits()).unwrap();
    ck.ok("every member subnormal", res.members.iter().all(|m| m.defect.is_some()));
    let x = closure(&g, &[cdlat::corpus::G32_A, cdlat::corpus::G32_B]);
    let m = res.members.iter().find(|m| m.subgroup.mask() == x.mask());
    ck.ok("<a,b> in CD", m.is_some());
    if let Some(m) = m {
        ck.eq("<a,b> normal", m.is_normal, false);
        ck.eq("<a,b> defect", m.defect, Some(2));
    }
    let (max, cd) = naive_cd(&g, &subgroups_by_generators(&g, 3));
    ck.eq("oracle CD(g32)", cd, cd_elements(&g));
    ck.ok("oracle: <a,b> attains M*", naive_measure(&g, &x.elements()) == max);
    ck.note(format!("M* = {max}, {} members", res.len()));
}

fn c7(ck: &mut Ck) {
    ck.passed("d12-counterexample", "D12");
    let g = build("D12");
    let r = (0..12).find(|&x| g.element_order(x) == 6).unwrap();
    ck.eq("oracle m(G)", naive_measure(&g, &whole(&g)), 24);
    ck.eq("oracle m(<r>)", naive_measure(&g, &members(&naive_closure(&g, &[r]))), 36);
    ck.ok("G not in CD(G)", !cd_lattice(&g, &limits()).unwrap().contains(&g.full_mask()));
    let w = build("D12 wr C2");
    let meta = w.wreath_meta().unwrap().clone();
    let u = members(&naive_closure(&w, &[meta.pack(&[r, 0], 0), meta.pack(&[0, r], 0)]));
    let (mw, mu) = (naive_measure(&w, &whole(&w)), naive_measure(&w, &u));
    ck.eq("oracle m_W(W)", mw, 576);
    ck.ok("oracle m_W(<r> x <r>) >= 1296", mu >= 1296);
    ck.ok("witness beats W", mu > mw);
    ck.note(format!("m_W(W) = {mw}, m_W(U) = {mu}"));
}

fn c8(ck: &mut Ck) {
    for spec in ["C2 wr C2", "C2 wr C3", "C4 wr C2", "C6 wr C2", "S3 wr C2", "D8 wr C2", "D12 wr C2"] {
        ck.passed("wreath-base-centralizer", spec);
        ck.passed("wreath-center", spec);
        let w = build(spec);
        let meta = w.wreath_meta().unwrap().clone();
        let g = meta.bottom().clone();
        let n = meta.top_order() as u32;
        let z = naive_centralizer(&g, &whole(&g)).len() as u128;
        let go = g.order() as u128;
        let base: Vec<usize> = (0..meta.base_order()).collect();
        ck.eq(&format!("{spec} m_W(B)"), naive_measure(&w, &base), go.pow(n) * z.pow(n));
        ck.eq(&format!("{spec} m_W(W)"), naive_measure(&w, &whole(&w)), n as u128 * go.pow(n) * z);
        let zw = naive_centralizer(&w, &whole(&w));
        ck.ok(&format!("{spec} Z(W) diagonal"), zw.iter().all(|&x| {
            let (f, k) = meta.coords(x);
            k == 0 && f.iter().all(|&c| c == f[0])
        }) && zw.len() as u128 == z);
    }
}

fn c9(ck: &mut Ck) {
    ck.passed("wreath-self-c2", "D8 wr C2");
    let w = build("D8 wr C2");
    let subs = all_subgroups(&w, &limits()).unwrap();
    let oracle_max = subs.iter().map(|s| naive_measure(&w, &s.elements())).max().unwrap();
    ck.eq("oracle M*(W) = m(W)", oracle_max, naive_measure(&w, &whole(&w)));
    ck.note(format!("{} subgroups enumerated, M* = {oracle_max}", subs.len()));
}

fn c10(ck: &mut Ck) {
    for spec in ["C4 wr C2", "C2 wr C3", "C6 wr C2"] {
        ck.passed("wreath-cd-collapse", spec);
    }
    let w = build("C2 wr C3");
    let base: Vec<usize> = (0..w.wreath_meta().unwrap().base_order()).collect();
    ck.eq("CD(C2 wr C3)", cd_elements(&w), vec![base]);
    let w = build("C4 wr C2");
    let base: Vec<usize> = (0..w.wreath_meta().unwrap().base_order()).collect();
    ck.eq("CD(C4 wr C2)", cd_elements(&w), vec![base]);
}

fn c11(ck: &mut Ck) {
    ck.passed("ut52-not-self", "corpus:ut52");
    let g = build("corpus:ut52");
    let a = unitriangular_corner(&g, 5).elements();
    ck.eq("|A|", a.len(), 64);
    ck.ok("A abelian", a.iter().all(|&x| a.iter().all(|&y| g.mul(x, y) == g.mul(y, x))));
    let (ma, mg) = (naive_measure(&g, &a), naive_measure(&g, &whole(&g)));
    ck.eq("oracle m(G)", mg, 1 << 11);
    ck.ok("oracle m(A) >= 2^12", ma >= 1 << 12);
    ck.note(format!("m(A) = {ma}, m(G) = {mg}"));
}

fn c12(ck: &mut Ck) {
    ck.passed("embed-2group", "(C2 wr C2) wr C2");
    let e = build("(C2 wr C2) wr C2");
    let subs = all_subgroups(&e, &limits()).unwrap();
    let oracle_max = subs.iter().map(|s| naive_measure(&e, &s.elements())).max().unwrap();
    ck.eq("oracle M*(E) = m(E)", oracle_max, naive_measure(&e, &whole(&e)));
    ck.note(format!("{} subgroups enumerated", subs.len()));
}

fn c13(ck: &mut Ck) {
    let mut specs: BTreeSet<&str> = BTreeSet::new();
    for id in ["cd-sublattice", "direct-cd", "wreath-commuting", "wreath-orders"] {
        specs.extend(check_info(id).unwrap().corpus.iter().copied());
    }
    specs.insert("C2 wr C4");
    let specs: Vec<&str> = specs
        .into_iter()
        .filter(|s| {
            let g = build(s);
            if g.wreath_meta().is_some() { g.order() <= 72 } else { g.order() <= 24 }
        })
        .collect();
    let checks = [
        "measure-lemmas", "cd-sublattice", "centralizer-identities", "cd-subnormal", "direct-centralizer",
        "wreath-commuting", "wreath-index", "wreath-orders",
    ];
    let mut runs = 0;
    for id in checks {
        let mut passed = 0;
        for spec in &specs {
            let v = run_check(id, &GroupSpec::parse(spec).unwrap(), &limits()).unwrap();
            match v.outcome {
                Outcome::Passed => passed += 1,
                Outcome::Skipped => {}
                Outcome::Failed => ck.failures.push(format!("{id} on {spec}: {:?}", v.witness)),
            }
            runs += 1;
        }
        ck.ok(&format!("{id} exercised"), passed > 0);
    }
    ck.note(format!("{} groups, {runs} runs", specs.len()));
}

fn c14(ck: &mut Ck) {
    let mut specs: BTreeSet<&str> = SMALL.iter().copied().collect();
    specs.extend(check_info("cd-sublattice").unwrap().corpus.iter().copied());
    let mut count = 0;
    for spec in specs {
        let g = build(spec);
        if g.order() > 16 {
            continue;
        }
        count += 1;
        let mut engine: Vec<Vec<usize>> = all_subgroups(&g, &limits()).unwrap().iter().map(|s| s.elements()).collect();
        engine.sort();
        ck.eq(spec, engine, subgroups_by_subsets(&g));
    }
    ck.note(format!("{count} groups"));
}

fn c15(ck: &mut Ck) {
    let dir = std::env::temp_dir();
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_cdlat"))
            .args(["verify", "all", "corpus", "--json", "-", "--threads", threads])
            .env("CDLAT_CACHE_DIR", &dir)
            .output()
            .unwrap()
    };
    let (a, b) = (run("1"), run("4"));
    ck.ok("exit status 0 with 1 thread", a.status.success());
    ck.ok("exit status 0 with 4 threads", b.status.success());
    ck.ok("byte-identical JSON", a.stdout == b.stdout && !a.stdout.is_empty());
    ck.note(format!("{} bytes", a.stdout.len()));
}

fn main() {
    type Criterion = (&'static str, fn(&mut Ck));
    let criteria: [Criterion; 15] = [
        ("CD(S4) = {1, S4}, M* = 24, m(A4)", c1),
        ("CD(S3) = {A3}, M* = 9", c2),
        ("CD(D8), CD(Q8) have 5 members and isomorphic lattices", c3),
        ("abelian groups: CD = {G}, M* = |G|^2", c4),
        ("CD(S3 x D8) = CD(S3) x CD(D8), same for CL", c5),
        ("g32 non-normal members, defect 2", c6),
        ("D12 and D12 wr C2 measures", c7),
        ("wreath measure, base centralizer and center formulas", c8),
        ("D8 wr C2 lies in its own lattice", c9),
        ("CD(W) = CD(B) for C4 wr C2, C2 wr C3, C6 wr C2", c10),
        ("UT(5,2) corner subgroup beats G", c11),
        ("(C2 wr C2) wr C2 lies in its own lattice", c12),
        ("property suites over small groups and wreaths", c13),
        ("enumeration agrees with subset filtration up to order 16", c14),
        ("verify-all JSON identical across thread counts", c15),
    ];
    let mut hard_failures = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let mut ck = Ck::default();
        let start = Instant::now();
        f(&mut ck);
        let ms = start.elapsed().as_millis();
        let status = if ck.failures.is_empty() && ck.disputed.is_empty() { "PASS" } else { "FAIL" };
        let mut detail = ck.notes.join("; ");
        if !ck.disputed.is_empty() {
            detail = format!("{detail}; disputed: {}", ck.disputed.join("; "));
        }
        if !ck.failures.is_empty() {
            detail = format!("{detail}; failures: {}", ck.failures.join("; "));
            hard_failures += 1;
        }
        println!("{status} criterion {:>2} ({ms} ms) {title}{}", i + 1, if detail.is_empty() { String::new() } else { format!(" [{detail}]") });
    }
    if hard_failures > 0 {
        std::process::exit(1);
    }
}
