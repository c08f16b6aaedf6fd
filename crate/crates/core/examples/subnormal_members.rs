// A 2-group whose lattice has members of subnormal defect 2.

use cdlat::corpus::{G32_A, G32_B, G32_D};
use cdlat::subgroup::{closure, subnormal_defect, Limits};
use cdlat::{cd_lattice, corpus_group};

pub fn run_example() -> cdlat::Result<()> {
    let limits = Limits::default();
    let g = corpus_group("g32", limits.order_cap)?;
    let cd = cd_lattice(&g, &limits)?;
    println!("g32: M* = {}, {} members", cd.max_measure, cd.len());
    for m in cd.members.iter().filter(|m| !m.is_normal) {
        println!("  non-normal member of order {} with defect {:?}", m.subgroup.order(), m.defect);
    }
    let x = closure(&g, &[G32_A, G32_B]);
    println!("<a,b>: in CD {}, defect {:?}", cd.contains(x.mask()), subnormal_defect(&g, &x));
    println!("d normalizes <a,b>: {}", cdlat::subgroup::normalizer(&g, &x).contains(G32_D));
    Ok(())
}

#[allow(dead_code)]
fn main() -> cdlat::Result<()> {
    run_example()
}
