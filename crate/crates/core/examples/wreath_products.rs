// Base group, center and measures of G wr C_n.

use cdlat::subgroup::{center, centralizer, Limits, Subgroup};
use cdlat::{cd_lattice, measure, GroupSpec};

pub fn run_example() -> cdlat::Result<()> {
    let limits = Limits::default();
    for spec in ["C2 wr C2", "C2 wr C3", "C4 wr C2", "S3 wr C2", "D8 wr C2", "D12 wr C2"] {
        let w = GroupSpec::parse(spec)?.build(&limits)?;
        let meta = w.wreath_meta().expect("wreath").clone();
        let b = meta.base_subgroup(&w);
        let z = center(&w);
        println!(
            "{spec:<10} |W| = {:<4} m(B) = {:<6} m(W) = {:<6} |Z(W)| = {} C_W(B) <= B: {}",
            w.order(),
            measure(&w, &b),
            measure(&w, &Subgroup::whole(&w)),
            z.order(),
            centralizer(&w, &b).is_subgroup_of(&b),
        );
    }

    let w = GroupSpec::parse("D8 wr C2")?.build(&limits)?;
    let cd = cd_lattice(&w, &limits)?;
    println!(
        "CD(D8 wr C2): {} members out of {} subgroups, W itself included: {}",
        cd.len(),
        cd.subgroups_enumerated,
        cd.contains(&w.full_mask())
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> cdlat::Result<()> {
    run_example()
}
