// D8 and Q8 are not isomorphic but their lattices are.

use cdlat::subgroup::Limits;
use cdlat::{cd_lattice, lattice_isomorphic, GroupSpec};

pub fn run_example() -> cdlat::Result<()> {
    let limits = Limits::default();
    let d8 = GroupSpec::parse("D8")?.build(&limits)?;
    let q8 = GroupSpec::parse("Q8")?.build(&limits)?;
    let (a, b) = (cd_lattice(&d8, &limits)?, cd_lattice(&q8, &limits)?);
    println!("CD(D8): {} members, M* = {}", a.len(), a.max_measure);
    println!("CD(Q8): {} members, M* = {}", b.len(), b.max_measure);
    println!("groups isomorphic:   {}", cdlat::group::find_isomorphism(&d8, &q8)?.is_some());
    println!("lattices isomorphic: {}", lattice_isomorphic(&a, &b)?);

    for n in [12, 16, 24] {
        let d = GroupSpec::parse(&format!("D{n}"))?.build(&limits)?;
        let cd = cd_lattice(&d, &limits)?;
        println!("D{n}: M* = {}, member orders {:?}", cd.max_measure, cd.subgroups().map(|s| s.order()).collect::<Vec<_>>());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> cdlat::Result<()> {
    run_example()
}
