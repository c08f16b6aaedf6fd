// Groups given by permutation generators.

use cdlat::subgroup::Limits;
use cdlat::{cd_lattice, Group, GroupSpec, PermutationGenSet};

pub fn run_example() -> cdlat::Result<()> {
    let limits = Limits::default();

    let gens = PermutationGenSet::from_cycle_lists(&[vec![vec![1, 2, 3, 4, 5, 6, 7]], vec![vec![2, 3, 5], vec![4, 7, 6]]])?;
    let f21 = Group::from_permutations(&gens, limits.order_cap)?;
    let cd = cd_lattice(&f21, &limits)?;
    println!("order {} nonabelian group: M* = {}, {} members", f21.order(), cd.max_measure, cd.len());

    let s4 = GroupSpec::parse("perm:[(1,2),(1,2,3,4)]")?.build(&limits)?;
    let perms = s4.permutations().expect("built from permutations");
    println!("perm:[(1,2),(1,2,3,4)] has order {}; element 5 is {}", s4.order(), perms[5]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> cdlat::Result<()> {
    run_example()
}
