// The lattice of a direct product, computed two ways.

use cdlat::subgroup::Limits;
use cdlat::{cd_lattice, GroupSpec};

pub fn run_example() -> cdlat::Result<()> {
    let limits = Limits::default();
    let g = GroupSpec::parse("S3 x D8")?.build(&limits)?;
    let meta = g.direct_meta().expect("built as a product").clone();
    let (s3, d8) = (&meta.factors()[0], &meta.factors()[1]);

    let whole = cd_lattice(&g, &limits)?;
    let left = cd_lattice(s3, &limits)?;
    let right = cd_lattice(d8, &limits)?;
    println!("S3 x D8: order {}, {} subgroups", g.order(), whole.subgroups_enumerated);
    println!("M* = {} = {} * {}", whole.max_measure, left.max_measure, right.max_measure);

    let mut agree = 0;
    for x in left.subgroups() {
        for y in right.subgroups() {
            let p = meta.product_subgroup(&g, x, y);
            if whole.contains(p.mask()) {
                agree += 1;
            }
        }
    }
    println!("{agree} of {} members are products of factor members", whole.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> cdlat::Result<()> {
    run_example()
}
