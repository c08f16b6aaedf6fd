// Lattices of small symmetric and alternating groups.
//
// ```bash
// cargo run --example symmetric_groups
// ```

use cdlat::subgroup::Limits;
use cdlat::{cd_lattice, measure, Family};

pub fn run_example() -> cdlat::Result<()> {
    let limits = Limits::default();
    for n in 3..=5 {
        let g = cdlat::named_group(Family::Symmetric, n, limits.order_cap)?;
        let cd = cd_lattice(&g, &limits)?;
        let orders: Vec<usize> = cd.subgroups().map(|s| s.order()).collect();
        println!(
            "S{n}: {} subgroups, M* = {}, member orders {orders:?}",
            cd.subgroups_enumerated, cd.max_measure
        );
    }

    // A4 sits inside S4 with trivial centralizer
    let s4 = cdlat::named_group(Family::Symmetric, 4, limits.order_cap)?;
    let a4 = cdlat::subgroup::closure(&s4, &s4.elements().filter(|&x| s4.element_order(x) == 3).collect::<Vec<_>>());
    println!("m_S4(A4) = {}", measure(&s4, &a4));
    Ok(())
}

#[allow(dead_code)]
fn main() -> cdlat::Result<()> {
    run_example()
}
