// UT(5,2) is too big to enumerate but one centralizer settles membership.

use cdlat::corpus::unitriangular_corner;
use cdlat::subgroup::{centralizer, Limits, Subgroup};
use cdlat::{corpus_group, measure};

pub fn run_example() -> cdlat::Result<()> {
    let g = corpus_group("ut52", Limits::default().order_cap)?;
    let a = unitriangular_corner(&g, 5);
    println!("|G| = {}, |A| = {}, A abelian: {}", g.order(), a.order(), a.is_abelian(&g));
    println!("|C_G(A)| = {}", centralizer(&g, &a).order());
    println!("m(A) = {} > m(G) = {}", measure(&g, &a), measure(&g, &Subgroup::whole(&g)));
    Ok(())
}

#[allow(dead_code)]
fn main() -> cdlat::Result<()> {
    run_example()
}
