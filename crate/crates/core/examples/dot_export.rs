// Graphviz rendering of a lattice.
//
// ```bash
// cargo run --example dot_export > d8.dot && dot -Tsvg d8.dot > d8.svg
// ```

use cdlat::subgroup::Limits;
use cdlat::{cd_lattice, GroupSpec, Report};

pub fn run_example() -> cdlat::Result<()> {
    let limits = Limits::default();
    let spec = GroupSpec::parse("D8 x C3")?;
    let report = Report::from_result(&spec.to_string(), &cd_lattice(&spec.build(&limits)?, &limits)?);
    print!("{}", report.to_dot());
    Ok(())
}

#[allow(dead_code)]
fn main() -> cdlat::Result<()> {
    run_example()
}
