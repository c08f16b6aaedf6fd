// Writing a group as a Cayley table file and loading it back.

use cdlat::group::read_cayley_file;
use cdlat::subgroup::Limits;
use cdlat::{cd_lattice, GroupSpec};

pub fn run_example() -> cdlat::Result<()> {
    let limits = Limits::default();
    let q8 = GroupSpec::parse("Q8")?.build(&limits)?;
    let dir = tempfile::tempdir().map_err(|e| cdlat::Error::Io { path: std::env::temp_dir(), source: e })?;
    let path = dir.path().join("q8.txt");
    std::fs::write(&path, q8.to_cayley_string()).map_err(|e| cdlat::Error::Io { path: path.clone(), source: e })?;

    let loaded = read_cayley_file(&path)?;
    println!("loaded {} elements, same table: {}", loaded.order(), loaded.table() == q8.table());

    // the same file through the spec language
    let spec = GroupSpec::parse(&format!("cayley:{}", path.display()))?;
    let cd = cd_lattice(&spec.build(&limits)?, &limits)?;
    println!("CD from file: {} members, M* = {}", cd.len(), cd.max_measure);

    let bad = "2\n0 1\n1 1\n";
    println!("non-group table rejected: {}", cdlat::Group::from_cayley(&cdlat::group::parse_cayley(bad)?).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> cdlat::Result<()> {
    run_example()
}
