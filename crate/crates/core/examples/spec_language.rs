// The group expression language.

use cdlat::subgroup::Limits;
use cdlat::GroupSpec;

pub fn run_example() -> cdlat::Result<()> {
    let limits = Limits::default();
    for text in ["D8", "S3 x D8", "(C2 wr C2) wr C2", "C2 x C2 x C2", "UT(4,2)", "corpus:g32", "Q8 wr C2"] {
        let spec = GroupSpec::parse(text)?;
        println!("{text:<18} -> {spec:<18} order {}", spec.build(&limits)?.order());
    }
    match GroupSpec::parse("D8 wr S3") {
        Err(e) => println!("rejected: {e}"),
        Ok(s) => println!("unexpected: {s}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> cdlat::Result<()> {
    run_example()
}
