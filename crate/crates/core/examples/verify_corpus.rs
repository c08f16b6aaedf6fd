// Run every registered check on its default corpus.

use cdlat::report::VerifyReport;
use cdlat::subgroup::Limits;
use cdlat::{verify_all, Outcome};

pub fn run_example() -> cdlat::Result<()> {
    let report = VerifyReport::new(verify_all(&Limits::default())?);
    for v in report.verdicts.iter().filter(|v| v.outcome != Outcome::Passed) {
        println!("{:?} {} on {}: {}", v.outcome, v.check_id, v.group_spec, v.note.as_deref().unwrap_or(""));
    }
    let s = &report.summary;
    println!("{} passed, {} failed, {} skipped", s.passed, s.failed, s.skipped);
    Ok(())
}

#[allow(dead_code)]
fn main() -> cdlat::Result<()> {
    run_example()
}
