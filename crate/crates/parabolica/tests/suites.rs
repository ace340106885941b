//! Every zoo model runs the complete verification suite through the same
//! code path the CLI uses, including the randomized transport and
//! orbit-invariance sampling.

use parabolica::verify::{run_suite, Suite};
use parabolica::zoo::Zoo;

#[test]
fn all_suites_pass_on_the_whole_zoo() {
    let zoo = Zoo::load().unwrap();
    for entry in &zoo.models {
        let report = run_suite(&entry.spec, entry.partner, Suite::All);
        assert!(
            report.passed,
            "{}: {:?}",
            entry.spec.id(),
            report.first_failure().map(|c| (&c.name, &c.details))
        );
    }
}
