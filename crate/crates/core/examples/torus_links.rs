//! Realization and unordered classification of Legendrian torus links.

use legcalc::toruslinks::{self, TorusLinkSpec};
use legcalc::{Invariants, LinkMultiset, Sign};

fn link(c: &[(i64, i64)]) -> LinkMultiset {
    c.iter().map(|&(tb, r)| Invariants::new(tb, r)).collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // (2, -6): n-copies and twisted n-copies of unknots.
    let spec = TorusLinkSpec::new(2, 1, 3, Sign::Neg)?;
    println!("{spec}:");
    for rep in toruslinks::nondestabilizable_reps(&spec) {
        println!("  {}", serde_json::to_string(&rep)?);
    }

    let spec = TorusLinkSpec::new(2, 3, 7, Sign::Neg)?;
    for l in [link(&[(-21, 4), (-21, 2)]), link(&[(-21, 2), (-22, 3)])] {
        let r = toruslinks::is_realizable(&spec, &l)?;
        println!("{spec} {:?}: realizable = {}", l.components(), r.realizable);
    }

    let max = link(&[(-21, 2), (-21, 2)]);
    println!("total tb of {spec} at the peak: {}", toruslinks::total_tb(&spec, &max)?);
    println!("bound on component tb sums: {}", toruslinks::max_component_tb_sum(&spec));
    Ok(())
}
