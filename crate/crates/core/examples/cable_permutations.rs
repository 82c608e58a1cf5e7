//! Permutations of cable links, including a case left undecided.

use legcalc::cables::{self, CableSpec, KnotTypeData};
use legcalc::{Invariants, OrderedLink};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fig8 = KnotTypeData::figure_eight();
    for (p, q, c) in [(1, -3, (-3, 0)), (2, -7, (-14, 1)), (2, -5, (-11, 0))] {
        let spec = CableSpec::new(3, p, q)?;
        let link = OrderedLink::unlabeled(&[Invariants::new(c.0, c.1); 3]);
        let (yes, no, unknown) = cables::permutation_decision_counts(&fig8, &spec, &link)?;
        println!("fig8 {spec}: yes {yes}, no {no}, unknown {unknown}");
    }

    // The companion is the (2,-3) torus knot and -6 = 2·(-3): unknown.
    let t = KnotTypeData::torus(2, -3)?;
    let spec = CableSpec::new(2, 1, -6)?;
    let link = OrderedLink::unlabeled(&[Invariants::new(-6, 1); 2]);
    println!("torus:2:-3 {spec}: {:?}", cables::permutation_decision_counts(&t, &spec, &link)?);
    Ok(())
}
