//! Which permutations of an ordered torus link come from isotopies.

use legcalc::toruslinks::{self, TorusLinkSpec};
use legcalc::{Invariants, OrderedLink, Permutation, Sign};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = TorusLinkSpec::new(3, 3, 7, Sign::Neg)?;

    // All components at a peak: only the cyclic rotations survive.
    let peak = OrderedLink::unlabeled(&[Invariants::new(-21, 2); 3]);
    for sigma in Permutation::all(3) {
        let ok = toruslinks::permutation_realizable(&spec, &peak, &sigma)?;
        println!("{:?}: {ok}", sigma.as_slice());
    }

    // One stabilization below the peak: every permutation.
    let low = OrderedLink::unlabeled(&[Invariants::new(-22, 3); 3]);
    println!("stabilized: {} of 6", toruslinks::realizable_permutation_count(&spec, &low)?);

    let pos = TorusLinkSpec::new(4, 2, 3, Sign::Pos)?;
    let l = OrderedLink::unlabeled(&[Invariants::new(1, 0); 4]);
    println!("{pos}: {} of 24", toruslinks::realizable_permutation_count(&pos, &l)?);
    Ok(())
}
