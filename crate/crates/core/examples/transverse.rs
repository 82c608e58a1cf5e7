//! Transverse torus links and cables: maximal self-linking numbers.

use legcalc::cables::{self, KnotTypeData};
use legcalc::toruslinks::{self, TorusLinkSpec};
use legcalc::Sign;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (p, q, sign) in [(2, 3, Sign::Pos), (3, 7, Sign::Neg)] {
        println!("sl max of ({p}, {sign}{q}): {}", toruslinks::transverse_sl_max_component(p, q, sign)?);
    }
    let spec = TorusLinkSpec::new(2, 2, 3, Sign::Neg)?;
    for sls in [[-5, -7], [-5, -6], [-3, -5]] {
        println!("{spec} with sl {sls:?}: {}", toruslinks::transverse_realizable(&spec, &sls)?);
    }

    let fig8 = KnotTypeData::figure_eight();
    for (p, q) in [(2, -5), (2, -7), (3, 1)] {
        println!("fig8 ({p},{q}) cable: sl max {}", cables::transverse_cable_sl_max(&fig8, p, q)?);
    }
    Ok(())
}
