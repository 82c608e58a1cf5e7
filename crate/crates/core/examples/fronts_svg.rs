//! Builds fronts, reads their invariants back and writes SVG drawings.
//!
//! Usage: `cargo run --example fronts_svg [out-dir]`

use std::path::PathBuf;

use legcalc::cables::CableSpec;
use legcalc::fronts::{self, TangleKind};
use legcalc::Invariants;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));

    let torus = fronts::positive_torus_link_front(3, 2, 3)?;
    println!("(6,9): {} events, components {:?}", torus.len(), torus.invariants());
    std::fs::write(dir.join("torus_6_9.svg"), fronts::render_svg(&torus))?;

    // (2,-7) cable of the figure-eight: 2-copy of tb = -3 plus one Z tangle.
    let spec = CableSpec::new(1, 2, -7)?;
    let f = fronts::standard_cable_front(&fronts::figure_eight_front(), &spec, -3, Some(TangleKind::Z))?;
    println!("fig8 (2,-7): {:?}", f.invariants());
    std::fs::write(dir.join("fig8_cable_2_7.svg"), fronts::render_svg(&f))?;

    let unknot = fronts::stabilize_to(&fronts::unknot_front(), Invariants::new(-2, 1))?;
    let twisted = fronts::twisted_n_copy(&unknot, 2, 1)?;
    println!("twisted 2-copy: {:?}, lk {:?}", twisted.invariants(), twisted.linking_matrix());
    print!("{}", fronts::render_ascii(&fronts::figure_eight_front()));
    Ok(())
}
