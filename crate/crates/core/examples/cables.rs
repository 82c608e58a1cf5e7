//! Standard cables of the figure-eight in each slope regime.

use legcalc::cables::{self, CableSpec, KnotTypeData};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = KnotTypeData::figure_eight();
    for (n, p, q) in [(2, 2, -5), (3, 1, -3), (2, 2, -7), (2, 1, -4)] {
        let spec = CableSpec::new(n, p, q)?;
        let regime = cables::slope_regime(&k, &spec);
        let (s, base_tb) = cables::standard_twisting(&k, &spec);
        println!("{spec}: {regime:?}, s = {s}, companion tb = {base_tb}");
        for rep in cables::nondestabilizable_reps_cable(&k, &spec)? {
            println!("  {}", serde_json::to_string(&rep)?);
        }
    }
    println!("max tb of the (2,-5) cable: {}", cables::cable_max_tb_component(&k, 2, -5)?);
    Ok(())
}
