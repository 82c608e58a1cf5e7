//! Cabling a knot type described by data rather than a built-in name.

use legcalc::cables::{self, CableSpec, KnotTypeData};

const DATA: &str = r#"{
  "name": "m(5_2)",
  "peaks": [{"tb": 1, "r": 0}],
  "uniformly_thick": true,
  "legendrian_simple": true
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k: KnotTypeData = serde_json::from_str(DATA)?;
    println!("{}: tb̄ = {}, sl̄ = {}", k.name(), k.tb_bar(), k.sl_bar());
    for (p, q) in [(2, 5), (1, 1), (2, 1), (3, -2)] {
        let spec = CableSpec::new(2, p, q)?;
        println!("{spec}: {:?}", cables::slope_regime(&k, &spec));
    }

    // Peaks that contradict each other are refused.
    let bad = r#"{"name": "x", "peaks": [{"tb": 1, "r": 0}, {"tb": 0, "r": 1}],
                  "uniformly_thick": true, "legendrian_simple": true}"#;
    if let Err(e) = serde_json::from_str::<KnotTypeData>(bad) {
        println!("rejected: {e}");
    }
    Ok(())
}
