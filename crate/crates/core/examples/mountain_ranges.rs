//! Mountain ranges of torus knots and membership queries.

use legcalc::mountain::torus_knot_range;
use legcalc::Sign;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (p, q, sign) in [(2, 3, Sign::Pos), (2, 3, Sign::Neg), (3, 7, Sign::Neg)] {
        let range = torus_knot_range(p, q, sign)?;
        let peaks: Vec<String> = range.peaks().iter().map(|c| c.to_string()).collect();
        println!("({p}, {sign}{q}): tb̄ = {}, sl̄ = {}, peaks {}", range.max_tb(), range.max_sl(), peaks.join(" "));
    }

    let range = torus_knot_range(3, 7, Sign::Neg)?;
    for (tb, r) in [(-22, 3), (-22, 0), (-23, 0)] {
        println!("(3,-7) contains ({tb}, {r}): {}", range.contains(tb, r));
    }
    println!("{} classes with tb >= -23", range.lattice_points_at_or_above(-23).len());
    Ok(())
}
