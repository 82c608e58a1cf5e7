//! Farey graph: mediants, adjacency and shortest clockwise paths.

use legcalc::farey::{self, Slope};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a: Slope = "-5/3".parse()?;
    let b: Slope = "-1".parse()?;

    println!("mediant({a}, {b}) = {}", farey::mediant(a, b)?);
    println!("intersection({a}, {b}) = {}", farey::intersection_number(a, b));

    // Each edge of the path is one basic slice.
    let path = farey::minimal_path(a, b)?;
    let shown: Vec<String> = path.vertices().iter().map(|s| s.to_string()).collect();
    println!("path {a} -> {b}: {} ({} edges)", shown.join(", "), path.edges());

    let p = farey::minimal_path(Slope::INFINITY, "-7/3".parse()?)?;
    println!("inf -> -7/3 takes {} edges", p.edges());
    Ok(())
}
