//! Byte-for-byte drawings. Regenerate with `LEGCALC_BLESS=1 cargo test --test golden`.

use std::path::Path;

use legcalc::fronts::{self, FrontWord};

fn check(name: &str, f: &FrontWord) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let svg = fronts::render_svg(f);
    if std::env::var_os("LEGCALC_BLESS").is_some() {
        std::fs::write(&path, &svg).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(svg, want, "{name} drifted");
}

#[test]
fn torus_link_6_9() {
    check("torus_6_9.svg", &fronts::positive_torus_link_front(3, 2, 3).unwrap());
}

#[test]
fn figure_eight() {
    check("figure_eight.svg", &fronts::figure_eight_front());
}

#[test]
fn figure_eight_cable_3_9() {
    let spec = legcalc::cables::CableSpec::new(3, 1, -3).unwrap();
    let f = fronts::standard_cable_front(&fronts::figure_eight_front(), &spec, -3, None).unwrap();
    check("figure_eight_cable_3_9.svg", &f);
}
